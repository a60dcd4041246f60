#pragma once

/// Worked examples with their reference solution sets, and a runner that
/// checks the solver and the companion path against them.

#include <chrono>
#include <map>
#include <string>
#include <vector>

#include "splitq/companion.hpp"
#include "splitq/io.hpp"
#include "splitq/solve.hpp"
#include "splitq/verify.hpp"

namespace splitq::corpus {

enum class Scope { full, sz, si };

struct FloatCheck {
  std::vector<Scalar> params;            // (x2, x3) of the semi-explicit family
  std::vector<double> T;                 // expected real roots
  std::vector<std::array<double, 4>> points;
  double tol = 5e-4;
};

struct CompanionExpectation {
  RealPoly poly;
  struct Divisor {
    Scalar T, N;
    SplitQuaternion Tab, Nac;  // T a + b and N a - c
  };
  std::vector<Divisor> divisors;
};

struct Entry {
  std::string id;
  std::string title;
  QuadEquation eq;
  Scope scope = Scope::full;
  SolutionSet expected{};
  std::optional<SolutionSet> expected_full{};
  std::map<std::string, Scalar> intermediates{};
  std::vector<FloatCheck> float_checks{};
  bool companion_inapplicable = false;
  std::optional<CompanionExpectation> companion{};
};

namespace detail {

inline SplitQuaternion q(const char* s) { return parse_quaternion(s); }
inline Scalar r(const char* s) { return parse_scalar(s); }

struct FamilySpec {
  std::vector<std::string> params;
  std::array<std::string, 4> comps;
  std::vector<std::pair<std::string, std::string>> constraints{};
  std::string root_poly{};  // nonempty: T is a real root of this, and x0 = T
};

/// Parameters are coordinates with the same name.
inline Family family(const FamilySpec& s) {
  json j;
  j["params"] = s.params;
  j["param_forms"] = s.params;
  j["components"] = s.comps;
  json cons = json::array();
  for (auto& [e, rel] : s.constraints) cons.push_back({{"expr", e}, {"rel", rel}});
  j["constraints"] = cons;
  if (!s.root_poly.empty()) j["root_of"] = {{"var", "T"}, {"poly", s.root_poly}, {"form", "x0"}};
  j["origin"] = "expected";
  return io::family_from_json(j);
}

inline SolutionSet set_of(std::vector<SplitQuaternion> pts, std::vector<Family> fams) {
  SolutionSet s;
  s.points = std::move(pts);
  s.families = std::move(fams);
  return s;
}

inline std::vector<Family> ex36_families() {
  return {
      family({{"x3"}, {"0", "(+ 1 x3)", "-1", "x3"}}),
      family({{"x3"}, {"0", "(* -1 x3)", "-1", "x3"}}),
      family({{"x2", "x3"},
              {"T", "(+ (/ (* -1/2 x2) T) x3 (* 1/2 (/ (- T 1) T)))", "x2", "x3"},
              {{"(+ x2 1)", "!="}, {"T", "!="}},
              "(+ (^2 (^2 T)) (* 2 x2 T (^2 T)) (* (+ (^2 x2) x3 -3/4) (^2 T)) (* (+ (* x2 x3) x3) T) "
              "(* -1/4 (^2 (+ x2 1))))"}),
      family({{"x0"},
              {"x0", "(+ (* -1 (^2 x0)) (* 2 x0) 1/4)", "-1", "(+ (* -1 (^2 x0)) (* 2 x0) -1/4)"},
              {{"x0", "!="}}}),
  };
}

inline FloatCheck ex36_float() {
  return {{Scalar(1), Scalar(1)}, {-2.0, 0.3620}, {{-2, 2, 1, 1}, {0.3620, -1.2621, 1, 1}}};
}

}  // namespace detail

inline const std::vector<Entry>& entries() {
  using namespace detail;
  static const std::vector<Entry> all = [] {
    std::vector<Entry> v;
    const QuadEquation e11{q("1+j"), q("-i+k"), q("-1+i-j-k")};
    const QuadEquation e31{q("1+j"), q("i+2j+k"), q("-1/4+5/2i+3/4j+5/2k")};
    const QuadEquation e32{q("1+j"), q("i+j"), q("-1+i")};
    const QuadEquation e33{q("1+j"), q("i+k"), q("1-i")};
    const QuadEquation e42{q("1+j"), q("2i+k"), q("1+i+2j+k")};
    const SolutionSet s32 = set_of({}, {family({{"x1"}, {"0", "x1", "x1", "1"}})});
    const SolutionSet s32_full = set_of({q("-1")}, {family({{"x1"}, {"0", "x1", "x1", "1"}})});

    {
      Entry e{"1.1", "companion polynomial identically zero", e11};
      e.expected = set_of({}, ex36_families());
      e.companion_inapplicable = true;
      v.push_back(e);
    }
    {
      Entry e{"2.1", "Equation I, a = 1+j, c = -1-j", {q("1+j"), q("0"), q("-1-j")}};
      e.expected = set_of({}, {
          family({{"x0", "x1"}, {"x0", "x1", "(- 1 x0)", "x1"}, {{"x0", "!="}}}),
          family({{"x0", "x1"}, {"x0", "x1", "(- -1 x0)", "x1"}, {{"x0", "!="}}}),
          family({{"x1", "x2"},
                  {"0", "x1", "x2", "(* 1 sigma (sqrt (+ 1 (^2 x1) (* -1 (^2 x2)))))"},
                  {{"(+ 1 (^2 x1) (* -1 (^2 x2)))", ">="}}}),
      });
      v.push_back(e);
    }
    {
      Entry e{"3.1", "SZ, P_ab != 0, one point", e31};
      e.expected = set_of({q("-1/2+i+k")}, {});
      e.intermediates = {{"x0", r("-1/2")}, {"k1", r("8")},   {"k2", r("0")}, {"Delta1", r("-1")},
                         {"Delta2", r("3/2")}, {"m", r("8")}, {"R", r("-2")}, {"L", r("2")},
                         {"F", r("0")}};
      v.push_back(e);
    }
    {
      Entry e{"3.2", "SZ, P_ab != 0, a line", e32};
      e.scope = Scope::sz;
      e.expected = s32;
      e.expected_full = s32_full;
      e.intermediates = {{"x0", r("0")},     {"k1", r("2")}, {"k2", r("0")}, {"Delta1", r("0")}, {"Delta2", r("1")},
                         {"m", r("2")},      {"R", r("0")},  {"L", r("0")},  {"F", r("0")}};
      v.push_back(e);
    }
    {
      Entry e{"3.3", "SZ, delta = 2 b1, one point", e33};
      e.expected = set_of({q("1/2+i+1/2k")}, {});
      e.intermediates = {{"t1", r("-1")}, {"t2", r("-1")}};
      v.push_back(e);
    }
    {
      Entry e{"3.4", "SZ, delta = 2 b1, a plane", {q("1+j"), q("i+k"), q("-1+i-j+k")}};
      e.expected = set_of({}, {family({{"x0", "x1"}, {"x0", "x1", "(- -1 x0)", "x1"}})});
      e.intermediates = {{"t1", r("0")}, {"t2", r("2")}};
      e.companion_inapplicable = true;
      v.push_back(e);
    }
    {
      Entry e{"3.5", "SZ, delta = 0, a = 1+k", {q("1+k"), q("i+j"), q("1+2i+2j+k")}};
      e.expected = set_of(
          {}, {
                  family({{"x1"},
                          {"0", "x1", "(- -1/2 (* sigma (sqrt (+ (^2 x1) x1 -19/4))))", "2"},
                          {{"(+ (^2 x1) x1 -19/4)", ">="}}}),
                  family({{"x2", "x3"},
                          {"T", "(+ (* -1 x2) (/ (* 1/2 x3) T) (* -1/2 (/ (+ 2 T) T)))", "x2", "x3"},
                          {{"(- x3 2)", "!="}, {"T", "!="}},
                          "(+ (^2 (^2 T)) (* 2 x3 T (^2 T)) (* (+ (^2 x3) x2 5/4) (^2 T)) (* (- (* x2 x3) (* 2 x2)) T) "
                          "(* -1/4 (^2 (- x3 2))))"}),
                  family({{"x0"},
                          {"x0", "(+ (^2 x0) (* 4 x0) 19/4)", "(+ (* -1 (^2 x0)) (* -4 x0) -21/4)", "2"},
                          {{"x0", "!="}}}),
              });
      e.float_checks = {{{Scalar(1), Scalar(1)},
                         {0.3914, -0.1675},
                         {{0.3914, -2.7773, 1, 1}, {-0.1675, 1.4857, 1, 1}}}};
      e.companion_inapplicable = true;
      v.push_back(e);
    }
    {
      Entry e{"3.6", "SZ, delta = 0, a = 1+j", e11};
      e.expected = set_of({}, ex36_families());
      e.float_checks = {ex36_float()};
      e.companion_inapplicable = true;
      v.push_back(e);
    }
    {
      Entry e{"4.1", "SI, P_ab != 0", e32};
      e.scope = Scope::si;
      e.expected = set_of({q("-1")}, {});
      e.expected_full = s32_full;
      e.intermediates = {{"Pab", r("-1")}};
      v.push_back(e);
    }
    {
      Entry e{"4.2", "SI, P_ab = 0, closed form", e42};
      e.expected = set_of({q("-1+17/3i+1/3j+6k")}, {});
      e.intermediates = {{"Pab", r("0")}, {"Ib+2Pac", r("1")}, {"T", r("-2")}, {"N", r("-3")}};
      v.push_back(e);
    }
    {
      Entry e{"4.3", "SI, P_ab = 0, free trace", {q("1+j"), q("2i+k"), q("-3/4+3/4j")}};
      e.expected = set_of({}, {family({{"x0", "x1"}, {"x0", "x1", "(* -1 x0)", "(+ x1 1/2)"}})});
      e.intermediates = {{"delta", r("3")}, {"t1", r("3/2")}, {"t2", r("0")}, {"F_si", r("0")},
                         {"Ic", r("0")},    {"Pbc", r("0")},  {"Ib+2Pac", r("0")}};
      e.companion_inapplicable = true;
      v.push_back(e);
    }
    {
      Entry e{"5.1", "companion path for 3.1", e31};
      e.expected = set_of({q("-1/2+i+k")}, {});
      e.companion = CompanionExpectation{
          RealPoly{r("-1/2"), r("-3"), r("-6"), r("-4")},
          {{r("-1"), r("1/4"), q("-1+i+j+k"), q("1/2-5/2i-1/2j-5/2k")}}};
      v.push_back(e);
    }
    {
      Entry e{"5.2", "companion path for 3.2", e32};
      e.expected = s32_full;
      e.companion = CompanionExpectation{RealPoly{r("2"), r("2"), r("-2"), r("-2")},
                                         {{r("-2"), r("1"), q("-2+i-j"), q("2-i+j")},
                                          {r("0"), r("-1"), q("i+j"), q("-i-j")}}};
      v.push_back(e);
    }
    {
      Entry e{"5.3", "companion path for 3.3", e33};
      e.expected = set_of({q("1/2+i+1/2k")}, {});
      e.companion = CompanionExpectation{RealPoly{r("2"), r("-2"), r("2")}, {{r("1"), r("1"), q("1+i+j+k"), q("i+j")}}};
      v.push_back(e);
    }
    {
      Entry e{"5.4", "companion path for 4.2", e42};
      e.expected = set_of({q("-1+17/3i+1/3j+6k")}, {});
      e.companion = CompanionExpectation{RealPoly{r("-3"), r("2"), r("1")},
                                         {{r("-2"), r("-3"), q("-2+2i-2j+k"), q("-4-i-5j-k")}}};
      v.push_back(e);
    }
    return v;
  }();
  return all;
}

inline const Entry* find(const std::string& id) {
  for (auto& e : entries())
    if (e.id == id) return &e;
  return nullptr;
}

/// Named scalar invariants of a normalized equation.
inline std::optional<Scalar> lookup(const BranchData& d, const std::string& name) {
  std::map<std::string, Scalar> m{{"a2", d.a2},   {"a3", d.a3},   {"b1", d.b1},   {"b2", d.b2},       {"b3", d.b3},
                                  {"Pab", d.Pab}, {"Pac", d.Pac}, {"Pbc", d.Pbc}, {"Ib", d.Ib},       {"Ic", d.Ic},
                                  {"delta", d.delta}, {"t1", d.t1}, {"t2", d.t2}, {"Ib+2Pac", d.Ib + 2 * d.Pac}};
  if (!is_zero(d.delta))
    m["F_si"] = d.t1 * d.t1 + d.t2 * d.t2 + (d.b3 * d.t1 - d.b2 * d.t2) * d.delta + d.c0 * d.delta * d.delta;
  if (is_zero(d.Pab) && !is_zero(d.Ib + 2 * d.Pac)) {
    m["T"] = -2 * d.Pbc / (d.Ib + 2 * d.Pac);
    m["N"] = d.Ic / (d.Ib + 2 * d.Pac);
  }
  if (d.point) {
    const auto& p = *d.point;
    for (auto& [k, v] : std::map<std::string, Scalar>{{"x0", p.x0},         {"k1", p.k1},         {"k2", p.k2},
                                                      {"m", p.m},           {"Delta1", p.Delta1}, {"Delta2", p.Delta2},
                                                      {"R", p.R},           {"L", p.L},           {"F", p.F}})
      m[k] = v;
  }
  auto it = m.find(name);
  if (it == m.end()) return std::nullopt;
  return it->second;
}

/// Real roots T of the semi-explicit family at `params`, with the points.
struct SemiExplicitSample {
  std::vector<double> T;
  std::vector<SplitQuaternionF> points;
};

inline SemiExplicitSample evaluate_semi_explicit(const SolutionSet& s, const std::vector<Scalar>& params) {
  SemiExplicitSample out;
  for (auto& f : s.families) {
    if (f.shape() != Shape::semi_explicit) continue;
    auto r = f.evaluate(params);
    for (auto& p : r.exact) out.points.push_back(to_float(p));
    for (auto& p : r.approx) out.points.push_back(p);
  }
  std::sort(out.points.begin(), out.points.end(), [](auto& a, auto& b) { return a[0] < b[0]; });
  for (auto& p : out.points) out.T.push_back(p[0]);  // x0 = T
  return out;
}

struct EntryResult {
  std::string id;
  std::string title;
  bool passed = true;
  std::vector<std::string> messages{};
  double seconds = 0;
};

namespace detail {

inline std::string fmt(double v) { return io::format_double(v); }

inline bool matches_within(const std::vector<double>& got, const std::vector<double>& want, double tol) {
  if (got.size() != want.size()) return false;
  std::vector<bool> used(got.size(), false);
  for (double w : want) {
    bool hit = false;
    for (std::size_t i = 0; i < got.size() && !hit; ++i)
      if (!used[i] && std::abs(got[i] - w) <= tol) used[i] = hit = true;
    if (!hit) return false;
  }
  return true;
}

}  // namespace detail

inline EntryResult run(const Entry& entry) {
  auto start = std::chrono::steady_clock::now();
  EntryResult res{entry.id, entry.title};
  auto fail = [&](const std::string& m) {
    res.passed = false;
    res.messages.push_back(m);
  };
  try {
    SolveReport rep = solve_detailed(entry.eq);
    const SolutionSet& part = entry.scope == Scope::sz ? rep.sz_set : entry.scope == Scope::si ? rep.si_set : rep.set;
    for (auto& m : compare_sets(part, entry.expected).failures) fail("solution set: " + m);
    if (entry.expected_full)
      for (auto& m : compare_sets(rep.set, *entry.expected_full).failures) fail("full solution set: " + m);

    for (auto& [name, want] : entry.intermediates) {
      auto got = rep.data ? lookup(*rep.data, name) : std::nullopt;
      if (!got)
        fail("intermediate " + name + " unavailable");
      else if (*got != want)
        fail("intermediate " + name + " = " + to_string(*got) + ", expected " + to_string(want));
    }

    for (auto& fc : entry.float_checks) {
      auto got = evaluate_semi_explicit(rep.set, fc.params);
      if (!detail::matches_within(got.T, fc.T, fc.tol)) {
        std::string s;
        for (double t : got.T) s += " " + detail::fmt(t);
        fail("semi-explicit roots T =" + s + " do not match within " + detail::fmt(fc.tol));
      }
      for (auto& want : fc.points) {
        bool hit = false;
        for (auto& p : got.points) {
          bool close = true;
          for (int k = 0; k < 4; ++k) close = close && std::abs(p[k] - want[k]) <= fc.tol;
          hit = hit || close;
        }
        if (!hit)
          fail("no semi-explicit point near " + to_string(SplitQuaternionF{want[0], want[1], want[2], want[3]}));
      }
    }

    if (entry.companion_inapplicable || entry.companion) {
      CompanionResult cr = solve_via_companion(entry.eq);
      if (entry.companion_inapplicable && !cr.inapplicable) fail("companion polynomial is not identically zero");
      if (entry.companion) {
        const auto& ce = *entry.companion;
        if (cr.inapplicable) fail("companion polynomial unexpectedly zero");
        if (!(cr.poly == ce.poly)) fail("companion polynomial " + cr.poly.to_string() + " != " + ce.poly.to_string());
        if (cr.steps.size() != ce.divisors.size()) {
          fail("companion divisor count " + std::to_string(cr.steps.size()) + ", expected " +
               std::to_string(ce.divisors.size()));
        } else {
          for (std::size_t i = 0; i < ce.divisors.size(); ++i) {
            const auto& got = cr.steps[i].divisor;
            const auto& want = ce.divisors[i];
            if (!got.exact || got.T != want.T || got.N != want.N) {
              fail("divisor " + std::to_string(i + 1) + " differs");
              continue;
            }
            if (entry.eq.a * got.T + entry.eq.b != want.Tab) fail("T a + b differs for divisor " + std::to_string(i + 1));
            if (entry.eq.a * got.N - entry.eq.c != want.Nac) fail("N a - c differs for divisor " + std::to_string(i + 1));
          }
        }
        for (auto& m : compare_sets(cr.set, rep.set).failures) fail("companion vs solver: " + m);
        for (auto& m : compare_sets(cr.set, entry.expected).failures) fail("companion vs expected: " + m);
      }
    }
  } catch (const error& e) {
    fail(std::string("error: ") + e.what());
  }
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

inline std::vector<EntryResult> run_all(const std::string& only = {}) {
  std::vector<EntryResult> out;
  for (auto& e : entries())
    if (only.empty() || e.id == only) out.push_back(run(e));
  return out;
}

inline json to_json(const EntryResult& r) {
  return {{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"messages", r.messages}, {"seconds", r.seconds}};
}

}  // namespace splitq::corpus
