// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "support.hpp"

using namespace splitq;
using namespace splitq::testing;

namespace {

struct Outcome {
  std::vector<std::string> failures;
  std::string detail;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

const corpus::Entry& entry(const char* id) { return *corpus::find(id); }

void absorb(Outcome& o, const corpus::EntryResult& r) {
  for (auto& m : r.messages) o.failures.push_back(r.id + ": " + m);
}

// 1. Exact corpus.
Outcome exact_corpus() {
  Outcome o;
  auto t = Clock::now();
  std::size_t n = 0;
  for (const char* id : {"2.1", "3.1", "3.2", "3.3", "3.4", "3.6", "4.1", "4.2", "4.3"}) {
    corpus::Entry e = entry(id);
    e.float_checks.clear();  // criterion 2
    absorb(o, corpus::run(e));
    ++n;
  }
  // Equation I at y = 1: x^2 = 1, so +-1 and the quadric -x1^2 + x2^2 + x3^2 = 1.
  auto ne = normalize(entry("2.1").eq);
  auto y1 = eq1_roots_for(ne.eq.a, ne.eq.c, parse_quaternion("1"));
  SolutionSet want;
  want.add_point(parse_quaternion("1"));
  want.add_point(parse_quaternion("-1"));
  Family quadric;
  {
    json j{{"params", {"x1", "x2"}},
           {"param_forms", {"x1", "x2"}},
           {"components", {"0", "x1", "x2", "(* 1 sigma (sqrt (+ 1 (^2 x1) (* -1 (^2 x2)))))"}},
           {"constraints", json::array({{{"expr", "(+ 1 (^2 x1) (* -1 (^2 x2)))"}, {"rel", ">="}}})}};
    want.families.push_back(io::family_from_json(j));
  }
  for (auto& m : compare_sets(y1, want).failures) o.failures.push_back("2.1 at y = 1: " + m);
  double s = seconds_since(t);
  o.expect(s < 1.0, "runtime " + std::to_string(s) + " s >= 1 s");
  o.detail = std::to_string(n) + " examples + y = 1 quadric";
  return o;
}

// 2. Float corpus.
Outcome float_corpus() {
  Outcome o;
  auto t = Clock::now();
  std::string got;
  for (const char* id : {"3.5", "3.6"}) {
    const auto& e = entry(id);
    o.expect(!e.float_checks.empty(), std::string(id) + " has no float check");
    auto set = solve(e.eq);
    for (auto& fc : e.float_checks) {
      auto sample = corpus::evaluate_semi_explicit(set, fc.params);
      got += std::string("; ") + id + ": T =";
      for (double v : sample.T) got += " " + io::format_double(v);
      o.expect(sample.T.size() == fc.T.size(), std::string(id) + ": wrong number of T values");
      for (double w : fc.T) {
        bool hit = false;
        for (double v : sample.T) hit = hit || std::abs(v - w) <= fc.tol;
        o.expect(hit, std::string(id) + ": no T near " + io::format_double(w));
      }
      for (auto& w : fc.points) {
        bool hit = false;
        for (auto& p : sample.points) {
          bool close = true;
          for (int k = 0; k < 4; ++k) close = close && std::abs(p[k] - w[k]) <= fc.tol;
          hit = hit || close;
        }
        o.expect(hit, std::string(id) + ": printed point not reproduced");
      }
    }
  }
  double s = seconds_since(t);
  o.expect(s < 1.0, "runtime >= 1 s");
  o.detail = got.substr(2);
  return o;
}

// 3. Companion cross-check.
Outcome companion() {
  Outcome o;
  for (const char* id : {"5.1", "5.2", "5.3", "5.4"}) absorb(o, corpus::run(entry(id)));
  for (const char* id : {"1.1", "3.4", "3.5", "3.6", "4.3"}) {
    auto r = solve_via_companion(entry(id).eq);
    o.expect(r.inapplicable, std::string(id) + ": companion path not flagged inapplicable");
  }
  o.detail = "4 companion examples, 5 inapplicable";
  return o;
}

// 4. Property suites.
Outcome properties() {
  Outcome o;
  Gen g(2024);
  std::size_t n = 0;
  auto check = [&](bool ok, const char* what) {
    ++n;
    if (!ok && o.failures.size() < 20) o.failures.push_back(what);
  };
  for (int i = 0; i < 1000; ++i) {
    auto x = g.quaternion(), y = g.quaternion();
    check(qform(x * y) == qform(x) * qform(y), "qform multiplicativity");
    check(conj(x * y) == conj(y) * conj(x), "conj anti-homomorphism");
    check(x * x == x * Scalar(2 * x[0]) - SplitQuaternion(qform(x)), "x^2 = 2 x0 x - I_x");
    auto z = i % 2 ? g.zero_divisor() : x;
    auto p = pinv(z);
    check(z * p * z == z && p * z * p == p, "pinv identities");
  }
  for (int i = 0; i < 500; ++i) {
    auto a = g.normalized_a();
    auto b = g.b_with(a, g.scalar(), g.nonzero(), g.scalar());
    check(is_zero(pab_nonzero_det(a, b)), "det(A) = 0 when P_ab != 0");
  }
  for (int i = 0; i < 1000; ++i) {
    auto a = g.normalized_a();
    auto d = branch_data({a, g.b_with(a, g.scalar(), g.nonzero(), g.scalar()), g.quaternion()});
    check(d.point && d.point->k1 * d.point->k1 + d.point->k2 * d.point->k2 == d.point->m * d.point->m,
          "k1^2 + k2^2 = m^2");
  }
  // Linear system for every root found with P_ab = 0.
  std::size_t roots = 0;
  for (int i = 0; i < 250; ++i) {
    for (auto& e : {sz_pab_zero_instance(g, i % 2).first, si_pab_zero_instance(g).first, si_free_trace_instance(g).first}) {
      auto rep = solve_normalized(e);
      ParamSampler rng(i);
      auto test = [&](const auto& x) {
        auto r = pab_zero_linear_residual(*rep.data, x);
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, SplitQuaternion>)
          check(is_zero(r[0]) && is_zero(r[1]), "linear system with P_ab = 0");
        else
          check(std::max(std::abs(r[0]), std::abs(r[1])) < 1e-9, "linear system with P_ab = 0 (float)");
        ++roots;
      };
      for (auto& x : rep.set.points) test(x);
      for (auto& x : rep.set.float_points) test(x);
      for (auto& f : rep.set.families) {
        auto s = sample_family(f, 4, rng);
        for (auto& x : s.exact) test(x);
        for (auto& x : s.approx) test(x);
      }
    }
  }
  int constrained = 0;
  for (int tries = 0; constrained < 200 && tries < 100000; ++tries) {
    auto d = branch_data(si_free_trace_instance(g).first);
    if (!is_zero(d.Ic) || !is_zero(d.Pbc) || is_zero(d.Ib)) continue;
    check(free_trace_identities(d).empty(), "free-trace identities");
    ++constrained;
  }
  o.expect(constrained == 200, "only " + std::to_string(constrained) + " constrained free-trace samples");
  o.detail = std::to_string(n) + " checks, " + std::to_string(roots) + " roots with P_ab = 0";
  return o;
}

// 5. Grid oracle.
Outcome grid_oracle() {
  Outcome o;
  auto t = Clock::now();
  std::size_t hits = 0, eqs = 0;
  std::vector<const QuadEquation*> seen;
  for (auto& e : corpus::entries()) {
    bool dup = false;
    for (auto* s : seen) dup = dup || (s->a == e.eq.a && s->b == e.eq.b && s->c == e.eq.c);
    if (dup) continue;
    seen.push_back(&e.eq);
    ++eqs;
    auto set = solve(e.eq);
    auto grid = GridSpec::standard();
    auto roots = brute_force_roots(e.eq, grid);
    hits += roots.size();
    std::size_t members = 0;
    grid.for_each([&](const SplitQuaternion& x) {
      bool member = set.contains(x);
      members += member;
      if (member && !e.eq(x).is_zero()) o.failures.push_back(e.id + ": member " + to_string(x) + " is not a root");
    });
    for (auto& x : roots)
      if (!set.contains(x)) o.failures.push_back(e.id + ": grid root " + to_string(x) + " missing");
    o.expect(members == roots.size(), e.id + ": member count differs from root count");
  }
  double s = seconds_since(t);
  o.expect(s < 10.0, "runtime >= 10 s");
  o.detail = std::to_string(eqs) + " equations x 6561 points, " + std::to_string(hits) + " grid roots";
  return o;
}

// 6. Residual soundness.
Outcome residuals() {
  Outcome o;
  std::size_t checked = 0;
  auto run = [&](const QuadEquation& e, const SolutionSet& s, const std::string& tag, std::uint64_t seed) {
    for (auto& m : residual_failures(e, s, 100, seed, &checked))
      if (o.failures.size() < 20) o.failures.push_back(tag + ": " + m);
  };
  for (auto& e : corpus::entries()) {
    run(e.eq, solve(e.eq), e.id, 1);
    auto ne = normalize(e.eq);
    if (ne.eq.b.is_zero()) run(ne.eq, eq1_roots_for(ne.eq.a, ne.eq.c, parse_quaternion("1")), e.id + " y = 1", 2);
    auto cr = solve_via_companion(e.eq);
    if (!cr.inapplicable) run(e.eq, cr.set, e.id + " companion", 3);
  }
  Gen g(77);
  for (int i = 0; i < 100; ++i) {
    for (auto& [e, x] : {sz_pab_nonzero_instance(g), sz_pab_zero_instance(g, i % 2), si_pab_zero_instance(g),
                         si_free_trace_instance(g)})
      run(e, solve(e), "random", i);
    QuadEquation e = with_root(g.zero_divisor(), g.quaternion(), g.quaternion());
    run(e, solve(e), "random", i);
    auto cr = solve_via_companion(e);
    if (!cr.inapplicable) run(e, cr.set, "random companion", i);
  }
  o.detail = std::to_string(checked) + " points and family samples";
  return o;
}

// 7. Normalization roundtrip.
Outcome roundtrip() {
  Outcome o;
  Gen g(7);
  std::size_t exact = 0, floats = 0;
  for (int i = 0; i < 100; ++i) {
    auto d = g.zero_divisor();
    auto x = g.quaternion();
    QuadEquation e = with_root(d, g.quaternion(), x);
    auto n = normalize(e);
    o.expect(is_normalized(n.eq), "normalized form expected");
    o.expect(n.eq(x + SplitQuaternion(n.shift)).is_zero(), "shifted root does not solve the normalized equation");
    auto rep = solve_detailed(e);
    o.expect(rep.set.contains(x), "known root " + to_string(x) + " missing");
    for (auto& p : rep.set.points) {
      ++exact;
      o.expect(e(p).is_zero(), "nonzero residual at " + to_string(p));
    }
    for (auto& p : rep.set.float_points) {
      ++floats;
      o.expect(residual(e, p).max_abs < 1e-9, "float residual at " + to_string(p));
    }
    for (auto& m : residual_failures(e, rep.set, 20, i)) o.failures.push_back(m);
  }
  o.detail = "100 triples, " + std::to_string(exact) + " exact points, " + std::to_string(floats) + " float points";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> all{
      {1, "golden corpus, exact", exact_corpus},      {2, "golden corpus, float", float_corpus},
      {3, "companion cross-check", companion},        {4, "property suites", properties},
      {5, "grid oracle equivalence", grid_oracle},    {6, "residual soundness", residuals},
      {7, "normalization roundtrip", roundtrip},
  };
  int failed = 0;
  for (auto& c : all) {
    Outcome o;
    auto t = Clock::now();
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    bool ok = o.failures.empty();
    failed += !ok;
    std::printf("%s criterion %d: %s (%s; %.3f s)\n", ok ? "PASS" : "FAIL", c.id, c.title, o.detail.c_str(),
                seconds_since(t));
    for (auto& f : o.failures) std::printf("    %s\n", f.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(all.size()) - failed, all.size());
  return failed ? 1 : 0;
}
