#pragma once

/// Independent checks: residuals, exhaustive grid search, family sampling and
/// set comparison by mutual membership.

#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "splitq/normalize.hpp"
#include "splitq/solution_set.hpp"

namespace splitq {

struct ResidualReport {
  bool exact_zero = false;
  double max_abs = 0;
};

inline ResidualReport residual(const QuadEquation& e, const SplitQuaternion& x) {
  auto r = e(x);
  ResidualReport rep;
  rep.exact_zero = r.is_zero();
  for (int k = 0; k < 4; ++k) rep.max_abs = std::max(rep.max_abs, std::abs(r[k].get_d()));
  return rep;
}

inline ResidualReport residual(const QuadEquation& e, const SplitQuaternionF& x) {
  auto r = to_float(e)(x);
  ResidualReport rep;
  for (int k = 0; k < 4; ++k) rep.max_abs = std::max(rep.max_abs, std::abs(r[k]));
  return rep;
}

/// lo, lo + step, ..., up to hi (inclusive) in each coordinate.
struct GridSpec {
  std::array<Scalar, 4> lo, hi, step;

  static GridSpec uniform(const Scalar& lo, const Scalar& hi, const Scalar& step) {
    GridSpec g;
    g.lo.fill(lo);
    g.hi.fill(hi);
    g.step.fill(step);
    g.validate();
    return g;
  }
  static GridSpec standard() { return uniform(-2, 2, Scalar(1, 2)); }

  /// "lo:hi:step", e.g. "-2:2:1/2".
  static GridSpec parse(const std::string& text) {
    auto a = text.find(':');
    auto b = a == std::string::npos ? a : text.find(':', a + 1);
    if (b == std::string::npos) throw error(errc::parse, "grid must be lo:hi:step, got \"" + text + "\"");
    return uniform(parse_scalar(text.substr(0, a)), parse_scalar(text.substr(a + 1, b - a - 1)),
                   parse_scalar(text.substr(b + 1)));
  }

  void validate() const {
    for (int k = 0; k < 4; ++k)
    {
      if (sgn(step[k]) <= 0) throw error(errc::parse, "grid step must be positive");
      if (hi[k] < lo[k]) throw error(errc::parse, "grid upper bound below lower bound");
    }
    if (count() > 10'000'000) throw error(errc::parse, "grid exceeds 10^7 points");
  }

  std::size_t axis_count(int k) const {
    if (hi[k] < lo[k]) return 0;
    Scalar n = (hi[k] - lo[k]) / step[k];
    mpz_class f = n.get_num() / n.get_den();
    return static_cast<std::size_t>(f.get_ui()) + 1;
  }
  std::size_t count() const {
    std::size_t n = 1;
    for (int k = 0; k < 4; ++k) n *= axis_count(k);
    return n;
  }

  template <class F>
  void for_each(F&& f) const {
    std::array<std::vector<Scalar>, 4> axes;
    for (int k = 0; k < 4; ++k)
      for (std::size_t i = 0; i < axis_count(k); ++i) axes[k].push_back(lo[k] + step[k] * Scalar(static_cast<long>(i)));
    for (auto& v0 : axes[0])
      for (auto& v1 : axes[1])
        for (auto& v2 : axes[2])
          for (auto& v3 : axes[3]) f(SplitQuaternion{v0, v1, v2, v3});
  }
};

inline std::vector<SplitQuaternion> brute_force_roots(const QuadEquation& e, const GridSpec& g) {
  std::vector<SplitQuaternion> out;
  g.for_each([&](const SplitQuaternion& x) {
    if (e(x).is_zero()) out.push_back(x);
  });
  return out;
}

/// Random small rationals p/q, q in 1..4.
class ParamSampler {
 public:
  explicit ParamSampler(std::uint64_t seed = 12345) : rng_(seed) {}
  Scalar next(int range = 3) {
    std::uniform_int_distribution<int> q(1, 4);
    int den = q(rng_);
    std::uniform_int_distribution<int> p(-range * den, range * den);
    Scalar v(p(rng_), den);
    v.canonicalize();
    return v;
  }
  std::vector<Scalar> vector(std::size_t n, int range = 3) {
    std::vector<Scalar> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(next(range));
    return v;
  }
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Up to `count` realized points from random in-domain parameters.
inline Realization sample_family(const Family& f, std::size_t count, ParamSampler& rng) {
  Realization out;
  std::size_t tries = 0;
  while (out.exact.size() + out.approx.size() < count && tries < 20 * count + 50) {
    ++tries;
    auto r = f.evaluate(rng.vector(f.dimension()));
    out.exact.insert(out.exact.end(), r.exact.begin(), r.exact.end());
    out.approx.insert(out.approx.end(), r.approx.begin(), r.approx.end());
  }
  return out;
}

struct CheckReport {
  std::size_t points_checked = 0;
  std::size_t samples_checked = 0;
  std::size_t grid_points = 0;
  std::size_t grid_hits = 0;
  std::size_t grid_members = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

/// Soundness (points and family samples have zero residual) and grid
/// equivalence (a grid point is a root iff the set contains it).
inline CheckReport check_solution_set(const QuadEquation& e, const SolutionSet& s, const GridSpec& g,
                                      std::size_t samples_per_family = 100, std::uint64_t seed = 7) {
  CheckReport rep;
  auto fail = [&](const std::string& what, const auto& x) {
    std::ostringstream os;
    os << what << ": " << to_string(x);
    rep.failures.push_back(os.str());
  };
  for (auto& p : s.points) {
    ++rep.points_checked;
    if (!residual(e, p).exact_zero) fail("nonzero residual at point", p);
  }
  for (auto& p : s.float_points) {
    ++rep.points_checked;
    if (residual(e, p).max_abs >= 1e-9) fail("residual >= 1e-9 at float point", p);
  }
  ParamSampler rng(seed);
  for (auto& f : s.families) {
    auto r = sample_family(f, samples_per_family, rng);
    for (auto& p : r.exact) {
      ++rep.samples_checked;
      if (!residual(e, p).exact_zero) fail("nonzero residual at family sample", p);
    }
    for (auto& p : r.approx) {
      ++rep.samples_checked;
      if (residual(e, p).max_abs >= 1e-9) fail("residual >= 1e-9 at family sample", p);
    }
  }
  g.for_each([&](const SplitQuaternion& x) {
    ++rep.grid_points;
    bool root = e(x).is_zero();
    bool member = s.contains(x);
    rep.grid_hits += root;
    rep.grid_members += member;
    if (root && !member) fail("grid root missing from solution set", x);
    if (member && !root) fail("solution set member is not a root", x);
  });
  return rep;
}

struct CompareReport {
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Set equality up to reparametrization: exact points must match, float
/// points must match within `tol`, and `samples` points of every family of
/// either set must lie in the other; family dimensions must agree.
inline CompareReport compare_sets(const SolutionSet& lhs, const SolutionSet& rhs, std::size_t samples = 50,
                                  double tol = 1e-9, std::uint64_t seed = 11) {
  CompareReport rep;
  ParamSampler rng(seed);
  auto one_way = [&](const SolutionSet& a, const SolutionSet& b, const char* dir) {
    for (auto& p : a.points)
      if (!b.contains(p)) rep.failures.push_back(std::string(dir) + " point not contained: " + to_string(p));
    for (auto& p : a.float_points)
      if (!b.contains(p, tol)) rep.failures.push_back(std::string(dir) + " float point not contained: " + to_string(p));
    for (auto& f : a.families) {
      auto r = sample_family(f, samples, rng);
      if (r.empty()) rep.failures.push_back(std::string(dir) + " family yielded no samples");
      for (auto& p : r.exact)
        if (!b.contains(p)) {
          rep.failures.push_back(std::string(dir) + " family sample not contained: " + to_string(p));
          break;
        }
      for (auto& p : r.approx)
        if (!b.contains(p, 1e-7)) {
          rep.failures.push_back(std::string(dir) + " family sample not contained: " + to_string(p));
          break;
        }
    }
  };
  one_way(lhs, rhs, "lhs->rhs");
  one_way(rhs, lhs, "rhs->lhs");
  std::set<std::size_t> dl, dr;
  for (auto& f : lhs.families) dl.insert(f.dimension());
  for (auto& f : rhs.families) dr.insert(f.dimension());
  if (dl != dr) rep.failures.push_back("family dimensions differ");
  return rep;
}

}  // namespace splitq
