#pragma once

// Random instance generators and property checks shared by the unit tests
// and the acceptance binary.

#include <string>
#include <vector>

#include "splitq/splitq.hpp"

namespace splitq::testing {

using Q = SplitQuaternion;

inline Q q(const char* s) { return parse_quaternion(s); }

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : s_(seed) {}

  Scalar scalar(int range = 3) { return s_.next(range); }
  Scalar nonzero(int range = 3) {
    for (;;) {
      Scalar v = scalar(range);
      if (!is_zero(v)) return v;
    }
  }
  Q quaternion(int range = 3) { return {scalar(range), scalar(range), scalar(range), scalar(range)}; }

  /// Rational point (u, v) on the unit circle.
  std::pair<Scalar, Scalar> unit() {
    Scalar t = scalar(4);
    Scalar d = 1 + t * t;
    return {Scalar((1 - t * t) / d), Scalar(2 * t / d)};
  }

  /// a = 1 + a2 j + a3 k.
  Q normalized_a() {
    auto [u, v] = unit();
    return {Scalar(1), Scalar(0), u, v};
  }

  /// A nonzero zero divisor d = t1 + t2 j with |t1| = |t2|.
  Q zero_divisor() {
    Scalar p, r;
    do {
      p = scalar(), r = scalar();
    } while (is_zero(p) && is_zero(r));
    auto [u, v] = unit();
    // t2 = t1 (u + v i); t2 j = Re(t2) j + Im(t2) k.
    return {p, r, Scalar(p * u - r * v), Scalar(p * v + r * u)};
  }

  /// b = b1 i + beta (a2 j + a3 k) + s (-a3 j + a2 k): P_ab = -beta, delta = b1 + s.
  Q b_with(const Q& a, const Scalar& b1, const Scalar& beta, const Scalar& s) {
    return {Scalar(0), b1, Scalar(beta * a[2] - s * a[3]), Scalar(beta * a[3] + s * a[2])};
  }

  std::mt19937_64& engine() { return s_.engine(); }

 private:
  ParamSampler s_;
};

/// Equation with a prescribed root x: c = -(a x^2 + b x).
inline QuadEquation with_root(const Q& a, const Q& b, const Q& x) { return {a, b, -(a * x * x + b * x)}; }

/// P_ab != 0 with a root in SZ (x0 = -I_b / (4 P_ab)).
inline std::pair<QuadEquation, Q> sz_pab_nonzero_instance(Gen& g) {
  Q a = g.normalized_a();
  Q b = g.b_with(a, g.scalar(), g.nonzero(), g.scalar());
  Scalar x0 = -qform(b) / (4 * inner(a, b));
  Q x{x0, g.scalar(), g.scalar(), g.scalar()};
  return {with_root(a, b, x), x};
}

/// P_ab = 0 and I_b = 0 (so 2 x0 a + b is always a zero divisor).
inline std::pair<QuadEquation, Q> sz_pab_zero_instance(Gen& g, bool delta_zero) {
  Q a = g.normalized_a();
  Scalar b1 = g.nonzero();
  // s = -b1 makes delta = a2 b3 - a3 b2 + b1 = s + b1 vanish.
  Scalar s = delta_zero ? Scalar(-b1) : b1;
  Q b = g.b_with(a, b1, Scalar(0), s);
  Q x = g.quaternion();
  return {with_root(a, b, x), x};
}

/// P_ab = 0, I_b != 0, and a root x with T a + b invertible.
inline std::pair<QuadEquation, Q> si_pab_zero_instance(Gen& g) {
  for (;;) {
    Q a = g.normalized_a();
    Scalar b1 = g.scalar(), s = g.scalar();
    if (b1 * b1 == s * s) continue;
    Q b = g.b_with(a, b1, Scalar(0), s);
    Q x = g.quaternion();
    if (classify(Q(a * Scalar(2 * x[0]) + b)) != Kind::invertible) continue;
    return {with_root(a, b, x), x};
  }
}

/// P_ab = 0, I_b + 2 P_ac = 0 (free trace) with a root x: pick x on
/// <a, b x> = I_b / 2, which with c = -(a x^2 + b x) forces the condition.
inline std::pair<QuadEquation, Q> si_free_trace_instance(Gen& g) {
  for (;;) {
    Q a = g.normalized_a();
    Scalar b1 = g.scalar(), s = g.scalar();
    if (b1 * b1 == s * s) continue;
    Q b = g.b_with(a, b1, Scalar(0), s);
    // <a, b x> is linear in x; solve for one free coordinate.
    Q x = g.quaternion();
    Scalar target = qform(b) / 2;
    int k = -1;
    Scalar coef;
    for (int i = 0; i < 4 && k < 0; ++i) {
      Q e{};
      e[i] = 1;
      coef = inner(a, Q(b * e));
      if (!is_zero(coef)) k = i;
    }
    if (k < 0) continue;
    x[k] = 0;
    x[k] = (target - inner(a, Q(b * x))) / coef;
    QuadEquation eq = with_root(a, b, x);
    if (!is_zero(qform(b) + 2 * inner(a, eq.c))) continue;
    return {eq, x};
  }
}

/// Random (d, e, f) with d a nonzero zero divisor.
inline QuadEquation random_unnormalized(Gen& g) { return {g.zero_divisor(), g.quaternion(), g.quaternion()}; }

// ---------------------------------------------------------------- properties

/// det of the 3x3 matrix of the x1, x2, x3 system when P_ab != 0.
inline Scalar pab_nonzero_det(const Q& a, const Q& b) {
  const Scalar &a2 = a[2], &a3 = a[3], &b1 = b[1], &b2 = b[2], &b3 = b[3];
  Scalar x0 = -qform(b) / (4 * inner(a, b));
  Matrix<Scalar> A(3, 3);
  A(0, 0) = 2 * x0, A(0, 1) = b3 + 2 * a3 * x0, A(0, 2) = -b2 - 2 * a2 * x0;
  A(1, 0) = -a2 * b1 - b3, A(1, 1) = a2 * b2 + a3 * b3, A(1, 2) = a2 * b3 - a3 * b2 + b1;
  A(2, 0) = -a3 * b1 + b2, A(2, 1) = a3 * b2 - a2 * b3 - b1, A(2, 2) = a2 * b2 + a3 * b3;
  return determinant(A);
}

/// Residual of the two linear relations every root satisfies when P_ab = 0.
template <class T>
std::array<T, 2> pab_zero_linear_residual(const BranchData& d, const BasicQuaternion<T>& x) {
  auto s = [](const Scalar& v) {
    if constexpr (std::is_same_v<T, double>)
      return v.get_d();
    else
      return v;
  };
  const T a2 = s(d.a2), a3 = s(d.a3), b1 = s(d.b1), b2 = s(d.b2), b3 = s(d.b3), delta = s(d.delta), t1 = s(d.t1),
          t2 = s(d.t2);
  T r0 = (b2 - a3 * b1) * x[0] + (a2 * b1 + b3) * x[1] - delta * x[3] + t1;
  T r1 = (a2 * b1 + b3) * x[0] + (a3 * b1 - b2) * x[1] + delta * x[2] + t2;
  return {r0, r1};
}

/// The five identities under P_ab = I_c = P_bc = 0, I_b + 2 P_ac = 0, I_b != 0.
inline std::vector<std::string> free_trace_identities(const BranchData& d) {
  std::vector<std::string> bad;
  const auto &a2 = d.a2, &a3 = d.a3, &b1 = d.b1, &b2 = d.b2, &b3 = d.b3, &t1 = d.t1, &t2 = d.t2, &delta = d.delta;
  const Scalar p = a2 * b1 + b3, m = b2 - a3 * b1;
  if ((p * p + m * m) / (delta * delta) != 1) bad.push_back("formu1");
  if ((a3 * m - a2 * p) / delta != -1) bad.push_back("formu2");
  if (!is_zero((a3 * p + a2 * m) / delta)) bad.push_back("formu3");
  if (!is_zero((2 * t2 * p + 2 * t1 * m) / (delta * delta) + (b3 * m - b2 * p + 2 * a3 * t1 - 2 * a2 * t2) / delta))
    bad.push_back("formu4");
  if (!is_zero((2 * t2 * (a3 * b1 - b2) + 2 * t1 * p) / (delta * delta) + (p * b3 - b2 * (a3 * b1 - b2)) / delta - b1))
    bad.push_back("formu5");
  return bad;
}

/// Residual soundness over every point and `samples` points per family.
inline std::vector<std::string> residual_failures(const QuadEquation& e, const SolutionSet& s, std::size_t samples,
                                                  std::uint64_t seed, std::size_t* checked = nullptr) {
  std::vector<std::string> bad;
  std::size_t n = 0;
  for (auto& p : s.points) {
    ++n;
    if (!residual(e, p).exact_zero) bad.push_back("point " + to_string(p));
  }
  for (auto& p : s.float_points) {
    ++n;
    if (residual(e, p).max_abs >= 1e-9) bad.push_back("float point " + to_string(p));
  }
  ParamSampler rng(seed);
  for (auto& f : s.families) {
    auto r = sample_family(f, samples, rng);
    for (auto& p : r.exact) {
      ++n;
      if (!residual(e, p).exact_zero) bad.push_back("sample " + to_string(p) + " of " + f.origin);
    }
    for (auto& p : r.approx) {
      ++n;
      if (residual(e, p).max_abs >= 1e-9) bad.push_back("float sample " + to_string(p) + " of " + f.origin);
    }
  }
  if (checked) *checked += n;
  return bad;
}

}  // namespace splitq::testing
