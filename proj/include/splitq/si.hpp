#pragma once

/// Roots x of a normalized equation with b != 0 for which 2 x0 a + b is
/// invertible. Such roots are x = (T a + b)^{-1} (a N - c) with T = 2 x0 and
/// N = I_x solving
///   N (2 T P_ab + I_b + 2 P_ac) - I_c = 0,
///   2 P_ab T^2 + (2 P_ac + I_b) T - 2 N P_ab + 2 P_bc = 0.

#include "splitq/branch_data.hpp"
#include "splitq/sz.hpp"
#include "splitq/solution_set.hpp"

namespace splitq {

namespace detail {

/// Candidate for one exact (T, N); kept only if it is a genuine SI root.
inline void si_candidate(const QuadEquation& e, const Scalar& T, const Scalar& N, SolutionSet& out) {
  SplitQuaternion m = e.a * T + e.b;
  if (classify(m) != Kind::invertible) return;
  SplitQuaternion x = inverse(m) * (e.a * N - e.c);
  if (!e(x).is_zero() || x[0] * 2 != T || qform(x) != N) return;
  out.add_point(x);
}

/// Irrational T: (T, N) are high-precision rational approximations, so the
/// candidate is computed exactly and rounded once.
inline void si_candidate_approx(const QuadEquation& e, const Scalar& T, const Scalar& N, SolutionSet& out) {
  SplitQuaternion m = e.a * T + e.b;
  if (classify(to_float(m)) != Kind::invertible) return;
  auto ef = to_float(e);
  SplitQuaternionF x = to_float(SplitQuaternion(inverse(m) * (e.a * N - e.c)));
  auto r = ef(x);
  double scale = 1, err = 0;
  for (int k = 0; k < 4; ++k) {
    scale = std::max(scale, std::abs(x[k]));
    err = std::max(err, std::abs(r[k]));
  }
  if (err > 1e-9 * scale * scale || std::abs(2 * x[0] - T.get_d()) > 1e-9 * scale ||
      std::abs(qform(x) - N.get_d()) > 1e-9 * scale * scale)
    return;
  out.add_point(x);
}

}  // namespace detail

/// The cubic whose real roots are the admissible T when P_ab != 0.
inline RealPoly si_cubic(const BranchData& d) {
  const Scalar s = 2 * d.Pac + d.Ib;
  return RealPoly{Scalar(2 * d.Pbc * s - 2 * d.Pab * d.Ic), Scalar(4 * d.Pab * d.Pbc + s * s), Scalar(4 * d.Pab * s),
                  Scalar(4 * d.Pab * d.Pab)};
}

inline SolutionSet si_solve_pab_nonzero(const QuadEquation& e, const BranchData& d) {
  detail::require_branch(!e.b.is_zero() && !is_zero(d.Pab), "needs b != 0 and P_ab != 0");
  SolutionSet out;
  const Scalar s = 2 * d.Pac + d.Ib;
  const RealPoly cubic = si_cubic(d);
  for (auto& root : real_roots(cubic).real) {
    if (root.exact) {
      const Scalar& T = root.value;
      Scalar N = (2 * d.Pab * T * T + s * T + 2 * d.Pbc) / (2 * d.Pab);
      detail::si_candidate(e, T, N, out);
    } else {
      Scalar T = detail::refine_root(cubic, root.approx);
      Scalar N = (2 * d.Pab * T * T + s * T + 2 * d.Pbc) / (2 * d.Pab);
      detail::si_candidate_approx(e, T, N, out);
    }
  }
  return out;
}

/// P_ab = 0 (and I_b != 0, otherwise T a + b is never invertible).
inline SolutionSet si_solve_pab_zero(const QuadEquation& e, const BranchData& d) {
  detail::require_branch(!e.b.is_zero() && is_zero(d.Pab), "needs b != 0 and P_ab = 0");
  SolutionSet out;
  if (is_zero(d.Ib)) return out;
  const Scalar den = d.Ib + 2 * d.Pac;
  if (!is_zero(den)) {
    detail::si_candidate(e, Scalar(-2 * d.Pbc / den), Scalar(d.Ic / den), out);
    return out;
  }
  // I_b + 2 P_ac = 0: any T works provided I_c = P_bc = 0; x2, x3 affine in x0, x1.
  if (!is_zero(d.Ic) || !is_zero(d.Pbc)) return out;
  const auto &a2 = d.a2, &a3 = d.a3, &b1 = d.b1, &b2 = d.b2, &b3 = d.b3, &t1 = d.t1, &t2 = d.t2, &delta = d.delta;
  const Scalar F = t1 * t1 + t2 * t2 + (b3 * t1 - b2 * t2) * delta + d.c0 * delta * delta;
  if (!is_zero(F)) return out;
  Family f;
  f.params = {"x0", "x1"};
  f.param_forms = {AffineForm::coordinate(0), AffineForm::coordinate(1)};
  Poly x0 = Poly::var(0, 2), x1 = Poly::var(1, 2);
  f.components = {x0, x1,
                  Poly::constant(-t2 / delta, 2) + x0 * Scalar(-(a2 * b1 + b3) / delta) +
                      x1 * Scalar(-(a3 * b1 - b2) / delta),
                  Poly::constant(t1 / delta, 2) + x0 * Scalar((b2 - a3 * b1) / delta) + x1 * Scalar((a2 * b1 + b3) / delta)};
  f.radicand = Poly(2);
  f.origin = "si.pab_zero.free_trace";
  out.add_family(f);
  return out;
}

inline SolutionSet si_solve(const QuadEquation& e, const BranchData& d) {
  return is_zero(d.Pab) ? si_solve_pab_zero(e, d) : si_solve_pab_nonzero(e, d);
}

}  // namespace splitq
