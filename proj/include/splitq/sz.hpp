#pragma once

/// Roots x of a normalized equation with b != 0 for which 2 x0 a + b is a
/// zero divisor.

#include "splitq/branch_data.hpp"
#include "splitq/solution_set.hpp"

namespace splitq {

namespace detail {

inline void require_branch(bool ok, const char* what) {
  if (!ok) throw error(errc::wrong_branch, what);
}

inline Poly cst(const Scalar& v, std::size_t n) { return Poly::constant(v, n); }

}  // namespace detail

/// P_ab != 0: x0 = -I_b / (4 P_ab) is forced, x2 and x3 are affine in x1,
/// and the remaining two equations read R x1 + L = 0 and F = 0.
inline SolutionSet sz_solve_pab_nonzero(const QuadEquation& e, const BranchData& d) {
  detail::require_branch(!e.b.is_zero() && !is_zero(d.Pab), "needs b != 0 and P_ab != 0");
  SolutionSet out;
  const PointData& p = *d.point;
  if (!is_zero(p.F)) return out;
  const Scalar u = p.k1 / p.m, w = p.k2 / p.m;
  if (!is_zero(p.R)) {
    Scalar x1 = -p.L / p.R;
    out.add_point({p.x0, x1, Scalar(u * x1 + w * p.x0 + p.Delta1), Scalar(-w * x1 + u * p.x0 + p.Delta2)});
    return out;
  }
  if (!is_zero(p.L)) return out;
  Family f;
  f.params = {"x1"};
  f.param_forms = {AffineForm::coordinate(1)};
  Poly x1 = Poly::var(0, 1);
  f.components = {detail::cst(p.x0, 1), x1, x1 * u + detail::cst(w * p.x0 + p.Delta1, 1),
                  x1 * Scalar(-w) + detail::cst(u * p.x0 + p.Delta2, 1)};
  f.radicand = Poly(1);
  f.origin = "sz.pab_nonzero";
  out.add_family(f);
  return out;
}

/// P_ab = 0, I_b = 0 and delta = 2 b1 (b1 != 0).
inline SolutionSet sz_solve_delta_2b1(const QuadEquation& e, const BranchData& d) {
  detail::require_branch(!e.b.is_zero() && is_zero(d.Pab) && is_zero(d.Ib) && d.delta == 2 * d.b1 && !is_zero(d.b1),
                         "needs P_ab = 0, I_b = 0, delta = 2 b1 != 0");
  SolutionSet out;
  const auto &a2 = d.a2, &a3 = d.a3, &b1 = d.b1, &t1 = d.t1, &t2 = d.t2, &c0 = d.c0, &c1 = d.c1;
  const Scalar g = a2 * t1 + a3 * t2;
  auto x2_of = [&](const Scalar& x0, const Scalar& x1) { return Scalar(-a2 * x0 - a3 * x1 - t2 / (2 * b1)); };
  auto x3_of = [&](const Scalar& x0, const Scalar& x1) { return Scalar(-a3 * x0 + a2 * x1 + t1 / (2 * b1)); };
  if (!is_zero(g)) {
    Scalar x0 = (a3 * t1 - a2 * t2 + 2 * c1) * b1 / (2 * g);
    Scalar x1 = -(t1 * t1 + t2 * t2 + 2 * b1 * b1 * g + 4 * b1 * b1 * c0) / (4 * b1 * g);
    out.add_point({x0, x1, x2_of(x0, x1), x3_of(x0, x1)});
    return out;
  }
  if (!is_zero(a2 * t2 - a3 * t1 - 2 * c1) || !is_zero(t1 * t1 + t2 * t2 + 4 * b1 * b1 * c0)) return out;
  Family f;
  f.params = {"x0", "x1"};
  f.param_forms = {AffineForm::coordinate(0), AffineForm::coordinate(1)};
  Poly x0 = Poly::var(0, 2), x1 = Poly::var(1, 2);
  f.components = {x0, x1, x0 * Scalar(-a2) - x1 * a3 + detail::cst(-t2 / (2 * b1), 2),
                  x0 * Scalar(-a3) + x1 * a2 + detail::cst(t1 / (2 * b1), 2)};
  f.radicand = Poly(2);
  f.origin = "sz.delta_2b1";
  out.add_family(f);
  return out;
}

/// P_ab = 0, I_b = 0 and delta = 0, i.e. b = a b1 i. Solvable iff ac = 2c.
inline SolutionSet sz_solve_delta_zero(const QuadEquation& e, const BranchData& d) {
  detail::require_branch(!e.b.is_zero() && is_zero(d.Pab) && is_zero(d.Ib) && is_zero(d.delta) && !is_zero(d.b1),
                         "needs P_ab = 0, I_b = 0, delta = 0, b1 != 0");
  SolutionSet out;
  if (e.a * e.c != e.c * Scalar(2)) return out;
  const auto &a2 = d.a2, &a3 = d.a3, &b1 = d.b1, &c0 = d.c0, &c1 = d.c1;
  using detail::cst;

  // x0 = 0.
  if (is_zero(a2)) {
    // a3 = +-1: x3 fixed, x2 = (-a3 b1 +- sqrt(D)) / 2.
    Family f;
    f.params = {"x1"};
    f.param_forms = {AffineForm::coordinate(1)};
    Poly x1 = Poly::var(0, 1);
    f.components = {Poly(1), x1, cst(-a3 * b1 / 2, 1), cst(c1 / (a3 * b1), 1)};
    f.root_coef = {Scalar(0), Scalar(0), Scalar(1, 2), Scalar(0)};
    f.radicand = cst(b1 * b1 - 4 * (c1 * c1 / (b1 * b1) + c0), 1) + x1 * x1 * Scalar(4) + x1 * Scalar(4 * b1);
    f.constraints.push_back({f.radicand, Relation::ge});
    f.origin = "sz.delta_zero.x0_zero";
    out.add_family(f);
  } else {
    // x2 affine in x3, x1 = -b1/2 +- sqrt(w) / a2.
    Family f;
    f.params = {"x3"};
    f.param_forms = {AffineForm::coordinate(3)};
    Poly x3 = Poly::var(0, 1);
    f.components = {Poly(1), cst(-b1 / 2, 1), cst(c1 / (a2 * b1), 1) + x3 * Scalar(-a3 / a2), x3};
    f.root_coef = {Scalar(0), Scalar(1 / a2), Scalar(0), Scalar(0)};
    f.radicand = x3 * x3 + x3 * Scalar(-(2 * a3 * c1 + a2 * b1 * b1) / b1) +
                 cst((4 * (a2 * a2 * b1 * b1 * c0 + a2 * b1 * b1 * a3 * c1 + c1 * c1) + b1 * b1 * b1 * b1 * a2 * a2) /
                         (4 * b1 * b1),
                     1);
    f.constraints.push_back({f.radicand, Relation::ge});
    f.origin = "sz.delta_zero.x0_zero";
    out.add_family(f);
  }

  // x0 != 0 and b1 (a2 x2 + a3 x3) != c1: x0 = T is a real root of a quartic
  // whose coefficients depend on (x2, x3).
  {
    Family f;
    f.params = {"x2", "x3"};
    f.param_forms = {AffineForm::coordinate(2), AffineForm::coordinate(3)};
    const std::size_t n = 3;
    Poly x2 = Poly::var(0, n), x3 = Poly::var(1, n), T = Poly::var(2, n);
    Poly u = x2 * a2 + x3 * a3;
    Poly guard = u * b1 - cst(c1, n);
    Poly f0 = guard * guard * Scalar(-1, 4);
    Poly f1 = (x2 * x2 - x3 * x3) * (a2 * a3 * b1) + x2 * x3 * Scalar(b1 * (a3 * a3 - a2 * a2)) +
              (x3 * a2 - x2 * a3) * c1;
    Poly f2 = u * u + (x2 * a3 - x3 * a2) * b1 + cst(c0 + b1 * b1 / 4, n);
    Poly f3 = u * Scalar(2);
    RootSpec r;
    r.poly = f0 + f1 * T + f2 * T.pow(2) + f3 * T.pow(3) + T.pow(4);
    r.form = AffineForm::coordinate(0);
    f.root = r;
    f.components = {T, guard * T.monomial_inverse() * Scalar(1, 2) + x2 * Scalar(-a3) + x3 * a2 + cst(-b1 / 2, n), x2, x3};
    f.radicand = Poly(n);
    f.constraints = {{guard, Relation::ne}, {T, Relation::ne}};
    f.origin = "sz.delta_zero.x0_nonzero";
    out.add_family(f);
  }

  // x0 != 0 and b1 (a2 x2 + a3 x3) = c1: x1 quadratic in x0.
  {
    Family f;
    f.params = {"x0"};
    f.param_forms = {AffineForm::coordinate(0)};
    Poly x0 = Poly::var(0, 1);
    Poly x1 = x0 * x0 * Scalar(1 / b1) + x0 * Scalar(2 * c1 / (b1 * b1)) +
              cst(c1 * c1 / (b1 * b1 * b1) - b1 / 4 + c0 / b1, 1);
    f.components = {x0, x1, cst(a2 * c1 / b1 - a3 * b1 / 2, 1) + x1 * Scalar(-a3),
                    cst(a3 * c1 / b1 + a2 * b1 / 2, 1) + x1 * a2};
    f.radicand = Poly(1);
    f.constraints = {{x0, Relation::ne}};
    f.origin = "sz.delta_zero.x0_nonzero_guard";
    out.add_family(f);
  }
  return out;
}

/// Dispatch within SZ.
inline SolutionSet sz_solve(const QuadEquation& e, const BranchData& d) {
  if (!is_zero(d.Pab)) return sz_solve_pab_nonzero(e, d);
  if (!is_zero(d.Ib)) return {};
  // With P_ab = 0 and I_b = 0, delta is 2 b1 or 0.
  if (d.delta == 2 * d.b1) return sz_solve_delta_2b1(e, d);
  return sz_solve_delta_zero(e, d);
}

}  // namespace splitq
