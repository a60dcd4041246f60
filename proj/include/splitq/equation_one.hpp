#pragma once

/// Square roots in H_s and the normalized equation without linear term,
/// a x^2 + c = 0 with a = 1 + a2 j + a3 k.

#include "splitq/normalize.hpp"
#include "splitq/section.hpp"

namespace splitq {

/// All x with x^2 = q.
///
/// x = x0 + v with v pure imaginary squares to (x0^2 - I_v) + 2 x0 v. For
/// x0 != 0 this forces v = Im(q) / (2 x0) and u = x0^2 > 0 with
/// u^2 - Re(q) u - I_{Im q} / 4 = 0. For x0 = 0 it needs Im(q) = 0 and leaves
/// the quadric I_v = -Re(q).
inline SolutionSet sqrt_split(const SplitQuaternion& q) {
  SolutionSet out;
  const Scalar q0 = q[0];
  const SplitQuaternion qv = im(q);
  const Scalar disc = q0 * q0 + qform(qv);
  if (sgn(disc) >= 0) {
    if (auto s = rational_sqrt(disc)) {
      for (Scalar u : {Scalar((q0 + *s) / 2), Scalar((q0 - *s) / 2)}) {
        if (sgn(u) <= 0) continue;
        if (auto r = rational_sqrt(u)) {
          for (Scalar x0 : {*r, Scalar(-*r)}) out.add_point(SplitQuaternion(x0) + qv / Scalar(2 * x0));
        } else {
          for (double x0 : {std::sqrt(u.get_d()), -std::sqrt(u.get_d())})
            out.add_point(SplitQuaternionF(x0) + to_float(qv) / (2 * x0));
        }
        if (is_zero(*s)) break;
      }
    } else {
      double sd = std::sqrt(disc.get_d());
      for (double u : {(q0.get_d() + sd) / 2, (q0.get_d() - sd) / 2}) {
        if (u <= 0) continue;
        for (double x0 : {std::sqrt(u), -std::sqrt(u)}) out.add_point(SplitQuaternionF(x0) + to_float(qv) / (2 * x0));
      }
    }
  }
  if (qv.is_zero()) {
    auto piece = coordinate_piece(SplitQuaternion(), {SplitQuaternion::unit(1), SplitQuaternion::unit(2),
                                                       SplitQuaternion::unit(3)});
    out.append(quadric_section(piece, qform_poly(), Scalar(-q0), "sqrt.pure_imaginary"));
  }
  return out;
}

inline void require_normalized_a(const SplitQuaternion& a) {
  if (!(a[0] == 1 && is_zero(a[1]) && a[2] * a[2] + a[3] * a[3] == 1))
    throw error(errc::not_normalized, "expected a = 1 + a2 j + a3 k with a2^2 + a3^2 = 1");
}

inline bool eq1_solvable(const SplitQuaternion& a, const SplitQuaternion& c) {
  require_normalized_a(a);
  return a * c == c * Scalar(2);
}

/// Roots attached to one choice of the free quaternion y: the square roots
/// of -c/2 + conj(a) y / 2.
inline SolutionSet eq1_roots_for(const SplitQuaternion& a, const SplitQuaternion& c, const SplitQuaternion& y) {
  require_normalized_a(a);
  if (!eq1_solvable(a, c)) return {};
  return sqrt_split(c * Scalar(-1, 2) + conj(a) * y * Scalar(1, 2));
}

/// The complete solution set of a x^2 + c = 0 (normalized a).
///
/// With ac = 2c the equation reduces to its scalar and i components:
///   x0^2 - x1^2 + x2^2 + x3^2 + 2 x0 (a2 x2 + a3 x3) + c0 = 0,
///   2 x0 (x1 + a3 x2 - a2 x3) = -c1.
/// Writing u = a2 x2 + a3 x3 and v = a3 x2 - a2 x3 (so x2 = a2 u + a3 v,
/// x3 = a3 u - a2 v) both become solvable in closed form.
inline SolutionSet eq1_solve(const SplitQuaternion& a, const SplitQuaternion& c) {
  SolutionSet out;
  if (!eq1_solvable(a, c)) return out;
  const Scalar a2 = a[2], a3 = a[3], c0 = c[0], c1 = c[1];
  if (is_zero(c1)) {
    // x0 = 0: -x1^2 + x2^2 + x3^2 + c0 = 0.
    auto piece = coordinate_piece(SplitQuaternion(), {SplitQuaternion::unit(1), SplitQuaternion::unit(2),
                                                       SplitQuaternion::unit(3)});
    out.append(quadric_section(piece, qform_poly() * Scalar(-1), Scalar(-c0), "eq1.x0_zero"));
    // (x0 + u)^2 = -c0, v = -x1 (valid for every x0).
    if (sgn(c0) <= 0) {
      Family f;
      f.params = {"x0", "x1"};
      f.param_forms = {AffineForm::coordinate(0), AffineForm::coordinate(1)};
      Poly x0 = Poly::var(0, 2), x1 = Poly::var(1, 2);
      Poly u = -x0, v = -x1;
      f.components = {x0, x1, u * a2 + v * a3, u * a3 - v * a2};
      f.root_coef = {Scalar(0), Scalar(0), a2, a3};
      f.radicand = Poly::constant(-c0, 2);
      f.constraints.push_back({f.radicand, Relation::ge});
      f.origin = "eq1.x0_free";
      out.add_family(f);
    }
    out.tidy();
    return out;
  }
  // c1 != 0 forces x0 != 0; then v = (x0/c1)((x0+u)^2 + c0) - c1/(4 x0), x1 = -c1/(2 x0) - v.
  Family f;
  f.params = {"x0", "u"};
  AffineForm uf;
  uf.coef = {Scalar(0), Scalar(0), a2, a3};
  f.param_forms = {AffineForm::coordinate(0), uf};
  Poly x0 = Poly::var(0, 2), u = Poly::var(1, 2);
  Poly inv_x0 = x0.monomial_inverse();
  Poly s = x0 + u;
  Poly v = x0 * (s * s + Poly::constant(c0, 2)) * Scalar(1 / c1) - inv_x0 * Scalar(c1 / 4);
  Poly x1 = inv_x0 * Scalar(-c1 / 2) - v;
  f.components = {x0, x1, u * a2 + v * a3, u * a3 - v * a2};
  f.radicand = Poly(2);
  f.constraints.push_back({x0, Relation::ne});
  f.origin = "eq1.x0_nonzero";
  out.add_family(f);
  return out;
}

}  // namespace splitq
