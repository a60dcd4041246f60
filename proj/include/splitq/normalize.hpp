#pragma once

/// Quadratic equations a x^2 + b x + c = 0 and their reduction to the
/// canonical form a = 1 + a2 j + a3 k, Re(b) = 0.

#include "splitq/quaternion.hpp"

namespace splitq {

template <class T>
struct BasicQuadEquation {
  BasicQuaternion<T> a, b, c;

  BasicQuaternion<T> operator()(const BasicQuaternion<T>& x) const { return a * x * x + b * x + c; }
};

using QuadEquation = BasicQuadEquation<Scalar>;

inline BasicQuadEquation<double> to_float(const QuadEquation& e) { return {to_float(e.a), to_float(e.b), to_float(e.c)}; }

/// The canonical equation plus the shift relating its roots x to the roots
/// y = x - shift of the original one.
struct NormalizedEquation {
  QuadEquation eq;
  Scalar shift;
  QuadEquation original;
};

inline bool is_normalized(const QuadEquation& e) {
  const auto& a = e.a;
  return a[0] == 1 && is_zero(a[1]) && a[2] * a[2] + a[3] * a[3] == 1 && is_zero(e.b[0]);
}

/// For d = d1 + d2 j with d1 = d0 + d1' i (invertible because d is a nonzero
/// zero divisor), multiply through by d1^{-1} and complete the square in the
/// real part of the linear coefficient.
inline NormalizedEquation normalize(const QuadEquation& original) {
  const auto& d = original.a;
  if (classify(d) != Kind::zero_divisor)
    throw error(errc::not_zero_divisor, "leading coefficient is not a nonzero zero divisor");
  SplitQuaternion d1{d[0], d[1], Scalar(0), Scalar(0)};
  SplitQuaternion d1inv = inverse(d1);
  SplitQuaternion a = d1inv * d;
  SplitQuaternion e1 = d1inv * original.b;
  Scalar k0 = e1[0];
  SplitQuaternion b = e1 - a * k0;
  SplitQuaternion c = d1inv * original.c - e1 * Scalar(k0 / 2) + a * Scalar(k0 * k0 / 4);
  return {{a, b, c}, Scalar(k0 / 2), original};
}

}  // namespace splitq
