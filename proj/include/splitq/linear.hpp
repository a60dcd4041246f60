#pragma once

/// Complete solution sets of the linear equation a x = d.

#include <algorithm>
#include <cmath>

#include "splitq/matrix.hpp"

namespace splitq {

enum class LinearKind { empty, point, affine };

inline const char* to_string(LinearKind k) {
  switch (k) {
    case LinearKind::empty: return "Empty";
    case LinearKind::point: return "Point";
    case LinearKind::affine: return "Affine";
  }
  return "?";
}

/// {base + projector y : y in H_s}. For `point` the projector is zero; for
/// `affine` it is the matrix of y -> (1 - a^+ a) y, an idempotent of rank
/// `rank`.
template <class T>
struct BasicLinearSolutionSet {
  LinearKind kind = LinearKind::empty;
  BasicQuaternion<T> base;
  Matrix<T> projector = Matrix<T>(4, 4);
  std::size_t rank = 0;

  BasicQuaternion<T> at(const BasicQuaternion<T>& y) const { return base + projector.apply(y); }

  /// Directions spanning the affine part (columns of the projector).
  std::vector<BasicQuaternion<T>> directions() const {
    std::vector<BasicQuaternion<T>> out;
    for (auto& col : column_basis(projector)) out.push_back({col[0], col[1], col[2], col[3]});
    return out;
  }

  bool contains(const BasicQuaternion<T>& x) const {
    switch (kind) {
      case LinearKind::empty: return false;
      case LinearKind::point: return x == base;
      case LinearKind::affine: {
        auto diff = x - base;
        std::vector<T> rhs{diff[0], diff[1], diff[2], diff[3]};
        return solve_any(projector, rhs).has_value();
      }
    }
    return false;
  }
};

using LinearSolutionSet = BasicLinearSolutionSet<Scalar>;

namespace detail {

inline bool same(const SplitQuaternion& x, const SplitQuaternion& y) { return x == y; }
inline bool same(const SplitQuaternionF& x, const SplitQuaternionF& y, double tol = 1e-9) {
  double scale = 1, diff = 0;
  for (int i = 0; i < 4; ++i) {
    scale = std::max({scale, std::abs(x[i]), std::abs(y[i])});
    diff = std::max(diff, std::abs(x[i] - y[i]));
  }
  return diff <= tol * scale;
}

}  // namespace detail

/// All x with a x = d: solvable iff a a^+ d = d, and then
/// x = a^+ d + (1 - a^+ a) y for arbitrary y.
template <class T>
BasicLinearSolutionSet<T> solve_linear(const BasicQuaternion<T>& a, const BasicQuaternion<T>& d) {
  BasicLinearSolutionSet<T> out;
  if (classify(a) == Kind::invertible) {
    out.kind = LinearKind::point;
    out.base = inverse(a) * d;
    return out;
  }
  const auto ap = pinv(a);
  if (!detail::same(a * ap * d, d)) return out;
  out.kind = LinearKind::affine;
  out.base = ap * d;
  out.projector = left_mul_matrix(BasicQuaternion<T>(T(1)) - ap * a);
  out.rank = rank(out.projector);
  return out;
}

}  // namespace splitq
