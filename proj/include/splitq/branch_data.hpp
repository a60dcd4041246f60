#pragma once

/// Scalar invariants of a normalized equation that drive the case analysis.

#include <optional>

#include "splitq/normalize.hpp"

namespace splitq {

struct PointData {  // only when P_ab != 0
  Scalar x0, k1, k2, m, Delta1, Delta2, R, L, F;
};

struct BranchData {
  Scalar a2, a3, b1, b2, b3, c0, c1, c2, c3;
  Scalar Pab, Pac, Pbc, Ib, Ic;
  Scalar delta, t1, t2;
  std::optional<PointData> point;
};

inline BranchData branch_data(const QuadEquation& e) {
  if (!is_normalized(e)) throw error(errc::not_normalized, "equation is not in normalized form");
  BranchData d;
  d.a2 = e.a[2], d.a3 = e.a[3];
  d.b1 = e.b[1], d.b2 = e.b[2], d.b3 = e.b[3];
  d.c0 = e.c[0], d.c1 = e.c[1], d.c2 = e.c[2], d.c3 = e.c[3];
  d.Pab = inner(e.a, e.b);
  d.Pac = inner(e.a, e.c);
  d.Pbc = inner(e.b, e.c);
  d.Ib = qform(e.b);
  d.Ic = qform(e.c);
  const auto &a2 = d.a2, &a3 = d.a3, &b1 = d.b1, &b2 = d.b2, &b3 = d.b3;
  const auto &c0 = d.c0, &c1 = d.c1, &c2 = d.c2, &c3 = d.c3;
  d.delta = a2 * b3 - a3 * b2 + b1;
  d.t1 = c2 - c0 * a2 - a3 * c1;
  d.t2 = c3 - c0 * a3 + a2 * c1;
  if (is_zero(d.Pab)) return d;

  PointData p;
  const auto &delta = d.delta, &t1 = d.t1, &t2 = d.t2, &Pab = d.Pab, &Ib = d.Ib;
  p.x0 = -Ib / (4 * Pab);
  p.k1 = 2 * b2 * delta - a3 * Ib;
  p.k2 = -2 * b3 * delta - a2 * Ib;
  p.m = 2 * b1 * delta - Ib;
  const auto &x0 = p.x0, &k1 = p.k1, &k2 = p.k2, &m = p.m;
  p.Delta1 = (-Pab * t1 - delta * t2) / m;
  p.Delta2 = (delta * t1 - Pab * t2) / m;
  const auto &D1 = p.Delta1, &D2 = p.Delta2;
  p.R = (2 * k1 * D1 - 2 * k2 * D2 + b2 * k1 - b3 * k2 + 2 * (a2 * k1 - a3 * k2) * x0 - m * b1) / m;
  p.L = b2 * D1 + b3 * D2 + D1 * D1 + D2 * D2 + c0 + 2 * (a2 * k2 + a3 * k1 + m) / m * x0 * x0 +
        (2 * k2 * D1 + 2 * k1 * D2 + b2 * k2 + b3 * k1 + 2 * a2 * D1 * m + 2 * a3 * D2 * m) / m * x0;
  p.F = (2 * a3 * k2 - 2 * a2 * k1) / m * x0 * x0 + ((b3 * k2 - b2 * k1) / m + 2 * a3 * D1 - 2 * a2 * D2 + b1) * x0 +
        b3 * D1 - b2 * D2 + c1;
  d.point = p;
  return d;
}

}  // namespace splitq
