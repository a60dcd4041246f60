#pragma once

/// Solving through the companion polynomial
///   c(x) = 2 P_ab x^3 + (2 P_ac + I_b) x^2 + 2 P_bc x + I_c.
/// Every root q has x^2 - 2 Re(q) x + I_q dividing c, and on the class
/// {2 Re(x) = T, I_x = N} the equation becomes linear: (T a + b) x = a N - c.

#include <sstream>
#include <string>
#include <vector>

#include "splitq/linear.hpp"
#include "splitq/normalize.hpp"
#include "splitq/section.hpp"

namespace splitq {

inline RealPoly companion_poly(const QuadEquation& e) {
  return RealPoly{qform(e.c), Scalar(2 * inner(e.b, e.c)), Scalar(2 * inner(e.a, e.c) + qform(e.b)),
                  Scalar(2 * inner(e.a, e.b))};
}

/// {x in L : 2 Re(x) = T, I_x = N}.
inline SolutionSet class_intersect(const LinearSolutionSet& L, const Scalar& T, const Scalar& N) {
  SolutionSet out;
  switch (L.kind) {
    case LinearKind::empty: return out;
    case LinearKind::point:
      if (L.base[0] * 2 == T && qform(L.base) == N) out.add_point(L.base);
      return out;
    case LinearKind::affine: break;
  }
  AffinePiece piece = coordinate_piece(L.base, L.directions());
  Poly lin = piece.comps[0] - Poly::constant(T / 2, piece.nvars());
  auto cut = impose_linear(piece, lin);
  if (!cut) return out;
  return quadric_section(*cut, qform_poly(), N, "companion.class");
}

/// Floating counterpart for irrational (T, N): isolated points only.
inline SolutionSet class_intersect(const BasicLinearSolutionSet<double>& L, double T, double N) {
  SolutionSet out;
  auto fmt = [&] {
    std::ostringstream s;
    s.precision(12);
    s << "(T, N) = (" << T << ", " << N << ")";
    return s.str();
  };
  if (L.kind == LinearKind::empty) return out;
  SplitQuaternionF base = L.base;
  std::vector<SplitQuaternionF> dirs = L.kind == LinearKind::affine ? L.directions() : std::vector<SplitQuaternionF>{};
  // 2 x0 = T.
  double rhs = T / 2 - base[0];
  std::size_t piv = dirs.size();
  for (std::size_t i = 0; i < dirs.size(); ++i)
    if (std::abs(dirs[i][0]) > 1e-12 && (piv == dirs.size() || std::abs(dirs[i][0]) > std::abs(dirs[piv][0]))) piv = i;
  if (piv == dirs.size()) {
    if (std::abs(rhs) > 1e-9) return out;
  } else {
    SplitQuaternionF p = dirs[piv];
    base += p * (rhs / p[0]);
    std::vector<SplitQuaternionF> rest;
    for (std::size_t i = 0; i < dirs.size(); ++i)
      if (i != piv) rest.push_back(dirs[i] - p * (dirs[i][0] / p[0]));
    dirs = rest;
  }
  auto scale = [](const SplitQuaternionF& x) {
    double s = 1;
    for (double v : x.c) s = std::max(s, std::abs(v));
    return s;
  };
  if (dirs.empty()) {
    if (std::abs(qform(base) - N) <= 1e-9 * scale(base) * scale(base)) out.add_point(base);
    return out;
  }
  if (dirs.size() > 1) {
    out.notes.push_back("floating divisor " + fmt() + " meets a positive-dimensional set; not enumerated");
    return out;
  }
  const auto& d = dirs[0];
  double A = qform(d), B = 2 * inner(base, d), C = qform(base) - N;
  std::vector<double> ts;
  if (std::abs(A) < 1e-12) {
    if (std::abs(B) < 1e-12) {
      if (std::abs(C) < 1e-9) out.notes.push_back("floating divisor " + fmt() + " contains a whole line; not enumerated");
      return out;
    }
    ts.push_back(-C / B);
  } else {
    double disc = B * B - 4 * A * C;
    if (disc < -1e-12) return out;
    double s = std::sqrt(std::max(0.0, disc));
    ts = {(-B + s) / (2 * A), (-B - s) / (2 * A)};
  }
  for (double t : ts) out.add_point(base + d * t);
  return out;
}

struct CompanionStep {
  QuadDivisor divisor;
  LinearKind linear_kind = LinearKind::empty;
  std::optional<LinearSolutionSet> linear;  // exact divisors only
  SolutionSet part;
};

struct CompanionResult {
  bool inapplicable = false;  // c(x) identically zero
  RealPoly poly;
  std::vector<CompanionStep> steps;
  SolutionSet set;
};

/// Needs a a nonzero zero divisor (otherwise c(x) has an I_a x^4 term).
inline CompanionResult solve_via_companion(const QuadEquation& e) {
  if (classify(e.a) != Kind::zero_divisor)
    throw error(errc::not_zero_divisor, "companion path needs a nonzero zero-divisor leading coefficient");
  CompanionResult res;
  res.poly = companion_poly(e);
  if (res.poly.is_zero()) {
    res.inapplicable = true;
    return res;
  }
  if (res.poly.degree() < 2) return res;
  for (auto& div : quadratic_divisors(res.poly)) {
    CompanionStep step;
    step.divisor = div;
    if (div.exact) {
      auto lin = solve_linear(SplitQuaternion(e.a * div.T + e.b), SplitQuaternion(e.a * div.N - e.c));
      step.linear_kind = lin.kind;
      step.part = class_intersect(lin, div.T, div.N);
      step.linear = lin;
    } else {
      auto ef = to_float(e);
      auto lin = solve_linear(SplitQuaternionF(ef.a * div.Tf + ef.b), SplitQuaternionF(ef.a * div.Nf - ef.c));
      step.linear_kind = lin.kind;
      step.part = class_intersect(lin, div.Tf, div.Nf);
    }
    res.set.append(step.part);
    res.steps.push_back(std::move(step));
  }
  res.set.tidy();
  return res;
}

}  // namespace splitq
