#pragma once

/// Complete solution sets of a x^2 + b x + c = 0 with a a nonzero zero divisor.

#include <string>
#include <vector>

#include "splitq/equation_one.hpp"
#include "splitq/si.hpp"
#include "splitq/sz.hpp"

namespace splitq {

struct SolveReport {
  NormalizedEquation normalized;
  std::optional<BranchData> data;  // absent for b = 0
  std::vector<std::string> cases;  // solver cases consulted, in order
  SolutionSet normalized_set;      // roots of the normalized equation
  SolutionSet set;                 // roots of the original equation
  SolutionSet sz_set, si_set;      // the two parts of `set` when b != 0
};

namespace detail {

inline std::string sz_case(const BranchData& d) {
  if (!is_zero(d.Pab)) return "sz.pab_nonzero";
  if (!is_zero(d.Ib)) return "sz.empty_ib_nonzero";
  return d.delta == 2 * d.b1 ? "sz.delta_2b1" : "sz.delta_zero";
}

inline std::string si_case(const BranchData& d) {
  if (!is_zero(d.Pab)) return "si.pab_nonzero";
  if (is_zero(d.Ib)) return "si.empty_ib_zero";
  return is_zero(d.Ib + 2 * d.Pac) ? "si.pab_zero.free_trace" : "si.pab_zero";
}

}  // namespace detail

/// Solves an equation already in normalized form.
inline SolveReport solve_normalized(const QuadEquation& e) {
  if (!is_normalized(e)) throw error(errc::not_normalized, "equation is not in normalized form");
  SolveReport rep;
  rep.normalized = {e, Scalar(0), e};
  if (e.b.is_zero()) {
    rep.cases.push_back("eq1");
    rep.normalized_set = eq1_solve(e.a, e.c);
  } else {
    BranchData d = branch_data(e);
    rep.cases = {detail::sz_case(d), detail::si_case(d)};
    rep.sz_set = sz_solve(e, d);
    rep.si_set = si_solve(e, d);
    rep.normalized_set = rep.sz_set;
    rep.normalized_set.append(rep.si_set);
    rep.data = d;
  }
  rep.normalized_set.tidy();
  rep.set = rep.normalized_set;
  return rep;
}

inline SolveReport solve_detailed(const QuadEquation& e) {
  switch (classify(e.a)) {
    case Kind::zero: throw error(errc::not_zero_divisor, "leading coefficient is zero");
    case Kind::invertible:
      throw error(errc::unsupported,
                  "leading coefficient is invertible; this solver handles zero divisors only (try the companion path)");
    case Kind::zero_divisor: break;
  }
  NormalizedEquation n = normalize(e);
  SolveReport rep = solve_normalized(n.eq);
  rep.normalized = n;
  rep.set = rep.normalized_set.translated(n.shift);
  rep.sz_set = rep.sz_set.translated(n.shift);
  rep.si_set = rep.si_set.translated(n.shift);
  return rep;
}

inline SolutionSet solve(const QuadEquation& e) { return solve_detailed(e).set; }

}  // namespace splitq
