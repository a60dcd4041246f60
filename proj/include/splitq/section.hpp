#pragma once

/// Intersections of an affine subspace of H_s with a quadric, exact.
///
/// The subspace is kept as x_k = A_k(t) with A_k affine in parameters t that
/// are read back from x by affine forms; where possible the parameters are
/// coordinates of x themselves. Linear conditions eliminate parameters; the
/// quadric is then solved for one parameter with a square root.

#include <array>
#include <string>
#include <vector>

#include "splitq/solution_set.hpp"

namespace splitq {

struct AffinePiece {
  std::vector<std::string> names;
  std::array<Poly, 4> comps;  // affine in names.size() variables
  std::vector<AffineForm> forms;

  std::size_t nvars() const { return names.size(); }
};

namespace detail {

inline const char* coord_name(std::size_t k) {
  static const char* n[4] = {"x0", "x1", "x2", "x3"};
  return n[k];
}

/// p must not depend on variable k; returns it over the remaining variables.
inline Poly drop_var(const Poly& p, std::size_t k, std::size_t m) {
  std::vector<Poly> subs;
  for (std::size_t i = 0; i < m; ++i)
    subs.push_back(i == k ? Poly(m - 1) : Poly::var(i < k ? i : i - 1, m - 1));
  return compose(p, subs, m - 1);
}

/// Replaces variable k by `repl` (a polynomial in the other variables).
inline AffinePiece eliminate(const AffinePiece& piece, std::size_t k, const Poly& repl) {
  const std::size_t m = piece.nvars();
  std::vector<Poly> subs;
  for (std::size_t i = 0; i < m; ++i) subs.push_back(i == k ? drop_var(repl, k, m) : Poly::var(i < k ? i : i - 1, m - 1));
  AffinePiece out;
  for (int j = 0; j < 4; ++j) out.comps[j] = compose(piece.comps[j], subs, m - 1);
  for (std::size_t i = 0; i < m; ++i) {
    if (i == k) continue;
    out.names.push_back(piece.names[i]);
    out.forms.push_back(piece.forms[i]);
  }
  return out;
}

inline Scalar linear_coef(const Poly& p, std::size_t k) { return p.coefficient(k, 1).constant_term(); }

inline bool is_psd(const Matrix<Scalar>& H) {
  const std::size_t n = H.rows();
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    Matrix<Scalar> sub(idx.size(), idx.size());
    for (std::size_t r = 0; r < idx.size(); ++r)
      for (std::size_t c = 0; c < idx.size(); ++c) sub(r, c) = H(idx[r], idx[c]);
    if (sgn(determinant(sub)) < 0) return false;
  }
  return true;
}

}  // namespace detail

/// The subspace base + span(dirs), parametrized by the lowest-index
/// coordinates that determine a point of it.
inline AffinePiece coordinate_piece(const SplitQuaternion& base, const std::vector<SplitQuaternion>& dirs) {
  Matrix<Scalar> D(dirs.size(), 4);
  for (std::size_t r = 0; r < dirs.size(); ++r)
    for (std::size_t c = 0; c < 4; ++c) D(r, c) = dirs[r][c];
  auto pivots = rref(D);
  const std::size_t m = pivots.size();
  // Row i of D is now a direction with 1 at pivots[i] and 0 at the other pivots.
  SplitQuaternion b = base;
  for (std::size_t i = 0; i < m; ++i) {
    Scalar bi = base[pivots[i]];
    for (std::size_t c = 0; c < 4; ++c) b[c] -= bi * D(i, c);
  }
  AffinePiece out;
  for (std::size_t i = 0; i < m; ++i) {
    out.names.push_back(detail::coord_name(pivots[i]));
    out.forms.push_back(AffineForm::coordinate(pivots[i]));
  }
  for (std::size_t c = 0; c < 4; ++c) {
    Poly p = Poly::constant(b[c], m);
    for (std::size_t i = 0; i < m; ++i) p += Poly::var(i, m) * D(i, c);
    out.comps[c] = p;
  }
  return out;
}

/// The subspace cut by lin(t) = 0 (lin affine), or nullopt when empty.
inline std::optional<AffinePiece> impose_linear(const AffinePiece& piece, const Poly& lin) {
  if (lin.is_zero()) return piece;
  if (lin.is_constant()) return std::nullopt;
  std::size_t k = piece.nvars();
  while (k-- > 0)
    if (!is_zero(detail::linear_coef(lin, k))) break;
  Scalar ck = detail::linear_coef(lin, k);
  Poly repl = (lin - Poly::var(k, piece.nvars()) * ck) * Scalar(-1 / ck);
  return detail::eliminate(piece, k, repl);
}

inline void emit_piece(const AffinePiece& piece, const std::string& origin, SolutionSet& out) {
  Family f;
  f.params = piece.names;
  f.components = piece.comps;
  f.param_forms = piece.forms;
  f.origin = origin;
  f.radicand = Poly(piece.nvars());
  out.add_family(f);
}

/// Points of the piece where g(t) = 0, g of total degree <= 2.
inline SolutionSet solve_quadric(AffinePiece piece, Poly g, const std::string& origin) {
  SolutionSet out;
  std::size_t m = piece.nvars();
  if (g.is_zero()) {
    emit_piece(piece, origin, out);
    return out;
  }
  if (g.total_degree() <= 1) {
    if (auto p = impose_linear(piece, g)) emit_piece(*p, origin, out);
    return out;
  }
  // Variable with a pure square term, preferring later parameters.
  std::size_t k = m;
  while (k-- > 0)
    if (!is_zero(g.coefficient(k, 2).constant_term())) break;
  if (k == static_cast<std::size_t>(-1)) {
    // Only mixed terms t_p t_q: substitute t_q = w + t_p.
    std::size_t p = 0, q = 0;
    for (auto& [e, c] : g.terms()) {
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] == 1) idx.push_back(i);
      if (idx.size() == 2) {
        p = idx[0];
        q = idx[1];
        break;
      }
    }
    std::vector<Poly> subs;
    for (std::size_t i = 0; i < m; ++i) subs.push_back(Poly::var(i, m));
    subs[q] = Poly::var(q, m) + Poly::var(p, m);
    for (auto& c : piece.comps) c = compose(c, subs, m);
    g = compose(g, subs, m);
    for (int j = 0; j < 4; ++j) piece.forms[q].coef[j] -= piece.forms[p].coef[j];
    piece.forms[q].constant -= piece.forms[p].constant;
    piece.names[q] = piece.names[q] + "-" + piece.names[p];
    return solve_quadric(piece, g, origin);
  }
  const Scalar alpha = g.coefficient(k, 2).constant_term();
  const Poly beta = g.coefficient(k, 1);
  const Poly gamma = g.coefficient(k, 0);
  const Poly D = beta * beta - gamma * (alpha * 4);
  const Poly center = beta * Scalar(-1 / (2 * alpha));

  if (m == 1) {
    Scalar d = D.constant_term(), c0 = center.constant_term();
    if (sgn(d) < 0) return out;
    std::vector<Scalar> none;
    auto at = [&](const Scalar& t) {
      SplitQuaternion x;
      std::vector<Scalar> v{t};
      for (int j = 0; j < 4; ++j) x[j] = piece.comps[j].eval(std::span<const Scalar>(v));
      return x;
    };
    if (auto s = rational_sqrt(d)) {
      out.add_point(at(c0 + *s / (2 * alpha)));
      out.add_point(at(c0 - *s / (2 * alpha)));
    } else {
      double h = std::sqrt(d.get_d()) / (2 * alpha.get_d());
      for (double t : {c0.get_d() + h, c0.get_d() - h}) {
        SplitQuaternionF x;
        std::vector<double> v{t};
        for (int j = 0; j < 4; ++j) x[j] = piece.comps[j].eval(std::span<const double>(v));
        out.add_point(x);
      }
    }
    return out;
  }

  auto H = quadratic_matrix(D, m);
  Matrix<Scalar> negH = *H;
  for (std::size_t r = 0; r < negH.rows(); ++r)
    for (std::size_t c = 0; c < negH.cols(); ++c) negH(r, c) = -negH(r, c);
  if (detail::is_psd(negH)) {
    // D <= 0 everywhere; it vanishes exactly where H (1, t) = 0.
    const AffinePiece full = detail::eliminate(piece, k, center);
    std::optional<AffinePiece> cur = full;
    for (std::size_t r = 0; r < H->rows() && cur; ++r) {
      std::vector<Scalar> coef(m);
      for (std::size_t j = 0; j < m; ++j) coef[j] = (*H)(r, j + 1);
      Poly row = detail::drop_var(affine_poly(coef, (*H)(r, 0)), k, m);
      // Parameters of `full` as functions of the current ones.
      std::vector<Poly> subs;
      for (auto& form : full.forms) subs.push_back(compose(form.as_poly(), cur->comps, cur->nvars()));
      row = compose(row, subs, cur->nvars());
      cur = impose_linear(*cur, row);
    }
    if (cur) {
      if (cur->nvars() == 0) {
        SplitQuaternion x;
        std::vector<Scalar> none;
        for (int j = 0; j < 4; ++j) x[j] = cur->comps[j].eval(std::span<const Scalar>(none));
        out.add_point(x);
      } else {
        emit_piece(*cur, origin, out);
      }
    }
    return out;
  }

  Family f;
  AffinePiece rest = detail::eliminate(piece, k, center);
  f.params = rest.names;
  f.param_forms = rest.forms;
  f.components = rest.comps;
  for (int j = 0; j < 4; ++j) f.root_coef[j] = detail::linear_coef(piece.comps[j], k) / (2 * alpha);
  f.radicand = detail::drop_var(D, k, m);
  f.constraints.push_back({f.radicand, Relation::ge});
  f.origin = origin;
  out.add_family(f);
  return out;
}

/// {x in piece : Q(x) = target}, Q a quadratic polynomial in x0..x3.
inline SolutionSet quadric_section(const AffinePiece& piece, const Poly& Q, const Scalar& target,
                                   const std::string& origin) {
  Poly g = compose(Q, piece.comps, piece.nvars()) - Poly::constant(target, piece.nvars());
  return solve_quadric(piece, g, origin);
}

/// qform as a polynomial in x0..x3.
inline Poly qform_poly() {
  Poly q(4);
  for (std::size_t i = 0; i < 4; ++i) q += Poly::var(i, 4).pow(2) * Scalar(i < 2 ? 1 : -1);
  return q;
}

}  // namespace splitq
