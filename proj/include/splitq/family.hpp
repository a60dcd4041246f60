#pragma once

/// Parametric solution families.
///
/// A family maps a parameter vector p to points
///
///   x_k = P_k(p) + sigma * r_k * sqrt(D(p)),   sigma in {+1, -1}
///
/// with Laurent polynomials P_k, rational r_k and one shared radicand D. A
/// semi-explicit family additionally has an auxiliary unknown T (a real root
/// of f(p, T) = 0) that the P_k may depend on. Parameters (and T) are read
/// back from a point through affine forms, which makes membership exact.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "splitq/matrix.hpp"
#include "splitq/poly.hpp"
#include "splitq/quaternion.hpp"
#include "splitq/realroots.hpp"

namespace splitq {

enum class Shape { affine, poly_in_params, sqrt_branch, semi_explicit };

inline const char* to_string(Shape s) {
  switch (s) {
    case Shape::affine: return "Affine";
    case Shape::poly_in_params: return "PolyInParams";
    case Shape::sqrt_branch: return "SqrtBranch";
    case Shape::semi_explicit: return "SemiExplicit";
  }
  return "?";
}

enum class Relation { eq, ne, ge };

inline const char* to_string(Relation r) {
  switch (r) {
    case Relation::eq: return "==";
    case Relation::ne: return "!=";
    case Relation::ge: return ">=";
  }
  return "?";
}

struct Constraint {
  Poly expr;
  Relation rel = Relation::ne;

  bool holds(const Scalar& v) const {
    switch (rel) {
      case Relation::eq: return is_zero(v);
      case Relation::ne: return !is_zero(v);
      case Relation::ge: return sgn(v) >= 0;
    }
    return false;
  }
  bool holds(double v, double tol) const {
    switch (rel) {
      case Relation::eq: return std::abs(v) <= tol;
      case Relation::ne: return std::abs(v) > tol;
      case Relation::ge: return v >= -tol;
    }
    return false;
  }
};

/// coef . (x0, x1, x2, x3) + constant
struct AffineForm {
  std::array<Scalar, 4> coef{};
  Scalar constant;

  static AffineForm coordinate(std::size_t k) {
    AffineForm f;
    f.coef[k] = 1;
    return f;
  }
  Scalar eval(const SplitQuaternion& x) const {
    Scalar out = constant;
    for (int i = 0; i < 4; ++i) out += coef[i] * x[i];
    return out;
  }
  double eval(const SplitQuaternionF& x) const {
    double out = constant.get_d();
    for (int i = 0; i < 4; ++i) out += coef[i].get_d() * x[i];
    return out;
  }
  Poly as_poly() const { return affine_poly(coef, constant); }
  friend bool operator==(const AffineForm&, const AffineForm&) = default;
};

/// T is a real root of `poly` (variables: params..., T); T = form(x).
struct RootSpec {
  std::string name = "T";
  Poly poly;
  AffineForm form;
};

/// Points produced by one parameter assignment.
struct Realization {
  std::vector<SplitQuaternion> exact;
  std::vector<SplitQuaternionF> approx;
  bool empty() const { return exact.empty() && approx.empty(); }
};

struct Family {
  std::vector<std::string> params;
  std::array<Poly, 4> components;  // over params [+ T]
  std::array<Scalar, 4> root_coef{};
  Poly radicand;                   // over params [+ T]
  std::vector<AffineForm> param_forms;
  std::vector<Constraint> constraints;  // over params [+ T]
  std::optional<RootSpec> root;
  std::string origin;  // which solver case produced it

  std::size_t dimension() const { return params.size(); }
  std::size_t nvars() const { return params.size() + (root ? 1 : 0); }

  bool has_sqrt() const {
    for (auto& r : root_coef)
      if (!is_zero(r)) return true;
    return false;
  }

  Shape shape() const {
    if (root) return Shape::semi_explicit;
    if (has_sqrt()) return Shape::sqrt_branch;
    for (auto& c : components)
      if (c.has_negative_exponent() || c.total_degree() > 1) return Shape::poly_in_params;
    return Shape::affine;
  }

  std::vector<std::string> variable_names() const {
    auto names = params;
    if (root) names.push_back(root->name);
    return names;
  }

  /// Points of the family at the given parameter values (not including T).
  Realization evaluate(const std::vector<Scalar>& p) const {
    Realization out;
    if (p.size() != params.size()) throw error(errc::out_of_domain, "wrong number of family parameters");
    try {
      if (root) {
        evaluate_semi(p, out);
      } else {
        evaluate_at(p, out);
      }
    } catch (const error& e) {
      if (e.code() != errc::out_of_domain) throw;
    }
    return out;
  }

  /// Parameter values (plus T for semi-explicit families) of x, if x belongs.
  std::optional<std::vector<Scalar>> membership(const SplitQuaternion& x) const {
    std::vector<Scalar> v;
    for (auto& f : param_forms) v.push_back(f.eval(x));
    if (root) v.push_back(root->form.eval(x));
    try {
      if (root && !is_zero(root->poly.eval(std::span<const Scalar>(v)))) return std::nullopt;
      for (auto& c : constraints)
        if (!c.holds(c.expr.eval(std::span<const Scalar>(v)))) return std::nullopt;
      std::array<Scalar, 4> r;
      for (int k = 0; k < 4; ++k) r[k] = x[k] - components[k].eval(std::span<const Scalar>(v));
      if (!has_sqrt()) {
        for (auto& rk : r)
          if (!is_zero(rk)) return std::nullopt;
        return v;
      }
      int k = 0;
      while (is_zero(root_coef[k])) ++k;
      Scalar g = r[k] / root_coef[k];
      if (g * g != radicand.eval(std::span<const Scalar>(v))) return std::nullopt;
      for (int j = 0; j < 4; ++j)
        if (r[j] != root_coef[j] * g) return std::nullopt;
      return v;
    } catch (const error& e) {
      if (e.code() == errc::out_of_domain) return std::nullopt;
      throw;
    }
  }

  /// Floating membership with a relative tolerance.
  std::optional<std::vector<double>> membership(const SplitQuaternionF& x, double tol = 1e-9) const {
    double scale = 1;
    for (double c : x.c) scale = std::max(scale, std::abs(c));
    const double eps = tol * scale;
    std::vector<double> v;
    for (auto& f : param_forms) v.push_back(f.eval(x));
    if (root) v.push_back(root->form.eval(x));
    std::span<const double> sv(v);
    if (root && std::abs(root->poly.eval(sv)) > eps * std::max(1.0, poly_scale(root->poly, sv))) return std::nullopt;
    for (auto& c : constraints) {
      double val = c.expr.eval(sv);
      if (!std::isfinite(val) || !c.holds(val, eps)) return std::nullopt;
    }
    std::array<double, 4> r;
    for (int k = 0; k < 4; ++k) {
      r[k] = x[k] - components[k].eval(sv);
      if (!std::isfinite(r[k])) return std::nullopt;
    }
    if (!has_sqrt()) {
      for (double rk : r)
        if (std::abs(rk) > eps) return std::nullopt;
      return v;
    }
    int k = 0;
    for (int j = 1; j < 4; ++j)
      if (std::abs(root_coef[j].get_d()) > std::abs(root_coef[k].get_d())) k = j;
    double g = r[k] / root_coef[k].get_d();
    double D = radicand.eval(sv);
    if (D < -eps || std::abs(g * g - D) > eps * std::max(1.0, std::abs(D)) * 10) return std::nullopt;
    for (int j = 0; j < 4; ++j)
      if (std::abs(r[j] - root_coef[j].get_d() * g) > eps) return std::nullopt;
    return v;
  }

  /// Family for y = x - shift (shift real).
  Family translated(const Scalar& shift) const {
    Family out = *this;
    out.components[0] -= Poly::constant(shift, nvars());
    for (auto& f : out.param_forms) f.constant += f.coef[0] * shift;
    if (out.root) out.root->form.constant += out.root->form.coef[0] * shift;
    return out;
  }

 private:
  static double poly_scale(const Poly& p, std::span<const double> v) {
    double s = 0;
    for (auto& [e, c] : p.terms()) {
      double t = std::abs(c.get_d());
      for (std::size_t i = 0; i < e.size(); ++i) t *= std::pow(std::abs(v[i]), e[i]);
      s = std::max(s, t);
    }
    return s;
  }

  bool constraints_hold(const std::vector<Scalar>& v) const {
    for (auto& c : constraints)
      if (!c.holds(c.expr.eval(std::span<const Scalar>(v)))) return false;
    return true;
  }
  bool constraints_hold(const std::vector<double>& v) const {
    for (auto& c : constraints) {
      double val = c.expr.eval(std::span<const double>(v));
      if (!std::isfinite(val) || !c.holds(val, 1e-12)) return false;
    }
    return true;
  }

  void evaluate_at(const std::vector<Scalar>& v, Realization& out) const {
    if (!constraints_hold(v)) return;
    SplitQuaternion base;
    for (int k = 0; k < 4; ++k) base[k] = components[k].eval(std::span<const Scalar>(v));
    if (!has_sqrt()) {
      out.exact.push_back(base);
      return;
    }
    Scalar D = radicand.eval(std::span<const Scalar>(v));
    if (sgn(D) < 0) return;
    SplitQuaternion dir{root_coef[0], root_coef[1], root_coef[2], root_coef[3]};
    if (auto s = rational_sqrt(D)) {
      out.exact.push_back(base + dir * *s);
      if (!is_zero(*s)) out.exact.push_back(base - dir * *s);
      return;
    }
    double s = std::sqrt(D.get_d());
    auto bf = to_float(base), df = to_float(dir);
    out.approx.push_back(bf + df * s);
    out.approx.push_back(bf - df * s);
  }

  void evaluate_semi(const std::vector<Scalar>& p, Realization& out) const {
    const std::size_t t = params.size();
    std::vector<Scalar> f;
    for (int k = 0; k <= root->poly.degree(t); ++k) {
      auto v = p;
      v.push_back(Scalar(0));
      f.push_back(root->poly.coefficient(t, k).eval(std::span<const Scalar>(v)));
    }
    RealPoly fp(f);
    if (fp.is_zero() || fp.degree() < 1) return;
    for (auto& r : real_roots(fp).real) {
      if (r.exact) {
        auto v = p;
        v.push_back(r.value);
        Realization one;
        try {
          evaluate_at(v, one);
        } catch (const error& e) {
          if (e.code() != errc::out_of_domain) throw;
        }
        out.exact.insert(out.exact.end(), one.exact.begin(), one.exact.end());
        out.approx.insert(out.approx.end(), one.approx.begin(), one.approx.end());
      } else {
        if (has_sqrt()) throw error(errc::unsupported, "semi-explicit family with a square-root term");
        std::vector<double> v;
        for (auto& s : p) v.push_back(s.get_d());
        v.push_back(r.approx);
        if (!constraints_hold(v)) continue;
        // Evaluate exactly at a refined rational T, then round.
        auto w = p;
        w.push_back(detail::refine_root(fp, r.approx));
        SplitQuaternionF x;
        for (int k = 0; k < 4; ++k) x[k] = components[k].eval(std::span<const Scalar>(w)).get_d();
        out.approx.push_back(x);
      }
    }
  }
};

/// Homogenized matrix H of a quadratic q(t) = (1, t)^T H (1, t), if q has
/// total degree <= 2 and no negative powers.
inline std::optional<Matrix<Scalar>> quadratic_matrix(const Poly& q, std::size_t nvars) {
  if (q.has_negative_exponent() || q.total_degree() > 2) return std::nullopt;
  Matrix<Scalar> H(nvars + 1, nvars + 1);
  for (auto& [e, c] : q.terms()) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) idx.push_back(i + 1);
    if (idx.empty()) {
      H(0, 0) += c;
    } else if (idx.size() == 1) {
      H(0, idx[0]) += c / 2;
      H(idx[0], 0) += c / 2;
    } else if (idx[0] == idx[1]) {
      H(idx[0], idx[0]) += c;
    } else {
      H(idx[0], idx[1]) += c / 2;
      H(idx[1], idx[0]) += c / 2;
    }
  }
  return H;
}

/// If sqrt(D) is (up to sign) a rational affine function L of the parameters,
/// returns L.
inline std::optional<Poly> affine_square_root(const Poly& D, std::size_t nvars) {
  if (D.is_zero()) return Poly(nvars);
  auto H = quadratic_matrix(D, nvars);
  if (!H || rank(*H) > 1) return std::nullopt;
  for (std::size_t i = 0; i < H->rows(); ++i) {
    if (sgn((*H)(i, i)) <= 0) continue;
    auto s = rational_sqrt((*H)(i, i));
    if (!s) return std::nullopt;
    std::vector<Scalar> v(nvars);
    for (std::size_t j = 0; j < nvars; ++j) v[j] = (*H)(j + 1, i) / *s;
    return affine_poly(v, (*H)(0, i) / *s);
  }
  return std::nullopt;  // negative semidefinite rank 1: not a square
}

/// Splits a square-root family whose radicand is a perfect square into one
/// or two polynomial families; other families are returned unchanged.
inline std::vector<Family> split_perfect_square(const Family& f) {
  if (!f.has_sqrt() || f.root) return {f};
  auto L = affine_square_root(f.radicand, f.nvars());
  if (!L) return {f};
  std::vector<Family> out;
  for (int sign : {1, -1}) {
    Family g = f;
    for (int k = 0; k < 4; ++k) {
      g.components[k] = f.components[k] + *L * (f.root_coef[k] * sign);
      g.root_coef[k] = 0;
    }
    g.radicand = Poly(f.nvars());
    std::erase_if(g.constraints, [&](const Constraint& c) { return c.rel == Relation::ge && c.expr == f.radicand; });
    out.push_back(std::move(g));
    if (L->is_zero()) break;
  }
  return out;
}

}  // namespace splitq
