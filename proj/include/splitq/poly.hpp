#pragma once

/// Sparse multivariate Laurent polynomials with rational coefficients, and the
/// prefix expression grammar used to print and read them back:
///
///   expr := rational | name | "(" op expr... ")"
///   op   := "+" | "-" | "*" | "/" | "^2" | "sqrt"
///
/// Division is only accepted by a single term (a monomial times a constant).

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "splitq/scalar.hpp"

namespace splitq {

class Poly {
 public:
  using Exponents = std::vector<int>;

  Poly() = default;
  explicit Poly(std::size_t nvars) : nvars_(nvars) {}

  static Poly constant(const Scalar& c, std::size_t nvars) {
    Poly p(nvars);
    if (!splitq::is_zero(c)) p.terms_[Exponents(nvars, 0)] = c;
    return p;
  }
  static Poly var(std::size_t index, std::size_t nvars) {
    Poly p(nvars);
    Exponents e(nvars, 0);
    e.at(index) = 1;
    p.terms_[e] = 1;
    return p;
  }
  static Poly monomial(const Scalar& c, Exponents e) {
    Poly p(e.size());
    if (!splitq::is_zero(c)) p.terms_[std::move(e)] = c;
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  const std::map<Exponents, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && is_zero_exp(terms_.begin()->first));
  }
  Scalar constant_term() const {
    auto it = terms_.find(Exponents(nvars_, 0));
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  int degree(std::size_t var) const {
    int d = 0;
    for (auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
  }
  int total_degree() const {
    int d = 0;
    for (auto& [e, c] : terms_) {
      int s = 0;
      for (int v : e) s += v;
      d = std::max(d, s);
    }
    return d;
  }
  bool has_negative_exponent() const {
    for (auto& [e, c] : terms_)
      for (int v : e)
        if (v < 0) return true;
    return false;
  }

  /// Coefficient of var^power as a polynomial in the remaining variables
  /// (the variable count is kept; var's exponent becomes 0).
  Poly coefficient(std::size_t var, int power) const {
    Poly out(nvars_);
    for (auto& [e, c] : terms_) {
      if (e[var] != power) continue;
      Exponents f = e;
      f[var] = 0;
      out.terms_[f] += c;
    }
    out.prune();
    return out;
  }

  Poly& operator+=(const Poly& o) {
    adopt_width(o);
    for (auto& [e, c] : o.terms_) terms_[e] += c;
    prune();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    adopt_width(o);
    for (auto& [e, c] : o.terms_) terms_[e] -= c;
    prune();
    return *this;
  }
  Poly& operator*=(const Scalar& s) {
    if (splitq::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) { return a *= Scalar(-1); }
  friend Poly operator*(Poly a, const Scalar& s) { return a *= s; }
  friend Poly operator*(const Scalar& s, Poly a) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly out(std::max(a.nvars_, b.nvars_));
    for (auto& [ea, ca] : a.terms_)
      for (auto& [eb, cb] : b.terms_) {
        Exponents e(out.nvars_, 0);
        for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
        for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
        out.terms_[e] += ca * cb;
      }
    out.prune();
    return out;
  }
  friend bool operator==(const Poly& a, const Poly& b) { return (a - b).is_zero(); }

  Poly pow(unsigned n) const {
    Poly out = constant(1, nvars_);
    for (unsigned i = 0; i < n; ++i) out = out * *this;
    return out;
  }

  /// Single-term inverse (Laurent); throws unless the polynomial is one term.
  Poly monomial_inverse() const {
    if (terms_.size() != 1) throw error(errc::parse, "division by a non-monomial expression");
    auto& [e, c] = *terms_.begin();
    Exponents f = e;
    for (auto& v : f) v = -v;
    return monomial(Scalar(1) / c, f);
  }

  /// Exact evaluation; throws out_of_domain when a negative power meets 0.
  Scalar eval(std::span<const Scalar> x) const {
    Scalar out(0);
    for (auto& [e, c] : terms_) {
      Scalar t = c;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (e[i] < 0 && splitq::is_zero(x[i])) throw error(errc::out_of_domain, "division by zero parameter");
        Scalar base = e[i] > 0 ? x[i] : Scalar(1 / x[i]);
        for (int k = 0; k < std::abs(e[i]); ++k) t *= base;
      }
      out += t;
    }
    return out;
  }

  double eval(std::span<const double> x) const {
    double out = 0;
    for (auto& [e, c] : terms_) {
      double t = c.get_d();
      for (std::size_t i = 0; i < e.size(); ++i) {
        for (int k = 0; k < std::abs(e[i]); ++k) t = e[i] > 0 ? t * x[i] : t / x[i];
      }
      out += t;
    }
    return out;
  }

  /// Prefix-grammar rendering with the given variable names.
  std::string to_prefix(std::span<const std::string> names) const;

 private:
  static bool is_zero_exp(const Exponents& e) {
    for (int v : e)
      if (v != 0) return false;
    return true;
  }
  void adopt_width(const Poly& o) {
    if (o.nvars_ <= nvars_) return;
    std::map<Exponents, Scalar> widened;
    for (auto& [e, c] : terms_) {
      Exponents f = e;
      f.resize(o.nvars_, 0);
      widened[f] = c;
    }
    terms_ = std::move(widened);
    nvars_ = o.nvars_;
  }
  void prune() {
    for (auto it = terms_.begin(); it != terms_.end();)
      it = splitq::is_zero(it->second) ? terms_.erase(it) : std::next(it);
  }

  std::size_t nvars_ = 0;
  std::map<Exponents, Scalar> terms_;
};

/// Substitutes subs[i] for variable i; every subs[i] lives in `out_nvars`
/// variables. Negative powers need a single-term substitute.
inline Poly compose(const Poly& p, std::span<const Poly> subs, std::size_t out_nvars) {
  Poly out(out_nvars);
  for (auto& [e, c] : p.terms()) {
    Poly t = Poly::constant(c, out_nvars);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] > 0) t = t * subs[i].pow(e[i]);
      if (e[i] < 0) t = t * subs[i].monomial_inverse().pow(-e[i]);
    }
    out += t;
  }
  return out;
}

/// Affine polynomial sum(coef[i] * var_i) + constant.
inline Poly affine_poly(std::span<const Scalar> coef, const Scalar& constant) {
  Poly out = Poly::constant(constant, coef.size());
  for (std::size_t i = 0; i < coef.size(); ++i) out += Poly::var(i, coef.size()) * coef[i];
  return out;
}

namespace detail {

inline std::string power_expr(const std::string& name, int n) {
  if (n == 1) return name;
  if (n == 2) return "(^2 " + name + ")";
  std::string half = power_expr(name, n / 2);
  std::string sq = "(^2 " + half + ")";
  return n % 2 ? "(* " + name + " " + sq + ")" : sq;
}

}  // namespace detail

inline std::string Poly::to_prefix(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::vector<std::string> parts;
  // Highest total degree first reads naturally.
  std::vector<std::pair<Exponents, Scalar>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](auto& a, auto& b) {
    int da = 0, db = 0;
    for (int v : a.first) da += v;
    for (int v : b.first) db += v;
    return da > db;
  });
  for (auto& [e, c] : ordered) {
    std::vector<std::string> num, den;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] > 0) num.push_back(detail::power_expr(names[i], e[i]));
      if (e[i] < 0) den.push_back(detail::power_expr(names[i], -e[i]));
    }
    std::string term;
    if (num.empty()) {
      term = to_string(c);
    } else {
      std::vector<std::string> factors;
      if (c != 1) factors.push_back(to_string(c));
      factors.insert(factors.end(), num.begin(), num.end());
      if (factors.size() == 1) {
        term = factors[0];
      } else {
        term = "(*";
        for (auto& f : factors) term += " " + f;
        term += ")";
      }
    }
    if (!den.empty()) {
      std::string d = den.size() == 1 ? den[0] : "(*";
      if (den.size() > 1) {
        for (auto& f : den) d += " " + f;
        d += ")";
      }
      term = "(/ " + term + " " + d + ")";
    }
    parts.push_back(term);
  }
  if (parts.size() == 1) return parts[0];
  std::string out = "(+";
  for (auto& p : parts) out += " " + p;
  return out + ")";
}

/// Reads a prefix expression into a Poly over `names`. `(sqrt E)` is handed
/// to `on_sqrt`, which returns the polynomial standing for the root.
class PrefixParser {
 public:
  using SqrtHook = std::function<Poly(const Poly&)>;

  PrefixParser(std::vector<std::string> names, SqrtHook on_sqrt = {})
      : names_(std::move(names)), on_sqrt_(std::move(on_sqrt)) {}

  Poly parse(std::string_view text) {
    text_ = text;
    pos_ = 0;
    Poly p = expr();
    skip_ws();
    if (pos_ != text_.size()) throw fail("trailing input");
    return p;
  }

 private:
  error fail(const std::string& why) const {
    return error(errc::parse, "bad expression \"" + std::string(text_) + "\" at " + std::to_string(pos_) + ": " + why);
  }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  std::string_view atom() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) && text_[pos_] != '(' &&
           text_[pos_] != ')')
      ++pos_;
    if (start == pos_) throw fail("expected a token");
    return text_.substr(start, pos_ - start);
  }

  Poly expr() {
    skip_ws();
    if (pos_ >= text_.size()) throw fail("unexpected end");
    if (text_[pos_] != '(') {
      auto tok = atom();
      for (std::size_t i = 0; i < names_.size(); ++i)
        if (tok == names_[i]) return Poly::var(i, names_.size());
      return Poly::constant(parse_scalar(tok), names_.size());
    }
    ++pos_;
    std::string op(atom());
    std::vector<Poly> args;
    while (true) {
      skip_ws();
      if (pos_ >= text_.size()) throw fail("missing ')'");
      if (text_[pos_] == ')') {
        ++pos_;
        break;
      }
      args.push_back(expr());
    }
    auto need = [&](std::size_t n) {
      if (args.size() != n) throw fail("operator " + op + " takes " + std::to_string(n) + " argument(s)");
    };
    if (op == "+") {
      Poly out(names_.size());
      for (auto& a : args) out += a;
      return out;
    }
    if (op == "-") {
      if (args.empty()) throw fail("'-' needs arguments");
      if (args.size() == 1) return -args[0];
      Poly out = args[0];
      for (std::size_t i = 1; i < args.size(); ++i) out -= args[i];
      return out;
    }
    if (op == "*") {
      Poly out = Poly::constant(1, names_.size());
      for (auto& a : args) out = out * a;
      return out;
    }
    if (op == "/") {
      need(2);
      return args[0] * args[1].monomial_inverse();
    }
    if (op == "^2") {
      need(1);
      return args[0] * args[0];
    }
    if (op == "sqrt") {
      need(1);
      if (!on_sqrt_) throw fail("sqrt not allowed here");
      return on_sqrt_(args[0]);
    }
    throw fail("unknown operator " + op);
  }

  std::vector<std::string> names_;
  SqrtHook on_sqrt_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace splitq
