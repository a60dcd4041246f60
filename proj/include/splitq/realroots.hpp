#pragma once

/// Real roots and quadratic divisors of rational polynomials of degree <= 4.
///
/// Everything that can be decided over Q is: squarefree decomposition (hence
/// multiplicities), rational roots, and the number of real roots of each
/// irrational factor (Sturm). Irrational roots are then located with the
/// closed-form quadratic / cubic / Ferrari formulas and polished by Newton.

#include <algorithm>
#include <cmath>
#include <complex>
#include <initializer_list>
#include <vector>

#include "splitq/scalar.hpp"

namespace splitq {

class RealPoly {
 public:
  RealPoly() = default;
  RealPoly(std::initializer_list<Scalar> low_to_high) : c_(low_to_high) { trim(); }
  explicit RealPoly(std::vector<Scalar> low_to_high) : c_(std::move(low_to_high)) { trim(); }

  static RealPoly monomial(const Scalar& coef, int power) {
    std::vector<Scalar> c(power + 1, Scalar(0));
    c[power] = coef;
    return RealPoly(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Scalar>& coeffs() const { return c_; }
  Scalar coeff(int k) const { return k >= 0 && k <= degree() ? c_[k] : Scalar(0); }
  Scalar lead() const { return c_.empty() ? Scalar(0) : c_.back(); }

  /// "2 x^3 - 1/2 x + 3", highest power first.
  std::string to_string(const std::string& var = "x") const {
    if (c_.empty()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
      if (splitq::is_zero(c_[k])) continue;
      Scalar a = abs(c_[k]);
      bool neg = sgn(c_[k]) < 0;
      out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
      std::string mono = k == 0 ? "" : k == 1 ? var : var + "^" + std::to_string(k);
      if (k == 0 || a != 1) out += splitq::to_string(a) + (mono.empty() ? "" : " ");
      out += mono;
    }
    return out;
  }

  Scalar eval(const Scalar& x) const {
    Scalar out(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) out = out * x + *it;
    return out;
  }
  double eval(double x) const {
    double out = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) out = out * x + it->get_d();
    return out;
  }
  std::complex<double> eval(std::complex<double> x) const {
    std::complex<double> out = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) out = out * x + it->get_d();
    return out;
  }

  RealPoly derivative() const {
    std::vector<Scalar> d;
    for (int k = 1; k <= degree(); ++k) d.push_back(c_[k] * k);
    return RealPoly(std::move(d));
  }

  RealPoly monic() const {
    if (is_zero()) return *this;
    RealPoly out = *this;
    Scalar l = lead();
    for (auto& v : out.c_) v /= l;
    return out;
  }

  double max_abs_coeff() const {
    double m = 0;
    for (auto& v : c_) m = std::max(m, std::abs(v.get_d()));
    return m;
  }

  friend RealPoly operator+(const RealPoly& a, const RealPoly& b) {
    std::vector<Scalar> c(std::max(a.c_.size(), b.c_.size()), Scalar(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return RealPoly(std::move(c));
  }
  friend RealPoly operator-(const RealPoly& a, const RealPoly& b) { return a + b * Scalar(-1); }
  friend RealPoly operator*(const RealPoly& a, const Scalar& s) {
    std::vector<Scalar> c = a.c_;
    for (auto& v : c) v *= s;
    return RealPoly(std::move(c));
  }
  friend RealPoly operator*(const RealPoly& a, const RealPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> c(a.c_.size() + b.c_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return RealPoly(std::move(c));
  }
  friend bool operator==(const RealPoly& a, const RealPoly& b) { return a.c_ == b.c_; }

  /// Euclidean division; returns {quotient, remainder}.
  std::pair<RealPoly, RealPoly> divmod(const RealPoly& d) const {
    if (d.is_zero()) throw error(errc::out_of_domain, "polynomial division by zero");
    std::vector<Scalar> r = c_;
    int dd = d.degree();
    std::vector<Scalar> q(std::max(0, degree() - dd + 1), Scalar(0));
    for (int k = degree(); k >= dd; --k) {
      Scalar f = r[k] / d.lead();
      q[k - dd] = f;
      if (splitq::is_zero(f)) continue;
      for (int i = 0; i <= dd; ++i) r[k - dd + i] -= f * d.c_[i];
    }
    r.resize(std::max(0, dd));
    return {RealPoly(std::move(q)), RealPoly(std::move(r))};
  }

 private:
  void trim() {
    while (!c_.empty() && splitq::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<Scalar> c_;
};

inline RealPoly gcd(RealPoly a, RealPoly b) {
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Yun's algorithm: returns q_1, q_2, ... with p = lead * prod q_i^i.
inline std::vector<RealPoly> squarefree_decomposition(const RealPoly& p) {
  std::vector<RealPoly> out;
  if (p.degree() < 1) return out;
  RealPoly f = p.monic();
  RealPoly a = gcd(f, f.derivative());
  RealPoly b = f.divmod(a).first;
  RealPoly c = f.derivative().divmod(a).first;
  RealPoly d = c - b.derivative();
  while (b.degree() >= 1) {
    RealPoly q = gcd(b, d);
    out.push_back(q);
    b = b.divmod(q).first;
    c = d.divmod(q).first;
    d = c - b.derivative();
  }
  return out;
}

/// Number of distinct real roots (Sturm sequence, exact).
inline int count_real_roots(const RealPoly& p) {
  if (p.degree() < 1) return 0;
  std::vector<RealPoly> seq{p, p.derivative()};
  while (!seq.back().is_zero()) {
    auto r = seq[seq.size() - 2].divmod(seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(r * Scalar(-1));
  }
  auto changes = [&](bool at_plus_inf) {
    int count = 0, prev = 0;
    for (auto& s : seq) {
      int sign = sgn(s.lead());
      if (!at_plus_inf && s.degree() % 2 == 1) sign = -sign;
      if (sign == 0) continue;
      if (prev != 0 && sign != prev) ++count;
      prev = sign;
    }
    return count;
  };
  return changes(false) - changes(true);
}

struct RealRoot {
  bool exact = false;
  Scalar value;        // meaningful when exact
  double approx = 0;   // always set
  int multiplicity = 1;
  int factor = -1;     // index into RootList::factors for irrational roots
};

/// A monic irreducible-over-Q quadratic factor x^2 - T x + N, recorded so that
/// its two roots (real or complex) still yield an exact divisor.
struct QuadraticFactor {
  Scalar T, N;
  int multiplicity = 1;
};

struct ComplexPair {
  bool exact = false;
  Scalar T, N;  // meaningful when exact
  double Tf = 0, Nf = 0;
  int multiplicity = 1;
};

struct RootList {
  std::vector<RealRoot> real;
  std::vector<ComplexPair> pairs;
  std::vector<QuadraticFactor> factors;

  int total_multiplicity() const {
    int n = 0;
    for (auto& r : real) n += r.multiplicity;
    for (auto& p : pairs) n += 2 * p.multiplicity;
    return n;
  }
};

namespace detail {

inline std::vector<std::complex<double>> solve_quadratic(double a, double b, double c) {
  using C = std::complex<double>;
  C disc = std::sqrt(C(b * b - 4 * a * c));
  // Avoid cancellation: q = -(b + sign(b) sqrt(disc)) / 2.
  C q = -0.5 * (C(b) + (b >= 0 ? disc : -disc));
  if (std::abs(q) == 0) return {C(0), C(0)};
  return {q / a, c / q};
}

inline std::vector<std::complex<double>> solve_cubic(double a, double b, double c, double d) {
  using C = std::complex<double>;
  b /= a, c /= a, d /= a;
  double p = c - b * b / 3, q = 2 * b * b * b / 27 - b * c / 3 + d;
  double shift = -b / 3;
  double disc = q * q / 4 + p * p * p / 27;
  std::vector<C> out;
  if (disc < 0) {
    double r = std::sqrt(-p / 3);
    double phi = std::acos(std::clamp(-q / (2 * r * r * r), -1.0, 1.0));
    for (int k = 0; k < 3; ++k) out.emplace_back(2 * r * std::cos((phi - 2 * M_PI * k) / 3) + shift);
  } else {
    double s = std::sqrt(disc);
    double u = std::cbrt(-q / 2 + s), v = std::cbrt(-q / 2 - s);
    C w(-0.5, std::sqrt(3.0) / 2);
    out.emplace_back(u + v + shift);
    out.push_back(w * u + std::conj(w) * v + shift);
    out.push_back(std::conj(w) * u + w * v + shift);
  }
  return out;
}

inline std::vector<std::complex<double>> solve_quartic(double a, double b, double c, double d, double e) {
  using C = std::complex<double>;
  b /= a, c /= a, d /= a, e /= a;
  // Depressed: y^4 + p y^2 + q y + r with x = y - b/4.
  double p = c - 3 * b * b / 8;
  double q = d - b * c / 2 + b * b * b / 8;
  double r = e - b * d / 4 + b * b * c / 16 - 3 * b * b * b * b / 256;
  double shift = -b / 4;
  std::vector<C> ys;
  if (std::abs(q) < 1e-14 * std::max({1.0, std::abs(p), std::abs(r)})) {
    for (C z : solve_quadratic(1, p, r)) {
      C s = std::sqrt(z);
      ys.push_back(s);
      ys.push_back(-s);
    }
  } else {
    // Resolvent 8m^3 + 8p m^2 + (2p^2 - 8r) m - q^2 = 0 has a positive root.
    double m = 0;
    for (C z : solve_cubic(8, 8 * p, 2 * p * p - 8 * r, -q * q))
      if (std::abs(z.imag()) < 1e-9 * std::max(1.0, std::abs(z.real()))) m = std::max(m, z.real());
    double s = std::sqrt(2 * m);
    for (int sign : {-1, 1}) {
      // y^2 + sign*s*y + (p/2 + m - sign*s*q/(4m))
      for (C z : solve_quadratic(1, sign * s, p / 2 + m - sign * s * q / (4 * m))) ys.push_back(z);
    }
  }
  std::vector<C> out;
  for (C y : ys) out.push_back(y + shift);
  return out;
}

inline std::complex<double> newton_polish(const RealPoly& p, std::complex<double> z) {
  RealPoly dp = p.derivative();
  for (int it = 0; it < 60; ++it) {
    auto f = p.eval(z);
    auto df = dp.eval(z);
    if (std::abs(df) == 0) break;
    auto step = f / df;
    auto next = z - step;
    if (std::abs(p.eval(next)) > std::abs(f)) break;
    z = next;
    if (std::abs(step) <= 1e-17 * std::max(1.0, std::abs(z))) break;
  }
  return z;
}

inline std::vector<std::complex<double>> float_roots(const RealPoly& p) {
  std::vector<std::complex<double>> z;
  const auto& c = p.coeffs();
  auto d = [&](int k) { return c[k].get_d(); };
  switch (p.degree()) {
    case 1: z = {-d(0) / d(1)}; break;
    case 2: z = solve_quadratic(d(2), d(1), d(0)); break;
    case 3: z = solve_cubic(d(3), d(2), d(1), d(0)); break;
    case 4: z = solve_quartic(d(4), d(3), d(2), d(1), d(0)); break;
    default: break;
  }
  for (auto& v : z) v = newton_polish(p, v);
  return z;
}

/// Newton in mpf from a float approximation of a real root. The
/// working precision grows with the coefficient size.
inline Scalar refine_root(const RealPoly& poly, double approx) {
  // Newton converges quadratically only on the squarefree part.
  RealPoly p{Scalar(1)};
  for (auto& part : squarefree_decomposition(poly)) p = p * part;
  std::size_t size = 0;
  for (auto& c : p.coeffs())
    size = std::max(size, mpz_sizeinbase(c.get_num_mpz_t(), 2) + mpz_sizeinbase(c.get_den_mpz_t(), 2));
  const mp_bitcnt_t bits = 160 + 4 * size;
  const RealPoly dp = p.derivative();
  auto ev = [&](const RealPoly& q, const mpf_class& x) {
    mpf_class r(0, bits);
    for (int k = q.degree(); k >= 0; --k) r = r * x + mpf_class(q.coeff(k), bits);
    return r;
  };
  mpf_class x(approx, bits), eps(1, bits);
  mpf_div_2exp(eps.get_mpf_t(), eps.get_mpf_t(), bits - 16);
  for (int it = 0; it < 100; ++it) {
    mpf_class df = ev(dp, x);
    if (df == 0) break;
    mpf_class step(ev(p, x) / df, bits);
    x -= step;
    if (abs(step) <= eps * std::max(mpf_class(1, bits), mpf_class(abs(x), bits))) break;
  }
  Scalar out;
  mpq_set_f(out.get_mpq_t(), x.get_mpf_t());
  return out;
}

/// Rational root near `approx`, if any: a rational root k/l of an integer
/// polynomial with leading coefficient l0 satisfies l0 * root in Z.
inline std::optional<Scalar> rational_root_near(const RealPoly& p, double approx) {
  if (!std::isfinite(approx)) return std::nullopt;
  mpz_class den = 1;
  for (auto& v : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
  mpz_class lead = abs(mpz_class(p.lead() * den));
  Scalar scaled = refine_root(p, approx) * lead + Scalar(1, 2);
  mpz_class base;
  mpz_fdiv_q(base.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  for (int off : {0, 1, -1}) {
    Scalar cand(mpz_class(base + off), lead);
    cand.canonicalize();
    if (is_zero(p.eval(cand))) return cand;
  }
  return std::nullopt;
}

}  // namespace detail

/// Roots of a squarefree-decomposed polynomial. Exact rational roots are
/// deflated out; irreducible quadratic leftovers are recorded as factors.
inline RootList real_roots(const RealPoly& p) {
  if (p.is_zero()) throw error(errc::identically_zero, "polynomial is identically zero");
  if (p.degree() > 4) throw error(errc::unsupported, "degree > 4 is not supported");
  RootList out;
  auto parts = squarefree_decomposition(p);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const int mult = static_cast<int>(i) + 1;
    RealPoly q = parts[i];
    // Peel off rational roots.
    bool found = true;
    while (found && q.degree() >= 1) {
      found = false;
      for (auto z : detail::float_roots(q)) {
        if (std::abs(z.imag()) > 1e-6 * std::max(1.0, std::abs(z.real()))) continue;
        if (auto r = detail::rational_root_near(q, z.real())) {
          out.real.push_back({true, *r, r->get_d(), mult, -1});
          q = q.divmod(RealPoly{Scalar(-*r), Scalar(1)}).first;
          found = true;
          break;
        }
      }
    }
    if (q.degree() < 1) continue;
    int factor = -1;
    if (q.degree() == 2) {
      auto m = q.monic();
      out.factors.push_back({Scalar(-m.coeff(1)), m.coeff(0), mult});
      factor = static_cast<int>(out.factors.size()) - 1;
    }
    // Sturm decides how many of the float roots are real.
    const int nreal = count_real_roots(q);
    auto z = detail::float_roots(q);
    std::stable_sort(z.begin(), z.end(), [](auto& u, auto& v) { return std::abs(u.imag()) < std::abs(v.imag()); });
    for (int k = 0; k < nreal; ++k) out.real.push_back({false, Scalar(0), z[k].real(), mult, factor});
    std::vector<std::complex<double>> upper;
    for (std::size_t k = nreal; k < z.size(); ++k)
      if (z[k].imag() > 0) upper.push_back(z[k]);
    // Pair leftovers by conjugation (imag sign can be lost for tiny parts).
    while (upper.size() * 2 < z.size() - nreal) upper.push_back(z[nreal + upper.size() * 2]);
    for (auto& w : upper) {
      ComplexPair cp;
      cp.Tf = 2 * w.real();
      cp.Nf = std::norm(w);
      cp.multiplicity = mult;
      if (factor >= 0) {
        cp.exact = true;
        cp.T = out.factors[factor].T;
        cp.N = out.factors[factor].N;
      }
      out.pairs.push_back(cp);
    }
  }
  std::stable_sort(out.real.begin(), out.real.end(), [](auto& a, auto& b) { return a.approx < b.approx; });
  return out;
}

struct QuadDivisor {
  bool exact = false;
  Scalar T, N;  // exact values when `exact`
  double Tf = 0, Nf = 0;
};

/// Every monic real quadratic x^2 - T x + N dividing p (degree 2 or 3),
/// respecting multiplicities.
inline std::vector<QuadDivisor> quadratic_divisors(const RealPoly& p) {
  if (p.is_zero()) throw error(errc::identically_zero, "polynomial is identically zero");
  std::vector<QuadDivisor> out;
  if (p.degree() < 2) return out;
  if (p.degree() > 3) throw error(errc::unsupported, "quadratic divisors need degree 2 or 3");
  auto roots = real_roots(p);
  auto& rs = roots.real;
  auto pair_of = [&](const RealRoot& u, const RealRoot& v, bool same) {
    QuadDivisor d;
    if (u.exact && v.exact) {
      d.exact = true;
      d.T = u.value + v.value;
      d.N = u.value * v.value;
    } else if (!same && u.factor >= 0 && u.factor == v.factor) {
      d.exact = true;
      d.T = roots.factors[u.factor].T;
      d.N = roots.factors[u.factor].N;
    }
    if (d.exact) {
      d.Tf = d.T.get_d();
      d.Nf = d.N.get_d();
    } else {
      d.Tf = u.approx + v.approx;
      d.Nf = u.approx * v.approx;
    }
    return d;
  };
  for (std::size_t i = 0; i < rs.size(); ++i) {
    if (rs[i].multiplicity >= 2) out.push_back(pair_of(rs[i], rs[i], true));
    for (std::size_t j = i + 1; j < rs.size(); ++j) out.push_back(pair_of(rs[i], rs[j], false));
  }
  for (auto& cp : roots.pairs) {
    QuadDivisor d;
    d.exact = cp.exact;
    d.T = cp.T;
    d.N = cp.N;
    d.Tf = cp.exact ? cp.T.get_d() : cp.Tf;
    d.Nf = cp.exact ? cp.N.get_d() : cp.Nf;
    out.push_back(d);
  }
  return out;
}

}  // namespace splitq
