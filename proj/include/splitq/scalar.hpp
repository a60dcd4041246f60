#pragma once

/// Exact rational scalars and the error type shared by the whole library.

#include <gmpxx.h>

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace splitq {

using Scalar = mpq_class;

enum class errc {
  parse,
  not_invertible,
  not_zero_divisor,
  not_normalized,
  wrong_branch,
  identically_zero,
  unsupported,
  out_of_domain,
};

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

inline bool is_zero(const Scalar& v) { return sgn(v) == 0; }
inline bool is_zero(double v) { return v == 0.0; }

/// Pivot test for elimination: exact for rationals, absolute 1e-10 for doubles.
inline bool negligible(const Scalar& v) { return sgn(v) == 0; }
inline bool negligible(double v) { return std::abs(v) < 1e-10; }

inline double to_double(const Scalar& v) { return v.get_d(); }
inline double to_double(double v) { return v; }

/// Canonical text: "p" for integers, "p/q" otherwise (q > 0, reduced).
inline std::string to_string(const Scalar& v) { return v.get_str(); }

namespace detail {

inline bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\n')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n')) s.remove_suffix(1);
  return s;
}

}  // namespace detail

/// Parses "p", "p/q" or a finite decimal such as "-0.25". Decimals are
/// converted exactly. Rejects zero denominators and anything else.
inline Scalar parse_scalar(std::string_view text) {
  std::string_view s = detail::trim(text);
  std::string_view body = s;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto fail = [&](const char* why) -> error {
    return error(errc::parse, "invalid rational \"" + std::string(text) + "\": " + why);
  };
  Scalar out;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (!detail::is_digits(num) || !detail::is_digits(den)) throw fail("expected p/q");
    mpz_class n(std::string(num), 10), d(std::string(den), 10);
    if (d == 0) throw fail("zero denominator");
    out = Scalar(n, d);
    out.canonicalize();
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto ip = body.substr(0, dot);
    auto fp = body.substr(dot + 1);
    if ((ip.empty() && fp.empty()) || (!ip.empty() && !detail::is_digits(ip)) ||
        (!fp.empty() && !detail::is_digits(fp)))
      throw fail("malformed decimal");
    mpz_class n(std::string(ip.empty() ? "0" : ip) + std::string(fp), 10);
    mpz_class d;
    mpz_ui_pow_ui(d.get_mpz_t(), 10, fp.size());
    out = Scalar(n, d);
    out.canonicalize();
  } else {
    if (!detail::is_digits(body)) throw fail("expected an integer or p/q");
    out = Scalar(mpz_class(std::string(body), 10));
  }
  return negative ? Scalar(-out) : out;
}

/// Exact square root when v is the square of a rational.
inline std::optional<Scalar> rational_sqrt(const Scalar& v) {
  if (sgn(v) < 0) return std::nullopt;
  if (sgn(v) == 0) return Scalar(0);
  if (!mpz_perfect_square_p(v.get_num_mpz_t()) || !mpz_perfect_square_p(v.get_den_mpz_t()))
    return std::nullopt;
  mpz_class n, d;
  mpz_sqrt(n.get_mpz_t(), v.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), v.get_den_mpz_t());
  Scalar r(n, d);
  r.canonicalize();
  return r;
}

/// Exact conversion of a finite double.
inline Scalar from_double(double v) {
  if (!std::isfinite(v)) throw error(errc::parse, "non-finite value");
  return Scalar(v);
}

}  // namespace splitq
