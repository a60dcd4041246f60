#pragma once

/// Split quaternions x = x0 + x1 i + x2 j + x3 k with i^2 = -1, j^2 = k^2 = 1.
///
/// The element type is a template parameter: `SplitQuaternion` is the exact
/// rational algebra every branch decision is made in, `SplitQuaternionF` is the
/// double-precision mirror used for floating roots and reporting.

#include <array>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <string_view>

#include "splitq/scalar.hpp"

namespace splitq {

template <class T>
struct BasicQuaternion {
  std::array<T, 4> c{T(0), T(0), T(0), T(0)};

  BasicQuaternion() = default;
  BasicQuaternion(T x0, T x1, T x2, T x3) : c{std::move(x0), std::move(x1), std::move(x2), std::move(x3)} {}
  // Real scalars embed as x0.
  BasicQuaternion(T x0) : c{std::move(x0), T(0), T(0), T(0)} {}  // NOLINT(google-explicit-constructor)
  BasicQuaternion(int x0) : c{T(x0), T(0), T(0), T(0)} {}        // NOLINT(google-explicit-constructor)

  T& operator[](std::size_t i) { return c[i]; }
  const T& operator[](std::size_t i) const { return c[i]; }

  static BasicQuaternion unit(std::size_t i) {
    BasicQuaternion q;
    q.c[i] = T(1);
    return q;
  }

  bool is_zero() const {
    for (const auto& v : c)
      if (!splitq::is_zero(v)) return false;
    return true;
  }

  friend bool operator==(const BasicQuaternion& x, const BasicQuaternion& y) {
    for (int i = 0; i < 4; ++i)
      if (!(x.c[i] == y.c[i])) return false;
    return true;
  }
  friend bool operator!=(const BasicQuaternion& x, const BasicQuaternion& y) { return !(x == y); }

  BasicQuaternion& operator+=(const BasicQuaternion& o) {
    for (int i = 0; i < 4; ++i) c[i] += o.c[i];
    return *this;
  }
  BasicQuaternion& operator-=(const BasicQuaternion& o) {
    for (int i = 0; i < 4; ++i) c[i] -= o.c[i];
    return *this;
  }
  BasicQuaternion& operator*=(const T& s) {
    for (auto& v : c) v *= s;
    return *this;
  }
  BasicQuaternion& operator/=(const T& s) {
    for (auto& v : c) v /= s;
    return *this;
  }

  friend BasicQuaternion operator+(BasicQuaternion x, const BasicQuaternion& y) { return x += y; }
  friend BasicQuaternion operator-(BasicQuaternion x, const BasicQuaternion& y) { return x -= y; }
  friend BasicQuaternion operator-(BasicQuaternion x) {
    for (auto& v : x.c) v = -v;
    return x;
  }
  friend BasicQuaternion operator*(BasicQuaternion x, const T& s) { return x *= s; }
  friend BasicQuaternion operator*(const T& s, BasicQuaternion x) { return x *= s; }
  friend BasicQuaternion operator/(BasicQuaternion x, const T& s) { return x /= s; }

  // Product table of the split quaternions:
  //   ij = k, jk = -i, ki = j, ji = -k, kj = i, ik = -j, i^2 = -1, j^2 = k^2 = 1.
  friend BasicQuaternion operator*(const BasicQuaternion& x, const BasicQuaternion& y) {
    const auto& a = x.c;
    const auto& b = y.c;
    return {T(a[0] * b[0] - a[1] * b[1] + a[2] * b[2] + a[3] * b[3]),
            T(a[0] * b[1] + a[1] * b[0] - a[2] * b[3] + a[3] * b[2]),
            T(a[0] * b[2] + a[2] * b[0] - a[1] * b[3] + a[3] * b[1]),
            T(a[0] * b[3] + a[3] * b[0] + a[1] * b[2] - a[2] * b[1])};
  }
};

using SplitQuaternion = BasicQuaternion<Scalar>;
using SplitQuaternionF = BasicQuaternion<double>;

template <class T>
BasicQuaternion<T> conj(const BasicQuaternion<T>& x) {
  return {x[0], T(-x[1]), T(-x[2]), T(-x[3])};
}

template <class T>
T re(const BasicQuaternion<T>& x) {
  return x[0];
}

template <class T>
BasicQuaternion<T> im(const BasicQuaternion<T>& x) {
  return {T(0), x[1], x[2], x[3]};
}

/// The indefinite form I_x = conj(x) x = x0^2 + x1^2 - x2^2 - x3^2.
template <class T>
T qform(const BasicQuaternion<T>& x) {
  return T(x[0] * x[0] + x[1] * x[1] - x[2] * x[2] - x[3] * x[3]);
}

/// <x, y> = x0 y0 + x1 y1 - x2 y2 - x3 y3 = re(conj(y) x).
template <class T>
T inner(const BasicQuaternion<T>& x, const BasicQuaternion<T>& y) {
  return T(x[0] * y[0] + x[1] * y[1] - x[2] * y[2] - x[3] * y[3]);
}

enum class Kind { zero, zero_divisor, invertible };

inline const char* to_string(Kind k) {
  switch (k) {
    case Kind::zero: return "Zero";
    case Kind::zero_divisor: return "ZeroDivisor";
    case Kind::invertible: return "Invertible";
  }
  return "?";
}

inline Kind classify(const SplitQuaternion& x) {
  if (x.is_zero()) return Kind::zero;
  return is_zero(qform(x)) ? Kind::zero_divisor : Kind::invertible;
}

/// Floating classification; |I_x| below rel_tol * sum(x_i^2) counts as zero.
inline Kind classify(const SplitQuaternionF& x, double rel_tol = 1e-12) {
  double scale = 0;
  for (double v : x.c) scale += v * v;
  if (scale == 0) return Kind::zero;
  return std::abs(qform(x)) <= rel_tol * scale ? Kind::zero_divisor : Kind::invertible;
}

template <class T>
BasicQuaternion<T> inverse(const BasicQuaternion<T>& x) {
  if (classify(x) != Kind::invertible)
    throw error(errc::not_invertible, "split quaternion is not invertible (I_x = 0)");
  return conj(x) / qform(x);
}

/// Moore-Penrose inverse. For a nonzero zero divisor a = t1 + t2 j
/// (t1 = x0 + x1 i, t2 = x2 + x3 i) it is (conj(t1) + t2 j) / (4 |t1|^2).
template <class T>
BasicQuaternion<T> pinv(const BasicQuaternion<T>& x) {
  switch (classify(x)) {
    case Kind::zero: return {};
    case Kind::invertible: return conj(x) / qform(x);
    case Kind::zero_divisor: {
      T t1_norm = x[0] * x[0] + x[1] * x[1];
      BasicQuaternion<T> num{x[0], T(-x[1]), x[2], x[3]};
      return num / T(4 * t1_norm);
    }
  }
  return {};
}

inline SplitQuaternionF to_float(const SplitQuaternion& x) {
  return {x[0].get_d(), x[1].get_d(), x[2].get_d(), x[3].get_d()};
}

// ---- text form ------------------------------------------------------------

namespace detail {

inline void append_term(std::string& out, const std::string& value, const char* unit, bool first) {
  bool neg = !value.empty() && value.front() == '-';
  std::string mag = neg ? value.substr(1) : value;
  if (first) {
    out += neg ? "-" + mag : mag;
  } else {
    out += neg ? " - " : " + ";
    out += mag;
  }
  if (*unit) {
    out += ' ';
    out += unit;
  }
}

inline std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace detail

/// Canonical text "x0 + x1 i + x2 j + x3 k"; every component is printed.
inline std::string to_string(const SplitQuaternion& x) {
  static const char* units[4] = {"", "i", "j", "k"};
  std::string out;
  for (int i = 0; i < 4; ++i) detail::append_term(out, to_string(x[i]), units[i], i == 0);
  return out;
}

inline std::string to_string(const SplitQuaternionF& x) {
  static const char* units[4] = {"", "i", "j", "k"};
  std::string out;
  for (int i = 0; i < 4; ++i) detail::append_term(out, detail::format_double(x[i]), units[i], i == 0);
  return out;
}

/// Compact form that drops zero components and unit coefficients ("-1/2 + i + k").
inline std::string to_pretty(const SplitQuaternion& x) {
  static const char* units[4] = {"", "i", "j", "k"};
  std::string out;
  for (int i = 0; i < 4; ++i) {
    if (is_zero(x[i])) continue;
    std::string v = to_string(x[i]);
    bool neg = v.front() == '-';
    std::string mag = neg ? v.substr(1) : v;
    if (i > 0 && mag == "1") mag.clear();
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    out += mag;
    if (i > 0) out += (mag.empty() ? "" : " ") + std::string(units[i]);
  }
  return out.empty() ? "0" : out;
}

inline std::ostream& operator<<(std::ostream& os, const SplitQuaternion& x) { return os << to_string(x); }
inline std::ostream& operator<<(std::ostream& os, const SplitQuaternionF& x) { return os << to_string(x); }

/// Parses sums of terms such as "1 - 2i + 3/4 j + k", "-1/2+i+k" or "0.5 k".
/// Each term is an optional sign, an optional rational coefficient, an
/// optional '*', and an optional unit among i, j, k.
inline SplitQuaternion parse_quaternion(std::string_view text) {
  SplitQuaternion out;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& why) {
    return error(errc::parse, "invalid split quaternion \"" + std::string(text) + "\": " + why);
  };
  skip_ws();
  if (pos == text.size()) throw fail("empty");
  bool first = true;
  while (true) {
    skip_ws();
    if (pos == text.size()) break;
    bool neg = false;
    if (text[pos] == '+' || text[pos] == '-') {
      neg = text[pos] == '-';
      ++pos;
      skip_ws();
    } else if (!first) {
      throw fail("expected '+' or '-'");
    }
    std::size_t start = pos;
    while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/' ||
                                 text[pos] == '.'))
      ++pos;
    Scalar coef(1);
    if (pos > start) coef = parse_scalar(text.substr(start, pos - start));
    skip_ws();
    if (pos < text.size() && text[pos] == '*') {
      ++pos;
      skip_ws();
    }
    int unit = 0;
    if (pos < text.size() && (text[pos] == 'i' || text[pos] == 'j' || text[pos] == 'k')) {
      unit = 1 + (text[pos] - 'i');
      ++pos;
    } else if (pos == start) {
      throw fail("expected a coefficient or unit");
    }
    if (neg) coef = -coef;
    out[unit] += coef;
    first = false;
  }
  return out;
}

}  // namespace splitq
