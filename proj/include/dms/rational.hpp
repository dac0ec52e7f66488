#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace dms {

// Exact rational arithmetic for the closed-form layer. Numerator/denominator
// are kept reduced with den > 0; intermediate products go through __int128 and
// overflow past 64 bits throws instead of wrapping.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(std::int64_t n) : num_(n), den_(1) {}
  Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) throw std::invalid_argument("Rational: zero denominator");
    normalize(n, d);
  }

  static Rational from_int128(__int128 n, __int128 d) {
    if (d == 0) throw std::invalid_argument("Rational: zero denominator");
    if (d < 0) { n = -n; d = -d; }
    __int128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) { n /= g; d /= g; }
    return Rational(checked_cast(n), checked_cast(d));
  }

  // Exact conversion: every finite double is a dyadic rational.
  static Rational from_double(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("Rational: non-finite value");
    int exp = 0;
    double m = std::frexp(x, &exp);  // x = m * 2^exp, |m| in [0.5, 1)
    for (int i = 0; i < 64 && m != std::floor(m); ++i) { m *= 2.0; --exp; }
    auto n = static_cast<std::int64_t>(m);
    if (exp >= 0) {
      if (exp > 62) throw std::overflow_error("Rational: double too large");
      return Rational(n * (std::int64_t(1) << exp));
    }
    if (exp < -62) {
      // Fold sub-2^-62 tails away; they are below any tolerance used here.
      return Rational(0);
    }
    return Rational(n, std::int64_t(1) << -exp);
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  bool is_zero() const { return num_ == 0; }
  bool is_negative() const { return num_ < 0; }

  Rational operator-() const { return Rational(-num_, den_); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return from_int128((__int128)a.num_ * b.den_ + (__int128)b.num_ * a.den_,
                       (__int128)a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return from_int128((__int128)a.num_ * b.num_, (__int128)a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::invalid_argument("Rational: division by zero");
    return from_int128((__int128)a.num_ * b.den_, (__int128)a.den_ * b.num_);
  }

  Rational& operator+=(const Rational& o) { *this = *this + o; return *this; }
  Rational& operator-=(const Rational& o) { *this = *this - o; return *this; }
  Rational& operator*=(const Rational& o) { *this = *this * o; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return (__int128)a.num_ * b.den_ < (__int128)b.num_ * a.den_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  void normalize(std::int64_t n, std::int64_t d) {
    if (d < 0) { n = -n; d = -d; }
    std::int64_t g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) { n /= g; d /= g; }
    num_ = n;
    den_ = d;
  }

  static __int128 gcd128(__int128 a, __int128 b) {
    while (b != 0) { __int128 t = a % b; a = b; b = t; }
    return a < 0 ? -a : a;
  }

  static std::int64_t checked_cast(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("Rational: 64-bit overflow");
    return static_cast<std::int64_t>(v);
  }

  std::int64_t num_;
  std::int64_t den_;
};

// Complex number with exact rational components; enough arithmetic for the
// closed diffraction formulas (|z|^2 stays rational).
struct RationalComplex {
  Rational re;
  Rational im;

  RationalComplex() = default;
  RationalComplex(Rational r) : re(r) {}
  RationalComplex(Rational r, Rational i) : re(r), im(i) {}

  Rational norm_sq() const { return re * re + im * im; }
  RationalComplex conj() const { return {re, -im}; }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }

  friend RationalComplex operator+(const RationalComplex& a, const RationalComplex& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend RationalComplex operator-(const RationalComplex& a, const RationalComplex& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend RationalComplex operator*(const RationalComplex& a, const RationalComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend RationalComplex operator*(const Rational& s, const RationalComplex& z) {
    return {s * z.re, s * z.im};
  }
  friend bool operator==(const RationalComplex& a, const RationalComplex& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const RationalComplex& a, const RationalComplex& b) { return !(a == b); }

  std::string str() const {
    if (im.is_zero()) return re.str();
    std::string s = re.str();
    s += im.is_negative() ? "-" : "+";
    Rational ai = im.is_negative() ? -im : im;
    s += ai.str() + "i";
    return s;
  }
};

// Parses "p/q" or a plain/decimal literal ("-1", "0.25") into an exact value.
Rational parse_rational(const std::string& text);

// Parses "a", "bi", "a+bi", "a-bi" where each component is decimal or p/q.
RationalComplex parse_rational_complex(const std::string& text);

}  // namespace dms
