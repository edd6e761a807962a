#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ndga/error.hpp"

namespace ndga {

using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline int sign(const Rational& q) { return sgn(q); }

// a + b i with a, b rational
class GaussianRational {
 public:
  GaussianRational() : re_(0), im_(0) {}
  GaussianRational(int v) : re_(v), im_(0) {}
  GaussianRational(long v) : re_(v), im_(0) {}
  GaussianRational(Rational re) : re_(std::move(re)), im_(0) {}
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    if (o.is_real()) {
      re_ *= o.re_;
      im_ *= o.re_;
      return *this;
    }
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational s = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(s);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

  GaussianRational operator-() const { return {Rational(-re_), Rational(-im_)}; }

  GaussianRational inverse() const {
    Rational n = re_ * re_ + im_ * im_;
    if (sgn(n) == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    return {Rational(re_ / n), Rational(-im_ / n)};
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  std::string to_string() const;
  static GaussianRational parse(std::string_view s);

 private:
  Rational re_;
  Rational im_;
};

using GR = GaussianRational;

inline GR conj(const GR& z) { return {z.re(), Rational(-z.im())}; }
inline Rational abs2(const GR& z) { return z.re() * z.re() + z.im() * z.im(); }

inline std::string GaussianRational::to_string() const {
  if (sgn(im_) == 0) return re_.get_str();
  std::string imag;
  if (im_ == 1)
    imag = "i";
  else if (im_ == -1)
    imag = "-i";
  else
    imag = im_.get_str() + "i";
  if (sgn(re_) == 0) return imag;
  if (imag[0] == '-') return re_.get_str() + imag;
  return re_.get_str() + "+" + imag;
}

inline std::ostream& operator<<(std::ostream& os, const GR& z) { return os << z.to_string(); }

namespace detail {

inline bool parse_unsigned_rational(std::string_view s, size_t& pos, Rational& out) {
  size_t start = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos == start) return false;
  std::string text(s.substr(start, pos - start));
  if (pos < s.size() && s[pos] == '/') {
    size_t dstart = ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == dstart) throw Error(ErrorCode::SyntaxError, "missing denominator", pos);
    std::string den(s.substr(dstart, pos - dstart));
    mpz_class d(den);
    if (d == 0) throw Error(ErrorCode::SyntaxError, "zero denominator", dstart);
    out = Rational(mpz_class(text), d);
    out.canonicalize();
    return true;
  }
  out = Rational(mpz_class(text));
  return true;
}

}  // namespace detail

// accepts "3", "-1/2", "2i", "-i", "1+2i", "1/2-3/4i", surrounding blanks ignored
inline GaussianRational GaussianRational::parse(std::string_view raw) {
  size_t b = raw.find_first_not_of(" \t\n");
  size_t e = raw.find_last_not_of(" \t\n");
  if (b == std::string_view::npos) throw Error(ErrorCode::SyntaxError, "empty number", 0);
  std::string_view s = raw.substr(b, e - b + 1);
  size_t pos = 0;
  GR result;
  bool any = false;
  while (pos < s.size()) {
    int sg = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sg = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (any) {
      throw Error(ErrorCode::SyntaxError, "expected sign", pos + b);
    }
    Rational mag(1);
    bool has_mag = detail::parse_unsigned_rational(s, pos, mag);
    bool imag = pos < s.size() && s[pos] == 'i';
    if (imag) ++pos;
    if (!has_mag && !imag) throw Error(ErrorCode::SyntaxError, "expected number", pos + b);
    if (sg < 0) mag = -mag;
    if (imag)
      result += GR(Rational(0), mag);
    else
      result += GR(mag);
    any = true;
  }
  return result;
}

inline GR gr(long re, long im = 0) { return {Rational(re), Rational(im)}; }
inline GR gr_q(long num, long den) { return GR(make_rational(num, den)); }

struct ApproxComplex {
  double re = 0;
  double im = 0;
  double tol = 1e-9;
};

inline bool approx_eq(const ApproxComplex& x, const ApproxComplex& y) {
  return std::fabs(x.re - y.re) < x.tol && std::fabs(x.im - y.im) < x.tol;
}

inline ApproxComplex to_approx(const GR& z, double tol = 1e-9) {
  return {z.re().get_d(), z.im().get_d(), tol};
}

// small random Gaussian rationals for sampling
class ScalarSampler {
 public:
  explicit ScalarSampler(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& engine() { return rng_; }

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  long nonzero_integer(long bound) {
    long v = 0;
    while (v == 0) v = integer(-bound, bound);
    return v;
  }

  Rational rational(long num_bound = 6, long den_bound = 4) {
    return make_rational(integer(-num_bound, num_bound), integer(1, den_bound));
  }

  Rational nonzero_rational(long num_bound = 6, long den_bound = 4) {
    return make_rational(nonzero_integer(num_bound), integer(1, den_bound));
  }

  Rational positive_rational(long num_bound = 6, long den_bound = 4) {
    return make_rational(integer(1, num_bound), integer(1, den_bound));
  }

  GR gaussian(long num_bound = 6, long den_bound = 4) {
    return {rational(num_bound, den_bound), rational(num_bound, den_bound)};
  }

  GR nonzero_gaussian(long num_bound = 6, long den_bound = 4) {
    GR z;
    while (z.is_zero()) z = gaussian(num_bound, den_bound);
    return z;
  }

  // (p^2 - q^2 + 2pq i) / (p^2 + q^2), modulus exactly 1
  GR unit() {
    long p = 0, q = 0;
    while (p == 0 && q == 0) {
      p = integer(-5, 5);
      q = integer(-5, 5);
    }
    Rational n(p * p + q * q);
    return {Rational(Rational(p * p - q * q) / n), Rational(Rational(2 * p * q) / n)};
  }

  GR unit_not_one() {
    GR u = unit();
    while (u.is_one()) u = unit();
    return u;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace ndga
