#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace jdeform {

/// Ground field selector: the rationals, or the Gaussian rationals Q(i).
enum class Field { Q, QI };

/// Exact element of Q(i). The imaginary part stays zero unless the caller
/// builds a Gaussian value, so over Q every operation degenerates to mpq.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(long num, long den);
  explicit Scalar(mpq_class re) : re_(std::move(re)) {}
  Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {}

  /// Parses "p", "p/q", "p/q+r/s*i", "p/q-r/s*i" or "r/s*i".
  /// Throws ParseError on malformed input or a zero denominator.
  static Scalar parse(std::string_view text, Field field = Field::QI);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  Scalar inverse() const;
  Scalar operator-() const { return Scalar(-re_, -im_); }

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Canonical lowest-terms string: "3", "-1/2", "1/2+3*i", "-2/3*i".
  std::string str() const;

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Error raised for malformed textual scalars.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// n! as a Scalar.
Scalar factorial(unsigned n);

}  // namespace jdeform
