#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qsusy {

using Rational = mpq_class;
using Integer = mpz_class;

// Raised for division by zero, poles of diagonal operators, and violated
// preconditions on numeric arguments.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Parses "num/den" or an integer. Decimal notation is rejected.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);
Rational pow(const Rational& base, long exponent);
Integer factorial(unsigned long n);
Integer binomial(unsigned long n, unsigned long k);
// log|r| for r != 0, safe for values far outside the double range.
double log_abs(const Rational& r);
// Exact conversion of a finite double.
Rational from_double(double v);

// Element re + im*i + re_s2*sqrt(2) + im_s2*i*sqrt(2) of the field Q(i, sqrt 2).
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(const Rational& r) : re_(r) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational re, Rational im, Rational re_s2, Rational im_s2);

  static Scalar i();
  static Scalar sqrt2();
  static Scalar inv_sqrt2();

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  const Rational& re_s2() const { return re_s2_; }
  const Rational& im_s2() const { return im_s2_; }

  bool is_zero() const;
  bool is_rational() const;
  Scalar conj() const;
  Scalar inverse() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  // Reporting only; never used to decide equality.
  std::complex<double> to_complex() const;
  std::string to_string() const;

 private:
  Rational re_, im_, re_s2_, im_s2_;
};

enum class FieldOp { add, sub, mul, div, conj };

// conj ignores b.
Scalar field_arith(const Scalar& a, const Scalar& b, FieldOp op);

}  // namespace qsusy
