#pragma once

#include <map>
#include <string>

#include "qsusy/scalar.hpp"

namespace qsusy {

// Laurent polynomial in the deformation parameter q with coefficients in
// Q(i, sqrt 2). Zero coefficients are never stored, so equality is map equality.
class QLaurent {
 public:
  using Terms = std::map<int, Scalar>;

  QLaurent() = default;
  QLaurent(const Scalar& c);  // NOLINT(google-explicit-constructor)
  QLaurent(long c) : QLaurent(Scalar(c)) {}  // NOLINT(google-explicit-constructor)
  QLaurent(const Rational& c) : QLaurent(Scalar(c)) {}  // NOLINT(google-explicit-constructor)

  static QLaurent monomial(const Scalar& c, int exponent);
  // q^k
  static QLaurent q(int exponent = 1) { return monomial(Scalar(1), exponent); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_constant() const;
  Scalar coefficient(int exponent) const;
  int min_exponent() const;
  int max_exponent() const;

  Scalar eval(const Rational& q0) const;
  // The q -> 1 limit.
  Scalar at_one() const;
  // Same polynomial with the symbol q replaced by q^k.
  QLaurent substitute_power(int k) const;
  QLaurent conj() const;
  // Inverse of a single-term element.
  QLaurent inverse_monomial() const;

  QLaurent operator-() const;
  QLaurent& operator+=(const QLaurent& o);
  QLaurent& operator-=(const QLaurent& o);
  QLaurent& operator*=(const QLaurent& o);
  QLaurent& operator*=(const Scalar& c);

  friend QLaurent operator+(QLaurent a, const QLaurent& b) { return a += b; }
  friend QLaurent operator-(QLaurent a, const QLaurent& b) { return a -= b; }
  friend QLaurent operator*(const QLaurent& a, const QLaurent& b);
  friend QLaurent operator*(QLaurent a, const Scalar& c) { return a *= c; }
  friend QLaurent operator*(const Scalar& c, QLaurent a) { return a *= c; }
  friend bool operator==(const QLaurent& a, const QLaurent& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

 private:
  void add_term(int exponent, const Scalar& c);
  Terms terms_;
};

Scalar qlaurent_eval(const QLaurent& p, const Rational& q0);
QLaurent pow(const QLaurent& base, unsigned n);

}  // namespace qsusy
