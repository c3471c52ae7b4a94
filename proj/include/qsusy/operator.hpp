#pragma once

#include <array>
#include <compare>
#include <map>
#include <string>
#include <vector>

#include "qsusy/qlaurent.hpp"
#include "qsusy/series.hpp"

namespace qsusy {

// Exponents of the normal-ordered monomial X^x_pow D^d_pow T_q^t_exp.
struct MonomialKey {
  int x_pow = 0;
  int d_pow = 0;
  int t_exp = 0;
  auto operator<=>(const MonomialKey&) const = default;
};

struct OpMonomial {
  MonomialKey key;
  QLaurent coeff;
};

// Sparse polynomial in x with exact coefficients: the image of a monomial.
using SparsePoly = std::map<int, Scalar>;

// Element of the algebra generated by X = x*, D = d/dx and T_q^{+-1}, kept in
// the normal order X^a D^b T_q^c with q-Laurent coefficients. Relations:
//   D X = X D + 1,  T_q X = q X T_q,  T_q D = q^{-1} D T_q.
class Operator {
 public:
  using Terms = std::map<MonomialKey, QLaurent>;

  Operator() = default;
  Operator(const QLaurent& c);  // NOLINT(google-explicit-constructor)
  Operator(const Scalar& c) : Operator(QLaurent(c)) {}  // NOLINT(google-explicit-constructor)
  Operator(long c) : Operator(QLaurent(c)) {}  // NOLINT(google-explicit-constructor)

  static Operator monomial(MonomialKey key, const QLaurent& c = QLaurent(1));
  static Operator identity() { return Operator(1); }
  static Operator x(int power = 1) { return monomial({power, 0, 0}); }
  static Operator d(int power = 1) { return monomial({0, power, 0}); }
  static Operator t(int exponent = 1) { return monomial({0, 0, exponent}); }
  // Momentum -i d/dx.
  static Operator p();

  const Terms& terms() const { return terms_; }
  std::vector<OpMonomial> monomials() const;
  bool is_zero() const { return terms_.empty(); }
  QLaurent coefficient(MonomialKey key) const;

  Operator adjoint() const;
  // Coefficients evaluated at q = 1 and T_1 = 1.
  Operator at_one() const;
  // Coefficients evaluated at a numeric q; T_q powers are kept.
  Operator at(const Rational& q0) const;

  // Smallest x_pow - d_pow over the terms (degree shift on monomials).
  int min_degree_shift() const;

  // Image of x^m, symbolic in q.
  std::map<int, QLaurent> apply_monomial(int m) const;
  // Image of x^m at numeric q.
  SparsePoly apply_monomial(int m, const Rational& q0) const;

  Operator operator-() const;
  Operator& operator+=(const Operator& o);
  Operator& operator-=(const Operator& o);
  Operator& operator*=(const QLaurent& c);

  friend Operator operator+(Operator a, const Operator& b) { return a += b; }
  friend Operator operator-(Operator a, const Operator& b) { return a -= b; }
  friend Operator operator*(const Operator& a, const Operator& b);
  friend Operator operator*(Operator a, const QLaurent& c) { return a *= c; }
  friend Operator operator*(const QLaurent& c, Operator a) { return a *= c; }
  friend Operator operator*(Operator a, const Scalar& c) { return a *= QLaurent(c); }
  friend Operator operator*(const Scalar& c, Operator a) { return a *= QLaurent(c); }
  friend bool operator==(const Operator& a, const Operator& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

 private:
  void add_term(const MonomialKey& key, const QLaurent& c);
  Terms terms_;
};

Operator adjoint(const Operator& op);

// Free (unordered) words in the generators.
enum class Generator { X, D, T, TInv };
struct Word {
  QLaurent coeff;
  std::vector<Generator> letters;
};
using FreeExpr = std::vector<Word>;

// Normal ordering by adjacent rewriting. Independent of Operator::operator*.
Operator normal_form(const FreeExpr& expr);
FreeExpr concat(const FreeExpr& a, const FreeExpr& b);

enum class BracketKind { comm_q, anticomm_q, comm, anticomm };

// comm_q: q a b - q^{-1} b a;  anticomm_q: q a b + q^{-1} b a; the plain kinds
// ignore q. `q` must be a monomial (e.g. q, q^{-1}).
template <typename Op>
Op q_bracket(const Op& a, const Op& b, BracketKind kind, const QLaurent& q = QLaurent::q()) {
  switch (kind) {
    case BracketKind::comm: return a * b - b * a;
    case BracketKind::anticomm: return a * b + b * a;
    case BracketKind::comm_q: return q * (a * b) - q.inverse_monomial() * (b * a);
    case BracketKind::anticomm_q: return q * (a * b) + q.inverse_monomial() * (b * a);
  }
  return a;
}

// a b - factor * b a  (the one-sided convention [a,b]_f = ab - f ba).
template <typename Op>
Op skew_commutator(const Op& a, const Op& b, const QLaurent& factor) {
  return a * b - factor * (b * a);
}

// 2x2 block matrix of operators, entries row-major.
class BlockOp2 {
 public:
  BlockOp2() = default;
  BlockOp2(Operator a00, Operator a01, Operator a10, Operator a11);

  static BlockOp2 identity();
  static BlockOp2 sigma3();
  static BlockOp2 diag(Operator top, Operator bottom);

  const Operator& at(int row, int col) const { return e_[static_cast<std::size_t>(2 * row + col)]; }
  bool is_zero() const;
  BlockOp2 adjoint() const;
  BlockOp2 at_one() const;

  BlockOp2 operator-() const;
  BlockOp2& operator+=(const BlockOp2& o);
  BlockOp2& operator-=(const BlockOp2& o);
  friend BlockOp2 operator+(BlockOp2 a, const BlockOp2& b) { return a += b; }
  friend BlockOp2 operator-(BlockOp2 a, const BlockOp2& b) { return a -= b; }
  friend BlockOp2 operator*(const BlockOp2& a, const BlockOp2& b);
  friend BlockOp2 operator*(const QLaurent& c, const BlockOp2& a);
  friend bool operator==(const BlockOp2& a, const BlockOp2& b) { return a.e_ == b.e_; }

  std::string to_string() const;

 private:
  std::array<Operator, 4> e_;
};

// Symbolic action on a series; the result is known through
// order + min_degree_shift().
QSeries apply(const Operator& op, const QSeries& s);
ScalarSeries apply(const Operator& op, const ScalarSeries& s, const Rational& q0);
// T_r acting numerically: c_m -> r^m c_m.
ScalarSeries apply_scaling(const ScalarSeries& s, const Rational& r);

}  // namespace qsusy
