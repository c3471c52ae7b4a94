#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qsusy/operator.hpp"

namespace qsusy {

// Verification points for numeric identity checks, covering q < 1 and q > 1.
std::vector<Rational> default_q_values();

// A diagonal operator met a zero denominator.
class PoleError : public DomainError {
 public:
  PoleError(int m, int degree, const Rational& q0);
  int m() const { return m_; }
  int degree() const { return degree_; }
  const Rational& q0() const { return q0_; }

 private:
  int m_;
  int degree_;
  Rational q0_;
};

// Laurent polynomial in T_q, sum_k c_k T_q^k. Acts on x^m as sum_k c_k q^{km}.
class TPoly {
 public:
  TPoly() = default;
  TPoly(const QLaurent& c);  // NOLINT(google-explicit-constructor)
  TPoly(long c) : TPoly(QLaurent(c)) {}  // NOLINT(google-explicit-constructor)
  // c * T_q^k; T_{q^k} is t(k).
  static TPoly t(int k, const QLaurent& c = QLaurent(1));

  const std::map<int, QLaurent>& terms() const { return terms_; }
  Scalar eigenvalue(int m, const Rational& q0) const;
  Operator as_operator() const;

  friend TPoly operator+(const TPoly& a, const TPoly& b);
  friend TPoly operator*(const TPoly& a, const TPoly& b);

 private:
  std::map<int, QLaurent> terms_;
};

// R(T_q) = num(T_q) / den(T_q), diagonal in the monomial basis.
struct DiagonalRational {
  TPoly num;
  TPoly den;
};

inline DiagonalRational inverse_of(const TPoly& den) { return {TPoly(1), den}; }

using Tier2Stage = std::variant<Operator, DiagonalRational>;

// prefactor * stages[0] * stages[1] * ... ; the last stage acts first.
struct Tier2Pipeline {
  Scalar prefactor = Scalar(1);
  std::vector<Tier2Stage> stages;
};

// Finite sum of pipelines: operators with diagonal rational functions of T_q.
class Tier2Sum {
 public:
  Tier2Sum() = default;
  Tier2Sum(const Operator& op);  // NOLINT(google-explicit-constructor)
  Tier2Sum(const DiagonalRational& r);  // NOLINT(google-explicit-constructor)

  const std::vector<Tier2Pipeline>& pipelines() const { return pipelines_; }
  // Collapses to a tier-1 operator when no diagonal stage is present.
  std::optional<Operator> as_operator() const;
  int min_degree_shift() const;

  // Image of x^m at numeric q. Throws PoleError.
  SparsePoly apply_monomial(int m, const Rational& q0) const;

  Tier2Sum operator-() const;
  friend Tier2Sum operator+(const Tier2Sum& a, const Tier2Sum& b);
  friend Tier2Sum operator-(const Tier2Sum& a, const Tier2Sum& b) { return a + (-b); }
  friend Tier2Sum operator*(const Tier2Sum& a, const Tier2Sum& b);
  friend Tier2Sum operator*(const Scalar& c, const Tier2Sum& a);

 private:
  std::vector<Tier2Pipeline> pipelines_;
};

ScalarSeries apply(const Tier2Sum& op, const ScalarSeries& s, const Rational& q0);

struct Discrepancy {
  int m = 0;
  std::optional<Rational> q0;
  int degree = 0;
  std::string lhs;
  std::string rhs;
};

struct EqualityReport {
  bool equal = false;
  bool symbolic = false;
  std::optional<Discrepancy> first;
  std::string residual;

  std::string describe() const;
};

// Canonical-form comparison; holds for every q when equal.
EqualityReport op_equal(const Operator& a, const Operator& b, int degree_bound = 10);
// Monomial actions x^0..x^degree_bound compared exactly at every q in q_values.
// Two tier-1 inputs with empty q_values fall back to the symbolic comparison.
EqualityReport op_equal(const Tier2Sum& a, const Tier2Sum& b, int degree_bound, const std::vector<Rational>& q_values);

}  // namespace qsusy
