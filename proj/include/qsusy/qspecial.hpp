#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qsusy/report.hpp"
#include "qsusy/series.hpp"

namespace qsusy {

// TD-number (n]_q = n q^{n-1}.
QLaurent td_number(int n);
// (n]_q! in closed form q^{n(n-1)/2} n!.
QLaurent td_factorial(int n);
// (1]_q (2]_q ... (n]_q by repeated multiplication.
QLaurent td_factorial_product(int n);
// c_n z^n -> c_n (n]_q z^{n-1}; known through order - 1.
QSeries td_derivative(const QSeries& s);
// sum_n q^{-b n(n-1)/2} alpha^n z^n / n! with b = base_power (exp^(TD)_{q^b}).
QSeries td_exp(const QLaurent& alpha, int order, int base_power = 1);

// Laurent polynomial in two symbols p, q.
class PQPoly {
 public:
  using Terms = std::map<std::pair<int, int>, Scalar>;
  PQPoly() = default;
  PQPoly(long c);  // NOLINT(google-explicit-constructor)
  static PQPoly monomial(const Scalar& c, int p_exp, int q_exp);

  const Terms& terms() const { return terms_; }
  Scalar eval(const Rational& p0, const Rational& q0) const;
  // p = q
  QLaurent diagonal() const;
  std::string to_string() const;

  friend PQPoly operator+(const PQPoly& a, const PQPoly& b);
  friend PQPoly operator-(const PQPoly& a, const PQPoly& b);
  friend PQPoly operator*(const PQPoly& a, const PQPoly& b);
  friend bool operator==(const PQPoly& a, const PQPoly& b) { return a.terms_ == b.terms_; }

 private:
  void add_term(std::pair<int, int> e, const Scalar& c);
  Terms terms_;
};

// [n]_{p,q} = (p^n - q^n)/(p - q) = sum_j p^{n-1-j} q^j.
PQPoly pq_number(int n);
PQPoly pq_factorial(int n);

template <typename T>
T pq_number_value(int n, const T& p, const T& q) {
  T acc(0);
  std::vector<T> ppow(static_cast<std::size_t>(std::max(n, 1)), T(1));
  for (int j = 1; j < n; ++j) ppow[static_cast<std::size_t>(j)] = ppow[static_cast<std::size_t>(j - 1)] * p;
  T qp(1);
  for (int j = 0; j < n; ++j) {
    acc = acc + ppow[static_cast<std::size_t>(n - 1 - j)] * qp;
    qp = qp * q;
  }
  return acc;
}

template <typename T>
T pq_factorial_value(int n, const T& p, const T& q) {
  T acc(1);
  for (int k = 1; k <= n; ++k) acc = acc * pq_number_value(k, p, q);
  return acc;
}

// ((a,b);(p,q))_n = prod_{j<n} (a p^j - b q^j)
template <typename T>
T twin_pochhammer(const T& a, const T& b, const T& p, const T& q, int n) {
  T acc(1), pj(1), qj(1);
  for (int j = 0; j < n; ++j) {
    acc = acc * (a * pj - b * qj);
    pj = pj * p;
    qj = qj * q;
  }
  return acc;
}

// (a;q)_n = prod_{j<n} (1 - a q^j)
template <typename T>
T q_pochhammer(const T& a, const T& q, int n) {
  T acc(1), qj(1);
  for (int j = 0; j < n; ++j) {
    acc = acc * (T(1) - a * qj);
    qj = qj * q;
  }
  return acc;
}

// A series term hit a vanishing denominator factor.
class SeriesPoleError : public DomainError {
 public:
  explicit SeriesPoleError(int n) : DomainError("zero denominator factor at term n = " + std::to_string(n)), n_(n) {}
  int n() const { return n_; }

 private:
  int n_;
};

template <typename T>
struct TwinPhiSpec {
  std::vector<std::pair<T, T>> num;  // (a_i, b_i)
  std::vector<std::pair<T, T>> den;  // (c_j, d_j)
  T p, q, z;
};

// r,r' F s,s' over the base pair (p, q); denominator (p;p)_n.
template <typename T>
struct BibasicSpec {
  std::vector<T> a;  // base p, numerator
  std::vector<T> c;  // base q, numerator
  std::vector<T> b;  // base p, denominator
  std::vector<T> d;  // base q, denominator
  T p, q, z;
};

struct FloatSum {
  double value = 0;
  int terms_used = 0;
  bool converged = false;
  double last_term = 0;
};

namespace detail {

inline bool is_zero_value(double v) { return v == 0.0; }
inline bool is_zero_value(const Scalar& v) { return v.is_zero(); }
inline bool is_zero_value(const Rational& v) { return v == 0; }
inline double magnitude(double v) { return std::fabs(v); }

template <typename T>
T int_pow(const T& x, int n) {
  T acc(1);
  for (int k = 0; k < n; ++k) acc = acc * x;
  return acc;
}

// Ratio t_{n+1}/t_n of the twin-basic series; throws on a zero denominator.
template <typename T>
T twin_ratio(const TwinPhiSpec<T>& s, int n, const T& pn, const T& qn, const T& qp_n) {
  const int sign_power = 1 + static_cast<int>(s.den.size()) - static_cast<int>(s.num.size());
  T numr(1), denr(1);
  for (const auto& [a, b] : s.num) numr = numr * (a * pn - b * qn);
  for (const auto& [c, d] : s.den) denr = denr * (c * pn - d * qn);
  denr = denr * (pn * s.p - qn * s.q);  // ((p,q);(p,q)) picks up p^{n+1} - q^{n+1}
  if (is_zero_value(denr)) throw SeriesPoleError(n + 1);
  // [(-1)^n (q/p)^{n(n-1)/2}] ratio is -(q/p)^n
  T f(1);
  for (int k = 0; k < std::abs(sign_power); ++k) f = f * (T(0) - qp_n);
  if (sign_power < 0) {
    if (is_zero_value(f)) throw SeriesPoleError(n + 1);
    f = T(1) / f;
  }
  return numr * f * s.z / denr;
}

template <typename T>
T bibasic_ratio(const BibasicSpec<T>& s, int n, const T& pn, const T& qn) {
  const int e1 = 1 + static_cast<int>(s.b.size()) - static_cast<int>(s.a.size());
  const int e2 = static_cast<int>(s.d.size()) - static_cast<int>(s.c.size());
  T numr(1), denr(1);
  for (const auto& a : s.a) numr = numr * (T(1) - a * pn);
  for (const auto& c : s.c) numr = numr * (T(1) - c * qn);
  for (const auto& b : s.b) denr = denr * (T(1) - b * pn);
  for (const auto& d : s.d) denr = denr * (T(1) - d * qn);
  denr = denr * (T(1) - pn * s.p);  // (p;p)_{n+1}/(p;p)_n
  if (is_zero_value(denr)) throw SeriesPoleError(n + 1);
  // [(-1)^n p^{n(n-1)/2}] ratio is -p^n; likewise for q
  T f(1);
  const T fp = T(0) - pn, fq = T(0) - qn;
  for (int k = 0; k < std::abs(e1); ++k) f = e1 > 0 ? T(f * fp) : T(f / fp);
  for (int k = 0; k < std::abs(e2); ++k) f = e2 > 0 ? T(f * fq) : T(f / fq);
  return numr * f * s.z / denr;
}

}  // namespace detail

// Partial sum of terms n = 0..n_terms-1, exact in the field of T.
template <typename T>
T twin_phi_partial(const TwinPhiSpec<T>& s, int n_terms) {
  T sum(0), term(1), pn(1), qn(1), qp_n(1);
  const T ratio_qp = s.q / s.p;
  for (int n = 0; n < n_terms; ++n) {
    sum = sum + term;
    if (n + 1 == n_terms) break;
    term = term * detail::twin_ratio(s, n, pn, qn, qp_n);
    pn = pn * s.p;
    qn = qn * s.q;
    qp_n = qp_n * ratio_qp;
  }
  return sum;
}

template <typename T>
T bibasic_partial(const BibasicSpec<T>& s, int n_terms) {
  T sum(0), term(1), pn(1), qn(1);
  for (int n = 0; n < n_terms; ++n) {
    sum = sum + term;
    if (n + 1 == n_terms) break;
    term = term * detail::bibasic_ratio(s, n, pn, qn);
    pn = pn * s.p;
    qn = qn * s.q;
  }
  return sum;
}

// Floating-point summation; requires |q/p| < 1 and |z| < 1.
FloatSum twin_phi(const TwinPhiSpec<double>& s, double tol = 1e-14, int max_terms = 10000);
FloatSum bibasic_F(const BibasicSpec<double>& s, double tol = 1e-14, int max_terms = 10000);

// exp^(TD)_q(z) in floating point, stopping on the relative tolerance.
FloatSum td_exp_sum(double z, double q, double tol = 1e-14, int max_terms = 10000);
double td_exp_value(double z, double q);

// exp_{p,q}(z) = sum z^n / [n]_{p,q}!
FloatSum pq_exp(double z, double p, double q, double tol = 1e-14, int max_terms = 10000);

// The representations of the deformed exponentials as twin-basic and bibasic series.
TwinPhiSpec<double> pq_exp_as_twin_phi(double z, double p, double q);
BibasicSpec<double> td_exp_as_bibasic(double z, double p, double q);

// Exact check suites: TD-analysis (numbers, factorials, derivative,
// exponent, ground-state record), (p,q) numbers and the twin-Pochhammer
// special cases on `trials` seeded random rational parameter sets.
Report td_analysis_checks(int trials = 100, int order = 40, std::uint32_t seed = 20240601);
// Floating-point representations and limits of the deformed exponentials.
Report hypergeometric_checks();

}  // namespace qsusy
