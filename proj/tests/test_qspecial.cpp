#include <random>

#include "doctest.h"
#include "qsusy/qspecial.hpp"
#include "random_gen.hpp"

using namespace qsusy;

namespace {


Rational nonzero(std::mt19937& rng) {
  Rational r(0);
  while (r == 0) r = testing::random_rational(rng, 6);
  return r;
}

// (p^n - q^n)/(p - q) for p != q
Rational bracket(int n, const Rational& p, const Rational& q) { return (pow(p, n) - pow(q, n)) / (p - q); }

Rational bracket_factorial(int n, const Rational& p, const Rational& q) {
  Rational acc(1);
  for (int k = 1; k <= n; ++k) acc *= bracket(k, p, q);
  return acc;
}

}  // namespace

TEST_CASE("TD numbers and factorials") {
  CHECK(td_number(3) == QLaurent::monomial(Scalar(3), 2));
  CHECK(td_number(0).is_zero());
  CHECK(pq_number(3).diagonal() == QLaurent::monomial(Scalar(3), 2));
  CHECK(td_factorial(3) == QLaurent::monomial(Scalar(6), 3));
  CHECK(td_factorial(1) == QLaurent(1));
  CHECK(td_factorial(0) == QLaurent(1));
  for (int n = 0; n <= 20; ++n) {
    CHECK(td_factorial_product(n) == td_factorial(n));
    CHECK(td_number(n).at_one() == Scalar(n));
  }
}

TEST_CASE("TD derivative and exponent") {
  const QSeries z3 = QSeries::monomial(3, QLaurent(1), 5);
  const QSeries d = td_derivative(z3);
  CHECK(d.order() == 4);
  CHECK(d[2] == QLaurent::monomial(Scalar(3), 2));
  CHECK(td_derivative(QSeries::monomial(0, QLaurent(7), 5)).is_zero());

  const QSeries e = td_exp(QLaurent(1), 10);
  CHECK(e[2] == QLaurent::monomial(Scalar(Rational(1, 2)), -1));
  const ScalarSeries e1 = series_at_one(e);
  for (int n = 0; n <= 10; ++n) CHECK(e1[n] == Scalar(Rational(1, factorial(n))));

  std::mt19937 rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    const QLaurent alpha = testing::random_qlaurent(rng);
    const QSeries ea = td_exp(alpha, 40);
    const QSeries resid = td_derivative(ea) - ea.scaled(alpha);
    CHECK(resid.order() == 39);
    CHECK(resid.is_zero());
  }
  // base q^2 substitution matches direct construction
  CHECK(equal_through_common_order(td_exp(QLaurent(1), 12, 2), td_exp(QLaurent(1), 12).map([](const QLaurent& c) { return c.substitute_power(2); })));
}

TEST_CASE("(p,q) numbers") {
  const PQPoly three = pq_number(3);
  CHECK(three == PQPoly::monomial(Scalar(1), 2, 0) + PQPoly::monomial(Scalar(1), 1, 1) + PQPoly::monomial(Scalar(1), 0, 2));
  for (int n = 0; n <= 8; ++n) {
    CHECK(pq_number(n).eval(1, 1) == Scalar(n));
    CHECK(pq_number(n).eval(Rational(5, 2), Rational(1, 3)) == Scalar(n == 0 ? Rational(0) : bracket(n, Rational(5, 2), Rational(1, 3))));
    CHECK(pq_factorial(n).diagonal() == td_factorial(n));
  }
}

TEST_CASE("twin Pochhammer examples") {
  const Rational a(3, 4), b(-2), p(5, 3), qq(2, 7);
  CHECK(twin_pochhammer(a, a, p, qq, 2) == 0);
  CHECK(twin_pochhammer(Rational(0), b, p, qq, 3) == pow(Rational(-b), 3) * pow(qq, 3));
  CHECK(twin_pochhammer(p, qq, p, qq, 2) == (p - qq) * (p - qq) * (p + qq));
  CHECK(twin_pochhammer(a, b, p, qq, 0) == 1);
}

TEST_CASE("twin Pochhammer special cases on 100 random parameter sets") {
  std::mt19937 rng(99);
  int literal_failures = 0, displayed_failures = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const Rational a = nonzero(rng), b = nonzero(rng), p = nonzero(rng);
    Rational qq = nonzero(rng);
    while (qq == p || qq == -p || qq * qq == 1) qq = nonzero(rng);
    for (int n = 0; n <= 10; ++n) {
      const long tri = n * (n - 1) / 2;
      CHECK(twin_pochhammer(Rational(0), b, p, qq, n) == pow(Rational(-b), n) * pow(qq, tri));
      CHECK(twin_pochhammer(a, Rational(0), p, qq, n) == pow(a, n) * pow(p, tri));
      CHECK(twin_pochhammer(a, b, qq, qq, n) == pow(Rational(a - b), n) * pow(qq, tri));
      if (n >= 1) CHECK(twin_pochhammer(a, a, p, qq, n) == 0);
      // factorial reading of the base-pair case
      CHECK(twin_pochhammer(p, qq, p, qq, n) == pow(Rational(p - qq), n) * bracket_factorial(n, p, qq));
      if (n >= 1 && twin_pochhammer(p, qq, p, qq, n) != pow(Rational(p - qq), n) * bracket(n, p, qq)) ++literal_failures;
      const Rational qi = 1 / qq;
      CHECK(twin_pochhammer(qi, qq, qi, qq, n) == pow(Rational(qi - qq), n) * bracket_factorial(n, qi, qq));
      if (twin_pochhammer(qi, qq, qi, qq, n) != pow(Rational(qq - qi), n) * bracket_factorial(n, qi, qq)) ++displayed_failures;
    }
  }
  CHECK(literal_failures > 0);
  CHECK(displayed_failures > 0);
  // Exact-rational generic code path agrees with the library implementation of the (p,q) factorial.
  CHECK(pq_factorial_value(5, Rational(3), Rational(1, 2)) == bracket_factorial(5, Rational(3), Rational(1, 2)));
}

TEST_CASE("twin-basic series") {
  // z = 0 gives 1
  CHECK(twin_phi(pq_exp_as_twin_phi(0.0, 2.0, 1.0)).value == 1.0);
  // exp_{2,1}(z) = sum z^n / prod (2^k - 1)
  for (double z : {0.05, 0.1}) {
    double direct = 0, term = 1;
    for (int n = 0; n < 60; ++n) {
      direct += term;
      term *= z / (std::pow(2.0, n + 1) - 1);
    }
    const FloatSum s = twin_phi(pq_exp_as_twin_phi(z, 2, 1));
    CHECK(s.converged);
    CHECK(std::fabs(s.value - direct) / direct < 1e-12);
  }
  // symmetric base pair (1/q, q)
  for (double z : {0.05, 0.1, 0.2}) {
    const double qd = 0.9;
    double direct = 0, term = 1;
    for (int n = 0; n < 200; ++n) {
      direct += term;
      const double k = n + 1;
      term *= z * (1 / qd - qd) / (std::pow(qd, -k) - std::pow(qd, k));
    }
    CHECK(std::fabs(twin_phi(pq_exp_as_twin_phi(z, 1 / qd, qd)).value - direct) / direct < 1e-12);
  }
  CHECK_THROWS_AS(twin_phi(pq_exp_as_twin_phi(0.1, 1.0, 2.0)), DomainError);
  CHECK_THROWS_AS(twin_phi(pq_exp_as_twin_phi(2.0, 2.0, 1.0)), DomainError);
  // nonconvergence is reported, not thrown
  const FloatSum cut = twin_phi(pq_exp_as_twin_phi(0.5, 2.0, 1.0), 1e-14, 3);
  CHECK_FALSE(cut.converged);
  CHECK(cut.terms_used == 3);
  CHECK(cut.last_term > 0);
  // a vanishing denominator factor is a pole
  TwinPhiSpec<double> pole{{}, {{1.0, 1.0}}, 2.0, 1.0, 0.1};
  CHECK_THROWS_AS(twin_phi(pole), SeriesPoleError);
  // terminating series: a numerator factor vanishes at n = 2
  TwinPhiSpec<Rational> term{{{Rational(1), Rational(4)}}, {}, Rational(2), Rational(1), Rational(1, 3)};
  CHECK(twin_phi_partial(term, 10) == twin_phi_partial(term, 3));
}

TEST_CASE("limits of the deformed exponentials") {
  const double qd = 0.9;
  CHECK(std::fabs(twin_phi(pq_exp_as_twin_phi(0.05, qd * (1 + 1e-6), qd)).value / td_exp_value(0.05, qd) - 1) < 1e-5);
  CHECK(std::fabs(pq_exp(0.1, qd + 1e-6, qd).value / td_exp_value(0.1, qd) - 1) < 1e-5);
  CHECK(std::fabs(bibasic_F(td_exp_as_bibasic(0.1, 1 - 1e-6, 0.8)).value / td_exp_value(0.1, 0.8) - 1) < 1e-5);
  const double p = 1 - 1e-6;
  CHECK(std::fabs(q_pochhammer(p, p, 5) / std::pow(1 - p, 5) - 120) < 120 * 1e-4);
  BibasicSpec<double> empty{{}, {}, {}, {}, 0.3, 0.6, 0.0};
  CHECK(bibasic_F(empty).value == 1.0);
  // td_exp_value against the exact partial sum at q = 2
  const QSeries e = td_exp(QLaurent(1), 30);
  double partial = 0;
  for (int n = 0; n <= 30; ++n) partial += e[n].eval(2).re().get_d() * std::pow(0.3, n);
  CHECK(td_exp_value(0.3, 2.0) == doctest::Approx(partial).epsilon(1e-14));
}

TEST_CASE("check suites") {
  const Report td = td_analysis_checks();
  CHECK(all_passed(td));
  CHECK(std::count_if(td.begin(), td.end(), [](const CheckResult& c) { return c.status == Status::informational; }) == 2);
  CHECK(all_passed(hypergeometric_checks()));
}
