#include <random>

#include "doctest.h"
#include "qsusy/series.hpp"
#include "random_gen.hpp"

using namespace qsusy;

TEST_CASE("field relations of i and sqrt2") {
  CHECK(Scalar::sqrt2() * Scalar::sqrt2() == Scalar(2));
  CHECK(Scalar::i() * Scalar::i() == Scalar(-1));
  CHECK(Scalar::inv_sqrt2() * Scalar::sqrt2() == Scalar(1));
  // (1 + i sqrt2)(1 - i sqrt2) = 1 - (i sqrt2)^2 = 1 + 2
  Scalar z(1, 0, 0, 1);
  CHECK(field_arith(z, field_arith(z, Scalar(), FieldOp::conj), FieldOp::mul) == Scalar(3));
  CHECK(field_arith(Scalar(1), Scalar(2), FieldOp::div) == Scalar(Rational(1, 2)));
}

TEST_CASE("division by zero is a domain error") {
  CHECK_THROWS_AS(Scalar(1) / Scalar(), DomainError);
  CHECK_THROWS_AS(Scalar().inverse(), DomainError);
  CHECK_THROWS_AS(field_arith(Scalar(1), Scalar(0), FieldOp::div), DomainError);
}

TEST_CASE("field axioms on random elements") {
  std::mt19937 rng(7);
  int tested = 0;
  while (tested < 200) {
    Scalar a = testing::random_scalar(rng);
    if (a.is_zero()) continue;
    ++tested;
    CHECK(a * a.inverse() == Scalar(1));
    CHECK(a.conj().conj() == a);
    Scalar b = testing::random_scalar(rng);
    CHECK((a * b).conj() == a.conj() * b.conj());
    CHECK((a + b) * a == a * a + b * a);
  }
}

TEST_CASE("float projection") {
  auto c = Scalar(1, 1, 1, 0).to_complex();
  CHECK(c.real() == doctest::Approx(1 + std::sqrt(2.0)));
  CHECK(c.imag() == doctest::Approx(1));
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/5") == Rational(3, 5));
  CHECK(parse_rational("-2/4") == Rational(-1, 2));
  CHECK(parse_rational("2") == Rational(2));
  CHECK(parse_rational("1/1") == Rational(1));
  CHECK_THROWS_AS(parse_rational("0.5"), DomainError);
  CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
  CHECK_THROWS_AS(parse_rational("abc"), DomainError);
  CHECK_THROWS_AS(parse_rational("1/-2"), DomainError);
}

TEST_CASE("qlaurent evaluation") {
  QLaurent p = QLaurent::q(-1) + QLaurent::q();
  CHECK(qlaurent_eval(p, Rational(2)) == Scalar(Rational(5, 2)));
  CHECK(qlaurent_eval(QLaurent::q(3), Rational(1)) == Scalar(1));
  QLaurent d = QLaurent::q() - QLaurent::q(-1);
  CHECK(qlaurent_eval(d * d, Rational(3, 5)) == Scalar(Rational(256, 225)));
  CHECK((d * d).at_one().is_zero());
  CHECK_THROWS_AS(p.eval(Rational(0)), DomainError);
}

TEST_CASE("qlaurent canonical form drops zeros") {
  QLaurent p = QLaurent::q(2) - QLaurent::q(2);
  CHECK(p.is_zero());
  CHECK(p.terms().empty());
  CHECK(QLaurent::q(2).substitute_power(3) == QLaurent::q(6));
  CHECK((QLaurent::q(2) * Scalar(3)).inverse_monomial() == QLaurent::monomial(Scalar(Rational(1, 3)), -2));
  CHECK_THROWS_AS((QLaurent::q() + QLaurent(1)).inverse_monomial(), DomainError);
}

TEST_CASE("qlaurent evaluation is a ring homomorphism") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    QLaurent p = testing::random_qlaurent(rng);
    QLaurent r = testing::random_qlaurent(rng);
    Rational q0 = testing::random_positive_rational(rng);
    CHECK((p * r).eval(q0) == p.eval(q0) * r.eval(q0));
    CHECK((p + r).eval(q0) == p.eval(q0) + r.eval(q0));
  }
}

TEST_CASE("series truncation contract") {
  ScalarSeries one_plus_x({Scalar(1), Scalar(1)}, 5);
  ScalarSeries one_minus_x({Scalar(1), Scalar(-1)}, 5);
  auto prod = series_arith(one_plus_x, one_minus_x, SeriesOp::mul);
  CHECK(prod.order() == 5);
  CHECK(prod[0] == Scalar(1));
  CHECK(prod[2] == Scalar(-1));
  CHECK(prod[1].is_zero());

  auto x2 = ScalarSeries::monomial(2, Scalar(1), 4);
  auto x3 = ScalarSeries::monomial(3, Scalar(1), 4);
  auto x5 = x2 * x3;
  CHECK(x5.order() == 4);
  CHECK(x5.is_zero());

  auto sum = ScalarSeries::monomial(0, Scalar(1), 3) + ScalarSeries::monomial(0, Scalar(1), 7);
  CHECK(sum.order() == 3);
}

TEST_CASE("series square of exp") {
  ScalarSeries e(4);
  Rational f(1);
  for (int k = 0; k <= 4; ++k) {
    if (k > 0) f /= k;
    e.set(k, Scalar(f));
  }
  auto sq = e * e;
  // Cauchy oracle: sum_j 1/(j!(k-j)!) = 2^k/k!
  const Rational expected[] = {1, 2, 2, Rational(4, 3), Rational(2, 3)};
  for (int k = 0; k <= 4; ++k) CHECK(sq[k] == Scalar(expected[k]));
}

TEST_CASE("series product commutative and associative within window") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> ord(0, 8);
  for (int trial = 0; trial < 30; ++trial) {
    auto make = [&] {
      QSeries s(ord(rng));
      for (int k = 0; k <= s.order(); ++k) s.set(k, testing::random_qlaurent(rng, 2));
      return s;
    };
    QSeries a = make(), b = make(), c = make();
    CHECK(equal_through_common_order(a * b, b * a));
    CHECK(equal_through_common_order((a * b) * c, a * (b * c)));
    CHECK(((a * b) * c).order() == std::min({a.order(), b.order(), c.order()}));
  }
}

TEST_CASE("comparison only up to common order") {
  ScalarSeries a({Scalar(1), Scalar(2)}, 1);
  ScalarSeries b({Scalar(1), Scalar(2), Scalar(9)}, 2);
  CHECK(equal_through_common_order(a, b));
  b.set(1, Scalar(3));
  CHECK_FALSE(equal_through_common_order(a, b));
}
