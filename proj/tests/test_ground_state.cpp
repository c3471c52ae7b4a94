#include <random>

#include "doctest.h"
#include "qsusy/ground_state.hpp"
#include "random_gen.hpp"

using namespace qsusy;

namespace {

// Rank of a dense matrix over Q(i, sqrt 2) by exact Gaussian elimination.
int rank_of(std::vector<std::vector<Scalar>> a) {
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    const Scalar inv = a[r][c].inverse();
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      const Scalar f = a[i][c] * inv;
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return static_cast<int>(r);
}

}  // namespace

TEST_CASE("zero-mode recurrence examples") {
  const ZeroModeSolution f = solve_zero_mode(Branch::f, 10);
  CHECK(f.coeffs[0] == QLaurent(1));
  CHECK(f.coeffs[1].is_zero());
  CHECK(f.coeffs[2] == QLaurent::monomial(Scalar(Rational(-1, 2)), -1));
  CHECK(f.coeffs[4] == QLaurent::monomial(Scalar(Rational(1, 8)), -4));
  const ZeroModeSolution ft = solve_zero_mode(Branch::f_tilde, 10);
  // C~_2 = q^3/2, C~_4 = q^5 C~_2 / 4 = q^8/8
  CHECK(ft.coeffs[2] == QLaurent::monomial(Scalar(Rational(1, 2)), 3));
  CHECK(ft.coeffs[4] == QLaurent::monomial(Scalar(Rational(1, 8)), 8));
  CHECK_THROWS_AS(solve_zero_mode(Branch::f, -1), DomainError);
  CHECK(solve_zero_mode(Branch::f, 0).coeffs.order() == 0);
}

TEST_CASE("closed forms through degree 80") {
  for (Branch b : {Branch::f, Branch::f_tilde}) {
    const ZeroModeSolution s = solve_zero_mode(b, 80);
    for (int k = 0; k <= 40; ++k) {
      // q^{-k^2} (-1/2)^k / k!  and  q^{k(k+2)} (1/2)^k / k!, built here from scratch
      Rational c(1);
      for (int j = 1; j <= k; ++j) c *= Rational(b == Branch::f ? -1 : 1, 2 * j);
      CHECK(s.coeffs[2 * k] == QLaurent::monomial(Scalar(c), b == Branch::f ? -k * k : k * (k + 2)));
      if (2 * k + 1 <= 80) CHECK(s.coeffs[2 * k + 1].is_zero());
    }
  }
}

TEST_CASE("q = 1 gives the Gaussian") {
  const ScalarSeries g = series_at_one(solve_zero_mode(Branch::f, 24).coeffs);
  Rational c(1);
  for (int k = 0; k <= 12; ++k) {
    CHECK(g[2 * k] == Scalar(c));
    c *= Rational(-1, 2 * (k + 1));
  }
}

TEST_CASE("TD-Gaussian record equals the recurrence solution") {
  const QSeries g = td_gaussian(80);
  CHECK(g.order() == 80);
  CHECK(g[2] == QLaurent::monomial(Scalar(Rational(-1, 2)), -1));
  CHECK(equal_through_common_order(g, solve_zero_mode(Branch::f, 80).coeffs));
  CHECK(td_gaussian(7).order() == 7);
  CHECK(equal_through_common_order(td_gaussian(7), solve_zero_mode(Branch::f, 7).coeffs));
}

TEST_CASE("annihilation residual is zero") {
  const SusyModel m = td_superoscillator();
  for (Branch b : {Branch::f, Branch::f_tilde}) {
    const ZeroModeSolution s = solve_zero_mode(b, 40);
    const Report r = verify_annihilation(s, m);
    CHECK(all_passed(r));
    const QSeries resid = apply(b == Branch::f ? m.lower : m.raise, s.coeffs);
    CHECK(resid.order() >= 38);
    CHECK(resid.is_zero());
  }
  // The opposite superpotential sign does not annihilate f.
  const SusyModel flipped = build_model(ModelKind::td, Superpotential::parse("-x"));
  CHECK_FALSE(all_passed(verify_annihilation(solve_zero_mode(Branch::f, 20), flipped)));
  CHECK_THROWS_AS(verify_annihilation(solve_zero_mode(Branch::f, 20), build_model(ModelKind::spiridonov, Superpotential::parse("x"))),
                  DomainError);
}

TEST_CASE("annihilation by numeric monomial action") {
  const SusyModel m = td_superoscillator();
  std::mt19937 rng(5);
  for (int trial = 0; trial < 4; ++trial) {
    const Rational q0 = testing::random_positive_rational(rng);
    const ScalarSeries f = eval_series(solve_zero_mode(Branch::f, 30).coeffs, q0);
    SparsePoly img;
    for (int k = 0; k <= 30; ++k)
      for (const auto& [deg, v] : m.lower.apply_monomial(k, q0)) img[deg] += f[k] * v;
    for (const auto& [deg, v] : img)
      if (deg <= 29) CHECK(v.is_zero());
  }
}

TEST_CASE("uniqueness: the kernel of B on polynomials of degree <= N is one-dimensional modulo truncation") {
  const SusyModel m = td_superoscillator();
  std::mt19937 rng(17);
  for (int trial = 0; trial < 3; ++trial) {
    const Rational q0 = testing::random_positive_rational(rng);
    const int n = 20;
    // rows: degrees 0..n-1 of B f; columns: C_0..C_n
    std::vector<std::vector<Scalar>> a(n, std::vector<Scalar>(n + 1));
    for (int k = 0; k <= n; ++k)
      for (const auto& [deg, v] : m.lower.apply_monomial(k, q0))
        if (deg < n) a[static_cast<std::size_t>(deg)][static_cast<std::size_t>(k)] += v;
    CHECK(n + 1 - rank_of(a) == 1);
  }
}

TEST_CASE("undeformed limit annihilation") {
  const ScalarSeries g = series_at_one(solve_zero_mode(Branch::f, 20).coeffs);
  const Operator a = Scalar::inv_sqrt2() * (Operator::d() + Operator::x());
  CHECK(apply(a, g, Rational(1)).is_zero());
}

TEST_CASE("normalizability classifier") {
  const ZeroModeSolution f = solve_zero_mode(Branch::f, 60);
  const ZeroModeSolution ft = solve_zero_mode(Branch::f_tilde, 60);
  CHECK(classify_normalizability(f, Rational(3, 2)).kind == Normalizability::super_gaussian_decay);
  CHECK(classify_normalizability(ft, Rational(3, 2)).kind == Normalizability::divergent);
  CHECK(classify_normalizability(f, Rational(1)).kind == Normalizability::gaussian);
  CHECK(classify_normalizability(ft, Rational(1)).kind == Normalizability::divergent);
  const NormalizabilityResult low = classify_normalizability(f, Rational(1, 2));
  CHECK(low.kind == Normalizability::divergent);
  CHECK_FALSE(low.note.empty());
  // trend tends to -log q for f
  CHECK(classify_normalizability(f, Rational(3, 2)).trend == doctest::Approx(-std::log(1.5)).epsilon(1e-9));
  CHECK_THROWS_AS(classify_normalizability(solve_zero_mode(Branch::f, 20), Rational(2)), DomainError);
  CHECK_THROWS_AS(classify_normalizability(f, Rational(0)), DomainError);
}

TEST_CASE("ground-state suite") {
  const Report r = ground_state_checks(80);
  CHECK(all_passed(r));
  CHECK(std::none_of(r.begin(), r.end(), [](const CheckResult& c) { return c.status == Status::informational; }));
}
