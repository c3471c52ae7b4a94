#include <chrono>

#include "doctest.h"
#include "qsusy/spectra.hpp"

using namespace qsusy;

TEST_CASE("energy levels") {
  CHECK(td_energy(0) == QLaurent(Scalar(Rational(1, 2))));
  CHECK(td_energy(1) == QLaurent(Scalar(Rational(1, 2))) + QLaurent::q(1));
  for (int n = 0; n <= 20; ++n) {
    CHECK(td_energy(n).at_one() == Scalar(Rational(2 * n + 1, 2)));
    CHECK(td_energy(n + 1).at_one() - td_energy(n).at_one() == Scalar(1));
  }
}

TEST_CASE("Fock ladder relations") {
  for (const Rational& q0 : {Rational(1, 2), Rational(2), Rational(1), Rational(7, 5)}) {
    CHECK(all_passed(verify_fock_algebra(q0 == 1 ? 10 : 32, q0)));
  }
  const FockLadder f = make_fock_ladder(6, Rational(2));
  const Matrix h = Scalar(Rational(1, 2)) * (f.raise * f.lower + f.lower * f.raise);
  CHECK(h(2, 2) == Scalar(8));
  // a+a = diag((n]_q), aa+ = diag((n+1]_q) below the cutoff
  const Matrix ada = f.raise * f.lower, aad = f.lower * f.raise;
  for (int n = 0; n < 5; ++n) {
    CHECK(ada(n, n) == Scalar(n * (1L << (n > 0 ? n - 1 : 0)) * (n > 0)));
    CHECK(aad(n, n) == Scalar((n + 1) * (1L << n)));
  }
  CHECK_THROWS_AS(make_fock_ladder(2, Rational(1, 2)), DomainError);
}

TEST_CASE("degeneracy finder") {
  CHECK(degeneracy_polynomial(1, 3) == std::vector<Rational>{1, 2, -3, -4});
  // independent bisection on 4q^3 + 3q^2 - 2q - 1
  auto g = [](double x) { return 4 * x * x * x + 3 * x * x - 2 * x - 1; };
  double lo = 0.5, hi = 0.7;
  REQUIRE(g(lo) < 0);
  REQUIRE(g(hi) > 0);
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (g(mid) < 0 ? lo : hi) = mid;
  }
  const auto root = find_degeneracy(1, 3, 0, 1);
  REQUIRE(root.has_value());
  CHECK(root->q_root == doctest::Approx(lo).epsilon(1e-11));
  CHECK(root->bracket_hi - root->bracket_lo <= 1e-12);
  CHECK(root->residual < 1e-10);
  CHECK(find_degeneracy(3, 1, 0, 1).has_value());
  CHECK_FALSE(find_degeneracy(0, 1, 0, 1).has_value());
  CHECK_THROWS_AS(find_degeneracy(2, 2, 0, 1), DomainError);
  CHECK_THROWS_AS(find_degeneracy(1, 3, 0.5, 1.5), DomainError);
  CHECK_THROWS_AS(find_degeneracy(1, 3, 0.7, 0.5), DomainError);
  CHECK(to_json(*root)["q_root"] == "0.640388203202");
}

TEST_CASE("degeneracy scan") {
  const auto t0 = std::chrono::steady_clock::now();
  const auto roots = scan_degeneracies(5, 0, 1);
  CHECK_FALSE(roots.empty());
  for (const auto& r : roots) {
    CHECK(r.n < r.m);
    CHECK(r.residual < 1e-10);
    const double e = td_energy(r.n).eval(from_double(r.q_root)).re().get_d();
    CHECK(std::fabs(e - td_energy(r.m).eval(from_double(r.q_root)).re().get_d()) < 1e-10);
    CHECK(r.pairwise_only);
  }
  // ordered by (n, m)
  for (std::size_t k = 1; k < roots.size(); ++k)
    CHECK(std::make_pair(roots[k - 1].n, roots[k - 1].m) <= std::make_pair(roots[k].n, roots[k].m));
  CHECK(scan_degeneracies(5, 0.95, 1).empty());
  CHECK(scan_degeneracies(5, 1, 1.05).empty());
  CHECK_THROWS_AS(scan_degeneracies(1, 0, 1), DomainError);
  CHECK(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() < 10);
  CHECK(all_passed(spectra_checks()));
}
