#include <chrono>
#include <random>

#include "doctest.h"
#include "qsusy/susy.hpp"
#include "random_gen.hpp"

using namespace qsusy;

namespace {

const QLaurent q = QLaurent::q();
const Operator P = Operator::p();
const Operator T = Operator::t();
const Operator Tinv = Operator::t(-1);

// Applies the operators right to left on a polynomial at numeric q, using
// only monomial actions (no operator products).
SparsePoly act(const std::vector<const Operator*>& ops, SparsePoly f, const Rational& q0) {
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
    SparsePoly g;
    for (const auto& [m, c] : f) {
      for (const auto& [k, v] : (*it)->apply_monomial(m, q0)) g[k] += c * v;
    }
    for (auto jt = g.begin(); jt != g.end();) jt = jt->second.is_zero() ? g.erase(jt) : std::next(jt);
    f = std::move(g);
  }
  return f;
}

SparsePoly scaled(SparsePoly f, const Scalar& s) {
  for (auto& [m, c] : f) c *= s;
  return f;
}

Superpotential random_w(std::mt19937& rng) {
  std::uniform_int_distribution<int> deg(1, 4);
  std::vector<Scalar> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& v : c) v = Scalar(testing::random_rational(rng, 5));
  if (c.back().is_zero()) c.back() = Scalar(1);
  return Superpotential(c);
}

int count(const Report& r, Status s) {
  return static_cast<int>(std::count_if(r.begin(), r.end(), [&](const CheckResult& c) { return c.status == s; }));
}

}  // namespace

TEST_CASE("superpotential parsing") {
  CHECK(Superpotential::parse("-x").coefficients() == std::vector<Scalar>{Scalar(0), Scalar(-1)});
  CHECK(Superpotential::parse("x^3 - x") == Superpotential({Scalar(0), Scalar(-1), Scalar(0), Scalar(1)}));
  CHECK(Superpotential::parse("2/3*x^2 + 1/2") ==
        Superpotential({Scalar(Rational(1, 2)), Scalar(0), Scalar(Rational(2, 3))}));
  CHECK(Superpotential::parse("x^3-x").derivative() == Superpotential::parse("3x^2-1"));
  for (const char* bad : {"", "x^", "2*", "y", "x+*x", "0.5x"}) CHECK_THROWS_AS(Superpotential::parse(bad), DomainError);
  CHECK_THROWS_AS(parse_model_kind("tdd"), DomainError);
}

TEST_CASE("model operators match hand-built factorizations") {
  const Scalar r2 = Scalar::inv_sqrt2(), i = Scalar::i();
  for (const char* wt : {"-x", "x", "x^3-x"}) {
    const Superpotential w = Superpotential::parse(wt);
    const Operator W = w.op();
    CHECK(build_model(ModelKind::undeformed, w).lower == r2 * (P - i * W));
    CHECK(build_model(ModelKind::spiridonov, w).lower == r2 * ((P - i * W) * T));
    CHECK(build_model(ModelKind::td, w).lower == r2 * (T * P - i * W));
    for (ModelKind k : {ModelKind::undeformed, ModelKind::spiridonov, ModelKind::td}) {
      const SusyModel m = build_model(k, w);
      CHECK(m.raise == adjoint(m.lower));
      CHECK(adjoint(m.raise) == m.lower);
    }
  }
  // B x^m = (-i m q^{m-1} x^{m-1} - i x^{m+1}) / sqrt2 for the superoscillator.
  const SusyModel td = td_superoscillator();
  for (int m = 0; m <= 8; ++m) {
    auto img = td.lower.apply_monomial(m);
    CHECK(img[m + 1] == QLaurent(-i * r2));
    if (m > 0) CHECK(img[m - 1] == QLaurent::monomial(-i * r2 * Scalar(m), m - 1));
  }
}

TEST_CASE("susy algebra for every kind and superpotential") {
  for (const char* wt : {"-x", "x", "x^3-x"}) {
    for (ModelKind k : {ModelKind::undeformed, ModelKind::spiridonov, ModelKind::td}) {
      const Report r = verify_susy_algebra(build_model(k, Superpotential::parse(wt)), {Rational(3, 5)});
      CAPTURE(wt);
      CHECK(r.size() == 5);
      CHECK(all_passed(r));
      CHECK(count(r, Status::pass) == 5);
    }
  }
}

TEST_CASE("Hamiltonian blocks act as the composed ladder operators") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    const Superpotential w = random_w(rng);
    const Rational q0 = testing::random_positive_rational(rng);
    for (ModelKind k : {ModelKind::spiridonov, ModelKind::td}) {
      const SusyModel m = build_model(k, w);
      for (int deg = 0; deg <= 6; ++deg) {
        const SparsePoly x{{deg, Scalar(1)}};
        const SparsePoly hp = act({&m.H.at(0, 0)}, x, q0);
        CHECK(hp == scaled(act({&m.lower, &m.raise}, x, q0), Scalar(q0)));
        const SparsePoly hm = act({&m.H.at(1, 1)}, x, q0);
        CHECK(hm == scaled(act({&m.raise, &m.lower}, x, q0), Scalar(1 / q0)));
      }
    }
  }
}

TEST_CASE("undeformed Hamiltonians are (p^2 + W^2 -+ W')/2") {
  for (const char* wt : {"-x", "x^3-x", "1/2*x^4+x"}) {
    const Superpotential w = Superpotential::parse(wt);
    const SusyModel m = build_model(ModelKind::undeformed, w);
    const Operator base = Scalar(Rational(1, 2)) * (P * P + w.op() * w.op());
    const Operator dw = Scalar(Rational(1, 2)) * w.derivative().op();
    CHECK(m.H.at(0, 0) == base + dw);
    CHECK(m.H.at(1, 1) == base - dw);
  }
}

TEST_CASE("intertwining for random superpotentials, symbolic and by action") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 20; ++trial) {
    const Superpotential w = random_w(rng);
    CAPTURE(w.to_string());
    for (ModelKind k : {ModelKind::undeformed, ModelKind::spiridonov, ModelKind::td}) {
      const SusyModel m = build_model(k, w);
      const Report r = verify_intertwining(m);
      CHECK(all_passed(r));
      // A+ H+ = q^2 H- A+ through composed monomial actions at q0 = 3/5.
      const Rational q0(3, 5);
      const Scalar s = k == ModelKind::undeformed ? Scalar(1) : Scalar(q0 * q0);
      const SparsePoly x3{{3, Scalar(1)}};
      CHECK(act({&m.raise, &m.H.at(0, 0)}, x3, q0) == scaled(act({&m.H.at(1, 1), &m.raise}, x3, q0), s));
    }
  }
}

TEST_CASE("deformed models reduce to the undeformed one at q = 1") {
  for (const char* wt : {"-x", "x", "x^3-x", "2*x^2-1/3"}) {
    const Superpotential w = Superpotential::parse(wt);
    const SusyModel u = build_model(ModelKind::undeformed, w);
    for (ModelKind k : {ModelKind::spiridonov, ModelKind::td}) {
      const SusyModel m = build_model(k, w);
      CHECK(m.lower.at_one() == u.lower);
      CHECK(m.H.at_one() == u.H);
      CHECK(m.Q.at_one() == u.Q);
    }
  }
}

TEST_CASE("displayed bilinears: literal forms informational, chain-rule reading passes") {
  for (const char* wt : {"-x", "x^3-x"}) {
    const Report sp = verify_displayed_products(build_model(ModelKind::spiridonov, Superpotential::parse(wt)));
    CHECK(all_passed(sp));
    CHECK(count(sp, Status::informational) == 1);
    const Report td = verify_displayed_products(build_model(ModelKind::td, Superpotential::parse(wt)));
    CHECK(all_passed(td));
    CHECK(count(td, Status::informational) == 2);
  }
  // Constant W: W' = 0 and the literal forms hold.
  const Report flat = verify_displayed_products(build_model(ModelKind::td, Superpotential::parse("3")));
  CHECK(count(flat, Status::informational) == 0);
}

TEST_CASE("superoscillator identity lists") {
  const Report sp = superoscillator_identity_suite(ModelKind::spiridonov, default_q_values());
  CHECK(all_passed(sp));
  CHECK(count(sp, Status::informational) == 1);
  const Report td = superoscillator_identity_suite(ModelKind::td, default_q_values());
  CHECK(all_passed(td));
  CHECK(count(td, Status::informational) == 1);
  CHECK_THROWS_AS(superoscillator_identity_suite(ModelKind::undeformed), DomainError);
}

TEST_CASE("superoscillator q-commutators by monomial action") {
  // [B, B+] has no X^2 term, so no monomial is raised, at q0 = 2.
  const SusyModel m = td_superoscillator();
  const Rational q0(2);
  for (int deg = 0; deg <= 6; ++deg) {
    const SparsePoly x{{deg, Scalar(1)}};
    SparsePoly comm = act({&m.lower, &m.raise}, x, q0);
    for (const auto& [k, v] : act({&m.raise, &m.lower}, x, q0)) comm[k] -= v;
    for (auto it = comm.begin(); it != comm.end();) it = it->second.is_zero() ? comm.erase(it) : std::next(it);
    for (const auto& [k, v] : comm) CHECK(k <= deg);
  }
}

TEST_CASE("heisenberg reconstruction") {
  const auto t0 = std::chrono::steady_clock::now();
  for (const Rational& q0 : {Rational(1, 2), Rational(3, 5), Rational(5, 3), Rational(2)}) {
    const Report r = heisenberg_reconstruction(q0, 50);
    CHECK(all_passed(r));
    CHECK(count(r, Status::informational) == 0);
  }
  CHECK(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() < 30);
  CHECK_THROWS_AS(heisenberg_reconstruction(Rational(1)), DomainError);
  CHECK_THROWS_AS(heisenberg_reconstruction(Rational(-1, 2)), DomainError);
}

TEST_CASE("scaling operator properties") { CHECK(all_passed(scaling_operator_checks())); }
