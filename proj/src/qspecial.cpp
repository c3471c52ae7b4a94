#include "qsusy/qspecial.hpp"

#include <cstdio>
#include <random>

namespace qsusy {

QLaurent td_number(int n) {
  if (n < 0) throw DomainError("td_number needs n >= 0");
  if (n == 0) return QLaurent();
  return QLaurent::monomial(Scalar(n), n - 1);
}

QLaurent td_factorial(int n) {
  if (n < 0) throw DomainError("td_factorial needs n >= 0");
  return QLaurent::monomial(Scalar(Rational(factorial(static_cast<unsigned long>(n)))), n * (n - 1) / 2);
}

QLaurent td_factorial_product(int n) {
  QLaurent acc(1);
  for (int k = 1; k <= n; ++k) acc = acc * td_number(k);
  return acc;
}

QSeries td_derivative(const QSeries& s) {
  QSeries out(s.order() - 1);
  for (int n = 1; n <= s.order(); ++n) out.set(n - 1, s[n] * td_number(n));
  return out;
}

QSeries td_exp(const QLaurent& alpha, int order, int base_power) {
  if (order < 0) throw DomainError("td_exp needs order >= 0");
  QSeries out(order);
  QLaurent alpha_n(1);
  for (int n = 0; n <= order; ++n) {
    const Rational inv_fact(1, factorial(static_cast<unsigned long>(n)));
    out.set(n, alpha_n * QLaurent::monomial(Scalar(inv_fact), -base_power * n * (n - 1) / 2));
    alpha_n = alpha_n * alpha;
  }
  return out;
}

// ---- PQPoly

PQPoly::PQPoly(long c) {
  if (c != 0) terms_[{0, 0}] = Scalar(c);
}

PQPoly PQPoly::monomial(const Scalar& c, int p_exp, int q_exp) {
  PQPoly out;
  out.add_term({p_exp, q_exp}, c);
  return out;
}

void PQPoly::add_term(std::pair<int, int> e, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Scalar PQPoly::eval(const Rational& p0, const Rational& q0) const {
  Scalar acc;
  for (const auto& [e, c] : terms_) acc += c * Scalar(pow(p0, e.first) * pow(q0, e.second));
  return acc;
}

QLaurent PQPoly::diagonal() const {
  QLaurent acc;
  for (const auto& [e, c] : terms_) acc += QLaurent::monomial(c, e.first + e.second);
  return acc;
}

std::string PQPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")";
    if (e.first) out += "*p^" + std::to_string(e.first);
    if (e.second) out += "*q^" + std::to_string(e.second);
  }
  return out;
}

PQPoly operator+(const PQPoly& a, const PQPoly& b) {
  PQPoly out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, c);
  return out;
}

PQPoly operator-(const PQPoly& a, const PQPoly& b) {
  PQPoly out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, -c);
  return out;
}

PQPoly operator*(const PQPoly& a, const PQPoly& b) {
  PQPoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
  return out;
}

PQPoly pq_number(int n) {
  if (n < 0) throw DomainError("pq_number needs n >= 0");
  PQPoly out;
  for (int j = 0; j < n; ++j) out = out + PQPoly::monomial(Scalar(1), n - 1 - j, j);
  return out;
}

PQPoly pq_factorial(int n) {
  PQPoly acc(1);
  for (int k = 1; k <= n; ++k) acc = acc * pq_number(k);
  return acc;
}

// ---- floating-point sums

namespace {

template <typename Next>
FloatSum sum_terms(double tol, int max_terms, Next next) {
  FloatSum out;
  double term = 1;
  for (int n = 0; n < max_terms; ++n) {
    out.value += term;
    out.terms_used = n + 1;
    out.last_term = std::fabs(term);
    if (term == 0.0 || std::fabs(term) < tol * std::fabs(out.value)) {
      out.converged = true;
      return out;
    }
    term *= next(n);
  }
  return out;
}

}  // namespace

FloatSum td_exp_sum(double z, double q, double tol, int max_terms) {
  return sum_terms(tol, max_terms, [&](int n) { return z * std::pow(q, -n) / (n + 1); });
}

double td_exp_value(double z, double q) { return td_exp_sum(z, q).value; }

FloatSum twin_phi(const TwinPhiSpec<double>& s, double tol, int max_terms) {
  if (!(std::fabs(s.q / s.p) < 1) || !(std::fabs(s.z) < 1))
    throw DomainError("twin-basic series needs |q/p| < 1 and |z| < 1");
  double pn = 1, qn = 1, qp_n = 1;
  const double r = s.q / s.p;
  return sum_terms(tol, max_terms, [&](int n) {
    const double f = detail::twin_ratio(s, n, pn, qn, qp_n);
    pn *= s.p;
    qn *= s.q;
    qp_n *= r;
    return f;
  });
}

FloatSum bibasic_F(const BibasicSpec<double>& s, double tol, int max_terms) {
  double pn = 1, qn = 1;
  return sum_terms(tol, max_terms, [&](int n) {
    const double f = detail::bibasic_ratio(s, n, pn, qn);
    pn *= s.p;
    qn *= s.q;
    return f;
  });
}

FloatSum pq_exp(double z, double p, double q, double tol, int max_terms) {
  // [n+1] = p [n] + q^n
  double bracket = 0, qn = 1;
  return sum_terms(tol, max_terms, [&](int n) {
    bracket = p * bracket + qn;
    qn *= q;
    if (bracket == 0.0) throw SeriesPoleError(n + 1);
    return z / bracket;
  });
}

TwinPhiSpec<double> pq_exp_as_twin_phi(double z, double p, double q) {
  return {{{1.0, 0.0}}, {{0.0, 1.0}}, p, q, (p - q) * z};
}

BibasicSpec<double> td_exp_as_bibasic(double z, double p, double q) {
  return {{}, {}, {}, {0.0}, p, 1.0 / q, (1.0 - p) * z};
}

// ---- check suites

namespace {

std::string rel_err_text(double err) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "relative error %.3e", err);
  return buf;
}

std::string short_decimal(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

double rel_err(double a, double b) { return std::fabs(a - b) / std::max(std::fabs(b), 1e-300); }

CheckResult measured(const std::string& id, const std::string& ref, double a, double b, double tol) {
  const double e = rel_err(a, b);
  return make_measured_check(id, ref, e < tol, rel_err_text(e));
}

Rational random_nonzero(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
  long n = 0;
  while (n == 0) n = num(rng);
  Rational r(n, den(rng));
  r.canonicalize();
  return r;
}

}  // namespace

Report td_analysis_checks(int trials, int order, std::uint32_t seed) {
  Report out;
  const int n_max = 20;

  bool ok = true;
  std::string detail;
  for (int n = 0; n <= n_max && ok; ++n) {
    if (!(td_number(n).at_one() == Scalar(n))) ok = false, detail = "n = " + std::to_string(n);
  }
  out.push_back(make_check("td.number.q1_limit", "Eq. 30", ok, detail));

  ok = true;
  for (int n = 0; n <= n_max && ok; ++n) {
    if (!(pq_number(n).diagonal() == td_number(n))) ok = false, detail = "n = " + std::to_string(n);
  }
  out.push_back(make_check("td.number.pq_diagonal", "Eq. 30", ok, detail));

  ok = true;
  for (int n = 0; n <= n_max && ok; ++n) {
    if (!(td_factorial_product(n) == td_factorial(n)))
      ok = false, detail = "n = " + std::to_string(n) + ": " + td_factorial_product(n).to_string();
  }
  out.push_back(make_check("td.factorial.product_vs_closed", "Eq. 31", ok, detail));

  // D^(TD) = q^{-1} D T_q on monomials.
  const Operator d_td = QLaurent::q(-1) * (Operator::d() * Operator::t());
  const QSeries probe = td_exp(QLaurent(1), order);
  out.push_back(make_check("td.derivative.operator_form", "Eq. 32 / Eq. 33",
                           equal_through_common_order(td_derivative(probe), apply(d_td, probe)),
                           "series mismatch"));

  const std::vector<QLaurent> alphas{QLaurent(1), QLaurent::monomial(Scalar(Rational(-1, 2)), -1),
                                     QLaurent::monomial(Scalar(3), 2) + QLaurent(1), QLaurent(Scalar::i() * Scalar::sqrt2())};
  ok = true;
  for (const auto& alpha : alphas) {
    const QSeries e = td_exp(alpha, order);
    const QSeries resid = td_derivative(e) - e.scaled(alpha).truncated(order - 1);
    if (!resid.is_zero() || resid.order() != order - 1) ok = false, detail = "alpha = " + alpha.to_string();
  }
  out.push_back(make_check("td.exp.eigenfunction", "Eq. 35", ok, detail));

  ok = true;
  const ScalarSeries e1 = series_at_one(td_exp(QLaurent(1), order));
  for (int n = 0; n <= order && ok; ++n) {
    if (!(e1[n] == Scalar(Rational(1, factorial(static_cast<unsigned long>(n)))))) ok = false, detail = "n = " + std::to_string(n);
  }
  out.push_back(make_check("td.exp.q1_limit", "Eq. 34", ok, detail));

  out.push_back(make_check("pq.number.3", "Eq. 37",
                           pq_number(3) == PQPoly::monomial(Scalar(1), 2, 0) + PQPoly::monomial(Scalar(1), 1, 1) +
                                               PQPoly::monomial(Scalar(1), 0, 2),
                           pq_number(3).to_string()));

  // Twin Pochhammer special cases on random rational parameters.
  std::mt19937 rng(seed);
  bool e39 = true, e40 = true, e41 = true, e42 = true, e43f = true, e43l = true, e44c = true, e44d = true;
  std::string d43l, d44d;
  for (int t = 0; t < trials; ++t) {
    const Rational a = random_nonzero(rng), b = random_nonzero(rng), p = random_nonzero(rng);
    Rational q = random_nonzero(rng);
    const Rational zero(0);
    for (int n = 0; n <= 10; ++n) {
      const Rational tri = pow(q, n * (n - 1) / 2);
      e39 = e39 && twin_pochhammer(zero, b, p, q, n) == pow(Rational(-b), n) * tri;
      e40 = e40 && twin_pochhammer(a, zero, p, q, n) == pow(a, n) * pow(p, n * (n - 1) / 2);
      e41 = e41 && twin_pochhammer(a, b, q, q, n) == pow(Rational(a - b), n) * tri;
      if (n >= 1) e42 = e42 && twin_pochhammer(a, a, p, q, n) == 0;
      const Rational pp = twin_pochhammer(p, q, p, q, n);
      const Rational pq_n = pow(Rational(p - q), n);
      e43f = e43f && pp == pq_n * pq_factorial_value(n, p, q);
      if (n >= 1 && e43l && pp != pq_n * pq_number_value(n, p, q)) {
        e43l = false;
        d43l = "fails first at n = " + std::to_string(n) + ", p = " + to_string(p) + ", q = " + to_string(q);
      }
      const Rational qi = 1 / q;
      const Rational sym = twin_pochhammer(qi, q, qi, q, n);
      e44c = e44c && sym == pow(Rational(qi - q), n) * pq_factorial_value(n, qi, q);
      if (e44d && sym != pow(Rational(q - qi), n) * pq_factorial_value(n, qi, q)) {
        e44d = false;
        d44d = "fails first at n = " + std::to_string(n) + ", q = " + to_string(q);
      }
    }
  }
  {
    // Explicit product list against the running product, and the empty product.
    const Rational a(3, 2), b(-2, 5), p(7, 3), q(4, 9);
    bool def_ok = twin_pochhammer(a, b, p, q, 0) == 1;
    Rational acc(1);
    for (int j = 0; j < 8; ++j) {
      acc *= a * pow(p, j) - b * pow(q, j);
      def_ok = def_ok && twin_pochhammer(a, b, p, q, j + 1) == acc;
    }
    out.push_back(make_check("twin.definition", "Sec. 2.7", def_ok, "product mismatch"));
  }
  out.push_back(make_check("twin.zero_a", "Eq. 39", e39, "mismatch"));
  out.push_back(make_check("twin.zero_b", "Eq. 40", e40, "mismatch"));
  out.push_back(make_check("twin.equal_bases", "Eq. 41", e41, "mismatch"));
  out.push_back(make_check("twin.equal_pair", "Eq. 42", e42, "mismatch (checked for n >= 1; n = 0 gives 1)"));
  out.push_back(make_check("twin.base_pair.factorial_reading", "Eq. 43", e43f, "mismatch"));
  out.push_back(CheckResult{"twin.base_pair.literal_reading", "Eq. 43", e43l ? Status::pass : Status::informational,
                            e43l ? std::nullopt
                                 : std::optional<std::string>("displayed (p-q)^n [n]_{p,q} without factorial; " + d43l +
                                                              "; the product equals (p-q)^n [n]_{p,q}!")});
  out.push_back(make_check("twin.symmetric_pair.derived", "Eq. 44", e44c,
                           "((1/q,q);(1/q,q))_n != (1/q - q)^n [n]_{1/q,q}!"));
  out.push_back(CheckResult{"twin.symmetric_pair.displayed", "Eq. 44", e44d ? Status::pass : Status::informational,
                            e44d ? std::nullopt
                                 : std::optional<std::string>("displayed prefactor (q - 1/q)^n with [n]_q = [n]_{1/q,q}; " +
                                                              d44d + "; holds for even n, the product carries (1/q - q)^n")});
  return out;
}

Report hypergeometric_checks() {
  Report out;
  // Exact partial sums: the twin-basic form reproduces the (p,q)-exponent termwise.
  {
    const Rational p(2), q(1), z(1, 10);
    TwinPhiSpec<Rational> s{{{Rational(1), Rational(0)}}, {{Rational(0), Rational(1)}}, p, q, (p - q) * z};
    Rational direct(0), zn(1);
    for (int n = 0; n < 25; ++n, zn *= z) direct += zn / pq_factorial_value(n, p, q);
    out.push_back(make_check("hyper.pq_exp.exact_partial", "Eq. 45", twin_phi_partial(s, 25) == direct,
                             "partial sums differ"));
  }
  {
    const Rational q(9, 10), p = 1 / q, z(1, 5);
    TwinPhiSpec<Rational> s{{{Rational(1), Rational(0)}}, {{Rational(0), Rational(1)}}, p, q, (p - q) * z};
    Rational direct(0), zn(1);
    for (int n = 0; n < 25; ++n, zn *= z) direct += zn / pq_factorial_value(n, p, q);
    out.push_back(make_check("hyper.q_exp.exact_partial", "Eq. 46", twin_phi_partial(s, 25) == direct,
                             "partial sums differ"));
  }
  {
    // Term-ratio summation against the displayed general term.
    const Rational p(5, 2), q(2, 3), z(3, 10);
    TwinPhiSpec<Rational> s{{{Rational(1, 3), Rational(2)}, {Rational(-1), Rational(1, 2)}}, {{Rational(4), Rational(1, 5)}}, p, q, z};
    const int r = 2, sden = 1;
    Rational direct(0);
    for (int n = 0; n < 12; ++n) {
      Rational t = twin_pochhammer(s.num[0].first, s.num[0].second, p, q, n) *
                   twin_pochhammer(s.num[1].first, s.num[1].second, p, q, n) /
                   twin_pochhammer(s.den[0].first, s.den[0].second, p, q, n);
      const Rational sign = pow(Rational(-1), n) * pow(Rational(q / p), n * (n - 1) / 2);
      t *= pow(sign, 1 + sden - r) / twin_pochhammer(p, q, p, q, n) * pow(z, n);
      direct += t;
    }
    out.push_back(make_check("hyper.twin_phi.general_term", "Eq. 38", twin_phi_partial(s, 12) == direct, "partial sums differ"));
  }
  {
    BibasicSpec<Rational> s{{Rational(1, 2)}, {Rational(2, 3)}, {}, {Rational(3)}, Rational(1, 3), Rational(5, 4), Rational(1, 7)};
    const int r = 1, rp = 1, sb = 0, sd = 1;
    Rational direct(0);
    for (int n = 0; n < 12; ++n) {
      Rational t = q_pochhammer(s.a[0], s.p, n) * q_pochhammer(s.c[0], s.q, n) /
                   (q_pochhammer(s.d[0], s.q, n) * q_pochhammer(s.p, s.p, n));
      t *= pow(Rational(pow(Rational(-1), n) * pow(s.p, n * (n - 1) / 2)), 1 + sb - r);
      t *= pow(Rational(pow(Rational(-1), n) * pow(s.q, n * (n - 1) / 2)), sd - rp);
      direct += t * pow(s.z, n);
    }
    out.push_back(make_check("hyper.bibasic.general_term", "Eq. 48", bibasic_partial(s, 12) == direct, "partial sums differ"));
  }
  for (double z : {0.05, 0.1}) {
    const FloatSum phi = twin_phi(pq_exp_as_twin_phi(z, 2, 1));
    const FloatSum direct = pq_exp(z, 2, 1);
    out.push_back(measured("hyper.pq_exp.p2_q1.z" + short_decimal(z), "Eq. 45", phi.value, direct.value,
                           1e-12));
  }
  out.push_back(make_check("hyper.pq_exp.z0", "Eq. 45", twin_phi(pq_exp_as_twin_phi(0, 2, 1)).value == 1.0,
                           "value at z = 0 is not 1"));
  for (double z : {0.05, 0.1, 0.2}) {
    const double q = 0.9;
    const FloatSum phi = twin_phi(pq_exp_as_twin_phi(z, 1 / q, q));
    const FloatSum direct = pq_exp(z, 1 / q, q);
    out.push_back(measured("hyper.q_exp.z" + short_decimal(z), "Eq. 46", phi.value, direct.value, 1e-12));
  }
  {
    const double q = 0.9, z = 0.05;
    const FloatSum phi = twin_phi(pq_exp_as_twin_phi(z, q * (1 + 1e-6), q));
    out.push_back(measured("hyper.td_exp.p_to_q_limit", "Eq. 47", phi.value, td_exp_value(z, q), 1e-5));
  }
  {
    const double q = 0.9, z = 0.1;
    out.push_back(measured("hyper.pq_exp.p_to_q_limit", "Sec. 2.6", pq_exp(z, q + 1e-6, q).value, td_exp_value(z, q), 1e-5));
  }
  {
    const double q = 0.8, z = 0.1;
    const FloatSum f = bibasic_F(td_exp_as_bibasic(z, 1 - 1e-6, q));
    out.push_back(measured("hyper.td_exp.bibasic_limit", "Eq. 49", f.value, td_exp_value(z, q), 1e-5));
  }
  {
    const double p = 1 - 1e-6;
    const double ratio = q_pochhammer(p, p, 5) / std::pow(1 - p, 5);
    out.push_back(measured("hyper.pochhammer_factorial_limit", "Eq. 49", ratio, 120.0, 1e-4));
  }
  {
    BibasicSpec<double> empty{{}, {}, {}, {}, 0.5, 0.5, 0.0};
    out.push_back(make_check("hyper.bibasic.z0", "Eq. 48", bibasic_F(empty).value == 1.0, "value at z = 0 is not 1"));
  }
  return out;
}

}  // namespace qsusy
