#include "qsusy/ground_state.hpp"

#include <cmath>

namespace qsusy {

std::string to_string(Branch b) { return b == Branch::f ? "f" : "f_tilde"; }

Branch parse_branch(std::string_view text) {
  if (text == "f") return Branch::f;
  if (text == "f_tilde" || text == "f-tilde") return Branch::f_tilde;
  throw DomainError("unknown branch '" + std::string(text) + "' (expected f or f_tilde)");
}

std::string to_string(Normalizability n) {
  switch (n) {
    case Normalizability::super_gaussian_decay: return "super_gaussian_decay";
    case Normalizability::gaussian: return "gaussian";
    case Normalizability::divergent: return "divergent";
  }
  return "divergent";
}

ZeroModeSolution solve_zero_mode(Branch branch, int order) {
  if (order < 0) throw DomainError("solve_zero_mode needs order >= 0");
  ZeroModeSolution sol{branch, QSeries(order)};
  sol.coeffs.set(0, QLaurent(1));
  for (int k = 0; k + 2 <= order; ++k) {
    const Scalar inv(Rational(1, k + 2));
    const QLaurent step = branch == Branch::f ? QLaurent::monomial(-inv, -(k + 1)) : QLaurent::monomial(inv, k + 3);
    sol.coeffs.set(k + 2, sol.coeffs[k] * step);
  }
  return sol;
}

QLaurent closed_form_coefficient(Branch branch, int k) {
  const Rational c = pow(Rational(branch == Branch::f ? -1 : 1, 2), k) / Rational(factorial(static_cast<unsigned long>(k)));
  return QLaurent::monomial(Scalar(c), branch == Branch::f ? -k * k : k * (k + 2));
}

QSeries td_gaussian(int order) {
  if (order < 0) throw DomainError("td_gaussian needs order >= 0");
  const QSeries in_w = td_exp(QLaurent::monomial(Scalar(Rational(-1, 2)), -1), order / 2, 2);
  return in_w.substitute_power(2).truncated(order);
}

Report verify_annihilation(const ZeroModeSolution& sol, const SusyModel& model) {
  if (model.kind != ModelKind::td) throw DomainError("annihilation check needs the TD model");
  const bool f = sol.branch == Branch::f;
  const QSeries resid = apply(f ? model.lower : model.raise, sol.coeffs);
  std::string detail;
  for (int k = 0; k <= resid.order(); ++k) {
    if (!resid[k].is_zero()) {
      detail = "coefficient of x^" + std::to_string(k) + " is " + resid[k].to_string();
      break;
    }
  }
  const bool ok = detail.empty() && resid.order() >= sol.coeffs.order() - 2;
  if (detail.empty() && !ok) detail = "residual known only through degree " + std::to_string(resid.order());
  return {make_check(f ? "ground_state.B_annihilates_f" : "ground_state.Bdag_annihilates_f_tilde", "Eq. 25", ok,
                     detail)};
}

NormalizabilityResult classify_normalizability(const ZeroModeSolution& sol, const Rational& q0) {
  if (q0 <= 0) throw DomainError("classification needs q0 > 0");
  const int order = sol.coeffs.order();
  if (order < 30) throw DomainError("insufficient data: order " + std::to_string(order) + " < 30");
  const int k_lo = 10, k_hi = order / 2;
  std::vector<double> g;  // log|k! C_{2k}|
  std::vector<int> sign;
  for (int k = k_lo; k <= k_hi; ++k) {
    const Scalar c = sol.coeffs[2 * k].eval(q0);
    if (!c.is_rational() || c.is_zero()) throw DomainError("unexpected coefficient at degree " + std::to_string(2 * k));
    g.push_back(log_abs(c.re() * Rational(factorial(static_cast<unsigned long>(k)))));
    sign.push_back(c.re() > 0 ? 1 : -1);
  }
  double acc = 0;
  for (std::size_t j = 1; j + 1 < g.size(); ++j) acc += 0.5 * (g[j + 1] - 2 * g[j] + g[j - 1]);
  NormalizabilityResult out;
  out.trend = acc / static_cast<double>(g.size() - 2);
  if (out.trend < -1e-9) {
    out.kind = Normalizability::super_gaussian_decay;
  } else if (out.trend > 1e-9) {
    out.kind = Normalizability::divergent;
  } else {
    // log|C_{2k}|/k^2 -> 0: the Gaussian case, decaying when the signs alternate.
    bool alternating = true;
    for (std::size_t j = 1; j < sign.size(); ++j) alternating = alternating && sign[j] != sign[j - 1];
    out.kind = alternating ? Normalizability::gaussian : Normalizability::divergent;
  }
  if (sol.branch == Branch::f && q0 < 1)
    out.note = "q < 1: coefficients grow like q^{-k^2}; the q-regime in which the ground state is normalizable "
               "is not settled by the closed form alone (open question)";
  return out;
}

Report ground_state_checks(int order) {
  Report out;
  std::string detail;
  {
    // Displayed forms: C_k + (k+2) q^{k+1} C_{k+2} = 0 and -C~_k + (k+2) q^{-k-3} C~_{k+2} = 0.
    const ZeroModeSolution f = solve_zero_mode(Branch::f, order);
    const ZeroModeSolution ft = solve_zero_mode(Branch::f_tilde, order);
    bool ok = f.coeffs[1].is_zero() && ft.coeffs[1].is_zero();
    for (int k = 0; k + 2 <= order && ok; ++k) {
      const QLaurent r1 = f.coeffs[k] + QLaurent::monomial(Scalar(k + 2), k + 1) * f.coeffs[k + 2];
      const QLaurent r2 = -ft.coeffs[k] + QLaurent::monomial(Scalar(k + 2), -k - 3) * ft.coeffs[k + 2];
      if (!r1.is_zero() || !r2.is_zero()) ok = false, detail = "k = " + std::to_string(k);
    }
    out.push_back(make_check("ground_state.recurrence", "Eq. 27", ok, detail));
  }
  for (Branch b : {Branch::f, Branch::f_tilde}) {
    const ZeroModeSolution sol = solve_zero_mode(b, order);
    bool ok = true;
    for (int k = 0; 2 * k <= order && ok; ++k) {
      if (!(sol.coeffs[2 * k] == closed_form_coefficient(b, k))) ok = false, detail = "k = " + std::to_string(k);
    }
    out.push_back(make_check("ground_state.closed_form." + to_string(b), "Eq. 28", ok, detail));
    ok = true;
    for (int k = 1; k <= order && ok; k += 2) {
      if (!sol.coeffs[k].is_zero()) ok = false, detail = "degree " + std::to_string(k);
    }
    out.push_back(make_check("ground_state.odd_coefficients_vanish." + to_string(b), "Eq. 26", ok, detail));
  }
  const ZeroModeSolution f = solve_zero_mode(Branch::f, order);
  const ZeroModeSolution ft = solve_zero_mode(Branch::f_tilde, order);
  {
    // psi_0 = C_0 sum_k q^{-k^2}/k! (-x^2/2)^k, expanded independently of the recurrence.
    QSeries psi(order);
    for (int k = 0; 2 * k <= order; ++k) {
      const QLaurent base = QLaurent::monomial(Scalar(Rational(-1, 2)), 0);
      psi.set(2 * k, pow(base, static_cast<unsigned>(k)) * QLaurent::monomial(Scalar(Rational(1, factorial(static_cast<unsigned long>(k)))), -k * k));
    }
    out.push_back(make_check("ground_state.psi0", "Eq. 29", equal_through_common_order(psi, f.coeffs),
                             "psi_0 series differs from the f branch"));
  }
  const QSeries gauss = td_gaussian(order);
  out.push_back(make_check("ground_state.td_gaussian_record", "Eq. 36",
                           gauss.order() == order && equal_through_common_order(gauss, f.coeffs),
                           "TD-exponent record differs from the recurrence solution"));

  const SusyModel m = td_superoscillator();
  append(out, verify_annihilation(f, m));
  append(out, verify_annihilation(ft, m));

  bool ok = true;
  const ScalarSeries f1 = series_at_one(f.coeffs), ft1 = series_at_one(ft.coeffs);
  for (int k = 0; 2 * k <= order && ok; ++k) {
    const Rational inv(1, factorial(static_cast<unsigned long>(k)));
    const Rational half_k = pow(Rational(1, 2), k);
    ok = f1[2 * k] == Scalar(pow(Rational(-1, 2), k) * inv) && ft1[2 * k] == Scalar(half_k * inv);
    if (!ok) detail = "k = " + std::to_string(k);
  }
  out.push_back(make_check("ground_state.q1_limit", "Eq. 28", ok, detail));

  struct Expect {
    Branch branch;
    Rational q0;
    Normalizability kind;
  };
  for (const Expect& e : {Expect{Branch::f, Rational(3, 2), Normalizability::super_gaussian_decay},
                          Expect{Branch::f_tilde, Rational(3, 2), Normalizability::divergent},
                          Expect{Branch::f, Rational(1), Normalizability::gaussian},
                          Expect{Branch::f_tilde, Rational(1), Normalizability::divergent}}) {
    const NormalizabilityResult r = classify_normalizability(e.branch == Branch::f ? f : ft, e.q0);
    out.push_back(make_check("ground_state.normalizability." + to_string(e.branch) + "@q=" + to_string(e.q0), "Sec. 2.5",
                             r.kind == e.kind, "classified " + to_string(r.kind)));
  }

  // Undeformed annihilator (D + x)/sqrt2 kills the Gaussian series.
  const SusyModel und = build_model(ModelKind::undeformed, Superpotential::parse("x"));
  const ScalarSeries resid = apply(und.lower.at_one(), f1, Rational(1));
  out.push_back(make_check("ground_state.q1_undeformed_annihilation", "Eq. 28", resid.is_zero(), "nonzero residual"));
  return out;
}

}  // namespace qsusy
