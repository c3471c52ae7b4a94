#pragma once

#include <string>
#include <string_view>

#include "qsusy/qspecial.hpp"
#include "qsusy/susy.hpp"

namespace qsusy {

enum class Branch { f, f_tilde };

std::string to_string(Branch b);
Branch parse_branch(std::string_view text);

// Power-series zero mode with C_0 = 1; every coefficient scales with C_0.
struct ZeroModeSolution {
  Branch branch = Branch::f;
  QSeries coeffs;
};

// f:       C_{k+2} = -C_k / ((k+2) q^{k+1})
// f_tilde: C_{k+2} =  q^{k+3} C_k / (k+2)
// with C_1 = 0, through degree `order`.
ZeroModeSolution solve_zero_mode(Branch branch, int order);

// C_{2k}/C_0: q^{-k^2} (-1/2)^k / k!  or  q^{k(k+2)} (1/2)^k / k!
QLaurent closed_form_coefficient(Branch branch, int k);

// C_0 exp^(TD)_{q^2}(-q^{-1} z^2 / 2) expanded through z^order.
QSeries td_gaussian(int order);

// B f = 0 for the f branch, B+ f_tilde = 0 for f_tilde, symbolically in q.
// The model must be the TD kind; the residual is known through order - 1.
Report verify_annihilation(const ZeroModeSolution& sol, const SusyModel& model);

enum class Normalizability { super_gaussian_decay, gaussian, divergent };

std::string to_string(Normalizability n);

struct NormalizabilityResult {
  Normalizability kind = Normalizability::gaussian;
  // Mean of (1/2) second difference of log|k! C_{2k}| over k = 10..order/2;
  // tends to -log q for f and +log q for f_tilde.
  double trend = 0;
  std::string note;
};

// Coefficient-growth heuristic at numeric q0 > 0; needs order >= 30.
NormalizabilityResult classify_normalizability(const ZeroModeSolution& sol, const Rational& q0);

// Recurrence, closed forms, TD-Gaussian record, annihilation, q -> 1 limits.
Report ground_state_checks(int order = 80);

}  // namespace qsusy
