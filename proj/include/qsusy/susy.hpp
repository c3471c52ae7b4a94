#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qsusy/report.hpp"

namespace qsusy {

// Polynomial superpotential W(x) = sum_k w_k x^k.
class Superpotential {
 public:
  Superpotential() = default;
  explicit Superpotential(std::vector<Scalar> coeffs);
  // Accepts sums of terms like "-x", "x^3 - x", "2/3*x^2 + 1/2".
  static Superpotential parse(std::string_view text);

  const std::vector<Scalar>& coefficients() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Superpotential derivative() const;
  // Multiplication by W(q^k x).
  Operator op(int scale_power = 0) const;
  std::string to_string() const;

  friend bool operator==(const Superpotential& a, const Superpotential& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<Scalar> coeffs_;
};

enum class ModelKind { undeformed, spiridonov, td };

std::string to_string(ModelKind k);
ModelKind parse_model_kind(std::string_view text);

struct SusyModel {
  ModelKind kind = ModelKind::undeformed;
  Superpotential w;
  Operator lower;  // A or B
  Operator raise;  // adjoint(lower)
  BlockOp2 H;
  BlockOp2 Q;
  BlockOp2 Qdag;
};

// Undeformed: A = (p - iW)/sqrt2.  Spiridonov: A = (p - iW) T_q / sqrt2.
// TD: B = (T_q p - iW)/sqrt2. raise = adjoint(lower);
// H = diag(q lower raise, q^{-1} raise lower) for the deformed kinds.
SusyModel build_model(ModelKind kind, const Superpotential& w);

// TD superoscillator B = (T_q p - iX)/sqrt2, i.e. build_model(td, W = x).
SusyModel td_superoscillator();

// q-SUSY relations {Q+,Q}_q = H, {Q,Q}_q = {Q+,Q+}_q = 0, [H,Q]_q = [Q+,H]_q = 0
// (plain brackets for the undeformed kind), symbolic in q. Non-empty
// numeric_q adds a monomial-action cross-check at those points.
Report verify_susy_algebra(const SusyModel& m, const std::vector<Rational>& numeric_q = {});

// A+ H_+ = q^2 H_- A+ and H_+ A = q^2 A H_- (q = 1 for the undeformed kind).
Report verify_intertwining(const SusyModel& m);

// Displayed closed forms of the raising operator and of the bilinears for
// general W, derived forms compared against the displayed ones.
Report verify_displayed_products(const SusyModel& m);

// Full displayed identity list of the superoscillator for the given kind
// (spiridonov or td). q_values adds numeric cross-checks.
Report superoscillator_identity_suite(ModelKind kind, const std::vector<Rational>& q_values = {});

// Properties of the scaling operator T_q and the undeformed boson relations.
Report scaling_operator_checks();

// Reconstruction of X and P from B, B+ and the deformed Heisenberg relations,
// checked on x^0..x^m_max at q0 (q0 != 1).
Report heisenberg_reconstruction(const Rational& q0, int m_max = 50);

}  // namespace qsusy
