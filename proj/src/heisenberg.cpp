#include "qsusy/susy.hpp"

namespace qsusy {

Report heisenberg_reconstruction(const Rational& q0, int m_max) {
  if (q0 <= 0 || q0 == 1) throw DomainError("reconstruction needs q > 0, q != 1; got " + to_string(q0));
  const std::vector<Rational> at{q0};
  const Scalar i = Scalar::i();
  const Scalar s2 = Scalar::sqrt2();
  const QLaurent q = QLaurent::q();
  const QLaurent qinv = QLaurent::q(-1);
  const Scalar qv(q0);
  const Scalar qv_inv(1 / q0);

  const SusyModel m = td_superoscillator();
  const Operator& B = m.lower;
  const Operator& Bd = m.raise;
  const Operator T = Operator::t();
  const Operator Tinv = Operator::t(-1);
  const Operator X = Operator::x();
  const Operator p = Operator::p();

  const Tier2Sum inv_1_plus_t2 = inverse_of(TPoly(1) + TPoly::t(2));
  const Tier2Sum inv_1_plus_tm2 = inverse_of(TPoly(1) + TPoly::t(-2));
  const Tier2Sum inv_t_plus_tinv = inverse_of(TPoly::t(1) + TPoly::t(-1));

  // P = q sqrt2 (B T/(1+T_{q^2}) + B+ T^{-1}/(1+T_{q^{-2}})) = q sqrt2 (B + B+)/(T_q + T_{q^{-1}})
  const Tier2Sum P_split = (qv * s2) * (Tier2Sum(B * T) * inv_1_plus_t2 + Tier2Sum(Bd * Tinv) * inv_1_plus_tm2);
  const Tier2Sum P = (qv * s2) * (Tier2Sum(B + Bd) * inv_t_plus_tinv);
  // X = i sqrt2 (B/(1+T_{q^2}) - B+/(1+T_{q^{-2}})) = i sqrt2 (B T^{-1} - B+ T)/(T_q + T_{q^{-1}})
  const Tier2Sum X_split = (i * s2) * (Tier2Sum(B) * inv_1_plus_t2 - Tier2Sum(Bd) * inv_1_plus_tm2);
  const Tier2Sum Xr = (i * s2) * (Tier2Sum(B * Tinv - Bd * T) * inv_t_plus_tinv);
  // X = sqrt2/(2i) (B+ - B) + q^{-1}/(2i) P (T - T^{-1})
  const Scalar inv_2i = (Scalar(2) * i).inverse();
  const Tier2Sum X_alt = (s2 * inv_2i) * Tier2Sum(Bd - B) + (qv_inv * inv_2i) * (P * Tier2Sum(T - Tinv));

  auto check = [&](const std::string& id, const std::string& ref, const Tier2Sum& lhs, const Tier2Sum& rhs) {
    try {
      return make_check("heisenberg." + id, ref, op_equal(lhs, rhs, m_max, at));
    } catch (const PoleError& e) {
      return make_check("heisenberg." + id, ref, false, e.what());
    }
  };

  Report out;
  out.push_back(check("P.split_form", "Eq. 20", P_split, p));
  out.push_back(check("P.compact_form", "Eq. 20", P, p));
  out.push_back(check("X.split_form", "Eq. 21", X_split, X));
  out.push_back(check("X.compact_form", "Eq. 21", Xr, X));
  out.push_back(check("X.alternative_form", "Eq. 22", X_alt, X));
  out.push_back(check("XP_commutator", "Sec. 2.4", Xr * P - P * Xr, Operator(i)));

  // One-sided brackets [a,b]_f = ab - f ba.
  const Operator B_Tinv_q = skew_commutator(B, Tinv, q);
  const Operator B_Tinv_qinv = skew_commutator(B, Tinv, qinv);
  const Operator T_B_q = skew_commutator(T, B, q);
  const Operator T_B_qinv = skew_commutator(T, B, qinv);
  const Operator Tinv_B_q = skew_commutator(Tinv, B, q);
  const Operator B_T_q = skew_commutator(B, T, q);
  const Scalar d = qv - qv_inv;  // q - q^{-1}
  const Scalar one_minus_q2 = Scalar(1) - qv * qv;

  out.push_back(check("P.qbracket", "Sec. 2.4", (s2 / (-d)) * Tier2Sum(B_Tinv_q), p));
  out.push_back(check("X.qbracket.T_left", "Sec. 2.4", (i * s2 / d) * Tier2Sum(T * B_Tinv_qinv), X));
  out.push_back(check("X.qbracket.Tinv_right", "Sec. 2.4", (i * s2 / d) * Tier2Sum(T_B_qinv * Tinv), X));
  out.push_back(check("X.qbracket.T_left_q", "Sec. 2.4", (i * s2 / one_minus_q2) * Tier2Sum(T * Tinv_B_q), X));
  out.push_back(check("X.qbracket.Tinv_right_q", "Sec. 2.4", (i * s2 / one_minus_q2) * Tier2Sum(B_T_q * Tinv), X));

  const Operator first = Tinv * T_B_q * B_Tinv_qinv - T * B_Tinv_qinv * B_Tinv_q;
  const Operator second = T * Tinv_B_q * B_Tinv_q - Tinv * T_B_q * skew_commutator(Tinv, B, q);
  const Scalar d2 = d * d;
  out.push_back(check("XP_commutator.bracket_form", "Sec. 2.4", (Scalar(2) * i / d2) * Tier2Sum(first), Operator(i)));
  out.push_back(check("bracket_identity_1", "Sec. 2.4", first, Operator(d2 / Scalar(2))));
  out.push_back(check("bracket_identity_2", "Sec. 2.4", second, Operator(qv * d2 / Scalar(2))));

  // P~ = T_q P = q^{-1} P T_q
  const Tier2Sum Pt = Tier2Sum(T) * P;
  out.push_back(check("Ptilde.forms", "Sec. 2.4", Pt, qv_inv * (P * Tier2Sum(T))));
  out.push_back(check("X_Ptilde.commutator", "Eq. 23", Xr * Pt - Pt * Xr,
                      qv_inv * (Tier2Sum(i * T) + (Scalar(1) - qv) * (Pt * Xr))));
  out.push_back(check("X_Ptilde.q_commutator", "Eq. 24", Xr * Pt - qv_inv * (Pt * Xr), (qv_inv * i) * Tier2Sum(T)));

  // q -> 1 limits of the right-hand sides.
  const Operator rhs_comm = qinv * (i * T + (1 - q) * (T * p * X));
  const Operator rhs_qcomm = qinv * (i * T);
  out.push_back(make_check("heisenberg.X_Ptilde.commutator.q1_limit", "Eq. 23",
                           op_equal(rhs_comm.at_one(), Operator(i))));
  out.push_back(make_check("heisenberg.X_Ptilde.q_commutator.q1_limit", "Eq. 24", op_equal(rhs_qcomm.at_one(), Operator(i))));
  return out;
}

}  // namespace qsusy
