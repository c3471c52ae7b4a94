#include "qsusy/susy.hpp"

#include <cctype>
#include <utility>

namespace qsusy {

namespace {

const QLaurent kQ = QLaurent::q();
const QLaurent kQinv = QLaurent::q(-1);

std::string residual_of(const Operator& lhs, const Operator& rhs) { return (lhs - rhs).to_string(); }

EqualityReport block_equal(const BlockOp2& a, const BlockOp2& b, const std::vector<Rational>& numeric_q) {
  EqualityReport rep;
  rep.symbolic = true;
  rep.equal = true;
  for (int r = 0; r < 2 && rep.equal; ++r) {
    for (int c = 0; c < 2 && rep.equal; ++c) {
      EqualityReport e = op_equal(a.at(r, c), b.at(r, c), 10);
      if (e.equal && !numeric_q.empty()) e = op_equal(Tier2Sum(a.at(r, c)), Tier2Sum(b.at(r, c)), 10, numeric_q);
      if (!e.equal) {
        rep = e;
        rep.residual = "entry (" + std::to_string(r) + "," + std::to_string(c) + "): " +
                       (e.residual.empty() ? residual_of(a.at(r, c), b.at(r, c)) : e.residual);
      }
    }
  }
  return rep;
}

}  // namespace

Superpotential::Superpotential(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Superpotential Superpotential::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  auto fail = [&](const std::string& why) {
    return DomainError("invalid superpotential '" + std::string(text) + "': " + why);
  };
  if (s.empty()) throw fail("empty");
  std::vector<Scalar> coeffs;
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      throw fail("expected '+' or '-' at position " + std::to_string(pos));
    }
    std::size_t start = pos;
    while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/')) ++pos;
    Rational coef(1);
    if (pos > start) coef = parse_rational(s.substr(start, pos - start));
    int power = 0;
    const bool star = pos > start && pos < s.size() && s[pos] == '*';
    if (star) ++pos;
    if (pos < s.size() && s[pos] == 'x') {
      ++pos;
      power = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        std::size_t p0 = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == p0) throw fail("missing exponent");
        power = std::stoi(s.substr(p0, pos - p0));
      }
    } else if (pos == start || star) {
      throw fail("empty term");
    }
    if (pos < s.size() && s[pos] != '+' && s[pos] != '-') throw fail(std::string("unexpected '") + s[pos] + "'");
    if (coeffs.size() <= static_cast<std::size_t>(power)) coeffs.resize(static_cast<std::size_t>(power) + 1);
    coeffs[static_cast<std::size_t>(power)] += Scalar(coef * sign);
  }
  return Superpotential(std::move(coeffs));
}

Superpotential Superpotential::derivative() const {
  std::vector<Scalar> out;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) out.push_back(coeffs_[k] * Scalar(static_cast<long>(k)));
  return Superpotential(std::move(out));
}

Operator Superpotential::op(int scale_power) const {
  Operator out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    int kk = static_cast<int>(k);
    out += Operator::monomial({kk, 0, 0}, QLaurent::monomial(coeffs_[k], scale_power * kk));
  }
  return out;
}

std::string Superpotential::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + coeffs_[k].to_string() + ")";
    if (k > 0) out += "*x^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

std::string to_string(ModelKind k) {
  switch (k) {
    case ModelKind::undeformed: return "undeformed";
    case ModelKind::spiridonov: return "spiridonov";
    case ModelKind::td: return "td";
  }
  return "td";
}

ModelKind parse_model_kind(std::string_view text) {
  if (text == "undeformed") return ModelKind::undeformed;
  if (text == "spiridonov") return ModelKind::spiridonov;
  if (text == "td") return ModelKind::td;
  throw DomainError("unknown model kind '" + std::string(text) + "'");
}

SusyModel build_model(ModelKind kind, const Superpotential& w) {
  const Scalar r2 = Scalar::inv_sqrt2();
  const Operator p = Operator::p();
  const Operator iw = Scalar::i() * w.op();
  SusyModel m;
  m.kind = kind;
  m.w = w;
  switch (kind) {
    case ModelKind::undeformed: m.lower = r2 * (p - iw); break;
    case ModelKind::spiridonov: m.lower = r2 * ((p - iw) * Operator::t()); break;
    case ModelKind::td: m.lower = r2 * (Operator::t() * p - iw); break;
  }
  m.raise = m.lower.adjoint();
  if (kind == ModelKind::undeformed) {
    m.H = BlockOp2::diag(m.lower * m.raise, m.raise * m.lower);
  } else {
    m.H = BlockOp2::diag(kQ * (m.lower * m.raise), kQinv * (m.raise * m.lower));
  }
  m.Q = BlockOp2(Operator(), Operator(), m.raise, Operator());
  m.Qdag = BlockOp2(Operator(), m.lower, Operator(), Operator());
  return m;
}

SusyModel td_superoscillator() { return build_model(ModelKind::td, Superpotential({Scalar(0), Scalar(1)})); }

Report verify_susy_algebra(const SusyModel& m, const std::vector<Rational>& numeric_q) {
  const std::string pre = "susy." + to_string(m.kind) + ".";
  const BlockOp2 zero;
  Report out;
  if (m.kind == ModelKind::undeformed) {
    const std::string ref = "Eq. 1";
    out.push_back(make_check(pre + "anticomm_Q_Qdag", ref, block_equal(m.Q * m.Qdag + m.Qdag * m.Q, m.H, numeric_q)));
    out.push_back(make_check(pre + "Q_squared", ref, block_equal(m.Q * m.Q, zero, numeric_q)));
    out.push_back(make_check(pre + "Qdag_squared", ref, block_equal(m.Qdag * m.Qdag, zero, numeric_q)));
    out.push_back(make_check(pre + "comm_H_Q", ref, block_equal(q_bracket(m.H, m.Q, BracketKind::comm), zero, numeric_q)));
    out.push_back(
        make_check(pre + "comm_Qdag_H", ref, block_equal(q_bracket(m.Qdag, m.H, BracketKind::comm), zero, numeric_q)));
    return out;
  }
  const std::string ref = m.kind == ModelKind::td ? "Sec. 2.2 / Eq. 11" : "Eq. 11";
  out.push_back(make_check(pre + "qanticomm_Qdag_Q", ref,
                           block_equal(q_bracket(m.Qdag, m.Q, BracketKind::anticomm_q, kQ), m.H, numeric_q)));
  out.push_back(make_check(pre + "qanticomm_Q_Q", ref,
                           block_equal(q_bracket(m.Q, m.Q, BracketKind::anticomm_q, kQ), zero, numeric_q)));
  out.push_back(make_check(pre + "qanticomm_Qdag_Qdag", ref,
                           block_equal(q_bracket(m.Qdag, m.Qdag, BracketKind::anticomm_q, kQ), zero, numeric_q)));
  out.push_back(make_check(pre + "qcomm_H_Q", ref,
                           block_equal(q_bracket(m.H, m.Q, BracketKind::comm_q, kQ), zero, numeric_q)));
  out.push_back(make_check(pre + "qcomm_Qdag_H", ref,
                           block_equal(q_bracket(m.Qdag, m.H, BracketKind::comm_q, kQ), zero, numeric_q)));
  return out;
}

Report verify_intertwining(const SusyModel& m) {
  const std::string pre = "intertwining." + to_string(m.kind) + ".";
  const Operator& hp = m.H.at(0, 0);
  const Operator& hm = m.H.at(1, 1);
  const bool plain = m.kind == ModelKind::undeformed;
  const QLaurent scale = plain ? QLaurent(1) : kQ * kQ;
  const std::string ref = plain ? "Eq. 2" : "Eq. 12";
  Report out;
  out.push_back(make_check(pre + "raise_Hplus", ref, op_equal(m.raise * hp, scale * (hm * m.raise))));
  out.push_back(make_check(pre + "Hplus_lower", ref, op_equal(hp * m.lower, scale * (m.lower * hm))));
  return out;
}

Report verify_displayed_products(const SusyModel& m) {
  const Scalar r2 = Scalar::inv_sqrt2();
  const Scalar i = Scalar::i();
  const Scalar half(Rational(1, 2));
  const Operator p = Operator::p();
  const Operator p2 = p * p;
  const Operator T = Operator::t();
  const Operator Tinv = Operator::t(-1);
  const Superpotential dw = m.w.derivative();
  const Operator W = m.w.op();
  const Operator LR = m.lower * m.raise;
  const Operator RL = m.raise * m.lower;
  const std::string pre = "products." + to_string(m.kind) + ".";
  Report out;
  {
    // H = diag(H+, H-) from the supercharges: Q+Q carries lower*raise, QQ+ carries raise*lower.
    const bool plain = m.kind == ModelKind::undeformed;
    const BlockOp2 blocks = plain ? m.Qdag * m.Q + m.Q * m.Qdag : kQ * (m.Qdag * m.Q) + kQinv * (m.Q * m.Qdag);
    out.push_back(make_check(pre + "hamiltonian_blocks", plain ? "Sec. 1.1" : "Eq. 10", block_equal(blocks, m.H, {})));
  }
  switch (m.kind) {
    case ModelKind::undeformed: {
      out.push_back(make_check(pre + "raise", "Sec. 1.1", op_equal(m.raise, r2 * (p + i * W))));
      const Operator sym = half * (p2 + W * W);
      const Operator wp = half * dw.op();
      out.push_back(make_check(pre + "hamiltonian", "Sec. 1.1",
                               block_equal(m.H, BlockOp2::diag(sym + wp, sym - wp), {})));
      break;
    }
    case ModelKind::spiridonov: {
      out.push_back(make_check(pre + "raise", "Eq. 7", op_equal(m.raise, (kQinv * r2) * (Tinv * (p + i * W)))));
      out.push_back(make_check(pre + "AAdag", "Eq. 8", op_equal(LR, (kQinv * half) * (p2 + W * W + dw.op()))));
      const Operator w_inv = m.w.op(-1);
      const QLaurent qm2 = QLaurent::q(-2);
      const Operator derived = (kQ * half) * (p2 + qm2 * (w_inv * w_inv) - qm2 * dw.op(-1));
      out.push_back(make_known_typo_check(
          pre + "AdagA.literal", "Eq. 9",
          op_equal(RL, (kQ * half) * (p2 + qm2 * (w_inv * w_inv) - kQinv * dw.op(-1))),
          "displayed coefficient q^{-1} on W'(x/q) disagrees with composition; derived A+A = " + derived.to_string()));
      // W'(x/q) read as d/dx[W(x/q)] = q^{-1} W'(x/q).
      out.push_back(make_check(pre + "AdagA.chain_rule_reading", "Eq. 9", op_equal(RL, derived)));
      break;
    }
    case ModelKind::td: {
      out.push_back(make_check(pre + "raise", "Eq. 16", op_equal(m.raise, r2 * (kQinv * (p * Tinv) + i * W))));
      const Operator w_up = m.w.op(1);
      const Operator w_dn = m.w.op(-1);
      const QLaurent c = QLaurent::monomial(half, -1);  // 1/(2q)
      auto bbdag = [&](const QLaurent& wprime_scale) {
        return c * (QLaurent::q(-2) * p2 + kQ * (W * W) + wprime_scale * (dw.op(1) * T) + i * (w_up * p * T) -
                    i * (W * p * Tinv));
      };
      auto bdagb = [&](const QLaurent& wprime_scale) {
        return c * (p2 + kQ * (W * W) - wprime_scale * (dw.op(-1) * Tinv) + i * (W * p * T) -
                    i * (w_dn * p * Tinv));
      };
      out.push_back(make_known_typo_check(pre + "BBdag.literal", "Eq. 17", op_equal(LR, bbdag(QLaurent(1))),
                                          "derived BB+ = " + LR.to_string()));
      // W'(qx) read as d/dx[W(qx)] = q W'(qx).
      out.push_back(make_check(pre + "BBdag.chain_rule_reading", "Eq. 17", op_equal(LR, bbdag(kQ))));
      out.push_back(make_known_typo_check(pre + "BdagB.literal", "Eq. 18", op_equal(RL, bdagb(QLaurent(1))),
                                          "derived B+B = " + RL.to_string()));
      out.push_back(make_check(pre + "BdagB.chain_rule_reading", "Eq. 18", op_equal(RL, bdagb(kQinv))));
      break;
    }
  }
  return out;
}

Report scaling_operator_checks() {
  Report out;
  const Operator T = Operator::t(), Tinv = Operator::t(-1), X = Operator::x(), D = Operator::d();
  const QLaurent q = QLaurent::q();

  // T_q f(x) = f(qx) on a series with generic coefficients; T_q x^m = q^m x^m.
  QSeries f(12);
  for (int k = 0; k <= 12; ++k) f.set(k, QLaurent(k * k - 3 * k + 1));
  const QSeries tf = apply(T, f);
  bool ok = tf.order() == f.order();
  for (int k = 0; k <= 12 && ok; ++k) ok = tf[k] == f[k] * QLaurent::q(k);
  out.push_back(make_check("scaling.action_on_series", "Eq. 4", ok, "T_q f(x) != f(qx)"));
  ok = true;
  for (int m = 0; m <= 12 && ok; ++m) {
    const auto img = T.apply_monomial(m);
    ok = img.size() == 1 && img.begin()->first == m && img.begin()->second == QLaurent::q(m);
  }
  out.push_back(make_check("scaling.monomial_eigenvalue", "Eq. 6", ok, "T_q x^m != q^m x^m"));

  const Superpotential w = Superpotential::parse("x^3-2*x+1");
  out.push_back(make_check("scaling.moves_functions", "Eq. 4", op_equal(T * w.op(), w.op(1) * T)));
  out.push_back(make_check("scaling.moves_derivative", "Eq. 4", op_equal(T * D, QLaurent::q(-1) * (D * T))));
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b)
      if (!(Operator::t(a) * Operator::t(b) == Operator::t(a + b)))
        out.push_back(make_check("scaling.composition", "Eq. 5", false, std::to_string(a) + "," + std::to_string(b)));
  out.push_back(make_check("scaling.composition", "Eq. 5", op_equal(T * Tinv, Operator(1))));
  out.push_back(make_check("scaling.unit_base", "Eq. 5", op_equal(T.at_one(), Operator(1))));
  out.push_back(make_check("scaling.adjoint", "Eq. 5", op_equal(adjoint(T), QLaurent::q(-1) * Tinv)));
  out.push_back(make_check("scaling.adjoint_involution", "Eq. 5", op_equal(adjoint(adjoint(T)), T)));
  // sqrt(q) T unitary, sqrt(q) T + T^{-1}/sqrt(q) Hermitian; both scaled by sqrt(q) to stay polynomial in q.
  out.push_back(make_check("scaling.unitary", "Eq. 5", op_equal(q * (T * adjoint(T)), Operator(1))));
  const Operator herm = q * T + Tinv;
  out.push_back(make_check("scaling.hermitian", "Eq. 5", op_equal(adjoint(herm), herm)));

  // Undeformed boson relations on the ladder built from the X and D generators.
  const Operator a = Scalar::inv_sqrt2() * (X + D), ad = Scalar::inv_sqrt2() * (X - D);
  out.push_back(make_check("boson.canonical", "Eq. 3", op_equal(a * ad - ad * a, Operator(1))));
  out.push_back(make_check("boson.adjoint", "Eq. 3", op_equal(adjoint(a), ad)));
  const Operator N = ad * a;
  out.push_back(make_check("boson.number_raise", "Eq. 3", op_equal(N * ad - ad * N, ad)));
  out.push_back(make_check("boson.number_lower", "Eq. 3", op_equal(N * a - a * N, -a)));
  return out;
}

}  // namespace qsusy
