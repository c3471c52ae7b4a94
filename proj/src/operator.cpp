#include "qsusy/operator.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <utility>

namespace qsusy {

namespace {

Scalar falling_factorial(long n, long k) {
  Integer out(1);
  for (long j = 0; j < k; ++j) out *= (n - j);
  return Scalar(Rational(out));
}

std::string key_to_string(const MonomialKey& k) {
  std::ostringstream out;
  auto part = [&](const char* sym, int p) {
    if (p == 0) return;
    if (out.tellp() > 0) out << ' ';
    out << sym;
    if (p != 1) out << '^' << p;
  };
  part("X", k.x_pow);
  part("D", k.d_pow);
  part("T", k.t_exp);
  return out.str();
}

}  // namespace

Operator::Operator(const QLaurent& c) {
  if (!c.is_zero()) terms_.emplace(MonomialKey{}, c);
}

Operator Operator::monomial(MonomialKey key, const QLaurent& c) {
  Operator out;
  out.add_term(key, c);
  return out;
}

Operator Operator::p() { return Operator::d() * QLaurent(-Scalar::i()); }

std::vector<OpMonomial> Operator::monomials() const {
  std::vector<OpMonomial> out;
  out.reserve(terms_.size());
  for (const auto& [k, c] : terms_) out.push_back({k, c});
  return out;
}

QLaurent Operator::coefficient(MonomialKey key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? QLaurent() : it->second;
}

void Operator::add_term(const MonomialKey& key, const QLaurent& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Operator operator*(const Operator& a, const Operator& b) {
  Operator out;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      // T^c X^e D^f = q^{c(e-f)} X^e D^f T^c, then Leibniz for D^b X^e.
      QLaurent base = ca * cb * QLaurent::q(ka.t_exp * (kb.x_pow - kb.d_pow));
      const int kmax = std::min(ka.d_pow, kb.x_pow);
      for (int k = 0; k <= kmax; ++k) {
        Scalar mult = Scalar(Rational(binomial(static_cast<unsigned long>(ka.d_pow), static_cast<unsigned long>(k)))) *
                      falling_factorial(kb.x_pow, k);
        MonomialKey key{ka.x_pow + kb.x_pow - k, ka.d_pow - k + kb.d_pow, ka.t_exp + kb.t_exp};
        out.add_term(key, base * mult);
      }
    }
  }
  return out;
}

Operator Operator::operator-() const {
  Operator out;
  for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
  return out;
}

Operator& Operator::operator+=(const Operator& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

Operator& Operator::operator-=(const Operator& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

Operator& Operator::operator*=(const QLaurent& c) {
  Operator out;
  for (const auto& [k, v] : terms_) out.add_term(k, v * c);
  return *this = std::move(out);
}

Operator Operator::adjoint() const {
  // (c X^a D^b T^t)^+ = conj(c) q^{-t} T^{-t} (-1)^b D^b X^a
  Operator out;
  for (const auto& [k, c] : terms_) {
    QLaurent coeff = c.conj() * QLaurent::q(-k.t_exp);
    if (k.d_pow % 2 != 0) coeff = -coeff;
    out += Operator::monomial({0, 0, -k.t_exp}, coeff) * Operator::d(k.d_pow) * Operator::x(k.x_pow);
  }
  return out;
}

Operator adjoint(const Operator& op) { return op.adjoint(); }

Operator Operator::at_one() const {
  Operator out;
  for (const auto& [k, c] : terms_) out.add_term({k.x_pow, k.d_pow, 0}, QLaurent(c.at_one()));
  return out;
}

Operator Operator::at(const Rational& q0) const {
  Operator out;
  for (const auto& [k, c] : terms_) out.add_term(k, QLaurent(c.eval(q0)));
  return out;
}

int Operator::min_degree_shift() const {
  if (terms_.empty()) return 0;
  int shift = std::numeric_limits<int>::max();
  for (const auto& [k, c] : terms_) shift = std::min(shift, k.x_pow - k.d_pow);
  return shift;
}

std::map<int, QLaurent> Operator::apply_monomial(int m) const {
  std::map<int, QLaurent> out;
  for (const auto& [k, c] : terms_) {
    if (k.d_pow > m) continue;
    QLaurent v = c * QLaurent::q(k.t_exp * m) * falling_factorial(m, k.d_pow);
    const int deg = m - k.d_pow + k.x_pow;
    auto& slot = out[deg];
    slot += v;
    if (slot.is_zero()) out.erase(deg);
  }
  return out;
}

SparsePoly Operator::apply_monomial(int m, const Rational& q0) const {
  SparsePoly out;
  for (const auto& [k, c] : terms_) {
    if (k.d_pow > m) continue;
    Scalar v = c.eval(q0) * Scalar(pow(q0, static_cast<long>(k.t_exp) * m)) * falling_factorial(m, k.d_pow);
    const int deg = m - k.d_pow + k.x_pow;
    auto& slot = out[deg];
    slot += v;
    if (slot.is_zero()) out.erase(deg);
  }
  return out;
}

std::string Operator::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    std::string ks = key_to_string(k);
    out << '(' << c.to_string() << ')';
    if (!ks.empty()) out << '*' << ks;
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Rewriting normal form

namespace {

int rank(Generator g) {
  switch (g) {
    case Generator::X: return 0;
    case Generator::D: return 1;
    case Generator::T:
    case Generator::TInv: return 2;
  }
  return 3;
}

bool is_scaling(Generator g) { return g == Generator::T || g == Generator::TInv; }

}  // namespace

Operator normal_form(const FreeExpr& expr) {
  Operator out;
  std::vector<Word> work(expr.begin(), expr.end());
  while (!work.empty()) {
    Word w = std::move(work.back());
    work.pop_back();
    if (w.coeff.is_zero()) continue;
    auto& l = w.letters;
    std::size_t i = 0;
    for (; i + 1 < l.size(); ++i) {
      if (rank(l[i]) > rank(l[i + 1])) break;
      if (is_scaling(l[i]) && is_scaling(l[i + 1]) && l[i] != l[i + 1]) break;
    }
    if (i + 1 >= l.size()) {
      MonomialKey key;
      for (Generator g : l) {
        if (g == Generator::X) ++key.x_pow;
        if (g == Generator::D) ++key.d_pow;
        if (g == Generator::T) ++key.t_exp;
        if (g == Generator::TInv) --key.t_exp;
      }
      out += Operator::monomial(key, w.coeff);
      continue;
    }
    const Generator a = l[i], b = l[i + 1];
    if (is_scaling(a) && is_scaling(b)) {
      l.erase(l.begin() + static_cast<long>(i), l.begin() + static_cast<long>(i) + 2);
      work.push_back(std::move(w));
      continue;
    }
    std::swap(l[i], l[i + 1]);
    if (a == Generator::D && b == Generator::X) {
      // D X = X D + 1
      Word contracted{w.coeff, l};
      contracted.letters.erase(contracted.letters.begin() + static_cast<long>(i),
                               contracted.letters.begin() + static_cast<long>(i) + 2);
      work.push_back(std::move(contracted));
    } else {
      // T^s X = q^s X T^s,  T^s D = q^{-s} D T^s
      const int s = a == Generator::T ? 1 : -1;
      const int factor = b == Generator::X ? s : -s;
      w.coeff *= QLaurent::q(factor);
    }
    work.push_back(std::move(w));
  }
  return out;
}

FreeExpr concat(const FreeExpr& a, const FreeExpr& b) {
  FreeExpr out;
  for (const auto& wa : a) {
    for (const auto& wb : b) {
      Word w{wa.coeff * wb.coeff, wa.letters};
      w.letters.insert(w.letters.end(), wb.letters.begin(), wb.letters.end());
      out.push_back(std::move(w));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// BlockOp2

BlockOp2::BlockOp2(Operator a00, Operator a01, Operator a10, Operator a11)
    : e_{std::move(a00), std::move(a01), std::move(a10), std::move(a11)} {}

BlockOp2 BlockOp2::identity() { return {Operator(1), Operator(), Operator(), Operator(1)}; }
BlockOp2 BlockOp2::sigma3() { return {Operator(1), Operator(), Operator(), Operator(-1)}; }
BlockOp2 BlockOp2::diag(Operator top, Operator bottom) { return {std::move(top), Operator(), Operator(), std::move(bottom)}; }

bool BlockOp2::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](const Operator& o) { return o.is_zero(); });
}

BlockOp2 BlockOp2::adjoint() const { return {e_[0].adjoint(), e_[2].adjoint(), e_[1].adjoint(), e_[3].adjoint()}; }

BlockOp2 BlockOp2::at_one() const { return {e_[0].at_one(), e_[1].at_one(), e_[2].at_one(), e_[3].at_one()}; }

BlockOp2 BlockOp2::operator-() const { return {-e_[0], -e_[1], -e_[2], -e_[3]}; }

BlockOp2& BlockOp2::operator+=(const BlockOp2& o) {
  for (std::size_t k = 0; k < 4; ++k) e_[k] += o.e_[k];
  return *this;
}

BlockOp2& BlockOp2::operator-=(const BlockOp2& o) {
  for (std::size_t k = 0; k < 4; ++k) e_[k] -= o.e_[k];
  return *this;
}

BlockOp2 operator*(const BlockOp2& a, const BlockOp2& b) {
  return {a.e_[0] * b.e_[0] + a.e_[1] * b.e_[2], a.e_[0] * b.e_[1] + a.e_[1] * b.e_[3],
          a.e_[2] * b.e_[0] + a.e_[3] * b.e_[2], a.e_[2] * b.e_[1] + a.e_[3] * b.e_[3]};
}

BlockOp2 operator*(const QLaurent& c, const BlockOp2& a) {
  return {c * a.e_[0], c * a.e_[1], c * a.e_[2], c * a.e_[3]};
}

std::string BlockOp2::to_string() const {
  return "[[" + e_[0].to_string() + ", " + e_[1].to_string() + "], [" + e_[2].to_string() + ", " +
         e_[3].to_string() + "]]";
}

// ---------------------------------------------------------------------------
// Series action

QSeries apply(const Operator& op, const QSeries& s) {
  QSeries out(s.order() + op.min_degree_shift());
  for (int m = 0; m <= s.order(); ++m) {
    if (s[m].is_zero()) continue;
    for (auto& [deg, c] : op.apply_monomial(m)) {
      if (deg > out.order()) continue;
      out.set(deg, out[deg] + s[m] * c);
    }
  }
  return out;
}

ScalarSeries apply(const Operator& op, const ScalarSeries& s, const Rational& q0) {
  ScalarSeries out(s.order() + op.min_degree_shift());
  for (int m = 0; m <= s.order(); ++m) {
    if (s[m].is_zero()) continue;
    for (auto& [deg, c] : op.apply_monomial(m, q0)) {
      if (deg > out.order()) continue;
      out.set(deg, out[deg] + s[m] * c);
    }
  }
  return out;
}

ScalarSeries apply_scaling(const ScalarSeries& s, const Rational& r) {
  ScalarSeries out(s.order());
  for (int m = 0; m <= s.order(); ++m) out.set(m, s[m] * Scalar(pow(r, m)));
  return out;
}

}  // namespace qsusy
