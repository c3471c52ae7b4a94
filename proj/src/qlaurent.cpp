#include "qsusy/qlaurent.hpp"

#include <sstream>

namespace qsusy {

QLaurent::QLaurent(const Scalar& c) {
  if (!c.is_zero()) terms_.emplace(0, c);
}

QLaurent QLaurent::monomial(const Scalar& c, int exponent) {
  QLaurent out;
  if (!c.is_zero()) out.terms_.emplace(exponent, c);
  return out;
}

bool QLaurent::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

Scalar QLaurent::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Scalar() : it->second;
}

int QLaurent::min_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }
int QLaurent::max_exponent() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

void QLaurent::add_term(int exponent, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Scalar QLaurent::eval(const Rational& q0) const {
  if (q0 <= 0) throw DomainError("q must be positive, got " + qsusy::to_string(q0));
  Scalar out;
  for (const auto& [k, c] : terms_) out += c * Scalar(pow(q0, k));
  return out;
}

Scalar QLaurent::at_one() const {
  Scalar out;
  for (const auto& [k, c] : terms_) out += c;
  return out;
}

QLaurent QLaurent::substitute_power(int k) const {
  if (k == 0) return QLaurent(at_one());
  QLaurent out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e * k, c);
  return out;
}

QLaurent QLaurent::conj() const {
  QLaurent out;
  for (const auto& [k, c] : terms_) out.terms_.emplace(k, c.conj());
  return out;
}

QLaurent QLaurent::inverse_monomial() const {
  if (!is_monomial()) throw DomainError("QLaurent inverse exists only for monomials: " + to_string());
  const auto& [k, c] = *terms_.begin();
  return monomial(c.inverse(), -k);
}

QLaurent QLaurent::operator-() const {
  QLaurent out;
  for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
  return out;
}

QLaurent& QLaurent::operator+=(const QLaurent& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

QLaurent& QLaurent::operator-=(const QLaurent& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

QLaurent operator*(const QLaurent& a, const QLaurent& b) {
  QLaurent out;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) out.add_term(ka + kb, ca * cb);
  }
  return out;
}

QLaurent& QLaurent::operator*=(const QLaurent& o) { return *this = *this * o; }

QLaurent& QLaurent::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

std::string QLaurent::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    std::string cs = c.to_string();
    bool compound = cs.find(' ') != std::string::npos;
    bool negative = !compound && cs[0] == '-';
    if (!first) out << (negative ? " - " : " + ");
    else if (negative) out << '-';
    first = false;
    std::string mag = negative ? cs.substr(1) : cs;
    if (k == 0) {
      out << (compound ? "(" + mag + ")" : mag);
      continue;
    }
    if (compound) out << '(' << mag << ")*";
    else if (mag != "1") out << mag << '*';
    out << 'q';
    if (k != 1) out << '^' << k;
  }
  return out.str();
}

Scalar qlaurent_eval(const QLaurent& p, const Rational& q0) { return p.eval(q0); }

QLaurent pow(const QLaurent& base, unsigned n) {
  QLaurent out(1);
  for (unsigned j = 0; j < n; ++j) out *= base;
  return out;
}

}  // namespace qsusy
