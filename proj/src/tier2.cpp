#include "qsusy/tier2.hpp"

#include <algorithm>
#include <future>
#include <limits>
#include <utility>

namespace qsusy {

std::vector<Rational> default_q_values() {
  return {Rational(1, 2), Rational(3, 5), Rational(2), Rational(5, 3), Rational(9, 10)};
}

PoleError::PoleError(int m, int degree, const Rational& q0)
    : DomainError("pole: diagonal denominator vanishes on x^" + std::to_string(degree) + " (input x^" +
                  std::to_string(m) + ") at q = " + to_string(q0)),
      m_(m),
      degree_(degree),
      q0_(q0) {}

TPoly::TPoly(const QLaurent& c) {
  if (!c.is_zero()) terms_.emplace(0, c);
}

TPoly TPoly::t(int k, const QLaurent& c) {
  TPoly out;
  if (!c.is_zero()) out.terms_.emplace(k, c);
  return out;
}

Scalar TPoly::eigenvalue(int m, const Rational& q0) const {
  Scalar out;
  for (const auto& [k, c] : terms_) out += c.eval(q0) * Scalar(pow(q0, static_cast<long>(k) * m));
  return out;
}

Operator TPoly::as_operator() const {
  Operator out;
  for (const auto& [k, c] : terms_) out += Operator::t(k) * c;
  return out;
}

TPoly operator+(const TPoly& a, const TPoly& b) {
  TPoly out = a;
  for (const auto& [k, c] : b.terms_) {
    auto& slot = out.terms_[k];
    slot += c;
    if (slot.is_zero()) out.terms_.erase(k);
  }
  return out;
}

TPoly operator*(const TPoly& a, const TPoly& b) {
  TPoly out;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) out = out + TPoly::t(ka + kb, ca * cb);
  }
  return out;
}

Tier2Sum::Tier2Sum(const Operator& op) { pipelines_.push_back({Scalar(1), {op}}); }
Tier2Sum::Tier2Sum(const DiagonalRational& r) { pipelines_.push_back({Scalar(1), {r}}); }

std::optional<Operator> Tier2Sum::as_operator() const {
  Operator out;
  for (const auto& p : pipelines_) {
    Operator prod(p.prefactor);
    for (const auto& st : p.stages) {
      if (!std::holds_alternative<Operator>(st)) return std::nullopt;
      prod = prod * std::get<Operator>(st);
    }
    out += prod;
  }
  return out;
}

int Tier2Sum::min_degree_shift() const {
  if (pipelines_.empty()) return 0;
  int best = std::numeric_limits<int>::max();
  for (const auto& p : pipelines_) {
    int shift = 0;
    for (const auto& st : p.stages) {
      if (const auto* op = std::get_if<Operator>(&st)) shift += op->min_degree_shift();
    }
    best = std::min(best, shift);
  }
  return best;
}

SparsePoly Tier2Sum::apply_monomial(int m, const Rational& q0) const {
  SparsePoly out;
  for (const auto& p : pipelines_) {
    SparsePoly cur{{m, p.prefactor}};
    for (auto st = p.stages.rbegin(); st != p.stages.rend() && !cur.empty(); ++st) {
      SparsePoly next;
      if (const auto* op = std::get_if<Operator>(&*st)) {
        for (const auto& [deg, c] : cur) {
          for (const auto& [d2, v] : op->apply_monomial(deg, q0)) {
            auto& slot = next[d2];
            slot += c * v;
          }
        }
      } else {
        const auto& r = std::get<DiagonalRational>(*st);
        for (const auto& [deg, c] : cur) {
          Scalar den = r.den.eigenvalue(deg, q0);
          if (den.is_zero()) throw PoleError(m, deg, q0);
          next[deg] = c * r.num.eigenvalue(deg, q0) / den;
        }
      }
      std::erase_if(next, [](const auto& kv) { return kv.second.is_zero(); });
      cur = std::move(next);
    }
    for (const auto& [deg, c] : cur) {
      auto& slot = out[deg];
      slot += c;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

Tier2Sum Tier2Sum::operator-() const {
  Tier2Sum out = *this;
  for (auto& p : out.pipelines_) p.prefactor = -p.prefactor;
  return out;
}

Tier2Sum operator+(const Tier2Sum& a, const Tier2Sum& b) {
  Tier2Sum out = a;
  out.pipelines_.insert(out.pipelines_.end(), b.pipelines_.begin(), b.pipelines_.end());
  return out;
}

Tier2Sum operator*(const Tier2Sum& a, const Tier2Sum& b) {
  Tier2Sum out;
  for (const auto& pa : a.pipelines_) {
    for (const auto& pb : b.pipelines_) {
      Tier2Pipeline p{pa.prefactor * pb.prefactor, pa.stages};
      p.stages.insert(p.stages.end(), pb.stages.begin(), pb.stages.end());
      out.pipelines_.push_back(std::move(p));
    }
  }
  return out;
}

Tier2Sum operator*(const Scalar& c, const Tier2Sum& a) {
  Tier2Sum out = a;
  for (auto& p : out.pipelines_) p.prefactor = c * p.prefactor;
  return out;
}

ScalarSeries apply(const Tier2Sum& op, const ScalarSeries& s, const Rational& q0) {
  ScalarSeries out(s.order() + op.min_degree_shift());
  for (int m = 0; m <= s.order(); ++m) {
    if (s[m].is_zero()) continue;
    for (const auto& [deg, c] : op.apply_monomial(m, q0)) {
      if (deg > out.order()) continue;
      out.set(deg, out[deg] + s[m] * c);
    }
  }
  return out;
}

namespace {

template <typename Map, typename Fmt>
std::optional<Discrepancy> compare_images(int m, const Map& a, const Map& b, Fmt fmt) {
  auto it_a = a.begin();
  auto it_b = b.begin();
  using V = typename Map::mapped_type;
  while (it_a != a.end() || it_b != b.end()) {
    int deg;
    V va{}, vb{};
    if (it_b == b.end() || (it_a != a.end() && it_a->first < it_b->first)) {
      deg = it_a->first;
      va = (it_a++)->second;
    } else if (it_a == a.end() || it_b->first < it_a->first) {
      deg = it_b->first;
      vb = (it_b++)->second;
    } else {
      deg = it_a->first;
      va = (it_a++)->second;
      vb = (it_b++)->second;
    }
    if (!(va == vb)) return Discrepancy{m, std::nullopt, deg, fmt(va), fmt(vb)};
  }
  return std::nullopt;
}

}  // namespace

std::string EqualityReport::describe() const {
  if (equal) return symbolic ? "equal (symbolic)" : "equal (monomial action)";
  std::string out = "not equal";
  if (first) {
    out += ": x^" + std::to_string(first->m) + " -> coefficient of x^" + std::to_string(first->degree);
    if (first->q0) out += " at q=" + to_string(*first->q0);
    out += ": lhs=" + first->lhs + ", rhs=" + first->rhs;
  }
  if (!residual.empty()) out += "; residual " + residual;
  return out;
}

EqualityReport op_equal(const Operator& a, const Operator& b, int degree_bound) {
  EqualityReport rep;
  rep.symbolic = true;
  Operator diff = a - b;
  rep.equal = diff.is_zero();
  if (rep.equal) return rep;
  rep.residual = diff.to_string();
  for (int m = 0; m <= degree_bound && !rep.first; ++m) {
    rep.first = compare_images(m, a.apply_monomial(m), b.apply_monomial(m),
                               [](const QLaurent& v) { return v.to_string(); });
  }
  return rep;
}

EqualityReport op_equal(const Tier2Sum& a, const Tier2Sum& b, int degree_bound, const std::vector<Rational>& q_values) {
  if (q_values.empty()) {
    auto oa = a.as_operator();
    auto ob = b.as_operator();
    if (oa && ob) return op_equal(*oa, *ob, degree_bound);
    return op_equal(a, b, degree_bound, default_q_values());
  }
  auto check_one = [&](const Rational& q0) -> std::optional<Discrepancy> {
    for (int m = 0; m <= degree_bound; ++m) {
      auto d = compare_images(m, a.apply_monomial(m, q0), b.apply_monomial(m, q0),
                              [](const Scalar& v) { return v.to_string(); });
      if (d) {
        d->q0 = q0;
        return d;
      }
    }
    return std::nullopt;
  };
  std::vector<std::future<std::optional<Discrepancy>>> jobs;
  jobs.reserve(q_values.size());
  for (const auto& q0 : q_values) jobs.push_back(std::async(std::launch::async, check_one, q0));
  EqualityReport rep;
  rep.symbolic = false;
  rep.equal = true;
  for (auto& job : jobs) {
    auto d = job.get();
    if (d && rep.equal) {
      rep.equal = false;
      rep.first = std::move(d);
    }
  }
  return rep;
}

}  // namespace qsusy
