#include "qsusy/spectra.hpp"

#include <cmath>
#include <cstdio>
#include <future>

namespace qsusy {

QLaurent td_energy(int n) {
  if (n < 0) throw DomainError("td_energy needs n >= 0");
  const Scalar half(Rational(1, 2));
  return QLaurent::monomial(half * Scalar(n), n - 1) + QLaurent::monomial(half * Scalar(n + 1), n);
}

Matrix Matrix::identity(int dim) {
  Matrix out(dim);
  for (int k = 0; k < dim; ++k) out(k, k) = Scalar(1);
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  Matrix out = a;
  for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] += b.data_[k];
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  Matrix out = a;
  for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] -= b.data_[k];
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  Matrix out(a.dim_);
  for (int r = 0; r < a.dim_; ++r)
    for (int k = 0; k < a.dim_; ++k) {
      const Scalar& ark = a(r, k);
      if (ark.is_zero()) continue;
      for (int c = 0; c < a.dim_; ++c) {
        if (!b(k, c).is_zero()) out(r, c) += ark * b(k, c);
      }
    }
  return out;
}

Matrix operator*(const Scalar& c, const Matrix& a) {
  Matrix out = a;
  for (auto& v : out.data_) v *= c;
  return out;
}

FockLadder make_fock_ladder(int dim, const Rational& q0) {
  if (dim < 3) throw DomainError("Fock ladder needs dim >= 3");
  FockLadder f{dim, q0, Matrix(dim), Matrix(dim), Matrix(dim)};
  for (int n = 1; n < dim; ++n) {
    f.lower(n - 1, n) = td_number(n).eval(q0);
    f.raise(n, n - 1) = Scalar(1);
  }
  for (int n = 0; n < dim; ++n) f.number(n, n) = Scalar(n);
  return f;
}

namespace {

// First entry of rows [0, rows) of a - b that is nonzero.
std::string first_difference(const Matrix& a, const Matrix& b, int rows) {
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < a.dim(); ++c)
      if (!(a(r, c) == b(r, c)))
        return "entry (" + std::to_string(r) + "," + std::to_string(c) + "): " + a(r, c).to_string() + " vs " +
               b(r, c).to_string();
  return {};
}

}  // namespace

Report verify_fock_algebra(int dim, const Rational& q0) {
  const FockLadder f = make_fock_ladder(dim, q0);
  const std::string tag = "fock.dim" + std::to_string(dim) + ".q" + to_string(q0) + ".";
  Report out;

  Matrix q_pow_n(dim);
  for (int n = 0; n < dim; ++n) q_pow_n(n, n) = Scalar(pow(q0, n));
  const Matrix lhs = f.lower * f.raise - Scalar(q0) * (f.raise * f.lower);
  std::string d = first_difference(lhs, q_pow_n, dim - 1);
  out.push_back(make_check(tag + "q_commutator", "Eq. 14", d.empty(), d));

  d = first_difference(f.number * f.raise - f.raise * f.number, f.raise, dim);
  out.push_back(make_check(tag + "number_raise", "Eq. 14", d.empty(), d));
  d = first_difference(f.number * f.lower - f.lower * f.number, Scalar(-1) * f.lower, dim);
  out.push_back(make_check(tag + "number_lower", "Eq. 14", d.empty(), d));

  const Matrix h = Scalar(Rational(1, 2)) * (f.raise * f.lower + f.lower * f.raise);
  d.clear();
  for (int n = 0; n + 1 < dim && d.empty(); ++n) {
    if (!(h(n, n) == td_energy(n).eval(q0))) d = "n = " + std::to_string(n) + ": " + h(n, n).to_string();
  }
  out.push_back(make_check(tag + "hamiltonian_diagonal", "Sec. 2.1", d.empty(), d));
  return out;
}

std::vector<Rational> degeneracy_polynomial(int n, int m) {
  if (n == m) throw DomainError("degeneracy needs n != m");
  if (n < 0 || m < 0) throw DomainError("levels must be nonnegative");
  const int low = std::min(n, m) >= 1 ? std::min(n, m) - 1 : 0;
  std::vector<Rational> c(static_cast<std::size_t>(std::max(n, m) + 1 - low));
  auto add = [&](int level, int sign) {
    if (level >= 1) c[static_cast<std::size_t>(level - 1 - low)] += sign * level;
    c[static_cast<std::size_t>(level - low)] += sign * (level + 1);
  };
  add(n, 1);
  add(m, -1);
  return c;
}

namespace {

double eval_poly(const std::vector<Rational>& c, double x) {
  double acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

int exact_sign(const std::vector<Rational>& c, double x) {
  const Rational xr = from_double(x);
  Rational acc(0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * xr + *it;
  return sgn(acc);
}

int sign_of(double v) { return (v > 0) - (v < 0); }

double energy_value(int n, double q) { return 0.5 * (n * std::pow(q, n - 1) + (n + 1) * std::pow(q, n)); }

void check_interval(double lo, double hi) {
  const bool below = lo >= 0 && hi <= 1;
  const bool above = lo >= 1;
  if (!(lo < hi) || !(below || above) || !std::isfinite(hi))
    throw DomainError("interval must lie within (0,1) or (1,inf) with lo < hi");
}

std::vector<DegeneracyRoot> roots_for_pair(int n, int m, double lo, double hi, int grid, bool first_only) {
  check_interval(lo, hi);
  const std::vector<Rational> c = degeneracy_polynomial(n, m);
  std::vector<DegeneracyRoot> out;
  auto interior = [&](double x) { return x > 0 && x != 1; };
  double prev_x = std::nan("");
  int prev_s = 0;
  for (int i = 0; i <= grid; ++i) {
    const double x = lo + (hi - lo) * i / grid;
    if (!interior(x)) continue;
    const int s = sign_of(eval_poly(c, x));
    if (!std::isnan(prev_x) && prev_s != 0 && s != 0 && s != prev_s) {
      double a = prev_x, b = x;
      int sa = exact_sign(c, a);
      while (b - a > 1e-12) {
        const double mid = 0.5 * (a + b);
        const int sm = exact_sign(c, mid);
        if (sm == 0) {
          a = b = mid;
          break;
        }
        if (sm == sa) a = mid; else b = mid;
      }
      // Certificate: exact sign change (or exact zero) at the bracket ends.
      if (a == b ? exact_sign(c, a) == 0 : exact_sign(c, a) * exact_sign(c, b) < 0) {
        DegeneracyRoot r;
        r.n = n;
        r.m = m;
        r.bracket_lo = a;
        r.bracket_hi = b;
        r.q_root = 0.5 * (a + b);
        r.residual = std::fabs(energy_value(n, r.q_root) - energy_value(m, r.q_root));
        out.push_back(r);
        if (first_only) return out;
      }
    }
    prev_x = x;
    prev_s = s;
  }
  return out;
}

}  // namespace

std::optional<DegeneracyRoot> find_degeneracy(int n, int m, double lo, double hi) {
  auto roots = roots_for_pair(n, m, lo, hi, 1000, true);
  if (roots.empty()) return std::nullopt;
  return roots.front();
}

std::vector<DegeneracyRoot> scan_degeneracies(int n_max, double lo, double hi, int grid) {
  if (n_max < 2) throw DomainError("scan needs n_max >= 2");
  check_interval(lo, hi);
  std::vector<std::future<std::vector<DegeneracyRoot>>> jobs;
  for (int n = 0; n < n_max; ++n)
    for (int m = n + 1; m <= n_max; ++m)
      jobs.push_back(std::async(std::launch::async, [=] { return roots_for_pair(n, m, lo, hi, grid, false); }));
  std::vector<DegeneracyRoot> out;
  for (auto& j : jobs) {
    for (DegeneracyRoot r : j.get()) {
      const double e = energy_value(r.n, r.q_root);
      for (int k = 0; k <= n_max; ++k) {
        if (k != r.n && k != r.m && std::fabs(energy_value(k, r.q_root) - e) < 1e-8) r.pairwise_only = false;
      }
      out.push_back(r);
    }
  }
  return out;
}

nlohmann::json to_json(const DegeneracyRoot& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", r.q_root);
  return {{"n", r.n}, {"m", r.m}, {"q_root", std::string(buf)}, {"residual", r.residual}, {"pairwise_only", r.pairwise_only}};
}

Report spectra_checks() {
  Report out;
  bool ok = true;
  std::string detail;
  for (int n = 0; n <= 30 && ok; ++n) {
    const QLaurent e = td_energy(n);
    if (!(e.at_one() == Scalar(Rational(2 * n + 1, 2)))) ok = false, detail = "E_n(1) at n = " + std::to_string(n);
    if (!(e.at_one() - td_energy(n + 1).at_one() == Scalar(-1))) ok = false, detail = "spacing at n = " + std::to_string(n);
    const QLaurent via_numbers = Scalar(Rational(1, 2)) * (td_number(n) + td_number(n + 1));
    if (!(e == via_numbers)) ok = false, detail = "E_n vs ((n] + (n+1])/2 at n = " + std::to_string(n);
  }
  out.push_back(make_check("spectrum.energy_formula", "Sec. 2.1", ok, detail));

  // N -> N q^{N-1} as x d/dx -> x (q^{-1} d/dx T_q); the same replacement p -> q^{-1} p T_q = T_q p.
  const Operator deformed_number = QLaurent::q(-1) * (Operator::x() * Operator::d() * Operator::t());
  ok = true;
  for (int n = 0; n <= 30 && ok; ++n) {
    const auto img = deformed_number.apply_monomial(n);
    const QLaurent got = img.count(n) ? img.at(n) : QLaurent();
    ok = (img.size() <= 1) && got == td_number(n);
    if (!ok) detail = "n = " + std::to_string(n);
  }
  out.push_back(make_check("spectrum.td_number_operator", "Eq. 15", ok, detail));
  out.push_back(make_check("spectrum.momentum_replacement", "Eq. 15",
                           op_equal(QLaurent::q(-1) * (Operator::p() * Operator::t()), Operator::t() * Operator::p())));

  for (const Rational& q : {Rational(1, 2), Rational(2)}) append(out, verify_fock_algebra(32, q));
  append(out, verify_fock_algebra(10, Rational(1, 2)));
  append(out, verify_fock_algebra(10, Rational(1)));
  {
    const FockLadder f = make_fock_ladder(6, Rational(2));
    const Matrix h = Scalar(Rational(1, 2)) * (f.raise * f.lower + f.lower * f.raise);
    out.push_back(make_check("fock.hamiltonian_entry_n2_q2", "Sec. 2.1", h(2, 2) == Scalar(8), h(2, 2).to_string()));
  }

  const auto r13 = find_degeneracy(1, 3, 0, 1);
  char buf[160] = "no sign change";
  if (r13) std::snprintf(buf, sizeof buf, "q* = %.12f, residual %.3e", r13->q_root, r13->residual);
  out.push_back(make_measured_check("degeneracy.pair_1_3", "Sec. 2.1",
                                    r13 && r13->q_root > 0.5 && r13->q_root < 0.7 && r13->residual < 1e-10, buf));
  out.push_back(make_check("degeneracy.pair_0_1_none", "Sec. 2.1", !find_degeneracy(0, 1, 0, 1).has_value(),
                           "unexpected root"));

  const auto roots = scan_degeneracies(5, 0, 1);
  int pairwise = 0;
  bool verified = !roots.empty();
  for (const auto& r : roots) {
    pairwise += r.pairwise_only;
    verified = verified && r.residual < 1e-10;
  }
  std::snprintf(buf, sizeof buf, "%zu roots for n < m <= 5 on (0,1), %d pairwise-only", roots.size(), pairwise);
  out.push_back(make_measured_check("degeneracy.scan_n5", "Sec. 2.1", verified && pairwise > 0, buf));
  return out;
}

}  // namespace qsusy
