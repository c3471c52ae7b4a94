#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qsusy/qspecial.hpp"
#include "qsusy/report.hpp"

namespace qsusy {

// E_n = (n q^{n-1} + (n+1) q^n) / 2
QLaurent td_energy(int n);

// Dense square matrix over Q(i, sqrt 2).
class Matrix {
 public:
  explicit Matrix(int dim = 0) : dim_(dim), data_(static_cast<std::size_t>(dim) * dim) {}
  static Matrix identity(int dim);

  int dim() const { return dim_; }
  const Scalar& operator()(int r, int c) const { return data_[index(r, c)]; }
  Scalar& operator()(int r, int c) { return data_[index(r, c)]; }

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& c, const Matrix& a);

 private:
  std::size_t index(int r, int c) const { return static_cast<std::size_t>(r) * dim_ + c; }
  int dim_;
  std::vector<Scalar> data_;
};

// Truncated Fock ladder at numeric q. The lowering matrix carries (n]_q on
// the superdiagonal and the raising matrix 1 on the subdiagonal; conjugating
// by diag(sqrt((n]_q!)) gives the symmetric sqrt((n]_q) form, and every
// relation checked here is invariant under that similarity.
struct FockLadder {
  int dim = 0;
  Rational q0;
  Matrix lower;
  Matrix raise;
  Matrix number;
};

FockLadder make_fock_ladder(int dim, const Rational& q0);

// aa+ - q a+a = q^N on rows 0..dim-2, [N,a+] = a+, [N,a] = -a, and the
// diagonal of (a+a + aa+)/2 equal to E_n for n < dim - 1.
Report verify_fock_algebra(int dim, const Rational& q0);

struct DegeneracyRoot {
  int n = 0;
  int m = 0;
  double q_root = 0;
  double bracket_lo = 0;
  double bracket_hi = 0;
  // |E_n(q*) - E_m(q*)|
  double residual = 0;
  // No third level k <= n_max within 1e-8 of E_n(q*); set by scan_degeneracies.
  bool pairwise_only = true;
};

// 2 (E_n - E_m) / q^{min(n,m)-1} as integer coefficients by ascending power
// (no division when min(n,m) = 0).
std::vector<Rational> degeneracy_polynomial(int n, int m);

// First sign change of the cleared polynomial on a 1000-point scan of
// [lo, hi], refined by bisection to 1e-12 and certified by exact evaluation
// at the bracket ends. The interval must lie in (0,1) or (1,inf).
std::optional<DegeneracyRoot> find_degeneracy(int n, int m, double lo, double hi);

// Every sign change for every pair n < m <= n_max, ordered by (n, m, q).
std::vector<DegeneracyRoot> scan_degeneracies(int n_max, double lo, double hi, int grid = 1000);

nlohmann::json to_json(const DegeneracyRoot& r);

Report spectra_checks();

}  // namespace qsusy
