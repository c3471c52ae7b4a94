#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "qsusy/qlaurent.hpp"

namespace qsusy {

// Truncated power series in x. Coefficients of degree > order() are unknown,
// not zero; an order of -1 means no coefficient is known.
template <typename T>
class Series {
 public:
  Series() = default;
  explicit Series(int order) : order_(std::max(order, -1)), coeffs_(static_cast<std::size_t>(order_ + 1)) {}
  Series(std::vector<T> coeffs, int order) : Series(order) {
    for (std::size_t k = 0; k < coeffs.size() && static_cast<int>(k) <= order_; ++k) coeffs_[k] = std::move(coeffs[k]);
  }

  static Series monomial(int degree, const T& c, int order) {
    Series s(order);
    if (degree >= 0 && degree <= order) s.coeffs_[static_cast<std::size_t>(degree)] = c;
    return s;
  }

  int order() const { return order_; }
  // Zero for degrees outside [0, order]; callers must respect order().
  T operator[](int degree) const {
    return degree < 0 || degree > order_ ? T{} : coeffs_[static_cast<std::size_t>(degree)];
  }
  void set(int degree, T value) {
    if (degree >= 0 && degree <= order_) coeffs_[static_cast<std::size_t>(degree)] = std::move(value);
  }
  const std::vector<T>& coefficients() const { return coeffs_; }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const T& c) { return c == T{}; });
  }

  Series truncated(int order) const {
    Series out(std::min(order, order_));
    for (int k = 0; k <= out.order_; ++k) out.coeffs_[static_cast<std::size_t>(k)] = coeffs_[static_cast<std::size_t>(k)];
    return out;
  }

  template <typename F>
  auto map(F f) const {
    using U = decltype(f(std::declval<const T&>()));
    Series<U> out(order_);
    for (int k = 0; k <= order_; ++k) out.set(k, f(coeffs_[static_cast<std::size_t>(k)]));
    return out;
  }

  friend Series operator+(const Series& a, const Series& b) {
    Series out(std::min(a.order_, b.order_));
    for (int k = 0; k <= out.order_; ++k) out.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
    return out;
  }
  friend Series operator-(const Series& a, const Series& b) {
    Series out(std::min(a.order_, b.order_));
    for (int k = 0; k <= out.order_; ++k) out.coeffs_[k] = a.coeffs_[k] - b.coeffs_[k];
    return out;
  }
  // Cauchy product, valid through min(order_a, order_b).
  friend Series operator*(const Series& a, const Series& b) {
    Series out(std::min(a.order_, b.order_));
    for (int n = 0; n <= out.order_; ++n) {
      T acc{};
      for (int k = 0; k <= n; ++k) {
        const T& ak = a.coeffs_[k];
        if (ak == T{}) continue;
        acc += ak * b.coeffs_[n - k];
      }
      out.coeffs_[n] = std::move(acc);
    }
    return out;
  }
  template <typename S>
  Series scaled(const S& c) const {
    Series out(order_);
    for (int k = 0; k <= order_; ++k) out.coeffs_[k] = coeffs_[k] * c;
    return out;
  }

  // Substitutes x -> x^k (k >= 1); the result is known through k*order + k - 1.
  Series substitute_power(int k) const {
    Series out(order_ < 0 ? -1 : k * order_ + k - 1);
    for (int n = 0; n <= order_; ++n) out.coeffs_[static_cast<std::size_t>(n * k)] = coeffs_[n];
    return out;
  }

  std::string to_string(const std::function<std::string(const T&)>& fmt) const {
    std::string out;
    for (int k = 0; k <= order_; ++k) {
      if (coeffs_[k] == T{}) continue;
      if (!out.empty()) out += " + ";
      out += "(" + fmt(coeffs_[k]) + ")*x^" + std::to_string(k);
    }
    if (out.empty()) out = "0";
    return out + " + O(x^" + std::to_string(order_ + 1) + ")";
  }

 private:
  int order_ = -1;
  std::vector<T> coeffs_;
};

// True when a and b agree on every degree both of them know.
template <typename T>
bool equal_through_common_order(const Series<T>& a, const Series<T>& b) {
  const int n = std::min(a.order(), b.order());
  for (int k = 0; k <= n; ++k) {
    if (!(a[k] == b[k])) return false;
  }
  return true;
}

enum class SeriesOp { add, sub, mul, scale };

template <typename T>
Series<T> series_arith(const Series<T>& a, const Series<T>& b, SeriesOp op, const T& factor = T(1)) {
  switch (op) {
    case SeriesOp::add: return a + b;
    case SeriesOp::sub: return a - b;
    case SeriesOp::mul: return a * b;
    case SeriesOp::scale: return a.scaled(factor);
  }
  return a;
}

using ScalarSeries = Series<Scalar>;
using QSeries = Series<QLaurent>;

inline ScalarSeries eval_series(const QSeries& s, const Rational& q0) {
  return s.map([&](const QLaurent& c) { return c.eval(q0); });
}
inline ScalarSeries series_at_one(const QSeries& s) {
  return s.map([](const QLaurent& c) { return c.at_one(); });
}

}  // namespace qsusy
