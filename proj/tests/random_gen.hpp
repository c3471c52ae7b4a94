#pragma once

#include <random>
#include <vector>

#include "qsusy/operator.hpp"

namespace qsusy::testing {

inline Rational random_rational(std::mt19937& rng, int span = 9) {
  std::uniform_int_distribution<int> num(-span, span);
  std::uniform_int_distribution<int> den(1, span);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

inline Rational random_positive_rational(std::mt19937& rng, int span = 9) {
  std::uniform_int_distribution<int> num(1, span);
  std::uniform_int_distribution<int> den(1, span);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

inline Scalar random_scalar(std::mt19937& rng) {
  return {random_rational(rng), random_rational(rng), random_rational(rng), random_rational(rng)};
}

inline QLaurent random_qlaurent(std::mt19937& rng, int max_terms = 3) {
  std::uniform_int_distribution<int> count(1, max_terms);
  std::uniform_int_distribution<int> exp(-3, 3);
  QLaurent out;
  for (int k = count(rng); k > 0; --k) out += QLaurent::monomial(random_scalar(rng), exp(rng));
  return out;
}

inline Operator random_operator(std::mt19937& rng, int max_terms = 3) {
  std::uniform_int_distribution<int> count(1, max_terms);
  std::uniform_int_distribution<int> pw(0, 2);
  std::uniform_int_distribution<int> texp(-2, 2);
  Operator out;
  for (int k = count(rng); k > 0; --k) {
    out += Operator::monomial({pw(rng), pw(rng), texp(rng)}, random_qlaurent(rng, 2));
  }
  return out;
}

inline FreeExpr random_word(std::mt19937& rng, int max_len = 4) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> gen(0, 3);
  Word w{random_qlaurent(rng, 1), {}};
  for (int k = len(rng); k > 0; --k) w.letters.push_back(static_cast<Generator>(gen(rng)));
  return {w};
}

}  // namespace qsusy::testing
