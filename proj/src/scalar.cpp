#include "qsusy/scalar.hpp"

#include <cmath>
#include <sstream>
#include <utility>

namespace qsusy {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto bad = [&] { return DomainError("invalid rational '" + s + "': expected num/den"); };
  if (s.empty()) throw bad();
  auto slash = s.find('/');
  auto digits = [](std::string_view part, bool allow_sign) {
    if (allow_sign && !part.empty() && (part[0] == '-' || part[0] == '+')) part.remove_prefix(1);
    if (part.empty()) return false;
    for (char c : part) {
      if (c < '0' || c > '9') return false;
    }
    return true;
  };
  std::string_view num = std::string_view(s).substr(0, slash);
  std::string_view den = slash == std::string::npos ? std::string_view("1") : std::string_view(s).substr(slash + 1);
  if (!digits(num, true) || !digits(den, false)) throw bad();
  Integer n(std::string(num[0] == '+' ? num.substr(1) : num));
  Integer d{std::string(den)};
  if (d == 0) throw DomainError("invalid rational '" + s + "': zero denominator");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw DomainError("zero raised to a negative power");
    Rational inv = 1 / base;
    return pow(inv, -exponent);
  }
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  Rational out(num, den);
  out.canonicalize();
  return out;
}

Integer factorial(unsigned long n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

double log_abs(const Rational& r) {
  if (r == 0) throw DomainError("log of zero");
  auto log_z = [](const mpz_t z) {
    long exp = 0;
    double mant = mpz_get_d_2exp(&exp, z);
    return std::log(std::fabs(mant)) + static_cast<double>(exp) * std::log(2.0);
  };
  return log_z(r.get_num_mpz_t()) - log_z(r.get_den_mpz_t());
}

Rational from_double(double v) {
  if (!std::isfinite(v)) throw DomainError("non-finite value");
  Rational out(v);
  return out;
}

Scalar::Scalar(Rational re, Rational im, Rational re_s2, Rational im_s2)
    : re_(std::move(re)), im_(std::move(im)), re_s2_(std::move(re_s2)), im_s2_(std::move(im_s2)) {}

Scalar Scalar::i() { return {0, 1, 0, 0}; }
Scalar Scalar::sqrt2() { return {0, 0, 1, 0}; }
Scalar Scalar::inv_sqrt2() { return {0, 0, Rational(1, 2), 0}; }

bool Scalar::is_zero() const { return re_ == 0 && im_ == 0 && re_s2_ == 0 && im_s2_ == 0; }
bool Scalar::is_rational() const { return im_ == 0 && re_s2_ == 0 && im_s2_ == 0; }

Scalar Scalar::conj() const { return {re_, -im_, re_s2_, -im_s2_}; }

Scalar Scalar::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  // z * conj(z) lies in Q(sqrt 2); invert that via its Galois conjugate.
  Scalar n1 = *this * conj();
  const Rational& u = n1.re_;
  const Rational& v = n1.re_s2_;
  Rational norm = u * u - 2 * v * v;
  Scalar n1_inv(u / norm, 0, -v / norm, 0);
  return conj() * n1_inv;
}

Scalar Scalar::operator-() const { return {-re_, -im_, -re_s2_, -im_s2_}; }

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  re_s2_ += o.re_s2_;
  im_s2_ += o.im_s2_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  re_s2_ -= o.re_s2_;
  im_s2_ -= o.im_s2_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_rational() && o.is_rational()) {
    re_ *= o.re_;
    return *this;
  }
  const Rational &a = re_, &b = im_, &c = re_s2_, &d = im_s2_;
  const Rational &e = o.re_, &f = o.im_, &g = o.re_s2_, &h = o.im_s2_;
  Rational r1 = a * e - b * f + 2 * c * g - 2 * d * h;
  Rational ri = a * f + b * e + 2 * c * h + 2 * d * g;
  Rational rs = a * g + c * e - b * h - d * f;
  Rational ris = a * h + d * e + b * g + c * f;
  re_ = std::move(r1);
  im_ = std::move(ri);
  re_s2_ = std::move(rs);
  im_s2_ = std::move(ris);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  if (o.is_rational()) {
    re_ /= o.re_;
    im_ /= o.re_;
    re_s2_ /= o.re_;
    im_s2_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  return a.re_ == b.re_ && a.im_ == b.im_ && a.re_s2_ == b.re_s2_ && a.im_s2_ == b.im_s2_;
}

std::complex<double> Scalar::to_complex() const {
  const double s2 = std::sqrt(2.0);
  return {re_.get_d() + s2 * re_s2_.get_d(), im_.get_d() + s2 * im_s2_.get_d()};
}

std::string Scalar::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  auto emit = [&](const Rational& c, const char* unit) {
    if (c == 0) return;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (*unit == '\0') {
      out << mag.get_str();
    } else if (mag == 1) {
      out << unit;
    } else {
      out << mag.get_str() << '*' << unit;
    }
  };
  emit(re_, "");
  emit(im_, "i");
  emit(re_s2_, "sqrt2");
  emit(im_s2_, "i*sqrt2");
  return out.str();
}

Scalar field_arith(const Scalar& a, const Scalar& b, FieldOp op) {
  switch (op) {
    case FieldOp::add: return a + b;
    case FieldOp::sub: return a - b;
    case FieldOp::mul: return a * b;
    case FieldOp::div: return a / b;
    case FieldOp::conj: return a.conj();
  }
  throw DomainError("unknown field operation");
}

}  // namespace qsusy
