#include "fibrant/scalar.hpp"

namespace fibrant {

namespace {

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// residue of a rational mod p; the denominator must be invertible mod p
BigInt residue_mod(const Rational& v, std::int64_t p) {
  BigInt num = numerator(v) % p;
  if (num < 0) num += p;
  BigInt den = denominator(v) % p;
  if (den == 0) throw std::domain_error("denominator divisible by field characteristic");
  // inverse of den by extended Euclid
  BigInt a = den, b = p, x0 = 1, x1 = 0;
  while (b != 0) {
    BigInt q = a / b;
    BigInt t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  if (a != 1) throw std::domain_error("denominator not invertible mod p");
  BigInt inv = x0 % p;
  if (inv < 0) inv += p;
  return (num * inv) % p;
}

}  // namespace

Field Field::prime(std::int64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
  return Field{p};
}

Scalar::Scalar(Rational v, Field f) : value_(std::move(v)), field_(f) { reduce(); }

void Scalar::reduce() {
  if (!field_.is_rational()) value_ = Rational(residue_mod(value_, field_.characteristic));
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.value_ = -r.value_;
  r.reduce();
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (field_ != o.field_) throw field_mismatch{};
  value_ += o.value_;
  reduce();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  if (field_ != o.field_) throw field_mismatch{};
  value_ -= o.value_;
  reduce();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (field_ != o.field_) throw field_mismatch{};
  value_ *= o.value_;
  reduce();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  *this *= o.inverse();
  return *this;
}

bool Scalar::operator==(const Scalar& o) const {
  if (field_ != o.field_) throw field_mismatch{};
  return value_ == o.value_;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (field_.is_rational()) return Scalar(Rational(1) / value_, field_);
  return Scalar(Rational(1) / value_, field_);  // reduce() inverts the residue
}

std::string Scalar::str() const { return value_.str(); }

}  // namespace fibrant
