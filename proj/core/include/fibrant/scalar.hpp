#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fibrant {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Coefficient field of a session: the rationals (characteristic 0) or a
/// prime field F_p. All scalars taking part in one computation must carry
/// the same field.
struct Field {
  std::int64_t characteristic = 0;  // 0 means Q

  bool is_rational() const { return characteristic == 0; }
  bool operator==(const Field&) const = default;

  static Field rationals() { return Field{0}; }
  static Field prime(std::int64_t p);
};

class Scalar;

struct field_mismatch : std::logic_error {
  field_mismatch() : std::logic_error("scalars over different fields") {}
};

/// Exact field element. Over Q the value is an arbitrary-precision
/// rational; over F_p it is the canonical residue in [0, p).
class Scalar {
 public:
  Scalar() = default;  // rational zero
  Scalar(Rational v, Field f);
  Scalar(std::int64_t v, Field f) : Scalar(Rational(v), f) {}

  const Field& field() const { return field_; }
  const Rational& value() const { return value_; }
  bool is_zero() const { return value_ == 0; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  bool operator==(const Scalar& o) const;

  Scalar inverse() const;

  std::string str() const;

 private:
  void reduce();

  Rational value_ = 0;
  Field field_{};
};

inline Scalar zero_of(Field f) { return Scalar(0, f); }
inline Scalar one_of(Field f) { return Scalar(1, f); }

}  // namespace fibrant
