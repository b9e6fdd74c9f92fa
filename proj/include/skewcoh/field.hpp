#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>

#include <boost/multiprecision/cpp_int.hpp>

#include "skewcoh/error.hpp"

namespace skewcoh {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// The coefficient field: either F_p for an odd prime p, or the rationals.
class FieldSpec {
 public:
  /// Largest accepted modulus; keeps residue products inside 64 bits.
  static constexpr std::int64_t kMaxPrime = (std::int64_t{1} << 31) - 1;

  static FieldSpec prime(std::int64_t p);
  static FieldSpec rational() { return FieldSpec(0); }

  bool is_prime() const { return p_ != 0; }
  bool is_rational() const { return p_ == 0; }
  /// 0 for the rationals.
  std::int64_t characteristic() const { return p_; }
  std::string name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  explicit FieldSpec(std::int64_t p) : p_(p) {}
  std::int64_t p_ = 0;
};

bool is_prime_number(std::int64_t n);

/// An exact field element. Prime-field values are kept as residues in [0, p);
/// rational values as reduced fractions of arbitrary-precision integers.
class Scalar {
 public:
  Scalar(FieldSpec field, std::int64_t value);
  Scalar(FieldSpec field, const Integer& value);
  Scalar(FieldSpec field, const Rational& value);

  static Scalar zero(FieldSpec field) { return Scalar(field, std::int64_t{0}); }
  static Scalar one(FieldSpec field) { return Scalar(field, std::int64_t{1}); }
  /// Accepts "a" or "a/b" with optional sign.
  static Scalar parse(FieldSpec field, const std::string& text);

  FieldSpec field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// Residue in [0, p). Only valid over a prime field.
  std::int64_t residue() const;
  /// Exact value. Only valid over the rationals.
  const Rational& rational() const;

  Scalar inverse() const;
  Scalar pow(std::int64_t exponent) const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Canonical text: residue for F_p, "a" or "a/b" for the rationals.
  std::string to_string() const;

 private:
  void require_same_field(const Scalar& other) const;

  FieldSpec field_;
  std::variant<std::int64_t, Rational> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace skewcoh
