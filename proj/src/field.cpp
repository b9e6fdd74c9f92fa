#include "skewcoh/field.hpp"

#include <ostream>
#include <sstream>

namespace skewcoh {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidField: return "InvalidField";
    case ErrorCode::CharTwo: return "CharTwo";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::OrderExceedsBound: return "OrderExceedsBound";
    case ErrorCode::NotGStable: return "NotGStable";
    case ErrorCode::WrongCase: return "WrongCase";
    case ErrorCode::NotACocycle: return "NotACocycle";
    case ErrorCode::UnsupportedKappaShape: return "UnsupportedKappaShape";
    case ErrorCode::UnsupportedGroupShape: return "UnsupportedGroupShape";
    case ErrorCode::PrerequisiteFailed: return "PrerequisiteFailed";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::InternalInvariant: return "InternalInvariant";
  }
  return "Unknown";
}

bool is_prime_number(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::int64_t p) {
  if (p == 2) throw Error(ErrorCode::CharTwo, "characteristic 2 is not supported");
  if (p > kMaxPrime) throw Error(ErrorCode::InvalidField, "prime too large: " + std::to_string(p));
  if (!is_prime_number(p)) throw Error(ErrorCode::InvalidField, std::to_string(p) + " is not prime");
  return FieldSpec(p);
}

std::string FieldSpec::name() const {
  return is_prime() ? "F_" + std::to_string(p_) : "Q";
}

namespace {

std::int64_t reduce(std::int64_t v, std::int64_t p) {
  v %= p;
  return v < 0 ? v + p : v;
}

std::int64_t reduce(const Integer& v, std::int64_t p) {
  Integer r = v % p;
  if (r < 0) r += p;
  return static_cast<std::int64_t>(r);
}

std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t p) {
  std::int64_t result = 1 % p;
  base = reduce(base, p);
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return result;
}

}  // namespace

Scalar::Scalar(FieldSpec field, std::int64_t value) : field_(field) {
  if (field.is_prime()) {
    value_ = reduce(value, field.characteristic());
  } else {
    value_ = Rational(value);
  }
}

Scalar::Scalar(FieldSpec field, const Integer& value) : field_(field) {
  if (field.is_prime()) {
    value_ = reduce(value, field.characteristic());
  } else {
    value_ = Rational(value);
  }
}

Scalar::Scalar(FieldSpec field, const Rational& value) : field_(field) {
  if (field.is_prime()) {
    const std::int64_t p = field.characteristic();
    const std::int64_t den = reduce(Integer(boost::multiprecision::denominator(value)), p);
    if (den == 0) throw Error(ErrorCode::DivisionByZero, "denominator divisible by " + std::to_string(p));
    const std::int64_t num = reduce(Integer(boost::multiprecision::numerator(value)), p);
    value_ = num * mod_pow(den, p - 2, p) % p;
  } else {
    value_ = value;
  }
}

Scalar Scalar::parse(FieldSpec field, const std::string& text) {
  std::string s;
  for (char c : text) {
    if (c != ' ') s.push_back(c);
  }
  auto parse_integer = [&](const std::string& part) {
    if (part.empty()) throw Error(ErrorCode::InvalidInput, "cannot parse scalar '" + text + "'");
    std::size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (start == part.size()) throw Error(ErrorCode::InvalidInput, "cannot parse scalar '" + text + "'");
    for (std::size_t i = start; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') throw Error(ErrorCode::InvalidInput, "cannot parse scalar '" + text + "'");
    }
    return Integer(part[0] == '+' ? part.substr(1) : part);
  };
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Scalar(field, parse_integer(s));
  Integer num = parse_integer(s.substr(0, slash));
  Integer den = parse_integer(s.substr(slash + 1));
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator in '" + text + "'");
  return Scalar(field, Rational(num, den));
}

bool Scalar::is_zero() const {
  if (field_.is_prime()) return std::get<std::int64_t>(value_) == 0;
  return std::get<Rational>(value_) == 0;
}

bool Scalar::is_one() const {
  if (field_.is_prime()) return std::get<std::int64_t>(value_) == 1;
  return std::get<Rational>(value_) == 1;
}

std::int64_t Scalar::residue() const {
  if (!field_.is_prime()) throw Error(ErrorCode::FieldMismatch, "residue() on a rational scalar");
  return std::get<std::int64_t>(value_);
}

const Rational& Scalar::rational() const {
  if (!field_.is_rational()) throw Error(ErrorCode::FieldMismatch, "rational() on a prime-field scalar");
  return std::get<Rational>(value_);
}

void Scalar::require_same_field(const Scalar& other) const {
  if (!(field_ == other.field_)) {
    throw Error(ErrorCode::FieldMismatch, field_.name() + " vs " + other.field_.name());
  }
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  if (field_.is_prime()) {
    const std::int64_t p = field_.characteristic();
    return Scalar(field_, mod_pow(std::get<std::int64_t>(value_), p - 2, p));
  }
  return Scalar(field_, Rational(1) / std::get<Rational>(value_));
}

Scalar Scalar::pow(std::int64_t exponent) const {
  Scalar base = exponent < 0 ? inverse() : *this;
  std::int64_t e = exponent < 0 ? -exponent : exponent;
  Scalar result = one(field_);
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

Scalar Scalar::operator-() const {
  if (field_.is_prime()) return Scalar(field_, -std::get<std::int64_t>(value_));
  return Scalar(field_, Rational(-std::get<Rational>(value_)));
}

Scalar& Scalar::operator+=(const Scalar& other) {
  require_same_field(other);
  if (field_.is_prime()) {
    auto& v = std::get<std::int64_t>(value_);
    v = (v + std::get<std::int64_t>(other.value_)) % field_.characteristic();
  } else {
    std::get<Rational>(value_) += std::get<Rational>(other.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  require_same_field(other);
  if (field_.is_prime()) {
    auto& v = std::get<std::int64_t>(value_);
    v = reduce(v - std::get<std::int64_t>(other.value_), field_.characteristic());
  } else {
    std::get<Rational>(value_) -= std::get<Rational>(other.value_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& other) {
  require_same_field(other);
  if (field_.is_prime()) {
    auto& v = std::get<std::int64_t>(value_);
    v = v * std::get<std::int64_t>(other.value_) % field_.characteristic();
  } else {
    std::get<Rational>(value_) *= std::get<Rational>(other.value_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) {
  require_same_field(other);
  return *this *= other.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  return a.field_ == b.field_ && a.value_ == b.value_;
}

std::string Scalar::to_string() const {
  if (field_.is_prime()) return std::to_string(std::get<std::int64_t>(value_));
  std::ostringstream os;
  os << std::get<Rational>(value_);
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace skewcoh
