#pragma once

// Exact rational arithmetic. Every quantity in this library is an arbitrary
// precision canonical fraction; nothing is ever rounded.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include "fltkit/errors.hpp"

namespace fltkit {

using BigInt = boost::multiprecision::cpp_int;

/// Canonical fraction: gcd(|num|, den) = 1, den > 0, zero is 0/1.
/// Canonical form is enforced at construction, so equality is structural.
class Rational {
 public:
  Rational() = default;
  Rational(int value) : value_(value) {}                   // NOLINT: implicit by design
  Rational(std::int64_t value) : value_(value) {}          // NOLINT
  explicit Rational(const BigInt& value) : value_(value) {}

  /// Canonical fraction equal to num/den; sign carried by the numerator.
  static Rational normalized(BigInt num, BigInt den) {
    if (den == 0) {
      throw InvalidInputError("rational: zero denominator");
    }
    if (den < 0) {
      num = -num;
      den = -den;
    }
    Rational r;
    r.value_ = boost::multiprecision::cpp_rational(std::move(num), std::move(den));
    return r;
  }

  /// Parses the text form "-?[0-9]+(/[0-9]+)?". Non-canonical fractions are
  /// normalized; a zero denominator is rejected.
  static Rational parse(std::string_view text) {
    const auto bad = [&] {
      return InvalidInputError("rational: malformed literal '" + std::string(text) + "'");
    };
    std::size_t pos = 0;
    if (pos < text.size() && text[pos] == '-') ++pos;
    const std::size_t num_begin = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == num_begin) throw bad();
    BigInt num(std::string(text.substr(0, pos)));
    BigInt den = 1;
    if (pos < text.size()) {
      if (text[pos] != '/') throw bad();
      ++pos;
      const std::size_t den_begin = pos;
      while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
      if (pos == den_begin || pos != text.size()) throw bad();
      den = BigInt(std::string(text.substr(den_begin)));
      if (den == 0) throw InvalidInputError("rational: zero denominator in '" + std::string(text) + "'");
    }
    return normalized(std::move(num), std::move(den));
  }

  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const { return boost::multiprecision::denominator(value_); }

  bool is_zero() const { return value_.is_zero(); }
  bool is_integer() const { return boost::multiprecision::denominator(value_) == 1; }
  int sign() const { return value_.sign(); }

  Rational operator-() const {
    Rational r;
    r.value_ = -value_;
    return r;
  }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw InvalidInputError("rational: division by zero");
    value_ /= o.value_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ > b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  Rational abs() const { return sign() < 0 ? -*this : *this; }

  Rational reciprocal() const {
    if (is_zero()) throw InvalidInputError("rational: reciprocal of zero");
    return normalized(denominator(), numerator());
  }

  /// Exact integer power; negative exponents invert (zero base rejected).
  Rational pow(long exponent) const {
    if (exponent < 0) return reciprocal().pow(-exponent);
    using boost::multiprecision::pow;
    const auto e = static_cast<unsigned>(exponent);
    return normalized(pow(numerator(), e), pow(denominator(), e));
  }

  /// Canonical text form: "p/q" when q != 1, otherwise "p".
  std::string str() const { return value_.str(); }

 private:
  boost::multiprecision::cpp_rational value_;
};

inline Rational operator+(int a, const Rational& b) { return Rational(a) + b; }
inline Rational operator-(int a, const Rational& b) { return Rational(a) - b; }
inline Rational operator*(int a, const Rational& b) { return Rational(a) * b; }

/// Exact binomial coefficient C(n, i). Rejects i > n.
inline BigInt binomial(unsigned n, unsigned i) {
  if (i > n) {
    throw InvalidInputError("binomial: require 0 <= i <= n");
  }
  if (i > n - i) i = n - i;
  BigInt result = 1;
  for (unsigned k = 1; k <= i; ++k) {
    result *= n - i + k;
    result /= k;  // exact: C(n-i+k, k) is an integer
  }
  return result;
}

}  // namespace fltkit
