#pragma once

// Quotients of multivariate polynomials. No general gcd is attempted: a
// quotient is reduced when exact division detects that one side divides the
// other, and the denominator is kept primitive with a positive leading
// coefficient so serialized forms are deterministic.

#include <string>
#include <utility>

#include "fltkit/errors.hpp"
#include "fltkit/multipoly.hpp"
#include "fltkit/rational.hpp"

namespace fltkit {

/// Signed rational content: the quotient by it is integer-primitive with a
/// positive leading (graded-lex) coefficient. Zero polynomial has content 0.
inline Rational poly_content(const MultiPoly& p) {
  if (p.is_zero()) return Rational(0);
  BigInt num_gcd = 0;
  BigInt den_lcm = 1;
  for (const auto& [m, c] : p.terms()) {
    num_gcd = boost::multiprecision::gcd(num_gcd, boost::multiprecision::abs(c.numerator()));
    den_lcm = boost::multiprecision::lcm(den_lcm, c.denominator());
  }
  Rational content = Rational::normalized(num_gcd, den_lcm);
  return p.leading_term().second.sign() < 0 ? -content : content;
}

class RationalFunction {
 public:
  RationalFunction() : den_(MultiPoly::constant(Rational(1))) {}

  RationalFunction(MultiPoly numerator)  // NOLINT: implicit by design
      : num_(std::move(numerator)), den_(MultiPoly::constant(Rational(1))) {}

  RationalFunction(MultiPoly numerator, MultiPoly denominator)
      : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_.is_zero()) {
      throw InvalidInputError("rational function: zero denominator");
    }
    normalize();
  }

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }

  RationalFunction operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend RationalFunction operator+(const RationalFunction& x, const RationalFunction& y) {
    if (x.den_ == y.den_) {
      return RationalFunction(x.num_ + y.num_, x.den_);
    }
    return RationalFunction(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
  }

  friend RationalFunction operator-(const RationalFunction& x, const RationalFunction& y) {
    return x + (-y);
  }

  friend RationalFunction operator*(const RationalFunction& x, const RationalFunction& y) {
    return RationalFunction(x.num_ * y.num_, x.den_ * y.den_);
  }

  /// Exact equality of values: cross multiplication, no normalization needed.
  friend bool operator==(const RationalFunction& x, const RationalFunction& y) {
    return x.num_ * y.den_ == y.num_ * x.den_;
  }

  std::string to_string() const {
    const std::string n = num_.to_string();
    if (den_ == MultiPoly::constant(Rational(1))) return n;
    return "(" + n + ")/(" + den_.to_string() + ")";
  }

 private:
  void normalize() {
    if (num_.is_zero()) {
      den_ = MultiPoly::constant(Rational(1));
      return;
    }
    rescale();
    if (auto q = exact_divide(num_, den_)) {
      num_ = std::move(*q);
      den_ = MultiPoly::constant(Rational(1));
      return;
    }
    if (auto q = exact_divide(den_, num_)) {
      num_ = MultiPoly::constant(Rational(1));
      den_ = std::move(*q);
      rescale();
    }
  }

  void rescale() {
    const Rational scale = poly_content(den_).reciprocal();
    num_ = scale * num_;
    den_ = scale * den_;
  }

  MultiPoly num_;
  MultiPoly den_;
};

}  // namespace fltkit
