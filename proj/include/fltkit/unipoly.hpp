#pragma once

// Dense univariate polynomials over exact rationals.

#include <string>
#include <utility>
#include <vector>

#include "fltkit/errors.hpp"
#include "fltkit/interval.hpp"
#include "fltkit/rational.hpp"

namespace fltkit {

/// Coefficient i multiplies variable^i. The zero polynomial is stored empty;
/// otherwise the leading (last) coefficient is nonzero.
class UniPoly {
 public:
  UniPoly() = default;

  static UniPoly zero() { return UniPoly(); }

  static UniPoly constant(Rational c) {
    UniPoly p;
    if (!c.is_zero()) p.coeffs_.push_back(std::move(c));
    return p;
  }

  static UniPoly monomial(Rational c, std::size_t power) {
    UniPoly p;
    if (!c.is_zero()) {
      p.coeffs_.assign(power + 1, Rational(0));
      p.coeffs_[power] = std::move(c);
    }
    return p;
  }

  /// Lowest degree first; trailing zeros are trimmed.
  static UniPoly from_coefficients(std::vector<Rational> coeffs) {
    UniPoly p;
    p.coeffs_ = std::move(coeffs);
    p.trim();
    return p;
  }

  bool is_zero() const { return coeffs_.empty(); }

  std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }

  Rational coefficient(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Rational(0);
  }

  Rational leading_coefficient() const { return coefficient(degree()); }

  /// Lowest degree first; the zero polynomial serializes as {0}.
  std::vector<Rational> coefficients() const {
    if (coeffs_.empty()) return {Rational(0)};
    return coeffs_;
  }

  /// Exact Horner evaluation; with Interval arguments the result is
  /// containment conservative.
  template <class Scalar>
  Scalar eval(const Scalar& x) const {
    Scalar acc{Rational(0)};
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      acc = acc * x + Scalar{coeffs_[i]};
    }
    return acc;
  }

  UniPoly derivative() const {
    UniPoly d;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
      d.coeffs_.push_back(Rational(static_cast<int>(i)) * coeffs_[i]);
    }
    d.trim();
    return d;
  }

  UniPoly operator-() const {
    UniPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    UniPoly r;
    r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) {
      r.coeffs_[i] = a.coefficient(i) + b.coefficient(i);
    }
    r.trim();
    return r;
  }

  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    UniPoly r;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    r.trim();
    return r;
  }

  friend UniPoly operator*(const Rational& s, const UniPoly& p) {
    if (s.is_zero()) return UniPoly();
    UniPoly r = p;
    for (auto& c : r.coeffs_) c *= s;
    return r;
  }

  UniPoly pow(unsigned exponent) const {
    UniPoly result = constant(Rational(1));
    for (unsigned k = 0; k < exponent; ++k) result = result * *this;
    return result;
  }

  /// Euclidean division: returns {quotient, remainder} with
  /// *this = quotient * divisor + remainder, deg remainder < deg divisor.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const {
    if (divisor.is_zero()) {
      throw InvalidInputError("unipoly: division by the zero polynomial");
    }
    UniPoly quotient;
    UniPoly remainder = *this;
    const Rational lead_inv = divisor.leading_coefficient().reciprocal();
    while (!remainder.is_zero() && remainder.degree() >= divisor.degree()) {
      const std::size_t shift = remainder.degree() - divisor.degree();
      Rational factor = remainder.leading_coefficient() * lead_inv;
      quotient = quotient + monomial(factor, shift);
      remainder = remainder - monomial(std::move(factor), shift) * divisor;
    }
    return {std::move(quotient), std::move(remainder)};
  }

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Display form, highest degree first, e.g. "g^2 - 9*g - 3".
  std::string to_string(const std::string& var = "x") const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      const Rational& c = coeffs_[i];
      if (c.is_zero()) continue;
      const bool first = out.empty();
      const Rational mag = c.abs();
      out += first ? (c.sign() < 0 ? "-" : "") : (c.sign() < 0 ? " - " : " + ");
      const bool unit = mag == Rational(1);
      if (i == 0) {
        out += mag.str();
      } else {
        if (!unit) out += mag.str() + "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out.empty() ? "0" : out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

}  // namespace fltkit
