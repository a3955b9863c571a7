#pragma once

// The degree n-1 polynomial family behind a^n + b^n = c^n under the
// substitution a = g*h*d, b = (g+1)*d, c = (g*h+1)*d:
//
//   P_n(g, h) = g^(n-1) - sum_{i=1}^{n-1} C(n,i) * (h^(n-i) - 1) * g^(n-1-i)
//
// a^n + b^n - c^n factors exactly as g * d^n * P_n(g, h); the identity
// engine validates this coefficient law symbolically.

#include <vector>

#include "fltkit/errors.hpp"
#include "fltkit/rational.hpp"
#include "fltkit/unipoly.hpp"

namespace fltkit {

inline constexpr unsigned kDefaultPrecisionBits = 128;

namespace detail {

template <class Scalar>
Scalar scalar_pow(const Scalar& base, unsigned exponent) {
  return base.pow(exponent);
}

}  // namespace detail

/// P_n(., h) for fixed rational h, as a monic polynomial in g.
inline UniPoly build_flt_poly(int n, const Rational& h) {
  if (n < 2) {
    throw InvalidInputError("build_flt_poly: require n >= 2");
  }
  const auto deg = static_cast<std::size_t>(n - 1);
  std::vector<Rational> coeffs(deg + 1, Rational(0));
  coeffs[deg] = Rational(1);
  for (int i = 1; i <= n - 1; ++i) {
    const Rational factor = h.pow(n - i) - Rational(1);
    coeffs[deg - static_cast<std::size_t>(i)] =
        -(Rational(binomial(static_cast<unsigned>(n), static_cast<unsigned>(i))) * factor);
  }
  return UniPoly::from_coefficients(std::move(coeffs));
}

/// The same equation read as a polynomial in h for fixed rational g.
inline UniPoly build_flt_poly_in_h(int n, const Rational& g) {
  if (n < 2) {
    throw InvalidInputError("build_flt_poly_in_h: require n >= 2");
  }
  std::vector<Rational> coeffs(static_cast<std::size_t>(n), Rational(0));
  Rational constant = g.pow(n - 1);
  for (int i = 1; i <= n - 1; ++i) {
    const Rational weight =
        Rational(binomial(static_cast<unsigned>(n), static_cast<unsigned>(i))) * g.pow(n - 1 - i);
    coeffs[static_cast<std::size_t>(n - i)] = -weight;  // the h^(n-i) part
    constant += weight;                                 // the +1 part folded into h^0
  }
  coeffs[0] = std::move(constant);
  return UniPoly::from_coefficients(std::move(coeffs));
}

/// P_n(g, h) for any scalar kind (exact rationals or intervals).
template <class Scalar>
Scalar flt_residual(int n, const Scalar& g, const Scalar& h) {
  if (n < 2) {
    throw InvalidInputError("flt_residual: require n >= 2");
  }
  Scalar acc = detail::scalar_pow(g, static_cast<unsigned>(n - 1));
  for (int i = 1; i <= n - 1; ++i) {
    const Scalar factor =
        detail::scalar_pow(h, static_cast<unsigned>(n - i)) - Scalar{Rational(1)};
    const Scalar weight{Rational(binomial(static_cast<unsigned>(n), static_cast<unsigned>(i)))};
    acc = acc - weight * factor * detail::scalar_pow(g, static_cast<unsigned>(n - 1 - i));
  }
  return acc;
}

}  // namespace fltkit
