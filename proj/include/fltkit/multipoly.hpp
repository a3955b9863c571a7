#pragma once

// Minimal sparse multivariate polynomial kernel over the fixed variable set
// {a, d, f, g, h, h1, h2}, ordered graded-lexicographically for deterministic
// iteration and serialization.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fltkit/errors.hpp"
#include "fltkit/rational.hpp"

namespace fltkit {

enum class Var : unsigned { a = 0, d, f, g, h, h1, h2 };

inline constexpr std::size_t kNumVars = 7;
inline constexpr std::array<const char*, kNumVars> kVarNames{"a", "d", "f", "g", "h", "h1", "h2"};

inline const char* var_name(Var v) { return kVarNames[static_cast<std::size_t>(v)]; }

struct Monomial {
  std::array<std::uint32_t, kNumVars> exp{};

  unsigned total_degree() const {
    unsigned sum = 0;
    for (const auto e : exp) sum += e;
    return sum;
  }

  std::uint32_t operator[](Var v) const { return exp[static_cast<std::size_t>(v)]; }
  std::uint32_t& operator[](Var v) { return exp[static_cast<std::size_t>(v)]; }

  bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < kNumVars; ++i) {
      if (exp[i] > other.exp[i]) return false;
    }
    return true;
  }

  friend Monomial operator*(const Monomial& x, const Monomial& y) {
    Monomial m;
    for (std::size_t i = 0; i < kNumVars; ++i) m.exp[i] = x.exp[i] + y.exp[i];
    return m;
  }

  /// Componentwise quotient; requires other.divides(*this).
  Monomial divide(const Monomial& other) const {
    Monomial m;
    for (std::size_t i = 0; i < kNumVars; ++i) m.exp[i] = exp[i] - other.exp[i];
    return m;
  }

  friend bool operator==(const Monomial& x, const Monomial& y) { return x.exp == y.exp; }
};

/// Graded lexicographic order: total degree first, then lexicographic with
/// the variable order a, d, f, g, h, h1, h2.
struct GradedLexLess {
  bool operator()(const Monomial& x, const Monomial& y) const {
    const unsigned dx = x.total_degree();
    const unsigned dy = y.total_degree();
    if (dx != dy) return dx < dy;
    for (std::size_t i = 0; i < kNumVars; ++i) {
      if (x.exp[i] != y.exp[i]) return x.exp[i] < y.exp[i];
    }
    return false;
  }
};

class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Rational, GradedLexLess>;

  MultiPoly() = default;

  static MultiPoly constant(Rational c) {
    MultiPoly p;
    if (!c.is_zero()) p.terms_.emplace(Monomial{}, std::move(c));
    return p;
  }

  static MultiPoly variable(Var v) {
    Monomial m;
    m[v] = 1;
    return monomial(m, Rational(1));
  }

  static MultiPoly monomial(const Monomial& m, Rational c) {
    MultiPoly p;
    if (!c.is_zero()) p.terms_.emplace(m, std::move(c));
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.total_degree() == 0);
  }

  Rational coefficient(const Monomial& m) const {
    const auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  unsigned total_degree() const {
    return terms_.empty() ? 0 : terms_.rbegin()->first.total_degree();
  }

  /// Largest term in graded-lex order; polynomial must be nonzero.
  std::pair<Monomial, Rational> leading_term() const {
    if (terms_.empty()) {
      throw InternalError("multipoly: leading term of the zero polynomial");
    }
    return *terms_.rbegin();
  }

  MultiPoly operator-() const {
    MultiPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }

  MultiPoly& operator+=(const MultiPoly& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
  }

  friend MultiPoly operator+(MultiPoly x, const MultiPoly& y) { return x += y; }
  friend MultiPoly operator-(MultiPoly x, const MultiPoly& y) { return x -= y; }

  friend MultiPoly operator*(const MultiPoly& x, const MultiPoly& y) {
    MultiPoly r;
    for (const auto& [mx, cx] : x.terms_) {
      for (const auto& [my, cy] : y.terms_) {
        r.add_term(mx * my, cx * cy);
      }
    }
    return r;
  }

  friend MultiPoly operator*(const Rational& s, const MultiPoly& p) {
    MultiPoly r;
    if (s.is_zero()) return r;
    for (const auto& [m, c] : p.terms_) r.terms_.emplace(m, s * c);
    return r;
  }

  MultiPoly& operator*=(const MultiPoly& other) { return *this = *this * other; }

  MultiPoly pow(unsigned exponent) const {
    MultiPoly result = constant(Rational(1));
    MultiPoly base = *this;
    unsigned e = exponent;
    while (e > 0) {
      if (e & 1) result *= base;
      e >>= 1;
      if (e > 0) base *= base;
    }
    return result;
  }

  /// Ring homomorphism sending var to replacement and fixing the rest.
  MultiPoly substitute(Var var, const MultiPoly& replacement) const {
    std::vector<MultiPoly> powers{constant(Rational(1))};
    MultiPoly result;
    for (const auto& [m, c] : terms_) {
      const std::uint32_t e = m[var];
      while (powers.size() <= e) {
        powers.push_back(powers.back() * replacement);
      }
      Monomial rest = m;
      rest[var] = 0;
      result += monomial(rest, c) * powers[e];
    }
    return result;
  }

  /// Full evaluation at a point (one scalar per variable).
  template <class Scalar>
  Scalar eval(const std::array<Scalar, kNumVars>& point) const {
    Scalar acc{Rational(0)};
    for (const auto& [m, c] : terms_) {
      Scalar term{c};
      for (std::size_t i = 0; i < kNumVars; ++i) {
        for (std::uint32_t e = 0; e < m.exp[i]; ++e) term = term * point[i];
      }
      acc = acc + term;
    }
    return acc;
  }

  friend bool operator==(const MultiPoly& x, const MultiPoly& y) { return x.terms_ == y.terms_; }

  /// Deterministic display form, graded-lex descending, e.g. "3*h1^2*h2 - 3".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [m, c] = *it;
      out += out.empty() ? (c.sign() < 0 ? "-" : "") : (c.sign() < 0 ? " - " : " + ");
      const Rational mag = c.abs();
      std::string vars;
      for (std::size_t i = 0; i < kNumVars; ++i) {
        if (m.exp[i] == 0) continue;
        if (!vars.empty()) vars += "*";
        vars += kVarNames[i];
        if (m.exp[i] > 1) vars += "^" + std::to_string(m.exp[i]);
      }
      if (vars.empty()) {
        out += mag.str();
      } else {
        if (mag == Rational(1)) {
          out += vars;
        } else {
          out += mag.str() + "*" + vars;
        }
      }
    }
    return out;
  }

 private:
  void add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    const auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  TermMap terms_;
};

/// Quotient of p by q when the multivariate division leaves no remainder;
/// std::nullopt signals an inexact division. Division by zero is rejected.
inline std::optional<MultiPoly> exact_divide(const MultiPoly& p, const MultiPoly& q) {
  if (q.is_zero()) {
    throw InvalidInputError("exact_divide: division by the zero polynomial");
  }
  MultiPoly remainder = p;
  MultiPoly quotient;
  const auto [qm, qc] = q.leading_term();
  while (!remainder.is_zero()) {
    const auto [rm, rc] = remainder.leading_term();
    if (!qm.divides(rm)) return std::nullopt;
    const MultiPoly t = MultiPoly::monomial(rm.divide(qm), rc / qc);
    quotient += t;
    remainder -= t * q;
  }
  return quotient;
}

}  // namespace fltkit
