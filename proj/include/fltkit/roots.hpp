#pragma once

// Exact real-root machinery for univariate polynomials: Sturm counting,
// isolation of positive roots, bisection refinement, and the rational root
// test. Everything runs on rational endpoints; enclosures are proofs, not
// estimates.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "fltkit/detail/divisors.hpp"
#include "fltkit/errors.hpp"
#include "fltkit/interval.hpp"
#include "fltkit/rational.hpp"
#include "fltkit/unipoly.hpp"

namespace fltkit {

/// An interval with exact rational endpoints containing exactly one distinct
/// real root of a polynomial. Simple roots isolated by bisection carry a sign
/// change; exact rational roots may be reported as zero-width enclosures with
/// endpoint signs 0.
struct RootEnclosure {
  Interval interval;
  int sign_lo = 0;
  int sign_hi = 0;
  int multiplicity_hint = 1;
};

/// Number of sign variations in the coefficient sequence (zeros skipped).
/// Descartes: bounds the positive-root count and matches it when <= 1.
inline int descartes_sign_variations(const UniPoly& p) {
  int variations = 0;
  int last = 0;
  for (std::size_t i = 0; i <= p.degree(); ++i) {
    const int s = p.coefficient(i).sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

namespace detail {

// Integer polynomial, lowest degree first, trailing zeros trimmed.
struct IntPoly {
  std::vector<BigInt> c;

  bool is_zero() const { return c.empty(); }
  std::size_t degree() const { return c.empty() ? 0 : c.size() - 1; }
  const BigInt& lead() const { return c.back(); }

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
};

inline BigInt content(const IntPoly& p) {
  BigInt g = 0;
  for (const auto& x : p.c) g = boost::multiprecision::gcd(g, x);
  return g;
}

inline void make_primitive(IntPoly& p) {
  p.trim();
  if (p.is_zero()) return;
  const BigInt g = content(p);
  if (g > 1) {
    for (auto& x : p.c) x /= g;
  }
}

// Scales by the denominator lcm and strips integer content; the sign of every
// value is preserved (the scale factor is positive).
inline IntPoly to_int_primitive(const UniPoly& p) {
  IntPoly out;
  BigInt den_lcm = 1;
  for (std::size_t i = 0; i <= p.degree(); ++i) {
    den_lcm = boost::multiprecision::lcm(den_lcm, p.coefficient(i).denominator());
  }
  out.c.reserve(p.degree() + 1);
  for (std::size_t i = 0; i <= p.degree(); ++i) {
    const Rational coeff = p.coefficient(i);
    out.c.push_back(coeff.numerator() * (den_lcm / coeff.denominator()));
  }
  make_primitive(out);
  return out;
}

inline IntPoly int_derivative(const IntPoly& p) {
  IntPoly d;
  for (std::size_t i = 1; i < p.c.size(); ++i) {
    d.c.push_back(p.c[i] * static_cast<unsigned>(i));
  }
  make_primitive(d);
  return d;
}

// Sign of p at the rational u/v, via the homogeneous form sum c_i u^i v^(d-i).
inline int sign_at(const IntPoly& p, const Rational& x) {
  if (p.is_zero()) return 0;
  const BigInt u = x.numerator();
  const BigInt v = x.denominator();
  const std::size_t d = p.degree();
  std::vector<BigInt> upow(d + 1), vpow(d + 1);
  upow[0] = 1;
  vpow[0] = 1;
  for (std::size_t i = 1; i <= d; ++i) {
    upow[i] = upow[i - 1] * u;
    vpow[i] = vpow[i - 1] * v;
  }
  BigInt acc = 0;
  for (std::size_t i = 0; i <= d; ++i) {
    acc += p.c[i] * upow[i] * vpow[d - i];
  }
  return acc.sign();
}

// Pseudo-remainder of f by g scaled to a positive multiple of the true
// remainder, so its signs stay usable in a Sturm chain.
inline IntPoly positive_pseudo_rem(const IntPoly& f, const IntPoly& g) {
  IntPoly r = f;
  int scalings = 0;
  while (!r.is_zero() && r.degree() >= g.degree()) {
    const std::size_t shift = r.degree() - g.degree();
    IntPoly next;
    next.c.assign(std::max(r.c.size() - 1, g.c.size() + shift - 1), BigInt(0));
    const BigInt glead = g.lead();
    const BigInt rlead = r.lead();
    for (std::size_t i = 0; i + 1 < r.c.size(); ++i) {
      next.c[i] = r.c[i] * glead;
    }
    for (std::size_t i = 0; i + 1 < g.c.size(); ++i) {
      next.c[i + shift] -= g.c[i] * rlead;
    }
    next.trim();
    r = std::move(next);
    ++scalings;
  }
  if (g.lead() < 0 && scalings % 2 == 1) {
    for (auto& x : r.c) x = -x;
  }
  return r;
}

inline std::vector<IntPoly> sturm_chain(const IntPoly& squarefree) {
  std::vector<IntPoly> chain;
  chain.push_back(squarefree);
  IntPoly d = int_derivative(squarefree);
  if (!d.is_zero()) chain.push_back(std::move(d));
  while (chain.size() >= 2 && !chain.back().is_zero() && chain.back().degree() > 0) {
    IntPoly rem = positive_pseudo_rem(chain[chain.size() - 2], chain.back());
    if (rem.is_zero()) break;
    for (auto& x : rem.c) x = -x;
    make_primitive(rem);
    chain.push_back(std::move(rem));
  }
  return chain;
}

inline int sign_variations_at(const std::vector<IntPoly>& chain, const Rational& x) {
  int variations = 0;
  int last = 0;
  for (const auto& p : chain) {
    const int s = sign_at(p, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

// Monic gcd via the Euclidean algorithm; remainders are re-scaled to monic
// each round to keep coefficient growth in check.
inline UniPoly poly_gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = a.divmod(b).second;
    if (!r.is_zero()) {
      r = r.leading_coefficient().reciprocal() * r;
    }
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero()) {
    a = a.leading_coefficient().reciprocal() * a;
  }
  return a;
}

inline UniPoly squarefree_part(const UniPoly& p) {
  if (p.degree() == 0) return p;
  const UniPoly g = poly_gcd(p, p.derivative());
  if (g.degree() == 0) return p;
  return p.divmod(g).first;
}

// Shared state for repeated root counting against one polynomial.
struct SturmContext {
  UniPoly squarefree;
  std::vector<IntPoly> chain;

  explicit SturmContext(const UniPoly& p) : squarefree(squarefree_part(p)) {
    chain = sturm_chain(to_int_primitive(squarefree));
  }

  int sf_sign(const Rational& x) const { return sign_at(chain.front(), x); }

  // Distinct real roots strictly inside (lo, hi); both endpoints must be
  // non-roots.
  int count(const Rational& lo, const Rational& hi) const {
    return sign_variations_at(chain, lo) - sign_variations_at(chain, hi);
  }
};

inline UniPoly deflate_root(const UniPoly& p, const Rational& root) {
  const UniPoly linear =
      UniPoly::from_coefficients({-root, Rational(1)});
  auto [quotient, remainder] = p.divmod(linear);
  if (!remainder.is_zero()) {
    throw InternalError("deflate_root: claimed root does not divide");
  }
  return quotient;
}

}  // namespace detail

/// Number of distinct real roots of p strictly inside the interval.
/// Endpoints that are roots are divided out exactly first, which leaves the
/// strictly-interior count unchanged.
inline int sturm_count(const UniPoly& p, const Interval& interval) {
  if (p.is_zero()) {
    throw InvalidInputError("sturm_count: zero polynomial");
  }
  UniPoly work = p;
  while (!work.is_zero() && work.degree() > 0 && work.eval(interval.lo()).is_zero()) {
    work = detail::deflate_root(work, interval.lo());
  }
  while (!work.is_zero() && work.degree() > 0 && work.eval(interval.hi()).is_zero()) {
    work = detail::deflate_root(work, interval.hi());
  }
  if (work.degree() == 0) return 0;
  if (interval.is_point()) return 0;
  const detail::SturmContext ctx(work);
  return ctx.count(interval.lo(), interval.hi());
}

namespace detail {

inline RootEnclosure make_enclosure(const UniPoly& p, const Rational& lo, const Rational& hi) {
  RootEnclosure e;
  e.interval = Interval(lo, hi);
  e.sign_lo = p.eval(lo).sign();
  e.sign_hi = p.eval(hi).sign();
  e.multiplicity_hint = (e.sign_lo != e.sign_hi) ? 1 : 2;
  return e;
}

// Tight enclosure around a point known to be the only root in (lo, hi).
inline RootEnclosure enclose_known_root(const UniPoly& p, const SturmContext& ctx,
                                        const Rational& root, const Rational& lo,
                                        const Rational& hi) {
  Rational delta = std::min(root - lo, hi - root) / Rational(2);
  while (true) {
    const Rational a = root - delta;
    const Rational b = root + delta;
    if (ctx.sf_sign(a) != 0 && ctx.sf_sign(b) != 0 && ctx.count(a, b) == 1) {
      return make_enclosure(p, a, b);
    }
    delta /= Rational(2);
  }
}

inline void isolate_in(const UniPoly& p, const SturmContext& ctx, const Rational& lo,
                       const Rational& hi, int count, std::vector<RootEnclosure>& out) {
  if (count == 0) return;
  if (count == 1) {
    Rational left = lo;
    if (p.eval(left).is_zero()) {
      // Only possible at the left edge of the initial range (a root of p at 0
      // stripped away before isolation); slide right without crossing the root.
      Rational step = (hi - left) / Rational(2);
      while (true) {
        const Rational candidate = left + step;
        const int s = ctx.sf_sign(candidate);
        if (s == 0) {
          out.push_back(enclose_known_root(p, ctx, candidate, left, hi));
          return;
        }
        if (ctx.count(candidate, hi) == 1) {
          left = candidate;
          break;
        }
        step /= Rational(2);
      }
    }
    out.push_back(make_enclosure(p, left, hi));
    return;
  }
  const Rational mid = (lo + hi) / Rational(2);
  if (ctx.sf_sign(mid) == 0) {
    const RootEnclosure pivot = enclose_known_root(p, ctx, mid, lo, hi);
    const Rational a = pivot.interval.lo();
    const Rational b = pivot.interval.hi();
    isolate_in(p, ctx, lo, a, ctx.count(lo, a), out);
    out.push_back(pivot);
    isolate_in(p, ctx, b, hi, ctx.count(b, hi), out);
    return;
  }
  isolate_in(p, ctx, lo, mid, ctx.count(lo, mid), out);
  isolate_in(p, ctx, mid, hi, ctx.count(mid, hi), out);
}

}  // namespace detail

/// Disjoint enclosures covering exactly the positive real roots of p,
/// ordered by increasing position. Initial range from the Cauchy bound
/// (1 + largest coefficient magnitude of the monic form), then Sturm-guided
/// bisection.
inline std::vector<RootEnclosure> isolate_positive_roots(const UniPoly& p) {
  if (p.is_zero()) {
    throw InvalidInputError("isolate_positive_roots: zero polynomial");
  }
  // A root at zero is not positive; strip the variable^k factor.
  UniPoly stripped = p;
  while (!stripped.is_zero() && stripped.coefficient(0).is_zero()) {
    stripped = stripped.divmod(UniPoly::monomial(Rational(1), 1)).first;
  }
  if (stripped.degree() == 0) return {};

  const detail::SturmContext ctx(stripped);
  const UniPoly& sf = ctx.squarefree;
  Rational bound(1);
  const Rational lead = sf.leading_coefficient();
  for (std::size_t i = 0; i < sf.degree(); ++i) {
    const Rational ratio = (sf.coefficient(i) / lead).abs();
    if (ratio > bound - 1) bound = ratio + 1;
  }
  while (ctx.sf_sign(bound) == 0) bound += 1;

  std::vector<RootEnclosure> out;
  detail::isolate_in(p, ctx, Rational(0), bound, ctx.count(Rational(0), bound), out);
  return out;
}

/// Bisection refinement of a valid enclosure down to width <= 2^-precision_bits.
/// The sign invariant is preserved; an exact rational root hit on the way
/// collapses the enclosure to a point.
inline RootEnclosure refine(const UniPoly& p, RootEnclosure e, unsigned precision_bits) {
  if (p.is_zero()) {
    throw InvalidInputError("refine: zero polynomial");
  }
  const Rational target = Rational::normalized(1, BigInt(1) << precision_bits);
  if (e.interval.width() <= target) return e;

  if (e.sign_lo != 0 && e.sign_hi != 0 && e.sign_lo != e.sign_hi) {
    Rational lo = e.interval.lo();
    Rational hi = e.interval.hi();
    int sign_lo = e.sign_lo;
    int sign_hi = e.sign_hi;
    while (hi - lo > target) {
      const Rational mid = (lo + hi) / Rational(2);
      const int s = p.eval(mid).sign();
      if (s == 0) {
        return RootEnclosure{Interval(mid, mid), 0, 0, e.multiplicity_hint};
      }
      if (s == sign_lo) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    return RootEnclosure{Interval(lo, hi), sign_lo, sign_hi, e.multiplicity_hint};
  }

  if (e.multiplicity_hint <= 1) {
    throw InconsistentEnclosureError(
        "refine: enclosure claims a simple root but has no sign change");
  }

  // Even-multiplicity root: bisect on Sturm counts instead of signs.
  const detail::SturmContext ctx(p);
  Rational lo = e.interval.lo();
  Rational hi = e.interval.hi();
  if (ctx.sf_sign(lo) == 0 || ctx.sf_sign(hi) == 0) {
    throw InconsistentEnclosureError("refine: enclosure endpoint is itself a root");
  }
  while (hi - lo > target) {
    const Rational mid = (lo + hi) / Rational(2);
    if (ctx.sf_sign(mid) == 0) {
      return RootEnclosure{Interval(mid, mid), 0, 0, e.multiplicity_hint};
    }
    if (ctx.count(lo, mid) == 1) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return RootEnclosure{Interval(lo, hi), p.eval(lo).sign(), p.eval(hi).sign(),
                       e.multiplicity_hint};
}

/// Exactly the rational roots of p: clear denominators, test the divisor
/// candidates of the integer constant and leading coefficients, and confirm
/// every candidate by exact evaluation. Sorted ascending.
inline std::vector<Rational> rational_root_test(const UniPoly& p) {
  if (p.is_zero()) {
    throw InvalidInputError("rational_root_test: zero polynomial");
  }
  std::vector<Rational> roots;
  UniPoly work = p;
  if (work.coefficient(0).is_zero() && work.degree() > 0) {
    roots.push_back(Rational(0));
    while (!work.is_zero() && work.coefficient(0).is_zero()) {
      work = work.divmod(UniPoly::monomial(Rational(1), 1)).first;
    }
  }
  if (work.degree() == 0) return roots;

  const detail::IntPoly ip = detail::to_int_primitive(work);
  const std::vector<BigInt> nums = detail::positive_divisors(boost::multiprecision::abs(ip.c.front()));
  const std::vector<BigInt> dens = detail::positive_divisors(boost::multiprecision::abs(ip.lead()));
  for (const BigInt& num : nums) {
    for (const BigInt& den : dens) {
      if (boost::multiprecision::gcd(num, den) != 1) continue;
      for (const int sign : {1, -1}) {
        const Rational candidate = Rational::normalized(sign * num, den);
        if (detail::sign_at(ip, candidate) == 0) {
          roots.push_back(candidate);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace fltkit
