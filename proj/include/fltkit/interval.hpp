#pragma once

// Intervals with exact rational endpoints. Results are containment
// conservative: the result interval contains every pointwise result.
// Endpoints stay rational, so there is no rounding-mode reasoning anywhere;
// width is controlled by bisection counts, not floating point.

#include <algorithm>
#include <utility>

#include "fltkit/errors.hpp"
#include "fltkit/rational.hpp"

namespace fltkit {

class Interval {
 public:
  Interval() : lo_(0), hi_(0) {}
  Interval(Rational point) : lo_(point), hi_(std::move(point)) {}  // NOLINT: implicit by design
  Interval(int point) : Interval(Rational(point)) {}               // NOLINT
  Interval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_ > hi_) {
      throw InvalidInputError("interval: lo > hi");
    }
  }

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }

  Rational width() const { return hi_ - lo_; }
  bool is_point() const { return lo_ == hi_; }
  bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }
  bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
  bool contains(const Interval& other) const { return lo_ <= other.lo_ && other.hi_ <= hi_; }
  bool intersects(const Interval& other) const { return lo_ <= other.hi_ && other.lo_ <= hi_; }

  Rational midpoint() const { return (lo_ + hi_) / Rational(2); }

  Interval operator-() const { return Interval(-hi_, -lo_); }

  friend Interval operator+(const Interval& x, const Interval& y) {
    return Interval(x.lo_ + y.lo_, x.hi_ + y.hi_);
  }
  friend Interval operator-(const Interval& x, const Interval& y) {
    return Interval(x.lo_ - y.hi_, x.hi_ - y.lo_);
  }
  friend Interval operator*(const Interval& x, const Interval& y) {
    const Rational p1 = x.lo_ * y.lo_;
    const Rational p2 = x.lo_ * y.hi_;
    const Rational p3 = x.hi_ * y.lo_;
    const Rational p4 = x.hi_ * y.hi_;
    return Interval(std::min(std::min(p1, p2), std::min(p3, p4)),
                    std::max(std::max(p1, p2), std::max(p3, p4)));
  }

  Interval& operator+=(const Interval& o) { return *this = *this + o; }
  Interval& operator-=(const Interval& o) { return *this = *this - o; }
  Interval& operator*=(const Interval& o) { return *this = *this * o; }

  /// Exact nonnegative integer power with sign-case analysis: an even power
  /// of an interval containing zero has lower endpoint 0, not lo^n.
  Interval pow(unsigned exponent) const {
    if (exponent == 0) return Interval(Rational(1));
    Rational a = lo_.pow(static_cast<long>(exponent));
    Rational b = hi_.pow(static_cast<long>(exponent));
    if (exponent % 2 == 0 && contains_zero()) {
      return Interval(Rational(0), std::max(a, b));
    }
    if (a > b) std::swap(a, b);
    return Interval(std::move(a), std::move(b));
  }

  /// Reciprocal of a zero-free interval.
  Interval reciprocal() const {
    if (contains_zero()) {
      throw InvalidInputError("interval: reciprocal of an interval containing zero");
    }
    return Interval(hi_.reciprocal(), lo_.reciprocal());
  }

  friend Interval operator/(const Interval& x, const Interval& y) { return x * y.reciprocal(); }

  friend bool operator==(const Interval& a, const Interval& b) {
    return a.lo_ == b.lo_ && a.hi_ == b.hi_;
  }

  static Interval hull(const Interval& a, const Interval& b) {
    return Interval(std::min(a.lo_, b.lo_), std::max(a.hi_, b.hi_));
  }

 private:
  Rational lo_, hi_;
};

}  // namespace fltkit
