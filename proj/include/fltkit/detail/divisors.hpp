#pragma once

// Divisor enumeration for the rational root test. Trial division handles
// everything this library actually produces (constants here are smooth or
// small); Miller-Rabin plus Pollard-Brent rho covers large stray cofactors.

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "fltkit/errors.hpp"
#include "fltkit/rational.hpp"

namespace fltkit::detail {

inline bool miller_rabin(const BigInt& n) {
  if (n < 2) return false;
  for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  BigInt d = n - 1;
  unsigned r = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++r;
  }
  for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    BigInt x = boost::multiprecision::powm(BigInt(a), d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (unsigned i = 1; i < r; ++i) {
      x = x * x % n;
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

inline BigInt pollard_brent(const BigInt& n) {
  if (n % 2 == 0) return 2;
  using boost::multiprecision::gcd;
  for (BigInt c = 1;; ++c) {
    BigInt x = 2, y = 2, d = 1;
    BigInt saved_x = x;
    std::uint64_t power = 1, lam = 0;
    while (d == 1) {
      if (lam == power) {
        saved_x = y;
        power *= 2;
        lam = 0;
      }
      y = (y * y + c) % n;
      ++lam;
      d = gcd((saved_x > y ? saved_x - y : y - saved_x), n);
    }
    if (d != n) return d;
  }
}

/// Prime factorization of n > 0, as sorted (prime, exponent) pairs.
inline std::vector<std::pair<BigInt, unsigned>> factorize(BigInt n) {
  if (n <= 0) {
    throw InvalidInputError("factorize: require n > 0");
  }
  std::map<BigInt, unsigned> factors;
  const auto strip = [&](const BigInt& p) {
    while (n % p == 0) {
      ++factors[p];
      n /= p;
    }
  };
  strip(2);
  strip(3);
  for (BigInt p = 5; p * p <= n && p < (1 << 20); p += 4) {
    strip(p);
    p += 2;
    if (p * p > n) break;
    strip(p);
  }
  // Recursively split whatever the wheel left behind.
  std::vector<BigInt> pending;
  if (n > 1) pending.push_back(n);
  while (!pending.empty()) {
    BigInt m = pending.back();
    pending.pop_back();
    if (miller_rabin(m)) {
      ++factors[m];
      continue;
    }
    const BigInt d = pollard_brent(m);
    pending.push_back(d);
    pending.push_back(m / d);
  }
  return {factors.begin(), factors.end()};
}

/// All positive divisors of n > 0, sorted ascending.
inline std::vector<BigInt> positive_divisors(const BigInt& n) {
  std::vector<BigInt> divisors{1};
  for (const auto& [prime, exponent] : factorize(n)) {
    const std::size_t base_count = divisors.size();
    BigInt power = 1;
    for (unsigned e = 1; e <= exponent; ++e) {
      power *= prime;
      for (std::size_t i = 0; i < base_count; ++i) {
        divisors.push_back(divisors[i] * power);
      }
    }
  }
  std::sort(divisors.begin(), divisors.end());
  return divisors;
}

}  // namespace fltkit::detail
