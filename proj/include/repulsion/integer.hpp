#pragma once

// Arbitrary-precision integer helpers shared by every module.

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

namespace repulsion {

using BigInt = mpz_class;

/// base^k for k >= 0.
BigInt ipow(const BigInt& base, unsigned k);

/**
 * Floor k-th root of a nonnegative integer: the largest m >= 0 with m^k <= v.
 *
 * Integer Newton iteration started above the root, followed by the two-sided
 * check m^k <= v < (m+1)^k. Throws std::domain_error for v < 0 or k == 0.
 */
BigInt ikroot(const BigInt& v, unsigned k);

/// True iff v == m^k for some integer m >= 0; the root is written to *root.
bool is_kth_power(const BigInt& v, unsigned k, BigInt* root = nullptr);

/// Prime factorisation of |n| (n != 0) as ascending (prime, exponent) pairs.
std::vector<std::pair<BigInt, unsigned>> factorize(const BigInt& n);

/// All positive divisors of |n| (n != 0), ascending.
std::vector<BigInt> positive_divisors(const BigInt& n);

/// Splits n >= 1 as n = u^k * b with b k-th-power-free. Returns (u, b).
std::pair<BigInt, BigInt> kth_power_split(const BigInt& n, unsigned k);

inline BigInt to_bigint(std::uint64_t v) {
  BigInt r;
  mpz_import(r.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return r;
}

}  // namespace repulsion
