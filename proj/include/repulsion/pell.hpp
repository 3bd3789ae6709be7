#pragma once

// Square values of p_3 from x^2 - 12 m^2 = N.
//
// Completing the square in Q_r(t) = m^2 for r in {0, 1, 4, 5} gives
//   r=0: (6t+3)^2 - 12m^2 = -3     r=1: (6t+4)^2 - 12m^2 = 4
//   r=4: (6t+7)^2 - 12m^2 =  1     r=5: (6t+8)^2 - 12m^2 = 4
// and each family is the forward orbit of its minimal seed under the unit
// 7 + 2*sqrt(12).

#include "repulsion/integer.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace repulsion::pell {

inline constexpr long kDiscriminant = 12;
inline constexpr long kUnitX = 7;
inline constexpr long kUnitM = 2;

/// p_3(n) = m^2 is re-checked by the DP for solutions with n at most this.
inline constexpr std::size_t kVerifyHorizon = 20000;

struct Family {
  unsigned residue;
  long norm;
  long offset;  ///< x = 6t + offset
  BigInt x0;
  BigInt m0;
};

struct Solution {
  BigInt x;
  BigInt m;
  BigInt t;
  BigInt n;
};

/// (7x + 24m, 2x + 7m): multiplication by 7 + 2*sqrt(12).
std::pair<BigInt, BigInt> unit_apply(const BigInt& x, const BigInt& m);

/**
 * Smallest x = offset + 6j (j >= 0) such that x^2 - 12m^2 = norm for an
 * integer m >= 0. Throws std::runtime_error if none exists with x <= bound.
 */
std::pair<BigInt, BigInt> find_seed(long norm, long offset, const BigInt& bound);

/// The four residue classes with square-producing families.
inline constexpr std::array<unsigned, 4> kResidues{0, 1, 4, 5};

/// Family descriptor for r in {0,1,4,5}, seed rediscovered by find_seed.
Family family_for(unsigned residue);

/**
 * First `count` solutions of the residue-r family in increasing t. Each is
 * checked for norm, residue, integrality of t and, for n <= kVerifyHorizon,
 * p_3(n) = m^2 against the DP (CertificationError otherwise).
 */
std::vector<Solution> family(unsigned residue, std::size_t count);

}  // namespace repulsion::pell
