#pragma once

/**
 * @file repulsion.hpp
 * @brief Distance from p_B(n) to the nearest k-th power.
 *
 * Delta_k^(B)(n) = min_{m >= 0} |p_B(n) - m^k|. The achieving base m is
 * reported with every hit; at an exact midpoint the smaller m is kept.
 */

#include "repulsion/integer.hpp"
#include "repulsion/partition.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace repulsion {

struct Hit {
  unsigned bound = 0;
  unsigned exponent = 0;
  std::uint64_t n = 0;
  BigInt p;      ///< p_B(n)
  BigInt m;      ///< nearest k-th power base
  BigInt t;      ///< p - m^k
  BigInt delta;  ///< |t|

  friend bool operator==(const Hit&, const Hit&) = default;
};

/// Nearest k-th power to p >= 0 (ties to the smaller base).
Hit nearest_power(const BigInt& p, unsigned k);

Hit delta(unsigned bound, unsigned k, std::uint64_t n);

/// Same, reading p_B(n) from a prebuilt table.
Hit delta(const PartitionTable& table, unsigned k, std::uint64_t n);

struct ScanOptions {
  unsigned workers = 1;
  std::size_t chunk = 4096;
  std::uint64_t min_base = 0;  ///< drop hits whose base m is below this
};

/**
 * All hits with 1 <= n <= horizon and delta <= tolerance, increasing n.
 * Requires table.max_index() >= horizon. Output does not depend on the
 * worker count or chunk size.
 */
std::vector<Hit> scan(const PartitionTable& table, unsigned k, std::uint64_t horizon, const BigInt& tolerance,
                      const ScanOptions& options = {});

/// n = 2(m^k - 1), for which p_2(n) = m^k; the identity is checked.
BigInt p2_family(const BigInt& m, unsigned k);

}  // namespace repulsion
