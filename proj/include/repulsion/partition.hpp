#pragma once

// Restricted partition counts p_B(n): the number of partitions of n whose
// parts are all at most B, i.e. the coefficients of prod_{m<=B} 1/(1-q^m).

#include "repulsion/integer.hpp"

#include <cstddef>
#include <filesystem>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace repulsion {

/// A stored or recomputed value disagreed with an exact certificate.
class CertificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Immutable table of p_B(0..N).
class PartitionTable {
 public:
  /**
   * Coin-change DP: starts from p_1 = 1,1,1,... and folds in part sizes
   * b = 2..B in place, values[n] += values[n-b], so after layer b the row
   * holds p_b(n) = p_{b-1}(n) + p_b(n-b). Requires B >= 1.
   */
  static PartitionTable build(unsigned bound, std::size_t max_index);

  /**
   * Wraps externally supplied values (e.g. a cache file) after certifying
   * them: multiplying the series by prod_{m<=B}(1-q^m) must give exactly
   * 1, 0, 0, ... Throws CertificationError on any mismatch.
   */
  static PartitionTable from_values(unsigned bound, std::vector<BigInt> values);

  unsigned bound() const { return bound_; }
  std::size_t max_index() const { return values_.size() - 1; }
  std::span<const BigInt> values() const { return values_; }
  const BigInt& operator[](std::size_t n) const { return values_.at(n); }

  /// Copy of the first max_index+1 entries.
  PartitionTable prefix(std::size_t max_index) const;

 private:
  PartitionTable(unsigned bound, std::vector<BigInt> values) : bound_(bound), values_(std::move(values)) {}
  unsigned bound_ = 1;
  std::vector<BigInt> values_;
};

/// p_B(n) from the DP, backed by a process-wide table cache per B.
BigInt p_single(unsigned bound, std::size_t n);

/// Shared immutable table covering at least 0..max_index.
std::shared_ptr<const PartitionTable> shared_table(unsigned bound, std::size_t max_index);

inline constexpr unsigned kBruteForceLimit = 60;

/// Enumerates nonincreasing part sequences directly. n <= 60.
BigInt p_brute(unsigned bound, unsigned n);

// Cache files: first line "B N", then N+1 decimal values, one per line.

void write_table(const PartitionTable& table, const std::filesystem::path& path);

/// Reads and certifies a cache file. Throws CertificationError on any
/// malformed or inconsistent content.
PartitionTable read_table(const std::filesystem::path& path);

/// "pB_{B}_{N}.txt"
std::filesystem::path cache_file_name(unsigned bound, std::size_t max_index);

/**
 * Loads the smallest cached table for B with N' >= max_index (taking its
 * prefix), or builds and stores pB_{B}_{N}.txt. A corrupted cache file is
 * reported as CertificationError rather than silently rebuilt.
 */
PartitionTable load_or_build(unsigned bound, std::size_t max_index, const std::filesystem::path& dir);

}  // namespace repulsion

namespace repulsion {

/// Counts partitions of n into at most B parts (any part size). Equal to
/// p_B(n) by conjugation of Ferrers diagrams. n <= 60.
BigInt p_brute_parts(unsigned max_parts, unsigned n);

}  // namespace repulsion
