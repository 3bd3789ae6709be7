#pragma once

/**
 * @file quasipoly.hpp
 * @brief Period-L quasipolynomial structure of p_B.
 *
 * For L = lcm(1..B) there are polynomials Q_0..Q_{L-1} over Q, all of degree
 * B-1 with the common leading coefficient L^(B-1) / (B! (B-1)!), such that
 * p_B(L n + r) = Q_r(n) for every n >= 0. extract() finds them by exact
 * interpolation and certifies them against the DP.
 */

#include "repulsion/partition.hpp"
#include "repulsion/poly.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace repulsion {

struct Quasipoly {
  unsigned bound = 0;
  std::uint64_t period = 0;
  Rational alpha;
  std::vector<Poly> components;
};

/// lcm(1, 2, ..., B).
std::uint64_t lcm_upto(unsigned bound);

/// L^(B-1) / (B! (B-1)!).
Rational leading_coefficient_formula(unsigned bound);

/// Newton divided-difference interpolation through (xs[i], ys[i]); xs distinct.
Poly interpolate(std::span<const Rational> xs, std::span<const Rational> ys);

class QuasipolyCertificationError : public CertificationError {
 public:
  QuasipolyCertificationError(std::uint64_t residue, std::uint64_t n, const std::string& what);
  std::uint64_t residue() const { return residue_; }
  std::uint64_t index() const { return n_; }

 private:
  std::uint64_t residue_;
  std::uint64_t n_;
};

/// Last n checked during certification: B + 2L.
inline std::uint64_t certification_horizon(unsigned bound) { return bound + 2 * lcm_upto(bound); }

/**
 * Interpolates each Q_r through n = 0..B-1 and certifies it for
 * n = B..B+2L against the DP, then checks degree and leading coefficient.
 * Requires 2 <= B <= 8. `workers` threads split the residues.
 */
Quasipoly extract(unsigned bound, unsigned workers = 1);

/// Q_{N mod L}((N - r)/L); throws CertificationError if the value is not an integer.
BigInt qp_eval(const Quasipoly& q, std::uint64_t n);

struct DifferenceCheck {
  std::uint64_t residue;
  Poly difference;  ///< Q_r(x+1) - Q_r(x)
};

/**
 * Confirms for every residue that Q_r(x+1) - Q_r(x) has degree B-2 and
 * leading coefficient (B-1)*alpha. Throws QuasipolyCertificationError
 * naming the first offending residue.
 */
std::vector<DifferenceCheck> difference_degree_check(const Quasipoly& q);

}  // namespace repulsion
