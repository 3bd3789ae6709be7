#pragma once

/**
 * @file shift.hpp
 * @brief Shifted polynomials Q(x) - t and the Diophantine cases they fall into.
 *
 * For a fixed k, Q - t is a "power shift" when Q - t = a R^k with R monic
 * nonconstant; such t are critical values of Q, hence rational roots of
 * D(t) = Res_x(Q - t, Q'). Every other shift is sorted by the number r_t of
 * distinct roots of Q - t: one root (Thue-type), two roots (Thue-Mahler
 * type), three or more (the curve b0 Y^k = Q_e(X) - t has genus >= 1). The
 * conic case (deg Q, k) = (2, 2) is kept apart because it can carry
 * infinitely many integral points.
 */

#include "repulsion/poly.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace repulsion {

struct PowerShift {
  Rational scale;
  Poly root;
};

struct SingleRoot {
  std::size_t degree;
  bool exponents_coprime;  ///< gcd(k, d) == 1
  bool k_divides_degree;
  Rational root;           ///< the unique root a of Q - t = c (x - a)^d
};

struct TwoRoots {};

struct GenusAtLeastOne {
  std::size_t distinct_roots;
};

struct PellConic {};

using ShiftClass = std::variant<PowerShift, SingleRoot, TwoRoots, GenusAtLeastOne, PellConic>;

std::string_view class_name(const ShiftClass& c);

/// B >= 4, k >= 3 and k does not divide B - 1.
bool theorem_hypotheses(unsigned bound, unsigned k);

struct ExceptionalShift {
  Rational t;
  Rational scale;
  Poly root;
};

/**
 * The t with |t| <= limit for which Q - t = a R^k. Candidates are the
 * rational roots of param_resultant(Q); each is confirmed by poly_kth_root.
 * Requires deg Q >= 2 and k >= 2. At most deg Q - 1 entries, ascending t.
 */
std::vector<ExceptionalShift> exceptional_shifts(const Poly& Q, unsigned k, const Rational& limit);

struct ReducedEquation {
  BigInt M;          ///< smallest positive integer with M*Q integral
  Poly Qe;           ///< sign * M * Q, positive leading coefficient
  int sign = 1;
  bool primitive = true;
  BigInt u;          ///< M = u^k * b0
  BigInt b0;         ///< k-th-power-free
};

ReducedEquation reduce(const Poly& Q, unsigned k);

/// Total classification of Q - t relative to k. Requires deg Q >= 2, k >= 2.
ShiftClass classify_shift(const Poly& Q, const Rational& t, unsigned k);

struct ProgressionEntry {
  std::uint64_t residue;
  BigInt t;
  ShiftClass cls;
};

struct ProgressionReport {
  unsigned bound = 0;
  unsigned k = 0;
  std::uint64_t tolerance = 0;
  std::uint64_t period = 0;
  bool hypotheses = false;
  std::vector<ProgressionEntry> entries;       ///< ordered by (residue, t)
  std::map<std::string, std::size_t> counts;   ///< per class name
  std::size_t power_shifts = 0;
};

/**
 * classify_shift(Q_r, t, k) for every residue r (or only `residue`) and every
 * integer |t| <= tolerance, over the components of extract(B). B <= 8.
 */
ProgressionReport classify_progression(unsigned bound, unsigned k, std::uint64_t tolerance,
                                       std::optional<std::uint64_t> residue = std::nullopt, unsigned workers = 1);

struct CurvePoint {
  BigInt X;
  BigInt Y;
  friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

/**
 * Integral points of b0 Y^k = f(X) with |X| <= xmax, X ascending. For even k
 * only Y >= 0 is reported; for odd k Y takes the sign of f(X)/b0. f must
 * have integer coefficients and b0 must be positive.
 */
std::vector<CurvePoint> bounded_points(const BigInt& b0, const Poly& f, unsigned k, const BigInt& xmax);

}  // namespace repulsion
