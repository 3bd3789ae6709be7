#pragma once

/**
 * @file poly.hpp
 * @brief Exact rational numbers and dense univariate polynomials over Q.
 *
 * Rational is GMP's mpq_class kept in canonical form (positive denominator,
 * reduced, zero as 0/1). Poly stores coefficients constant-term first with
 * no trailing zeros; the zero polynomial is the empty sequence and has no
 * degree (degree() returns std::nullopt).
 */

#include "repulsion/integer.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace repulsion {

using Rational = mpq_class;

/// num/den in canonical form. Throws std::domain_error when den == 0.
Rational make_rational(const BigInt& num, const BigInt& den = 1);

/// "p/q" with the denominator always present.
std::string to_fraction_string(const Rational& q);

/// Parses "p/q" or "p". Throws std::invalid_argument on malformed text.
Rational parse_rational(std::string_view text);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coefficients);
  Poly(std::initializer_list<Rational> coefficients);

  static Poly constant(const Rational& c);
  static Poly monomial(const Rational& c, std::size_t degree);
  static Poly x() { return monomial(1, 1); }

  bool is_zero() const { return coeffs_.empty(); }

  /// std::nullopt for the zero polynomial.
  std::optional<std::size_t> degree() const;

  /// Degree of a nonzero polynomial; throws std::domain_error on zero.
  std::size_t nonzero_degree() const;

  /// Coefficient of x^i, zero past the end.
  Rational coeff(std::size_t i) const;
  const Rational& leading_coefficient() const;
  std::span<const Rational> coefficients() const { return coeffs_; }

  Rational operator()(const Rational& x) const;

  bool is_monic() const;
  bool has_integer_coefficients() const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const Rational& s);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
  friend Poly operator-(Poly a);
  friend Poly operator-(Poly a, const Rational& c) { return a -= constant(c); }
  friend Poly operator+(Poly a, const Rational& c) { return a += constant(c); }

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  /// Human-readable form in the given variable, highest degree first.
  std::string to_string(std::string_view var = "x") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct DivMod {
  Poly quotient;
  Poly remainder;
};

/// f = g*q + r with deg r < deg g. Throws std::domain_error when g is zero.
DivMod divmod(const Poly& f, const Poly& g);

Poly derivative(const Poly& f);

/// f^k, k >= 0.
Poly pow(const Poly& f, unsigned k);

/// f(x + c).
Poly taylor_shift(const Poly& f, const Rational& c);

/// f scaled to leading coefficient 1; zero stays zero.
Poly monic(const Poly& f);

/// Monic gcd over Q by the Euclidean algorithm. Both zero is a contract
/// violation (std::domain_error).
Poly gcd(const Poly& f, const Poly& g);

/// deg f - deg gcd(f, f'). Requires deg f >= 1.
std::size_t distinct_root_count(const Poly& f);

/**
 * Primitive part: returns (M, P) with P = M*f, P in Z[x] primitive with
 * positive leading coefficient, M a nonzero rational. f must be nonzero.
 */
std::pair<Rational, Poly> primitive_part(const Poly& f);

/// Resultant Res_x(f, g) over Q via the Euclidean remainder sequence.
Rational resultant(const Poly& f, const Poly& g);

/**
 * D(t) = Res_x(Q(x) - t, Q'(x)) as a polynomial in t.
 *
 * Built as the Sylvester matrix of (Q - t, Q') with entries in Q[t] and
 * reduced by fraction-free (Bareiss) elimination over Q[t]. Every critical
 * value of Q is a root of D. Requires deg Q >= 2.
 */
Poly param_resultant(const Poly& Q);

/// Determinant of a square matrix with entries in Q[t] (row-major, n*n).
Poly determinant(std::vector<Poly> matrix, std::size_t n);

/// All rational roots of a nonzero polynomial, ascending and distinct.
std::vector<Rational> rational_roots(const Poly& f);

struct KthRoot {
  Rational scale;  ///< the leading coefficient of f
  Poly root;       ///< monic, nonconstant
};

/**
 * Tests f = a * R^k with R monic nonconstant. R is recovered by matching
 * coefficients of f/a from the top down and confirmed by full expansion.
 */
std::optional<KthRoot> poly_kth_root(const Poly& f, unsigned k);

}  // namespace repulsion
