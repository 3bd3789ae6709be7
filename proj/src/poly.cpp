#include "repulsion/poly.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace repulsion {

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (sgn(den) == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    std::string str(s);
    if (str.empty() || str == "-" || str == "+")
      throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    std::size_t start = (str[0] == '-' || str[0] == '+') ? 1 : 0;
    for (std::size_t i = start; i < str.size(); ++i)
      if (str[i] < '0' || str[i] > '9')
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    if (str[0] == '+') str.erase(0, 1);
    return BigInt(str, 10);
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return make_rational(parse_int(text));
  BigInt den = parse_int(text.substr(slash + 1));
  if (sgn(den) == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return make_rational(parse_int(text.substr(0, slash)), den);
}

// ---------------------------------------------------------------------------
// Poly
// ---------------------------------------------------------------------------

Poly::Poly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Poly::Poly(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) { trim(); }

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

std::optional<std::size_t> Poly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

std::size_t Poly::nonzero_degree() const {
  if (coeffs_.empty()) throw std::domain_error("degree of the zero polynomial");
  return coeffs_.size() - 1;
}

Rational Poly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

const Rational& Poly::leading_coefficient() const {
  if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rational Poly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

bool Poly::is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

bool Poly::has_integer_coefficients() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return is_integer(c); });
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  trim();
  return *this;
}

Poly operator-(Poly a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

std::string Poly::to_string(std::string_view var) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Rational& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (out.empty())
      out += sgn(c) < 0 ? "-" : "";
    else
      out += sgn(c) < 0 ? " - " : " + ";
    const bool unit = (mag == 1);
    if (i == 0 || !unit) out += is_integer(mag) ? mag.get_str() : "(" + mag.get_str() + ")";
    if (i >= 1) out += var;
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Ring operations
// ---------------------------------------------------------------------------

DivMod divmod(const Poly& f, const Poly& g) {
  if (g.is_zero()) throw std::domain_error("division by the zero polynomial");
  const std::size_t dg = g.nonzero_degree();
  const Rational& lc = g.leading_coefficient();
  std::vector<Rational> rem(f.coefficients().begin(), f.coefficients().end());
  if (rem.size() < dg + 1) return {Poly{}, f};

  std::vector<Rational> quot(rem.size() - dg);
  for (std::size_t i = rem.size(); i-- > dg;) {
    if (sgn(rem[i]) == 0) continue;
    Rational q = rem[i] / lc;
    for (std::size_t j = 0; j <= dg; ++j) rem[i - dg + j] -= q * g.coeff(j);
    quot[i - dg] = std::move(q);
  }
  rem.resize(dg);
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly derivative(const Poly& f) {
  auto c = f.coefficients();
  if (c.size() <= 1) return {};
  std::vector<Rational> d(c.size() - 1);
  for (std::size_t i = 1; i < c.size(); ++i) d[i - 1] = c[i] * static_cast<unsigned long>(i);
  return Poly(std::move(d));
}

Poly pow(const Poly& f, unsigned k) {
  Poly result = Poly::constant(1);
  Poly base = f;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

Poly taylor_shift(const Poly& f, const Rational& c) {
  const Poly lin{c, Rational(1)};
  Poly acc;
  auto coeffs = f.coefficients();
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * lin + coeffs[i];
  return acc;
}

Poly monic(const Poly& f) {
  if (f.is_zero()) return f;
  return f * Rational(1 / f.leading_coefficient());
}

Poly gcd(const Poly& f, const Poly& g) {
  if (f.is_zero() && g.is_zero()) throw std::domain_error("gcd of two zero polynomials");
  Poly a = monic(f), b = monic(g);
  while (!b.is_zero()) {
    Poly r = monic(divmod(a, b).remainder);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::size_t distinct_root_count(const Poly& f) {
  if (f.is_zero() || f.nonzero_degree() < 1)
    throw std::domain_error("distinct_root_count needs a nonconstant polynomial");
  return f.nonzero_degree() - gcd(f, derivative(f)).nonzero_degree();
}

std::pair<Rational, Poly> primitive_part(const Poly& f) {
  if (f.is_zero()) throw std::domain_error("primitive part of the zero polynomial");
  BigInt den_lcm = 1;
  for (const auto& c : f.coefficients()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  BigInt content = 0;
  for (const auto& c : f.coefficients()) {
    BigInt v = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
  }
  Rational scale = make_rational(den_lcm, content);
  if (sgn(f.leading_coefficient()) < 0) scale = -scale;
  return {scale, f * scale};
}

Rational resultant(const Poly& f, const Poly& g) {
  if (f.is_zero() || g.is_zero()) return 0;
  const std::size_t m = f.nonzero_degree(), n = g.nonzero_degree();
  if (n == 0) {
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), g.leading_coefficient().get_num_mpz_t(), m);
    mpz_pow_ui(r.get_den_mpz_t(), g.leading_coefficient().get_den_mpz_t(), m);
    r.canonicalize();
    return r;
  }
  if (m < n) {
    Rational r = resultant(g, f);
    return ((m * n) % 2 == 1) ? Rational(-r) : r;
  }
  Poly r = divmod(f, g).remainder;
  if (r.is_zero()) return 0;
  const std::size_t dr = r.nonzero_degree();
  Rational lc_pow = 1;
  for (std::size_t i = 0; i < m - dr; ++i) lc_pow *= g.leading_coefficient();
  Rational sub = resultant(g, r) * lc_pow;
  return ((m * n) % 2 == 1) ? Rational(-sub) : sub;
}

Poly determinant(std::vector<Poly> a, std::size_t n) {
  if (a.size() != n * n) throw std::invalid_argument("determinant: matrix is not n*n");
  if (n == 0) return Poly::constant(1);
  auto at = [&](std::size_t i, std::size_t j) -> Poly& { return a[i * n + j]; };

  bool negate = false;
  Poly prev = Poly::constant(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k).is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && at(swap_row, k).is_zero()) ++swap_row;
      if (swap_row == n) return {};
      for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(swap_row, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Poly num = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        DivMod qr = divmod(num, prev);
        if (!qr.remainder.is_zero()) throw std::logic_error("determinant: inexact Bareiss division");
        at(i, j) = std::move(qr.quotient);
      }
      at(i, k) = Poly{};
    }
    prev = at(k, k);
  }
  Poly det = at(n - 1, n - 1);
  return negate ? -det : det;
}

Poly param_resultant(const Poly& Q) {
  if (Q.is_zero() || Q.nonzero_degree() < 2) throw std::domain_error("param_resultant needs deg Q >= 2");
  const std::size_t m = Q.nonzero_degree();
  const Poly dQ = derivative(Q);
  const std::size_t n = m - 1;
  const std::size_t size = m + n;

  // Coefficients of Q(x) - t as polynomials in t; only the constant term moves.
  std::vector<Poly> f(m + 1);
  for (std::size_t i = 0; i <= m; ++i) f[i] = Poly::constant(Q.coeff(i));
  f[0] = Poly{Q.coeff(0), Rational(-1)};

  std::vector<Poly> syl(size * size);
  for (std::size_t row = 0; row < n; ++row)
    for (std::size_t i = 0; i <= m; ++i) syl[row * size + row + (m - i)] = f[i];
  for (std::size_t row = 0; row < m; ++row)
    for (std::size_t i = 0; i <= n; ++i) syl[(n + row) * size + row + (n - i)] = Poly::constant(dQ.coeff(i));
  return determinant(std::move(syl), size);
}

std::vector<Rational> rational_roots(const Poly& f) {
  if (f.is_zero()) throw std::domain_error("rational_roots of the zero polynomial");
  std::set<Rational> roots;
  Poly p = primitive_part(f).second;

  std::size_t zeros = 0;
  while (zeros < p.coefficients().size() && sgn(p.coeff(zeros)) == 0) ++zeros;
  if (zeros > 0) {
    roots.insert(0);
    std::vector<Rational> shifted(p.coefficients().begin() + static_cast<std::ptrdiff_t>(zeros),
                                  p.coefficients().end());
    p = Poly(std::move(shifted));
  }
  if (p.nonzero_degree() == 0) return {roots.begin(), roots.end()};

  const auto nums = positive_divisors(p.coeff(0).get_num());
  const auto dens = positive_divisors(p.leading_coefficient().get_num());
  for (const BigInt& q : dens) {
    for (const BigInt& a : nums) {
      Rational cand = make_rational(a, q);
      if (roots.contains(cand)) continue;
      if (sgn(p(cand)) == 0) roots.insert(cand);
      Rational neg = -cand;
      if (sgn(p(neg)) == 0) roots.insert(neg);
    }
  }
  return {roots.begin(), roots.end()};
}

std::optional<KthRoot> poly_kth_root(const Poly& f, unsigned k) {
  if (f.is_zero()) throw std::domain_error("poly_kth_root of the zero polynomial");
  if (k < 2) throw std::domain_error("poly_kth_root needs k >= 2");
  const std::size_t n = f.nonzero_degree();
  if (n == 0 || n % k != 0) return std::nullopt;
  const std::size_t m = n / k;
  const Rational a = f.leading_coefficient();
  const Poly g = monic(f);

  std::vector<Rational> r(m + 1);
  r[m] = 1;
  for (std::size_t j = 1; j <= m; ++j) {
    const Rational known = pow(Poly(r), k).coeff(n - j);
    r[m - j] = (g.coeff(n - j) - known) / Rational(k);
  }
  Poly root(std::move(r));
  if (!(a * pow(root, k) == f)) return std::nullopt;
  return KthRoot{a, std::move(root)};
}

}  // namespace repulsion
