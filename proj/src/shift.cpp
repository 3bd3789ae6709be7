#include "repulsion/shift.hpp"

#include "repulsion/quasipoly.hpp"

#include <numeric>
#include <thread>

namespace repulsion {

std::string_view class_name(const ShiftClass& c) {
  struct Visitor {
    std::string_view operator()(const PowerShift&) const { return "PowerShift"; }
    std::string_view operator()(const SingleRoot&) const { return "SingleRoot"; }
    std::string_view operator()(const TwoRoots&) const { return "TwoRoots"; }
    std::string_view operator()(const GenusAtLeastOne&) const { return "GenusAtLeastOne"; }
    std::string_view operator()(const PellConic&) const { return "PellConic"; }
  };
  return std::visit(Visitor{}, c);
}

bool theorem_hypotheses(unsigned bound, unsigned k) { return bound >= 4 && k >= 3 && (bound - 1) % k != 0; }

std::vector<ExceptionalShift> exceptional_shifts(const Poly& Q, unsigned k, const Rational& limit) {
  if (Q.is_zero() || Q.nonzero_degree() < 2) throw std::domain_error("exceptional_shifts needs deg Q >= 2");
  if (k < 2) throw std::domain_error("exceptional_shifts needs k >= 2");
  const Poly critical = param_resultant(Q);
  if (critical.is_zero()) throw std::logic_error("critical-value resultant vanished identically");

  std::vector<ExceptionalShift> out;
  for (const Rational& t : rational_roots(critical)) {
    if (abs(t) > limit) continue;
    if (auto kr = poly_kth_root(Q - t, k)) out.push_back({t, kr->scale, kr->root});
  }
  return out;
}

ReducedEquation reduce(const Poly& Q, unsigned k) {
  if (Q.is_zero()) throw std::domain_error("reduce of the zero polynomial");
  ReducedEquation eq;
  eq.M = 1;
  for (const auto& c : Q.coefficients()) mpz_lcm(eq.M.get_mpz_t(), eq.M.get_mpz_t(), c.get_den_mpz_t());
  eq.sign = sgn(Q.leading_coefficient()) < 0 ? -1 : 1;
  eq.Qe = Q * Rational(eq.M * eq.sign);
  BigInt content = 0;
  for (const auto& c : eq.Qe.coefficients()) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_num_mpz_t());
  eq.primitive = (content == 1);
  std::tie(eq.u, eq.b0) = kth_power_split(eq.M, k);
  return eq;
}

ShiftClass classify_shift(const Poly& Q, const Rational& t, unsigned k) {
  if (Q.is_zero() || Q.nonzero_degree() < 2) throw std::domain_error("classify_shift needs deg Q >= 2");
  if (k < 2) throw std::domain_error("classify_shift needs k >= 2");
  const Poly shifted = Q - t;
  if (auto kr = poly_kth_root(shifted, k)) return PowerShift{kr->scale, kr->root};

  const std::size_t d = Q.nonzero_degree();
  if (d == 2 && k == 2) return PellConic{};

  // Q_e - M t = sign*M*(Q - t) has the same roots as Q - t.
  const std::size_t roots = distinct_root_count(shifted);
  if (roots == 1) {
    // c (x - a)^d: the x^(d-1) coefficient is -d c a.
    Rational a = -shifted.coeff(d - 1) / (shifted.leading_coefficient() * Rational(d));
    return SingleRoot{d, std::gcd<std::size_t>(k, d) == 1, d % k == 0, a};
  }
  if (roots == 2) return TwoRoots{};
  return GenusAtLeastOne{roots};
}

ProgressionReport classify_progression(unsigned bound, unsigned k, std::uint64_t tolerance,
                                       std::optional<std::uint64_t> residue, unsigned workers) {
  if (k < 2) throw std::domain_error("classify_progression needs k >= 2");
  const Quasipoly q = extract(bound, workers);

  ProgressionReport report;
  report.bound = bound;
  report.k = k;
  report.tolerance = tolerance;
  report.period = q.period;
  report.hypotheses = theorem_hypotheses(bound, k);

  std::vector<std::uint64_t> residues;
  if (residue) {
    if (*residue >= q.period) throw std::domain_error("residue must be below the period");
    residues.push_back(*residue);
  } else {
    residues.resize(q.period);
    std::iota(residues.begin(), residues.end(), 0);
  }

  const std::size_t span = 2 * tolerance + 1;
  std::vector<std::optional<ProgressionEntry>> slots(residues.size() * span);
  auto fill = [&](std::size_t idx) {
    const std::uint64_t r = residues[idx / span];
    BigInt t = to_bigint(idx % span);
    t -= to_bigint(tolerance);
    slots[idx] = ProgressionEntry{r, t, classify_shift(q.components[r], Rational(t), k)};
  };

  workers = std::max(1U, workers);
  if (workers == 1) {
    for (std::size_t i = 0; i < slots.size(); ++i) fill(i);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < slots.size(); i += workers) fill(i);
      });
  }

  for (auto& s : slots) {
    const std::string name(class_name(s->cls));
    ++report.counts[name];
    if (std::holds_alternative<PowerShift>(s->cls)) ++report.power_shifts;
    report.entries.push_back(std::move(*s));
  }
  return report;
}

std::vector<CurvePoint> bounded_points(const BigInt& b0, const Poly& f, unsigned k, const BigInt& xmax) {
  if (sgn(b0) <= 0) throw std::domain_error("bounded_points needs b0 > 0");
  if (k < 2) throw std::domain_error("bounded_points needs k >= 2");
  if (sgn(xmax) < 0) throw std::domain_error("bounded_points needs xmax >= 0");
  if (!f.has_integer_coefficients()) throw std::domain_error("bounded_points needs an integer-coefficient polynomial");

  std::vector<CurvePoint> out;
  for (BigInt X = -xmax; X <= xmax; ++X) {
    const BigInt value = f(Rational(X)).get_num();
    if (!mpz_divisible_p(value.get_mpz_t(), b0.get_mpz_t())) continue;
    const BigInt w = value / b0;
    BigInt Y;
    if (k % 2 == 0) {
      if (!is_kth_power(w, k, &Y)) continue;
    } else {
      if (!is_kth_power(abs(w), k, &Y)) continue;
      if (sgn(w) < 0) Y = -Y;
    }
    if (b0 * ipow(Y, k) != value) throw std::logic_error("bounded_points: verification failed");
    out.push_back({X, std::move(Y)});
  }
  return out;
}

}  // namespace repulsion
