#include "repulsion/quasipoly.hpp"

#include <numeric>
#include <thread>

namespace repulsion {

std::uint64_t lcm_upto(unsigned bound) {
  if (bound < 1) throw std::domain_error("lcm_upto needs B >= 1");
  std::uint64_t l = 1;
  for (std::uint64_t i = 2; i <= bound; ++i) l = std::lcm(l, i);
  return l;
}

Rational leading_coefficient_formula(unsigned bound) {
  BigInt fact_b = 1, fact_bm1 = 1;
  for (unsigned i = 2; i <= bound; ++i) fact_b *= i;
  for (unsigned i = 2; i + 1 <= bound; ++i) fact_bm1 *= i;
  return make_rational(ipow(to_bigint(lcm_upto(bound)), bound - 1), fact_b * fact_bm1);
}

Poly interpolate(std::span<const Rational> xs, std::span<const Rational> ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("interpolate: size mismatch");
  const std::size_t n = xs.size();
  std::vector<Rational> dd(ys.begin(), ys.end());
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i) {
      Rational span_x = xs[i] - xs[i - level];
      if (sgn(span_x) == 0) throw std::invalid_argument("interpolate: repeated node");
      dd[i] = (dd[i] - dd[i - 1]) / span_x;
    }
  Poly result;
  for (std::size_t i = n; i-- > 0;) result = result * Poly{Rational(-xs[i]), Rational(1)} + dd[i];
  return result;
}

QuasipolyCertificationError::QuasipolyCertificationError(std::uint64_t residue, std::uint64_t n, const std::string& what)
    : CertificationError(what + " (residue " + std::to_string(residue) + ", n " + std::to_string(n) + ")"),
      residue_(residue),
      n_(n) {}

namespace {

void check_component(unsigned bound, std::uint64_t r, const Poly& q, const Rational& alpha) {
  if (q.is_zero() || q.nonzero_degree() != bound - 1)
    throw QuasipolyCertificationError(r, 0, "component degree is not B-1");
  if (q.leading_coefficient() != alpha)
    throw QuasipolyCertificationError(r, 0, "leading coefficient " + q.leading_coefficient().get_str() +
                                                " differs from L^(B-1)/(B!(B-1)!) = " + alpha.get_str());
}

}  // namespace

Quasipoly extract(unsigned bound, unsigned workers) {
  if (bound < 2 || bound > 8) throw std::domain_error("extract supports 2 <= B <= 8");
  const std::uint64_t period = lcm_upto(bound);
  const std::uint64_t horizon = certification_horizon(bound);
  auto table = shared_table(bound, period * horizon + period - 1);

  Quasipoly q{bound, period, leading_coefficient_formula(bound), std::vector<Poly>(period)};

  std::vector<Rational> nodes(bound);
  for (unsigned i = 0; i < bound; ++i) nodes[i] = i;

  auto fit_residue = [&](std::uint64_t r) {
    std::vector<Rational> samples(bound);
    for (unsigned i = 0; i < bound; ++i) samples[i] = Rational((*table)[period * i + r]);
    Poly comp = interpolate(nodes, samples);
    for (std::uint64_t n = bound; n <= horizon; ++n) {
      Rational v = comp(Rational(to_bigint(n)));
      if (v != Rational((*table)[period * n + r]))
        throw QuasipolyCertificationError(r, n, "interpolated component disagrees with the DP");
    }
    check_component(bound, r, comp, q.alpha);
    q.components[r] = std::move(comp);
  };

  workers = std::max(1U, workers);
  if (workers == 1) {
    for (std::uint64_t r = 0; r < period; ++r) fit_residue(r);
    return q;
  }

  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::uint64_t r = w; r < period; r += workers) fit_residue(r);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return q;
}

BigInt qp_eval(const Quasipoly& q, std::uint64_t n) {
  const std::uint64_t r = n % q.period;
  Rational v = q.components.at(r)(Rational(to_bigint((n - r) / q.period)));
  if (!is_integer(v))
    throw CertificationError("quasipolynomial value at n=" + std::to_string(n) + " is not an integer: " + v.get_str());
  return v.get_num();
}

std::vector<DifferenceCheck> difference_degree_check(const Quasipoly& q) {
  if (q.bound < 2) throw std::domain_error("difference check needs B >= 2");
  const Rational expected_lc = q.alpha * Rational(q.bound - 1);
  std::vector<DifferenceCheck> out;
  out.reserve(q.components.size());
  for (std::uint64_t r = 0; r < q.components.size(); ++r) {
    const Poly& comp = q.components[r];
    Poly diff = taylor_shift(comp, 1) - comp;
    if (diff.is_zero() || diff.nonzero_degree() != q.bound - 2)
      throw QuasipolyCertificationError(r, 0, "difference degree is not B-2");
    if (diff.leading_coefficient() != expected_lc)
      throw QuasipolyCertificationError(r, 0, "difference leading coefficient is not (B-1)*alpha");
    out.push_back({r, std::move(diff)});
  }
  return out;
}

}  // namespace repulsion
