#include "repulsion/integer.hpp"

#include <algorithm>
#include <stdexcept>

namespace repulsion {

BigInt ipow(const BigInt& base, unsigned k) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), k);
  return r;
}

BigInt ikroot(const BigInt& v, unsigned k) {
  if (k == 0) throw std::domain_error("ikroot: exponent must be positive");
  if (sgn(v) < 0) throw std::domain_error("ikroot: negative radicand");
  if (k == 1 || v < 2) return v;

  // 2^ceil(bits/k) > v^(1/k), so the iteration decreases monotonically onto
  // the floor root.
  const std::size_t bits = mpz_sizeinbase(v.get_mpz_t(), 2);
  BigInt x = BigInt(1) << static_cast<mp_bitcnt_t>((bits + k - 1) / k);
  const BigInt km1 = k - 1;
  for (;;) {
    BigInt y = (km1 * x + v / ipow(x, k - 1)) / k;
    if (y >= x) break;
    x = std::move(y);
  }

  if (ipow(x, k) > v || ipow(x + 1, k) <= v)
    throw std::logic_error("ikroot: root certification failed");
  return x;
}

bool is_kth_power(const BigInt& v, unsigned k, BigInt* root) {
  if (sgn(v) < 0) return false;
  BigInt m = ikroot(v, k);
  if (ipow(m, k) != v) return false;
  if (root) *root = std::move(m);
  return true;
}

namespace {

BigInt pollard_brent(const BigInt& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    BigInt y = 2, x, g = 1, q = 1, ys;
    std::size_t r = 1;
    constexpr std::size_t kBatch = 128;
    auto step = [&](const BigInt& v) { return BigInt((v * v + c) % n); };
    while (g == 1) {
      x = y;
      for (std::size_t i = 0; i < r; ++i) y = step(y);
      std::size_t done = 0;
      while (done < r && g == 1) {
        ys = y;
        for (std::size_t i = 0; i < std::min(kBatch, r - done); ++i) {
          y = step(y);
          q = (q * abs(BigInt(x - y))) % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        done += kBatch;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        ys = step(ys);
        BigInt diff = abs(BigInt(x - ys));
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(BigInt n, std::vector<BigInt>& primes) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 40) != 0) {
    primes.push_back(n);
    return;
  }
  BigInt f = pollard_brent(n);
  factor_into(f, primes);
  factor_into(BigInt(n / f), primes);
}

}  // namespace

std::vector<std::pair<BigInt, unsigned>> factorize(const BigInt& n) {
  if (sgn(n) == 0) throw std::domain_error("factorize: zero");
  BigInt rest = abs(n);
  std::vector<BigInt> primes;
  for (unsigned long p = 2; p < 10000 && BigInt(p) * p <= rest; p += (p == 2 ? 1 : 2)) {
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      primes.emplace_back(p);
      rest /= p;
    }
  }
  factor_into(rest, primes);
  std::sort(primes.begin(), primes.end());

  std::vector<std::pair<BigInt, unsigned>> out;
  for (const BigInt& p : primes) {
    if (!out.empty() && out.back().first == p)
      ++out.back().second;
    else
      out.emplace_back(p, 1);
  }
  return out;
}

std::vector<BigInt> positive_divisors(const BigInt& n) {
  std::vector<BigInt> divs{1};
  for (const auto& [p, e] : factorize(n)) {
    const std::size_t base = divs.size();
    BigInt pk = 1;
    for (unsigned i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

std::pair<BigInt, BigInt> kth_power_split(const BigInt& n, unsigned k) {
  if (sgn(n) <= 0) throw std::domain_error("kth_power_split: n must be positive");
  if (k == 0) throw std::domain_error("kth_power_split: exponent must be positive");
  BigInt u = 1, b = 1;
  for (const auto& [p, e] : factorize(n)) {
    u *= ipow(p, e / k);
    b *= ipow(p, e % k);
  }
  return {u, b};
}

}  // namespace repulsion
