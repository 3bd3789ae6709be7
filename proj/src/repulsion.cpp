#include "repulsion/repulsion.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

namespace repulsion {

Hit nearest_power(const BigInt& p, unsigned k) {
  if (k < 2) throw std::domain_error("exponent k must be >= 2");
  Hit h;
  h.exponent = k;
  h.p = p;
  BigInt m0 = ikroot(p, k);
  BigInt below = p - ipow(m0, k);
  BigInt above = ipow(m0 + 1, k) - p;
  if (below <= above) {
    h.m = m0;
    h.t = below;
  } else {
    h.m = m0 + 1;
    h.t = -above;
  }
  h.delta = abs(h.t);
  return h;
}

Hit delta(const PartitionTable& table, unsigned k, std::uint64_t n) {
  Hit h = nearest_power(table[n], k);
  h.bound = table.bound();
  h.n = n;
  return h;
}

Hit delta(unsigned bound, unsigned k, std::uint64_t n) {
  Hit h = nearest_power(p_single(bound, n), k);
  h.bound = bound;
  h.n = n;
  return h;
}

std::vector<Hit> scan(const PartitionTable& table, unsigned k, std::uint64_t horizon, const BigInt& tolerance,
                      const ScanOptions& options) {
  if (horizon < 1) throw std::domain_error("scan horizon must be >= 1");
  if (sgn(tolerance) < 0) throw std::domain_error("scan tolerance must be >= 0");
  if (k < 2) throw std::domain_error("exponent k must be >= 2");
  if (table.max_index() < horizon) throw std::out_of_range("partition table shorter than the scan horizon");

  const std::size_t chunk = std::max<std::size_t>(1, options.chunk);
  const std::uint64_t chunks = (horizon + chunk - 1) / chunk;
  std::vector<std::vector<Hit>> per_chunk(chunks);

  auto run_chunk = [&](std::uint64_t c) {
    const std::uint64_t lo = 1 + c * chunk;
    const std::uint64_t hi = std::min<std::uint64_t>(horizon, lo + chunk - 1);
    for (std::uint64_t n = lo; n <= hi; ++n) {
      Hit h = delta(table, k, n);
      if (h.delta <= tolerance && h.m >= to_bigint(options.min_base)) per_chunk[c].push_back(std::move(h));
    }
  };

  const unsigned workers = std::max(1U, options.workers);
  if (workers == 1) {
    for (std::uint64_t c = 0; c < chunks; ++c) run_chunk(c);
  } else {
    std::atomic<std::uint64_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::uint64_t c = next++; c < chunks; c = next++) run_chunk(c);
      });
  }

  std::vector<Hit> hits;
  for (auto& part : per_chunk) std::move(part.begin(), part.end(), std::back_inserter(hits));
  return hits;
}

BigInt p2_family(const BigInt& m, unsigned k) {
  if (m < 1 || k < 2) throw std::domain_error("p2_family needs m >= 1 and k >= 2");
  const BigInt power = ipow(m, k);
  BigInt n = 2 * (power - 1);
  // p_2(n) = floor(n/2) + 1; small n are also checked against the DP.
  if (BigInt(n / 2 + 1) != power) throw CertificationError("p_2(2(m^k-1)) != m^k");
  if (n <= 1000000 && p_single(2, n.get_ui()) != power) throw CertificationError("DP disagrees with p_2(2(m^k-1)) = m^k");
  return n;
}

}  // namespace repulsion
