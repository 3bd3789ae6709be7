#include "repulsion/pell.hpp"

#include "repulsion/partition.hpp"

#include <string>

namespace repulsion::pell {

std::pair<BigInt, BigInt> unit_apply(const BigInt& x, const BigInt& m) {
  return {kUnitX * x + kDiscriminant * kUnitM * m, kUnitM * x + kUnitX * m};
}

std::pair<BigInt, BigInt> find_seed(long norm, long offset, const BigInt& bound) {
  if (offset < 0) throw std::domain_error("find_seed: negative offset");
  for (BigInt x = offset; x <= bound; x += 6) {
    BigInt rhs = x * x - norm;
    if (sgn(rhs) < 0 || !mpz_divisible_ui_p(rhs.get_mpz_t(), kDiscriminant)) continue;
    BigInt m;
    if (is_kth_power(BigInt(rhs / kDiscriminant), 2, &m)) return {x, m};
  }
  throw std::runtime_error("find_seed: no solution of x^2 - 12m^2 = " + std::to_string(norm) + " with x = " +
                           std::to_string(offset) + " mod 6 up to " + bound.get_str());
}

Family family_for(unsigned residue) {
  long norm = 0, offset = 0;
  switch (residue) {
    case 0: norm = -3, offset = 3; break;
    case 1: norm = 4, offset = 4; break;
    case 4: norm = 1, offset = 7; break;
    case 5: norm = 4, offset = 8; break;
    default: throw std::domain_error("no Pell family for residue " + std::to_string(residue));
  }
  auto [x0, m0] = find_seed(norm, offset, 1000);
  return Family{residue, norm, offset, x0, m0};
}

std::vector<Solution> family(unsigned residue, std::size_t count) {
  const Family fam = family_for(residue);
  std::vector<Solution> out;
  out.reserve(count);
  BigInt x = fam.x0, m = fam.m0;
  while (out.size() < count) {
    if (x * x - kDiscriminant * m * m != fam.norm) throw CertificationError("Pell orbit left its norm class");
    BigInt shifted = x - fam.offset;
    if (!mpz_divisible_ui_p(shifted.get_mpz_t(), 6)) throw CertificationError("Pell orbit left its residue class");
    BigInt t = shifted / 6;
    if (sgn(t) >= 0) {
      BigInt n = 6 * t + residue;
      if (n <= kVerifyHorizon && p_single(3, n.get_ui()) != m * m)
        throw CertificationError("p_3(" + n.get_str() + ") != " + m.get_str() + "^2");
      out.push_back({x, m, std::move(t), std::move(n)});
    }
    std::tie(x, m) = unit_apply(x, m);
  }
  return out;
}

}  // namespace repulsion::pell
