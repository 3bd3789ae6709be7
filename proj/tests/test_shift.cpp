#include "repulsion/partition.hpp"
#include "repulsion/quasipoly.hpp"
#include "repulsion/repulsion.hpp"
#include "repulsion/shift.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace repulsion;

namespace {

Rational q(long num, long den = 1) { return make_rational(num, den); }

}  // namespace

TEST(TheoremHypotheses, Examples) {
  EXPECT_FALSE(theorem_hypotheses(4, 3));
  EXPECT_TRUE(theorem_hypotheses(5, 3));
  EXPECT_TRUE(theorem_hypotheses(4, 4));
  EXPECT_FALSE(theorem_hypotheses(3, 3));
  EXPECT_FALSE(theorem_hypotheses(6, 2));
  EXPECT_FALSE(theorem_hypotheses(7, 3));
}

TEST(ExceptionalShifts, Examples) {
  const auto a = exceptional_shifts(Poly{1, 3, 3}, 2, 1);
  ASSERT_EQ(a.size(), 1U);
  EXPECT_EQ(a[0].t, q(1, 4));
  EXPECT_EQ(a[0].scale, 3);
  EXPECT_EQ(a[0].root, (Poly{q(1, 2), 1}));

  EXPECT_TRUE(exceptional_shifts(Poly{1, 3, 3}, 3, 10).empty());

  const auto c = exceptional_shifts(Poly{0, 0, 0, 1}, 3, 1);
  ASSERT_EQ(c.size(), 1U);
  EXPECT_EQ(c[0].t, 0);
  EXPECT_EQ(c[0].scale, 1);
  EXPECT_EQ(c[0].root, Poly::x());

  // critical value 1/4 lies outside |t| <= 0
  EXPECT_TRUE(exceptional_shifts(Poly{1, 3, 3}, 2, 0).empty());
  EXPECT_THROW(exceptional_shifts(Poly{1, 1}, 2, 1), std::domain_error);
}

TEST(ExceptionalShifts, BoundAndReexpansion) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> num(-4, 4), den(1, 2), deg(2, 5), kd(2, 5);
  for (int i = 0; i < 40; ++i) {
    std::vector<Rational> c(deg(rng) + 1);
    for (auto& v : c) v = q(num(rng), den(rng));
    if (sgn(c.back()) == 0) c.back() = 1;
    const Poly Q(c);
    const unsigned k = kd(rng);
    const auto shifts = exceptional_shifts(Q, k, 50);
    EXPECT_LE(shifts.size(), Q.nonzero_degree() - 1);
    for (const auto& s : shifts) EXPECT_EQ(s.scale * pow(s.root, k) + s.t, Q);
  }
  // 2 (x^2 - 1)^2 + 3 has critical values 3 (double, at +-1) and 5 (at 0); only 3 is a power shift.
  const Poly Q = Rational(2) * pow(Poly{-1, 0, 1}, 2) + q(3);
  const auto s = exceptional_shifts(Q, 2, 10);
  ASSERT_EQ(s.size(), 1U);
  EXPECT_EQ(s[0].t, 3);
  EXPECT_EQ(s[0].root, (Poly{-1, 0, 1}));
}

TEST(Reduce, Examples) {
  const auto a = reduce(Poly{0, 1, q(3, 2)}, 3);
  EXPECT_EQ(a.M, 2);
  EXPECT_EQ(a.Qe, (Poly{0, 2, 3}));
  EXPECT_EQ(a.u, 1);
  EXPECT_EQ(a.b0, 2);
  EXPECT_TRUE(a.primitive);

  const auto b = reduce(Poly{1, 3, 3}, 2);
  EXPECT_EQ(b.M, 1);
  EXPECT_EQ(b.u, 1);
  EXPECT_EQ(b.b0, 1);

  const auto c = reduce(Poly{1, 0, q(1, 8)}, 3);
  EXPECT_EQ(c.M, 8);
  EXPECT_EQ(c.u, 2);
  EXPECT_EQ(c.b0, 1);
  EXPECT_EQ(c.Qe, (Poly{8, 0, 1}));

  const auto d = reduce(Poly{0, 0, q(-3, 2)}, 2);
  EXPECT_EQ(d.sign, -1);
  EXPECT_EQ(d.Qe, (Poly{0, 0, 3}));
  EXPECT_EQ(d.M, 2);

  const auto e = reduce(Poly{4, 0, 2}, 2);
  EXPECT_FALSE(e.primitive);

  // 72 = 2^3 * 3^2 with k = 2: u = 6, b0 = 2
  const auto f = reduce(Poly{1, 0, q(1, 72)}, 2);
  EXPECT_EQ(f.u, 6);
  EXPECT_EQ(f.b0, 2);
  EXPECT_EQ(f.M, f.u * f.u * f.b0);
}

TEST(ClassifyShift, Examples) {
  const ShiftClass a = classify_shift(Poly{0, 0, 0, 1}, 0, 3);
  ASSERT_TRUE(std::holds_alternative<PowerShift>(a));
  EXPECT_EQ(std::get<PowerShift>(a).scale, 1);
  EXPECT_EQ(std::get<PowerShift>(a).root, Poly::x());

  EXPECT_TRUE(std::holds_alternative<PellConic>(classify_shift(Poly{1, 3, 3}, 0, 2)));

  const Quasipoly b5 = extract(5);
  const Poly& q0 = b5.components[0];
  const ShiftClass c = classify_shift(q0, 0, 3);
  ASSERT_TRUE(std::holds_alternative<GenusAtLeastOne>(c));
  EXPECT_EQ(std::get<GenusAtLeastOne>(c).distinct_roots, 4U);
  const Poly Qe = reduce(q0, 3).Qe;
  EXPECT_EQ(gcd(Qe, derivative(Qe)).nonzero_degree(), 0U);
}

TEST(ClassifyShift, SingleAndTwoRootCases) {
  // (x-1)^3 with k=2: one root, gcd(2,3)=1
  auto a = classify_shift(pow(Poly{-1, 1}, 3), 0, 2);
  ASSERT_TRUE(std::holds_alternative<SingleRoot>(a));
  EXPECT_EQ(std::get<SingleRoot>(a).degree, 3U);
  EXPECT_TRUE(std::get<SingleRoot>(a).exponents_coprime);
  EXPECT_FALSE(std::get<SingleRoot>(a).k_divides_degree);
  EXPECT_EQ(std::get<SingleRoot>(a).root, 1);

  // (x-1)^4 with k=6: gcd 2
  auto b = classify_shift(pow(Poly{-1, 1}, 4), 0, 6);
  ASSERT_TRUE(std::holds_alternative<SingleRoot>(b));
  EXPECT_FALSE(std::get<SingleRoot>(b).exponents_coprime);

  // (2x-1)^3 + 5 shifted by 5: root 1/2 is not integral
  auto c = classify_shift(pow(Poly{-1, 2}, 3) + q(5), 5, 2);
  ASSERT_TRUE(std::holds_alternative<SingleRoot>(c));
  EXPECT_EQ(std::get<SingleRoot>(c).root, q(1, 2));

  // (x-1)^4 with k=2 is a power shift, not a single-root class
  EXPECT_TRUE(std::holds_alternative<PowerShift>(classify_shift(pow(Poly{-1, 1}, 4), 0, 2)));

  EXPECT_TRUE(std::holds_alternative<TwoRoots>(classify_shift(Poly{0, 0, -1, 1}, 0, 3)));
  EXPECT_EQ(class_name(classify_shift(Poly{0, 0, -1, 1}, 0, 3)), "TwoRoots");
}

TEST(ClassifyShift, DistinctIntegerRootsGiveGenusClass) {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> root(-15, 15), deg(3, 5);
  for (int i = 0; i < 50; ++i) {
    const int d = deg(rng);
    std::set<int> roots;
    while (static_cast<int>(roots.size()) < d) roots.insert(root(rng));
    Poly Q = Poly::constant(1);
    for (int r : roots) Q *= Poly{-r, 1};
    const ShiftClass c = classify_shift(Q, 0, 3);
    ASSERT_TRUE(std::holds_alternative<GenusAtLeastOne>(c)) << Q.to_string();
    EXPECT_EQ(std::get<GenusAtLeastOne>(c).distinct_roots, static_cast<std::size_t>(d));
  }
}

TEST(ClassifyShift, ClassesAreExclusive) {
  for (long t = -3; t <= 3; ++t)
    for (unsigned k = 2; k <= 4; ++k) {
      const Poly Q = pow(Poly{-1, 1}, 2) * Poly{2, 1};
      const ShiftClass c = classify_shift(Q, t, k);
      EXPECT_EQ(c.index(), classify_shift(Q, t, k).index());
      const bool power = poly_kth_root(Q - q(t), k).has_value();
      EXPECT_EQ(power, std::holds_alternative<PowerShift>(c));
    }
}

TEST(ClassifyProgression, B5K3HasNoPowerShifts) {
  const auto rep = classify_progression(5, 3, 2);
  EXPECT_EQ(rep.period, 60U);
  EXPECT_EQ(rep.entries.size(), 300U);
  EXPECT_EQ(rep.power_shifts, 0U);
  EXPECT_TRUE(rep.hypotheses);
  const Quasipoly q = extract(5);
  for (std::uint64_t r = 0; r < q.period; ++r) EXPECT_TRUE(exceptional_shifts(q.components[r], 3, 2).empty()) << r;
}

TEST(ClassifyProgression, B3Residue3IsPowerShift) {
  const auto rep = classify_progression(3, 2, 0, 3);
  ASSERT_EQ(rep.entries.size(), 1U);
  const auto& e = rep.entries[0];
  EXPECT_EQ(e.t, 0);
  ASSERT_TRUE(std::holds_alternative<PowerShift>(e.cls));
  const auto& ps = std::get<PowerShift>(e.cls);
  EXPECT_EQ(ps.scale, 3);
  EXPECT_EQ(ps.root, (Poly{1, 1}));
  EXPECT_EQ(Rational(3) * pow(ps.root, 2), (Poly{3, 6, 3}));
  EXPECT_FALSE(rep.hypotheses);
}

TEST(ClassifyProgression, B4K4UsesRootCountClasses) {
  const auto rep = classify_progression(4, 4, 0, std::nullopt, 3);
  EXPECT_EQ(rep.entries.size(), 12U);
  for (const auto& e : rep.entries) {
    EXPECT_TRUE(std::holds_alternative<SingleRoot>(e.cls) || std::holds_alternative<TwoRoots>(e.cls) ||
                std::holds_alternative<GenusAtLeastOne>(e.cls));
  }
  EXPECT_TRUE(rep.hypotheses);
  EXPECT_THROW(classify_progression(4, 4, 0, 12), std::domain_error);
}

TEST(ClassifyProgression, DeterministicAcrossWorkers) {
  const auto a = classify_progression(6, 4, 1, std::nullopt, 1);
  const auto b = classify_progression(6, 4, 1, std::nullopt, 4);
  ASSERT_EQ(a.entries.size(), b.entries.size());
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    EXPECT_EQ(a.entries[i].residue, b.entries[i].residue);
    EXPECT_EQ(a.entries[i].t, b.entries[i].t);
    EXPECT_EQ(a.entries[i].cls.index(), b.entries[i].cls.index());
  }
  EXPECT_EQ(a.counts, b.counts);
}

TEST(BoundedPoints, Examples) {
  const auto a = bounded_points(1, Poly{0, 0, 0, 1}, 3, 5);
  ASSERT_EQ(a.size(), 11U);
  for (const auto& p : a) EXPECT_EQ(p.X, p.Y);

  const auto b = bounded_points(1, Poly{1, 3, 3}, 2, 200);
  std::vector<long> nonneg;
  for (const auto& p : b)
    if (p.X >= 0) nonneg.push_back(p.X.get_si());
  EXPECT_EQ(nonneg, (std::vector<long>{0, 7, 104}));

  const auto c = bounded_points(2, Poly{0, 0, 2}, 2, 3);
  ASSERT_EQ(c.size(), 7U);
  for (const auto& p : c) EXPECT_EQ(p.Y, abs(p.X));

  EXPECT_THROW(bounded_points(1, Poly{q(1, 2), 1}, 2, 3), std::domain_error);
  EXPECT_THROW(bounded_points(0, Poly{0, 1}, 2, 3), std::domain_error);
}

TEST(BoundedPoints, OutputSatisfiesEquation) {
  const Poly f{-7, 0, 3, 1};
  for (unsigned k = 2; k <= 4; ++k)
    for (long b0 : {1L, 2L, 3L})
      for (const auto& p : bounded_points(b0, f, k, 300)) EXPECT_EQ(BigInt(b0) * ipow(p.Y, k), f(Rational(p.X)));
}

TEST(BoundedPoints, AgreesWithSquareScanOnResidueZero) {
  const auto table = PartitionTable::build(3, 6000);
  const auto pts = bounded_points(1, Poly{1, 3, 3}, 2, 1000);
  std::set<std::pair<long, long>> curve;
  for (const auto& p : pts) curve.emplace(p.X.get_si(), p.Y.get_si());
  for (const auto& h : scan(table, 2, 6000, 0)) {
    if (h.n % 6 != 0) continue;
    EXPECT_TRUE(curve.contains({static_cast<long>(h.n / 6), h.m.get_si()})) << h.n;
  }
}
