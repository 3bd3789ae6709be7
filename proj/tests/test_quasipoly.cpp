#include "repulsion/quasipoly.hpp"

#include <gtest/gtest.h>

using namespace repulsion;

TEST(Lcm, Examples) {
  EXPECT_EQ(lcm_upto(3), 6U);
  EXPECT_EQ(lcm_upto(1), 1U);
  EXPECT_EQ(lcm_upto(4), 12U);
  EXPECT_EQ(lcm_upto(8), 840U);
  EXPECT_THROW(lcm_upto(0), std::domain_error);
}

TEST(LeadingCoefficient, Formula) {
  EXPECT_EQ(leading_coefficient_formula(2), 1);
  EXPECT_EQ(leading_coefficient_formula(3), 3);
  EXPECT_EQ(leading_coefficient_formula(4), 12);
  EXPECT_EQ(leading_coefficient_formula(5), 4500);  // 60^4 / (120 * 24)
  EXPECT_EQ(leading_coefficient_formula(6), 9000);  // 60^5 / (720 * 120)
}

TEST(Interpolate, RecoversPolynomial) {
  const Poly f{make_rational(-3, 7), 2, 0, make_rational(5, 2)};
  std::vector<Rational> xs{-2, 0, 1, 5}, ys;
  for (const auto& x : xs) ys.push_back(f(x));
  EXPECT_EQ(interpolate(xs, ys), f);
  std::vector<Rational> dup{1, 1};
  EXPECT_THROW(interpolate(dup, dup), std::invalid_argument);
}

TEST(Extract, B3MatchesTable) {
  const Quasipoly q = extract(3);
  EXPECT_EQ(q.period, 6U);
  EXPECT_EQ(q.alpha, 3);
  const std::vector<Poly> expected{Poly{1, 3, 3}, Poly{1, 4, 3}, Poly{2, 5, 3},
                                   Poly{3, 6, 3}, Poly{4, 7, 3}, Poly{5, 8, 3}};
  EXPECT_EQ(q.components, expected);
}

TEST(Extract, B2IsFloorFormula) {
  const Quasipoly q = extract(2);
  ASSERT_EQ(q.components.size(), 2U);
  EXPECT_EQ(q.components[0], (Poly{1, 1}));
  EXPECT_EQ(q.components[1], (Poly{1, 1}));
}

TEST(Extract, B4CubicsAgainstEnumeration) {
  const Quasipoly q = extract(4, 3);
  ASSERT_EQ(q.components.size(), 12U);
  for (std::uint64_t r = 0; r < 12; ++r) {
    const Poly& c = q.components[r];
    EXPECT_EQ(c.nonzero_degree(), 3U);
    EXPECT_EQ(c.leading_coefficient(), 12);
    for (unsigned n = 0; 12 * n + r <= 60; ++n)
      EXPECT_EQ(c(n), Rational(p_brute(4, static_cast<unsigned>(12 * n + r))));
  }
}

TEST(Extract, RejectsOutOfRangeBounds) {
  EXPECT_THROW(extract(1), std::domain_error);
  EXPECT_THROW(extract(9), std::domain_error);
}

TEST(Extract, ParallelMatchesSerial) { EXPECT_EQ(extract(5, 1).components, extract(5, 4).components); }

TEST(QpEval, Examples) {
  EXPECT_EQ(qp_eval(extract(3), 42), 169);
  for (unsigned b = 2; b <= 6; ++b) EXPECT_EQ(qp_eval(extract(b), 0), 1);
  EXPECT_EQ(qp_eval(extract(5), 1000), p_single(5, 1000));
}

TEST(QpEval, NonIntegralValueIsReported) {
  Quasipoly broken = extract(2);
  broken.components[1] = Poly{make_rational(1, 2), 1};
  EXPECT_THROW(qp_eval(broken, 3), CertificationError);
}

TEST(QpEval, MatchesDpEverywhere) {
  for (unsigned b = 2; b <= 6; ++b) {
    const Quasipoly q = extract(b);
    const auto table = PartitionTable::build(b, 3000);
    for (std::uint64_t n = 0; n <= 3000; ++n) ASSERT_EQ(qp_eval(q, n), table[n]) << b << "," << n;
  }
}

TEST(Differences, Examples) {
  const auto d3 = difference_degree_check(extract(3));
  EXPECT_EQ(d3[0].difference, (Poly{6, 6}));
  const auto d2 = difference_degree_check(extract(2));
  for (const auto& d : d2) EXPECT_EQ(d.difference, Poly::constant(1));
  const auto d4 = difference_degree_check(extract(4));
  ASSERT_EQ(d4.size(), 12U);
  for (const auto& d : d4) {
    EXPECT_EQ(d.difference.nonzero_degree(), 2U);
    EXPECT_EQ(d.difference.leading_coefficient(), 36);
  }
}

TEST(Differences, OffendingResidueIsNamed) {
  Quasipoly broken = extract(3);
  broken.components[4] = Poly{4, 7, 2};
  try {
    difference_degree_check(broken);
    FAIL() << "expected a certification error";
  } catch (const QuasipolyCertificationError& e) {
    EXPECT_EQ(e.residue(), 4U);
  }
}

TEST(Quasipoly, ComponentInvariants) {
  for (unsigned b = 2; b <= 6; ++b) {
    const Quasipoly q = extract(b);
    for (std::uint64_t r = 0; r < q.period; ++r) {
      const Poly& c = q.components[r];
      EXPECT_EQ(c.nonzero_degree(), b - 1);
      EXPECT_EQ(c.leading_coefficient(), leading_coefficient_formula(b));
      for (unsigned n = 0; n <= 40; ++n) EXPECT_GE(c(n), 1);
    }
  }
}

TEST(Quasipoly, ReinterpolationFromAnyWindowIsIdentical) {
  for (unsigned b = 2; b <= 5; ++b) {
    const Quasipoly q = extract(b);
    const auto table = shared_table(b, q.period * 40);
    for (std::uint64_t r = 0; r < q.period; r += 1 + q.period / 7) {
      for (unsigned s : {1U, 5U, 17U, 30U}) {
        std::vector<Rational> xs, ys;
        for (unsigned i = 0; i < b; ++i) {
          xs.emplace_back(s + i);
          ys.emplace_back((*table)[q.period * (s + i) + r]);
        }
        EXPECT_EQ(interpolate(xs, ys), q.components[r]) << "B=" << b << " r=" << r << " s=" << s;
      }
    }
  }
}

TEST(Quasipoly, CertificationErrorCarriesLocation) {
  QuasipolyCertificationError e(3, 17, "mismatch");
  EXPECT_EQ(e.residue(), 3U);
  EXPECT_EQ(e.index(), 17U);
  EXPECT_NE(std::string(e.what()).find("residue 3"), std::string::npos);
}
