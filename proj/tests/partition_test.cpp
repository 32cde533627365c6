#include <gtest/gtest.h>

#include "ppdiamond/partition.hpp"
#include "test_oracles.hpp"

namespace ppd {
namespace {

using testing::brute_partition_count;
using testing::q;

const std::vector<std::vector<std::int64_t>> kBasket{{1}, {1, 1}, {1, 2}, {1, 3}, {2, 3}, {1, 2, 2, 3}, {2, 3, 4}, {1, 1, 4, 6}};

TEST(PartSequence, Validation) {
  EXPECT_THROW(PartSequence({}), std::invalid_argument);
  EXPECT_THROW(PartSequence({1, 0}), std::invalid_argument);
  EXPECT_THROW(PartSequence({2, 3}, 9), std::invalid_argument);
  EXPECT_EQ(PartSequence({2, 3}).common_multiple(), 6);
  EXPECT_EQ(PartSequence({2, 3}, 12).common_multiple(), 12);
  EXPECT_EQ(PartSequence({1, 2, 2, 3}).part_divisors(), (std::vector<std::int64_t>{1, 2, 3}));
}

TEST(PartitionDp, Examples) {
  const PartSequence a({1, 2, 2, 3});
  EXPECT_EQ(partition_count_dp(a, 0), 1);
  EXPECT_EQ(partition_count_dp(a, 6), 14);
  EXPECT_EQ(partition_count_dp(PartSequence({1}), 5), 1);
}

TEST(PartitionDp, MatchesBruteForce) {
  for (const auto& parts : kBasket) {
    const auto dp = partition_counts_dp(PartSequence(parts), 40);
    for (std::int64_t n = 0; n <= 40; ++n) EXPECT_EQ(dp[n], brute_partition_count(parts, n));
  }
}

TEST(ResidueMoments, Examples) {
  const auto s12 = residue_moments(PartSequence({1, 2}), 1);
  EXPECT_EQ(s12.row(0), (std::vector<Integer>{1, 0}));
  EXPECT_EQ(s12.row(1), (std::vector<Integer>{1, 1}));

  const auto s1 = residue_moments(PartSequence({1}), 0);
  EXPECT_EQ(s1.modulus(), 1);
  EXPECT_EQ(s1.at(0, 0), 1);

  EXPECT_EQ(residue_moments(PartSequence({1, 2, 2, 3}), 0).total(0), 108);
}

TEST(ResidueMoments, RejectsPmaxAboveR) {
  EXPECT_THROW(residue_moments(PartSequence({1, 2}), 3), std::invalid_argument);
}

TEST(ResidueMoments, MatchesBruteForceEnumeration) {
  for (const auto& parts : kBasket) {
    const PartSequence a(parts);
    const int pmax = a.size();
    const auto got = residue_moments(a, pmax);
    const auto want = testing::brute_box_moments(parts, a.common_multiple(), pmax);
    for (std::int64_t c = 0; c < a.common_multiple(); ++c) EXPECT_EQ(got.row(c), want[c]) << "residue " << c;
    EXPECT_EQ(got.total(0), a.box_size());
  }
}

TEST(ResidueMoments, WeightedAndPartialVariablesUseDirectPass) {
  // variable 1: values 0,2,4 with weights 1,2,1; variable 2: values 0,3 (partial cycle)
  const std::vector<MomentVariable> vars{{2, {1, 2, 1}}, MomentVariable::uniform(3, 2)};
  const auto s = residue_moments(vars, 6, 2);
  std::vector<std::vector<Integer>> want(6, std::vector<Integer>(3, 0));
  const long w[] = {1, 2, 1};
  for (long t = 0; t < 3; ++t)
    for (long u = 0; u < 2; ++u) {
      const long v = 2 * t + 3 * u;
      for (int p = 0; p <= 2; ++p) want[v % 6][p] += Integer(w[t]) * power(Integer(v), p);
    }
  for (int c = 0; c < 6; ++c) EXPECT_EQ(s.row(c), want[c]);
}

TEST(ResidueMoments, FoldRegroupsResidues) {
  const auto s = residue_moments(PartSequence({1, 2, 2, 3}), 2);
  const auto f = s.fold(2);
  for (int p = 0; p <= 2; ++p) {
    EXPECT_EQ(f.at(0, p), s.at(0, p) + s.at(2, p) + s.at(4, p));
    EXPECT_EQ(f.total(p), s.total(p));
  }
  EXPECT_THROW(s.fold(4), std::invalid_argument);
}

TEST(QuasiPolynomial, FromMomentsExamples) {
  const auto q12 = quasipoly_from_moments(PartSequence({1, 2}));
  EXPECT_EQ(q12.branch(0), (std::vector<Rational>{q(1), q(1, 2)}));
  EXPECT_EQ(q12.branch(1), (std::vector<Rational>{q(1, 2), q(1, 2)}));

  const auto q1 = quasipoly_from_moments(PartSequence({1}));
  EXPECT_EQ(q1.branch(0), (std::vector<Rational>{q(1)}));

  EXPECT_EQ(quasipoly_from_moments(PartSequence({1, 2, 2, 3})).count_at(6), 14);
}

TEST(QuasiPolynomial, MatchesInterpolatedBranches) {
  for (const auto& parts : kBasket) {
    const PartSequence a(parts);
    const auto qp = quasipoly_from_moments(a);
    const auto fitted = testing::fit_quasipolynomial(
        [&](std::int64_t n) { return brute_partition_count(parts, n); }, a.common_multiple(), a.size() - 1);
    EXPECT_EQ(qp.coefficients(), fitted);
  }
}

TEST(QuasiPolynomial, EqualsDpOverThreePeriods) {
  for (const auto& parts : kBasket) {
    const PartSequence a(parts);
    const auto qp = quasipoly_from_moments(a);
    const auto dp = partition_counts_dp(a, 3 * a.common_multiple());
    for (std::int64_t n = 0; n <= 3 * a.common_multiple(); ++n) EXPECT_EQ(qp(n), Rational(dp[n])) << n;
  }
}

TEST(QuasiPolynomial, DegreeAndLeadingCoefficient) {
  for (const auto& parts : kBasket) {
    const PartSequence a(parts);
    const auto qp = quasipoly_from_moments(a);
    const int r = a.size();
    EXPECT_EQ(qp.degree(), r - 1);
    EXPECT_EQ(qp.effective_degree(), r - 1);
    const Rational lead = Rational(1) / Rational(factorial(r - 1) * a.product());
    for (const auto& row : qp.coefficients()) EXPECT_EQ(row.back(), lead);
  }
}

TEST(QuasiPolynomial, IndependentOfCommonMultiple) {
  for (const auto& parts : kBasket) {
    const PartSequence a(parts);
    const PartSequence doubled(parts, 2 * a.common_multiple());
    const auto q1 = quasipoly_from_moments(a);
    const auto q2 = quasipoly_from_moments(doubled);
    for (std::int64_t n = 0; n <= 4 * a.common_multiple(); ++n) EXPECT_EQ(q1(n), q2(n));
    EXPECT_EQ(polynomial_part_product(a), polynomial_part_product(doubled));
  }
}

TEST(PartitionExplicit, Examples) {
  const PartSequence a({1, 2, 2, 3});
  EXPECT_EQ(partition_count_explicit(a, 6), 14);
  EXPECT_EQ(partition_count_explicit(a, 0), 1);
  EXPECT_EQ(partition_count_explicit(PartSequence({1, 2}), 7), 4);
}

TEST(PartitionExplicit, AgreesWithDp) {
  for (const auto& parts : kBasket) {
    const PartSequence a(parts);
    const auto dp = partition_counts_dp(a, 2 * a.common_multiple());
    for (std::int64_t n = 0; n <= 2 * a.common_multiple(); ++n) EXPECT_EQ(partition_count_explicit(a, n), dp[n]);
  }
}

TEST(PartitionExplicit, RefusesOverBudget) {
  const PartSequence k2({1, 2, 3, 2, 5, 6, 7});
  EXPECT_THROW(partition_count_explicit(k2, 10), BudgetExceeded);
  EXPECT_THROW(partition_count_explicit(PartSequence({1, 2, 2, 3}), 6, 100), BudgetExceeded);
}

TEST(PolynomialPart, ProductExamples) {
  EXPECT_EQ(polynomial_part_product(PartSequence({1})), Polynomial({q(1)}));
  EXPECT_EQ(polynomial_part_product(PartSequence({1, 2})), Polynomial({q(3, 4), q(1, 2)}));
  EXPECT_EQ(polynomial_part_product(PartSequence({1, 2, 2, 3})).leading_coefficient(), q(1, 72));
}

TEST(PolynomialPart, BernoulliExamples) {
  EXPECT_EQ(polynomial_part_bernoulli(PartSequence({1})), Polynomial({q(1)}));
  EXPECT_EQ(polynomial_part_bernoulli(PartSequence({1, 1})), Polynomial({q(1), q(1)}));
}

TEST(PolynomialPart, BothRoutesEqualResidueAverage) {
  for (const auto& parts : kBasket) {
    const PartSequence a(parts);
    const auto product = polynomial_part_product(a);
    EXPECT_EQ(product, polynomial_part_bernoulli(a));
    const auto fitted = testing::fit_quasipolynomial(
        [&](std::int64_t n) { return brute_partition_count(parts, n); }, a.common_multiple(), a.size() - 1);
    EXPECT_EQ(product, Polynomial(testing::residue_average(fitted)));
  }
}

TEST(SylvesterWave, Examples) {
  const PartSequence a12({1, 2});
  EXPECT_EQ(sylvester_wave(a12, 1).as_polynomial(), Polynomial({q(3, 4), q(1, 2)}));
  const auto w2 = sylvester_wave(a12, 2);
  for (std::int64_t n = 0; n < 8; ++n) EXPECT_EQ(w2(n), n % 2 ? q(-1, 4) : q(1, 4));

  const auto w3 = sylvester_wave(PartSequence({1, 3}), 3);
  const Rational want[] = {q(1, 3), q(0), q(-1, 3)};
  for (std::int64_t n = 0; n < 9; ++n) EXPECT_EQ(w3(n), want[n % 3]) << n;
}

TEST(SylvesterWave, RejectsNonDivisor) {
  EXPECT_THROW(sylvester_wave(PartSequence({1, 2}), 3), std::invalid_argument);
  EXPECT_THROW(sylvester_wave(PartSequence({1, 2}), 0), std::invalid_argument);
}

TEST(SylvesterWave, PrincipalWaveIsPolynomialPart) {
  for (const auto& parts : kBasket) {
    const PartSequence a(parts);
    EXPECT_EQ(sylvester_wave(a, 1).as_polynomial(), polynomial_part_product(a));
  }
}

TEST(SylvesterWave, AsPrintedFormulaGivesConstantQuarter) {
  const auto printed = sylvester_wave(PartSequence({1, 2}), 2, WaveFormula::as_printed);
  for (std::int64_t n = 0; n < 6; ++n) EXPECT_EQ(printed(n), q(1, 4));
  const WaveSet broken{PartSequence({1, 2}), {{1, sylvester_wave(PartSequence({1, 2}), 1)}, {2, printed}}};
  EXPECT_NE(broken(1), Rational(partition_count_dp(PartSequence({1, 2}), 1)));
}

TEST(SylvesterWave, AsPrintedFormulaIsNotRationalForOrderThree) {
  EXPECT_THROW(sylvester_wave(PartSequence({1, 3}), 3, WaveFormula::as_printed), InvariantViolation);
}

TEST(WaveSet, Examples) {
  const auto ws = wave_set(PartSequence({1, 2, 2, 3}));
  std::vector<std::int64_t> keys;
  for (const auto& [j, w] : ws.waves) keys.push_back(j);
  EXPECT_EQ(keys, (std::vector<std::int64_t>{1, 2, 3}));
  EXPECT_EQ(ws(6), q(14));

  const auto single = wave_set(PartSequence({1}));
  ASSERT_EQ(single.waves.size(), 1u);
  EXPECT_EQ(single.waves.at(1).as_polynomial(), Polynomial({q(1)}));
}

TEST(WaveSet, SumEqualsDpAndWavesHaveTheirPeriod) {
  for (const auto& parts : kBasket) {
    const PartSequence a(parts);
    const auto ws = wave_set(a);
    const auto dp = partition_counts_dp(a, 3 * a.common_multiple());
    for (std::int64_t n = 0; n <= 3 * a.common_multiple(); ++n) EXPECT_EQ(ws(n), Rational(dp[n])) << n;
    for (const auto& [j, w] : ws.waves) EXPECT_EQ(w.period(), j);
  }
}

TEST(WaveSet, NonPrincipalWavesAverageToZero) {
  const auto ws = wave_set(PartSequence({1, 1, 4, 6}));
  for (const auto& [j, w] : ws.waves) {
    if (j == 1) continue;
    const auto avg = testing::residue_average(w.coefficients());
    for (const auto& c : avg) EXPECT_EQ(c, 0) << "j=" << j;
  }
}

}  // namespace
}  // namespace ppd
