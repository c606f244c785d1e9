#include <gtest/gtest.h>

#include <set>

#include "quon/wick.hpp"
#include "test_support.hpp"

namespace quon {
namespace {

using testing::rng;
using testing::word_of;

TEST(ScalarProduct, DistinctLabelsSameOrder) {
  EXPECT_EQ(scalar_product(word_of({"k1", "k2"}), word_of({"k1", "k2"})), QPolynomial(1));
}

TEST(ScalarProduct, DistinctLabelsSwapped) {
  EXPECT_EQ(scalar_product(word_of({"k1", "k2"}), word_of({"k2", "k1"})), QPolynomial::q());
}

TEST(ScalarProduct, RepeatedLabel) {
  EXPECT_EQ(scalar_product(word_of({"k", "k"}), word_of({"k", "k"})), QPolynomial({1, 1}));
}

TEST(ScalarProduct, LengthMismatchIsZero) {
  EXPECT_TRUE(scalar_product(word_of({"a", "b"}), word_of({"a", "b", "c"})).is_zero());
  EXPECT_TRUE(oracle_scalar_product(word_of({"a", "b"}), word_of({"a", "b", "c"})).is_zero());
}

TEST(ScalarProduct, EmptyWordsAreTheVacuum) { EXPECT_EQ(scalar_product(OperatorWord{}, OperatorWord{}), QPolynomial(1)); }

TEST(ScalarProduct, TaggedLabelsCompareBothFields) {
  const OperatorWord left{{ModeLabel("p1", "1"), ModeLabel("p2", "1")}};
  const OperatorWord right{{ModeLabel("p2", "1"), ModeLabel("p1", "1")}};
  EXPECT_EQ(scalar_product(left, right), QPolynomial::q());
  EXPECT_TRUE(scalar_product(left, OperatorWord{{ModeLabel("1"), ModeLabel("1")}}).is_zero());
}

TEST(ScalarProduct, OracleAgreesOnExamples) {
  for (const auto& [l, r] : std::vector<std::pair<OperatorWord, OperatorWord>>{
           {word_of({"k1", "k2"}), word_of({"k1", "k2"})},
           {word_of({"k1", "k2"}), word_of({"k2", "k1"})},
           {word_of({"k", "k"}), word_of({"k", "k"})},
       })
    EXPECT_EQ(scalar_product(l, r), oracle_scalar_product(l, r));
}

TEST(ScalarProduct, RandomFiveLabelWordsMatchOracle) {
  for (int trial = 0; trial < 300; ++trial) {
    const OperatorWord l = testing::random_word(5, 3, rng());
    OperatorWord r = l;
    std::shuffle(r.labels.begin(), r.labels.end(), rng());
    EXPECT_EQ(scalar_product(l, r), oracle_scalar_product(l, r)) << to_string(l) << " vs " << to_string(r);
  }
}

TEST(QPermanent, SmallMatrices) {
  EXPECT_EQ(q_permanent(DeltaMatrix::from_rows({{1, 0}, {0, 1}})), QPolynomial(1));
  EXPECT_EQ(q_permanent(DeltaMatrix::from_rows({{1, 1}, {1, 1}})), QPolynomial({1, 1}));
  EXPECT_EQ(q_permanent(DeltaMatrix::from_rows({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}})), QPolynomial({1, 2, 2, 1}));
}

TEST(QPermanent, ContractErrors) {
  EXPECT_THROW(q_permanent(DeltaMatrix(2, 3)), ContractViolation);
  EXPECT_THROW(q_permanent(DeltaMatrix(17, 17)), BudgetExceeded);
  EXPECT_THROW(oracle_q_permanent(DeltaMatrix(10, 10)), BudgetExceeded);
  EXPECT_THROW(DeltaMatrix::from_rows({{1, 0}, {1}}), ContractViolation);
  EXPECT_THROW(DeltaMatrix::from_rows({{2}}), ContractViolation);
}

TEST(QPermanent, ZeroLinesShortCircuit) {
  EXPECT_TRUE(q_permanent(DeltaMatrix::from_rows({{1, 1}, {0, 0}})).is_zero());
  EXPECT_TRUE(q_permanent(DeltaMatrix::from_rows({{1, 0}, {1, 0}})).is_zero());
}

TEST(QPermanent, ExhaustiveUpToThree) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const std::size_t cells = n * n;
    for (std::uint32_t bits = 0; bits < (1u << cells); ++bits) {
      DeltaMatrix m(n, n);
      for (std::size_t c = 0; c < cells; ++c) m.set(c / n, c % n, (bits >> c) & 1u);
      ASSERT_EQ(q_permanent(m), oracle_q_permanent(m)) << "n=" << n << " bits=" << bits;
    }
  }
}

TEST(QPermanent, RandomUpToSeven) {
  for (std::size_t n = 4; n <= 7; ++n)
    for (int trial = 0; trial < 60; ++trial) {
      const DeltaMatrix m = testing::random_matrix(n, 0.6, rng());
      ASSERT_EQ(q_permanent(m), oracle_q_permanent(m));
    }
}

TEST(QPermanent, AllOnesIsTheQFactorial) {
  for (std::size_t n = 1; n <= 10; ++n) {
    DeltaMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m.set(i, j, true);
    EXPECT_EQ(q_permanent(m), testing::q_factorial(n)) << n;
  }
}

TEST(QPermanent, SixteenIsWithinBudget) {
  DeltaMatrix m(16, 16);
  for (std::size_t i = 0; i < 16; ++i)
    for (std::size_t j = 0; j < 16; ++j) m.set(i, j, true);
  const QPolynomial p = q_permanent(m);
  EXPECT_EQ(p.degree(), 120);
  EXPECT_EQ(p.eval(Rational(1)), Rational(20922789888000UL));
}

TEST(QPermanent, OracleIsIndependentOfWorkerCount) {
  for (int trial = 0; trial < 20; ++trial) {
    const DeltaMatrix m = testing::random_matrix(6, 0.7, rng());
    const QPolynomial one = oracle_q_permanent(m, 1);
    EXPECT_EQ(oracle_q_permanent(m, 3), one);
    EXPECT_EQ(oracle_q_permanent(m, 8), one);
  }
}

TEST(QPermanentByBlock, ClassesSumToTotal) {
  for (int trial = 0; trial < 200; ++trial) {
    const DeltaMatrix m = testing::random_matrix(6, 0.7, rng());
    EXPECT_EQ(q_permanent_by_block(m, 3).total(), q_permanent(m));
  }
}

TEST(QPermanentByBlock, BlockSwapOfAllOnes) {
  // Every matching sending rows {0,1} onto columns {2,3} crosses the 4 lines of
  // the other block once each.
  DeltaMatrix m(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) m.set(i, j, true);
  const auto split = q_permanent_by_block(m, 2);
  EXPECT_EQ(split.preserving, QPolynomial({1, 1}) * QPolynomial({1, 1}));
  EXPECT_EQ(split.swapping, QPolynomial::monomial(4) * split.preserving);
  EXPECT_EQ(split.mixed, testing::q_factorial(4) - split.preserving - split.swapping);
}

TEST(Specialization, DistinctLabelsGiveMonomials) {
  for (std::size_t n = 1; n <= 6; ++n) {
    OperatorWord base;
    for (std::size_t i = 0; i < n; ++i) base.labels.emplace_back("y" + std::to_string(i));
    for (const auto& p : enumerate_permutations(n)) {
      OperatorWord permuted;
      for (std::size_t i = 0; i < n; ++i) permuted.labels.push_back(base[p[i]]);
      ASSERT_EQ(scalar_product(base, permuted), QPolynomial::monomial(inversion_number(p)));
    }
  }
}

TEST(Specialization, EqualLabelsGiveTheQFactorial) {
  for (std::size_t n = 1; n <= 6; ++n) {
    OperatorWord w;
    w.labels.assign(n, ModeLabel("k"));
    EXPECT_EQ(scalar_product(w, w), testing::q_factorial(n));
    EXPECT_EQ(oracle_scalar_product(w, w), testing::q_factorial(n));
  }
}

TEST(Specialization, PauliExclusionAtTheFermiPoint) {
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    std::uniform_int_distribution<std::size_t> len(2, 6);
    const std::size_t n = len(rng());
    const OperatorWord l = testing::random_word(n, 3, rng());
    const std::set<ModeLabel> distinct(l.labels.begin(), l.labels.end());
    if (distinct.size() == n) continue;
    const OperatorWord r = testing::random_word(n, 3, rng());
    EXPECT_EQ(scalar_product(l, r).eval(Rational(-1)), 0) << to_string(l) << " vs " << to_string(r);
    EXPECT_EQ(scalar_product(r, l).eval(Rational(-1)), 0);
    ++checked;
  }
  EXPECT_GT(checked, 100);
}

TEST(Specialization, SquaredNormsArePositive) {
  std::uniform_real_distribution<double> qs(-1.0, 1.0);
  for (int trial = 0; trial < 300; ++trial) {
    std::uniform_int_distribution<std::size_t> len(1, 6);
    const OperatorWord w = testing::random_word(len(rng()), 3, rng());
    const QPolynomial norm = scalar_product(w, w);
    for (int k = 0; k < 5; ++k) EXPECT_GE(norm.eval(qs(rng())), 0.0);
    EXPECT_GE(norm.eval(-1.0), 0.0);
    EXPECT_GE(norm.eval(1.0), 1.0);
  }
}

TEST(WordText, ParseLabels) {
  const OperatorWord w = parse_word("k1,p:2");
  ASSERT_EQ(w.size(), 2u);
  EXPECT_EQ(w[0], ModeLabel("k1"));
  EXPECT_EQ(w[1], ModeLabel("p", "2"));
  EXPECT_EQ(to_string(w), "(k1,p:2)");
  EXPECT_THROW(parse_word("a,,b"), ParseError);
  EXPECT_THROW(parse_word("a,"), ParseError);
  EXPECT_THROW(parse_word(":x"), ParseError);
  EXPECT_THROW(parse_word("a:b:c"), ParseError);
}

TEST(MatrixText, Parse) {
  std::istringstream in("1\t0\n0\t1\n");
  EXPECT_EQ(q_permanent(parse_delta_matrix(in)), QPolynomial(1));
  std::istringstream bad("1\t2\n0\t1\n");
  EXPECT_THROW(parse_delta_matrix(bad), ParseError);
  std::istringstream ragged("1\t0\n1\n");
  EXPECT_THROW(parse_delta_matrix(ragged), ParseError);
}

}  // namespace
}  // namespace quon
