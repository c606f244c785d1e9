#include <gtest/gtest.h>

#include "quon/composite.hpp"
#include "test_support.hpp"

namespace quon {
namespace {

using testing::rng;

CompositeSpec spec_of(std::size_t n, RepKind kind) { return CompositeSpec::make(preset_rep(n, kind)); }

/// The 15 coincidence patterns of (t1, t2, u1, u2) as restricted growth strings.
std::vector<std::pair<TagPair, TagPair>> all_tag_patterns() {
  std::vector<std::pair<TagPair, TagPair>> out;
  for (int a = 0; a < 1; ++a)
    for (int b = 0; b <= a + 1; ++b)
      for (int c = 0; c <= std::max(a, b) + 1; ++c)
        for (int d = 0; d <= std::max({a, b, c}) + 1; ++d) {
          auto tag = [](int v) { return "x" + std::to_string(v); };
          out.push_back({{tag(a), tag(b)}, {tag(c), tag(d)}});
        }
  return out;
}

TEST(CompositeWord, Examples) {
  const auto one = composite_word(spec_of(1, RepKind::symmetric), "p");
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one.terms().begin()->first, OperatorWord{{ModeLabel("p", "1")}});

  const auto anti = composite_word(spec_of(2, RepKind::antisymmetric), "p1");
  ASSERT_EQ(anti.size(), 2u);
  EXPECT_EQ(anti.at(OperatorWord{{ModeLabel("p1", "1"), ModeLabel("p1", "2")}}), 1);
  EXPECT_EQ(anti.at(OperatorWord{{ModeLabel("p1", "2"), ModeLabel("p1", "1")}}), -1);

  const auto sym = composite_word(spec_of(3, RepKind::symmetric), "p");
  ASSERT_EQ(sym.size(), 6u);
  for (const auto& [w, c] : sym.terms()) EXPECT_EQ(c, 1);
}

TEST(CompositeSpec, Validation) {
  CompositeSpec spec = spec_of(2, RepKind::symmetric);
  spec.internal_labels = {"a", "a"};
  EXPECT_THROW(spec.validate(), ContractViolation);
  spec.internal_labels = {"a"};
  EXPECT_THROW(spec.validate(), ContractViolation);
}

TEST(TwoComposite, SingleQuonReducesToTwoParticleLaw) {
  const auto spec = spec_of(1, RepKind::symmetric);
  const auto same = two_composite_scalar(spec, {"t1", "t2"}, {"t1", "t2"});
  EXPECT_EQ(same.direct, QPolynomial(1));
  EXPECT_TRUE(same.exchange.is_zero());
  EXPECT_TRUE(same.cross.is_zero());
  const auto swapped = two_composite_scalar(spec, {"t1", "t2"}, {"t2", "t1"});
  EXPECT_TRUE(swapped.direct.is_zero());
  EXPECT_EQ(swapped.exchange, QPolynomial::q());
  EXPECT_TRUE(swapped.cross.is_zero());
}

TEST(TwoComposite, TwoQuonAntisymmetricExchangeCarriesQ4) {
  const auto spec = spec_of(2, RepKind::antisymmetric);
  const auto same = two_composite_scalar(spec, {"t1", "t2"}, {"t1", "t2"});
  const auto swapped = two_composite_scalar(spec, {"t1", "t2"}, {"t2", "t1"});
  EXPECT_EQ(same.direct, QPolynomial({2, -2}) * QPolynomial({2, -2}));
  EXPECT_EQ(swapped.exchange, QPolynomial::monomial(4) * same.direct);
  EXPECT_EQ(oracle_two_composite(spec, {"t1", "t2"}, {"t2", "t1"}), swapped);
}

TEST(TwoComposite, TagPrecondition) {
  const auto spec = spec_of(2, RepKind::symmetric);
  EXPECT_THROW(two_composite_scalar(spec, {"t", "t"}, {"t1", "t2"}), ContractViolation);
  EXPECT_THROW(two_composite_scalar(spec, {"t1", "t2"}, {"u", "u"}), ContractViolation);
}

TEST(TwoComposite, DecompositionAndOracleAgreementOverAllTagPatterns) {
  for (std::size_t n = 1; n <= 3; ++n)
    for (RepKind kind : {RepKind::symmetric, RepKind::antisymmetric}) {
      const auto spec = spec_of(n, kind);
      for (const auto& [left, right] : all_tag_patterns()) {
        const auto fast = decompose_two_composite(spec, left, right);
        const auto brute = oracle_two_composite(spec, left, right);
        ASSERT_EQ(fast, brute) << "n=" << n << " " << left.first << left.second << "|" << right.first << right.second;
        const StateVector lhs = product_state(composite_word(spec, left.first), composite_word(spec, left.second));
        const StateVector rhs = product_state(composite_word(spec, right.first), composite_word(spec, right.second));
        ASSERT_EQ(fast.total(), scalar_product(lhs, rhs));
      }
    }
  EXPECT_EQ(all_tag_patterns().size(), 15u);
}

TEST(TwoComposite, DecompositionAtFourConstituents) {
  const auto spec = spec_of(4, RepKind::antisymmetric);
  const auto fast = decompose_two_composite(spec, {"t", "t"}, {"t", "t"});
  EXPECT_EQ(fast, oracle_two_composite(spec, {"t", "t"}, {"t", "t"}));
  const StateVector both = product_state(composite_word(spec, "t"), composite_word(spec, "t"));
  EXPECT_EQ(fast.total(), scalar_product(both, both));
}

TEST(TwoComposite, ExchangeLawForRandomCoefficients) {
  for (std::size_t n = 1; n <= 3; ++n)
    for (int trial = 0; trial < 3; ++trial) {
      const auto spec = CompositeSpec::make(testing::random_rep(n, rng()));
      const auto same = two_composite_scalar(spec, {"t1", "t2"}, {"t1", "t2"});
      const auto swapped = two_composite_scalar(spec, {"t1", "t2"}, {"t2", "t1"});
      EXPECT_EQ(swapped.exchange, QPolynomial::monomial(n * n) * same.direct);
      EXPECT_EQ(effective_exponent(spec), n * n);
    }
}

TEST(TwoComposite, OracleIsIndependentOfWorkerCount) {
  const auto spec = spec_of(3, RepKind::symmetric);
  const auto one = oracle_two_composite(spec, {"a", "a"}, {"a", "a"}, 1);
  EXPECT_EQ(oracle_two_composite(spec, {"a", "a"}, {"a", "a"}, 4), one);
}

TEST(TwoComposite, OracleBudget) { EXPECT_THROW(oracle_two_composite(spec_of(5, RepKind::symmetric), {"a", "b"}, {"a", "b"}), BudgetExceeded); }

TEST(EffectiveExponent, Examples) {
  EXPECT_EQ(effective_exponent(spec_of(1, RepKind::symmetric)), 1u);
  EXPECT_EQ(effective_exponent(spec_of(2, RepKind::symmetric)), 4u);
  EXPECT_EQ(effective_exponent(spec_of(2, RepKind::antisymmetric)), 4u);
  EXPECT_EQ(effective_exponent(spec_of(3, RepKind::antisymmetric)), 9u);
  EXPECT_EQ(effective_exponent(spec_of(3, RepKind::antisymmetric), Route::oracle), 9u);
}

TEST(Superline, BlockSwapHasNSquaredCrossings) {
  for (std::size_t n = 1; n <= 6; ++n) EXPECT_EQ(inversion_number(block_swap_matching(n)), n * n);
}

TEST(WeoLimit, Examples) {
  EXPECT_EQ(weo_limit_check(2, Statistics::fermi), Statistics::bose);
  EXPECT_EQ(weo_limit_check(7, Statistics::fermi), Statistics::fermi);
  EXPECT_EQ(weo_limit_check(5, Statistics::bose), Statistics::bose);
  EXPECT_THROW(weo_limit_check(0, Statistics::bose), ContractViolation);
}

TEST(WeoLimit, ParityTable) {
  for (std::size_t n = 1; n <= 8; ++n) {
    EXPECT_EQ(weo_limit_check(n, Statistics::fermi), n % 2 == 1 ? Statistics::fermi : Statistics::bose);
    EXPECT_EQ(weo_limit_check(n, Statistics::bose), Statistics::bose);
  }
}

TEST(CrossTerms, VanishForDistinctTags) {
  for (std::size_t n = 1; n <= 3; ++n) EXPECT_TRUE(cross_term_magnitude(spec_of(n, RepKind::symmetric), false).is_zero());
}

TEST(CrossTerms, SingleQuonHasNone) { EXPECT_TRUE(cross_term_magnitude(spec_of(1, RepKind::symmetric), true).is_zero()); }

TEST(CrossTerms, TwoQuonSymmetricOverlap) {
  // Frozen from the (2n)!-matching oracle.
  const QPolynomial expected{0, 2, 8, 12, 8, 2};
  const auto spec = spec_of(2, RepKind::symmetric);
  EXPECT_EQ(oracle_two_composite(spec, {"t", "t"}, {"t", "t"}).cross, expected);
  EXPECT_EQ(cross_term_magnitude(spec, true), expected);
}

}  // namespace
}  // namespace quon
