#include <divisive/axioms.hpp>
#include <divisive/dsf.hpp>
#include <divisive/generators.hpp>

#include <gtest/gtest.h>

#include <set>

using namespace divisive;

namespace {

std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t out = 1;
  for (std::size_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

GeneratorSpec single(std::size_t m, std::size_t n) {
  auto spec = GeneratorSpec::exhaustive(m, n);
  spec.min_m = m;
  spec.min_n = n;
  return spec;
}

}  // namespace

TEST(Generators, ExhaustiveYieldsOneProfilePerMultiset) {
  for (std::size_t m = 1; m <= 4; ++m)
    for (std::size_t n = 1; n <= 3; ++n) {
      std::size_t r = 1;
      for (std::size_t i = 2; i <= m; ++i) r *= i;
      const auto profiles = generate_profiles(single(m, n));
      EXPECT_EQ(profiles.size(), binomial(r + n - 1, n)) << "m=" << m << " n=" << n;
      std::set<std::vector<std::vector<ProposalIndex>>> forms;
      for (const auto& p : profiles) forms.insert(canonical_form(p));
      EXPECT_EQ(forms.size(), profiles.size());
    }
}

TEST(Generators, ExhaustiveRangesAreOrderedByProposalsThenAgents) {
  const auto profiles = generate_profiles(GeneratorSpec::exhaustive(2, 2));
  // m=1: n=1,2 (one each); m=2: n=1 (2), n=2 (3).
  ASSERT_EQ(profiles.size(), 7U);
  EXPECT_EQ(profiles[0].num_proposals(), 1U);
  EXPECT_EQ(profiles[2].num_proposals(), 2U);
  EXPECT_EQ(profiles[2].size(), 1U);
  EXPECT_EQ(profiles[6].size(), 2U);
}

TEST(Generators, NeutralDedupKeepsOneProfilePerRelabelingClass) {
  auto spec = single(3, 2);
  const auto all = generate_profiles(spec).size();
  spec.neutral_dedup = true;
  const auto classes = generate_profiles(spec);
  EXPECT_LT(classes.size(), all);
  // Relabel the first ranking to abc; the second is then a permutation up to inversion:
  // identity, three transpositions, one class of 3-cycles.
  EXPECT_EQ(classes.size(), 5U);
}

TEST(Generators, RandomModeIsSeeded) {
  const auto a = generate_profiles(GeneratorSpec::random(25, 7, 4, 5));
  const auto b = generate_profiles(GeneratorSpec::random(25, 7, 4, 5));
  const auto c = generate_profiles(GeneratorSpec::random(25, 8, 4, 5));
  ASSERT_EQ(a.size(), 25U);
  EXPECT_EQ(a, b);
  EXPECT_NE(a, c);
  for (const auto& p : a) {
    EXPECT_EQ(p.num_proposals(), 4U);
    EXPECT_EQ(p.size(), 5U);
  }
}

TEST(Generators, VisitorCanStopEarly) {
  std::size_t seen = 0;
  for_each_profile(GeneratorSpec::exhaustive(3, 3), [&](const Profile&) { return ++seen < 5; });
  EXPECT_EQ(seen, 5U);
}

TEST(Search, RankVarianceUniformReinforcementViolationIsFound) {
  const auto result = search_counterexample(make_rank_variance_dsf(), AxiomId::uniform_reinforcement,
                                            GeneratorSpec::exhaustive(3, 2));
  ASSERT_FALSE(result.exhausted());
  EXPECT_EQ(result.violation->status, CheckStatus::violation);
  EXPECT_EQ(result.checked, result.violation_index + 1);
  EXPECT_EQ(check_axiom(make_rank_variance_dsf(), AxiomId::uniform_reinforcement, result.violation->witness->profile)
                .status,
            CheckStatus::violation);
}

TEST(Search, NavarreteProfileUnanimityIsExhausted) {
  const auto spec = GeneratorSpec::exhaustive(3, 3);
  const auto result =
      search_counterexample(make_navarrete_dsf(ScoringScheme::normalized_borda()), AxiomId::profile_unanimity, spec);
  EXPECT_TRUE(result.exhausted());
  EXPECT_EQ(result.checked, generate_profiles(spec).size());
  EXPECT_EQ(result.passed + result.inapplicable, result.checked);
  EXPECT_GT(result.passed, 0U);
}

TEST(Search, BordaRuleFailsPositionUnanimity) {
  const auto result = search_counterexample(make_scf_based_dsf(Scf::borda_rule()), AxiomId::position_unanimity,
                                            GeneratorSpec::exhaustive(3, 3));
  EXPECT_FALSE(result.exhausted());
}

TEST(Search, ReportedViolationDoesNotDependOnThreadCount) {
  const auto dsf = make_score_based_dsf(ScoringScheme::normalized_plurality());
  auto spec = GeneratorSpec::exhaustive(4, 3);
  const auto one = search_counterexample(dsf, AxiomId::position_unanimity, spec, {}, 1);
  const auto three = search_counterexample(dsf, AxiomId::position_unanimity, spec, {}, 3);
  ASSERT_FALSE(one.exhausted());
  ASSERT_FALSE(three.exhausted());
  EXPECT_EQ(one.violation_index, three.violation_index);
  EXPECT_EQ(one.violation->witness->details, three.violation->witness->details);
  EXPECT_EQ(one.violation->witness->profile, three.violation->witness->profile);
}
