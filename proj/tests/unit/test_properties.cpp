#include "helpers.hpp"

#include <divisive/axioms.hpp>
#include <divisive/dsf.hpp>
#include <divisive/generators.hpp>

#include <gtest/gtest.h>

using namespace divisive;

namespace {

void expect_no_violation(const Dsf& dsf, AxiomId axiom, const GeneratorSpec& spec, const CheckOptions& options = {}) {
  const auto result = search_counterexample(dsf, axiom, spec, options);
  EXPECT_TRUE(result.exhausted()) << dsf.name() << " " << to_string(axiom) << ": "
                                  << result.violation->witness->details;
}

}  // namespace

TEST(Properties, NormalizedPositionalScoresSatisfyWeakPositionUnanimity) {
  for (const auto& scheme : {ScoringScheme::normalized_borda(), ScoringScheme::normalized_plurality()}) {
    const auto dsf = make_score_based_dsf(scheme);
    expect_no_violation(dsf, AxiomId::weak_position_unanimity, GeneratorSpec::exhaustive(3, 4));
    expect_no_violation(dsf, AxiomId::weak_position_unanimity, GeneratorSpec::random(50, 2, 4, 6));
  }
  // A fixed vector only fits one proposal count.
  auto four = GeneratorSpec::exhaustive(4, 3);
  four.min_m = 4;
  expect_no_violation(make_score_based_dsf(parse_scoring_scheme("nvec:3,2,1,1/100")), AxiomId::weak_position_unanimity,
                      four);
}

TEST(Properties, KendallIndexIsCloneConsistent) {
  const auto dsf = make_index_based_dsf(ProfileIndex::avg_kendall_tau());
  expect_no_violation(dsf, AxiomId::clone_consistency, GeneratorSpec::exhaustive(4, 3));
  expect_no_violation(dsf, AxiomId::clone_consistency, GeneratorSpec::random(200, 5, 5, 3));
}

TEST(Properties, ShippedRulesAreAnonymousAndNeutral) {
  CheckOptions options;
  options.sampled_permutations = 12;
  for (const auto& dsf : shipped_dsfs()) {
    const auto spec = GeneratorSpec::random(4, 13, 3, 4);
    expect_no_violation(dsf, AxiomId::anonymity, spec, options);
    expect_no_violation(dsf, AxiomId::neutrality, spec, options);
  }
}

TEST(Properties, SymmetricRulesAreInversionInvariant) {
  const auto spec = GeneratorSpec::exhaustive(4, 3);
  expect_no_violation(make_rank_variance_dsf(), AxiomId::inversion_invariance, spec);
  expect_no_violation(make_index_based_dsf(ProfileIndex::avg_kendall_tau()), AxiomId::inversion_invariance, spec);
  expect_no_violation(make_score_based_dsf(ScoringScheme::normalized_borda()), AxiomId::inversion_invariance, spec);
}
