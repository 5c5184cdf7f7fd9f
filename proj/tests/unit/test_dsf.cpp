#include "helpers.hpp"
#include "oracle.hpp"

#include <divisive/dsf.hpp>
#include <divisive/errors.hpp>
#include <divisive/generators.hpp>
#include <divisive/repro.hpp>

#include <gtest/gtest.h>

#include <cmath>

using namespace divisive;
using testing_helpers::all_of;
using testing_helpers::letters_profile;

namespace {

std::vector<Rational> fractions(std::initializer_list<const char*> texts) {
  std::vector<Rational> out;
  for (auto t : texts) out.push_back(parse_rational(t));
  return out;
}

struct SchemePair {
  ScoringScheme scheme;
  oracle::Scoring reference;
};

std::vector<SchemePair> schemes_for(int m) {
  std::vector<SchemePair> out{
      {ScoringScheme::normalized_borda(), {oracle::Kind::normalized, oracle::borda_weights(m)}},
      {ScoringScheme::borda(), {oracle::Kind::positional, oracle::borda_weights(m)}},
      {ScoringScheme::normalized_plurality(), {oracle::Kind::normalized, oracle::plurality_weights(m)}},
      {ScoringScheme::plurality(), {oracle::Kind::positional, oracle::plurality_weights(m)}},
      {ScoringScheme::copeland_symmetric(), {oracle::Kind::copeland, {}}},
      {ScoringScheme::copeland_asymmetric(), {oracle::Kind::copeland_asym, {}}},
  };
  std::vector<Rational> odd;
  for (int i = 0; i < m; ++i) odd.push_back(Rational(i * i + 1, i + 2));
  out.push_back({ScoringScheme::normalized_positional(odd), {oracle::Kind::normalized, odd}});
  out.push_back({ScoringScheme::positional(odd), {oracle::Kind::positional, odd}});
  return out;
}

}  // namespace

TEST(RankVariance, ProofOfUniformReinforcementFailure) {
  const auto r = prop3_profile();
  const auto small = rank_variance_dsf(r);
  EXPECT_EQ(small.selection, (std::vector<ProposalIndex>{0, 1, 2, 3}));
  EXPECT_EQ(small.values, fractions({"1/4", "1/4", "1/4", "1/4", "0"}));
  const auto joined = profile_union(r, perfectly_uniform(5, 1, 2));
  const auto large = rank_variance_dsf(joined);
  EXPECT_EQ(large.selection, (std::vector<ProposalIndex>{4}));
  EXPECT_EQ(large.values, fractions({"29881/14884", "29881/14884", "29401/14884", "29401/14884", "7560/3721"}));
}

TEST(RankVariance, MatchesOracle) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 30; ++t) {
    const auto m = 2 + rng() % 4;
    const auto r = testing_helpers::random_profile(rng, m, 1 + rng() % 8);
    EXPECT_EQ(rank_variance_dsf(r).values, oracle::rank_variance(oracle::rankings_of(r), static_cast<int>(m)));
  }
}

TEST(Navarrete, ScoringVectorsThatInduceTheSameRuleDisagree) {
  const auto r = example1_profile();
  const auto borda = navarrete_dsf(r, ScoringScheme::normalized_borda());
  EXPECT_EQ(borda.selection, all_of(4));
  EXPECT_EQ(borda.values, fractions({"1/3", "1/3", "1/3", "1/3"}));
  const auto eps = navarrete_dsf(r, ScoringScheme::epsilon_borda(4, Rational(1, 100), 4));
  EXPECT_EQ(eps.selection, (std::vector<ProposalIndex>{0, 1}));
  EXPECT_EQ(eps.values, fractions({"1/3", "1/3", "33/100", "33/100"}));
}

TEST(Navarrete, UnanimousProfilesScoreZero) {
  const auto r = letters_profile({"bca", "bca", "bca"});
  const auto report = navarrete_dsf(r, ScoringScheme::normalized_borda());
  EXPECT_EQ(report.selection, all_of(3));
  for (const auto& v : report.values) EXPECT_EQ(v, 0);
}

TEST(Navarrete, SingleProposalIsZero) {
  const auto r = Profile(ProposalSet({"only"}), std::vector<Ranking>{Ranking({0}), Ranking({0})});
  EXPECT_EQ(navarrete_dsf(r, ScoringScheme::borda()).values, std::vector<Rational>{0});
}

TEST(ScoreBased, ExhaustiveAgreementWithOracleUpToThreeByThree) {
  for (const auto& r : generate_profiles(GeneratorSpec::exhaustive(3, 3))) {
    const int m = static_cast<int>(r.num_proposals());
    const auto plain = oracle::rankings_of(r);
    for (const auto& [scheme, reference] : schemes_for(m)) {
      EXPECT_EQ(score_based_dsf(r, scheme, DecompositionScheme::exact_uniform()).values,
                oracle::score_dsf(reference, plain, m))
          << scheme.describe();
      EXPECT_EQ(navarrete_dsf(r, scheme).values, oracle::navarrete(reference, plain, m)) << scheme.describe();
    }
  }
}

TEST(ScoreBased, RandomAgreementWithOracleUpToEightAgents) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 25; ++t) {
    const int m = 2 + static_cast<int>(rng() % 4);
    const auto r = testing_helpers::random_profile(rng, static_cast<std::size_t>(m), 2 + rng() % 7);
    const auto plain = oracle::rankings_of(r);
    for (const auto& [scheme, reference] : schemes_for(m))
      EXPECT_EQ(score_based_dsf(r, scheme, DecompositionScheme::exact_uniform()).values,
                oracle::score_dsf(reference, plain, m))
          << scheme.describe();
  }
}

TEST(ScoreBased, FixedPositionProposalScoresZeroUnderNormalizedPositional) {
  const auto r = letters_profile({"abcd", "cbad", "dbca", "abdc"});
  const auto report = score_based_dsf(r, ScoringScheme::normalized_borda(), DecompositionScheme::exact_uniform());
  EXPECT_EQ(report.values[1], 0);
  EXPECT_FALSE(report.selects(1));
}

TEST(ScoreBased, PluralityCannotSeparateTheTwoSubprofiles) {
  const auto r = plurality_position_profile();
  const auto report = score_based_dsf(r, ScoringScheme::normalized_plurality(), DecompositionScheme::exact_uniform());
  EXPECT_EQ(report.selection, all_of(3));
  for (const auto& v : report.values) EXPECT_EQ(v, 0);
}

TEST(ScoreBased, SingleAgentHasNoSplits) {
  const auto r = letters_profile({"cab"});
  const auto report = score_based_dsf(r, ScoringScheme::borda(), DecompositionScheme::exact_uniform());
  EXPECT_EQ(report.selection, all_of(3));
  EXPECT_EQ(report.values, (std::vector<Rational>{0, 0, 0}));
}

TEST(ScoreBased, CountingPathAgreesWithGrayEnumeration) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 30; ++t) {
    const auto m = 2 + rng() % 4;
    const auto n = 2 + rng() % 13;
    const auto r = testing_helpers::random_profile(rng, m, n);
    for (const auto& [scheme, reference] : schemes_for(static_cast<int>(m))) {
      (void)reference;
      const auto gray = score_based_dsf(r, scheme, DecompositionScheme::exact_uniform(20));
      const auto counted = score_based_dsf(r, scheme, DecompositionScheme::exact_uniform(1));
      EXPECT_EQ(gray.values, counted.values) << scheme.describe() << " n=" << r.size();
    }
    for (const auto& rule : {Scf::borda_rule(), Scf::plurality_rule()}) {
      const auto gray = scf_based_dsf(r, rule, DecompositionScheme::exact_uniform(20));
      const auto counted = scf_based_dsf(r, rule, DecompositionScheme::exact_uniform(1));
      EXPECT_EQ(gray.values, counted.values) << rule.name() << " n=" << r.size();
    }
  }
}

TEST(ScoreBased, GrayEnumerationIsThreadIndependent) {
  std::mt19937_64 rng(31);
  const auto r = testing_helpers::random_profile(rng, 4, 15);
  auto one = DecompositionScheme::exact_uniform();
  auto four = DecompositionScheme::exact_uniform();
  four.with_threads(4);
  for (const auto& [scheme, reference] : schemes_for(4)) {
    (void)reference;
    EXPECT_EQ(score_based_dsf(r, scheme, one).values, score_based_dsf(r, scheme, four).values);
  }
}

TEST(ScoreBased, CountingPathRespectsItsStateBudget) {
  std::mt19937_64 rng(8);
  const auto r = testing_helpers::random_profile(rng, 5, 30);
  auto tight = DecompositionScheme::exact_uniform(20);
  tight.with_state_budget(10);
  EXPECT_THROW(score_based_dsf(r, ScoringScheme::copeland_symmetric(), tight), CapacityError);
}

TEST(ScfBased, UnanimousTopMakesEverythingTie) {
  for (std::size_t copies : {1, 2, 3}) {
    const auto report = scf_based_dsf(example2_profile(copies), Scf::borda_rule(), DecompositionScheme::exact_uniform());
    EXPECT_EQ(report.selection, all_of(3));
  }
}

TEST(ScfBased, FixedPositionProposalIsUniquelySelected) {
  const auto r = example3_profile();
  const auto report = scf_based_dsf(r, Scf::borda_rule(), DecompositionScheme::exact_uniform());
  EXPECT_EQ(report.selection, (std::vector<ProposalIndex>{1}));
  EXPECT_EQ(report.values, fractions({"1/3", "1", "0", "1/3", "1/3"}));
}

TEST(ScfBased, MatchesOracleExhaustively) {
  for (const auto& r : generate_profiles(GeneratorSpec::exhaustive(3, 4))) {
    const int m = static_cast<int>(r.num_proposals());
    const auto plain = oracle::rankings_of(r);
    EXPECT_EQ(scf_based_dsf(r, Scf::borda_rule(), DecompositionScheme::exact_uniform()).values,
              oracle::scf_dsf(oracle::borda_weights(m), plain, m));
    EXPECT_EQ(scf_based_dsf(r, Scf::plurality_rule(), DecompositionScheme::exact_uniform()).values,
              oracle::scf_dsf(oracle::plurality_weights(m), plain, m));
  }
}

TEST(ScfBased, CustomRuleFallsBackToDirectEnumeration) {
  const auto r = example3_profile();
  const auto borda = Scf::borda_rule();
  const auto wrapped = Scf::custom("wrapped-borda", [borda](const SubProfile& s) { return borda.winners(s); });
  EXPECT_EQ(scf_based_dsf(r, wrapped, DecompositionScheme::exact_uniform()).values,
            scf_based_dsf(r, borda, DecompositionScheme::exact_uniform()).values);
  std::mt19937_64 rng(3);
  const auto big = testing_helpers::random_profile(rng, 3, 25);
  EXPECT_THROW(scf_based_dsf(big, wrapped, DecompositionScheme::exact_uniform()), CapacityError);
  const auto mc = scf_based_dsf(big, wrapped, DecompositionScheme::monte_carlo(200, 1));
  EXPECT_FALSE(mc.is_exact());
}

TEST(IndexBased, KendallOnTwoAgents) {
  const auto r = plurality_position_profile();
  const auto report = index_based_dsf(r, ProfileIndex::avg_kendall_tau());
  EXPECT_EQ(report.direction, Direction::min);
  EXPECT_EQ(report.values, oracle::index_kendall(oracle::rankings_of(r), 3));
  EXPECT_EQ(report.values, (std::vector<Rational>{1, 0, 0}));
  EXPECT_EQ(report.selection, (std::vector<ProposalIndex>{1, 2}));
}

TEST(IndexBased, MatchesOracleOnRandomProfiles) {
  std::mt19937_64 rng(44);
  for (int t = 0; t < 30; ++t) {
    const auto m = 2 + rng() % 4;
    const auto r = testing_helpers::random_profile(rng, m, 1 + rng() % 7);
    const auto expected = oracle::index_kendall(oracle::rankings_of(r), static_cast<int>(m));
    const auto report = index_based_dsf(r, ProfileIndex::avg_kendall_tau());
    EXPECT_EQ(report.values, expected);
    EXPECT_EQ(report.selection, oracle::argmin(expected));
  }
}

TEST(IndexBased, PolarisedProfileTreatsEveryProposalAlike) {
  for (std::size_t m : {3, 5}) {
    std::vector<Ranking> rankings{Ranking::identity(m), Ranking::identity(m).reversed()};
    const Profile r(ProposalSet::letters(m), rankings);
    const auto report = index_based_dsf(r, ProfileIndex::avg_kendall_tau());
    EXPECT_EQ(report.selection, all_of(m));
  }
}

TEST(MonteCarloDsf, NearExactOnExampleThree) {
  const auto r = example3_profile();
  const auto report = scf_based_dsf(r, Scf::borda_rule(), DecompositionScheme::monte_carlo(20000, 7));
  ASSERT_FALSE(report.is_exact());
  EXPECT_NEAR(report.estimates[1].mean, 1.0, 0.05);
  EXPECT_EQ(report.selection, (std::vector<ProposalIndex>{1}));
}

TEST(MonteCarloDsf, AgreesWithExactWhenSamplesCoverEverySplit) {
  std::mt19937_64 rng(6);
  const auto r = testing_helpers::random_profile(rng, 4, 3);
  const auto exact = score_based_dsf(r, ScoringScheme::normalized_borda(), DecompositionScheme::exact_uniform());
  const auto mc = score_based_dsf(r, ScoringScheme::normalized_borda(), DecompositionScheme::monte_carlo(30000, 2));
  for (std::size_t x = 0; x < 4; ++x) EXPECT_NEAR(mc.estimates[x].mean, to_double(exact.values[x]), 0.02);
}

TEST(MonteCarloDsf, DeterministicAcrossThreadCounts) {
  std::mt19937_64 rng(12);
  const auto r = testing_helpers::random_profile(rng, 5, 12);
  auto one = DecompositionScheme::monte_carlo(5000, 99);
  auto three = DecompositionScheme::monte_carlo(5000, 99);
  three.with_threads(3);
  const auto a = score_based_dsf(r, ScoringScheme::copeland_symmetric(), one);
  const auto b = score_based_dsf(r, ScoringScheme::copeland_symmetric(), three);
  EXPECT_EQ(a.estimates, b.estimates);
  EXPECT_EQ(a.selection, b.selection);
}

TEST(WeightedDsf, UniformWeightReproducesTheExactEngine) {
  std::mt19937_64 rng(4);
  const auto r = testing_helpers::random_profile(rng, 4, 6);
  const Rational w(1, static_cast<long long>(bipartition_count(6)));
  const auto weighted = weighted_score_dsf(r, ScoringScheme::normalized_borda(),
                                           [w](const Profile&, ProposalIndex, const Bipartition&) { return w; });
  EXPECT_EQ(weighted.values,
            score_based_dsf(r, ScoringScheme::normalized_borda(), DecompositionScheme::exact_uniform()).values);
}

TEST(WeightedDsf, IncludingTheTrivialSplitRescalesButKeepsTheSelection) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 40; ++t) {
    const auto n = 2 + rng() % 5;
    const int m = 2 + static_cast<int>(rng() % 3);
    const auto r = testing_helpers::random_profile(rng, static_cast<std::size_t>(m), n);
    // Oracle over all 2^(n-1) unordered splits including {empty, N}, whose div is 0.
    const oracle::Scoring s{oracle::Kind::normalized, oracle::borda_weights(m)};
    const auto without = oracle::score_dsf(s, oracle::rankings_of(r), m);
    const auto engine = score_based_dsf(r, ScoringScheme::normalized_borda(), DecompositionScheme::exact_uniform());
    const Rational factor(static_cast<long long>(bipartition_count(n)), static_cast<long long>(bipartition_count(n) + 1));
    std::vector<Rational> with;
    for (const auto& v : without) with.push_back(v * factor);
    EXPECT_EQ(engine.values, without);
    EXPECT_EQ(engine.selection, oracle::argmax(with));
  }
}

TEST(Selection, TiesAreKeptAndEmptyInputRejected) {
  EXPECT_EQ(select_extreme(std::vector<Rational>{1, 3, 3}, Direction::max), (std::vector<ProposalIndex>{1, 2}));
  EXPECT_EQ(select_extreme(std::vector<Rational>{1, 3, 1}, Direction::min), (std::vector<ProposalIndex>{0, 2}));
  EXPECT_THROW(select_extreme(std::vector<Rational>{}, Direction::max), InputError);
}

TEST(Factories, GrammarAndNames) {
  DsfSpec spec;
  spec.method = parse_method("score");
  spec.scheme = "copeland";
  spec.sampling = "mc:100";
  EXPECT_EQ(make_dsf(spec).name(), "score(copeland, mc:100)");
  spec.method = DsfMethod::scf;
  spec.sampling = "exact";
  EXPECT_EQ(make_dsf(spec).name(), "scf(borda-rule, exact)");
  EXPECT_THROW(parse_method("median"), InputError);
  EXPECT_THROW(parse_sampling("mc:0", 1, 20), InputError);
  EXPECT_THROW(parse_sampling("mc:ten", 1, 20), InputError);
  EXPECT_THROW(parse_sampling("approximate", 1, 20), InputError);
  EXPECT_EQ(to_string(DsfMethod::rank_variance), "rankvar");
  EXPECT_GE(shipped_dsfs().size(), 10U);
}
