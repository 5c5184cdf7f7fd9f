#include "divisive/axioms.hpp"

#include "divisive/errors.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

namespace divisive {

const std::vector<AxiomId>& all_axioms() {
  static const std::vector<AxiomId> axioms = {
      AxiomId::anonymity,          AxiomId::neutrality,
      AxiomId::uniformity,         AxiomId::profile_unanimity,
      AxiomId::position_unanimity, AxiomId::weak_position_unanimity,
      AxiomId::uniform_reinforcement, AxiomId::clone_consistency,
      AxiomId::inversion_invariance,  AxiomId::pareto_efficiency,
  };
  return axioms;
}

std::string to_string(AxiomId axiom) {
  switch (axiom) {
    case AxiomId::anonymity: return "anonymity";
    case AxiomId::neutrality: return "neutrality";
    case AxiomId::uniformity: return "uniformity";
    case AxiomId::profile_unanimity: return "profile_unanimity";
    case AxiomId::position_unanimity: return "position_unanimity";
    case AxiomId::weak_position_unanimity: return "weak_position_unanimity";
    case AxiomId::uniform_reinforcement: return "uniform_reinforcement";
    case AxiomId::clone_consistency: return "clone_consistency";
    case AxiomId::inversion_invariance: return "inversion_invariance";
    case AxiomId::pareto_efficiency: return "pareto_efficiency";
  }
  return "?";
}

AxiomId parse_axiom(std::string_view text) {
  std::string normalized(text);
  std::replace(normalized.begin(), normalized.end(), '-', '_');
  for (auto axiom : all_axioms())
    if (to_string(axiom) == normalized) return axiom;
  throw InputError("unknown axiom '" + std::string(text) + "'");
}

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::violation: return "violation";
    case CheckStatus::inapplicable: return "inapplicable";
  }
  return "?";
}

std::string format_selection(const ProposalSet& proposals, const std::vector<ProposalIndex>& selection) {
  std::string out = "{";
  for (std::size_t i = 0; i < selection.size(); ++i) {
    if (i) out += ", ";
    out += proposals.name(selection[i]);
  }
  return out + "}";
}

namespace {

using Selection = std::vector<ProposalIndex>;

bool is_everything(const Selection& s, std::size_t m) { return s.size() == m; }

bool contains(const Selection& s, ProposalIndex x) { return std::binary_search(s.begin(), s.end(), x); }

CheckOutcome pass() { return {}; }
CheckOutcome inapplicable() { return {CheckStatus::inapplicable, std::nullopt, false}; }
CheckOutcome violation(const Profile& profile, std::string details) {
  return {CheckStatus::violation, Witness{profile, std::move(details)}, false};
}

std::string join_order(const ProposalSet& names, std::span<const ProposalIndex> sigma) {
  std::string out;
  for (ProposalIndex x = 0; x < sigma.size(); ++x) {
    if (x) out += ", ";
    out += names.name(x) + "->" + names.name(sigma[x]);
  }
  return out;
}

// Agent permutations: rearrange the multiset of rankings over the same ids.
CheckOutcome check_anonymity(const Dsf& dsf, const Profile& profile, const CheckOptions& options) {
  const auto& names = profile.proposals();
  const auto base = dsf.select(profile);
  const auto ids = profile.agents();
  std::vector<Ranking> rankings;
  for (const auto& e : profile.entries()) rankings.push_back(e.ranking);

  auto test = [&](const std::vector<Ranking>& arrangement, CheckOutcome& out) {
    std::vector<Entry> entries;
    for (std::size_t i = 0; i < ids.size(); ++i) entries.push_back({ids[i], arrangement[i]});
    const Profile permuted(profile.shared_proposals(), std::move(entries));
    const auto got = dsf.select(permuted);
    if (got == base) return true;
    std::ostringstream details;
    details << "agent permutation with rankings [";
    for (std::size_t i = 0; i < arrangement.size(); ++i) {
      if (i) details << ", ";
      details << ids[i] << ':';
      for (auto x : arrangement[i].order()) details << names.name(x);
    }
    details << "] selects " << format_selection(names, got) << " instead of " << format_selection(names, base);
    out = violation(profile, details.str());
    return false;
  };

  CheckOutcome out;
  if (profile.size() <= options.anonymity_sweep_max_n) {
    auto arrangement = rankings;
    std::sort(arrangement.begin(), arrangement.end());
    do {
      if (!test(arrangement, out)) return out;
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));
  } else {
    std::mt19937_64 rng(options.seed);
    auto arrangement = rankings;
    for (std::size_t t = 0; t < options.sampled_permutations; ++t) {
      std::shuffle(arrangement.begin(), arrangement.end(), rng);
      if (!test(arrangement, out)) return out;
    }
    out.sampled = true;
  }
  // Fresh identities: the same rankings reported by a disjoint set of agent ids.
  std::vector<Entry> shifted;
  const auto offset = profile.max_agent() + 1;
  for (const auto& e : profile.entries()) shifted.push_back({e.agent + offset, e.ranking});
  const auto got = dsf.select(Profile(profile.shared_proposals(), std::move(shifted)));
  if (got != base)
    return violation(profile, "renaming agents to fresh ids selects " + format_selection(names, got) + " instead of " +
                                  format_selection(names, base));
  return out;
}

CheckOutcome check_neutrality(const Dsf& dsf, const Profile& profile, const CheckOptions& options) {
  const auto& names = profile.proposals();
  const auto m = profile.num_proposals();
  const auto base = dsf.select(profile);
  std::vector<ProposalIndex> sigma(m);
  std::iota(sigma.begin(), sigma.end(), 0);

  CheckOutcome out;
  auto test = [&]() {
    const auto got = dsf.select(apply_proposal_permutation(profile, sigma));
    Selection expected;
    for (auto x : base) expected.push_back(sigma[x]);
    std::sort(expected.begin(), expected.end());
    if (got == expected) return true;
    out = violation(profile, "relabeling (" + join_order(names, sigma) + ") selects " + format_selection(names, got) +
                                 " but the relabeled selection is " + format_selection(names, expected));
    return false;
  };

  if (m <= options.neutrality_sweep_max_m) {
    do {
      if (!test()) return out;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
  } else {
    std::mt19937_64 rng(options.seed);
    for (std::size_t t = 0; t < options.sampled_permutations; ++t) {
      std::shuffle(sigma.begin(), sigma.end(), rng);
      if (!test()) return out;
    }
    out.sampled = true;
  }
  return out;
}

CheckOutcome check_full_set(const Dsf& dsf, const Profile& profile, const char* what) {
  const auto got = dsf.select(profile);
  if (is_everything(got, profile.num_proposals())) return pass();
  return violation(profile, std::string(what) + " profile selects " + format_selection(profile.proposals(), got) +
                                " instead of every proposal");
}

std::vector<ProposalIndex> fixed_proposals(const Profile& profile) {
  std::vector<ProposalIndex> out;
  for (ProposalIndex x = 0; x < profile.num_proposals(); ++x)
    if (fixed_position(profile, x)) out.push_back(x);
  return out;
}

CheckOutcome check_position_unanimity(const Dsf& dsf, const Profile& profile, bool weak) {
  const auto fixed = fixed_proposals(profile);
  if (fixed.empty()) return inapplicable();
  if (!weak && is_unanimous(profile)) return inapplicable();
  const auto& names = profile.proposals();
  const auto got = dsf.select(profile);
  if (weak && is_everything(got, profile.num_proposals())) return pass();
  for (auto x : fixed)
    if (contains(got, x))
      return violation(profile, names.name(x) + " holds position " + std::to_string(*fixed_position(profile, x)) +
                                    " throughout yet is selected in " + format_selection(names, got));
  return pass();
}

CheckOutcome check_uniform_reinforcement(const Dsf& dsf, const Profile& profile, const CheckOptions& options) {
  const auto uniform = perfectly_uniform(profile.proposals(), std::max<std::size_t>(1, options.uniform_copies),
                                         profile.max_agent() + 1);
  const auto joined = profile_union(profile, uniform);
  const auto before = dsf.select(profile);
  const auto after = dsf.select(joined);
  if (before == after) return pass();
  const auto& names = profile.proposals();
  return violation(profile, "selection " + format_selection(names, before) + " becomes " +
                                format_selection(names, after) + " after adding " + std::to_string(uniform.size()) +
                                " uniform agents (k=" + std::to_string(options.uniform_copies) + ")");
}

CheckOutcome check_clone_consistency(const Dsf& dsf, const Profile& profile) {
  const auto m = profile.num_proposals();
  struct Triple {
    ProposalIndex x, clone, y;
  };
  std::vector<Triple> triples;
  for (ProposalIndex x = 0; x < m; ++x)
    for (ProposalIndex c = 0; c < m; ++c) {
      if (c == x || !are_clones(profile, x, c)) continue;
      for (ProposalIndex y = 0; y < m; ++y)
        if (y != x && y != c && !are_clones(profile, x, y)) triples.push_back({x, c, y});
    }
  if (triples.empty()) return inapplicable();
  const auto& names = profile.proposals();
  const auto got = dsf.select(profile);
  for (const auto& t : triples)
    if (contains(got, t.x) && contains(got, t.y) && !contains(got, t.clone))
      return violation(profile, names.name(t.x) + " and " + names.name(t.y) + " are selected but " +
                                    names.name(t.x) + "'s clone " + names.name(t.clone) + " is not: " +
                                    format_selection(names, got));
  return pass();
}

CheckOutcome check_inversion_invariance(const Dsf& dsf, const Profile& profile) {
  const auto before = dsf.select(profile);
  const auto after = dsf.select(invert(profile));
  if (before == after) return pass();
  const auto& names = profile.proposals();
  return violation(profile, "selection " + format_selection(names, before) + " becomes " +
                                format_selection(names, after) + " on the inverted profile");
}

CheckOutcome check_pareto_efficiency(const Dsf& dsf, const Profile& profile) {
  const auto m = profile.num_proposals();
  std::vector<std::pair<ProposalIndex, ProposalIndex>> dominated;  // (dominated, by)
  for (ProposalIndex y = 0; y < m; ++y)
    for (ProposalIndex x = 0; x < m; ++x)
      if (x != y && pareto_dominates(profile, x, y)) {
        dominated.emplace_back(y, x);
        break;
      }
  if (dominated.empty()) return inapplicable();
  const auto& names = profile.proposals();
  const auto got = dsf.select(profile);
  for (const auto& [y, x] : dominated)
    if (contains(got, y))
      return violation(profile, names.name(y) + " is Pareto-dominated by " + names.name(x) + " yet selected in " +
                                    format_selection(names, got));
  return pass();
}

}  // namespace

CheckOutcome check_axiom(const Dsf& dsf, AxiomId axiom, const Profile& profile, const CheckOptions& options) {
  switch (axiom) {
    case AxiomId::anonymity: return check_anonymity(dsf, profile, options);
    case AxiomId::neutrality: return check_neutrality(dsf, profile, options);
    case AxiomId::uniformity:
      if (!is_perfectly_uniform(profile)) return inapplicable();
      return check_full_set(dsf, profile, "perfectly uniform");
    case AxiomId::profile_unanimity:
      if (!is_unanimous(profile)) return inapplicable();
      return check_full_set(dsf, profile, "unanimous");
    case AxiomId::position_unanimity: return check_position_unanimity(dsf, profile, false);
    case AxiomId::weak_position_unanimity: return check_position_unanimity(dsf, profile, true);
    case AxiomId::uniform_reinforcement: return check_uniform_reinforcement(dsf, profile, options);
    case AxiomId::clone_consistency: return check_clone_consistency(dsf, profile);
    case AxiomId::inversion_invariance: return check_inversion_invariance(dsf, profile);
    case AxiomId::pareto_efficiency: return check_pareto_efficiency(dsf, profile);
  }
  throw InputError("unknown axiom");
}

}  // namespace divisive
