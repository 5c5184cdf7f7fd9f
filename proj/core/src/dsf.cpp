#include "divisive/dsf.hpp"

#include "divisive/errors.hpp"
#include "kernels.hpp"

#include <algorithm>
#include <charconv>
#include <memory>

namespace divisive {

// ---------------------------------------------------------------------------
// DecompositionScheme

DecompositionScheme DecompositionScheme::exact_uniform(std::size_t cap) {
  DecompositionScheme s;
  s.cap_ = cap;
  return s;
}

DecompositionScheme DecompositionScheme::monte_carlo(std::size_t samples, std::uint64_t seed) {
  if (samples == 0) throw InputError("Monte Carlo sampling needs at least one sample");
  DecompositionScheme s;
  s.samples_ = samples;
  s.seed_ = seed;
  return s;
}

DecompositionScheme& DecompositionScheme::with_threads(unsigned threads) {
  threads_ = std::max(1U, threads);
  return *this;
}

DecompositionScheme& DecompositionScheme::with_state_budget(std::size_t budget) {
  state_budget_ = budget;
  return *this;
}

std::string DecompositionScheme::describe() const {
  return is_exact() ? "exact" : "mc:" + std::to_string(samples_);
}

DecompositionScheme parse_sampling(std::string_view text, std::uint64_t seed, std::size_t exact_cap) {
  if (text == "exact") return DecompositionScheme::exact_uniform(exact_cap);
  if (text.starts_with("mc:")) {
    const auto digits = text.substr(3);
    std::size_t samples = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), samples);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || samples == 0)
      throw InputError("bad sample count in '" + std::string(text) + "'");
    return DecompositionScheme::monte_carlo(samples, seed);
  }
  throw InputError("unknown sampling '" + std::string(text) + "' (expected exact or mc:<samples>)");
}

// ---------------------------------------------------------------------------
// Reports

bool DivisivenessReport::selects(ProposalIndex x) const {
  return std::binary_search(selection.begin(), selection.end(), x);
}

std::vector<ProposalIndex> select_extreme(const std::vector<Rational>& values, Direction direction) {
  if (values.empty()) throw InputError("no proposals to select from");
  const auto best = direction == Direction::max ? *std::max_element(values.begin(), values.end())
                                                : *std::min_element(values.begin(), values.end());
  std::vector<ProposalIndex> out;
  for (ProposalIndex x = 0; x < values.size(); ++x)
    if (values[x] == best) out.push_back(x);
  return out;
}

std::vector<ProposalIndex> select_extreme(const std::vector<Estimate>& values, Direction direction) {
  if (values.empty()) throw InputError("no proposals to select from");
  double best = values.front().mean;
  for (const auto& v : values) best = direction == Direction::max ? std::max(best, v.mean) : std::min(best, v.mean);
  std::vector<ProposalIndex> out;
  for (ProposalIndex x = 0; x < values.size(); ++x)
    if (values[x].mean == best) out.push_back(x);
  return out;
}

namespace {

DivisivenessReport exact_report(std::vector<Rational> values, Direction direction, std::string method) {
  DivisivenessReport r;
  r.selection = select_extreme(values, direction);
  r.values = std::move(values);
  r.direction = direction;
  r.method = std::move(method);
  return r;
}

DivisivenessReport sampled_report(MonteCarloRun run, std::string method) {
  DivisivenessReport r;
  r.selection = std::move(run.selection);
  r.estimates = std::move(run.estimates);
  r.method = std::move(method);
  return r;
}

std::vector<AgentId> side_agents(const Profile& profile, const Bipartition& split, bool c_side) {
  std::vector<AgentId> out;
  for (std::size_t i = 0; i < profile.size(); ++i)
    if (split.in_c(i) == c_side) out.push_back(profile.entry(i).agent);
  return out;
}

std::vector<AgentId> side_agents(const Profile& profile, std::span<const std::uint8_t> in_c, bool c_side) {
  std::vector<AgentId> out;
  for (std::size_t i = 0; i < profile.size(); ++i)
    if ((in_c[i] != 0) == c_side) out.push_back(profile.entry(i).agent);
  return out;
}

std::vector<Rational> exact_kernel_values(const Profile& profile, const detail::DivKernel& kernel,
                                          const DecompositionScheme& decomposition) {
  if (profile.size() <= decomposition.exact_cap())
    return detail::gray_uniform_values(profile, kernel, decomposition.threads());
  return detail::compressed_uniform_values(profile, kernel, decomposition.state_budget());
}

// Custom SCFs have no tally form: evaluate winners on every split directly.
std::vector<Rational> exact_custom_scf_values(const Profile& profile, const Scf& rule, std::size_t cap) {
  const auto m = profile.num_proposals();
  std::vector<Rational> values(m, Rational(0));
  const auto n = profile.size();
  if (n < 2) return values;
  if (n > cap)
    throw CapacityError("electorate of " + std::to_string(n) + " exceeds the exact cap of " + std::to_string(cap) +
                        " for a custom SCF; use Monte Carlo sampling");
  for (const auto& split : enumerate_bipartitions(n, cap)) {
    const auto c_agents = side_agents(profile, split, true), d_agents = side_agents(profile, split, false);
    const auto sub_c = restrict_to(profile, c_agents), sub_d = restrict_to(profile, d_agents);
    for (ProposalIndex x = 0; x < m; ++x) values[x] += abs(win_share(rule, sub_c, x) - win_share(rule, sub_d, x));
  }
  for (auto& v : values) v /= Rational(bipartition_count(n));
  return values;
}

SideDiv custom_scf_side_div(const Profile& profile, const Scf& rule) {
  return [&profile, rule](std::span<const std::uint8_t> in_c, std::span<double> out) {
    const auto sub_c = restrict_to(profile, side_agents(profile, in_c, true));
    const auto sub_d = restrict_to(profile, side_agents(profile, in_c, false));
    for (ProposalIndex x = 0; x < out.size(); ++x)
      out[x] = to_double(abs(win_share(rule, sub_c, x) - win_share(rule, sub_d, x)));
  };
}

std::string describe_with(const char* family, const std::string& param, const DecompositionScheme& d) {
  return std::string(family) + "(" + param + ", " + d.describe() + ")";
}

}  // namespace

// ---------------------------------------------------------------------------
// The five constructions

DivisivenessReport rank_variance_dsf(const Profile& profile) {
  const auto m = profile.num_proposals();
  const auto n = static_cast<long long>(profile.size());
  std::vector<long long> sum(m, 0), sum_sq(m, 0);
  for (const auto& e : profile.entries())
    for (ProposalIndex x = 0; x < m; ++x) {
      const auto p = static_cast<long long>(e.ranking.position(x));
      sum[x] += p;
      sum_sq[x] += p * p;
    }
  std::vector<Rational> values;
  values.reserve(m);
  for (ProposalIndex x = 0; x < m; ++x) {
    const Rational mean(sum[x], n);
    values.push_back(Rational(sum_sq[x], n) - mean * mean);
  }
  return exact_report(std::move(values), Direction::max, "rankvar");
}

DivisivenessReport navarrete_dsf(const Profile& profile, const ScoringScheme& scheme) {
  const auto m = profile.num_proposals();
  std::vector<Rational> values(m, Rational(0));
  for (ProposalIndex x = 0; x < m; ++x) {
    for (ProposalIndex y = 0; y < m; ++y) {
      if (y == x) continue;
      const auto above = supporters(profile, x, y);
      const auto below = supporters(profile, y, x);
      if (above.empty() || below.empty()) continue;
      values[x] += abs(score(scheme, restrict_to(profile, above), x) - score(scheme, restrict_to(profile, below), x));
    }
    if (m > 1) values[x] /= static_cast<long long>(m - 1);
  }
  return exact_report(std::move(values), Direction::max, "navarrete(" + scheme.describe() + ")");
}

DivisivenessReport score_based_dsf(const Profile& profile, const ScoringScheme& scheme,
                                   const DecompositionScheme& decomposition) {
  const auto method = describe_with("score", scheme.describe(), decomposition);
  std::shared_ptr<const detail::DivKernel> kernel = detail::make_score_kernel(scheme, profile.num_proposals());
  if (decomposition.is_exact())
    return exact_report(exact_kernel_values(profile, *kernel, decomposition), Direction::max, method);
  return sampled_report(run_monte_carlo(profile, detail::kernel_side_div(profile, kernel), decomposition.samples(),
                                             decomposition.seed(), decomposition.threads()),
                        method);
}

DivisivenessReport scf_based_dsf(const Profile& profile, const Scf& rule, const DecompositionScheme& decomposition) {
  const auto method = describe_with("scf", rule.name(), decomposition);
  if (!rule.scheme()) {
    if (decomposition.is_exact())
      return exact_report(exact_custom_scf_values(profile, rule, decomposition.exact_cap()), Direction::max, method);
    return sampled_report(run_monte_carlo(profile, custom_scf_side_div(profile, rule), decomposition.samples(),
                                               decomposition.seed(), decomposition.threads()),
                          method);
  }
  std::shared_ptr<const detail::DivKernel> kernel = detail::make_scf_kernel(*rule.scheme(), profile.num_proposals());
  if (decomposition.is_exact())
    return exact_report(exact_kernel_values(profile, *kernel, decomposition), Direction::max, method);
  return sampled_report(run_monte_carlo(profile, detail::kernel_side_div(profile, kernel), decomposition.samples(),
                                             decomposition.seed(), decomposition.threads()),
                        method);
}

DivisivenessReport index_based_dsf(const Profile& profile, const ProfileIndex& index) {
  const auto m = profile.num_proposals();
  std::vector<Rational> values;
  values.reserve(m);
  for (ProposalIndex x = 0; x < m; ++x) values.push_back(evaluate(index, move_to_top(profile, x)));
  return exact_report(std::move(values), Direction::min, "index(" + index.describe() + ")");
}

DivisivenessReport weighted_score_dsf(const Profile& profile, const ScoringScheme& scheme,
                                      const DecompositionWeight& weight, std::size_t cap) {
  const auto m = profile.num_proposals();
  std::vector<Rational> values(m, Rational(0));
  if (profile.size() >= 2) {
    for (const auto& split : enumerate_bipartitions(profile.size(), cap)) {
      const auto sc = scores(scheme, restrict_to(profile, side_agents(profile, split, true)));
      const auto sd = scores(scheme, restrict_to(profile, side_agents(profile, split, false)));
      for (ProposalIndex x = 0; x < m; ++x) values[x] += weight(profile, x, split) * abs(sc[x] - sd[x]);
    }
  }
  return exact_report(std::move(values), Direction::max, "score(" + scheme.describe() + ", weighted)");
}

// ---------------------------------------------------------------------------
// Named instances

Dsf::Dsf(std::string name, Procedure procedure) : name_(std::move(name)), procedure_(std::move(procedure)) {
  if (!procedure_) throw InputError("DSF needs a procedure");
}

DsfMethod parse_method(std::string_view text) {
  if (text == "rankvar") return DsfMethod::rank_variance;
  if (text == "navarrete") return DsfMethod::navarrete;
  if (text == "score") return DsfMethod::score;
  if (text == "scf") return DsfMethod::scf;
  if (text == "index") return DsfMethod::index;
  throw InputError("unknown method '" + std::string(text) + "' (expected rankvar|navarrete|score|scf|index)");
}

std::string to_string(DsfMethod method) {
  switch (method) {
    case DsfMethod::rank_variance: return "rankvar";
    case DsfMethod::navarrete: return "navarrete";
    case DsfMethod::score: return "score";
    case DsfMethod::scf: return "scf";
    case DsfMethod::index: return "index";
  }
  return "?";
}

Dsf make_rank_variance_dsf() { return Dsf("rankvar", [](const Profile& r) { return rank_variance_dsf(r); }); }

Dsf make_navarrete_dsf(ScoringScheme scheme) {
  auto name = "navarrete(" + scheme.describe() + ")";
  return Dsf(std::move(name), [scheme = std::move(scheme)](const Profile& r) { return navarrete_dsf(r, scheme); });
}

Dsf make_score_based_dsf(ScoringScheme scheme, DecompositionScheme decomposition) {
  auto name = describe_with("score", scheme.describe(), decomposition);
  return Dsf(std::move(name), [scheme = std::move(scheme), decomposition](const Profile& r) {
    return score_based_dsf(r, scheme, decomposition);
  });
}

Dsf make_scf_based_dsf(Scf rule, DecompositionScheme decomposition) {
  auto name = describe_with("scf", rule.name(), decomposition);
  return Dsf(std::move(name), [rule = std::move(rule), decomposition](const Profile& r) {
    return scf_based_dsf(r, rule, decomposition);
  });
}

Dsf make_index_based_dsf(ProfileIndex index) {
  auto name = "index(" + index.describe() + ")";
  return Dsf(std::move(name), [index = std::move(index)](const Profile& r) { return index_based_dsf(r, index); });
}

Dsf make_dsf(const DsfSpec& spec) {
  switch (spec.method) {
    case DsfMethod::rank_variance: return make_rank_variance_dsf();
    case DsfMethod::navarrete: return make_navarrete_dsf(parse_scoring_scheme(spec.scheme));
    case DsfMethod::score: {
      auto d = parse_sampling(spec.sampling, spec.seed, spec.exact_cap);
      d.with_threads(spec.threads);
      return make_score_based_dsf(parse_scoring_scheme(spec.scheme), d);
    }
    case DsfMethod::scf: {
      auto d = parse_sampling(spec.sampling, spec.seed, spec.exact_cap);
      d.with_threads(spec.threads);
      return make_scf_based_dsf(parse_scf(spec.scf), d);
    }
    case DsfMethod::index: return make_index_based_dsf(parse_profile_index(spec.index));
  }
  throw InputError("unknown method");
}

std::vector<Dsf> shipped_dsfs() {
  std::vector<Dsf> out;
  out.push_back(make_rank_variance_dsf());
  for (const auto& s : {ScoringScheme::normalized_borda(), ScoringScheme::borda(), ScoringScheme::normalized_plurality(),
                        ScoringScheme::plurality(), ScoringScheme::copeland_symmetric(),
                        ScoringScheme::copeland_asymmetric()})
    out.push_back(make_navarrete_dsf(s));
  for (const auto& s : {ScoringScheme::normalized_borda(), ScoringScheme::borda(), ScoringScheme::normalized_plurality(),
                        ScoringScheme::plurality(), ScoringScheme::copeland_symmetric(),
                        ScoringScheme::copeland_asymmetric()})
    out.push_back(make_score_based_dsf(s));
  out.push_back(make_scf_based_dsf(Scf::borda_rule()));
  out.push_back(make_scf_based_dsf(Scf::plurality_rule()));
  out.push_back(make_index_based_dsf(ProfileIndex::avg_kendall_tau()));
  out.push_back(make_index_based_dsf(ProfileIndex::constant(Rational(0))));
  return out;
}

}  // namespace divisive
