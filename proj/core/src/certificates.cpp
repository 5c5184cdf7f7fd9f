#include "divisive/certificates.hpp"

#include "divisive/axioms.hpp"
#include "divisive/dsf.hpp"
#include "divisive/errors.hpp"

#include <algorithm>
#include <numeric>

namespace divisive {

std::size_t Certificate::rejected_count() const {
  return static_cast<std::size_t>(
      std::count_if(candidates.begin(), candidates.end(), [](const CandidateRecord& c) { return c.rejected(); }));
}

std::vector<std::vector<ProposalIndex>> nonempty_subsets(std::size_t m) {
  std::vector<std::vector<ProposalIndex>> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<ProposalIndex> s;
    for (ProposalIndex x = 0; x < m; ++x)
      if ((mask >> x) & 1U) s.push_back(x);
    out.push_back(std::move(s));
  }
  return out;
}

namespace {

using Selection = std::vector<ProposalIndex>;

bool contains(const Selection& s, ProposalIndex x) { return std::binary_search(s.begin(), s.end(), x); }

Selection image(const Selection& s, std::span<const ProposalIndex> sigma) {
  Selection out;
  for (auto x : s) out.push_back(sigma[x]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<ProposalIndex>> all_permutations(std::size_t m) {
  std::vector<std::vector<ProposalIndex>> out;
  std::vector<ProposalIndex> sigma(m);
  std::iota(sigma.begin(), sigma.end(), 0);
  do out.push_back(sigma);
  while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

// Relabelings σ with σ(from) equal to `to` up to a permutation of agents.
std::vector<std::vector<ProposalIndex>> relabelings_between(const Profile& from, const Profile& to) {
  std::vector<std::vector<ProposalIndex>> out;
  const auto target = canonical_form(to);
  for (auto& sigma : all_permutations(from.num_proposals()))
    if (canonical_form(apply_proposal_permutation(from, sigma)) == target) out.push_back(sigma);
  return out;
}

std::string describe_sigma(const ProposalSet& names, std::span<const ProposalIndex> sigma) {
  std::string out;
  for (ProposalIndex x = 0; x < sigma.size(); ++x) {
    if (sigma[x] == x) continue;
    if (!out.empty()) out += ", ";
    out += names.name(x) + "->" + names.name(sigma[x]);
  }
  return out.empty() ? "identity" : out;
}

std::string ranking_text(const ProposalSet& names, const Ranking& r) {
  std::string out;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i) out += ">";
    out += names.name(r.at(i));
  }
  return out;
}

void pareto_constraint(const Profile& profile, const Selection& s, CandidateRecord& record) {
  const auto& names = profile.proposals();
  for (auto y : s)
    for (ProposalIndex x = 0; x < profile.num_proposals(); ++x)
      if (x != y && pareto_dominates(profile, x, y)) {
        record.violations.push_back("pareto efficiency: " + names.name(y) + " is dominated by " + names.name(x));
        return;
      }
}

void position_constraint(const Profile& profile, const Selection& s, bool weak, CandidateRecord& record) {
  const auto& names = profile.proposals();
  if (weak && s.size() == profile.num_proposals()) return;
  if (!weak && is_unanimous(profile)) return;
  for (auto x : s)
    if (auto pos = fixed_position(profile, x)) {
      record.violations.push_back(std::string(weak ? "weak position unanimity: " : "position unanimity: ") +
                                  names.name(x) + " holds position " + std::to_string(*pos) + " throughout");
      return;
    }
}

Profile two_ranking_profile(const ProposalSet& names, const Ranking& first, const Ranking& second, std::size_t copies) {
  std::vector<Entry> entries;
  AgentId id = 0;
  for (std::size_t c = 0; c < copies; ++c) entries.push_back({id++, first});
  for (std::size_t c = 0; c < copies; ++c) entries.push_back({id++, second});
  return Profile(names, std::move(entries));
}

}  // namespace

Certificate verify_theorem_1(std::size_t m) {
  if (m < 3) throw InputError("the Pareto / weak position unanimity witness needs m >= 3");
  std::vector<std::string> labels{"a"};
  for (std::size_t i = 1; i < m; ++i) labels.push_back("b" + std::to_string(i));
  const ProposalSet names(labels);
  std::vector<ProposalIndex> down(m), up{0};
  std::iota(down.begin(), down.end(), 0);
  for (std::size_t i = m - 1; i >= 1; --i) up.push_back(i);
  const auto profile = two_ranking_profile(names, Ranking(down), Ranking(up), 1);

  Certificate cert;
  cert.theorem = "thm1";
  cert.witnesses.push_back(profile);
  for (ProposalIndex y = 1; y < m; ++y)
    if (pareto_dominates(profile, 0, y)) cert.facts.push_back("a Pareto-dominates " + names.name(y));
  if (auto pos = fixed_position(profile, 0)) cert.facts.push_back("a holds position " + std::to_string(*pos) + " throughout");
  for (auto& s : nonempty_subsets(m)) {
    CandidateRecord record{s, {}};
    pareto_constraint(profile, s, record);
    position_constraint(profile, s, true, record);
    cert.candidates.push_back(std::move(record));
  }
  cert.complete = cert.rejected_count() == cert.candidates.size();
  return cert;
}

Certificate verify_theorem_2(std::size_t m, std::size_t copies, const ProfileIndex& index) {
  if (m < 3 || m % 2 == 0) throw InputError("the index witness is built for odd m >= 3");
  if (copies == 0) throw InputError("copies must be >= 1");
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= m; ++i) labels.push_back("a" + std::to_string(i));
  const ProposalSet names(labels);
  const auto forward = Ranking::identity(m);
  const auto profile = two_ranking_profile(names, forward, forward.reversed(), copies);

  Certificate cert;
  cert.theorem = "thm2";
  cert.witnesses.push_back(profile);
  bool ok = true;

  const auto lifted_first = move_to_top(profile, 0);
  std::vector<Rational> values;
  for (ProposalIndex j = 0; j < m; ++j) {
    const auto lifted = move_to_top(profile, j);
    values.push_back(evaluate(index, lifted));
    cert.facts.push_back("delta(R^" + names.name(j) + ") = " + to_string(values.back()));
    const auto maps = relabelings_between(lifted_first, lifted);
    if (maps.empty()) {
      ok = false;
      cert.facts.push_back("R^" + names.name(j) + " is not a relabeling of R^" + names.name(0));
    } else {
      cert.facts.push_back("R^" + names.name(j) + " = relabeling (" + describe_sigma(names, maps.front()) + ") of R^" +
                           names.name(0));
    }
  }
  const bool equal = std::all_of(values.begin(), values.end(), [&](const Rational& v) { return v == values.front(); });
  cert.facts.push_back(equal ? "all index values are equal" : "index values differ");
  ok = ok && equal;

  const auto report = index_based_dsf(profile, index);
  const ProposalIndex middle = (m + 1) / 2 - 1;
  cert.facts.push_back("selection = " + format_selection(names, report.selection));
  CandidateRecord forced{report.selection, {}};
  position_constraint(profile, report.selection, false, forced);
  ok = ok && report.selection.size() == m && contains(report.selection, middle) && forced.rejected();
  cert.candidates.push_back(std::move(forced));
  cert.complete = ok;
  return cert;
}

Certificate verify_theorem_3() {
  const auto names = ProposalSet::letters(3);
  const auto profile = two_ranking_profile(names, Ranking({0, 1, 2}), Ranking({2, 1, 0}), 1);

  Certificate cert;
  cert.theorem = "thm3";
  cert.witnesses.push_back(profile);
  auto symmetries = relabelings_between(profile, profile);
  std::erase_if(symmetries, [](const auto& sigma) { return std::is_sorted(sigma.begin(), sigma.end()); });
  for (const auto& sigma : symmetries)
    cert.facts.push_back("relabeling (" + describe_sigma(names, sigma) + ") maps R to an agent permutation of R");
  for (ProposalIndex x = 0; x < 3; ++x)
    for (ProposalIndex y = x + 1; y < 3; ++y)
      if (are_clones(profile, x, y)) cert.facts.push_back(names.name(x) + " and " + names.name(y) + " are clones");
  for (ProposalIndex x = 0; x < 3; ++x)
    if (auto pos = fixed_position(profile, x))
      cert.facts.push_back(names.name(x) + " holds position " + std::to_string(*pos) + " throughout");

  for (auto& s : nonempty_subsets(3)) {
    CandidateRecord record{s, {}};
    for (const auto& sigma : symmetries)
      if (image(s, sigma) != s) {
        record.violations.push_back("anonymity+neutrality: not invariant under " + describe_sigma(names, sigma));
        break;
      }
    position_constraint(profile, s, false, record);
    bool clone_broken = false;
    for (ProposalIndex x = 0; x < 3 && !clone_broken; ++x)
      for (ProposalIndex c = 0; c < 3 && !clone_broken; ++c) {
        if (c == x || !are_clones(profile, x, c)) continue;
        for (ProposalIndex y = 0; y < 3; ++y)
          if (y != x && y != c && !are_clones(profile, x, y) && contains(s, x) && contains(s, y) && !contains(s, c)) {
            record.violations.push_back("clone consistency: " + names.name(x) + ", " + names.name(y) +
                                        " selected without clone " + names.name(c));
            clone_broken = true;
            break;
          }
      }
    cert.candidates.push_back(std::move(record));
  }
  cert.complete = cert.rejected_count() == cert.candidates.size();
  return cert;
}

Certificate verify_inversion_pareto_exclusion() {
  const auto names = ProposalSet::letters(2);
  const Profile profile(names, std::vector<Ranking>{Ranking({0, 1})});
  const auto inverted = invert(profile);

  Certificate cert;
  cert.theorem = "inv-pareto";
  cert.witnesses.push_back(profile);
  const auto maps = relabelings_between(profile, inverted);
  for (const auto& sigma : maps)
    cert.facts.push_back("inversion " + ranking_text(names, inverted.entry(0).ranking) + " = relabeling (" +
                         describe_sigma(names, sigma) + ") of R");
  for (auto& s : nonempty_subsets(2)) {
    CandidateRecord record{s, {}};
    for (const auto& sigma : maps)
      if (image(s, sigma) != s) {
        record.violations.push_back("inversion invariance: selection on the inversion would be " +
                                    format_selection(names, image(s, sigma)));
        break;
      }
    pareto_constraint(profile, s, record);
    cert.candidates.push_back(std::move(record));
  }
  cert.complete = !maps.empty() && cert.rejected_count() == cert.candidates.size();
  return cert;
}

}  // namespace divisive
