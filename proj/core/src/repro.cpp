#include "divisive/repro.hpp"

#include "divisive/axioms.hpp"
#include "divisive/certificates.hpp"
#include "divisive/dsf.hpp"
#include "divisive/errors.hpp"

#include <sstream>

namespace divisive {

namespace {

Profile from_strings(const ProposalSet& names, const std::vector<std::string>& ballots, std::size_t copies = 1) {
  std::vector<Entry> entries;
  AgentId id = 0;
  for (std::size_t c = 0; c < copies; ++c)
    for (const auto& b : ballots) {
      std::vector<ProposalIndex> order;
      for (char ch : b) order.push_back(names.index_of(std::string(1, ch)));
      entries.push_back({id++, Ranking(std::move(order))});
    }
  return Profile(names, std::move(entries));
}

std::string selection_of(const Profile& profile, const DivisivenessReport& report) {
  return format_selection(profile.proposals(), report.selection);
}

std::string certificate_summary(const Certificate& cert) {
  return std::to_string(cert.rejected_count()) + "/" + std::to_string(cert.candidates.size()) + " rejected, " +
         (cert.complete ? "complete" : "incomplete");
}

ReproResult ex1() {
  const auto r = example1_profile();
  const auto borda = navarrete_dsf(r, ScoringScheme::normalized_borda());
  const auto eps = navarrete_dsf(r, ScoringScheme::epsilon_borda(4, Rational(1, 100), r.size()));
  return {"ex1",
          {{"navarrete(nborda) selection", "{a, b, c, d}", selection_of(r, borda)},
           {"navarrete(nvec:3,2,1,1/100) selection", "{a, b}", selection_of(r, eps)}}};
}

ReproResult ex2() {
  ReproResult out{"ex2", {}};
  for (std::size_t copies : {1, 2}) {
    const auto r = example2_profile(copies);
    const auto report = scf_based_dsf(r, Scf::borda_rule(), DecompositionScheme::exact_uniform());
    out.checks.push_back(
        {"scf(borda) selection, n=" + std::to_string(r.size()), "{a, b, c}", selection_of(r, report)});
  }
  return out;
}

ReproResult ex3() {
  const auto r = example3_profile();
  const auto report = scf_based_dsf(r, Scf::borda_rule(), DecompositionScheme::exact_uniform());
  return {"ex3",
          {{"scf(borda) selection", "{x}", selection_of(r, report)},
           {"value(x)", "1", to_string(report.values[r.proposals().index_of("x")])}}};
}

ReproResult prop3() {
  const auto r = prop3_profile();
  const auto small = rank_variance_dsf(r);
  const auto joined = profile_union(r, perfectly_uniform(r.proposals(), 1, r.max_agent() + 1));
  const auto large = rank_variance_dsf(joined);
  return {"prop3",
          {{"rankvar selection on R", "{a, b, c, d}", selection_of(r, small)},
           {"variance of e on R", "0", to_string(small.values[r.proposals().index_of("e")])},
           {"agents in R + R^U", "122", std::to_string(joined.size())},
           {"rankvar selection on R + R^U", "{e}", selection_of(joined, large)}}};
}

ReproResult plurality_pu() {
  const auto r = plurality_position_profile();
  const auto dsf = make_score_based_dsf(ScoringScheme::normalized_plurality());
  const auto report = dsf.evaluate(r);
  const auto outcome = check_axiom(dsf, AxiomId::position_unanimity, r);
  return {"plurality-pu",
          {{"score(nplurality) selection", "{a, b, c}", selection_of(r, report)},
           {"position_unanimity", "violation", to_string(outcome.status)}}};
}

ReproResult thm1() {
  const auto cert = verify_theorem_1(3);
  return {"thm1", {{"candidate selections", "7/7 rejected, complete", certificate_summary(cert)}}};
}

ReproResult thm2() {
  ReproResult out{"thm2", {}};
  for (std::size_t m : {3, 5}) {
    const auto cert = verify_theorem_2(m);
    out.checks.push_back({"m=" + std::to_string(m) + " certificate", "complete", cert.complete ? "complete" : "incomplete"});
  }
  return out;
}

ReproResult thm3() {
  const auto cert = verify_theorem_3();
  return {"thm3", {{"candidate selections", "7/7 rejected, complete", certificate_summary(cert)}}};
}

ReproResult inv_pareto() {
  const auto cert = verify_inversion_pareto_exclusion();
  return {"inv-pareto", {{"candidate selections", "3/3 rejected, complete", certificate_summary(cert)}}};
}

}  // namespace

Profile example1_profile() {
  return from_strings(ProposalSet::letters(4), {"abcd", "bacd", "abdc", "badc"});
}

Profile example2_profile(std::size_t copies) {
  if (copies == 0) throw InputError("copies must be >= 1");
  return from_strings(ProposalSet::letters(3), {"abc", "acb"}, copies);
}

Profile example3_profile() {
  return from_strings(ProposalSet({"a", "x", "y", "b", "c"}), {"axybc", "bxyca", "cxyab"});
}

Profile prop3_profile() { return from_strings(ProposalSet::letters(5), {"abcde", "badce"}); }

Profile plurality_position_profile() { return from_strings(ProposalSet::letters(3), {"abc", "acb"}); }

bool ReproResult::passed() const {
  for (const auto& c : checks)
    if (!c.pass()) return false;
  return true;
}

std::string ReproResult::render() const {
  std::ostringstream out;
  out << (passed() ? "PASS " : "FAIL ") << fixture << '\n';
  for (const auto& c : checks) {
    if (c.pass()) {
      out << "  ok   " << c.what << ": " << c.actual << '\n';
    } else {
      out << "  diff " << c.what << '\n';
      out << "    - " << c.expected << '\n';
      out << "    + " << c.actual << '\n';
    }
  }
  return out.str();
}

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = {"ex1",  "ex2",  "ex3",  "prop3",     "plurality-pu",
                                                 "thm1", "thm2", "thm3", "inv-pareto"};
  return names;
}

ReproResult run_fixture(std::string_view name) {
  if (name == "ex1") return ex1();
  if (name == "ex2") return ex2();
  if (name == "ex3") return ex3();
  if (name == "prop3") return prop3();
  if (name == "plurality-pu") return plurality_pu();
  if (name == "thm1") return thm1();
  if (name == "thm2") return thm2();
  if (name == "thm3") return thm3();
  if (name == "inv-pareto") return inv_pareto();
  throw InputError("unknown fixture '" + std::string(name) + "'");
}

}  // namespace divisive
