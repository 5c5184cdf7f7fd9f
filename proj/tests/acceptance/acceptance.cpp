#include <divisive/divisive.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

using namespace divisive;

namespace {

struct Outcome {
  bool ok = false;
  std::string note;
};

int failures = 0;

void run(int id, const std::string& title, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (seconds >= limit_seconds) {
    out.ok = false;
    out.note += (out.note.empty() ? "" : "; ") + std::string("over time limit");
  }
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.3f s / %.0f s", seconds, limit_seconds);
  std::cout << (out.ok ? "PASS" : "FAIL") << " criterion " << id << ": " << title << " [" << timing << "]";
  if (!out.note.empty()) std::cout << " (" << out.note << ")";
  std::cout << std::endl;
  if (!out.ok) ++failures;
}

Outcome fixture(const std::string& name) {
  const auto result = run_fixture(name);
  if (result.passed()) return {true, ""};
  std::cout << result.render();
  return {false, "fixture mismatch"};
}

unsigned worker_count() { return std::max(1U, std::thread::hardware_concurrency()); }

Outcome no_violations(const Dsf& dsf, AxiomId axiom, const std::vector<GeneratorSpec>& specs,
                      std::size_t* applicable = nullptr) {
  std::size_t checked = 0, passed = 0;
  for (const auto& spec : specs) {
    const auto result = search_counterexample(dsf, axiom, spec, {}, worker_count());
    checked += result.checked;
    passed += result.passed;
    if (!result.exhausted())
      return {false, dsf.name() + ": " + result.violation->witness->details};
  }
  if (applicable) *applicable += passed;
  std::ostringstream note;
  note << dsf.name() << ": " << checked << " profiles, " << passed << " applicable";
  return {true, note.str()};
}

}  // namespace

int main() {
  run(1, "repro ex1", 1, [] { return fixture("ex1"); });
  run(2, "repro ex2 (n = 2, 4)", 1, [] { return fixture("ex2"); });
  run(3, "repro ex3", 1, [] { return fixture("ex3"); });
  run(4, "repro prop3", 1, [] { return fixture("prop3"); });

  run(5, "verify thm1, thm2, thm3", 3, [] {
    const std::vector<std::pair<std::string, std::function<bool()>>> theorems = {
        {"thm1", [] { return verify_theorem_1().complete; }},
        {"thm2", [] { return verify_theorem_2(3).complete && verify_theorem_2(5).complete; }},
        {"thm3", [] {
           const auto cert = verify_theorem_3();
           return cert.complete && cert.rejected_count() == 7;
         }},
    };
    std::string note;
    bool ok = true;
    for (const auto& [name, verify] : theorems) {
      const auto start = std::chrono::steady_clock::now();
      const bool complete = verify();
      const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      char buf[96];
      std::snprintf(buf, sizeof buf, "%s %s in %.3f s", name.c_str(), complete ? "complete" : "incomplete", seconds);
      note += (note.empty() ? "" : ", ") + std::string(buf);
      ok = ok && complete && seconds < 1;
    }
    return Outcome{ok, note};
  });

  run(6, "weak position unanimity of normalized positional score DSFs", 300, [] {
    std::string notes;
    for (const auto& scheme : {ScoringScheme::normalized_borda(), ScoringScheme::normalized_plurality()}) {
      const auto out = no_violations(make_score_based_dsf(scheme), AxiomId::weak_position_unanimity,
                                     {GeneratorSpec::exhaustive(4, 4), GeneratorSpec::random(1000, 7, 5, 6)});
      if (!out.ok) return out;
      notes += (notes.empty() ? "" : "; ") + out.note;
    }
    return Outcome{true, notes};
  });

  run(7, "clone consistency of the Kendall-tau index DSF", 120, [] {
    std::size_t with_clones = 0;
    auto out = no_violations(make_index_based_dsf(ProfileIndex::avg_kendall_tau()), AxiomId::clone_consistency,
                             {GeneratorSpec::exhaustive(4, 4)}, &with_clones);
    if (out.ok && with_clones == 0) return Outcome{false, "no profile with clones was checked"};
    return out;
  });

  run(8, "shipped DSFs return the full set on perfectly uniform profiles", 10, [] {
    std::size_t runs = 0;
    for (std::size_t m = 2; m <= 4; ++m)
      for (std::size_t k = 1; k <= 2; ++k) {
        const auto u = perfectly_uniform(m, k);
        for (const auto& dsf : shipped_dsfs()) {
          ++runs;
          if (dsf.select(u).size() != m)
            return Outcome{false, dsf.name() + " on m=" + std::to_string(m) + ", k=" + std::to_string(k)};
        }
      }
    return Outcome{true, std::to_string(runs) + " runs"};
  });

  run(9, "Monte Carlo agrees with exact enumeration", 60, [] {
    std::mt19937_64 rng(2024);
    std::size_t matches = 0;
    double worst = 0;
    for (int t = 0; t < 20; ++t) {
      std::vector<Ranking> rankings;
      std::vector<ProposalIndex> order{0, 1, 2, 3};
      for (int i = 0; i < 8; ++i) {
        std::shuffle(order.begin(), order.end(), rng);
        rankings.emplace_back(order);
      }
      const Profile r(ProposalSet::letters(4), rankings);
      const auto scheme = ScoringScheme::normalized_borda();
      const auto exact = score_based_dsf(r, scheme, DecompositionScheme::exact_uniform());
      const auto mc = score_based_dsf(r, scheme, DecompositionScheme::monte_carlo(20000, 100 + t));
      for (ProposalIndex x = 0; x < 4; ++x)
        worst = std::max(worst, std::abs(mc.estimates[x].mean - to_double(exact.values[x])));
      if (mc.selection == exact.selection) ++matches;
    }
    std::ostringstream note;
    note << "max error " << worst << ", selections matched " << matches << "/20";
    return Outcome{worst <= 0.05 && matches >= 18, note.str()};
  });

  run(10, "exact normalized Borda score DSF on m=5, n=20", 10, [] {
    std::mt19937_64 rng(99);
    std::vector<Ranking> rankings;
    std::vector<ProposalIndex> order{0, 1, 2, 3, 4};
    for (int i = 0; i < 20; ++i) {
      std::shuffle(order.begin(), order.end(), rng);
      rankings.emplace_back(order);
    }
    const Profile r(ProposalSet::letters(5), rankings);
    const auto render = [&] {
      const auto report = score_based_dsf(r, ScoringScheme::normalized_borda(), DecompositionScheme::exact_uniform());
      return emit_report(make_report_document(r, report), OutputStyle::json);
    };
    const auto first = render();
    const auto second = render();
    return Outcome{first == second, first == second ? "byte-identical" : "outputs differ"};
  });

  run(11, "inversion invariance and Pareto efficiency exclude each other on (a>b)", 1, [] {
    const auto cert = verify_inversion_pareto_exclusion();
    return Outcome{cert.complete && cert.rejected_count() == cert.candidates.size(), ""};
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
