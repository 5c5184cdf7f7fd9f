// divisive: command-line front end for the DSF engine and the axiom laboratory.
//
// Exit codes: 0 success / pass / exhausted, 1 violation or repro mismatch, 2 usage or input error.

#include <divisive/divisive.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace divisive;
using json = nlohmann::ordered_json;

struct Globals {
  std::string format;  // empty: infer from extension
  std::string output = "table";
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

struct DsfOptions {
  std::string method = "navarrete";
  std::string scheme = "nborda";
  std::string scf = "borda";
  std::string index = "kendall";
  std::string sampling = "exact";
  std::size_t exact_cap = DecompositionScheme::kDefaultExactCap;
};

void add_dsf_options(CLI::App* cmd, DsfOptions& o) {
  cmd->add_option("--method", o.method, "rankvar|navarrete|score|scf|index")->capture_default_str();
  cmd->add_option("--scheme", o.scheme, "scoring: borda|nborda|plurality|nplurality|copeland|copeland-asym|vec:..|nvec:..")
      ->capture_default_str();
  cmd->add_option("--scf", o.scf, "voting rule for --method scf: borda|plurality|vec:..")->capture_default_str();
  cmd->add_option("--index", o.index, "profile index for --method index: kendall|const:<v>")->capture_default_str();
  cmd->add_option("--sampling", o.sampling, "exact|mc:<samples>")->capture_default_str();
  cmd->add_option("--exact-cap", o.exact_cap, "largest electorate enumerated split by split")->capture_default_str();
}

Dsf build_dsf(const DsfOptions& o, const Globals& g) {
  DsfSpec spec;
  spec.method = parse_method(o.method);
  spec.scheme = o.scheme;
  spec.scf = o.scf;
  spec.index = o.index;
  spec.sampling = o.sampling;
  spec.seed = g.seed;
  spec.exact_cap = o.exact_cap;
  spec.threads = g.threads;
  return make_dsf(spec);
}

ProfileDocument load(const std::string& path, const Globals& g) {
  std::optional<ProfileFormat> format;
  if (!g.format.empty()) format = parse_format(g.format);
  return read_profile_file(path, format);
}

std::string ranking_text(const ProposalSet& names, const Ranking& r) {
  std::string out;
  for (std::size_t i = 0; i < r.size(); ++i) out += (i ? ">" : "") + names.name(r.at(i));
  return out;
}

json profile_json(const Profile& p) {
  json rankings = json::array();
  for (const auto& e : p.entries()) rankings.push_back(ranking_text(p.proposals(), e.ranking));
  return rankings;
}

json outcome_json(const CheckOutcome& o) {
  json j;
  j["status"] = to_string(o.status);
  j["sampled"] = o.sampled;
  if (o.witness) {
    j["witness"]["profile"] = profile_json(o.witness->profile);
    j["witness"]["details"] = o.witness->details;
  }
  return j;
}

void print_witness(const Witness& w) {
  std::cout << "  witness:";
  for (const auto& e : w.profile.entries()) std::cout << ' ' << ranking_text(w.profile.proposals(), e.ranking);
  std::cout << "\n  " << w.details << '\n';
}

int run_analyze(const std::string& path, const DsfOptions& o, const Globals& g) {
  const auto doc = load(path, g);
  const auto dsf = build_dsf(o, g);
  const auto start = std::chrono::steady_clock::now();
  const auto report = dsf.evaluate(doc.profile);
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  auto out = make_report_document(doc.profile, report, o.sampling, g.seed);
  const auto style = parse_output_style(g.output);
  if (style == OutputStyle::table) out.seconds = elapsed.count();
  std::cout << emit_report(out, style);
  return 0;
}

int run_axioms(const std::string& path, const DsfOptions& o, const std::string& axiom, std::size_t copies,
               const Globals& g) {
  const auto doc = load(path, g);
  const auto dsf = build_dsf(o, g);
  CheckOptions options;
  options.seed = g.seed;
  options.uniform_copies = copies;
  std::vector<AxiomId> axioms = axiom == "all" ? all_axioms() : std::vector<AxiomId>{parse_axiom(axiom)};

  bool violated = false;
  json results = json::object();
  for (auto a : axioms) {
    const auto outcome = check_axiom(dsf, a, doc.profile, options);
    violated = violated || outcome.status == CheckStatus::violation;
    if (g.output == "json") {
      results[to_string(a)] = outcome_json(outcome);
    } else {
      std::cout << to_string(a) << ": " << to_string(outcome.status) << (outcome.sampled ? " (sampled)" : "") << '\n';
      if (outcome.witness) std::cout << "  " << outcome.witness->details << '\n';
    }
  }
  if (g.output == "json") {
    json j;
    j["dsf"] = dsf.name();
    j["results"] = std::move(results);
    std::cout << j.dump(2) << '\n';
  }
  return violated ? 1 : 0;
}

struct SearchOptions {
  std::string axiom;
  std::size_t max_m = 3, max_n = 3;
  std::size_t random = 0;
  std::size_t copies = 1;
  bool neutral_dedup = false;
};

int run_search(const SearchOptions& s, const DsfOptions& o, const Globals& g) {
  const auto dsf = build_dsf(o, g);
  const auto axiom = parse_axiom(s.axiom);
  auto spec = s.random > 0 ? GeneratorSpec::random(s.random, g.seed, s.max_m, s.max_n)
                           : GeneratorSpec::exhaustive(s.max_m, s.max_n);
  spec.neutral_dedup = s.neutral_dedup;
  CheckOptions options;
  options.seed = g.seed;
  options.uniform_copies = s.copies;
  const auto result = search_counterexample(dsf, axiom, spec, options, g.threads);

  if (g.output == "json") {
    json j;
    j["dsf"] = dsf.name();
    j["axiom"] = to_string(axiom);
    j["checked"] = result.checked;
    j["passed"] = result.passed;
    j["inapplicable"] = result.inapplicable;
    j["sampled"] = result.sampled;
    if (result.violation) {
      j["violation_index"] = result.violation_index;
      j["violation"] = outcome_json(*result.violation);
    } else {
      j["exhausted"] = true;
    }
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << dsf.name() << " x " << to_string(axiom) << '\n';
    std::cout << "checked " << result.checked << " (pass " << result.passed << ", inapplicable " << result.inapplicable
              << ")" << (result.sampled ? ", some checks sampled" : "") << '\n';
    if (result.violation) {
      std::cout << "violation at scan index " << result.violation_index << '\n';
      print_witness(*result.violation->witness);
    } else {
      std::cout << "exhausted: no violation\n";
    }
  }
  return result.violation ? 1 : 0;
}

int run_verify(const std::string& which, std::size_t m, const Globals& g) {
  Certificate cert;
  if (which == "thm1")
    cert = verify_theorem_1(m == 0 ? 3 : m);
  else if (which == "thm2")
    cert = verify_theorem_2(m == 0 ? 3 : m);
  else if (which == "thm3")
    cert = verify_theorem_3();
  else if (which == "inv-pareto")
    cert = verify_inversion_pareto_exclusion();
  else
    throw InputError("unknown theorem '" + which + "' (expected thm1|thm2|thm3|inv-pareto)");

  const auto& names = cert.witnesses.front().proposals();
  if (g.output == "json") {
    json j;
    j["theorem"] = cert.theorem;
    j["complete"] = cert.complete;
    j["witness"] = profile_json(cert.witnesses.front());
    j["facts"] = cert.facts;
    json candidates = json::array();
    for (const auto& c : cert.candidates) {
      json cj;
      cj["selection"] = format_selection(names, c.selection);
      cj["violations"] = c.violations;
      candidates.push_back(std::move(cj));
    }
    j["candidates"] = std::move(candidates);
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << cert.theorem << ":";
    for (const auto& e : cert.witnesses.front().entries()) std::cout << ' ' << ranking_text(names, e.ranking);
    std::cout << '\n';
    for (const auto& f : cert.facts) std::cout << "  " << f << '\n';
    for (const auto& c : cert.candidates) {
      std::cout << "  " << format_selection(names, c.selection) << ": ";
      if (c.violations.empty()) std::cout << "admissible";
      for (std::size_t i = 0; i < c.violations.size(); ++i) std::cout << (i ? "; " : "") << c.violations[i];
      std::cout << '\n';
    }
    std::cout << (cert.complete ? "certificate complete" : "certificate INCOMPLETE") << '\n';
  }
  return cert.complete ? 0 : 1;
}

int run_repro(const std::string& fixture) {
  std::vector<std::string> names = fixture == "all" ? fixture_names() : std::vector<std::string>{fixture};
  bool ok = true;
  for (const auto& name : names) {
    const auto start = std::chrono::steady_clock::now();
    const auto result = run_fixture(name);
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    std::cout << result.render();
    std::cout << "  time " << elapsed.count() << " s\n";
    ok = ok && result.passed();
  }
  return ok ? 0 : 1;
}

int run_convert(const std::string& in, const std::string& to, const std::string& out, const Globals& g) {
  const auto doc = load(in, g);
  const auto text = emit_profile(doc.profile, parse_format(to), doc.title);
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    std::ofstream file(out, std::ios::binary);
    if (!file) throw InputError("cannot write '" + out + "'");
    file << text;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Most divisive proposals of ranked preference profiles, and an axiom laboratory"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "profile format: soc|lines (default: by extension)");
  app.add_option("--output", g.output, "table|json")->capture_default_str();
  app.add_option("--seed", g.seed, "seed for sampling and random generation")->capture_default_str();
  app.add_option("--threads", g.threads, "worker threads")->capture_default_str();

  DsfOptions dsf_opts;
  std::string profile_path, axiom = "all", theorem, fixture, convert_to, convert_out;
  std::size_t copies = 1, verify_m = 0;
  SearchOptions search;

  auto* analyze = app.add_subcommand("analyze", "report per-proposal divisiveness and the selection");
  analyze->add_option("profile", profile_path, "profile file")->required();
  add_dsf_options(analyze, dsf_opts);

  auto* axioms = app.add_subcommand("axioms", "check axioms on one profile");
  axioms->add_option("--profile,profile", profile_path, "profile file")->required();
  axioms->add_option("--axiom", axiom, "all or one axiom name")->capture_default_str();
  axioms->add_option("--copies", copies, "copies per ranking in the uniform profile")->capture_default_str();
  add_dsf_options(axioms, dsf_opts);

  auto* search_cmd = app.add_subcommand("search", "scan generated profiles for an axiom violation");
  search_cmd->add_option("--axiom", search.axiom, "axiom name")->required();
  search_cmd->add_option("--max-m", search.max_m, "proposals (exhaustive: upper bound)")->capture_default_str();
  search_cmd->add_option("--max-n", search.max_n, "agents (exhaustive: upper bound)")->capture_default_str();
  search_cmd->add_option("--random", search.random, "draw this many random profiles instead");
  search_cmd->add_option("--copies", search.copies, "copies per ranking in the uniform profile")->capture_default_str();
  search_cmd->add_flag("--neutral-dedup", search.neutral_dedup, "one profile per relabeling class");
  add_dsf_options(search_cmd, dsf_opts);

  auto* verify = app.add_subcommand("verify", "check an impossibility certificate");
  verify->add_option("theorem", theorem, "thm1|thm2|thm3|inv-pareto")->required();
  verify->add_option("--m", verify_m, "number of proposals for thm1 / thm2");

  auto* repro = app.add_subcommand("repro", "rerun a reference fixture");
  repro->add_option("fixture", fixture, "fixture name or 'all'")->required();

  auto* convert = app.add_subcommand("convert", "rewrite a profile in another format");
  convert->add_option("profile", profile_path, "input file")->required();
  convert->add_option("--to", convert_to, "soc|lines")->required();
  convert->add_option("-o,--out", convert_out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*analyze) return run_analyze(profile_path, dsf_opts, g);
    if (*axioms) return run_axioms(profile_path, dsf_opts, axiom, copies, g);
    if (*search_cmd) return run_search(search, dsf_opts, g);
    if (*verify) return run_verify(theorem, verify_m, g);
    if (*repro) return run_repro(fixture);
    if (*convert) return run_convert(profile_path, convert_to, convert_out, g);
  } catch (const divisive::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
