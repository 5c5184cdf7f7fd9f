#include "helpers.hpp"

#include <divisive/dsf.hpp>
#include <divisive/errors.hpp>
#include <divisive/report.hpp>
#include <divisive/repro.hpp>

#include <gtest/gtest.h>

#include <sstream>

using namespace divisive;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

bool has_line_starting(const std::string& text, const std::string& prefix) {
  for (const auto& line : lines_of(text))
    if (line.rfind(prefix, 0) == 0) return true;
  return false;
}

}  // namespace

TEST(Report, Example3TableNamesXAlone) {
  const auto r = example3_profile();
  const auto doc = make_report_document(r, scf_based_dsf(r, Scf::borda_rule(), DecompositionScheme::exact_uniform()));
  const auto table = emit_report(doc, OutputStyle::table);
  EXPECT_NE(table.find("\nselection: x\n"), std::string::npos) << table;
  EXPECT_NE(table.find("\nx = 1\n"), std::string::npos) << table;
  EXPECT_TRUE(has_line_starting(table, "a = 1/3")) << table;
  EXPECT_EQ(table.find("time:"), std::string::npos);
}

TEST(Report, AllTiedSelectionListsProposalsInOrder) {
  const auto u = perfectly_uniform(4, 1);
  const auto doc = make_report_document(u, navarrete_dsf(u, ScoringScheme::normalized_borda()));
  EXPECT_EQ(doc.selection, (std::vector<std::string>{"a", "b", "c", "d"}));
  EXPECT_NE(emit_report(doc, OutputStyle::table).find("\nselection: a b c d\n"), std::string::npos);
}

TEST(Report, JsonRoundTripsExactValues) {
  const auto r = example1_profile();
  auto doc = make_report_document(r, navarrete_dsf(r, ScoringScheme::normalized_borda()));
  doc.seconds = 0.25;
  const auto json = emit_report(doc, OutputStyle::json);
  EXPECT_EQ(json.find("seconds"), std::string::npos);
  EXPECT_EQ(json.find("seed"), std::string::npos);
  auto back = parse_report_json(json);
  EXPECT_FALSE(back.seconds);
  back.seconds = doc.seconds;
  EXPECT_EQ(back, doc);
  EXPECT_EQ(emit_report(back, OutputStyle::json), json);
}

TEST(Report, JsonRoundTripsEstimatesAndSeed) {
  const auto r = example3_profile();
  const auto mc = DecompositionScheme::monte_carlo(500, 17);
  const auto doc = make_report_document(r, score_based_dsf(r, ScoringScheme::normalized_borda(), mc), "mc:500", 17);
  ASSERT_EQ(doc.seed, 17U);
  const auto json = emit_report(doc, OutputStyle::json);
  EXPECT_EQ(parse_report_json(json), doc);
  EXPECT_TRUE(has_line_starting(emit_report(doc, OutputStyle::table), "seed:      17"));
}

TEST(Report, OutputIsDeterministic) {
  std::mt19937_64 rng(4);
  const auto r = testing_helpers::random_profile(rng, 4, 9);
  const auto render = [&] {
    return emit_report(make_report_document(r, score_based_dsf(r, ScoringScheme::normalized_borda(),
                                                               DecompositionScheme::exact_uniform())),
                       OutputStyle::json);
  };
  EXPECT_EQ(render(), render());
}

TEST(Report, MalformedJsonIsAnInputError) {
  EXPECT_THROW(parse_report_json("{"), InputError);
  EXPECT_THROW(parse_report_json("{\"method\": 3}"), InputError);
  EXPECT_THROW(parse_output_style("yaml"), InputError);
}
