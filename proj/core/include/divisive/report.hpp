#pragma once

#include "divisive/dsf.hpp"
#include "divisive/monte_carlo.hpp"
#include "divisive/profile.hpp"
#include "divisive/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace divisive {

struct ReportDocument {
  std::string method;
  std::string sampling = "exact";
  std::optional<std::uint64_t> seed;  // Monte Carlo only
  Direction direction = Direction::max;
  std::size_t agents = 0;
  std::vector<std::string> proposals;
  std::vector<Rational> values;      // exact reports
  std::vector<Estimate> estimates;   // sampled reports
  std::vector<std::string> selection;
  std::optional<double> seconds;     // shown in tables only

  friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

ReportDocument make_report_document(const Profile& profile, const DivisivenessReport& report,
                                    std::string sampling = "exact", std::optional<std::uint64_t> seed = {});

enum class OutputStyle { table, json };
OutputStyle parse_output_style(std::string_view text);

/// JSON output has stable keys and never includes timing, so equal inputs give equal bytes.
std::string emit_report(const ReportDocument& report, OutputStyle style);

/// Inverse of the JSON form (timing is not restored).
ReportDocument parse_report_json(std::string_view text);

}  // namespace divisive
