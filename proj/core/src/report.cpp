#include "divisive/report.hpp"

#include "divisive/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace divisive {

ReportDocument make_report_document(const Profile& profile, const DivisivenessReport& report, std::string sampling,
                                    std::optional<std::uint64_t> seed) {
  ReportDocument doc;
  doc.method = report.method;
  doc.sampling = std::move(sampling);
  if (!report.is_exact()) doc.seed = seed;
  doc.direction = report.direction;
  doc.agents = profile.size();
  doc.proposals = profile.proposals().names();
  doc.values = report.values;
  doc.estimates = report.estimates;
  for (auto x : report.selection) doc.selection.push_back(profile.proposals().name(x));
  return doc;
}

OutputStyle parse_output_style(std::string_view text) {
  if (text == "table") return OutputStyle::table;
  if (text == "json") return OutputStyle::json;
  throw InputError("unknown output style '" + std::string(text) + "' (expected table or json)");
}

namespace {

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string emit_table(const ReportDocument& r) {
  std::ostringstream out;
  out << "method:    " << r.method << '\n';
  if (r.seed) out << "seed:      " << *r.seed << '\n';
  out << "agents:    " << r.agents << '\n';
  out << "direction: " << (r.direction == Direction::max ? "max" : "min") << '\n';
  out << "selection:";
  for (const auto& s : r.selection) out << ' ' << s;
  out << '\n';

  std::size_t width = 0;
  for (const auto& p : r.proposals) width = std::max(width, p.size());
  std::vector<std::string> texts;
  for (std::size_t i = 0; i < r.proposals.size(); ++i)
    texts.push_back(i < r.values.size() ? to_string(r.values[i])
                                        : (i < r.estimates.size() ? fixed6(r.estimates[i].mean) : "?"));
  std::size_t value_width = 0;
  for (const auto& t : texts) value_width = std::max(value_width, t.size());

  for (std::size_t i = 0; i < r.proposals.size(); ++i) {
    std::string line = r.proposals[i] + std::string(width - r.proposals[i].size(), ' ') + " = " + texts[i];
    if (i < r.values.size() && denominator(r.values[i]) != 1)
      line += std::string(value_width - texts[i].size(), ' ') + "  (" + to_decimal(r.values[i]) + ")";
    else if (i < r.estimates.size())
      line += std::string(value_width - texts[i].size(), ' ') + "  +- " + fixed6(r.estimates[i].std_error);
    out << line << '\n';
  }
  if (r.seconds) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", *r.seconds);
    out << "time:      " << buf << " s\n";
  }
  return out.str();
}

std::string emit_json(const ReportDocument& r) {
  nlohmann::ordered_json j;
  j["method"] = r.method;
  j["sampling"] = r.sampling;
  if (r.seed) j["seed"] = *r.seed;
  j["direction"] = r.direction == Direction::max ? "max" : "min";
  j["agents"] = r.agents;
  j["selection"] = r.selection;
  auto values = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < r.proposals.size(); ++i) {
    nlohmann::ordered_json v;
    v["proposal"] = r.proposals[i];
    if (i < r.values.size()) {
      v["exact"] = to_string(r.values[i]);
      v["decimal"] = to_decimal(r.values[i]);
    } else if (i < r.estimates.size()) {
      v["estimate"] = r.estimates[i].mean;
      v["std_error"] = r.estimates[i].std_error;
    }
    values.push_back(std::move(v));
  }
  j["values"] = std::move(values);
  return j.dump(2) + "\n";
}

}  // namespace

std::string emit_report(const ReportDocument& report, OutputStyle style) {
  return style == OutputStyle::table ? emit_table(report) : emit_json(report);
}

ReportDocument parse_report_json(std::string_view text) {
  try {
    const auto j = nlohmann::json::parse(text);
    ReportDocument r;
    r.method = j.at("method").get<std::string>();
    r.sampling = j.at("sampling").get<std::string>();
    if (j.contains("seed")) r.seed = j.at("seed").get<std::uint64_t>();
    const auto direction = j.at("direction").get<std::string>();
    if (direction != "max" && direction != "min") throw InputError("bad direction '" + direction + "'");
    r.direction = direction == "max" ? Direction::max : Direction::min;
    r.agents = j.at("agents").get<std::size_t>();
    r.selection = j.at("selection").get<std::vector<std::string>>();
    for (const auto& v : j.at("values")) {
      r.proposals.push_back(v.at("proposal").get<std::string>());
      if (v.contains("exact"))
        r.values.push_back(parse_rational(v.at("exact").get<std::string>()));
      else
        r.estimates.push_back({v.at("estimate").get<double>(), v.at("std_error").get<double>()});
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed report: ") + e.what());
  }
}

}  // namespace divisive
