#include "divisive/io.hpp"

#include "divisive/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace divisive {

ProfileFormat parse_format(std::string_view text) {
  if (text == "soc") return ProfileFormat::preflib_soc;
  if (text == "lines") return ProfileFormat::native_lines;
  throw InputError("unknown profile format '" + std::string(text) + "' (expected soc or lines)");
}

std::string to_string(ProfileFormat format) {
  return format == ProfileFormat::preflib_soc ? "soc" : "lines";
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  while (true) {
    const auto at = s.find(sep);
    out.push_back(trim(s.substr(0, at)));
    if (at == std::string_view::npos) return out;
    s.remove_prefix(at + 1);
  }
}

std::optional<std::size_t> parse_count(std::string_view s) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return value;
}

std::vector<std::string_view> lines_of(std::string_view text) {
  auto out = split(text, '\n');
  for (auto& line : out)
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return out;
}

Ranking ranking_from(std::size_t line, const std::vector<std::optional<ProposalIndex>>& items, std::size_t m) {
  if (items.size() != m)
    throw ParseError(line, "ballot ranks " + std::to_string(items.size()) + " proposals, expected " + std::to_string(m));
  std::vector<bool> seen(m, false);
  std::vector<ProposalIndex> order;
  for (const auto& item : items) {
    if (!item) throw ParseError(line, "unknown proposal in ballot");
    if (seen[*item]) throw ParseError(line, "proposal listed twice in ballot");
    seen[*item] = true;
    order.push_back(*item);
  }
  return Ranking(std::move(order));
}

ProfileDocument parse_soc(std::string_view text, std::string source) {
  std::map<std::size_t, std::string> names;
  std::optional<std::size_t> declared;
  std::optional<std::string> title;
  struct Ballot {
    std::size_t line, count;
    std::vector<std::optional<std::size_t>> items;
  };
  std::vector<Ballot> ballots;

  const auto lines = lines_of(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto lineno = i + 1;
    const auto line = trim(lines[i]);
    if (line.empty()) continue;
    if (line.front() == '#') {
      const auto body = trim(line.substr(1));
      const auto colon = body.find(':');
      if (colon == std::string_view::npos) continue;
      const auto key = trim(body.substr(0, colon));
      const auto value = trim(body.substr(colon + 1));
      if (key == "DATA TYPE" && value != "soc")
        throw ParseError(lineno, "data type '" + std::string(value) +
                                     "' is not supported; only strict complete orders (soc) are accepted");
      if (key == "TITLE") title = std::string(value);
      if (key == "NUMBER ALTERNATIVES") {
        declared = parse_count(value);
        if (!declared || *declared == 0) throw ParseError(lineno, "bad number of alternatives");
      }
      if (key.starts_with("ALTERNATIVE NAME")) {
        const auto idx = parse_count(trim(key.substr(16)));
        if (!idx || *idx == 0) throw ParseError(lineno, "bad alternative number");
        if (value.empty()) throw ParseError(lineno, "empty alternative name");
        if (!names.emplace(*idx, std::string(value)).second) throw ParseError(lineno, "alternative named twice");
      }
      continue;
    }
    if (line.find_first_of("{}") != std::string_view::npos)
      throw ParseError(lineno, "tied alternatives are not supported; only strict complete orders are accepted");
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) throw ParseError(lineno, "expected 'count: ballot'");
    const auto count = parse_count(trim(line.substr(0, colon)));
    if (!count) throw ParseError(lineno, "bad ballot count");
    if (*count == 0) throw ParseError(lineno, "ballot count must be positive");
    Ballot ballot{lineno, *count, {}};
    for (auto item : split(line.substr(colon + 1), ',')) {
      const auto idx = parse_count(item);
      if (!idx) throw ParseError(lineno, "bad alternative '" + std::string(item) + "'");
      ballot.items.push_back(*idx);
    }
    ballots.push_back(std::move(ballot));
  }

  std::size_t m = declared.value_or(names.empty() ? 0 : names.rbegin()->first);
  if (m == 0) throw ParseError(1, "no alternatives declared");
  std::vector<std::string> labels;
  for (std::size_t a = 1; a <= m; ++a) {
    auto it = names.find(a);
    if (it == names.end()) {
      if (!names.empty()) throw ParseError(1, "alternative " + std::to_string(a) + " has no name");
      labels.push_back(std::to_string(a));
    } else {
      labels.push_back(it->second);
    }
  }
  if (names.size() > m) throw ParseError(1, "more alternative names than alternatives");
  if (ballots.empty()) throw ParseError(lines.size(), "no ballots");

  std::vector<Entry> entries;
  AgentId next = 0;
  for (const auto& b : ballots) {
    std::vector<std::optional<ProposalIndex>> items;
    for (const auto& item : b.items)
      items.push_back(*item >= 1 && *item <= m ? std::optional<ProposalIndex>(*item - 1) : std::nullopt);
    const auto ranking = ranking_from(b.line, items, m);
    for (std::size_t c = 0; c < b.count; ++c) entries.push_back({next++, ranking});
  }
  return {std::move(source), ProfileFormat::preflib_soc, Profile(ProposalSet(labels), std::move(entries)), title};
}

ProfileDocument parse_lines(std::string_view text, std::string source) {
  std::optional<ProposalSet> proposals;
  std::optional<std::string> title;
  std::vector<Entry> entries;
  AgentId next = 0;

  const auto lines = lines_of(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto lineno = i + 1;
    auto line = lines[i];
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.starts_with("proposals:")) {
      if (proposals) throw ParseError(lineno, "proposals declared twice or after the first ballot");
      std::vector<std::string> labels;
      std::string body(line.substr(10));
      std::replace(body.begin(), body.end(), ',', ' ');
      std::istringstream in(body);
      for (std::string label; in >> label;) labels.push_back(label);
      try {
        proposals.emplace(labels);
      } catch (const InputError& e) {
        throw ParseError(lineno, e.what());
      }
      continue;
    }
    if (line.starts_with("title:")) {
      title = std::string(trim(line.substr(6)));
      continue;
    }

    std::size_t count = 1;
    const auto digits = std::find_if_not(line.begin(), line.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    if (digits != line.begin()) {
      auto rest = line.substr(static_cast<std::size_t>(digits - line.begin()));
      const auto is_marker = [](char c) { return c == 'x' || c == 'X' || c == '*'; };
      const auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
      bool has_x = !rest.empty() && is_marker(rest.front());
      if (has_x) rest.remove_prefix(1);
      if (!has_x && !rest.empty() && is_space(rest.front())) {
        // "k x a>b": a spaced marker, unless x is the first label of the ballot.
        const auto spaced = trim(rest);
        if (spaced.size() > 1 && is_marker(spaced.front()) && is_space(spaced[1])) rest = spaced.substr(1);
        has_x = true;
      }
      if (has_x) {
        const auto parsed = parse_count(line.substr(0, static_cast<std::size_t>(digits - line.begin())));
        if (!parsed) throw ParseError(lineno, "bad multiplier");
        if (*parsed == 0) throw ParseError(lineno, "multiplier must be positive");
        count = *parsed;
        line = trim(rest);
      }
    }

    const auto labels = split(line, '>');
    if (!proposals) {
      std::vector<std::string> names;
      for (auto l : labels) names.emplace_back(l);
      try {
        proposals.emplace(names);
      } catch (const InputError& e) {
        throw ParseError(lineno, e.what());
      }
    }
    std::vector<std::optional<ProposalIndex>> items;
    for (auto l : labels) items.push_back(proposals->find(l));
    const auto ranking = ranking_from(lineno, items, proposals->size());
    for (std::size_t c = 0; c < count; ++c) entries.push_back({next++, ranking});
  }
  if (!proposals || entries.empty()) throw ParseError(lines.size(), "no ballots");
  return {std::move(source), ProfileFormat::native_lines, Profile(*proposals, std::move(entries)), title};
}

template <typename Emit>
void for_each_run(const Profile& profile, Emit&& emit) {
  const auto entries = profile.entries();
  for (std::size_t i = 0; i < entries.size();) {
    std::size_t j = i;
    while (j < entries.size() && entries[j].ranking == entries[i].ranking) ++j;
    emit(j - i, entries[i].ranking);
    i = j;
  }
}

}  // namespace

ProfileDocument parse_profile(std::string_view text, ProfileFormat format, std::string source) {
  return format == ProfileFormat::preflib_soc ? parse_soc(text, std::move(source))
                                              : parse_lines(text, std::move(source));
}

std::string emit_profile(const Profile& profile, ProfileFormat format, const std::optional<std::string>& title) {
  const auto& names = profile.proposals();
  std::ostringstream out;
  if (format == ProfileFormat::preflib_soc) {
    std::size_t unique = 0;
    for_each_run(profile, [&](std::size_t, const Ranking&) { ++unique; });
    if (title) out << "# TITLE: " << *title << '\n';
    out << "# DATA TYPE: soc\n";
    out << "# NUMBER ALTERNATIVES: " << names.size() << '\n';
    for (std::size_t a = 0; a < names.size(); ++a) out << "# ALTERNATIVE NAME " << a + 1 << ": " << names.name(a) << '\n';
    out << "# NUMBER VOTERS: " << profile.size() << '\n';
    out << "# NUMBER UNIQUE ORDERS: " << unique << '\n';
    for_each_run(profile, [&](std::size_t count, const Ranking& r) {
      out << count << ':';
      for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : " ") << r.at(i) + 1;
      out << '\n';
    });
  } else {
    for (const auto& n : names.names())
      if (n.find_first_of(" \t>,#") != std::string::npos)
        throw InputError("label '" + n + "' cannot be written in the lines format");
    if (title) out << "title: " << *title << '\n';
    out << "proposals:";
    for (const auto& n : names.names()) out << ' ' << n;
    out << '\n';
    for_each_run(profile, [&](std::size_t count, const Ranking& r) {
      if (count > 1) out << count << "x ";
      for (std::size_t i = 0; i < r.size(); ++i) out << (i ? ">" : "") << names.name(r.at(i));
      out << '\n';
    });
  }
  return out.str();
}

ProfileDocument read_profile_file(const std::filesystem::path& path, std::optional<ProfileFormat> format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const auto fmt = format.value_or(path.extension() == ".soc" ? ProfileFormat::preflib_soc : ProfileFormat::native_lines);
  return parse_profile(buffer.str(), fmt, path.string());
}

}  // namespace divisive
