#pragma once

#include "divisive/profile.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace divisive {

enum class ProfileFormat { preflib_soc, native_lines };

/// "soc" or "lines".
ProfileFormat parse_format(std::string_view text);
std::string to_string(ProfileFormat format);

struct ProfileDocument {
  std::string source;
  ProfileFormat format;
  Profile profile;
  std::optional<std::string> title;
};

/// Agents are numbered from 0 in file order. Throws ParseError (with the line) on malformed input.
///
/// preflib_soc: `# ALTERNATIVE NAME i: label` headers (or `# NUMBER ALTERNATIVES: m` with labels
/// "1".."m"), then `count: i1,i2,...` ballots over 1-based alternative numbers.
/// native_lines: optional `proposals: a b c` header, then `[k x] a>b>c` per line; `#` starts a comment.
/// Without a header the first ballot fixes the proposal order.
ProfileDocument parse_profile(std::string_view text, ProfileFormat format, std::string source = "");

/// Consecutive identical rankings are merged into one counted ballot, so parsing the output
/// yields the same profile whenever agent ids are 0..n-1 in order.
std::string emit_profile(const Profile& profile, ProfileFormat format, const std::optional<std::string>& title = {});

/// Reads a file; the format defaults to soc for a .soc extension and lines otherwise.
ProfileDocument read_profile_file(const std::filesystem::path& path, std::optional<ProfileFormat> format = {});

}  // namespace divisive
