#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace protogen::test {

std::string read_file(const std::string &path);
std::string read_fixture(std::string_view name);

/// The six specs used by the property suites.
const std::vector<std::string> &property_fixtures();

/// Compares against tests/golden/<name>; rewrites the file instead when
/// PROTOGEN_UPDATE_GOLDEN=1. Returns true on match (or after rewriting).
bool matches_golden(std::string_view name, const std::string &actual);

std::string normalize_whitespace(std::string_view text);

} // namespace protogen::test
