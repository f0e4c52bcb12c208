#include "support/fixtures.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace protogen::test {

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::runtime_error("cannot read " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::string read_fixture(std::string_view name) {
  return read_file(std::string(PROTOGEN_FIXTURE_DIR) + "/" + std::string(name));
}

const std::vector<std::string> &property_fixtures() {
  static const std::vector<std::string> names{
      "ourapi.spec", "matrix.spec", "itemize.spec",
      "assertj.spec", "multi_type.spec", "mixed_edges.spec"};
  return names;
}

bool matches_golden(std::string_view name, const std::string &actual) {
  const std::string path =
      std::string(PROTOGEN_GOLDEN_DIR) + "/" + std::string(name);
  const char *update = std::getenv("PROTOGEN_UPDATE_GOLDEN");
  if (update && std::string_view(update) == "1") {
    std::ofstream(path, std::ios::binary) << actual;
    return true;
  }
  try {
    return read_file(path) == actual;
  } catch (const std::runtime_error &) {
    return false;
  }
}

std::string normalize_whitespace(std::string_view text) {
  std::string out;
  bool pending = false;
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      pending = !out.empty();
      continue;
    }
    if (pending)
      out += ' ';
    pending = false;
    out += c;
  }
  return out;
}

} // namespace protogen::test
