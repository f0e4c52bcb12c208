#include "protogen/diagnostic.hpp"

#include <algorithm>

namespace protogen {

std::string_view code_name(DiagCode code) {
  switch (code) {
  case DiagCode::LexError:
    return "LEX_ERROR";
  case DiagCode::ParseError:
    return "PARSE_ERROR";
  case DiagCode::DuplicateClass:
    return "DUPLICATE_CLASS";
  case DiagCode::DuplicateTypeParam:
    return "DUPLICATE_TYPE_PARAM";
  case DiagCode::MultiTypeEdges:
    return "MULTI_TYPE_EDGES";
  case DiagCode::MixedEdges:
    return "MIXED_EDGES";
  case DiagCode::StaticConflict:
    return "STATIC_CONFLICT";
  case DiagCode::ParamNameMismatch:
    return "PARAM_NAME_MISMATCH";
  }
  return "UNKNOWN";
}

std::string_view severity_name(Severity severity) {
  return severity == Severity::Error ? "error" : "warning";
}

std::string format_diagnostic(const Diagnostic &diag, std::string_view file) {
  std::string out;
  out += severity_name(diag.severity);
  out += ' ';
  out += code_name(diag.code);
  out += ' ';
  out += file;
  out += ':' + std::to_string(diag.pos.line) + ':' +
         std::to_string(diag.pos.column) + ' ';
  out += diag.message;
  return out;
}

nlohmann::ordered_json diagnostics_to_json(std::span<const Diagnostic> diags,
                                           std::string_view file) {
  auto list = nlohmann::ordered_json::array();
  for (const auto &d : diags) {
    nlohmann::ordered_json j;
    j["severity"] = severity_name(d.severity);
    j["code"] = code_name(d.code);
    j["file"] = file;
    j["line"] = d.pos.line;
    j["column"] = d.pos.column;
    j["message"] = d.message;
    if (d.class_name)
      j["class"] = *d.class_name;
    if (d.state)
      j["state"] = *d.state;
    if (!d.related.empty()) {
      auto rel = nlohmann::ordered_json::array();
      for (const auto &p : d.related)
        rel.push_back({{"line", p.line}, {"column", p.column}});
      j["related"] = std::move(rel);
    }
    if (!d.expected.empty())
      j["expected"] = d.expected;
    list.push_back(std::move(j));
  }
  return list;
}

bool has_errors(std::span<const Diagnostic> diags) {
  return std::ranges::any_of(
      diags, [](const Diagnostic &d) { return d.severity == Severity::Error; });
}

namespace {

std::string summarize(const std::vector<Diagnostic> &diags) {
  if (diags.empty())
    return "spec error";
  const auto &d = diags.front();
  return std::string(code_name(d.code)) + " at " + std::to_string(d.pos.line) +
         ":" + std::to_string(d.pos.column) + ": " + d.message;
}

} // namespace

SpecError::SpecError(std::vector<Diagnostic> diags)
    : std::runtime_error(summarize(diags)), diags_(std::move(diags)) {
  if (diags_.empty())
    throw std::invalid_argument("SpecError requires at least one diagnostic");
}

} // namespace protogen
