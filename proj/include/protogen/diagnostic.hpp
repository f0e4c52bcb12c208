#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "protogen/spec_model.hpp"

namespace protogen {

enum class DiagCode {
  LexError,
  ParseError,
  DuplicateClass,
  DuplicateTypeParam,
  MultiTypeEdges,
  MixedEdges,
  StaticConflict,
  ParamNameMismatch,
};

enum class Severity { Error, Warning };

struct Diagnostic {
  DiagCode code = DiagCode::ParseError;
  Severity severity = Severity::Error;
  SourcePos pos;
  std::string message;
  std::optional<std::string> class_name;
  std::optional<StateId> state;
  std::vector<SourcePos> related;     // spans of contributing chain declarations
  std::vector<std::string> expected;  // parse errors: acceptable tokens
};

/// Stable machine-readable code, e.g. "MULTI_TYPE_EDGES".
std::string_view code_name(DiagCode code);
std::string_view severity_name(Severity severity);

/// `<severity> <code> <file>:<line>:<col> <message>`
std::string format_diagnostic(const Diagnostic &diag, std::string_view file);

nlohmann::ordered_json diagnostics_to_json(std::span<const Diagnostic> diags,
                                           std::string_view file);

bool has_errors(std::span<const Diagnostic> diags);

/// Thrown by the front end (lex, parse, resolve). Carries every diagnostic
/// found before giving up.
class SpecError : public std::runtime_error {
public:
  explicit SpecError(std::vector<Diagnostic> diags);

  const std::vector<Diagnostic> &diagnostics() const noexcept {
    return diags_;
  }
  DiagCode code() const noexcept { return diags_.front().code; }
  SourcePos pos() const noexcept { return diags_.front().pos; }

private:
  std::vector<Diagnostic> diags_;
};

/// Raised when a stage is fed input that an earlier stage should have
/// rejected, or when generated names collide.
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace protogen
