#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace protogen::test {

/// Result of checking one Java compilation unit against the subset of the
/// language the generator emits: one top-level class with fields,
/// constructors, methods, local declarations, returns, throws, for-each
/// loops, calls and `new` expressions.
struct JavaUnit {
  bool ok = false;
  std::string error;
  std::string package_name;
  std::string class_name;
  std::string class_header; // normalized, without access modifiers
  std::vector<std::string> methods; // normalized signatures, no access modifiers
  std::set<std::string> type_params;  // every declared type variable
  std::set<std::string> referenced_types; // names in type positions
};

JavaUnit check_java(std::string_view source);

/// Token texts joined by single spaces; comments dropped.
std::string normalize_java(std::string_view source);

} // namespace protogen::test
