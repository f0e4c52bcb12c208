#include "doctest.h"

#include "protogen/frontend.hpp"
#include "protogen/pipeline.hpp"
#include "protogen/validate.hpp"
#include "support/fixtures.hpp"

using namespace protogen;
using test::read_fixture;

namespace {

std::vector<Diagnostic> validate_text(std::string_view text,
                                      std::size_t index = 0) {
  const auto spec = load_spec(text);
  const auto &cls = spec.classes.at(index);
  return validate(build_class_automata(cls).annotated, cls);
}

} // namespace

TEST_CASE("validate: multi_type has exactly one MULTI_TYPE_EDGES") {
  const auto diags = validate_text(read_fixture("multi_type.spec"));
  REQUIRE(diags.size() == 1);
  const auto &d = diags[0];
  CHECK(d.code == DiagCode::MultiTypeEdges);
  CHECK(d.severity == Severity::Error);
  CHECK(d.state == 2u);
  CHECK(d.class_name == "SingletonCollection");
  CHECK(d.pos == SourcePos{2, 3});
  CHECK(d.related == std::vector<SourcePos>{{3, 3}});
  CHECK(d.message ==
        "state 2 of class 'SingletonCollection' consumes 2 different types "
        "(List<E>, Set<E>); chains accepting the same methods must return the "
        "same type");
}

TEST_CASE("validate: mixed_edges has exactly one MIXED_EDGES") {
  const auto diags = validate_text(read_fixture("mixed_edges.spec"));
  REQUIRE(diags.size() == 1);
  const auto &d = diags[0];
  CHECK(d.code == DiagCode::MixedEdges);
  CHECK(d.state == 1u);
  CHECK(d.pos == SourcePos{2, 3});
  CHECK(d.related.empty());
  CHECK(d.message ==
        "state 1 of class 'StrMapBuilder' both ends a chain (Map<String, "
        "String>) and continues it (add(String k, String v)); a method cannot "
        "return both");
}

TEST_CASE("validate: accepted specs produce no diagnostics") {
  for (const char *name : {"ourapi.spec", "ourapi_evaluator.spec",
                           "matrix.spec", "matrix_verbatim.spec",
                           "itemize.spec", "assertj.spec"}) {
    const auto spec = load_spec(read_fixture(name));
    for (const auto &cls : spec.classes)
      CHECK_MESSAGE(validate(build_class_automata(cls).annotated, cls).empty(),
                    name << " " << cls.name);
  }
}

TEST_CASE("validate: both defects in one state") {
  const auto diags =
      validate_text("class A { T1 f(); T2 f(); T3 f() g(); }");
  REQUIRE(diags.size() == 2);
  CHECK(diags[0].code == DiagCode::MultiTypeEdges);
  CHECK(diags[0].related == std::vector<SourcePos>{{1, 19}});
  CHECK(diags[1].code == DiagCode::MixedEdges);
  CHECK(diags[1].related.size() == 2);
}

TEST_CASE("validate: STATIC_CONFLICT") {
  const auto diags = validate_text("class A { static T f() g(); T f() h(); }");
  REQUIRE(diags.size() == 1);
  CHECK(diags[0].code == DiagCode::StaticConflict);
  CHECK(diags[0].state == 0u);
  CHECK(diags[0].message ==
        "method 'f()' starts both static and non-static chains of class 'A'");

  CHECK(validate_text("class A { static T f() g(); static T f() h(); }")
            .empty());
  CHECK(validate_text("class A { static T f(); U g(); }").empty());
}

TEST_CASE("validate: PARAM_NAME_MISMATCH is a warning") {
  const auto diags = validate_text(
      "class A { T f(String a) g(); T f(String b) g(); T f(String c) g(); }");
  REQUIRE(diags.size() == 1);
  CHECK(diags[0].code == DiagCode::ParamNameMismatch);
  CHECK(diags[0].severity == Severity::Warning);
  CHECK(diags[0].pos == SourcePos{1, 32});
  CHECK(diags[0].related == std::vector<SourcePos>{{1, 13}});
  CHECK_FALSE(has_errors(diags));
}

TEST_CASE("diagnostics: text and JSON formats") {
  const auto diags = validate_text(read_fixture("multi_type.spec"));
  CHECK(format_diagnostic(diags[0], "multi_type.spec").starts_with(
      "error MULTI_TYPE_EDGES multi_type.spec:2:3 state 2 of class "));
  const auto j = diagnostics_to_json(diags, "multi_type.spec");
  REQUIRE(j.size() == 1);
  CHECK(j[0]["severity"] == "error");
  CHECK(j[0]["code"] == "MULTI_TYPE_EDGES");
  CHECK(j[0]["file"] == "multi_type.spec");
  CHECK(j[0]["line"] == 2);
  CHECK(j[0]["column"] == 3);
  CHECK(j[0]["class"] == "SingletonCollection");
  CHECK(j[0]["state"] == 2);
  CHECK(j[0]["related"][0]["line"] == 3);
  std::vector<std::string> keys;
  for (const auto &[k, v] : j[0].items())
    keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"severity", "code", "file", "line",
                                         "column", "message", "class", "state",
                                         "related"});

  Diagnostic warn;
  warn.code = DiagCode::ParamNameMismatch;
  warn.severity = Severity::Warning;
  warn.pos = {4, 7};
  warn.message = "m";
  CHECK(format_diagnostic(warn, "x.spec") ==
        "warning PARAM_NAME_MISMATCH x.spec:4:7 m");
}

TEST_CASE("diagnostics: code names are stable") {
  CHECK(code_name(DiagCode::LexError) == "LEX_ERROR");
  CHECK(code_name(DiagCode::ParseError) == "PARSE_ERROR");
  CHECK(code_name(DiagCode::DuplicateClass) == "DUPLICATE_CLASS");
  CHECK(code_name(DiagCode::DuplicateTypeParam) == "DUPLICATE_TYPE_PARAM");
  CHECK(code_name(DiagCode::MultiTypeEdges) == "MULTI_TYPE_EDGES");
  CHECK(code_name(DiagCode::MixedEdges) == "MIXED_EDGES");
  CHECK(code_name(DiagCode::StaticConflict) == "STATIC_CONFLICT");
  CHECK(code_name(DiagCode::ParamNameMismatch) == "PARAM_NAME_MISMATCH");
}

TEST_CASE("pipeline: generation runs iff there are no errors") {
  const auto bad = compile_spec(read_fixture("multi_type.spec"));
  CHECK_FALSE(bad.ok());
  CHECK_FALSE(bad.model);
  CHECK(bad.files.empty());

  const auto warn = compile_spec(
      "class A { T f(String a) g(); T f(String b) h(); }");
  CHECK(warn.ok());
  CHECK(warn.diagnostics.size() == 1);
  CHECK(warn.model);

  const auto checked = compile_spec(read_fixture("ourapi.spec"), {true, {}});
  CHECK(checked.ok());
  CHECK_FALSE(checked.model);
  CHECK(checked.files.empty());

  const auto parse = compile_spec("class A {");
  CHECK_FALSE(parse.ok());
  CHECK_FALSE(parse.spec);
  CHECK(parse.diagnostics[0].code == DiagCode::ParseError);
}
