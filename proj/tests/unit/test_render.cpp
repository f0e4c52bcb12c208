#include <random>

#include "doctest.h"

#include "protogen/frontend.hpp"
#include "protogen/pipeline.hpp"
#include "support/fixtures.hpp"
#include "support/java_check.hpp"
#include "support/random_spec.hpp"

using namespace protogen;
using test::read_fixture;

namespace {

const std::vector<std::string> kAccepted{
    "ourapi.spec", "ourapi_evaluator.spec", "matrix.spec",
    "matrix_verbatim.spec", "itemize.spec", "assertj.spec"};

CompileResult generate(std::string_view text, RenderOptions render = {}) {
  CompileOptions options;
  options.render = std::move(render);
  auto result = compile_spec(text, options);
  REQUIRE_MESSAGE(result.ok(), text);
  return result;
}

const RenderedFile *file(const CompileResult &r, std::string_view path) {
  for (const auto &f : r.files)
    if (f.relative_path == path)
      return &f;
  return nullptr;
}

void collect_external(const TypeRef &t, std::set<std::string> &out) {
  if (t.resolution == Resolution::External)
    out.insert(t.name);
  for (const auto &a : t.args)
    collect_external(a, out);
}

std::set<std::string> external_names(const SpecModel &spec) {
  std::set<std::string> out;
  for (const auto &cls : spec.classes) {
    for (const auto &p : cls.type_params())
      for (const auto &b : p.bounds)
        collect_external(b, out);
    for (const auto &chain : cls.chains) {
      collect_external(chain.return_type, out);
      for (const auto *m : method_leaves(chain.expr))
        for (const auto &p : m->params)
          collect_external(p.type, out);
    }
  }
  return out;
}

// Parses every file back and checks that each name in a type position is a
// generated class, a type variable of that file, a spec-level external type
// or one of the few library types the runtime uses.
void check_files(const CompileResult &r,
                 const std::optional<std::string> &package = std::nullopt) {
  std::set<std::string> generated;
  for (const auto &f : r.files) {
    const auto slash = f.relative_path.rfind('/');
    const auto base = f.relative_path.substr(slash == std::string::npos ? 0 : slash + 1);
    generated.insert(base.substr(0, base.size() - 5));
  }
  const auto external = external_names(*r.spec);
  const std::set<std::string> library{
      "List", "ArrayList", "Collections", "Object", "UnsupportedOperationException"};
  for (const auto &f : r.files) {
    const auto unit = test::check_java(f.contents);
    REQUIRE_MESSAGE(unit.ok, f.relative_path << ": " << unit.error);
    CHECK(f.relative_path.ends_with(unit.class_name + ".java"));
    CHECK(unit.package_name == package.value_or(""));
    CHECK(f.contents.starts_with("// Generated by protogen. Do not edit.\n"));
    for (const auto &t : unit.referenced_types) {
      const bool known = generated.contains(t) || unit.type_params.contains(t) ||
                         external.contains(t) || library.contains(t);
      CHECK_MESSAGE(known, f.relative_path << " references " << t);
    }
  }
}

std::string concat(const std::vector<RenderedFile> &files) {
  std::string out;
  for (const auto &f : files)
    out += "==== " + f.relative_path + "\n" + f.contents;
  return out;
}

std::string signature_summary(const std::vector<RenderedFile> &files) {
  std::string out;
  for (const auto &f : files) {
    const auto unit = test::check_java(f.contents);
    out += unit.class_header + "\n";
    for (const auto &m : unit.methods)
      out += "    " + m + "\n";
  }
  return out;
}

} // namespace

TEST_CASE("render: OurAPI files parse and match the published signatures") {
  const auto r = generate(read_fixture("ourapi.spec"));
  std::vector<std::string> paths;
  for (const auto &f : r.files)
    paths.push_back(f.relative_path);
  CHECK(paths == std::vector<std::string>{
                     "OurAPI.java", "State1.java", "State2.java", "Node.java",
                     "Method_newMap.java", "Method_put.java",
                     "Method_build.java", "Object_Map.java", "Visitor.java"});
  check_files(r);

  const auto ourapi = test::check_java(file(r, "OurAPI.java")->contents);
  CHECK(ourapi.class_header == "class OurAPI");
  CHECK(ourapi.methods == std::vector<std::string>{"static State1 newMap ( )"});
  const auto state1 = test::check_java(file(r, "State1.java")->contents);
  CHECK(state1.class_header == "class State1");
  CHECK(state1.methods ==
        std::vector<std::string>{
            "< K , V > State2 < K , V > put ( K key , V value )",
            "< K , V > Map < K , V > build ( )"});
  const auto state2 = test::check_java(file(r, "State2.java")->contents);
  CHECK(state2.class_header == "class State2 < K , V >");
  CHECK(state2.methods ==
        std::vector<std::string>{"State2 < K , V > put ( K key , V value )",
                                 "Map < K , V > build ( )"});
}

TEST_CASE("render: every accepted fixture yields well-formed Java") {
  for (const auto &name : kAccepted) {
    INFO(name);
    check_files(generate(read_fixture(name)));
    RenderOptions opts;
    opts.package_name = "com.example.api";
    const auto r = generate(read_fixture(name), opts);
    check_files(r, opts.package_name);
    for (const auto &f : r.files)
      CHECK(f.relative_path.starts_with("com/example/api/"));
  }
}

TEST_CASE("render: random specs yield well-formed Java") {
  std::mt19937 rng(41);
  test::RandomSpecOptions opts;
  opts.decorations = true;
  opts.max_classes = 2;
  int generated = 0;
  for (int i = 0; i < 3000 && generated < 150; ++i) {
    const auto text = print_spec(test::random_spec(rng, opts));
    const auto r = compile_spec(text);
    if (!r.ok())
      continue;
    ++generated;
    INFO(text);
    check_files(r);
  }
  CHECK(generated == 150);
}

TEST_CASE("render: output is deterministic") {
  for (const auto &name : kAccepted) {
    const auto a = generate(read_fixture(name));
    const auto b = generate(read_fixture(name));
    CHECK(a.files == b.files);
    CHECK(render(*a.model) == a.files);
    CHECK(a.dot() == b.dot());
  }
}

TEST_CASE("render: package and layout") {
  const auto plain = generate(read_fixture("ourapi.spec"));
  for (const auto &f : plain.files)
    CHECK(f.contents.find("package ") == std::string::npos);

  RenderOptions flat;
  flat.package_name = "ourapi";
  flat.layout = RenderOptions::Layout::Flat;
  const auto r = generate(read_fixture("ourapi.spec"), flat);
  REQUIRE(file(r, "OurAPI.java"));
  CHECK(file(r, "OurAPI.java")->contents.starts_with(
      "// Generated by protogen. Do not edit.\npackage ourapi;\n\nimport "
      "java.util.*;\n\n"));

  RenderOptions nested;
  nested.package_name = "ourapi";
  CHECK(file(generate(read_fixture("ourapi.spec"), nested), "ourapi/Node.java"));
}

TEST_CASE("render: terminal bodies build the tree before acting") {
  const auto r = generate(read_fixture("assertj.spec"));
  const auto body = test::normalize_java(file(r, "PredicateAssert.java")->contents);
  CHECK(body.find(
            "public PredicateAssert startsWith ( String s ) { "
            "Method_startsWith method_startswith = new Method_startsWith ( s ) ; "
            "Object_PredicateAssert object_predicateassert = new "
            "Object_PredicateAssert ( Node . append ( this . nodes , "
            "method_startswith ) ) ; "
            "Action . startsWith ( object_predicateassert ) ; "
            "return new PredicateAssert ( Node . append ( List . of ( ) , "
            "object_predicateassert ) ) ; }") != std::string::npos);

  const auto ev = generate(read_fixture("ourapi_evaluator.spec"));
  const auto state2 = test::normalize_java(file(ev, "State2.java")->contents);
  CHECK(state2.find("return Evaluator . buildMap ( object_map ) ;") !=
        std::string::npos);
  const auto ourapi = test::normalize_java(file(ev, "OurAPI.java")->contents);
  CHECK(ourapi.find("Node . append ( List . of ( ) , method_newmap )") !=
        std::string::npos);

  const auto plain = generate(read_fixture("ourapi.spec"));
  CHECK(file(plain, "State2.java")->contents.find(
            "throw new UnsupportedOperationException(\"no evaluator for "
            "build()\");") != std::string::npos);
}

TEST_CASE("render: step actions receive the method node") {
  const auto r = generate("class A { T f() { Act.f; } g(); }");
  const auto a = test::normalize_java(file(r, "A.java")->contents);
  CHECK(a.find("Act . f ( method_f ) ; return new State1 ( Node . append ( "
               "this . nodes , method_f ) ) ;") != std::string::npos);
}

TEST_CASE("render: void evaluators are called without return") {
  const auto r = generate("class A { void f() return E.run; }");
  const auto a = test::normalize_java(file(r, "A.java")->contents);
  CHECK(a.find("public void f ( ) {") != std::string::npos);
  CHECK(a.find("E . run ( object_void ) ; }") != std::string::npos);
  CHECK(a.find("return E . run") == std::string::npos);
}

TEST_CASE("render: locals never shadow parameters") {
  const auto r = generate("class A { T put(String method_put, String method_put_); }");
  check_files(r);
  const auto a = test::normalize_java(file(r, "A.java")->contents);
  CHECK(a.find("Method_put method_put__ = new Method_put ( method_put , "
               "method_put_ ) ;") != std::string::npos);
}

TEST_CASE("render: runtime support files") {
  const auto r = generate(read_fixture("ourapi.spec"));
  const auto node = test::check_java(file(r, "Node.java")->contents);
  CHECK(node.class_header == "abstract class Node");
  CHECK(node.methods ==
        std::vector<std::string>{
            "abstract void accept ( Visitor visitor )",
            "List < Node > children ( )",
            "static List < Node > append ( List < Node > nodes , Node node )"});
  const auto visitor = test::check_java(file(r, "Visitor.java")->contents);
  CHECK(visitor.methods ==
        std::vector<std::string>{
            "void visit ( Node node )", "void visitChildren ( Node node )",
            "void visitMethod_newMap ( Method_newMap node )",
            "void visitMethod_put ( Method_put node )",
            "void visitMethod_build ( Method_build node )",
            "void visitObject_Map ( Object_Map node )"});
  const auto put = test::check_java(file(r, "Method_put.java")->contents);
  CHECK(put.class_header == "final class Method_put < K , V > extends Node");
  const auto map = test::check_java(file(r, "Object_Map.java")->contents);
  CHECK(map.class_header == "final class Object_Map < K , V > extends Node");
  CHECK(map.methods == std::vector<std::string>{"List < Node > children ( )",
                                                "void accept ( Visitor visitor )"});
}

TEST_CASE("render: matrix and itemize specifics") {
  const auto matrix = generate(read_fixture("matrix.spec"));
  std::size_t mults = 0;
  for (const auto &f : matrix.files) {
    const auto unit = test::check_java(f.contents);
    for (const auto &m : unit.methods)
      if (m.find(" mult (") != std::string::npos) {
        ++mults;
        CHECK(m.starts_with("< NEW_COL extends Size >"));
      }
  }
  CHECK(mults == 4);

  const auto itemize = generate(read_fixture("itemize.spec"));
  CHECK(file(itemize, "Nested.java")->contents.find(
            "public Nested<Nested<X, ITEM>, ITEM> begin(ITEM item)") !=
        std::string::npos);
  CHECK(file(itemize, "Object_X.java"));
}

TEST_CASE("render: DOT") {
  const auto art =
      build_class_automata(load_spec(read_fixture("multi_type.spec")).classes[0]);
  const auto dot = render_dot(art.annotated, "SingletonCollection");
  CHECK(dot.starts_with("digraph SingletonCollection {\n    rankdir=LR;\n"));
  CHECK(dot.find("s2 -> s3 [label=\"List<E>\"];") != std::string::npos);
  CHECK(dot.find("s2 -> s3 [label=\"Set<E>\"];") != std::string::npos);
  CHECK(dot.find("s3 [label=\"3\\n{E}\", shape=doublecircle];") !=
        std::string::npos);
  CHECK(dot.find("s0 [label=\"0\\n∅\"];") != std::string::npos);

  const auto bare = render_dot(art.annotated);
  CHECK(bare.starts_with("digraph dfa {"));
}

TEST_CASE("render: golden files") {
  const auto r = generate(read_fixture("ourapi.spec"));
  CHECK(test::matches_golden("ourapi_signatures.txt", signature_summary(r.files)));

  RenderOptions opts;
  opts.package_name = "ourapi";
  const auto ev = generate(read_fixture("ourapi_evaluator.spec"), opts);
  CHECK(test::matches_golden("ourapi_java.txt", concat(ev.files)));
  CHECK(test::matches_golden("ourapi.dot", r.dot()));
  CHECK(test::matches_golden("matrix.dot", generate(read_fixture("matrix.spec")).dot()));
}
