#include "protogen/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "protogen/pipeline.hpp"

namespace protogen::cli {
namespace {

namespace fs = std::filesystem;

constexpr std::string_view kSynopsis =
    "usage: protogen <spec> -o <dir> [--package <name>] [--emit-dot <path>]\n"
    "                [--check-only] [--json-diagnostics]\n";

void make_app(CLI::App &app, CliOptions &opts) {
  app.add_option("spec", opts.spec_path, "Specification file")->required();
  app.add_option("-o,--out", opts.out_dir, "Output directory");
  app.add_option("--package", opts.package_name, "Java package of the output");
  app.add_option("--emit-dot", opts.emit_dot_path,
                 "Write the annotated automata as Graphviz DOT");
  app.add_flag("--check-only", opts.check_only,
               "Validate the specification without writing files");
  app.add_flag("--json-diagnostics", opts.json_diagnostics,
               "Print diagnostics as JSON on standard output");
}

bool write_file(const fs::path &path, const std::string &contents,
                std::ostream &err) {
  std::error_code ec;
  if (path.has_parent_path())
    fs::create_directories(path.parent_path(), ec);
  std::ofstream file(path, std::ios::binary);
  file << contents;
  file.close();
  if (ec || !file) {
    err << "error: cannot write '" << path.string() << "'\n";
    return false;
  }
  return true;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err) {
  if (args.empty()) {
    err << kSynopsis;
    return kExitUsage;
  }

  CliOptions opts;
  CLI::App app{"Generates a typed Java fluent API from a chain specification",
               "protogen"};
  make_app(app, opts);
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << "\n" << kSynopsis;
    return kExitUsage;
  }
  if (opts.out_dir.empty() && !opts.check_only) {
    err << "error: --out is required unless --check-only is given\n"
        << kSynopsis;
    return kExitUsage;
  }

  std::ifstream in(opts.spec_path, std::ios::binary);
  if (!in) {
    err << "error: cannot read '" << opts.spec_path << "'\n";
    return kExitUsage;
  }
  std::ostringstream text;
  text << in.rdbuf();

  CompileOptions compile;
  compile.check_only = opts.check_only;
  compile.render.package_name = opts.package_name;
  CompileResult result;
  try {
    result = compile_spec(text.str(), compile);
  } catch (const InternalError &e) {
    err << "error: " << e.what() << "\n";
    return kExitSpecError;
  }

  if (opts.json_diagnostics)
    out << diagnostics_to_json(result.diagnostics, opts.spec_path).dump(2)
        << "\n";
  else
    for (const auto &d : result.diagnostics)
      err << format_diagnostic(d, opts.spec_path) << "\n";

  if (!result.ok())
    return kExitSpecError;
  if (opts.check_only)
    return kExitOk;

  for (const auto &file : result.files)
    if (!write_file(fs::path(opts.out_dir) / file.relative_path, file.contents,
                    err))
      return kExitUsage;
  if (opts.emit_dot_path && !write_file(*opts.emit_dot_path, result.dot(), err))
    return kExitUsage;
  return kExitOk;
}

} // namespace protogen::cli
