#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "protogen/api_model.hpp"
#include "protogen/binding.hpp"

namespace protogen {

struct RenderedFile {
  std::string relative_path;
  std::string contents;

  friend bool operator==(const RenderedFile &, const RenderedFile &) = default;
};

struct RenderOptions {
  enum class Layout {
    Flat,               // every file directly under the output directory
    PackageDirectories, // a/b/C.java for package a.b
  };

  std::optional<std::string> package_name;
  Layout layout = Layout::PackageDirectories;
};

/// One Java file per ClassDef and NodeDef, plus Node.java and Visitor.java,
/// in a fixed order.
std::vector<RenderedFile> render(const ApiModel &model,
                                 const RenderOptions &options = {});

/// Graphviz digraph; states are labeled with their id and bound set.
std::string render_dot(const AnnotatedDfa &annotated,
                       std::string_view graph_name = "dfa");

} // namespace protogen
