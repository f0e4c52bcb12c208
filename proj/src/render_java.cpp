#include "protogen/render_java.hpp"

#include <algorithm>
#include <cctype>

namespace protogen {
namespace {

constexpr std::string_view kIndent = "    ";

std::string lower(std::string s) {
  for (auto &c : s)
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

std::string type_params(const std::vector<TypeParamDecl> &params) {
  if (params.empty())
    return "";
  std::string out = "<";
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i)
      out += ", ";
    out += params[i].name;
    for (std::size_t b = 0; b < params[i].bounds.size(); ++b)
      out += (b ? " & " : " extends ") + to_string(params[i].bounds[b]);
  }
  return out + ">";
}

std::string param_list(const std::vector<MethodParam> &params) {
  std::string out;
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i)
      out += ", ";
    out += to_string(params[i].type) + (params[i].vararg ? "... " : " ") +
           params[i].name;
  }
  return out;
}

std::string arg_list(const std::vector<MethodParam> &params) {
  std::string out;
  for (std::size_t i = 0; i < params.size(); ++i)
    out += (i ? ", " : "") + params[i].name;
  return out;
}

std::string field_type(const MethodParam &p) {
  return to_string(p.type) + (p.vararg ? "[]" : "");
}

class JavaWriter {
public:
  explicit JavaWriter(const RenderOptions &options) {
    out_ = "// Generated by protogen. Do not edit.\n";
    if (options.package_name)
      out_ += "package " + *options.package_name + ";\n";
    out_ += "\nimport java.util.*;\n\n";
  }

  void line(int depth, std::string_view text) {
    for (int i = 0; i < depth; ++i)
      out_ += kIndent;
    out_ += text;
    out_ += '\n';
  }
  void blank() { out_ += '\n'; }

  std::string take() { return std::move(out_); }

private:
  std::string out_;
};

// Local variable names must not shadow a parameter of the method.
std::string local_name(const std::string &node,
                       const std::vector<MethodParam> &params) {
  std::string name = lower(node);
  while (std::ranges::any_of(params,
                             [&](const MethodParam &p) { return p.name == name; }))
    name += "_";
  return name;
}

void render_body(JavaWriter &w, const MethodDef &m) {
  const std::string nodes = m.is_static ? "List.of()" : "this.nodes";
  if (m.body.is_terminal()) {
    const auto &plan = m.body.terminal();
    const std::string mvar = local_name(plan.method_node.name, m.params);
    const std::string ovar = local_name(plan.object_node.name, m.params);
    const std::string mtype = to_string(plan.method_node);
    const std::string otype = to_string(plan.object_node);
    w.line(2, mtype + " " + mvar + " = new " + mtype + "(" +
                  arg_list(m.params) + ");");
    w.line(2, otype + " " + ovar + " = new " + otype + "(Node.append(" +
                  nodes + ", " + mvar + "));");
    if (m.body.action)
      w.line(2, *m.body.action + "(" + ovar + ");");
    switch (plan.result) {
    case TerminalPlan::Result::Evaluator:
      if (m.return_type.name == "void" && m.return_type.array_dims == 0)
        w.line(2, *plan.evaluator + "(" + ovar + ");");
      else
        w.line(2, "return " + *plan.evaluator + "(" + ovar + ");");
      break;
    case TerminalPlan::Result::GeneratedInstance:
      w.line(2, "return new " + to_string(m.return_type) +
                    "(Node.append(List.of(), " + ovar + "));");
      break;
    case TerminalPlan::Result::Unsupported:
      w.line(2, "throw new UnsupportedOperationException(\"no evaluator for " +
                    signature_key(m.signature) + "\");");
      break;
    }
    return;
  }
  const auto &plan = m.body.step();
  const std::string mvar = local_name(plan.method_node.name, m.params);
  const std::string mtype = to_string(plan.method_node);
  w.line(2, mtype + " " + mvar + " = new " + mtype + "(" + arg_list(m.params) +
                ");");
  if (m.body.action)
    w.line(2, *m.body.action + "(" + mvar + ");");
  w.line(2, "return new " + to_string(plan.next_state) + "(Node.append(" +
                nodes + ", " + mvar + "));");
}

std::string render_class(const ClassDef &c, const RenderOptions &options) {
  JavaWriter w(options);
  w.line(0, "public class " + c.name + type_params(c.type_params) + " {");
  w.line(1, "final List<Node> nodes;");
  if (c.is_initial) {
    w.blank();
    w.line(1, "public " + c.name + "() {");
    w.line(2, "this(List.of());");
    w.line(1, "}");
  }
  w.blank();
  w.line(1, c.name + "(List<Node> nodes) {");
  w.line(2, "this.nodes = nodes;");
  w.line(1, "}");
  for (const auto &m : c.methods) {
    w.blank();
    std::string head = "public ";
    if (m.is_static)
      head += "static ";
    if (!m.declared_type_params.empty())
      head += type_params(m.declared_type_params) + " ";
    head += to_string(m.return_type) + " " + m.name + "(" +
            param_list(m.params) + ") {";
    w.line(1, head);
    if (m.body.planned())
      render_body(w, m);
    else
      w.line(2, "throw new UnsupportedOperationException();");
    w.line(1, "}");
  }
  w.line(0, "}");
  return w.take();
}

std::string render_node(const NodeDef &n, const RenderOptions &options) {
  JavaWriter w(options);
  w.line(0, "public final class " + n.name + type_params(n.type_params) +
                " extends Node {");
  if (n.kind == NodeDef::Kind::Method) {
    for (const auto &f : n.fields)
      w.line(1, "public final " + field_type(f) + " " + f.name + ";");
    if (!n.fields.empty())
      w.blank();
    w.line(1, n.name + "(" + param_list(n.fields) + ") {");
    for (const auto &f : n.fields)
      w.line(2, "this." + f.name + " = " + f.name + ";");
    w.line(1, "}");
  } else {
    w.line(1, "final List<Node> children;");
    w.blank();
    w.line(1, n.name + "(List<Node> children) {");
    w.line(2, "this.children = children;");
    w.line(1, "}");
    w.blank();
    w.line(1, "@Override");
    w.line(1, "List<Node> children() {");
    w.line(2, "return children;");
    w.line(1, "}");
  }
  w.blank();
  w.line(1, "@Override");
  w.line(1, "void accept(Visitor visitor) {");
  w.line(2, "visitor." + n.visit_hook + "(this);");
  w.line(1, "}");
  w.line(0, "}");
  return w.take();
}

std::string render_base(const RenderOptions &options) {
  JavaWriter w(options);
  w.line(0, "public abstract class Node {");
  w.line(1, "abstract void accept(Visitor visitor);");
  w.blank();
  w.line(1, "List<Node> children() {");
  w.line(2, "return List.of();");
  w.line(1, "}");
  w.blank();
  w.line(1, "static List<Node> append(List<Node> nodes, Node node) {");
  w.line(2, "List<Node> out = new ArrayList<Node>(nodes);");
  w.line(2, "out.add(node);");
  w.line(2, "return Collections.unmodifiableList(out);");
  w.line(1, "}");
  w.line(0, "}");
  return w.take();
}

std::string render_visitor(const ApiModel &model,
                           const RenderOptions &options) {
  const auto &v = model.visitor;
  JavaWriter w(options);
  w.line(0, "public class " + v.name + " {");
  w.line(1, "public void visit(Node node) {");
  w.line(2, "node.accept(this);");
  w.line(1, "}");
  w.blank();
  w.line(1, "void " + v.traversal_helper + "(Node node) {");
  w.line(2, "for (Node child : node.children()) {");
  w.line(3, "visit(child);");
  w.line(2, "}");
  w.line(1, "}");
  for (const auto &hook : v.hooks) {
    w.blank();
    w.line(1, "void " + hook.name + "(" + hook.node + " node) {");
    if (hook.kind == NodeDef::Kind::Object)
      w.line(2, v.traversal_helper + "(node);");
    w.line(1, "}");
  }
  w.line(0, "}");
  return w.take();
}

std::string path_for(const std::string &type, const RenderOptions &options) {
  std::string dir;
  if (options.package_name &&
      options.layout == RenderOptions::Layout::PackageDirectories) {
    dir = *options.package_name;
    std::ranges::replace(dir, '.', '/');
    dir += '/';
  }
  return dir + type + ".java";
}

} // namespace

std::vector<RenderedFile> render(const ApiModel &model,
                                 const RenderOptions &options) {
  std::vector<RenderedFile> files;
  for (const auto &c : model.classes)
    files.push_back({path_for(c.name, options), render_class(c, options)});
  files.push_back({path_for("Node", options), render_base(options)});
  for (const auto &n : model.nodes)
    files.push_back({path_for(n.name, options), render_node(n, options)});
  files.push_back(
      {path_for(model.visitor.name, options), render_visitor(model, options)});
  return files;
}

} // namespace protogen
