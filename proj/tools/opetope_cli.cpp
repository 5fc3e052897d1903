// Command-line front end over the C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "opetope/opetope_c.h"

namespace {

// Exit codes follow ope_status: 1 validation, 2 parse, 3 bound, 4 usage or
// argument, 5 internal.
int report(ope_status s) {
  if (s != OPE_OK) std::cerr << "error: " << ope_last_error() << "\n";
  return static_cast<int>(s);
}

struct CString {
  char* p = nullptr;
  ~CString() { ope_string_free(p); }
};

struct Handle {
  ope_opetope* p = nullptr;
  ~Handle() { ope_opetope_free(p); }
};

std::optional<std::string> read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// A JSON file, "-" for stdin, or example:<name> for a built-in opetope.
ope_status load(const std::string& source, Handle& h) {
  const std::string prefix = "example:";
  if (source.rfind(prefix, 0) == 0) return ope_opetope_example(source.substr(prefix.size()).c_str(), &h.p);
  auto text = read_file(source);
  if (!text) {
    std::cerr << "error: cannot read " << source << "\n";
    return OPE_INVALID_ARGUMENT;
  }
  return ope_opetope_from_json(text->c_str(), &h.p);
}

int emit(ope_status s, const CString& out) {
  if (out.p) std::cout << out.p;
  return report(s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Opetopes as Kelly-Mac Lane graphs: validate, enumerate, compare and inspect."};
  app.require_subcommand(1);

  std::string file, file_b;

  auto* validate = app.add_subcommand("validate", "Check an opetope file and report the first failure");
  validate->add_option("file", file, "Opetope JSON, - for stdin, or example:<k3|faces|k4>")->required();

  int dim = 0;
  std::string frame_spec, frame_file;
  long arity = -1;
  std::size_t max_leaves = 8;
  bool count_only = false;
  auto* enumerate = app.add_subcommand("enumerate", "List every opetope of a dimension and frame");
  enumerate->add_option("--dim", dim, "Dimension k")->required()->check(CLI::Range(0, 4));
  auto* spec_opt = enumerate->add_option("--frame", frame_spec, "Frame such as \"(3,2)->4\" (k=3) or \"3\" (k=2)");
  auto* arity_opt = enumerate->add_option("--arity", arity, "Arity of a k=2 frame")->check(CLI::NonNegativeNumber);
  auto* file_opt = enumerate->add_option("--frame-file", frame_file, "Frame JSON {inputs, output}");
  spec_opt->excludes(arity_opt)->excludes(file_opt);
  arity_opt->excludes(file_opt);
  enumerate->add_option("--max-leaves", max_leaves, "Bound on the tree size (sum of input arities + 1)")
      ->capture_default_str();
  enumerate->add_flag("--count", count_only, "Print only the number of opetopes");

  auto* homs = app.add_subcommand("homs", "List the morphisms between two opetopes");
  homs->add_option("a", file, "Source opetope")->required();
  homs->add_option("b", file_b, "Target opetope")->required();

  int depth = 2;
  bool as_json = false, tf = false;
  auto* faces = app.add_subcommand("faces", "Faces and face relations of an opetope");
  faces->add_option("file", file, "Opetope JSON, - for stdin, or example:<k3|faces|k4>")->required();
  faces->add_option("--depth", depth, "1: one-step relations; 2: also the classes one level down")
      ->check(CLI::IsMember({1, 2}))
      ->capture_default_str();
  faces->add_flag("--json", as_json, "JSON output");
  faces->add_flag("--tf", tf, "Also check that every class is reached through the target");

  int cross_dim = 3;
  std::size_t cross_leaves = 6;
  std::string cross_frame;
  auto* crosscheck = app.add_subcommand("crosscheck", "Compare the graph ladder with the slice construction");
  crosscheck->add_option("--dim", cross_dim, "Dimension k")->required()->check(CLI::Range(0, 4));
  crosscheck->add_option("--max-leaves", cross_leaves, "Bound on the tree size")->capture_default_str();
  crosscheck->add_option("--frame-file", cross_frame, "Frame JSON for k=4 (default: the built-in example frame)");

  auto* dot = app.add_subcommand("export-dot", "Graphviz drawing of an opetope's configuration graph");
  dot->add_option("file", file, "Opetope JSON, - for stdin, or example:<k3|faces|k4>")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return OPE_INVALID_ARGUMENT;
  }

  if (validate->parsed()) {
    std::optional<std::string> text;
    if (file.rfind("example:", 0) == 0) {
      // Examples go through the same reader as files.
      Handle h;
      CString json;
      if (ope_status s = load(file, h); s != OPE_OK) return report(s);
      if (ope_status s = ope_opetope_to_json(h.p, &json.p); s != OPE_OK) return report(s);
      text = json.p;
    } else {
      text = read_file(file);
    }
    if (!text) {
      std::cerr << "error: cannot read " << file << "\n";
      return OPE_INVALID_ARGUMENT;
    }
    CString out;
    return emit(ope_validate(text->c_str(), &out.p), out);
  }

  if (enumerate->parsed()) {
    std::string spec = frame_spec;
    if (arity >= 0) {
      if (dim != 2) {
        std::cerr << "error: --arity is for dimension 2\n";
        return OPE_INVALID_ARGUMENT;
      }
      spec = std::to_string(arity);
    }
    std::optional<std::string> frame_json;
    if (!frame_file.empty()) {
      frame_json = read_file(frame_file);
      if (!frame_json) {
        std::cerr << "error: cannot read " << frame_file << "\n";
        return OPE_INVALID_ARGUMENT;
      }
    }
    const char* spec_arg = spec.empty() ? nullptr : spec.c_str();
    const char* json_arg = frame_json ? frame_json->c_str() : nullptr;
    if (count_only) {
      std::size_t n = 0;
      ope_status s = ope_count(dim, spec_arg, json_arg, max_leaves, &n);
      if (s == OPE_OK) std::cout << n << "\n";
      return report(s);
    }
    CString out;
    return emit(ope_enumerate(dim, spec_arg, json_arg, max_leaves, &out.p), out);
  }

  if (homs->parsed()) {
    Handle a, b;
    if (ope_status s = load(file, a); s != OPE_OK) return report(s);
    if (ope_status s = load(file_b, b); s != OPE_OK) return report(s);
    CString out;
    return emit(ope_homs(a.p, b.p, &out.p), out);
  }

  if (faces->parsed()) {
    Handle h;
    if (ope_status s = load(file, h); s != OPE_OK) return report(s);
    CString out;
    ope_status s = ope_faces(h.p, depth, as_json ? 1 : 0, &out.p);
    if (s != OPE_OK || !tf) return emit(s, out);
    std::cout << out.p;
    int holds = 0;
    CString witness;
    s = ope_check_tf(h.p, &holds, &witness.p);
    if (s != OPE_OK) return report(s);
    if (holds) {
      std::cout << "tf: holds\n";
      return 0;
    }
    std::cout << "tf: fails: " << witness.p << "\n";
    return OPE_VALIDATION_FAILED;
  }

  if (crosscheck->parsed()) {
    std::optional<std::string> frame_json;
    if (!cross_frame.empty()) {
      frame_json = read_file(cross_frame);
      if (!frame_json) {
        std::cerr << "error: cannot read " << cross_frame << "\n";
        return OPE_INVALID_ARGUMENT;
      }
    }
    CString out;
    return emit(ope_crosscheck(cross_dim, cross_leaves, frame_json ? frame_json->c_str() : nullptr, &out.p), out);
  }

  if (dot->parsed()) {
    Handle h;
    if (ope_status s = load(file, h); s != OPE_OK) return report(s);
    CString out;
    return emit(ope_export_dot(h.p, &out.p), out);
  }
  return OPE_INVALID_ARGUMENT;
}
