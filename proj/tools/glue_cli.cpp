#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "glue/diagram.hpp"
#include "glue/errors.hpp"
#include "glue/euclid.hpp"
#include "glue/io.hpp"
#include "glue/moves.hpp"
#include "glue/path.hpp"
#include "glue/shift.hpp"

namespace {

using namespace glue;

// Default node budget for witness searches; the flag beats the variable.
int env_budget() {
  const char* s = std::getenv("GLUE_BUDGET");
  if (s == nullptr) return 10000;
  char* end = nullptr;
  long v = std::strtol(s, &end, 10);
  if (end == s || *end != '\0' || v <= 0) {
    throw ParseError("GLUE_BUDGET: expected a positive integer");
  }
  return static_cast<int>(v);
}

void emit(const std::string& out_path, const Json& j) {
  std::string text = dump_canonical(j);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_text_file(out_path, text);
  }
}

int run(int argc, char** argv) {
  CLI::App app{
      "Gluing diagrams between path spaces: build, transform, certify, "
      "export."};
  app.require_subcommand(1);
  int rc = 0;

  struct {
    std::string in, out, dot, trace, record, graph, outer, inner, shift, kind;
    int a = 0, n = 0, b = 0;
    int vertex = 0, member = 0;
    int budget = env_budget();
    int depth = 6;
  } o;

  auto* validate_cmd =
      app.add_subcommand("validate", "Check a diagram file's invariants");
  validate_cmd->add_option("file", o.in, "diagram JSON")->required();
  validate_cmd->callback([&] {
    GluingDiagram d = diagram_from_json(read_json_file(o.in), false);
    std::vector<std::string> problems = validate(d);
    for (const std::string& line : problems) std::cout << line << "\n";
    if (problems.empty()) {
      std::cout << "valid\n";
    } else {
      rc = 1;
    }
  });

  auto* build_cmd = app.add_subcommand(
      "build-euclid",
      "Construct and certify a diagram between two root layers over the "
      "same loops");
  build_cmd->add_option("--a", o.a, "root edges on the source side")
      ->required();
  build_cmd->add_option("--n", o.n, "loops on both sides")->required();
  build_cmd->add_option("--b", o.b, "root edges on the target side")
      ->required();
  build_cmd->add_option("--budget", o.budget, "witness search node budget");
  build_cmd->add_option("--depth", o.depth, "witness search depth slack");
  build_cmd->add_option("--out", o.out, "diagram JSON output")->required();
  build_cmd->add_option("--dot", o.dot, "graphviz output");
  build_cmd->add_option("--trace", o.trace, "construction trace JSON output");
  build_cmd->callback([&] {
    IsomorphismResult r = build_isomorphism(o.a, o.n, o.b, o.depth, o.budget);
    write_text_file(o.out, dump_canonical(diagram_to_json(r.diagram)));
    if (!o.dot.empty()) write_text_file(o.dot, diagram_to_dot(r.diagram));
    if (!o.trace.empty()) {
      write_text_file(o.trace, dump_canonical(trace_to_json(r.trace)));
    }
    Json s;
    s["a"] = o.a;
    s["b"] = o.b;
    s["n"] = o.n;
    s["l"] = r.solution.l;
    s["k"] = r.solution.k;
    s["injective"] = is_injective(r.diagram);
    s["surjective"] = r.surjectivity.yes;
    s["shiftSurjective"] = r.shift_surjectivity.yes;
    s["rootBasisSize"] =
        vertex_basis(r.diagram, r.diagram.source_root()).size();
    Json sizes = Json::array();
    for (int e : r.diagram.source().out_edges(r.diagram.source_root())) {
      sizes.push_back(r.diagram.block(e).set.size());
    }
    s["rootBlockSizes"] = std::move(sizes);
    s["trace"] = trace_to_json(r.trace);
    std::cout << dump_canonical(s);
  });

  auto* apply_cmd = app.add_subcommand(
      "apply", "Push a shift over the source root through a diagram");
  apply_cmd->add_option("--diagram", o.in, "rooted diagram JSON")->required();
  apply_cmd->add_option("--shift", o.shift, "shift JSON over the source root")
      ->required();
  apply_cmd->add_option("--out", o.out, "shift JSON output (default stdout)");
  apply_cmd->callback([&] {
    GluingDiagram d = diagram_from_json(read_json_file(o.in));
    if (!d.rooted()) throw DomainError("apply: diagram must be rooted");
    VertexMultiset root = VertexMultiset::single(d.source_root());
    Shift s = shift_from_json(d.source(), root, root, read_json_file(o.shift));
    emit(o.out, shift_to_json(reduce(d.target(), gamma_shift(d, s))));
  });

  auto* move_cmd =
      app.add_subcommand("move", "Apply one expand or add move to a diagram");
  move_cmd->add_option("--in", o.in, "diagram JSON")->required();
  move_cmd->add_option("--kind", o.kind, "expand | add")
      ->required()
      ->check(CLI::IsMember({"expand", "add"}));
  move_cmd->add_option("--vertex", o.vertex, "expand: source vertex");
  move_cmd->add_option("--member", o.member, "expand: member to expand");
  move_cmd->add_option("--out", o.out, "diagram JSON output (default stdout)");
  move_cmd->add_option("--record", o.record, "move record JSON output");
  move_cmd->callback([&] {
    GluingDiagram d = diagram_from_json(read_json_file(o.in));
    MoveRecord rec;
    GluingDiagram next = o.kind == "expand"
                             ? expand_diagram(d, o.vertex, o.member, &rec)
                             : add_diagram(d, &rec);
    emit(o.out, diagram_to_json(next));
    if (!o.record.empty()) {
      write_text_file(o.record,
                      dump_canonical(Json::array({record_to_json(rec)})));
    }
  });

  auto* compose_cmd = app.add_subcommand(
      "compose", "Compose two shifts over a rooted graph (outer after inner)");
  compose_cmd->add_option("--graph", o.graph, "rooted graph JSON")->required();
  compose_cmd->add_option("--outer", o.outer, "shift JSON")->required();
  compose_cmd->add_option("--inner", o.inner, "shift JSON")->required();
  compose_cmd->add_option("--out", o.out, "shift JSON output (default stdout)");
  compose_cmd->callback([&] {
    RootedGraph g = rooted_from_json(read_json_file(o.graph));
    VertexMultiset root = VertexMultiset::single(g.root);
    Shift outer =
        shift_from_json(g.graph, root, root, read_json_file(o.outer));
    Shift inner =
        shift_from_json(g.graph, root, root, read_json_file(o.inner));
    emit(o.out, shift_to_json(compose(g.graph, outer, inner)));
  });

  auto* certify_cmd = app.add_subcommand(
      "certify", "Run the validity, injectivity and surjectivity certificates");
  certify_cmd->add_option("--in", o.in, "diagram JSON")->required();
  certify_cmd->add_option("--budget", o.budget, "witness search node budget");
  certify_cmd->add_option("--depth", o.depth, "witness search depth slack");
  certify_cmd->callback([&] {
    GluingDiagram d = diagram_from_json(read_json_file(o.in), false);
    std::vector<std::string> problems = validate(d);
    Json s;
    s["valid"] = problems.empty();
    bool all = false;
    if (problems.empty()) {
      bool injective = is_injective(d);
      SurjectivityResult surj = is_surjective(d, o.budget);
      bool shift_yes =
          surj.yes && is_shift_surjective(d, o.depth, o.budget).yes;
      s["injective"] = injective;
      s["surjective"] = surj.yes;
      s["unblocked"] = surj.unblocked;
      s["shiftSurjective"] = shift_yes;
      all = injective && surj.yes && shift_yes;
    } else {
      Json v = Json::array();
      for (const std::string& line : problems) v.push_back(line);
      s["violations"] = std::move(v);
      s["injective"] = false;
      s["surjective"] = false;
      s["unblocked"] = false;
      s["shiftSurjective"] = false;
    }
    std::cout << dump_canonical(s);
    if (!all) rc = 1;
  });

  auto* dot_cmd = app.add_subcommand(
      "export-dot", "Render a graph or diagram file as graphviz text");
  dot_cmd->add_option("--in", o.in, "graph or diagram JSON")->required();
  dot_cmd->add_option("--out", o.out, "DOT output (default stdout)");
  dot_cmd->callback([&] {
    Json j = read_json_file(o.in);
    std::string dot;
    if (j.is_object() && j.contains("blocks")) {
      dot = diagram_to_dot(diagram_from_json(j));
    } else if (j.is_object() && j.contains("root")) {
      RootedGraph g = rooted_from_json(j);
      dot = graph_to_dot(g.graph, g.root);
    } else {
      dot = graph_to_dot(graph_from_json(j));
    }
    if (o.out.empty()) {
      std::cout << dot;
    } else {
      write_text_file(o.out, dot);
    }
  });

  auto* trace_cmd =
      app.add_subcommand("show-trace", "Print a construction trace");
  trace_cmd->add_option("--in", o.in, "trace JSON")->required();
  trace_cmd->callback([&] {
    EuclidTrace t = trace_from_json(read_json_file(o.in));
    for (const EuclidStep& s : t.steps) {
      std::cout << "(" << s.l << ", " << s.n << ") " << move_name(s.move)
                << "\n";
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const glue::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const glue::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const glue::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
