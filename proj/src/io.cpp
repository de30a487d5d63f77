#include "glue/io.hpp"

#include <cstdint>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

#include "glue/errors.hpp"

namespace glue {

namespace {

// Shape problems (missing key, wrong JSON type) raise ParseError here;
// value problems keep the DomainError the constructors throw.
const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError(std::string("expected object with \"") +
                                       key + "\" key");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing key \"") + key +
                                      "\"");
  return *it;
}

std::int64_t as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) {
    throw ParseError(std::string(what) + ": expected an integer");
  }
  return j.get<std::int64_t>();
}

int as_index(const Json& j, const char* what) {
  std::int64_t v = as_int(j, what);
  if (v < INT32_MIN || v > INT32_MAX) {
    throw ParseError(std::string(what) + ": integer out of range");
  }
  return static_cast<int>(v);
}

const Json& as_array(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + ": expected an array");
  return j;
}

std::string as_string(const Json& j, const char* what) {
  if (!j.is_string()) throw ParseError(std::string(what) +
                                       ": expected a string");
  return j.get<std::string>();
}

// Object keys for vertices/edges are canonical decimals ("0", "1", ...).
int key_index(const std::string& key, const char* what) {
  for (char c : key) {
    if (c < '0' || c > '9') {
      throw ParseError(std::string(what) + ": bad key \"" + key + "\"");
    }
  }
  if (key.empty() || (key.size() > 1 && key[0] == '0') || key.size() > 9) {
    throw ParseError(std::string(what) + ": bad key \"" + key + "\"");
  }
  return std::stoi(key);
}

EuclidMove move_from_name(const std::string& name) {
  if (name == "base") return EuclidMove::Base;
  if (name == "expand") return EuclidMove::Expand;
  if (name == "add") return EuclidMove::Add;
  throw ParseError("trace: unknown move \"" + name + "\"");
}

}  // namespace

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in.is_open()) throw IoError("cannot read: " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out.is_open()) throw IoError("cannot write: " + path);
  out << text;
  out.flush();
  if (!out.good()) throw IoError("write failed: " + path);
}

Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (int e = 0; e < g.edge_count(); ++e) {
    edges.push_back(Json::array({g.origin(e), g.terminus(e)}));
  }
  Json j;
  j["edges"] = std::move(edges);
  j["vertices"] = g.vertex_count();
  return j;
}

Json graph_to_json(const RootedGraph& g) {
  Json j = graph_to_json(g.graph);
  j["root"] = g.root;
  return j;
}

Graph graph_from_json(const Json& j) {
  int vertices = as_index(field(j, "vertices"), "vertices");
  std::vector<std::pair<int, int>> edges;
  for (const Json& e : as_array(field(j, "edges"), "edges")) {
    const Json& pair = as_array(e, "edge");
    if (pair.size() != 2) throw ParseError("edge: expected [origin, terminus]");
    edges.emplace_back(as_index(pair[0], "edge origin"),
                       as_index(pair[1], "edge terminus"));
  }
  return Graph(vertices, std::move(edges));
}

RootedGraph rooted_from_json(const Json& j) {
  return RootedGraph(graph_from_json(j), as_index(field(j, "root"), "root"));
}

Json multiset_to_json(const VertexMultiset& x) {
  Json j = Json::array();
  for (int v : x.members) j.push_back(v);
  return j;
}

VertexMultiset multiset_from_json(const Json& j) {
  VertexMultiset x;
  for (const Json& v : as_array(j, "members")) {
    x.members.push_back(as_index(v, "member"));
  }
  return x;
}

Json pathset_to_json(const PathSet& s) {
  Json j = Json::array();
  for (const TaggedPath& p : s.paths()) j.push_back(path_to_string(p));
  return j;
}

PathSet pathset_from_json(const Json& j) {
  std::vector<TaggedPath> paths;
  for (const Json& p : as_array(j, "paths")) {
    paths.push_back(path_from_string(as_string(p, "path")));
  }
  return PathSet(std::move(paths));
}

Json monoid_to_json(const MonoidElement& m) {
  Json j = Json::array();
  for (const MonoidTerm& t : m.terms()) {
    Json term;
    term["mult"] = t.mult;
    term["path"] = path_to_string(t.path);
    j.push_back(std::move(term));
  }
  return j;
}

MonoidElement monoid_from_json(const Json& j) {
  std::vector<MonoidTerm> terms;
  for (const Json& t : as_array(j, "terms")) {
    const Json& mult = field(t, "mult");
    if (!mult.is_number_integer()) {
      throw ParseError("mult: expected an integer");
    }
    if (!mult.is_number_unsigned() && mult.get<std::int64_t>() <= 0) {
      throw ParseError("mult: expected a positive integer");
    }
    terms.push_back({path_from_string(as_string(field(t, "path"), "path")),
                     mult.get<std::uint64_t>()});
  }
  return MonoidElement(std::move(terms));
}

Json block_to_json(const Block& b) {
  Json j;
  Json gamma = Json::array();
  for (int m : b.gamma) gamma.push_back(m);
  j["gamma"] = std::move(gamma);
  j["paths"] = pathset_to_json(b.set);
  return j;
}

Block block_from_json(const Json& j) {
  const Json& paths = as_array(field(j, "paths"), "paths");
  const Json& gamma = as_array(field(j, "gamma"), "gamma");
  if (paths.size() != gamma.size()) {
    throw ParseError("block: paths and gamma lengths differ");
  }
  std::vector<std::pair<TaggedPath, int>> pairs;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    pairs.emplace_back(path_from_string(as_string(paths[i], "path")),
                       as_index(gamma[i], "gamma"));
  }
  return make_block(std::move(pairs));
}

Json shift_to_json(const Shift& s) {
  Json pairs = Json::array();
  for (const ShiftPair& p : s.pairs_sorted()) {
    pairs.push_back(
        Json::array({path_to_string(p.src), path_to_string(p.dst)}));
  }
  Json j;
  j["pairs"] = std::move(pairs);
  return j;
}

Shift shift_from_json(const Graph& g, const VertexMultiset& dom_space,
                      const VertexMultiset& cod_space, const Json& j) {
  std::vector<ShiftPair> pairs;
  for (const Json& p : as_array(field(j, "pairs"), "pairs")) {
    const Json& pair = as_array(p, "pair");
    if (pair.size() != 2) throw ParseError("pair: expected [\"p\", \"q\"]");
    pairs.push_back({path_from_string(as_string(pair[0], "pair source")),
                     path_from_string(as_string(pair[1], "pair image"))});
  }
  return reduce(g, Shift(g, dom_space, cod_space, std::move(pairs)));
}

Json diagram_to_json(const GluingDiagram& d) {
  Json source = graph_to_json(d.source());
  Json target = graph_to_json(d.target());
  Json j;
  if (d.rooted()) {
    source["root"] = d.source_root();
    target["root"] = d.target_root();
    j["start"] = block_to_json(d.start());
  }
  j["source"] = std::move(source);
  j["target"] = std::move(target);
  Json x = Json::object();
  for (int v = 0; v < d.source().vertex_count(); ++v) {
    x[std::to_string(v)] = multiset_to_json(d.x(v));
  }
  j["x"] = std::move(x);
  Json blocks = Json::object();
  for (int e = 0; e < d.source().edge_count(); ++e) {
    blocks[std::to_string(e)] = block_to_json(d.block(e));
  }
  j["blocks"] = std::move(blocks);
  return j;
}

GluingDiagram diagram_from_json(const Json& j, bool revalidate) {
  Graph source = graph_from_json(field(j, "source"));
  Graph target = graph_from_json(field(j, "target"));

  const Json& xj = field(j, "x");
  if (!xj.is_object()) throw ParseError("x: expected an object");
  std::vector<VertexMultiset> x(source.vertex_count());
  std::vector<bool> seen_x(x.size(), false);
  for (const auto& [key, value] : xj.items()) {
    int v = key_index(key, "x");
    if (v >= source.vertex_count()) throw ParseError("x: no vertex " + key);
    x[v] = multiset_from_json(value);
    seen_x[v] = true;
  }
  for (int v = 0; v < source.vertex_count(); ++v) {
    if (!seen_x[v]) throw ParseError("x: missing vertex " + std::to_string(v));
  }

  const Json& bj = field(j, "blocks");
  if (!bj.is_object()) throw ParseError("blocks: expected an object");
  std::vector<Block> blocks(source.edge_count());
  std::vector<bool> seen_b(blocks.size(), false);
  for (const auto& [key, value] : bj.items()) {
    int e = key_index(key, "blocks");
    if (e >= source.edge_count()) throw ParseError("blocks: no edge " + key);
    blocks[e] = block_from_json(value);
    seen_b[e] = true;
  }
  for (int e = 0; e < source.edge_count(); ++e) {
    if (!seen_b[e]) {
      throw ParseError("blocks: missing edge " + std::to_string(e));
    }
  }

  auto build = [&]() -> GluingDiagram {
    if (!j.contains("start")) {
      return GluingDiagram(std::move(source), std::move(target), std::move(x),
                           std::move(blocks));
    }
    int sr = as_index(field(field(j, "source"), "root"), "source root");
    int tr = as_index(field(field(j, "target"), "root"), "target root");
    return GluingDiagram(std::move(source), std::move(target), std::move(x),
                         std::move(blocks), sr, tr,
                         block_from_json(field(j, "start")));
  };
  GluingDiagram d = build();
  if (revalidate) check_valid(d);
  return d;
}

Json trace_to_json(const EuclidTrace& t) {
  Json j = Json::array();
  for (const EuclidStep& s : t.steps) {
    Json step;
    step["l"] = s.l;
    step["move"] = move_name(s.move);
    step["n"] = s.n;
    j.push_back(std::move(step));
  }
  return j;
}

EuclidTrace trace_from_json(const Json& j) {
  EuclidTrace t;
  for (const Json& s : as_array(j, "trace")) {
    t.steps.push_back({as_index(field(s, "l"), "l"),
                       as_index(field(s, "n"), "n"),
                       move_from_name(as_string(field(s, "move"), "move"))});
  }
  return t;
}

Json record_to_json(const MoveRecord& r) {
  Json j;
  j["move"] = r.move;
  if (r.move == "expand") {
    j["member"] = r.member;
    j["vertex"] = r.vertex;
  } else if (r.move == "add") {
    Json rho = Json::array();
    for (const TaggedPath& p : r.rho) rho.push_back(path_to_string(p));
    Json gp = Json::array();
    for (int m : r.gamma_plus) gp.push_back(m);
    j["gammaPlus"] = std::move(gp);
    j["rho"] = std::move(rho);
  } else {
    throw DomainError("record: unknown move \"" + r.move + "\"");
  }
  return j;
}

MoveRecord record_from_json(const Json& j) {
  MoveRecord r;
  r.move = as_string(field(j, "move"), "move");
  if (r.move == "expand") {
    r.vertex = as_index(field(j, "vertex"), "vertex");
    r.member = as_index(field(j, "member"), "member");
  } else if (r.move == "add") {
    for (const Json& p : as_array(field(j, "rho"), "rho")) {
      r.rho.push_back(path_from_string(as_string(p, "rho path")));
    }
    for (const Json& m : as_array(field(j, "gammaPlus"), "gammaPlus")) {
      r.gamma_plus.push_back(as_index(m, "gammaPlus member"));
    }
  } else {
    throw ParseError("record: unknown move \"" + r.move + "\"");
  }
  return r;
}

namespace {

// Light fills so the black labels stay readable.
constexpr const char* kPalette[] = {
    "#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462",
    "#b3de69", "#fccde5", "#d9d9d9", "#bc80bd", "#ccebc5", "#ffed6f"};
constexpr int kPaletteSize = 12;

struct LeafMark {
  int color = 0;
  std::string block_name;
  int member = 0;
};

// One prefix forest: roots are the member tags of `space`, leaves are the
// block elements, inner nodes their strict prefixes.
void emit_forest(std::ostream& os, const std::string& id,
                 const std::string& title,
                 const std::vector<std::pair<const Block*, std::string>>&
                     named_blocks,
                 const VertexMultiset& space) {
  std::map<TaggedPath, LeafMark> leaves;
  int color = 0;
  for (const auto& [block, name] : named_blocks) {
    auto paths = block->set.paths();
    for (std::size_t i = 0; i < paths.size(); ++i) {
      leaves[paths[i]] = {color, name, block->gamma[i]};
    }
    ++color;
  }
  std::set<TaggedPath> nodes;
  for (int t = 0; t < space.size(); ++t) nodes.insert(TaggedPath{t, {}});
  for (const auto& entry : leaves) {
    const TaggedPath& p = entry.first;
    for (int len = 0; len <= p.length(); ++len) nodes.insert(p.prefix(len));
  }
  std::map<TaggedPath, int> index;
  int next = 0;
  for (const TaggedPath& p : nodes) index[p] = next++;

  os << "  subgraph cluster_" << id << " {\n";
  os << "    label=\"" << title << "\";\n";
  for (const TaggedPath& p : nodes) {
    os << "    " << id << "_" << index[p] << " [label=\"" << path_to_string(p);
    auto it = leaves.find(p);
    if (it != leaves.end()) {
      os << "\\n" << it->second.block_name << " #" << it->second.member
         << "\", style=filled, fillcolor=\""
         << kPalette[it->second.color % kPaletteSize];
    }
    os << "\"];\n";
  }
  for (const TaggedPath& p : nodes) {
    if (p.edges.empty()) continue;
    TaggedPath parent = p.prefix(p.length() - 1);
    os << "    " << id << "_" << index[parent] << " -> " << id << "_"
       << index[p] << " [label=\"e" << p.edges.back() << "\"];\n";
  }
  os << "  }\n";
}

}  // namespace

std::string graph_to_dot(const Graph& g, int root) {
  std::ostringstream os;
  os << "digraph {\n  rankdir=LR;\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    os << "  v" << v << " [label=\"" << v << "\", shape="
       << (v == root ? "square" : "circle") << "];\n";
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    os << "  v" << g.origin(e) << " -> v" << g.terminus(e) << " [label=\"e"
       << e << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::string diagram_to_dot(const GluingDiagram& d) {
  std::ostringstream os;
  os << "digraph blocks {\n  rankdir=TB;\n  node [shape=box, fontsize=10];\n";
  for (int v = 0; v < d.source().vertex_count(); ++v) {
    std::vector<std::pair<const Block*, std::string>> named;
    for (int e : d.source().out_edges(v)) {
      named.emplace_back(&d.block(e), "e" + std::to_string(e));
    }
    emit_forest(os, "v" + std::to_string(v), "vertex " + std::to_string(v),
                named, d.x(v));
  }
  if (d.rooted()) {
    emit_forest(os, "start", "start", {{&d.start(), "start"}},
                VertexMultiset::single(d.target_root()));
  }
  os << "}\n";
  return os.str();
}

}  // namespace glue
