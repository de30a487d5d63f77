#pragma once

#include <string>

#include "json.hpp"

#include "glue/diagram.hpp"
#include "glue/euclid.hpp"
#include "glue/graph.hpp"
#include "glue/monoid.hpp"
#include "glue/moves.hpp"
#include "glue/path.hpp"
#include "glue/shift.hpp"

namespace glue {

// Map-backed objects keep keys sorted, so equal values dump to equal bytes.
using Json = nlohmann::json;

// Two-space indent plus trailing newline; the one text form files use.
std::string dump_canonical(const Json& j);

// Unreadable file raises IoError, bytes that are not JSON raise ParseError.
Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

// {"edges": [[o, t], ...], "vertices": n}, plus "root" when rooted.
// Loading ignores keys it does not use, so a rooted file also reads as a
// plain graph.
Json graph_to_json(const Graph& g);
Json graph_to_json(const RootedGraph& g);
Graph graph_from_json(const Json& j);
RootedGraph rooted_from_json(const Json& j);

// Array of underlying vertices per member tag, in tag order.
Json multiset_to_json(const VertexMultiset& x);
VertexMultiset multiset_from_json(const Json& j);

// Array of "tag:e0.e1" strings in canonical order.
Json pathset_to_json(const PathSet& s);
PathSet pathset_from_json(const Json& j);

// [{"mult": 2, "path": "tag:e0.e1"}, ...] in canonical path order.
Json monoid_to_json(const MonoidElement& m);
MonoidElement monoid_from_json(const Json& j);

// {"gamma": [member, ...], "paths": ["tag:...", ...]}, aligned.
Json block_to_json(const Block& b);
Block block_from_json(const Json& j);

// {"pairs": [["p", "q"], ...]}.  The graph and spaces are context the file
// does not repeat; loading validates against them and reduces.
Json shift_to_json(const Shift& s);
Shift shift_from_json(const Graph& g, const VertexMultiset& dom_space,
                      const VertexMultiset& cod_space, const Json& j);

// {"blocks": {"e": block, ...}, "source": graph, "target": graph,
//  "x": {"v": members, ...}}, plus "start" for rooted diagrams, whose
// graphs then carry "root" keys.  Loading re-runs the tiling check unless
// told not to (the validate command reports violations instead).
Json diagram_to_json(const GluingDiagram& d);
GluingDiagram diagram_from_json(const Json& j, bool revalidate = true);

// [{"l": 1, "move": "base", "n": 2}, ...]
Json trace_to_json(const EuclidTrace& t);
EuclidTrace trace_from_json(const Json& j);

// {"member": u, "move": "expand", "vertex": w} or
// {"gammaPlus": [...], "move": "add", "rho": ["path", ...]}.
Json record_to_json(const MoveRecord& r);
MoveRecord record_from_json(const Json& j);

// Graphviz text.  Graphs draw the root as a square node.  Diagrams draw
// one prefix forest per source vertex: leaves are basis elements, filled
// with their block's color and numbered by their gamma member.
std::string graph_to_dot(const Graph& g, int root = -1);
std::string diagram_to_dot(const GluingDiagram& d);

}  // namespace glue
