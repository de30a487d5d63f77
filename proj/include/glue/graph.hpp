#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "glue/errors.hpp"

namespace glue {

// Finite directed multigraph with dense integer vertex/edge ids.
// Edges keep their construction order; o(e)/t(e) are the origin/terminus maps.
// Immutable after construction.
class Graph {
 public:
  Graph() = default;
  Graph(int vertex_count, std::vector<std::pair<int, int>> edges);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  int origin(int e) const { return edges_.at(check_edge(e)).first; }
  int terminus(int e) const { return edges_.at(check_edge(e)).second; }

  // Edge ids with origin v, ascending.
  std::span<const int> out_edges(int v) const;
  // Edge ids with terminus v, ascending.
  std::span<const int> in_edges(int v) const;

  int out_degree(int v) const { return static_cast<int>(out_edges(v).size()); }
  int in_degree(int v) const { return static_cast<int>(in_edges(v).size()); }

  bool operator==(const Graph& other) const {
    return vertex_count_ == other.vertex_count_ && edges_ == other.edges_;
  }

 private:
  int check_edge(int e) const;

  int vertex_count_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<int> out_sorted_, out_offset_;  // CSR by origin
  std::vector<int> in_sorted_, in_offset_;    // CSR by terminus
};

// regular: 0 < |o^-1(v)| < inf.  For finite graphs the only singular
// vertices are sinks (out-degree 0).  source means t^-1(v) is empty.
struct VertexClass {
  bool regular = false;
  bool sink = false;
  bool source = false;
};

VertexClass classify(const Graph& g, int v);

// Graph plus distinguished root; every vertex must be reachable from it.
struct RootedGraph {
  Graph graph;
  int root = 0;

  RootedGraph() = default;
  RootedGraph(Graph g, int root);
};

// Vertices reachable from v (by directed paths), ascending.
std::vector<int> reachable_from(const Graph& g, int v);

Graph make_graph(int vertex_count, std::vector<std::pair<int, int>> edges);

// G_n: a single vertex carrying loops e_0..e_{n-1}.  Requires n >= 2.
RootedGraph make_G_n(int n);

// G_{a,n}: vertices {R=0, v=1}; edges d_0..d_{a-1} (R -> v, ids 0..a-1)
// then e_0..e_{n-1} (loops at v, ids a..a+n-1).  Requires a >= 1, n >= 2.
RootedGraph make_G_an(int a, int n);

// Structural recognition of the two families above, used by the
// graph-monoid arithmetic.  For G_n: a = 0 and root is the loop vertex.
struct GanShape {
  int a = 0;        // number of root edges; 0 means a G_n
  int n = 0;        // number of loops
  int root = -1;    // -1 for G_n
  int loop_vertex = 0;
  int first_loop_edge = 0;  // loops occupy ids first_loop_edge..+n-1
};

std::optional<GanShape> detect_gan(const Graph& g);

}  // namespace glue
