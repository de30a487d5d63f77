#include "glue/graph.hpp"

#include <algorithm>
#include <queue>

namespace glue {

Graph::Graph(int vertex_count, std::vector<std::pair<int, int>> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count_ < 0) throw DomainError("graph: negative vertex count");
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    auto [o, t] = edges_[i];
    if (o < 0 || o >= vertex_count_ || t < 0 || t >= vertex_count_) {
      throw DomainError("graph: edge " + std::to_string(i) +
                        " references vertex out of range");
    }
  }
  out_offset_.assign(vertex_count_ + 1, 0);
  in_offset_.assign(vertex_count_ + 1, 0);
  for (auto [o, t] : edges_) {
    ++out_offset_[o + 1];
    ++in_offset_[t + 1];
  }
  for (int v = 0; v < vertex_count_; ++v) {
    out_offset_[v + 1] += out_offset_[v];
    in_offset_[v + 1] += in_offset_[v];
  }
  out_sorted_.resize(edges_.size());
  in_sorted_.resize(edges_.size());
  std::vector<int> onext(out_offset_.begin(), out_offset_.end() - 1);
  std::vector<int> inext(in_offset_.begin(), in_offset_.end() - 1);
  for (int e = 0; e < edge_count(); ++e) {
    out_sorted_[onext[edges_[e].first]++] = e;
    in_sorted_[inext[edges_[e].second]++] = e;
  }
}

int Graph::check_edge(int e) const {
  if (e < 0 || e >= edge_count()) {
    throw DomainError("graph: edge id " + std::to_string(e) + " out of range");
  }
  return e;
}

std::span<const int> Graph::out_edges(int v) const {
  if (v < 0 || v >= vertex_count_) {
    throw DomainError("graph: vertex id " + std::to_string(v) + " out of range");
  }
  return {out_sorted_.data() + out_offset_[v],
          static_cast<std::size_t>(out_offset_[v + 1] - out_offset_[v])};
}

std::span<const int> Graph::in_edges(int v) const {
  if (v < 0 || v >= vertex_count_) {
    throw DomainError("graph: vertex id " + std::to_string(v) + " out of range");
  }
  return {in_sorted_.data() + in_offset_[v],
          static_cast<std::size_t>(in_offset_[v + 1] - in_offset_[v])};
}

VertexClass classify(const Graph& g, int v) {
  VertexClass c;
  c.sink = g.out_degree(v) == 0;
  c.regular = !c.sink;  // finite graphs: singular <=> sink
  c.source = g.in_degree(v) == 0;
  return c;
}

std::vector<int> reachable_from(const Graph& g, int v) {
  if (v < 0 || v >= g.vertex_count()) {
    throw DomainError("reachable_from: vertex out of range");
  }
  std::vector<bool> seen(g.vertex_count(), false);
  std::queue<int> q;
  seen[v] = true;
  q.push(v);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int e : g.out_edges(u)) {
      int t = g.terminus(e);
      if (!seen[t]) {
        seen[t] = true;
        q.push(t);
      }
    }
  }
  std::vector<int> out;
  for (int u = 0; u < g.vertex_count(); ++u) {
    if (seen[u]) out.push_back(u);
  }
  return out;
}

RootedGraph::RootedGraph(Graph g, int r) : graph(std::move(g)), root(r) {
  if (root < 0 || root >= graph.vertex_count()) {
    throw DomainError("rooted graph: root out of range");
  }
  auto reach = reachable_from(graph, root);
  if (static_cast<int>(reach.size()) != graph.vertex_count()) {
    for (int v = 0; v < graph.vertex_count(); ++v) {
      if (!std::binary_search(reach.begin(), reach.end(), v)) {
        throw DomainError("rooted graph: vertex " + std::to_string(v) +
                          " not reachable from root");
      }
    }
  }
}

Graph make_graph(int vertex_count, std::vector<std::pair<int, int>> edges) {
  return Graph(vertex_count, std::move(edges));
}

RootedGraph make_G_n(int n) {
  if (n < 2) throw DomainError("make_G_n: need n >= 2");
  std::vector<std::pair<int, int>> edges(n, {0, 0});
  return RootedGraph(Graph(1, std::move(edges)), 0);
}

RootedGraph make_G_an(int a, int n) {
  if (a < 1) throw DomainError("make_G_an: need a >= 1");
  if (n < 2) throw DomainError("make_G_an: need n >= 2");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(a + n);
  for (int i = 0; i < a; ++i) edges.emplace_back(0, 1);
  for (int i = 0; i < n; ++i) edges.emplace_back(1, 1);
  return RootedGraph(Graph(2, std::move(edges)), 0);
}

std::optional<GanShape> detect_gan(const Graph& g) {
  if (g.vertex_count() == 1) {
    int n = g.edge_count();
    if (n < 2) return std::nullopt;
    return GanShape{0, n, -1, 0, 0};
  }
  if (g.vertex_count() != 2) return std::nullopt;
  // Identify the source vertex R (no in-edges) and the loop vertex v.
  int r = -1;
  for (int v = 0; v < 2; ++v) {
    if (g.in_degree(v) == 0) r = v;
  }
  if (r < 0) return std::nullopt;
  int v = 1 - r;
  int a = 0, n = 0;
  int first_loop = -1;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (g.origin(e) == r && g.terminus(e) == v) {
      ++a;
    } else if (g.origin(e) == v && g.terminus(e) == v) {
      if (first_loop < 0) first_loop = e;
      ++n;
    } else {
      return std::nullopt;
    }
  }
  if (a < 1 || n < 2) return std::nullopt;
  // Loops must be a contiguous block after the root edges.
  if (first_loop != a) return std::nullopt;
  return GanShape{a, n, r, v, first_loop};
}

}  // namespace glue
