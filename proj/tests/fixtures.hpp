#pragma once

#include <vector>

#include "glue/diagram.hpp"
#include "test_util.hpp"

namespace glue::testutil {

// Two-vertex source: loops 0,1 at the square, 2 to the circle, loops 3,4
// at the circle, 5 back to the square, loop 6 at the circle.
inline Graph two_by_two_source() {
  return make_graph(2, {{0, 0}, {0, 0}, {0, 1}, {1, 1}, {1, 1}, {1, 0}, {1, 1}});
}

// Two-vertex target: 0,1 to the circle, loops 2,3 at the square, 4 back to
// the square, loops 5,6 at the circle.
inline Graph two_by_two_target() {
  return make_graph(2, {{0, 1}, {0, 1}, {0, 0}, {0, 0}, {1, 0}, {1, 1}, {1, 1}});
}

inline std::vector<Block> two_by_two_blocks() {
  std::vector<Block> blocks(7);
  blocks[0] = make_block({{P("0:e2"), 0}});
  blocks[1] = make_block({{P("0:e3"), 0}});
  blocks[2] = make_block({{P("0:e0.e5"), 0},
                          {P("0:e0.e6"), 1},
                          {P("0:e0.e4"), 2},
                          {P("0:e1.e5"), 3},
                          {P("0:e1.e6"), 4},
                          {P("0:e1.e4"), 5}});
  blocks[3] = make_block({{P("0:e5"), 0},
                          {P("0:e6"), 1},
                          {P("0:e4.e0"), 3},
                          {P("0:e4.e1"), 4},
                          {P("0:e4.e2"), 5},
                          {P("0:e4.e3"), 2}});
  blocks[4] = make_block({{P("1:e5"), 0},
                          {P("1:e6"), 1},
                          {P("1:e4.e0"), 3},
                          {P("1:e4.e1"), 4},
                          {P("1:e4.e2"), 5},
                          {P("1:e4.e3"), 2}});
  blocks[5] = make_block({{P("2:"), 0}});
  blocks[6] = make_block({{P("3:"), 0},
                          {P("4:"), 1},
                          {P("5:e0"), 3},
                          {P("5:e1"), 4},
                          {P("5:e2"), 5},
                          {P("5:e3"), 2}});
  return blocks;
}

inline std::vector<VertexMultiset> two_by_two_x() {
  return {VertexMultiset{{0}}, VertexMultiset{{1, 1, 0, 1, 1, 0}}};
}

inline GluingDiagram two_by_two() {
  return GluingDiagram(two_by_two_source(), two_by_two_target(),
                       two_by_two_x(), two_by_two_blocks());
}

inline GluingDiagram two_by_two_rooted() {
  return GluingDiagram(two_by_two_source(), two_by_two_target(),
                       two_by_two_x(), two_by_two_blocks(), 0, 0,
                       make_block({{P("0:"), 0}}));
}

// One loop vertex, every edge glued to itself.
inline GluingDiagram identity_diagram(int n = 2) {
  Graph g = make_G_n(n).graph;
  std::vector<Block> blocks;
  for (int e = 0; e < n; ++e)
    blocks.push_back(make_block({{TaggedPath{0, {e}}, 0}}));
  return GluingDiagram(g, g, {VertexMultiset::single(0)}, std::move(blocks));
}

inline GluingDiagram identity_diagram_rooted(int n = 2) {
  Graph g = make_G_n(n).graph;
  std::vector<Block> blocks;
  for (int e = 0; e < n; ++e)
    blocks.push_back(make_block({{TaggedPath{0, {e}}, 0}}));
  return GluingDiagram(g, g, {VertexMultiset::single(0)}, std::move(blocks), 0,
                       0, make_block({{TaggedPath{0, {}}, 0}}));
}

// Two vertices exchanging empty paths: both members block each other while
// the target vertex is regular.
inline GluingDiagram blocked_cycle() {
  Graph src = make_graph(2, {{0, 1}, {1, 0}});
  Graph h = make_G_n(2).graph;
  return GluingDiagram(src, h,
                       {VertexMultiset::single(0), VertexMultiset::single(0)},
                       {make_block({{P("0:"), 0}}),
                        make_block({{P("0:"), 0}})});
}

}  // namespace glue::testutil
