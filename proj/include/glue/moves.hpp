#pragma once

#include <string>
#include <vector>

#include "glue/diagram.hpp"

namespace glue {

// Bridge between P(G, x) and P(G, x^u), where x^u replaces member u by one
// member per edge leaving its underlying vertex (in edge-id order, in
// place).  kappa prepends the member's edge: it is a bijection onto
// P(G, x) \ {eps_u}.
struct KappaMap {
  Graph graph;
  VertexMultiset base;      // x
  int member = 0;           // u
  VertexMultiset expanded;  // x^u
  // o^-1(underlying(u)) ascending; new_edges[j] carries tag member + j.
  std::vector<int> new_edges;

  int old_to_expanded(int tag) const;
  int expanded_to_old(int tag) const;
};

KappaMap make_kappa(const Graph& g, const VertexMultiset& x, int u);

TaggedPath kappa(const KappaMap& k, const TaggedPath& p);
// Errors on eps_u, the one path kappa misses.
TaggedPath kappa_inverse(const KappaMap& k, const TaggedPath& p);

// Replayable description of one diagram transformation.
struct MoveRecord {
  std::string move;             // "expand" | "add"
  int vertex = -1;              // expand: w
  int member = -1;              // expand: u
  std::vector<TaggedPath> rho;  // add: internal path glued to new edge n+j
  std::vector<int> gamma_plus;  // add: member for new edge n+j
};

// Does some block leaving w freeze u as an empty path?  Expansion at such
// a member is undefined (eps_u has no kappa preimage).
bool member_blocked(const GluingDiagram& d, int w, int u);

// Least non-blocked member of x_w, or -1 if every member is blocked.
int least_unblocked_member(const GluingDiagram& d, int w);

// The diagram over the same graphs with x_w replaced by x_w^u: blocks into
// w expand at the member mapping to u, blocks out of w pull back along
// kappa, loops at w do both.  Describes the same homomorphism.
GluingDiagram expand_diagram(const GluingDiagram& d, int w, int u,
                             MoveRecord* rec = nullptr);

// Do the two rooted diagrams induce equal block sums for every source path
// of length <= depth?
bool same_homomorphism_upto(const GluingDiagram& d1, const GluingDiagram& d2,
                            int depth);

// B u {p e_j : p internal in B, n <= j < n_plus_l}, read over the
// one-vertex graph with n_plus_l loops.  A basis again.
PathSet b_plus(const PathSet& b, const VertexMultiset& x, int n,
               int n_plus_l);

// Grows a one-vertex diagram with l members by l new loops, gluing new
// loop n+j along the j-th internal path of the vertex basis (canonical
// order) with the order-preserving member pairing.
GluingDiagram add_diagram(const GluingDiagram& d, MoveRecord* rec = nullptr);

}  // namespace glue
