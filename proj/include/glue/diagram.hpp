#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "glue/graph.hpp"
#include "glue/monoid.hpp"
#include "glue/path.hpp"
#include "glue/shift.hpp"

namespace glue {

// Gluing diagram from a source graph G into a target graph H.  Every source
// vertex v carries a multiset x_v of target vertices, and every source edge
// e carries a block C_e over P(H, x_{o(e)}) mapping onto the members of
// x_{t(e)}.  Validity requires the blocks at each vertex to tile the path
// space: B_v, the union of C_e over e in o^-1(v), is disjoint and a basis
// of P(H, x_v).  A rooted diagram fixes roots R, S and adds a start block
// over P(H, S) mapping onto x_R.
//
// Blocks of longer source paths are glued edge by edge,
// C_{pe} = gamma_p^{-1}(C_e), and memoized per diagram.  The memo is not
// synchronized; share diagrams across threads only read-only after warming.
class GluingDiagram {
 public:
  GluingDiagram(Graph source, Graph target, std::vector<VertexMultiset> x,
                std::vector<Block> blocks);
  GluingDiagram(Graph source, Graph target, std::vector<VertexMultiset> x,
                std::vector<Block> blocks, int source_root, int target_root,
                Block start);

  const Graph& source() const { return source_; }
  const Graph& target() const { return target_; }
  const VertexMultiset& x(int v) const;
  const Block& block(int e) const;

  bool rooted() const { return rooted_; }
  int source_root() const;
  int target_root() const;
  const Block& start() const;

  // Block C_p with its map gamma_p onto x_{T(p)}.  The rooted form takes
  // p in P(G, R) and seeds the recursion with the start block; the floating
  // form takes p in P(G, v) and seeds with the identity block over x_v.
  const Block& block_of(const TaggedPath& p) const;
  const Block& block_of(int v, const TaggedPath& p) const;

  // Validates on first use and remembers the outcome.
  void ensure_valid() const;

  bool operator==(const GluingDiagram& other) const;

 private:
  const Block& glued(int seed, const TaggedPath& p) const;

  Graph source_;
  Graph target_;
  std::vector<VertexMultiset> x_;
  std::vector<Block> blocks_;
  bool rooted_ = false;
  int source_root_ = -1;
  int target_root_ = -1;
  Block start_;

  // seed -1 keys the rooted recursion, otherwise the floating one at v.
  mutable std::map<std::pair<int, TaggedPath>, Block> memo_;
  mutable bool checked_ = false;
};

// Invariant violations, one line each naming the offending piece; empty
// means the diagram is valid.
std::vector<std::string> validate(const GluingDiagram& d);
void check_valid(const GluingDiagram& d);

// B_v as a single path set; throws when the blocks overlap.
PathSet vertex_basis(const GluingDiagram& d, int v);

// The homomorphism on the path monoid: p maps to the sum over C_p,
// extended linearly.  Empty blocks contribute zero.
MonoidElement gamma_apply(const GluingDiagram& d, const MonoidElement& m);

// The described homomorphism is injective iff no x_v is empty.
bool is_injective(const GluingDiagram& d);

// Member u of x_v, addressed by source vertex and tag.
struct MemberRef {
  int vertex = 0;
  int member = 0;

  auto operator<=>(const MemberRef&) const = default;
};

// u blocks w when some C_e contains the empty path at w and sends it to u.
// Such blocks never deepen under gluing, so cycles stall the recursion.
struct BlockingRelation {
  std::vector<std::pair<MemberRef, MemberRef>> edges;  // (w, u): u blocks w
};

BlockingRelation blocking_relation(const GluingDiagram& d);

// Every blocking cycle runs over members whose target vertex is a sink.
bool is_unblocked(const GluingDiagram& d);

// Basis of P(G, v) whose glued blocks contain a sub-family that tiles the
// cylinder at member u of x_v exactly.
struct SplittingWitness {
  PathSet basis;
  std::vector<TaggedPath> selected;
  PathSet cover;
};

std::optional<SplittingWitness> find_splitting_basis(const GluingDiagram& d,
                                                     int v, int u,
                                                     int node_budget = 10000);

struct SurjectivityResult {
  struct Entry {
    int vertex = 0;
    int member = 0;
    std::optional<SplittingWitness> witness;
  };

  bool yes = false;
  bool unblocked = false;
  std::vector<Entry> table;
};

// Unblocked plus a splitting witness for every (v, u).  Budget exhaustion
// surfaces as a missing witness, never as a claimed yes.
SurjectivityResult is_surjective(const GluingDiagram& d,
                                 int node_budget = 10000);

// Image of a shift under the homomorphism: each pair (p, q) of s turns
// into the block-level pairs c -> C_q.path_for(gamma_p(c)), reduced.
Shift gamma_shift(const GluingDiagram& d, const Shift& s);

// Independent source family whose glued blocks tile the cylinder at p
// exactly; found by uniform deepening, sinks frozen.  nullopt when none
// exists within the depth bound.
std::optional<std::vector<TaggedPath>> find_covering_family(
    const GluingDiagram& d, int v, const TaggedPath& p, int depth_bound = 6);
std::optional<std::vector<TaggedPath>> find_covering_family(
    const GluingDiagram& d, const TaggedPath& p, int depth_bound = 6);

// Certificate that the diagram enables the shift from p to q: source
// families d_p, d_q whose blocks tile the cylinders at p and q, paired by
// nu so that matched blocks show the same suffix-to-member behaviour.
struct EnablingWitness {
  std::vector<TaggedPath> d_p;
  std::vector<TaggedPath> d_q;
  std::vector<int> nu;  // d_q[nu[i]] is the partner of d_p[i]
};

// Floating form: p over x_v, q over x_w, with equal target termini.
std::optional<EnablingWitness> find_enabling_witness(const GluingDiagram& d,
                                                     int v,
                                                     const TaggedPath& p,
                                                     int w,
                                                     const TaggedPath& q,
                                                     int depth_bound = 6);
// Rooted form: p, q in P(H, S).
std::optional<EnablingWitness> find_enabling_witness(const GluingDiagram& d,
                                                     const TaggedPath& p,
                                                     const TaggedPath& q,
                                                     int depth_bound = 6);

struct ShiftSurjectivityResult {
  struct Entry {
    int v = 0;
    TaggedPath p;
    int w = 0;
    TaggedPath q;
    std::optional<EnablingWitness> witness;
  };

  bool yes = false;
  std::vector<Entry> table;
};

// Finite certificate for shift surjectivity: every pair of internal paths
// of B_v and B_w with equal target termini must be enabled.  Requires a
// diagram whose surjectivity certificate passes.
ShiftSurjectivityResult is_shift_surjective(const GluingDiagram& d,
                                            int depth_bound = 6,
                                            int node_budget = 10000);

}  // namespace glue
