#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "glue/graph.hpp"

namespace glue {

// Indexed multiset of vertices.  Member tags are positions in `members`,
// so two members over the same vertex stay distinguishable.
struct VertexMultiset {
  std::vector<int> members;  // underlying vertex per tag

  int size() const { return static_cast<int>(members.size()); }
  bool empty() const { return members.empty(); }
  int underlying(int tag) const;

  static VertexMultiset single(int v) { return {{v}}; }
  static VertexMultiset uniform(int count, int v) {
    return {std::vector<int>(static_cast<std::size_t>(count), v)};
  }

  bool operator==(const VertexMultiset&) const = default;
};

// Path in P(G, x): starts at member `tag` of the multiset, then follows
// `edges` (which must compose in the graph).  Default ordering is the
// canonical one: tag, then edge sequence lexicographically by edge id.
struct TaggedPath {
  int tag = 0;
  std::vector<int> edges;

  int length() const { return static_cast<int>(edges.size()); }
  bool empty_path() const { return edges.empty(); }

  TaggedPath extended(int e) const;
  TaggedPath extended(std::span<const int> suffix) const;
  // First `len` edges.
  TaggedPath prefix(int len) const;

  auto operator<=>(const TaggedPath&) const = default;
};

std::string path_to_string(const TaggedPath& p);
TaggedPath path_from_string(const std::string& s);

enum class PrefixRelation { Equal, PrefixOfSecond, SecondIsPrefix, Independent };

// p <= q  iff  q = p r for some r (same tag, p.edges a prefix of q.edges).
PrefixRelation prefix_compare(const TaggedPath& p, const TaggedPath& q);
bool is_prefix(const TaggedPath& p, const TaggedPath& q);
bool independent(const TaggedPath& p, const TaggedPath& q);

bool path_valid(const Graph& g, const VertexMultiset& x, const TaggedPath& p);
void check_path(const Graph& g, const VertexMultiset& x, const TaggedPath& p);
int path_terminus(const Graph& g, const VertexMultiset& x, const TaggedPath& p);

// p is faithful when it is nonempty and the origin of its last edge has
// out-degree > 1; a faithful graph lets every path extend to a faithful one.
bool is_faithful_path(const Graph& g, const TaggedPath& p);
bool is_faithful_graph(const Graph& g);

// Finite set of pairwise independent (prefix-free) paths.  Stored sorted in
// canonical order, which doubles as a flattened trie: the extensions of any
// path form a contiguous run, so prefix queries are binary searches.
class PathSet {
 public:
  PathSet() = default;
  explicit PathSet(std::vector<TaggedPath> paths);

  std::span<const TaggedPath> paths() const { return paths_; }
  int size() const { return static_cast<int>(paths_.size()); }
  bool empty() const { return paths_.empty(); }
  bool contains(const TaggedPath& p) const;
  // Index of p in canonical order, -1 if absent.
  int index_of(const TaggedPath& p) const;

  // The unique element that is a prefix of p, if any.
  std::optional<TaggedPath> prefix_of(const TaggedPath& p) const;
  // Elements extending p (p a prefix), in canonical order.
  std::vector<TaggedPath> extensions_of(const TaggedPath& p) const;
  bool has_extension_of(const TaggedPath& p) const;
  // Some element comparable to p (prefix either way)?
  bool touches(const TaggedPath& p) const;

  bool operator==(const PathSet&) const = default;

 private:
  std::vector<TaggedPath> paths_;
};

void check_paths(const Graph& g, const VertexMultiset& x, const PathSet& s);

// (M \ {q}) u { q e : e in o^-1(T(q)) }.  Errors if q is not in M or T(q)
// is a sink (expansion at a sink would silently drop the cylinder).
PathSet expand_at(const Graph& g, const VertexMultiset& x, const PathSet& m,
                  const TaggedPath& q);

enum class CoverStatus { Yes, No, Unknown };

struct CoverResult {
  CoverStatus status = CoverStatus::Unknown;
  // For No: a path below N that does not extend into the down-set of M,
  // or an element of M with no prefix in N.
  std::optional<TaggedPath> counterexample;
  // For Yes: each element of M with its prefix in N.
  std::vector<std::pair<TaggedPath, TaggedPath>> support;
  int checked_depth = 0;
  bool definite = false;

  bool yes() const { return status == CoverStatus::Yes; }
};

// Does M exactly cover N?  (Every element of M extends some element of N,
// and every path below N extends into the down-set of M.)  With
// depth_bound < 0 the bound defaults to the max length in M, which makes
// the answer definite; smaller explicit bounds may return Unknown.
CoverResult covers_exactly(const Graph& g, const VertexMultiset& x,
                           const PathSet& m, const std::vector<TaggedPath>& n,
                           int depth_bound = -1);

// Plain covering: the sub-family of M lying over N must cover N exactly.
CoverResult covers(const Graph& g, const VertexMultiset& x, const PathSet& m,
                   const std::vector<TaggedPath>& n, int depth_bound = -1);

std::vector<TaggedPath> epsilons_of(const VertexMultiset& x);

bool is_basis(const Graph& g, const VertexMultiset& x, const PathSet& m);

// Paths with no prefix in B; for a basis these are exactly the strict
// prefixes of its elements.
std::vector<TaggedPath> internal_paths(const PathSet& b);

// Pull N back along the prefix-respecting extension of f: M -> x.
// f is given as member ids aligned with M's canonical order and must be a
// terminus-maintaining bijection onto the tags of x.
std::vector<TaggedPath> glue_pullback(const Graph& g, const VertexMultiset& mx,
                                      const PathSet& m,
                                      const std::vector<int>& f,
                                      const VertexMultiset& x,
                                      const std::vector<TaggedPath>& n);

// Independent set together with a terminus-maintaining bijection onto the
// members of some multiset; gamma is aligned with set order.
struct Block {
  PathSet set;
  std::vector<int> gamma;

  int member_of(const TaggedPath& p) const;
  const TaggedPath& path_for(int member) const;
  bool operator==(const Block&) const = default;
};

Block make_block(std::vector<std::pair<TaggedPath, int>> pairs);
// Full consistency check of a block over (g, x) mapping onto target.
void check_block(const Graph& g, const VertexMultiset& x, const Block& b,
                 const VertexMultiset& target);

}  // namespace glue
