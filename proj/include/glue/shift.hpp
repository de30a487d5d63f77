#pragma once

#include <optional>
#include <span>
#include <vector>

#include "glue/path.hpp"

namespace glue {

struct ShiftPair {
  TaggedPath src;
  TaggedPath dst;

  auto operator<=>(const ShiftPair&) const = default;
};

// Partial isomorphism between cylinders: a terminus-maintaining bijection
// between two independent path sets, acting by p r -> map(p) r.  The domain
// and codomain live over explicit vertex multisets of one shared graph.
class Shift {
 public:
  Shift() = default;
  Shift(const Graph& g, VertexMultiset dom_space, VertexMultiset cod_space,
        std::vector<ShiftPair> pairs);

  const VertexMultiset& domain_space() const { return dom_x_; }
  const VertexMultiset& codomain_space() const { return cod_x_; }
  const PathSet& domain() const { return domain_; }
  const PathSet& codomain() const { return codomain_; }
  // Images aligned with domain() order.
  std::span<const TaggedPath> images() const { return targets_; }
  int size() const { return domain_.size(); }
  bool empty() const { return domain_.empty(); }

  const TaggedPath& image_of(const TaggedPath& p) const;
  const TaggedPath& preimage_of(const TaggedPath& q) const;

  // Germ application: defined when some domain element is a prefix of x.
  std::optional<TaggedPath> apply(const TaggedPath& x) const;
  std::optional<TaggedPath> apply_inverse(const TaggedPath& y) const;

  std::vector<ShiftPair> pairs_sorted() const;

  bool operator==(const Shift&) const = default;

 private:
  VertexMultiset dom_x_;
  VertexMultiset cod_x_;
  PathSet domain_;
  std::vector<TaggedPath> targets_;  // aligned with domain_
  PathSet codomain_;
  std::vector<int> cod_to_dom_;
};

// Identity germ on every member of x.
Shift identity_shift(const Graph& g, const VertexMultiset& x);

// Single-pair shift p r -> q r; termini of p and q must agree.
Shift elementary(const Graph& g, const VertexMultiset& dom_space,
                 const VertexMultiset& cod_space, const TaggedPath& p,
                 const TaggedPath& q);

// Expand the pair at p into its one-edge extensions on both sides;
// represents the same cylinder isomorphism.
Shift refine(const Graph& g, const Shift& s, const TaggedPath& p);

Shift inverse(const Graph& g, const Shift& s);

// Unique minimal representative: collapses every complete sibling family
// p'e -> q'e down to p' -> q', repeatedly.
Shift reduce(const Graph& g, const Shift& s);

// s after t, on the common refinement of t's codomain and s's domain,
// reduced.  Errors when the refinement is empty (disjoint germs) or the
// intermediate spaces differ.
Shift compose(const Graph& g, const Shift& s, const Shift& t);

bool shifts_equal(const Graph& g, const Shift& s, const Shift& t);

// Shift whose domain and codomain are bases over the root: an element of
// the full group of shifts.  Stored reduced.
struct FullShift {
  Shift shift;

  bool operator==(const FullShift&) const = default;
};

bool is_full_shift(const RootedGraph& g, const Shift& s);
FullShift full_shift(const RootedGraph& g, const Shift& s);

}  // namespace glue
