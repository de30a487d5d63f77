#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "glue/path.hpp"

namespace glue {

struct MonoidTerm {
  TaggedPath path;
  std::uint64_t mult = 1;

  auto operator<=>(const MonoidTerm&) const = default;
};

// Element of the commutative monoid generated by paths over (G, x),
// subject to p = sum of its one-edge extensions at regular vertices.
// Stored as a sorted multiset; the empty sum is the zero element.
class MonoidElement {
 public:
  MonoidElement() = default;
  // Sorts and merges duplicate paths; multiplicities must be positive.
  explicit MonoidElement(std::vector<MonoidTerm> terms);

  static MonoidElement zero() { return {}; }
  static MonoidElement of(TaggedPath p, std::uint64_t mult = 1);

  std::span<const MonoidTerm> terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int max_term_length() const;

  bool operator==(const MonoidElement&) const = default;

 private:
  std::vector<MonoidTerm> terms_;
};

MonoidElement operator+(const MonoidElement& a, const MonoidElement& b);

// Caps for frontier expansion; exceeding either raises ResourceError.
struct NormalizeLimits {
  int max_depth = 8;
  std::uint64_t max_terms = 1u << 20;
};

// Unique depth-`depth` frontier form: every term ending at a regular vertex
// is expanded until its length reaches `depth`; terms at sinks freeze.
// Requires depth >= max term length of x.
MonoidElement normalize(const Graph& g, const VertexMultiset& x,
                        const MonoidElement& elem, int depth,
                        const NormalizeLimits& limits = {});

// Equality in the monoid: frontier forms agree at the common depth
// (the max term length across both sides).
bool monoid_equal(const Graph& g, const VertexMultiset& x,
                  const MonoidElement& a, const MonoidElement& b,
                  const NormalizeLimits& limits = {});

// a is below b (a = b + c for some c) iff b's frontier is contained in a's,
// multiplicities included.
bool prefix_leq_M(const Graph& g, const VertexMultiset& x,
                  const MonoidElement& a, const MonoidElement& b,
                  const NormalizeLimits& limits = {});

// No nonzero element lies below both; equivalently the frontier supports
// are disjoint at the common depth.
bool independent_M(const Graph& g, const VertexMultiset& x,
                   const MonoidElement& a, const MonoidElement& b,
                   const NormalizeLimits& limits = {});

// Graph monoid of the standard graphs: {0} with the cyclic group of order
// n-1 adjoined.  cls = 0 encodes the zero element, otherwise 1..order.
struct GraphMonoidElement {
  int order = 1;  // n - 1
  int cls = 0;

  bool is_zero() const { return cls == 0; }
  bool operator==(const GraphMonoidElement&) const = default;
};

GraphMonoidElement gm_zero(int order);
// Class of k copies of the loop vertex, k >= 1.
GraphMonoidElement gm_class(std::uint64_t k, int order);
GraphMonoidElement gm_add(const GraphMonoidElement& a,
                          const GraphMonoidElement& b);
std::string gm_describe(const GraphMonoidElement& e);

// Image of the terminus homomorphism in the graph monoid; the graph must
// be recognized by detect_gan (the root vertex maps to a copies of v).
GraphMonoidElement terminus_of(const Graph& g, const VertexMultiset& x,
                               const MonoidElement& elem);

}  // namespace glue
