#include "glue/monoid.hpp"

#include <algorithm>
#include <map>

namespace glue {

MonoidElement::MonoidElement(std::vector<MonoidTerm> terms) {
  std::map<TaggedPath, std::uint64_t> merged;
  for (auto& t : terms) {
    if (t.mult == 0) throw DomainError("monoid element: zero multiplicity");
    std::uint64_t& m = merged[t.path];
    if (m > UINT64_MAX - t.mult) {
      throw ResourceError("monoid element: multiplicity overflow");
    }
    m += t.mult;
  }
  terms_.reserve(merged.size());
  for (auto& [p, m] : merged) terms_.push_back({p, m});
}

MonoidElement MonoidElement::of(TaggedPath p, std::uint64_t mult) {
  return MonoidElement({{std::move(p), mult}});
}

int MonoidElement::max_term_length() const {
  int len = 0;
  for (const auto& t : terms_) len = std::max(len, t.path.length());
  return len;
}

MonoidElement operator+(const MonoidElement& a, const MonoidElement& b) {
  std::vector<MonoidTerm> all(a.terms().begin(), a.terms().end());
  all.insert(all.end(), b.terms().begin(), b.terms().end());
  return MonoidElement(std::move(all));
}

namespace {

void expand_term(const Graph& g, const VertexMultiset& x, const TaggedPath& p,
                 std::uint64_t mult, int depth, const NormalizeLimits& limits,
                 std::map<TaggedPath, std::uint64_t>& out,
                 std::uint64_t& leaves) {
  int t = path_terminus(g, x, p);
  if (p.length() < depth && g.out_degree(t) > 0) {
    for (int e : g.out_edges(t)) {
      expand_term(g, x, p.extended(e), mult, depth, limits, out, leaves);
    }
    return;
  }
  if (++leaves > limits.max_terms) {
    throw ResourceError("normalize: term budget exceeded");
  }
  std::uint64_t& m = out[p];
  if (m > UINT64_MAX - mult) {
    throw ResourceError("normalize: multiplicity overflow");
  }
  m += mult;
}

}  // namespace

MonoidElement normalize(const Graph& g, const VertexMultiset& x,
                        const MonoidElement& elem, int depth,
                        const NormalizeLimits& limits) {
  if (depth < elem.max_term_length()) {
    throw DomainError("normalize: depth below max term length");
  }
  if (depth > limits.max_depth) {
    throw ResourceError("normalize: depth " + std::to_string(depth) +
                        " exceeds cap " + std::to_string(limits.max_depth));
  }
  std::map<TaggedPath, std::uint64_t> out;
  std::uint64_t leaves = 0;
  for (const auto& t : elem.terms()) {
    expand_term(g, x, t.path, t.mult, depth, limits, out, leaves);
  }
  std::vector<MonoidTerm> terms;
  terms.reserve(out.size());
  for (auto& [p, m] : out) terms.push_back({p, m});
  return MonoidElement(std::move(terms));
}

bool monoid_equal(const Graph& g, const VertexMultiset& x,
                  const MonoidElement& a, const MonoidElement& b,
                  const NormalizeLimits& limits) {
  int depth = std::max(a.max_term_length(), b.max_term_length());
  return normalize(g, x, a, depth, limits) == normalize(g, x, b, depth, limits);
}

bool prefix_leq_M(const Graph& g, const VertexMultiset& x,
                  const MonoidElement& a, const MonoidElement& b,
                  const NormalizeLimits& limits) {
  int depth = std::max(a.max_term_length(), b.max_term_length());
  MonoidElement fa = normalize(g, x, a, depth, limits);
  MonoidElement fb = normalize(g, x, b, depth, limits);
  // a = b + c for some c iff every frontier term of b fits inside a's.
  auto ia = fa.terms().begin();
  for (const auto& tb : fb.terms()) {
    while (ia != fa.terms().end() && ia->path < tb.path) ++ia;
    if (ia == fa.terms().end() || ia->path != tb.path || ia->mult < tb.mult) {
      return false;
    }
  }
  return true;
}

bool independent_M(const Graph& g, const VertexMultiset& x,
                   const MonoidElement& a, const MonoidElement& b,
                   const NormalizeLimits& limits) {
  int depth = std::max(a.max_term_length(), b.max_term_length());
  MonoidElement fa = normalize(g, x, a, depth, limits);
  MonoidElement fb = normalize(g, x, b, depth, limits);
  // Distinct frontier terms at one depth are incomparable, so a shared
  // support path is the only way a nonzero element can sit below both.
  auto ia = fa.terms().begin();
  for (const auto& tb : fb.terms()) {
    while (ia != fa.terms().end() && ia->path < tb.path) ++ia;
    if (ia != fa.terms().end() && ia->path == tb.path) return false;
  }
  return true;
}

GraphMonoidElement gm_zero(int order) {
  if (order < 1) throw DomainError("graph monoid: order must be >= 1");
  return {order, 0};
}

GraphMonoidElement gm_class(std::uint64_t k, int order) {
  if (order < 1) throw DomainError("graph monoid: order must be >= 1");
  if (k == 0) return {order, 0};
  int cls = static_cast<int>(k % static_cast<std::uint64_t>(order));
  return {order, cls == 0 ? order : cls};
}

GraphMonoidElement gm_add(const GraphMonoidElement& a,
                          const GraphMonoidElement& b) {
  if (a.order != b.order) {
    throw DomainError("graph monoid: mixing different orders");
  }
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  return gm_class(static_cast<std::uint64_t>(a.cls) + b.cls, a.order);
}

std::string gm_describe(const GraphMonoidElement& e) {
  if (e.is_zero()) return "0";
  return std::to_string(e.cls) + "v";
}

GraphMonoidElement terminus_of(const Graph& g, const VertexMultiset& x,
                               const MonoidElement& elem) {
  auto shape = detect_gan(g);
  if (!shape) {
    throw DomainError("terminus_of: graph monoid arithmetic needs a graph "
                      "in the standard family");
  }
  int order = shape->n - 1;
  GraphMonoidElement acc = gm_zero(order);
  for (const auto& t : elem.terms()) {
    int v = path_terminus(g, x, t.path);
    // Root counts as a copies of the loop vertex, everything else as one.
    std::uint64_t per = v == shape->loop_vertex
                            ? 1
                            : static_cast<std::uint64_t>(shape->a);
    std::uint64_t contrib =
        (per % order) * (t.mult % static_cast<std::uint64_t>(order)) % order;
    // A nonzero term whose contribution reduces to 0 still lands in the
    // group part, as the class of order itself.
    acc = gm_add(acc, gm_class(contrib == 0 ? static_cast<std::uint64_t>(order)
                                            : contrib,
                               order));
  }
  return acc;
}

}  // namespace glue
