#include "glue/shift.hpp"

#include <algorithm>
#include <map>

namespace glue {

Shift::Shift(const Graph& g, VertexMultiset dom_space, VertexMultiset cod_space,
             std::vector<ShiftPair> pairs)
    : dom_x_(std::move(dom_space)), cod_x_(std::move(cod_space)) {
  std::sort(pairs.begin(), pairs.end());
  std::vector<TaggedPath> srcs, dsts;
  srcs.reserve(pairs.size());
  dsts.reserve(pairs.size());
  for (auto& [p, q] : pairs) {
    check_path(g, dom_x_, p);
    check_path(g, cod_x_, q);
    if (path_terminus(g, dom_x_, p) != path_terminus(g, cod_x_, q)) {
      throw DomainError("shift: pair " + path_to_string(p) + " -> " +
                        path_to_string(q) + " does not maintain the terminus");
    }
    srcs.push_back(p);
    dsts.push_back(std::move(q));
  }
  domain_ = PathSet(std::move(srcs));
  // pairs were sorted by src, so targets_ aligns with domain_ order.
  targets_ = std::move(dsts);
  std::vector<TaggedPath> cod_sorted = targets_;
  codomain_ = PathSet(std::move(cod_sorted));
  cod_to_dom_.resize(targets_.size());
  for (int i = 0; i < static_cast<int>(targets_.size()); ++i) {
    cod_to_dom_[codomain_.index_of(targets_[i])] = i;
  }
}

const TaggedPath& Shift::image_of(const TaggedPath& p) const {
  int i = domain_.index_of(p);
  if (i < 0) {
    throw DomainError("shift: " + path_to_string(p) + " not in the domain");
  }
  return targets_[i];
}

const TaggedPath& Shift::preimage_of(const TaggedPath& q) const {
  int i = codomain_.index_of(q);
  if (i < 0) {
    throw DomainError("shift: " + path_to_string(q) + " not in the codomain");
  }
  return domain_.paths()[cod_to_dom_[i]];
}

std::optional<TaggedPath> Shift::apply(const TaggedPath& x) const {
  auto p = domain_.prefix_of(x);
  if (!p) return std::nullopt;
  const TaggedPath& q = targets_[domain_.index_of(*p)];
  return q.extended(
      std::span<const int>(x.edges).subspan(p->edges.size()));
}

std::optional<TaggedPath> Shift::apply_inverse(const TaggedPath& y) const {
  auto q = codomain_.prefix_of(y);
  if (!q) return std::nullopt;
  const TaggedPath& p = domain_.paths()[cod_to_dom_[codomain_.index_of(*q)]];
  return p.extended(
      std::span<const int>(y.edges).subspan(q->edges.size()));
}

std::vector<ShiftPair> Shift::pairs_sorted() const {
  std::vector<ShiftPair> out;
  out.reserve(targets_.size());
  for (int i = 0; i < domain_.size(); ++i) {
    out.push_back({domain_.paths()[i], targets_[i]});
  }
  return out;
}

Shift identity_shift(const Graph& g, const VertexMultiset& x) {
  std::vector<ShiftPair> pairs;
  for (const auto& p : epsilons_of(x)) pairs.push_back({p, p});
  return Shift(g, x, x, std::move(pairs));
}

Shift elementary(const Graph& g, const VertexMultiset& dom_space,
                 const VertexMultiset& cod_space, const TaggedPath& p,
                 const TaggedPath& q) {
  return Shift(g, dom_space, cod_space, {{p, q}});
}

Shift refine(const Graph& g, const Shift& s, const TaggedPath& p) {
  int i = s.domain().index_of(p);
  if (i < 0) {
    throw DomainError("refine: " + path_to_string(p) + " not in the domain");
  }
  int t = path_terminus(g, s.domain_space(), p);
  auto out = g.out_edges(t);
  if (out.empty()) {
    throw DomainError("refine: terminus of " + path_to_string(p) +
                      " is a sink");
  }
  const TaggedPath& q = s.images()[i];
  std::vector<ShiftPair> pairs;
  for (int j = 0; j < s.size(); ++j) {
    if (j != i) pairs.push_back({s.domain().paths()[j], s.images()[j]});
  }
  for (int e : out) pairs.push_back({p.extended(e), q.extended(e)});
  return Shift(g, s.domain_space(), s.codomain_space(), std::move(pairs));
}

Shift inverse(const Graph& g, const Shift& s) {
  std::vector<ShiftPair> pairs;
  for (auto& [p, q] : s.pairs_sorted()) pairs.push_back({q, p});
  return Shift(g, s.codomain_space(), s.domain_space(), std::move(pairs));
}

Shift reduce(const Graph& g, const Shift& s) {
  std::vector<ShiftPair> pairs = s.pairs_sorted();
  bool changed = true;
  while (changed) {
    changed = false;
    std::map<TaggedPath, TaggedPath> by_src;
    for (auto& [p, q] : pairs) by_src.emplace(p, q);
    for (auto& [p, q] : pairs) {
      if (p.empty_path()) continue;
      TaggedPath parent = p.prefix(p.length() - 1);
      auto out = g.out_edges(path_terminus(g, s.domain_space(), parent));
      // Candidate collapsed image comes from any one child.
      if (q.empty_path() || q.edges.back() != p.edges.back()) continue;
      TaggedPath target = q.prefix(q.length() - 1);
      bool family = true;
      for (int e : out) {
        auto it = by_src.find(parent.extended(e));
        if (it == by_src.end() || it->second.empty_path() ||
            it->second.edges.back() != e ||
            it->second.prefix(it->second.length() - 1) != target) {
          family = false;
          break;
        }
      }
      if (!family) continue;
      std::vector<ShiftPair> next;
      for (auto& pr : pairs) {
        bool drop = pr.src.length() == parent.length() + 1 &&
                    is_prefix(parent, pr.src);
        if (!drop) next.push_back(pr);
      }
      next.push_back({parent, target});
      pairs = std::move(next);
      changed = true;
      break;
    }
  }
  return Shift(g, s.domain_space(), s.codomain_space(), std::move(pairs));
}

Shift compose(const Graph& g, const Shift& s, const Shift& t) {
  if (s.domain_space() != t.codomain_space()) {
    throw DomainError("compose: intermediate spaces differ");
  }
  std::vector<ShiftPair> pairs;
  for (auto& [a, b] : t.pairs_sorted()) {
    for (auto& [c, d] : s.pairs_sorted()) {
      switch (prefix_compare(c, b)) {
        case PrefixRelation::Equal:
          pairs.push_back({a, d});
          break;
        case PrefixRelation::PrefixOfSecond: {
          // b = c w: the whole t-pair lands inside one s-pair.
          std::span<const int> w(b.edges.begin() + c.length(), b.edges.end());
          pairs.push_back({a, d.extended(w)});
          break;
        }
        case PrefixRelation::SecondIsPrefix: {
          // c = b u: only the u-slice of the t-pair is mapped.
          std::span<const int> u(c.edges.begin() + b.length(), c.edges.end());
          pairs.push_back({a.extended(u), d});
          break;
        }
        case PrefixRelation::Independent:
          break;
      }
    }
  }
  if (pairs.empty()) {
    throw DomainError("compose: shifts act on disjoint cylinders");
  }
  return reduce(g, Shift(g, t.domain_space(), s.codomain_space(),
                         std::move(pairs)));
}

bool shifts_equal(const Graph& g, const Shift& s, const Shift& t) {
  return reduce(g, s) == reduce(g, t);
}

bool is_full_shift(const RootedGraph& g, const Shift& s) {
  VertexMultiset r = VertexMultiset::single(g.root);
  return s.domain_space() == r && s.codomain_space() == r &&
         is_basis(g.graph, r, s.domain()) && is_basis(g.graph, r, s.codomain());
}

FullShift full_shift(const RootedGraph& g, const Shift& s) {
  if (!is_full_shift(g, s)) {
    throw DomainError("full shift: domain and codomain must be bases over "
                      "the root");
  }
  return FullShift{reduce(g.graph, s)};
}

}  // namespace glue
