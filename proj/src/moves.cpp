#include "glue/moves.hpp"

#include <algorithm>
#include <utility>

#include "glue/errors.hpp"

namespace glue {

int KappaMap::old_to_expanded(int tag) const {
  int deg = static_cast<int>(new_edges.size());
  return tag < member ? tag : tag + deg - 1;
}

int KappaMap::expanded_to_old(int tag) const {
  int deg = static_cast<int>(new_edges.size());
  return tag < member ? tag : tag - deg + 1;
}

KappaMap make_kappa(const Graph& g, const VertexMultiset& x, int u) {
  if (u < 0 || u >= x.size())
    throw DomainError("kappa: member out of range");
  KappaMap k;
  k.graph = g;
  k.base = x;
  k.member = u;
  auto out = g.out_edges(x.underlying(u));
  k.new_edges.assign(out.begin(), out.end());
  std::vector<int> members;
  members.reserve(static_cast<std::size_t>(x.size()) + k.new_edges.size());
  for (int t = 0; t < x.size(); ++t) {
    if (t == u) {
      for (int e : k.new_edges) members.push_back(g.terminus(e));
    } else {
      members.push_back(x.underlying(t));
    }
  }
  k.expanded = VertexMultiset{std::move(members)};
  return k;
}

TaggedPath kappa(const KappaMap& k, const TaggedPath& p) {
  int deg = static_cast<int>(k.new_edges.size());
  if (p.tag >= k.member && p.tag < k.member + deg) {
    std::vector<int> edges;
    edges.reserve(p.edges.size() + 1);
    edges.push_back(k.new_edges[static_cast<std::size_t>(p.tag - k.member)]);
    edges.insert(edges.end(), p.edges.begin(), p.edges.end());
    return TaggedPath{k.member, std::move(edges)};
  }
  return TaggedPath{k.expanded_to_old(p.tag), p.edges};
}

TaggedPath kappa_inverse(const KappaMap& k, const TaggedPath& p) {
  if (p.tag != k.member)
    return TaggedPath{k.old_to_expanded(p.tag), p.edges};
  if (p.edges.empty())
    throw DomainError(
        "kappa: the empty path at the expanded member has no preimage");
  auto it = std::find(k.new_edges.begin(), k.new_edges.end(), p.edges[0]);
  if (it == k.new_edges.end())
    throw DomainError("kappa: path does not start at the expanded member");
  int j = static_cast<int>(it - k.new_edges.begin());
  return TaggedPath{k.member + j,
                    std::vector<int>(p.edges.begin() + 1, p.edges.end())};
}

bool member_blocked(const GluingDiagram& d, int w, int u) {
  TaggedPath eps{u, {}};
  for (int e : d.source().out_edges(w))
    if (d.block(e).set.contains(eps)) return true;
  return false;
}

int least_unblocked_member(const GluingDiagram& d, int w) {
  for (int u = 0; u < d.x(w).size(); ++u)
    if (!member_blocked(d, w, u)) return u;
  return -1;
}

namespace {

// Block into w: expand the element mapping to u, hand its children to the
// new members, retag the survivors.
Block expand_target_block(const Block& c, const KappaMap& k) {
  const TaggedPath& q = c.path_for(k.member);
  std::vector<std::pair<TaggedPath, int>> pairs;
  auto ps = c.set.paths();
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (ps[i] == q) continue;
    pairs.push_back({ps[i], k.old_to_expanded(c.gamma[i])});
  }
  for (std::size_t j = 0; j < k.new_edges.size(); ++j)
    pairs.push_back(
        {q.extended(k.new_edges[j]), k.member + static_cast<int>(j)});
  return make_block(std::move(pairs));
}

// Block out of w: pull every element back along kappa; gamma rides along.
Block pull_origin_block(const Block& c, const KappaMap& k) {
  std::vector<std::pair<TaggedPath, int>> pairs;
  auto ps = c.set.paths();
  for (std::size_t i = 0; i < ps.size(); ++i)
    pairs.push_back({kappa_inverse(k, ps[i]), c.gamma[i]});
  return make_block(std::move(pairs));
}

}  // namespace

GluingDiagram expand_diagram(const GluingDiagram& d, int w, int u,
                             MoveRecord* rec) {
  check_valid(d);
  const Graph& g = d.source();
  if (w < 0 || w >= g.vertex_count())
    throw DomainError("expand: vertex out of range");
  if (u < 0 || u >= d.x(w).size())
    throw DomainError("expand: member out of range");
  if (member_blocked(d, w, u))
    throw DomainError("expand: member is blocked");

  KappaMap k = make_kappa(d.target(), d.x(w), u);

  std::vector<VertexMultiset> y;
  for (int v = 0; v < g.vertex_count(); ++v)
    y.push_back(v == w ? k.expanded : d.x(v));

  std::vector<Block> blocks;
  for (int e = 0; e < g.edge_count(); ++e) {
    Block c = d.block(e);
    if (g.terminus(e) == w) c = expand_target_block(c, k);
    if (g.origin(e) == w) c = pull_origin_block(c, k);
    blocks.push_back(std::move(c));
  }

  if (rec) {
    rec->move = "expand";
    rec->vertex = w;
    rec->member = u;
    rec->rho.clear();
    rec->gamma_plus.clear();
  }

  if (!d.rooted())
    return GluingDiagram(g, d.target(), std::move(y), std::move(blocks));
  Block start = d.start();
  if (d.source_root() == w) start = expand_target_block(start, k);
  return GluingDiagram(g, d.target(), std::move(y), std::move(blocks),
                       d.source_root(), d.target_root(), std::move(start));
}

bool same_homomorphism_upto(const GluingDiagram& d1, const GluingDiagram& d2,
                            int depth) {
  if (!d1.rooted() || !d2.rooted())
    throw DomainError("compare: rooted diagrams required");
  if (!(d1.source() == d2.source()) || !(d1.target() == d2.target()) ||
      d1.source_root() != d2.source_root() ||
      d1.target_root() != d2.target_root())
    throw DomainError("compare: graph mismatch");
  check_valid(d1);
  check_valid(d2);

  const Graph& g = d1.source();
  VertexMultiset root = VertexMultiset::single(d1.source_root());
  VertexMultiset s = VertexMultiset::single(d1.target_root());
  auto block_sum = [](const Block& b) {
    std::vector<MonoidTerm> terms;
    for (const TaggedPath& c : b.set.paths()) terms.push_back({c, 1});
    return MonoidElement(std::move(terms));
  };

  std::vector<TaggedPath> frontier = epsilons_of(root);
  for (int len = 0; len <= depth; ++len) {
    std::vector<TaggedPath> next;
    for (const TaggedPath& p : frontier) {
      MonoidElement a = block_sum(d1.block_of(p));
      MonoidElement b = block_sum(d2.block_of(p));
      NormalizeLimits lim;
      lim.max_depth =
          std::max({lim.max_depth, a.max_term_length(), b.max_term_length()});
      lim.max_terms = std::uint64_t{1} << 22;
      if (!monoid_equal(d1.target(), s, a, b, lim)) return false;
      if (len < depth)
        for (int e : g.out_edges(path_terminus(g, root, p)))
          next.push_back(p.extended(e));
    }
    frontier = std::move(next);
  }
  return true;
}

PathSet b_plus(const PathSet& b, const VertexMultiset& x, int n,
               int n_plus_l) {
  if (n < 2 || n_plus_l < n)
    throw DomainError("basis growth: loop counts must satisfy 2 <= n <= m");
  for (int t = 0; t < x.size(); ++t)
    if (x.underlying(t) != 0)
      throw DomainError("basis growth: members must sit at the loop vertex");
  Graph gn = make_G_n(n).graph;
  check_paths(gn, x, b);
  if (!is_basis(gn, x, b))
    throw DomainError("basis growth: input is not a basis");
  std::vector<TaggedPath> out(b.paths().begin(), b.paths().end());
  for (const TaggedPath& p : internal_paths(b))
    for (int j = n; j < n_plus_l; ++j) out.push_back(p.extended(j));
  return PathSet(std::move(out));
}

GluingDiagram add_diagram(const GluingDiagram& d, MoveRecord* rec) {
  check_valid(d);
  if (d.rooted())
    throw DomainError("add: floating diagram required");
  const Graph& g = d.source();
  if (g.vertex_count() != 1 || !(g == d.target()))
    throw DomainError(
        "add: one-vertex diagram over one loop graph required");
  int n = g.edge_count();
  if (n < 2) throw DomainError("add: at least two loops required");
  const VertexMultiset& x = d.x(0);
  int l = x.size();
  if (l < 1) throw DomainError("add: at least one member required");

  std::vector<TaggedPath> internals = internal_paths(vertex_basis(d, 0));
  std::sort(internals.begin(), internals.end());
  if (static_cast<int>(internals.size()) != l)
    throw DomainError(
        "add: vertex basis must have one internal path per member");

  Graph big = make_G_n(n + l).graph;
  std::vector<Block> blocks;
  for (int e = 0; e < n; ++e) blocks.push_back(d.block(e));
  for (int j = 0; j < l; ++j) {
    std::vector<std::pair<TaggedPath, int>> pairs;
    for (int jp = 0; jp < l; ++jp)
      pairs.push_back({internals[static_cast<std::size_t>(j)].extended(n + jp),
                       jp});
    blocks.push_back(make_block(std::move(pairs)));
  }

  if (rec) {
    rec->move = "add";
    rec->vertex = -1;
    rec->member = -1;
    rec->rho = internals;
    rec->gamma_plus.clear();
    for (int jp = 0; jp < l; ++jp) rec->gamma_plus.push_back(jp);
  }

  return GluingDiagram(big, big, {x}, std::move(blocks));
}

}  // namespace glue
