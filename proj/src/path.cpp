#include "glue/path.hpp"

#include <algorithm>
#include <charconv>

namespace glue {

int VertexMultiset::underlying(int tag) const {
  if (tag < 0 || tag >= size()) {
    throw DomainError("multiset: member tag " + std::to_string(tag) +
                      " out of range");
  }
  return members[tag];
}

TaggedPath TaggedPath::extended(int e) const {
  TaggedPath q = *this;
  q.edges.push_back(e);
  return q;
}

TaggedPath TaggedPath::extended(std::span<const int> suffix) const {
  TaggedPath q = *this;
  q.edges.insert(q.edges.end(), suffix.begin(), suffix.end());
  return q;
}

TaggedPath TaggedPath::prefix(int len) const {
  if (len < 0 || len > length()) throw DomainError("path prefix: bad length");
  return TaggedPath{tag, std::vector<int>(edges.begin(), edges.begin() + len)};
}

std::string path_to_string(const TaggedPath& p) {
  std::string s = std::to_string(p.tag) + ":";
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    if (i > 0) s += '.';
    s += 'e';
    s += std::to_string(p.edges[i]);
  }
  return s;
}

TaggedPath path_from_string(const std::string& s) {
  auto colon = s.find(':');
  if (colon == std::string::npos) {
    throw ParseError("path '" + s + "': missing ':'");
  }
  TaggedPath p;
  {
    const char* b = s.data();
    auto [ptr, ec] = std::from_chars(b, b + colon, p.tag);
    if (ec != std::errc() || ptr != b + colon || p.tag < 0) {
      throw ParseError("path '" + s + "': bad tag");
    }
  }
  std::size_t i = colon + 1;
  while (i < s.size()) {
    if (s[i] != 'e') throw ParseError("path '" + s + "': expected 'e'");
    ++i;
    int e = 0;
    const char* b = s.data() + i;
    const char* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(b, end, e);
    if (ec != std::errc() || ptr == b || e < 0) {
      throw ParseError("path '" + s + "': bad edge id");
    }
    p.edges.push_back(e);
    i = static_cast<std::size_t>(ptr - s.data());
    if (i < s.size()) {
      if (s[i] != '.') throw ParseError("path '" + s + "': expected '.'");
      ++i;
      if (i == s.size()) throw ParseError("path '" + s + "': trailing '.'");
    }
  }
  return p;
}

PrefixRelation prefix_compare(const TaggedPath& p, const TaggedPath& q) {
  if (p.tag != q.tag) return PrefixRelation::Independent;
  std::size_t n = std::min(p.edges.size(), q.edges.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (p.edges[i] != q.edges[i]) return PrefixRelation::Independent;
  }
  if (p.edges.size() == q.edges.size()) return PrefixRelation::Equal;
  return p.edges.size() < q.edges.size() ? PrefixRelation::PrefixOfSecond
                                         : PrefixRelation::SecondIsPrefix;
}

bool is_prefix(const TaggedPath& p, const TaggedPath& q) {
  auto r = prefix_compare(p, q);
  return r == PrefixRelation::Equal || r == PrefixRelation::PrefixOfSecond;
}

bool independent(const TaggedPath& p, const TaggedPath& q) {
  return prefix_compare(p, q) == PrefixRelation::Independent;
}

bool path_valid(const Graph& g, const VertexMultiset& x, const TaggedPath& p) {
  if (p.tag < 0 || p.tag >= x.size()) return false;
  int v = x.members[p.tag];
  for (int e : p.edges) {
    if (e < 0 || e >= g.edge_count() || g.origin(e) != v) return false;
    v = g.terminus(e);
  }
  return true;
}

void check_path(const Graph& g, const VertexMultiset& x, const TaggedPath& p) {
  if (!path_valid(g, x, p)) {
    throw DomainError("path " + path_to_string(p) +
                      " is not a path over the given multiset");
  }
}

int path_terminus(const Graph& g, const VertexMultiset& x, const TaggedPath& p) {
  int v = x.underlying(p.tag);
  for (int e : p.edges) {
    if (e < 0 || e >= g.edge_count() || g.origin(e) != v) {
      throw DomainError("path " + path_to_string(p) + ": edges do not compose");
    }
    v = g.terminus(e);
  }
  return v;
}

bool is_faithful_path(const Graph& g, const TaggedPath& p) {
  if (p.edges.empty()) return false;
  return g.out_degree(g.origin(p.edges.back())) > 1;
}

bool is_faithful_graph(const Graph& g) {
  // Every vertex must reach some vertex of out-degree > 1.
  for (int v = 0; v < g.vertex_count(); ++v) {
    bool ok = false;
    for (int w : reachable_from(g, v)) {
      if (g.out_degree(w) > 1) {
        ok = true;
        break;
      }
    }
    if (!ok) return false;
  }
  return true;
}

PathSet::PathSet(std::vector<TaggedPath> paths) : paths_(std::move(paths)) {
  std::sort(paths_.begin(), paths_.end());
  for (std::size_t i = 1; i < paths_.size(); ++i) {
    auto r = prefix_compare(paths_[i - 1], paths_[i]);
    if (r == PrefixRelation::Equal) {
      throw DomainError("path set: duplicate element " +
                        path_to_string(paths_[i]));
    }
    // Sorted order puts a prefix immediately before its extensions.
    if (r == PrefixRelation::PrefixOfSecond) {
      throw DomainError("path set: " + path_to_string(paths_[i - 1]) +
                        " is a prefix of " + path_to_string(paths_[i]));
    }
  }
}

bool PathSet::contains(const TaggedPath& p) const {
  return std::binary_search(paths_.begin(), paths_.end(), p);
}

int PathSet::index_of(const TaggedPath& p) const {
  auto it = std::lower_bound(paths_.begin(), paths_.end(), p);
  if (it == paths_.end() || *it != p) return -1;
  return static_cast<int>(it - paths_.begin());
}

std::optional<TaggedPath> PathSet::prefix_of(const TaggedPath& p) const {
  // The only element in [q, p] for a prefix q of p is q itself, so the
  // greatest element <= p is the candidate.
  auto it = std::upper_bound(paths_.begin(), paths_.end(), p);
  if (it == paths_.begin()) return std::nullopt;
  --it;
  if (is_prefix(*it, p)) return *it;
  return std::nullopt;
}

std::vector<TaggedPath> PathSet::extensions_of(const TaggedPath& p) const {
  std::vector<TaggedPath> out;
  auto it = std::lower_bound(paths_.begin(), paths_.end(), p);
  while (it != paths_.end() && is_prefix(p, *it)) {
    out.push_back(*it);
    ++it;
  }
  return out;
}

bool PathSet::has_extension_of(const TaggedPath& p) const {
  auto it = std::lower_bound(paths_.begin(), paths_.end(), p);
  return it != paths_.end() && is_prefix(p, *it);
}

bool PathSet::touches(const TaggedPath& p) const {
  return has_extension_of(p) || prefix_of(p).has_value();
}

void check_paths(const Graph& g, const VertexMultiset& x, const PathSet& s) {
  for (const auto& p : s.paths()) check_path(g, x, p);
}

PathSet expand_at(const Graph& g, const VertexMultiset& x, const PathSet& m,
                  const TaggedPath& q) {
  if (!m.contains(q)) {
    throw DomainError("expand_at: " + path_to_string(q) + " not in the set");
  }
  int t = path_terminus(g, x, q);
  auto out = g.out_edges(t);
  if (out.empty()) {
    throw DomainError("expand_at: terminus of " + path_to_string(q) +
                      " is a sink");
  }
  std::vector<TaggedPath> next;
  next.reserve(m.size() - 1 + out.size());
  for (const auto& p : m.paths()) {
    if (p != q) next.push_back(p);
  }
  for (int e : out) next.push_back(q.extended(e));
  return PathSet(std::move(next));
}

std::vector<TaggedPath> epsilons_of(const VertexMultiset& x) {
  std::vector<TaggedPath> eps;
  eps.reserve(x.size());
  for (int tag = 0; tag < x.size(); ++tag) eps.push_back(TaggedPath{tag, {}});
  return eps;
}

namespace {

// DFS below `p`; every visited path must be comparable to M.
// Returns false (with counterexample) on a violation; sets `inconclusive`
// when the depth bound cuts the search before it can decide.
bool cover_dfs(const Graph& g, const VertexMultiset& x, const PathSet& m,
               const TaggedPath& p, int depth, bool& inconclusive,
               std::optional<TaggedPath>& counterexample) {
  if (m.prefix_of(p)) return true;  // whole subtree covered
  if (!m.has_extension_of(p)) {
    counterexample = p;
    return false;
  }
  // p is a strict prefix of some element of M.
  if (p.length() >= depth) {
    inconclusive = true;
    return true;
  }
  int t = path_terminus(g, x, p);
  for (int e : g.out_edges(t)) {
    if (!cover_dfs(g, x, m, p.extended(e), depth, inconclusive, counterexample)) {
      return false;
    }
  }
  return true;
}

}  // namespace

CoverResult covers_exactly(const Graph& g, const VertexMultiset& x,
                           const PathSet& m, const std::vector<TaggedPath>& n,
                           int depth_bound) {
  CoverResult res;
  int needed = 0;
  for (const auto& p : m.paths()) needed = std::max(needed, p.length());
  int depth = depth_bound < 0 ? needed : depth_bound;
  res.checked_depth = depth;
  res.definite = depth >= needed;

  std::vector<TaggedPath> uniq(n.begin(), n.end());
  std::sort(uniq.begin(), uniq.end());
  uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
  // N need not be independent, so prefixes are found by scan.
  for (const auto& p : m.paths()) {
    bool found = false;
    for (const auto& q : uniq) {
      if (is_prefix(q, p)) {
        res.support.emplace_back(p, q);
        found = true;
        break;
      }
    }
    if (!found) {
      res.status = CoverStatus::No;
      res.counterexample = p;
      res.definite = true;
      return res;
    }
  }
  bool inconclusive = false;
  for (const auto& q : uniq) {
    std::optional<TaggedPath> ce;
    if (!cover_dfs(g, x, m, q, depth, inconclusive, ce)) {
      res.status = CoverStatus::No;
      res.counterexample = ce;
      res.definite = true;
      res.support.clear();
      return res;
    }
  }
  if (inconclusive) {
    res.status = CoverStatus::Unknown;
    res.support.clear();
    return res;
  }
  res.status = CoverStatus::Yes;
  return res;
}

CoverResult covers(const Graph& g, const VertexMultiset& x, const PathSet& m,
                   const std::vector<TaggedPath>& n, int depth_bound) {
  std::vector<TaggedPath> over;
  for (const auto& p : m.paths()) {
    for (const auto& q : n) {
      if (is_prefix(q, p)) {
        over.push_back(p);
        break;
      }
    }
  }
  return covers_exactly(g, x, PathSet(std::move(over)), n, depth_bound);
}

bool is_basis(const Graph& g, const VertexMultiset& x, const PathSet& m) {
  check_paths(g, x, m);
  return covers_exactly(g, x, m, epsilons_of(x)).yes();
}

std::vector<TaggedPath> internal_paths(const PathSet& b) {
  std::vector<TaggedPath> out;
  for (const auto& p : b.paths()) {
    for (int len = 0; len < p.length(); ++len) {
      TaggedPath q = p.prefix(len);
      if (!b.prefix_of(q)) out.push_back(q);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<TaggedPath> glue_pullback(const Graph& g, const VertexMultiset& mx,
                                      const PathSet& m,
                                      const std::vector<int>& f,
                                      const VertexMultiset& x,
                                      const std::vector<TaggedPath>& n) {
  if (static_cast<int>(f.size()) != m.size()) {
    throw DomainError("glue: map size does not match set size");
  }
  if (m.size() != x.size()) {
    throw DomainError("glue: map cannot be a bijection onto the multiset");
  }
  std::vector<int> inverse(x.size(), -1);
  for (int i = 0; i < m.size(); ++i) {
    int u = f[i];
    if (u < 0 || u >= x.size()) throw DomainError("glue: member out of range");
    if (inverse[u] >= 0) throw DomainError("glue: map not injective");
    inverse[u] = i;
    if (path_terminus(g, mx, m.paths()[i]) != x.underlying(u)) {
      throw DomainError("glue: map not terminus-maintaining at " +
                        path_to_string(m.paths()[i]));
    }
  }
  std::vector<TaggedPath> out;
  out.reserve(n.size());
  for (const auto& q : n) {
    check_path(g, x, q);
    const TaggedPath& base = m.paths()[inverse[q.tag]];
    out.push_back(base.extended(q.edges));
  }
  return out;
}

int Block::member_of(const TaggedPath& p) const {
  int i = set.index_of(p);
  if (i < 0) throw DomainError("block: " + path_to_string(p) + " not present");
  return gamma[i];
}

const TaggedPath& Block::path_for(int member) const {
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    if (gamma[i] == member) return set.paths()[i];
  }
  throw DomainError("block: member " + std::to_string(member) + " not hit");
}

Block make_block(std::vector<std::pair<TaggedPath, int>> pairs) {
  std::sort(pairs.begin(), pairs.end());
  std::vector<TaggedPath> paths;
  std::vector<int> gamma;
  paths.reserve(pairs.size());
  gamma.reserve(pairs.size());
  for (auto& [p, u] : pairs) {
    paths.push_back(std::move(p));
    gamma.push_back(u);
  }
  return Block{PathSet(std::move(paths)), std::move(gamma)};
}

void check_block(const Graph& g, const VertexMultiset& x, const Block& b,
                 const VertexMultiset& target) {
  check_paths(g, x, b.set);
  if (static_cast<int>(b.gamma.size()) != b.set.size()) {
    throw DomainError("block: gamma not aligned with set");
  }
  if (b.set.size() != target.size()) {
    throw DomainError("block: size " + std::to_string(b.set.size()) +
                      " does not match multiset size " +
                      std::to_string(target.size()));
  }
  std::vector<bool> hit(target.size(), false);
  for (int i = 0; i < b.set.size(); ++i) {
    int u = b.gamma[i];
    if (u < 0 || u >= target.size()) {
      throw DomainError("block: member id out of range");
    }
    if (hit[u]) throw DomainError("block: gamma not injective");
    hit[u] = true;
    if (path_terminus(g, x, b.set.paths()[i]) != target.underlying(u)) {
      throw DomainError("block: gamma not terminus-maintaining at " +
                        path_to_string(b.set.paths()[i]));
    }
  }
}

}  // namespace glue
