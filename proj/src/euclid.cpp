#include "glue/euclid.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "glue/errors.hpp"
#include "glue/moves.hpp"
#include "glue/path.hpp"

namespace glue {

std::string move_name(EuclidMove m) {
  switch (m) {
    case EuclidMove::Base:
      return "base";
    case EuclidMove::Expand:
      return "expand";
    case EuclidMove::Add:
      return "add";
  }
  throw DomainError("trace: unknown move");
}

CoprimeSolution solve_coprime(int a, int n, int b) {
  if (a < 1 || b < 1 || n < 2)
    throw DomainError("coprime: need a, b >= 1 and n >= 2");
  int r = n - 1;
  if (std::gcd(a, r) != std::gcd(b, r))
    throw DomainError("coprime: gcd(a, n-1) != gcd(b, n-1)");
  // A solution with l <= (n-1)^2 + b always exists (verified exhaustively
  // in the tests), so the scan is a loop in disguise, not a search.
  std::int64_t bound = static_cast<std::int64_t>(r) * r + b;
  for (std::int64_t l = 1; l <= bound; ++l) {
    std::int64_t la = l * a;
    if (la % r != b % r) continue;
    if (std::gcd(l, static_cast<std::int64_t>(r)) != 1) continue;
    if (la < b) continue;
    return {static_cast<int>(l), static_cast<int>((la - b) / r)};
  }
  throw DomainError("coprime: no multiplier within bound");
}

ReachableDiagram build_reachable(int l, int n) {
  if (l < 1 || n < 2) throw DomainError("reachable: need l >= 1 and n >= 2");
  if (std::gcd(l, n - 1) != 1)
    throw DomainError("reachable: gcd(l, n-1) != 1");

  // Walk (l, n) down to (1, 2); both steps preserve gcd(l, n-1) = 1 and
  // shrink l + n, and l = n - 1 forces (1, 2), so the walk terminates.
  std::vector<std::pair<int, int>> chain{{l, n}};
  while (chain.back() != std::pair<int, int>{1, 2}) {
    auto [cl, cn] = chain.back();
    if (cl > cn - 1)
      chain.push_back({cl - (cn - 1), cn});
    else
      chain.push_back({cl, cn - cl});
  }
  std::reverse(chain.begin(), chain.end());

  Graph g2 = make_G_n(2).graph;
  std::vector<Block> base_blocks;
  for (int e = 0; e < 2; ++e)
    base_blocks.push_back(make_block({{TaggedPath{0, {e}}, 0}}));
  GluingDiagram d(g2, g2, {VertexMultiset::single(0)},
                  std::move(base_blocks));

  EuclidTrace trace;
  trace.steps.push_back({1, 2, EuclidMove::Base});
  for (std::size_t i = 1; i < chain.size(); ++i) {
    auto [cl, cn] = chain[i];
    if (cn == chain[i - 1].second) {
      int u = least_unblocked_member(d, 0);
      if (u < 0) throw DomainError("reachable: every member blocked");
      d = expand_diagram(d, 0, u);
      trace.steps.push_back({cl, cn, EuclidMove::Expand});
    } else {
      d = add_diagram(d);
      trace.steps.push_back({cl, cn, EuclidMove::Add});
    }
  }
  return {std::move(d), std::move(trace)};
}

GluingDiagram floating_to_rooted(const GluingDiagram& f, int a, int b,
                                 int k) {
  if (f.rooted()) throw DomainError("root layer: diagram already rooted");
  if (a < 1 || b < 1 || k < 0)
    throw DomainError("root layer: need a, b >= 1 and k >= 0");
  auto shape = detect_gan(f.source());
  if (!shape || shape->a != 0 || !(f.source() == f.target()))
    throw DomainError("root layer: need a loop-graph diagram into itself");
  int n = shape->n;
  int l = f.x(0).size();
  if (f.x(0) != VertexMultiset::uniform(l, 0))
    throw DomainError("root layer: members must sit on the loop vertex");
  if (static_cast<std::int64_t>(l) * a !=
      static_cast<std::int64_t>(k) * (n - 1) + b)
    throw DomainError("root layer: size mismatch, l*a != k*(n-1) + b");

  Graph src = make_G_an(a, n).graph;
  Graph tgt = make_G_an(b, n).graph;

  // Root basis: k expansions of the least path, starting from the root
  // edges; slices of the sorted result are independent.
  VertexMultiset root_space = VertexMultiset::single(0);
  std::vector<TaggedPath> seed;
  seed.reserve(static_cast<std::size_t>(b));
  for (int j = 0; j < b; ++j) seed.push_back(TaggedPath{0, {j}});
  PathSet basis(std::move(seed));
  for (int i = 0; i < k; ++i)
    basis = expand_at(tgt, root_space, basis, basis.paths()[0]);

  auto paths = basis.paths();
  std::vector<Block> blocks;
  blocks.reserve(static_cast<std::size_t>(a + n));
  for (int j = 0; j < a; ++j) {
    std::vector<std::pair<TaggedPath, int>> pairs;
    pairs.reserve(static_cast<std::size_t>(l));
    for (int t = 0; t < l; ++t)
      pairs.push_back({paths[static_cast<std::size_t>(j * l + t)], t});
    blocks.push_back(make_block(std::move(pairs)));
  }
  for (int e = 0; e < n; ++e) {
    const Block& c = f.block(e);
    std::vector<std::pair<TaggedPath, int>> pairs;
    auto ps = c.set.paths();
    pairs.reserve(ps.size());
    for (std::size_t i = 0; i < ps.size(); ++i) {
      TaggedPath shifted = ps[i];
      for (int& edge : shifted.edges) edge += b;
      pairs.push_back({std::move(shifted), c.gamma[i]});
    }
    blocks.push_back(make_block(std::move(pairs)));
  }

  std::vector<VertexMultiset> x{VertexMultiset::single(0),
                                VertexMultiset::uniform(l, 1)};
  Block start = make_block({{TaggedPath{0, {}}, 0}});
  return GluingDiagram(std::move(src), std::move(tgt), std::move(x),
                       std::move(blocks), 0, 0, std::move(start));
}

IsomorphismResult build_isomorphism(int a, int n, int b, int depth_bound,
                                    int node_budget) {
  NecessaryCondition cond = check_necessary_condition(a, n, b, n);
  if (!cond.ok) throw DomainError("isomorphism: " + cond.reason);

  CoprimeSolution sol = solve_coprime(a, n, b);
  ReachableDiagram reach = build_reachable(sol.l, n);
  GluingDiagram d = floating_to_rooted(reach.diagram, a, b, sol.k);
  check_valid(d);

  if (!is_injective(d))
    throw DomainError("isomorphism: induced map is not injective");
  SurjectivityResult surj = is_surjective(d, node_budget);
  if (!surj.yes)
    throw DomainError("isomorphism: surjectivity certificate incomplete");

  // Blocks localize to a member only after roughly one gluing step per
  // element edge, so the witness slack must cover the longest basis
  // element or big diagrams never certify regardless of their size.
  int lag = 0;
  for (int v = 0; v < d.source().vertex_count(); ++v)
    for (const TaggedPath& elem : vertex_basis(d, v).paths())
      lag = std::max(lag, elem.length());
  ShiftSurjectivityResult shift = is_shift_surjective(
      d, std::max(depth_bound, lag + 1), node_budget);
  if (!shift.yes)
    throw DomainError(
        "isomorphism: shift surjectivity certificate incomplete");

  return {std::move(d), sol, std::move(reach.trace), std::move(surj),
          std::move(shift)};
}

NecessaryCondition check_necessary_condition(int a, int n, int b, int m) {
  if (a < 1 || b < 1 || n < 2 || m < 2)
    throw DomainError("necessary: need a, b >= 1 and n, m >= 2");
  NecessaryCondition out;
  Graph ga = make_G_an(a, n).graph;
  Graph gb = make_G_an(b, m).graph;
  MonoidElement root = MonoidElement::of(TaggedPath{0, {}});
  out.lhs = terminus_of(ga, VertexMultiset::single(0), root);
  out.rhs = terminus_of(gb, VertexMultiset::single(0), root);
  if (n != m) {
    out.reason = "loop counts " + std::to_string(n) + " and " +
                 std::to_string(m) +
                 " give vertex monoids of different orders";
    return out;
  }
  if (std::gcd(a, n - 1) != std::gcd(b, m - 1)) {
    out.reason = "root classes generate different subgroups: gcd(" +
                 std::to_string(a) + ", " + std::to_string(n - 1) + ") = " +
                 std::to_string(std::gcd(a, n - 1)) + " but gcd(" +
                 std::to_string(b) + ", " + std::to_string(m - 1) + ") = " +
                 std::to_string(std::gcd(b, m - 1));
    return out;
  }
  out.ok = true;
  return out;
}

}  // namespace glue
