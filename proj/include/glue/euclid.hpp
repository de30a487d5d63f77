#pragma once

#include <string>
#include <vector>

#include "glue/diagram.hpp"
#include "glue/graph.hpp"
#include "glue/monoid.hpp"

namespace glue {

// Multiplier l >= 1 coprime to n-1, with l*a = k*(n-1) + b.
struct CoprimeSolution {
  int l = 1;
  int k = 0;

  bool operator==(const CoprimeSolution&) const = default;
};

enum class EuclidMove { Base, Expand, Add };

std::string move_name(EuclidMove m);

struct EuclidStep {
  int l = 1;
  int n = 2;
  EuclidMove move = EuclidMove::Base;

  bool operator==(const EuclidStep&) const = default;
};

// Chain of (l, n) pairs walked from (1, 2) upwards; each step is either an
// expansion (l, n) -> (l + n - 1, n) or an addition (l, n) -> (l, n + l).
struct EuclidTrace {
  std::vector<EuclidStep> steps;

  bool operator==(const EuclidTrace&) const = default;
};

// Smallest l >= 1 with l*a = b (mod n-1), gcd(l, n-1) = 1 and l*a >= b;
// k balances l*a = k*(n-1) + b.  Requires gcd(a, n-1) = gcd(b, n-1).
CoprimeSolution solve_coprime(int a, int n, int b);

struct ReachableDiagram {
  GluingDiagram diagram;
  EuclidTrace trace;
};

// Floating diagram from G_n to itself with l members over the loop vertex,
// built along the (l, n) chain: expansions happen at the least unblocked
// member, additions splice in the new loops.  Requires gcd(l, n-1) = 1.
ReachableDiagram build_reachable(int l, int n);

// Wraps a floating G_n diagram with l members into a rooted diagram from
// (G_{a,n}, R) to (G_{b,n}, R).  The root layer is a basis of l*a paths,
// grown from the root edges d_0..d_{b-1} by k expansions of the least
// path, cut into a consecutive runs of length l with order-preserving
// member maps; the loop blocks reuse the floating ones with edge ids
// shifted past the root edges.  Requires l*a = k*(n-1) + b.
GluingDiagram floating_to_rooted(const GluingDiagram& f, int a, int b, int k);

struct IsomorphismResult {
  GluingDiagram diagram;
  CoprimeSolution solution;
  EuclidTrace trace;
  SurjectivityResult surjectivity;
  ShiftSurjectivityResult shift_surjectivity;
};

// End-to-end construction with mandatory certificates: solve for l, walk
// the chain, wrap with the root layer, then require injectivity,
// surjectivity and shift surjectivity to certify within the budgets.
// Throws when the certificates do not complete; never returns unverified.
IsomorphismResult build_isomorphism(int a, int n, int b, int depth_bound = 6,
                                    int node_budget = 10000);

// Terminus classes of the two roots in their cyclic vertex monoids.  The
// monoids are isomorphic only when the loop counts agree, and the root
// classes generate the same subgroup exactly when the gcds match; both
// facts are decidable from (order, class) alone.
struct NecessaryCondition {
  bool ok = false;
  std::string reason;      // empty when ok
  GraphMonoidElement lhs;  // class of the root in the a-side monoid
  GraphMonoidElement rhs;  // class of the root in the b-side monoid
};

NecessaryCondition check_necessary_condition(int a, int n, int b, int m);

}  // namespace glue
