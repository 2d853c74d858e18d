// Thickening: every finite order-3 biased graph extends to a finite biased
// expansion.  Staged matching-completion construction plus the bipartite
// maximum-matching / 1-factorization engine it relies on.

#pragma once

#include <map>
#include <vector>

#include "trinet/biased.hpp"

namespace trinet {

struct BipartiteGraph {
  int left = 0, right = 0;
  std::vector<std::vector<int>> adj;  // adj[l] = right neighbours, ascending

  void add_edge(int l, int r) { adj[l].push_back(r); }
};

// Maximum matching by augmenting paths, lowest-index first; match_left[l] is
// the matched right node or -1.
std::vector<int> max_matching(const BipartiteGraph& g);

// d pairwise edge-disjoint perfect matchings whose union is E(G).  Requires a
// d-regular bipartite graph on equal parts (else std::invalid_argument).
// Each matching is given as match-of-left vectors.
std::vector<std::vector<int>> one_factorization(const BipartiteGraph& g);

struct ThickeningResult {
  BiasedGraph3 expansion;              // a biased expansion gamma.K3
  std::map<EdgeRef, EdgeRef> inclusion;  // input links -> expansion edges
  int gamma = 0;
};

// Builds an expansion containing the input.  Half edges are stripped (the
// inclusion covers links only); balanced digons are rejected; an input that
// fails validate() is rejected.  gamma <= r(p+q) - tau for r > 0 (fiber sizes
// sorted p >= q >= r, tau = number of balanced triangles); gamma = p when
// r = 0 and the graph is nonempty.
ThickeningResult thicken(const BiasedGraph3& input);

}  // namespace trinet
