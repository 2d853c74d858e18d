// Biased graphs on the node set {v1,v2,v3}: theta-condition validation,
// balance-closure, biased/quasigroup expansions and their interconversion,
// and the matching structure used by thickening.
//
// Edges carry stable (pair, index) identities.  Pair 0 joins v1v2, pair 1
// joins v2v3, pair 2 joins v1v3.  Graph loops and loose edges do not exist
// in this model.

#pragma once

#include <array>
#include <set>
#include <string>
#include <vector>

#include "trinet/algebra.hpp"

namespace trinet {

inline constexpr int kPair12 = 0;
inline constexpr int kPair23 = 1;
inline constexpr int kPair13 = 2;

// Endpoints of each pair, as node numbers 1..3.
inline constexpr std::array<std::array<int, 2>, 3> kPairNodes = {{{1, 2}, {2, 3}, {1, 3}}};

struct EdgeRef {
  int pair = 0;
  int index = 0;

  auto operator<=>(const EdgeRef&) const = default;
};

struct Digon {
  int pair = 0;
  int i = 0, j = 0;  // i < j

  auto operator<=>(const Digon&) const = default;
};

using Triangle = std::array<int, 3>;  // indices into E12, E23, E13

struct BiasedGraph3 {
  std::array<int, 3> fiber_sizes{0, 0, 0};       // p, q, r
  std::array<bool, 3> half_edges{false, false, false};  // at v1, v2, v3
  std::set<Digon> balanced_digons;
  std::set<Triangle> balanced_triangles;

  int fiber(int pair) const { return fiber_sizes[pair]; }
  int edge_count() const { return fiber_sizes[0] + fiber_sizes[1] + fiber_sizes[2]; }
  bool digon_balanced(int pair, int i, int j) const;
  bool triangle_balanced(int a, int b, int c) const {
    return balanced_triangles.count({a, b, c}) > 0;
  }

  bool operator==(const BiasedGraph3&) const = default;
};

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> violations;
};

// Structural well-formedness (index ranges, digon/triangle references) plus
// the theta condition over both order-3 theta shapes.  Malformed references
// throw std::invalid_argument; bias violations are reported, not thrown.
ValidationReport validate(const BiasedGraph3& g);

// No half edges, no balanced digons, equal nonempty fibers, and every
// cross-fiber edge pair has exactly one balanced completion.
bool is_biased_expansion(const BiasedGraph3& g);

BiasedGraph3 expansion_from_quasigroup(const Quasigroup& q);

// g*h := b13^-1 of the unique completion of (b12(g), b23(h)).  The three
// bijections map 0..gamma-1 onto the fibers.  Throws std::invalid_argument
// unless is_biased_expansion(g) and the maps are bijections.
Quasigroup quasigroup_from_expansion(const BiasedGraph3& g, const std::vector<int>& b12,
                                     const std::vector<int>& b23, const std::vector<int>& b13);

// One application of bcl: S plus every edge closing a balanced circle with
// edges of S.  Idempotent on balanced sets, not in general.
std::set<EdgeRef> balance_closure(const BiasedGraph3& g, const std::set<EdgeRef>& s);

// Half edges adjoined at every node; idempotent.
BiasedGraph3 full(const BiasedGraph3& g);

struct MatchingStructure {
  int a_size = 0, b_size = 0;                       // |E12|, |E23|
  std::vector<std::vector<std::array<int, 2>>> matchings;  // per E13 edge: {a_i, b_j} pairs
};

// M_k = { (i,j) : triangle (i,j,k) balanced }.  Requires no balanced digons.
MatchingStructure matching_structure(const BiasedGraph3& g);

}  // namespace trinet
