// Frame, full frame, lift, and extended lift matroids of order-3 biased
// graphs; circuit catalogs; matroids of plane point sets; representation
// checks.  Rank is at most 3 throughout, so a matroid is carried by its
// dependent triples and parallel pairs plus a rank oracle.

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "trinet/biased.hpp"
#include "trinet/plane.hpp"

namespace trinet {

// Ground-set indexing shared by the biased-graph matroids and the embedding
// constructions: links fiber by fiber, then half edges, then e0.
struct GroundMap {
  std::array<int, 3> link_base{0, 0, 0};
  std::array<int, 3> fiber_sizes{0, 0, 0};
  std::array<int, 3> half_index{-1, -1, -1};  // per node v1..v3
  int e0_index = -1;
  int size = 0;

  static GroundMap links_only(const BiasedGraph3& g);
  static GroundMap with_halves(const BiasedGraph3& g);
  static GroundMap with_e0(const BiasedGraph3& g);

  int link(int pair, int idx) const { return link_base[pair] + idx; }
  bool is_link(int elem) const { return elem < link_base[2] + fiber_sizes[2]; }
  std::string label(int elem) const;
};

struct Matroid3 {
  int rank = 0;
  std::vector<std::string> labels;
  std::vector<std::array<int, 3>> dependent_triples;  // each sorted; list sorted
  std::vector<std::array<int, 2>> parallel_pairs;     // each sorted; list sorted
  std::function<int(const std::vector<int>&)> rank_fn;

  int size() const { return static_cast<int>(labels.size()); }
  bool triple_dependent(int a, int b, int c) const;
};

// rk S = 3 - b(S); ground set is the links plus the half edges (all three
// nodes when full is set, otherwise those present in the graph).
Matroid3 frame_matroid(const BiasedGraph3& g, bool full);

// rk S = 3 - c(S), plus 1 when S is unbalanced or contains e0 (present when
// extended is set).
Matroid3 lift_matroid(const BiasedGraph3& g, bool extended);

// Minimal dependent sets, sizes 1..4, from the rank oracle.
std::vector<std::vector<int>> circuits(const Matroid3& m);

// Pattern enumeration of the order-3 circuit shapes; must agree with
// circuits() on matching ground sets.  Requires a simply biased graph.
std::vector<std::vector<int>> frame_circuit_catalog(const BiasedGraph3& g, bool full);
std::vector<std::vector<int>> lift_circuit_catalog(const BiasedGraph3& g, bool extended);

// Dependent triples are the collinear triples within the point set.
Matroid3 matroid_of_points(const Plane& plane, const std::vector<int>& points);

// point_of[e] is the plane point representing ground element e.  True iff
// the map is injective, triples match dependence <-> collinearity, and the
// matroid rank equals the projective rank of the image.
bool is_representation(const Matroid3& m, const Plane& plane, const std::vector<int>& point_of);

// Ground bijection preserving dependent triples and parallel pairs.
std::optional<std::vector<int>> matroid_isomorphic(const Matroid3& m1, const Matroid3& m2);

}  // namespace trinet
