// Abstract 3-nets and partial 3-nets; conversions to and from quasigroups
// and biased expansions; subnet enumeration.
//
// Nets are labelled: the three pencils are named 12, 23, 13 and lines within
// a pencil are indexed 0..size-1.  A point is the triple of its lines.

#pragma once

#include <array>
#include <set>
#include <vector>

#include "trinet/algebra.hpp"
#include "trinet/biased.hpp"

namespace trinet {

struct Net3 {
  std::array<int, 3> pencil_sizes{0, 0, 0};
  std::set<std::array<int, 3>> points;  // (g,h,k): line g of 12, h of 23, k of 13

  bool operator==(const Net3&) const = default;
};

// Any two lines from distinct pencils meet in exactly one point; lines within
// a pencil share none (automatic in this encoding).
bool net_invariants_hold(const Net3& net);

Net3 net_from_quasigroup(const Quasigroup& q);

// Mutually inverse conversions; balanced triangles <-> net points.
BiasedGraph3 expansion_from_net(const Net3& net);
Net3 net_from_expansion(const BiasedGraph3& g);  // requires is_biased_expansion

struct PartialNet3 {
  std::array<int, 3> points_per_main_line{0, 0, 0};
  std::set<std::array<int, 3>> short_lines;  // one point index per main line

  bool operator==(const PartialNet3&) const = default;
};

// Main lines <-> node pairs, points <-> edges, short lines <-> balanced
// triangles.  Requires no half edges and no balanced digons.
PartialNet3 partial_net_from_biased(const BiasedGraph3& g);

bool partial_net_invariants_hold(const PartialNet3& net);

// All sub-3-nets: balance-closed, spanning, connected expansion subgraphs of
// the net's expansion, returned as line-index triples (S12, S23, S13) plus
// the induced Net3.  Deterministic order (by size, then lexicographic).
struct Subnet {
  std::array<std::vector<int>, 3> lines;  // ascending line indices per pencil
  Net3 net;                               // reindexed to 0..size-1 per pencil
};

std::vector<Subnet> subnets(const Net3& net);

}  // namespace trinet
