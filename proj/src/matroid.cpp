#include "trinet/matroid.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace trinet {

namespace {

GroundMap base_map(const BiasedGraph3& g) {
  GroundMap gm;
  gm.fiber_sizes = g.fiber_sizes;
  gm.link_base[0] = 0;
  gm.link_base[1] = g.fiber_sizes[0];
  gm.link_base[2] = g.fiber_sizes[0] + g.fiber_sizes[1];
  gm.size = g.edge_count();
  return gm;
}

}  // namespace

GroundMap GroundMap::links_only(const BiasedGraph3& g) {
  GroundMap gm = base_map(g);
  for (int node = 0; node < 3; ++node)
    if (g.half_edges[node]) gm.half_index[node] = gm.size++;
  return gm;
}

GroundMap GroundMap::with_halves(const BiasedGraph3& g) {
  GroundMap gm = base_map(g);
  for (int node = 0; node < 3; ++node) gm.half_index[node] = gm.size++;
  return gm;
}

GroundMap GroundMap::with_e0(const BiasedGraph3& g) {
  GroundMap gm = links_only(g);
  gm.e0_index = gm.size++;
  return gm;
}

std::string GroundMap::label(int elem) const {
  static const char* pair_names[3] = {"12", "23", "13"};
  for (int pair = 0; pair < 3; ++pair)
    if (elem >= link_base[pair] && elem < link_base[pair] + fiber_sizes[pair])
      return std::string(pair_names[pair]) + ":" + std::to_string(elem - link_base[pair]);
  for (int node = 0; node < 3; ++node)
    if (elem == half_index[node]) return "h" + std::to_string(node + 1);
  if (elem == e0_index) return "e0";
  return "?" + std::to_string(elem);
}

bool Matroid3::triple_dependent(int a, int b, int c) const {
  std::array<int, 3> t{a, b, c};
  std::sort(t.begin(), t.end());
  return std::binary_search(dependent_triples.begin(), dependent_triples.end(), t);
}

namespace {

struct SubsetView {
  std::array<std::vector<int>, 3> links;  // indices within each fiber
  std::array<bool, 3> half{false, false, false};
  bool e0 = false;
};

SubsetView decode(const GroundMap& gm, const std::vector<int>& subset) {
  SubsetView v;
  for (int elem : subset) {
    if (elem == gm.e0_index) {
      v.e0 = true;
      continue;
    }
    bool placed = false;
    for (int node = 0; node < 3 && !placed; ++node)
      if (elem == gm.half_index[node]) {
        v.half[node] = true;
        placed = true;
      }
    if (placed) continue;
    for (int pair = 0; pair < 3; ++pair)
      if (elem >= gm.link_base[pair] && elem < gm.link_base[pair] + gm.fiber_sizes[pair]) {
        v.links[pair].push_back(elem - gm.link_base[pair]);
        placed = true;
        break;
      }
    if (!placed) throw std::invalid_argument("ground element out of range");
  }
  return v;
}

// Spanning-subgraph components over nodes {v1,v2,v3}; returns component id
// per node and whether each component is balanced.
struct Components {
  std::array<int, 3> comp{0, 1, 2};
  int count = 3;
  std::array<bool, 3> balanced{};  // indexed by component root
};

Components analyze(const BiasedGraph3& g, const SubsetView& v) {
  Components c;
  std::array<int, 3> parent{0, 1, 2};
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x];
    return x;
  };
  for (int pair = 0; pair < 3; ++pair)
    if (!v.links[pair].empty()) {
      int a = kPairNodes[pair][0] - 1, b = kPairNodes[pair][1] - 1;
      parent[find(a)] = find(b);
    }
  std::array<bool, 3> bal{true, true, true};
  for (int node = 0; node < 3; ++node)
    if (v.half[node]) bal[find(node)] = false;
  for (int pair = 0; pair < 3; ++pair) {
    const auto& links = v.links[pair];
    int root = find(kPairNodes[pair][0] - 1);
    for (size_t i = 0; i < links.size(); ++i)
      for (size_t j = i + 1; j < links.size(); ++j)
        if (!g.digon_balanced(pair, links[i], links[j])) bal[root] = false;
  }
  if (!v.links[0].empty() && !v.links[1].empty() && !v.links[2].empty()) {
    int root = find(0);
    for (int a : v.links[0])
      for (int b : v.links[1])
        for (int cc : v.links[2])
          if (!g.triangle_balanced(a, b, cc)) bal[root] = false;
  }
  std::set<int> roots;
  for (int node = 0; node < 3; ++node) roots.insert(find(node));
  c.count = static_cast<int>(roots.size());
  for (int node = 0; node < 3; ++node) c.comp[node] = find(node);
  c.balanced = {true, true, true};
  for (int node = 0; node < 3; ++node) c.balanced[find(node)] = bal[find(node)];
  return c;
}

int frame_rank(const BiasedGraph3& g, const GroundMap& gm, const std::vector<int>& subset) {
  SubsetView v = decode(gm, subset);
  Components c = analyze(g, v);
  int balanced = 0;
  std::set<int> roots;
  for (int node = 0; node < 3; ++node) roots.insert(c.comp[node]);
  for (int r : roots)
    if (c.balanced[r]) ++balanced;
  return 3 - balanced;
}

int lift_rank(const BiasedGraph3& g, const GroundMap& gm, const std::vector<int>& subset) {
  if (subset.empty()) return 0;
  SubsetView v = decode(gm, subset);
  Components c = analyze(g, v);
  bool unbalanced = v.half[0] || v.half[1] || v.half[2];
  std::set<int> roots;
  for (int node = 0; node < 3; ++node) roots.insert(c.comp[node]);
  for (int r : roots)
    if (!c.balanced[r]) unbalanced = true;
  int rank = 3 - c.count;
  if (unbalanced || v.e0) ++rank;
  return rank;
}

Matroid3 build_from_oracle(const GroundMap& gm,
                           std::function<int(const std::vector<int>&)> rank_fn) {
  Matroid3 m;
  m.rank_fn = std::move(rank_fn);
  m.labels.resize(gm.size);
  for (int i = 0; i < gm.size; ++i) m.labels[i] = gm.label(i);
  {
    std::vector<int> all(gm.size);
    for (int i = 0; i < gm.size; ++i) all[i] = i;
    m.rank = m.rank_fn(all);
  }
  for (int a = 0; a < gm.size; ++a)
    for (int b = a + 1; b < gm.size; ++b)
      if (m.rank_fn({a, b}) <= 1) m.parallel_pairs.push_back({a, b});
  for (int a = 0; a < gm.size; ++a)
    for (int b = a + 1; b < gm.size; ++b)
      for (int c = b + 1; c < gm.size; ++c)
        if (m.rank_fn({a, b, c}) <= 2) m.dependent_triples.push_back({a, b, c});
  return m;
}

}  // namespace

Matroid3 frame_matroid(const BiasedGraph3& g, bool full_flag) {
  BiasedGraph3 graph = full_flag ? full(g) : g;
  ValidationReport rep = validate(graph);
  if (!rep.ok) throw std::invalid_argument("biased graph fails the theta condition");
  GroundMap gm = GroundMap::links_only(graph);
  return build_from_oracle(
      gm, [graph, gm](const std::vector<int>& s) { return frame_rank(graph, gm, s); });
}

Matroid3 lift_matroid(const BiasedGraph3& g, bool extended) {
  ValidationReport rep = validate(g);
  if (!rep.ok) throw std::invalid_argument("biased graph fails the theta condition");
  GroundMap gm = extended ? GroundMap::with_e0(g) : GroundMap::links_only(g);
  return build_from_oracle(
      gm, [g, gm](const std::vector<int>& s) { return lift_rank(g, gm, s); });
}

std::vector<std::vector<int>> circuits(const Matroid3& m) {
  int n = m.size();
  std::vector<std::vector<int>> out;

  auto contains_smaller = [&](const std::vector<int>& s) {
    // Check against found circuits of smaller size.
    for (const auto& c : out) {
      if (c.size() >= s.size()) continue;
      if (std::includes(s.begin(), s.end(), c.begin(), c.end())) return true;
    }
    return false;
  };

  for (int a = 0; a < n; ++a)
    if (m.rank_fn({a}) == 0) out.push_back({a});
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      std::vector<int> s{a, b};
      if (m.rank_fn(s) <= 1 && !contains_smaller(s)) out.push_back(s);
    }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        std::vector<int> s{a, b, c};
        if (m.rank_fn(s) <= 2 && !contains_smaller(s)) out.push_back(s);
      }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          std::vector<int> s{a, b, c, d};
          if (m.rank_fn(s) <= 3 && !contains_smaller(s)) out.push_back(s);
        }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  });
  return out;
}

namespace {

void require_simply_biased(const BiasedGraph3& g) {
  if (!g.balanced_digons.empty())
    throw std::invalid_argument("circuit catalog requires a simply biased graph");
}

int pair_of_nodes(int a, int b) {  // nodes in 1..3
  if (a > b) std::swap(a, b);
  if (a == 1 && b == 2) return kPair12;
  if (a == 2 && b == 3) return kPair23;
  return kPair13;
}

}  // namespace

std::vector<std::vector<int>> frame_circuit_catalog(const BiasedGraph3& g, bool full_flag) {
  BiasedGraph3 graph = full_flag ? full(g) : g;
  require_simply_biased(graph);
  GroundMap gm = GroundMap::links_only(graph);
  std::set<std::vector<int>> out;
  auto add = [&](std::vector<int> s) {
    std::sort(s.begin(), s.end());
    out.insert(std::move(s));
  };

  // Balanced triangles.
  for (const Triangle& t : graph.balanced_triangles)
    add({gm.link(0, t[0]), gm.link(1, t[1]), gm.link(2, t[2])});
  // Three parallel edges (all digons unbalanced in a simply biased graph).
  for (int pair = 0; pair < 3; ++pair) {
    int sz = graph.fiber_sizes[pair];
    for (int i = 0; i < sz; ++i)
      for (int j = i + 1; j < sz; ++j)
        for (int k = j + 1; k < sz; ++k)
          add({gm.link(pair, i), gm.link(pair, j), gm.link(pair, k)});
  }
  // Unbalanced digon plus 2-path with both triangles unbalanced.
  for (int pair = 0; pair < 3; ++pair) {
    int o1 = (pair + 1) % 3, o2 = (pair + 2) % 3;
    for (int i = 0; i < graph.fiber_sizes[pair]; ++i)
      for (int j = i + 1; j < graph.fiber_sizes[pair]; ++j)
        for (int x = 0; x < graph.fiber_sizes[o1]; ++x)
          for (int y = 0; y < graph.fiber_sizes[o2]; ++y) {
            Triangle t1{}, t2{};
            t1[pair] = i;
            t1[o1] = x;
            t1[o2] = y;
            t2 = t1;
            t2[pair] = j;
            if (!graph.balanced_triangles.count(t1) && !graph.balanced_triangles.count(t2))
              add({gm.link(pair, i), gm.link(pair, j), gm.link(o1, x), gm.link(o2, y)});
          }
  }
  // Half edge pairs joined by a link or a 2-path.
  for (int na = 1; na <= 3; ++na)
    for (int nb = na + 1; nb <= 3; ++nb) {
      if (gm.half_index[na - 1] < 0 || gm.half_index[nb - 1] < 0) continue;
      int ha = gm.half_index[na - 1], hb = gm.half_index[nb - 1];
      int direct = pair_of_nodes(na, nb);
      for (int i = 0; i < graph.fiber_sizes[direct]; ++i) add({ha, hb, gm.link(direct, i)});
      int nc = 6 - na - nb;  // the remaining node
      int pa = pair_of_nodes(na, nc), pb = pair_of_nodes(nb, nc);
      for (int i = 0; i < graph.fiber_sizes[pa]; ++i)
        for (int j = 0; j < graph.fiber_sizes[pb]; ++j)
          add({ha, hb, gm.link(pa, i), gm.link(pb, j)});
    }
  // Half edge with an unbalanced digon: at the half edge's node, or opposite
  // with one connecting link.
  for (int node = 1; node <= 3; ++node) {
    int h = gm.half_index[node - 1];
    if (h < 0) continue;
    for (int pair = 0; pair < 3; ++pair) {
      bool at_node = kPairNodes[pair][0] == node || kPairNodes[pair][1] == node;
      for (int i = 0; i < graph.fiber_sizes[pair]; ++i)
        for (int j = i + 1; j < graph.fiber_sizes[pair]; ++j) {
          if (at_node) {
            add({h, gm.link(pair, i), gm.link(pair, j)});
          } else {
            for (int endpoint = 0; endpoint < 2; ++endpoint) {
              int connector = pair_of_nodes(node, kPairNodes[pair][endpoint]);
              for (int c = 0; c < graph.fiber_sizes[connector]; ++c)
                add({h, gm.link(connector, c), gm.link(pair, i), gm.link(pair, j)});
            }
          }
        }
    }
    // Half edge with an unbalanced triangle.
    for (int a = 0; a < graph.fiber_sizes[0]; ++a)
      for (int b = 0; b < graph.fiber_sizes[1]; ++b)
        for (int c = 0; c < graph.fiber_sizes[2]; ++c)
          if (!graph.triangle_balanced(a, b, c))
            add({h, gm.link(0, a), gm.link(1, b), gm.link(2, c)});
  }
  // Two unbalanced digons from different fibers (they share one node).
  for (int pa = 0; pa < 3; ++pa)
    for (int pb = pa + 1; pb < 3; ++pb)
      for (int i = 0; i < graph.fiber_sizes[pa]; ++i)
        for (int j = i + 1; j < graph.fiber_sizes[pa]; ++j)
          for (int x = 0; x < graph.fiber_sizes[pb]; ++x)
            for (int y = x + 1; y < graph.fiber_sizes[pb]; ++y)
              add({gm.link(pa, i), gm.link(pa, j), gm.link(pb, x), gm.link(pb, y)});

  return std::vector<std::vector<int>>(out.begin(), out.end());
}

std::vector<std::vector<int>> lift_circuit_catalog(const BiasedGraph3& g, bool extended) {
  require_simply_biased(g);
  GroundMap gm = extended ? GroundMap::with_e0(g) : GroundMap::links_only(g);
  std::set<std::vector<int>> out;
  auto add = [&](std::vector<int> s) {
    std::sort(s.begin(), s.end());
    out.insert(std::move(s));
  };

  for (const Triangle& t : g.balanced_triangles)
    add({gm.link(0, t[0]), gm.link(1, t[1]), gm.link(2, t[2])});
  for (int pair = 0; pair < 3; ++pair) {
    int sz = g.fiber_sizes[pair];
    for (int i = 0; i < sz; ++i)
      for (int j = i + 1; j < sz; ++j)
        for (int k = j + 1; k < sz; ++k)
          add({gm.link(pair, i), gm.link(pair, j), gm.link(pair, k)});
  }
  for (int pair = 0; pair < 3; ++pair) {
    int o1 = (pair + 1) % 3, o2 = (pair + 2) % 3;
    for (int i = 0; i < g.fiber_sizes[pair]; ++i)
      for (int j = i + 1; j < g.fiber_sizes[pair]; ++j)
        for (int x = 0; x < g.fiber_sizes[o1]; ++x)
          for (int y = 0; y < g.fiber_sizes[o2]; ++y) {
            Triangle t1{}, t2{};
            t1[pair] = i;
            t1[o1] = x;
            t1[o2] = y;
            t2 = t1;
            t2[pair] = j;
            if (!g.balanced_triangles.count(t1) && !g.balanced_triangles.count(t2))
              add({gm.link(pair, i), gm.link(pair, j), gm.link(o1, x), gm.link(o2, y)});
          }
  }
  // Unbalanced figure pairs: connected at one node or node-disjoint, with no
  // connecting path in either case.
  // Half edge + half edge (always node-disjoint).
  for (int na = 1; na <= 3; ++na)
    for (int nb = na + 1; nb <= 3; ++nb)
      if (gm.half_index[na - 1] >= 0 && gm.half_index[nb - 1] >= 0)
        add({gm.half_index[na - 1], gm.half_index[nb - 1]});
  // Half edge + unbalanced digon (any fiber: shares a node or is opposite).
  for (int node = 1; node <= 3; ++node) {
    int h = gm.half_index[node - 1];
    if (h < 0) continue;
    for (int pair = 0; pair < 3; ++pair)
      for (int i = 0; i < g.fiber_sizes[pair]; ++i)
        for (int j = i + 1; j < g.fiber_sizes[pair]; ++j)
          add({h, gm.link(pair, i), gm.link(pair, j)});
    for (int a = 0; a < g.fiber_sizes[0]; ++a)
      for (int b = 0; b < g.fiber_sizes[1]; ++b)
        for (int c = 0; c < g.fiber_sizes[2]; ++c)
          if (!g.triangle_balanced(a, b, c))
            add({h, gm.link(0, a), gm.link(1, b), gm.link(2, c)});
  }
  // Two unbalanced digons from different fibers.
  for (int pa = 0; pa < 3; ++pa)
    for (int pb = pa + 1; pb < 3; ++pb)
      for (int i = 0; i < g.fiber_sizes[pa]; ++i)
        for (int j = i + 1; j < g.fiber_sizes[pa]; ++j)
          for (int x = 0; x < g.fiber_sizes[pb]; ++x)
            for (int y = x + 1; y < g.fiber_sizes[pb]; ++y)
              add({gm.link(pa, i), gm.link(pa, j), gm.link(pb, x), gm.link(pb, y)});
  // Unbalanced figure + e0.
  if (extended) {
    for (int node = 0; node < 3; ++node)
      if (gm.half_index[node] >= 0) add({gm.half_index[node], gm.e0_index});
    for (int pair = 0; pair < 3; ++pair)
      for (int i = 0; i < g.fiber_sizes[pair]; ++i)
        for (int j = i + 1; j < g.fiber_sizes[pair]; ++j)
          add({gm.e0_index, gm.link(pair, i), gm.link(pair, j)});
    for (int a = 0; a < g.fiber_sizes[0]; ++a)
      for (int b = 0; b < g.fiber_sizes[1]; ++b)
        for (int c = 0; c < g.fiber_sizes[2]; ++c)
          if (!g.triangle_balanced(a, b, c))
            add({gm.e0_index, gm.link(0, a), gm.link(1, b), gm.link(2, c)});
  }
  return std::vector<std::vector<int>>(out.begin(), out.end());
}

Matroid3 matroid_of_points(const Plane& plane, const std::vector<int>& points) {
  for (int p : points)
    if (p < 0 || p >= plane.n_points) throw std::invalid_argument("point out of range");
  std::vector<int> pts = points;
  Matroid3 m;
  m.labels.resize(pts.size());
  for (size_t i = 0; i < pts.size(); ++i) m.labels[i] = "p" + std::to_string(pts[i]);
  auto rank_of = [plane, pts](const std::vector<int>& subset) {
    if (subset.empty()) return 0;
    if (subset.size() == 1) return 1;
    int a = pts[subset[0]];
    size_t i = 1;
    int line = -1;
    for (; i < subset.size(); ++i) {
      if (pts[subset[i]] == a) continue;
      line = plane.join(a, pts[subset[i]]);
      break;
    }
    if (line < 0) return 1;
    for (; i < subset.size(); ++i)
      if (!plane.on(line, pts[subset[i]])) return 3;
    return 2;
  };
  m.rank_fn = rank_of;
  {
    std::vector<int> all(pts.size());
    for (size_t i = 0; i < pts.size(); ++i) all[i] = static_cast<int>(i);
    m.rank = rank_of(all);
  }
  int n = static_cast<int>(pts.size());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (pts[a] == pts[b]) m.parallel_pairs.push_back({a, b});
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        if (rank_of({a, b, c}) <= 2) m.dependent_triples.push_back({a, b, c});
  return m;
}

bool is_representation(const Matroid3& m, const Plane& plane, const std::vector<int>& point_of) {
  if (static_cast<int>(point_of.size()) != m.size())
    throw std::invalid_argument("map does not cover the ground set");
  for (int p : point_of)
    if (p < 0 || p >= plane.n_points) throw std::invalid_argument("map hits a bad point");
  int n = m.size();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (point_of[a] == point_of[b]) return false;
  if (!m.parallel_pairs.empty()) return false;  // injective images cannot be parallel
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        bool dep = m.triple_dependent(a, b, c);
        bool col = plane.on(plane.join(point_of[a], point_of[b]), point_of[c]);
        if (dep != col) return false;
      }
  // Rank of the image.
  int rank;
  if (n == 0) rank = 0;
  else if (n == 1) rank = 1;
  else {
    int line = plane.join(point_of[0], point_of[1]);
    rank = 2;
    for (int i = 2; i < n; ++i)
      if (!plane.on(line, point_of[i])) {
        rank = 3;
        break;
      }
  }
  return rank == m.rank;
}

namespace {

struct IsoStats {
  int triples = 0;
  int parallels = 0;

  bool operator==(const IsoStats&) const = default;
};

std::vector<IsoStats> element_stats(const Matroid3& m) {
  std::vector<IsoStats> stats(m.size());
  for (const auto& t : m.dependent_triples)
    for (int e : t) ++stats[e].triples;
  for (const auto& p : m.parallel_pairs)
    for (int e : p) ++stats[e].parallels;
  return stats;
}

bool matroid_iso_rec(const Matroid3& m1, const Matroid3& m2, const std::vector<IsoStats>& s1,
                     const std::vector<IsoStats>& s2, std::vector<int>& map,
                     std::vector<char>& used, int pos) {
  int n = m1.size();
  if (pos == n) return true;
  for (int img = 0; img < n; ++img) {
    if (used[img]) continue;
    if (!(s1[pos] == s2[img])) continue;
    map[pos] = img;
    used[img] = 1;
    bool ok = true;
    for (int a = 0; a < pos && ok; ++a) {
      if (map[a] < 0) continue;
      for (int b = a + 1; b <= pos && ok; ++b) {
        if (map[b] < 0) continue;
        // parallel pairs must correspond
        bool p1 = std::binary_search(m1.parallel_pairs.begin(), m1.parallel_pairs.end(),
                                     std::array<int, 2>{a, b});
        bool p2 = std::binary_search(m2.parallel_pairs.begin(), m2.parallel_pairs.end(),
                                     std::array<int, 2>{std::min(map[a], map[b]),
                                                        std::max(map[a], map[b])});
        if (p1 != p2) ok = false;
        for (int c = b + 1; c <= pos && ok; ++c) {
          if (map[c] < 0) continue;
          std::array<int, 3> img_t{map[a], map[b], map[c]};
          std::sort(img_t.begin(), img_t.end());
          bool d1 = m1.triple_dependent(a, b, c);
          bool d2 = std::binary_search(m2.dependent_triples.begin(),
                                       m2.dependent_triples.end(), img_t);
          if (d1 != d2) ok = false;
        }
      }
    }
    if (ok && matroid_iso_rec(m1, m2, s1, s2, map, used, pos + 1)) return true;
    used[img] = 0;
    map[pos] = -1;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> matroid_isomorphic(const Matroid3& m1, const Matroid3& m2) {
  if (m1.size() != m2.size() || m1.rank != m2.rank) return std::nullopt;
  if (m1.dependent_triples.size() != m2.dependent_triples.size()) return std::nullopt;
  if (m1.parallel_pairs.size() != m2.parallel_pairs.size()) return std::nullopt;
  std::vector<IsoStats> s1 = element_stats(m1), s2 = element_stats(m2);
  {
    auto c1 = s1, c2 = s2;
    auto lt = [](const IsoStats& a, const IsoStats& b) {
      return a.triples != b.triples ? a.triples < b.triples : a.parallels < b.parallels;
    };
    std::sort(c1.begin(), c1.end(), lt);
    std::sort(c2.begin(), c2.end(), lt);
    if (!(c1 == c2)) return std::nullopt;
  }
  std::vector<int> map(m1.size(), -1);
  std::vector<char> used(m1.size(), 0);
  if (matroid_iso_rec(m1, m2, s1, s2, map, used, 0)) return map;
  return std::nullopt;
}

}  // namespace trinet
