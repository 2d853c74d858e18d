#include "trinet/biased.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace trinet {

bool BiasedGraph3::digon_balanced(int pair, int i, int j) const {
  if (i > j) std::swap(i, j);
  return balanced_digons.count(Digon{pair, i, j}) > 0;
}

namespace {

void check_structure(const BiasedGraph3& g) {
  for (int s : g.fiber_sizes)
    if (s < 0) throw std::invalid_argument("negative fiber size");
  for (const Digon& d : g.balanced_digons) {
    if (d.pair < 0 || d.pair > 2) throw std::invalid_argument("digon pair out of range");
    if (d.i >= d.j || d.i < 0 || d.j >= g.fiber_sizes[d.pair])
      throw std::invalid_argument("digon indices malformed");
  }
  for (const Triangle& t : g.balanced_triangles)
    for (int pair = 0; pair < 3; ++pair)
      if (t[pair] < 0 || t[pair] >= g.fiber_sizes[pair])
        throw std::invalid_argument("triangle index out of range");
}

std::string edge_name(int pair, int idx) {
  static const char* names[3] = {"e12", "e23", "e13"};
  return std::to_string(idx) + names[pair];
}

}  // namespace

ValidationReport validate(const BiasedGraph3& g) {
  check_structure(g);
  ValidationReport rep;

  // Shape 1: three parallel edges; the circles are the three digons.
  for (int pair = 0; pair < 3; ++pair) {
    int sz = g.fiber_sizes[pair];
    for (int i = 0; i < sz; ++i)
      for (int j = i + 1; j < sz; ++j)
        for (int k = j + 1; k < sz; ++k) {
          int bal = g.digon_balanced(pair, i, j) + g.digon_balanced(pair, i, k) +
                    g.digon_balanced(pair, j, k);
          if (bal == 2) {
            rep.ok = false;
            std::ostringstream os;
            os << "theta " << edge_name(pair, i) << " " << edge_name(pair, j) << " "
               << edge_name(pair, k) << " has exactly 2 balanced circles";
            rep.violations.push_back(os.str());
          }
        }
  }

  // Shape 2: a digon in one fiber plus the 2-path through the third node;
  // the circles are the digon and two triangles.
  auto triangle_of = [&](int pair, int e, int b2, int c2) -> Triangle {
    Triangle t{};
    t[pair] = e;
    int other[2], oi = 0;
    for (int p2 = 0; p2 < 3; ++p2)
      if (p2 != pair) other[oi++] = p2;
    t[other[0]] = b2;
    t[other[1]] = c2;
    return t;
  };
  for (int pair = 0; pair < 3; ++pair) {
    int other[2], oi = 0;
    for (int p2 = 0; p2 < 3; ++p2)
      if (p2 != pair) other[oi++] = p2;
    for (int i = 0; i < g.fiber_sizes[pair]; ++i)
      for (int j = i + 1; j < g.fiber_sizes[pair]; ++j)
        for (int x = 0; x < g.fiber_sizes[other[0]]; ++x)
          for (int y = 0; y < g.fiber_sizes[other[1]]; ++y) {
            Triangle t1 = triangle_of(pair, i, x, y);
            Triangle t2 = triangle_of(pair, j, x, y);
            int bal = g.digon_balanced(pair, i, j) +
                      (g.balanced_triangles.count(t1) > 0) +
                      (g.balanced_triangles.count(t2) > 0);
            if (bal == 2) {
              rep.ok = false;
              std::ostringstream os;
              os << "theta on digon " << edge_name(pair, i) << "," << edge_name(pair, j)
                 << " with path " << edge_name(other[0], x) << "," << edge_name(other[1], y)
                 << " has exactly 2 balanced circles";
              rep.violations.push_back(os.str());
            }
          }
  }
  return rep;
}

bool is_biased_expansion(const BiasedGraph3& g) {
  if (!validate(g).ok) return false;
  if (g.half_edges[0] || g.half_edges[1] || g.half_edges[2]) return false;
  if (!g.balanced_digons.empty()) return false;
  int gamma = g.fiber_sizes[0];
  if (gamma == 0) return false;
  if (g.fiber_sizes[1] != gamma || g.fiber_sizes[2] != gamma) return false;
  // Latin property: each cross-fiber pair completes to exactly one balanced
  // triangle.
  for (int pa = 0; pa < 3; ++pa) {
    int pb = (pa + 1) % 3, pc = (pa + 2) % 3;
    for (int i = 0; i < gamma; ++i)
      for (int j = 0; j < gamma; ++j) {
        int count = 0;
        for (int k = 0; k < gamma; ++k) {
          Triangle t{};
          t[pa] = i;
          t[pb] = j;
          t[pc] = k;
          if (g.balanced_triangles.count(t)) ++count;
        }
        if (count != 1) return false;
      }
  }
  return true;
}

BiasedGraph3 expansion_from_quasigroup(const Quasigroup& q) {
  BiasedGraph3 g;
  g.fiber_sizes = {q.n, q.n, q.n};
  for (int x = 0; x < q.n; ++x)
    for (int y = 0; y < q.n; ++y) g.balanced_triangles.insert({x, y, q.at(x, y)});
  return g;
}

Quasigroup quasigroup_from_expansion(const BiasedGraph3& g, const std::vector<int>& b12,
                                     const std::vector<int>& b23, const std::vector<int>& b13) {
  if (!is_biased_expansion(g)) throw std::invalid_argument("graph is not a biased expansion");
  int gamma = g.fiber_sizes[0];
  for (const auto* b : {&b12, &b23, &b13})
    if (!is_permutation(*b, gamma)) throw std::invalid_argument("bijection malformed");
  std::vector<int> b13_inv(gamma);
  for (int i = 0; i < gamma; ++i) b13_inv[b13[i]] = i;
  Quasigroup q;
  q.n = gamma;
  q.table.assign(gamma * gamma, -1);
  for (int x = 0; x < gamma; ++x)
    for (int y = 0; y < gamma; ++y) {
      for (int k = 0; k < gamma; ++k)
        if (g.triangle_balanced(b12[x], b23[y], k)) {
          q.at(x, y) = b13_inv[k];
          break;
        }
    }
  return q;
}

std::set<EdgeRef> balance_closure(const BiasedGraph3& g, const std::set<EdgeRef>& s) {
  for (const EdgeRef& e : s)
    if (e.pair < 0 || e.pair > 2 || e.index < 0 || e.index >= g.fiber_sizes[e.pair])
      throw std::invalid_argument("edge reference out of range");
  std::set<EdgeRef> out = s;
  // Digons: the partner of an edge already in S.
  for (const Digon& d : g.balanced_digons) {
    bool has_i = s.count({d.pair, d.i}) > 0, has_j = s.count({d.pair, d.j}) > 0;
    if (has_i && !has_j) out.insert({d.pair, d.j});
    if (has_j && !has_i) out.insert({d.pair, d.i});
  }
  // Triangles: two edges in S force the third.
  for (const Triangle& t : g.balanced_triangles) {
    bool in[3];
    for (int pair = 0; pair < 3; ++pair) in[pair] = s.count({pair, t[pair]}) > 0;
    int have = in[0] + in[1] + in[2];
    if (have == 2)
      for (int pair = 0; pair < 3; ++pair)
        if (!in[pair]) out.insert({pair, t[pair]});
  }
  return out;
}

BiasedGraph3 full(const BiasedGraph3& g) {
  BiasedGraph3 out = g;
  out.half_edges = {true, true, true};
  return out;
}

MatchingStructure matching_structure(const BiasedGraph3& g) {
  check_structure(g);
  if (!g.balanced_digons.empty())
    throw std::invalid_argument("matching structure requires no balanced digons");
  MatchingStructure ms;
  ms.a_size = g.fiber_sizes[kPair12];
  ms.b_size = g.fiber_sizes[kPair23];
  ms.matchings.resize(g.fiber_sizes[kPair13]);
  for (const Triangle& t : g.balanced_triangles)
    ms.matchings[t[kPair13]].push_back({t[kPair12], t[kPair23]});
  for (auto& m : ms.matchings) std::sort(m.begin(), m.end());
  return ms;
}

}  // namespace trinet
