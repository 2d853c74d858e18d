#include "trinet/nets.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace trinet {

bool net_invariants_hold(const Net3& net) {
  int n = net.pencil_sizes[0];
  if (net.pencil_sizes[1] != n || net.pencil_sizes[2] != n || n < 1) return false;
  for (const auto& pt : net.points)
    for (int pair = 0; pair < 3; ++pair)
      if (pt[pair] < 0 || pt[pair] >= n) return false;
  // Exactly one common point for any two lines from distinct pencils.
  for (int pa = 0; pa < 3; ++pa) {
    int pb = (pa + 1) % 3;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        int count = 0;
        for (const auto& pt : net.points)
          if (pt[pa] == i && pt[pb] == j) ++count;
        if (count != 1) return false;
      }
  }
  return true;
}

Net3 net_from_quasigroup(const Quasigroup& q) {
  Net3 net;
  net.pencil_sizes = {q.n, q.n, q.n};
  for (int g = 0; g < q.n; ++g)
    for (int h = 0; h < q.n; ++h) net.points.insert({g, h, q.at(g, h)});
  return net;
}

BiasedGraph3 expansion_from_net(const Net3& net) {
  BiasedGraph3 g;
  g.fiber_sizes = net.pencil_sizes;
  for (const auto& pt : net.points) g.balanced_triangles.insert({pt[0], pt[1], pt[2]});
  return g;
}

Net3 net_from_expansion(const BiasedGraph3& g) {
  if (!is_biased_expansion(g)) throw std::invalid_argument("not a biased expansion");
  Net3 net;
  net.pencil_sizes = g.fiber_sizes;
  for (const auto& t : g.balanced_triangles) net.points.insert(t);
  return net;
}

PartialNet3 partial_net_from_biased(const BiasedGraph3& g) {
  if (g.half_edges[0] || g.half_edges[1] || g.half_edges[2])
    throw std::invalid_argument("partial net requires no half edges");
  if (!g.balanced_digons.empty())
    throw std::invalid_argument("partial net requires no balanced digons");
  PartialNet3 net;
  net.points_per_main_line = g.fiber_sizes;
  for (const auto& t : g.balanced_triangles) net.short_lines.insert(t);
  return net;
}

bool partial_net_invariants_hold(const PartialNet3& net) {
  for (const auto& l : net.short_lines)
    for (int pair = 0; pair < 3; ++pair)
      if (l[pair] < 0 || l[pair] >= net.points_per_main_line[pair]) return false;
  // Two short lines share at most one point: triples differ in >= 2 slots.
  for (auto it = net.short_lines.begin(); it != net.short_lines.end(); ++it)
    for (auto jt = std::next(it); jt != net.short_lines.end(); ++jt) {
      int agree = 0;
      for (int pair = 0; pair < 3; ++pair) agree += ((*it)[pair] == (*jt)[pair]);
      if (agree >= 2) return false;
    }
  return true;
}

namespace {

// Fiber triple of a sub-expansion, as sorted line-index lists.
using FiberTriple = std::array<std::vector<int>, 3>;

}  // namespace

std::vector<Subnet> subnets(const Net3& net) {
  if (!net_invariants_hold(net)) throw std::invalid_argument("invalid net");
  int n = net.pencil_sizes[0];
  // The quasigroup on line indices: g*h = k iff (g,h,k) is a point.
  Quasigroup q;
  q.n = n;
  q.table.assign(n * n, -1);
  for (const auto& pt : net.points) q.at(pt[0], pt[1]) = pt[2];

  // Sub-expansions are exactly the subloops of the principal isotopes
  // (a,b) -> x o y = (x/b)*(a\y), carried back through the isotopy.
  std::set<FiberTriple> seen;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Quasigroup iso;
      iso.n = n;
      iso.table.assign(n * n, -1);
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) iso.at(x, y) = q.mul(q.rdiv(x, b), q.ldiv(a, y));
      Loop loop(iso, q.mul(a, b));
      for (const std::set<int>& sub : all_subloops(loop)) {
        FiberTriple fibers;
        for (int u : sub) {
          fibers[2].push_back(u);                // S13 = subloop itself
          fibers[0].push_back(q.rdiv(u, b));     // S12 = {u/b}
          fibers[1].push_back(q.ldiv(a, u));     // S23 = {a\u}
        }
        for (auto& f : fibers) std::sort(f.begin(), f.end());
        seen.insert(fibers);
      }
    }

  std::vector<Subnet> out;
  for (const FiberTriple& fibers : seen) {
    Subnet s;
    s.lines = fibers;
    int m = static_cast<int>(fibers[0].size());
    s.net.pencil_sizes = {m, m, m};
    std::array<std::map<int, int>, 3> index;
    for (int pair = 0; pair < 3; ++pair)
      for (int i = 0; i < m; ++i) index[pair][fibers[pair][i]] = i;
    for (const auto& pt : net.points) {
      if (!index[0].count(pt[0]) || !index[1].count(pt[1]) || !index[2].count(pt[2])) continue;
      s.net.points.insert({index[0][pt[0]], index[1][pt[1]], index[2][pt[2]]});
    }
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const Subnet& a, const Subnet& b) {
    if (a.lines[0].size() != b.lines[0].size()) return a.lines[0].size() < b.lines[0].size();
    return a.lines < b.lines;
  });
  return out;
}

}  // namespace trinet
