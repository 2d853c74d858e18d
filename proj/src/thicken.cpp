#include "trinet/thicken.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace trinet {

namespace {

bool try_augment(const BipartiteGraph& g, int l, std::vector<int>& match_l,
                 std::vector<int>& match_r, std::vector<char>& visited) {
  for (int r : g.adj[l]) {
    if (visited[r]) continue;
    visited[r] = 1;
    if (match_r[r] < 0 || try_augment(g, match_r[r], match_l, match_r, visited)) {
      match_l[l] = r;
      match_r[r] = l;
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<int> max_matching(const BipartiteGraph& g) {
  std::vector<int> match_l(g.left, -1), match_r(g.right, -1);
  std::vector<char> visited(g.right, 0);
  for (int l = 0; l < g.left; ++l) {
    std::fill(visited.begin(), visited.end(), 0);
    try_augment(g, l, match_l, match_r, visited);
  }
  return match_l;
}

std::vector<std::vector<int>> one_factorization(const BipartiteGraph& g) {
  if (g.left != g.right) throw std::invalid_argument("parts have different sizes");
  int n = g.left;
  int d = n == 0 ? 0 : static_cast<int>(g.adj[0].size());
  std::vector<std::vector<char>> present(n, std::vector<char>(n, 0));
  std::vector<int> rdeg(n, 0);
  for (int l = 0; l < n; ++l) {
    if (static_cast<int>(g.adj[l].size()) != d)
      throw std::invalid_argument("graph is not regular");
    for (int r : g.adj[l]) {
      if (present[l][r]) throw std::invalid_argument("multi-edge in factorization input");
      present[l][r] = 1;
      ++rdeg[r];
    }
  }
  for (int r = 0; r < n; ++r)
    if (rdeg[r] != d) throw std::invalid_argument("graph is not regular");

  std::vector<std::vector<int>> factors;
  for (int round = 0; round < d; ++round) {
    BipartiteGraph rest;
    rest.left = rest.right = n;
    rest.adj.resize(n);
    for (int l = 0; l < n; ++l)
      for (int r = 0; r < n; ++r)
        if (present[l][r]) rest.add_edge(l, r);
    std::vector<int> m = max_matching(rest);
    for (int l = 0; l < n; ++l) {
      if (m[l] < 0) throw std::logic_error("regular bipartite graph lost its perfect matching");
      present[l][m[l]] = 0;
    }
    factors.push_back(std::move(m));
  }
  return factors;
}

namespace {

// A matching over growing node classes, kept as match-of-A vector (-1 free).
struct GrowingMatching {
  std::vector<int> of_a;  // index: A node; value: B node or -1
};

struct SortedInput {
  std::array<int, 3> role_of_pair;  // old pair -> role (0 biggest..2 smallest)
  std::array<int, 3> pair_of_role;
  std::array<int, 3> sizes;         // p >= q >= r
  std::set<Triangle> triangles;     // reindexed by role
};

SortedInput sort_roles(const BiasedGraph3& g) {
  SortedInput s;
  std::array<int, 3> order{0, 1, 2};
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return g.fiber_sizes[x] > g.fiber_sizes[y]; });
  for (int role = 0; role < 3; ++role) {
    s.pair_of_role[role] = order[role];
    s.role_of_pair[order[role]] = role;
    s.sizes[role] = g.fiber_sizes[order[role]];
  }
  for (const Triangle& t : g.balanced_triangles) {
    Triangle nt{};
    for (int pair = 0; pair < 3; ++pair) nt[s.role_of_pair[pair]] = t[pair];
    s.triangles.insert(nt);
  }
  return s;
}

}  // namespace

ThickeningResult thicken(const BiasedGraph3& input) {
  ValidationReport vr = validate(input);
  if (!vr.ok) throw std::invalid_argument("input violates the theta condition: " + vr.violations[0]);
  if (!input.balanced_digons.empty())
    throw std::invalid_argument("balanced digons must be resolved before thickening");

  ThickeningResult result;

  if (input.edge_count() == 0) {
    // Nothing to embed; the trivial expansion contains the empty graph.
    result.expansion.fiber_sizes = {1, 1, 1};
    result.expansion.balanced_triangles.insert({0, 0, 0});
    result.gamma = 1;
    return result;
  }

  SortedInput s = sort_roles(input);
  const int p = s.sizes[0], q = s.sizes[1], r = s.sizes[2];

  int size = 0;                       // current class size (A and B stay equal after step 1)
  std::vector<GrowingMatching> m(r);  // M_1..M_r in role indexing of E13

  std::set<Triangle> out_triangles;   // in role indexing
  int gamma = 0;

  if (r == 0) {
    gamma = p;
    // B gets p - q fresh nodes; the expansion is a 1-factorized K_{p,p}.
    BipartiteGraph complete;
    complete.left = complete.right = p;
    complete.adj.resize(p);
    for (int a = 0; a < p; ++a)
      for (int b = 0; b < p; ++b) complete.add_edge(a, b);
    auto factors = one_factorization(complete);
    for (int k = 0; k < p; ++k)
      for (int a = 0; a < p; ++a) out_triangles.insert({a, factors[k][a], k});
  } else {
    // Stage 0: original matching structure.
    std::vector<int> tau(r, 0);
    for (auto& gm : m) gm.of_a.assign(p, -1);
    std::vector<std::vector<int>> of_b(r, std::vector<int>(q, -1));
    for (const Triangle& t : s.triangles) {
      m[t[2]].of_a[t[0]] = t[1];
      of_b[t[2]][t[1]] = t[0];
      ++tau[t[2]];
    }
    size = std::max(p, q);
    // Work over a common index space: A nodes 0..p-1 original, B nodes
    // 0..q-1 original; both classes then grow in lockstep.
    auto grow_to = [&](int new_size) {
      for (auto& gm : m) gm.of_a.resize(new_size, -1);
      for (auto& ob : of_b) ob.resize(new_size, -1);
    };
    grow_to(size);

    int a_count = p, b_count = q;

    // Step 1: for every node unmatched in M_1, a fresh partner on the other
    // side, matched to it in M_1.
    {
      std::vector<int> free_a, free_b;
      for (int a = 0; a < a_count; ++a)
        if (m[0].of_a[a] < 0) free_a.push_back(a);
      for (int b = 0; b < b_count; ++b)
        if (of_b[0][b] < 0) free_b.push_back(b);
      int new_size = std::max(a_count + static_cast<int>(free_b.size()),
                              b_count + static_cast<int>(free_a.size()));
      grow_to(new_size);
      for (int a : free_a) {
        int nb = b_count++;
        m[0].of_a[a] = nb;
        of_b[0][nb] = a;
      }
      for (int b : free_b) {
        int na = a_count++;
        m[0].of_a[na] = b;
        of_b[0][b] = na;
      }
      if (a_count != b_count) throw std::logic_error("step 1 left unequal classes");
      size = a_count;
    }

    // Steps 2..r: complete M_i, then hand every other matching a complete
    // matching of the freshly added block.
    for (int i = 1; i < r; ++i) {
      std::vector<int> free_a, free_b;
      for (int a = 0; a < size; ++a)
        if (m[i].of_a[a] < 0) free_a.push_back(a);
      for (int b = 0; b < size; ++b)
        if (of_b[i][b] < 0) free_b.push_back(b);
      if (free_a.size() != free_b.size())
        throw std::logic_error("matching leaves unequal free counts");
      int u = static_cast<int>(free_a.size());
      if (u == 0) continue;
      int add = std::max(r, u);
      int base = size;
      grow_to(size + add);
      size += add;
      // (a) old free nodes to the first new nodes of the opposite class.
      for (int t = 0; t < u; ++t) {
        m[i].of_a[free_a[t]] = base + t;
        of_b[i][base + t] = free_a[t];
        m[i].of_a[base + t] = free_b[t];
        of_b[i][free_b[t]] = base + t;
      }
      // (b) remaining new nodes pair up along the diagonal.
      for (int t = u; t < add; ++t) {
        m[i].of_a[base + t] = base + t;
        of_b[i][base + t] = base + t;
      }
      // (c) the other matchings each take one 1-factor of the new block,
      // avoiding the diagonal (which extends M_i's new-new part).
      BipartiteGraph block;
      block.left = block.right = add;
      block.adj.resize(add);
      for (int x = 0; x < add; ++x)
        for (int y = 0; y < add; ++y)
          if (x != y) block.add_edge(x, y);
      std::vector<std::vector<int>> factors;
      if (add > 1) factors = one_factorization(block);
      int next = 0;
      for (int k = 0; k < r; ++k) {
        if (k == i) continue;
        if (next >= static_cast<int>(factors.size()))
          throw std::logic_error("not enough disjoint matchings for the new block");
        for (int x = 0; x < add; ++x) {
          m[k].of_a[base + x] = base + factors[next][x];
          of_b[k][base + factors[next][x]] = base + x;
        }
        ++next;
      }
    }

    gamma = size;
    for (int k = 0; k < r; ++k)
      for (int a = 0; a < size; ++a) {
        if (m[k].of_a[a] < 0) throw std::logic_error("matching not complete after staging");
        out_triangles.insert({a, m[k].of_a[a], k});
      }

    // Final phase: 1-factorize the unused edges into gamma - r more fibers.
    if (gamma > r) {
      std::vector<std::vector<char>> used(size, std::vector<char>(size, 0));
      for (int k = 0; k < r; ++k)
        for (int a = 0; a < size; ++a) used[a][m[k].of_a[a]] = 1;
      BipartiteGraph rest;
      rest.left = rest.right = size;
      rest.adj.resize(size);
      for (int a = 0; a < size; ++a)
        for (int b = 0; b < size; ++b)
          if (!used[a][b]) rest.add_edge(a, b);
      auto factors = one_factorization(rest);
      for (int j = 0; j < static_cast<int>(factors.size()); ++j)
        for (int a = 0; a < size; ++a) out_triangles.insert({a, factors[j][a], r + j});
    }
  }

  // Un-sort the roles back to the input pair labels.
  result.expansion.fiber_sizes = {gamma, gamma, gamma};
  for (const Triangle& t : out_triangles) {
    Triangle original{};
    for (int pair = 0; pair < 3; ++pair) original[pair] = t[s.role_of_pair[pair]];
    result.expansion.balanced_triangles.insert(original);
  }
  result.gamma = gamma;
  for (int pair = 0; pair < 3; ++pair)
    for (int i = 0; i < input.fiber_sizes[pair]; ++i)
      result.inclusion[EdgeRef{pair, i}] = EdgeRef{pair, i};

  if (!is_biased_expansion(result.expansion))
    throw std::logic_error("thickening did not produce a biased expansion");
  return result;
}

}  // namespace trinet
