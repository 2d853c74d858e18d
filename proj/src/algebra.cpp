#include "trinet/algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace trinet {

namespace {

void check_latin_or_throw(int n, const std::vector<int>& cells) {
  if (n < 1) throw std::invalid_argument("quasigroup order must be >= 1");
  if (static_cast<int>(cells.size()) != n * n)
    throw std::invalid_argument("quasigroup table is not n*n");
  std::vector<char> seen(n);
  for (int r = 0; r < n; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int c = 0; c < n; ++c) {
      int v = cells[r * n + c];
      if (v < 0 || v >= n) throw std::invalid_argument("table entry out of range");
      if (seen[v]) throw std::invalid_argument("repeated entry in a row");
      seen[v] = 1;
    }
  }
  for (int c = 0; c < n; ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int r = 0; r < n; ++r) {
      int v = cells[r * n + c];
      if (seen[v]) throw std::invalid_argument("repeated entry in a column");
      seen[v] = 1;
    }
  }
}

}  // namespace

Quasigroup::Quasigroup(int order, std::vector<int> cells) : n(order), table(std::move(cells)) {
  check_latin_or_throw(n, table);
}

int Quasigroup::rdiv(int z, int y) const {
  for (int x = 0; x < n; ++x)
    if (at(x, y) == z) return x;
  throw std::logic_error("rdiv: no solution (table not latin)");
}

int Quasigroup::ldiv(int x, int z) const {
  for (int y = 0; y < n; ++y)
    if (at(x, y) == z) return y;
  throw std::logic_error("ldiv: no solution (table not latin)");
}

Loop::Loop(Quasigroup base, int e) : q(std::move(base)), identity(e) {
  if (e < 0 || e >= q.n) throw std::invalid_argument("loop identity out of range");
  for (int x = 0; x < q.n; ++x)
    if (q.at(e, x) != x || q.at(x, e) != x)
      throw std::invalid_argument("designated element is not a two-sided identity");
}

Isotopism Isotopism::identity(int n) {
  Isotopism iso;
  iso.alpha.resize(n);
  iso.beta.resize(n);
  iso.gamma.resize(n);
  for (int i = 0; i < n; ++i) iso.alpha[i] = iso.beta[i] = iso.gamma[i] = i;
  return iso;
}

bool is_permutation(const std::vector<int>& f, int n) {
  if (static_cast<int>(f.size()) != n) return false;
  std::vector<char> seen(n, 0);
  for (int v : f) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

bool validates_isotopism(const Isotopism& iso, const Quasigroup& from, const Quasigroup& to) {
  int n = from.n;
  if (to.n != n) return false;
  if (!is_permutation(iso.alpha, n) || !is_permutation(iso.beta, n) ||
      !is_permutation(iso.gamma, n))
    return false;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (iso.gamma[from.at(x, y)] != to.at(iso.alpha[x], iso.beta[y])) return false;
  return true;
}

Isotopism compose(const Isotopism& first, const Isotopism& second) {
  int n = static_cast<int>(first.alpha.size());
  Isotopism out;
  out.alpha.resize(n);
  out.beta.resize(n);
  out.gamma.resize(n);
  for (int i = 0; i < n; ++i) {
    out.alpha[i] = second.alpha[first.alpha[i]];
    out.beta[i] = second.beta[first.beta[i]];
    out.gamma[i] = second.gamma[first.gamma[i]];
  }
  return out;
}

bool is_latin(const std::vector<std::vector<int>>& table) {
  int n = static_cast<int>(table.size());
  if (n == 0) throw std::invalid_argument("empty table");
  std::vector<int> cells;
  cells.reserve(n * n);
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("table is not square");
    for (int v : row) {
      if (v < 0 || v >= n) throw std::invalid_argument("table entry out of range");
      cells.push_back(v);
    }
  }
  try {
    check_latin_or_throw(n, cells);
  } catch (const std::invalid_argument&) {
    return false;
  }
  return true;
}

Quasigroup conjugate(const Quasigroup& q, const std::array<int, 3>& sigma) {
  {
    std::array<char, 3> seen{0, 0, 0};
    for (int v : sigma) {
      if (v < 0 || v > 2 || seen[v]) throw std::invalid_argument("bad role permutation");
      seen[v] = 1;
    }
  }
  Quasigroup out;
  out.n = q.n;
  out.table.assign(q.n * q.n, -1);
  for (int x = 0; x < q.n; ++x)
    for (int y = 0; y < q.n; ++y) {
      std::array<int, 3> t{x, y, q.at(x, y)}, tp{};
      for (int i = 0; i < 3; ++i) tp[sigma[i]] = t[i];
      out.at(tp[0], tp[1]) = tp[2];
    }
  return out;
}

const std::array<std::array<int, 3>, 6>& all_conjugacy_permutations() {
  static const std::array<std::array<int, 3>, 6> perms = {{
      {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  return perms;
}

Quasigroup relabel(const Quasigroup& q, const std::vector<int>& pi) {
  if (!is_permutation(pi, q.n)) throw std::invalid_argument("relabel: not a bijection");
  Quasigroup out;
  out.n = q.n;
  out.table.assign(q.n * q.n, -1);
  for (int x = 0; x < q.n; ++x)
    for (int y = 0; y < q.n; ++y) out.at(pi[x], pi[y]) = pi[q.at(x, y)];
  return out;
}

PrincipalLoopIsotope principal_loop_isotope(const Quasigroup& q, int e) {
  if (e < 0 || e >= q.n) throw std::invalid_argument("element out of range");
  int n = q.n;
  // x o y := (x/b) * (a\y) with b = e and a = e/e makes a*b = e the identity.
  int a = q.rdiv(e, e);
  Quasigroup out;
  out.n = n;
  out.table.assign(n * n, -1);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) out.at(x, y) = q.mul(q.rdiv(x, e), q.ldiv(a, y));
  Isotopism iso = Isotopism::identity(n);
  for (int x = 0; x < n; ++x) iso.alpha[x] = q.mul(x, e);
  for (int y = 0; y < n; ++y) iso.beta[y] = q.mul(a, y);
  return PrincipalLoopIsotope{Loop(std::move(out), e), std::move(iso)};
}

namespace {

// All products of assigned elements must agree with l2 wherever the image of
// the product is also assigned.
bool products_consistent(const Loop& l1, const Loop& l2, const std::vector<int>& phi) {
  int n = l1.n();
  for (int x = 0; x < n; ++x) {
    if (phi[x] < 0) continue;
    for (int y = 0; y < n; ++y) {
      if (phi[y] < 0) continue;
      int p = l1.mul(x, y);
      if (phi[p] >= 0 && phi[p] != l2.mul(phi[x], phi[y])) return false;
    }
  }
  return true;
}

bool loop_iso_rec(const Loop& l1, const Loop& l2, std::vector<int>& phi,
                  std::vector<char>& used, int pos) {
  int n = l1.n();
  if (pos == n) return true;
  if (phi[pos] >= 0) return loop_iso_rec(l1, l2, phi, used, pos + 1);
  for (int img = 0; img < n; ++img) {
    if (used[img]) continue;
    phi[pos] = img;
    used[img] = 1;
    if (products_consistent(l1, l2, phi) && loop_iso_rec(l1, l2, phi, used, pos + 1))
      return true;
    used[img] = 0;
    phi[pos] = -1;
  }
  return false;
}

// Lexicographically first loop isomorphism, if any.
bool loop_isomorphism(const Loop& l1, const Loop& l2, std::vector<int>& phi) {
  int n = l1.n();
  if (l2.n() != n) return false;
  phi.assign(n, -1);
  std::vector<char> used(n, 0);
  phi[l1.identity] = l2.identity;
  used[l2.identity] = 1;
  return loop_iso_rec(l1, l2, phi, used, 0);
}

}  // namespace

std::optional<Isotopism> is_isotopic(const Quasigroup& q1, const Quasigroup& q2) {
  if (q1.n != q2.n) return std::nullopt;
  int n = q1.n;
  PrincipalLoopIsotope p1 = principal_loop_isotope(q1, 0);
  // Loops are isotopic iff one is isomorphic to a principal isotope of the
  // other, and every principal isotope that is a loop is some (a,b) isotope.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Quasigroup cand;
      cand.n = n;
      cand.table.assign(n * n, -1);
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) cand.at(x, y) = q2.mul(q2.rdiv(x, b), q2.ldiv(a, y));
      Loop l2(cand, q2.mul(a, b));
      std::vector<int> phi;
      if (!loop_isomorphism(p1.loop, l2, phi)) continue;
      // q1 -> p1.loop -> l2 -> q2.
      Isotopism iso_phi{phi, phi, phi};
      Isotopism l2_to_q2 = Isotopism::identity(n);
      for (int x = 0; x < n; ++x) l2_to_q2.alpha[x] = q2.rdiv(x, b);
      for (int y = 0; y < n; ++y) l2_to_q2.beta[y] = q2.ldiv(a, y);
      Isotopism total = compose(compose(p1.iso, iso_phi), l2_to_q2);
      if (!validates_isotopism(total, q1, q2))
        throw std::logic_error("isotopy witness failed validation");
      return total;
    }
  return std::nullopt;
}

std::optional<IsostropheWitness> is_isostrophic(const Quasigroup& q1, const Quasigroup& q2) {
  for (const auto& sigma : all_conjugacy_permutations()) {
    auto iso = is_isotopic(conjugate(q1, sigma), q2);
    if (iso) return IsostropheWitness{sigma, *iso};
  }
  return std::nullopt;
}

namespace {

void monomorphism_search(const Quasigroup& s, const Quasigroup& l, std::vector<int>& phi,
                         std::vector<char>& used, int pos,
                         std::vector<std::vector<int>>& out) {
  int ns = s.n;
  if (pos == ns) {
    out.push_back(phi);
    return;
  }
  if (phi[pos] >= 0) {  // already forced
    monomorphism_search(s, l, phi, used, pos + 1, out);
    return;
  }
  for (int img = 0; img < l.n; ++img) {
    if (used[img]) continue;
    phi[pos] = img;
    used[img] = 1;
    // Propagate nothing; just check all products among assigned prefixes.
    bool ok = true;
    for (int x = 0; x <= pos && ok; ++x) {
      if (phi[x] < 0) continue;
      for (int y = 0; y <= pos && ok; ++y) {
        if (phi[y] < 0) continue;
        int p = s.at(x, y);
        if (phi[p] >= 0) {
          if (l.at(phi[x], phi[y]) != phi[p]) ok = false;
        } else {
          // Image of p is forced; it must not collide with a different element.
          int forced = l.at(phi[x], phi[y]);
          for (int z = 0; z <= pos; ++z)
            if (z != p && phi[z] == forced) {
              ok = false;
              break;
            }
        }
      }
    }
    if (ok) monomorphism_search(s, l, phi, used, pos + 1, out);
    used[img] = 0;
    phi[pos] = -1;
  }
}

}  // namespace

std::vector<std::vector<int>> find_subloop_monomorphisms(const Loop& s, const Loop& l) {
  std::vector<std::vector<int>> out;
  if (s.n() > l.n()) return out;
  std::vector<int> phi(s.n(), -1);
  std::vector<char> used(l.n(), 0);
  phi[s.identity] = l.identity;
  used[l.identity] = 1;
  monomorphism_search(s.q, l.q, phi, used, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> find_subquasigroup_monomorphisms(const Quasigroup& s,
                                                               const Quasigroup& l) {
  std::vector<std::vector<int>> out;
  if (s.n > l.n) return out;
  std::vector<int> phi(s.n, -1);
  std::vector<char> used(l.n, 0);
  monomorphism_search(s, l, phi, used, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::set<int> generated_subquasigroup(const Quasigroup& q, const std::set<int>& seed) {
  for (int v : seed)
    if (v < 0 || v >= q.n) throw std::invalid_argument("seed element out of range");
  std::set<int> closed = seed;
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> elems(closed.begin(), closed.end());
    for (int x : elems)
      for (int y : elems) {
        for (int v : {q.mul(x, y), q.rdiv(x, y), q.ldiv(x, y)})
          if (closed.insert(v).second) grew = true;
      }
  }
  return closed;
}

std::vector<std::set<int>> all_subloops(const Loop& l) {
  Quasigroup q = l.q;
  std::set<std::set<int>> found;
  std::vector<std::set<int>> frontier;
  std::set<int> base = generated_subquasigroup(q, {l.identity});
  found.insert(base);
  frontier.push_back(base);
  while (!frontier.empty()) {
    std::set<int> cur = frontier.back();
    frontier.pop_back();
    for (int x = 0; x < l.n(); ++x) {
      if (cur.count(x)) continue;
      std::set<int> seed = cur;
      seed.insert(x);
      std::set<int> grown = generated_subquasigroup(q, seed);
      if (found.insert(grown).second) frontier.push_back(grown);
    }
  }
  std::vector<std::set<int>> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), [](const std::set<int>& a, const std::set<int>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

Quasigroup cyclic_group(int n) {
  Quasigroup q;
  q.n = n;
  q.table.resize(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) q.at(x, y) = (x + y) % n;
  return q;
}

Quasigroup klein_four() {
  Quasigroup q;
  q.n = 4;
  q.table.resize(16);
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) q.at(x, y) = x ^ y;
  return q;
}

}  // namespace trinet
