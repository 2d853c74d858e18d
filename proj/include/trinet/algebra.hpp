// Quasigroups, loops, conjugates, isotopy and isostrophe machinery, and
// subloop-monomorphism search.  Elements are 0-indexed integers; a loop is a
// quasigroup plus an explicitly designated identity (the identity is *not*
// forced to index 0; relabeling is a separate op).

#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace trinet {

struct Quasigroup {
  int n = 0;
  std::vector<int> table;  // row-major n*n, entries in 0..n-1

  Quasigroup() = default;
  Quasigroup(int order, std::vector<int> cells);

  int at(int row, int col) const { return table[row * n + col]; }
  int& at(int row, int col) { return table[row * n + col]; }

  // op and the two division operations: x*y, z/y (solve x*y=z for x),
  // x\z (solve x*y=z for y).
  int mul(int x, int y) const { return at(x, y); }
  int rdiv(int z, int y) const;  // rdiv(z,y) * y == z
  int ldiv(int x, int z) const;  // x * ldiv(x,z) == z

  bool operator==(const Quasigroup& other) const = default;
};

struct Loop {
  Quasigroup q;
  int identity = 0;

  Loop() = default;
  Loop(Quasigroup base, int e);

  int n() const { return q.n; }
  int mul(int x, int y) const { return q.mul(x, y); }

  bool operator==(const Loop& other) const = default;
};

// Bijection triple (alpha, beta, gamma) witnessing gamma(x*y) = alpha(x) *' beta(y).
struct Isotopism {
  std::vector<int> alpha, beta, gamma;

  static Isotopism identity(int n);
};

bool is_permutation(const std::vector<int>& f, int n);

// gamma(from[x][y]) == to[alpha(x)][beta(y)] for all x,y.
bool validates_isotopism(const Isotopism& iso, const Quasigroup& from, const Quasigroup& to);

// second(first(x)) composition: an isotopism Q1 -> Q3 from Q1 -> Q2 and Q2 -> Q3.
Isotopism compose(const Isotopism& first, const Isotopism& second);

// Throws std::invalid_argument on a non-square or out-of-range table.
bool is_latin(const std::vector<std::vector<int>>& table);

// Role permutation of the defining equation x*y = z.  sigma permutes the
// positions (x,y,z): the triple t maps to t' with t'[sigma[i]] = t[i].
// sigma = identity returns Q; swapping x and y gives the opposite quasigroup.
Quasigroup conjugate(const Quasigroup& q, const std::array<int, 3>& sigma);

// The six role permutations, identity first, in lexicographic order.
const std::array<std::array<int, 3>, 6>& all_conjugacy_permutations();

// Relabel elements by a bijection: result[pi(x)][pi(y)] = pi(q[x][y]).
Quasigroup relabel(const Quasigroup& q, const std::vector<int>& pi);

struct PrincipalLoopIsotope {
  Loop loop;       // identity is exactly e
  Isotopism iso;   // from q to loop, gamma = identity
};

// Principal isotope (x,y) -> (x/e) * ((e/e)\y); a loop with identity e.
PrincipalLoopIsotope principal_loop_isotope(const Quasigroup& q, int e);

// Witness from q1 to q2, or nullopt.  Order mismatch yields nullopt.
std::optional<Isotopism> is_isotopic(const Quasigroup& q1, const Quasigroup& q2);

struct IsostropheWitness {
  std::array<int, 3> sigma;  // conjugate(q1, sigma) is isotopic to q2
  Isotopism iso;             // from conjugate(q1, sigma) to q2
};

std::optional<IsostropheWitness> is_isostrophic(const Quasigroup& q1, const Quasigroup& q2);

// All injective maps phi: s -> l with phi(identity) = identity and
// phi(x*y) = phi(x)*phi(y), in lexicographic order of the image tuple.
std::vector<std::vector<int>> find_subloop_monomorphisms(const Loop& s, const Loop& l);

// Same search without the identity constraint (injective multiplicative maps
// between quasigroups).  Kept separate: whether subloop isotopy can be
// strengthened to subquasigroup isomorphism is open.
std::vector<std::vector<int>> find_subquasigroup_monomorphisms(const Quasigroup& s,
                                                               const Quasigroup& l);

// Smallest superset of seed closed under *, / and \.
std::set<int> generated_subquasigroup(const Quasigroup& q, const std::set<int>& seed);

// All subloops of l (element subsets containing the identity, closed under
// multiplication and both divisions), sorted by size then lexicographically.
std::vector<std::set<int>> all_subloops(const Loop& l);

// Canonical small tables used across tests and the embed oracles.
Quasigroup cyclic_group(int n);
Quasigroup klein_four();

}  // namespace trinet
