// Ternary rings: the axioms T1-T4, the derived additive/multiplicative loops,
// the diamond operation, duality, and linearity.  Element 0 is index 0 and
// element 1 is index 1 in every table.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trinet/algebra.hpp"

namespace trinet {

struct TernaryRing {
  int n = 0;
  std::vector<int> t;  // t[(x*n + m)*n + k]

  int op(int x, int m, int k) const { return t[(x * n + m) * n + k]; }
  int& op_ref(int x, int m, int k) { return t[(x * n + m) * n + k]; }

  bool operator==(const TernaryRing& other) const = default;
};

struct AxiomReport {
  bool t1 = true, t2 = true, t3 = true, t4 = true;
  std::string counterexample;  // first failure, human-readable

  bool all() const { return t1 && t2 && t3 && t4; }
};

// T1: a != c  ->  unique x with t(x,a,b) = t(x,c,d)
// T2: unique x with t(a,b,x) = c
// T3: a != c  ->  unique (x,y) with t(a,x,y) = b and t(c,x,y) = d
// T4: t(0,a,b) = t(a,0,b) = b,  t(1,a,0) = t(a,1,0) = a,  0 != 1
AxiomReport verify_axioms(const TernaryRing& ring);

// Linear ternary ring of GF(p^k), t(x,m,b) = x*m + b.  k > 1 uses a fixed
// irreducible polynomial, re-verified by trial division at build time.
// Throws std::invalid_argument for non-prime p or p^k > 16 or p^k < 2.
TernaryRing from_field(int p, int k = 1);

// a+b := t(1,a,b); loop with identity 0 on all of 0..n-1.
Loop additive_loop(const TernaryRing& ring);

// a*b := t(a,b,0) restricted to nonzero elements, reindexed so loop element i
// is ring element i+1; loop identity is ring element 1 (index 0).
Loop multiplicative_loop(const TernaryRing& ring);

// Raw nonzero-product table (x,y) -> t(x,y,0) without the loop check, in the
// same reindexing.  The multiplicative table of a dual ring is a quasigroup
// whose identity, if any, need not be ring element 1.
Quasigroup multiplicative_quasigroup(const TernaryRing& ring);

// x <> y := the z in R\{0} with t(x,y,z) = 0, reindexed as above.
Quasigroup diamond(const TernaryRing& ring);

Quasigroup opposite(const Quasigroup& q);

// t*(a,b,c) = d  <=>  t(b,a,d) = c.  An involution; 0 and 1 stay in place.
TernaryRing dual(const TernaryRing& ring);

// t(a,b,c) == (a*b) + c everywhere.
bool is_linear(const TernaryRing& ring);

// For linear rings: (identity, identity, gamma) from diamond to the
// multiplicative loop, gamma(x) = the y with y + x = 0 (in diamond indexing).
// Throws std::invalid_argument if the ring is not linear.
Isotopism linear_diamond_isotopism(const TernaryRing& ring);

// Two-sided identity of a quasigroup, if one exists.
std::optional<int> find_identity(const Quasigroup& q);

}  // namespace trinet
