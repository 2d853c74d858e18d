#include "trinet/ternary.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace trinet {

namespace {

std::string triple_str(const char* name, int a, int b, int c) {
  std::ostringstream os;
  os << name << "(" << a << "," << b << "," << c << ")";
  return os.str();
}

}  // namespace

AxiomReport verify_axioms(const TernaryRing& ring) {
  AxiomReport rep;
  int n = ring.n;
  if (n < 2) {
    rep.t4 = false;
    rep.counterexample = "order < 2";
    return rep;
  }
  auto note = [&](const std::string& s) {
    if (rep.counterexample.empty()) rep.counterexample = s;
  };
  // T4 first: cheap and anchors the constants.
  for (int a = 0; a < n && rep.t4; ++a) {
    for (int b = 0; b < n; ++b) {
      if (ring.op(0, a, b) != b || ring.op(a, 0, b) != b) {
        rep.t4 = false;
        note("T4 fails at " + triple_str("t", a, 0, b));
        break;
      }
    }
    if (ring.op(1, a, 0) != a || ring.op(a, 1, 0) != a) {
      rep.t4 = false;
      note("T4 fails at " + triple_str("t", a, 1, 0));
    }
  }
  // T2: for each (a,b), x -> t(a,b,x) must be a bijection.
  std::vector<char> seen(n);
  for (int a = 0; a < n && rep.t2; ++a)
    for (int b = 0; b < n && rep.t2; ++b) {
      std::fill(seen.begin(), seen.end(), 0);
      for (int x = 0; x < n; ++x) {
        int v = ring.op(a, b, x);
        if (seen[v]) {
          rep.t2 = false;
          note("T2 fails: t(" + std::to_string(a) + "," + std::to_string(b) +
               ",x) is not bijective in x");
          break;
        }
        seen[v] = 1;
      }
    }
  // T1: for a != c and any b,d, unique x with t(x,a,b) = t(x,c,d).
  for (int a = 0; a < n && rep.t1; ++a)
    for (int c = 0; c < n && rep.t1; ++c) {
      if (a == c) continue;
      for (int b = 0; b < n && rep.t1; ++b)
        for (int d = 0; d < n && rep.t1; ++d) {
          int count = 0;
          for (int x = 0; x < n; ++x)
            if (ring.op(x, a, b) == ring.op(x, c, d)) ++count;
          if (count != 1) {
            rep.t1 = false;
            note("T1 fails for (a,b,c,d)=(" + std::to_string(a) + "," + std::to_string(b) +
                 "," + std::to_string(c) + "," + std::to_string(d) + "): " +
                 std::to_string(count) + " solutions");
          }
        }
    }
  // T3: for a != c and any b,d, unique (x,y) with t(a,x,y)=b, t(c,x,y)=d.
  for (int a = 0; a < n && rep.t3; ++a)
    for (int c = 0; c < n && rep.t3; ++c) {
      if (a == c) continue;
      for (int b = 0; b < n && rep.t3; ++b)
        for (int d = 0; d < n && rep.t3; ++d) {
          int count = 0;
          for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
              if (ring.op(a, x, y) == b && ring.op(c, x, y) == d) ++count;
          if (count != 1) {
            rep.t3 = false;
            note("T3 fails for (a,b,c,d)=(" + std::to_string(a) + "," + std::to_string(b) +
                 "," + std::to_string(c) + "," + std::to_string(d) + "): " +
                 std::to_string(count) + " solutions");
          }
        }
    }
  return rep;
}

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Polynomials over GF(p) as coefficient vectors, low degree first.
using Poly = std::vector<int>;

Poly poly_mod(Poly a, const Poly& m, int p) {
  int dm = static_cast<int>(m.size()) - 1;
  while (static_cast<int>(a.size()) > dm) {
    int lead = a.back();
    int shift = static_cast<int>(a.size()) - 1 - dm;
    if (lead != 0) {
      // m is monic, so subtract lead * x^shift * m.
      for (int i = 0; i <= dm; ++i) {
        int& c = a[i + shift];
        c = ((c - lead * m[i]) % p + p) % p;
      }
    }
    a.pop_back();
  }
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
  Poly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  return c;
}

bool poly_is_zero(const Poly& a) {
  for (int c : a)
    if (c != 0) return false;
  return true;
}

// Trial division by all monic polynomials of degree 1..deg/2.
bool is_irreducible(const Poly& m, int p) {
  int deg = static_cast<int>(m.size()) - 1;
  for (int d = 1; 2 * d <= deg; ++d) {
    int count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (int code = 0; code < count; ++code) {
      Poly div(d + 1, 0);
      div[d] = 1;
      int c = code;
      for (int i = 0; i < d; ++i) {
        div[i] = c % p;
        c /= p;
      }
      // m mod div == 0 ?
      Poly rem = m;
      int dd = d;
      while (static_cast<int>(rem.size()) - 1 >= dd) {
        int lead = rem.back();
        if (lead != 0) {
          int shift = static_cast<int>(rem.size()) - 1 - dd;
          for (int i = 0; i <= dd; ++i) {
            int& x = rem[i + shift];
            x = ((x - lead * div[i]) % p + p) % p;
          }
        }
        rem.pop_back();
        if (rem.empty()) break;
      }
      if (rem.empty() || poly_is_zero(rem)) return false;
    }
  }
  return true;
}

Poly minimal_polynomial(int p, int k) {
  // Fixed choices for the extension orders in desk range.
  if (p == 2 && k == 2) return {1, 1, 1};        // x^2 + x + 1
  if (p == 2 && k == 3) return {1, 1, 0, 1};     // x^3 + x + 1
  if (p == 2 && k == 4) return {1, 1, 0, 0, 1};  // x^4 + x + 1
  if (p == 3 && k == 2) return {1, 0, 1};        // x^2 + 1
  throw std::invalid_argument("no extension polynomial for this order");
}

}  // namespace

TernaryRing from_field(int p, int k) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (k < 1) throw std::invalid_argument("extension degree must be >= 1");
  long long order = 1;
  for (int i = 0; i < k; ++i) order *= p;
  if (order < 2 || order > 16) throw std::invalid_argument("field order out of desk range [2,16]");
  int n = static_cast<int>(order);

  // Element i <-> polynomial with base-p digits of i, low coefficient first.
  std::vector<int> mul(n * n), add(n * n);
  if (k == 1) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        add[a * n + b] = (a + b) % p;
        mul[a * n + b] = (a * b) % p;
      }
  } else {
    Poly m = minimal_polynomial(p, k);
    if (!is_irreducible(m, p)) throw std::logic_error("extension polynomial is reducible");
    auto decode = [&](int v) {
      Poly a(k, 0);
      for (int i = 0; i < k; ++i) {
        a[i] = v % p;
        v /= p;
      }
      return a;
    };
    auto encode = [&](const Poly& a) {
      int v = 0, w = 1;
      for (int i = 0; i < static_cast<int>(a.size()); ++i) {
        v += a[i] * w;
        w *= p;
      }
      return v;
    };
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        Poly pa = decode(a), pb = decode(b);
        Poly sum(k, 0);
        for (int i = 0; i < k; ++i) sum[i] = (pa[i] + pb[i]) % p;
        add[a * n + b] = encode(sum);
        mul[a * n + b] = encode(poly_mod(poly_mul(pa, pb, p), m, p));
      }
  }

  TernaryRing ring;
  ring.n = n;
  ring.t.resize(n * n * n);
  for (int x = 0; x < n; ++x)
    for (int m2 = 0; m2 < n; ++m2)
      for (int b = 0; b < n; ++b) ring.op_ref(x, m2, b) = add[mul[x * n + m2] * n + b];
  return ring;
}

Loop additive_loop(const TernaryRing& ring) {
  Quasigroup q;
  q.n = ring.n;
  q.table.resize(ring.n * ring.n);
  for (int a = 0; a < ring.n; ++a)
    for (int b = 0; b < ring.n; ++b) q.at(a, b) = ring.op(1, a, b);
  return Loop(std::move(q), 0);
}

Quasigroup multiplicative_quasigroup(const TernaryRing& ring) {
  int m = ring.n - 1;
  Quasigroup q;
  q.n = m;
  q.table.resize(m * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) q.at(a, b) = ring.op(a + 1, b + 1, 0) - 1;
  return q;
}

Loop multiplicative_loop(const TernaryRing& ring) {
  return Loop(multiplicative_quasigroup(ring), 0);  // ring element 1
}

Quasigroup diamond(const TernaryRing& ring) {
  int n = ring.n, m = n - 1;
  Quasigroup q;
  q.n = m;
  q.table.assign(m * m, -1);
  for (int x = 1; x < n; ++x)
    for (int y = 1; y < n; ++y) {
      int z = -1;
      for (int c = 1; c < n; ++c)
        if (ring.op(x, y, c) == 0) {
          z = c;
          break;
        }
      if (z < 0) throw std::invalid_argument("diamond undefined: t(x,y,.) never hits 0 off 0");
      q.at(x - 1, y - 1) = z - 1;
    }
  return q;
}

Quasigroup opposite(const Quasigroup& q) {
  Quasigroup out;
  out.n = q.n;
  out.table.resize(q.n * q.n);
  for (int x = 0; x < q.n; ++x)
    for (int y = 0; y < q.n; ++y) out.at(x, y) = q.at(y, x);
  return out;
}

TernaryRing dual(const TernaryRing& ring) {
  int n = ring.n;
  TernaryRing out;
  out.n = n;
  out.t.assign(n * n * n, -1);
  // t*(a,b,c) = d  <=>  t(b,a,d) = c; d is unique by T2.
  for (int b = 0; b < n; ++b)
    for (int a = 0; a < n; ++a)
      for (int d = 0; d < n; ++d) out.op_ref(a, b, ring.op(b, a, d)) = d;
  for (int v : out.t)
    if (v < 0) throw std::invalid_argument("dual undefined: T2 fails in the input");
  return out;
}

bool is_linear(const TernaryRing& ring) {
  int n = ring.n;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (ring.op(a, b, c) != ring.op(1, ring.op(a, b, 0), c)) return false;
  return true;
}

Isotopism linear_diamond_isotopism(const TernaryRing& ring) {
  if (!is_linear(ring)) throw std::invalid_argument("ring is not linear");
  int n = ring.n, m = n - 1;
  Isotopism iso = Isotopism::identity(m);
  Loop add = additive_loop(ring);
  for (int x = 1; x < n; ++x) {
    int y = add.q.rdiv(0, x);  // y + x = 0
    if (y == 0) throw std::logic_error("negation maps nonzero to zero");
    iso.gamma[x - 1] = y - 1;
  }
  if (!validates_isotopism(iso, diamond(ring), multiplicative_loop(ring).q))
    throw std::logic_error("diamond/multiplicative isotopism failed validation");
  return iso;
}

std::optional<int> find_identity(const Quasigroup& q) {
  for (int e = 0; e < q.n; ++e) {
    bool ok = true;
    for (int x = 0; x < q.n && ok; ++x)
      if (q.at(e, x) != x || q.at(x, e) != x) ok = false;
    if (ok) return e;
  }
  return std::nullopt;
}

}  // namespace trinet
