#pragma once

// Brute-force references. Nothing here calls into the torsim algorithms
// under test; groups are plain coordinate tuples and maps are enumerated.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using Elem = std::vector<int>;

/// Z/r_1 + ... + Z/r_k with explicit coordinates.
struct Group {
  std::vector<int> radices;

  std::vector<Elem> elements() const {
    std::vector<Elem> out{Elem(radices.size(), 0)};
    for (std::size_t i = 0; i < radices.size(); ++i) {
      std::vector<Elem> next;
      for (const auto& e : out)
        for (int c = 0; c < radices[i]; ++c) {
          Elem f = e;
          f[i] = c;
          next.push_back(f);
        }
      out = std::move(next);
    }
    return out;
  }
  Elem add(const Elem& a, const Elem& b) const {
    Elem c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = (a[i] + b[i]) % radices[i];
    return c;
  }
  Elem scale(const Elem& a, long k) const {
    Elem c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = static_cast<int>(((a[i] * (k % radices[i])) % radices[i] + radices[i]) % radices[i]);
    return c;
  }
  bool is_zero(const Elem& a) const {
    return std::all_of(a.begin(), a.end(), [](int v) { return v == 0; });
  }
  int order() const {
    int n = 1;
    for (int r : radices) n *= r;
    return n;
  }
  int element_order(const Elem& a) const {
    Elem x = a;
    int k = 1;
    while (!is_zero(x)) {
      x = add(x, a);
      ++k;
    }
    return k;
  }
};

/// Subgroup spanned by a set of elements, by closure under addition.
inline std::set<Elem> span(const Group& G, const std::vector<Elem>& gens) {
  std::set<Elem> S{Elem(G.radices.size(), 0)};
  std::vector<Elem> frontier(S.begin(), S.end());
  while (!frontier.empty()) {
    std::vector<Elem> next;
    for (const auto& a : frontier)
      for (const auto& g : gens) {
        Elem b = G.add(a, g);
        if (S.insert(b).second) next.push_back(b);
      }
    frontier = std::move(next);
  }
  return S;
}

/// All subgroups: every subgroup of a rank-k group is generated by at most k
/// elements, so spans of all k-tuples suffice.
inline std::set<std::set<Elem>> all_subgroups(const Group& G) {
  auto E = G.elements();
  std::set<std::set<Elem>> out;
  std::size_t k = std::max<std::size_t>(1, G.radices.size());
  std::vector<std::size_t> idx(k, 0);
  for (;;) {
    std::vector<Elem> gens;
    for (auto i : idx) gens.push_back(E[i]);
    out.insert(span(G, gens));
    std::size_t pos = 0;
    while (pos < k && ++idx[pos] == E.size()) idx[pos++] = 0;
    if (pos == k) break;
  }
  return out;
}

/// |Hom(A, B)|: choices of images b_i with r_i b_i = 0.
inline long hom_count(const Group& A, const Group& B) {
  auto E = B.elements();
  long total = 1;
  for (int r : A.radices) {
    long c = 0;
    for (const auto& b : E)
      if (B.is_zero(B.scale(b, r))) ++c;
    total *= c;
  }
  return total;
}

/// Primes p with an element of order exactly p (Ass of a finite Z-module).
inline std::set<int> associated_primes(const Group& G) {
  std::set<int> out;
  for (const auto& e : G.elements()) {
    int o = G.element_order(e);
    bool prime = o > 1;
    for (int d = 2; d * d <= o; ++d)
      if (o % d == 0) prime = false;
    if (prime) out.insert(o);
  }
  return out;
}

/// Annihilator of a in Z/n as an explicit set.
inline std::set<long> annihilator(long a, long n) {
  std::set<long> out;
  for (long x = 0; x < n; ++x)
    if ((a * x) % n == 0) out.insert(x);
  return out;
}

/// Number of abelian groups of order n: product of partition numbers of the
/// prime exponents.
inline long abelian_group_count(long n) {
  auto partitions = [](int e) {
    std::vector<long> p(static_cast<std::size_t>(e) + 1, 0);
    p[0] = 1;
    for (int part = 1; part <= e; ++part)
      for (int s = part; s <= e; ++s) p[static_cast<std::size_t>(s)] += p[static_cast<std::size_t>(s - part)];
    return p[static_cast<std::size_t>(e)];
  };
  long total = 1;
  for (long p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) total *= partitions(e);
  }
  return total;
}

// ---------------------------------------------------------------------------
// Linear algebra
// ---------------------------------------------------------------------------

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Rank over Q by plain Gaussian elimination on rationals.
inline std::size_t rational_rank(std::vector<std::vector<BigInt>> a) {
  std::vector<std::vector<Rational>> m;
  for (auto& row : a) {
    std::vector<Rational> r;
    for (auto& v : row) r.emplace_back(v);
    m.push_back(std::move(r));
  }
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      Rational f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

/// Determinant by cofactor expansion.
inline BigInt cofactor_det(const std::vector<std::vector<BigInt>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  BigInt d = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<BigInt>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<BigInt> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(a[i][k]);
      minor.push_back(row);
    }
    BigInt t = a[0][j] * cofactor_det(minor);
    d += (j % 2 ? -t : t);
  }
  return d;
}

/// Number of k-dimensional subspaces of F_p^n (Gaussian binomial).
inline long gaussian_binomial(int n, int k, long p) {
  long num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    long a = 1, b = 1;
    for (int e = 0; e < n - i; ++e) a *= p;
    for (int e = 0; e < i + 1; ++e) b *= p;
    num *= a - 1;
    den *= b - 1;
  }
  return num / den;
}

/// Number of quiver-rep homomorphisms over F_p by enumerating every tuple of
/// vertex matrices. maps[a] is dims[t] x dims[s], row-major.
struct SmallRep {
  std::vector<std::pair<int, int>> arrows;
  std::vector<int> dims;
  std::vector<std::vector<int>> maps;
};

inline long brute_hom_count(const SmallRep& X, const SmallRep& Y, int p) {
  const std::size_t nv = X.dims.size();
  std::vector<int> sizes(nv);
  long total_entries = 0;
  for (std::size_t v = 0; v < nv; ++v) {
    sizes[v] = Y.dims[v] * X.dims[v];
    total_entries += sizes[v];
  }
  long combos = 1;
  for (long e = 0; e < total_entries; ++e) combos *= p;
  auto mul = [&](const std::vector<int>& A, int ar, int ac, const std::vector<int>& B, int bc) {
    std::vector<int> C(static_cast<std::size_t>(ar * bc), 0);
    for (int i = 0; i < ar; ++i)
      for (int j = 0; j < bc; ++j) {
        int s = 0;
        for (int k = 0; k < ac; ++k) s += A[static_cast<std::size_t>(i * ac + k)] * B[static_cast<std::size_t>(k * bc + j)];
        C[static_cast<std::size_t>(i * bc + j)] = s % p;
      }
    return C;
  };
  long count = 0;
  for (long code = 0; code < combos; ++code) {
    long c = code;
    std::vector<std::vector<int>> f(nv);
    for (std::size_t v = 0; v < nv; ++v)
      for (int e = 0; e < sizes[v]; ++e) {
        f[v].push_back(static_cast<int>(c % p));
        c /= p;
      }
    bool ok = true;
    for (std::size_t a = 0; a < X.arrows.size() && ok; ++a) {
      auto [s, t] = X.arrows[a];
      // f_t X_a == Y_a f_s
      auto lhs = mul(f[static_cast<std::size_t>(t)], Y.dims[static_cast<std::size_t>(t)], X.dims[static_cast<std::size_t>(t)], X.maps[a],
                     X.dims[static_cast<std::size_t>(s)]);
      auto rhs = mul(Y.maps[a], Y.dims[static_cast<std::size_t>(t)], Y.dims[static_cast<std::size_t>(s)], f[static_cast<std::size_t>(s)],
                     X.dims[static_cast<std::size_t>(s)]);
      ok = lhs == rhs;
    }
    if (ok) ++count;
  }
  return count;
}

}  // namespace oracle
