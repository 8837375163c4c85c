#pragma once

/**
 * @file fingroup.hpp
 * @brief Finite abelian groups Z/r_0 + ... + Z/r_{k-1} with explicit elements.
 *
 * Elements are mixed-radix indices (digit i has stride r_0 * ... * r_{i-1}).
 * Subgroups are bitsets over element indices. This is the enumeration
 * backend for finite modules over Z and Z/n.
 */

#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <unordered_set>
#include <vector>

#include "torsim/matrix.hpp"

namespace torsim {

/// Fixed-size bitset with value semantics, ordering and hashing.
class Bits {
 public:
  Bits() = default;
  explicit Bits(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }
  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : w_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool subset_of(const Bits& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }
  Bits operator&(const Bits& o) const {
    Bits r = *this;
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] &= o.w_[i];
    return r;
  }
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      std::uint64_t w = w_[i];
      while (w) {
        f(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }
  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }
  friend bool operator==(const Bits&, const Bits&) = default;
  std::size_t hash() const {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (auto w : w_) h = (h ^ w) * 0x100000001b3ull;
    return h;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

struct BitsHash {
  std::size_t operator()(const Bits& b) const { return b.hash(); }
};

class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup() = default;
  /// Radices equal to 1 are dropped; 0 (infinite cyclic) is rejected.
  explicit FiniteAbelianGroup(const std::vector<Integer>& radices, std::size_t max_order = 1u << 20) {
    std::size_t order = 1;
    for (const auto& r : radices) {
      if (r <= 0) throw PreconditionError("finite group requested for a module with free part");
      if (r == 1) continue;
      if (r > Integer(max_order) || order * static_cast<std::size_t>(r) > max_order)
        throw PreconditionError("group order exceeds the enumeration bound " + std::to_string(max_order));
      radix_.push_back(static_cast<std::uint32_t>(r));
      order *= radix_.back();
    }
    order_ = order;
    stride_.resize(radix_.size());
    std::size_t s = 1;
    for (std::size_t i = 0; i < radix_.size(); ++i) {
      stride_[i] = s;
      s *= radix_[i];
    }
  }

  std::size_t order() const { return order_; }
  std::size_t rank() const { return radix_.size(); }
  const std::vector<std::uint32_t>& radices() const { return radix_; }
  std::size_t generator(std::size_t i) const { return stride_[i]; }

  std::uint32_t digit(std::size_t e, std::size_t i) const { return static_cast<std::uint32_t>(e / stride_[i] % radix_[i]); }

  std::vector<std::uint32_t> digits(std::size_t e) const {
    std::vector<std::uint32_t> d(rank());
    for (std::size_t i = 0; i < rank(); ++i) d[i] = digit(e, i);
    return d;
  }

  /// Element with the given (unreduced, possibly negative) coordinates.
  template <class T>
  std::size_t element(const std::vector<T>& coords) const {
    std::size_t e = 0;
    for (std::size_t i = 0; i < rank(); ++i) {
      Integer c = mod_floor(Integer(coords[i]), radix_[i]);
      e += static_cast<std::size_t>(c) * stride_[i];
    }
    return e;
  }

  std::size_t add(std::size_t a, std::size_t b) const {
    std::size_t e = 0;
    for (std::size_t i = 0; i < rank(); ++i) e += ((digit(a, i) + digit(b, i)) % radix_[i]) * stride_[i];
    return e;
  }

  std::size_t scale(std::size_t a, std::uint64_t k) const {
    std::size_t e = 0;
    for (std::size_t i = 0; i < rank(); ++i) e += static_cast<std::size_t>(digit(a, i) * (k % radix_[i]) % radix_[i]) * stride_[i];
    return e;
  }

  std::uint64_t element_order(std::size_t a) const {
    std::uint64_t o = 1;
    for (std::size_t i = 0; i < rank(); ++i) {
      std::uint64_t d = digit(a, i);
      if (d) o = std::lcm(o, radix_[i] / std::gcd<std::uint64_t, std::uint64_t>(d, radix_[i]));
    }
    return o;
  }

  /// Prime divisors of the order, ascending.
  std::vector<std::uint32_t> primes() const {
    std::vector<std::uint32_t> out;
    std::size_t n = order_;
    for (std::uint32_t p = 2; p * p <= n; ++p) {
      if (n % p) continue;
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
    if (n > 1) out.push_back(static_cast<std::uint32_t>(n));
    return out;
  }

  friend bool operator==(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) { return a.radix_ == b.radix_; }

 private:
  std::vector<std::uint32_t> radix_;
  std::vector<std::size_t> stride_;
  std::size_t order_ = 1;
};

/// A subgroup as a set of element indices plus a generating list.
struct Subgroup {
  Bits elements;
  std::vector<std::size_t> gens;
  std::size_t order() const { return elements.count(); }
  bool contains(std::size_t e) const { return elements.test(e); }
  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.elements == b.elements; }
};

/// Homomorphism given by the images of the source's basis generators.
struct GroupHom {
  FiniteAbelianGroup source, target;
  std::vector<std::size_t> images;

  std::size_t operator()(std::size_t e) const {
    std::size_t out = 0;
    for (std::size_t i = 0; i < source.rank(); ++i) {
      std::uint32_t d = source.digit(e, i);
      if (d) out = target.add(out, target.scale(images[i], d));
    }
    return out;
  }
  bool is_zero() const {
    return std::all_of(images.begin(), images.end(), [](std::size_t e) { return e == 0; });
  }
};

namespace group {

inline Subgroup trivial(const FiniteAbelianGroup& G) {
  Subgroup s{Bits(G.order()), {}};
  s.elements.set(0);
  return s;
}

/// H + <g>, computed coset by coset.
inline Subgroup adjoin(const FiniteAbelianGroup& G, const Subgroup& H, std::size_t g) {
  if (H.contains(g)) return H;
  Subgroup out = H;
  out.gens.push_back(g);
  std::vector<std::size_t> members = H.elements.members();
  std::size_t shift = g;
  while (!H.contains(shift)) {
    for (std::size_t h : members) out.elements.set(G.add(h, shift));
    shift = G.add(shift, g);
  }
  return out;
}

inline Subgroup generated(const FiniteAbelianGroup& G, const std::vector<std::size_t>& gens) {
  Subgroup s = trivial(G);
  for (std::size_t g : gens) s = adjoin(G, s, g);
  return s;
}

inline Subgroup whole(const FiniteAbelianGroup& G) {
  std::vector<std::size_t> gens;
  for (std::size_t i = 0; i < G.rank(); ++i) gens.push_back(G.generator(i));
  Subgroup s{Bits(G.order()), gens};
  for (std::size_t e = 0; e < G.order(); ++e) s.elements.set(e);
  return s;
}

/// Subgroup with the given element set (which must be a subgroup), with a
/// greedily chosen generating list.
inline Subgroup from_elements(const FiniteAbelianGroup& G, const Bits& elements) {
  Subgroup s = trivial(G);
  elements.for_each([&](std::size_t e) {
    if (!s.contains(e)) s = adjoin(G, s, e);
  });
  if (!(s.elements == elements)) throw InputError("element set is not a subgroup");
  return s;
}

inline Subgroup sum(const FiniteAbelianGroup& G, const Subgroup& a, const Subgroup& b) {
  Subgroup s = a;
  for (std::size_t g : b.gens) s = adjoin(G, s, g);
  return s;
}

inline Subgroup intersect(const FiniteAbelianGroup& G, const Subgroup& a, const Subgroup& b) {
  return from_elements(G, a.elements & b.elements);
}

inline Subgroup image(const GroupHom& f, const Subgroup& w) {
  std::vector<std::size_t> gens;
  for (std::size_t g : w.gens) gens.push_back(f(g));
  return generated(f.target, gens);
}

inline Subgroup image(const GroupHom& f) { return image(f, whole(f.source)); }

inline Subgroup kernel(const GroupHom& f) {
  Bits k(f.source.order());
  for (std::size_t e = 0; e < f.source.order(); ++e)
    if (f(e) == 0) k.set(e);
  return from_elements(f.source, k);
}

inline Subgroup preimage(const GroupHom& f, const Subgroup& w) {
  Bits k(f.source.order());
  for (std::size_t e = 0; e < f.source.order(); ++e)
    if (w.contains(f(e))) k.set(e);
  return from_elements(f.source, k);
}

/// f(w) ⊆ w, checked on generators.
inline bool is_stable(const GroupHom& f, const Subgroup& w) {
  return std::all_of(w.gens.begin(), w.gens.end(), [&](std::size_t g) { return w.contains(f(g)); });
}

/// Canonical order: by order, then by the sorted element list.
inline bool canonical_less(const Subgroup& a, const Subgroup& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return a.elements.members() < b.elements.members();
}

inline constexpr std::size_t kMaxEnumerationOrder = 4096;

/// Every subgroup of G exactly once, in canonical order. Every subgroup is
/// reached from 0 by a chain of prime-index steps H < H + <g> with q*g in H
/// for a prime q, so breadth-first adjoining of such g is complete.
inline std::vector<Subgroup> all_subgroups(const FiniteAbelianGroup& G) {
  const auto primes = G.primes();
  const std::size_t n = G.order();
  if (n > kMaxEnumerationOrder)
    throw PreconditionError("subgroup enumeration is limited to order " + std::to_string(kMaxEnumerationOrder));
  // Addition and prime-multiple tables keep the inner loops free of digit
  // arithmetic.
  std::vector<std::uint32_t> add_tab(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) add_tab[a * n + b] = static_cast<std::uint32_t>(G.add(a, b));
  std::vector<std::vector<std::uint32_t>> mult(primes.size(), std::vector<std::uint32_t>(n));
  for (std::size_t k = 0; k < primes.size(); ++k)
    for (std::size_t a = 0; a < n; ++a) mult[k][a] = static_cast<std::uint32_t>(G.scale(a, primes[k]));

  auto adjoin_fast = [&](const Subgroup& H, const std::vector<std::size_t>& members, std::size_t g) {
    Subgroup out = H;
    out.gens.push_back(g);
    std::size_t shift = g;
    while (!H.contains(shift)) {
      for (std::size_t h : members) out.elements.set(add_tab[h * n + shift]);
      shift = add_tab[shift * n + g];
    }
    return out;
  };

  std::unordered_set<Bits, BitsHash> seen;
  std::vector<Subgroup> out, frontier{trivial(G)};
  seen.insert(frontier.front().elements);
  while (!frontier.empty()) {
    std::vector<Subgroup> next;
    for (const auto& H : frontier) {
      const auto members = H.elements.members();
      Bits covered = H.elements;
      for (std::size_t g = 0; g < n; ++g) {
        if (covered.test(g)) continue;
        for (std::size_t h : members) covered.set(add_tab[g * n + h]);
        bool prime_step = false;
        for (std::size_t k = 0; k < primes.size() && !prime_step; ++k) prime_step = H.contains(mult[k][g]);
        if (!prime_step) continue;
        Subgroup K = adjoin_fast(H, members, g);
        if (seen.insert(K.elements).second) next.push_back(std::move(K));
      }
      out.push_back(H);
    }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

/// Subgroup as a group in its own right, with the inclusion map.
struct Embedded {
  FiniteAbelianGroup object;
  GroupHom inclusion;
};

/// Quotient G/w with the projection map.
struct Projected {
  FiniteAbelianGroup object;
  GroupHom projection;
};

inline IntMatrix digit_matrix(const FiniteAbelianGroup& G, const std::vector<std::size_t>& elems) {
  IntMatrix M(G.rank(), elems.size());
  for (std::size_t j = 0; j < elems.size(); ++j)
    for (std::size_t i = 0; i < G.rank(); ++i) M(i, j) = G.digit(elems[j], i);
  return M;
}

inline IntMatrix radix_diagonal(const FiniteAbelianGroup& G) {
  IntMatrix D(G.rank(), G.rank());
  for (std::size_t i = 0; i < G.rank(); ++i) D(i, i) = G.radices()[i];
  return D;
}

inline Projected quotient(const FiniteAbelianGroup& G, const Subgroup& w) {
  IntMatrix rel = radix_diagonal(G).hconcat(digit_matrix(G, w.gens));
  auto s = smith_checked(rel);
  std::vector<Integer> radices;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < G.rank(); ++i) {
    Integer d = i < s.rank ? s.D(i, i) : Integer(0);
    if (d != 1) {
      radices.push_back(d);
      keep.push_back(i);
    }
  }
  FiniteAbelianGroup Q(radices);
  GroupHom proj{G, Q, {}};
  for (std::size_t j = 0; j < G.rank(); ++j) {
    std::vector<Integer> c;
    for (std::size_t i : keep) c.push_back(s.U(i, j));
    proj.images.push_back(Q.element(c));
  }
  return {Q, proj};
}

inline Embedded as_group(const FiniteAbelianGroup& G, const Subgroup& w) {
  const std::size_t k = w.gens.size();
  IntMatrix Gm = digit_matrix(G, w.gens);
  // Relations among the generators: c with Gm c in the radix lattice.
  IntMatrix K = integer_kernel(Gm.hconcat(radix_diagonal(G)));
  IntMatrix rel(k, K.cols());
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < K.cols(); ++j) rel(i, j) = K(i, j);
  auto s = smith_checked(rel);
  std::vector<Integer> radices;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < k; ++i) {
    Integer d = i < s.rank ? s.D(i, i) : Integer(0);
    if (d != 1) {
      radices.push_back(d);
      keep.push_back(i);
    }
  }
  FiniteAbelianGroup W(radices);
  GroupHom inc{W, G, {}};
  for (std::size_t i : keep) {
    std::vector<Integer> coords(G.rank(), 0);
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t r = 0; r < G.rank(); ++r) coords[r] += Gm(r, j) * s.U_inv(j, i);
    inc.images.push_back(G.element(coords));
  }
  return {W, inc};
}

/// Generators of Hom(A, B): for basis generators a_i, b_j the map sending
/// a_i to (r_j / gcd) * b_j and the other generators to 0.
inline std::vector<GroupHom> hom_basis(const FiniteAbelianGroup& A, const FiniteAbelianGroup& B) {
  std::vector<GroupHom> out;
  for (std::size_t i = 0; i < A.rank(); ++i)
    for (std::size_t j = 0; j < B.rank(); ++j) {
      std::uint64_t g = std::gcd(A.radices()[i], B.radices()[j]);
      if (g == 1) continue;
      GroupHom f{A, B, std::vector<std::size_t>(A.rank(), 0)};
      f.images[i] = B.scale(B.generator(j), B.radices()[j] / g);
      out.push_back(std::move(f));
    }
  return out;
}

/// |Hom(A, B)| = prod gcd(a_i, b_j).
inline Integer hom_order(const FiniteAbelianGroup& A, const FiniteAbelianGroup& B) {
  Integer n = 1;
  for (auto a : A.radices())
    for (auto b : B.radices()) n *= std::gcd(a, b);
  return n;
}

inline bool hom_is_zero(const FiniteAbelianGroup& A, const FiniteAbelianGroup& B) { return hom_order(A, B) == 1; }

inline GroupHom identity(const FiniteAbelianGroup& G) {
  GroupHom f{G, G, {}};
  for (std::size_t i = 0; i < G.rank(); ++i) f.images.push_back(G.generator(i));
  return f;
}

/// Composition factors: the prime divisors of |G| with multiplicity.
inline std::vector<std::uint32_t> composition_factors(const FiniteAbelianGroup& G) {
  std::vector<std::uint32_t> out;
  for (auto r : G.radices()) {
    std::uint32_t n = r;
    for (std::uint32_t p = 2; p <= n; ++p)
      while (n % p == 0) {
        out.push_back(p);
        n /= p;
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace group

namespace detail {
inline void partitions(unsigned n, unsigned max_part, std::vector<unsigned>& cur, std::vector<std::vector<unsigned>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (unsigned k = std::min(n, max_part); k >= 1; --k) {
    cur.push_back(k);
    partitions(n - k, k, cur, out);
    cur.pop_back();
  }
}
}  // namespace detail

/// Invariant factors d_1 | d_2 | ... of every abelian group of order n, one
/// entry per isomorphism class. The trivial group gives {}.
inline std::vector<std::vector<Integer>> abelian_groups_of_order(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> pf;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    pf.push_back({p, e});
  }
  if (n > 1) pf.push_back({n, 1});
  std::vector<std::vector<Integer>> out{{}};
  for (auto [p, e] : pf) {
    std::vector<std::vector<unsigned>> parts;
    std::vector<unsigned> cur;
    detail::partitions(e, e, cur, parts);
    std::vector<std::vector<Integer>> next;
    for (const auto& base : out)
      for (const auto& part : parts) {
        // Merge: the i-th largest factor absorbs the i-th largest p-power.
        std::vector<Integer> f = base;
        std::reverse(f.begin(), f.end());
        f.resize(std::max(f.size(), part.size()), 1);
        for (std::size_t i = 0; i < part.size(); ++i) f[i] *= boost::multiprecision::pow(Integer(p), part[i]);
        std::reverse(f.begin(), f.end());
        next.push_back(std::move(f));
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace torsim
