#pragma once

/**
 * @file finmod.hpp
 * @brief Finitely generated modules over Z and Z/n presented by relations.
 *
 * Convention: a module with g generators and a g x r relation matrix A is
 * Z^g / (column span of A). Over Z/n the columns n*e_i are implicit.
 */

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "torsim/fingroup.hpp"
#include "torsim/ring.hpp"

namespace torsim {

class PresentedModule {
 public:
  PresentedModule(RingPtr ring, std::size_t generators, IntMatrix relations)
      : ring_(std::move(ring)), g_(generators), rel_(std::move(relations)) {
    if (ring_->kind() != RingKind::Integers && ring_->kind() != RingKind::IntegersMod)
      throw UnsupportedRingError("presented modules are supported over Z and Z/n only, got " + ring_->describe());
    if (rel_.rows() != g_) {
      if (rel_.rows() == 0 && rel_.cols() == 0) {
        rel_ = IntMatrix(g_, 0);
      } else {
        throw InputError("relation matrix has " + std::to_string(rel_.rows()) + " rows for " + std::to_string(g_) +
                         " generators");
      }
    }
    if (ring_->kind() == RingKind::IntegersMod)
      for (std::size_t i = 0; i < rel_.rows(); ++i)
        for (std::size_t j = 0; j < rel_.cols(); ++j) rel_(i, j) = mod_floor(rel_(i, j), ring_->modulus());
  }

  /// Z^k over the given ring (free of rank k; over Z/n this is (Z/n)^k).
  static PresentedModule free(const RingPtr& ring, std::size_t k) { return {ring, k, IntMatrix(k, 0)}; }

  /// Z/d_1 + ... + Z/d_k.
  static PresentedModule cyclic_sum(const RingPtr& ring, const std::vector<Integer>& d) {
    IntMatrix A(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) A(i, i) = d[i];
    return {ring, d.size(), A};
  }

  const RingPtr& ring() const { return ring_; }
  std::size_t generators() const { return g_; }
  const IntMatrix& relations() const { return rel_; }

  /// Relations as a Z-module: the given columns, plus n*I over Z/n.
  IntMatrix integer_relations() const {
    if (ring_->kind() != RingKind::IntegersMod) return rel_;
    IntMatrix N(g_, g_);
    for (std::size_t i = 0; i < g_; ++i) N(i, i) = ring_->modulus();
    return rel_.hconcat(N);
  }

  /// Hermite basis of the relation lattice as columns: the same cokernel
  /// as integer_relations with at most g columns.
  IntMatrix relation_lattice() const {
    IntMatrix R = integer_relations();
    std::vector<std::vector<Integer>> cols;
    for (std::size_t j = 0; j < R.cols(); ++j) cols.push_back(R.column(j));
    auto basis = hermite_basis(std::move(cols), g_);
    return basis.empty() ? IntMatrix(g_, 0) : IntMatrix::from_columns(basis, g_);
  }

  /// The same module presented over Z.
  PresentedModule over_integers() const { return {Ring::integers(), g_, integer_relations()}; }

 private:
  RingPtr ring_;
  std::size_t g_;
  IntMatrix rel_;
};

struct Decomposition {
  std::size_t free_rank = 0;
  std::vector<Integer> invariant_factors;
  bool is_finite() const { return free_rank == 0; }
  Integer order() const {
    if (free_rank) return 0;
    Integer n = 1;
    for (const auto& d : invariant_factors) n *= d;
    return n;
  }
  bool is_zero() const { return free_rank == 0 && invariant_factors.empty(); }
  std::string to_string() const {
    std::string s;
    if (free_rank) s = free_rank == 1 ? "Z" : "Z^" + std::to_string(free_rank);
    for (const auto& d : invariant_factors) s += (s.empty() ? "" : " + ") + std::string("Z/") + d.str();
    return s.empty() ? "0" : s;
  }
  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

inline Decomposition decomposition_of(const SmithForm<Integer>& s, std::size_t g) {
  Decomposition d;
  for (std::size_t i = 0; i < g; ++i) {
    Integer v = i < s.rank ? s.D(i, i) : Integer(0);
    if (v == 0) {
      ++d.free_rank;
    } else if (v != 1) {
      d.invariant_factors.push_back(v);
    }
  }
  return d;
}

inline Decomposition canonical_decomposition(const PresentedModule& M) {
  return decomposition_of(smith_checked(M.relation_lattice()), M.generators());
}

/// Bridge between generator coordinates and the element indices of the
/// underlying finite group, via v -> U v on the non-unit Smith rows.
class FiniteView {
 public:
  explicit FiniteView(const PresentedModule& M, std::size_t max_order = 1u << 20)
      : g_(M.generators()), smith_(smith_checked(M.relation_lattice())) {
    std::vector<Integer> radices;
    for (std::size_t i = 0; i < g_; ++i) {
      Integer d = i < smith_.rank ? smith_.D(i, i) : Integer(0);
      if (d == 0) throw PreconditionError("module is infinite; use the associated-prime criterion instead of enumeration");
      if (d != 1) {
        radices.push_back(d);
        keep_.push_back(i);
      }
    }
    group_ = FiniteAbelianGroup(radices, max_order);
  }

  const FiniteAbelianGroup& group() const { return group_; }

  std::size_t element_of(const std::vector<Integer>& v) const {
    std::vector<Integer> c;
    for (std::size_t i : keep_) {
      Integer acc = 0;
      for (std::size_t j = 0; j < g_; ++j) acc += smith_.U(i, j) * v[j];
      c.push_back(acc);
    }
    return group_.element(c);
  }

  std::vector<Integer> vector_of(std::size_t e) const {
    std::vector<Integer> v(g_, 0);
    for (std::size_t k = 0; k < keep_.size(); ++k) {
      std::uint32_t d = group_.digit(e, k);
      if (!d) continue;
      for (std::size_t j = 0; j < g_; ++j) v[j] += smith_.U_inv(j, keep_[k]) * d;
    }
    return v;
  }

 private:
  std::size_t g_;
  SmithForm<Integer> smith_;
  std::vector<std::size_t> keep_;
  FiniteAbelianGroup group_;
};

class Subobject {
 public:
  Subobject(PresentedModule ambient, IntMatrix embedding) : ambient_(std::move(ambient)), emb_(std::move(embedding)) {
    if (emb_.rows() != ambient_.generators()) {
      if (emb_.rows() == 0 && emb_.cols() == 0) {
        emb_ = IntMatrix(ambient_.generators(), 0);
      } else {
        throw InputError("embedding has " + std::to_string(emb_.rows()) + " rows, ambient has " +
                         std::to_string(ambient_.generators()) + " generators");
      }
    }
    basis_ = lattice_basis(ambient_, emb_);
  }

  const PresentedModule& ambient() const { return ambient_; }
  const IntMatrix& embedding() const { return emb_; }

  /// Hermite basis of the preimage lattice span(embedding, relations) in
  /// Z^g. Two subobjects of one ambient are equal iff these agree.
  const std::vector<std::vector<Integer>>& canonical_basis() const { return basis_; }

  friend bool operator==(const Subobject& a, const Subobject& b) {
    return a.ambient_.generators() == b.ambient_.generators() &&
           lattice_basis(a.ambient_, IntMatrix(a.ambient_.generators(), 0)) ==
               lattice_basis(b.ambient_, IntMatrix(b.ambient_.generators(), 0)) &&
           a.basis_ == b.basis_;
  }

  static std::vector<std::vector<Integer>> lattice_basis(const PresentedModule& M, const IntMatrix& E) {
    IntMatrix R = M.integer_relations();
    std::vector<std::vector<Integer>> vecs;
    for (std::size_t j = 0; j < E.cols(); ++j) vecs.push_back(E.column(j));
    for (std::size_t j = 0; j < R.cols(); ++j) vecs.push_back(R.column(j));
    return hermite_basis(std::move(vecs), M.generators());
  }

 private:
  PresentedModule ambient_;
  IntMatrix emb_;
  std::vector<std::vector<Integer>> basis_;
};

inline Subobject zero_subobject(const PresentedModule& M) { return {M, IntMatrix(M.generators(), 0)}; }
inline Subobject whole_subobject(const PresentedModule& M) { return {M, IntMatrix::identity(M.generators())}; }

inline PresentedModule quotient(const PresentedModule& M, const Subobject& w) {
  if (w.ambient().generators() != M.generators() ||
      !(Subobject::lattice_basis(w.ambient(), IntMatrix(M.generators(), 0)) ==
        Subobject::lattice_basis(M, IntMatrix(M.generators(), 0))))
    throw InputError("subobject does not live in this module");
  return {M.ring(), M.generators(), M.relations().hconcat(w.embedding())};
}

/// w as a module in its own right: generators are the canonical basis
/// vectors, relations are the ambient relations written in that basis.
inline PresentedModule submodule_as_module(const Subobject& w) {
  const auto& B = w.canonical_basis();
  const std::size_t g = w.ambient().generators(), k = B.size();
  std::vector<std::size_t> pivot;
  for (const auto& row : B) {
    std::size_t c = 0;
    while (row[c] == 0) ++c;
    pivot.push_back(c);
  }
  IntMatrix R = w.ambient().relation_lattice();
  // Over Z/n the implicit n*I columns are expressed explicitly; keep the
  // result over Z so that nothing is dropped.
  IntMatrix C(k, R.cols());
  for (std::size_t j = 0; j < R.cols(); ++j) {
    std::vector<Integer> v = R.column(j);
    for (std::size_t i = 0; i < k; ++i) {
      Integer c = v[pivot[i]] / B[i][pivot[i]];
      C(i, j) = c;
      if (c != 0)
        for (std::size_t t = 0; t < g; ++t) v[t] -= c * B[i][t];
    }
    if (std::any_of(v.begin(), v.end(), [](const Integer& x) { return x != 0; }))
      throw ContradictionError("relation vector outside the submodule lattice");
  }
  return {w.ambient().ring()->kind() == RingKind::IntegersMod ? w.ambient().ring() : Ring::integers(), k, C};
}

inline Integer module_order(const PresentedModule& M) { return canonical_decomposition(M).order(); }

/// |w| for a finite ambient, 0 if w is infinite.
inline Integer subobject_order(const Subobject& w) { return module_order(submodule_as_module(w)); }

inline bool canonical_less(const Subobject& a, const Subobject& b) {
  Integer oa = subobject_order(a), ob = subobject_order(b);
  if (oa != ob) return oa < ob;
  return a.canonical_basis() < b.canonical_basis();
}

inline Subobject subobject_from_subgroup(const PresentedModule& M, const FiniteView& view, const Subgroup& s) {
  IntMatrix E(M.generators(), s.gens.size());
  for (std::size_t j = 0; j < s.gens.size(); ++j) {
    auto v = view.vector_of(s.gens[j]);
    for (std::size_t i = 0; i < M.generators(); ++i) E(i, j) = v[i];
  }
  return {M, E};
}

inline Subgroup subgroup_from_subobject(const FiniteView& view, const Subobject& w) {
  std::vector<std::size_t> gens;
  for (std::size_t j = 0; j < w.embedding().cols(); ++j) gens.push_back(view.element_of(w.embedding().column(j)));
  return group::generated(view.group(), gens);
}

/// Subobjects for a list of subgroups, sorted as canonical_less does but
/// with the orders read off the subgroups.
inline std::vector<Subobject> subobjects_from_subgroups(const PresentedModule& M, const FiniteView& view,
                                                        const std::vector<Subgroup>& subs) {
  std::vector<std::pair<std::size_t, Subobject>> keyed;
  keyed.reserve(subs.size());
  for (const auto& s : subs) keyed.emplace_back(s.order(), subobject_from_subgroup(M, view, s));
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second.canonical_basis() < b.second.canonical_basis();
  });
  std::vector<Subobject> out;
  out.reserve(keyed.size());
  for (auto& k : keyed) out.push_back(std::move(k.second));
  return out;
}

/// All submodules of a finite module, each once, sorted by (order,
/// canonical basis).
inline std::vector<Subobject> enumerate_submodules(const PresentedModule& M, std::size_t max_order = group::kMaxEnumerationOrder) {
  FiniteView view(M, max_order);
  return subobjects_from_subgroups(M, view, group::all_subgroups(view.group()));
}

struct HomGroup {
  PresentedModule group;
  /// One generator-level matrix (rows: N generators, cols: M generators)
  /// per generator of `group`.
  std::vector<IntMatrix> basis;
  bool is_zero() const { return canonical_decomposition(group).is_zero(); }
};

/// Hom(M, N) as an abelian group. Works for infinite modules.
inline HomGroup hom_group(const PresentedModule& M, const PresentedModule& N) {
  if (!same_ring(M.ring(), N.ring())) throw InputError("hom_group: modules over different rings");
  auto sm = smith_checked(M.relation_lattice());
  auto sn = smith_checked(N.relation_lattice());
  auto diag = [](const SmithForm<Integer>& s, std::size_t i) { return i < s.rank ? s.D(i, i) : Integer(0); };
  std::vector<Integer> orders;
  std::vector<IntMatrix> basis;
  for (std::size_t i = 0; i < M.generators(); ++i) {
    Integer a = diag(sm, i);
    if (a == 1) continue;
    for (std::size_t j = 0; j < N.generators(); ++j) {
      Integer b = diag(sn, j);
      if (b == 1) continue;
      Integer order, coeff;
      if (a == 0) {
        order = b;
        coeff = 1;
      } else if (b == 0) {
        continue;  // no nonzero map from a torsion cyclic into Z
      } else {
        order = gcd(a, b);
        if (order == 1) continue;
        coeff = b / order;
      }
      // Psi in Smith coordinates has the single entry coeff at (j, i);
      // generator level: U_N^{-1} Psi U_M.
      IntMatrix L(N.generators(), M.generators());
      for (std::size_t r = 0; r < N.generators(); ++r)
        for (std::size_t c = 0; c < M.generators(); ++c) L(r, c) = sn.U_inv(r, j) * coeff * sm.U(i, c);
      basis.push_back(std::move(L));
      orders.push_back(order);
    }
  }
  return {PresentedModule::cyclic_sum(Ring::integers(), orders), std::move(basis)};
}

struct PrimeSet {
  std::vector<Integer> primes;
  bool includes_zero = false;
  std::size_t size() const { return primes.size() + (includes_zero ? 1 : 0); }
  bool empty() const { return size() == 0; }
  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    if (includes_zero) {
      s += "(0)";
      first = false;
    }
    for (const auto& p : primes) {
      s += (first ? "(" : ", (") + p.str() + ")";
      first = false;
    }
    return s + "}";
  }
  friend bool operator==(const PrimeSet&, const PrimeSet&) = default;
};

/// Specialisation-closed subset of Spec Z: finitely many nonzero primes, or
/// the whole spectrum (the only closed set containing (0)).
struct SpClosedSubset {
  std::vector<Integer> primes;
  bool whole_spectrum = false;

  static SpClosedSubset closure_of(const PrimeSet& s) {
    if (s.includes_zero) return {{}, true};
    return {s.primes, false};
  }
  bool contains(const Integer& p) const { return whole_spectrum || std::binary_search(primes.begin(), primes.end(), p); }
};

inline PrimeSet associated_primes(const PresentedModule& M) {
  auto d = canonical_decomposition(M);
  PrimeSet s;
  s.includes_zero = d.free_rank > 0;
  if (!d.invariant_factors.empty()) s.primes = prime_divisors(d.invariant_factors.back());
  return s;
}

/// Elements of M killed by a power of p. Free summands contribute nothing,
/// so this is the p-primary part of the torsion submodule.
inline Subobject p_torsion_part(const PresentedModule& M, const Integer& p) {
  auto s = smith_checked(M.relation_lattice());
  std::vector<std::vector<Integer>> cols;
  for (std::size_t i = 0; i < std::min<std::size_t>(s.rank, M.generators()); ++i) {
    const Integer& d = s.D(i, i);
    if (d == 1 || d % p != 0) continue;
    Integer m = d;
    while (m % p == 0) m /= p;
    std::vector<Integer> v(M.generators());
    for (std::size_t j = 0; j < M.generators(); ++j) v[j] = s.U_inv(j, i) * m;
    cols.push_back(std::move(v));
  }
  return {M, cols.empty() ? IntMatrix(M.generators(), 0) : IntMatrix::from_columns(cols, M.generators())};
}

inline Subobject primary_component(const PresentedModule& M, const Integer& p) {
  if (!canonical_decomposition(M).is_finite())
    throw PreconditionError("primary_component needs a finite module; this one has a free part");
  if (!is_prime(p)) throw InputError("primary_component: " + p.str() + " is not prime");
  return p_torsion_part(M, p);
}

/// Sum of two subobjects of one ambient.
inline Subobject subobject_sum(const Subobject& a, const Subobject& b) {
  return {a.ambient(), a.embedding().hconcat(b.embedding())};
}

}  // namespace torsim
