#pragma once

/**
 * @file mccoy.hpp
 * @brief Matrices over the supported rings: determinantal ideals, McCoy
 * rank, nullvectors, and the conormal pipeline for Hom_S(I, S/I).
 *
 * Presentation convention: I/I^2 has one generator per generator of I, and
 * its relation matrix M is n x m (columns are relations). Hom_{S/I}(I/I^2,
 * S/I) is then the kernel of the transpose M^t : (S/I)^n -> (S/I)^m.
 */

#include <bit>
#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "torsim/fp.hpp"
#include "torsim/ideal.hpp"
#include "torsim/matrix.hpp"

namespace torsim {

class RingMatrix {
 public:
  RingMatrix(RingPtr ring, std::size_t rows, std::size_t cols) : ring_(std::move(ring)), rows_(rows), cols_(cols) {
    entries_.assign(rows * cols, RingElem::zero(ring_));
  }

  static RingMatrix from_rows(const RingPtr& ring, const std::vector<std::vector<RingElem>>& rows, std::size_t cols_if_empty = 0) {
    RingMatrix m(ring, rows.size(), rows.empty() ? cols_if_empty : rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw InputError("ragged matrix rows");
      for (std::size_t j = 0; j < m.cols_; ++j) {
        if (!same_ring(rows[i][j].ring(), ring)) throw InputError("matrix entry from a different ring");
        m(i, j) = rows[i][j];
      }
    }
    return m;
  }

  static RingMatrix parse(const RingPtr& ring, const std::vector<std::vector<std::string>>& rows, std::size_t cols_if_empty = 0) {
    std::vector<std::vector<RingElem>> e;
    for (const auto& r : rows) {
      std::vector<RingElem> row;
      for (const auto& s : r) row.push_back(parse_element(ring, s));
      e.push_back(std::move(row));
    }
    return from_rows(ring, e, cols_if_empty);
  }

  static RingMatrix identity(const RingPtr& ring, std::size_t n) {
    RingMatrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = RingElem::one(ring);
    return m;
  }

  const RingPtr& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  RingElem& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const RingElem& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  RingMatrix transpose() const {
    RingMatrix t(ring_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  std::vector<RingElem> apply(const std::vector<RingElem>& v) const {
    std::vector<RingElem> out(rows_, RingElem::zero(ring_));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i] = out[i] + (*this)(i, j) * v[j];
    return out;
  }

  std::vector<std::vector<std::string>> to_strings() const {
    std::vector<std::vector<std::string>> out;
    for (std::size_t i = 0; i < rows_; ++i) {
      std::vector<std::string> row;
      for (std::size_t j = 0; j < cols_; ++j) row.push_back((*this)(i, j).to_string());
      out.push_back(std::move(row));
    }
    return out;
  }

 private:
  RingPtr ring_;
  std::size_t rows_, cols_;
  std::vector<RingElem> entries_;
};

struct Minor {
  std::vector<std::size_t> rows, cols;
  RingElem value;
};

namespace detail {

inline void subsets(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

/// Laplace expansion along the first row, memoised on (row mask, col mask).
class MinorCache {
 public:
  explicit MinorCache(const RingMatrix& a) : a_(a) {}
  RingElem det(std::uint32_t rmask, std::uint32_t cmask) {
    if (rmask == 0) return RingElem::one(a_.ring());
    auto key = (std::uint64_t(rmask) << 32) | cmask;
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::size_t r0 = static_cast<std::size_t>(std::countr_zero(rmask));
    RingElem acc = RingElem::zero(a_.ring());
    bool negate = false;
    for (std::uint32_t c = cmask; c; c &= c - 1) {
      std::size_t j = static_cast<std::size_t>(std::countr_zero(c));
      const RingElem& e = a_(r0, j);
      if (!e.is_zero()) {
        RingElem term = e * det(rmask & (rmask - 1), cmask & ~(1u << j));
        acc = negate ? acc - term : acc + term;
      }
      negate = !negate;
    }
    memo_.emplace(key, acc);
    return acc;
  }

 private:
  const RingMatrix& a_;
  std::map<std::uint64_t, RingElem> memo_;
};

inline std::string index_list(const std::vector<std::size_t>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

}  // namespace detail

/// All r x r minors, rows then columns in lexicographic index order.
inline std::vector<Minor> minors(const RingMatrix& A, std::size_t r) {
  if (A.rows() > 32 || A.cols() > 32) throw PreconditionError("minor expansion supports at most 32 rows and columns");
  std::vector<Minor> out;
  if (r > std::min(A.rows(), A.cols())) return out;
  std::vector<std::vector<std::size_t>> rs, cs;
  detail::subsets(A.rows(), r, rs);
  detail::subsets(A.cols(), r, cs);
  detail::MinorCache cache(A);
  for (const auto& R : rs)
    for (const auto& C : cs) {
      std::uint32_t rm = 0, cm = 0;
      for (auto i : R) rm |= 1u << i;
      for (auto j : C) cm |= 1u << j;
      out.push_back({R, C, cache.det(rm, cm)});
    }
  return out;
}

/// D_r(A): the ideal of r x r minors; D_0 = (1), D_r = 0 beyond min(m, n).
inline IdealSpec determinantal_ideal(const RingMatrix& A, std::size_t r) {
  if (r == 0) return IdealSpec::unit(A.ring());
  std::vector<RingElem> gens;
  for (auto& m : minors(A, r)) {
    if (A.ring()->kind() == RingKind::BiPolyMonomialQuot && !m.value.is_zero() && !m.value.is_monomial() &&
        !m.value.is_xy_binomial())
      throw UnsupportedRingError("minor with rows " + detail::index_list(m.rows) + " and columns " +
                                 detail::index_list(m.cols) + " equals " + m.value.to_string() +
                                 ", outside the supported generator shapes");
    gens.push_back(std::move(m.value));
  }
  return IdealSpec(A.ring(), std::move(gens));
}

struct DeterminantalProfile {
  std::vector<IdealSpec> ideals;          // D_0 .. D_min(m,n)
  std::vector<bool> annihilator_is_zero;  // per r
  std::size_t mccoy_rank = 0;
};

inline DeterminantalProfile mccoy_rank(const RingMatrix& A) {
  DeterminantalProfile p;
  const std::size_t top = std::min(A.rows(), A.cols());
  for (std::size_t r = 0; r <= top; ++r) {
    p.ideals.push_back(determinantal_ideal(A, r));
    p.annihilator_is_zero.push_back(annihilator_is_zero(p.ideals.back()));
    if (p.annihilator_is_zero.back()) p.mccoy_rank = r;
  }
  return p;
}

// ---------------------------------------------------------------------------
// Finite rings as F_p-spaces and element enumeration
// ---------------------------------------------------------------------------

/// All elements of a finite ring, in a fixed order starting with 0.
inline std::vector<RingElem> ring_elements(const RingPtr& R, std::size_t limit = 1u << 16) {
  if (!R->is_finite()) throw PreconditionError("exhaustive search needs a finite ring, got " + R->describe());
  std::vector<RingElem> out;
  switch (R->kind()) {
    case RingKind::IntegersMod:
    case RingKind::PrimeField: {
      if (R->modulus() > Integer(limit)) throw PreconditionError("ring too large to enumerate");
      for (std::size_t a = 0; a < static_cast<std::size_t>(R->modulus()); ++a) out.push_back(RingElem(R, Integer(a)));
      return out;
    }
    case RingKind::UniPolyQuot: {
      const std::size_t deg = static_cast<std::size_t>(upoly::degree(R->modulus_poly()));
      std::vector<Residue> c(deg, 0);
      for (;;) {
        out.push_back(RingElem(R, upoly::Poly(c.begin(), c.end())));
        if (out.size() > limit) throw PreconditionError("ring too large to enumerate");
        std::size_t k = 0;
        while (k < deg && ++c[k] == R->p()) c[k++] = 0;
        if (k == deg) break;
      }
      return out;
    }
    case RingKind::BiPolyMonomialQuot: {
      auto basis = R->standard_monomials();
      std::vector<Residue> c(basis.size(), 0);
      for (;;) {
        bipoly::Poly t;
        for (std::size_t i = 0; i < basis.size(); ++i)
          if (c[i]) t.push_back({basis[i], c[i]});
        out.push_back(RingElem(R, std::move(t)));
        if (out.size() > limit) throw PreconditionError("ring too large to enumerate");
        std::size_t k = 0;
        while (k < basis.size() && ++c[k] == R->p()) c[k++] = 0;
        if (k == basis.size()) break;
      }
      return out;
    }
    default:
      break;
  }
  throw PreconditionError("exhaustive search needs a finite ring, got " + R->describe());
}

/// F_p-basis of a finite ring of prime characteristic, with coordinates.
struct LinearStructure {
  std::vector<RingElem> basis;
  std::function<std::vector<Residue>(const RingElem&)> coords;
};

inline LinearStructure linear_structure(const RingPtr& R) {
  LinearStructure L;
  switch (R->kind()) {
    case RingKind::PrimeField:
      L.basis = {RingElem::one(R)};
      L.coords = [](const RingElem& e) { return std::vector<Residue>{static_cast<Residue>(e.as_integer())}; };
      return L;
    case RingKind::IntegersMod:
      if (!is_prime(R->modulus())) break;
      L.basis = {RingElem::one(R)};
      L.coords = [](const RingElem& e) { return std::vector<Residue>{static_cast<Residue>(e.as_integer())}; };
      return L;
    case RingKind::UniPolyQuot: {
      const std::size_t deg = static_cast<std::size_t>(upoly::degree(R->modulus_poly()));
      for (std::size_t i = 0; i < deg; ++i) {
        upoly::Poly m(i + 1, 0);
        m[i] = 1;
        L.basis.push_back(RingElem(R, m));
      }
      L.coords = [deg](const RingElem& e) {
        std::vector<Residue> c(deg, 0);
        const auto& a = e.as_upoly();
        for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
        return c;
      };
      return L;
    }
    case RingKind::BiPolyMonomialQuot: {
      if (!R->is_finite()) break;
      auto mons = R->standard_monomials();
      for (const auto& m : mons) L.basis.push_back(RingElem::monomial(R, m));
      L.coords = [mons](const RingElem& e) {
        std::vector<Residue> c(mons.size(), 0);
        for (const auto& [m, v] : e.as_bipoly()) {
          auto it = std::lower_bound(mons.begin(), mons.end(), m);
          c[static_cast<std::size_t>(it - mons.begin())] = v;
        }
        return c;
      };
      return L;
    }
    default:
      break;
  }
  throw UnsupportedRingError(R->describe() + " is not a finite ring of prime characteristic");
}

// ---------------------------------------------------------------------------
// Nullvectors
// ---------------------------------------------------------------------------

struct NullvectorResult {
  bool exists = false;
  std::optional<std::vector<RingElem>> vector;  // exhaustive mode only
  std::string mode;                             // "exhaustive" or "theorem"
  std::optional<std::size_t> mccoy_rank;        // theorem mode only
};

/// Exhaustive search over R^n in odometer order (first coordinate fastest),
/// returning the first nonzero v with A v = 0.
inline NullvectorResult nullvector_exhaustive(const RingMatrix& A, std::size_t limit = 1u << 24) {
  const RingPtr& R = A.ring();
  if (!R->is_finite()) throw PreconditionError("exhaustive nullvector search needs a finite ring, got " + R->describe());
  const std::size_t n = A.cols(), m = A.rows();
  NullvectorResult res;
  res.mode = "exhaustive";
  if (n == 0) return res;
  if (R->kind() == RingKind::IntegersMod || R->kind() == RingKind::PrimeField) {
    if (R->modulus() > Integer(1u << 20)) throw PreconditionError("modulus too large for exhaustive search");
    const std::int64_t q = static_cast<std::int64_t>(R->modulus());
    double total = std::pow(double(q), double(n));
    if (total > double(limit)) throw PreconditionError("exhaustive search space exceeds " + std::to_string(limit));
    std::vector<std::int64_t> a(m * n);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) a[i * n + j] = static_cast<std::int64_t>(A(i, j).as_integer());
    std::vector<std::int64_t> v(n, 0);
    for (;;) {
      std::size_t k = 0;
      while (k < n && ++v[k] == q) v[k++] = 0;
      if (k == n) break;
      bool zero = true;
      for (std::size_t i = 0; i < m && zero; ++i) {
        std::int64_t s = 0;
        for (std::size_t j = 0; j < n; ++j) s = (s + a[i * n + j] * v[j]) % q;
        zero = s == 0;
      }
      if (zero) {
        res.exists = true;
        std::vector<RingElem> out;
        for (auto x : v) out.push_back(RingElem(R, Integer(x)));
        res.vector = std::move(out);
        return res;
      }
    }
    return res;
  }
  auto elems = ring_elements(R);
  double total = std::pow(double(elems.size()), double(n));
  if (total > double(limit)) throw PreconditionError("exhaustive search space exceeds " + std::to_string(limit));
  std::vector<std::size_t> idx(n, 0);
  for (;;) {
    std::size_t k = 0;
    while (k < n && ++idx[k] == elems.size()) idx[k++] = 0;
    if (k == n) break;
    std::vector<RingElem> v;
    for (auto i : idx) v.push_back(elems[i]);
    auto img = A.apply(v);
    if (std::all_of(img.begin(), img.end(), [](const RingElem& e) { return e.is_zero(); })) {
      res.exists = true;
      res.vector = std::move(v);
      return res;
    }
  }
  return res;
}

/// McCoy: A has a nonzero nullvector iff mcrk A < number of columns.
inline NullvectorResult nullvector_theorem(const RingMatrix& A) {
  auto p = mccoy_rank(A);
  NullvectorResult res;
  res.mode = "theorem";
  res.mccoy_rank = p.mccoy_rank;
  res.exists = p.mccoy_rank < A.cols();
  return res;
}

// ---------------------------------------------------------------------------
// Conormal pipeline
// ---------------------------------------------------------------------------

/// S/I as a supported ring together with the reduction map S -> S/I.
struct QuotientRing {
  RingPtr ring;
  std::function<RingElem(const RingElem&)> reduce;
};

inline QuotientRing materialize_quotient(const IdealSpec& I) {
  const RingPtr& S = I.ring();
  const Ring& r = *S;
  auto identity = [](const RingElem& e) { return e; };
  switch (r.kind()) {
    case RingKind::Integers:
    case RingKind::IntegersMod:
    case RingKind::PrimeField: {
      Integer g = detail::integer_generator(I);
      if (g == 1) throw UnsupportedRingError("S/I is the zero ring (I = S)");
      if (g == 0 || (r.kind() != RingKind::Integers && g == r.modulus())) return {S, identity};
      RingPtr Q = is_prime(g) && r.kind() == RingKind::PrimeField ? Ring::prime_field(g) : Ring::integers_mod(g);
      return {Q, [Q](const RingElem& e) { return RingElem(Q, e.as_integer()); }};
    }
    case RingKind::UniPoly:
    case RingKind::UniPolyQuot: {
      auto g = detail::poly_generator(I);
      if (upoly::degree(g) == 0) throw UnsupportedRingError("S/I is the zero ring (I = S)");
      if (g.empty() || (r.kind() == RingKind::UniPolyQuot && g == r.modulus_poly())) return {S, identity};
      RingPtr Q = Ring::uni_poly_quot(r.p(), g, r.variable());
      return {Q, [Q](const RingElem& e) { return RingElem(Q, e.as_upoly()); }};
    }
    case RingKind::BiPolyMonomialQuot: {
      if (!I.is_monomial()) {
        throw UnsupportedRingError("S/I for the non-monomial ideal " + I.to_string() + " is not a supported ring kind");
      }
      auto K = detail::lifted_monomials(I);
      if (!K.empty() && K.front().is_one()) throw UnsupportedRingError("S/I is the zero ring (I = S)");
      const Residue p = r.p();
      // A degree-one generator collapses one variable: F_p[x,y]/(x, y^b) ~ F_p[y]/(y^b).
      for (int var = 0; var < 2; ++var) {
        Monomial lin = var == 0 ? Monomial{1, 0} : Monomial{0, 1};
        if (std::find(K.begin(), K.end(), lin) == K.end()) continue;
        std::optional<std::uint32_t> bound;
        for (const auto& m : K)
          if (m != lin) bound = var == 0 ? m.y : m.x;
        char v = var == 0 ? 'y' : 'x';
        RingPtr Q = bound ? Ring::uni_poly_quot(p, upoly::monomial(1, static_cast<int>(*bound), p), v) : Ring::uni_poly(p, v);
        return {Q, [Q, var](const RingElem& e) {
                  upoly::Poly a;
                  for (const auto& [m, c] : e.as_bipoly()) {
                    if ((var == 0 ? m.x : m.y) > 0) continue;
                    std::size_t d = var == 0 ? m.y : m.x;
                    if (a.size() <= d) a.resize(d + 1, 0);
                    a[d] = c;
                  }
                  upoly::trim(a);
                  return RingElem(Q, a);
                }};
      }
      if (K == r.relations()) return {S, identity};
      RingPtr Q = Ring::bi_poly(p, K);
      return {Q, [Q](const RingElem& e) { return RingElem(Q, e.as_bipoly()); }};
    }
  }
  throw InputError("unknown ring kind");
}

struct ConormalPresentation {
  IdealSpec ideal;          // canonical generators of I; their count is n
  QuotientRing quotient;    // S/I
  RingMatrix matrix;        // n x m over S/I
};

inline ConormalPresentation conormal_presentation(const IdealSpec& I_in) {
  const RingPtr& S = I_in.ring();
  const Ring& r = *S;
  IdealSpec I = canonical(I_in);
  auto Q = materialize_quotient(I);
  const std::size_t n = I.generators().size();
  auto make = [&](std::vector<std::vector<RingElem>> cols) {
    RingMatrix M(Q.ring, n, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (std::size_t i = 0; i < n; ++i) M(i, j) = Q.reduce(cols[j][i]);
    return ConormalPresentation{I, Q, M};
  };
  if (n == 0) return make({});
  switch (r.kind()) {
    case RingKind::Integers:
    case RingKind::PrimeField:
    case RingKind::UniPoly:
      return make({});  // principal ideal in a domain: I/I^2 free of rank 1
    case RingKind::IntegersMod: {
      // I = (a), a | n: Ann(a) = (n/a).
      Integer a = detail::integer_generator(I);
      return make({{RingElem(S, r.modulus() / a)}});
    }
    case RingKind::UniPolyQuot: {
      auto g = detail::poly_generator(I);
      return make({{RingElem(S, upoly::divmod(r.modulus_poly(), g, r.p()).first)}});
    }
    case RingKind::BiPolyMonomialQuot: {
      if (!I.is_monomial()) {
        if (r.relations().empty() && n == 1) return make({});
        throw UnsupportedRingError("conormal presentation needs a monomial ideal or a principal ideal of F_p[x,y], got " +
                                   I.to_string());
      }
      auto mons = detail::monomials_of(I);
      std::vector<std::vector<RingElem>> cols;
      // Pairwise (Taylor) syzygies.
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
          Monomial L = monomial_lcm(mons[i], mons[j]);
          std::vector<RingElem> col(n, RingElem::zero(S));
          col[i] = RingElem::monomial(S, mons[i].quotient_of(L));
          col[j] = -RingElem::monomial(S, mons[j].quotient_of(L));
          cols.push_back(std::move(col));
        }
      // Relations coming from the ring: m_i * (lcm(m_i, j)/m_i) lies in J.
      for (std::size_t i = 0; i < n; ++i)
        for (const auto& jm : r.relations()) {
          std::vector<RingElem> col(n, RingElem::zero(S));
          col[i] = RingElem::monomial(S, mons[i].quotient_of(monomial_lcm(mons[i], jm)));
          cols.push_back(std::move(col));
        }
      return make(std::move(cols));
    }
  }
  throw InputError("unknown ring kind");
}

struct ConormalReport {
  ConormalPresentation presentation;
  std::string method;
  /// Kernel of M^t as an abelian group or vector space.
  std::optional<std::size_t> free_rank;             // over Z, F_p[x], or (S/I) when M has no columns
  std::vector<Integer> torsion_orders;              // cyclic summands over Z/q
  std::optional<std::size_t> fp_dimension;          // finite rings of prime characteristic
  std::optional<std::size_t> transpose_mccoy_rank;  // cross-check
  bool hom_nonzero = false;
};

namespace detail {

/// Rank over F_p(x) by fraction-free elimination.
inline std::size_t upoly_rank(std::vector<std::vector<upoly::Poly>> a, Residue p) {
  std::size_t rank = 0;
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][c].empty()) ++piv;
    if (piv == rows) continue;
    std::swap(a[rank], a[piv]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (a[i][c].empty()) continue;
      auto f = a[i][c], g = a[rank][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] = upoly::sub(upoly::mul(g, a[i][j], p), upoly::mul(f, a[rank][j], p), p);
    }
    ++rank;
  }
  return rank;
}

}  // namespace detail

inline ConormalReport hom_I_to_quotient(const IdealSpec& I) {
  ConormalReport rep{conormal_presentation(I), "", {}, {}, {}, {}, false};
  const RingMatrix& M = rep.presentation.matrix;
  const RingPtr& R = M.ring();
  const std::size_t n = M.rows(), m = M.cols();
  RingMatrix Mt = M.transpose();  // m x n
  bool solved = false;
  if (m == 0) {
    rep.method = "free";
    rep.free_rank = n;
    rep.hom_nonzero = n > 0;
    solved = true;
  } else if (R->kind() == RingKind::IntegersMod || R->kind() == RingKind::Integers ||
             (R->kind() == RingKind::PrimeField)) {
    IntMatrix A(m, n);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) A(i, j) = Mt(i, j).as_integer();
    auto s = smith_checked(A);
    if (R->kind() == RingKind::Integers) {
      rep.method = "smith-normal-form over Z";
      rep.free_rank = n - s.rank;
      rep.hom_nonzero = n > s.rank;
    } else {
      const Integer q = R->modulus();
      rep.method = "smith-normal-form over " + R->describe();
      for (std::size_t i = 0; i < n; ++i) {
        Integer d = i < s.rank ? s.D(i, i) : Integer(0);
        Integer o = gcd(d, q);
        if (o != 1) rep.torsion_orders.push_back(o);
      }
      rep.hom_nonzero = !rep.torsion_orders.empty();
    }
    solved = true;
  } else if (R->is_finite()) {
    auto L = linear_structure(R);
    const std::size_t N = L.basis.size();
    const Residue p = R->kind() == RingKind::PrimeField || R->kind() == RingKind::IntegersMod
                          ? static_cast<Residue>(R->modulus())
                          : R->p();
    fp::Mat big(m * N, n * N);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t b = 0; b < N; ++b)
        for (std::size_t i = 0; i < m; ++i) {
          auto c = L.coords(Mt(i, j) * L.basis[b]);
          for (std::size_t k = 0; k < N; ++k) big(i * N + k, j * N + b) = c[k];
        }
    rep.method = "F_p-linear algebra";
    rep.fp_dimension = n * N - fp::rank(big, p);
    rep.hom_nonzero = *rep.fp_dimension > 0;
    solved = true;
  } else if (R->kind() == RingKind::UniPoly) {
    std::vector<std::vector<upoly::Poly>> a(m, std::vector<upoly::Poly>(n));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) a[i][j] = Mt(i, j).as_upoly();
    rep.method = "rank over the fraction field";
    rep.free_rank = n - detail::upoly_rank(a, R->p());
    rep.hom_nonzero = *rep.free_rank > 0;
    solved = true;
  }
  // McCoy route: a nonzero kernel of M^t exists iff mcrk(M^t) < n. Used as
  // the answer when nothing above applies and as a cross-check otherwise.
  try {
    auto prof = mccoy_rank(Mt);
    rep.transpose_mccoy_rank = prof.mccoy_rank;
    bool mc = prof.mccoy_rank < n;
    if (!solved) {
      rep.method = "McCoy rank";
      rep.hom_nonzero = mc;
      solved = true;
    } else if (mc != rep.hom_nonzero) {
      throw ContradictionError("kernel of M^t and McCoy rank disagree on " + I.to_string());
    }
  } catch (const UnsupportedRingError&) {
    if (!solved) throw;
  }
  const Ring& S = *I.ring();
  bool proper_nonzero = !I.is_zero() && !rep.presentation.ideal.is_zero();
  if (S.is_domain() && proper_nonzero && !rep.hom_nonzero)
    throw ContradictionError("Hom_S(I, S/I) = 0 for a proper nonzero ideal " + I.to_string() + " of the domain " +
                             S.describe());
  return rep;
}

struct RadicalLemmaReport {
  bool premise = false;     // d*I ⊆ I^2
  bool conclusion = false;  // d in sqrt(I)
  bool violation() const { return premise && !conclusion; }
  bool domain = false;
  bool expected_for_non_domain() const { return violation() && !domain; }
};

inline RadicalLemmaReport check_radical_lemma(const IdealSpec& I, const RingElem& d) {
  detail::require_ring(I, d);
  RadicalLemmaReport rep;
  rep.domain = I.ring()->is_domain();
  IdealSpec I2 = ideal_ops(IdealOp::Product, I, I);
  rep.premise = std::all_of(I.generators().begin(), I.generators().end(),
                            [&](const RingElem& g) { return ideal_membership(I2, d * g); });
  rep.conclusion = radical_membership(I, d);
  if (rep.violation() && rep.domain)
    throw ContradictionError("d*I ⊆ I^2 but d is not in the radical of I, over the domain " + I.ring()->describe());
  return rep;
}

struct NilpotentMinorsReport {
  ConormalPresentation presentation;
  std::size_t n = 0;
  std::size_t minors_checked = 0;
  bool all_nilpotent = true;
  std::size_t mccoy_rank = 0;
};

inline NilpotentMinorsReport nilpotent_minors_check(const IdealSpec& I) {
  const Ring& S = *I.ring();
  if (!S.is_domain()) throw PreconditionError("nilpotent-minors check needs a domain, got " + S.describe());
  auto pres = conormal_presentation(I);
  if (pres.ideal.is_zero()) throw PreconditionError("nilpotent-minors check needs a nonzero ideal");
  NilpotentMinorsReport rep{pres, pres.matrix.rows(), 0, true, 0};
  for (const auto& mnr : minors(pres.matrix, rep.n)) {
    ++rep.minors_checked;
    if (!is_nilpotent(mnr.value)) rep.all_nilpotent = false;
  }
  rep.mccoy_rank = mccoy_rank(pres.matrix).mccoy_rank;
  if (!rep.all_nilpotent) throw ContradictionError("a maximal minor of the conormal presentation is not nilpotent");
  if (rep.mccoy_rank >= rep.n) throw ContradictionError("mcrk M >= n for the conormal presentation");
  return rep;
}

}  // namespace torsim
