#pragma once

/**
 * @file quiver.hpp
 * @brief Representations of finite acyclic quivers over F_p.
 *
 * The map of an arrow i -> j is a dims[j] x dims[i] matrix acting on column
 * vectors. Subrepresentations store one RREF basis per vertex.
 */

#include <string>
#include <utility>
#include <vector>

#include "torsim/fp.hpp"

namespace torsim {

class Quiver {
 public:
  Quiver() = default;
  Quiver(std::size_t vertices, std::vector<std::pair<std::size_t, std::size_t>> arrows)
      : n_(vertices), arrows_(std::move(arrows)) {
    if (n_ == 0) throw InputError("quiver needs at least one vertex");
    for (auto [s, t] : arrows_)
      if (s >= n_ || t >= n_) throw InputError("arrow endpoint out of range");
    // Kahn's algorithm; smallest available vertex first for a canonical order.
    std::vector<std::size_t> indeg(n_, 0);
    for (auto [s, t] : arrows_) ++indeg[t];
    std::vector<bool> done(n_, false);
    for (std::size_t step = 0; step < n_; ++step) {
      std::size_t v = n_;
      for (std::size_t u = 0; u < n_; ++u)
        if (!done[u] && indeg[u] == 0) {
          v = u;
          break;
        }
      if (v == n_) throw InputError("quiver has a directed cycle");
      done[v] = true;
      order_.push_back(v);
      for (auto [s, t] : arrows_)
        if (s == v) --indeg[t];
    }
  }

  /// Linear quiver 0 -> 1 -> ... -> n-1.
  static Quiver linear(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> a;
    for (std::size_t i = 0; i + 1 < n; ++i) a.push_back({i, i + 1});
    return {n, a};
  }

  std::size_t vertex_count() const { return n_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& arrows() const { return arrows_; }
  const std::vector<std::size_t>& topological_order() const { return order_; }
  friend bool operator==(const Quiver& a, const Quiver& b) { return a.n_ == b.n_ && a.arrows_ == b.arrows_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::pair<std::size_t, std::size_t>> arrows_;
  std::vector<std::size_t> order_;
};

class QuiverRep {
 public:
  QuiverRep() = default;
  QuiverRep(Quiver q, Residue p, std::vector<std::size_t> dims, std::vector<fp::Mat> maps)
      : q_(std::move(q)), p_(p), dims_(std::move(dims)), maps_(std::move(maps)) {
    if (!is_prime(p_)) throw InputError("representation field characteristic must be prime");
    if (dims_.size() != q_.vertex_count()) throw InputError("one dimension per vertex required");
    if (maps_.size() != q_.arrows().size()) throw InputError("one matrix per arrow required");
    for (std::size_t a = 0; a < maps_.size(); ++a) {
      auto [s, t] = q_.arrows()[a];
      if (maps_[a].rows() != dims_[t] || maps_[a].cols() != dims_[s]) {
        if (maps_[a].rows() == 0 && maps_[a].cols() == 0 && (dims_[s] == 0 || dims_[t] == 0)) {
          maps_[a] = fp::Mat(dims_[t], dims_[s]);
        } else {
          throw InputError("arrow " + std::to_string(a) + " needs a " + std::to_string(dims_[t]) + "x" +
                           std::to_string(dims_[s]) + " matrix");
        }
      }
      for (Residue v : maps_[a].data())
        if (v < 0 || v >= p_) throw InputError("matrix entries must lie in [0, p)");
    }
  }

  /// Zero maps on every arrow.
  static QuiverRep zero_maps(const Quiver& q, Residue p, std::vector<std::size_t> dims) {
    std::vector<fp::Mat> maps;
    for (auto [s, t] : q.arrows()) maps.emplace_back(dims[t], dims[s]);
    return {q, p, std::move(dims), std::move(maps)};
  }

  /// The simple representation at vertex v.
  static QuiverRep simple(const Quiver& q, Residue p, std::size_t v) {
    std::vector<std::size_t> dims(q.vertex_count(), 0);
    dims[v] = 1;
    return zero_maps(q, p, dims);
  }

  const Quiver& quiver() const { return q_; }
  Residue p() const { return p_; }
  const std::vector<std::size_t>& dims() const { return dims_; }
  const std::vector<fp::Mat>& maps() const { return maps_; }
  std::size_t total_dim() const {
    std::size_t s = 0;
    for (auto d : dims_) s += d;
    return s;
  }
  bool is_zero() const { return total_dim() == 0; }
  friend bool operator==(const QuiverRep&, const QuiverRep&) = default;

 private:
  Quiver q_;
  Residue p_ = 2;
  std::vector<std::size_t> dims_;
  std::vector<fp::Mat> maps_;
};

/// Per-vertex RREF bases of an arrow-stable family of subspaces.
struct SubRep {
  std::vector<fp::Mat> spaces;
  std::vector<std::size_t> dims() const {
    std::vector<std::size_t> d;
    for (const auto& s : spaces) d.push_back(s.rows());
    return d;
  }
  std::size_t total_dim() const {
    std::size_t t = 0;
    for (const auto& s : spaces) t += s.rows();
    return t;
  }
  friend bool operator==(const SubRep&, const SubRep&) = default;
};

/// Vertex-wise matrices f_i : X_i -> Y_i (dims Y_i x dims X_i).
struct RepHom {
  QuiverRep source, target;
  std::vector<fp::Mat> components;
  bool is_zero() const {
    return std::all_of(components.begin(), components.end(), [](const fp::Mat& m) { return fp::is_zero(m); });
  }
};

namespace quiver {

inline void require_compatible(const QuiverRep& X, const QuiverRep& Y) {
  if (!(X.quiver() == Y.quiver()) || X.p() != Y.p()) throw InputError("representations over different quivers or fields");
}

/// Column vector as a 1-row matrix and its image under m.
inline std::vector<Residue> apply(const fp::Mat& m, std::span<const Residue> v, Residue p) {
  std::vector<Residue> out(m.rows(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] = (out[i] + m(i, j) * v[j]) % p;
  return out;
}

/// Rows of the result are m applied to the rows of basis.
inline fp::Mat apply_rows(const fp::Mat& m, const fp::Mat& basis, Residue p) {
  return fp::mul(basis, m.transpose(), p);
}

inline bool is_stable(const QuiverRep& X, const std::vector<fp::Mat>& spaces) {
  for (std::size_t a = 0; a < X.quiver().arrows().size(); ++a) {
    auto [s, t] = X.quiver().arrows()[a];
    for (std::size_t r = 0; r < spaces[s].rows(); ++r)
      if (!fp::in_span(spaces[t], apply(X.maps()[a], spaces[s].row(r), X.p()), X.p())) return false;
  }
  return true;
}

inline SubRep make_subrep(const QuiverRep& X, std::vector<fp::Mat> spaces) {
  if (spaces.size() != X.quiver().vertex_count()) throw InputError("one subspace per vertex required");
  for (std::size_t v = 0; v < spaces.size(); ++v) {
    if (spaces[v].cols() != X.dims()[v]) {
      if (spaces[v].rows() == 0) {
        spaces[v] = fp::Mat(0, X.dims()[v]);
      } else {
        throw InputError("subspace at vertex " + std::to_string(v) + " has the wrong ambient dimension");
      }
    }
    spaces[v] = fp::span(spaces[v], X.p());
  }
  if (!is_stable(X, spaces)) throw InputError("subspaces are not stable under the arrow maps");
  return {std::move(spaces)};
}

inline SubRep zero_sub(const QuiverRep& X) {
  SubRep s;
  for (auto d : X.dims()) s.spaces.emplace_back(0, d);
  return s;
}

inline SubRep whole_sub(const QuiverRep& X) {
  SubRep s;
  for (auto d : X.dims()) s.spaces.push_back(fp::Mat::identity(d));
  return s;
}

inline bool sub_leq(const QuiverRep& X, const SubRep& a, const SubRep& b) {
  for (std::size_t v = 0; v < a.spaces.size(); ++v)
    for (std::size_t r = 0; r < a.spaces[v].rows(); ++r)
      if (!fp::in_span(b.spaces[v], std::vector<Residue>(a.spaces[v].row(r).begin(), a.spaces[v].row(r).end()), X.p()))
        return false;
  return true;
}

inline SubRep sum(const QuiverRep& X, const SubRep& a, const SubRep& b) {
  SubRep s;
  for (std::size_t v = 0; v < a.spaces.size(); ++v) s.spaces.push_back(fp::subspace_sum(a.spaces[v], b.spaces[v], X.p()));
  return s;
}

inline SubRep intersect(const QuiverRep& X, const SubRep& a, const SubRep& b) {
  SubRep s;
  for (std::size_t v = 0; v < a.spaces.size(); ++v)
    s.spaces.push_back(fp::subspace_intersection(a.spaces[v], b.spaces[v], X.p()));
  return s;
}

/// Basis of Hom(X, Y): solutions of f_t X_a = Y_a f_s for every arrow a: s -> t.
inline std::vector<RepHom> hom_space(const QuiverRep& X, const QuiverRep& Y) {
  require_compatible(X, Y);
  const Residue p = X.p();
  const std::size_t n = X.quiver().vertex_count();
  std::vector<std::size_t> offset(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) offset[v + 1] = offset[v] + Y.dims()[v] * X.dims()[v];
  const std::size_t unknowns = offset[n];
  // Unknown (v, r, c) is entry (r, c) of f_v.
  auto var = [&](std::size_t v, std::size_t r, std::size_t c) { return offset[v] + r * X.dims()[v] + c; };
  std::vector<std::vector<Residue>> eqs;
  for (std::size_t a = 0; a < X.quiver().arrows().size(); ++a) {
    auto [s, t] = X.quiver().arrows()[a];
    const auto& Xa = X.maps()[a];
    const auto& Ya = Y.maps()[a];
    // Entry (r, c) of f_t X_a - Y_a f_s, with r < dim Y_t and c < dim X_s.
    for (std::size_t r = 0; r < Y.dims()[t]; ++r)
      for (std::size_t c = 0; c < X.dims()[s]; ++c) {
        std::vector<Residue> row(unknowns, 0);
        for (std::size_t k = 0; k < X.dims()[t]; ++k)
          if (Xa(k, c)) row[var(t, r, k)] = (row[var(t, r, k)] + Xa(k, c)) % p;
        for (std::size_t k = 0; k < Y.dims()[s]; ++k)
          if (Ya(r, k)) row[var(s, k, c)] = mod_p(row[var(s, k, c)] - Ya(r, k), p);
        eqs.push_back(std::move(row));
      }
  }
  fp::Mat sys(eqs.size(), unknowns);
  for (std::size_t i = 0; i < eqs.size(); ++i)
    for (std::size_t j = 0; j < unknowns; ++j) sys(i, j) = eqs[i][j];
  fp::Mat basis;
  if (eqs.empty()) {
    basis = fp::Mat::identity(unknowns);
  } else {
    basis = fp::nullspace(sys, p);
  }
  std::vector<RepHom> out;
  for (std::size_t k = 0; k < basis.rows(); ++k) {
    RepHom f{X, Y, {}};
    for (std::size_t v = 0; v < n; ++v) {
      fp::Mat m(Y.dims()[v], X.dims()[v]);
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = basis(k, var(v, r, c));
      f.components.push_back(std::move(m));
    }
    out.push_back(std::move(f));
  }
  return out;
}

inline bool hom_is_zero(const QuiverRep& X, const QuiverRep& Y) { return hom_space(X, Y).empty(); }

struct Bound {
  std::size_t max_vertex_dim = 4;
};

/// Every subrepresentation, exactly once; canonical order is by total
/// dimension, then dimension vector, then the per-vertex RREF entries.
inline std::vector<SubRep> enumerate_subreps(const QuiverRep& X, Bound bound = {}) {
  const Residue p = X.p();
  if (p != 2 && p != 3 && p != 5) throw PreconditionError("subrepresentation enumeration supports p in {2, 3, 5}");
  for (auto d : X.dims())
    if (d > bound.max_vertex_dim)
      throw PreconditionError("vertex dimension " + std::to_string(d) + " exceeds the enumeration bound " +
                              std::to_string(bound.max_vertex_dim));
  const auto& order = X.quiver().topological_order();
  const std::size_t n = order.size();
  std::vector<fp::Mat> current(n);
  std::vector<SubRep> out;
  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (idx == n) {
      out.push_back({current});
      return;
    }
    std::size_t v = order[idx];
    for (const auto& U : fp::all_subspaces(X.dims()[v], p)) {
      bool ok = true;
      for (std::size_t a = 0; a < X.quiver().arrows().size() && ok; ++a) {
        auto [s, t] = X.quiver().arrows()[a];
        if (t != v) continue;
        for (std::size_t r = 0; r < current[s].rows() && ok; ++r)
          ok = fp::in_span(U, apply(X.maps()[a], current[s].row(r), p), p);
      }
      if (!ok) continue;
      current[v] = U;
      rec(idx + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end(), [](const SubRep& a, const SubRep& b) {
    if (a.total_dim() != b.total_dim()) return a.total_dim() < b.total_dim();
    if (a.dims() != b.dims()) return a.dims() < b.dims();
    for (std::size_t v = 0; v < a.spaces.size(); ++v)
      if (a.spaces[v].data() != b.spaces[v].data()) return a.spaces[v].data() < b.spaces[v].data();
    return false;
  });
  return out;
}

/// Quotient X/U in the coordinates of the non-pivot columns of each U_v.
struct QuotientRep {
  QuiverRep object;
  RepHom projection;
};

inline fp::Mat projection_matrix(const fp::Mat& U, std::size_t d, Residue p) {
  auto piv = fp::pivot_columns(U);
  std::vector<std::size_t> rest;
  for (std::size_t c = 0; c < d; ++c)
    if (!std::binary_search(piv.begin(), piv.end(), c)) rest.push_back(c);
  // pi(e_c): reduce e_c by U, then read the non-pivot coordinates.
  fp::Mat P(rest.size(), d);
  for (std::size_t c = 0; c < d; ++c) {
    std::vector<Residue> v(d, 0);
    v[c] = 1;
    for (std::size_t r = 0; r < U.rows(); ++r) {
      Residue f = v[piv[r]];
      if (!f) continue;
      for (std::size_t j = 0; j < d; ++j) v[j] = mod_p(v[j] - f * U(r, j), p);
    }
    for (std::size_t k = 0; k < rest.size(); ++k) P(k, c) = v[rest[k]];
  }
  return P;
}

inline fp::Mat section_matrix(const fp::Mat& U, std::size_t d) {
  auto piv = fp::pivot_columns(U);
  std::vector<std::size_t> rest;
  for (std::size_t c = 0; c < d; ++c)
    if (!std::binary_search(piv.begin(), piv.end(), c)) rest.push_back(c);
  fp::Mat S(d, rest.size());
  for (std::size_t k = 0; k < rest.size(); ++k) S(rest[k], k) = 1;
  return S;
}

inline QuotientRep quotient_rep(const QuiverRep& X, const SubRep& U) {
  if (!is_stable(X, U.spaces)) throw InputError("quotient by a non-stable family of subspaces");
  const Residue p = X.p();
  const std::size_t n = X.quiver().vertex_count();
  std::vector<fp::Mat> P, S;
  std::vector<std::size_t> dims;
  for (std::size_t v = 0; v < n; ++v) {
    P.push_back(projection_matrix(U.spaces[v], X.dims()[v], p));
    S.push_back(section_matrix(U.spaces[v], X.dims()[v]));
    dims.push_back(P.back().rows());
  }
  std::vector<fp::Mat> maps;
  for (std::size_t a = 0; a < X.quiver().arrows().size(); ++a) {
    auto [s, t] = X.quiver().arrows()[a];
    maps.push_back(fp::mul(fp::mul(P[t], X.maps()[a], p), S[s], p));
  }
  QuiverRep Q(X.quiver(), p, dims, maps);
  return {Q, RepHom{X, Q, P}};
}

struct EmbeddedRep {
  QuiverRep object;
  RepHom inclusion;
};

/// U as a representation in the coordinates of its RREF basis.
inline EmbeddedRep sub_as_rep(const QuiverRep& X, const SubRep& U) {
  const Residue p = X.p();
  const std::size_t n = X.quiver().vertex_count();
  std::vector<std::size_t> dims = U.dims();
  std::vector<fp::Mat> maps;
  for (std::size_t a = 0; a < X.quiver().arrows().size(); ++a) {
    auto [s, t] = X.quiver().arrows()[a];
    auto piv = fp::pivot_columns(U.spaces[t]);
    fp::Mat m(dims[t], dims[s]);
    for (std::size_t c = 0; c < dims[s]; ++c) {
      auto img = apply(X.maps()[a], U.spaces[s].row(c), p);
      for (std::size_t r = 0; r < dims[t]; ++r) m(r, c) = img[piv[r]];
    }
    maps.push_back(std::move(m));
  }
  QuiverRep W(X.quiver(), p, dims, maps);
  std::vector<fp::Mat> inc;
  for (std::size_t v = 0; v < n; ++v) inc.push_back(U.spaces[v].transpose());
  return {W, RepHom{W, X, inc}};
}

inline SubRep image(const RepHom& f, const SubRep& w) {
  SubRep s;
  for (std::size_t v = 0; v < f.components.size(); ++v)
    s.spaces.push_back(fp::span(apply_rows(f.components[v], w.spaces[v], f.source.p()), f.source.p()));
  return s;
}

inline SubRep image(const RepHom& f) { return image(f, whole_sub(f.source)); }

inline SubRep kernel(const RepHom& f) {
  SubRep s;
  for (std::size_t v = 0; v < f.components.size(); ++v) {
    const auto& m = f.components[v];
    if (m.rows() == 0) {
      s.spaces.push_back(fp::Mat::identity(m.cols()));
    } else {
      s.spaces.push_back(fp::span(fp::nullspace(m, f.source.p()), f.source.p()));
    }
  }
  return s;
}

inline SubRep preimage(const RepHom& f, const SubRep& w) {
  SubRep s;
  const Residue p = f.source.p();
  for (std::size_t v = 0; v < f.components.size(); ++v) {
    fp::Mat P = projection_matrix(w.spaces[v], f.target.dims()[v], p);
    fp::Mat m = fp::mul(P, f.components[v], p);
    if (m.rows() == 0) {
      s.spaces.push_back(fp::Mat::identity(m.cols()));
    } else {
      s.spaces.push_back(fp::span(fp::nullspace(m, p), p));
    }
  }
  return s;
}

inline bool is_stable_under(const RepHom& f, const SubRep& w) {
  return sub_leq(f.target, image(f, w), w);
}

/// Multiplicity of the simple at vertex v is dims[v].
inline std::vector<std::pair<std::size_t, std::size_t>> composition_factors(const QuiverRep& X) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t v = 0; v < X.dims().size(); ++v)
    if (X.dims()[v]) out.push_back({v, X.dims()[v]});
  return out;
}

inline bool is_invertible(const RepHom& f) {
  for (const auto& m : f.components) {
    if (m.rows() != m.cols()) return false;
    if (fp::rank(m, f.source.p()) != m.rows()) return false;
  }
  return true;
}

/// Searches Hom(X, Y) exhaustively for an invertible morphism. Exponential
/// in dim Hom(X, Y); intended for the small universes of the test suites.
inline bool are_isomorphic(const QuiverRep& X, const QuiverRep& Y) {
  require_compatible(X, Y);
  if (X.dims() != Y.dims()) return false;
  auto basis = hom_space(X, Y);
  if (basis.size() > 12) throw PreconditionError("isomorphism search over a Hom space of dimension > 12");
  const Residue p = X.p();
  std::vector<Residue> coeff(basis.size(), 0);
  for (;;) {
    RepHom f{X, Y, {}};
    for (std::size_t v = 0; v < X.dims().size(); ++v) f.components.emplace_back(Y.dims()[v], X.dims()[v]);
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (!coeff[k]) continue;
      for (std::size_t v = 0; v < f.components.size(); ++v)
        for (std::size_t r = 0; r < f.components[v].rows(); ++r)
          for (std::size_t c = 0; c < f.components[v].cols(); ++c)
            f.components[v](r, c) = (f.components[v](r, c) + coeff[k] * basis[k].components[v](r, c)) % p;
    }
    if (is_invertible(f)) return true;
    std::size_t k = 0;
    while (k < coeff.size() && ++coeff[k] == p) coeff[k++] = 0;
    if (k == coeff.size()) break;
  }
  return false;
}

}  // namespace quiver
}  // namespace torsim
