#pragma once

/**
 * @file fp.hpp
 * @brief Dense linear algebra over a prime field F_p.
 *
 * Subspaces of F_p^n are stored as reduced row echelon bases (rows), which
 * are unique, so subspace equality is matrix equality.
 */

#include <functional>
#include <map>
#include <mutex>
#include <vector>

#include "torsim/matrix.hpp"
#include "torsim/poly.hpp"

namespace torsim::fp {

using Mat = Matrix<Residue>;

inline Mat mul(const Mat& a, const Mat& b, Residue p) {
  if (a.cols() != b.rows()) throw InputError("F_p product: shape mismatch");
  Mat c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      Residue v = a(i, k);
      if (!v) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = (c(i, j) + v * b(k, j)) % p;
    }
  return c;
}

inline Mat sub(const Mat& a, const Mat& b, Residue p) {
  Mat c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = mod_p(a(i, j) - b(i, j), p);
  return c;
}

inline bool is_zero(const Mat& a) {
  return std::all_of(a.data().begin(), a.data().end(), [](Residue v) { return v == 0; });
}

struct Echelon {
  Mat rref;  // nonzero rows only
  std::vector<std::size_t> pivots;
};

inline Echelon rref(Mat a, Residue p) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && a(piv, c) == 0) ++piv;
    if (piv == a.rows()) continue;
    a.swap_rows(r, piv);
    Residue inv = inverse_mod_p(a(r, c), p);
    for (std::size_t j = 0; j < a.cols(); ++j) a(r, j) = a(r, j) * inv % p;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      Residue f = a(i, c);
      for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = mod_p(a(i, j) - f * a(r, j), p);
    }
    pivots.push_back(c);
    ++r;
  }
  Mat out(r, a.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  return {out, pivots};
}

inline std::size_t rank(const Mat& a, Residue p) { return rref(a, p).pivots.size(); }

/// Basis of {v : a v = 0}, one vector per row of the result.
inline Mat nullspace(const Mat& a, Residue p) {
  auto e = rref(a, p);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < a.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Mat basis(free_cols.size(), a.cols());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    basis(k, free_cols[k]) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) basis(k, e.pivots[r]) = mod_p(-e.rref(r, free_cols[k]), p);
  }
  return basis;
}

/// Canonical basis (RREF rows) of the span of the rows of a.
inline Mat span(const Mat& a, Residue p) { return rref(a, p).rref; }

inline Mat stack(const Mat& a, const Mat& b) {
  if (a.cols() != b.cols()) throw InputError("stack: column counts differ");
  Mat c(a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(a.rows() + i, j) = b(i, j);
  return c;
}

inline Mat subspace_sum(const Mat& u, const Mat& w, Residue p) { return span(stack(u, w), p); }

inline Mat subspace_intersection(const Mat& u, const Mat& w, Residue p) {
  // Left null vectors (a, b) of [u; w] give a*u = -b*w in the intersection.
  Mat both = stack(u, w);
  Mat left = nullspace(both.transpose(), p);
  Mat vecs(left.rows(), u.cols());
  for (std::size_t k = 0; k < left.rows(); ++k)
    for (std::size_t i = 0; i < u.rows(); ++i)
      for (std::size_t j = 0; j < u.cols(); ++j) vecs(k, j) = (vecs(k, j) + left(k, i) * u(i, j)) % p;
  return span(vecs, p);
}

/// Membership test of a column vector in the row space given by an RREF basis.
inline bool in_span(const Mat& basis_rref, const std::vector<Residue>& v, Residue p) {
  std::vector<Residue> r = v;
  for (std::size_t i = 0; i < basis_rref.rows(); ++i) {
    std::size_t c = 0;
    while (basis_rref(i, c) == 0) ++c;
    Residue f = r[c];
    if (!f) continue;
    for (std::size_t j = 0; j < r.size(); ++j) r[j] = mod_p(r[j] - f * basis_rref(i, j), p);
  }
  return std::all_of(r.begin(), r.end(), [](Residue x) { return x == 0; });
}

inline std::vector<std::size_t> pivot_columns(const Mat& basis_rref) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < basis_rref.rows(); ++i) {
    std::size_t c = 0;
    while (basis_rref(i, c) == 0) ++c;
    out.push_back(c);
  }
  return out;
}

/// All subspaces of F_p^n, as RREF bases, ordered by dimension and then by
/// the row-major entries. Cached per (n, p).
inline const std::vector<Mat>& all_subspaces(std::size_t n, Residue p) {
  static std::mutex mu;
  static std::map<std::pair<std::size_t, Residue>, std::vector<Mat>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(n, p);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  std::vector<Mat> out;
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<Mat> level;
    // Pivot sets as increasing k-subsets of [0, n).
    std::vector<std::size_t> piv(k);
    std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t idx, std::size_t start) {
      if (idx == k) {
        std::vector<std::pair<std::size_t, std::size_t>> free_pos;
        for (std::size_t r = 0; r < k; ++r)
          for (std::size_t c = piv[r] + 1; c < n; ++c)
            if (!std::binary_search(piv.begin(), piv.end(), c)) free_pos.push_back({r, c});
        std::vector<Residue> vals(free_pos.size(), 0);
        for (;;) {
          Mat m(k, n);
          for (std::size_t r = 0; r < k; ++r) m(r, piv[r]) = 1;
          for (std::size_t t = 0; t < free_pos.size(); ++t) m(free_pos[t].first, free_pos[t].second) = vals[t];
          level.push_back(m);
          std::size_t t = 0;
          while (t < vals.size() && ++vals[t] == p) vals[t++] = 0;
          if (t == vals.size()) break;
        }
        return;
      }
      for (std::size_t c = start; c < n; ++c) {
        piv[idx] = c;
        choose(idx + 1, c + 1);
      }
    };
    choose(0, 0);
    std::sort(level.begin(), level.end(), [](const Mat& a, const Mat& b) { return a.data() < b.data(); });
    out.insert(out.end(), level.begin(), level.end());
  }
  return cache.emplace(key, std::move(out)).first->second;
}

}  // namespace torsim::fp
