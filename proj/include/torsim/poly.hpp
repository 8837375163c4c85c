#pragma once

/**
 * @file poly.hpp
 * @brief Dense univariate and sparse bivariate polynomials over F_p.
 *
 * Coefficients are residues in [0, p) held in 64-bit words; p < 2^31 keeps
 * every product inside the word. Univariate polynomials are coefficient
 * vectors, lowest degree first, with no trailing zeros (the zero polynomial
 * is the empty vector).
 */

#include <algorithm>
#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "torsim/errors.hpp"

namespace torsim {

using Residue = std::int64_t;

inline Residue mod_p(Residue a, Residue p) {
  a %= p;
  return a < 0 ? a + p : a;
}

inline Residue inverse_mod_p(Residue a, Residue p) {
  // Extended Euclid; a must be a unit.
  Residue t = 0, new_t = 1, r = p, new_r = mod_p(a, p);
  while (new_r != 0) {
    Residue q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw InputError("residue " + std::to_string(a) + " is not invertible mod " + std::to_string(p));
  return mod_p(t, p);
}

namespace upoly {

using Poly = std::vector<Residue>;

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

inline Poly add(const Poly& a, const Poly& b, Residue p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + b[i]) % p;
  trim(r);
  return r;
}

inline Poly neg(const Poly& a, Residue p) {
  Poly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] == 0 ? 0 : p - a[i];
  return r;
}

inline Poly sub(const Poly& a, const Poly& b, Residue p) { return add(a, neg(b, p), p); }

inline Poly mul(const Poly& a, const Poly& b, Residue p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  trim(r);
  return r;
}

inline Poly scale(const Poly& a, Residue c, Residue p) {
  Poly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * mod_p(c, p) % p;
  trim(r);
  return r;
}

/// Division with remainder by a nonzero divisor.
inline std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, Residue p) {
  if (b.empty()) throw InputError("polynomial division by zero");
  Poly rem = a;
  if (a.size() < b.size()) return {{}, rem};
  Poly quo(a.size() - b.size() + 1, 0);
  const Residue lead_inv = inverse_mod_p(b.back(), p);
  for (int k = degree(rem) - degree(b); k >= 0; --k) {
    Residue c = rem[static_cast<std::size_t>(k) + b.size() - 1] * lead_inv % p;
    quo[static_cast<std::size_t>(k)] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      auto& slot = rem[static_cast<std::size_t>(k) + j];
      slot = mod_p(slot - c * b[j], p);
    }
  }
  trim(quo);
  trim(rem);
  return {quo, rem};
}

inline Poly rem(const Poly& a, const Poly& b, Residue p) { return divmod(a, b, p).second; }

inline Poly make_monic(const Poly& a, Residue p) {
  if (a.empty()) return a;
  return scale(a, inverse_mod_p(a.back(), p), p);
}

/// Monic gcd; gcd(0, 0) = 0.
inline Poly gcd(Poly a, Poly b, Residue p) {
  while (!b.empty()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a, p);
}

inline bool divides(const Poly& d, const Poly& a, Residue p) {
  if (d.empty()) return a.empty();
  return rem(a, d, p).empty();
}

/// True iff every irreducible factor of `base` divides `d`.
inline bool divides_some_power(Poly base, const Poly& d, Residue p) {
  if (base.empty()) return d.empty();
  for (;;) {
    if (degree(base) == 0) return true;
    Poly g = gcd(base, d, p);
    if (degree(g) <= 0) return false;
    while (divides(g, base, p)) base = divmod(base, g, p).first;
  }
}

inline Poly monomial(Residue c, int deg, Residue p) {
  Poly r(static_cast<std::size_t>(deg) + 1, 0);
  r.back() = mod_p(c, p);
  trim(r);
  return r;
}

inline bool is_irreducible(const Poly& f, Residue p) {
  // Trial division by every monic polynomial of degree <= deg f / 2.
  const int n = degree(f);
  if (n <= 0) return false;
  for (int d = 1; 2 * d <= n; ++d) {
    std::vector<Residue> low(static_cast<std::size_t>(d), 0);
    for (;;) {
      Poly g = low;
      g.push_back(1);
      if (divides(g, f, p)) return false;
      std::size_t i = 0;
      while (i < low.size() && ++low[i] == p) low[i++] = 0;
      if (i == low.size()) break;
    }
  }
  return true;
}

}  // namespace upoly

/// x^a y^b.
struct Monomial {
  std::uint32_t x = 0;
  std::uint32_t y = 0;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;

  bool divides(const Monomial& other) const { return x <= other.x && y <= other.y; }
  std::uint32_t degree() const { return x + y; }
  bool is_one() const { return x == 0 && y == 0; }
  Monomial operator*(const Monomial& o) const { return {x + o.x, y + o.y}; }
  /// Requires divides(other).
  Monomial quotient_of(const Monomial& other) const { return {other.x - x, other.y - y}; }
};

inline Monomial monomial_lcm(const Monomial& a, const Monomial& b) { return {std::max(a.x, b.x), std::max(a.y, b.y)}; }
inline Monomial monomial_gcd(const Monomial& a, const Monomial& b) { return {std::min(a.x, b.x), std::min(a.y, b.y)}; }
inline Monomial squarefree_part(const Monomial& m) { return {m.x > 0 ? 1u : 0u, m.y > 0 ? 1u : 0u}; }

inline std::string to_string(const Monomial& m) {
  std::string s;
  if (m.x > 0) s += m.x == 1 ? "x" : "x^" + std::to_string(m.x);
  if (m.y > 0) s += m.y == 1 ? "y" : "y^" + std::to_string(m.y);
  return s.empty() ? "1" : s;
}

namespace bipoly {

/// Sparse polynomial: (monomial, coefficient) pairs sorted by monomial, no
/// zero coefficients.
using Poly = std::vector<std::pair<Monomial, Residue>>;

inline void normalize(Poly& a, Residue p) {
  std::sort(a.begin(), a.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
  Poly out;
  for (auto& [m, c] : a) {
    if (!out.empty() && out.back().first == m) {
      out.back().second = mod_p(out.back().second + c, p);
    } else {
      out.emplace_back(m, mod_p(c, p));
    }
  }
  std::erase_if(out, [](const auto& t) { return t.second == 0; });
  a = std::move(out);
}

}  // namespace bipoly

}  // namespace torsim
