#pragma once

/**
 * @file ideal.hpp
 * @brief Ideals, annihilators, membership and radical membership.
 *
 * Z, Z/n, F_p and the univariate rings are handled through a single
 * canonical generator (gcd). Bivariate monomial quotients are handled by
 * monomial combinatorics on the lifted ideal I + J in F_p[x,y]; the only
 * non-monomial generator shape accepted is c*x^a + c'*y^b.
 */

#include <array>
#include <string>
#include <vector>

#include "torsim/ring.hpp"

namespace torsim {

class IdealSpec {
 public:
  IdealSpec(RingPtr ring, std::vector<RingElem> generators) : ring_(std::move(ring)) {
    for (auto& g : generators) {
      if (!same_ring(g.ring(), ring_)) {
        throw InputError("ideal generator " + g.to_string() + " lies in " + g.ring()->describe() + ", not " +
                         ring_->describe());
      }
      if (g.is_zero()) continue;
      if (ring_->kind() == RingKind::BiPolyMonomialQuot && !g.is_monomial() && !g.is_xy_binomial()) {
        throw InputError("bivariate ideal generators must be monomials or c*x^a + c'*y^b, got " + g.to_string());
      }
      gens_.push_back(std::move(g));
    }
  }

  static IdealSpec zero(const RingPtr& ring) { return IdealSpec(ring, {}); }
  static IdealSpec unit(const RingPtr& ring) { return IdealSpec(ring, {RingElem::one(ring)}); }

  const RingPtr& ring() const { return ring_; }
  const std::vector<RingElem>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }

  bool is_monomial() const {
    return std::all_of(gens_.begin(), gens_.end(), [](const RingElem& g) { return g.is_monomial(); });
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < gens_.size(); ++i) s += (i ? ", " : "") + gens_[i].to_string();
    return s + ")";
  }

 private:
  RingPtr ring_;
  std::vector<RingElem> gens_;
};

namespace detail {

inline void require_ring(const IdealSpec& I, const RingElem& e) {
  if (!same_ring(I.ring(), e.ring())) throw InputError("element and ideal live in different rings");
}

inline void require_ring(const IdealSpec& I, const IdealSpec& J) {
  if (!same_ring(I.ring(), J.ring())) throw InputError("ideals live in different rings");
}

inline bool integer_like(const Ring& r) {
  return r.kind() == RingKind::Integers || r.kind() == RingKind::IntegersMod || r.kind() == RingKind::PrimeField;
}

/// Canonical generator for Z (gcd >= 0) and Z/n, F_p (a divisor of n; the
/// zero ideal gives n itself).
inline Integer integer_generator(const IdealSpec& I) {
  Integer g = I.ring()->modulus();
  for (const auto& e : I.generators()) g = gcd(g, e.as_integer());
  return g;
}

/// Monic canonical generator for F_p[x] (empty = zero ideal) and for
/// F_p[x]/(f) (a divisor of f; the zero ideal gives f).
inline upoly::Poly poly_generator(const IdealSpec& I) {
  const Ring& r = *I.ring();
  upoly::Poly g = r.kind() == RingKind::UniPolyQuot ? r.modulus_poly() : upoly::Poly{};
  for (const auto& e : I.generators()) g = upoly::gcd(g, e.as_upoly(), r.p());
  return g;
}

inline IdealSpec from_integer_generator(const RingPtr& ring, const Integer& g) {
  if (ring->kind() != RingKind::Integers && g == ring->modulus()) return IdealSpec::zero(ring);
  if (g == 0) return IdealSpec::zero(ring);
  return IdealSpec(ring, {RingElem(ring, g)});
}

inline IdealSpec from_poly_generator(const RingPtr& ring, const upoly::Poly& g) {
  if (g.empty() || (ring->kind() == RingKind::UniPolyQuot && g == ring->modulus_poly())) return IdealSpec::zero(ring);
  return IdealSpec(ring, {RingElem(ring, g)});
}

inline std::vector<Monomial> monomials_of(const IdealSpec& I) {
  std::vector<Monomial> out;
  for (const auto& g : I.generators()) {
    if (!g.is_monomial()) throw UnsupportedRingError("ideal " + I.to_string() + " is not monomial-generated");
    out.push_back(g.as_bipoly().front().first);
  }
  return out;
}

/// Lifted monomial ideal I + J in F_p[x,y], minimal generators.
inline std::vector<Monomial> lifted_monomials(const IdealSpec& I) {
  auto gens = monomials_of(I);
  const auto& rels = I.ring()->relations();
  gens.insert(gens.end(), rels.begin(), rels.end());
  return minimal_monomials(std::move(gens));
}

inline std::vector<Monomial> monomial_colon(const std::vector<Monomial>& K, const Monomial& m) {
  std::vector<Monomial> out;
  for (const auto& k : K) out.push_back(monomial_gcd(k, m).quotient_of(k));
  return minimal_monomials(std::move(out));
}

inline std::vector<Monomial> monomial_intersection(const std::vector<Monomial>& A, const std::vector<Monomial>& B) {
  std::vector<Monomial> out;
  for (const auto& a : A)
    for (const auto& b : B) out.push_back(monomial_lcm(a, b));
  return minimal_monomials(std::move(out));
}

/// Package a lifted monomial ideal as an ideal of the quotient ring,
/// dropping generators that vanish there.
inline IdealSpec from_lifted_monomials(const RingPtr& ring, const std::vector<Monomial>& K) {
  std::vector<RingElem> gens;
  for (const auto& m : minimal_monomials(K)) {
    if (!monomial_in(ring->relations(), m)) gens.push_back(RingElem::monomial(ring, m));
  }
  return IdealSpec(ring, std::move(gens));
}

/// Membership of an arbitrary polynomial in the principal ideal (g),
/// g = c*x^a + c'*y^b, in F_p[x,y]. A single polynomial is a Groebner basis
/// of the ideal it generates, so reduction by g decides membership.
inline bool in_principal_binomial(const bipoly::Poly& g, bipoly::Poly e, Residue p) {
  // Stored ascending by (x, y): g[0] = c'*y^b, g[1] = c*x^a; lex leader is g[1].
  const Monomial lead = g[1].first;
  const Residue lead_inv = inverse_mod_p(g[1].second, p);
  for (;;) {
    auto it = std::find_if(e.rbegin(), e.rend(), [&](const auto& t) { return lead.divides(t.first); });
    if (it == e.rend()) return e.empty();
    Monomial shift = lead.quotient_of(it->first);
    Residue c = it->second * lead_inv % p;
    for (const auto& [m, gc] : g) e.emplace_back(m * shift, mod_p(-c * gc, p));
    bipoly::normalize(e, p);
  }
}

/// Monomial primes (x), (y), (x,y) associated to a nonzero proper monomial
/// ideal J of F_p[x,y]. Each prime is {contains x, contains y}.
inline std::vector<std::array<bool, 2>> monomial_associated_primes(const std::vector<Monomial>& J) {
  std::uint32_t max_x = 0, max_y = 0;
  for (const auto& m : J) {
    max_x = std::max(max_x, m.x);
    max_y = std::max(max_y, m.y);
  }
  std::vector<std::array<bool, 2>> primes;
  auto add = [&](std::array<bool, 2> p) {
    if (std::find(primes.begin(), primes.end(), p) == primes.end()) primes.push_back(p);
  };
  // (J : u) only depends on u capped at (max_x, max_y).
  for (std::uint32_t i = 0; i <= max_x; ++i) {
    for (std::uint32_t j = 0; j <= max_y; ++j) {
      Monomial u{i, j};
      if (monomial_in(J, u)) continue;
      auto c = monomial_colon(J, u);
      if (c == std::vector<Monomial>{{1, 0}}) add({true, false});
      if (c == std::vector<Monomial>{{0, 1}}) add({false, true});
      if (c == std::vector<Monomial>{{0, 1}, {1, 0}}) add({true, true});
    }
  }
  std::sort(primes.begin(), primes.end());
  return primes;
}

}  // namespace detail

/// Ann(a) = {r : r*a = 0}.
inline IdealSpec ann_element(const RingElem& a) {
  const RingPtr& ring = a.ring();
  const Ring& r = *ring;
  switch (r.kind()) {
    case RingKind::Integers:
    case RingKind::PrimeField:
    case RingKind::UniPoly:
      return a.is_zero() ? IdealSpec::unit(ring) : IdealSpec::zero(ring);
    case RingKind::IntegersMod:
      return detail::from_integer_generator(ring, r.modulus() / gcd(a.as_integer(), r.modulus()));
    case RingKind::UniPolyQuot: {
      auto g = upoly::gcd(a.as_upoly(), r.modulus_poly(), r.p());
      return detail::from_poly_generator(ring, upoly::divmod(r.modulus_poly(), g, r.p()).first);
    }
    case RingKind::BiPolyMonomialQuot: {
      if (a.is_zero()) return IdealSpec::unit(ring);
      if (!a.is_monomial() && !a.is_xy_binomial()) {
        throw UnsupportedRingError("annihilator of " + a.to_string() + " in " + r.describe() +
                                   ": only monomials and c*x^a + c'*y^b are supported");
      }
      if (r.relations().empty()) return IdealSpec::zero(ring);
      if (a.is_monomial()) {
        return detail::from_lifted_monomials(ring, detail::monomial_colon(r.relations(), a.as_bipoly().front().first));
      }
      // With J = (m) principal, (m : g) = m / gcd(m, g) and gcd(m, x^a + y^b) = 1.
      if (r.relations().size() == 1) return IdealSpec::zero(ring);
      throw UnsupportedRingError("annihilator of the binomial " + a.to_string() + " in " + r.describe() +
                                 " is not monomial");
    }
  }
  throw InputError("unknown ring kind");
}

inline bool ideal_membership(const IdealSpec& I, const RingElem& e) {
  detail::require_ring(I, e);
  const Ring& r = *I.ring();
  switch (r.kind()) {
    case RingKind::Integers: {
      Integer g = detail::integer_generator(I);
      return g == 0 ? e.is_zero() : e.as_integer() % g == 0;
    }
    case RingKind::IntegersMod:
    case RingKind::PrimeField:
      return e.as_integer() % detail::integer_generator(I) == 0;
    case RingKind::UniPoly:
    case RingKind::UniPolyQuot:
      return upoly::divides(detail::poly_generator(I), e.as_upoly(), r.p());
    case RingKind::BiPolyMonomialQuot: {
      if (I.is_monomial()) {
        auto K = detail::lifted_monomials(I);
        const auto& terms = e.as_bipoly();
        return std::all_of(terms.begin(), terms.end(), [&](const auto& t) { return monomial_in(K, t.first); });
      }
      if (r.relations().empty() && I.generators().size() == 1) {
        return detail::in_principal_binomial(I.generators().front().as_bipoly(), e.as_bipoly(), r.p());
      }
      throw UnsupportedRingError("membership in " + I.to_string() + " over " + r.describe() +
                                 " needs a Groebner basis; only monomial ideals and a single binomial are supported");
    }
  }
  throw InputError("unknown ring kind");
}

/// True iff d^k lies in I for some k >= 1.
inline bool radical_membership(const IdealSpec& I, const RingElem& d) {
  detail::require_ring(I, d);
  const Ring& r = *I.ring();
  switch (r.kind()) {
    case RingKind::Integers:
    case RingKind::IntegersMod:
    case RingKind::PrimeField:
      return divides_some_power(detail::integer_generator(I), d.as_integer());
    case RingKind::UniPoly:
    case RingKind::UniPolyQuot:
      return upoly::divides_some_power(detail::poly_generator(I), d.as_upoly(), r.p());
    case RingKind::BiPolyMonomialQuot: {
      if (!I.is_monomial()) {
        throw UnsupportedRingError("radical of " + I.to_string() + " over " + r.describe() +
                                   " is only computed for monomial ideals");
      }
      // The radical of a monomial ideal is generated by the squarefree parts.
      std::vector<Monomial> rad;
      for (const auto& m : detail::lifted_monomials(I)) rad.push_back(squarefree_part(m));
      rad = minimal_monomials(std::move(rad));
      const auto& terms = d.as_bipoly();
      return std::all_of(terms.begin(), terms.end(), [&](const auto& t) { return monomial_in(rad, t.first); });
    }
  }
  throw InputError("unknown ring kind");
}

inline bool is_nilpotent(const RingElem& e) { return radical_membership(IdealSpec::zero(e.ring()), e); }

enum class IdealOp { Sum, Product, Colon };

/// I + J, I*J or (I : J) = {r : rJ ⊆ I}, with canonical generators.
inline IdealSpec ideal_ops(IdealOp op, const IdealSpec& I, const IdealSpec& J) {
  detail::require_ring(I, J);
  const RingPtr& ring = I.ring();
  const Ring& r = *ring;
  if (detail::integer_like(r)) {
    Integer a = detail::integer_generator(I), b = detail::integer_generator(J);
    Integer n = r.modulus();
    switch (op) {
      case IdealOp::Sum:
        return detail::from_integer_generator(ring, gcd(a, b));
      case IdealOp::Product:
        return detail::from_integer_generator(ring, r.kind() == RingKind::Integers ? Integer(a * b) : gcd(a * b, n));
      case IdealOp::Colon:
        if (a == 0 && b == 0) return IdealSpec::unit(ring);
        return detail::from_integer_generator(ring, a / gcd(a, b));
    }
  }
  if (r.is_univariate()) {
    auto a = detail::poly_generator(I), b = detail::poly_generator(J);
    const Residue p = r.p();
    switch (op) {
      case IdealOp::Sum:
        return detail::from_poly_generator(ring, upoly::gcd(a, b, p));
      case IdealOp::Product: {
        auto prod = upoly::mul(a, b, p);
        if (r.kind() == RingKind::UniPolyQuot) prod = upoly::gcd(prod, r.modulus_poly(), p);
        return detail::from_poly_generator(ring, prod);
      }
      case IdealOp::Colon:
        if (b.empty()) return IdealSpec::unit(ring);
        if (a.empty()) return IdealSpec::zero(ring);
        return detail::from_poly_generator(ring, upoly::divmod(a, upoly::gcd(a, b, p), p).first);
    }
  }
  // Bivariate monomial quotient.
  auto A = detail::lifted_monomials(I);
  auto Bgens = detail::monomials_of(J);
  switch (op) {
    case IdealOp::Sum: {
      auto gens = A;
      gens.insert(gens.end(), Bgens.begin(), Bgens.end());
      return detail::from_lifted_monomials(ring, gens);
    }
    case IdealOp::Product: {
      std::vector<Monomial> gens;
      for (const auto& a : detail::monomials_of(I))
        for (const auto& b : Bgens) gens.push_back(a * b);
      return detail::from_lifted_monomials(ring, gens);
    }
    case IdealOp::Colon: {
      std::vector<Monomial> acc{Monomial{}};
      for (const auto& b : Bgens) acc = detail::monomial_intersection(acc, detail::monomial_colon(A, b));
      return detail::from_lifted_monomials(ring, acc);
    }
  }
  throw InputError("unknown ideal operation");
}

/// Ann(I) = (0 : I).
inline IdealSpec ann_ideal(const IdealSpec& I) { return ideal_ops(IdealOp::Colon, IdealSpec::zero(I.ring()), I); }

/// Canonical generators: gcd for the principal rings, minimal monomials for
/// monomial bivariate ideals. Two ideals are equal iff their canonical forms are.
inline IdealSpec canonical(const IdealSpec& I) { return ideal_ops(IdealOp::Sum, I, IdealSpec::zero(I.ring())); }

inline bool same_ideal(const IdealSpec& I, const IdealSpec& J) {
  auto a = canonical(I), b = canonical(J);
  return a.generators() == b.generators();
}

/// Ann(I) == 0. Exact for every supported ring and generator shape: in a
/// noetherian ring Ann(I) != 0 iff I lies inside an associated prime, and
/// the associated primes of F_p[x,y]/J are monomial primes.
inline bool annihilator_is_zero(const IdealSpec& I) {
  const Ring& r = *I.ring();
  switch (r.kind()) {
    case RingKind::Integers:
    case RingKind::PrimeField:
    case RingKind::UniPoly:
      return !I.is_zero();
    case RingKind::IntegersMod:
      return detail::integer_generator(I) == 1;
    case RingKind::UniPolyQuot:
      return upoly::degree(detail::poly_generator(I)) == 0;
    case RingKind::BiPolyMonomialQuot: {
      if (r.relations().empty()) return !I.is_zero();
      for (const auto& prime : detail::monomial_associated_primes(r.relations())) {
        bool contained = std::all_of(I.generators().begin(), I.generators().end(), [&](const RingElem& g) {
          return std::all_of(g.as_bipoly().begin(), g.as_bipoly().end(), [&](const auto& t) {
            return (prime[0] && t.first.x > 0) || (prime[1] && t.first.y > 0);
          });
        });
        if (contained) return false;
      }
      return true;
    }
  }
  throw InputError("unknown ring kind");
}

}  // namespace torsim
