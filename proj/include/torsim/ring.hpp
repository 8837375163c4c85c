#pragma once

/**
 * @file ring.hpp
 * @brief Coefficient rings and their elements in canonical normal form.
 *
 * Supported rings:
 *   Z, Z/n (n >= 2), F_p, F_p[x], F_p[x]/(f) with f monic of degree >= 1,
 *   F_p[x,y]/J with J generated by monomials (J = 0 allowed).
 *
 * Every RingElem is stored in normal form, so element equality is equality
 * of payloads. Rings are immutable and shared through RingPtr.
 */

#include <cctype>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "torsim/integer.hpp"
#include "torsim/poly.hpp"

namespace torsim {

enum class RingKind { Integers, IntegersMod, PrimeField, UniPoly, UniPolyQuot, BiPolyMonomialQuot };

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// Minimal generating set of a monomial ideal, sorted ascending.
inline std::vector<Monomial> minimal_monomials(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (const auto& m : gens) {
    bool redundant = false;
    for (const auto& other : gens) {
      if (other != m && other.divides(m)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) out.push_back(m);
  }
  return out;
}

inline bool monomial_in(const std::vector<Monomial>& gens, const Monomial& m) {
  return std::any_of(gens.begin(), gens.end(), [&](const Monomial& g) { return g.divides(m); });
}

class Ring {
 public:
  static RingPtr integers() { return RingPtr(new Ring(RingKind::Integers)); }

  static RingPtr integers_mod(const Integer& n) {
    if (n < 2) throw InputError("Z/n requires n >= 2, got " + n.str());
    Ring r(RingKind::IntegersMod);
    r.modulus_ = n;
    return std::make_shared<const Ring>(std::move(r));
  }

  static RingPtr prime_field(const Integer& p) {
    if (!is_prime(p)) throw InputError("F_p requires a prime p, got " + p.str());
    Ring r(RingKind::PrimeField);
    r.modulus_ = p;
    return std::make_shared<const Ring>(std::move(r));
  }

  static RingPtr uni_poly(const Integer& p, char variable = 'x') {
    Ring r(RingKind::UniPoly);
    r.set_small_prime(p);
    r.variable_ = variable;
    return std::make_shared<const Ring>(std::move(r));
  }

  static RingPtr uni_poly_quot(const Integer& p, upoly::Poly f, char variable = 'x') {
    Ring r(RingKind::UniPolyQuot);
    r.set_small_prime(p);
    r.variable_ = variable;
    for (auto& c : f) c = mod_p(c, r.p_);
    upoly::trim(f);
    if (upoly::degree(f) < 1) throw InputError("F_p[x]/(f) requires deg f >= 1");
    if (f.back() != 1) throw InputError("F_p[x]/(f) requires f monic");
    r.f_ = std::move(f);
    return std::make_shared<const Ring>(std::move(r));
  }

  static RingPtr bi_poly(const Integer& p, std::vector<Monomial> rels) {
    Ring r(RingKind::BiPolyMonomialQuot);
    r.set_small_prime(p);
    r.rels_ = minimal_monomials(std::move(rels));
    if (!r.rels_.empty() && r.rels_.front().is_one()) throw InputError("relation 1 gives the zero ring");
    return std::make_shared<const Ring>(std::move(r));
  }

  RingKind kind() const { return kind_; }
  /// n for Z/n, p for F_p; zero for Z.
  const Integer& modulus() const { return modulus_; }
  /// Characteristic of the polynomial rings.
  Residue p() const { return p_; }
  const upoly::Poly& modulus_poly() const { return f_; }
  const std::vector<Monomial>& relations() const { return rels_; }
  char variable() const { return variable_; }

  bool is_polynomial() const {
    return kind_ == RingKind::UniPoly || kind_ == RingKind::UniPolyQuot || kind_ == RingKind::BiPolyMonomialQuot;
  }
  bool is_univariate() const { return kind_ == RingKind::UniPoly || kind_ == RingKind::UniPolyQuot; }

  bool is_domain() const {
    switch (kind_) {
      case RingKind::Integers:
      case RingKind::PrimeField:
      case RingKind::UniPoly:
        return true;
      case RingKind::IntegersMod:
        return is_prime(modulus_);
      case RingKind::UniPolyQuot:
        return upoly::is_irreducible(f_, p_);
      case RingKind::BiPolyMonomialQuot: {
        // The monomial primes are 0, (x), (y), (x, y).
        if (rels_.empty()) return true;
        return std::all_of(rels_.begin(), rels_.end(), [](const Monomial& m) { return m.degree() == 1; });
      }
    }
    return false;
  }

  bool is_finite() const {
    switch (kind_) {
      case RingKind::Integers:
      case RingKind::UniPoly:
        return false;
      case RingKind::IntegersMod:
      case RingKind::PrimeField:
      case RingKind::UniPolyQuot:
        return true;
      case RingKind::BiPolyMonomialQuot: {
        bool pure_x = false, pure_y = false;
        for (const auto& m : rels_) {
          pure_x |= (m.y == 0);
          pure_y |= (m.x == 0);
        }
        return pure_x && pure_y;
      }
    }
    return false;
  }

  /// Standard monomials (those outside the relation ideal) of a finite
  /// bivariate quotient, ascending.
  std::vector<Monomial> standard_monomials() const {
    if (kind_ != RingKind::BiPolyMonomialQuot || !is_finite()) {
      throw PreconditionError("standard monomials requested for a ring that is not a finite bivariate quotient");
    }
    std::uint32_t max_x = 0, max_y = 0;
    for (const auto& m : rels_) {
      if (m.y == 0) max_x = std::max(max_x, m.x);
      if (m.x == 0) max_y = std::max(max_y, m.y);
    }
    std::vector<Monomial> out;
    for (std::uint32_t a = 0; a < max_x; ++a)
      for (std::uint32_t b = 0; b < max_y; ++b)
        if (!monomial_in(rels_, {a, b})) out.push_back({a, b});
    return out;
  }

  std::string describe() const {
    switch (kind_) {
      case RingKind::Integers:
        return "Z";
      case RingKind::IntegersMod:
        return "Z/" + modulus_.str();
      case RingKind::PrimeField:
        return "F_" + modulus_.str();
      case RingKind::UniPoly:
        return "F_" + std::to_string(p_) + "[" + variable_ + "]";
      case RingKind::UniPolyQuot:
        return "F_" + std::to_string(p_) + "[" + variable_ + "]/(" + poly_string(f_) + ")";
      case RingKind::BiPolyMonomialQuot: {
        std::string s = "F_" + std::to_string(p_) + "[x,y]";
        if (!rels_.empty()) {
          s += "/(";
          for (std::size_t i = 0; i < rels_.size(); ++i) s += (i ? "," : "") + to_string(rels_[i]);
          s += ")";
        }
        return s;
      }
    }
    return "?";
  }

  std::string poly_string(const upoly::Poly& a) const {
    if (a.empty()) return "0";
    std::string s;
    for (int d = upoly::degree(a); d >= 0; --d) {
      Residue c = a[static_cast<std::size_t>(d)];
      if (c == 0) continue;
      if (!s.empty()) s += " + ";
      if (c != 1 || d == 0) s += std::to_string(c);
      if (d >= 1) s += variable_;
      if (d >= 2) s += "^" + std::to_string(d);
    }
    return s;
  }

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.kind_ == b.kind_ && a.modulus_ == b.modulus_ && a.p_ == b.p_ && a.f_ == b.f_ && a.rels_ == b.rels_ &&
           a.variable_ == b.variable_;
  }

  explicit Ring(RingKind kind) : kind_(kind) {}

 private:
  void set_small_prime(const Integer& p) {
    if (p >= (Integer(1) << 31)) throw UnsupportedRingError("polynomial rings need p < 2^31, got " + p.str());
    if (!is_prime(p)) throw InputError("polynomial ring needs a prime characteristic, got " + p.str());
    p_ = static_cast<Residue>(p);
  }

  RingKind kind_;
  Integer modulus_ = 0;
  Residue p_ = 0;
  upoly::Poly f_;
  std::vector<Monomial> rels_;
  char variable_ = 'x';
};

inline bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || *a == *b; }

class RingElem {
 public:
  using Value = std::variant<Integer, upoly::Poly, bipoly::Poly>;

  RingElem(RingPtr ring, Value value) : ring_(std::move(ring)), value_(std::move(value)) { normalize(); }

  static RingElem zero(const RingPtr& ring) { return from_integer(ring, 0); }
  static RingElem one(const RingPtr& ring) { return from_integer(ring, 1); }

  static RingElem from_integer(const RingPtr& ring, const Integer& c) {
    switch (ring->kind()) {
      case RingKind::Integers:
      case RingKind::IntegersMod:
      case RingKind::PrimeField:
        return RingElem(ring, c);
      case RingKind::UniPoly:
      case RingKind::UniPolyQuot:
        return RingElem(ring, upoly::Poly{static_cast<Residue>(mod_floor(c, ring->p()))});
      case RingKind::BiPolyMonomialQuot:
        return RingElem(ring, bipoly::Poly{{Monomial{}, static_cast<Residue>(mod_floor(c, ring->p()))}});
    }
    throw InputError("unknown ring kind");
  }

  static RingElem monomial(const RingPtr& ring, Monomial m, Residue c = 1) {
    if (ring->kind() != RingKind::BiPolyMonomialQuot) throw InputError("monomial element outside a bivariate ring");
    return RingElem(ring, bipoly::Poly{{m, c}});
  }

  const RingPtr& ring() const { return ring_; }
  const Value& value() const { return value_; }
  const Integer& as_integer() const { return std::get<Integer>(value_); }
  const upoly::Poly& as_upoly() const { return std::get<upoly::Poly>(value_); }
  const bipoly::Poly& as_bipoly() const { return std::get<bipoly::Poly>(value_); }

  bool is_zero() const {
    return std::visit(
        [](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, Integer>) {
            return v == 0;
          } else {
            return v.empty();
          }
        },
        value_);
  }

  bool is_one() const { return *this == one(ring_); }

  /// Single term c*x^a*y^b with c != 0.
  bool is_monomial() const {
    return ring_->kind() == RingKind::BiPolyMonomialQuot && as_bipoly().size() == 1;
  }

  /// Two terms of the shape c*x^a + c'*y^b with a, b >= 1.
  bool is_xy_binomial() const {
    if (ring_->kind() != RingKind::BiPolyMonomialQuot) return false;
    const auto& t = as_bipoly();
    if (t.size() != 2) return false;
    // Sorted ascending by (x, y): the pure-y term comes first.
    return t[0].first.x == 0 && t[0].first.y >= 1 && t[1].first.y == 0 && t[1].first.x >= 1;
  }

  std::string to_string() const {
    switch (ring_->kind()) {
      case RingKind::Integers:
      case RingKind::IntegersMod:
      case RingKind::PrimeField:
        return as_integer().str();
      case RingKind::UniPoly:
      case RingKind::UniPolyQuot:
        return ring_->poly_string(as_upoly());
      case RingKind::BiPolyMonomialQuot: {
        auto terms = as_bipoly();
        if (terms.empty()) return "0";
        std::sort(terms.begin(), terms.end(), [](const auto& l, const auto& r) {
          if (l.first.degree() != r.first.degree()) return l.first.degree() > r.first.degree();
          return l.first.x > r.first.x;
        });
        std::string s;
        for (const auto& [m, c] : terms) {
          if (!s.empty()) s += " + ";
          if (c != 1 || m.is_one()) s += std::to_string(c);
          if (!m.is_one()) s += torsim::to_string(m);
        }
        return s;
      }
    }
    return "?";
  }

  friend bool operator==(const RingElem& a, const RingElem& b) {
    return same_ring(a.ring_, b.ring_) && a.value_ == b.value_;
  }

 private:
  void normalize() {
    const Ring& r = *ring_;
    auto mismatch = [&] { throw InputError("element payload does not match ring " + r.describe()); };
    switch (r.kind()) {
      case RingKind::Integers:
        if (!std::holds_alternative<Integer>(value_)) mismatch();
        break;
      case RingKind::IntegersMod:
      case RingKind::PrimeField:
        if (!std::holds_alternative<Integer>(value_)) mismatch();
        value_ = mod_floor(std::get<Integer>(value_), r.modulus());
        break;
      case RingKind::UniPoly:
      case RingKind::UniPolyQuot: {
        if (!std::holds_alternative<upoly::Poly>(value_)) mismatch();
        auto& a = std::get<upoly::Poly>(value_);
        for (auto& c : a) c = mod_p(c, r.p());
        upoly::trim(a);
        if (r.kind() == RingKind::UniPolyQuot) a = upoly::rem(a, r.modulus_poly(), r.p());
        break;
      }
      case RingKind::BiPolyMonomialQuot: {
        if (!std::holds_alternative<bipoly::Poly>(value_)) mismatch();
        auto& a = std::get<bipoly::Poly>(value_);
        bipoly::normalize(a, r.p());
        std::erase_if(a, [&](const auto& t) { return monomial_in(r.relations(), t.first); });
        break;
      }
    }
  }

  RingPtr ring_;
  Value value_;
};

namespace detail {
inline void require_same_ring(const RingElem& a, const RingElem& b) {
  if (!same_ring(a.ring(), b.ring())) {
    throw InputError("mixed-ring operands: " + a.ring()->describe() + " vs " + b.ring()->describe());
  }
}
}  // namespace detail

inline RingElem operator+(const RingElem& a, const RingElem& b) {
  detail::require_same_ring(a, b);
  const Ring& r = *a.ring();
  switch (r.kind()) {
    case RingKind::Integers:
    case RingKind::IntegersMod:
    case RingKind::PrimeField:
      return RingElem(a.ring(), a.as_integer() + b.as_integer());
    case RingKind::UniPoly:
    case RingKind::UniPolyQuot:
      return RingElem(a.ring(), upoly::add(a.as_upoly(), b.as_upoly(), r.p()));
    case RingKind::BiPolyMonomialQuot: {
      auto t = a.as_bipoly();
      t.insert(t.end(), b.as_bipoly().begin(), b.as_bipoly().end());
      return RingElem(a.ring(), std::move(t));
    }
  }
  throw InputError("unknown ring kind");
}

inline RingElem operator-(const RingElem& a) {
  const Ring& r = *a.ring();
  switch (r.kind()) {
    case RingKind::Integers:
    case RingKind::IntegersMod:
    case RingKind::PrimeField:
      return RingElem(a.ring(), Integer(-a.as_integer()));
    case RingKind::UniPoly:
    case RingKind::UniPolyQuot:
      return RingElem(a.ring(), upoly::neg(a.as_upoly(), r.p()));
    case RingKind::BiPolyMonomialQuot: {
      auto t = a.as_bipoly();
      for (auto& term : t) term.second = r.p() - term.second;
      return RingElem(a.ring(), std::move(t));
    }
  }
  throw InputError("unknown ring kind");
}

inline RingElem operator-(const RingElem& a, const RingElem& b) { return a + (-b); }

inline RingElem operator*(const RingElem& a, const RingElem& b) {
  detail::require_same_ring(a, b);
  const Ring& r = *a.ring();
  switch (r.kind()) {
    case RingKind::Integers:
    case RingKind::IntegersMod:
    case RingKind::PrimeField:
      return RingElem(a.ring(), a.as_integer() * b.as_integer());
    case RingKind::UniPoly:
    case RingKind::UniPolyQuot:
      return RingElem(a.ring(), upoly::mul(a.as_upoly(), b.as_upoly(), r.p()));
    case RingKind::BiPolyMonomialQuot: {
      bipoly::Poly t;
      for (const auto& [ma, ca] : a.as_bipoly())
        for (const auto& [mb, cb] : b.as_bipoly()) t.emplace_back(ma * mb, ca * cb % r.p());
      return RingElem(a.ring(), std::move(t));
    }
  }
  throw InputError("unknown ring kind");
}

inline RingElem pow(RingElem base, unsigned exponent) {
  RingElem result = RingElem::one(base.ring());
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1;
    if (exponent) base = base * base;
  }
  return result;
}

enum class ArithOp { Add, Mul, Neg };

/// Single entry point for the three ring operations; b is ignored for Neg.
inline RingElem ring_arith(ArithOp op, const RingElem& a, const std::optional<RingElem>& b = std::nullopt) {
  if (op == ArithOp::Neg) return -a;
  if (!b) throw InputError("binary ring operation needs two operands");
  return op == ArithOp::Add ? a + *b : a * *b;
}

// ---------------------------------------------------------------------------
// Literal parsing: "3x^2y + 2*x - y^3 + 7"
// ---------------------------------------------------------------------------

namespace detail {

struct ParsedTerm {
  Integer coeff;
  std::uint32_t ex = 0, ey = 0;
};

inline std::vector<ParsedTerm> parse_poly_terms(std::string_view text, bool bivariate, char& uni_var) {
  std::vector<ParsedTerm> terms;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const std::string& why) {
    throw InputError("cannot parse polynomial '" + std::string(text) + "': " + why);
  };
  auto read_uint = [&]() -> std::string {
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    return std::string(text.substr(start, i - start));
  };
  skip();
  if (i == text.size()) fail("empty");
  bool first = true;
  while (i < text.size()) {
    int sign = 1;
    skip();
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip();
    } else if (!first) {
      fail("expected + or -");
    }
    first = false;
    ParsedTerm t;
    t.coeff = sign;
    bool any = false;
    std::string digits = read_uint();
    if (!digits.empty()) {
      t.coeff *= Integer(digits);
      any = true;
    }
    for (;;) {
      skip();
      if (i < text.size() && text[i] == '*') {
        ++i;
        skip();
      }
      if (i >= text.size() || !std::isalpha(static_cast<unsigned char>(text[i]))) break;
      char v = text[i++];
      std::uint32_t e = 1;
      skip();
      if (i < text.size() && text[i] == '^') {
        ++i;
        skip();
        std::string ed = read_uint();
        if (ed.empty()) fail("missing exponent");
        e = static_cast<std::uint32_t>(std::stoul(ed));
      }
      if (bivariate) {
        if (v == 'x') {
          t.ex += e;
        } else if (v == 'y') {
          t.ey += e;
        } else {
          fail(std::string("unknown variable ") + v);
        }
      } else {
        if (v != 'x' && v != 'y' && v != 't') fail(std::string("unknown variable ") + v);
        if (uni_var != 0 && uni_var != v) fail("more than one variable in a univariate ring");
        uni_var = v;
        t.ex += e;
      }
      any = true;
    }
    if (!any) fail("empty term");
    terms.push_back(t);
    skip();
  }
  return terms;
}

}  // namespace detail

/// Parses an element literal: decimal integers for Z, Z/n, F_p; polynomial
/// expressions for the polynomial rings.
inline RingElem parse_element(const RingPtr& ring, std::string_view text) {
  switch (ring->kind()) {
    case RingKind::Integers:
    case RingKind::IntegersMod:
    case RingKind::PrimeField: {
      std::string s(text);
      std::erase_if(s, [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
      return RingElem(ring, parse_integer(s));
    }
    case RingKind::UniPoly:
    case RingKind::UniPolyQuot: {
      char var = 0;
      auto terms = detail::parse_poly_terms(text, false, var);
      if (var != 0 && var != ring->variable()) {
        throw InputError(std::string("variable ") + var + " does not belong to " + ring->describe());
      }
      upoly::Poly acc;
      for (const auto& t : terms) {
        acc = upoly::add(acc, upoly::monomial(static_cast<Residue>(mod_floor(t.coeff, ring->p())),
                                              static_cast<int>(t.ex), ring->p()),
                         ring->p());
      }
      return RingElem(ring, acc);
    }
    case RingKind::BiPolyMonomialQuot: {
      char unused = 0;
      auto terms = detail::parse_poly_terms(text, true, unused);
      bipoly::Poly acc;
      for (const auto& t : terms)
        acc.emplace_back(Monomial{t.ex, t.ey}, static_cast<Residue>(mod_floor(t.coeff, ring->p())));
      return RingElem(ring, acc);
    }
  }
  throw InputError("unknown ring kind");
}

inline upoly::Poly parse_upoly(std::string_view text, const Integer& p, char& variable) {
  char var = 0;
  auto terms = detail::parse_poly_terms(text, false, var);
  Residue ps = static_cast<Residue>(p);
  upoly::Poly acc;
  for (const auto& t : terms)
    acc = upoly::add(acc, upoly::monomial(static_cast<Residue>(mod_floor(t.coeff, p)), static_cast<int>(t.ex), ps), ps);
  variable = var == 0 ? 'x' : var;
  return acc;
}

inline Monomial parse_monomial(std::string_view text) {
  char unused = 0;
  auto terms = detail::parse_poly_terms(text, true, unused);
  if (terms.size() != 1 || terms[0].coeff != 1) throw InputError("expected a monomial, got '" + std::string(text) + "'");
  return {terms[0].ex, terms[0].ey};
}

}  // namespace torsim
