#pragma once

/**
 * @file categories.hpp
 * @brief Category handles for finite abelian groups and quiver representations.
 */

#include <numeric>

#include "torsim/fingroup.hpp"
#include "torsim/quiver.hpp"
#include "torsim/torsion.hpp"

namespace torsim {

template <class O, class M>
struct Piece {
  O object;
  M map;
};

/// Finite abelian groups (finite Z-modules).
struct GroupCategory {
  using Object = FiniteAbelianGroup;
  using Sub = Subgroup;
  using Morphism = GroupHom;
  using Factor = std::uint32_t;

  std::vector<Sub> subobjects(const Object& x) const { return group::all_subgroups(x); }
  Sub zero_sub(const Object& x) const { return group::trivial(x); }
  Sub whole_sub(const Object& x) const { return group::whole(x); }
  bool is_zero(const Object& x) const { return x.order() == 1; }
  bool leq(const Object&, const Sub& a, const Sub& b) const { return a.elements.subset_of(b.elements); }
  Sub sum(const Object& x, const Sub& a, const Sub& b) const { return group::sum(x, a, b); }
  Sub intersect(const Object& x, const Sub& a, const Sub& b) const { return group::intersect(x, a, b); }
  Piece<Object, Morphism> sub_object(const Object& x, const Sub& w) const {
    auto e = group::as_group(x, w);
    return {e.object, e.inclusion};
  }
  Piece<Object, Morphism> quotient(const Object& x, const Sub& w) const {
    auto q = group::quotient(x, w);
    return {q.object, q.projection};
  }
  std::vector<Morphism> hom_basis(const Object& a, const Object& b) const { return group::hom_basis(a, b); }
  bool hom_is_zero(const Object& a, const Object& b) const { return group::hom_is_zero(a, b); }
  const Object& source(const Morphism& f) const { return f.source; }
  const Object& target(const Morphism& f) const { return f.target; }
  Sub image(const Morphism& f, const Sub& w) const { return group::image(f, w); }
  Sub kernel(const Morphism& f) const { return group::kernel(f); }
  Sub preimage(const Morphism& f, const Sub& w) const { return group::preimage(f, w); }
  bool is_stable(const Morphism& f, const Sub& w) const { return group::is_stable(f, w); }
  std::vector<Factor> composition_factors(const Object& x) const { return group::composition_factors(x); }

  /// Hom(w, x/w) = 0 iff |w| and |x/w| are coprime.
  bool fast_part_test(const Object& x, const Sub& w) const {
    std::size_t k = w.order();
    return std::gcd(k, x.order() / k) == 1;
  }
};

/// Representations of one acyclic quiver over F_p.
struct QuiverCategory {
  using Object = QuiverRep;
  using Sub = SubRep;
  using Morphism = RepHom;
  using Factor = std::size_t;  // vertex of the simple

  quiver::Bound bound{};

  std::vector<Sub> subobjects(const Object& x) const { return quiver::enumerate_subreps(x, bound); }
  Sub zero_sub(const Object& x) const { return quiver::zero_sub(x); }
  Sub whole_sub(const Object& x) const { return quiver::whole_sub(x); }
  bool is_zero(const Object& x) const { return x.is_zero(); }
  bool leq(const Object& x, const Sub& a, const Sub& b) const { return quiver::sub_leq(x, a, b); }
  Sub sum(const Object& x, const Sub& a, const Sub& b) const { return quiver::sum(x, a, b); }
  Sub intersect(const Object& x, const Sub& a, const Sub& b) const { return quiver::intersect(x, a, b); }
  Piece<Object, Morphism> sub_object(const Object& x, const Sub& w) const {
    auto e = quiver::sub_as_rep(x, w);
    return {e.object, e.inclusion};
  }
  Piece<Object, Morphism> quotient(const Object& x, const Sub& w) const {
    auto q = quiver::quotient_rep(x, w);
    return {q.object, q.projection};
  }
  std::vector<Morphism> hom_basis(const Object& a, const Object& b) const { return quiver::hom_space(a, b); }
  bool hom_is_zero(const Object& a, const Object& b) const { return quiver::hom_is_zero(a, b); }
  const Object& source(const Morphism& f) const { return f.source; }
  const Object& target(const Morphism& f) const { return f.target; }
  Sub image(const Morphism& f, const Sub& w) const { return quiver::image(f, w); }
  Sub kernel(const Morphism& f) const { return quiver::kernel(f); }
  Sub preimage(const Morphism& f, const Sub& w) const { return quiver::preimage(f, w); }
  bool is_stable(const Morphism& f, const Sub& w) const { return quiver::is_stable_under(f, w); }
  std::vector<Factor> composition_factors(const Object& x) const {
    std::vector<Factor> out;
    for (auto [v, m] : quiver::composition_factors(x))
      for (std::size_t k = 0; k < m; ++k) out.push_back(v);
    return out;
  }
};

static_assert(CategoryHandle<GroupCategory>);
static_assert(CategoryHandle<QuiverCategory>);

/// Verdict of the single-vertex support criterion, for comparison with
/// brute force: simple iff exactly one vertex carries a nonzero space. The
/// witness for a non-simple rep is the whole space at the last support
/// vertex in topological order: arrows out of it land in zero spaces, and
/// the quotient vanishes at that vertex, so Hom(w, X/w) = 0.
inline SimplicityReport<SubRep> single_vertex_criterion(const QuiverRep& X) {
  if (X.is_zero()) throw InputError("torsion-simplicity is defined for non-zero objects; got the zero object");
  std::size_t support = 0, last = 0;
  for (std::size_t v : X.quiver().topological_order())
    if (X.dims()[v]) {
      ++support;
      last = v;
    }
  SimplicityReport<SubRep> r;
  r.method = "single-vertex-criterion";
  r.verdict = support == 1;
  if (!r.verdict) {
    std::vector<fp::Mat> spaces;
    for (std::size_t v = 0; v < X.dims().size(); ++v)
      spaces.push_back(v == last ? fp::Mat::identity(X.dims()[v]) : fp::Mat(0, X.dims()[v]));
    r.witness = quiver::make_subrep(X, spaces);
  }
  return r;
}

}  // namespace torsim
