#pragma once

/**
 * @file modtorsion.hpp
 * @brief Torsion engine front end for presented modules over Z and Z/n.
 *
 * Finite modules up to a configurable order are handled by enumeration in
 * the underlying finite group. Larger or infinite modules go through the
 * associated-prime criterion: torsion-simple iff Ass M is a singleton, with
 * the p-primary torsion part for a nonzero associated prime p as witness.
 */

#include <optional>
#include <string>
#include <vector>

#include "torsim/categories.hpp"
#include "torsim/finmod.hpp"

namespace torsim {

struct ModuleOptions {
  std::size_t max_order = 200;
  bool prune = true;
  bool fast_paths = true;
  EngineOptions engine() const { return {prune, fast_paths}; }
};

inline bool enumerable(const PresentedModule& M, const ModuleOptions& opt) {
  auto d = canonical_decomposition(M);
  return d.is_finite() && d.order() <= Integer(opt.max_order);
}

inline std::vector<Subobject> to_subobjects(const PresentedModule& M, const FiniteView& view,
                                            const std::vector<Subgroup>& subs) {
  return subobjects_from_subgroups(M, view, subs);
}

inline FiniteView enumeration_view(const PresentedModule& M, const ModuleOptions& opt) {
  auto d = canonical_decomposition(M);
  if (!d.is_finite())
    throw PreconditionError("module " + d.to_string() + " is infinite; enumeration needs a finite module");
  if (d.order() > Integer(opt.max_order))
    throw PreconditionError("module order " + d.order().str() + " exceeds --max-order " + std::to_string(opt.max_order));
  return FiniteView(M, opt.max_order);
}

inline std::vector<Subobject> module_torsion_parts(const PresentedModule& M, const ModuleOptions& opt = {}) {
  auto view = enumeration_view(M, opt);
  return to_subobjects(M, view, torsion_parts(GroupCategory{}, view.group(), opt.engine()));
}

struct ModuleSimplicity {
  bool verdict = false;
  std::optional<Subobject> witness;
  std::string method;
  PrimeSet ass;
  /// "(p)" or "(0)" when the module is torsion-simple.
  std::optional<std::string> type;
};

inline ModuleSimplicity module_is_torsion_simple(const PresentedModule& M, const ModuleOptions& opt = {}) {
  auto d = canonical_decomposition(M);
  if (d.is_zero()) throw InputError("torsion-simplicity is defined for non-zero objects; got the zero module");
  ModuleSimplicity r;
  r.ass = associated_primes(M);
  if (enumerable(M, opt)) {
    FiniteView view(M, opt.max_order);
    auto rep = is_torsion_simple(GroupCategory{}, view.group(), opt.engine());
    r.verdict = rep.verdict;
    r.method = rep.method;
    if (rep.witness) r.witness = subobject_from_subgroup(M, view, *rep.witness);
  } else {
    r.method = "ass-criterion";
    r.verdict = r.ass.size() == 1;
    if (!r.verdict) {
      // Every nonzero prime of Z is maximal; take the smallest one.
      const Integer& p = r.ass.primes.front();
      Subobject w = p_torsion_part(M, p);
      auto W = submodule_as_module(w);
      auto Q = quotient(M, w);
      if (canonical_decomposition(W).is_zero() || canonical_decomposition(Q).is_zero())
        throw ContradictionError("p-primary witness is not a proper nonzero submodule");
      if (!hom_group(W, Q).is_zero()) throw ContradictionError("p-primary witness fails Hom(w, M/w) = 0");
      r.witness = w;
    }
  }
  if (r.verdict) {
    if (r.ass.size() != 1)
      throw ContradictionError("torsion-simple module with " + std::to_string(r.ass.size()) + " associated primes");
    r.type = r.ass.includes_zero ? std::string("(0)") : "(" + r.ass.primes.front().str() + ")";
  }
  return r;
}

/// Groups underlying a list of finite modules.
inline std::vector<FiniteAbelianGroup> underlying_groups(const std::vector<PresentedModule>& S, const ModuleOptions& opt) {
  std::vector<FiniteAbelianGroup> out;
  for (const auto& s : S) out.push_back(enumeration_view(s, opt).group());
  return out;
}

inline Subobject module_trace(const std::vector<PresentedModule>& S, const PresentedModule& M, const ModuleOptions& opt = {}) {
  auto view = enumeration_view(M, opt);
  return subobject_from_subgroup(M, view, trace(GroupCategory{}, underlying_groups(S, opt), view.group()));
}

inline Subobject module_radical_generated(const std::vector<PresentedModule>& S, const PresentedModule& M,
                                          const ModuleOptions& opt = {}, std::size_t* iterations = nullptr) {
  auto view = enumeration_view(M, opt);
  auto t = torsion_radical_generated(GroupCategory{}, underlying_groups(S, opt), view.group(), iterations);
  return subobject_from_subgroup(M, view, t);
}

struct ModuleCoradical {
  Subobject torsion;
  PresentedModule coradical;
};

inline ModuleCoradical module_coradical_cogenerated(const std::vector<PresentedModule>& S, const PresentedModule& M,
                                                    const ModuleOptions& opt = {}) {
  auto view = enumeration_view(M, opt);
  auto c = torsionfree_coradical_cogenerated(GroupCategory{}, underlying_groups(S, opt), view.group());
  Subobject t = subobject_from_subgroup(M, view, c.torsion);
  return {t, quotient(M, t)};
}

/// Composition factors of a finite module are Z/p; unique iff the order is
/// a prime power.
inline SimpleFactorReport<Integer> module_unique_simple_factor(const PresentedModule& M) {
  auto d = canonical_decomposition(M);
  if (d.is_zero()) throw InputError("the zero module has no composition factors");
  if (!d.is_finite()) throw PreconditionError("composition factors need a module of finite length");
  auto primes = prime_divisors(d.order());
  SimpleFactorReport<Integer> r;
  r.unique = primes.size() == 1;
  if (r.unique) r.factor = primes.front();
  return r;
}

}  // namespace torsim
