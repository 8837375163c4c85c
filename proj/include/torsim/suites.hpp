#pragma once

/**
 * @file suites.hpp
 * @brief Named verification suites over small exhaustive or seeded universes.
 *
 * A suite is a list of sections; each section runs independent instances
 * through parallel_map and records failures in index order, so reports do not
 * depend on the worker count.
 */

#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "torsim/categories.hpp"
#include "torsim/json_io.hpp"
#include "torsim/mccoy.hpp"
#include "torsim/modtorsion.hpp"
#include "torsim/parallel.hpp"

namespace torsim {

struct SuiteOptions {
  std::uint64_t seed = 0;
  std::size_t max_order = 200;
  std::size_t max_dim = 3;
  std::size_t count = 500;
  bool prune = true;
};

struct SuiteSection {
  std::string name;
  std::size_t instances = 0;
  std::size_t failures = 0;
};

struct SuiteReport {
  std::string suite;
  std::string anchor;
  std::vector<SuiteSection> sections;
  std::vector<std::string> failure_messages;  // first few, in instance order

  std::size_t instances() const {
    std::size_t n = 0;
    for (const auto& s : sections) n += s.instances;
    return n;
  }
  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& s : sections) n += s.failures;
    return n;
  }
  bool passed() const { return failures() == 0; }
  const SuiteSection* section(const std::string& name) const {
    for (const auto& s : sections)
      if (s.name == name) return &s;
    return nullptr;
  }

  Json to_json() const {
    Json j;
    j["suite"] = suite;
    j["instances"] = instances();
    j["failures"] = failures();
    Json secs = Json::array();
    for (const auto& s : sections) secs.push_back(Json{{"name", s.name}, {"instances", s.instances}, {"failures", s.failures}});
    j["sections"] = secs;
    j["failure_messages"] = failure_messages;
    return j;
  }
};

namespace suites {

inline constexpr std::size_t kMaxMessages = 20;

/// Stateless per-instance seed derivation (splitmix64 finaliser).
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (a + 1) + 0xbf58476d1ce4e5b9ULL * (b + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Runs n instances; f returns a failure message or nullopt. A
/// ContradictionError raised by the library counts as a failure.
template <class F>
void run_section(SuiteReport& rep, const std::string& name, std::size_t n, F&& f) {
  auto results = parallel_map(n, [&](std::size_t i) -> std::optional<std::string> {
    try {
      return f(i);
    } catch (const ContradictionError& e) {
      return std::string("contradiction: ") + e.what();
    }
  });
  SuiteSection s{name, n, 0};
  for (auto& r : results) {
    if (!r) continue;
    ++s.failures;
    if (rep.failure_messages.size() < kMaxMessages) rep.failure_messages.push_back(name + ": " + *r);
  }
  rep.sections.push_back(s);
}

inline std::string group_label(const std::vector<Integer>& factors) {
  if (factors.empty()) return "0";
  std::string s;
  for (const auto& f : factors) s += (s.empty() ? "Z/" : " + Z/") + f.str();
  return s;
}

inline std::string group_label(const FiniteAbelianGroup& G) {
  std::vector<Integer> f(G.radices().begin(), G.radices().end());
  return group_label(f);
}

inline std::string rep_label(const QuiverRep& X) { return json::rep_json(X).dump(); }

/// All finite abelian groups of order min_order..max_order, as invariant factor lists.
inline std::vector<std::vector<Integer>> groups_up_to(std::size_t max_order, std::size_t min_order = 2) {
  std::vector<std::vector<Integer>> out;
  for (std::size_t n = min_order; n <= max_order; ++n)
    for (auto& g : abelian_groups_of_order(n)) out.push_back(std::move(g));
  return out;
}

/// Every representation of q over F_p with dims[v] <= max_dims[v] and every
/// choice of matrices, the zero representation excluded.
inline std::vector<QuiverRep> all_reps(const Quiver& q, Residue p, const std::vector<std::size_t>& max_dims) {
  std::vector<QuiverRep> out;
  std::vector<std::size_t> dims(q.vertex_count(), 0);
  std::function<void(std::size_t)> over_dims = [&](std::size_t v) {
    if (v < dims.size()) {
      for (std::size_t d = 0; d <= max_dims[v]; ++d) {
        dims[v] = d;
        over_dims(v + 1);
      }
      return;
    }
    if (std::all_of(dims.begin(), dims.end(), [](std::size_t d) { return d == 0; })) return;
    std::size_t entries = 0;
    for (auto [s, t] : q.arrows()) entries += dims[s] * dims[t];
    std::size_t total = 1;
    for (std::size_t k = 0; k < entries; ++k) total *= static_cast<std::size_t>(p);
    for (std::size_t code = 0; code < total; ++code) {
      std::size_t c = code;
      std::vector<fp::Mat> maps;
      for (auto [s, t] : q.arrows()) {
        fp::Mat m(dims[t], dims[s]);
        for (std::size_t i = 0; i < dims[t]; ++i)
          for (std::size_t k = 0; k < dims[s]; ++k) {
            m(i, k) = static_cast<Residue>(c % static_cast<std::size_t>(p));
            c /= static_cast<std::size_t>(p);
          }
        maps.push_back(std::move(m));
      }
      out.emplace_back(q, p, dims, std::move(maps));
    }
  };
  over_dims(0);
  return out;
}

template <class Sub, class Leq>
bool same_sets(const std::vector<Sub>& a, const std::vector<Sub>& b, Leq&& eq) {
  if (a.size() != b.size()) return false;
  for (const auto& x : a)
    if (std::none_of(b.begin(), b.end(), [&](const Sub& y) { return eq(x, y); })) return false;
  return true;
}

inline bool same_subrep(const QuiverRep& X, const SubRep& a, const SubRep& b) {
  return quiver::sub_leq(X, a, b) && quiver::sub_leq(X, b, a);
}

inline quiver::Bound bound_for(std::size_t max_dim) { return {std::max<std::size_t>(4, max_dim)}; }

// ---------------------------------------------------------------------------
// Suites
// ---------------------------------------------------------------------------

inline SuiteReport finite_length(const SuiteOptions& opt) {
  SuiteReport rep{"finite-length", "Prop: finite length torsion-simple iff unique simple factor", {}, {}};
  QuiverCategory cat{bound_for(opt.max_dim)};
  EngineOptions eng{opt.prune, true};
  auto universe = all_reps(Quiver::linear(2), 2, {opt.max_dim, opt.max_dim});
  run_section(rep, "A2 over F2", universe.size(), [&](std::size_t i) -> std::optional<std::string> {
    const auto& X = universe[i];
    bool brute = is_torsion_simple(cat, X, eng).verdict;
    bool crit = single_vertex_criterion(X).verdict;
    bool factor = unique_simple_factor(cat, X).unique;
    if (brute == crit && crit == factor) return std::nullopt;
    return rep_label(X) + ": brute " + std::to_string(brute) + ", single-vertex " + std::to_string(crit) +
           ", unique factor " + std::to_string(factor);
  });
  return rep;
}

inline SuiteReport ass_singleton(const SuiteOptions& opt) {
  SuiteReport rep{"ass-singleton", "Cor: torsion-simple iff |Ass M| = 1", {}, {}};
  EngineOptions eng{opt.prune, true};
  auto groups = groups_up_to(opt.max_order);
  run_section(rep, "finite abelian groups", groups.size(), [&](std::size_t i) -> std::optional<std::string> {
    const auto& f = groups[i];
    FiniteAbelianGroup G(f, group::kMaxEnumerationOrder);
    std::size_t parts = torsion_parts(GroupCategory{}, G, eng).size();
    std::size_t ass = associated_primes(PresentedModule::cyclic_sum(Ring::integers(), f)).size();
    bool p_group = prime_divisors(Integer(G.order())).size() == 1;
    if ((parts == 2) == (ass == 1) && (ass == 1) == p_group) return std::nullopt;
    return group_label(f) + ": |t| = " + std::to_string(parts) + ", |Ass| = " + std::to_string(ass);
  });

  // Infinite modules go through the Ass criterion with a checked witness.
  struct Case {
    std::size_t free_rank;
    std::vector<Integer> torsion;
  };
  std::vector<Case> infinite = {{1, {}}, {2, {}}, {1, {2}}, {1, {4}}, {1, {6}}, {2, {3, 9}}, {1, {2, 3, 5}}};
  ModuleOptions mopt;
  mopt.max_order = opt.max_order;
  mopt.prune = opt.prune;
  run_section(rep, "infinite modules", infinite.size(), [&](std::size_t i) -> std::optional<std::string> {
    std::vector<Integer> d(infinite[i].free_rank, 0);
    d.insert(d.end(), infinite[i].torsion.begin(), infinite[i].torsion.end());
    auto M = PresentedModule::cyclic_sum(Ring::integers(), d);
    auto r = module_is_torsion_simple(M, mopt);
    bool expected = infinite[i].torsion.empty();
    if (r.verdict == expected && r.verdict == (r.ass.size() == 1) && r.verdict != r.witness.has_value())
      return std::nullopt;
    return canonical_decomposition(M).to_string() + ": verdict " + std::to_string(r.verdict) + ", Ass " + r.ass.to_string();
  });
  return rep;
}

inline SuiteReport gabriel_split(const SuiteOptions& opt) {
  SuiteReport rep{"gabriel-split", "Thm: hereditary torsion pairs of mod R match specialisation-closed prime sets", {}, {}};
  const std::vector<Integer> primes = {2, 3, 5};
  auto groups = groups_up_to(std::min<std::size_t>(opt.max_order, 100), 1);
  const std::size_t n = groups.size() * 8;
  ModuleOptions mopt;
  mopt.max_order = std::max<std::size_t>(opt.max_order, 100);
  run_section(rep, "V in P({2,3,5}) x groups", n, [&](std::size_t i) -> std::optional<std::string> {
    const auto& f = groups[i / 8];
    unsigned mask = static_cast<unsigned>(i % 8);
    auto M = PresentedModule::cyclic_sum(Ring::integers(), f);
    std::vector<PresentedModule> S;
    std::vector<FiniteAbelianGroup> Sg;
    Subobject expected = zero_subobject(M);
    std::string vlabel = "{";
    for (unsigned b = 0; b < 3; ++b) {
      if (!(mask >> b & 1)) continue;
      S.push_back(PresentedModule::cyclic_sum(Ring::integers(), {primes[b]}));
      Sg.push_back(FiniteAbelianGroup({primes[b]}));
      expected = subobject_sum(expected, primary_component(M, primes[b]));
      vlabel += (vlabel.size() > 1 ? "," : "") + primes[b].str();
    }
    vlabel += "}";
    auto got = module_radical_generated(S, M, mopt);
    if (!(got == expected)) return group_label(f) + ", V = " + vlabel + ": radical differs from the primary sum";
    FiniteAbelianGroup G(f, group::kMaxEnumerationOrder);
    for (const auto& a : verify_torsion_pair_axioms(GroupCategory{}, Sg, {G}))
      if (!a.passed()) return group_label(f) + ", V = " + vlabel + ": torsion pair axioms fail";
    return std::nullopt;
  });
  return rep;
}

inline RingMatrix random_zmod_matrix(const RingPtr& R, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::uint64_t n = static_cast<std::uint64_t>(R->modulus());
  std::size_t rows = 1 + rng() % 3, cols = 1 + rng() % 3;
  RingMatrix A(R, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) A(i, j) = RingElem::from_integer(R, Integer(rng() % n));
  return A;
}

inline std::string matrix_label(const RingMatrix& A) { return json::ring_matrix_json(A).dump(); }

inline SuiteReport mccoy(const SuiteOptions& opt) {
  SuiteReport rep{"mccoy", "Thm: nonzero nullvector iff mcrk A < columns", {}, {}};
  const std::vector<std::uint64_t> moduli = {4, 6, 8, 9, 12};
  run_section(rep, "theorem vs exhaustive over Z/n", moduli.size() * opt.count,
              [&](std::size_t i) -> std::optional<std::string> {
                std::uint64_t n = moduli[i / opt.count];
                auto R = Ring::integers_mod(n);
                auto A = random_zmod_matrix(R, derive_seed(opt.seed, n, i % opt.count));
                auto th = nullvector_theorem(A);
                auto ex = nullvector_exhaustive(A);
                if (ex.exists) {
                  const auto& v = *ex.vector;
                  bool nonzero = std::any_of(v.begin(), v.end(), [](const RingElem& e) { return !e.is_zero(); });
                  auto Av = A.apply(v);
                  bool kills = std::all_of(Av.begin(), Av.end(), [](const RingElem& e) { return e.is_zero(); });
                  if (!nonzero || !kills) return "Z/" + std::to_string(n) + " " + matrix_label(A) + ": bad nullvector";
                }
                if (th.exists == ex.exists) return std::nullopt;
                return "Z/" + std::to_string(n) + " " + matrix_label(A) + ": theorem " + std::to_string(th.exists) +
                       ", exhaustive " + std::to_string(ex.exists);
              });

  run_section(rep, "minor chain D_r contains D_r+1", moduli.size() * std::min<std::size_t>(opt.count, 100),
              [&](std::size_t i) -> std::optional<std::string> {
                std::size_t per = std::min<std::size_t>(opt.count, 100);
                std::uint64_t n = moduli[i / per];
                auto R = Ring::integers_mod(n);
                auto A = random_zmod_matrix(R, derive_seed(opt.seed, n, i % per));
                auto prof = mccoy_rank(A);
                for (std::size_t r = 0; r + 1 < prof.ideals.size(); ++r)
                  for (const auto& g : prof.ideals[r + 1].generators())
                    if (!ideal_membership(prof.ideals[r], g))
                      return "Z/" + std::to_string(n) + " " + matrix_label(A) + ": D_" + std::to_string(r + 1) +
                             " not inside D_" + std::to_string(r);
                return std::nullopt;
              });

  run_section(rep, "domain rank over Z", 100, [&](std::size_t i) -> std::optional<std::string> {
    std::mt19937_64 rng(derive_seed(opt.seed, 1000, i));
    auto Z = Ring::integers();
    std::size_t rows = 1 + rng() % 3, cols = 1 + rng() % 3;
    RingMatrix A(Z, rows, cols);
    IntMatrix B(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) {
        Integer v = Integer(static_cast<std::int64_t>(rng() % 7)) - 3;
        A(r, c) = RingElem::from_integer(Z, v);
        B(r, c) = v;
      }
    std::size_t rank = smith_checked(B).rank;
    if (mccoy_rank(A).mccoy_rank == rank) return std::nullopt;
    return matrix_label(A) + ": mcrk differs from the rank over Q";
  });

  run_section(rep, "domain rank over F_p[x]", 100, [&](std::size_t i) -> std::optional<std::string> {
    std::mt19937_64 rng(derive_seed(opt.seed, 2000, i));
    Residue p = i % 2 ? 3 : 2;
    auto R = Ring::uni_poly(p);
    std::size_t rows = 1 + rng() % 3, cols = 1 + rng() % 3;
    RingMatrix A(R, rows, cols);
    std::vector<std::vector<upoly::Poly>> P(rows, std::vector<upoly::Poly>(cols));
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) {
        upoly::Poly f(3);
        for (auto& co : f) co = static_cast<Residue>(rng() % static_cast<std::uint64_t>(p));
        upoly::trim(f);
        P[r][c] = f;
        A(r, c) = RingElem(R, f);
      }
    std::size_t rank = detail::upoly_rank(P, p);
    if (mccoy_rank(A).mccoy_rank == rank) return std::nullopt;
    return matrix_label(A) + ": mcrk differs from the rank over F_p(x)";
  });
  return rep;
}

struct MorphismCase {
  std::string label;
  IdealSpec ideal;
  bool expected;
  std::optional<std::size_t> fp_dimension;
};

inline std::vector<MorphismCase> morphism_cases() {
  std::vector<MorphismCase> out;
  auto Z = Ring::integers();
  for (int m = 2; m <= 50; ++m)
    out.push_back({"Z, I = (" + std::to_string(m) + ")", IdealSpec(Z, {RingElem::from_integer(Z, m)}), true, {}});
  auto F2x = Ring::uni_poly(2);
  for (int deg = 1; deg <= 4; ++deg)
    for (int low = 0; low < (1 << deg); ++low) {
      upoly::Poly f(static_cast<std::size_t>(deg) + 1, 0);
      for (int k = 0; k < deg; ++k) f[static_cast<std::size_t>(k)] = (low >> k) & 1;
      f[static_cast<std::size_t>(deg)] = 1;
      RingElem g(F2x, f);
      out.push_back({"F2[x], I = (" + g.to_string() + ")", IdealSpec(F2x, {g}), true, {}});
    }
  auto F2xy = Ring::bi_poly(2, {});
  auto x = RingElem::monomial(F2xy, {1, 0}), y = RingElem::monomial(F2xy, {0, 1});
  out.push_back({"F2[x,y], I = (x, y)", IdealSpec(F2xy, {x, y}), true, 2});
  out.push_back({"F2[x,y], I = (x^2, y)", IdealSpec(F2xy, {x * x, y}), true, {}});
  out.push_back({"F2[x,y], I = (x, y^3)", IdealSpec(F2xy, {x, y * y * y}), true, {}});
  auto F3xy = Ring::bi_poly(3, {});
  auto x3 = RingElem::monomial(F3xy, {1, 0}), y3 = RingElem::monomial(F3xy, {0, 1});
  out.push_back({"F3[x,y], I = (x, y)", IdealSpec(F3xy, {x3, y3}), true, 2});
  auto F5xy = Ring::bi_poly(5, {Monomial{1, 1}});
  out.push_back({"F5[x,y]/(xy), I = (x)", IdealSpec(F5xy, {RingElem::monomial(F5xy, {1, 0})}), false, {}});
  return out;
}

inline SuiteReport morphisms(const SuiteOptions&) {
  SuiteReport rep{"morphisms", "Prop: Hom_S(I, S/I) != 0 for proper nonzero I in a noetherian domain", {}, {}};
  auto cases = morphism_cases();
  run_section(rep, "Hom(I, S/I)", cases.size(), [&](std::size_t i) -> std::optional<std::string> {
    const auto& c = cases[i];
    auto r = hom_I_to_quotient(c.ideal);
    if (r.hom_nonzero != c.expected) return c.label + ": verdict " + std::to_string(r.hom_nonzero);
    if (c.fp_dimension && r.fp_dimension != c.fp_dimension) return c.label + ": unexpected Hom dimension";
    if (c.ideal.ring()->is_domain()) nilpotent_minors_check(c.ideal);
    return std::nullopt;
  });

  auto F5xy = Ring::bi_poly(5, {Monomial{1, 1}});
  auto x = RingElem::monomial(F5xy, {1, 0}), y = RingElem::monomial(F5xy, {0, 1});
  run_section(rep, "radical lemma off a domain", 1, [&](std::size_t) -> std::optional<std::string> {
    auto r = check_radical_lemma(IdealSpec(F5xy, {x}), x + y);
    if (r.premise && !r.conclusion && r.expected_for_non_domain()) return std::nullopt;
    return std::string("F5[x,y]/(xy), d = x + y, I = (x): unexpected premise/conclusion");
  });
  return rep;
}

inline GroupHom multiplication(const FiniteAbelianGroup& G, std::uint64_t k) {
  GroupHom f{G, G, {}};
  for (std::size_t i = 0; i < G.rank(); ++i) f.images.push_back(G.scale(G.generator(i), k));
  return f;
}

inline SuiteReport injective_criterion(const SuiteOptions& opt) {
  SuiteReport rep{"injective-criterion", "Prop: injective criterion for no proper torsion part", {}, {}};
  EngineOptions eng{opt.prune, true};
  struct Case {
    std::uint64_t p, k;
  };
  std::vector<Case> cases;
  for (std::uint64_t p : {2, 3})
    for (std::uint64_t k = 2; k <= 5; ++k) cases.push_back({p, k});
  run_section(rep, "multiplication by p on Z/p^k", cases.size(), [&](std::size_t i) -> std::optional<std::string> {
    std::uint64_t q = 1;
    for (std::uint64_t e = 0; e < cases[i].k; ++e) q *= cases[i].p;
    FiniteAbelianGroup G({Integer(q)}, group::kMaxEnumerationOrder);
    auto r = injective_criterion_check(GroupCategory{}, G, multiplication(G, cases[i].p), eng);
    std::string label = "Z/" + std::to_string(q);
    if (!r.hypotheses_hold()) return label + ": hypotheses fail";
    if (!r.intermediate_parts.empty()) return label + ": intermediate torsion part";
    if (torsion_parts(GroupCategory{}, G, eng).size() != 2) return label + ": enumeration disagrees";
    return std::nullopt;
  });

  // The hypotheses must fail: Z/6 has a non-essential kernel, the kernel
  // leaves the image on Z/2 + Z/4, and on Z/2 + Z/2 the image is 0.
  std::vector<std::vector<Integer>> negative = {{6}, {2, 4}, {2, 2}};
  run_section(rep, "negative controls", negative.size(), [&](std::size_t i) -> std::optional<std::string> {
    FiniteAbelianGroup G(negative[i], group::kMaxEnumerationOrder);
    auto r = injective_criterion_check(GroupCategory{}, G, multiplication(G, 2), eng);
    if (r.hypotheses_hold()) return group_label(negative[i]) + ": hypotheses unexpectedly hold";
    return std::nullopt;
  });
  return rep;
}

inline SuiteReport pruning(const SuiteOptions& opt) {
  SuiteReport rep{"pruning", "Prop: torsion parts are stable under endomorphisms", {}, {}};
  auto groups = groups_up_to(std::min<std::size_t>(opt.max_order, 128), 1);
  auto group_eq = [](const Subgroup& a, const Subgroup& b) { return a == b; };
  run_section(rep, "groups pruned vs unpruned", groups.size(), [&](std::size_t i) -> std::optional<std::string> {
    FiniteAbelianGroup G(groups[i], group::kMaxEnumerationOrder);
    auto a = torsion_parts(GroupCategory{}, G, {true, true});
    auto b = torsion_parts(GroupCategory{}, G, {false, true});
    if (same_sets(a, b, group_eq)) return std::nullopt;
    return group_label(groups[i]) + ": pruned " + std::to_string(a.size()) + ", unpruned " + std::to_string(b.size());
  });

  auto small = groups_up_to(std::min<std::size_t>(opt.max_order, 64));
  run_section(rep, "groups fast vs generic part test", small.size(), [&](std::size_t i) -> std::optional<std::string> {
    FiniteAbelianGroup G(small[i], group::kMaxEnumerationOrder);
    auto a = torsion_parts(GroupCategory{}, G, {true, true});
    auto b = torsion_parts(GroupCategory{}, G, {true, false});
    if (same_sets(a, b, group_eq)) return std::nullopt;
    return group_label(small[i]) + ": fast and generic part tests disagree";
  });

  struct Universe {
    std::string name;
    std::vector<QuiverRep> reps;
  };
  std::vector<Universe> universes;
  universes.push_back({"A2 dims <= (2,2)", all_reps(Quiver::linear(2), 2, {2, 2})});
  universes.push_back({"A3 linear dims <= (1,2,1)", all_reps(Quiver::linear(3), 2, {1, 2, 1})});
  universes.push_back({"A3 sink 0->1<-2 dims <= (1,2,1)", all_reps(Quiver(3, {{0, 1}, {2, 1}}), 2, {1, 2, 1})});
  universes.push_back({"Kronecker dims <= (2,2)", all_reps(Quiver(2, {{0, 1}, {0, 1}}), 2, {2, 2})});
  for (const auto& u : universes) {
    QuiverCategory cat;
    run_section(rep, u.name + " pruned vs unpruned", u.reps.size(), [&](std::size_t i) -> std::optional<std::string> {
      const auto& X = u.reps[i];
      auto a = torsion_parts(cat, X, {true, true});
      auto b = torsion_parts(cat, X, {false, true});
      if (same_sets(a, b, [&](const SubRep& s, const SubRep& t) { return same_subrep(X, s, t); })) return std::nullopt;
      return rep_label(X) + ": pruned and unpruned parts differ";
    });
  }
  return rep;
}

/// All morphisms when Hom is small, else the generators and their pairwise sums.
inline std::vector<GroupHom> sample_homs(const FiniteAbelianGroup& A, const FiniteAbelianGroup& B, std::size_t cap = 256) {
  auto basis = group::hom_basis(A, B);
  auto add = [&](const GroupHom& f, const GroupHom& g) {
    GroupHom h{A, B, {}};
    for (std::size_t i = 0; i < A.rank(); ++i) h.images.push_back(B.add(f.images[i], g.images[i]));
    return h;
  };
  GroupHom zero{A, B, std::vector<std::size_t>(A.rank(), 0)};
  std::vector<std::uint64_t> orders;
  std::uint64_t total = 1;
  for (const auto& f : basis) {
    std::uint64_t o = 1;
    for (std::size_t i = 0; i < A.rank(); ++i) o = std::lcm(o, B.element_order(f.images[i]));
    orders.push_back(o);
    total = total > cap ? total : total * o;
  }
  std::vector<GroupHom> out;
  if (total <= cap) {
    out.push_back(zero);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      std::vector<GroupHom> next;
      for (const auto& f : out) {
        GroupHom g = f;
        for (std::uint64_t c = 0; c < orders[b]; ++c) {
          next.push_back(g);
          g = add(g, basis[b]);
        }
      }
      out = std::move(next);
    }
    return out;
  }
  out = basis;
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = a + 1; b < basis.size(); ++b) out.push_back(add(basis[a], basis[b]));
  return out;
}

/// All F_p-combinations of a Hom basis when there are at most cap of them,
/// else the basis and pairwise sums.
inline std::vector<RepHom> sample_rep_homs(const QuiverRep& X, const QuiverRep& Y, std::size_t cap = 256) {
  auto basis = quiver::hom_space(X, Y);
  const Residue p = X.p();
  auto combine = [&](const RepHom& f, const RepHom& g, Residue c) {
    RepHom h = f;
    for (std::size_t v = 0; v < h.components.size(); ++v)
      for (std::size_t r = 0; r < h.components[v].rows(); ++r)
        for (std::size_t k = 0; k < h.components[v].cols(); ++k)
          h.components[v](r, k) = mod_p(f.components[v](r, k) + c * g.components[v](r, k), p);
    return h;
  };
  RepHom zero{X, Y, {}};
  for (std::size_t v = 0; v < X.dims().size(); ++v) zero.components.push_back(fp::Mat(Y.dims()[v], X.dims()[v]));
  std::size_t total = 1;
  for (std::size_t b = 0; b < basis.size() && total <= cap; ++b) total *= static_cast<std::size_t>(p);
  std::vector<RepHom> out;
  if (total <= cap) {
    out.push_back(zero);
    for (const auto& b : basis) {
      std::vector<RepHom> next;
      for (const auto& f : out)
        for (Residue c = 0; c < p; ++c) next.push_back(combine(f, b, c));
      out = std::move(next);
    }
    return out;
  }
  out = basis;
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = a + 1; b < basis.size(); ++b) out.push_back(combine(basis[a], basis[b], 1));
  return out;
}

inline SuiteReport type_closure(const SuiteOptions& opt) {
  SuiteReport rep{"type-closure", "Prop: same-type torsion-simple objects are closed under images and extensions", {}, {}};
  EngineOptions eng{opt.prune, true};

  // Finite abelian groups; the type of a torsion-simple group is its prime.
  GroupCategory gc;
  auto group_type = [&](const FiniteAbelianGroup& G) -> std::optional<std::uint32_t> {
    if (gc.is_zero(G) || !is_torsion_simple(gc, G, eng).verdict) return std::nullopt;
    return type_of(gc, G, eng);
  };
  std::vector<FiniteAbelianGroup> groups;
  for (const auto& f : groups_up_to(std::min<std::size_t>(opt.max_order, 32))) groups.emplace_back(f);
  std::vector<std::optional<std::uint32_t>> gtypes;
  for (const auto& G : groups) gtypes.push_back(group_type(G));
  std::vector<std::pair<std::size_t, std::size_t>> gpairs;
  for (std::size_t a = 0; a < groups.size(); ++a)
    for (std::size_t b = 0; b < groups.size(); ++b)
      if (gtypes[a] && gtypes[a] == gtypes[b]) gpairs.push_back({a, b});
  run_section(rep, "group images", gpairs.size(), [&](std::size_t i) -> std::optional<std::string> {
    auto [a, b] = gpairs[i];
    for (const auto& f : sample_homs(groups[a], groups[b])) {
      auto im = group::image(f);
      if (im.order() == 1) continue;
      if (group_type(group::as_group(groups[b], im).object) != gtypes[a])
        return group_label(groups[a]) + " -> " + group_label(groups[b]) + ": image leaves the type";
    }
    return std::nullopt;
  });
  run_section(rep, "group extensions", groups.size(), [&](std::size_t i) -> std::optional<std::string> {
    const auto& E = groups[i];
    for (const auto& w : group::all_subgroups(E)) {
      if (w.order() == 1 || w.order() == E.order()) continue;
      auto tw = group_type(group::as_group(E, w).object);
      if (!tw || tw != group_type(group::quotient(E, w).object)) continue;
      if (gtypes[i] != tw) return group_label(E) + ": extension of same-type objects leaves the type";
    }
    return std::nullopt;
  });

  // A2 over F2; the type of a torsion-simple rep is its support vertex.
  QuiverCategory qc;
  auto rep_type = [&](const QuiverRep& X) -> std::optional<std::size_t> {
    if (X.is_zero() || !is_torsion_simple(qc, X, eng).verdict) return std::nullopt;
    return type_of(qc, X, eng);
  };
  auto reps = all_reps(Quiver::linear(2), 2, {2, 2});
  std::vector<std::optional<std::size_t>> rtypes;
  for (const auto& X : reps) rtypes.push_back(rep_type(X));
  std::vector<std::pair<std::size_t, std::size_t>> rpairs;
  for (std::size_t a = 0; a < reps.size(); ++a)
    for (std::size_t b = 0; b < reps.size(); ++b)
      if (rtypes[a] && rtypes[a] == rtypes[b]) rpairs.push_back({a, b});
  run_section(rep, "A2 images", rpairs.size(), [&](std::size_t i) -> std::optional<std::string> {
    auto [a, b] = rpairs[i];
    for (const auto& f : sample_rep_homs(reps[a], reps[b])) {
      auto im = quiver::image(f);
      if (im.total_dim() == 0) continue;
      if (rep_type(quiver::sub_as_rep(reps[b], im).object) != rtypes[a])
        return rep_label(reps[a]) + " -> " + rep_label(reps[b]) + ": image leaves the type";
    }
    return std::nullopt;
  });
  run_section(rep, "A2 extensions", reps.size(), [&](std::size_t i) -> std::optional<std::string> {
    const auto& X = reps[i];
    for (const auto& w : quiver::enumerate_subreps(X)) {
      if (w.total_dim() == 0 || w.total_dim() == X.total_dim()) continue;
      auto tw = rep_type(quiver::sub_as_rep(X, w).object);
      if (!tw || tw != rep_type(quiver::quotient_rep(X, w).object)) continue;
      if (rtypes[i] != tw) return rep_label(X) + ": extension of same-type objects leaves the type";
    }
    return std::nullopt;
  });
  return rep;
}

/// Random unimodular scramble of a relation matrix, plus one redundant
/// generator, giving another presentation of the same module.
inline IntMatrix scramble(const IntMatrix& rel, std::mt19937_64& rng, std::size_t& generators) {
  const std::size_t g = rel.rows() + 1;
  IntMatrix R(g, rel.cols() + 1);
  for (std::size_t i = 0; i < rel.rows(); ++i)
    for (std::size_t j = 0; j < rel.cols(); ++j) R(i, j) = rel(i, j);
  // Relation: new generator = combination of the old ones.
  for (std::size_t i = 0; i + 1 < g; ++i) R(i, rel.cols()) = Integer(static_cast<std::int64_t>(rng() % 5)) - 2;
  R(g - 1, rel.cols()) = -1;
  // Row ops are changes of generators; column ops recombine relations.
  for (int step = 0; step < 6; ++step) {
    std::size_t a = rng() % g, b = rng() % g;
    if (a == b) continue;
    Integer c = Integer(static_cast<std::int64_t>(rng() % 5)) - 2;
    for (std::size_t j = 0; j < R.cols(); ++j) R(a, j) += c * R(b, j);
  }
  for (int step = 0; step < 6 && R.cols() > 1; ++step) {
    std::size_t a = rng() % R.cols(), b = rng() % R.cols();
    if (a == b) continue;
    Integer c = Integer(static_cast<std::int64_t>(rng() % 5)) - 2;
    for (std::size_t i = 0; i < g; ++i) R(i, a) += c * R(i, b);
  }
  generators = g;
  return R;
}

inline SuiteReport localisation_invariance(const SuiteOptions& opt) {
  SuiteReport rep{"localisation-invariance", "Cor: torsion parts over Z/n agree with those over Z", {}, {}};
  const std::vector<std::uint64_t> moduli = {4, 6, 8, 9, 12};
  struct Case {
    std::uint64_t n;
    std::vector<Integer> factors;
  };
  std::vector<Case> cases;
  for (std::uint64_t n : moduli)
    for (const auto& f : groups_up_to(std::min<std::size_t>(opt.max_order, 64), 1))
      if (std::all_of(f.begin(), f.end(), [&](const Integer& d) { return Integer(n) % d == 0; })) cases.push_back({n, f});
  ModuleOptions mopt;
  mopt.max_order = 64;
  mopt.prune = opt.prune;
  run_section(rep, "Z/n-modules of order <= 64", cases.size(), [&](std::size_t i) -> std::optional<std::string> {
    const auto& c = cases[i];
    std::mt19937_64 rng(derive_seed(opt.seed, c.n, i));
    auto Rn = Ring::integers_mod(c.n);
    auto base = PresentedModule::cyclic_sum(Rn, c.factors.empty() ? std::vector<Integer>{1} : c.factors);
    std::size_t g = 0;
    IntMatrix rel = scramble(base.relations(), rng, g);
    PresentedModule Mn(Rn, g, rel);
    PresentedModule Mz = Mn.over_integers();
    std::string label = "Z/" + std::to_string(c.n) + "-module " + group_label(c.factors);
    if (canonical_decomposition(Mn).to_string() != canonical_decomposition(base).to_string())
      return label + ": scrambled presentation changed the module";

    auto subs_n = enumerate_submodules(Mn, 64), subs_z = enumerate_submodules(Mz, 64);
    if (subs_n != subs_z) return label + ": submodule lattices differ";

    // Part test with Hom computed over Z/n presentations.
    std::vector<Subobject> parts_n;
    for (const auto& w : subs_n)
      if (hom_group(submodule_as_module(w), quotient(Mn, w)).is_zero()) parts_n.push_back(w);
    auto parts_z = module_torsion_parts(Mz, mopt);
    if (parts_n != parts_z) return label + ": torsion parts differ";
    if (canonical_decomposition(Mn).is_zero()) return std::nullopt;
    if (module_is_torsion_simple(Mn, mopt).verdict != module_is_torsion_simple(Mz, mopt).verdict)
      return label + ": verdicts differ";
    return std::nullopt;
  });
  return rep;
}

using SuiteFn = SuiteReport (*)(const SuiteOptions&);

inline const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r = {
      {"finite-length", finite_length},
      {"ass-singleton", ass_singleton},
      {"gabriel-split", gabriel_split},
      {"mccoy", mccoy},
      {"morphisms", morphisms},
      {"injective-criterion", injective_criterion},
      {"pruning", pruning},
      {"type-closure", type_closure},
      {"localisation-invariance", localisation_invariance},
  };
  return r;
}

inline SuiteReport run(const std::string& name, const SuiteOptions& opt) {
  for (const auto& [n, f] : registry())
    if (n == name) return f(opt);
  std::string known;
  for (const auto& [n, f] : registry()) known += (known.empty() ? "" : ", ") + n;
  throw InputError("unknown suite '" + name + "'; known suites: " + known);
}

}  // namespace suites
}  // namespace torsim
