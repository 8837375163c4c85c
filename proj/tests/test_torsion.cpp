#include <catch2/catch_amalgamated.hpp>

#include "generators.hpp"
#include "oracles.hpp"

using namespace torsim;

namespace {

PresentedModule cyclic(std::vector<Integer> d) { return PresentedModule::cyclic_sum(Ring::integers(), d); }

FiniteAbelianGroup grp(std::vector<Integer> r) { return FiniteAbelianGroup(r); }

QuiverRep a2(std::size_t d0, std::size_t d1, std::vector<std::vector<Residue>> m, Residue p = 2) {
  fp::Mat M = m.empty() ? fp::Mat(d1, d0) : fp::Mat::from_rows(m);
  return QuiverRep(Quiver::linear(2), p, {d0, d1}, {M});
}

std::vector<std::vector<std::vector<Integer>>> bases(const std::vector<Subobject>& s) {
  std::vector<std::vector<std::vector<Integer>>> out;
  for (const auto& w : s) out.push_back(w.canonical_basis());
  return out;
}

}  // namespace

TEST_CASE("torsion parts of small cyclic groups", "[torsion]") {
  auto t6 = module_torsion_parts(cyclic({6}));
  REQUIRE(t6.size() == 4);
  using B = std::vector<std::vector<Integer>>;
  CHECK(bases(t6) == std::vector<B>{{{6}}, {{3}}, {{2}}, {{1}}});
  CHECK(module_torsion_parts(cyclic({4})).size() == 2);
  CHECK(module_torsion_parts(cyclic({2, 3, 5})).size() == 8);
  // Z/2 + Z/4: Hom(Z/2, Z/4) and Hom(Z/4, Z/2) are both nonzero.
  CHECK(module_torsion_parts(cyclic({2, 4})).size() == 2);
}

TEST_CASE("torsion-simplicity of finite modules", "[torsion]") {
  auto r = module_is_torsion_simple(cyclic({8}));
  CHECK(r.verdict);
  CHECK(r.type == "(2)");
  auto s = module_is_torsion_simple(cyclic({12}));
  CHECK_FALSE(s.verdict);
  REQUIRE(s.witness);
  auto W = submodule_as_module(*s.witness);
  CHECK(hom_group(W, quotient(cyclic({12}), *s.witness)).is_zero());
  CHECK_THROWS_AS(module_is_torsion_simple(cyclic({1})), InputError);
  CHECK_THROWS_AS(is_torsion_simple(GroupCategory{}, grp({1})), InputError);
}

TEST_CASE("infinite modules use the associated-prime criterion", "[torsion]") {
  auto Z = PresentedModule::free(Ring::integers(), 1);
  auto a = module_is_torsion_simple(Z);
  CHECK(a.verdict);
  CHECK(a.method == "ass-criterion");
  CHECK(a.type == "(0)");
  PresentedModule M(Ring::integers(), 2, IntMatrix::from_rows({{3}, {0}}));
  auto b = module_is_torsion_simple(M);
  CHECK_FALSE(b.verdict);
  REQUIRE(b.witness);
  CHECK(subobject_order(*b.witness) == 3);
  PresentedModule N(Ring::integers(), 2, IntMatrix::from_rows({{6}, {0}}));
  auto c = module_is_torsion_simple(N);
  CHECK_FALSE(c.verdict);
  CHECK(c.ass.size() == 3);
}

TEST_CASE("torsion-simple iff a single associated prime", "[torsion][oracle]") {
  for (std::uint64_t n = 2; n <= 96; ++n)
    for (const auto& f : abelian_groups_of_order(n)) {
      oracle::Group G;
      for (const auto& d : f) G.radices.push_back(static_cast<int>(d));
      auto r = module_is_torsion_simple(cyclic(f));
      CHECK(r.verdict == (oracle::associated_primes(G).size() == 1));
    }
}

TEST_CASE("pruning does not change the parts", "[torsion][property]") {
  gen::Gen g(41);
  for (int i = 0; i < 40; ++i) {
    auto G = FiniteAbelianGroup(g.group(64));
    auto a = torsion_parts(GroupCategory{}, G, {true, true});
    auto b = torsion_parts(GroupCategory{}, G, {false, false});
    CHECK(suites::same_sets(a, b, [](const Subgroup& x, const Subgroup& y) { return x == y; }));
  }
}

TEST_CASE("radicals and coradicals for finite groups", "[torsion]") {
  GroupCategory c;
  auto Z12 = grp({12});
  std::size_t iters = 0;
  auto t = torsion_radical_generated(c, {grp({2})}, Z12, &iters);
  CHECK(t.order() == 4);
  CHECK(iters == 2);
  CHECK(trace(c, {grp({2})}, Z12).order() == 2);
  auto t3 = torsion_radical_generated(c, {grp({3})}, grp({2, 9}));
  CHECK(t3.order() == 9);
  auto cr = torsionfree_coradical_cogenerated(c, {grp({3})}, grp({4, 3}));
  CHECK(cr.torsion.order() == 4);
  CHECK(cr.coradical.order() == 3);
  for (const auto& a : verify_torsion_pair_axioms(c, {grp({2})}, {grp({12}), grp({2, 3}), grp({4, 9}), grp({5})}))
    CHECK(a.passed());
}

TEST_CASE("module-level radicals match their primary components", "[torsion]") {
  auto M = cyclic({4, 6});
  auto t = module_radical_generated({cyclic({2})}, M);
  CHECK(t == primary_component(M, 2));
  auto c = module_coradical_cogenerated({cyclic({3})}, M);
  CHECK(canonical_decomposition(c.coradical).invariant_factors == std::vector<Integer>{3});
}

TEST_CASE("essential subobjects and the injective criterion", "[torsion]") {
  GroupCategory c;
  auto G = grp({8});
  auto subs = c.subobjects(G);
  CHECK(is_essential(c, subs[1], G));
  CHECK_FALSE(is_essential(c, c.zero_sub(G), G));
  auto K = grp({2, 2});
  CHECK_FALSE(is_essential(c, c.subobjects(K)[1], K));
  for (std::uint64_t p : {2, 3})
    for (int k = 2; k <= 4; ++k) {
      Integer n = 1;
      for (int e = 0; e < k; ++e) n *= p;
      auto H = grp({n});
      auto r = injective_criterion_check(c, H, suites::multiplication(H, p));
      CHECK(r.hypotheses_hold());
      CHECK(r.intermediate_parts.empty());
    }
  auto H = grp({6});
  CHECK_FALSE(injective_criterion_check(c, H, suites::multiplication(H, 2)).hypotheses_hold());
  CHECK_THROWS_AS(injective_criterion_check(c, H, suites::multiplication(grp({2}), 1)), InputError);
}

TEST_CASE("composition factors and types", "[torsion]") {
  GroupCategory c;
  CHECK(unique_simple_factor(c, grp({4, 2})).unique);
  CHECK_FALSE(unique_simple_factor(c, grp({6})).unique);
  CHECK(type_of(c, grp({9})) == 3u);
  CHECK_THROWS_AS(type_of(c, grp({6})), InputError);
  CHECK(module_unique_simple_factor(cyclic({27})).factor == Integer(3));
}

TEST_CASE("quiver representations", "[torsion][quiver]") {
  QuiverCategory c;
  auto P1 = a2(1, 1, {{1}});
  auto parts = torsion_parts(c, P1);
  REQUIRE(parts.size() == 3);
  CHECK(parts[1].dims() == std::vector<std::size_t>{0, 1});
  auto r = is_torsion_simple(c, P1);
  CHECK_FALSE(r.verdict);
  auto s = single_vertex_criterion(P1);
  CHECK_FALSE(s.verdict);
  CHECK(*s.witness == *r.witness);
  CHECK(is_torsion_simple(c, a2(2, 0, {})).verdict);
  CHECK(single_vertex_criterion(a2(0, 3, {})).verdict);
  CHECK_THROWS_AS(is_torsion_simple(c, a2(0, 0, {})), InputError);
  CHECK_THROWS_AS(single_vertex_criterion(a2(0, 0, {})), InputError);
}

TEST_CASE("single-vertex criterion agrees with brute force", "[torsion][quiver][property]") {
  QuiverCategory c;
  auto reps = suites::all_reps(Quiver::linear(2), 2, {2, 2});
  for (const auto& X : reps) CHECK(is_torsion_simple(c, X).verdict == single_vertex_criterion(X).verdict);
  CHECK(reps.size() > 20);
}
