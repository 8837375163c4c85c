#include <catch2/catch_amalgamated.hpp>

#include "generators.hpp"
#include "oracles.hpp"

using namespace torsim;

namespace {

QuiverRep a2(std::size_t d0, std::size_t d1, std::vector<std::vector<Residue>> m, Residue p = 2) {
  fp::Mat M = m.empty() ? fp::Mat(d1, d0) : fp::Mat::from_rows(m);
  return QuiverRep(Quiver::linear(2), p, {d0, d1}, {M});
}

oracle::SmallRep small(const QuiverRep& X) {
  oracle::SmallRep s;
  for (auto [a, b] : X.quiver().arrows()) s.arrows.push_back({static_cast<int>(a), static_cast<int>(b)});
  for (auto d : X.dims()) s.dims.push_back(static_cast<int>(d));
  for (const auto& m : X.maps()) {
    std::vector<int> v;
    for (auto e : m.data()) v.push_back(static_cast<int>(e));
    s.maps.push_back(v);
  }
  return s;
}

QuiverRep random_rep(gen::Gen& g, const Quiver& q, Residue p, std::size_t max_dim) {
  std::vector<std::size_t> dims;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) dims.push_back(static_cast<std::size_t>(g.in(0, static_cast<std::int64_t>(max_dim))));
  std::vector<fp::Mat> maps;
  for (auto [s, t] : q.arrows()) {
    fp::Mat m(dims[t], dims[s]);
    for (std::size_t i = 0; i < dims[t]; ++i)
      for (std::size_t k = 0; k < dims[s]; ++k) m(i, k) = g.in(0, p - 1);
    maps.push_back(m);
  }
  return QuiverRep(q, p, dims, maps);
}

}  // namespace

TEST_CASE("quivers must be acyclic and well formed", "[quiver]") {
  CHECK_THROWS_AS(Quiver(2, {{0, 1}, {1, 0}}), InputError);
  CHECK_THROWS_AS(Quiver(1, {{0, 0}}), InputError);
  CHECK_THROWS_AS(Quiver(2, {{0, 2}}), InputError);
  CHECK(Quiver::linear(3).topological_order() == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("representations are validated", "[quiver]") {
  CHECK_THROWS_AS(a2(1, 1, {{2}}), InputError);
  CHECK_THROWS_AS(QuiverRep(Quiver::linear(2), 4, {1, 1}, {fp::Mat(1, 1)}), InputError);
  CHECK_THROWS_AS(QuiverRep(Quiver::linear(2), 2, {1, 2}, {fp::Mat(1, 1)}), InputError);
  CHECK_NOTHROW(QuiverRep(Quiver::linear(2), 2, {0, 2}, {fp::Mat(0, 0)}));
}

TEST_CASE("subrepresentations of small A2 reps", "[quiver]") {
  auto P1 = a2(1, 1, {{1}});
  auto subs = quiver::enumerate_subreps(P1);
  REQUIRE(subs.size() == 3);
  CHECK(subs[0].dims() == std::vector<std::size_t>{0, 0});
  CHECK(subs[1].dims() == std::vector<std::size_t>{0, 1});
  CHECK(subs[2].dims() == std::vector<std::size_t>{1, 1});
  CHECK(quiver::enumerate_subreps(a2(1, 1, {{0}})).size() == 4);
  // Subspaces at each vertex, constrained: F2^2 -> 0 has all 5 subspaces.
  CHECK(quiver::enumerate_subreps(a2(2, 0, {})).size() == 5);
  CHECK_THROWS_AS(quiver::enumerate_subreps(a2(1, 1, {{1}}, 7)), PreconditionError);
  CHECK_THROWS_AS(quiver::enumerate_subreps(a2(5, 0, {})), PreconditionError);
}

TEST_CASE("hom space dimensions match brute-force enumeration", "[quiver][oracle]") {
  gen::Gen g(31);
  std::vector<Quiver> quivers = {Quiver::linear(2), Quiver::linear(3), Quiver(3, {{0, 1}, {2, 1}}), Quiver(2, {{0, 1}, {0, 1}})};
  for (int i = 0; i < 120; ++i) {
    const auto& q = quivers[static_cast<std::size_t>(i) % quivers.size()];
    Residue p = i % 3 == 0 ? 3 : 2;
    auto X = random_rep(g, q, p, 2), Y = random_rep(g, q, p, 2);
    auto basis = quiver::hom_space(X, Y);
    long expected = oracle::brute_hom_count(small(X), small(Y), static_cast<int>(p));
    long got = 1;
    for (std::size_t k = 0; k < basis.size(); ++k) got *= p;
    CHECK(got == expected);
  }
}

TEST_CASE("image, kernel and quotient bookkeeping", "[quiver][property]") {
  gen::Gen g(32);
  for (int i = 0; i < 60; ++i) {
    auto X = random_rep(g, Quiver::linear(3), 2, 2), Y = random_rep(g, Quiver::linear(3), 2, 2);
    for (const auto& f : quiver::hom_space(X, Y)) {
      auto K = quiver::kernel(f), I = quiver::image(f);
      CHECK(K.total_dim() + I.total_dim() == X.total_dim());
      CHECK(quiver::is_stable(X, K.spaces));
      CHECK(quiver::is_stable(Y, I.spaces));
    }
    for (const auto& w : quiver::enumerate_subreps(X)) {
      auto Q = quiver::quotient_rep(X, w);
      CHECK(Q.object.total_dim() + w.total_dim() == X.total_dim());
      auto E = quiver::sub_as_rep(X, w);
      CHECK(E.object.total_dim() == w.total_dim());
      CHECK(quiver::kernel(Q.projection).total_dim() == w.total_dim());
      CHECK(quiver::image(E.inclusion).total_dim() == w.total_dim());
    }
  }
}

TEST_CASE("subrep lattice operations", "[quiver]") {
  auto X = a2(2, 2, {{1, 0}, {0, 1}});
  auto subs = quiver::enumerate_subreps(X);
  for (const auto& a : subs)
    for (const auto& b : subs) {
      auto s = quiver::sum(X, a, b), m = quiver::intersect(X, a, b);
      CHECK(quiver::sub_leq(X, a, s));
      CHECK(quiver::sub_leq(X, m, b));
      CHECK(s.total_dim() + m.total_dim() == a.total_dim() + b.total_dim());
    }
}

TEST_CASE("composition factors and isomorphism", "[quiver]") {
  auto X = a2(2, 1, {{1, 1}});
  auto f = quiver::composition_factors(X);
  CHECK(f == std::vector<std::pair<std::size_t, std::size_t>>{{0, 2}, {1, 1}});
  CHECK(quiver::are_isomorphic(a2(1, 1, {{1}}), a2(1, 1, {{1}})));
  CHECK_FALSE(quiver::are_isomorphic(a2(1, 1, {{1}}), a2(1, 1, {{0}})));
  CHECK(quiver::are_isomorphic(a2(2, 1, {{1, 0}}), a2(2, 1, {{1, 1}})));
}

TEST_CASE("JSON representation round trip", "[quiver][json]") {
  auto j = Json::parse(R"({"quiver":{"vertices":2,"arrows":[[0,1]]},"p":3,"dims":[2,1],"maps":[[[1,2]]]})");
  CHECK(json::rep_json(json::parse_rep(j)) == j);
  CHECK_THROWS_AS(json::parse_rep(Json::parse(R"({"quiver":{"vertices":2,"arrows":[[0,1]]},"p":3,"dims":[2,1],"maps":[[[1]]]})")), InputError);
  CHECK_THROWS_AS(json::parse_rep(Json::parse(R"({"quiver":{"vertices":2,"arrows":[[0,1]],"extra":1},"p":3,"dims":[1,1],"maps":[[[1]]]})")), InputError);
}
