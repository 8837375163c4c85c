#include <catch2/catch_amalgamated.hpp>

#include "generators.hpp"
#include "oracles.hpp"

using namespace torsim;

namespace {

RingMatrix zmod_matrix(std::uint64_t n, std::vector<std::vector<std::int64_t>> rows) {
  auto R = Ring::integers_mod(n);
  std::vector<std::vector<RingElem>> e;
  for (const auto& r : rows) {
    e.emplace_back();
    for (auto v : r) e.back().push_back(RingElem::from_integer(R, v));
  }
  return RingMatrix::from_rows(R, e, rows.empty() ? 0 : rows[0].size());
}

// Brute force over (Z/n)^c: is there a nonzero v with A v = 0?
bool brute_nullvector(std::uint64_t n, const std::vector<std::vector<std::int64_t>>& A, std::size_t c) {
  std::size_t total = 1;
  for (std::size_t k = 0; k < c; ++k) total *= n;
  for (std::size_t code = 1; code < total; ++code) {
    std::vector<std::int64_t> v;
    for (std::size_t k = 0, t = code; k < c; ++k, t /= n) v.push_back(static_cast<std::int64_t>(t % n));
    bool ok = true;
    for (const auto& row : A) {
      std::int64_t s = 0;
      for (std::size_t k = 0; k < c; ++k) s += row[k] * v[k];
      ok = ok && s % static_cast<std::int64_t>(n) == 0;
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("McCoy rank of small matrices", "[mccoy]") {
  CHECK(mccoy_rank(zmod_matrix(4, {{2}})).mccoy_rank == 0);
  CHECK(mccoy_rank(zmod_matrix(6, {{3}})).mccoy_rank == 0);
  CHECK(mccoy_rank(zmod_matrix(6, {{5}})).mccoy_rank == 1);
  CHECK(mccoy_rank(zmod_matrix(6, {{2, 3}})).mccoy_rank == 1);
  // det = 2 in Z/4 is a zero divisor; the 1x1 minors generate the unit ideal.
  CHECK(mccoy_rank(zmod_matrix(4, {{1, 1}, {1, 3}})).mccoy_rank == 1);
  auto Fy = Ring::uni_poly(5, 'y');
  RingElem y(Fy, upoly::Poly{0, 1});
  CHECK(mccoy_rank(RingMatrix::from_rows(Fy, {{y}})).mccoy_rank == 1);
  auto prof = mccoy_rank(zmod_matrix(4, {{2}}));
  REQUIRE(prof.ideals.size() == 2);
  CHECK(prof.annihilator_is_zero[0]);
  CHECK_FALSE(prof.annihilator_is_zero[1]);
}

TEST_CASE("nullvectors by theorem and by search", "[mccoy]") {
  auto A = zmod_matrix(4, {{2}});
  auto ex = nullvector_exhaustive(A);
  REQUIRE(ex.exists);
  CHECK((*ex.vector)[0].as_integer() == 2);
  CHECK(nullvector_theorem(A).exists);
  CHECK_FALSE(nullvector_theorem(zmod_matrix(9, {{1, 0}, {0, 2}})).exists);
  CHECK(nullvector_theorem(zmod_matrix(9, {{1, 0}, {0, 3}})).exists);
  CHECK(nullvector_theorem(zmod_matrix(5, {{1, 2, 3}})).exists);
  CHECK_THROWS_AS(nullvector_exhaustive(RingMatrix(Ring::integers(), 1, 1)), PreconditionError);
}

TEST_CASE("theorem matches brute force on random Z/n matrices", "[mccoy][oracle]") {
  gen::Gen g(51);
  for (int i = 0; i < 300; ++i) {
    std::uint64_t n = std::vector<std::uint64_t>{4, 6, 8, 9, 12}[static_cast<std::size_t>(i) % 5];
    std::size_t r = static_cast<std::size_t>(g.in(1, 3)), c = static_cast<std::size_t>(g.in(1, 3));
    std::vector<std::vector<std::int64_t>> rows(r, std::vector<std::int64_t>(c));
    for (auto& row : rows)
      for (auto& v : row) v = g.in(0, static_cast<std::int64_t>(n) - 1);
    CHECK(nullvector_theorem(zmod_matrix(n, rows)).exists == brute_nullvector(n, rows, c));
  }
}

TEST_CASE("determinantal ideals descend", "[mccoy][property]") {
  gen::Gen g(52);
  auto R = Ring::uni_poly(3);
  for (int i = 0; i < 30; ++i) {
    std::vector<std::vector<RingElem>> rows(3, std::vector<RingElem>(2, RingElem::zero(R)));
    for (auto& row : rows)
      for (auto& e : row) e = g.element(R);
    auto prof = mccoy_rank(RingMatrix::from_rows(R, rows));
    for (std::size_t r = 0; r + 1 < prof.ideals.size(); ++r)
      for (const auto& h : prof.ideals[r + 1].generators()) CHECK(ideal_membership(prof.ideals[r], h));
  }
}

TEST_CASE("conormal presentations", "[mccoy][conormal]") {
  auto F2xy = Ring::bi_poly(2, {});
  auto x = RingElem::monomial(F2xy, {1, 0}), y = RingElem::monomial(F2xy, {0, 1});
  auto P = conormal_presentation(IdealSpec(F2xy, {x, y}));
  CHECK(P.matrix.rows() == 2);
  for (std::size_t i = 0; i < P.matrix.rows(); ++i)
    for (std::size_t j = 0; j < P.matrix.cols(); ++j) CHECK(P.matrix(i, j).is_zero());
  auto rep = hom_I_to_quotient(IdealSpec(F2xy, {x, y}));
  CHECK(rep.hom_nonzero);

  auto F2x = Ring::uni_poly(2);
  RingElem f(F2x, upoly::Poly{1, 1, 1});
  auto Q = conormal_presentation(IdealSpec(F2x, {f}));
  CHECK(Q.matrix.rows() == 1);
  CHECK(Q.matrix.cols() == 0);
  CHECK(hom_I_to_quotient(IdealSpec(F2x, {f})).hom_nonzero);

  auto Z = Ring::integers();
  auto z = hom_I_to_quotient(IdealSpec(Z, {RingElem::from_integer(Z, 12)}));
  CHECK(z.hom_nonzero);
}

TEST_CASE("the non-domain counterexample", "[mccoy][conormal]") {
  auto R = Ring::bi_poly(5, {Monomial{1, 1}});
  auto x = RingElem::monomial(R, {1, 0}), y = RingElem::monomial(R, {0, 1});
  auto rep = hom_I_to_quotient(IdealSpec(R, {x}));
  CHECK_FALSE(rep.hom_nonzero);
  REQUIRE(rep.presentation.matrix.rows() == 1);
  REQUIRE(rep.presentation.matrix.cols() == 1);
  CHECK(rep.presentation.matrix(0, 0).to_string() == "y");
  auto lemma = check_radical_lemma(IdealSpec(R, {x}), x + y);
  CHECK(lemma.premise);
  CHECK_FALSE(lemma.conclusion);
  CHECK_FALSE(lemma.domain);
}

TEST_CASE("radical lemma holds over domains", "[mccoy]") {
  auto Z = Ring::integers();
  for (int m = 2; m <= 30; ++m)
    for (int d = 0; d <= 30; ++d) {
      auto r = check_radical_lemma(IdealSpec(Z, {RingElem::from_integer(Z, m)}), RingElem::from_integer(Z, d));
      CHECK_FALSE(r.violation());
    }
}

TEST_CASE("explicit morphism cases", "[mccoy][suite]") {
  auto rep = suites::run("morphisms", {});
  CHECK(rep.failures() == 0);
  CHECK(rep.instances() == 85);
}

TEST_CASE("mccoy suite at a small count", "[mccoy][suite]") {
  SuiteOptions opt;
  opt.count = 40;
  auto rep = suites::run("mccoy", opt);
  CHECK(rep.passed());
  CHECK(rep.section("theorem vs exhaustive over Z/n")->instances == 200);
}
