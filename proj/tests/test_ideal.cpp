#include <catch2/catch_amalgamated.hpp>

#include "generators.hpp"
#include "oracles.hpp"

using namespace torsim;

namespace {

IdealSpec ideal(const RingPtr& R, std::initializer_list<const char*> gens) {
  std::vector<RingElem> g;
  for (auto s : gens) g.push_back(parse_element(R, s));
  return IdealSpec(R, g);
}

}  // namespace

TEST_CASE("annihilators of elements", "[ideal]") {
  auto Z4 = Ring::integers_mod(4);
  CHECK(same_ideal(ann_element(parse_element(Z4, "2")), ideal(Z4, {"2"})));
  auto S = Ring::bi_poly(5, {Monomial{1, 1}});
  CHECK(same_ideal(ann_element(parse_element(S, "x")), ideal(S, {"y"})));
  CHECK(same_ideal(ann_element(parse_element(S, "x^2")), ideal(S, {"y"})));
  CHECK(ann_element(parse_element(Ring::integers(), "5")).is_zero());
  CHECK(ann_element(parse_element(Ring::uni_poly(3), "x + 1")).is_zero());
  auto T = Ring::uni_poly_quot(2, {0, 0, 1});  // F2[x]/(x^2)
  CHECK(same_ideal(ann_element(parse_element(T, "x")), ideal(T, {"x"})));
}

TEST_CASE("annihilators over Z/n match brute force", "[ideal][oracle]") {
  for (long n = 2; n <= 30; ++n) {
    auto R = Ring::integers_mod(n);
    for (long a = 0; a < n; ++a) {
      auto A = ann_element(RingElem::from_integer(R, a));
      auto expected = oracle::annihilator(a, n);
      for (long x = 0; x < n; ++x) {
        INFO("n=" << n << " a=" << a << " x=" << x);
        CHECK(ideal_membership(A, RingElem::from_integer(R, x)) == (expected.count(x) == 1));
      }
    }
  }
}

TEST_CASE("ideal operations", "[ideal]") {
  auto S = Ring::bi_poly(3, {});
  auto xy = ideal(S, {"xy"}), x = ideal(S, {"x"}), y = ideal(S, {"y"});
  CHECK(same_ideal(ideal_ops(IdealOp::Colon, xy, x), y));
  CHECK(same_ideal(ideal_ops(IdealOp::Product, x, y), xy));
  CHECK(same_ideal(ideal_ops(IdealOp::Sum, x, y), ideal(S, {"x", "y"})));
  auto Z = Ring::integers();
  CHECK(same_ideal(ideal_ops(IdealOp::Sum, ideal(Z, {"4"}), ideal(Z, {"6"})), ideal(Z, {"2"})));
  CHECK(same_ideal(ideal_ops(IdealOp::Product, ideal(Z, {"4"}), ideal(Z, {"6"})), ideal(Z, {"24"})));
  CHECK(same_ideal(ideal_ops(IdealOp::Colon, ideal(Z, {"12"}), ideal(Z, {"8"})), ideal(Z, {"3"})));
  auto P = Ring::uni_poly(2);
  CHECK(same_ideal(ideal_ops(IdealOp::Sum, ideal(P, {"x^2 + 1"}), ideal(P, {"x^2 + x"})), ideal(P, {"x + 1"})));
}

TEST_CASE("membership and radical membership", "[ideal]") {
  auto S = Ring::bi_poly(5, {Monomial{1, 1}});
  auto I = ideal(S, {"x"});
  CHECK(ideal_membership(I, parse_element(S, "x^3 + 2x")));
  CHECK_FALSE(ideal_membership(I, parse_element(S, "y")));
  CHECK_FALSE(radical_membership(I, parse_element(S, "x + y")));
  CHECK(radical_membership(ideal(S, {"x^2"}), parse_element(S, "x")));
  CHECK(is_nilpotent(parse_element(Ring::integers_mod(8), "2")));
  CHECK_FALSE(is_nilpotent(parse_element(Ring::integers_mod(12), "2")));
  CHECK(is_nilpotent(parse_element(Ring::integers_mod(12), "6")));
  auto T = Ring::bi_poly(2, {Monomial{0, 2}});
  CHECK(is_nilpotent(parse_element(T, "y")));
  CHECK_FALSE(is_nilpotent(parse_element(T, "x")));
}

TEST_CASE("annihilator of an ideal being zero", "[ideal]") {
  auto Z6 = Ring::integers_mod(6);
  CHECK(annihilator_is_zero(ideal(Z6, {"1"})));
  CHECK_FALSE(annihilator_is_zero(ideal(Z6, {"2"})));
  CHECK(annihilator_is_zero(ideal(Z6, {"2", "3"})));
  auto S = Ring::bi_poly(5, {Monomial{1, 1}});
  CHECK_FALSE(annihilator_is_zero(ideal(S, {"x"})));
  CHECK(annihilator_is_zero(ideal(S, {"x + y"})));
  CHECK(annihilator_is_zero(ideal(S, {"x", "y"})));  // Ann(x) meets Ann(y) in (xy) = 0
}

TEST_CASE("annihilator-is-zero for Z/n matches brute force", "[ideal][oracle]") {
  for (long n = 2; n <= 24; ++n) {
    auto R = Ring::integers_mod(n);
    for (long a = 0; a < n; ++a)
      for (long b = a; b < n; ++b) {
        // Ann((a, b)) = {x : ax = bx = 0}.
        bool zero = true;
        for (long x = 1; x < n; ++x)
          if ((a * x) % n == 0 && (b * x) % n == 0) zero = false;
        IdealSpec I(R, {RingElem::from_integer(R, a), RingElem::from_integer(R, b)});
        INFO("n=" << n << " a=" << a << " b=" << b);
        CHECK(annihilator_is_zero(I) == zero);
      }
  }
}

TEST_CASE("bivariate generators of unsupported shape are rejected", "[ideal]") {
  auto S = Ring::bi_poly(3, {});
  CHECK_THROWS_AS(ideal(S, {"x + 1"}), InputError);
  CHECK_THROWS_AS(ideal(S, {"x^2 + xy"}), InputError);
  CHECK_NOTHROW(ideal(S, {"x^2 + 2y"}));
}
