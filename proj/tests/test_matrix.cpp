#include <catch2/catch_amalgamated.hpp>

#include "generators.hpp"
#include "oracles.hpp"

using namespace torsim;

namespace {

std::vector<std::vector<oracle::BigInt>> rows_of(const IntMatrix& A) {
  std::vector<std::vector<oracle::BigInt>> out;
  for (std::size_t i = 0; i < A.rows(); ++i) {
    std::vector<oracle::BigInt> r;
    for (std::size_t j = 0; j < A.cols(); ++j) r.push_back(A(i, j));
    out.push_back(r);
  }
  return out;
}

void check_smith(const IntMatrix& A) {
  auto s = smith_checked(A);
  CHECK(s.U * A * s.V == s.D);
  CHECK(s.U * s.U_inv == IntMatrix::identity(A.rows()));
  CHECK(s.V * s.V_inv == IntMatrix::identity(A.cols()));
  for (std::size_t i = 0; i < s.D.rows(); ++i)
    for (std::size_t j = 0; j < s.D.cols(); ++j)
      if (i != j) CHECK(s.D(i, j) == 0);
  for (std::size_t i = 0; i < s.rank; ++i) CHECK(s.D(i, i) > 0);
  for (std::size_t i = s.rank; i < std::min(A.rows(), A.cols()); ++i) CHECK(s.D(i, i) == 0);
  for (std::size_t i = 0; i + 1 < s.rank; ++i) CHECK(s.D(i + 1, i + 1) % s.D(i, i) == 0);
  CHECK(s.rank == oracle::rational_rank(rows_of(A)));
}

}  // namespace

TEST_CASE("Smith form of small examples", "[matrix]") {
  auto s = smith_checked(IntMatrix::from_rows({{2, 0}, {0, 3}}));
  CHECK(s.diagonal() == std::vector<Integer>{1, 6});
  auto t = smith_checked(IntMatrix::from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}));
  CHECK(t.diagonal() == std::vector<Integer>{2, 6, 12});
  auto z = smith_checked(IntMatrix(2, 3));
  CHECK(z.rank == 0);
}

TEST_CASE("Smith form invariants on random matrices", "[matrix][property]") {
  gen::Gen g(1);
  for (int i = 0; i < 300; ++i) {
    auto A = g.int_matrix(static_cast<std::size_t>(g.in(1, 5)), static_cast<std::size_t>(g.in(1, 5)), -9, 9);
    INFO(i);
    check_smith(A);
  }
}

TEST_CASE("Smith form with entries beyond 64 bits", "[matrix][property]") {
  gen::Gen g(2);
  Integer big = Integer(1) << 70;
  for (int i = 0; i < 40; ++i) {
    auto A = g.int_matrix(3, 3, -5, 5);
    A(0, 0) += big;
    A(1, 2) -= big * 3;
    check_smith(A);
  }
}

TEST_CASE("determinant agrees with cofactor expansion", "[matrix][oracle]") {
  gen::Gen g(3);
  for (int i = 0; i < 200; ++i) {
    std::size_t n = static_cast<std::size_t>(g.in(1, 4));
    auto A = g.int_matrix(n, n, -7, 7);
    CHECK(determinant_bareiss(A) == oracle::cofactor_det(rows_of(A)));
  }
}

TEST_CASE("Hermite basis is canonical", "[matrix][property]") {
  gen::Gen g(4);
  for (int i = 0; i < 200; ++i) {
    std::size_t dim = static_cast<std::size_t>(g.in(1, 4));
    std::vector<std::vector<Integer>> gens;
    for (int k = 0, n = static_cast<int>(g.in(1, 4)); k < n; ++k) {
      std::vector<Integer> v;
      for (std::size_t d = 0; d < dim; ++d) v.push_back(g.in(-6, 6));
      gens.push_back(v);
    }
    // Same lattice: add integer combinations and reorder.
    auto other = gens;
    for (int k = 0; k < 4; ++k) {
      std::size_t a = g.rng() % other.size(), b = g.rng() % other.size();
      if (a == b) continue;
      Integer c = g.in(-3, 3);
      for (std::size_t d = 0; d < dim; ++d) other[a][d] += c * other[b][d];
    }
    std::reverse(other.begin(), other.end());
    other.push_back(std::vector<Integer>(dim, 0));
    auto h1 = hermite_basis(gens, dim), h2 = hermite_basis(other, dim);
    CHECK(h1 == h2);
    for (const auto& row : h1) {
      std::size_t c = 0;
      while (row[c] == 0) ++c;
      CHECK(row[c] > 0);
      for (const auto& above : h1) {
        if (&above == &row) break;
        CHECK(above[c] >= 0);
        CHECK(above[c] < row[c]);
      }
    }
  }
}

TEST_CASE("integer kernel columns are killed and span the kernel rank", "[matrix][property]") {
  gen::Gen g(6);
  for (int i = 0; i < 150; ++i) {
    auto A = g.int_matrix(static_cast<std::size_t>(g.in(1, 4)), static_cast<std::size_t>(g.in(1, 5)), -5, 5);
    auto K = integer_kernel(A);
    CHECK(K.cols() == A.cols() - oracle::rational_rank(rows_of(A)));
    auto AK = A * K;
    for (const auto& v : AK.data()) CHECK(v == 0);
  }
}

TEST_CASE("checked int64 arithmetic reports overflow", "[matrix]") {
  std::int64_t big = std::numeric_limits<std::int64_t>::max();
  CHECK_THROWS_AS(checked::add(big, std::int64_t{1}), OverflowError);
  CHECK_THROWS_AS(checked::mul(big, std::int64_t{2}), OverflowError);
  CHECK(checked::add(Integer(big), Integer(1)) == Integer(big) + 1);
}

TEST_CASE("F_p linear algebra", "[matrix][fp]") {
  fp::Mat A = fp::Mat::from_rows({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
  CHECK(fp::rank(A, 2) == 2);
  CHECK(fp::rank(A, 3) == 3);
  auto N = fp::nullspace(A, 2);
  CHECK(N.rows() == 1);
  for (int n = 1; n <= 3; ++n)
    for (long p : {2L, 3L}) {
      long total = 0;
      for (int k = 0; k <= n; ++k) total += oracle::gaussian_binomial(n, k, p);
      CHECK(static_cast<long>(fp::all_subspaces(static_cast<std::size_t>(n), p).size()) == total);
    }
}
