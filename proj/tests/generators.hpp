#pragma once

// Hand-rolled seeded generators for property tests.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "torsim/torsim.hpp"

namespace gen {

struct Gen {
  std::mt19937_64 rng;
  explicit Gen(std::uint64_t seed) : rng(seed) {}

  std::int64_t in(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  bool coin() { return rng() & 1; }

  torsim::IntMatrix int_matrix(std::size_t rows, std::size_t cols, std::int64_t lo, std::int64_t hi) {
    torsim::IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = in(lo, hi);
    return m;
  }

  /// Random element of a ring, with small coefficients and degrees.
  torsim::RingElem element(const torsim::RingPtr& R) {
    using torsim::RingKind;
    switch (R->kind()) {
      case RingKind::Integers:
        return torsim::RingElem::from_integer(R, in(-20, 20));
      case RingKind::IntegersMod:
      case RingKind::PrimeField:
        return torsim::RingElem::from_integer(R, in(0, static_cast<std::int64_t>(R->modulus()) - 1));
      case RingKind::UniPoly:
      case RingKind::UniPolyQuot: {
        torsim::upoly::Poly f(static_cast<std::size_t>(in(0, 4)));
        for (auto& c : f) c = in(0, R->p() - 1);
        return torsim::RingElem(R, f);
      }
      case RingKind::BiPolyMonomialQuot: {
        auto e = torsim::RingElem::zero(R);
        for (int t = 0, n = static_cast<int>(in(0, 3)); t < n; ++t)
          e = e + torsim::RingElem::monomial(R, {static_cast<std::uint32_t>(in(0, 2)), static_cast<std::uint32_t>(in(0, 2))},
                                              in(1, R->p() - 1));
        return e;
      }
    }
    return torsim::RingElem::zero(R);
  }

  /// Invariant factors d_1 | d_2 | ... of a random finite abelian group.
  std::vector<torsim::Integer> group(std::size_t max_order) {
    for (;;) {
      std::uint64_t n = static_cast<std::uint64_t>(in(2, static_cast<std::int64_t>(max_order)));
      auto all = torsim::abelian_groups_of_order(n);
      return all[rng() % all.size()];
    }
  }
};

}  // namespace gen
