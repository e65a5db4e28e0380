#include <random>

#include <gtest/gtest.h>

#include "sixvertex/errors.hpp"
#include "sixvertex/tensor_core.hpp"

using namespace sixvertex;

namespace {

Gate random_gate(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Gate g;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) g(r, c) = cplx(u(rng), u(rng));
  }
  return g;
}

}  // namespace

TEST(VacuumState, SingleSite) {
  const Vector v = vacuum_state(1);
  ASSERT_EQ(v.size(), 2);
  EXPECT_EQ(v(0), cplx(1.0));
  EXPECT_EQ(v(1), cplx(0.0));
}

TEST(VacuumState, TwoSitesSupportedOnZeroBitstring) {
  const Vector v = vacuum_state(2);
  EXPECT_EQ(v(0), cplx(1.0));
  EXPECT_DOUBLE_EQ(v.norm(), 1.0);
}

TEST(VacuumState, NumberOperatorsVanish) {
  const Vector v = vacuum_state(3);
  for (int i = 1; i <= 3; ++i) {
    EXPECT_EQ((site_operator(SiteOp::Number, i, 3) * v).norm(), 0.0);
  }
}

TEST(VacuumState, RejectsEmptyChain) { EXPECT_THROW(vacuum_state(0), InvalidArgument); }

TEST(SiteOperator, NumberOnOneSite) {
  const LinearOperator n = site_operator(SiteOp::Number, 1, 1);
  EXPECT_EQ(n(0, 0), cplx(0.0));
  EXPECT_EQ(n(1, 1), cplx(1.0));
  EXPECT_EQ(n(0, 1), cplx(0.0));
}

TEST(SiteOperator, RaiseLowerGivesNumber) {
  for (int L = 1; L <= 4; ++L) {
    for (int i = 1; i <= L; ++i) {
      const auto up = site_operator(SiteOp::Raise, i, L);
      const auto down = site_operator(SiteOp::Lower, i, L);
      EXPECT_EQ(max_abs_diff(up * down, site_operator(SiteOp::Number, i, L)), 0.0);
    }
  }
}

TEST(SiteOperator, DisjointSitesCommute) {
  const int L = 3;
  for (int i = 1; i <= L; ++i) {
    for (int j = 1; j <= L; ++j) {
      if (i == j) continue;
      const auto n = site_operator(SiteOp::Number, i, L);
      const auto up = site_operator(SiteOp::Raise, j, L);
      EXPECT_EQ(max_abs_diff(n * up, up * n), 0.0);
    }
  }
}

TEST(SiteOperator, SiteOneIsMostSignificantBit) {
  const auto up = site_operator(SiteOp::Raise, 1, 3);
  EXPECT_EQ(up(0b100, 0b000), cplx(1.0));
  EXPECT_THROW(site_operator(SiteOp::Raise, 4, 3), InvalidArgument);
  EXPECT_THROW(site_operator(SiteOp::Raise, 0, 3), InvalidArgument);
}

TEST(TwoSite, IdentityGate) {
  EXPECT_EQ(max_abs_diff(apply_two_site(Gate::Identity(), 1, 3, 3), LinearOperator::identity(3)), 0.0);
}

TEST(TwoSite, PermutationSwapsOccupations) {
  const int L = 4;
  const auto p = apply_two_site(permutation_gate(), 2, 4, L);
  for (std::uint32_t s = 0; s < 16; ++s) {
    auto occ = StateIndex(L, s).occupations();
    std::swap(occ[1], occ[3]);
    const auto target = StateIndex::from_occupations(occ).bits();
    EXPECT_EQ(p(target, s), cplx(1.0));
    EXPECT_DOUBLE_EQ(p.matrix().col(s).norm(), 1.0);
  }
}

TEST(TwoSite, PermutationIsInvolution) {
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      if (i == j) continue;
      const auto p = apply_two_site(permutation_gate(), i, j, 3);
      EXPECT_EQ(max_abs_diff(p * p, LinearOperator::identity(3)), 0.0);
    }
  }
}

TEST(TwoSite, FirstSlotBelongsToSiteI) {
  Gate g = Gate::Zero();
  g(2, 0) = 1.0;  // |00> -> |10>: raises the first slot only
  const auto op = apply_two_site(g, 3, 1, 3);
  EXPECT_EQ(op(0b001, 0b000), cplx(1.0));
}

TEST(TwoSite, RejectsEqualSites) {
  EXPECT_THROW(apply_two_site(Gate::Identity(), 2, 2, 3), InvalidArgument);
}

TEST(TwoSite, DisjointSupportsCommute) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const Gate g = random_gate(rng), h = random_gate(rng);
    const auto a = apply_two_site(g, 1, 2, 4);
    const auto b = apply_two_site(h, 3, 4, 4);
    EXPECT_LT(max_abs_diff(a * b, b * a), 1e-14);
  }
}

TEST(TwoSite, InPlaceGateMultiplicationMatchesDenseEmbedding) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const int L = 2 + trial % 4;
    std::uniform_int_distribution<int> site(1, L);
    int i = site(rng), j = site(rng);
    while (j == i) j = site(rng);
    const Gate g = random_gate(rng);
    LinearOperator base(L, Matrix::Random(1 << L, 1 << L));
    const auto dense = apply_two_site(g, i, j, L);

    LinearOperator right = base;
    right.right_multiply_gate(g, i, j);
    EXPECT_LT(max_abs_diff(right, base * dense), 1e-13);

    LinearOperator left = base;
    left.left_multiply_gate(g, i, j);
    EXPECT_LT(max_abs_diff(left, dense * base), 1e-13);
  }
}

TEST(StateIndex, RoundTripAllBitstrings) {
  for (int L = 1; L <= 12; ++L) {
    for (std::uint32_t s = 0; s < (1u << L); ++s) {
      const StateIndex x(L, s);
      EXPECT_EQ(StateIndex::from_occupations(x.occupations()), x);
      EXPECT_EQ(StateIndex::from_occupied_sites(L, x.occupied_sites()), x);
      ASSERT_EQ(x.occupation_count(), static_cast<int>(x.occupied_sites().size()));
    }
  }
}

TEST(StateIndex, RejectsOverflowAndDuplicates) {
  EXPECT_THROW(StateIndex(2, 4), InvalidArgument);
  EXPECT_THROW(StateIndex::from_occupied_sites(3, {2, 2}), InvalidArgument);
}

TEST(LinearOperator, CompositionAssociativeAndIdentityNeutral) {
  const LinearOperator a(3, Matrix::Random(8, 8)), b(3, Matrix::Random(8, 8)), c(3, Matrix::Random(8, 8));
  EXPECT_LT(max_abs_diff((a * b) * c, a * (b * c)), 1e-13);
  EXPECT_EQ(max_abs_diff(a * LinearOperator::identity(3), a), 0.0);
  EXPECT_THROW(a * LinearOperator::identity(2), InvalidArgument);
}
