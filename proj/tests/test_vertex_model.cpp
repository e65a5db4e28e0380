#include <cmath>
#include <numbers>
#include <vector>

#include <Eigen/Eigenvalues>
#include <gtest/gtest.h>

#include "sixvertex/errors.hpp"
#include "sixvertex/sampling.hpp"
#include "sixvertex/vertex_model.hpp"

using namespace sixvertex;

namespace {

const Regime kRational(Family::Rational, 1.0);
const Regime kTrig(Family::Trigonometric, cplx(0.7, 0.1));

// Dense reference: every gate embedded as a full 2^(L+1) matrix.
LinearOperator dense_monodromy(cplx t, const LatticeSpec& lattice, const Regime& regime) {
  const int L = lattice.L();
  LinearOperator out = LinearOperator::identity(L + 1);
  for (int k = 1; k <= L; ++k) {
    out = out * apply_two_site(s_matrix(lattice.at(k), t, regime), k, L + 1, L + 1);
  }
  return out;
}

double commutator(const LinearOperator& a, const LinearOperator& b) { return max_abs_diff(a * b, b * a); }

}  // namespace

TEST(Weights, RationalValues) {
  EXPECT_NEAR(std::abs(kRational.c_tilde(1.0) - 0.5), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(kRational.b_tilde(1.0) - 0.5), 0.0, 1e-15);
  EXPECT_EQ(kRational.c_tilde(0.0), cplx(0.0));
  EXPECT_EQ(kRational.b_tilde(0.0), cplx(1.0));
}

TEST(Weights, TrigonometricValues) {
  const Regime r(Family::Trigonometric, std::numbers::pi / 2);
  EXPECT_NEAR(std::abs(r.c_tilde(std::numbers::pi / 4) - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(r.b_tilde(0.0) - 1.0), 0.0, 1e-15);
}

TEST(Weights, PolesThrow) {
  EXPECT_THROW(kRational.c_tilde(-1.0), SingularWeightError);
  EXPECT_THROW(kRational.b_tilde(-1.0), SingularWeightError);
  EXPECT_THROW(kRational.c_tilde_inv(0.0), SingularWeightError);
  EXPECT_THROW(Regime(Family::Rational, 0.0), InvalidArgument);
  EXPECT_THROW(Regime(Family::Trigonometric, std::numbers::pi), InvalidArgument);
}

TEST(Weights, FamilyNames) {
  EXPECT_EQ(family_from_string("trig"), Family::Trigonometric);
  EXPECT_EQ(family_from_string(to_string(Family::Rational)), Family::Rational);
  EXPECT_THROW(family_from_string("elliptic"), ConfigError);
}

TEST(SMatrix, EqualArgumentsGivePermutation) {
  for (const Regime& r : {kRational, kTrig}) {
    EXPECT_LT(max_abs_diff(Matrix(s_matrix(0.3, 0.3, r)), Matrix(permutation_gate())), 1e-15);
  }
}

TEST(SMatrix, UnitarityAndYangBaxter) {
  Sampler s(3);
  for (const Regime& r : {kRational, kTrig}) {
    for (int k = 0; k < 25; ++k) {
      const cplx t1 = s.complex_box(0.0, kSweepBox), t2 = s.complex_box(0.0, kSweepBox),
                 t3 = s.complex_box(0.0, kSweepBox);
      EXPECT_LT(unitarity_residual(t1, t2, r), 1e-12);
      EXPECT_LT(yang_baxter_residual(t1, t2, t3, r), 1e-12);
    }
  }
}

TEST(Monodromy, SingleSiteIsOneGate) {
  const LatticeSpec lat{{0.4}};
  const cplx t(0.1, 0.2);
  EXPECT_EQ(max_abs_diff(monodromy(t, lat, kRational), apply_two_site(s_matrix(0.4, t, kRational), 1, 2, 2)),
            0.0);
}

TEST(Monodromy, TwoSitesAtFirstInhomogeneity) {
  const LatticeSpec lat{{0.3, -0.5}};
  const cplx t = lat.at(1);
  const auto expect = apply_two_site(permutation_gate(), 1, 3, 3) *
                      apply_two_site(s_matrix(lat.at(2), t, kRational), 2, 3, 3);
  EXPECT_LT(max_abs_diff(monodromy(t, lat, kRational), expect), 1e-15);
}

TEST(Monodromy, MatchesDenseProduct) {
  Sampler s(5);
  for (const Regime& r : {kRational, kTrig}) {
    for (int L = 1; L <= 5; ++L) {
      const auto lat = s.lattice(L, kSweepBox, r, kSweepMargin);
      const cplx t = s.spectral(lat, r);
      EXPECT_LT(max_abs_diff(monodromy(t, lat, r), dense_monodromy(t, lat, r)), 1e-13);
    }
  }
}

TEST(Monodromy, SingleSiteBlocks) {
  const LatticeSpec lat{{0.4}};
  const cplx t(0.1, 0.2);
  const auto e = monodromy_entries(t, lat, kRational);
  EXPECT_LT(std::abs(e.A(0, 0) - kRational.c_tilde(0.4 - t)), 1e-15);
  EXPECT_LT(std::abs(e.A(1, 1) - 1.0), 1e-15);
  EXPECT_EQ(e.A(0, 1), cplx(0.0));
  const auto raise = site_operator(SiteOp::Raise, 1, 1) * kRational.b_tilde(0.4 - t);
  EXPECT_LT(max_abs_diff(e.B, raise), 1e-15);
  EXPECT_LT(max_abs_diff(e.D * vacuum_state(1), LinearOperator::identity(1) * vacuum_state(1)), 1e-15);
}

TEST(Monodromy, VacuumEigenvalueHomogeneous) {
  const LatticeSpec lat{{0.0, 0.0}};
  for (cplx t : {cplx(0.3), cplx(0.2, 0.7), cplx(-2.0, 0.1)}) {
    const cplx expect = std::pow(-t / (1.0 - t), 2);
    EXPECT_LT(std::abs(vacuum_eigenvalue(t, lat, kRational) - expect), 1e-14);
    const auto e = monodromy_entries(t, lat, kRational);
    EXPECT_LT(std::abs(e.A(0, 0) - expect), 1e-14);
  }
}

TEST(Monodromy, VacuumActionsOnRandomLattices) {
  Sampler s(9);
  for (const Regime& r : {kRational, kTrig}) {
    for (int L = 1; L <= 8; ++L) {
      const auto lat = s.lattice(L, kSweepBox, r, kSweepMargin);
      EXPECT_LT(vacuum_action_residual(s.spectral(lat, r), lat, r), 1e-12);
    }
  }
}

TEST(Monodromy, BOperatorMatchesBlock) {
  Sampler s(13);
  const auto lat = s.lattice(4, kSweepBox, kTrig, kSweepMargin);
  const cplx t = s.spectral(lat, kTrig);
  EXPECT_LT(max_abs_diff(b_operator(t, lat, kTrig), monodromy_entries(t, lat, kTrig).B), 1e-13);
}

TEST(Transfer, CommutesAtDifferentArguments) {
  Sampler s(17);
  for (const Regime& r : {kRational, kTrig}) {
    for (int L = 2; L <= 6; ++L) {
      const auto lat = s.lattice(L, kSweepBox, r, kSweepMargin);
      const cplx t = s.spectral(lat, r), u = s.spectral(lat, r);
      EXPECT_LT(commutator(transfer(t, lat, r), transfer(u, lat, r)), 1e-10);
      EXPECT_LT(commutator(b_operator(t, lat, r), b_operator(u, lat, r)), 1e-10);
    }
  }
}

TEST(Eigenvalue, VacuumSector) {
  const LatticeSpec lat{{0.2, -0.4, 0.9}};
  const cplx t(0.1, 0.3);
  EXPECT_LT(std::abs(eigenvalue_lambda(t, {}, lat, kRational) - (vacuum_eigenvalue(t, lat, kRational) + 1.0)),
            1e-15);
}

TEST(Eigenvalue, TwoSiteSingleRootAgainstDiagonalization) {
  const LatticeSpec lat{{0.0, 0.0}};
  const std::vector<cplx> q{0.5};
  const cplx lambda = eigenvalue_lambda(0.0, q, lat, kRational);
  EXPECT_LT(std::abs(lambda + 1.0), 1e-12);

  Eigen::ComplexEigenSolver<Matrix> solver(transfer(0.0, lat, kRational).matrix());
  double nearest = 1e300;
  for (Eigen::Index k = 0; k < solver.eigenvalues().size(); ++k) {
    nearest = std::min(nearest, std::abs(solver.eigenvalues()(k) + 1.0));
  }
  EXPECT_LT(nearest, 1e-12);
}

TEST(Eigenvalue, PoleAtRootThrows) {
  const LatticeSpec lat{{0.0, 0.0}};
  const std::vector<cplx> q{0.5};
  EXPECT_THROW(eigenvalue_lambda(0.5, q, lat, kRational), SingularWeightError);
}
