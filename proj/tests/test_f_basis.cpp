#include <vector>

#include <gtest/gtest.h>

#include "sixvertex/errors.hpp"
#include "sixvertex/f_basis.hpp"
#include "sixvertex/sampling.hpp"

using namespace sixvertex;

namespace {

const Regime kRational(Family::Rational, 1.0);
const Regime kTrig(Family::Trigonometric, cplx(0.7, 0.1));

// F built from dense embeddings and projectors, as written.
LinearOperator dense_f(const LatticeSpec& lat, const Regime& r) {
  const int L = lat.L();
  LinearOperator f = LinearOperator::identity(L);
  for (int i = 1; i <= L; ++i) {
    LinearOperator t = LinearOperator::identity(L);
    for (int k = i + 1; k <= L; ++k) t = t * apply_two_site(s_matrix(lat.at(k), lat.at(i), r), k, i, L);
    const auto n = site_operator(SiteOp::Number, i, L);
    f = f * ((LinearOperator::identity(L) - n) + t * n);
  }
  return f;
}

LatticeSpec sweep_lattice(Sampler& s, int L, const Regime& r) { return s.lattice(L, kSweepBox, r, kSweepMargin); }

}  // namespace

TEST(TOperator, LastSiteIsIdentity) {
  const LatticeSpec lat{{0.1, 0.5, -0.3}};
  EXPECT_EQ(max_abs_diff(t_n_operator(3, lat, kRational), LinearOperator::identity(3)), 0.0);
}

TEST(TOperator, SingleGate) {
  const LatticeSpec lat{{0.1, 0.5}};
  const auto expect = apply_two_site(s_matrix(0.5, 0.1, kRational), 2, 1, 2);
  EXPECT_LT(max_abs_diff(t_n_operator(1, lat, kRational), expect), 1e-15);
}

TEST(TOperator, EqualParametersGivePermutation) {
  const LatticeSpec lat{{0.4, 0.4}};
  EXPECT_LT(max_abs_diff(t_n_operator(1, lat, kTrig), apply_two_site(permutation_gate(), 1, 2, 2)), 1e-15);
}

TEST(FOperator, SingleSiteIsIdentity) {
  const auto f = build_f(LatticeSpec{{0.3}}, kRational);
  EXPECT_EQ(max_abs_diff(f.F, LinearOperator::identity(1)), 0.0);
}

TEST(FOperator, MatchesDenseConstruction) {
  Sampler s(21);
  for (const Regime& r : {kRational, kTrig}) {
    for (int L = 1; L <= 5; ++L) {
      const auto lat = sweep_lattice(s, L, r);
      EXPECT_LT(max_abs_diff(build_f(lat, r).F, dense_f(lat, r)), 1e-12);
    }
  }
}

TEST(FOperator, FixesVacuumAndInverts) {
  Sampler s(22);
  const auto lat = sweep_lattice(s, 5, kTrig);
  const auto f = build_f(lat, kTrig);
  EXPECT_LT((f.F * vacuum_state(5) - vacuum_state(5)).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_LT(max_abs_diff(f.F * f.F_inv, LinearOperator::identity(5)), 1e-11);
  EXPECT_GT(f.rcond, 1.0 / kMaxConditionNumber);
}

TEST(FOperator, ColumnsAreBetheStatesAtInhomogeneities) {
  Sampler s(23);
  for (const Regime& r : {kRational, kTrig}) {
    for (int L = 1; L <= 6; ++L) {
      const auto lat = sweep_lattice(s, L, r);
      EXPECT_LT(f_matrix_element_residual(build_f(lat, r), lat, r), 1e-10) << "L=" << L;
    }
  }
}

TEST(Factorization, TwoSites) {
  const LatticeSpec lat{{0.2, -0.6}};
  EXPECT_LT(check_factorization(lat, kRational, 1), 1e-14);
}

TEST(Factorization, EveryAdjacentPair) {
  Sampler s(24);
  for (const Regime& r : {kRational, kTrig}) {
    for (int L = 2; L <= 5; ++L) {
      const auto lat = sweep_lattice(s, L, r);
      for (int i = 1; i < L; ++i) EXPECT_LT(check_factorization(lat, r, i), 1e-10) << "L=" << L << " i=" << i;
    }
  }
}

TEST(Factorization, EqualAdjacentParameters) {
  const LatticeSpec lat{{0.3, 0.3, -0.8}};
  EXPECT_LT(check_factorization(lat, kRational, 1), 1e-14);
}

TEST(Factorization, RejectsBadIndex) {
  const LatticeSpec lat{{0.3, 0.5}};
  EXPECT_THROW(check_factorization(lat, kRational, 2), InvalidArgument);
  EXPECT_THROW(check_factorization(lat, kRational, 0), InvalidArgument);
}

TEST(ClosedForms, SingleSite) {
  const LatticeSpec lat{{0.4}};
  const cplx t(0.1, -0.2);
  const auto e = monodromy_entries(t, lat, kRational);
  EXPECT_LT(max_abs_diff(af_closed(t, lat, kRational), e.A), 1e-15);
  EXPECT_LT(max_abs_diff(bf_closed(t, lat, kRational), e.B), 1e-15);
  EXPECT_LT(max_abs_diff(cf_closed(t, lat, kRational), e.C), 1e-15);
  EXPECT_LT(max_abs_diff(b_site(1, t, lat, kRational), e.B), 1e-15);
}

TEST(ClosedForms, ConjugatedBlocks) {
  Sampler s(25);
  for (const Regime& r : {kRational, kTrig}) {
    for (int L = 2; L <= 6; ++L) {
      const auto lat = sweep_lattice(s, L, r);
      const auto f = build_f(lat, r);
      const cplx t = s.spectral(lat, r);
      const auto e = monodromy_entries(t, lat, r);
      EXPECT_LT(max_abs_diff(f.conjugate(e.A), af_closed(t, lat, r)), 1e-10);
      EXPECT_LT(max_abs_diff(f.conjugate(e.B), bf_closed(t, lat, r)), 1e-10);
      EXPECT_LT(max_abs_diff(f.conjugate(e.C), cf_closed(t, lat, r)), 1e-10);
      EXPECT_LT(af_offdiagonal_mass(f, t, lat, r), 1e-10);
    }
  }
}

TEST(ClosedForms, BSummandsRaiseOneSite) {
  Sampler s(26);
  const auto lat = sweep_lattice(s, 4, kTrig);
  const cplx t = s.spectral(lat, kTrig);
  LinearOperator sum(4);
  for (int i = 1; i <= 4; ++i) {
    const auto bi = b_site(i, t, lat, kTrig);
    sum += bi;
    const auto n = site_operator(SiteOp::Number, i, 4);
    EXPECT_EQ(max_abs_diff(n * bi, bi), 0.0);
    EXPECT_EQ(max_abs((bi * n).matrix()), 0.0);
  }
  EXPECT_LT(max_abs_diff(sum, bf_closed(t, lat, kTrig)), 1e-15);
}

TEST(ClosedForms, ConjugatedADiagonalUpToEightSites) {
  Sampler s(30);
  for (const Regime& r : {kRational, kTrig}) {
    for (int L = 7; L <= 8; ++L) {
      const auto lat = sweep_lattice(s, L, r);
      const auto f = build_f(lat, r);
      for (int k = 0; k < 20; ++k) EXPECT_LT(af_offdiagonal_mass(f, s.spectral(lat, r), lat, r), 1e-10);
    }
  }
}

TEST(Commutation, BSummandAgainstA) {
  Sampler s(27);
  for (const Regime& r : {kRational, kTrig}) {
    for (int L = 1; L <= 6; ++L) {
      const auto lat = sweep_lattice(s, L, r);
      for (int pair = 0; pair < 10; ++pair) {
        const cplx t = s.spectral(lat, r), t_prime = s.spectral(lat, r);
        for (int i = 1; i <= L; ++i) EXPECT_LT(commutation_residual(i, t, t_prime, lat, r), 1e-10);
      }
    }
  }
}

TEST(Exchange, AllPairs) {
  Sampler s(28);
  for (const Regime& r : {kRational, kTrig}) {
    const auto lat = sweep_lattice(s, 5, r);
    for (int i = 1; i <= 5; ++i) {
      for (int j = 1; j <= 5; ++j) {
        if (i == j) continue;
        EXPECT_LT(check_exchange(i, j, lat, r), 1e-10);
        EXPECT_LT(std::abs(exchange_factor(i, j, lat, r) * exchange_factor(j, i, lat, r) - 1.0), 1e-12);
      }
    }
  }
}

TEST(Exchange, RejectsEqualSites) {
  const LatticeSpec lat{{0.3, 0.5}};
  EXPECT_THROW(exchange_factor(1, 1, lat, kRational), InvalidArgument);
}

// At general t the B_i(t) exchange with the t-shifted factor.
TEST(Exchange, GeneralSpectralParameter) {
  Sampler s(29);
  const Regime& r = kTrig;
  const auto lat = sweep_lattice(s, 4, r);
  const cplx t = s.spectral(lat, r);
  for (int i = 1; i <= 4; ++i) {
    for (int j = 1; j <= 4; ++j) {
      if (i == j) continue;
      const cplx xi = lat.at(i), xj = lat.at(j);
      const cplx factor = r.c_tilde(xi - t) * r.c_tilde(xj - xi) / (r.c_tilde(xj - t) * r.c_tilde(xi - xj));
      const auto bi = b_site(i, t, lat, r), bj = b_site(j, t, lat, r);
      EXPECT_LT(max_abs_diff(bi * bj, bj * bi * factor), 1e-10);
    }
  }
}
