#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <vector>

#include <gtest/gtest.h>

#include "sixvertex/bethe.hpp"
#include "sixvertex/errors.hpp"
#include "sixvertex/sampling.hpp"
#include "sixvertex/vertex_model.hpp"

using namespace sixvertex;

namespace {

const Regime kRational(Family::Rational, 1.0);
const Regime kTrig(Family::Trigonometric, cplx(0.7, 0.1));

const std::vector<cplx> kTimes{0.0, 0.3, cplx(0.7, 0.2)};

}  // namespace

// L = 2, xi = 0, eta = 1, M = 1: a(q) = (q / (q - 1))^2 = 1 has the single
// finite root q = 1/2.
TEST(BetheEquations, TwoSiteClosedForm) {
  const LatticeSpec lat{{0.0, 0.0}};
  const std::vector<cplx> root{0.5};
  EXPECT_LT(max_bae_residual(root, lat, kRational), 1e-15);
  const std::vector<cplx> off{0.6};
  EXPECT_GT(max_bae_residual(off, lat, kRational), 1e-3);
}

TEST(BetheEquations, EmptyRootSet) {
  const LatticeSpec lat{{0.1, 0.2}};
  EXPECT_TRUE(bae_residual({}, lat, kRational).empty());
  EXPECT_EQ(max_bae_residual({}, lat, kRational), 0.0);
}

TEST(BetheEquations, CoincidingRootsRejected) {
  const LatticeSpec lat{{0.1, 0.2, 0.3}};
  const std::vector<cplx> q{0.4, 0.4};
  EXPECT_THROW(bae_residual(q, lat, kRational), DegenerateError);
}

TEST(Solver, TwoSiteClosedForm) {
  const LatticeSpec lat{{0.0, 0.0}};
  const auto roots = solve_bae(1, lat, kRational, 1);
  ASSERT_EQ(roots.M(), 1);
  EXPECT_LT(std::abs(roots.q[0] - 0.5), 1e-12);
}

TEST(Solver, ZeroRoots) {
  const LatticeSpec lat{{0.1, 0.2}};
  EXPECT_EQ(solve_bae(0, lat, kRational, 1).M(), 0);
}

TEST(Solver, TooManyRoots) {
  const LatticeSpec lat{{0.1, 0.2}};
  EXPECT_THROW(solve_bae(3, lat, kRational, 1), InvalidArgument);
}

TEST(Solver, SingleRootAnyLength) {
  Sampler s(31);
  for (const Regime& r : {kRational, kTrig}) {
    for (int L = 2; L <= 7; ++L) {
      const auto lat = s.lattice(L, kSweepBox, r, kSweepMargin);
      const auto roots = solve_bae(1, lat, r, 100 + L);
      EXPECT_LT(roots.residual, 1e-12);
      EXPECT_LT(std::abs(vacuum_eigenvalue(roots.q[0], lat, r) - 1.0), 1e-12);
    }
  }
}

TEST(Solver, EigenstatesAcrossShapes) {
  Sampler s(32);
  const std::vector<std::pair<int, int>> shapes{{2, 1}, {3, 1}, {4, 2}, {5, 2}, {6, 3}};
  for (const Regime& r : {kRational, kTrig}) {
    for (auto [L, M] : shapes) {
      const auto lat = s.lattice(L, kSweepBox, r, kSweepMargin);
      const auto roots = solve_bae(M, lat, r, 7);
      EXPECT_LT(max_bae_residual(roots.q, lat, r), 1e-12) << "L=" << L << " M=" << M;
      EXPECT_LT(verify_eigenstate(roots.q, lat, r, kTimes), 1e-9) << "L=" << L << " M=" << M;
    }
  }
}

TEST(Solver, PerturbedRootsAreNotEigenstates) {
  Sampler s(33);
  const auto lat = s.lattice(4, kSweepBox, kRational, kSweepMargin);
  auto roots = solve_bae(2, lat, kRational, 3);
  roots.q[0] += 0.1;
  EXPECT_GT(verify_eigenstate(roots.q, lat, kRational, kTimes), 1e-6);
}

TEST(Solver, EigenstateNearARoot) {
  Sampler s(34);
  const auto lat = s.lattice(4, kSweepBox, kTrig, kSweepMargin);
  const auto roots = solve_bae(2, lat, kTrig, 5);
  const std::vector<cplx> near{roots.q[0] + 1e-2, roots.q[1] + cplx(0.0, 5e-3)};
  EXPECT_LT(verify_eigenstate(roots.q, lat, kTrig, near), 1e-9);
}

TEST(Solver, RootOrderIrrelevant) {
  Sampler s(35);
  const auto lat = s.lattice(6, kSweepBox, kRational, kSweepMargin);
  const auto roots = solve_bae(3, lat, kRational, 9);
  std::vector<cplx> q = roots.q;
  std::reverse(q.begin(), q.end());
  EXPECT_LT(max_bae_residual(q, lat, kRational), 1e-12);
  const Vector a = bethe_vector(roots.q, lat, kRational), b = bethe_vector(q, lat, kRational);
  EXPECT_LT((a - b).cwiseAbs().maxCoeff() / a.cwiseAbs().maxCoeff(), 1e-10);
  for (const cplx t : kTimes) {
    const cplx la = eigenvalue_lambda(t, roots.q, lat, kRational), lb = eigenvalue_lambda(t, q, lat, kRational);
    EXPECT_LT(std::abs(la - lb), 1e-10 * std::max(1.0, std::abs(la)));
  }
  EXPECT_LT(std::abs(verify_eigenstate(roots.q, lat, kRational, kTimes) - verify_eigenstate(q, lat, kRational, kTimes)),
            1e-10);
}

TEST(Solver, DeterministicForSeed) {
  Sampler s(36);
  const auto lat = s.lattice(5, kSweepBox, kTrig, kSweepMargin);
  EXPECT_EQ(solve_bae(2, lat, kTrig, 11).q, solve_bae(2, lat, kTrig, 11).q);
}

TEST(RootsDocument, RoundTrip) {
  Sampler s(37);
  const auto lat = s.lattice(4, kSweepBox, kTrig, kSweepMargin);
  const auto roots = solve_bae(2, lat, kTrig, 13);
  const auto back = parse_roots(format_roots(roots));
  EXPECT_EQ(back.q, roots.q);
  EXPECT_EQ(back.lattice.xi, roots.lattice.xi);
  EXPECT_EQ(back.family, roots.family);
  EXPECT_EQ(back.eta, roots.eta);
  EXPECT_TRUE(same_problem(back, lat, kTrig));
  EXPECT_FALSE(same_problem(back, lat, kRational));
}

TEST(RootsDocument, FileAndErrors) {
  const auto path = std::filesystem::temp_directory_path() / "sixvertex_roots_test.txt";
  const LatticeSpec lat{{0.0, 0.0}};
  {
    std::ofstream out(path);
    out << format_roots(solve_bae(1, lat, kRational, 1));
  }
  EXPECT_LT(std::abs(read_roots(path.string()).q[0] - 0.5), 1e-12);
  std::filesystem::remove(path);
  EXPECT_THROW(read_roots(path.string()), ConfigError);
  EXPECT_THROW(parse_roots("L = 2\n"), ConfigError);
}
