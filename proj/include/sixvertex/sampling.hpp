#pragma once

// Seeded parameter sampling. All randomness in the project goes through
// Sampler, which wraps std::mt19937_64 seeded with the run seed; a draw
// sequence is therefore reproducible across runs and platforms using the
// same standard library.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "sixvertex/weights.hpp"

namespace sixvertex {

/// Samples closer than this to a weight pole or zero are redrawn.
inline constexpr double kGenericityGuard = 1e-6;

/// Margin used by the verification sweeps. Nearly coinciding parameters
/// make F ill-conditioned and put cancelling poles into permutation sums,
/// which costs digits that absolute tolerances cannot absorb.
inline constexpr double kSweepMargin = 0.3;
/// Half-width of the parameter box used by the verification sweeps.
inline constexpr double kSweepBox = 2.0;

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi);
  double normal();
  /// Uniform in the box center + [-half, half] x i[-half, half].
  cplx complex_box(cplx center, double half_width);

  /// L inhomogeneities in a box of half-width `spread` around `center`,
  /// redrawn until genericity_margin >= margin.
  LatticeSpec lattice(int L, double spread, const Regime& regime, double margin = kGenericityGuard,
                      cplx center = 0.0);

  /// Spectral parameter t in the box with |phi| >= margin for every
  /// argument of c(xi_k - t), c(t - xi_k) and their denominators.
  cplx spectral(const LatticeSpec& lattice, const Regime& regime, double half_width = 1.0,
                double margin = kGenericityGuard);

  /// Row parameters mu and column parameters q (M each) for the domain-wall
  /// partition function, with |phi(q_i - q_j)|, |phi(q_i - q_j + eta)| and
  /// |phi(mu_i - q_j + eta)| all >= margin.
  std::pair<std::vector<cplx>, std::vector<cplx>> dwbc_parameters(int M, const Regime& regime,
                                                                  double half_width, double margin);

  /// Uniform random permutation of 0..n-1.
  std::vector<int> permutation(int n);

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace sixvertex
