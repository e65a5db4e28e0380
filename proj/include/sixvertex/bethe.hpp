#pragma once

// Bethe equations
//   a(q_i) = prod_{alpha != i} c(q_alpha - q_i) / c(q_i - q_alpha),
//   a(q)   = prod_l c(xi_l - q),
// a Newton/homotopy root finder, and the eigenvector check of
// B(q_1)...B(q_M)|0> against the transfer matrix.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sixvertex/errors.hpp"
#include "sixvertex/tensor_core.hpp"
#include "sixvertex/weights.hpp"

namespace sixvertex {

/// Roots closer than this (in |phi(q_i - q_j)|) count as coinciding.
inline constexpr double kRootSeparation = 1e-8;

struct BetheRoots {
  std::vector<cplx> q;
  double residual = 0.0;
  // Provenance: the problem these roots solve.
  Family family = Family::Rational;
  cplx eta = 1.0;
  LatticeSpec lattice;

  int M() const { return static_cast<int>(q.size()); }
  int L() const { return lattice.L(); }
  Regime regime() const { return {family, eta}; }
};

/// Thrown when every solver attempt ended in a root collision.
class RootCollisionError : public SolverFailure {
 public:
  using SolverFailure::SolverFailure;
};

struct SolverOptions {
  int legs = 20;              // homotopy legs from the homogeneous chain
  int max_iterations = 200;   // Newton steps per leg
  int attempts = 64;          // starting points tried before giving up
  double tolerance = 1e-12;   // required max bae_residual
  double root_bound = 50.0;   // |q - mean(xi)| limit, rejects roots drifting to infinity
};

/// Per-root residual |a(q_i) - prod_{alpha != i} c(q_alpha - q_i)/c(q_i - q_alpha)|.
/// Throws DegenerateError for coinciding roots.
std::vector<double> bae_residual(std::span<const cplx> q, const LatticeSpec& lattice,
                                 const Regime& regime);

double max_bae_residual(std::span<const cplx> q, const LatticeSpec& lattice, const Regime& regime);

/// Solves the Bethe equations for M roots.
///
/// Even attempts start on the homogeneous chain (every xi replaced by their
/// mean), run Newton on log(a(q_i) prod c(q_i - q_a)/c(q_a - q_i)) there,
/// then deform xi linearly to the target in at least `legs` steps, halving
/// a step whenever its Newton solve fails. Attempt 0 starts from
/// free-particle roots c(xi_mean - q)^L = 1 with the momenta closest to the
/// band centre; later even attempts draw momenta and a jitter from the
/// seeded generator. Odd attempts run Newton directly on the target chain
/// from a seeded random cloud around the band centre.
BetheRoots solve_bae(int M, const LatticeSpec& lattice, const Regime& regime, std::uint64_t seed,
                     const SolverOptions& options = {});

/// B(q_1) ... B(q_M)|0> from explicit monodromy blocks.
Vector bethe_vector(std::span<const cplx> q, const LatticeSpec& lattice, const Regime& regime);

/// max over t of ||Z(t)|phi> - Lambda(t)|phi>|| / |||phi>||.
/// Throws DegenerateError when |||phi>|| < 1e-12.
double verify_eigenstate(std::span<const cplx> q, const LatticeSpec& lattice, const Regime& regime,
                         std::span<const cplx> t_samples);

/// Roots document: flat key = value text with L, M, regime, eta, xi, q, residual.
std::string format_roots(const BetheRoots& roots);
BetheRoots parse_roots(const std::string& text);
BetheRoots read_roots(const std::string& path);

/// True when `roots` were solved for exactly this lattice and regime.
bool same_problem(const BetheRoots& roots, const LatticeSpec& lattice, const Regime& regime,
                  double tol = 1e-12);

}  // namespace sixvertex
