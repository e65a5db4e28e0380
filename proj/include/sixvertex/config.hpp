#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sixvertex/keyvalue.hpp"
#include "sixvertex/permutations.hpp"
#include "sixvertex/weights.hpp"

namespace sixvertex {

/// Run configuration, read from a flat key = value file:
///
///   regime     = rational | trigonometric
///   eta        = complex anisotropy
///   L, M       = chain length and number of roots (M <= L)
///   xi         = explicit comma-separated inhomogeneities (length L), or
///   xi_spread  = half-width of the seeded random box (default 2)
///   xi_margin  = minimum |phi(xi_i - xi_j)|, |phi(xi_i - xi_j + eta)| of
///                random draws (default 0.3)
///   seed       = generator seed (default 42)
///   tolerance  = overrides every check tolerance when present (> 0)
///   perm_cap   = largest M for M!-term sums (default 9)
///   output_dir = where reports and tables go (default ".")
struct RunConfig {
  Family family = Family::Rational;
  cplx eta = 1.0;
  int L = 6;
  int M = 2;
  std::optional<std::vector<cplx>> xi;
  double xi_spread = 2.0;
  double xi_margin = 0.3;
  std::uint64_t seed = 42;
  std::optional<double> tolerance;
  int perm_cap = kDefaultPermutationCap;
  std::string output_dir = ".";

  Regime regime() const { return {family, eta}; }
};

/// Throws ConfigError on unknown keys, malformed values or violated
/// invariants (M <= L, tolerance > 0, xi length L).
RunConfig parse_run_config(const KeyValues& kv);
RunConfig read_run_config(const std::string& path);
void validate(const RunConfig& config);

/// Explicit xi, or L draws from the seeded generator.
LatticeSpec resolve_lattice(const RunConfig& config);

/// Independent per-purpose seed derived from the run seed (splitmix64).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace sixvertex
