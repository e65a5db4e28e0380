#pragma once

// Coordinate-space wave function of the Bethe state B(q_1)...B(q_M)|0>.
//
// In the sector x_1 < ... < x_M:
//   psi(x) = sum_P A(P) phi_{P1}(x_1) ... phi_{PM}(x_M),
//   phi_j(x) = prod_{l > x} c(xi_l - q_j) * b(xi_x - q_j),
//   A(P) = prod_{i > j} 1 / c(q_{Pi} - q_{Pj}).
// The oracle reads the same amplitude directly off the explicit vector
// B(q_1)...B(q_M)|0>, without touching any F-basis code.

#include <span>
#include <string>
#include <vector>

#include "sixvertex/permutations.hpp"
#include "sixvertex/tensor_core.hpp"
#include "sixvertex/weights.hpp"

namespace sixvertex {

/// Ordered occupied sites 1 <= x_1 < ... < x_M <= L.
class Configuration {
 public:
  Configuration(int L, std::vector<int> sites);

  int L() const { return L_; }
  int M() const { return static_cast<int>(sites_.size()); }
  const std::vector<int>& sites() const { return sites_; }
  int operator[](int slot) const { return sites_[static_cast<std::size_t>(slot)]; }
  StateIndex state() const { return StateIndex::from_occupied_sites(L_, sites_); }

  friend bool operator==(const Configuration&, const Configuration&) = default;

 private:
  int L_;
  std::vector<int> sites_;
};

/// All C(L, M) configurations in lexicographic order.
std::vector<Configuration> enumerate_configurations(int L, int M);

enum class Provenance { Formula, Oracle };
std::string to_string(Provenance p);

struct WaveEntry {
  Configuration x;
  cplx amplitude;
};

struct WaveTable {
  int L = 0;
  int M = 0;
  Provenance provenance = Provenance::Formula;
  std::vector<WaveEntry> entries;
};

/// phi_q(x) = prod_{l > x} c(xi_l - q) * b(xi_x - q).
cplx phi_factor(int x, cplx q, const LatticeSpec& lattice, const Regime& regime);

/// The same function written as
/// (prod_l c(xi_l - q)) * c(xi_x - q)^{-1} b(xi_x - q) * prod_{l < x} c(xi_l - q)^{-1}.
cplx phi_factor_alt(int x, cplx q, const LatticeSpec& lattice, const Regime& regime);

/// A(P) = prod_{i > j} 1/c(q_{P(i)} - q_{P(j)}), P a permutation of 0..M-1.
cplx amplitude(const std::vector<int>& perm, std::span<const cplx> q, const Regime& regime);

/// psi(x) by the M!-term permutation sum. Throws SizeError when M > cap.
cplx psi_formula(const Configuration& x, std::span<const cplx> q, const LatticeSpec& lattice,
                 const Regime& regime, int cap = kDefaultPermutationCap);

/// The part of the permutation sum with P(M) = last (0-based). Summing over
/// every `last` reproduces psi_formula.
cplx psi_formula_partial(const Configuration& x, std::span<const cplx> q, const LatticeSpec& lattice,
                         const Regime& regime, int last, int cap = kDefaultPermutationCap);

/// <x| B(q_1) ... B(q_M) |0> from explicit monodromy blocks.
cplx psi_oracle(const Configuration& x, std::span<const cplx> q, const LatticeSpec& lattice,
                const Regime& regime);

WaveTable wave_table_formula(std::span<const cplx> q, const LatticeSpec& lattice, const Regime& regime,
                             int cap = kDefaultPermutationCap);
WaveTable wave_table_oracle(std::span<const cplx> q, const LatticeSpec& lattice, const Regime& regime);

struct RatioStatistic {
  cplx ratio = 0.0;      // formula / oracle on the first admissible configuration
  double spread = 0.0;   // max |r(x) - ratio| / |ratio|
  int used = 0;          // configurations entering the statistic
  int excluded = 0;      // near-zero oracle amplitudes skipped
};

/// Ratio formula/oracle over all configurations with
/// |oracle| >= 1e-12 * max |oracle|.
RatioStatistic formula_oracle_ratio(const WaveTable& formula, const WaveTable& oracle);

struct PeriodicityResult {
  double amplitude_residual;  // max_P |A(P)/A(PC) - prod_l c^{-1}(xi_l - q_{P1})|
  double bae_residual;        // max_i Bethe equation residual, co-reported
};

/// Amplitude condition from periodic continuation, with xi_{l+L} = xi_l.
PeriodicityResult check_periodicity(std::span<const cplx> q, const LatticeSpec& lattice,
                                    const Regime& regime, int cap = kDefaultPermutationCap);

/// Tabular export: header "x1 ... xM re im provenance", one row per
/// configuration per table.
std::string format_wave_tables(const std::vector<WaveTable>& tables);

}  // namespace sixvertex
