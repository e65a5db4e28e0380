#pragma once

// Domain-wall partition function Phi_M({mu}, {q}) with mu_i = xi_{x_i}:
//   Phi_M(.|P) = prod_i b(mu_i - q_{Pi}) prod_{i>j} c(mu_i - q_{Pj}) prod_{i>j} c(q_{Pi} - q_{Pj})^{-1},
//   Phi_M = sum_P Phi_M(.|P),
// and the one-row recurrence
//   Phi_M = sum_i b(mu_M - q_i) prod_{a != i} c(mu_M - q_a)/c(q_i - q_a) Phi_{M-1}(mu \ mu_M, q \ q_i)
// with Phi_0 = 1.

#include <vector>

#include "sixvertex/permutations.hpp"
#include "sixvertex/tensor_core.hpp"
#include "sixvertex/weights.hpp"

namespace sixvertex {

/// Largest M accepted by the memoized recurrence (2^M table).
inline constexpr int kMaxRecurrenceRank = 24;

class DwbcInput {
 public:
  /// Throws InvalidArgument for unequal lengths, DegenerateError for
  /// coinciding column parameters.
  DwbcInput(std::vector<cplx> mu, std::vector<cplx> q, Regime regime);

  int M() const { return static_cast<int>(mu_.size()); }
  const std::vector<cplx>& mu() const { return mu_; }
  const std::vector<cplx>& q() const { return q_; }
  const Regime& regime() const { return regime_; }

 private:
  std::vector<cplx> mu_;
  std::vector<cplx> q_;
  Regime regime_;
};

/// Term of permutation P (0-based, P[i] = column of row i).
cplx phi_term(const std::vector<int>& perm, const DwbcInput& input);

/// Sum of all M! terms. Throws SizeError when M > cap.
cplx phi_sum(const DwbcInput& input, int cap = kDefaultPermutationCap);

/// Recurrence with memoization over the surviving column subset.
cplx phi_recurrence(const DwbcInput& input);

}  // namespace sixvertex
