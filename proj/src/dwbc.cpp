#include "sixvertex/dwbc.hpp"

#include <bit>
#include <cstdint>
#include <optional>
#include <string>

namespace sixvertex {

DwbcInput::DwbcInput(std::vector<cplx> mu, std::vector<cplx> q, Regime regime)
    : mu_(std::move(mu)), q_(std::move(q)), regime_(regime) {
  if (mu_.size() != q_.size()) throw InvalidArgument("row and column parameter lists differ in length");
  for (std::size_t i = 0; i < q_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (std::abs(regime_.phi(q_[i] - q_[j])) < 1e-8) {
        throw DegenerateError("column parameters " + std::to_string(j + 1) + " and " + std::to_string(i + 1) +
                              " coincide");
      }
    }
  }
}

cplx phi_term(const std::vector<int>& perm, const DwbcInput& input) {
  const int M = input.M();
  if (static_cast<int>(perm.size()) != M || !is_permutation_of_range(perm)) {
    throw InvalidArgument("phi_term needs a permutation of 0..M-1");
  }
  const auto& mu = input.mu();
  const auto& q = input.q();
  const Regime& w = input.regime();
  cplx v = 1.0;
  for (int i = 0; i < M; ++i) {
    v *= w.b_tilde(mu[i] - q[perm[i]]);
    for (int j = 0; j < i; ++j) {
      v *= w.c_tilde(mu[i] - q[perm[j]]) * w.c_tilde_inv(q[perm[i]] - q[perm[j]]);
    }
  }
  return v;
}

cplx phi_sum(const DwbcInput& input, int cap) {
  check_permutation_cap(input.M(), cap);
  cplx total = 0.0;
  for_each_permutation(input.M(), [&](const std::vector<int>& p) { total += phi_term(p, input); });
  return total;
}

cplx phi_recurrence(const DwbcInput& input) {
  const int M = input.M();
  if (M > kMaxRecurrenceRank) throw SizeError("recurrence rank above " + std::to_string(kMaxRecurrenceRank));
  const auto& mu = input.mu();
  const auto& q = input.q();
  const Regime& w = input.regime();

  // memo[mask]: Phi over rows 1..popcount(mask) and the columns in mask.
  std::vector<std::optional<cplx>> memo(std::size_t{1} << M);
  memo[0] = 1.0;
  // Masks in increasing order visit every subset after its subsets.
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << M); ++mask) {
    const cplx row = mu[std::popcount(mask) - 1];
    cplx total = 0.0;
    for (int i = 0; i < M; ++i) {
      if (!(mask & (1u << i))) continue;
      cplx term = w.b_tilde(row - q[i]) * *memo[mask & ~(1u << i)];
      for (int a = 0; a < M; ++a) {
        if (a == i || !(mask & (1u << a))) continue;
        term *= w.c_tilde(row - q[a]) * w.c_tilde_inv(q[i] - q[a]);
      }
      total += term;
    }
    memo[mask] = total;
  }
  return *memo.back();
}

}  // namespace sixvertex
