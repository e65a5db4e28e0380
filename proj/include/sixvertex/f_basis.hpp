#pragma once

// The factorizing operator F = F_1 F_2 ... F_L with
//   F_i = (1 - n_i) + T_i n_i,   T_n = S_{n+1,n} S_{n+2,n} ... S_{L,n},
// where S_{k,n} carries the spectral arguments (xi_k, xi_n), together with
// the closed forms of A, B and C conjugated into the F-basis
// (X^F = F^{-1} X F).

#include "sixvertex/tensor_core.hpp"
#include "sixvertex/vertex_model.hpp"
#include "sixvertex/weights.hpp"

namespace sixvertex {

struct FactorizingOperator {
  LinearOperator F;
  LinearOperator F_inv;
  /// Reciprocal condition number estimate of F (1-norm).
  double rcond;

  /// F^{-1} op F.
  LinearOperator conjugate(const LinearOperator& op) const { return F_inv * op * F; }
};

/// Condition number above which F counts as singular.
inline constexpr double kMaxConditionNumber = 1e12;

LinearOperator t_n_operator(int n, const LatticeSpec& lattice, const Regime& regime);

/// Builds F and its numerical inverse. Throws DegenerateError when F is
/// numerically singular.
FactorizingOperator build_f(const LatticeSpec& lattice, const Regime& regime);

/// || F - S_{i+1,i} F^{(i,i+1)} ||_max. F^{(i,i+1)} is F built with sites
/// i, i+1 (and their xi) exchanged, i.e. P_{i,i+1} F(xi') P_{i,i+1}.
double check_factorization(const LatticeSpec& lattice, const Regime& regime, int i);

/// max over occupation sets {n} of || F|n> - B(xi_{n_1}) ... B(xi_{n_M})|0> ||_max.
double f_matrix_element_residual(const FactorizingOperator& f, const LatticeSpec& lattice,
                                 const Regime& regime);

/// A^F(t) = prod_i ( c(xi_i - t)(1 - n_i) + n_i ).
LinearOperator af_closed(cplx t, const LatticeSpec& lattice, const Regime& regime);

/// B_i(t): the summand of B^F(t) raising site i.
LinearOperator b_site(int i, cplx t, const LatticeSpec& lattice, const Regime& regime);

/// B^F(t) = sum_i B_i(t).
LinearOperator bf_closed(cplx t, const LatticeSpec& lattice, const Regime& regime);

/// C^F(t) = sum_i sigma_i^- b(xi_i - t) prod_{k != i} ( c(xi_k - t)(1 - n_k) + c(xi_i - xi_k)^{-1} n_k ).
LinearOperator cf_closed(cplx t, const LatticeSpec& lattice, const Regime& regime);

/// Off-diagonal max-abs of F^{-1} A(t) F.
double af_offdiagonal_mass(const FactorizingOperator& f, cplx t, const LatticeSpec& lattice,
                           const Regime& regime);

/// || B_i(t) A^F(t') - c(xi_i - t') A^F(t') B_i(t) ||_max.
double commutation_residual(int i, cplx t, cplx t_prime, const LatticeSpec& lattice,
                            const Regime& regime);

/// S_ij = c(xi_i) c(xi_j - xi_i) / ( c(xi_j) c(xi_i - xi_j) ).
cplx exchange_factor(int i, int j, const LatticeSpec& lattice, const Regime& regime);

/// || B_i B_j - S_ij B_j B_i ||_max with B_i = B_i(0).
double check_exchange(int i, int j, const LatticeSpec& lattice, const Regime& regime);

}  // namespace sixvertex
