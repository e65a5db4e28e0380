#pragma once

// Monodromy matrix, its A/B/C/D blocks and the transfer matrix.
//
// T_0(t) = S_{10}(xi_1, t) S_{20}(xi_2, t) ... S_{L0}(xi_L, t) is built on
// L + 1 sites; the auxiliary space is site L + 1, i.e. the least significant
// bit. A chain basis index s lifts to 2 s + a with a the auxiliary
// occupation. Block assignment (out-aux, in-aux):
//   A = (1, 1), B = (0, 1), C = (1, 0), D = (0, 0).
// It is pinned by the vacuum actions A|0> = a(t)|0>, D|0> = |0>, C|0> = 0,
// which monodromy_entries() re-checks on every call.

#include <span>

#include "sixvertex/tensor_core.hpp"
#include "sixvertex/weights.hpp"

namespace sixvertex {

struct MonodromyEntries {
  LinearOperator A;
  LinearOperator B;
  LinearOperator C;
  LinearOperator D;
};

/// T_0(t) on L + 1 sites (auxiliary last).
LinearOperator monodromy(cplx t, const LatticeSpec& lattice, const Regime& regime);

/// Split T_0 into its four auxiliary blocks.
MonodromyEntries extract_entries(const LinearOperator& t0);

/// Blocks of T_0(t), with the vacuum actions verified (ConventionError otherwise).
MonodromyEntries monodromy_entries(cplx t, const LatticeSpec& lattice, const Regime& regime);

/// B(t) alone; cheaper than monodromy_entries when only B is needed.
LinearOperator b_operator(cplx t, const LatticeSpec& lattice, const Regime& regime);

/// a(t) = prod_alpha c(xi_alpha - t).
cplx vacuum_eigenvalue(cplx t, const LatticeSpec& lattice, const Regime& regime);

/// Z(t) = A(t) + D(t).
LinearOperator transfer(cplx t, const LatticeSpec& lattice, const Regime& regime);

/// Lambda(t) = a(t) prod c^{-1}(q - t) + prod c^{-1}(t - q).
/// Throws SingularWeightError when t sits on a root.
cplx eigenvalue_lambda(cplx t, std::span<const cplx> roots, const LatticeSpec& lattice,
                       const Regime& regime);

/// || S(t1,t2) S(t2,t1) - 1 ||_max.
double unitarity_residual(cplx t1, cplx t2, const Regime& regime);

/// || S12 S13 S23 - S23 S13 S12 ||_max on three sites, S_ij = S(t_i, t_j).
double yang_baxter_residual(cplx t1, cplx t2, cplx t3, const Regime& regime);

/// Max of the three vacuum-action residuals of the raw blocks.
double vacuum_action_residual(cplx t, const LatticeSpec& lattice, const Regime& regime);

}  // namespace sixvertex
