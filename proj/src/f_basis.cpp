#include "sixvertex/f_basis.hpp"

#include <sstream>
#include <utility>

#include <Eigen/Sparse>

#include "sixvertex/errors.hpp"

namespace sixvertex {

namespace {

void check_site(int i, const LatticeSpec& lattice) {
  if (i < 1 || i > lattice.L()) {
    throw InvalidArgument("site " + std::to_string(i) + " out of range 1.." + std::to_string(lattice.L()));
  }
}

std::uint32_t state_count(int L) { return std::uint32_t{1} << L; }

// Matrix of the quasilocal flip sum over target sites built by `amplitude`,
// which returns the amplitude for flipping site i on in-state s.
template <typename Amplitude>
LinearOperator flip_operator(int i, int L, bool raise, Amplitude amplitude) {
  const auto mask = site_mask(i, L);
  Matrix m = Matrix::Zero(state_count(L), state_count(L));
  for (std::uint32_t s = 0; s < state_count(L); ++s) {
    const bool occ = (s & mask) != 0;
    if (raise == occ) continue;
    m(raise ? (s | mask) : (s & ~mask), s) = amplitude(s);
  }
  return {L, std::move(m)};
}

}  // namespace

LinearOperator t_n_operator(int n, const LatticeSpec& lattice, const Regime& regime) {
  check_site(n, lattice);
  LinearOperator t = LinearOperator::identity(lattice.L());
  for (int k = n + 1; k <= lattice.L(); ++k) {
    t.right_multiply_gate(s_matrix(lattice.at(k), lattice.at(n), regime), k, n);
  }
  return t;
}

namespace {

LinearOperator factorizing_product(const LatticeSpec& lattice, const Regime& regime) {
  const int L = lattice.L();
  if (L < 1) throw InvalidArgument("lattice needs at least one site");
  // F <- F F_i with F_i = (1 - n_i) + T_i n_i: columns with site i empty are
  // unchanged, the others are those of F T_i, and F T_i is F right-multiplied
  // by the gates of T_i.
  LinearOperator f = LinearOperator::identity(L);
  for (int i = 1; i <= L; ++i) {
    LinearOperator ft = f;
    for (int k = i + 1; k <= L; ++k) {
      ft.right_multiply_gate(s_matrix(lattice.at(k), lattice.at(i), regime), k, i);
    }
    const auto mask = site_mask(i, L);
    Matrix next = f.matrix();
    for (std::uint32_t s = 0; s < state_count(L); ++s) {
      if (s & mask) next.col(s) = ft.matrix().col(s);
    }
    f = LinearOperator(L, std::move(next));
  }
  return f;
}

}  // namespace

FactorizingOperator build_f(const LatticeSpec& lattice, const Regime& regime) {
  const int L = lattice.L();
  LinearOperator f = factorizing_product(lattice, regime);
  Eigen::PartialPivLU<Matrix> lu(f.matrix());
  const double rcond = lu.rcond();
  if (!(rcond * kMaxConditionNumber > 1.0)) {
    std::ostringstream os;
    os << "F is numerically singular (rcond " << rcond << ") for these inhomogeneities";
    throw DegenerateError(os.str());
  }
  Matrix inv = lu.inverse();
  return {std::move(f), LinearOperator(L, std::move(inv)), rcond};
}

double check_factorization(const LatticeSpec& lattice, const Regime& regime, int i) {
  const int L = lattice.L();
  if (i < 1 || i >= L) {
    throw InvalidArgument("adjacent transposition index must be in 1.." + std::to_string(L - 1));
  }
  LatticeSpec swapped = lattice;
  std::swap(swapped.xi[i - 1], swapped.xi[i]);

  LinearOperator rhs = factorizing_product(swapped, regime);
  const Gate p = permutation_gate();
  rhs.left_multiply_gate(p, i, i + 1);
  rhs.right_multiply_gate(p, i, i + 1);
  rhs.left_multiply_gate(s_matrix(lattice.at(i + 1), lattice.at(i), regime), i + 1, i);

  return max_abs_diff(factorizing_product(lattice, regime), rhs);
}

double f_matrix_element_residual(const FactorizingOperator& f, const LatticeSpec& lattice,
                                 const Regime& regime) {
  const int L = lattice.L();
  std::vector<LinearOperator> b_at_xi;
  b_at_xi.reserve(L);
  for (int k = 1; k <= L; ++k) b_at_xi.push_back(b_operator(lattice.at(k), lattice, regime));

  double worst = 0.0;
  for (std::uint32_t s = 0; s < state_count(L); ++s) {
    const auto occupied = StateIndex(L, s).occupied_sites();
    Vector ket = vacuum_state(L);
    for (auto it = occupied.rbegin(); it != occupied.rend(); ++it) ket = b_at_xi[*it - 1] * ket;
    worst = std::max(worst, (f.F.matrix().col(s) - ket).cwiseAbs().maxCoeff());
  }
  return worst;
}

LinearOperator af_closed(cplx t, const LatticeSpec& lattice, const Regime& regime) {
  const int L = lattice.L();
  std::vector<cplx> c(L);
  for (int k = 1; k <= L; ++k) c[k - 1] = regime.c_tilde(lattice.at(k) - t);
  Vector diag(state_count(L));
  for (std::uint32_t s = 0; s < state_count(L); ++s) {
    cplx v = 1.0;
    for (int k = 1; k <= L; ++k) {
      if (!(s & site_mask(k, L))) v *= c[k - 1];
    }
    diag(s) = v;
  }
  return LinearOperator::diagonal(L, diag);
}

LinearOperator b_site(int i, cplx t, const LatticeSpec& lattice, const Regime& regime) {
  check_site(i, lattice);
  const int L = lattice.L();
  const cplx b = regime.b_tilde(lattice.at(i) - t);
  std::vector<cplx> empty_factor(L, 1.0);
  for (int k = 1; k <= L; ++k) {
    if (k == i) continue;
    empty_factor[k - 1] = regime.c_tilde(lattice.at(k) - t) * regime.c_tilde_inv(lattice.at(k) - lattice.at(i));
  }
  return flip_operator(i, L, true, [&](std::uint32_t s) {
    cplx v = b;
    for (int k = 1; k <= L; ++k) {
      if (k != i && !(s & site_mask(k, L))) v *= empty_factor[k - 1];
    }
    return v;
  });
}

LinearOperator bf_closed(cplx t, const LatticeSpec& lattice, const Regime& regime) {
  LinearOperator sum(lattice.L());
  for (int i = 1; i <= lattice.L(); ++i) sum += b_site(i, t, lattice, regime);
  return sum;
}

LinearOperator cf_closed(cplx t, const LatticeSpec& lattice, const Regime& regime) {
  const int L = lattice.L();
  LinearOperator sum(L);
  for (int i = 1; i <= L; ++i) {
    const cplx b = regime.b_tilde(lattice.at(i) - t);
    std::vector<cplx> empty_factor(L, 1.0), full_factor(L, 1.0);
    for (int k = 1; k <= L; ++k) {
      if (k == i) continue;
      empty_factor[k - 1] = regime.c_tilde(lattice.at(k) - t);
      full_factor[k - 1] = regime.c_tilde_inv(lattice.at(i) - lattice.at(k));
    }
    sum += flip_operator(i, L, false, [&](std::uint32_t s) {
      cplx v = b;
      for (int k = 1; k <= L; ++k) {
        if (k == i) continue;
        v *= (s & site_mask(k, L)) ? full_factor[k - 1] : empty_factor[k - 1];
      }
      return v;
    });
  }
  return sum;
}

double af_offdiagonal_mass(const FactorizingOperator& f, cplx t, const LatticeSpec& lattice,
                           const Regime& regime) {
  Matrix m = f.conjugate(monodromy_entries(t, lattice, regime).A).matrix();
  m.diagonal().setZero();
  return max_abs(m);
}

double commutation_residual(int i, cplx t, cplx t_prime, const LatticeSpec& lattice,
                            const Regime& regime) {
  const Matrix bi = b_site(i, t, lattice, regime).matrix();
  const Vector af = af_closed(t_prime, lattice, regime).matrix().diagonal();
  const cplx c = regime.c_tilde(lattice.at(i) - t_prime);
  // A^F is diagonal: right/left multiplication scales columns/rows.
  return max_abs_diff(bi * af.asDiagonal(), c * (af.asDiagonal() * bi));
}

cplx exchange_factor(int i, int j, const LatticeSpec& lattice, const Regime& regime) {
  check_site(i, lattice);
  check_site(j, lattice);
  if (i == j) throw InvalidArgument("exchange relation needs i != j");
  const cplx xi_i = lattice.at(i);
  const cplx xi_j = lattice.at(j);
  const auto inverse = [&](cplx arg, const char* name) {
    try {
      return regime.c_tilde_inv(arg);
    } catch (const SingularWeightError&) {
      throw DegenerateError(std::string("exchange factor denominator ") + name + " vanishes");
    }
  };
  return regime.c_tilde(xi_i) * regime.c_tilde(xi_j - xi_i) * inverse(xi_j, "c(xi_j)") *
         inverse(xi_i - xi_j, "c(xi_i - xi_j)");
}

double check_exchange(int i, int j, const LatticeSpec& lattice, const Regime& regime) {
  const cplx s = exchange_factor(i, j, lattice, regime);
  using Sparse = Eigen::SparseMatrix<cplx>;
  const Sparse bi = b_site(i, 0.0, lattice, regime).matrix().sparseView();
  const Sparse bj = b_site(j, 0.0, lattice, regime).matrix().sparseView();
  const Sparse diff = Sparse(bi * bj) - s * Sparse(bj * bi);
  double worst = 0.0;
  for (int k = 0; k < diff.outerSize(); ++k) {
    for (Sparse::InnerIterator it(diff, k); it; ++it) worst = std::max(worst, std::abs(it.value()));
  }
  return worst;
}

}  // namespace sixvertex
