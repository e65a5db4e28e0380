#include "sixvertex/vertex_model.hpp"

#include <sstream>

#include "sixvertex/errors.hpp"

namespace sixvertex {

namespace {

LinearOperator block(const LinearOperator& t0, int out_aux, int in_aux) {
  const int L = t0.sites() - 1;
  const Eigen::Index dim = Eigen::Index{1} << L;
  Matrix m(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) m(r, c) = t0(2 * r + out_aux, 2 * c + in_aux);
  }
  return {L, std::move(m)};
}

double vacuum_residual(const MonodromyEntries& e, cplx a) {
  const Vector vac = vacuum_state(e.A.sites());
  const double ra = (e.A * vac - a * vac).cwiseAbs().maxCoeff();
  const double rd = (e.D * vac - vac).cwiseAbs().maxCoeff();
  const double rc = (e.C * vac).cwiseAbs().maxCoeff();
  return std::max({ra, rd, rc});
}

}  // namespace

LinearOperator monodromy(cplx t, const LatticeSpec& lattice, const Regime& regime) {
  const int L = lattice.L();
  if (L < 1) throw InvalidArgument("lattice needs at least one site");
  const int aux = L + 1;
  LinearOperator t0 = LinearOperator::identity(L + 1);
  for (int site = 1; site <= L; ++site) {
    Gate s;
    try {
      s = s_matrix(lattice.at(site), t, regime);
    } catch (const SingularWeightError& err) {
      throw SingularWeightError("monodromy factor at site " + std::to_string(site) + ": " + err.what());
    }
    t0.right_multiply_gate(s, site, aux);
  }
  return t0;
}

MonodromyEntries extract_entries(const LinearOperator& t0) {
  if (t0.sites() < 2) throw InvalidArgument("monodromy must act on at least one site plus the auxiliary");
  return {block(t0, 1, 1), block(t0, 0, 1), block(t0, 1, 0), block(t0, 0, 0)};
}

MonodromyEntries monodromy_entries(cplx t, const LatticeSpec& lattice, const Regime& regime) {
  MonodromyEntries e = extract_entries(monodromy(t, lattice, regime));
  const cplx a = vacuum_eigenvalue(t, lattice, regime);
  const double res = vacuum_residual(e, a);
  if (res > 1e-9 * std::max(1.0, std::abs(a))) {
    std::ostringstream os;
    os << "monodromy block assignment fails the vacuum actions (residual " << res << ")";
    throw ConventionError(os.str());
  }
  return e;
}

LinearOperator b_operator(cplx t, const LatticeSpec& lattice, const Regime& regime) {
  return block(monodromy(t, lattice, regime), 0, 1);
}

cplx vacuum_eigenvalue(cplx t, const LatticeSpec& lattice, const Regime& regime) {
  cplx a = 1.0;
  for (const cplx xi : lattice.xi) a *= regime.c_tilde(xi - t);
  return a;
}

LinearOperator transfer(cplx t, const LatticeSpec& lattice, const Regime& regime) {
  const LinearOperator t0 = monodromy(t, lattice, regime);
  return block(t0, 1, 1) + block(t0, 0, 0);
}

cplx eigenvalue_lambda(cplx t, std::span<const cplx> roots, const LatticeSpec& lattice,
                       const Regime& regime) {
  for (const cplx q : roots) {
    if (std::abs(regime.phi(q - t)) < 1e-12) {
      std::ostringstream os;
      os << "Lambda(t) has a pole at t = " << t << " (coincides with a Bethe root); evaluate at a shifted point";
      throw SingularWeightError(os.str());
    }
  }
  cplx first = vacuum_eigenvalue(t, lattice, regime);
  cplx second = 1.0;
  for (const cplx q : roots) {
    first *= regime.c_tilde_inv(q - t);
    second *= regime.c_tilde_inv(t - q);
  }
  return first + second;
}

double unitarity_residual(cplx t1, cplx t2, const Regime& regime) {
  const Gate prod = s_matrix(t1, t2, regime) * s_matrix(t2, t1, regime);
  return (prod - Gate::Identity()).cwiseAbs().maxCoeff();
}

double yang_baxter_residual(cplx t1, cplx t2, cplx t3, const Regime& regime) {
  const Gate s12 = s_matrix(t1, t2, regime);
  const Gate s13 = s_matrix(t1, t3, regime);
  const Gate s23 = s_matrix(t2, t3, regime);
  LinearOperator lhs = LinearOperator::identity(3);
  lhs.right_multiply_gate(s12, 1, 2);
  lhs.right_multiply_gate(s13, 1, 3);
  lhs.right_multiply_gate(s23, 2, 3);
  LinearOperator rhs = LinearOperator::identity(3);
  rhs.right_multiply_gate(s23, 2, 3);
  rhs.right_multiply_gate(s13, 1, 3);
  rhs.right_multiply_gate(s12, 1, 2);
  return max_abs_diff(lhs, rhs);
}

double vacuum_action_residual(cplx t, const LatticeSpec& lattice, const Regime& regime) {
  const MonodromyEntries e = extract_entries(monodromy(t, lattice, regime));
  return vacuum_residual(e, vacuum_eigenvalue(t, lattice, regime));
}

}  // namespace sixvertex
