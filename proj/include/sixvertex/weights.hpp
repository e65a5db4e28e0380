#pragma once

// Six-vertex weights with the normalization a(t) = 1:
//   c(t) = phi(t) / phi(t + eta),   b(t) = phi(eta) / phi(t + eta),
// with phi(t) = t (rational) or phi(t) = sin t (trigonometric).

#include <string>
#include <vector>

#include "sixvertex/tensor_core.hpp"

namespace sixvertex {

enum class Family { Rational, Trigonometric };

std::string to_string(Family family);
Family family_from_string(const std::string& name);

/// Weights with |phi(t + eta)| below this are treated as poles.
inline constexpr double kPoleTolerance = 1e-13;

class Regime {
 public:
  Regime(Family family, cplx eta);

  Family family() const { return family_; }
  cplx eta() const { return eta_; }

  cplx phi(cplx t) const;
  /// phi'(t) / phi(t).
  cplx log_derivative(cplx t) const;

  /// c(t) = phi(t)/phi(t+eta). Throws SingularWeightError at a pole.
  cplx c_tilde(cplx t) const;
  /// b(t) = phi(eta)/phi(t+eta). Throws SingularWeightError at a pole.
  cplx b_tilde(cplx t) const;
  /// 1/c(t). Throws SingularWeightError when c(t) vanishes.
  cplx c_tilde_inv(cplx t) const;

 private:
  Family family_;
  cplx eta_;
};

/// Chain length and inhomogeneities xi_1..xi_L.
struct LatticeSpec {
  std::vector<cplx> xi;

  int L() const { return static_cast<int>(xi.size()); }
  /// xi of 1-based site.
  cplx at(int site) const { return xi.at(static_cast<std::size_t>(site - 1)); }
};

/// Smallest |phi(xi_i - xi_j)| and |phi(xi_i - xi_j + eta)| over i != j.
double genericity_margin(const LatticeSpec& lattice, const Regime& regime);

/// Throws DegenerateError when genericity_margin < tol.
void check_generic(const LatticeSpec& lattice, const Regime& regime, double tol = 1e-6);

/// S-matrix S(t1, t2) in the basis |00>,|01>,|10>,|11>: corners 1 and the
/// middle block [[c, b], [b, c]] with t = t1 - t2.
Gate s_matrix(cplx t1, cplx t2, const Regime& regime);

}  // namespace sixvertex
