#include "sixvertex/weights.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "sixvertex/errors.hpp"

namespace sixvertex {

namespace {

std::string describe(cplx t) {
  std::ostringstream os;
  os.precision(17);
  os << '(' << t.real() << ',' << t.imag() << ')';
  return os.str();
}

}  // namespace

std::string to_string(Family family) {
  return family == Family::Rational ? "rational" : "trigonometric";
}

Family family_from_string(const std::string& name) {
  if (name == "rational") return Family::Rational;
  if (name == "trigonometric" || name == "trig") return Family::Trigonometric;
  throw ConfigError("unknown regime '" + name + "' (expected rational or trigonometric)");
}

Regime::Regime(Family family, cplx eta) : family_(family), eta_(eta) {
  if (std::abs(phi(eta)) < kPoleTolerance) {
    throw InvalidArgument("phi(eta) vanishes for eta = " + describe(eta));
  }
}

cplx Regime::phi(cplx t) const { return family_ == Family::Rational ? t : std::sin(t); }

cplx Regime::log_derivative(cplx t) const {
  return family_ == Family::Rational ? 1.0 / t : std::cos(t) / std::sin(t);
}

cplx Regime::c_tilde(cplx t) const {
  const cplx den = phi(t + eta_);
  if (std::abs(den) < kPoleTolerance) throw SingularWeightError("c(t) has a pole at t = " + describe(t));
  return phi(t) / den;
}

cplx Regime::b_tilde(cplx t) const {
  const cplx den = phi(t + eta_);
  if (std::abs(den) < kPoleTolerance) throw SingularWeightError("b(t) has a pole at t = " + describe(t));
  return phi(eta_) / den;
}

cplx Regime::c_tilde_inv(cplx t) const {
  const cplx num = phi(t);
  if (std::abs(num) < kPoleTolerance) throw SingularWeightError("1/c(t) has a pole at t = " + describe(t));
  return phi(t + eta_) / num;
}

double genericity_margin(const LatticeSpec& lattice, const Regime& regime) {
  double margin = std::numeric_limits<double>::infinity();
  for (int i = 1; i <= lattice.L(); ++i) {
    for (int j = 1; j <= lattice.L(); ++j) {
      if (i == j) continue;
      const cplx d = lattice.at(i) - lattice.at(j);
      margin = std::min({margin, std::abs(regime.phi(d)), std::abs(regime.phi(d + regime.eta()))});
    }
  }
  return margin;
}

void check_generic(const LatticeSpec& lattice, const Regime& regime, double tol) {
  const double margin = genericity_margin(lattice, regime);
  if (margin < tol) {
    std::ostringstream os;
    os << "inhomogeneities are not generic: margin " << margin << " < " << tol;
    throw DegenerateError(os.str());
  }
}

Gate s_matrix(cplx t1, cplx t2, const Regime& regime) {
  const cplx t = t1 - t2;
  const cplx c = regime.c_tilde(t);
  const cplx b = regime.b_tilde(t);
  Gate s = Gate::Zero();
  s(0, 0) = 1.0;
  s(3, 3) = 1.0;
  s(1, 1) = c;
  s(2, 2) = c;
  s(1, 2) = b;
  s(2, 1) = b;
  return s;
}

}  // namespace sixvertex
