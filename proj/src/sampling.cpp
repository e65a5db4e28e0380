#include "sixvertex/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "sixvertex/errors.hpp"

namespace sixvertex {

namespace {
constexpr int kMaxRedraws = 10000;
}

// The distributions are implemented by hand so that draws do not depend on
// the standard library's distribution algorithms.
double Sampler::uniform(double lo, double hi) {
  const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

double Sampler::normal() {
  // Box-Muller, one value per call.
  double u1 = 0.0;
  while (u1 == 0.0) u1 = uniform(0.0, 1.0);
  const double u2 = uniform(0.0, 1.0);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

cplx Sampler::complex_box(cplx center, double half_width) {
  const double re = uniform(-half_width, half_width);
  const double im = uniform(-half_width, half_width);
  return center + cplx(re, im);
}

LatticeSpec Sampler::lattice(int L, double spread, const Regime& regime, double margin, cplx center) {
  if (L < 1) throw InvalidArgument("lattice needs at least one site");
  for (int attempt = 0; attempt < kMaxRedraws; ++attempt) {
    LatticeSpec out;
    out.xi.reserve(L);
    for (int k = 0; k < L; ++k) out.xi.push_back(complex_box(center, spread));
    if (genericity_margin(out, regime) >= margin) return out;
  }
  throw DegenerateError("could not sample a generic lattice");
}

cplx Sampler::spectral(const LatticeSpec& lattice, const Regime& regime, double half_width, double margin) {
  for (int attempt = 0; attempt < kMaxRedraws; ++attempt) {
    const cplx t = complex_box(0.0, half_width);
    bool ok = true;
    for (const cplx xi : lattice.xi) {
      const cplx u = xi - t;
      for (const cplx v : {u, u + regime.eta(), -u, -u + regime.eta()}) {
        if (std::abs(regime.phi(v)) < margin) ok = false;
      }
    }
    if (ok) return t;
  }
  throw DegenerateError("could not sample a generic spectral parameter");
}

std::pair<std::vector<cplx>, std::vector<cplx>> Sampler::dwbc_parameters(int M, const Regime& regime,
                                                                          double half_width, double margin) {
  const cplx eta = regime.eta();
  for (int attempt = 0; attempt < kMaxRedraws; ++attempt) {
    std::vector<cplx> mu, q;
    for (int k = 0; k < M; ++k) mu.push_back(complex_box(0.0, half_width));
    for (int k = 0; k < M; ++k) q.push_back(complex_box(0.0, half_width));
    bool ok = true;
    for (int i = 0; i < M && ok; ++i) {
      for (int j = 0; j < M; ++j) {
        if (std::abs(regime.phi(mu[i] - q[j] + eta)) < margin) ok = false;
        if (i != j && (std::abs(regime.phi(q[i] - q[j])) < margin ||
                       std::abs(regime.phi(q[i] - q[j] + eta)) < margin)) {
          ok = false;
        }
      }
    }
    if (ok) return {mu, q};
  }
  throw DegenerateError("could not sample separated domain-wall parameters");
}

std::vector<int> Sampler::permutation(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  for (int k = n - 1; k > 0; --k) {
    const auto j = static_cast<int>(engine_() % static_cast<std::uint64_t>(k + 1));
    std::swap(p[k], p[j]);
  }
  return p;
}

}  // namespace sixvertex
