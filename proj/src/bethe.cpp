#include "sixvertex/bethe.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <optional>
#include <sstream>

#include "sixvertex/keyvalue.hpp"
#include "sixvertex/sampling.hpp"
#include "sixvertex/vertex_model.hpp"

namespace sixvertex {

namespace {

void check_distinct(std::span<const cplx> q, const Regime& regime) {
  for (std::size_t i = 0; i < q.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (std::abs(regime.phi(q[i] - q[j])) < kRootSeparation) {
        throw DegenerateError("Bethe roots " + std::to_string(j + 1) + " and " + std::to_string(i + 1) +
                              " coincide");
      }
    }
  }
}

// d/du log c(u).
cplx dlog_c(cplx u, const Regime& regime) {
  return regime.log_derivative(u) - regime.log_derivative(u + regime.eta());
}

// log of a(q_i) prod_{a != i} c(q_i - q_a)/c(q_a - q_i); zero exactly on solutions.
Vector log_residual(const Vector& q, const LatticeSpec& lattice, const Regime& regime) {
  const Eigen::Index M = q.size();
  Vector r(M);
  for (Eigen::Index i = 0; i < M; ++i) {
    cplx h = vacuum_eigenvalue(q(i), lattice, regime);
    for (Eigen::Index a = 0; a < M; ++a) {
      if (a != i) h *= regime.c_tilde(q(i) - q(a)) * regime.c_tilde_inv(q(a) - q(i));
    }
    r(i) = std::log(h);
  }
  return r;
}

Matrix log_jacobian(const Vector& q, const LatticeSpec& lattice, const Regime& regime) {
  const Eigen::Index M = q.size();
  Matrix J = Matrix::Zero(M, M);
  for (Eigen::Index i = 0; i < M; ++i) {
    for (const cplx xi : lattice.xi) J(i, i) -= dlog_c(xi - q(i), regime);
    for (Eigen::Index a = 0; a < M; ++a) {
      if (a == i) continue;
      const cplx d = dlog_c(q(i) - q(a), regime) + dlog_c(q(a) - q(i), regime);
      J(i, i) += d;
      J(i, a) -= d;
    }
  }
  return J;
}

double finite_max(const Vector& r) {
  double m = 0.0;
  for (Eigen::Index k = 0; k < r.size(); ++k) {
    const double v = std::abs(r(k));
    if (!std::isfinite(v)) return std::numeric_limits<double>::infinity();
    m = std::max(m, v);
  }
  return m;
}

double safe_log_residual(const Vector& q, const LatticeSpec& lattice, const Regime& regime) {
  try {
    return finite_max(log_residual(q, lattice, regime));
  } catch (const SingularWeightError&) {
    return std::numeric_limits<double>::infinity();
  }
}

// Damped Newton. Returns the improved roots or nullopt if the iteration
// stalled away from a solution.
std::optional<Vector> newton(Vector q, const LatticeSpec& lattice, const Regime& regime,
                             const SolverOptions& options) {
  double res = safe_log_residual(q, lattice, regime);
  if (!std::isfinite(res)) return std::nullopt;
  for (int it = 0; it < options.max_iterations && res > 1e-14; ++it) {
    Vector step;
    try {
      const Matrix J = log_jacobian(q, lattice, regime);
      Eigen::FullPivLU<Matrix> lu(J);
      if (!lu.isInvertible()) return std::nullopt;
      step = lu.solve(-log_residual(q, lattice, regime));
    } catch (const SingularWeightError&) {
      return std::nullopt;
    }
    if (!std::isfinite(finite_max(step))) return std::nullopt;
    bool improved = false;
    for (double lambda = 1.0; lambda > 1e-4; lambda *= 0.5) {
      const Vector trial = q + lambda * step;
      const double trial_res = safe_log_residual(trial, lattice, regime);
      if (trial_res < res) {
        q = trial;
        res = trial_res;
        improved = true;
        break;
      }
    }
    if (!improved) break;
  }
  try {
    if (max_bae_residual(std::vector<cplx>(q.data(), q.data() + q.size()), lattice, regime) <
        options.tolerance) {
      return q;
    }
  } catch (const Error&) {
  }
  return std::nullopt;
}

cplx mean(const std::vector<cplx>& xs) {
  return std::accumulate(xs.begin(), xs.end(), cplx(0.0)) / static_cast<double>(xs.size());
}

// Root solving c(xi_mean - q) = w.
cplx free_root(cplx w, cplx centre, const Regime& regime) {
  const cplx eta = regime.eta();
  const cplx u = regime.family() == Family::Rational
                     ? w * eta / (1.0 - w)
                     : std::atan(w * std::sin(eta) / (1.0 - w * std::cos(eta)));
  return centre - u;
}

// Folds trigonometric roots into one period around the lattice centre.
cplx fold(cplx q, cplx centre, const Regime& regime) {
  if (regime.family() != Family::Trigonometric) return q;
  const double shift = std::round((q - centre).real() / M_PI);
  return q - shift * M_PI;
}

// Empty string when the roots are acceptable, otherwise the reason.
std::string reject_reason(const Vector& q, const LatticeSpec& lattice, const Regime& regime,
                          cplx centre, const SolverOptions& options) {
  for (Eigen::Index i = 0; i < q.size(); ++i) {
    if (std::abs(q(i) - centre) > options.root_bound) return "root drifted beyond the bound";
    for (const cplx xi : lattice.xi) {
      if (std::abs(regime.phi(xi - q(i))) < kGenericityGuard ||
          std::abs(regime.phi(xi - q(i) + regime.eta())) < kGenericityGuard) {
        return "root on a weight pole";
      }
    }
    for (Eigen::Index j = 0; j < i; ++j) {
      if (std::abs(regime.phi(q(i) - q(j))) < kRootSeparation) return "collision";
    }
  }
  return {};
}

}  // namespace

std::vector<double> bae_residual(std::span<const cplx> q, const LatticeSpec& lattice,
                                 const Regime& regime) {
  check_distinct(q, regime);
  std::vector<double> out;
  out.reserve(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    cplx rhs = 1.0;
    for (std::size_t a = 0; a < q.size(); ++a) {
      if (a != i) rhs *= regime.c_tilde(q[a] - q[i]) * regime.c_tilde_inv(q[i] - q[a]);
    }
    out.push_back(std::abs(vacuum_eigenvalue(q[i], lattice, regime) - rhs));
  }
  return out;
}

double max_bae_residual(std::span<const cplx> q, const LatticeSpec& lattice, const Regime& regime) {
  const auto r = bae_residual(q, lattice, regime);
  return r.empty() ? 0.0 : *std::max_element(r.begin(), r.end());
}

BetheRoots solve_bae(int M, const LatticeSpec& lattice, const Regime& regime, std::uint64_t seed,
                     const SolverOptions& options) {
  const int L = lattice.L();
  if (L < 1) throw InvalidArgument("lattice needs at least one site");
  if (M < 0 || M > L) throw InvalidArgument("need 0 <= M <= L, got M = " + std::to_string(M));

  BetheRoots out;
  out.family = regime.family();
  out.eta = regime.eta();
  out.lattice = lattice;
  if (M == 0) return out;

  const cplx centre = mean(lattice.xi);
  const LatticeSpec homogeneous{std::vector<cplx>(L, centre)};
  Sampler sampler(seed);

  std::vector<int> momenta(L - 1);
  std::iota(momenta.begin(), momenta.end(), 1);
  std::stable_sort(momenta.begin(), momenta.end(),
                   [&](int a, int b) { return std::abs(2 * a - L) < std::abs(2 * b - L); });

  std::ostringstream trace;
  bool only_collisions = true;
  for (int attempt = 0; attempt < options.attempts; ++attempt) {
    Vector q(M);
    if (M <= L - 1) {
      std::vector<int> chosen;
      if (attempt == 0) {
        chosen.assign(momenta.begin(), momenta.begin() + M);
      } else {
        std::vector<int> pool(momenta);
        for (int k = 0; k < M; ++k) {
          const auto pick = static_cast<std::size_t>(sampler.uniform(0.0, 1.0) * double(pool.size()));
          const auto idx = std::min(pick, pool.size() - 1);
          chosen.push_back(pool[idx]);
          pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
        }
      }
      const double jitter = attempt == 0 ? 0.0 : std::min(1.0, 0.05 * attempt);
      for (int k = 0; k < M; ++k) {
        const cplx w = std::polar(1.0, 2.0 * M_PI * chosen[k] / L);
        q(k) = free_root(w, centre, regime) + jitter * cplx(sampler.normal(), sampler.normal());
      }
    } else {
      for (int k = 0; k < M; ++k) {
        q(k) = centre + 0.5 * regime.eta() + 0.7 * cplx(sampler.normal(), sampler.normal());
      }
    }

    std::string reason;
    if (attempt % 2 == 1) {
      // Direct attempt: Newton on the target chain from a random cloud
      // around the band centre, bypassing singular homogeneous solutions.
      Vector start(M);
      for (int k = 0; k < M; ++k) {
        start(k) = centre - 0.5 * regime.eta() + (0.5 + 0.05 * attempt) * cplx(sampler.normal(), sampler.normal());
      }
      auto solved = newton(start, lattice, regime, options);
      if (!solved) {
        reason = "no convergence from a direct start";
      } else {
        q = *solved;
        for (Eigen::Index k = 0; k < q.size(); ++k) q(k) = fold(q(k), centre, regime);
        reason = reject_reason(q, lattice, regime, centre, options);
      }
    } else {
      auto solved = newton(q, homogeneous, regime, options);
      if (!solved) {
        reason = "no convergence on the homogeneous chain";
      } else {
        q = *solved;
        for (Eigen::Index k = 0; k < q.size(); ++k) q(k) = fold(q(k), centre, regime);
        reason = reject_reason(q, homogeneous, regime, centre, options);
      }
      // Deform xi from the homogeneous chain to the target, halving the
      // step on failure.
      const double max_step = 1.0 / options.legs;
      const double min_step = max_step / 256.0;
      double s = 0.0, ds = max_step;
      while (reason.empty() && s < 1.0) {
        const double next = std::min(1.0, s + ds);
        LatticeSpec step{std::vector<cplx>(L)};
        for (int k = 0; k < L; ++k) step.xi[k] = centre + next * (lattice.xi[k] - centre);
        solved = newton(q, step, regime, options);
        std::string why;
        if (!solved) {
          why = "no convergence";
        } else {
          why = reject_reason(*solved, step, regime, centre, options);
        }
        if (why.empty()) {
          q = *solved;
          s = next;
          ds = std::min(max_step, 2.0 * ds);
        } else if (ds > min_step) {
          ds *= 0.5;
        } else {
          std::ostringstream os;
          os << why << " on the homotopy at s = " << next;
          reason = os.str();
        }
      }
    }
    if (reason.empty()) {
      out.q.assign(q.data(), q.data() + q.size());
      out.residual = max_bae_residual(out.q, lattice, regime);
      return out;
    }
    if (reason.rfind("collision", 0) != 0) only_collisions = false;
    trace << "\n  attempt " << attempt << ": " << reason;
  }
  const std::string msg = "Bethe solver failed for M = " + std::to_string(M) + ", L = " +
                          std::to_string(L) + " after " + std::to_string(options.attempts) +
                          " attempts:" + trace.str();
  if (only_collisions) throw RootCollisionError(msg);
  throw SolverFailure(msg);
}

Vector bethe_vector(std::span<const cplx> q, const LatticeSpec& lattice, const Regime& regime) {
  Vector ket = vacuum_state(lattice.L());
  for (auto it = q.rbegin(); it != q.rend(); ++it) ket = b_operator(*it, lattice, regime) * ket;
  return ket;
}

double verify_eigenstate(std::span<const cplx> q, const LatticeSpec& lattice, const Regime& regime,
                         std::span<const cplx> t_samples) {
  const Vector phi = bethe_vector(q, lattice, regime);
  const double norm = phi.norm();
  if (norm < 1e-12) throw DegenerateError("Bethe vector vanishes (norm below 1e-12)");
  double worst = 0.0;
  for (const cplx t : t_samples) {
    const cplx lambda = eigenvalue_lambda(t, q, lattice, regime);
    const Vector diff = transfer(t, lattice, regime) * phi - lambda * phi;
    worst = std::max(worst, diff.norm() / norm);
  }
  return worst;
}

std::string format_roots(const BetheRoots& roots) {
  std::ostringstream os;
  os << "# Bethe roots of the inhomogeneous six-vertex model\n";
  os << "L = " << roots.L() << '\n';
  os << "M = " << roots.M() << '\n';
  os << "regime = " << to_string(roots.family) << '\n';
  os << "eta = " << format_complex(roots.eta) << '\n';
  os << "xi = " << format_complex_list(roots.lattice.xi) << '\n';
  os << "q = " << format_complex_list(roots.q) << '\n';
  os << "residual = " << format_double(roots.residual) << '\n';
  return os.str();
}

BetheRoots parse_roots(const std::string& text) {
  const KeyValues kv = parse_key_values(text);
  const auto get = [&](const char* key) -> const std::string& {
    const auto it = kv.find(key);
    if (it == kv.end()) throw ConfigError(std::string("roots document lacks '") + key + "'");
    return it->second;
  };
  BetheRoots out;
  out.family = family_from_string(get("regime"));
  out.eta = parse_complex(get("eta"));
  out.lattice.xi = parse_complex_list(get("xi"));
  out.q = parse_complex_list(get("q"));
  out.residual = parse_double(get("residual"));
  if (parse_integer(get("L")) != out.L()) throw ConfigError("roots document: L does not match the xi list");
  if (parse_integer(get("M")) != out.M()) throw ConfigError("roots document: M does not match the q list");
  return out;
}

BetheRoots read_roots(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open roots file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_roots(ss.str());
}

bool same_problem(const BetheRoots& roots, const LatticeSpec& lattice, const Regime& regime,
                  double tol) {
  if (roots.family != regime.family() || std::abs(roots.eta - regime.eta()) > tol) return false;
  if (roots.L() != lattice.L()) return false;
  for (int k = 0; k < lattice.L(); ++k) {
    if (std::abs(roots.lattice.xi[k] - lattice.xi[k]) > tol) return false;
  }
  return true;
}

}  // namespace sixvertex
