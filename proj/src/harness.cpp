#include "sixvertex/harness.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <limits>
#include <optional>
#include <sstream>

#include "json.hpp"
#include "sixvertex/dwbc.hpp"
#include "sixvertex/f_basis.hpp"
#include "sixvertex/sampling.hpp"
#include "sixvertex/vertex_model.hpp"

namespace sixvertex {

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  double residual;
  std::string parameters;
  bool extra_ok = true;  // side conditions beyond residual <= tolerance
};

struct CheckSpec {
  std::string name;
  double default_tolerance;
};

// Execution order of run_verify; also the registry.
const std::vector<CheckSpec>& check_specs() {
  static const std::vector<CheckSpec> specs = {
      {"unitarity", 1e-12},
      {"yang_baxter", 1e-12},
      {"vacuum_actions", 1e-12},
      {"f_factorization", 1e-10},
      {"f_matrix_elements", 1e-10},
      {"af_conjugation", 1e-10},
      {"bf_conjugation", 1e-10},
      {"cf_conjugation", 1e-10},
      {"commutation_ab", 1e-10},
      {"exchange_aa", 1e-10},
      {"bae_solve", 1e-12},
      {"eigenvector", 1e-9},
      {"wavefunction_formula_vs_oracle", 1e-9},
      {"nphi_identity", 1e-12},
      {"periodicity_ba", 1e-9},
      {"dwbc_sum_vs_recurrence", 1e-10},
  };
  return specs;
}

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(6) << v;
  return os.str();
}

// Spectral parameter away from weight poles and from the roots.
cplx sample_t(Sampler& s, const LatticeSpec& lattice, const Regime& regime, const std::vector<cplx>& roots) {
  while (true) {
    const cplx t = s.spectral(lattice, regime, 1.0, kSweepMargin);
    bool ok = true;
    for (const cplx q : roots) {
      if (std::abs(regime.phi(q - t)) < 1e-3 || std::abs(regime.phi(t - q + regime.eta())) < 1e-3 ||
          std::abs(regime.phi(q - t + regime.eta())) < 1e-3) {
        ok = false;
      }
    }
    if (ok) return t;
  }
}

class Verifier {
 public:
  Verifier(const RunConfig& config, const LatticeSpec& lattice)
      : config_(config), regime_(config.regime()), lattice_(lattice) {}

  Outcome run(std::size_t index) {
    Sampler s(derive_seed(config_.seed, 100 + index));
    switch (index) {
      case 0: return unitarity(s);
      case 1: return yang_baxter(s);
      case 2: return vacuum(s);
      case 3: return factorization();
      case 4: return matrix_elements();
      case 5: return conjugation(s, 'A');
      case 6: return conjugation(s, 'B');
      case 7: return conjugation(s, 'C');
      case 8: return commutation(s);
      case 9: return exchange();
      case 10: return solve();
      case 11: return eigenvector(s);
      case 12: return wavefunction();
      case 13: return nphi(s);
      case 14: return periodicity(s);
      case 15: return dwbc(s);
    }
    throw std::logic_error("unregistered check index");
  }

 private:
  const FactorizingOperator& f() {
    if (!f_) f_ = build_f(lattice_, regime_);
    return *f_;
  }

  const std::vector<cplx>& roots() {
    if (!roots_) throw SolverFailure("no Bethe roots available (bae_solve failed)");
    return *roots_;
  }

  Outcome unitarity(Sampler& s) {
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
      const cplx t1 = s.complex_box(0.0, 2.0), t2 = s.complex_box(0.0, 2.0);
      if (std::abs(regime_.phi(t1 - t2 + regime_.eta())) < kGenericityGuard ||
          std::abs(regime_.phi(t2 - t1 + regime_.eta())) < kGenericityGuard) {
        --k;
        continue;
      }
      worst = std::max(worst, unitarity_residual(t1, t2, regime_));
    }
    return {worst, "100 random pairs"};
  }

  Outcome yang_baxter(Sampler& s) {
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
      const cplx t[3] = {s.complex_box(0.0, 2.0), s.complex_box(0.0, 2.0), s.complex_box(0.0, 2.0)};
      bool ok = true;
      for (int a = 0; a < 3; ++a) {
        for (int b = 0; b < 3; ++b) {
          if (a != b && std::abs(regime_.phi(t[a] - t[b] + regime_.eta())) < kGenericityGuard) ok = false;
        }
      }
      if (!ok) {
        --k;
        continue;
      }
      worst = std::max(worst, yang_baxter_residual(t[0], t[1], t[2], regime_));
    }
    return {worst, "100 random triples"};
  }

  Outcome vacuum(Sampler& s) {
    double worst = 0.0;
    for (int k = 0; k < 5; ++k) worst = std::max(worst, vacuum_action_residual(s.spectral(lattice_, regime_, 1.0, kSweepMargin), lattice_, regime_));
    return {worst, "5 random t"};
  }

  Outcome factorization() {
    double worst = 0.0;
    for (int i = 1; i < lattice_.L(); ++i) worst = std::max(worst, check_factorization(lattice_, regime_, i));
    return {worst, "every adjacent transposition"};
  }

  Outcome matrix_elements() { return {f_matrix_element_residual(f(), lattice_, regime_), "all occupation sets"}; }

  Outcome conjugation(Sampler& s, char which) {
    double worst = 0.0;
    for (int k = 0; k < 5; ++k) {
      const cplx t = s.spectral(lattice_, regime_, 1.0, kSweepMargin);
      const MonodromyEntries e = monodromy_entries(t, lattice_, regime_);
      switch (which) {
        case 'A': worst = std::max(worst, max_abs_diff(f().conjugate(e.A), af_closed(t, lattice_, regime_))); break;
        case 'B': worst = std::max(worst, max_abs_diff(f().conjugate(e.B), bf_closed(t, lattice_, regime_))); break;
        default: worst = std::max(worst, max_abs_diff(f().conjugate(e.C), cf_closed(t, lattice_, regime_))); break;
      }
    }
    return {worst, "5 random t"};
  }

  Outcome commutation(Sampler& s) {
    double worst = 0.0;
    for (int k = 0; k < 10; ++k) {
      const cplx t = s.spectral(lattice_, regime_, 1.0, kSweepMargin), tp = s.spectral(lattice_, regime_, 1.0, kSweepMargin);
      for (int i = 1; i <= lattice_.L(); ++i) worst = std::max(worst, commutation_residual(i, t, tp, lattice_, regime_));
    }
    return {worst, "all sites, 10 random (t, t') pairs"};
  }

  Outcome exchange() {
    double worst = 0.0;
    for (int i = 1; i <= lattice_.L(); ++i) {
      for (int j = 1; j <= lattice_.L(); ++j) {
        if (i != j) worst = std::max(worst, check_exchange(i, j, lattice_, regime_));
      }
    }
    return {worst, "all ordered pairs i != j at t = 0"};
  }

  Outcome solve() {
    const BetheRoots r = solve_bae(config_.M, lattice_, regime_, derive_seed(config_.seed, 1));
    roots_ = r.q;
    return {r.residual, "M = " + std::to_string(config_.M) + ", q = [" + format_complex_list(r.q) + "]"};
  }

  Outcome eigenvector(Sampler& s) {
    std::vector<cplx> ts;
    for (int k = 0; k < 3; ++k) ts.push_back(sample_t(s, lattice_, regime_, roots()));
    return {verify_eigenstate(roots(), lattice_, regime_, ts), "3 random t"};
  }

  Outcome wavefunction() {
    const WaveTable formula = wave_table_formula(roots(), lattice_, regime_, config_.perm_cap);
    const WaveTable oracle = wave_table_oracle(roots(), lattice_, regime_);
    const RatioStatistic r = formula_oracle_ratio(formula, oracle);
    return {r.spread, "ratio = " + format_complex(r.ratio) + ", configurations used " + std::to_string(r.used) +
                          ", excluded " + std::to_string(r.excluded)};
  }

  Outcome nphi(Sampler& s) {
    std::vector<cplx> qs = roots();
    for (int k = 0; k < 5; ++k) qs.push_back(sample_t(s, lattice_, regime_, {}));
    double worst = 0.0;
    for (const cplx q : qs) {
      for (int x = 1; x <= lattice_.L(); ++x) {
        const cplx a = phi_factor(x, q, lattice_, regime_);
        const cplx b = phi_factor_alt(x, q, lattice_, regime_);
        worst = std::max(worst, std::abs(a - b) / std::abs(a));
      }
    }
    return {worst, "solved roots plus 5 random q, every site"};
  }

  Outcome periodicity(Sampler& s) {
    const std::vector<cplx>& q = roots();
    const PeriodicityResult at_roots = check_periodicity(q, lattice_, regime_, config_.perm_cap);
    std::vector<cplx> direction;
    for (std::size_t k = 0; k < q.size(); ++k) direction.push_back(std::polar(1.0, s.uniform(0.0, 2.0 * M_PI)));
    bool covanish = true;
    double perturbed = std::numeric_limits<double>::infinity();
    for (const double eps : {0.0, 1e-4, 1e-3, 1e-2, 1e-1}) {
      std::vector<cplx> qp(q);
      for (std::size_t k = 0; k < q.size(); ++k) qp[k] += eps * direction[k];
      const PeriodicityResult r = check_periodicity(qp, lattice_, regime_, config_.perm_cap);
      if ((r.amplitude_residual < 1e-9) != (r.bae_residual < 1e-9)) covanish = false;
      if (eps == 1e-1) perturbed = r.amplitude_residual;
    }
    const bool perturbed_ok = q.empty() || (perturbed > 1e-3 && std::isfinite(perturbed));
    return {at_roots.amplitude_residual,
            "bae residual " + fmt(at_roots.bae_residual) + ", perturbed(0.1) residual " + fmt(perturbed) +
                ", co-vanishing " + (covanish ? "yes" : "no"),
            covanish && perturbed_ok};
  }

  Outcome dwbc(Sampler& s) {
    const int top = std::min(7, config_.perm_cap);
    double worst = 0.0;
    for (int M = 1; M <= top; ++M) {
      for (int k = 0; k < 5; ++k) {
        auto [mu, q] = s.dwbc_parameters(M, regime_, kSweepBox, kSweepMargin);
        const DwbcInput in(std::move(mu), std::move(q), regime_);
        const cplx a = phi_sum(in, config_.perm_cap);
        const cplx b = phi_recurrence(in);
        worst = std::max(worst, std::abs(a - b) / std::abs(a));
      }
    }
    return {worst, "M = 1.." + std::to_string(top) + ", 5 random inputs each"};
  }

  RunConfig config_;
  Regime regime_;
  LatticeSpec lattice_;
  std::optional<FactorizingOperator> f_;
  std::optional<std::vector<cplx>> roots_;
};

nlohmann::json config_json(const RunConfig& c) {
  nlohmann::json j;
  j["regime"] = to_string(c.family);
  j["eta"] = format_complex(c.eta);
  j["L"] = c.L;
  j["M"] = c.M;
  j["xi_source"] = c.xi ? "explicit" : "random";
  j["xi_spread"] = c.xi_spread;
  j["xi_margin"] = c.xi_margin;
  j["seed"] = c.seed;
  j["tolerance_override"] = c.tolerance ? nlohmann::json(*c.tolerance) : nlohmann::json(nullptr);
  j["perm_cap"] = c.perm_cap;
  return j;
}

nlohmann::json residual_json(double v) {
  if (std::isfinite(v)) return v;
  return std::isnan(v) ? "nan" : "inf";
}

}  // namespace

bool CheckReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.passed; });
}

const std::vector<std::string>& registered_checks() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& spec : check_specs()) out.push_back(spec.name);
    return out;
  }();
  return names;
}

CheckReport run_verify(const RunConfig& config) {
  validate(config);
  CheckReport report{config, resolve_lattice(config), {}};
  Verifier verifier(config, report.lattice);
  for (std::size_t k = 0; k < check_specs().size(); ++k) {
    const auto& spec = check_specs()[k];
    CheckRecord rec;
    rec.name = spec.name;
    rec.tolerance = config.tolerance.value_or(spec.default_tolerance);
    const auto start = Clock::now();
    try {
      const Outcome out = verifier.run(k);
      rec.max_residual = out.residual;
      rec.parameters = out.parameters;
      rec.passed = out.extra_ok && out.residual <= rec.tolerance;
    } catch (const std::exception& e) {
      rec.max_residual = std::numeric_limits<double>::infinity();
      rec.error = e.what();
      rec.passed = false;
    }
    rec.wall_time_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    report.checks.push_back(std::move(rec));
  }
  return report;
}

std::string report_json(const CheckReport& report, bool include_timing) {
  nlohmann::json j;
  j["config"] = config_json(report.config);
  std::vector<std::string> xi;
  for (const cplx v : report.lattice.xi) xi.push_back(format_complex(v));
  j["lattice"]["xi"] = xi;
  j["checks"] = nlohmann::json::array();
  for (const auto& c : report.checks) {
    nlohmann::json r;
    r["name"] = c.name;
    r["parameters"] = c.parameters;
    r["max_residual"] = residual_json(c.max_residual);
    r["tolerance"] = c.tolerance;
    r["passed"] = c.passed;
    if (!c.error.empty()) r["error"] = c.error;
    if (include_timing) r["wall_time_ms"] = c.wall_time_ms;
    j["checks"].push_back(std::move(r));
  }
  j["all_passed"] = report.all_passed();
  return j.dump(2) + "\n";
}

std::string report_table(const CheckReport& report) {
  std::ostringstream os;
  os << "regime " << to_string(report.config.family) << ", eta " << format_complex(report.config.eta) << ", L "
     << report.config.L << ", M " << report.config.M << ", seed " << report.config.seed << "\n";
  os << std::left << std::setw(34) << "check" << std::setw(14) << "residual" << std::setw(10) << "tol"
     << std::setw(6) << "ok" << "ms\n";
  for (const auto& c : report.checks) {
    os << std::left << std::setw(34) << c.name << std::setw(14) << fmt(c.max_residual) << std::setw(10)
       << fmt(c.tolerance) << std::setw(6) << (c.passed ? "PASS" : "FAIL") << std::fixed << std::setprecision(1)
       << c.wall_time_ms << std::defaultfloat << "\n";
    if (!c.error.empty()) os << "    error: " << c.error << "\n";
  }
  os << (report.all_passed() ? "all checks passed\n" : "some checks FAILED\n");
  return os.str();
}

void write_report(const CheckReport& report) {
  const std::filesystem::path dir(report.config.output_dir);
  std::filesystem::create_directories(dir);
  write_file_atomic((dir / "report.json").string(), report_json(report));
  write_file_atomic((dir / "report.txt").string(), report_table(report));
}

BetheRoots run_solve(const RunConfig& config) {
  validate(config);
  return solve_bae(config.M, resolve_lattice(config), config.regime(), derive_seed(config.seed, 1));
}

WavefunctionResult run_wavefunction(const RunConfig& config, const std::string& roots_path,
                                    const std::string& out_path) {
  validate(config);
  const BetheRoots roots = read_roots(roots_path);
  const LatticeSpec lattice = resolve_lattice(config);
  const Regime regime = config.regime();
  if (!same_problem(roots, lattice, regime) || roots.M() != config.M) {
    throw ConfigError("roots in '" + roots_path + "' were solved for a different lattice, regime or M");
  }
  WavefunctionResult out{wave_table_formula(roots.q, lattice, regime, config.perm_cap),
                         wave_table_oracle(roots.q, lattice, regime), {}};
  out.ratio = formula_oracle_ratio(out.formula, out.oracle);
  std::string text = format_wave_tables({out.formula, out.oracle});
  text += "# ratio formula/oracle = " + format_complex(out.ratio.ratio) + ", relative spread " +
          format_double(out.ratio.spread) + ", configurations used " + std::to_string(out.ratio.used) + "\n";
  write_file_atomic(out_path, text);
  return out;
}

DwbcResult run_dwbc(const RunConfig& config) {
  validate(config);
  const Regime regime = config.regime();
  Sampler s(derive_seed(config.seed, 2));
  const auto [mu, q] = s.dwbc_parameters(config.M, regime, kSweepBox, kSweepMargin);
  const DwbcInput input(mu, q, regime);
  DwbcResult r;
  r.M = config.M;
  auto start = Clock::now();
  r.sum = phi_sum(input, config.perm_cap);
  r.sum_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  start = Clock::now();
  r.recurrence = phi_recurrence(input);
  r.recurrence_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  r.relative_difference = std::abs(r.sum - r.recurrence) / std::abs(r.sum);

  const std::vector<int> sigma = s.permutation(config.M);
  std::vector<cplx> mu_perm(config.M);
  for (int j = 0; j < config.M; ++j) mu_perm[j] = mu[sigma[j]];
  const cplx permuted = phi_recurrence(DwbcInput(mu_perm, q, regime));
  r.row_symmetry_defect = std::abs(permuted - r.recurrence) / std::abs(r.recurrence);
  return r;
}

}  // namespace sixvertex
