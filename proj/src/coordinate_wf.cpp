#include "sixvertex/coordinate_wf.hpp"

#include <algorithm>
#include <sstream>

#include "sixvertex/bethe.hpp"
#include "sixvertex/keyvalue.hpp"

namespace sixvertex {

namespace {

// phi table: phi[j][x - 1] = phi_{q_j}(x).
std::vector<std::vector<cplx>> phi_table(std::span<const cplx> q, const LatticeSpec& lattice,
                                         const Regime& regime) {
  std::vector<std::vector<cplx>> table(q.size(), std::vector<cplx>(lattice.L()));
  for (std::size_t j = 0; j < q.size(); ++j) {
    for (int x = 1; x <= lattice.L(); ++x) table[j][x - 1] = phi_factor(x, q[j], lattice, regime);
  }
  return table;
}

void check_sizes(const Configuration& x, std::span<const cplx> q, const LatticeSpec& lattice) {
  if (x.L() != lattice.L()) throw InvalidArgument("configuration and lattice have different L");
  if (x.M() != static_cast<int>(q.size())) throw InvalidArgument("configuration and roots have different M");
}

template <typename Filter>
cplx permutation_sum(const Configuration& x, std::span<const cplx> q, const LatticeSpec& lattice,
                     const Regime& regime, int cap, Filter keep) {
  check_sizes(x, q, lattice);
  check_permutation_cap(x.M(), cap);
  const auto phi = phi_table(q, lattice, regime);
  cplx total = 0.0;
  for_each_permutation(x.M(), [&](const std::vector<int>& p) {
    if (!keep(p)) return;
    cplx term = amplitude(p, q, regime);
    for (int i = 0; i < x.M(); ++i) term *= phi[p[i]][x[i] - 1];
    total += term;
  });
  return total;
}

}  // namespace

Configuration::Configuration(int L, std::vector<int> sites) : L_(L), sites_(std::move(sites)) {
  if (L < 1) throw InvalidArgument("configuration needs L >= 1");
  for (std::size_t k = 0; k < sites_.size(); ++k) {
    if (sites_[k] < 1 || sites_[k] > L) {
      throw InvalidArgument("site " + std::to_string(sites_[k]) + " out of range 1.." + std::to_string(L));
    }
    if (k > 0 && sites_[k] <= sites_[k - 1]) {
      throw InvalidArgument("configuration must be strictly increasing");
    }
  }
}

std::vector<Configuration> enumerate_configurations(int L, int M) {
  if (M < 0 || M > L) throw InvalidArgument("need 0 <= M <= L");
  std::vector<Configuration> out;
  std::vector<int> x(M);
  std::iota(x.begin(), x.end(), 1);
  while (true) {
    out.emplace_back(L, x);
    int k = M - 1;
    while (k >= 0 && x[k] == L - (M - 1 - k)) --k;
    if (k < 0) break;
    ++x[k];
    for (int j = k + 1; j < M; ++j) x[j] = x[j - 1] + 1;
  }
  return out;
}

std::string to_string(Provenance p) { return p == Provenance::Formula ? "formula" : "oracle"; }

cplx phi_factor(int x, cplx q, const LatticeSpec& lattice, const Regime& regime) {
  if (x < 1 || x > lattice.L()) throw InvalidArgument("site out of range");
  cplx v = regime.b_tilde(lattice.at(x) - q);
  for (int l = x + 1; l <= lattice.L(); ++l) v *= regime.c_tilde(lattice.at(l) - q);
  return v;
}

cplx phi_factor_alt(int x, cplx q, const LatticeSpec& lattice, const Regime& regime) {
  if (x < 1 || x > lattice.L()) throw InvalidArgument("site out of range");
  cplx full = 1.0;
  for (int l = 1; l <= lattice.L(); ++l) full *= regime.c_tilde(lattice.at(l) - q);
  cplx head = 1.0;
  for (int l = 1; l < x; ++l) head *= regime.c_tilde_inv(lattice.at(l) - q);
  const cplx local = regime.c_tilde_inv(lattice.at(x) - q) * regime.b_tilde(lattice.at(x) - q);
  return full * local * head;
}

cplx amplitude(const std::vector<int>& perm, std::span<const cplx> q, const Regime& regime) {
  if (perm.size() != q.size() || !is_permutation_of_range(perm)) {
    throw InvalidArgument("amplitude needs a permutation of the root indices");
  }
  cplx a = 1.0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) a *= regime.c_tilde_inv(q[perm[i]] - q[perm[j]]);
  }
  return a;
}

cplx psi_formula(const Configuration& x, std::span<const cplx> q, const LatticeSpec& lattice,
                 const Regime& regime, int cap) {
  return permutation_sum(x, q, lattice, regime, cap, [](const std::vector<int>&) { return true; });
}

cplx psi_formula_partial(const Configuration& x, std::span<const cplx> q, const LatticeSpec& lattice,
                         const Regime& regime, int last, int cap) {
  if (x.M() == 0) return psi_formula(x, q, lattice, regime, cap);
  if (last < 0 || last >= x.M()) throw InvalidArgument("partition index out of range");
  return permutation_sum(x, q, lattice, regime, cap,
                         [&](const std::vector<int>& p) { return p.back() == last; });
}

cplx psi_oracle(const Configuration& x, std::span<const cplx> q, const LatticeSpec& lattice,
                const Regime& regime) {
  check_sizes(x, q, lattice);
  return bethe_vector(q, lattice, regime)(x.state().bits());
}

WaveTable wave_table_formula(std::span<const cplx> q, const LatticeSpec& lattice, const Regime& regime,
                             int cap) {
  WaveTable t{lattice.L(), static_cast<int>(q.size()), Provenance::Formula, {}};
  for (auto& x : enumerate_configurations(t.L, t.M)) {
    const cplx v = psi_formula(x, q, lattice, regime, cap);
    t.entries.push_back({std::move(x), v});
  }
  return t;
}

WaveTable wave_table_oracle(std::span<const cplx> q, const LatticeSpec& lattice, const Regime& regime) {
  WaveTable t{lattice.L(), static_cast<int>(q.size()), Provenance::Oracle, {}};
  const Vector phi = bethe_vector(q, lattice, regime);
  for (auto& x : enumerate_configurations(t.L, t.M)) {
    const cplx v = phi(x.state().bits());
    t.entries.push_back({std::move(x), v});
  }
  return t;
}

RatioStatistic formula_oracle_ratio(const WaveTable& formula, const WaveTable& oracle) {
  if (formula.entries.size() != oracle.entries.size()) throw InvalidArgument("wave tables differ in size");
  double scale = 0.0;
  for (const auto& e : oracle.entries) scale = std::max(scale, std::abs(e.amplitude));
  RatioStatistic stat;
  if (scale == 0.0) throw DegenerateError("oracle wave function vanishes identically");
  std::vector<cplx> ratios;
  for (std::size_t k = 0; k < oracle.entries.size(); ++k) {
    if (!(formula.entries[k].x == oracle.entries[k].x)) throw InvalidArgument("wave tables misaligned");
    const cplx o = oracle.entries[k].amplitude;
    if (std::abs(o) < 1e-12 * scale) {
      ++stat.excluded;
      continue;
    }
    ratios.push_back(formula.entries[k].amplitude / o);
  }
  stat.used = static_cast<int>(ratios.size());
  stat.ratio = ratios.front();
  for (const cplx r : ratios) stat.spread = std::max(stat.spread, std::abs(r - stat.ratio) / std::abs(stat.ratio));
  return stat;
}

PeriodicityResult check_periodicity(std::span<const cplx> q, const LatticeSpec& lattice,
                                    const Regime& regime, int cap) {
  const int M = static_cast<int>(q.size());
  check_permutation_cap(M, cap);
  PeriodicityResult out{0.0, max_bae_residual(q, lattice, regime)};
  if (M == 0) return out;
  std::vector<cplx> inv_a(M, 1.0);
  for (int j = 0; j < M; ++j) {
    for (const cplx xi : lattice.xi) inv_a[j] *= regime.c_tilde_inv(xi - q[j]);
  }
  for_each_permutation(M, [&](const std::vector<int>& p) {
    // (PC)(i) = P(C(i)) with C: i -> i + 1 cyclically.
    std::vector<int> pc(M);
    for (int i = 0; i < M; ++i) pc[i] = p[(i + 1) % M];
    const cplx lhs = amplitude(p, q, regime) / amplitude(pc, q, regime);
    out.amplitude_residual = std::max(out.amplitude_residual, std::abs(lhs - inv_a[p[0]]));
  });
  return out;
}

std::string format_wave_tables(const std::vector<WaveTable>& tables) {
  if (tables.empty()) return {};
  std::ostringstream os;
  for (int k = 1; k <= tables.front().M; ++k) os << 'x' << k << ' ';
  os << "re im provenance\n";
  for (const auto& t : tables) {
    for (const auto& e : t.entries) {
      for (int site : e.x.sites()) os << site << ' ';
      os << format_double(e.amplitude.real()) << ' ' << format_double(e.amplitude.imag()) << ' '
         << to_string(t.provenance) << '\n';
    }
  }
  return os.str();
}

}  // namespace sixvertex
