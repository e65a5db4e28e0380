#include "sixvertex/config.hpp"

#include <set>

#include "sixvertex/errors.hpp"
#include "sixvertex/sampling.hpp"

namespace sixvertex {

namespace {
// Stream 0 of the run seed draws the lattice.
constexpr std::uint64_t kLatticeStream = 0;
}  // namespace

RunConfig parse_run_config(const KeyValues& kv) {
  static const std::set<std::string> known = {"regime", "eta",       "L",        "M",         "xi",
                                              "xi_spread", "xi_margin", "seed", "tolerance", "perm_cap", "output_dir"};
  for (const auto& [key, value] : kv) {
    if (!known.count(key)) throw ConfigError("unknown configuration key '" + key + "'");
  }
  RunConfig c;
  const auto has = [&](const char* k) { return kv.count(k) > 0; };
  if (has("regime")) c.family = family_from_string(kv.at("regime"));
  if (has("eta")) c.eta = parse_complex(kv.at("eta"));
  if (has("L")) c.L = static_cast<int>(parse_integer(kv.at("L")));
  if (has("M")) c.M = static_cast<int>(parse_integer(kv.at("M")));
  if (has("xi")) c.xi = parse_complex_list(kv.at("xi"));
  if (has("xi_spread")) c.xi_spread = parse_double(kv.at("xi_spread"));
  if (has("xi_margin")) c.xi_margin = parse_double(kv.at("xi_margin"));
  if (has("seed")) {
    const long long s = parse_integer(kv.at("seed"));
    if (s < 0) throw ConfigError("seed must be non-negative");
    c.seed = static_cast<std::uint64_t>(s);
  }
  if (has("tolerance")) c.tolerance = parse_double(kv.at("tolerance"));
  if (has("perm_cap")) c.perm_cap = static_cast<int>(parse_integer(kv.at("perm_cap")));
  if (has("output_dir")) c.output_dir = kv.at("output_dir");
  validate(c);
  return c;
}

RunConfig read_run_config(const std::string& path) { return parse_run_config(read_key_values(path)); }

void validate(const RunConfig& c) {
  if (c.L < 1 || c.L > 12) throw ConfigError("L must be in 1..12");
  if (c.M < 0 || c.M > c.L) throw ConfigError("M must satisfy 0 <= M <= L");
  if (c.tolerance && !(*c.tolerance > 0.0)) throw ConfigError("tolerance must be positive");
  if (c.xi && static_cast<int>(c.xi->size()) != c.L) throw ConfigError("xi list must have exactly L entries");
  if (!(c.xi_spread >= 0.0)) throw ConfigError("xi_spread must be non-negative");
  if (!(c.xi_margin > 0.0)) throw ConfigError("xi_margin must be positive");
  if (c.perm_cap < 0) throw ConfigError("perm_cap must be non-negative");
  try {
    (void)c.regime();
  } catch (const InvalidArgument& e) {
    throw ConfigError(e.what());
  }
}

LatticeSpec resolve_lattice(const RunConfig& c) {
  if (c.xi) return LatticeSpec{*c.xi};
  Sampler sampler(derive_seed(c.seed, kLatticeStream));
  return sampler.lattice(c.L, c.xi_spread, c.regime(), c.xi_margin);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace sixvertex
