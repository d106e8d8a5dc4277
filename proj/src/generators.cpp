#include "xosim/generators.hpp"

#include <stdexcept>

namespace xosim {

Valuation random_bxos_valuation(const BxosProfile& profile, Rng& rng) {
  if (profile.m < 1 || profile.t_min < 1 || profile.t_max < profile.t_min)
    throw std::invalid_argument("random_bxos_valuation: bad profile");
  int t = static_cast<int>(rng.range(profile.t_min, profile.t_max));
  std::vector<Clause> clauses;
  clauses.reserve(t);
  for (int j = 0; j < t; ++j) {
    int size = static_cast<int>(rng.range(profile.lo(), profile.hi()));
    clauses.emplace_back(ItemSet::from_indices(profile.m, rng.subset(profile.m, size)));
  }
  return Valuation(std::move(clauses));
}

Valuation random_xos_valuation(const XosProfile& profile, Rng& rng) {
  if (profile.m < 1 || profile.t_min < 1 || profile.t_max < profile.t_min || profile.v_max < 1)
    throw std::invalid_argument("random_xos_valuation: bad profile");
  int t = static_cast<int>(rng.range(profile.t_min, profile.t_max));
  std::vector<Clause> clauses;
  clauses.reserve(t);
  for (int j = 0; j < t; ++j) {
    std::vector<double> vals(profile.m);
    for (int i = 0; i < profile.m; ++i)
      vals[i] = static_cast<double>(rng.range(0, profile.v_max));
    clauses.emplace_back(std::move(vals));
  }
  return Valuation(std::move(clauses));
}

std::vector<Valuation> random_bxos_instance(const BxosProfile& profile, int players, Rng& rng) {
  std::vector<Valuation> vals;
  vals.reserve(players);
  for (int l = 0; l < players; ++l) vals.push_back(random_bxos_valuation(profile, rng));
  return vals;
}

std::vector<Valuation> random_xos_instance(const XosProfile& profile, int players, Rng& rng) {
  std::vector<Valuation> vals;
  vals.reserve(players);
  for (int l = 0; l < players; ++l) vals.push_back(random_xos_valuation(profile, rng));
  return vals;
}

}  // namespace xosim
