#pragma once

#include <vector>

#include "xosim/rng.hpp"
#include "xosim/valuation.hpp"

namespace xosim {

/// Battery defaults: clause count uniform in [t_min, t_max], support sizes
/// uniform in [max(1, m/4), min(m, 3m/4)].
struct BxosProfile {
  int m = 8;
  int t_min = 2, t_max = 8;
  int size_lo = 0, size_hi = 0;  // 0 = derive from m

  int lo() const { return size_lo > 0 ? size_lo : std::max(1, m / 4); }
  int hi() const { return size_hi > 0 ? size_hi : std::min(m, 3 * m / 4); }
};

Valuation random_bxos_valuation(const BxosProfile& profile, Rng& rng);

/// Integer-valued XOS: per-item values uniform in {0..v_max}.
struct XosProfile {
  int m = 8;
  int t_min = 2, t_max = 6;
  int v_max = 3;
};

Valuation random_xos_valuation(const XosProfile& profile, Rng& rng);

std::vector<Valuation> random_bxos_instance(const BxosProfile& profile, int players, Rng& rng);
std::vector<Valuation> random_xos_instance(const XosProfile& profile, int players, Rng& rng);

}  // namespace xosim
