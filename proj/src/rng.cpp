#include "xosim/rng.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace xosim {

std::vector<int> Rng::subset(int n, int k) {
  if (k < 0 || k > n) throw std::invalid_argument("Rng::subset: k out of range");
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  for (int i = 0; i < k; ++i) {
    int j = i + static_cast<int>(below(static_cast<uint64_t>(n - i)));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

std::vector<int> Rng::subset_of(const std::vector<int>& pool_in, int k) {
  int n = static_cast<int>(pool_in.size());
  if (k < 0 || k > n) throw std::invalid_argument("Rng::subset_of: k out of range");
  std::vector<int> pool = pool_in;
  for (int i = 0; i < k; ++i) {
    int j = i + static_cast<int>(below(static_cast<uint64_t>(n - i)));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace xosim
