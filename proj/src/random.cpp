#include "permharmonic/random.hpp"

#include <limits>
#include <numeric>
#include <utility>

namespace permharmonic {

std::uint64_t Rng::below(std::uint64_t bound) {
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - max % bound;
  std::uint64_t r;
  do {
    r = engine_();
  } while (r >= limit);
  return r % bound;
}

std::vector<double> Rng::vector(std::size_t n, double lo, double hi) {
  std::vector<double> v(n);
  for (auto &x : v)
    x = uniform(lo, hi);
  return v;
}

Permutation Rng::permutation(std::size_t n) {
  std::vector<std::uint32_t> map(n);
  std::iota(map.begin(), map.end(), 0u);
  for (std::size_t i = n; i > 1; --i)
    std::swap(map[i - 1], map[below(i)]);
  return Permutation::from_zero_based(std::move(map));
}

} // namespace permharmonic
