#include "permharmonic/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace permharmonic {

namespace {

void check_bijection(const std::vector<std::uint32_t> &map) {
  if (map.empty())
    throw std::invalid_argument("permutation degree must be at least 1");
  std::vector<bool> seen(map.size(), false);
  for (auto v : map) {
    if (v >= map.size() || seen[v])
      throw std::invalid_argument("images do not form a bijection of {1, ..., " +
                                  std::to_string(map.size()) + "}");
    seen[v] = true;
  }
}

} // namespace

Permutation Permutation::identity(std::size_t n) {
  if (n == 0)
    throw std::invalid_argument("permutation degree must be at least 1");
  std::vector<std::uint32_t> map(n);
  std::iota(map.begin(), map.end(), 0u);
  return Permutation(std::move(map));
}

Permutation Permutation::adjacent(std::size_t n, std::size_t k) {
  if (k < 1 || k + 1 > n)
    throw std::invalid_argument("adjacent transposition tau_" + std::to_string(k) +
                                " is not defined in S_" + std::to_string(n));
  auto p = identity(n);
  std::swap(p.map_[k - 1], p.map_[k]);
  return p;
}

Permutation Permutation::from_images(std::span<const std::size_t> images) {
  std::vector<std::uint32_t> map;
  map.reserve(images.size());
  for (auto v : images) {
    if (v < 1 || v > images.size())
      throw std::invalid_argument("image " + std::to_string(v) +
                                  " out of range for degree " +
                                  std::to_string(images.size()));
    map.push_back(static_cast<std::uint32_t>(v - 1));
  }
  check_bijection(map);
  return Permutation(std::move(map));
}

Permutation Permutation::from_images(std::initializer_list<std::size_t> images) {
  return from_images(std::span<const std::size_t>(images.begin(), images.size()));
}

Permutation Permutation::from_zero_based(std::vector<std::uint32_t> images) {
  check_bijection(images);
  return Permutation(std::move(images));
}

std::size_t Permutation::operator()(std::size_t i) const {
  if (i < 1 || i > map_.size())
    throw std::out_of_range("point " + std::to_string(i) + " outside {1, ..., " +
                            std::to_string(map_.size()) + "}");
  return map_[i - 1] + 1;
}

std::vector<std::size_t> Permutation::images() const {
  std::vector<std::size_t> out;
  out.reserve(map_.size());
  for (auto v : map_)
    out.push_back(v + 1);
  return out;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < map_.size(); ++i)
    if (map_[i] != i)
      return false;
  return true;
}

int Permutation::sign() const {
  // parity of (n - number of cycles)
  std::vector<bool> visited(map_.size(), false);
  std::size_t cycles = 0;
  for (std::size_t i = 0; i < map_.size(); ++i) {
    if (visited[i])
      continue;
    ++cycles;
    for (std::size_t j = i; !visited[j]; j = map_[j])
      visited[j] = true;
  }
  return (map_.size() - cycles) % 2 == 0 ? 1 : -1;
}

Permutation compose(const Permutation &a, const Permutation &b) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("compose: degree mismatch (" +
                                std::to_string(a.degree()) + " vs " +
                                std::to_string(b.degree()) + ")");
  const auto &am = a.zero_based();
  const auto &bm = b.zero_based();
  std::vector<std::uint32_t> out(am.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = am[bm[i]];
  return Permutation::from_zero_based(std::move(out));
}

Permutation inverse(const Permutation &sigma) {
  const auto &m = sigma.zero_based();
  std::vector<std::uint32_t> out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    out[m[i]] = static_cast<std::uint32_t>(i);
  return Permutation::from_zero_based(std::move(out));
}

std::vector<double> apply_to_vector(const Permutation &sigma,
                                    std::span<const double> x) {
  return apply_to_vector<double>(sigma, x);
}

AdjacentWord decompose_adjacent(const Permutation &sigma) {
  // Swapping positions k, k+1 of the image tuple of rho gives rho o tau_k.
  // Bubble sort drives sigma o tau_{a_1} o ... o tau_{a_m} to the identity,
  // hence sigma = tau_{a_m} o ... o tau_{a_1}.
  auto tuple = sigma.zero_based();
  std::vector<std::size_t> swaps;
  const std::size_t n = tuple.size();
  for (std::size_t pass = 0; pass + 1 < n; ++pass) {
    bool swapped = false;
    for (std::size_t i = 0; i + 1 < n - pass; ++i) {
      if (tuple[i] > tuple[i + 1]) {
        std::swap(tuple[i], tuple[i + 1]);
        swaps.push_back(i + 1);
        swapped = true;
      }
    }
    if (!swapped)
      break;
  }
  AdjacentWord word;
  word.degree = n;
  word.indices.assign(swaps.rbegin(), swaps.rend());
  return word;
}

Permutation evaluate(const AdjacentWord &word) {
  auto map = Permutation::identity(word.degree).zero_based();
  // Right-multiplying by tau_k swaps positions k, k+1.
  for (auto k : word.indices) {
    if (k < 1 || k + 1 > word.degree)
      throw std::invalid_argument("word letter " + std::to_string(k) +
                                  " out of range for degree " +
                                  std::to_string(word.degree));
    std::swap(map[k - 1], map[k]);
  }
  return Permutation::from_zero_based(std::move(map));
}

std::size_t oracle_cap() {
  if (const char *env = std::getenv("PERMHARMONIC_ORACLE_CAP")) {
    std::size_t value = 0;
    const char *end = env + std::char_traits<char>::length(env);
    auto [ptr, ec] = std::from_chars(env, end, value);
    if (ec == std::errc() && ptr == end && value > 0)
      return value;
  }
  return kDefaultOracleCap;
}

OracleCapExceeded::OracleCapExceeded(std::size_t n, std::size_t cap)
    : std::invalid_argument("n = " + std::to_string(n) +
                            " exceeds the oracle cap of " + std::to_string(cap) +
                            " (set PERMHARMONIC_ORACLE_CAP to raise it)") {}

void for_each_permutation(std::size_t n,
                          const std::function<void(const Permutation &)> &visit) {
  if (n > oracle_cap())
    throw OracleCapExceeded(n, oracle_cap());
  auto map = Permutation::identity(n).zero_based();
  do {
    visit(Permutation::from_zero_based(map));
  } while (std::next_permutation(map.begin(), map.end()));
}

std::vector<Permutation> enumerate_group(std::size_t n) {
  std::vector<Permutation> out;
  for_each_permutation(n, [&](const Permutation &p) { out.push_back(p); });
  return out;
}

Permutation parse_permutation(std::string_view text) {
  std::vector<std::size_t> images;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == ' ' || c == '\t' || c == ',' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
    if (ec != std::errc() || ptr == text.data() + i)
      throw std::invalid_argument("cannot parse permutation \"" + std::string(text) +
                                  "\"");
    images.push_back(value);
    i = static_cast<std::size_t>(ptr - text.data());
  }
  return Permutation::from_images(images);
}

std::string to_string(const Permutation &sigma) {
  std::ostringstream os;
  os << sigma;
  return os.str();
}

std::ostream &operator<<(std::ostream &os, const Permutation &sigma) {
  const auto &m = sigma.zero_based();
  for (std::size_t i = 0; i < m.size(); ++i)
    os << (i ? " " : "") << m[i] + 1;
  return os;
}

} // namespace permharmonic
