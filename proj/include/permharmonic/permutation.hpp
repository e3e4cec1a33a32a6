#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace permharmonic {

/**
 * An element of the symmetric group S_n in one-line image notation.
 *
 * Conventions used by every public function in this library:
 *   - Points are 1-based: a permutation of degree n acts on {1, ..., n}, and
 *     `operator()(i)` returns sigma(i) for 1 <= i <= n.
 *   - Composition is right-to-left: compose(a, b)(i) = a(b(i)).
 *
 * Storage is 0-based (`zero_based()[i] == sigma(i + 1) - 1`) so inner loops
 * can index directly; nothing outside this class needs to know that.
 */
class Permutation {
public:
  /// Identity of degree n (n >= 1).
  static Permutation identity(std::size_t n);

  /// Adjacent transposition tau_k = (k, k+1) in S_n, 1 <= k <= n-1.
  static Permutation adjacent(std::size_t n, std::size_t k);

  /**
   * Builds from 1-based images, images[i-1] = sigma(i).
   * Throws std::invalid_argument unless the images are a bijection of
   * {1, ..., n} with n >= 1.
   */
  static Permutation from_images(std::span<const std::size_t> images);
  static Permutation from_images(std::initializer_list<std::size_t> images);

  /// Same as from_images but with 0-based images.
  static Permutation from_zero_based(std::vector<std::uint32_t> images);

  std::size_t degree() const { return map_.size(); }

  /// sigma(i), 1-based in and out.
  std::size_t operator()(std::size_t i) const;

  /// 1-based image list, suitable for printing.
  std::vector<std::size_t> images() const;

  const std::vector<std::uint32_t> &zero_based() const { return map_; }

  bool is_identity() const;

  /// +1 for even permutations, -1 for odd.
  int sign() const;

  bool operator==(const Permutation &) const = default;
  auto operator<=>(const Permutation &) const = default;

private:
  explicit Permutation(std::vector<std::uint32_t> map) : map_(std::move(map)) {}

  std::vector<std::uint32_t> map_;
};

/// (a o b)(i) = a(b(i)). Throws std::invalid_argument on degree mismatch.
Permutation compose(const Permutation &a, const Permutation &b);

Permutation inverse(const Permutation &sigma);

/**
 * y = P(sigma) x with y(i) = x(sigma(i)), i.e. P(sigma)_{ij} = [sigma(i) = j].
 *
 * sigma -> P(sigma) is an antihomomorphism under `compose`:
 *   apply_to_vector(compose(s, d), x) == apply_to_vector(d, apply_to_vector(s, x)).
 */
template <typename T>
std::vector<T> apply_to_vector(const Permutation &sigma, std::span<const T> x);

std::vector<double> apply_to_vector(const Permutation &sigma,
                                    std::span<const double> x);

/**
 * A word k_1 k_2 ... k_m in the adjacent transpositions, denoting the
 * product tau_{k_1} o tau_{k_2} o ... o tau_{k_m}. Entries are 1-based,
 * 1 <= k <= degree - 1.
 */
struct AdjacentWord {
  std::size_t degree = 1;
  std::vector<std::size_t> indices;

  std::size_t size() const { return indices.size(); }
  bool empty() const { return indices.empty(); }
};

/**
 * Factors sigma into adjacent transpositions by bubble-sorting its image
 * tuple. The word is deterministic and has exactly inv(sigma) letters, so
 * it is never longer than n(n-1)/2; it is not otherwise canonical.
 */
AdjacentWord decompose_adjacent(const Permutation &sigma);

/// Composes the letters of `word` in order. Throws on out-of-range letters.
Permutation evaluate(const AdjacentWord &word);

/// Default upper bound on n for anything that walks all of S_n.
inline constexpr std::size_t kDefaultOracleCap = 8;

/**
 * The oracle cap in effect: PERMHARMONIC_ORACLE_CAP if set to a positive
 * integer, otherwise kDefaultOracleCap.
 */
std::size_t oracle_cap();

/// Thrown when a brute-force routine is asked for n beyond the oracle cap.
class OracleCapExceeded : public std::invalid_argument {
public:
  OracleCapExceeded(std::size_t n, std::size_t cap);
};

/**
 * Calls `visit` on every element of S_n exactly once, in lexicographic
 * order of the image tuples. Throws OracleCapExceeded if n > oracle_cap().
 */
void for_each_permutation(std::size_t n,
                          const std::function<void(const Permutation &)> &visit);

/// Materialized for_each_permutation.
std::vector<Permutation> enumerate_group(std::size_t n);

/// Parses 1-based one-line notation such as "2 3 1" (commas also accepted).
Permutation parse_permutation(std::string_view text);

std::string to_string(const Permutation &sigma);

std::ostream &operator<<(std::ostream &os, const Permutation &sigma);

// ---------------------------------------------------------------------------

template <typename T>
std::vector<T> apply_to_vector(const Permutation &sigma, std::span<const T> x) {
  if (x.size() != sigma.degree())
    throw std::invalid_argument("apply_to_vector: vector length " +
                                std::to_string(x.size()) +
                                " does not match permutation degree " +
                                std::to_string(sigma.degree()));
  const auto &map = sigma.zero_based();
  std::vector<T> y;
  y.reserve(x.size());
  for (std::size_t i = 0; i < map.size(); ++i)
    y.push_back(x[map[i]]);
  return y;
}

} // namespace permharmonic
