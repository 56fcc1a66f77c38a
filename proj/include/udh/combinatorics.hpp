#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace udh {

using BigInt = boost::multiprecision::cpp_int;

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Binomial coefficient in 64 bits; throws on overflow.
std::uint64_t binomial(std::uint64_t n, std::uint64_t r);

/// Exact integer power.
BigInt big_pow(std::uint64_t base, std::uint64_t exponent);

/// Rank of a strictly increasing tuple among all `tuple.size()`-subsets of
/// [0, n) in lexicographic order.
std::size_t lex_rank(std::span<const std::uint32_t> tuple, std::size_t n);

/// Calls `visit(tuple)` for every r-subset of [0, n) in lexicographic order.
/// Stops early when `visit` returns false.
template <typename Visit>
void for_each_subset(std::size_t n, std::size_t r, Visit&& visit) {
  if (r > n) return;
  std::vector<std::uint32_t> tuple(r);
  for (std::size_t i = 0; i < r; ++i) tuple[i] = static_cast<std::uint32_t>(i);
  while (true) {
    if (!visit(std::span<const std::uint32_t>(tuple))) return;
    std::size_t i = r;
    while (i > 0 && tuple[i - 1] == n - r + i - 1) --i;
    if (i == 0) return;
    ++tuple[i - 1];
    for (std::size_t j = i; j < r; ++j) tuple[j] = tuple[j - 1] + 1;
  }
}

/// SplitMix64 finaliser; used to derive independent sub-seeds from one master
/// seed so every randomized subtask is reproducible on its own.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

/// Engine for subtask `stream` of a run seeded with `seed`.
inline std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t stream = 0) {
  return std::mt19937_64(mix_seed(seed, stream));
}

/// Lexicographic comparison of two vertex sets given as bitmasks, compared as
/// their sorted element lists.
inline bool mask_lex_less(std::uint64_t a, std::uint64_t b) {
  if (a == b) return false;
  const std::uint64_t diff = a ^ b;
  const int low = __builtin_ctzll(diff);
  const std::uint64_t above = ~((std::uint64_t{2} << low) - 1);
  // The set containing `low` continues with `low`; the other set either
  // continues with something larger or has ended.
  if (a >> low & 1) return (b & above) != 0;
  return (a & above) == 0;
}

std::vector<std::uint32_t> mask_to_vertices(std::uint64_t mask);

}  // namespace udh
