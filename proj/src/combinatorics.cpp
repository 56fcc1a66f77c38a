#include "udh/combinatorics.hpp"

namespace udh {

std::uint64_t binomial(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    acc = acc * (n - r + i) / i;
    if (acc > UINT64_MAX) throw Error("binomial coefficient overflows 64 bits");
  }
  return static_cast<std::uint64_t>(acc);
}

BigInt big_pow(std::uint64_t base, std::uint64_t exponent) {
  return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exponent));
}

std::size_t lex_rank(std::span<const std::uint32_t> tuple, std::size_t n) {
  // Count the subsets that precede `tuple`: at position i, every value v
  // strictly between the previous entry and tuple[i] starts a block of
  // C(n - v - 1, r - i - 1) subsets.
  const std::size_t r = tuple.size();
  std::size_t rank = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t v = start; v < tuple[i]; ++v) rank += binomial(n - v - 1, r - i - 1);
    start = tuple[i] + 1;
  }
  return rank;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::vector<std::uint32_t> mask_to_vertices(std::uint64_t mask) {
  std::vector<std::uint32_t> out;
  while (mask) {
    out.push_back(static_cast<std::uint32_t>(__builtin_ctzll(mask)));
    mask &= mask - 1;
  }
  return out;
}

}  // namespace udh
