#pragma once

// k-ary hypergraphs T_n^(k) and the frequency decision procedure.
//
// Vertices of T_n^(k) are the strings in {0..k-1}^n. A k-set of strings is an
// edge iff at the first coordinate where they are not all equal they take all
// k values. Vertex ids encode strings in base k, first coordinate most
// significant.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "udh/hypergraph.hpp"

namespace udh {

struct KaryVector {
  int base = 3;
  std::vector<std::uint8_t> coords;

  bool operator==(const KaryVector&) const = default;
  auto operator<=>(const KaryVector&) const = default;

  /// Digits as a string, e.g. "0210".
  std::string digits() const;
  static KaryVector from_digits(int base, std::string_view digits);
  /// Vertex id inside T_n^(base) with n = coords.size().
  std::size_t encode() const;
  static KaryVector decode(int base, std::size_t length, std::size_t id);
};

/// image[v] is the string assigned to pattern vertex v; all of equal length.
struct EmbeddingWitness {
  int base = 3;
  std::size_t length = 0;
  std::vector<KaryVector> image;
};

/// The edge rule. Throws on unequal lengths, out-of-range digits, duplicate
/// vectors, or a count different from k.
bool kary_edge(int k, std::span<const KaryVector> vectors);

/// Default limit on the number of vertices of an explicit T_n^(k).
inline constexpr std::size_t kTernaryVertexLimit = 256;
/// Default limit on the number of edges of an explicit T_n^(k).
inline constexpr std::size_t kTernaryEdgeLimit = 4'000'000;

/// Explicit T_n^(k), built from k shifted copies of T_{n-1}^(k) plus all
/// transversal k-sets.
Hypergraph build_ternary(int k, std::size_t n, std::size_t vertex_limit = kTernaryVertexLimit);

/// e(T_n^(k)) = (k^{kn} - k^n) / (k^k - k).
BigInt kary_edge_count(int k, std::size_t n);

/// Witness of F being a subhypergraph of some T_l^(k) with l <= v(F), found by
/// recursive search over splits of V(F) into k parts; nullopt when none
/// exists. Requires k >= 3 and v(F) <= 24.
std::optional<EmbeddingWitness> decide_ternary_embeddable(const Hypergraph& f);

/// F is frequent iff it embeds in some k-ary hypergraph.
bool is_frequent(const Hypergraph& f);

/// Re-checks injectivity and the edge rule for every pattern edge.
bool verify_embedding(const Hypergraph& f, const EmbeddingWitness& w);

}  // namespace udh
