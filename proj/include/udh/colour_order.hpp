#pragma once

// Ordered rainbow colourings of shadows and the random construction H_phi.
//
// An ordering v_1 < ... < v_f of V(F) and a colouring of the shadow with
// colours 1..k are compatible when, for every edge listed in increasing
// position, the (k-1)-tuple obtained by dropping the l-th vertex has colour
// k+1-l. For k = 3 colours 1, 2, 3 are red, blue, green, so an edge
// v_i < v_j < v_k needs {v_i,v_j} red, {v_i,v_k} blue and {v_j,v_k} green.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "udh/hypergraph.hpp"

namespace udh {

using Colour = std::uint8_t;

struct ShadowColouring {
  /// ordering[p] is the vertex at position p (0-based).
  std::vector<Vertex> ordering;
  /// Colour of each shadow tuple; keys are sorted tuples.
  std::map<Tuple, Colour> colour;
};

/// Two edges demand different colours for the same shadow tuple.
struct ColourConflict {
  Tuple tuple;
  Colour first;
  Colour second;
};

using ForcedResult = std::variant<ShadowColouring, ColourConflict>;

/// Colouring of every (k-1)-subset of [0, n), indexed by lexicographic rank.
class PairColouring {
 public:
  PairColouring(int k, std::size_t n, std::vector<Colour> colours);

  int uniformity() const { return k_; }
  std::size_t vertex_count() const { return n_; }
  const std::vector<Colour>& colours() const { return colours_; }
  Colour at(std::span<const Vertex> tuple) const { return colours_[lex_rank(tuple, n_)]; }

 private:
  int k_;
  std::size_t n_;
  std::vector<Colour> colours_;
};

/// Applies the rainbow rule for a fixed ordering (a permutation of V(F)).
/// Edges are processed in canonical order; the first clash is reported.
ForcedResult forced_colouring(const Hypergraph& f, const std::vector<Vertex>& ordering);

/// Lexicographically least ordering admitting a compatible colouring, with
/// that colouring; nullopt if none exists. Requires k >= 3.
std::optional<ShadowColouring> decide_condition_b(const Hypergraph& f);

/// Visits every valid ordering (with its forced colouring) in lexicographic
/// order while `visit` returns true; returns the number visited.
std::size_t for_each_condition_b_witness(const Hypergraph& f, const std::function<bool(const ShadowColouring&)>& visit);

/// Pure re-check of the rainbow condition, independent of the search.
bool verify_witness(const Hypergraph& f, const ShadowColouring& w);

/// Hypergraph on [0, n) whose edges are the k-sets e (sorted) with
/// colour(e minus its l-th smallest vertex) = k+1-l for every l. For k = 3 this is
/// phi(i,j) = red, phi(i,k) = blue, phi(j,k) = green for i < j < k.
Hypergraph build_h_phi(const PairColouring& phi);

PairColouring random_pair_colouring(std::size_t n, int k, std::uint64_t seed);

/// Text form: header `k n`, then one line per (k-1)-tuple: its vertices
/// followed by the colour index. Every tuple must appear exactly once.
PairColouring parse_pair_colouring(std::string_view text);
std::string serialize_pair_colouring(const PairColouring& phi);

/// "red"/"blue"/"green" for k = 3, otherwise the decimal index.
std::string colour_name(Colour c, int k);

}  // namespace udh
