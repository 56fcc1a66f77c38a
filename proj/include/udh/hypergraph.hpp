#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "udh/combinatorics.hpp"

namespace udh {

using Vertex = std::uint32_t;
/// A sorted tuple of distinct vertices.
using Tuple = std::vector<Vertex>;

/// Thrown by the HYG reader; carries the offending line number (1-based).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// k-uniform hypergraph on vertices 0..n-1. Immutable after construction; the
/// edge list is kept sorted lexicographically and duplicate-free.
class Hypergraph {
 public:
  Hypergraph() = default;
  /// Edges may be given in any order and with unsorted vertices. Throws Error
  /// on wrong arity, out-of-range or repeated vertices, and duplicate edges.
  Hypergraph(int k, std::size_t n, std::vector<Tuple> edges);

  int uniformity() const { return k_; }
  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Tuple>& edges() const { return edges_; }

  /// `tuple` must be sorted.
  bool has_edge(std::span<const Vertex> tuple) const;
  std::size_t degree(Vertex v) const;
  /// Indices (into edges()) of the edges containing v.
  const std::vector<std::size_t>& incident_edges(Vertex v) const { return incidence_[v]; }

  bool operator==(const Hypergraph& other) const {
    return k_ == other.k_ && n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int k_ = 3;
  std::size_t n_ = 0;
  std::vector<Tuple> edges_;
  std::vector<std::vector<std::size_t>> incidence_;
};

/// Shadow: the (k-1)-tuples covered by at least one edge, sorted.
struct Shadow {
  std::vector<Tuple> tuples;

  std::size_t size() const { return tuples.size(); }
  bool contains(std::span<const Vertex> tuple) const;
  /// Position of `tuple` in `tuples`, or npos.
  std::size_t index_of(std::span<const Vertex> tuple) const;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

/// Map from pattern vertices to host vertices.
struct VertexMap {
  std::vector<Vertex> image;
  bool injective = false;
};

Hypergraph parse_hypergraph(std::string_view text);
std::string serialize_hypergraph(const Hypergraph& h);

Shadow shadow(const Hypergraph& f);

/// Number of edges of h with every vertex in `subset`.
std::size_t induced_edge_count(const Hypergraph& h, std::span<const Vertex> subset);

/// Relabels vertex v to perm[v].
Hypergraph relabel(const Hypergraph& h, std::span<const Vertex> perm);

/// Pattern vertices in search order: descending degree, ties by index.
std::vector<Vertex> search_order(const Hypergraph& pattern);

/// An injective map sending every edge of `pattern` to an edge of `host`, if
/// one exists. Complete backtracking search.
std::optional<VertexMap> contains_copy(const Hypergraph& pattern, const Hypergraph& host);

/// Number of injective edge-preserving maps.
BigInt count_embeddings(const Hypergraph& pattern, const Hypergraph& host);

/// Number of (not necessarily injective) edge-preserving maps.
BigInt count_homomorphisms(const Hypergraph& pattern, const Hypergraph& host);

/// Independent re-check of a map: total, in range, injective when flagged,
/// and edge-preserving.
bool verify_vertex_map(const Hypergraph& pattern, const Hypergraph& host, const VertexMap& map);

/// The labelled k-uniform hypergraph on f vertices whose edge set is given by
/// `mask` over the lexicographic list of k-subsets.
Hypergraph hypergraph_from_mask(int k, std::size_t f, std::uint64_t mask);

/// Calls `visit` for all 2^C(f,k) labelled k-uniform hypergraphs on f
/// vertices in edge-set bitmask order. Requires C(f,k) <= 25.
void enumerate_hypergraphs(int k, std::size_t f, const std::function<void(const Hypergraph&)>& visit);

/// Frequently used small hypergraphs.
namespace catalog {
Hypergraph single_edge(int k = 3);
Hypergraph complete(int k, std::size_t n);
/// Tight cycle on vertices 0..4 (edges {i,i+1,i+2} mod 5).
Hypergraph tight_cycle5();
/// Tight 5-cycle minus the edge {0,1,4}: edges 012, 123, 234, 034.
Hypergraph c5_minus();
Hypergraph edgeless(int k, std::size_t n);
}  // namespace catalog

}  // namespace udh
