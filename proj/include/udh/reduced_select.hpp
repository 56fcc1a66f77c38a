#pragma once

// Reduced hypergraphs and the staged red/blue/green selection.
//
// A reduced hypergraph on the index set [0, m) has one vertex class per index
// pair {i, j} (vertices 0..size-1 of that class) and, for every index triple
// i < j < k, a constituent: a set of triples (p, q, r) with p in class {i,j},
// q in class {i,k} and r in class {j,k}.
//
// Classes hold at most 64 vertices and m is at most 64, so candidate sets and
// index sets are single 64-bit masks.

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "udh/combinatorics.hpp"

namespace udh {

inline constexpr std::size_t kMaxIndices = 64;
inline constexpr std::size_t kMaxClassSize = 64;

using IndexPair = std::pair<std::size_t, std::size_t>;

class ReducedHypergraph {
 public:
  /// `sizes[i][j]` for i < j gives the class size (1..64); other entries are
  /// ignored. All constituents start empty.
  ReducedHypergraph(std::size_t m, const std::vector<std::vector<std::size_t>>& sizes);
  /// Every class of the same size.
  ReducedHypergraph(std::size_t m, std::size_t class_size);

  std::size_t index_count() const { return m_; }
  std::size_t class_size(std::size_t i, std::size_t j) const;

  /// Indices must satisfy i < j < k; p, q, r must lie in the classes {i,j},
  /// {i,k}, {j,k}. Throws Error otherwise.
  void add_triple(std::size_t i, std::size_t j, std::size_t k, std::size_t p, std::size_t q, std::size_t r);
  bool has_triple(std::size_t i, std::size_t j, std::size_t k, std::size_t p, std::size_t q, std::size_t r) const;
  /// Mask over class {j,k} of the r with (p, q, r) in the constituent.
  std::uint64_t completions(std::size_t i, std::size_t j, std::size_t k, std::size_t p, std::size_t q) const;
  std::uint64_t constituent_size(std::size_t i, std::size_t j, std::size_t k) const;
  /// All triples of a constituent in lexicographic order.
  std::vector<std::array<std::size_t, 3>> triples(std::size_t i, std::size_t j, std::size_t k) const;

  /// Every constituent complete.
  void fill_complete();

  bool operator==(const ReducedHypergraph& o) const { return m_ == o.m_ && sizes_ == o.sizes_ && rows_ == o.rows_; }

 private:
  std::size_t triple_slot(std::size_t i, std::size_t j, std::size_t k) const;

  std::size_t m_;
  std::vector<std::size_t> sizes_;  // m * m, upper triangle used
  // Per constituent, one mask over class {j,k} for every (p, q).
  std::vector<std::vector<std::uint64_t>> rows_;
};

struct DensityWitness {
  bool dense = true;
  std::size_t i = 0, j = 0, k = 0;  // triple of smallest density ratio
  double ratio = 1.0;
};

/// True iff every constituent has at least mu * |P^ij| |P^ik| |P^jk| triples.
DensityWitness is_mu_dense(const ReducedHypergraph& a, double mu);

/// Number of (q, r) completing p (a vertex of class {i,j}) in constituent ijk.
std::uint64_t degree(const ReducedHypergraph& a, std::size_t i, std::size_t j, std::size_t k, std::size_t p);
/// Number of r completing (p, q) in constituent ijk.
std::uint64_t pair_degree(const ReducedHypergraph& a, std::size_t i, std::size_t j, std::size_t k, std::size_t p,
                          std::size_t q);
/// Mask of the p in class {i,j} with degree >= mu_prime |P^ik| |P^jk|.
std::uint64_t red_candidates(const ReducedHypergraph& a, double mu_prime, std::size_t i, std::size_t j, std::size_t k);

// ---------------------------------------------------------------------------
// Candidate systems. For each index triple i < j < k one candidate mask is
// stored. Which class it lives in depends on the colour:
//   red:   class {i,j}, constrained by the larger index k
//   blue:  class {i,k}, constrained by the middle index j
//   green: class {j,k}, constrained by the smaller index i

enum class Colour3 { red, blue, green };

class CandidateSystem {
 public:
  CandidateSystem() = default;
  CandidateSystem(std::size_t m, std::vector<std::size_t> sizes);  // sizes is m*m

  std::size_t index_count() const { return m_; }
  std::size_t class_size(std::size_t i, std::size_t j) const { return sizes_[i * m_ + j]; }
  void set_class_size(std::size_t i, std::size_t j, std::size_t s) { sizes_[i * m_ + j] = s; }
  std::uint64_t mask(std::size_t i, std::size_t j, std::size_t k) const { return masks_[slot(i, j, k)]; }
  void set_mask(std::size_t i, std::size_t j, std::size_t k, std::uint64_t m) { masks_[slot(i, j, k)] = m; }

  bool operator==(const CandidateSystem& o) const { return m_ == o.m_ && sizes_ == o.sizes_ && masks_ == o.masks_; }

 private:
  std::size_t slot(std::size_t i, std::size_t j, std::size_t k) const { return (i * m_ + j) * m_ + k; }

  std::size_t m_ = 0;
  std::vector<std::size_t> sizes_;
  std::vector<std::uint64_t> masks_;
};

/// Throws Error unless every candidate mask lies inside its class and has at
/// least eps times the class size elements.
void check_candidates(const CandidateSystem& sys, Colour3 colour, double eps);

/// Index substitution r -> M-1-r that turns a green system into a red one
/// (and back; it is an involution).
CandidateSystem reverse_system(const CandidateSystem& sys);

/// Selected indices (increasing) and one chosen class vertex per index pair.
struct PairSelection {
  std::vector<std::size_t> indices;
  std::map<IndexPair, std::size_t> chosen;
};

struct SelectStats {
  std::uint64_t nodes = 0;
  bool budget_hit = false;
};

inline constexpr std::size_t kMaximal = static_cast<std::size_t>(-1);

/// Greedy selection following the red-stage argument: indices are taken in
/// increasing order, and when an index joins, its pair vertices are chosen to
/// keep as many future indices alive as possible (ties: lexicographically
/// least tuple). `m == kMaximal` returns the full greedy run. Returns nullopt
/// when fewer than m indices survive. Postconditions are checked before
/// returning.
std::optional<PairSelection> select_red(const CandidateSystem& sys, double eps, std::size_t m,
                                        std::size_t node_budget = 1'000'000, SelectStats* stats = nullptr);
/// select_red on the reversed system, mapped back.
std::optional<PairSelection> select_green(const CandidateSystem& sys, double eps, std::size_t m,
                                          std::size_t node_budget = 1'000'000, SelectStats* stats = nullptr);
/// Pivot-by-pivot selection: each pivot's pair vertices come from
/// select_two_indices on the indices after it.
std::optional<PairSelection> select_blue(const CandidateSystem& sys, double eps, std::size_t m,
                                         std::size_t node_budget = 1'000'000, SelectStats* stats = nullptr);

/// Z and one element d_s of W_s per s in Z, with d_s in D[r][s] for r < s in Z.
struct TwoIndexSelection {
  std::vector<std::size_t> indices;
  std::vector<std::size_t> elements;  // parallel to indices
};

/// `w_sizes[s]` = |W_s|; `d[r][s]` (r < s) = mask of D_rs within W_s.
std::optional<TwoIndexSelection> select_two_indices(const std::vector<std::size_t>& w_sizes,
                                                    const std::vector<std::vector<std::uint64_t>>& d, double eps,
                                                    std::size_t m, std::size_t node_budget = 1'000'000,
                                                    SelectStats* stats = nullptr);

/// Postcondition of a selection for the given colour.
bool verify_selection(const CandidateSystem& sys, Colour3 colour, const PairSelection& sel);

// ---------------------------------------------------------------------------

struct CoreSelection {
  std::vector<std::size_t> lambda;
  std::map<IndexPair, std::size_t> red, blue, green;  // keyed by actual index pairs
};

struct CoreRunInfo {
  std::size_t red_indices = 0;   // size of the red-stage index set
  std::size_t blue_indices = 0;  // size of the blue-stage index set
  SelectStats stats;
};

/// Staged selection. Throws Error if `a` is not mu-dense or f < 1.
std::optional<CoreSelection> select_rainbow_core(const ReducedHypergraph& a, double mu, std::size_t f,
                                                 std::size_t node_budget = 1'000'000, CoreRunInfo* info = nullptr);

/// Recomputes every membership test. Throws Error when a selected vertex lies
/// outside its class or a pair is missing.
bool verify_core(const ReducedHypergraph& a, const CoreSelection& sel);

/// Independent triple inclusion with probability p; each constituent is
/// resampled until it is mu-dense (at most `attempts` times, then Error).
ReducedHypergraph random_reduced(std::size_t m, std::size_t size_lo, std::size_t size_hi, double p, double mu,
                                 std::uint64_t seed, std::size_t attempts = 1000);

}  // namespace udh
