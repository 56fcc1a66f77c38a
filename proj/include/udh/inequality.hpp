#pragma once

// Numerical checks around the exponent rho = 2 / (log2 3 - 1): the
// three-variable inequality, the density bound for subsets of T_l, the family
// of subsets on which that bound is tight, and homomorphism densities of small
// patterns in T_n.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "udh/hypergraph.hpp"

namespace udh {

struct ExponentConstants {
  double rho;  // 2 / (log2(3) - 1)
  double tau;  // rho + 3
};
ExponentConstants exponent_constants();

/// x^tau + y^tau + z^tau + 24xyz - 3^(3-tau) (x+y+z)^tau.
double fact7_value(double x, double y, double z);

struct GridMinimum {
  std::size_t resolution = 0;
  double value = 0.0;
  double x = 0.0, y = 0.0, z = 0.0;
};

/// Minimum of fact7_value over the grid {i / (resolution-1)}^3, endpoints
/// included. Ties go to the first grid point in (x, y, z) lexicographic order.
GridMinimum fact7_scan(std::size_t resolution, unsigned threads = 1);

/// Lower bound (1/4) eta^rho |X|^3 / 6 - (3/8) 3^l with eta = |X| / 3^l.
double tn_lower_bound(std::size_t level, std::size_t subset_size);

enum class TnAuditMode { exact, sampled };

struct TnViolation {
  std::vector<Vertex> subset;
  std::size_t edges = 0;
  double bound = 0.0;
};

struct TnAuditReport {
  std::size_t level = 0;
  TnAuditMode mode = TnAuditMode::exact;
  std::uint64_t subsets_examined = 0;
  /// Smallest e(X) - bound seen, and a subset attaining it.
  double min_margin = 0.0;
  std::vector<Vertex> argmin;
  std::vector<TnViolation> violations;
};

/// Checks the bound on subsets of T_level (k = 3). Exact mode lists every
/// subset for level <= 2; level 3 needs `allow_long_run` and then compares
/// the bound with the exact minimum of e(X) for each size. Sampled mode draws
/// a uniform size and then a uniform subset of that size, `samples` times.
TnAuditReport tn_density_audit(std::size_t level, TnAuditMode mode, std::uint64_t samples = 1'000'000,
                               std::uint64_t seed = 0, bool allow_long_run = false);

struct OptimalityPoint {
  std::size_t r = 0, n = 0;
  BigInt size;         // 2^r 3^(n-r)
  double eta = 0.0;    // (2/3)^r
  BigInt edges;        // 2^r (27^(n-r) - 3^(n-r)) / 24
  double bound = 0.0;  // tn_lower_bound(n, |U|)
  double ratio = 0.0;  // edges / (eta^rho |U|^3 / 24) = 1 - 9^-(n-r)
  std::optional<std::uint64_t> brute_force;  // induced count in T_n, n <= 3
};

/// U = {0,1}^r x {0,1,2}^(n-r) inside T_n.
OptimalityPoint optimality_family(std::size_t r, std::size_t n);

struct SupersatRow {
  std::size_t n = 0;
  BigInt hom;
  double ratio = 0.0;  // hom / (k^n)^v(F)
};

struct SupersaturationReport {
  std::vector<SupersatRow> rows;
};

/// Exact hom(F, T_n) for n = 1..n_max. Throws Error unless F embeds in some
/// k-ary hypergraph.
SupersaturationReport supersaturation_experiment(const Hypergraph& f, std::size_t n_max = 3);

}  // namespace udh
