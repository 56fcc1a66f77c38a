#pragma once

// Auditors for the three uniform-density notions.
//
//  * vertex:  e(U) >= d * C(|U|, k) - eta * n^k            for all U
//  * triple:  e3(X, Y, Z) >= d |X||Y||Z| - eta * n^3        for all X, Y, Z
//             where e3 counts ordered (x, y, z) in X x Y x Z with xyz an edge
//  * profile: min e(U) / C(|U|, k) over |U| >= ceil(eta * n)
//
// Exact modes enumerate every subset and may answer "satisfied". Heuristic
// modes only ever answer "violated" (with a certificate) or "unresolved".

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "udh/hypergraph.hpp"

namespace udh {

enum class AuditMode { exact, heuristic };
enum class Verdict { satisfied, violated, unresolved };
enum class Notion { vertex, triple, profile };

std::string to_string(AuditMode m);
std::string to_string(Verdict v);
std::string to_string(Notion n);

struct AuditBudget {
  std::size_t restarts = 64;
  std::size_t iterations = 1000;  // local-search / descent steps per restart
};

struct DensityQuery {
  double d = 0.0;
  double eta = 0.0;
  AuditMode mode = AuditMode::exact;
  AuditBudget budget;
  std::uint64_t seed = 0;
  unsigned threads = 1;

  /// Throws Error unless 0 <= d <= 1, eta > 0 and the budget is positive.
  void validate() const;
};

/// Subsets named by a certificate. A vertex certificate fills `u`; a triple
/// certificate fills `x`, `y`, `z`.
struct DensityCertificate {
  Notion notion = Notion::vertex;
  std::vector<Vertex> u;
  std::vector<Vertex> x, y, z;
};

struct AuditStats {
  std::uint64_t sets_examined = 0;
  std::uint64_t descent_iterations = 0;
};

struct DensityReport {
  Notion notion = Notion::vertex;
  Verdict verdict = Verdict::unresolved;
  double d = 0.0;
  double eta = 0.0;
  /// Best (smallest) slack found; its certificate is `certificate`.
  double slack = 0.0;
  std::optional<DensityCertificate> certificate;
  AuditStats stats;
};

inline constexpr std::size_t kExactVertexLimit = 24;
inline constexpr std::size_t kExactTripleLimit = 10;

DensityReport vertex_density_check(const Hypergraph& h, const DensityQuery& q);
DensityReport triple_density_check(const Hypergraph& h, const DensityQuery& q);

/// Slack of a certificate recomputed from scratch: e(U) - d C(|U|,k) + eta n^k
/// or e3(X,Y,Z) - d|X||Y||Z| + eta n^3. Throws on out-of-range vertices.
double verify_density_certificate(const Hypergraph& h, const DensityCertificate& cert, double d, double eta);

/// e3(X, Y, Z) counted edge by edge.
std::uint64_t ordered_triple_count(const Hypergraph& h, const std::vector<Vertex>& x, const std::vector<Vertex>& y,
                                   const std::vector<Vertex>& z);

struct ProfilePoint {
  double eta = 0.0;
  std::size_t min_size = 0;  // max(ceil(eta * n), k)
  double value = 0.0;        // minimum e(U) / C(|U|, k)
  std::vector<Vertex> argmin;
  bool exact = false;
};

/// One entry per grid value; exact for n <= 24 in exact mode.
std::vector<ProfilePoint> density_profile(const Hypergraph& h, const std::vector<double>& eta_grid, AuditMode mode,
                                          const AuditBudget& budget = {}, std::uint64_t seed = 0);

/// Exact minimum of e(U) over all U of each size s = 0..n, with the
/// lexicographically least minimizer. n may not exceed `vertex_limit`, which
/// itself is capped at 31.
struct SizeMinima {
  std::vector<std::uint64_t> min_edges;
  std::vector<std::uint64_t> argmin;  // bitmask
};
SizeMinima exact_size_minima(const Hypergraph& h, unsigned threads = 1, std::size_t vertex_limit = kExactVertexLimit);

/// Alternating minimisation of e3(X,Y,Z) - d|X||Y||Z| over one coordinate at a
/// time. With the other two sets fixed, the optimal third set is
/// {v : deg(v) < d * (product of the other two sizes)}.
struct DescentTrace {
  std::vector<double> objective;  // value after the start and after every step
  std::vector<char> x, y, z;      // final membership
  bool fixed_point = false;
  std::size_t steps = 0;
};
DescentTrace coordinate_descent(const Hypergraph& h, double d, std::vector<char> x, std::vector<char> y,
                                std::vector<char> z, std::size_t max_steps);

}  // namespace udh
