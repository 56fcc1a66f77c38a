#include "udh/inequality.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <mutex>
#include <numeric>
#include <thread>

#include "udh/density_audit.hpp"
#include "udh/ternary.hpp"

namespace udh {

ExponentConstants exponent_constants() {
  const double rho = 2.0 / (std::log2(3.0) - 1.0);
  return {rho, rho + 3.0};
}

double fact7_value(double x, double y, double z) {
  const double tau = exponent_constants().tau;
  return std::pow(x, tau) + std::pow(y, tau) + std::pow(z, tau) + 24.0 * x * y * z -
         std::pow(3.0, 3.0 - tau) * std::pow(x + y + z, tau);
}

GridMinimum fact7_scan(std::size_t resolution, unsigned threads) {
  if (resolution < 2) throw Error("resolution must be at least 2");
  const double step = 1.0 / static_cast<double>(resolution - 1);
  auto coord = [&](std::size_t i) { return i + 1 == resolution ? 1.0 : static_cast<double>(i) * step; };
  // Per x-slice minima, reduced in slice order so the result does not depend
  // on the thread count.
  std::vector<GridMinimum> slice(resolution);
  auto work = [&](std::size_t i) {
    GridMinimum best{resolution, std::numeric_limits<double>::infinity(), 0, 0, 0};
    const double x = coord(i);
    for (std::size_t j = 0; j < resolution; ++j)
      for (std::size_t l = 0; l < resolution; ++l) {
        const double v = fact7_value(x, coord(j), coord(l));
        if (v < best.value) best = {resolution, v, x, coord(j), coord(l)};
      }
    slice[i] = best;
  };
  threads = std::max(1u, threads);
  if (threads == 1) {
    for (std::size_t i = 0; i < resolution; ++i) work(i);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        for (std::size_t i = t; i < resolution; i += threads) work(i);
      });
    for (auto& th : pool) th.join();
  }
  GridMinimum best = slice[0];
  for (const auto& s : slice)
    if (s.value < best.value) best = s;
  return best;
}

double tn_lower_bound(std::size_t level, std::size_t subset_size) {
  const double rho = exponent_constants().rho;
  const double total = std::pow(3.0, static_cast<double>(level));
  const double size = static_cast<double>(subset_size);
  const double eta = size / total;
  return 0.25 * std::pow(eta, rho) * size * size * size / 6.0 - 0.375 * total;
}

namespace {

struct EdgeMasks {
  std::vector<std::uint32_t> masks;

  explicit EdgeMasks(const Hypergraph& h) {
    for (const auto& e : h.edges()) {
      std::uint32_t m = 0;
      for (Vertex v : e) m |= 1u << v;
      masks.push_back(m);
    }
  }

  std::size_t count(std::uint32_t x) const {
    std::size_t c = 0;
    for (std::uint32_t m : masks) c += (m & x) == m;
    return c;
  }
};

void offer(TnAuditReport& report, std::size_t level, std::uint32_t x, std::size_t edges) {
  const auto size = static_cast<std::size_t>(std::popcount(x));
  const double bound = tn_lower_bound(level, size);
  const double margin = static_cast<double>(edges) - bound;
  if (report.subsets_examined == 0 || margin < report.min_margin) {
    report.min_margin = margin;
    report.argmin = mask_to_vertices(x);
  }
  ++report.subsets_examined;
  if (margin < 0.0) report.violations.push_back({mask_to_vertices(x), edges, bound});
}

}  // namespace

TnAuditReport tn_density_audit(std::size_t level, TnAuditMode mode, std::uint64_t samples, std::uint64_t seed,
                               bool allow_long_run) {
  if (level > 3) throw Error("levels above 3 exceed 32 vertices and are not supported");
  const Hypergraph t = build_ternary(3, level);
  const std::size_t n = t.vertex_count();
  const EdgeMasks edges(t);
  TnAuditReport report;
  report.level = level;
  report.mode = mode;

  if (mode == TnAuditMode::exact) {
    if (level <= 2) {
      for (std::uint32_t x = 0; x < (1u << n); ++x) offer(report, level, x, edges.count(x));
      return report;
    }
    if (!allow_long_run) throw Error("exact audit of level 3 walks 2^27 subsets; pass the long-run flag");
    // The bound depends on |X| only, so the minimum of e(X) per size decides.
    const auto minima = exact_size_minima(t, 1, 27);
    for (std::size_t s = 0; s <= n; ++s) offer(report, level, static_cast<std::uint32_t>(minima.argmin[s]), minima.min_edges[s]);
    report.subsets_examined = std::uint64_t{1} << n;
    return report;
  }

  auto rng = make_rng(seed);
  std::uniform_int_distribution<std::size_t> pick_size(0, n);
  std::vector<Vertex> perm(n);
  for (std::uint64_t i = 0; i < samples; ++i) {
    const std::size_t size = pick_size(rng);
    std::iota(perm.begin(), perm.end(), Vertex{0});
    // Partial Fisher-Yates: the first `size` entries form a uniform subset.
    for (std::size_t a = 0; a < size; ++a) {
      std::uniform_int_distribution<std::size_t> pick(a, n - 1);
      std::swap(perm[a], perm[pick(rng)]);
    }
    std::uint32_t x = 0;
    for (std::size_t a = 0; a < size; ++a) x |= 1u << perm[a];
    offer(report, level, x, edges.count(x));
  }
  return report;
}

OptimalityPoint optimality_family(std::size_t r, std::size_t n) {
  if (r > n) throw Error("optimality family needs r <= n");
  OptimalityPoint p;
  p.r = r;
  p.n = n;
  const std::size_t free = n - r;
  p.size = big_pow(2, r) * big_pow(3, free);
  p.eta = std::pow(2.0 / 3.0, static_cast<double>(r));
  p.edges = big_pow(2, r) * (big_pow(27, free) - big_pow(3, free)) / 24;
  const double size = p.size.convert_to<double>();
  const double total = std::pow(3.0, static_cast<double>(n));
  const double rho = exponent_constants().rho;
  p.bound = 0.25 * std::pow(p.eta, rho) * size * size * size / 6.0 - 0.375 * total;
  p.ratio = p.edges.convert_to<double>() / (std::pow(p.eta, rho) * size * size * size / 24.0);
  if (n <= 3) {
    const Hypergraph t = build_ternary(3, n);
    std::vector<Vertex> u;
    for (std::size_t id = 0; id < t.vertex_count(); ++id) {
      const auto v = KaryVector::decode(3, n, id);
      if (std::all_of(v.coords.begin(), v.coords.begin() + static_cast<std::ptrdiff_t>(r), [](auto c) { return c < 2; }))
        u.push_back(static_cast<Vertex>(id));
    }
    p.brute_force = induced_edge_count(t, u);
  }
  return p;
}

SupersaturationReport supersaturation_experiment(const Hypergraph& f, std::size_t n_max) {
  if (n_max < 1) throw Error("n_max must be at least 1");
  if (!is_frequent(f)) throw Error("pattern does not embed in any k-ary hypergraph");
  const int k = f.uniformity();
  SupersaturationReport report;
  for (std::size_t n = 1; n <= n_max; ++n) {
    const Hypergraph t = build_ternary(k, n);
    SupersatRow row;
    row.n = n;
    row.hom = count_homomorphisms(f, t);
    const BigInt all = big_pow(t.vertex_count(), f.vertex_count());
    row.ratio = row.hom.convert_to<double>() / all.convert_to<double>();
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace udh
