// Prints one PASS/FAIL line per acceptance criterion; exits non-zero if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <string>

#include "../unit/oracles.hpp"
#include "udh/colour_order.hpp"
#include "udh/density_audit.hpp"
#include "udh/inequality.hpp"
#include "udh/reduced_select.hpp"
#include "udh/ternary.hpp"

namespace {

using namespace udh;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

Outcome ternary_counts() {
  Outcome o;
  const auto t0 = Clock::now();
  const std::uint64_t expected[] = {1, 30, 819};
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto t = build_ternary(3, n);
    const BigInt closed = (big_pow(27, n) - big_pow(3, n)) / 24;
    o.require(t.edge_count() == expected[n - 1], "edge count at n=" + std::to_string(n));
    o.require(BigInt(t.edge_count()) == closed && kary_edge_count(3, n) == closed, "closed form at n=" + std::to_string(n));
  }
  o.require(seconds_since(t0) < 5.0, "runtime");
  return o;
}

Outcome inequality_scan() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto g = fact7_scan(201);
  o.require(g.value >= -1e-9, "grid minimum " + std::to_string(g.value));
  o.require(std::abs(fact7_value(1, 1, 0)) <= 1e-12, "f(1,1,0)");
  o.require(std::abs(fact7_value(1, 1, 1)) <= 1e-12, "f(1,1,1)");
  const double tau = exponent_constants().tau;
  o.require(std::abs(std::pow(2.0, tau - 1) - std::pow(3.0, tau - 3)) <= 1e-12, "2^(tau-1) = 3^(tau-3)");
  o.require(seconds_since(t0) < 10.0, "runtime");
  return o;
}

Outcome ternary_density_audit() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto exact = tn_density_audit(2, TnAuditMode::exact);
  o.require(exact.subsets_examined == 512 && exact.violations.empty(), "level 2 exact");
  const auto sampled = tn_density_audit(3, TnAuditMode::sampled, 1'000'000, 0);
  o.require(sampled.subsets_examined == 1'000'000 && sampled.violations.empty(), "level 3 sampled");
  o.require(seconds_since(t0) < 120.0, "runtime");
  return o;
}

Outcome optimality() {
  Outcome o;
  for (std::size_t n = 0; n <= 3; ++n) {
    const auto t = build_ternary(3, std::max<std::size_t>(n, 1));
    for (std::size_t r = 0; r <= n; ++r) {
      // U = {0,1}^r x {0,1,2}^(n-r), counted here directly.
      std::vector<Vertex> u;
      for (std::size_t id = 0; id < t.vertex_count(); ++id) {
        const auto s = KaryVector::decode(3, std::max<std::size_t>(n, 1), id);
        bool in = n > 0 || s.coords[0] == 0;
        for (std::size_t c = 0; c < r; ++c) in = in && s.coords[c] < 2;
        if (in) u.push_back(static_cast<Vertex>(id));
      }
      const BigInt formula = big_pow(2, r) * (big_pow(27, n - r) - big_pow(3, n - r)) / 24;
      o.require(BigInt(induced_edge_count(t, u)) == formula, "r=" + std::to_string(r) + " n=" + std::to_string(n));
      o.require(optimality_family(r, n).edges == formula, "library family r=" + std::to_string(r));
    }
  }
  o.require(std::abs(std::pow(2.0 / 3.0, exponent_constants().rho) - 0.25) <= 1e-12, "(2/3)^rho = 1/4");
  return o;
}

Outcome condition_b() {
  Outcome o;
  const auto c5 = catalog::c5_minus();
  const auto w = decide_condition_b(c5);
  o.require(w && verify_witness(c5, *w), "C5- witness");
  // The ordering x < w < v < z < y with v..z = 0..4, and its nine pairs.
  const std::vector<Vertex> figure = {2, 1, 0, 4, 3};
  const std::map<Tuple, Colour> figure_colours = {{{1, 2}, 1}, {{2, 4}, 1}, {{0, 4}, 1}, {{0, 2}, 2}, {{0, 3}, 2},
                                                  {{2, 3}, 2}, {{0, 1}, 3}, {{1, 3}, 3}, {{3, 4}, 3}};
  bool matched = false;
  for_each_condition_b_witness(c5, [&](const ShadowColouring& s) {
    if (s.ordering == figure) matched = s.colour == figure_colours;
    return !matched;
  });
  o.require(matched, "figure colouring");
  const auto k4 = catalog::complete(3, 4);
  o.require(!decide_condition_b(k4), "K4 witness");
  std::vector<Vertex> ord = {0, 1, 2, 3};
  std::size_t conflicts = 0;
  do conflicts += std::holds_alternative<ColourConflict>(forced_colouring(k4, ord));
  while (std::next_permutation(ord.begin(), ord.end()));
  o.require(conflicts == 24, "K4 orderings");
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto f = oracle::random_linear(3 + seed % 6, 30, seed);
    const auto lw = decide_condition_b(f);
    o.require(lw && verify_witness(f, *lw), "linear seed " + std::to_string(seed));
  }
  std::size_t compared = 0;
  auto compare_all = [&](const Hypergraph& h) {
    if (shadow(h).size() > 9) return;
    std::vector<Vertex> p(h.vertex_count());
    std::iota(p.begin(), p.end(), 0);
    do {
      const bool forced = std::holds_alternative<ShadowColouring>(forced_colouring(h, p));
      o.require(forced == oracle::ordering_admits_colouring(h, p), "naive enumeration");
      ++compared;
    } while (std::next_permutation(p.begin(), p.end()));
  };
  for (std::size_t f = 3; f <= 4; ++f) enumerate_hypergraphs(3, f, compare_all);
  // Five-vertex patterns with at most three edges always have |shadow| <= 9.
  enumerate_hypergraphs(3, 5, [&](const Hypergraph& h) {
    if (h.edge_count() <= 3) compare_all(h);
  });
  o.require(compared > 0, "nothing compared");
  return o;
}

Outcome h_phi() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto k4 = catalog::complete(3, 4);
  std::vector<Colour> c(6, 1);
  while (true) {
    o.require(!contains_copy(k4, build_h_phi(PairColouring(3, 4, c))), "K4 in H_phi");
    std::size_t i = 0;
    while (i < c.size() && ++c[i] > 3) c[i++] = 1;
    if (i == c.size()) break;
  }
  std::size_t within = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto h = build_h_phi(random_pair_colouring(60, 3, seed));
    const double density = static_cast<double>(h.edge_count()) / static_cast<double>(binomial(60, 3));
    within += std::abs(density - 1.0 / 27.0) <= 0.01;
  }
  o.require(within >= 95, "density window hit " + std::to_string(within) + "/100");
  o.require(seconds_since(t0) < 60.0, "runtime");
  return o;
}

Outcome frequency() {
  Outcome o;
  const auto t4 = build_ternary(3, 4);
  enumerate_hypergraphs(3, 4, [&](const Hypergraph& f) {
    const auto w = decide_ternary_embeddable(f);
    o.require(w.has_value() == contains_copy(f, t4).has_value(), "disagreement on " + serialize_hypergraph(f));
    if (w) o.require(verify_embedding(f, *w), "embedding witness");
  });
  std::size_t patterns = 0, bad = 0;
  enumerate_hypergraphs(3, 5, [&](const Hypergraph& f) {
    ++patterns;
    if (is_frequent(f) && !decide_condition_b(f)) ++bad;
  });
  o.require(patterns == 1024 && bad == 0, "f=5 sweep");
  o.require(!is_frequent(catalog::complete(3, 4)), "K4 frequent");
  return o;
}

Outcome homomorphisms() {
  Outcome o;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto h = oracle::random_hypergraph(3, 4 + seed % 8, 0.35, seed);
    o.require(count_homomorphisms(catalog::single_edge(), h) == BigInt(6 * h.edge_count()), "single edge");
    const std::size_t f = 1 + seed % 4;
    o.require(count_homomorphisms(catalog::edgeless(3, f), h) == big_pow(h.vertex_count(), f), "edgeless");
  }
  const auto path = parse_hypergraph("3 4 2\n0 1 2\n1 2 3\n");
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto small = oracle::random_hypergraph(3, 7, 0.25, seed + 100);
    auto edges = small.edges();
    const auto extra = oracle::random_hypergraph(3, 7, 0.25, seed + 200);
    for (const auto& e : extra.edges())
      if (!small.has_edge(e)) edges.push_back(e);
    const Hypergraph big(3, 7, edges);
    o.require(count_homomorphisms(path, small) <= count_homomorphisms(path, big), "monotonicity");
  }
  return o;
}

Outcome density_audits() {
  Outcome o;
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const std::size_t n = 6 + seed % 9;
    const auto h = oracle::random_hypergraph(3, n, 0.3, seed + 7);
    DensityQuery q;
    q.d = 0.15 + 0.02 * static_cast<double>(seed);
    q.eta = 0.002;
    const auto r = vertex_density_check(h, q);
    o.require(std::abs(r.slack - oracle::vertex_min_slack(h, q.d, q.eta)) <= 1e-9, "exact minimum");
    if (r.verdict == Verdict::violated)
      o.require(r.certificate && verify_density_certificate(h, *r.certificate, q.d, q.eta) == r.slack &&
                    r.slack < 0,
                "certificate");
    q.mode = AuditMode::heuristic;
    q.seed = seed;
    q.budget.restarts = 4;
    const auto t = triple_density_check(h, q);
    if (t.verdict == Verdict::violated)
      o.require(t.certificate && verify_density_certificate(h, *t.certificate, q.d, q.eta) == t.slack &&
                    t.slack < 0,
                "triple certificate");
  }
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::size_t n = 8 + seed % 17;
    const auto h = oracle::random_hypergraph(3, n, 0.3, seed + 500);
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(0.5);
    std::vector<char> x(n), y(n), z(n);
    for (std::size_t v = 0; v < n; ++v) x[v] = coin(rng), y[v] = coin(rng), z[v] = coin(rng);
    const auto tr = coordinate_descent(h, 0.05 + 0.009 * static_cast<double>(seed), x, y, z, 100);
    for (std::size_t i = 1; i < tr.objective.size(); ++i)
      o.require(tr.objective[i] <= tr.objective[i - 1] + 1e-9, "descent increased");
  }
  return o;
}

Outcome reduced_selection() {
  Outcome o;
  std::size_t unverified = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t m = 3 + seed % 10;
    const double mu = 0.3 + 0.1 * static_cast<double>(seed % 4);
    const auto a = random_reduced(m, 1 + seed % 3, 4 + seed % 4, std::min(1.0, mu + 0.25), mu, seed);
    const auto core = select_rainbow_core(a, mu, 3 + seed % 4, 200'000);
    if (core && !verify_core(a, *core)) ++unverified;
  }
  o.require(unverified == 0, "unverified successes: " + std::to_string(unverified));
  for (std::size_t m = 1; m <= 8; ++m)
    for (std::size_t f = 1; f <= m; ++f) {
      ReducedHypergraph a(m, 1 + m % 4);
      a.fill_complete();
      const auto core = select_rainbow_core(a, 1.0, f);
      o.require(core && core->lambda.size() == f && verify_core(a, *core),
                "complete m=" + std::to_string(m) + " f=" + std::to_string(f));
    }
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    std::mt19937_64 rng(seed);
    const std::size_t m = 4 + seed % 7;
    std::vector<std::size_t> sizes(m * m, 0);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) sizes[i * m + j] = 1 + rng() % 5;
    CandidateSystem sys(m, sizes);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j)
        for (std::size_t k = j + 1; k < m; ++k) {
          const std::size_t s = sizes[j * m + k];
          std::uint64_t c = 0;
          while (2 * static_cast<std::size_t>(std::popcount(c)) < s) c |= std::uint64_t{1} << (rng() % s);
          sys.set_mask(i, j, k, c);
        }
    const auto green = select_green(sys, 0.5, kMaximal);
    const auto red = select_red(reverse_system(sys), 0.5, kMaximal);
    bool same = green.has_value() == red.has_value();
    if (same && green) {
      same = green->indices.size() == red->indices.size();
      for (std::size_t a = 0; same && a < red->indices.size(); ++a)
        same = green->indices[red->indices.size() - 1 - a] == m - 1 - red->indices[a];
      for (const auto& [pair, p] : red->chosen)
        same = same && green->chosen.at({m - 1 - pair.second, m - 1 - pair.first}) == p;
    }
    o.require(same, "green vs reversed red, seed " + std::to_string(seed));
  }
  return o;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"ternary edge counts", ternary_counts},
      {"three-variable inequality scan", inequality_scan},
      {"ternary subset density audit", ternary_density_audit},
      {"optimality family", optimality},
      {"ordered rainbow colouring decider", condition_b},
      {"random pair-colouring construction", h_phi},
      {"frequency decider", frequency},
      {"homomorphism counting", homomorphisms},
      {"density auditors", density_audits},
      {"reduced selection soundness", reduced_selection},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::printf("%s %2d %s (%.2f s)%s%s\n", o.pass ? "PASS" : "FAIL", index, name, seconds_since(t0),
                o.pass ? "" : ": ", o.detail.c_str());
    std::fflush(stdout);
    failures += !o.pass;
  }
  return failures == 0 ? 0 : 1;
}
