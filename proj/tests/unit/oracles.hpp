#pragma once

// Slow, obviously-correct reference implementations used only by tests.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "udh/colour_order.hpp"
#include "udh/hypergraph.hpp"
#include "udh/ternary.hpp"

namespace oracle {

using udh::Hypergraph;
using udh::Tuple;
using udh::Vertex;

inline Hypergraph random_hypergraph(int k, std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Tuple> edges;
  udh::for_each_subset(n, static_cast<std::size_t>(k), [&](std::span<const std::uint32_t> t) {
    if (coin(rng)) edges.emplace_back(t.begin(), t.end());
    return true;
  });
  return Hypergraph(k, n, std::move(edges));
}

// T_n^(k) straight from the edge rule, checking every k-set of strings.
inline Hypergraph ternary_by_rule(int k, std::size_t n) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= static_cast<std::size_t>(k);
  std::vector<udh::KaryVector> strings;
  for (std::size_t id = 0; id < total; ++id) strings.push_back(udh::KaryVector::decode(k, n, id));
  std::vector<Tuple> edges;
  std::vector<udh::KaryVector> buf;
  udh::for_each_subset(total, static_cast<std::size_t>(k), [&](std::span<const std::uint32_t> t) {
    buf.clear();
    for (auto v : t) buf.push_back(strings[v]);
    if (udh::kary_edge(k, buf)) edges.emplace_back(t.begin(), t.end());
    return true;
  });
  return Hypergraph(k, total, std::move(edges));
}

// Calls visit(map) for all n^f maps [f] -> [n].
template <typename Visit>
void for_each_map(std::size_t f, std::size_t n, Visit&& visit) {
  std::vector<Vertex> map(f, 0);
  while (true) {
    visit(map);
    std::size_t i = 0;
    while (i < f && ++map[i] == n) map[i++] = 0;
    if (i == f) return;
  }
}

inline bool preserves_edges(const Hypergraph& pattern, const Hypergraph& host, const std::vector<Vertex>& map) {
  Tuple img;
  for (const auto& e : pattern.edges()) {
    img.clear();
    for (Vertex v : e) img.push_back(map[v]);
    std::sort(img.begin(), img.end());
    if (std::adjacent_find(img.begin(), img.end()) != img.end()) return false;
    if (!host.has_edge(img)) return false;
  }
  return true;
}

inline std::uint64_t hom_count(const Hypergraph& pattern, const Hypergraph& host) {
  std::uint64_t c = 0;
  for_each_map(pattern.vertex_count(), host.vertex_count(),
               [&](const std::vector<Vertex>& m) { c += preserves_edges(pattern, host, m); });
  return c;
}

inline std::uint64_t embedding_count(const Hypergraph& pattern, const Hypergraph& host) {
  std::uint64_t c = 0;
  for_each_map(pattern.vertex_count(), host.vertex_count(), [&](const std::vector<Vertex>& m) {
    auto s = m;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) return;
    c += preserves_edges(pattern, host, m);
  });
  return c;
}

// Whether some colouring of the shadow with colours 1..k is compatible with
// `ordering`, by trying all k^|shadow| colourings.
inline bool ordering_admits_colouring(const Hypergraph& f, const std::vector<Vertex>& ordering) {
  const auto sh = udh::shadow(f);
  const int k = f.uniformity();
  std::vector<std::size_t> pos(f.vertex_count());
  for (std::size_t p = 0; p < ordering.size(); ++p) pos[ordering[p]] = p;
  std::vector<udh::Colour> colours(sh.size(), 1);
  auto compatible = [&] {
    for (const auto& e : f.edges()) {
      Tuple ranked = e;
      std::sort(ranked.begin(), ranked.end(), [&](Vertex a, Vertex b) { return pos[a] < pos[b]; });
      // Dropping the l-th vertex by position leaves a tuple needing colour k-l
      // (l counted from 0).
      for (std::size_t l = 0; l < ranked.size(); ++l) {
        Tuple rest;
        for (Vertex v : e)
          if (v != ranked[l]) rest.push_back(v);
        if (colours[sh.index_of(rest)] != static_cast<udh::Colour>(k - static_cast<int>(l))) return false;
      }
    }
    return true;
  };
  while (true) {
    if (compatible()) return true;
    std::size_t i = 0;
    while (i < colours.size() && ++colours[i] > k) colours[i++] = 1;
    if (i == colours.size()) return false;
  }
}

inline std::uint64_t induced(const Hypergraph& h, std::uint64_t mask) {
  std::uint64_t c = 0;
  for (const auto& e : h.edges()) {
    bool in = true;
    for (Vertex v : e) in = in && (mask >> v & 1);
    c += in;
  }
  return c;
}

// min over U of e(U) - d C(|U|,k) + eta n^k, with a lexicographically least
// minimiser among exact ties.
inline double vertex_min_slack(const Hypergraph& h, double d, double eta) {
  const std::size_t n = h.vertex_count();
  double best = INFINITY;
  for (std::uint64_t u = 0; u < (std::uint64_t{1} << n); ++u) {
    const auto s = static_cast<std::uint64_t>(__builtin_popcountll(u));
    const double slack = static_cast<double>(induced(h, u)) -
                         d * static_cast<double>(udh::binomial(s, static_cast<std::uint64_t>(h.uniformity()))) +
                         eta * std::pow(static_cast<double>(n), h.uniformity());
    best = std::min(best, slack);
  }
  return best;
}

// min over all (X, Y, Z) of e3 - d|X||Y||Z| (no eta term), by 8^n enumeration.
inline double triple_min_objective(const Hypergraph& h, double d) {
  const std::size_t n = h.vertex_count();
  const std::uint64_t full = std::uint64_t{1} << n;
  double best = INFINITY;
  for (std::uint64_t x = 0; x < full; ++x)
    for (std::uint64_t y = 0; y < full; ++y)
      for (std::uint64_t z = 0; z < full; ++z) {
        std::uint64_t e3 = 0;
        for (const auto& e : h.edges()) {
          Tuple p = e;
          do e3 += (x >> p[0] & 1) && (y >> p[1] & 1) && (z >> p[2] & 1);
          while (std::next_permutation(p.begin(), p.end()));
        }
        const double v = static_cast<double>(e3) - d * __builtin_popcountll(x) * __builtin_popcountll(y) *
                                                       __builtin_popcountll(z);
        best = std::min(best, v);
      }
  return best;
}

// Random linear 3-graph: edges added greedily while no pair is reused.
inline Hypergraph random_linear(std::size_t n, std::size_t attempts, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
  std::vector<std::vector<char>> used(n, std::vector<char>(n, 0));
  std::vector<Tuple> edges;
  for (std::size_t a = 0; a < attempts; ++a) {
    Tuple e{pick(rng), pick(rng), pick(rng)};
    std::sort(e.begin(), e.end());
    if (e[0] == e[1] || e[1] == e[2]) continue;
    if (used[e[0]][e[1]] || used[e[0]][e[2]] || used[e[1]][e[2]]) continue;
    used[e[0]][e[1]] = used[e[0]][e[2]] = used[e[1]][e[2]] = 1;
    edges.push_back(e);
  }
  return Hypergraph(3, n, std::move(edges));
}

}  // namespace oracle
