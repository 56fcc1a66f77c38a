#include "udh/density_audit.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <mutex>
#include <thread>

namespace udh {

std::string to_string(AuditMode m) { return m == AuditMode::exact ? "exact" : "heuristic"; }

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::satisfied: return "satisfied";
    case Verdict::violated: return "violated";
    case Verdict::unresolved: return "unresolved";
  }
  return "unresolved";
}

std::string to_string(Notion n) {
  switch (n) {
    case Notion::vertex: return "vertex";
    case Notion::triple: return "triple";
    case Notion::profile: return "profile";
  }
  return "vertex";
}

void DensityQuery::validate() const {
  if (!(d >= 0.0 && d <= 1.0)) throw Error("density threshold d must lie in [0, 1]");
  if (!(eta > 0.0)) throw Error("slack parameter eta must be positive");
  if (budget.restarts < 1 || budget.iterations < 1) throw Error("budget must be at least 1");
}

namespace {

double choose_real(std::size_t n, int k) { return static_cast<double>(binomial(n, static_cast<std::uint64_t>(k))); }

double eta_term(double eta, std::size_t n, int k) { return eta * std::pow(static_cast<double>(n), k); }

// need[s] = d * C(s, k) - eta * n^k, so slack(U) = e(U) - need[|U|].
std::vector<double> vertex_thresholds(std::size_t n, int k, double d, double eta) {
  std::vector<double> need(n + 1);
  const double shift = eta_term(eta, n, k);
  for (std::size_t s = 0; s <= n; ++s) need[s] = d * choose_real(s, k) - shift;
  return need;
}

// Incremental edge counting over bitmask subsets of at most 32 vertices.
class MaskEdgeCounter {
 public:
  explicit MaskEdgeCounter(const Hypergraph& h) : k_(h.uniformity()), n_(h.vertex_count()) {
    others_.resize(n_);
    link_.assign(n_, std::vector<std::uint32_t>(n_, 0));
    for (const auto& e : h.edges()) {
      std::uint32_t m = 0;
      for (Vertex v : e) m |= 1u << v;
      masks_.push_back(m);
      for (Vertex v : e) others_[v].push_back(m & ~(1u << v));
      if (k_ == 3) {
        link_[e[0]][e[1]] |= 1u << e[2];
        link_[e[1]][e[0]] |= 1u << e[2];
        link_[e[0]][e[2]] |= 1u << e[1];
        link_[e[2]][e[0]] |= 1u << e[1];
        link_[e[1]][e[2]] |= 1u << e[0];
        link_[e[2]][e[1]] |= 1u << e[0];
      }
    }
  }

  std::uint64_t count(std::uint32_t u) const {
    std::uint64_t c = 0;
    for (std::uint32_t m : masks_) c += (m & u) == m;
    return c;
  }

  // Edges containing v whose other vertices all lie in u (v itself ignored).
  std::uint64_t delta(Vertex v, std::uint32_t u) const {
    u &= ~(1u << v);
    if (k_ == 3) {
      std::uint64_t twice = 0;
      for (std::uint32_t m = u; m; m &= m - 1)
        twice += static_cast<std::uint64_t>(std::popcount(link_[v][static_cast<std::size_t>(std::countr_zero(m))] & u));
      return twice / 2;
    }
    std::uint64_t c = 0;
    for (std::uint32_t m : others_[v]) c += (m & u) == m;
    return c;
  }

 private:
  int k_;
  std::size_t n_;
  std::vector<std::uint32_t> masks_;
  std::vector<std::vector<std::uint32_t>> others_;
  std::vector<std::vector<std::uint32_t>> link_;
};

// Visits every subset whose bits >= low_bits equal `high`, in Gray-code order,
// passing (mask, e(mask)).
template <typename Visit>
void gray_walk(const MaskEdgeCounter& counter, std::uint32_t high, unsigned low_bits, Visit&& visit) {
  std::uint32_t u = high;
  std::uint64_t e = counter.count(u);
  visit(u, e);
  const std::uint64_t total = std::uint64_t{1} << low_bits;
  for (std::uint64_t i = 1; i < total; ++i) {
    const auto v = static_cast<Vertex>(std::countr_zero(i));
    const std::uint32_t bit = 1u << v;
    if (u & bit) {
      u ^= bit;
      e -= counter.delta(v, u);
    } else {
      e += counter.delta(v, u);
      u ^= bit;
    }
    visit(u, e);
  }
}

// Splits the 2^n subsets into chunks by their top bits and runs `work(high,
// low_bits, chunk_index)` for each chunk on up to `threads` workers.
template <typename Work>
void for_each_chunk(std::size_t n, unsigned threads, Work&& work) {
  unsigned high_bits = 0;
  while (high_bits < 6 && (1u << high_bits) < threads && high_bits + 1 < n) ++high_bits;
  const unsigned low_bits = static_cast<unsigned>(n) - high_bits;
  const std::size_t chunks = std::size_t{1} << high_bits;
  if (threads <= 1 || chunks == 1) {
    for (std::size_t c = 0; c < chunks; ++c) work(static_cast<std::uint32_t>(c << low_bits), low_bits, c);
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      for (std::size_t c = t; c < chunks; c += threads) work(static_cast<std::uint32_t>(c << low_bits), low_bits, c);
    });
  for (auto& th : pool) th.join();
}

struct MaskBest {
  double slack = std::numeric_limits<double>::infinity();
  std::uint32_t mask = 0;
  bool set = false;

  void offer(double s, std::uint32_t m) {
    if (!set || s < slack || (s == slack && mask_lex_less(m, mask))) {
      slack = s;
      mask = m;
      set = true;
    }
  }
};

std::vector<Vertex> members_of(const std::vector<char>& in) {
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < in.size(); ++v)
    if (in[v]) out.push_back(static_cast<Vertex>(v));
  return out;
}

// Membership with, per vertex, the number of incident edges whose other
// vertices all lie in the set.
class LocalSearchState {
 public:
  LocalSearchState(const Hypergraph& h, std::vector<char> in) : h_(h), in_(std::move(in)), inside_(h.vertex_count(), 0) {
    for (const auto& e : h.edges()) {
      std::size_t missing = 0;
      Vertex last = 0;
      for (Vertex v : e)
        if (!in_[v]) {
          ++missing;
          last = v;
        }
      if (missing == 0) {
        ++edges_;
        for (Vertex v : e) ++inside_[v];
      } else if (missing == 1) {
        ++inside_[last];
      }
    }
    size_ = static_cast<std::size_t>(std::count(in_.begin(), in_.end(), 1));
  }

  void toggle(Vertex u) {
    const bool adding = !in_[u];
    if (adding) edges_ += inside_[u];
    else edges_ -= inside_[u];
    for (std::size_t ei : h_.incident_edges(u)) {
      const auto& e = h_.edges()[ei];
      for (Vertex w : e) {
        if (w == u) continue;
        bool rest = true;
        for (Vertex x : e)
          if (x != u && x != w && !in_[x]) rest = false;
        if (!rest) continue;
        if (adding) ++inside_[w];
        else --inside_[w];
      }
    }
    in_[u] = adding ? 1 : 0;
    size_ += adding ? 1 : static_cast<std::size_t>(-1);
  }

  std::uint64_t edges() const { return edges_; }
  std::size_t size() const { return size_; }
  bool contains(Vertex v) const { return in_[v] != 0; }
  std::uint64_t inside(Vertex v) const { return inside_[v]; }
  const std::vector<char>& membership() const { return in_; }

 private:
  const Hypergraph& h_;
  std::vector<char> in_;
  std::vector<std::uint64_t> inside_;
  std::uint64_t edges_ = 0;
  std::size_t size_ = 0;
};

std::vector<char> random_membership(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double p = unit(rng);
  std::vector<char> in(n, 0);
  for (auto& b : in) b = unit(rng) < p ? 1 : 0;
  return in;
}

}  // namespace

// ---------------------------------------------------------------------------

SizeMinima exact_size_minima(const Hypergraph& h, unsigned threads, std::size_t vertex_limit) {
  const std::size_t n = h.vertex_count();
  if (n > std::min<std::size_t>(vertex_limit, 31))
    throw Error("exact mode supports at most " + std::to_string(std::min<std::size_t>(vertex_limit, 31)) + " vertices");
  MaskEdgeCounter counter(h);
  std::mutex guard;
  std::vector<std::pair<std::size_t, SizeMinima>> done;
  for_each_chunk(n, threads, [&](std::uint32_t high, unsigned low_bits, std::size_t chunk) {
    SizeMinima local{std::vector<std::uint64_t>(n + 1, UINT64_MAX), std::vector<std::uint64_t>(n + 1, 0)};
    gray_walk(counter, high, low_bits, [&](std::uint32_t u, std::uint64_t e) {
      const auto s = static_cast<std::size_t>(std::popcount(u));
      if (e < local.min_edges[s] || (e == local.min_edges[s] && mask_lex_less(u, static_cast<std::uint32_t>(local.argmin[s])))) {
        local.min_edges[s] = e;
        local.argmin[s] = u;
      }
    });
    std::lock_guard lock(guard);
    done.emplace_back(chunk, std::move(local));
  });
  SizeMinima out{std::vector<std::uint64_t>(n + 1, UINT64_MAX), std::vector<std::uint64_t>(n + 1, 0)};
  for (const auto& [chunk, local] : done)
    for (std::size_t s = 0; s <= n; ++s)
      if (local.min_edges[s] < out.min_edges[s] ||
          (local.min_edges[s] == out.min_edges[s] && local.min_edges[s] != UINT64_MAX &&
           mask_lex_less(local.argmin[s], out.argmin[s]))) {
        out.min_edges[s] = local.min_edges[s];
        out.argmin[s] = local.argmin[s];
      }
  return out;
}

DensityReport vertex_density_check(const Hypergraph& h, const DensityQuery& q) {
  q.validate();
  const std::size_t n = h.vertex_count();
  const int k = h.uniformity();
  const auto need = vertex_thresholds(n, k, q.d, q.eta);
  DensityReport report;
  report.notion = Notion::vertex;
  report.d = q.d;
  report.eta = q.eta;

  if (q.mode == AuditMode::exact) {
    if (n > kExactVertexLimit) throw Error("exact vertex audit supports at most 24 vertices; use heuristic mode");
    MaskEdgeCounter counter(h);
    std::mutex guard;
    MaskBest best;
    for_each_chunk(n, q.threads, [&](std::uint32_t high, unsigned low_bits, std::size_t) {
      MaskBest local;
      gray_walk(counter, high, low_bits, [&](std::uint32_t u, std::uint64_t e) {
        local.offer(static_cast<double>(e) - need[static_cast<std::size_t>(std::popcount(u))], u);
      });
      std::lock_guard lock(guard);
      best.offer(local.slack, local.mask);
    });
    report.stats.sets_examined = std::uint64_t{1} << n;
    report.slack = best.slack;
    if (best.slack < 0.0) {
      report.verdict = Verdict::violated;
      report.certificate = DensityCertificate{Notion::vertex, mask_to_vertices(best.mask), {}, {}, {}};
      // Reported slack is the from-scratch value, so certificates re-verify exactly.
      report.slack = verify_density_certificate(h, *report.certificate, q.d, q.eta);
    } else {
      report.verdict = Verdict::satisfied;
    }
    return report;
  }

  // Heuristic: random restarts, each followed by greedy single-vertex moves.
  double best_slack = std::numeric_limits<double>::infinity();
  std::vector<char> best_set;
  for (std::size_t r = 0; r < q.budget.restarts; ++r) {
    auto rng = make_rng(q.seed, r);
    LocalSearchState state(h, random_membership(n, rng));
    double current = static_cast<double>(state.edges()) - need[state.size()];
    ++report.stats.sets_examined;
    for (std::size_t it = 0; it < q.budget.iterations; ++it) {
      double move_slack = current;
      std::size_t move = n;
      for (Vertex v = 0; v < n; ++v) {
        const double s = state.contains(v) ? static_cast<double>(state.edges() - state.inside(v)) - need[state.size() - 1]
                                           : static_cast<double>(state.edges() + state.inside(v)) - need[state.size() + 1];
        if (s < move_slack) {
          move_slack = s;
          move = v;
        }
      }
      report.stats.sets_examined += n;
      ++report.stats.descent_iterations;
      if (move == n) break;
      state.toggle(static_cast<Vertex>(move));
      current = move_slack;
    }
    if (current < best_slack) {
      best_slack = current;
      best_set = state.membership();
    }
  }
  report.slack = best_slack;
  if (best_slack < 0.0) {
    report.verdict = Verdict::violated;
    report.certificate = DensityCertificate{Notion::vertex, members_of(best_set), {}, {}, {}};
    report.slack = verify_density_certificate(h, *report.certificate, q.d, q.eta);
  } else {
    report.verdict = Verdict::unresolved;
  }
  return report;
}

// ---------------------------------------------------------------------------

namespace {

// deg[v] = number of ordered (a, b) in A x B with {a, b, v} an edge.
std::vector<std::uint64_t> pair_degrees(const Hypergraph& h, const std::vector<char>& a, const std::vector<char>& b) {
  std::vector<std::uint64_t> deg(h.vertex_count(), 0);
  for (const auto& e : h.edges()) {
    for (std::size_t i = 0; i < 3; ++i) {
      const Vertex v = e[i];
      const Vertex p = e[(i + 1) % 3];
      const Vertex r = e[(i + 2) % 3];
      deg[v] += static_cast<std::uint64_t>(a[p] && b[r]) + static_cast<std::uint64_t>(a[r] && b[p]);
    }
  }
  return deg;
}

std::size_t count_members(const std::vector<char>& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), 1)); }

double triple_objective(const Hypergraph& h, double d, const std::vector<char>& x, const std::vector<char>& y,
                        const std::vector<char>& z) {
  const auto deg = pair_degrees(h, x, y);
  std::uint64_t e3 = 0;
  for (std::size_t v = 0; v < z.size(); ++v)
    if (z[v]) e3 += deg[v];
  return static_cast<double>(e3) -
         d * static_cast<double>(count_members(x)) * static_cast<double>(count_members(y)) * static_cast<double>(count_members(z));
}

std::vector<char> best_response(const Hypergraph& h, double d, const std::vector<char>& a, const std::vector<char>& b) {
  const auto deg = pair_degrees(h, a, b);
  const double cut = d * static_cast<double>(count_members(a)) * static_cast<double>(count_members(b));
  std::vector<char> out(h.vertex_count(), 0);
  for (std::size_t v = 0; v < out.size(); ++v) out[v] = static_cast<double>(deg[v]) < cut ? 1 : 0;
  return out;
}

}  // namespace

DescentTrace coordinate_descent(const Hypergraph& h, double d, std::vector<char> x, std::vector<char> y,
                                std::vector<char> z, std::size_t max_steps) {
  if (h.uniformity() != 3) throw Error("the three-set notion is defined for 3-uniform hypergraphs");
  DescentTrace trace;
  trace.objective.push_back(triple_objective(h, d, x, y, z));
  std::size_t unchanged = 0;
  for (std::size_t step = 0; step < max_steps; ++step) {
    // Cycle Z, X, Y; each coordinate is replaced by its exact minimiser.
    std::vector<char>* target = nullptr;
    std::vector<char> next;
    switch (step % 3) {
      case 0:
        next = best_response(h, d, x, y);
        target = &z;
        break;
      case 1:
        next = best_response(h, d, y, z);
        target = &x;
        break;
      default:
        next = best_response(h, d, x, z);
        target = &y;
        break;
    }
    const bool changed = next != *target;
    *target = std::move(next);
    trace.objective.push_back(triple_objective(h, d, x, y, z));
    ++trace.steps;
    unchanged = changed ? 0 : unchanged + 1;
    if (unchanged >= 3) {
      trace.fixed_point = true;
      break;
    }
  }
  trace.x = std::move(x);
  trace.y = std::move(y);
  trace.z = std::move(z);
  return trace;
}

DensityReport triple_density_check(const Hypergraph& h, const DensityQuery& q) {
  q.validate();
  if (h.uniformity() != 3) throw Error("the three-set notion is defined for 3-uniform hypergraphs");
  const std::size_t n = h.vertex_count();
  const double shift = eta_term(q.eta, n, 3);
  DensityReport report;
  report.notion = Notion::triple;
  report.d = q.d;
  report.eta = q.eta;

  if (q.mode == AuditMode::exact) {
    if (n > kExactTripleLimit) throw Error("exact triple audit supports at most 10 vertices; use heuristic mode");
    // For every (X, Y) the best Z is explicit, so 4^n pairs cover all 8^n
    // triples.
    std::vector<std::vector<std::uint32_t>> link(n, std::vector<std::uint32_t>(n, 0));
    for (const auto& e : h.edges())
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
          if (i != j) link[e[i]][e[j]] |= 1u << e[3 - i - j];
    double best = std::numeric_limits<double>::infinity();
    std::uint32_t bx = 0, by = 0, bz = 0;
    const std::uint32_t full = n == 0 ? 0 : (1u << n) - 1;
    for (std::uint32_t xm = 0;; ++xm) {
      const int sx = std::popcount(xm);
      for (std::uint32_t ym = 0;; ++ym) {
        const double cut = q.d * sx * std::popcount(ym);
        double value = 0.0;
        std::uint32_t zm = 0;
        for (std::size_t v = 0; v < n; ++v) {
          std::uint64_t deg = 0;
          for (std::uint32_t m = xm; m; m &= m - 1)
            deg += static_cast<std::uint64_t>(std::popcount(link[v][static_cast<std::size_t>(std::countr_zero(m))] & ym));
          const double gain = static_cast<double>(deg) - cut;
          if (gain < 0.0) {
            value += gain;
            zm |= 1u << v;
          }
        }
        if (value < best) {
          best = value;
          bx = xm;
          by = ym;
          bz = zm;
        }
        ++report.stats.sets_examined;
        if (ym == full) break;
      }
      if (xm == full) break;
    }
    report.slack = best + shift;
    if (report.slack < 0.0) {
      report.verdict = Verdict::violated;
      report.certificate =
          DensityCertificate{Notion::triple, {}, mask_to_vertices(bx), mask_to_vertices(by), mask_to_vertices(bz)};
      report.slack = verify_density_certificate(h, *report.certificate, q.d, q.eta);
    } else {
      report.verdict = Verdict::satisfied;
    }
    return report;
  }

  double best = std::numeric_limits<double>::infinity();
  DescentTrace best_trace;
  for (std::size_t r = 0; r < q.budget.restarts; ++r) {
    auto rng = make_rng(q.seed, r);
    auto x = random_membership(n, rng);
    auto y = random_membership(n, rng);
    auto z = random_membership(n, rng);
    auto trace = coordinate_descent(h, q.d, std::move(x), std::move(y), std::move(z), q.budget.iterations);
    report.stats.descent_iterations += trace.steps;
    report.stats.sets_examined += trace.steps + 1;
    if (trace.objective.back() < best) {
      best = trace.objective.back();
      best_trace = std::move(trace);
    }
  }
  report.slack = best + shift;
  if (report.slack < 0.0) {
    report.verdict = Verdict::violated;
    report.certificate = DensityCertificate{Notion::triple, {}, members_of(best_trace.x), members_of(best_trace.y),
                                            members_of(best_trace.z)};
    report.slack = verify_density_certificate(h, *report.certificate, q.d, q.eta);
  } else {
    report.verdict = Verdict::unresolved;
  }
  return report;
}

// ---------------------------------------------------------------------------

std::uint64_t ordered_triple_count(const Hypergraph& h, const std::vector<Vertex>& x, const std::vector<Vertex>& y,
                                   const std::vector<Vertex>& z) {
  std::vector<char> in_x(h.vertex_count(), 0), in_y(h.vertex_count(), 0), in_z(h.vertex_count(), 0);
  for (Vertex v : x) in_x.at(v) = 1;
  for (Vertex v : y) in_y.at(v) = 1;
  for (Vertex v : z) in_z.at(v) = 1;
  std::uint64_t count = 0;
  for (const auto& e : h.edges()) {
    Tuple p = e;
    do {
      count += static_cast<std::uint64_t>(in_x[p[0]] && in_y[p[1]] && in_z[p[2]]);
    } while (std::next_permutation(p.begin(), p.end()));
  }
  return count;
}

namespace {

void check_vertices(const Hypergraph& h, const std::vector<Vertex>& s) {
  std::vector<char> seen(h.vertex_count(), 0);
  for (Vertex v : s) {
    if (v >= h.vertex_count()) throw Error("certificate vertex " + std::to_string(v) + " out of range");
    if (seen[v]) throw Error("certificate lists vertex " + std::to_string(v) + " twice");
    seen[v] = 1;
  }
}

}  // namespace

double verify_density_certificate(const Hypergraph& h, const DensityCertificate& cert, double d, double eta) {
  const std::size_t n = h.vertex_count();
  if (cert.notion == Notion::triple) {
    if (h.uniformity() != 3) throw Error("the three-set notion is defined for 3-uniform hypergraphs");
    check_vertices(h, cert.x);
    check_vertices(h, cert.y);
    check_vertices(h, cert.z);
    const auto e3 = ordered_triple_count(h, cert.x, cert.y, cert.z);
    return static_cast<double>(e3) -
           d * static_cast<double>(cert.x.size()) * static_cast<double>(cert.y.size()) * static_cast<double>(cert.z.size()) +
           eta_term(eta, n, 3);
  }
  check_vertices(h, cert.u);
  const auto e = induced_edge_count(h, cert.u);
  return static_cast<double>(e) - d * choose_real(cert.u.size(), h.uniformity()) + eta_term(eta, n, h.uniformity());
}

// ---------------------------------------------------------------------------

std::vector<ProfilePoint> density_profile(const Hypergraph& h, const std::vector<double>& eta_grid, AuditMode mode,
                                          const AuditBudget& budget, std::uint64_t seed) {
  if (eta_grid.empty()) throw Error("eta grid is empty");
  const std::size_t n = h.vertex_count();
  const int k = h.uniformity();
  std::vector<ProfilePoint> out;
  std::optional<SizeMinima> minima;
  if (mode == AuditMode::exact) {
    if (n > kExactVertexLimit) throw Error("exact profile supports at most 24 vertices; use heuristic mode");
    minima = exact_size_minima(h);
  }
  for (std::size_t gi = 0; gi < eta_grid.size(); ++gi) {
    const double eta = eta_grid[gi];
    if (!(eta > 0.0 && eta <= 1.0)) throw Error("eta values must lie in (0, 1]");
    ProfilePoint p;
    p.eta = eta;
    // "at least eta * n" vertices, read with a ceiling; the 1e-9 guard keeps
    // products such as (2/3) * 9 from rounding up past an integer.
    p.min_size = std::max(static_cast<std::size_t>(std::ceil(eta * static_cast<double>(n) - 1e-9)), static_cast<std::size_t>(k));
    if (p.min_size > n) throw Error("no vertex set is large enough for eta = " + std::to_string(eta));
    p.value = std::numeric_limits<double>::infinity();
    if (minima) {
      p.exact = true;
      for (std::size_t s = p.min_size; s <= n; ++s) {
        const double rel = static_cast<double>(minima->min_edges[s]) / choose_real(s, k);
        if (rel < p.value) {
          p.value = rel;
          p.argmin = mask_to_vertices(minima->argmin[s]);
        }
      }
    } else {
      // Fixed-size swap descent from random starts, cycling through the
      // admissible sizes.
      const std::size_t span = n - p.min_size + 1;
      for (std::size_t r = 0; r < budget.restarts; ++r) {
        auto rng = make_rng(seed, gi * budget.restarts + r);
        const std::size_t size = p.min_size + r % span;
        std::vector<Vertex> perm(n);
        for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<Vertex>(i);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<char> in(n, 0);
        for (std::size_t i = 0; i < size; ++i) in[perm[i]] = 1;
        LocalSearchState state(h, std::move(in));
        for (std::size_t it = 0; it < budget.iterations; ++it) {
          std::uint64_t best_edges = state.edges();
          Vertex out_v = 0, in_v = 0;
          bool improved = false;
          for (Vertex a = 0; a < n; ++a) {
            if (!state.contains(a)) continue;
            state.toggle(a);
            for (Vertex b = 0; b < n; ++b) {
              if (b == a || state.contains(b)) continue;
              const std::uint64_t e = state.edges() + state.inside(b);
              if (e < best_edges) {
                best_edges = e;
                out_v = a;
                in_v = b;
                improved = true;
              }
            }
            state.toggle(a);
          }
          if (!improved) break;
          state.toggle(out_v);
          state.toggle(in_v);
        }
        const double rel = static_cast<double>(state.edges()) / choose_real(size, k);
        if (rel < p.value) {
          p.value = rel;
          p.argmin = members_of(state.membership());
        }
      }
    }
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace udh
