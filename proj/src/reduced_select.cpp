#include "udh/reduced_select.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace udh {

namespace {

// Failing postconditions are bugs, not input errors.
[[noreturn]] void contract_failure(const std::string& what) { throw std::logic_error("postcondition violated: " + what); }

std::uint64_t full_mask(std::size_t size) { return size >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << size) - 1; }

// Tolerance for comparisons of integer counts against real thresholds.
constexpr double kSlack = 1e-9;

bool at_least(std::uint64_t count, double threshold) { return static_cast<double>(count) + kSlack >= threshold; }

std::string pair_name(std::size_t i, std::size_t j) { return std::to_string(i) + "," + std::to_string(j); }

}  // namespace

// ---------------------------------------------------------------------------
// ReducedHypergraph

ReducedHypergraph::ReducedHypergraph(std::size_t m, const std::vector<std::vector<std::size_t>>& sizes)
    : m_(m), sizes_(m * m, 0), rows_(m * m * m) {
  if (m > kMaxIndices) throw Error("at most 64 indices are supported");
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      const std::size_t s = sizes.at(i).at(j);
      if (s < 1 || s > kMaxClassSize) throw Error("class " + pair_name(i, j) + " must have 1..64 vertices");
      sizes_[i * m + j] = s;
    }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (std::size_t k = j + 1; k < m; ++k) rows_[triple_slot(i, j, k)].assign(class_size(i, j) * class_size(i, k), 0);
}

ReducedHypergraph::ReducedHypergraph(std::size_t m, std::size_t class_size)
    : ReducedHypergraph(m, std::vector<std::vector<std::size_t>>(m, std::vector<std::size_t>(m, class_size))) {}

std::size_t ReducedHypergraph::class_size(std::size_t i, std::size_t j) const {
  if (!(i < j && j < m_)) throw Error("no class for index pair " + pair_name(i, j));
  return sizes_[i * m_ + j];
}

std::size_t ReducedHypergraph::triple_slot(std::size_t i, std::size_t j, std::size_t k) const {
  if (!(i < j && j < k && k < m_)) throw Error("index triple must satisfy i < j < k < m");
  return (i * m_ + j) * m_ + k;
}

void ReducedHypergraph::add_triple(std::size_t i, std::size_t j, std::size_t k, std::size_t p, std::size_t q,
                                   std::size_t r) {
  const std::size_t slot = triple_slot(i, j, k);
  if (p >= class_size(i, j) || q >= class_size(i, k) || r >= class_size(j, k))
    throw Error("constituent triple has a vertex outside its class");
  rows_[slot][p * class_size(i, k) + q] |= std::uint64_t{1} << r;
}

bool ReducedHypergraph::has_triple(std::size_t i, std::size_t j, std::size_t k, std::size_t p, std::size_t q,
                                   std::size_t r) const {
  if (r >= class_size(j, k)) throw Error("vertex outside its class");
  return completions(i, j, k, p, q) >> r & 1;
}

std::uint64_t ReducedHypergraph::completions(std::size_t i, std::size_t j, std::size_t k, std::size_t p,
                                             std::size_t q) const {
  const std::size_t slot = triple_slot(i, j, k);
  if (p >= class_size(i, j) || q >= class_size(i, k)) throw Error("vertex outside its class");
  return rows_[slot][p * class_size(i, k) + q];
}

std::uint64_t ReducedHypergraph::constituent_size(std::size_t i, std::size_t j, std::size_t k) const {
  std::uint64_t c = 0;
  for (std::uint64_t row : rows_[triple_slot(i, j, k)]) c += static_cast<std::uint64_t>(std::popcount(row));
  return c;
}

std::vector<std::array<std::size_t, 3>> ReducedHypergraph::triples(std::size_t i, std::size_t j, std::size_t k) const {
  std::vector<std::array<std::size_t, 3>> out;
  const auto& rows = rows_[triple_slot(i, j, k)];
  const std::size_t b = class_size(i, k);
  for (std::size_t idx = 0; idx < rows.size(); ++idx)
    for (std::uint64_t m = rows[idx]; m; m &= m - 1)
      out.push_back({idx / b, idx % b, static_cast<std::size_t>(std::countr_zero(m))});
  return out;
}

void ReducedHypergraph::fill_complete() {
  for (std::size_t i = 0; i < m_; ++i)
    for (std::size_t j = i + 1; j < m_; ++j)
      for (std::size_t k = j + 1; k < m_; ++k)
        std::fill(rows_[triple_slot(i, j, k)].begin(), rows_[triple_slot(i, j, k)].end(), full_mask(class_size(j, k)));
}

DensityWitness is_mu_dense(const ReducedHypergraph& a, double mu) {
  if (!(mu >= 0.0 && mu <= 1.0)) throw Error("mu must lie in [0, 1]");
  DensityWitness w;
  bool first = true;
  const std::size_t m = a.index_count();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (std::size_t k = j + 1; k < m; ++k) {
        const double volume =
            static_cast<double>(a.class_size(i, j)) * static_cast<double>(a.class_size(i, k)) * static_cast<double>(a.class_size(j, k));
        const std::uint64_t e = a.constituent_size(i, j, k);
        const double ratio = static_cast<double>(e) / volume;
        if (first || ratio < w.ratio) {
          w.ratio = ratio;
          w.i = i;
          w.j = j;
          w.k = k;
          first = false;
        }
        if (!at_least(e, mu * volume)) w.dense = false;
      }
  return w;
}

std::uint64_t degree(const ReducedHypergraph& a, std::size_t i, std::size_t j, std::size_t k, std::size_t p) {
  std::uint64_t d = 0;
  for (std::size_t q = 0; q < a.class_size(i, k); ++q)
    d += static_cast<std::uint64_t>(std::popcount(a.completions(i, j, k, p, q)));
  return d;
}

std::uint64_t pair_degree(const ReducedHypergraph& a, std::size_t i, std::size_t j, std::size_t k, std::size_t p,
                          std::size_t q) {
  return static_cast<std::uint64_t>(std::popcount(a.completions(i, j, k, p, q)));
}

std::uint64_t red_candidates(const ReducedHypergraph& a, double mu_prime, std::size_t i, std::size_t j, std::size_t k) {
  const double cut = mu_prime * static_cast<double>(a.class_size(i, k)) * static_cast<double>(a.class_size(j, k));
  std::uint64_t out = 0;
  for (std::size_t p = 0; p < a.class_size(i, j); ++p)
    if (at_least(degree(a, i, j, k, p), cut)) out |= std::uint64_t{1} << p;
  return out;
}

// ---------------------------------------------------------------------------
// Candidate systems

CandidateSystem::CandidateSystem(std::size_t m, std::vector<std::size_t> sizes)
    : m_(m), sizes_(std::move(sizes)), masks_(m * m * m, 0) {
  if (m > kMaxIndices) throw Error("at most 64 indices are supported");
  if (sizes_.size() != m * m) throw Error("class size table must be m x m");
}

namespace {

IndexPair class_of(Colour3 colour, std::size_t i, std::size_t j, std::size_t k) {
  switch (colour) {
    case Colour3::red: return {i, j};
    case Colour3::blue: return {i, k};
    case Colour3::green: return {j, k};
  }
  return {i, j};
}

}  // namespace

void check_candidates(const CandidateSystem& sys, Colour3 colour, double eps) {
  if (!(eps >= 0.0 && eps <= 1.0)) throw Error("eps must lie in [0, 1]");
  const std::size_t m = sys.index_count();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      const std::size_t s = sys.class_size(i, j);
      if (s < 1 || s > kMaxClassSize) throw Error("class " + pair_name(i, j) + " must have 1..64 vertices");
    }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (std::size_t k = j + 1; k < m; ++k) {
        const auto [a, b] = class_of(colour, i, j, k);
        const std::size_t s = sys.class_size(a, b);
        const std::uint64_t c = sys.mask(i, j, k);
        if (c & ~full_mask(s))
          throw Error("candidate set for triple " + pair_name(i, j) + "," + std::to_string(k) + " leaves its class");
        if (!at_least(static_cast<std::uint64_t>(std::popcount(c)), eps * static_cast<double>(s)))
          throw Error("candidate set for triple " + pair_name(i, j) + "," + std::to_string(k) +
                      " is smaller than eps times its class");
      }
}

CandidateSystem reverse_system(const CandidateSystem& sys) {
  const std::size_t m = sys.index_count();
  CandidateSystem out(m, std::vector<std::size_t>(m * m, 0));
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t s = r + 1; s < m; ++s) out.set_class_size(r, s, sys.class_size(m - 1 - s, m - 1 - r));
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t s = r + 1; s < m; ++s)
      for (std::size_t t = s + 1; t < m; ++t) out.set_mask(r, s, t, sys.mask(m - 1 - t, m - 1 - s, m - 1 - r));
  return out;
}

bool verify_selection(const CandidateSystem& sys, Colour3 colour, const PairSelection& sel) {
  const auto& x = sel.indices;
  for (std::size_t a = 0; a < x.size(); ++a) {
    if (x[a] >= sys.index_count()) return false;
    if (a > 0 && x[a - 1] >= x[a]) return false;
  }
  for (std::size_t a = 0; a < x.size(); ++a)
    for (std::size_t b = a + 1; b < x.size(); ++b) {
      auto it = sel.chosen.find({x[a], x[b]});
      if (it == sel.chosen.end() || it->second >= sys.class_size(x[a], x[b])) return false;
    }
  for (std::size_t a = 0; a < x.size(); ++a)
    for (std::size_t b = a + 1; b < x.size(); ++b)
      for (std::size_t c = b + 1; c < x.size(); ++c) {
        const auto cls = class_of(colour, x[a], x[b], x[c]);
        if (!(sys.mask(x[a], x[b], x[c]) >> sel.chosen.at(cls) & 1)) return false;
      }
  return true;
}

// ---------------------------------------------------------------------------
// Red stage

namespace {

// Picks (P_1..P_h) maximising the number of surviving future indices, where
// futures[r][p] is the set of futures that stay alive if P_r = p.
class TupleSearch {
 public:
  TupleSearch(const std::vector<std::vector<std::uint64_t>>& futures, std::uint64_t alive, std::size_t budget,
              SelectStats& stats)
      : futures_(futures), budget_(budget), stats_(stats), current_(futures.size(), 0) {
    dfs(0, alive);
    if (best_count_ < 0) {
      // Budget ran out before any complete tuple: fall back to all zeros.
      best_.assign(futures.size(), 0);
      best_alive_ = alive;
      for (std::size_t r = 0; r < futures.size(); ++r) best_alive_ &= futures[r][0];
    }
  }

  const std::vector<std::size_t>& tuple() const { return best_; }
  std::uint64_t alive() const { return best_alive_; }

 private:
  void dfs(std::size_t r, std::uint64_t alive) {
    if (used_ >= budget_) {
      stats_.budget_hit = true;
      return;
    }
    ++used_;
    ++stats_.nodes;
    if (r == futures_.size()) {
      const int c = std::popcount(alive);
      if (c > best_count_) {
        best_count_ = c;
        best_ = current_;
        best_alive_ = alive;
      }
      return;
    }
    for (std::size_t p = 0; p < futures_[r].size(); ++p) {
      const std::uint64_t next = alive & futures_[r][p];
      // Only strictly better tuples replace the incumbent, so the first
      // maximiser in lexicographic order is kept.
      if (best_count_ >= 0 && std::popcount(next) <= best_count_) continue;
      current_[r] = p;
      dfs(r + 1, next);
    }
  }

  const std::vector<std::vector<std::uint64_t>>& futures_;
  std::size_t budget_;
  std::size_t used_ = 0;
  SelectStats& stats_;
  std::vector<std::size_t> current_;
  std::vector<std::size_t> best_;
  std::uint64_t best_alive_ = 0;
  int best_count_ = -1;
};

}  // namespace

std::optional<PairSelection> select_red(const CandidateSystem& sys, double eps, std::size_t m, std::size_t node_budget,
                                        SelectStats* stats) {
  check_candidates(sys, Colour3::red, eps);
  SelectStats local;
  SelectStats& st = stats ? *stats : local;
  const std::size_t big_m = sys.index_count();
  PairSelection sel;
  if (big_m == 0 || m == 0) {
    if (m != 0 && m != kMaximal) return std::nullopt;
    return sel;
  }
  sel.indices.push_back(0);
  std::uint64_t alive = full_mask(big_m) & ~std::uint64_t{1};
  while (alive && sel.indices.size() < m) {
    const auto next = static_cast<std::size_t>(std::countr_zero(alive));
    alive &= alive - 1;
    const std::size_t h = sel.indices.size();
    std::vector<std::vector<std::uint64_t>> futures(h);
    for (std::size_t r = 0; r < h; ++r) {
      const std::size_t x = sel.indices[r];
      futures[r].assign(sys.class_size(x, next), 0);
      for (std::uint64_t rest = alive; rest; rest &= rest - 1) {
        const auto t = static_cast<std::size_t>(std::countr_zero(rest));
        const std::uint64_t cand = sys.mask(x, next, t);
        for (std::size_t p = 0; p < futures[r].size(); ++p)
          if (cand >> p & 1) futures[r][p] |= std::uint64_t{1} << t;
      }
    }
    TupleSearch search(futures, alive, node_budget, st);
    for (std::size_t r = 0; r < h; ++r) sel.chosen[{sel.indices[r], next}] = search.tuple()[r];
    alive = search.alive();
    sel.indices.push_back(next);
  }
  if (m != kMaximal && sel.indices.size() < m) return std::nullopt;
  if (!verify_selection(sys, Colour3::red, sel)) contract_failure("red selection");
  return sel;
}

std::optional<PairSelection> select_green(const CandidateSystem& sys, double eps, std::size_t m,
                                          std::size_t node_budget, SelectStats* stats) {
  check_candidates(sys, Colour3::green, eps);
  const std::size_t big_m = sys.index_count();
  auto red = select_red(reverse_system(sys), eps, m, node_budget, stats);
  if (!red) return std::nullopt;
  PairSelection sel;
  for (auto it = red->indices.rbegin(); it != red->indices.rend(); ++it) sel.indices.push_back(big_m - 1 - *it);
  for (const auto& [pair, p] : red->chosen) sel.chosen[{big_m - 1 - pair.second, big_m - 1 - pair.first}] = p;
  if (!verify_selection(sys, Colour3::green, sel)) contract_failure("green selection");
  return sel;
}

// ---------------------------------------------------------------------------
// Two indices and blue stage

std::optional<TwoIndexSelection> select_two_indices(const std::vector<std::size_t>& w_sizes,
                                                    const std::vector<std::vector<std::uint64_t>>& d, double eps,
                                                    std::size_t m, std::size_t node_budget, SelectStats* stats) {
  const std::size_t big_m = w_sizes.size();
  // Classes {s,t} are copies of W_s; green candidates for (r,s,t) are D_rs.
  std::vector<std::size_t> sizes(big_m * big_m, 0);
  for (std::size_t s = 0; s < big_m; ++s)
    for (std::size_t t = s + 1; t < big_m; ++t) sizes[s * big_m + t] = w_sizes[s];
  CandidateSystem sys(big_m, std::move(sizes));
  for (std::size_t s = 0; s < big_m; ++s)
    if (w_sizes[s] < 1 || w_sizes[s] > kMaxClassSize) throw Error("each W_s must have 1..64 elements");
  for (std::size_t r = 0; r < big_m; ++r)
    for (std::size_t s = r + 1; s < big_m; ++s) {
      const std::uint64_t mask = d.at(r).at(s);
      if (mask & ~full_mask(w_sizes[s])) throw Error("D_rs must lie inside W_s");
      if (!at_least(static_cast<std::uint64_t>(std::popcount(mask)), eps * static_cast<double>(w_sizes[s])))
        throw Error("D_" + pair_name(r, s) + " is smaller than eps |W_s|");
      for (std::size_t t = s + 1; t < big_m; ++t) sys.set_mask(r, s, t, mask);
    }

  TwoIndexSelection out;
  if (big_m > 0) {
    auto green = select_green(sys, eps, kMaximal, node_budget, stats);
    const std::size_t z = green->indices.back();
    for (std::size_t a = 0; a + 1 < green->indices.size(); ++a) {
      const std::size_t s = green->indices[a];
      out.indices.push_back(s);
      out.elements.push_back(green->chosen.at({s, z}));
    }
    // The top index has no green pair to read d_z from; keep it when some
    // element of W_z meets every D_rz anyway.
    std::uint64_t common = full_mask(w_sizes[z]);
    for (std::size_t s : out.indices) common &= d[s][z];
    if (common) {
      out.indices.push_back(z);
      out.elements.push_back(static_cast<std::size_t>(std::countr_zero(common)));
    }
  }
  if (m != kMaximal) {
    if (out.indices.size() < m) return std::nullopt;
    out.indices.resize(m);
    out.elements.resize(m);
  }
  for (std::size_t b = 0; b < out.indices.size(); ++b) {
    if (out.elements[b] >= w_sizes[out.indices[b]]) contract_failure("two-index element outside W_s");
    for (std::size_t a = 0; a < b; ++a)
      if (!(d[out.indices[a]][out.indices[b]] >> out.elements[b] & 1)) contract_failure("two-index selection");
  }
  return out;
}

std::optional<PairSelection> select_blue(const CandidateSystem& sys, double eps, std::size_t m, std::size_t node_budget,
                                         SelectStats* stats) {
  check_candidates(sys, Colour3::blue, eps);
  const std::size_t big_m = sys.index_count();
  PairSelection sel;
  std::vector<std::size_t> list(big_m);
  for (std::size_t i = 0; i < big_m; ++i) list[i] = i;
  // Pivots beyond position m-2 cannot affect the first m indices.
  for (std::size_t h = 0; h + 1 < list.size() && (m == kMaximal || h + 1 < m); ++h) {
    const std::size_t pivot = list[h];
    const std::vector<std::size_t> future(list.begin() + static_cast<std::ptrdiff_t>(h) + 1, list.end());
    std::vector<std::size_t> w(future.size());
    std::vector<std::vector<std::uint64_t>> dm(future.size(), std::vector<std::uint64_t>(future.size(), 0));
    for (std::size_t j = 0; j < future.size(); ++j) {
      w[j] = sys.class_size(pivot, future[j]);
      for (std::size_t i = 0; i < j; ++i) dm[i][j] = sys.mask(pivot, future[i], future[j]);
    }
    auto two = select_two_indices(w, dm, eps, kMaximal, node_budget, stats);
    list.resize(h + 1);
    for (std::size_t a = 0; a < two->indices.size(); ++a) {
      const std::size_t t = future[two->indices[a]];
      list.push_back(t);
      sel.chosen[{pivot, t}] = two->elements[a];
    }
  }
  if (m != kMaximal) {
    if (list.size() < m) return std::nullopt;
    list.resize(m);
  }
  sel.indices = list;
  // Drop pairs whose indices did not survive.
  for (auto it = sel.chosen.begin(); it != sel.chosen.end();) {
    const bool keep = std::binary_search(list.begin(), list.end(), it->first.first) &&
                      std::binary_search(list.begin(), list.end(), it->first.second);
    it = keep ? std::next(it) : sel.chosen.erase(it);
  }
  if (!verify_selection(sys, Colour3::blue, sel)) contract_failure("blue selection");
  return sel;
}

// ---------------------------------------------------------------------------
// Pipeline

std::optional<CoreSelection> select_rainbow_core(const ReducedHypergraph& a, double mu, std::size_t f,
                                                 std::size_t node_budget, CoreRunInfo* info) {
  if (f < 1) throw Error("f must be at least 1");
  const auto density = is_mu_dense(a, mu);
  if (!density.dense)
    throw Error("reduced hypergraph is not mu-dense: constituent " + pair_name(density.i, density.j) + "," +
                std::to_string(density.k) + " has density " + std::to_string(density.ratio));
  CoreRunInfo local;
  CoreRunInfo& run = info ? *info : local;
  const std::size_t m = a.index_count();

  // Red: vertices of {i,j} with degree >= mu/2 |P^ik| |P^jk| in constituent ijk.
  std::vector<std::size_t> sizes(m * m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) sizes[i * m + j] = a.class_size(i, j);
  CandidateSystem red_sys(m, sizes);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (std::size_t k = j + 1; k < m; ++k) {
        const std::uint64_t c = red_candidates(a, mu / 2, i, j, k);
        if (!at_least(static_cast<std::uint64_t>(std::popcount(c)), mu / 2 * static_cast<double>(a.class_size(i, j))))
          contract_failure("averaging bound for red candidates");
        red_sys.set_mask(i, j, k, c);
      }
  auto red = select_red(red_sys, mu / 2, kMaximal, node_budget, &run.stats);
  const auto& x = red->indices;
  run.red_indices = x.size();
  if (x.size() < f) return std::nullopt;

  // Blue, on positions of x: Q in {r,t} with pair degree >= mu/4 |P^st| next
  // to the red vertex of {r,s}.
  const std::size_t mx = x.size();
  std::vector<std::size_t> blue_sizes(mx * mx, 0);
  for (std::size_t r = 0; r < mx; ++r)
    for (std::size_t s = r + 1; s < mx; ++s) blue_sizes[r * mx + s] = a.class_size(x[r], x[s]);
  CandidateSystem blue_sys(mx, blue_sizes);
  for (std::size_t r = 0; r < mx; ++r)
    for (std::size_t s = r + 1; s < mx; ++s)
      for (std::size_t t = s + 1; t < mx; ++t) {
        const std::size_t p = red->chosen.at({x[r], x[s]});
        const double cut = mu / 4 * static_cast<double>(a.class_size(x[s], x[t]));
        std::uint64_t c = 0;
        for (std::size_t q = 0; q < a.class_size(x[r], x[t]); ++q)
          if (at_least(pair_degree(a, x[r], x[s], x[t], p, q), cut)) c |= std::uint64_t{1} << q;
        blue_sys.set_mask(r, s, t, c);
      }
  auto blue = select_blue(blue_sys, mu / 4, kMaximal, node_budget, &run.stats);
  std::vector<std::size_t> y;
  for (std::size_t pos : blue->indices) y.push_back(x[pos]);
  run.blue_indices = y.size();
  if (y.size() < f) return std::nullopt;

  // Green, on positions of y: R in {s,t} completing the red and blue vertices.
  const std::size_t my = y.size();
  std::vector<std::size_t> green_sizes(my * my, 0);
  for (std::size_t s = 0; s < my; ++s)
    for (std::size_t t = s + 1; t < my; ++t) green_sizes[s * my + t] = a.class_size(y[s], y[t]);
  CandidateSystem green_sys(my, green_sizes);
  auto blue_at = [&](std::size_t i, std::size_t k) {
    const auto pi = static_cast<std::size_t>(std::lower_bound(x.begin(), x.end(), i) - x.begin());
    const auto pk = static_cast<std::size_t>(std::lower_bound(x.begin(), x.end(), k) - x.begin());
    return blue->chosen.at({pi, pk});
  };
  for (std::size_t r = 0; r < my; ++r)
    for (std::size_t s = r + 1; s < my; ++s)
      for (std::size_t t = s + 1; t < my; ++t)
        green_sys.set_mask(r, s, t,
                           a.completions(y[r], y[s], y[t], red->chosen.at({y[r], y[s]}), blue_at(y[r], y[t])));
  auto green = select_green(green_sys, mu / 4, f, node_budget, &run.stats);
  if (!green) return std::nullopt;

  CoreSelection core;
  for (std::size_t pos : green->indices) core.lambda.push_back(y[pos]);
  const auto& lam = core.lambda;
  for (std::size_t r = 0; r < lam.size(); ++r)
    for (std::size_t s = r + 1; s < lam.size(); ++s) {
      core.red[{lam[r], lam[s]}] = red->chosen.at({lam[r], lam[s]});
      core.blue[{lam[r], lam[s]}] = blue_at(lam[r], lam[s]);
      core.green[{lam[r], lam[s]}] = green->chosen.at({green->indices[r], green->indices[s]});
    }
  if (!verify_core(a, core)) contract_failure("rainbow core");
  return core;
}

bool verify_core(const ReducedHypergraph& a, const CoreSelection& sel) {
  const auto& lam = sel.lambda;
  for (std::size_t r = 0; r < lam.size(); ++r) {
    if (lam[r] >= a.index_count()) throw Error("selected index out of range");
    if (r > 0 && lam[r - 1] >= lam[r]) throw Error("selected indices must be strictly increasing");
  }
  auto pick = [&](const std::map<IndexPair, std::size_t>& colour, std::size_t i, std::size_t j, const char* name) {
    auto it = colour.find({i, j});
    if (it == colour.end()) throw Error(std::string("missing ") + name + " vertex for pair " + pair_name(i, j));
    if (it->second >= a.class_size(i, j))
      throw Error(std::string(name) + " vertex for pair " + pair_name(i, j) + " lies outside its class");
    return it->second;
  };
  for (std::size_t r = 0; r < lam.size(); ++r)
    for (std::size_t s = r + 1; s < lam.size(); ++s) {
      pick(sel.red, lam[r], lam[s], "red");
      pick(sel.blue, lam[r], lam[s], "blue");
      pick(sel.green, lam[r], lam[s], "green");
    }
  for (std::size_t r = 0; r < lam.size(); ++r)
    for (std::size_t s = r + 1; s < lam.size(); ++s)
      for (std::size_t t = s + 1; t < lam.size(); ++t)
        if (!a.has_triple(lam[r], lam[s], lam[t], sel.red.at({lam[r], lam[s]}), sel.blue.at({lam[r], lam[t]}),
                          sel.green.at({lam[s], lam[t]})))
          return false;
  return true;
}

ReducedHypergraph random_reduced(std::size_t m, std::size_t size_lo, std::size_t size_hi, double p, double mu,
                                 std::uint64_t seed, std::size_t attempts) {
  if (size_lo < 1 || size_lo > size_hi || size_hi > kMaxClassSize) throw Error("class sizes must satisfy 1 <= lo <= hi <= 64");
  if (!(p >= 0.0 && p <= 1.0)) throw Error("p must lie in [0, 1]");
  if (!(mu >= 0.0 && mu <= 1.0)) throw Error("mu must lie in [0, 1]");
  auto rng = make_rng(seed, 0);
  std::uniform_int_distribution<std::size_t> pick_size(size_lo, size_hi);
  std::vector<std::vector<std::size_t>> sizes(m, std::vector<std::size_t>(m, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) sizes[i][j] = pick_size(rng);
  ReducedHypergraph a(m, sizes);
  std::uint64_t stream = 1;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (std::size_t k = j + 1; k < m; ++k, ++stream) {
        auto local = make_rng(seed, stream);
        std::bernoulli_distribution coin(p);
        const std::size_t si = sizes[i][j], sk = sizes[i][k], sj = sizes[j][k];
        const double need = mu * static_cast<double>(si * sk * sj);
        std::vector<std::array<std::size_t, 3>> picked;
        std::size_t tries = 0;
        do {
          if (tries++ == attempts) throw Error("could not sample a mu-dense constituent; raise p or lower mu");
          picked.clear();
          for (std::size_t x = 0; x < si; ++x)
            for (std::size_t y = 0; y < sk; ++y)
              for (std::size_t z = 0; z < sj; ++z)
                if (coin(local)) picked.push_back({x, y, z});
        } while (!at_least(picked.size(), need));
        for (const auto& t : picked) a.add_triple(i, j, k, t[0], t[1], t[2]);
      }
  return a;
}

}  // namespace udh
