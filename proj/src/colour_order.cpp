#include "udh/colour_order.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace udh {

PairColouring::PairColouring(int k, std::size_t n, std::vector<Colour> colours)
    : k_(k), n_(n), colours_(std::move(colours)) {
  if (k < 2) throw Error("uniformity must be at least 2");
  if (n + 1 < static_cast<std::size_t>(k)) throw Error("colouring needs n >= k-1");
  if (colours_.size() != binomial(n, static_cast<std::uint64_t>(k - 1)))
    throw Error("colouring is not total: expected one colour per (k-1)-subset");
  for (Colour c : colours_)
    if (c < 1 || c > k) throw Error("colour index out of range [1, k]");
}

std::string colour_name(Colour c, int k) {
  if (k == 3) {
    switch (c) {
      case 1: return "red";
      case 2: return "blue";
      case 3: return "green";
      default: break;
    }
  }
  return std::to_string(static_cast<int>(c));
}

namespace {

std::vector<std::size_t> positions_of(const std::vector<Vertex>& ordering, std::size_t n) {
  if (ordering.size() != n) throw Error("ordering must list every vertex exactly once");
  std::vector<std::size_t> pos(n, n);
  for (std::size_t p = 0; p < n; ++p) {
    if (ordering[p] >= n || pos[ordering[p]] != n) throw Error("ordering is not a permutation of the vertex set");
    pos[ordering[p]] = p;
  }
  return pos;
}

Tuple drop(const Tuple& e, Vertex v) {
  Tuple t;
  t.reserve(e.size() - 1);
  for (Vertex u : e)
    if (u != v) t.push_back(u);
  return t;
}

// Vertices of e sorted by their position in the ordering.
Tuple by_position(const Tuple& e, const std::vector<std::size_t>& pos) {
  Tuple sorted = e;
  std::sort(sorted.begin(), sorted.end(), [&](Vertex a, Vertex b) { return pos[a] < pos[b]; });
  return sorted;
}

}  // namespace

ForcedResult forced_colouring(const Hypergraph& f, const std::vector<Vertex>& ordering) {
  const auto pos = positions_of(ordering, f.vertex_count());
  ShadowColouring out;
  out.ordering = ordering;
  for (const auto& e : f.edges()) {
    const Tuple ranked = by_position(e, pos);
    for (std::size_t l = 0; l < ranked.size(); ++l) {
      Tuple t = drop(e, ranked[l]);
      const auto demanded = static_cast<Colour>(ranked.size() - l);
      auto [it, inserted] = out.colour.emplace(t, demanded);
      if (!inserted && it->second != demanded) return ColourConflict{std::move(t), it->second, demanded};
    }
  }
  // Every shadow tuple lies in some edge, so the map is already total on the
  // shadow; tuples never demanded would default to colour 1.
  for (const auto& t : shadow(f).tuples) out.colour.emplace(t, Colour{1});
  return out;
}

namespace {

// Left-to-right search over ordering prefixes. An edge's demands are known once
// its last vertex is placed, so clashes prune the prefix immediately.
class OrderingSearch {
 public:
  explicit OrderingSearch(const Hypergraph& f) : f_(f), shadow_(shadow(f)) {
    const std::size_t n = f.vertex_count();
    tuple_of_.resize(f.edge_count());
    for (std::size_t i = 0; i < f.edge_count(); ++i) {
      const auto& e = f.edges()[i];
      for (Vertex v : e) tuple_of_[i].push_back(shadow_.index_of(drop(e, v)));
    }
    colour_.assign(shadow_.size(), 0);
    pos_.assign(n, n);
    placed_in_edge_.assign(f.edge_count(), 0);
  }

  // Calls visit for each valid ordering in lexicographic order until it
  // returns false.
  void run(const std::function<bool(const ShadowColouring&)>& visit) {
    visit_ = &visit;
    place(0);
  }

 private:
  ShadowColouring current() const {
    ShadowColouring w;
    w.ordering = ordering_;
    for (std::size_t i = 0; i < shadow_.size(); ++i)
      w.colour.emplace(shadow_.tuples[i], colour_[i] == 0 ? Colour{1} : colour_[i]);
    return w;
  }

  // Returns true once the visitor asks to stop.
  bool place(std::size_t p) {
    const std::size_t n = f_.vertex_count();
    if (p == n) return !(*visit_)(current());
    for (Vertex v = 0; v < n; ++v) {
      if (pos_[v] != n) continue;
      pos_[v] = p;
      ordering_.push_back(v);
      const std::size_t mark = trail_.size();
      bool ok = true;
      for (std::size_t ei : f_.incident_edges(v)) {
        if (++placed_in_edge_[ei] == static_cast<std::size_t>(f_.uniformity()) && ok) ok = demand(ei);
      }
      if (ok && place(p + 1)) return true;
      for (std::size_t ei : f_.incident_edges(v)) --placed_in_edge_[ei];
      while (trail_.size() > mark) {
        colour_[trail_.back()] = 0;
        trail_.pop_back();
      }
      ordering_.pop_back();
      pos_[v] = n;
    }
    return false;
  }

  bool demand(std::size_t ei) {
    const auto& e = f_.edges()[ei];
    // Rank of each vertex of e among e's vertices by position.
    for (std::size_t a = 0; a < e.size(); ++a) {
      std::size_t rank = 0;
      for (std::size_t b = 0; b < e.size(); ++b)
        if (pos_[e[b]] < pos_[e[a]]) ++rank;
      const auto want = static_cast<Colour>(e.size() - rank);
      Colour& slot = colour_[tuple_of_[ei][a]];
      if (slot == 0) {
        slot = want;
        trail_.push_back(tuple_of_[ei][a]);
      } else if (slot != want) {
        return false;
      }
    }
    return true;
  }

  const Hypergraph& f_;
  Shadow shadow_;
  std::vector<std::vector<std::size_t>> tuple_of_;
  std::vector<Colour> colour_;
  std::vector<std::size_t> pos_;
  std::vector<std::size_t> placed_in_edge_;
  std::vector<Vertex> ordering_;
  std::vector<std::size_t> trail_;
  const std::function<bool(const ShadowColouring&)>* visit_ = nullptr;
};

}  // namespace

std::optional<ShadowColouring> decide_condition_b(const Hypergraph& f) {
  if (f.uniformity() < 3) throw Error("condition (b) needs uniformity at least 3");
  std::optional<ShadowColouring> found;
  OrderingSearch(f).run([&](const ShadowColouring& w) {
    found = w;
    return false;
  });
  return found;
}

std::size_t for_each_condition_b_witness(const Hypergraph& f, const std::function<bool(const ShadowColouring&)>& visit) {
  if (f.uniformity() < 3) throw Error("condition (b) needs uniformity at least 3");
  std::size_t count = 0;
  OrderingSearch(f).run([&](const ShadowColouring& w) {
    ++count;
    return visit(w);
  });
  return count;
}

bool verify_witness(const Hypergraph& f, const ShadowColouring& w) {
  const std::size_t n = f.vertex_count();
  if (w.ordering.size() != n) return false;
  std::vector<std::size_t> pos(n, n);
  for (std::size_t p = 0; p < n; ++p) {
    if (w.ordering[p] >= n || pos[w.ordering[p]] != n) return false;
    pos[w.ordering[p]] = p;
  }
  const Shadow s = shadow(f);
  for (const auto& [t, c] : w.colour)
    if (!s.contains(t)) return false;
  for (const auto& e : f.edges()) {
    for (Vertex v : e) {
      std::size_t l = 1;
      for (Vertex u : e)
        if (pos[u] < pos[v]) ++l;
      Tuple rest;
      for (Vertex u : e)
        if (u != v) rest.push_back(u);
      auto it = w.colour.find(rest);
      if (it == w.colour.end() || it->second != e.size() + 1 - l) return false;
    }
  }
  return true;
}

Hypergraph build_h_phi(const PairColouring& phi) {
  const int k = phi.uniformity();
  const std::size_t n = phi.vertex_count();
  std::vector<Tuple> edges;
  Tuple rest(static_cast<std::size_t>(k - 1));
  for_each_subset(n, static_cast<std::size_t>(k), [&](std::span<const std::uint32_t> e) {
    for (std::size_t l = 0; l < e.size(); ++l) {
      std::size_t j = 0;
      for (std::size_t i = 0; i < e.size(); ++i)
        if (i != l) rest[j++] = e[i];
      if (phi.at(rest) != e.size() - l) return true;
    }
    edges.emplace_back(e.begin(), e.end());
    return true;
  });
  return Hypergraph(k, n, std::move(edges));
}

PairColouring random_pair_colouring(std::size_t n, int k, std::uint64_t seed) {
  if (k < 2) throw Error("uniformity must be at least 2");
  auto rng = make_rng(seed);
  std::uniform_int_distribution<int> pick(1, k);
  std::vector<Colour> colours(binomial(n, static_cast<std::uint64_t>(k - 1)));
  for (auto& c : colours) c = static_cast<Colour>(pick(rng));
  return PairColouring(k, n, std::move(colours));
}

PairColouring parse_pair_colouring(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  long long k = 0, n = 0;
  std::vector<Colour> colours;
  std::vector<char> seen;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::vector<long long> nums;
    long long x = 0;
    while (ls >> x) nums.push_back(x);
    if (!ls.eof()) throw ParseError(lineno, "expected integers");
    if (!have_header) {
      if (nums.size() != 2 || nums[0] < 2 || nums[1] < nums[0] - 1) throw ParseError(lineno, "malformed header, expected 'k n'");
      k = nums[0];
      n = nums[1];
      colours.assign(binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k - 1)), 0);
      seen.assign(colours.size(), 0);
      have_header = true;
      continue;
    }
    if (static_cast<long long>(nums.size()) != k) throw ParseError(lineno, "expected k-1 vertices and a colour");
    Tuple t;
    for (long long i = 0; i + 1 < k; ++i) {
      if (nums[i] < 0 || nums[i] >= n) throw ParseError(lineno, "vertex index out of range");
      t.push_back(static_cast<Vertex>(nums[i]));
    }
    std::sort(t.begin(), t.end());
    if (std::adjacent_find(t.begin(), t.end()) != t.end()) throw ParseError(lineno, "repeated vertex within a tuple");
    const long long c = nums.back();
    if (c < 1 || c > k) throw ParseError(lineno, "colour index out of range [1, k]");
    const std::size_t r = lex_rank(t, static_cast<std::size_t>(n));
    if (seen[r]) throw ParseError(lineno, "tuple coloured twice");
    seen[r] = 1;
    colours[r] = static_cast<Colour>(c);
  }
  if (!have_header) throw ParseError(1, "malformed header, file is empty");
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) throw ParseError(lineno, "colouring is not total");
  return PairColouring(static_cast<int>(k), static_cast<std::size_t>(n), std::move(colours));
}

std::string serialize_pair_colouring(const PairColouring& phi) {
  std::ostringstream out;
  out << phi.uniformity() << ' ' << phi.vertex_count() << '\n';
  std::size_t r = 0;
  for_each_subset(phi.vertex_count(), static_cast<std::size_t>(phi.uniformity() - 1),
                  [&](std::span<const std::uint32_t> t) {
                    for (Vertex v : t) out << v << ' ';
                    out << static_cast<int>(phi.colours()[r++]) << '\n';
                    return true;
                  });
  return out.str();
}

}  // namespace udh
