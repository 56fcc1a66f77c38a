#include "udh/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace udh {

Hypergraph::Hypergraph(int k, std::size_t n, std::vector<Tuple> edges) : k_(k), n_(n) {
  if (k < 2) throw Error("uniformity must be at least 2");
  for (auto& e : edges) {
    if (e.size() != static_cast<std::size_t>(k))
      throw Error("edge has " + std::to_string(e.size()) + " vertices, expected " + std::to_string(k));
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) throw Error("repeated vertex within an edge");
    if (e.back() >= n) throw Error("vertex " + std::to_string(e.back()) + " out of range");
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) throw Error("duplicate edge");
  edges_ = std::move(edges);
  incidence_.assign(n_, {});
  for (std::size_t i = 0; i < edges_.size(); ++i)
    for (Vertex v : edges_[i]) incidence_[v].push_back(i);
}

bool Hypergraph::has_edge(std::span<const Vertex> tuple) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), tuple, [](const Tuple& a, std::span<const Vertex> b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  });
  return it != edges_.end() && std::equal(it->begin(), it->end(), tuple.begin(), tuple.end());
}

std::size_t Hypergraph::degree(Vertex v) const { return incidence_.at(v).size(); }

bool Shadow::contains(std::span<const Vertex> tuple) const { return index_of(tuple) != npos; }

std::size_t Shadow::index_of(std::span<const Vertex> tuple) const {
  auto it = std::lower_bound(tuples.begin(), tuples.end(), tuple, [](const Tuple& a, std::span<const Vertex> b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  });
  if (it != tuples.end() && std::equal(it->begin(), it->end(), tuple.begin(), tuple.end()))
    return static_cast<std::size_t>(it - tuples.begin());
  return npos;
}

// ---------------------------------------------------------------------------
// HYG text format

namespace {

std::vector<long long> read_numbers(const std::string& line, std::size_t lineno) {
  std::istringstream in(line);
  std::vector<long long> out;
  std::string tok;
  while (in >> tok) {
    std::size_t pos = 0;
    long long value = 0;
    try {
      value = std::stoll(tok, &pos);
    } catch (const std::exception&) {
      throw ParseError(lineno, "expected an integer, got '" + tok + "'");
    }
    if (pos != tok.size()) throw ParseError(lineno, "expected an integer, got '" + tok + "'");
    out.push_back(value);
  }
  return out;
}

bool is_blank_or_comment(const std::string& line) {
  auto first = line.find_first_not_of(" \t\r");
  return first == std::string::npos || line[first] == '#';
}

}  // namespace

Hypergraph parse_hypergraph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  long long k = 0, n = 0, m = 0;
  std::vector<Tuple> edges;
  std::vector<std::size_t> edge_lines;
  while (std::getline(in, line)) {
    ++lineno;
    if (is_blank_or_comment(line)) continue;
    auto nums = read_numbers(line, lineno);
    if (!have_header) {
      if (nums.size() != 3) throw ParseError(lineno, "malformed header, expected 'k n m'");
      k = nums[0];
      n = nums[1];
      m = nums[2];
      if (k < 2) throw ParseError(lineno, "malformed header, uniformity must be at least 2");
      if (n < 0 || m < 0) throw ParseError(lineno, "malformed header, negative count");
      have_header = true;
      continue;
    }
    if (static_cast<long long>(edges.size()) == m) throw ParseError(lineno, "more edges than announced in header");
    if (static_cast<long long>(nums.size()) != k)
      throw ParseError(lineno, "edge has " + std::to_string(nums.size()) + " vertices, expected " + std::to_string(k));
    Tuple e;
    for (long long v : nums) {
      if (v < 0 || v >= n) throw ParseError(lineno, "vertex index " + std::to_string(v) + " out of range");
      e.push_back(static_cast<Vertex>(v));
    }
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) throw ParseError(lineno, "repeated vertex within an edge");
    edges.push_back(std::move(e));
    edge_lines.push_back(lineno);
  }
  if (!have_header) throw ParseError(lineno == 0 ? 1 : lineno, "malformed header, file is empty");
  if (static_cast<long long>(edges.size()) != m)
    throw ParseError(lineno, "header announces " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  // Duplicate detection reports the line of the second occurrence.
  std::vector<std::size_t> idx(edges.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return edges[a] < edges[b]; });
  for (std::size_t i = 1; i < idx.size(); ++i)
    if (edges[idx[i]] == edges[idx[i - 1]]) throw ParseError(edge_lines[std::max(idx[i], idx[i - 1])], "duplicate edge");
  return Hypergraph(static_cast<int>(k), static_cast<std::size_t>(n), std::move(edges));
}

std::string serialize_hypergraph(const Hypergraph& h) {
  std::ostringstream out;
  out << h.uniformity() << ' ' << h.vertex_count() << ' ' << h.edge_count() << '\n';
  for (const auto& e : h.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
    out << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------

Shadow shadow(const Hypergraph& f) {
  Shadow s;
  for (const auto& e : f.edges()) {
    for (std::size_t skip = 0; skip < e.size(); ++skip) {
      Tuple t;
      t.reserve(e.size() - 1);
      for (std::size_t i = 0; i < e.size(); ++i)
        if (i != skip) t.push_back(e[i]);
      s.tuples.push_back(std::move(t));
    }
  }
  std::sort(s.tuples.begin(), s.tuples.end());
  s.tuples.erase(std::unique(s.tuples.begin(), s.tuples.end()), s.tuples.end());
  return s;
}

std::size_t induced_edge_count(const Hypergraph& h, std::span<const Vertex> subset) {
  std::vector<char> in(h.vertex_count(), 0);
  for (Vertex v : subset) {
    if (v >= h.vertex_count()) throw Error("vertex " + std::to_string(v) + " out of range");
    in[v] = 1;
  }
  std::size_t count = 0;
  for (const auto& e : h.edges())
    if (std::all_of(e.begin(), e.end(), [&](Vertex v) { return in[v] != 0; })) ++count;
  return count;
}

Hypergraph relabel(const Hypergraph& h, std::span<const Vertex> perm) {
  if (perm.size() != h.vertex_count()) throw Error("relabelling must cover every vertex");
  std::vector<Tuple> edges;
  edges.reserve(h.edge_count());
  for (const auto& e : h.edges()) {
    Tuple t;
    for (Vertex v : e) t.push_back(perm[v]);
    edges.push_back(std::move(t));
  }
  return Hypergraph(h.uniformity(), h.vertex_count(), std::move(edges));
}

std::vector<Vertex> search_order(const Hypergraph& pattern) {
  std::vector<Vertex> order(pattern.vertex_count());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return pattern.degree(a) > pattern.degree(b); });
  return order;
}

// ---------------------------------------------------------------------------
// Backtracking over pattern vertices. Edges are checked as soon as their last
// vertex (in search order) is mapped.

namespace {

enum class SearchKind { first_injective, count_injective, count_all };

class MapSearch {
 public:
  MapSearch(const Hypergraph& pattern, const Hypergraph& host, SearchKind kind)
      : pattern_(pattern), host_(host), kind_(kind) {
    if (pattern.uniformity() != host.uniformity()) throw Error("uniformity mismatch between pattern and host");
    for (Vertex v : search_order(pattern))
      if (pattern.degree(v) > 0) order_.push_back(v);
    std::vector<std::size_t> position(pattern.vertex_count(), 0);
    for (std::size_t p = 0; p < order_.size(); ++p) position[order_[p]] = p;
    checks_.assign(order_.size(), {});
    for (std::size_t i = 0; i < pattern.edge_count(); ++i) {
      std::size_t last = 0;
      for (Vertex v : pattern.edges()[i]) last = std::max(last, position[v]);
      checks_[last].push_back(i);
    }
    image_.assign(pattern.vertex_count(), 0);
    used_.assign(host.vertex_count(), 0);
    scratch_.resize(static_cast<std::size_t>(pattern.uniformity()));
  }

  bool run() { return descend(0); }

  BigInt count() const { return total_ + partial_; }
  const std::vector<Vertex>& image() const { return image_; }
  std::size_t mapped_vertices() const { return order_.size(); }

 private:
  bool edges_ok(std::size_t depth) {
    for (std::size_t ei : checks_[depth]) {
      const auto& e = pattern_.edges()[ei];
      for (std::size_t i = 0; i < e.size(); ++i) scratch_[i] = image_[e[i]];
      std::sort(scratch_.begin(), scratch_.end());
      if (!host_.has_edge(scratch_)) return false;
    }
    return true;
  }

  void add(std::uint64_t amount) {
    std::uint64_t sum = 0;
    if (__builtin_add_overflow(partial_, amount, &sum)) {
      total_ += partial_;
      partial_ = amount;
    } else {
      partial_ = sum;
    }
  }

  // Returns true to stop the search (first witness found).
  bool descend(std::size_t depth) {
    if (depth == order_.size()) {
      if (kind_ == SearchKind::first_injective) return true;
      add(1);
      return false;
    }
    const Vertex pv = order_[depth];
    const bool injective = kind_ != SearchKind::count_all;
    const bool leaf = depth + 1 == order_.size() && kind_ != SearchKind::first_injective;
    std::uint64_t leaf_count = 0;
    for (Vertex hv = 0; hv < host_.vertex_count(); ++hv) {
      if (injective && used_[hv]) continue;
      image_[pv] = hv;
      if (!edges_ok(depth)) continue;
      if (leaf) {
        ++leaf_count;
        continue;
      }
      used_[hv] = 1;
      const bool stop = descend(depth + 1);
      used_[hv] = 0;
      if (stop) return true;
    }
    if (leaf) add(leaf_count);
    return false;
  }

  const Hypergraph& pattern_;
  const Hypergraph& host_;
  SearchKind kind_;
  std::vector<Vertex> order_;
  std::vector<std::vector<std::size_t>> checks_;
  std::vector<Vertex> image_;
  std::vector<char> used_;
  Tuple scratch_;
  BigInt total_ = 0;
  std::uint64_t partial_ = 0;
};

}  // namespace

std::optional<VertexMap> contains_copy(const Hypergraph& pattern, const Hypergraph& host) {
  MapSearch search(pattern, host, SearchKind::first_injective);
  const std::size_t isolated = pattern.vertex_count() - search.mapped_vertices();
  if (pattern.vertex_count() > host.vertex_count()) return std::nullopt;
  if (!search.run()) return std::nullopt;
  VertexMap map{search.image(), true};
  // Isolated pattern vertices take the smallest unused host vertices.
  std::vector<char> used(host.vertex_count(), 0);
  std::vector<char> mapped(pattern.vertex_count(), 0);
  for (Vertex v = 0; v < pattern.vertex_count(); ++v)
    if (pattern.degree(v) > 0) {
      used[map.image[v]] = 1;
      mapped[v] = 1;
    }
  Vertex next = 0;
  for (Vertex v = 0; v < pattern.vertex_count() && isolated > 0; ++v) {
    if (mapped[v]) continue;
    while (used[next]) ++next;
    map.image[v] = next;
    used[next] = 1;
  }
  return map;
}

BigInt count_embeddings(const Hypergraph& pattern, const Hypergraph& host) {
  if (pattern.vertex_count() > host.vertex_count()) return 0;
  MapSearch search(pattern, host, SearchKind::count_injective);
  search.run();
  BigInt total = search.count();
  // Isolated vertices: falling factorial over the remaining host vertices.
  std::size_t used = search.mapped_vertices();
  for (std::size_t i = used; i < pattern.vertex_count(); ++i) total *= host.vertex_count() - i;
  return total;
}

BigInt count_homomorphisms(const Hypergraph& pattern, const Hypergraph& host) {
  MapSearch search(pattern, host, SearchKind::count_all);
  search.run();
  const std::size_t isolated = pattern.vertex_count() - search.mapped_vertices();
  return search.count() * big_pow(host.vertex_count(), isolated);
}

bool verify_vertex_map(const Hypergraph& pattern, const Hypergraph& host, const VertexMap& map) {
  if (pattern.uniformity() != host.uniformity()) return false;
  if (map.image.size() != pattern.vertex_count()) return false;
  std::vector<char> seen(host.vertex_count(), 0);
  for (Vertex v : map.image) {
    if (v >= host.vertex_count()) return false;
    if (map.injective && seen[v]) return false;
    seen[v] = 1;
  }
  for (const auto& e : pattern.edges()) {
    Tuple t;
    for (Vertex v : e) t.push_back(map.image[v]);
    std::sort(t.begin(), t.end());
    if (!host.has_edge(t)) return false;
  }
  return true;
}

Hypergraph hypergraph_from_mask(int k, std::size_t f, std::uint64_t mask) {
  std::vector<Tuple> edges;
  std::size_t bit = 0;
  for_each_subset(f, static_cast<std::size_t>(k), [&](std::span<const std::uint32_t> t) {
    if (mask >> bit & 1) edges.emplace_back(t.begin(), t.end());
    ++bit;
    return true;
  });
  return Hypergraph(k, f, std::move(edges));
}

void enumerate_hypergraphs(int k, std::size_t f, const std::function<void(const Hypergraph&)>& visit) {
  const std::uint64_t slots = binomial(f, static_cast<std::uint64_t>(k));
  if (slots > 25) throw Error("enumeration bound exceeded: C(f,k) = " + std::to_string(slots) + " > 25");
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots); ++mask) visit(hypergraph_from_mask(k, f, mask));
}

namespace catalog {

Hypergraph single_edge(int k) {
  Tuple e(static_cast<std::size_t>(k));
  std::iota(e.begin(), e.end(), 0);
  return Hypergraph(k, static_cast<std::size_t>(k), {e});
}

Hypergraph complete(int k, std::size_t n) {
  std::vector<Tuple> edges;
  for_each_subset(n, static_cast<std::size_t>(k), [&](std::span<const std::uint32_t> t) {
    edges.emplace_back(t.begin(), t.end());
    return true;
  });
  return Hypergraph(k, n, std::move(edges));
}

Hypergraph tight_cycle5() { return Hypergraph(3, 5, {{0, 1, 2}, {1, 2, 3}, {2, 3, 4}, {0, 3, 4}, {0, 1, 4}}); }

Hypergraph c5_minus() { return Hypergraph(3, 5, {{0, 1, 2}, {1, 2, 3}, {2, 3, 4}, {0, 3, 4}}); }

Hypergraph edgeless(int k, std::size_t n) { return Hypergraph(k, n, {}); }

}  // namespace catalog

}  // namespace udh
