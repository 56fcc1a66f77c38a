#include "udh/ternary.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

namespace udh {

std::string KaryVector::digits() const {
  std::string s;
  for (auto c : coords) s.push_back(static_cast<char>(c < 10 ? '0' + c : 'a' + (c - 10)));
  return s;
}

KaryVector KaryVector::from_digits(int base, std::string_view digits) {
  KaryVector v{base, {}};
  for (char ch : digits) {
    int d = -1;
    if (ch >= '0' && ch <= '9') d = ch - '0';
    else if (ch >= 'a' && ch <= 'z') d = ch - 'a' + 10;
    if (d < 0 || d >= base) throw Error(std::string("invalid base-") + std::to_string(base) + " digit '" + ch + "'");
    v.coords.push_back(static_cast<std::uint8_t>(d));
  }
  return v;
}

std::size_t KaryVector::encode() const {
  std::size_t id = 0;
  for (auto c : coords) id = id * static_cast<std::size_t>(base) + c;
  return id;
}

KaryVector KaryVector::decode(int base, std::size_t length, std::size_t id) {
  KaryVector v{base, std::vector<std::uint8_t>(length, 0)};
  for (std::size_t i = length; i-- > 0;) {
    v.coords[i] = static_cast<std::uint8_t>(id % static_cast<std::size_t>(base));
    id /= static_cast<std::size_t>(base);
  }
  return v;
}

bool kary_edge(int k, std::span<const KaryVector> vectors) {
  if (vectors.size() != static_cast<std::size_t>(k)) throw Error("kary_edge needs exactly k vectors");
  const std::size_t len = vectors.front().coords.size();
  for (const auto& v : vectors) {
    if (v.coords.size() != len) throw Error("vectors have unequal lengths");
    for (auto c : v.coords)
      if (c >= k) throw Error("coordinate out of range");
  }
  for (std::size_t a = 0; a < vectors.size(); ++a)
    for (std::size_t b = a + 1; b < vectors.size(); ++b)
      if (vectors[a].coords == vectors[b].coords) throw Error("duplicate vectors");
  for (std::size_t i = 0; i < len; ++i) {
    std::uint32_t seen = 0;
    for (const auto& v : vectors) seen |= 1u << v.coords[i];
    if (std::popcount(seen) == 1) continue;
    return std::popcount(seen) == k;
  }
  return false;  // unreachable for distinct vectors
}

BigInt kary_edge_count(int k, std::size_t n) {
  if (k < 3) throw Error("kary_edge_count needs k >= 3");
  const auto kk = static_cast<std::uint64_t>(k);
  return (big_pow(kk, kk * n) - big_pow(kk, n)) / (big_pow(kk, kk) - kk);
}

Hypergraph build_ternary(int k, std::size_t n, std::size_t vertex_limit) {
  if (k < 2) throw Error("uniformity must be at least 2");
  const BigInt vertices = big_pow(static_cast<std::uint64_t>(k), n);
  if (vertices > vertex_limit)
    throw Error("T_" + std::to_string(n) + "^(" + std::to_string(k) + ") exceeds the explicit-size limit of " +
                std::to_string(vertex_limit) + " vertices; use kary_edge instead");
  if (k >= 3 && kary_edge_count(k, n) > kTernaryEdgeLimit)
    throw Error("T_" + std::to_string(n) + "^(" + std::to_string(k) + ") has too many edges to build explicitly");

  std::vector<Tuple> edges;
  std::size_t block = 1;  // k^{level-1}
  for (std::size_t level = 1; level <= n; ++level) {
    // T_level = k shifted copies of T_{level-1} plus all transversals.
    std::vector<Tuple> next;
    for (std::size_t c = 0; c < static_cast<std::size_t>(k); ++c)
      for (const auto& e : edges) {
        Tuple t;
        for (Vertex v : e) t.push_back(static_cast<Vertex>(c * block + v));
        next.push_back(std::move(t));
      }
    std::vector<std::size_t> pick(static_cast<std::size_t>(k), 0);
    while (true) {
      Tuple t;
      for (std::size_t c = 0; c < pick.size(); ++c) t.push_back(static_cast<Vertex>(c * block + pick[c]));
      next.push_back(std::move(t));
      std::size_t i = pick.size();
      while (i > 0 && pick[i - 1] + 1 == block) pick[--i] = 0;
      if (i == 0) break;
      ++pick[i - 1];
    }
    edges = std::move(next);
    block *= static_cast<std::size_t>(k);
  }
  return Hypergraph(k, block, std::move(edges));
}

namespace {

// Splits a vertex subset into k labelled parts such that every edge inside the
// subset is internal to a part or meets every part once, then recurses into
// the parts. Results are memoized per subset.
class PartitionSearch {
 public:
  explicit PartitionSearch(const Hypergraph& f) : f_(f), k_(f.uniformity()) {
    for (const auto& e : f.edges()) {
      std::uint32_t m = 0;
      for (Vertex v : e) m |= 1u << v;
      edge_masks_.push_back(m);
    }
  }

  // Coordinates of each vertex of `mask` (indexed by vertex), all of equal
  // length; nullopt if the induced subhypergraph does not embed.
  using Coords = std::vector<std::vector<std::uint8_t>>;

  const std::optional<Coords>& embed(std::uint32_t mask) {
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
    auto result = solve(mask);
    return memo_.emplace(mask, std::move(result)).first->second;
  }

 private:
  std::optional<Coords> solve(std::uint32_t mask) {
    const std::size_t n = f_.vertex_count();
    if (std::popcount(mask) <= 1) return Coords(n);
    std::vector<Vertex> members;
    for (Vertex v = 0; v < n; ++v)
      if (mask >> v & 1) members.push_back(v);
    // Edges inside mask, grouped by their largest vertex.
    std::vector<std::vector<std::uint32_t>> closing(members.size());
    for (std::uint32_t em : edge_masks_)
      if ((em & mask) == em) {
        const Vertex top = static_cast<Vertex>(31 - std::countl_zero(em));
        const auto idx = static_cast<std::size_t>(std::find(members.begin(), members.end(), top) - members.begin());
        closing[idx].push_back(em);
      }
    std::vector<std::uint8_t> label(n, 0);
    std::optional<Coords> found;
    assign(members, closing, label, 0, 0, found);
    return found;
  }

  // Labels members[i..] in base-k counter order with labels introduced in
  // first-use order.
  bool assign(const std::vector<Vertex>& members, const std::vector<std::vector<std::uint32_t>>& closing,
              std::vector<std::uint8_t>& label, std::size_t i, int used, std::optional<Coords>& found) {
    if (i == members.size()) {
      if (used < 2) return false;
      return combine(members, label, used, found);
    }
    const Vertex v = members[i];
    const int limit = std::min(used + 1, k_);
    for (int c = 0; c < limit; ++c) {
      label[v] = static_cast<std::uint8_t>(c);
      bool ok = true;
      for (std::uint32_t em : closing[i]) {
        std::uint32_t seen = 0;
        for (std::uint32_t m = em; m; m &= m - 1) seen |= 1u << label[static_cast<std::size_t>(std::countr_zero(m))];
        const int distinct = std::popcount(seen);
        if (distinct != 1 && distinct != k_) {
          ok = false;
          break;
        }
      }
      if (ok && assign(members, closing, label, i + 1, std::max(used, c + 1), found)) return true;
    }
    return false;
  }

  bool combine(const std::vector<Vertex>& members, const std::vector<std::uint8_t>& label, int used,
               std::optional<Coords>& found) {
    std::vector<std::uint32_t> parts(static_cast<std::size_t>(used), 0);
    for (Vertex v : members) parts[label[v]] |= 1u << v;
    std::size_t depth = 0;
    std::vector<const Coords*> sub;
    for (std::uint32_t part : parts) {
      const auto& r = embed(part);
      if (!r) return false;
      sub.push_back(&*r);
      for (Vertex v : members)
        if (part >> v & 1) depth = std::max(depth, (*r)[v].size());
    }
    Coords out(f_.vertex_count());
    for (Vertex v : members) {
      auto& c = out[v];
      c.push_back(label[v]);
      const auto& tail = (*sub[label[v]])[v];
      c.insert(c.end(), tail.begin(), tail.end());
      c.resize(depth + 1, 0);
    }
    found = std::move(out);
    return true;
  }

  const Hypergraph& f_;
  int k_;
  std::vector<std::uint32_t> edge_masks_;
  std::unordered_map<std::uint32_t, std::optional<Coords>> memo_;
};

}  // namespace

std::optional<EmbeddingWitness> decide_ternary_embeddable(const Hypergraph& f) {
  if (f.uniformity() < 3) throw Error("frequency needs uniformity at least 3");
  if (f.vertex_count() > 24) throw Error("partition search supports at most 24 vertices");
  PartitionSearch search(f);
  const std::uint32_t all = f.vertex_count() == 32 ? ~0u : (1u << f.vertex_count()) - 1;
  const auto& coords = search.embed(all);
  if (!coords) return std::nullopt;
  EmbeddingWitness w;
  w.base = f.uniformity();
  for (const auto& c : *coords) w.length = std::max(w.length, c.size());
  for (const auto& c : *coords) {
    KaryVector v{w.base, c};
    v.coords.resize(w.length, 0);
    w.image.push_back(std::move(v));
  }
  return w;
}

bool is_frequent(const Hypergraph& f) { return decide_ternary_embeddable(f).has_value(); }

bool verify_embedding(const Hypergraph& f, const EmbeddingWitness& w) {
  if (w.image.size() != f.vertex_count() || w.base != f.uniformity()) return false;
  for (const auto& v : w.image) {
    if (v.coords.size() != w.length || v.base != w.base) return false;
    for (auto c : v.coords)
      if (c >= w.base) return false;
  }
  auto sorted = w.image;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  std::vector<KaryVector> buf;
  for (const auto& e : f.edges()) {
    buf.clear();
    for (Vertex v : e) buf.push_back(w.image[v]);
    if (!kary_edge(w.base, buf)) return false;
  }
  return true;
}

}  // namespace udh
