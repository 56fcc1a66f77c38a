#include "udh/json_io.hpp"

#include <algorithm>
#include <sstream>

namespace udh {

namespace {

// Malformed documents surface as udh::Error like every other input problem.
template <typename F>
auto guarded(const char* what, F&& body) {
  try {
    return body();
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed ") + what + " JSON: " + e.what());
  }
}

std::string pair_key(std::size_t i, std::size_t j) { return std::to_string(i) + "," + std::to_string(j); }

std::vector<std::size_t> split_key(const std::string& key, std::size_t parts) {
  std::vector<std::size_t> out;
  std::istringstream in(key);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty() || !std::all_of(item.begin(), item.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw Error("bad index key '" + key + "'");
    out.push_back(std::stoul(item));
  }
  if (out.size() != parts) throw Error("index key '" + key + "' should have " + std::to_string(parts) + " parts");
  return out;
}

Colour colour_from_json(const Json& c, int k) {
  if (c.is_string()) {
    const auto s = c.get<std::string>();
    if (s == "red") return 1;
    if (s == "blue") return 2;
    if (s == "green") return 3;
    throw Error("unknown colour '" + s + "'");
  }
  const int v = c.get<int>();
  if (v < 1 || (k > 0 && v > k)) throw Error("colour index out of range");
  return static_cast<Colour>(v);
}

Json colour_map_to_json(const std::map<IndexPair, std::size_t>& m) {
  Json j = Json::object();
  for (const auto& [pair, p] : m) j[pair_key(pair.first, pair.second)] = p;
  return j;
}

std::map<IndexPair, std::size_t> colour_map_from_json(const Json& j) {
  std::map<IndexPair, std::size_t> m;
  for (const auto& [key, value] : j.items()) {
    const auto parts = split_key(key, 2);
    m[{parts[0], parts[1]}] = value.get<std::size_t>();
  }
  return m;
}

}  // namespace

Json big_to_json(const BigInt& value) {
  if (value >= 0 && value <= std::numeric_limits<std::uint64_t>::max()) return value.convert_to<std::uint64_t>();
  return value.str();
}

Json witness_to_json(const ShadowColouring& w, int k) {
  Json j;
  j["ordering"] = w.ordering;
  Json colours = Json::array();
  for (const auto& [t, c] : w.colour) {
    Json entry;
    entry["tuple"] = t;
    if (k == 3) entry["colour"] = colour_name(c, k);
    else entry["colour"] = static_cast<int>(c);
    colours.push_back(entry);
  }
  j["colours"] = colours;
  return j;
}

ShadowColouring witness_from_json(const Json& j) {
  return guarded("witness", [&] {
    ShadowColouring w;
    w.ordering = j.at("ordering").get<std::vector<Vertex>>();
    for (const auto& entry : j.at("colours")) {
      auto t = entry.at("tuple").get<Tuple>();
      std::sort(t.begin(), t.end());
      w.colour[t] = colour_from_json(entry.at("colour"), 0);
    }
    return w;
  });
}

Json embedding_to_json(const EmbeddingWitness& w) {
  Json j;
  j["base"] = w.base;
  j["length"] = w.length;
  Json map = Json::object();
  for (std::size_t v = 0; v < w.image.size(); ++v) map[std::to_string(v)] = w.image[v].digits();
  j["map"] = map;
  return j;
}

EmbeddingWitness embedding_from_json(const Json& j) {
  return guarded("embedding", [&] {
    EmbeddingWitness w;
    w.base = j.value("base", 3);
    w.length = j.at("length").get<std::size_t>();
    const auto& map = j.at("map");
    w.image.resize(map.size());
    for (const auto& [key, value] : map.items()) {
      const auto v = split_key(key, 1)[0];
      if (v >= w.image.size()) throw Error("embedding map keys must be 0..v(F)-1");
      w.image[v] = KaryVector::from_digits(w.base, value.get<std::string>());
    }
    return w;
  });
}

Json certificate_to_json(const DensityCertificate& c) {
  Json j;
  if (c.notion == Notion::triple) {
    j["X"] = c.x;
    j["Y"] = c.y;
    j["Z"] = c.z;
  } else {
    j["U"] = c.u;
  }
  return j;
}

DensityCertificate certificate_from_json(const Json& j) {
  return guarded("certificate", [&] {
    DensityCertificate c;
    if (j.contains("U")) {
      c.notion = Notion::vertex;
      c.u = j.at("U").get<std::vector<Vertex>>();
    } else {
      c.notion = Notion::triple;
      c.x = j.at("X").get<std::vector<Vertex>>();
      c.y = j.at("Y").get<std::vector<Vertex>>();
      c.z = j.at("Z").get<std::vector<Vertex>>();
    }
    return c;
  });
}

Json report_to_json(const DensityReport& r) {
  Json j;
  j["notion"] = to_string(r.notion);
  j["verdict"] = to_string(r.verdict);
  j["d"] = r.d;
  j["eta"] = r.eta;
  if (r.certificate) j["certificate"] = certificate_to_json(*r.certificate);
  j["slack"] = r.slack;
  j["stats"] = {{"sets_examined", r.stats.sets_examined}, {"descent_iterations", r.stats.descent_iterations}};
  return j;
}

Json profile_to_json(const std::vector<ProfilePoint>& points) {
  Json arr = Json::array();
  for (const auto& p : points)
    arr.push_back({{"eta", p.eta}, {"min_size", p.min_size}, {"value", p.value}, {"argmin", p.argmin}, {"exact", p.exact}});
  return arr;
}

Json reduced_to_json(const ReducedHypergraph& a) {
  const std::size_t m = a.index_count();
  Json j;
  j["m"] = m;
  Json sizes = Json::object();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = i + 1; k < m; ++k) sizes[pair_key(i, k)] = a.class_size(i, k);
  j["class_size"] = sizes;
  Json cons = Json::object();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t jj = i + 1; jj < m; ++jj)
      for (std::size_t k = jj + 1; k < m; ++k) {
        Json list = Json::array();
        for (const auto& t : a.triples(i, jj, k)) list.push_back({t[0], t[1], t[2]});
        cons[pair_key(i, jj) + "," + std::to_string(k)] = list;
      }
  j["constituents"] = cons;
  return j;
}

ReducedHypergraph reduced_from_json(const Json& j) {
  return guarded("reduced hypergraph", [&] {
    const auto m = j.at("m").get<std::size_t>();
    if (m > kMaxIndices) throw Error("at most 64 indices are supported");
    std::vector<std::vector<std::size_t>> sizes(m, std::vector<std::size_t>(m, 0));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t k = i + 1; k < m; ++k) {
        const auto key = pair_key(i, k);
        if (!j.at("class_size").contains(key)) throw Error("class_size lacks pair " + key);
        sizes[i][k] = j.at("class_size").at(key).get<std::size_t>();
      }
    ReducedHypergraph a(m, sizes);
    for (const auto& [key, list] : j.at("constituents").items()) {
      const auto idx = split_key(key, 3);
      for (const auto& t : list) {
        if (t.size() != 3) throw Error("constituent entries must be [p, q, r]");
        a.add_triple(idx[0], idx[1], idx[2], t[0].get<std::size_t>(), t[1].get<std::size_t>(), t[2].get<std::size_t>());
      }
    }
    return a;
  });
}

Json core_to_json(const CoreSelection& c) {
  Json j;
  j["lambda"] = c.lambda;
  j["red"] = colour_map_to_json(c.red);
  j["blue"] = colour_map_to_json(c.blue);
  j["green"] = colour_map_to_json(c.green);
  return j;
}

CoreSelection core_from_json(const Json& j) {
  return guarded("core selection", [&] {
    CoreSelection c;
    c.lambda = j.at("lambda").get<std::vector<std::size_t>>();
    c.red = colour_map_from_json(j.at("red"));
    c.blue = colour_map_from_json(j.at("blue"));
    c.green = colour_map_from_json(j.at("green"));
    return c;
  });
}

Json grid_minimum_to_json(const GridMinimum& g) {
  return {{"resolution", g.resolution}, {"min", g.value}, {"argmin", {g.x, g.y, g.z}}};
}

Json tn_audit_to_json(const TnAuditReport& r) {
  Json v = Json::array();
  for (const auto& x : r.violations) v.push_back({{"subset", x.subset}, {"edges", x.edges}, {"bound", x.bound}});
  return {{"level", r.level},
          {"mode", r.mode == TnAuditMode::exact ? "exact" : "sampled"},
          {"subsets_examined", r.subsets_examined},
          {"min_margin", r.min_margin},
          {"argmin", r.argmin},
          {"violations", v}};
}

Json optimality_to_json(const OptimalityPoint& p) {
  Json j = {{"r", p.r},
            {"n", p.n},
            {"size", big_to_json(p.size)},
            {"eta", p.eta},
            {"edges", big_to_json(p.edges)},
            {"bound", p.bound},
            {"ratio", p.ratio}};
  if (p.brute_force) j["brute_force_edges"] = *p.brute_force;
  return j;
}

Json supersaturation_to_json(const SupersaturationReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) rows.push_back({{"n", row.n}, {"hom", big_to_json(row.hom)}, {"ratio", row.ratio}});
  return {{"ratios", rows}};
}

}  // namespace udh
