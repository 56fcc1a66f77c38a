#pragma once

// JSON encodings of witnesses, reports and reduced hypergraphs. Every
// top-level report carries a "schema" field.

#include <json.hpp>

#include "udh/colour_order.hpp"
#include "udh/density_audit.hpp"
#include "udh/inequality.hpp"
#include "udh/reduced_select.hpp"
#include "udh/ternary.hpp"

namespace udh {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "udh-report/1";

/// Exact integers as JSON numbers when they fit in 64 bits, else as decimal
/// strings.
Json big_to_json(const BigInt& value);

/// {ordering: [...], colours: [{tuple: [...], colour: "red" | ... | index}]}
Json witness_to_json(const ShadowColouring& w, int k);
ShadowColouring witness_from_json(const Json& j);

/// {base, length, map: {"v": "digits"}}
Json embedding_to_json(const EmbeddingWitness& w);
EmbeddingWitness embedding_from_json(const Json& j);

Json certificate_to_json(const DensityCertificate& c);
DensityCertificate certificate_from_json(const Json& j);
/// {notion, verdict, d, eta, certificate?, slack, stats}
Json report_to_json(const DensityReport& r);
Json profile_to_json(const std::vector<ProfilePoint>& points);

/// {m, class_size: {"i,j": s}, constituents: {"i,j,k": [[p,q,r], ...]}}
Json reduced_to_json(const ReducedHypergraph& a);
ReducedHypergraph reduced_from_json(const Json& j);

/// {lambda, red: {"i,j": p}, blue: ..., green: ...}
Json core_to_json(const CoreSelection& c);
CoreSelection core_from_json(const Json& j);

Json grid_minimum_to_json(const GridMinimum& g);
Json tn_audit_to_json(const TnAuditReport& r);
Json optimality_to_json(const OptimalityPoint& p);
Json supersaturation_to_json(const SupersaturationReport& r);

}  // namespace udh
