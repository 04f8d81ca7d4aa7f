#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <string>

#include "clustergeom/explorer.hpp"
#include "clustergeom/rank2.hpp"
#include "clustergeom/seed.hpp"

namespace clustergeom {

using Json = nlohmann::json;

// Integers that fit in 64 bits are JSON numbers, larger ones decimal strings.
// Rationals with denominator != 1 are "p/q" strings.
Json to_json(const Integer& z);
Json to_json(const Rational& q);
Json to_json(const IntegerMatrix& m);
Json to_json(std::span<const Integer> v);

Integer integer_from_json(const Json& j);
Rational rational_from_json(const Json& j);
IntVector vector_from_json(const Json& j);

/// Parsed seed file. Indices in files (frozen, path) are 1-based.
struct SeedFile {
  Seed seed;
  std::optional<Rank2Data> rank2;
};

/// Accepts either a seed object {rank, skew, d, frozen, basis?, path?,
/// rank2?} or a bare rank-2 object {w, nu}.
SeedFile seed_file_from_json(const Json& j);
SeedFile load_seed_file(const std::string& path);

Json seed_to_json(const Seed& s);
Json rank2_to_json(const Rank2Data& data);
Rank2Data rank2_from_json(const Json& j);

Json graph_to_json(const ExchangeGraph& g, Dedup dedup, bool list_nodes);
Json laurent_report_to_json(const LaurentReport& r);

/// Parse "1,2,3" into 0-based indices.
std::vector<std::size_t> parse_path(const std::string& text);
/// Parse "1,-2,0" into integers.
IntVector parse_vector(const std::string& text);

}  // namespace clustergeom
