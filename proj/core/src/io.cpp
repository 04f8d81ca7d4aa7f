#include "clustergeom/io.hpp"

#include <fstream>
#include <sstream>

namespace clustergeom {

Json to_json(const Integer& z) {
  if (z.fits_slong_p()) return Json(static_cast<std::int64_t>(z.get_si()));
  return Json(z.get_str());
}

Json to_json(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  if (c.get_den() == 1) return to_json(Integer(c.get_num()));
  return Json(c.get_str());
}

Json to_json(std::span<const Integer> v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

Json to_json(const IntegerMatrix& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const IntVector r = m.row(i);
    a.push_back(to_json(std::span<const Integer>(r)));
  }
  return a;
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    Integer z;
    if (z.set_str(j.get<std::string>(), 10) != 0) throw ValidationError("not an integer: " + j.get<std::string>());
    return z;
  }
  throw ValidationError("expected an integer, got " + j.dump());
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(integer_from_json(j));
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(integer_from_json(j));
    const Integer num = integer_from_json(Json(s.substr(0, slash)));
    const Integer den = integer_from_json(Json(s.substr(slash + 1)));
    if (den == 0) throw ValidationError("zero denominator in " + s);
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  throw ValidationError("expected an integer or \"p/q\" string, got " + j.dump());
}

IntVector vector_from_json(const Json& j) {
  if (!j.is_array()) throw ValidationError("expected an array, got " + j.dump());
  IntVector v;
  for (const auto& x : j) v.push_back(integer_from_json(x));
  return v;
}

namespace {

std::vector<std::size_t> indices_from_json(const Json& j, std::size_t n, const char* what) {
  if (!j.is_array()) throw ValidationError(std::string(what) + " must be an array");
  std::vector<std::size_t> out;
  for (const auto& x : j) {
    const Integer z = integer_from_json(x);
    if (z < 1 || z > static_cast<long>(n))
      throw ValidationError(std::string(what) + " index " + z.get_str() + " out of range 1.." + std::to_string(n));
    out.push_back(z.get_ui() - 1);
  }
  return out;
}

const Json& require(const Json& j, const char* key) {
  if (!j.contains(key)) throw ValidationError(std::string("seed file is missing \"") + key + "\"");
  return j.at(key);
}

}  // namespace

Rank2Data rank2_from_json(const Json& j) {
  if (!j.is_object()) throw ValidationError("rank-2 data must be an object");
  Rank2Data data;
  const Json& w = require(j, "w");
  if (!w.is_array()) throw ValidationError("w must be an array of pairs");
  for (const auto& v : w) {
    const IntVector p = vector_from_json(v);
    if (p.size() != 2) throw ValidationError("each w_i must have two entries");
    data.w.push_back({p[0], p[1]});
  }
  if (j.contains("nu")) {
    data.nu = vector_from_json(j.at("nu"));
  } else {
    data.nu.assign(data.w.size(), Integer(1));
  }
  data.validate();
  return data;
}

Json rank2_to_json(const Rank2Data& data) {
  Json w = Json::array();
  for (const auto& v : data.w) w.push_back({to_json(v[0]), to_json(v[1])});
  return Json{{"w", w}, {"nu", to_json(std::span<const Integer>(data.nu))}};
}

SeedFile seed_file_from_json(const Json& j) {
  if (!j.is_object()) throw ValidationError("seed file must be a JSON object");
  if (!j.contains("rank") && j.contains("w")) {
    Rank2Data data = rank2_from_json(j);
    Seed s = build_seed(data);
    return SeedFile{std::move(s), std::move(data)};
  }
  const Integer rank_z = integer_from_json(require(j, "rank"));
  if (rank_z < 0 || rank_z > 4096) throw ValidationError("rank out of range");
  const std::size_t n = rank_z.get_ui();

  const Json& skew_j = require(j, "skew");
  if (!skew_j.is_array() || skew_j.size() != n) throw ValidationError("skew must be an n x n array");
  RationalMatrix skew(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!skew_j[i].is_array() || skew_j[i].size() != n) throw ValidationError("skew must be an n x n array");
    for (std::size_t c = 0; c < n; ++c) skew(i, c) = rational_from_json(skew_j[i][c]);
  }
  std::vector<Integer> d;
  if (j.contains("d")) {
    d = vector_from_json(j.at("d"));
  } else {
    d.assign(n, Integer(1));
  }
  std::vector<bool> unfrozen(n, true);
  if (j.contains("frozen"))
    for (std::size_t i : indices_from_json(j.at("frozen"), n, "frozen")) unfrozen[i] = false;
  auto fixed = make_fixed_data(std::move(skew), std::move(d), std::move(unfrozen));

  IntegerMatrix basis = IntegerMatrix::identity(n);
  if (j.contains("basis")) {
    const Json& b = j.at("basis");
    if (!b.is_array() || b.size() != n) throw ValidationError("basis must be an n x n array");
    for (std::size_t i = 0; i < n; ++i) {
      const IntVector row = vector_from_json(b[i]);
      if (row.size() != n) throw ValidationError("basis must be an n x n array");
      for (std::size_t c = 0; c < n; ++c) basis(i, c) = row[c];
    }
  }
  std::vector<std::size_t> path;
  if (j.contains("path")) path = indices_from_json(j.at("path"), n, "path");
  Seed seed(fixed, std::move(basis), std::move(path));
  if (j.contains("epsilon")) {
    IntegerMatrix given(n, n);
    const Json& e = j.at("epsilon");
    if (!e.is_array() || e.size() != n) throw ValidationError("epsilon must be an n x n array");
    for (std::size_t i = 0; i < n; ++i) {
      const IntVector row = vector_from_json(e[i]);
      if (row.size() != n) throw ValidationError("epsilon must be an n x n array");
      for (std::size_t c = 0; c < n; ++c) given(i, c) = row[c];
    }
    if (!(given == seed.epsilon())) throw ValidationError("epsilon in the file does not match the seed");
  }
  std::optional<Rank2Data> r2;
  if (j.contains("rank2")) r2 = rank2_from_json(j.at("rank2"));
  return SeedFile{std::move(seed), std::move(r2)};
}

SeedFile load_seed_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error& e) {
    throw ValidationError("invalid JSON in " + path + ": " + e.what());
  }
  return seed_file_from_json(j);
}

Json seed_to_json(const Seed& s) {
  const FixedData& fd = s.fixed();
  const std::size_t n = s.rank();
  Json skew = Json::array();
  for (std::size_t i = 0; i < n; ++i) {
    Json row = Json::array();
    for (std::size_t c = 0; c < n; ++c) row.push_back(to_json(fd.skew()(i, c)));
    skew.push_back(row);
  }
  Json frozen = Json::array();
  for (std::size_t i : fd.frozen()) frozen.push_back(i + 1);
  Json path = Json::array();
  for (std::size_t k : s.path()) path.push_back(k + 1);
  return Json{{"rank", n},
              {"skew", skew},
              {"d", to_json(std::span<const Integer>(fd.d()))},
              {"frozen", frozen},
              {"basis", to_json(s.basis())},
              {"epsilon", to_json(s.epsilon())},
              {"path", path}};
}

Json graph_to_json(const ExchangeGraph& g, Dedup dedup, bool list_nodes) {
  Json out{{"depth", g.depth},
           {"dedup", dedup == Dedup::labeled ? "labeled" : "unlabeled"},
           {"nodes", g.nodes.size()},
           {"edges", g.edges.size()},
           {"clusters", g.clusters},
           {"laurent_ok", g.laurent_ok},
           {"truncated", g.truncated},
           {"witnesses", g.witnesses},
           {"max_terms", g.max_terms},
           {"nonnegative_coefficients_observed", g.nonnegative_coefficients}};
  if (list_nodes) {
    Json nodes = Json::array();
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
      const SeedNode& node = g.nodes[i];
      Json cluster = Json::array();
      for (const auto& c : node.cluster) cluster.push_back(c.to_string("A"));
      Json path = Json::array();
      for (std::size_t k : node.seed.path()) path.push_back(k + 1);
      nodes.push_back(Json{{"id", i}, {"depth", node.depth}, {"path", path}, {"cluster", cluster},
                           {"epsilon", to_json(node.seed.epsilon())}});
    }
    Json edges = Json::array();
    for (const auto& e : g.edges) edges.push_back(Json::array({e.from, e.k + 1, e.to}));
    out["node_list"] = nodes;
    out["edge_list"] = edges;
  }
  return out;
}

Json laurent_report_to_json(const LaurentReport& r) {
  return Json{{"side", r.side == Side::A ? "A" : "X"},
              {"depth", r.depth},
              {"laurent_ok", r.ok},
              {"truncated", r.truncated},
              {"tori_checked", r.tori_checked},
              {"max_terms", r.max_terms},
              {"max_abs_exponent", r.max_abs_exponent},
              {"witnesses", r.witnesses}};
}

std::vector<std::size_t> parse_path(const std::string& text) {
  std::vector<std::size_t> out;
  for (const auto& z : parse_vector(text)) {
    if (z < 1) throw ValidationError("mutation indices are 1-based positive integers");
    out.push_back(z.get_ui() - 1);
  }
  return out;
}

IntVector parse_vector(const std::string& text) {
  IntVector out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t[]");
    const auto e = item.find_last_not_of(" \t[]");
    if (b == std::string::npos) continue;
    Integer z;
    if (z.set_str(item.substr(b, e - b + 1), 10) != 0) throw ValidationError("not an integer: " + item);
    out.push_back(z);
  }
  return out;
}

}  // namespace clustergeom
