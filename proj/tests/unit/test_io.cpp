#include <doctest.h>

#include <random>

#include "clustergeom/io.hpp"
#include "fixtures.hpp"

using namespace clustergeom;

TEST_CASE("scalar JSON encoding") {
  CHECK(to_json(Integer(-5)) == Json(-5));
  CHECK(to_json(Integer("123456789012345678901234567890")) == Json("123456789012345678901234567890"));
  CHECK(to_json(Rational(6, 4)) == Json("3/2"));
  CHECK(to_json(Rational(4, 2)) == Json(2));
  CHECK(integer_from_json(Json("-99999999999999999999")) == Integer("-99999999999999999999"));
  CHECK(rational_from_json(Json("-2/4")) == Rational(-1, 2));
  CHECK_THROWS_AS(rational_from_json(Json("1/0")), ValidationError);
  CHECK_THROWS_AS(integer_from_json(Json(1.5)), ValidationError);
  CHECK_THROWS_AS(integer_from_json(Json("abc")), ValidationError);
}

TEST_CASE("paths and vectors") {
  CHECK(parse_path("1,3,2") == std::vector<std::size_t>{0, 2, 1});
  CHECK(parse_path("").empty());
  CHECK(parse_path("[2, 1]") == std::vector<std::size_t>{1, 0});
  CHECK_THROWS_AS(parse_path("0"), ValidationError);
  CHECK(parse_vector("1,-2,0") == IntVector{1, -2, 0});
  CHECK_THROWS_AS(parse_vector("1,x"), ValidationError);
}

TEST_CASE("seed files") {
  const Json a2 = Json::parse(R"({"rank": 2, "skew": [[0, 1], [-1, 0]], "d": [1, 1], "frozen": []})");
  const SeedFile sf = seed_file_from_json(a2);
  CHECK(sf.seed.epsilon() == IntegerMatrix{{0, 1}, {-1, 0}});
  CHECK_FALSE(sf.rank2);

  const Json half = Json::parse(R"({"rank": 2, "skew": [[0, "1/2"], ["-1/2", 0]], "d": [2, 2], "frozen": []})");
  CHECK_THROWS_AS(seed_file_from_json(half), ValidationError);
  const Json b2 = Json::parse(R"({"rank": 2, "skew": [["0", "1/1"], [-1, 0]], "d": [1, 2]})");
  CHECK(seed_file_from_json(b2).seed.epsilon() == IntegerMatrix{{0, 2}, {-1, 0}});

  const Json frozen = Json::parse(R"({"rank": 2, "skew": [[0, 1], [-1, 0]], "frozen": [2]})");
  CHECK_FALSE(seed_file_from_json(frozen).seed.fixed().is_unfrozen(1));
  CHECK_THROWS_AS(seed_file_from_json(Json::parse(R"({"rank": 2, "skew": [[0, 1], [-1, 0]], "frozen": [3]})")),
                  ValidationError);
  CHECK_THROWS_AS(seed_file_from_json(Json::parse(R"({"rank": 2, "skew": [[0, 1]]})")), ValidationError);
  CHECK_THROWS_AS(seed_file_from_json(Json::parse(R"({"skew": [[0, 1], [-1, 0]]})")), ValidationError);
  CHECK_THROWS_AS(seed_file_from_json(Json::parse(R"([1, 2])")), ValidationError);
  CHECK_THROWS_AS(
      seed_file_from_json(Json::parse(R"({"rank": 2, "skew": [[0, 1], [-1, 0]], "epsilon": [[0, 2], [-2, 0]]})")),
      ValidationError);
  CHECK_THROWS_AS(
      seed_file_from_json(Json::parse(R"({"rank": 2, "skew": [[0, 1], [-1, 0]], "basis": [[2, 0], [0, 1]]})")),
      ValidationError);

  const Json bare = Json::parse(R"({"w": [[1, 0], [0, 1], [-1, -1]], "nu": [1, 1, 1]})");
  const SeedFile r = seed_file_from_json(bare);
  REQUIRE(r.rank2);
  CHECK(r.seed.epsilon() == IntegerMatrix{{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}});
  CHECK(rank2_to_json(*r.rank2) == bare);
  CHECK_THROWS_AS(seed_file_from_json(Json::parse(R"({"w": [[2, 0], [0, 1]]})")), ValidationError);
}

TEST_CASE("emitted seeds re-parse to the same canonical form") {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 100; ++trial) {
    const Seed s = fixtures::random_seed(rng, 2 + rng() % 3, rng() % 5, 2, rng() % 2);
    const Json j = seed_to_json(s);
    const SeedFile back = seed_file_from_json(j);
    CHECK(back.seed.basis() == s.basis());
    CHECK(back.seed.path() == s.path());
    CHECK(back.seed.epsilon() == s.epsilon());
    CHECK(seed_to_json(back.seed).dump() == j.dump());
  }
}

TEST_CASE("seed files on disk") {
  const SeedFile m = load_seed_file(std::string(CLUSTERGEOM_TEST_DATA) + "/markov.json");
  CHECK(m.seed.epsilon() == IntegerMatrix{{0, 2, -2}, {-2, 0, 2}, {2, -2, 0}});
  CHECK_THROWS_AS(load_seed_file(std::string(CLUSTERGEOM_TEST_DATA) + "/missing.json"), ValidationError);
}

TEST_CASE("report JSON") {
  ExploreOptions opt;
  opt.depth = 2;
  const ExchangeGraph g = explore(root_node(fixtures::a2()), opt);
  const Json j = graph_to_json(g, Dedup::labeled, true);
  for (const char* key : {"depth", "nodes", "edges", "laurent_ok", "witnesses", "max_terms"}) CHECK(j.contains(key));
  CHECK(j["node_list"].size() == g.nodes.size());
  CHECK_FALSE(graph_to_json(g, Dedup::labeled, false).contains("node_list"));

  const LaurentReport r = verify_laurent_A(fixtures::a2(), IntVector{1, 0}, 2);
  const Json lj = laurent_report_to_json(r);
  CHECK(lj["side"] == "A");
  CHECK(lj["laurent_ok"] == true);
}
