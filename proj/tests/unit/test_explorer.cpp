#include <doctest.h>

#include <set>

#include "clustergeom/explorer.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace clustergeom;

namespace {

using LP = LaurentPolynomial;

LP A(std::size_t i) { return LP::variable(2, i); }
LP one() { return LP::constant(2, 1); }

ExchangeGraph run(const Seed& s, std::size_t depth, Dedup dedup = Dedup::labeled, unsigned threads = 1) {
  ExploreOptions opt;
  opt.depth = depth;
  opt.dedup = dedup;
  opt.threads = threads;
  return explore(root_node(s), opt);
}

// Evaluate a Laurent polynomial in two variables at a rational point.
oracle::Rat eval(const LP& p, const oracle::Rat& a1, const oracle::Rat& a2) {
  oracle::Rat sum = 0;
  for (const auto& [e, c] : p.terms()) {
    oracle::Rat t = c;
    const oracle::Rat* base[2] = {&a1, &a2};
    for (std::size_t i = 0; i < 2; ++i) {
      const oracle::Rat b = e[i] >= 0 ? *base[i] : oracle::Rat(1 / *base[i]);
      for (std::int64_t j = 0; j < (e[i] >= 0 ? e[i] : -e[i]); ++j) t *= b;
    }
    sum += t;
  }
  return sum;
}

}  // namespace

TEST_CASE("root node and single steps on A2") {
  const SeedNode root = root_node(fixtures::a2());
  CHECK(root.cluster == std::vector<LP>{A(0), A(1)});
  const SeedNode n1 = step(root, 0);
  CHECK(n1.cluster[0] == LP::monomial({-1, 0}) + LP::monomial({-1, 1}));
  CHECK(n1.cluster[1] == A(1));
  const SeedNode n2 = step(n1, 1);
  CHECK(n2.cluster[1] * A(0) * A(1) == one() + A(0) + A(1));
  const SeedNode back = step(n1, 0);
  CHECK(back.cluster == root.cluster);
  CHECK(back.seed.epsilon() == root.seed.epsilon());
  CHECK_THROWS_AS(step(root, 2), ValidationError);
}

TEST_CASE("exchange polynomial") {
  const SeedNode root = root_node(fixtures::a2());
  CHECK(exchange_polynomial(root, 0) == one() + A(1));
  const SeedNode m = root_node(fixtures::markov());
  const LP p = exchange_polynomial(m, 0);
  CHECK(p == LP::monomial({0, 2, 0}) + LP::monomial({0, 0, 2}));
}

TEST_CASE("A2 variables match the classical recurrence") {
  // alternate mutations 1,2,1,2,... and record each new variable
  SeedNode node = root_node(fixtures::a2());
  std::vector<LP> seq{A(0), A(1)};
  for (std::size_t t = 0; t < 8; ++t) {
    const std::size_t k = t % 2;
    node = step(node, k);
    seq.push_back(node.cluster[k]);
  }
  const oracle::Rat pts[][2] = {{2, 3}, {oracle::Rat(1, 2), 5}, {-7, oracle::Rat(3, 4)}};
  for (const auto& pt : pts) {
    const auto expected = oracle::a2_sequence(pt[0], pt[1], seq.size());
    for (std::size_t i = 0; i < seq.size(); ++i) CHECK(eval(seq[i], pt[0], pt[1]) == expected[i]);
  }
  CHECK(seq[5] == seq[0]);
  CHECK(seq[6] == seq[1]);
}

TEST_CASE("A2 exchange graph") {
  const ExchangeGraph labeled = run(fixtures::a2(), 12);
  CHECK(labeled.nodes.size() == 10);
  CHECK(labeled.clusters == 5);
  CHECK(labeled.laurent_ok);
  CHECK_FALSE(labeled.truncated);
  const ExchangeGraph unlabeled = run(fixtures::a2(), 12, Dedup::unlabeled);
  CHECK(unlabeled.nodes.size() == 5);
  CHECK(unlabeled.clusters == 5);

  std::set<std::string> vars;
  for (const auto& n : labeled.nodes)
    for (const auto& c : n.cluster) vars.insert(c.to_string("A"));
  CHECK(vars.size() == 5);
  CHECK(vars.count("A1") == 1);
  CHECK(vars.count("A2") == 1);
  CHECK(vars.count("A1^-1*A2 + A1^-1") == 1);

  CHECK(run(fixtures::a2(), 0).nodes.size() == 1);
}

TEST_CASE("finite types and Markov") {
  const ExchangeGraph a3 = run(fixtures::a3(), 8, Dedup::unlabeled);
  CHECK(a3.clusters == 14);
  CHECK(a3.laurent_ok);
  const ExchangeGraph b2 = run(fixtures::seed_from_skew({{0, 1}, {-1, 0}}, {1, 2}), 10);
  CHECK(b2.clusters == 6);
  const ExchangeGraph markov = run(fixtures::markov(), 3);
  CHECK(markov.laurent_ok);
  CHECK(markov.nonnegative_coefficients);
}

TEST_CASE("edges reverse under a second mutation") {
  const ExchangeGraph g = run(fixtures::a3(), 4);
  for (const auto& e : g.edges) {
    const SeedNode back = step(g.nodes[e.to], e.k);
    CHECK(node_key(back, Dedup::labeled) == g.keys[e.from]);
  }
}

TEST_CASE("explore is deterministic across thread counts") {
  const ExchangeGraph a = run(fixtures::markov(), 4, Dedup::labeled, 1);
  const ExchangeGraph b = run(fixtures::markov(), 4, Dedup::labeled, 4);
  CHECK(a.keys == b.keys);
  REQUIRE(a.edges.size() == b.edges.size());
  for (std::size_t i = 0; i < a.edges.size(); ++i) {
    CHECK(a.edges[i].from == b.edges[i].from);
    CHECK(a.edges[i].k == b.edges[i].k);
    CHECK(a.edges[i].to == b.edges[i].to);
  }
}

TEST_CASE("resource caps truncate instead of failing") {
  ExploreOptions opt;
  opt.depth = 6;
  opt.limits.max_terms = 3;
  const ExchangeGraph g = explore(root_node(fixtures::markov()), opt);
  CHECK(g.truncated);
  CHECK(g.laurent_ok);
}

TEST_CASE("verify_laurent") {
  const Seed a2 = fixtures::a2();
  const LaurentReport ra = verify_laurent_A(a2, IntVector{1, 0}, 6);
  CHECK(ra.ok);
  CHECK_FALSE(ra.truncated);
  CHECK(ra.tori_checked > 1);
  const LaurentReport zero = verify_laurent_A(a2, IntVector{0, 0}, 4);
  CHECK(zero.ok);
  CHECK(zero.max_terms == 1);
  CHECK_THROWS_AS(verify_laurent_A(a2, IntVector{-1, 0}, 2), ValidationError);
  CHECK_THROWS_AS(verify_laurent_A(a2, IntVector{1, 0, 0}, 2), ValidationError);

  CHECK(verify_laurent_X(a2, IntVector{1, -1}, 6).ok);
  CHECK(verify_laurent_X(a2, IntVector{0, 0}, 3).ok);
  CHECK_THROWS_AS(verify_laurent_X(a2, IntVector{-1, 1}, 2), ValidationError);

  CHECK(verify_laurent_A(fixtures::markov(), IntVector{1, 0, 0}, 4).ok);
  CHECK(verify_laurent_X(build_seed(fixtures::nine_ray()), IntVector(9), 2).ok);

  const LaurentReport t1 = verify_laurent_A(fixtures::markov(), IntVector{0, 1, 0}, 4, {}, 1);
  const LaurentReport t4 = verify_laurent_A(fixtures::markov(), IntVector{0, 1, 0}, 4, {}, 4);
  CHECK(t1.tori_checked == t4.tori_checked);
  CHECK(t1.max_terms == t4.max_terms);
}

TEST_CASE("path strings are 1-based") {
  CHECK(path_string({}) == "[]");
  CHECK(path_string({0, 2, 1}) == "[1,3,2]");
}
