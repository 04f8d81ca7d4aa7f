#include <doctest.h>

#include <random>

#include "clustergeom/rank2.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace clustergeom;

namespace {

Vec2 v(long a, long b) { return {Integer(a), Integer(b)}; }

// Index of w among the P^2 rays, for the intersection oracle.
int p2_line(const Vec2& w) {
  if (w == v(1, 0)) return 0;
  if (w == v(0, 1)) return 1;
  return 2;
}

IntegerMatrix oracle_gram(const Rank2Data& data, const std::vector<IntVector>& basis) {
  std::vector<int> lines;
  for (const auto& w : data.w) lines.push_back(p2_line(w));
  IntegerMatrix g(basis.size(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) g(i, j) = oracle::p2_k_pair(basis[i], basis[j], lines);
  return g;
}

Rank2Data random_rank2(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<long> c(-3, 3);
  for (;;) {
    Rank2Data d;
    while (d.w.size() < n) {
      const Vec2 r = v(c(rng), c(rng));
      if (is_primitive(r)) d.w.push_back(r);
    }
    d.nu.assign(n, Integer(1));
    try {
      d.validate();
      return d;
    } catch (const ValidationError&) {
    }
  }
}

}  // namespace

TEST_CASE("build_seed examples") {
  CHECK(build_seed(fixtures::speyer()).epsilon() == IntegerMatrix{{0, 3, -3}, {-3, 0, 3}, {3, -3, 0}});
  const Seed nine = build_seed(fixtures::nine_ray());
  const auto w = fixtures::nine_ray().w;
  for (std::size_t i = 0; i < 9; ++i)
    for (std::size_t j = 0; j < 9; ++j) CHECK(nine.epsilon()(i, j) == det2(w[i], w[j]));
  const Rank2Data two = fixtures::rank2({{1, 0}, {0, 1}});
  CHECK(build_seed(two).epsilon() == IntegerMatrix{{0, 1}, {-1, 0}});
  CHECK(kernel_basis(w_matrix(two)).empty());

  CHECK_THROWS_AS(fixtures::rank2({{1, 0}, {1, 0}}).validate(), ValidationError);
  CHECK_THROWS_AS(fixtures::rank2({{2, 0}, {0, 1}}).validate(), ValidationError);
  CHECK_THROWS_AS(fixtures::rank2({{1, 0}, {0, 1}}, {1, 0}).validate(), ValidationError);
  CHECK_THROWS_AS(build_seed(fixtures::rank2({{1, 0}, {1, 0}})), ValidationError);
}

TEST_CASE("weights give symmetrizers") {
  const Seed s = build_seed(fixtures::rank2({{1, 0}, {0, 1}, {-1, -1}}, {2, 4, 2}));
  CHECK(s.fixed().d() == std::vector<Integer>{1, 2, 1});
  CHECK(is_skew_symmetrizable(s.epsilon(), s.fixed().d()));
}

TEST_CASE("seed_to_rank2") {
  const Rank2Data cubic = seed_to_rank2(build_seed(fixtures::cubic()));
  CHECK(build_seed(cubic).epsilon() == build_seed(fixtures::cubic()).epsilon());
  CHECK_THROWS_WITH_AS(seed_to_rank2(fixtures::markov()), doctest::Contains("unimodular"), ValidationError);
  CHECK_THROWS_WITH_AS(seed_to_rank2(fixtures::seed_from_skew({{0, 0}, {0, 0}})), doctest::Contains("rank 2"),
                       ValidationError);
  CHECK_THROWS_WITH_AS(seed_to_rank2(fixtures::seed_from_skew({{0, 1}, {-1, 0}}, {1, 2})), doctest::Contains("d_i"),
                       ValidationError);
  CHECK_THROWS_WITH_AS(seed_to_rank2(fixtures::seed_from_skew({{0, 1}, {-1, 0}}, {}, {1})),
                       doctest::Contains("frozen"), ValidationError);
  // e_2 maps to twice a primitive vector
  CHECK_THROWS_WITH_AS(seed_to_rank2(fixtures::seed_from_skew({{0, 2, 1}, {-2, 0, 0}, {-1, 0, 0}})),
                       doctest::Contains("primitive"), ValidationError);
}

TEST_CASE("build_seed and seed_to_rank2 round trip up to GL2") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 60; ++trial) {
    const Rank2Data d = random_rank2(rng, 2 + rng() % 4);
    const Rank2Data back = seed_to_rank2(build_seed(d));
    REQUIRE(back.size() == d.size());
    // w -> back is a single linear map g with det 1 (the form is preserved)
    const IntegerMatrix a = w_matrix(d), b = w_matrix(back);
    for (std::size_t i = 0; i < d.size(); ++i)
      for (std::size_t j = 0; j < d.size(); ++j) CHECK(det2(d.w[i], d.w[j]) == det2(back.w[i], back.w[j]));
    CHECK(same_column_lattice(b, IntegerMatrix::identity(2)));
    CHECK(kernel_basis(a) == kernel_basis(b));
  }
}

TEST_CASE("K to D-perp") {
  const Rank2Data nine = fixtures::nine_ray();
  const BlowupSurface y = surface_of(nine);
  IntVector a(9);
  a[0] = 1;
  a[1] = -1;
  const DivisorClass c = k_to_dperp(nine, y, a);
  CHECK(y.intersect(c, c) == -2);
  CHECK(c.exceptional == IntVector{-1, 1, 0, 0, 0, 0, 0, 0, 0});
  for (std::size_t j = 0; j < y.fan.size(); ++j) CHECK(y.intersect(c, y.boundary_class(j)) == 0);

  const Rank2Data cubic = fixtures::cubic();
  const BlowupSurface yc = surface_of(cubic);
  const DivisorClass l = k_to_dperp(cubic, yc, IntVector{1, 1, 1});
  CHECK(yc.intersect(l, l) == -2);
  const DivisorClass h{l.toric, IntVector(3)};
  CHECK(yc.intersect(h, h) == 1);

  const DivisorClass z = k_to_dperp(cubic, IntVector{0, 0, 0});
  CHECK(yc.intersect(z, z) == 0);
  CHECK_THROWS_AS(k_to_dperp(cubic, IntVector{1, 0, 0}), ValidationError);
}

TEST_CASE("classes do not depend on the toric representative") {
  const Rank2Data nine = fixtures::nine_ray();
  const BlowupSurface y = surface_of(nine);
  const auto kb = kernel_basis(w_matrix(nine));
  for (const auto& a : kb)
    for (const auto& b : kb) {
      const DivisorClass ca = k_to_dperp(nine, y, a);
      const DivisorClass cb = k_to_dperp(nine, y, b);
      for (const auto& rel : y.toric_relations()) {
        DivisorClass shifted = ca;
        for (std::size_t j = 0; j < rel.size(); ++j) shifted.toric[j] += 3 * rel[j];
        CHECK(y.intersect(shifted, cb) == y.intersect(ca, cb));
      }
    }
}

TEST_CASE("symmetric form values") {
  const KGram cubic = symmetric_form(fixtures::cubic());
  CHECK(cubic.gram == IntegerMatrix{{-2}});
  CHECK(cubic.k_basis == std::vector<IntVector>{{1, 1, 1}});

  const Rank2Data nine = fixtures::nine_ray();
  IntVector diff(9), all(9, Integer(1));
  diff[0] = 1;
  diff[1] = -1;
  CHECK(gram_on(nine, {diff}) == IntegerMatrix{{-2}});
  CHECK(gram_on(nine, {all}) == IntegerMatrix{{0}});

  CHECK(symmetric_form(fixtures::rank2({{1, 0}, {0, 1}})).gram.rows() == 0);
}

TEST_CASE("Gram agrees with intersection theory on P2") {
  std::mt19937_64 rng(53);
  const Vec2 rays[] = {v(1, 0), v(0, 1), v(-1, -1)};
  for (int trial = 0; trial < 60; ++trial) {
    Rank2Data d;
    const std::size_t n = 2 + rng() % 6;
    for (std::size_t i = 0; i < n; ++i) d.w.push_back(rays[rng() % 3]);
    d.nu.assign(n, Integer(1));
    try {
      d.validate();
    } catch (const ValidationError&) {
      continue;
    }
    const KGram k = symmetric_form(d);
    CHECK(k.gram == oracle_gram(d, k.k_basis));
  }
  const Rank2Data nine = fixtures::nine_ray();
  const KGram k = symmetric_form(nine);
  CHECK(k.gram == oracle_gram(nine, k.k_basis));
}

TEST_CASE("Gram does not depend on the fan completion") {
  const Rank2Data nine = fixtures::nine_ray();
  const std::vector<Vec2> extra{v(1, 1), v(-1, 0), v(1, -1)};
  CHECK(symmetric_form(nine).gram == symmetric_form(nine, extra).gram);
  CHECK(surface_of(nine, extra).fan.size() > surface_of(nine).fan.size());

  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 30; ++trial) {
    const Rank2Data d = random_rank2(rng, 3 + rng() % 3);
    const std::vector<Vec2> more{v(2, 1), v(-1, 3)};
    CHECK(symmetric_form(d).gram == symmetric_form(d, more).gram);
  }
}

TEST_CASE("invariance under mutation") {
  const Rank2Data nine = fixtures::nine_ray();
  for (std::size_t k = 0; k < 9; ++k) {
    const std::vector<std::size_t> p{k};
    const InvarianceResult r = invariance_check(nine, p);
    CHECK(r.invariant);
    CHECK(r.original == r.mutated);
  }
  const Rank2Data cubic = fixtures::cubic();
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) {
      const std::vector<std::size_t> p{a, b};
      CHECK(invariance_check(cubic, p).invariant);
    }
  CHECK(invariance_check(cubic, std::vector<std::size_t>{}).invariant);

  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 40; ++trial) {
    const Rank2Data d = random_rank2(rng, 3 + rng() % 3);
    std::vector<std::size_t> p;
    const std::size_t len = 1 + rng() % 3;
    for (std::size_t t = 0; t < len; ++t) p.push_back(rng() % d.size());
    CHECK(invariance_check(d, p).invariant);
  }
}

TEST_CASE("definiteness") {
  CHECK(classify_definiteness(IntegerMatrix{{-2}}) == Definiteness::negative_definite);
  CHECK(classify_definiteness(IntegerMatrix(0, 0)) == Definiteness::zero_rank);
  CHECK(classify_definiteness(symmetric_form(fixtures::nine_ray()).gram) ==
        Definiteness::negative_semidefinite_degenerate);
  CHECK(classify_definiteness(IntegerMatrix{{0, 1}, {1, 0}}) == Definiteness::indefinite);
  CHECK(classify_definiteness(IntegerMatrix{{0, 0}, {0, -1}}) == Definiteness::negative_semidefinite_degenerate);
  CHECK(classify_definiteness(IntegerMatrix{{-2, 1}, {1, -2}}) == Definiteness::negative_definite);
  CHECK(classify_definiteness(IntegerMatrix{{-1, 2}, {2, -1}}) == Definiteness::indefinite);
  const Inertia in = inertia(IntegerMatrix{{1, 0, 0}, {0, -1, 0}, {0, 0, 0}});
  CHECK(in.positive == 1);
  CHECK(in.negative == 1);
  CHECK(in.zero == 1);
  CHECK(to_string(Definiteness::negative_definite) == "negative_definite");
}

TEST_CASE("FG and non-FG flags") {
  const FgReport cubic = fg_failure_flag(fixtures::cubic());
  CHECK(cubic.fg_conjecture_possible);
  CHECK(cubic.classification == Definiteness::negative_definite);
  const FgReport nine = fg_failure_flag(fixtures::nine_ray());
  CHECK_FALSE(nine.fg_conjecture_possible);
  CHECK(fg_failure_flag(fixtures::rank2({{1, 0}, {0, 1}})).fg_conjecture_possible);

  const NonFgReport n9 = non_fg_flag(fixtures::nine_ray());
  CHECK(n9.checked);
  CHECK(n9.boundary_self_intersections == std::vector<Integer>{-2, -2, -2});
  CHECK(n9.all_minus_two);
  CHECK(n9.non_noetherian_principal);
  const NonFgReport nc = non_fg_flag(fixtures::cubic());
  CHECK(nc.boundary_self_intersections == std::vector<Integer>{0, 0, 0});
  CHECK_FALSE(nc.non_noetherian_principal);
  const NonFgReport mixed = non_fg_flag(fixtures::rank2({{1, 0}, {1, 0}, {0, 1}, {0, 1}, {-1, -1}}));
  CHECK(mixed.boundary_self_intersections == std::vector<Integer>{-1, -1, 0});
  CHECK_FALSE(mixed.all_minus_two);

  const NonFgReport sp = non_fg_flag(fixtures::speyer());
  CHECK_FALSE(sp.checked);
  CHECK_FALSE(sp.citation.empty());
  CHECK_THROWS_AS(surface_of(fixtures::speyer()), UnsupportedError);
}

TEST_CASE("period splitting") {
  const Rank2Data nine = fixtures::nine_ray();
  const IntegerMatrix s = period_splitting(nine);
  const auto kb = kernel_basis(w_matrix(nine));
  REQUIRE(s.rows() == kb.size());
  REQUIRE(s.cols() == 9);
  // the K part of a vector in K is the vector itself
  const IntegerMatrix kmat = IntegerMatrix::from_columns(kb, 9);
  CHECK(s * kmat == IntegerMatrix::identity(kb.size()));
}
