#pragma once

#include <random>
#include <vector>

#include "clustergeom/clustergeom.hpp"

namespace fixtures {

namespace cg = clustergeom;

inline cg::Seed seed_from_skew(std::initializer_list<std::initializer_list<long>> skew, std::vector<long> d = {},
                               std::vector<std::size_t> frozen = {}) {
  cg::IntegerMatrix s(skew);
  const std::size_t n = s.rows();
  if (d.empty()) d.assign(n, 1);
  std::vector<cg::Integer> dz(d.begin(), d.end());
  std::vector<bool> uf(n, true);
  for (auto f : frozen) uf[f] = false;
  return cg::Seed::root(cg::make_fixed_data(cg::to_rational(s), dz, uf));
}

inline cg::Seed a2() { return seed_from_skew({{0, 1}, {-1, 0}}); }
inline cg::Seed a3() { return seed_from_skew({{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}}); }
inline cg::Seed markov() { return seed_from_skew({{0, 2, -2}, {-2, 0, 2}, {2, -2, 0}}); }

inline cg::Rank2Data rank2(std::vector<std::pair<long, long>> w, std::vector<long> nu = {}) {
  cg::Rank2Data data;
  for (auto [x, y] : w) data.w.push_back({cg::Integer(x), cg::Integer(y)});
  if (nu.empty()) nu.assign(w.size(), 1);
  for (long v : nu) data.nu.emplace_back(v);
  return data;
}

inline cg::Rank2Data cubic() { return rank2({{1, 0}, {0, 1}, {-1, -1}}); }
inline cg::Rank2Data speyer() { return rank2({{1, 0}, {0, 1}, {-1, -1}}, {3, 3, 3}); }
inline cg::Rank2Data nine_ray() {
  return rank2({{1, 0}, {1, 0}, {1, 0}, {0, 1}, {0, 1}, {0, 1}, {-1, -1}, {-1, -1}, {-1, -1}});
}

/// Random fixed data with d_i in {1,2,3} (d_0 = 1) and skew form
/// {e_i, e_j} = s_ij / gcd(d_i, d_j), so epsilon is integral and
/// d-skew-symmetrizable. Entries s_ij are drawn from [-bound, bound].
inline cg::FixedDataPtr random_fixed(std::mt19937_64& rng, std::size_t n, long bound = 2, std::size_t frozen = 0) {
  std::uniform_int_distribution<long> ds(1, 3), ss(-bound, bound);
  std::vector<cg::Integer> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = i == 0 ? 1 : ds(rng);
  cg::RationalMatrix skew(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      cg::Integer g;
      mpz_gcd(g.get_mpz_t(), d[i].get_mpz_t(), d[j].get_mpz_t());
      cg::Rational v(ss(rng), g);
      v.canonicalize();
      skew(i, j) = v;
      skew(j, i) = -v;
    }
  std::vector<bool> uf(n, true);
  for (std::size_t f = 0; f < frozen && f < n; ++f) uf[n - 1 - f] = false;
  return cg::make_fixed_data(skew, d, uf);
}

/// Root seed of random fixed data mutated along a random path.
inline cg::Seed random_seed(std::mt19937_64& rng, std::size_t n, std::size_t steps, long bound = 2,
                            std::size_t frozen = 0) {
  cg::Seed s = cg::Seed::root(random_fixed(rng, n, bound, frozen));
  const auto uf = s.fixed().unfrozen();
  std::uniform_int_distribution<std::size_t> pick(0, uf.size() - 1);
  for (std::size_t t = 0; t < steps; ++t) s = cg::mutate_seed(s, uf[pick(rng)]);
  return s;
}

}  // namespace fixtures
