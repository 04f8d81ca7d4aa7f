#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "clustergeom/laurent.hpp"
#include "clustergeom/seed.hpp"

namespace clustergeom {

/// Resource caps. Exceeding one truncates a search instead of producing a
/// wrong answer.
struct Limits {
  std::size_t max_terms = 1'000'000;
  std::int64_t max_exponent = 1'000'000;
};

/// Default limits with max_terms overridden by CLUSTER_GEOM_MAX_TERMS.
Limits limits_from_env();

/// A seed together with its cluster variables, written as Laurent
/// polynomials in the initial A-coordinates A_1..A_n.
struct SeedNode {
  Seed seed;
  std::vector<LaurentPolynomial> cluster;
  std::size_t depth = 0;
};

SeedNode root_node(const Seed& s);

/// Mutate at k; the new k-th variable is P_k / A_k computed by exact
/// division. Throws LaurentViolation if the division is not exact.
SeedNode step(const SeedNode& node, std::size_t k, const Limits& limits = {});

/// Exchange polynomial P_k evaluated on the node's cluster variables.
LaurentPolynomial exchange_polynomial(const SeedNode& node, std::size_t k, const Limits& limits = {});

enum class Dedup { labeled, unlabeled };

/// Labeled key: exchange matrix plus the ordered cluster. Unlabeled key: the
/// same after sorting the unfrozen indices by their cluster variables.
std::string node_key(const SeedNode& node, Dedup dedup);

/// Key of the unordered cluster (set of variables).
std::string cluster_key(const SeedNode& node);

struct ExploreOptions {
  std::size_t depth = 0;
  Dedup dedup = Dedup::labeled;
  unsigned threads = 1;
  Limits limits{};
};

struct ExchangeEdge {
  std::size_t from = 0;
  std::size_t k = 0;
  std::size_t to = 0;
};

struct ExchangeGraph {
  std::vector<SeedNode> nodes;  // in discovery order
  std::vector<std::string> keys;
  std::vector<ExchangeEdge> edges;
  std::size_t depth = 0;
  std::size_t clusters = 0;
  std::size_t max_terms = 0;
  bool laurent_ok = true;
  bool truncated = false;
  bool nonnegative_coefficients = true;  // observation only
  std::vector<std::string> witnesses;
};

ExchangeGraph explore(const SeedNode& root, const ExploreOptions& options);

enum class Side { A, X };

struct LaurentReport {
  Side side = Side::A;
  std::size_t depth = 0;
  bool ok = true;
  bool truncated = false;
  std::size_t tori_checked = 0;
  std::size_t max_terms = 0;
  std::int64_t max_abs_exponent = 0;
  std::vector<std::string> witnesses;
};

/// Express z^q (q in M°, initial f-coordinates) on every seed torus reached
/// by a path of length <= depth and check each expression is Laurent.
/// Requires <e_i, q> >= 0 for unfrozen i.
LaurentReport verify_laurent_A(const Seed& s, std::span<const Integer> q, std::size_t depth,
                               const Limits& limits = {}, unsigned threads = 1);

/// Same on the X side for q in N. Requires <q, -v_i> >= 0 for unfrozen i.
LaurentReport verify_laurent_X(const Seed& s, std::span<const Integer> q, std::size_t depth,
                               const Limits& limits = {}, unsigned threads = 1);

std::string path_string(const std::vector<std::size_t>& path);

}  // namespace clustergeom
