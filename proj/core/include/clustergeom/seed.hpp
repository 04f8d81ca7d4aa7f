#pragma once

#include <memory>
#include <string>
#include <vector>

#include "clustergeom/lattice.hpp"
#include "clustergeom/matrix.hpp"

namespace clustergeom {

/// Mutation-independent data: the lattice N = Z^n with a rational skew form,
/// symmetrizers d_i and the frozen/unfrozen split. Indices are 0-based.
class FixedData {
public:
  FixedData(RationalMatrix skew, std::vector<Integer> d, std::vector<bool> unfrozen);

  std::size_t rank() const noexcept { return skew_.rows(); }
  const RationalMatrix& skew() const noexcept { return skew_; }
  const std::vector<Integer>& d() const noexcept { return d_; }
  const Integer& d(std::size_t i) const { return d_.at(i); }
  bool is_unfrozen(std::size_t i) const { return unfrozen_.at(i); }
  const std::vector<bool>& unfrozen_mask() const noexcept { return unfrozen_; }
  std::vector<std::size_t> unfrozen() const;
  std::vector<std::size_t> frozen() const;
  bool has_frozen() const;

  /// Skew form of two vectors given in initial coordinates.
  Rational bracket(std::span<const Integer> a, std::span<const Integer> b) const;

  /// <n, m> for n in N (initial e-coordinates) and m in M° (initial
  /// f-coordinates).
  Rational pairing(std::span<const Integer> n, std::span<const Integer> m) const;

  friend bool operator==(const FixedData& a, const FixedData& b) {
    return a.skew_ == b.skew_ && a.d_ == b.d_ && a.unfrozen_ == b.unfrozen_;
  }

private:
  RationalMatrix skew_;
  std::vector<Integer> d_;
  std::vector<bool> unfrozen_;
};

using FixedDataPtr = std::shared_ptr<const FixedData>;

FixedDataPtr make_fixed_data(RationalMatrix skew, std::vector<Integer> d, std::vector<bool> unfrozen);

/// A seed: basis columns e_i written in initial coordinates plus the mutation
/// path that produced it.
class Seed {
public:
  Seed(FixedDataPtr fixed, IntegerMatrix basis, std::vector<std::size_t> path = {});

  static Seed root(FixedDataPtr fixed);

  const FixedData& fixed() const noexcept { return *fixed_; }
  const FixedDataPtr& fixed_ptr() const noexcept { return fixed_; }
  const IntegerMatrix& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& path() const noexcept { return path_; }
  std::size_t rank() const noexcept { return basis_.rows(); }

  IntVector e(std::size_t i) const { return basis_.column(i); }

  /// epsilon_ij = {e_i, e_j} d_j. The frozen x frozen block is reported as 0.
  const IntegerMatrix& epsilon() const noexcept { return eps_; }
  RationalMatrix epsilon_rational() const;

  /// v_i = {e_i, .} in initial f-coordinates; i must be unfrozen.
  IntVector v(std::size_t i) const;
  /// Dual basis vector f_i = e_i^* / d_i in initial f-coordinates.
  IntVector f(std::size_t i) const;

  bool is_root() const;

private:
  FixedDataPtr fixed_;
  IntegerMatrix basis_;
  std::vector<std::size_t> path_;
  IntegerMatrix eps_;
};

IntegerMatrix epsilon_matrix(const Seed& s);

Seed mutate_seed(const Seed& s, std::size_t k);
Seed mutate_along(const Seed& s, std::span<const std::size_t> path);

/// Mutation of an exchange matrix. `unfrozen` may be empty (all unfrozen);
/// entries with both indices frozen are returned as 0.
IntegerMatrix mutate_epsilon(const IntegerMatrix& eps, std::span<const Integer> d, std::size_t k,
                             const std::vector<bool>& unfrozen = {});

bool is_skew_symmetrizable(const IntegerMatrix& eps, std::span<const Integer> d);

IntVector tropical_mutation_A(const Seed& s, std::size_t k, std::span<const Integer> n);
IntVector tropical_mutation_X(const Seed& s, std::size_t k, std::span<const Integer> m);

/// n -> n + {n, d_k e_k} e_k, the effect of mutating twice at k on N.
IntVector double_mutation_N(const Seed& s, std::size_t k, std::span<const Integer> n);
/// m -> m - <d_k e_k, m> v_k, the dual statement on M°.
IntVector double_mutation_M(const Seed& s, std::size_t k, std::span<const Integer> m);

Seed principal_double(const Seed& s);

IntegerMatrix p_star_matrix(const Seed& s);

struct PicardGroup {
  std::vector<Integer> invariants;
  bool factorial_guaranteed = false;
  IntegerMatrix projection;              // rows of U^{-1} for the non-unit factors
  std::vector<Integer> moduli;           // same length as invariants
};

PicardGroup picard_invariants(const Seed& s);

/// Coset of m (seed f-coordinates) in M°/p*(N), one entry per invariant
/// factor, reduced into [0, factor) for torsion factors.
IntVector line_bundle_class(const PicardGroup& pic, std::span<const Integer> m);

bool is_coprime_seed(const Seed& s);
bool totally_coprime_sufficient(const Seed& s);

struct FanRay {
  std::size_t index = 0;       // seed index i
  IntVector generator;         // d_i e_i in N, or -d_i v_i in M
  IntVector direction;         // primitive direction of the generator
  Integer multiplicity = 1;    // ind(d_i v_i) on the X side, 1 on the A side
};

struct SeedFan {
  std::vector<FanRay> rays;
  /// Groups of seed indices sharing a ray (only groups of size > 1).
  std::vector<std::vector<std::size_t>> coincidences;
};

SeedFan fan_rays_A(const Seed& s);
SeedFan fan_rays_X(const Seed& s);

bool fan_mutation_consistency(const Seed& s, std::size_t k);

/// Exact-equality key: the basis matrix.
std::string canonical_key(const Seed& s);
/// Key invariant under relabeling unfrozen indices that share the same d_i.
std::string unlabeled_key(const Seed& s);

}  // namespace clustergeom
