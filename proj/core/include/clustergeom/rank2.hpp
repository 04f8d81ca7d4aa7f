#pragma once

#include <optional>
#include <string>
#include <vector>

#include "clustergeom/seed.hpp"
#include "clustergeom/toric.hpp"

namespace clustergeom {

/// Primitive vectors w_i generating Z^2 with positive weights nu_i.
struct Rank2Data {
  std::vector<Vec2> w;
  std::vector<Integer> nu;

  std::size_t size() const noexcept { return w.size(); }
  Integer nu_gcd() const;
  bool all_nu_one() const;
  void validate() const;
};

/// {e_i, e_j} = nu (w_i ^ w_j), d_i = nu_i / nu, nothing frozen.
Seed build_seed(const Rank2Data& data);

/// Recover w_i as the images of the e_i in N/K with the induced form made the
/// standard determinant. Each failed condition raises its own message.
Rank2Data seed_to_rank2(const Seed& s);

/// 2 x n matrix with columns w_i.
IntegerMatrix w_matrix(const Rank2Data& data);

/// Fan through all w_i (plus optional extra rays) and one center per w_i.
BlowupSurface surface_of(const Rank2Data& data, std::span<const Vec2> extra_rays = {});

/// Class pi^*C - sum a_i E_i of a in K. Throws if a is not in K.
DivisorClass k_to_dperp(const Rank2Data& data, const BlowupSurface& y, std::span<const Integer> a);
DivisorClass k_to_dperp(const Rank2Data& data, std::span<const Integer> a);

struct KGram {
  std::vector<IntVector> k_basis;  // in the seed basis of N
  IntegerMatrix gram;
};

KGram symmetric_form(const Rank2Data& data, std::span<const Vec2> extra_rays = {});
/// Gram matrix on a given list of K vectors.
IntegerMatrix gram_on(const Rank2Data& data, const std::vector<IntVector>& vectors,
                      std::span<const Vec2> extra_rays = {});

struct InvarianceResult {
  bool invariant = false;
  IntegerMatrix original;
  IntegerMatrix mutated;
};

/// Gram on a fixed K basis after mutating along `path` (0-based indices):
/// w_i' is the image of e_i', the K basis is re-expressed in the new basis.
InvarianceResult invariance_check(const Rank2Data& data, std::span<const std::size_t> path,
                                  std::span<const Vec2> extra_rays = {});

enum class Definiteness { negative_definite, negative_semidefinite_degenerate, indefinite, zero_rank };

std::string to_string(Definiteness d);

struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
};

Inertia inertia(const IntegerMatrix& gram);
Definiteness classify_definiteness(const IntegerMatrix& gram);

struct FgReport {
  Definiteness classification = Definiteness::zero_rank;
  bool fg_conjecture_possible = false;
  std::string rationale;
};

FgReport fg_failure_flag(const Rank2Data& data);

struct NonFgReport {
  bool checked = false;  // false when some nu_i > 1
  std::vector<Integer> boundary_self_intersections;
  bool all_minus_two = false;
  bool non_noetherian_principal = false;
  std::string citation;
};

NonFgReport non_fg_flag(const Rank2Data& data);

/// Splitting N = N/K (+) K through a section of w: column i holds the K-part
/// e_i'' of e_i in K-basis coordinates.
IntegerMatrix period_splitting(const Rank2Data& data);

}  // namespace clustergeom
