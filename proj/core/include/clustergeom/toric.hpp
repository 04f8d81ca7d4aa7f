#pragma once

#include <array>
#include <span>
#include <utility>
#include <vector>

#include "clustergeom/matrix.hpp"

namespace clustergeom {

using Vec2 = std::array<Integer, 2>;

Integer det2(const Vec2& a, const Vec2& b);
bool is_primitive(const Vec2& v);

/// Strict counterclockwise angle order starting at the positive x-axis.
bool angle_less(const Vec2& a, const Vec2& b);

/// Cyclically ordered (counterclockwise) primitive rays of a complete smooth
/// fan in Z^2.
struct Fan2D {
  std::vector<Vec2> rays;

  std::size_t size() const noexcept { return rays.size(); }
  /// Index of the ray with primitive generator v, or size() if absent.
  std::size_t find(const Vec2& v) const;
  bool is_complete_smooth() const;
};

/// Sort by angle and deduplicate; split every gap of angle >= pi by the
/// 90-degree rotation of its first ray; then resolve each remaining cone of
/// determinant m > 1 by Hirzebruch-Jung subdivision.
Fan2D complete_smooth_fan(std::span<const Vec2> rays);

/// a_i = D_i^2, from u_{i-1} + u_{i+1} = -a_i u_i.
std::vector<Integer> self_intersections(const Fan2D& fan);

/// pi^*(sum x_j D_j) + sum y_i E_i on a blowup of a toric surface.
struct DivisorClass {
  IntVector toric;
  IntVector exceptional;
};

/// A smooth toric surface blown up at distinct general points of the
/// boundary, each with multiplicity one.
struct BlowupSurface {
  Fan2D fan;
  std::vector<std::size_t> centers;  // ray index carrying the i-th center
  std::vector<Integer> toric_self_intersections;
  IntegerMatrix toric_gram;          // Q_jj = a_j, Q_{j,j+-1} = 1

  std::size_t picard_rank() const { return fan.size() + centers.size() - 2; }
  std::vector<Integer> boundary_self_intersections() const;
  /// Proper transform of the j-th boundary divisor.
  DivisorClass boundary_class(std::size_t j) const;
  Integer intersect(const DivisorClass& a, const DivisorClass& b) const;
  /// Relation vectors (<m, u_j>)_j for m = (1,0) and (0,1).
  std::vector<IntVector> toric_relations() const;
};

/// assignments: (ray index, multiplicity). Multiplicities other than 1 are
/// rejected: the blown-up surface is singular there.
BlowupSurface blowup_surface(const Fan2D& fan, std::span<const std::pair<std::size_t, Integer>> assignments);

}  // namespace clustergeom
