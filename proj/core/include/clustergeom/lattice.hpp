#pragma once

#include <optional>
#include <span>
#include <vector>

#include "clustergeom/matrix.hpp"

namespace clustergeom {

/// Smith decomposition A = U * S * V with U, V unimodular and S diagonal,
/// diagonal entries non-negative and d1 | d2 | ... . The inverses of U and V
/// are carried along because kernels and integer solves need them.
struct SmithForm {
  IntegerMatrix U;
  IntegerMatrix S;
  IntegerMatrix V;
  IntegerMatrix U_inv;
  IntegerMatrix V_inv;
  std::size_t rank = 0;

  std::vector<Integer> diagonal() const;
};

SmithForm smith_normal_form(const IntegerMatrix& a);

/// Row-style Hermite normal form: echelon, positive pivots, entries above a
/// pivot reduced into [0, pivot). Zero rows are dropped.
IntegerMatrix hermite_normal_form(const IntegerMatrix& a);

/// Basis of the saturated kernel {n : A n = 0}. Deterministic: the vectors
/// are the rows of the Hermite normal form of any kernel basis.
std::vector<IntVector> kernel_basis(const IntegerMatrix& a);

/// Invariant factors of Z^rows / A Z^cols. Unit factors are dropped, free
/// summands are reported as 0 and come last.
std::vector<Integer> cokernel_invariants(const IntegerMatrix& a);

/// gcd of the entries. Throws ValidationError on the zero vector.
Integer divisibility_index(std::span<const Integer> v);

/// Some integer x with A x = b, or nullopt when none exists.
std::optional<IntVector> solve_integer(const IntegerMatrix& a, std::span<const Integer> b);

Integer determinant(const IntegerMatrix& a);
std::size_t rank(const IntegerMatrix& a);
std::size_t rank(const RationalMatrix& a);
bool is_unimodular(const IntegerMatrix& a);

/// Inverse of a unimodular matrix; throws ValidationError otherwise.
IntegerMatrix inverse_unimodular(const IntegerMatrix& a);

/// True iff the columns of a and b span the same subgroup of Z^rows.
bool same_column_lattice(const IntegerMatrix& a, const IntegerMatrix& b);

Integer gcd_of(std::span<const Integer> v);

}  // namespace clustergeom
