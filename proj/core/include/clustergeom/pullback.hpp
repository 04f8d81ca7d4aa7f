#pragma once

#include "clustergeom/laurent.hpp"
#include "clustergeom/seed.hpp"

namespace clustergeom {

// A-side functions live on M° (initial f-coordinates), X-side functions on N
// (initial e-coordinates). Every seed torus shares these character lattices,
// so only the exponents of the substituted binomials depend on the seed.

/// mu_k^* z^m = z^m (1 + z^{v_k})^{-<d_k e_k, m>}.
RationalExpression pullback_A(const Seed& s, std::size_t k, const RationalExpression& expr);
/// Inverse of pullback_A: z^m -> z^m (1 + z^{v_k})^{<d_k e_k, m>}.
RationalExpression pushforward_A(const Seed& s, std::size_t k, const RationalExpression& expr);

/// mu_k^* z^n = z^n (1 + z^{e_k})^{-{n, e_k} d_k}.
RationalExpression pullback_X(const Seed& s, std::size_t k, const RationalExpression& expr);
/// Inverse of pullback_X.
RationalExpression pushforward_X(const Seed& s, std::size_t k, const RationalExpression& expr);

/// Monomial substitution z^m -> z^{m - <d_k e_k, m> v_k}.
LaurentPolynomial double_mutation_A(const Seed& s, std::size_t k, const LaurentPolynomial& p);

/// The character z^m of a lattice vector.
LaurentPolynomial character(std::span<const Integer> m);

}  // namespace clustergeom
