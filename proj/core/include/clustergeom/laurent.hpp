#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "clustergeom/matrix.hpp"

namespace clustergeom {

using Exponent = std::vector<std::int64_t>;

/// Graded-lexicographic order: higher total degree first, ties broken
/// lexicographically with larger exponents first.
struct GrlexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

struct ExponentHash {
  std::size_t operator()(const Exponent& e) const noexcept;
};

Exponent add_exponents(const Exponent& a, const Exponent& b);
Exponent sub_exponents(const Exponent& a, const Exponent& b);
Exponent scale_exponent(const Exponent& a, std::int64_t c);
Exponent to_exponent(std::span<const Integer> v);

/// Sparse Laurent polynomial with integer coefficients in a fixed number of
/// variables. Terms are kept sorted by GrlexGreater with no zero coefficient.
class LaurentPolynomial {
public:
  using Term = std::pair<Exponent, Integer>;

  explicit LaurentPolynomial(std::size_t nvars = 0) : nvars_(nvars) {}

  static LaurentPolynomial constant(std::size_t nvars, const Integer& c);
  static LaurentPolynomial monomial(Exponent e, const Integer& c = 1);
  static LaurentPolynomial variable(std::size_t nvars, std::size_t i);
  /// Build from unsorted terms; equal exponents are merged.
  static LaurentPolynomial from_terms(std::size_t nvars, std::vector<Term> terms);

  std::size_t nvars() const noexcept { return nvars_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  bool is_constant() const;
  const std::vector<Term>& terms() const noexcept { return terms_; }
  const Term& leading_term() const { return terms_.front(); }

  /// Componentwise min / max exponent over all terms; zero polynomial gives zeros.
  Exponent min_exponents() const;
  Exponent max_exponents() const;
  std::int64_t max_abs_exponent() const;
  bool has_nonnegative_coefficients() const;

  LaurentPolynomial operator-() const;
  friend LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  LaurentPolynomial& operator+=(const LaurentPolynomial& b) { return *this = *this + b; }
  LaurentPolynomial& operator*=(const LaurentPolynomial& b) { return *this = *this * b; }

  LaurentPolynomial shifted(const Exponent& e) const;  // times z^e
  LaurentPolynomial pow(unsigned long e) const;

  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  /// Canonical text, e.g. "3*x1^2*x2^-1 + 1".
  std::string to_string(const std::string& var = "x") const;

private:
  std::size_t nvars_;
  std::vector<Term> terms_;
};

/// (1 + z^v)^a for a >= 0.
LaurentPolynomial binomial_power(const Exponent& v, long a);

/// r with q * r = p, or nullopt when p/q is not a Laurent polynomial.
std::optional<LaurentPolynomial> exact_divide(const LaurentPolynomial& p, const LaurentPolynomial& q);

/// Quotient of Laurent polynomials. No gcd reduction is attempted.
class RationalExpression {
public:
  RationalExpression() = default;
  explicit RationalExpression(LaurentPolynomial num);
  RationalExpression(LaurentPolynomial num, LaurentPolynomial den);

  const LaurentPolynomial& numerator() const noexcept { return num_; }
  const LaurentPolynomial& denominator() const noexcept { return den_; }
  std::size_t nvars() const noexcept { return num_.nvars(); }

  friend RationalExpression operator*(const RationalExpression& a, const RationalExpression& b);
  friend RationalExpression operator+(const RationalExpression& a, const RationalExpression& b);

  /// Equality as rational functions (cross multiplication).
  bool equals(const RationalExpression& other) const;

  std::optional<LaurentPolynomial> to_laurent() const { return exact_divide(num_, den_); }

  std::string to_string(const std::string& var = "x") const;

private:
  LaurentPolynomial num_;
  LaurentPolynomial den_;
};

}  // namespace clustergeom
