#include "clustergeom/pullback.hpp"

#include <algorithm>
#include <functional>

namespace clustergeom {

namespace {

using Weight = std::function<std::int64_t(const Exponent&)>;

std::int64_t to_i64(const Rational& r, const char* what) {
  Rational c = r;
  c.canonicalize();
  if (c.get_den() != 1) throw ValidationError(std::string(what) + " is not integral");
  if (!c.get_num().fits_slong_p()) throw ResourceLimitError("binomial exponent too large");
  return c.get_num().get_si();
}

// Sum of c z^m (1 + z^w)^{a(m)}, written over the common denominator
// (1 + z^w)^{-min a}.
RationalExpression substitute(const LaurentPolynomial& p, const Exponent& w, const Weight& a) {
  const std::size_t n = p.nvars();
  if (p.is_zero()) return RationalExpression(p);
  std::vector<std::int64_t> powers;
  powers.reserve(p.size());
  std::int64_t lo = 0;
  for (const auto& [e, c] : p.terms()) {
    powers.push_back(a(e));
    lo = std::min(lo, powers.back());
  }
  LaurentPolynomial num(n);
  std::size_t t = 0;
  for (const auto& [e, c] : p.terms()) {
    num += binomial_power(w, powers[t++] - lo) * LaurentPolynomial::monomial(e, c);
  }
  return RationalExpression(std::move(num), binomial_power(w, -lo));
}

RationalExpression substitute(const RationalExpression& r, const Exponent& w, const Weight& a) {
  const RationalExpression top = substitute(r.numerator(), w, a);
  const RationalExpression bottom = substitute(r.denominator(), w, a);
  return RationalExpression(top.numerator() * bottom.denominator(), top.denominator() * bottom.numerator());
}

Weight weight_A(const Seed& s, std::size_t k, int sign) {
  const IntVector ek = s.e(k);
  const FixedData& fd = s.fixed();
  return [ek, &fd, k, sign](const Exponent& e) {
    IntVector m(e.begin(), e.end());
    return sign * to_i64(fd.pairing(ek, m) * fd.d(k), "<d_k e_k, m>");
  };
}

Weight weight_X(const Seed& s, std::size_t k, int sign) {
  const IntVector ek = s.e(k);
  const FixedData& fd = s.fixed();
  return [ek, &fd, k, sign](const Exponent& e) {
    IntVector n(e.begin(), e.end());
    return sign * to_i64(fd.bracket(n, ek) * fd.d(k), "{n, e_k} d_k");
  };
}

void check_args(const Seed& s, std::size_t k, const RationalExpression& expr) {
  if (expr.nvars() != s.rank()) throw ValidationError("expression has the wrong number of variables");
  if (k >= s.rank() || !s.fixed().is_unfrozen(k)) throw ValidationError("mutation index is out of range or frozen");
}

}  // namespace

LaurentPolynomial character(std::span<const Integer> m) { return LaurentPolynomial::monomial(to_exponent(m)); }

RationalExpression pullback_A(const Seed& s, std::size_t k, const RationalExpression& expr) {
  check_args(s, k, expr);
  const IntVector vk = s.v(k);
  return substitute(expr, to_exponent(vk), weight_A(s, k, -1));
}

RationalExpression pushforward_A(const Seed& s, std::size_t k, const RationalExpression& expr) {
  check_args(s, k, expr);
  const IntVector vk = s.v(k);
  return substitute(expr, to_exponent(vk), weight_A(s, k, 1));
}

RationalExpression pullback_X(const Seed& s, std::size_t k, const RationalExpression& expr) {
  check_args(s, k, expr);
  return substitute(expr, to_exponent(s.e(k)), weight_X(s, k, -1));
}

RationalExpression pushforward_X(const Seed& s, std::size_t k, const RationalExpression& expr) {
  check_args(s, k, expr);
  return substitute(expr, to_exponent(s.e(k)), weight_X(s, k, 1));
}

LaurentPolynomial double_mutation_A(const Seed& s, std::size_t k, const LaurentPolynomial& p) {
  std::vector<LaurentPolynomial::Term> terms;
  terms.reserve(p.size());
  for (const auto& [e, c] : p.terms()) {
    const IntVector m(e.begin(), e.end());
    terms.emplace_back(to_exponent(double_mutation_M(s, k, m)), c);
  }
  return LaurentPolynomial::from_terms(p.nvars(), std::move(terms));
}

}  // namespace clustergeom
