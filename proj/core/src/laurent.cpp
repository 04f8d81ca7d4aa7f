#include "clustergeom/laurent.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>
#include <unordered_map>

namespace clustergeom {

namespace {

std::int64_t total_degree(const Exponent& e) {
  std::int64_t s = 0;
  for (auto x : e)
    if (__builtin_add_overflow(s, x, &s)) throw ResourceLimitError("exponent overflow");
  return s;
}

void check_nvars(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.nvars() != b.nvars()) throw ValidationError("Laurent polynomials in different numbers of variables");
}

}  // namespace

bool GrlexGreater::operator()(const Exponent& a, const Exponent& b) const {
  const auto da = total_degree(a);
  const auto db = total_degree(b);
  if (da != db) return da > db;
  return b < a;
}

std::size_t ExponentHash::operator()(const Exponent& e) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (auto x : e) {
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

Exponent add_exponents(const Exponent& a, const Exponent& b) {
  Exponent c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (__builtin_add_overflow(a[i], b[i], &c[i])) throw ResourceLimitError("exponent overflow");
  return c;
}

Exponent sub_exponents(const Exponent& a, const Exponent& b) {
  Exponent c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (__builtin_sub_overflow(a[i], b[i], &c[i])) throw ResourceLimitError("exponent overflow");
  return c;
}

Exponent scale_exponent(const Exponent& a, std::int64_t c) {
  Exponent out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (__builtin_mul_overflow(a[i], c, &out[i])) throw ResourceLimitError("exponent overflow");
  return out;
}

Exponent to_exponent(std::span<const Integer> v) {
  Exponent e(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].fits_slong_p()) throw ResourceLimitError("exponent does not fit in 64 bits");
    e[i] = v[i].get_si();
  }
  return e;
}

LaurentPolynomial LaurentPolynomial::constant(std::size_t nvars, const Integer& c) {
  LaurentPolynomial p(nvars);
  if (c != 0) p.terms_.emplace_back(Exponent(nvars, 0), c);
  return p;
}

LaurentPolynomial LaurentPolynomial::monomial(Exponent e, const Integer& c) {
  LaurentPolynomial p(e.size());
  if (c != 0) p.terms_.emplace_back(std::move(e), c);
  return p;
}

LaurentPolynomial LaurentPolynomial::variable(std::size_t nvars, std::size_t i) {
  Exponent e(nvars, 0);
  e.at(i) = 1;
  return monomial(std::move(e));
}

LaurentPolynomial LaurentPolynomial::from_terms(std::size_t nvars, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return GrlexGreater{}(a.first, b.first); });
  LaurentPolynomial p(nvars);
  for (auto& t : terms) {
    if (t.first.size() != nvars) throw ValidationError("exponent vector has wrong length");
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
      if (p.terms_.back().second == 0) p.terms_.pop_back();
    } else if (t.second != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool LaurentPolynomial::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  const auto& e = terms_.front().first;
  return std::all_of(e.begin(), e.end(), [](std::int64_t x) { return x == 0; });
}

Exponent LaurentPolynomial::min_exponents() const {
  Exponent m(nvars_, 0);
  if (terms_.empty()) return m;
  m = terms_.front().first;
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < nvars_; ++i) m[i] = std::min(m[i], e[i]);
  return m;
}

Exponent LaurentPolynomial::max_exponents() const {
  Exponent m(nvars_, 0);
  if (terms_.empty()) return m;
  m = terms_.front().first;
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < nvars_; ++i) m[i] = std::max(m[i], e[i]);
  return m;
}

std::int64_t LaurentPolynomial::max_abs_exponent() const {
  std::int64_t m = 0;
  for (const auto& [e, c] : terms_)
    for (auto x : e) m = std::max(m, x < 0 ? -x : x);
  return m;
}

bool LaurentPolynomial::has_nonnegative_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.second > 0; });
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial p = *this;
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  check_nvars(a, b);
  LaurentPolynomial c(a.nvars_);
  c.terms_.reserve(a.terms_.size() + b.terms_.size());
  GrlexGreater gt;
  auto i = a.terms_.begin();
  auto j = b.terms_.begin();
  while (i != a.terms_.end() || j != b.terms_.end()) {
    if (j == b.terms_.end() || (i != a.terms_.end() && gt(i->first, j->first))) {
      c.terms_.push_back(*i++);
    } else if (i == a.terms_.end() || gt(j->first, i->first)) {
      c.terms_.push_back(*j++);
    } else {
      Integer s = i->second + j->second;
      if (s != 0) c.terms_.emplace_back(i->first, std::move(s));
      ++i;
      ++j;
    }
  }
  return c;
}

LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b) { return a + (-b); }

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  check_nvars(a, b);
  if (a.is_zero() || b.is_zero()) return LaurentPolynomial(a.nvars_);
  if (b.terms_.size() == 1 || a.terms_.size() == 1) {
    const auto& mono = b.terms_.size() == 1 ? b : a;
    const auto& other = b.terms_.size() == 1 ? a : b;
    LaurentPolynomial c(a.nvars_);
    c.terms_.reserve(other.terms_.size());
    // Shifting by a fixed exponent preserves the order.
    for (const auto& [e, x] : other.terms_)
      c.terms_.emplace_back(add_exponents(e, mono.terms_.front().first), x * mono.terms_.front().second);
    return c;
  }
  std::unordered_map<Exponent, Integer, ExponentHash> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      auto [it, inserted] = acc.try_emplace(add_exponents(ea, eb));
      mpz_addmul(it->second.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    }
  std::vector<LaurentPolynomial::Term> terms;
  terms.reserve(acc.size());
  for (auto& [e, c] : acc)
    if (c != 0) terms.emplace_back(e, std::move(c));
  return LaurentPolynomial::from_terms(a.nvars_, std::move(terms));
}

LaurentPolynomial LaurentPolynomial::shifted(const Exponent& e) const {
  LaurentPolynomial c = *this;
  for (auto& t : c.terms_) t.first = add_exponents(t.first, e);
  return c;
}

LaurentPolynomial LaurentPolynomial::pow(unsigned long e) const {
  LaurentPolynomial result = constant(nvars_, 1);
  LaurentPolynomial base = *this;
  while (e > 0) {
    if (e & 1UL) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

std::string LaurentPolynomial::to_string(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    const Integer mag = negative ? Integer(-c) : c;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    const bool unit_monomial = std::all_of(e.begin(), e.end(), [](std::int64_t x) { return x == 0; });
    if (mag != 1 || unit_monomial) {
      out << mag.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) out << '*';
      out << var << (i + 1);
      if (e[i] != 1) out << '^' << e[i];
      wrote = true;
    }
  }
  return out.str();
}

LaurentPolynomial binomial_power(const Exponent& v, long a) {
  if (a < 0) throw ValidationError("binomial_power needs a non-negative exponent");
  const std::size_t n = v.size();
  std::vector<LaurentPolynomial::Term> terms;
  terms.reserve(static_cast<std::size_t>(a) + 1);
  Integer c = 1;
  for (long j = 0; j <= a; ++j) {
    terms.emplace_back(scale_exponent(v, j), c);
    c = c * (a - j) / (j + 1);
  }
  return LaurentPolynomial::from_terms(n, std::move(terms));
}

std::optional<LaurentPolynomial> exact_divide(const LaurentPolynomial& p, const LaurentPolynomial& q) {
  check_nvars(p, q);
  if (q.is_zero()) throw ValidationError("division by the zero polynomial");
  const std::size_t n = p.nvars();
  if (p.is_zero()) return LaurentPolynomial(n);

  if (q.is_monomial()) {
    const auto& [eq, cq] = q.leading_term();
    std::vector<LaurentPolynomial::Term> terms;
    terms.reserve(p.size());
    for (const auto& [e, c] : p.terms()) {
      if (mpz_divisible_p(c.get_mpz_t(), cq.get_mpz_t()) == 0) return std::nullopt;
      Integer quo;
      mpz_divexact(quo.get_mpz_t(), c.get_mpz_t(), cq.get_mpz_t());
      terms.emplace_back(sub_exponents(e, eq), std::move(quo));
    }
    return LaurentPolynomial::from_terms(n, std::move(terms));
  }

  // Shift both into the polynomial ring. If q*r = p with r Laurent, the
  // minimal exponent in each variable is additive, so the shifted quotient is
  // a polynomial and ordinary division by the single divisor q (a Groebner
  // basis of its ideal) leaves remainder zero.
  const Exponent pmin = p.min_exponents();
  const Exponent qmin = q.min_exponents();
  const Exponent offset = sub_exponents(pmin, qmin);
  for (std::size_t i = 0; i < n; ++i) {
    const auto pspan = p.max_exponents()[i] - pmin[i];
    const auto qspan = q.max_exponents()[i] - qmin[i];
    if (qspan > pspan) return std::nullopt;
  }

  std::vector<LaurentPolynomial::Term> divisor;
  divisor.reserve(q.size());
  for (const auto& [e, c] : q.terms()) divisor.emplace_back(sub_exponents(e, qmin), c);
  const auto& [lead_e, lead_c] = divisor.front();

  std::map<Exponent, Integer, GrlexGreater> rem;
  for (const auto& [e, c] : p.terms()) rem.emplace(sub_exponents(e, pmin), c);

  std::vector<LaurentPolynomial::Term> quotient;
  while (!rem.empty()) {
    auto top = rem.begin();
    Exponent te(n);
    for (std::size_t i = 0; i < n; ++i) {
      te[i] = top->first[i] - lead_e[i];
      if (te[i] < 0) return std::nullopt;
    }
    if (mpz_divisible_p(top->second.get_mpz_t(), lead_c.get_mpz_t()) == 0) return std::nullopt;
    Integer tc;
    mpz_divexact(tc.get_mpz_t(), top->second.get_mpz_t(), lead_c.get_mpz_t());
    rem.erase(top);
    for (std::size_t j = 1; j < divisor.size(); ++j) {
      Exponent e = add_exponents(te, divisor[j].first);
      auto [it, inserted] = rem.try_emplace(std::move(e));
      mpz_submul(it->second.get_mpz_t(), tc.get_mpz_t(), divisor[j].second.get_mpz_t());
      if (it->second == 0) rem.erase(it);
    }
    quotient.emplace_back(add_exponents(te, offset), std::move(tc));
  }
  return LaurentPolynomial::from_terms(n, std::move(quotient));
}

RationalExpression::RationalExpression(LaurentPolynomial num)
    : num_(std::move(num)), den_(LaurentPolynomial::constant(num_.nvars(), 1)) {}

RationalExpression::RationalExpression(LaurentPolynomial num, LaurentPolynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  check_nvars(num_, den_);
  if (den_.is_zero()) throw ValidationError("rational expression with zero denominator");
}

RationalExpression operator*(const RationalExpression& a, const RationalExpression& b) {
  return RationalExpression(a.num_ * b.num_, a.den_ * b.den_);
}

RationalExpression operator+(const RationalExpression& a, const RationalExpression& b) {
  if (a.den_ == b.den_) return RationalExpression(a.num_ + b.num_, a.den_);
  return RationalExpression(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

bool RationalExpression::equals(const RationalExpression& other) const {
  return num_ * other.den_ == other.num_ * den_;
}

std::string RationalExpression::to_string(const std::string& var) const {
  if (den_ == LaurentPolynomial::constant(den_.nvars(), 1)) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

}  // namespace clustergeom
