#include "clustergeom/seed.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace clustergeom {

namespace {

Integer as_integer(const Rational& r, const char* what) {
  Rational c = r;
  c.canonicalize();
  if (c.get_den() != 1) throw ValidationError(std::string(what) + " is not integral: " + to_string(c));
  return c.get_num();
}

Integer positive_part(const Integer& x) { return x > 0 ? x : Integer(0); }
Integer negative_part(const Integer& x) { return x < 0 ? x : Integer(0); }

void require_unfrozen(const FixedData& fd, std::size_t k) {
  if (k >= fd.rank()) throw ValidationError("mutation index " + std::to_string(k + 1) + " out of range");
  if (!fd.is_unfrozen(k)) throw ValidationError("mutation index " + std::to_string(k + 1) + " is frozen");
}

// Coefficient vectors, lowest degree first.
using UPoly = std::vector<Rational>;

void trim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

UPoly poly_mod(UPoly a, const UPoly& b) {
  while (a.size() >= b.size() && !a.empty()) {
    const Rational f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    trim(a);
  }
  return a;
}

// Degree of gcd(1 + t^a, 1 + t^b) over Q.
std::size_t binomial_gcd_degree(const Integer& a, const Integer& b) {
  auto binomial = [](const Integer& e) {
    UPoly p(e.get_ui() + 1);
    p.front() = 1;
    p.back() += 1;
    return p;
  };
  UPoly x = binomial(a);
  UPoly y = binomial(b);
  while (!y.empty()) {
    UPoly r = poly_mod(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return x.size() - 1;
}

IntVector primitive_of(const IntVector& v, Integer& index) {
  index = gcd_of(v);
  IntVector u = v;
  if (index != 0)
    for (auto& x : u) x /= index;
  return u;
}

}  // namespace

FixedData::FixedData(RationalMatrix skew, std::vector<Integer> d, std::vector<bool> unfrozen)
    : skew_(std::move(skew)), d_(std::move(d)), unfrozen_(std::move(unfrozen)) {
  const std::size_t n = skew_.rows();
  if (!skew_.is_square()) throw ValidationError("skew form must be square");
  if (d_.size() != n) throw ValidationError("symmetrizer list has wrong length");
  if (unfrozen_.size() != n) throw ValidationError("frozen mask has wrong length");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) skew_(i, j).canonicalize();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (skew_(i, j) != -skew_(j, i)) throw ValidationError("skew form is not skew-symmetric");
  Integer g = 0;
  for (const auto& x : d_) {
    if (x <= 0) throw ValidationError("symmetrizers d_i must be positive");
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  }
  if (n > 0 && g != 1) throw ValidationError("symmetrizers must have gcd 1");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!unfrozen_[i] && !unfrozen_[j]) continue;
      const Rational e = skew_(i, j) * d_[j];
      if (e.get_den() != 1)
        throw ValidationError("exchange matrix entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                              ") is not integral");
    }
}

std::vector<std::size_t> FixedData::unfrozen() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < unfrozen_.size(); ++i)
    if (unfrozen_[i]) out.push_back(i);
  return out;
}

std::vector<std::size_t> FixedData::frozen() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < unfrozen_.size(); ++i)
    if (!unfrozen_[i]) out.push_back(i);
  return out;
}

bool FixedData::has_frozen() const {
  return std::find(unfrozen_.begin(), unfrozen_.end(), false) != unfrozen_.end();
}

Rational FixedData::bracket(std::span<const Integer> a, std::span<const Integer> b) const {
  Rational s = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < rank(); ++j)
      if (b[j] != 0 && skew_(i, j) != 0) s += a[i] * skew_(i, j) * b[j];
  }
  s.canonicalize();
  return s;
}

Rational FixedData::pairing(std::span<const Integer> n, std::span<const Integer> m) const {
  Rational s = 0;
  for (std::size_t j = 0; j < rank(); ++j) s += Rational(n[j] * m[j], d_[j]);
  s.canonicalize();
  return s;
}

FixedDataPtr make_fixed_data(RationalMatrix skew, std::vector<Integer> d, std::vector<bool> unfrozen) {
  return std::make_shared<const FixedData>(std::move(skew), std::move(d), std::move(unfrozen));
}

Seed::Seed(FixedDataPtr fixed, IntegerMatrix basis, std::vector<std::size_t> path)
    : fixed_(std::move(fixed)), basis_(std::move(basis)), path_(std::move(path)) {
  if (!fixed_) throw ValidationError("seed without fixed data");
  const std::size_t n = fixed_->rank();
  if (basis_.rows() != n || basis_.cols() != n) throw ValidationError("basis has wrong shape");
  if (!is_unimodular(basis_)) throw ValidationError("basis vectors do not form a basis of N");

  const auto uf = fixed_->unfrozen();
  IntegerMatrix cur(n, uf.size());
  IntegerMatrix init(n, uf.size());
  for (std::size_t c = 0; c < uf.size(); ++c) {
    for (std::size_t r = 0; r < n; ++r) cur(r, c) = basis_(r, uf[c]);
    init(uf[c], c) = 1;
  }
  if (!same_column_lattice(cur, init)) throw ValidationError("unfrozen basis vectors do not span N_uf");

  IntegerMatrix scaled(n, n);
  IntegerMatrix n_circ(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    n_circ(j, j) = fixed_->d(j);
    for (std::size_t r = 0; r < n; ++r) scaled(r, j) = basis_(r, j) * fixed_->d(j);
  }
  if (!same_column_lattice(scaled, n_circ)) throw ValidationError("{d_i e_i} is not a basis of N°");

  const RationalMatrix full = epsilon_rational();
  eps_ = IntegerMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!fixed_->is_unfrozen(i) && !fixed_->is_unfrozen(j)) continue;
      eps_(i, j) = as_integer(full(i, j), "exchange matrix entry");
    }
}

Seed Seed::root(FixedDataPtr fixed) {
  const std::size_t n = fixed ? fixed->rank() : 0;
  return Seed(std::move(fixed), IntegerMatrix::identity(n));
}

RationalMatrix Seed::epsilon_rational() const {
  const RationalMatrix b = to_rational(basis_);
  RationalMatrix e = b.transpose() * fixed_->skew() * b;
  for (std::size_t i = 0; i < e.rows(); ++i)
    for (std::size_t j = 0; j < e.cols(); ++j) {
      e(i, j) *= fixed_->d(j);
      e(i, j).canonicalize();
    }
  return e;
}

IntVector Seed::v(std::size_t i) const {
  if (!fixed_->is_unfrozen(i)) throw ValidationError("v_i is only defined here for unfrozen i");
  const std::size_t n = rank();
  const IntVector ei = e(i);
  IntVector out(n);
  IntVector unit(n);
  for (std::size_t j = 0; j < n; ++j) {
    unit.assign(n, 0);
    unit[j] = 1;
    out[j] = as_integer(fixed_->bracket(ei, unit) * fixed_->d(j), "v_i coordinate");
  }
  return out;
}

IntVector Seed::f(std::size_t i) const {
  const IntegerMatrix inv = inverse_unimodular(basis_);
  const std::size_t n = rank();
  IntVector out(n);
  for (std::size_t j = 0; j < n; ++j)
    out[j] = as_integer(Rational(inv(i, j) * fixed_->d(j), fixed_->d(i)), "f_i coordinate");
  return out;
}

bool Seed::is_root() const { return basis_ == IntegerMatrix::identity(rank()); }

IntegerMatrix epsilon_matrix(const Seed& s) { return s.epsilon(); }

Seed mutate_seed(const Seed& s, std::size_t k) {
  require_unfrozen(s.fixed(), k);
  const IntegerMatrix& eps = s.epsilon();
  const std::size_t n = s.rank();
  IntegerMatrix b = s.basis();
  for (std::size_t i = 0; i < n; ++i) {
    if (i == k) continue;
    const Integer c = positive_part(eps(i, k));
    if (c == 0) continue;
    for (std::size_t r = 0; r < n; ++r) b(r, i) += c * s.basis()(r, k);
  }
  for (std::size_t r = 0; r < n; ++r) b(r, k) = -b(r, k);
  std::vector<std::size_t> path = s.path();
  path.push_back(k);
  return Seed(s.fixed_ptr(), std::move(b), std::move(path));
}

Seed mutate_along(const Seed& s, std::span<const std::size_t> path) {
  Seed cur = s;
  for (std::size_t k : path) cur = mutate_seed(cur, k);
  return cur;
}

bool is_skew_symmetrizable(const IntegerMatrix& eps, std::span<const Integer> d) {
  if (!eps.is_square() || d.size() != eps.rows()) return false;
  for (std::size_t i = 0; i < eps.rows(); ++i)
    for (std::size_t j = 0; j < eps.cols(); ++j)
      if (d[i] * eps(i, j) != -(d[j] * eps(j, i))) return false;
  return true;
}

IntegerMatrix mutate_epsilon(const IntegerMatrix& eps, std::span<const Integer> d, std::size_t k,
                             const std::vector<bool>& unfrozen) {
  if (!is_skew_symmetrizable(eps, d)) throw ValidationError("exchange matrix is not d-skew-symmetrizable");
  const std::size_t n = eps.rows();
  if (k >= n) throw ValidationError("mutation index out of range");
  auto uf = [&](std::size_t i) { return unfrozen.empty() || unfrozen.at(i); };
  if (!uf(k)) throw ValidationError("mutation index " + std::to_string(k + 1) + " is frozen");
  IntegerMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!uf(i) && !uf(j)) continue;
      if (i == k || j == k) {
        out(i, j) = -eps(i, j);
      } else if (eps(i, k) * eps(k, j) <= 0) {
        out(i, j) = eps(i, j);
      } else {
        out(i, j) = eps(i, j) + abs(eps(i, k)) * eps(k, j);
      }
    }
  return out;
}

IntVector tropical_mutation_A(const Seed& s, std::size_t k, std::span<const Integer> n) {
  require_unfrozen(s.fixed(), k);
  const IntVector ek = s.e(k);
  const Integer b = as_integer(s.fixed().bracket(n, ek) * s.fixed().d(k), "{n, d_k e_k}");
  IntVector out(n.begin(), n.end());
  const Integer c = positive_part(b);
  if (c != 0)
    for (std::size_t r = 0; r < out.size(); ++r) out[r] += c * ek[r];
  return out;
}

IntVector tropical_mutation_X(const Seed& s, std::size_t k, std::span<const Integer> m) {
  require_unfrozen(s.fixed(), k);
  const IntVector ek = s.e(k);
  const Integer a = as_integer(s.fixed().pairing(ek, m) * s.fixed().d(k), "<d_k e_k, m>");
  IntVector out(m.begin(), m.end());
  const Integer c = negative_part(a);
  if (c != 0) {
    const IntVector vk = s.v(k);
    for (std::size_t r = 0; r < out.size(); ++r) out[r] += c * vk[r];
  }
  return out;
}

IntVector double_mutation_N(const Seed& s, std::size_t k, std::span<const Integer> n) {
  require_unfrozen(s.fixed(), k);
  const IntVector ek = s.e(k);
  const Integer b = as_integer(s.fixed().bracket(n, ek) * s.fixed().d(k), "{n, d_k e_k}");
  IntVector out(n.begin(), n.end());
  for (std::size_t r = 0; r < out.size(); ++r) out[r] += b * ek[r];
  return out;
}

IntVector double_mutation_M(const Seed& s, std::size_t k, std::span<const Integer> m) {
  require_unfrozen(s.fixed(), k);
  const IntVector ek = s.e(k);
  const Integer a = as_integer(s.fixed().pairing(ek, m) * s.fixed().d(k), "<d_k e_k, m>");
  const IntVector vk = s.v(k);
  IntVector out(m.begin(), m.end());
  for (std::size_t r = 0; r < out.size(); ++r) out[r] -= a * vk[r];
  return out;
}

Seed principal_double(const Seed& s) {
  if (!s.is_root()) throw ValidationError("principal_double expects a root seed");
  const FixedData& fd = s.fixed();
  const std::size_t n = fd.rank();
  RationalMatrix skew(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) skew(i, j) = fd.skew()(i, j);
    // {(e_i,0),(0,f_i)} = <e_i, f_i> = 1/d_i
    skew(i, n + i) = Rational(1, fd.d(i));
    skew(n + i, i) = -skew(i, n + i);
    skew(i, n + i).canonicalize();
    skew(n + i, i).canonicalize();
  }
  std::vector<Integer> d(fd.d());
  d.insert(d.end(), fd.d().begin(), fd.d().end());
  std::vector<bool> uf(fd.unfrozen_mask());
  uf.insert(uf.end(), n, false);
  return Seed::root(make_fixed_data(std::move(skew), std::move(d), std::move(uf)));
}

IntegerMatrix p_star_matrix(const Seed& s) {
  if (s.fixed().has_frozen())
    throw UnsupportedError("p* is only defined here without frozen variables (no frozen variables assumption)");
  return s.epsilon().transpose();
}

PicardGroup picard_invariants(const Seed& s) {
  const IntegerMatrix p = p_star_matrix(s);
  const IntegerMatrix& eps = s.epsilon();
  for (std::size_t i = 0; i < eps.rows(); ++i) {
    bool zero = true;
    for (std::size_t j = 0; j < eps.cols() && zero; ++j) zero = eps(i, j) == 0;
    if (zero) throw ValidationError("epsilon has a zero row " + std::to_string(i + 1) + " (no zero row assumption)");
  }
  const SmithForm f = smith_normal_form(p);
  PicardGroup pic;
  std::vector<std::size_t> rows;
  for (std::size_t t = 0; t < p.rows(); ++t) {
    const Integer dt = f.S(t, t);
    if (dt == 1) continue;
    pic.invariants.push_back(dt);
    pic.moduli.push_back(dt);
    rows.push_back(t);
  }
  pic.projection = IntegerMatrix(rows.size(), p.rows());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < p.rows(); ++c) pic.projection(r, c) = f.U_inv(rows[r], c);
  pic.factorial_guaranteed =
      std::all_of(pic.invariants.begin(), pic.invariants.end(), [](const Integer& x) { return x == 0; });
  return pic;
}

IntVector line_bundle_class(const PicardGroup& pic, std::span<const Integer> m) {
  if (m.size() != pic.projection.cols()) throw ValidationError("line bundle character has wrong length");
  IntVector c = pic.projection * m;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (pic.moduli[i] != 0) mpz_fdiv_r(c[i].get_mpz_t(), c[i].get_mpz_t(), pic.moduli[i].get_mpz_t());
  return c;
}

bool is_coprime_seed(const Seed& s) {
  // P_k is a monomial times 1 + z^{v_k}; with v_k = c_k u_k for primitive u_k,
  // two such are coprime unless u_k = +-u_l and the binomials 1 + t^|c| share
  // a cyclotomic factor.
  const auto uf = s.fixed().unfrozen();
  std::vector<IntVector> dir(uf.size());
  std::vector<Integer> mult(uf.size());
  for (std::size_t a = 0; a < uf.size(); ++a) dir[a] = primitive_of(s.v(uf[a]), mult[a]);
  for (std::size_t a = 0; a < uf.size(); ++a) {
    if (mult[a] == 0) continue;
    for (std::size_t b = a + 1; b < uf.size(); ++b) {
      if (mult[b] == 0) continue;
      const IntVector neg = [&] {
        IntVector x = dir[b];
        for (auto& y : x) y = -y;
        return x;
      }();
      if (dir[a] != dir[b] && dir[a] != neg) continue;
      if (binomial_gcd_degree(mult[a], mult[b]) > 0) return false;
    }
  }
  return true;
}

bool totally_coprime_sufficient(const Seed& s) {
  const auto uf = s.fixed().unfrozen();
  RationalMatrix rows(uf.size(), s.rank());
  for (std::size_t a = 0; a < uf.size(); ++a)
    for (std::size_t j = 0; j < s.rank(); ++j) rows(a, j) = s.epsilon()(uf[a], j);
  return rank(rows) == uf.size();
}

namespace {

std::vector<std::vector<std::size_t>> coincidences_of(const std::vector<FanRay>& rays) {
  std::map<IntVector, std::vector<std::size_t>> by_dir;
  for (const auto& r : rays) by_dir[r.direction].push_back(r.index);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [dir, idx] : by_dir)
    if (idx.size() > 1) out.push_back(idx);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

SeedFan fan_rays_A(const Seed& s) {
  SeedFan fan;
  for (std::size_t i : s.fixed().unfrozen()) {
    FanRay r;
    r.index = i;
    r.generator = s.e(i);
    for (auto& x : r.generator) x *= s.fixed().d(i);
    Integer g;
    r.direction = primitive_of(r.generator, g);
    r.multiplicity = 1;
    fan.rays.push_back(std::move(r));
  }
  fan.coincidences = coincidences_of(fan.rays);
  return fan;
}

SeedFan fan_rays_X(const Seed& s) {
  SeedFan fan;
  const IntegerMatrix& eps = s.epsilon();
  for (std::size_t i : s.fixed().unfrozen()) {
    FanRay r;
    r.index = i;
    const IntVector vi = s.v(i);
    r.generator.resize(s.rank());
    // M-coordinates: f_j = e_j^* / d_j, so -d_i v_i has j-th entry -d_i v_ij / d_j.
    for (std::size_t j = 0; j < s.rank(); ++j)
      r.generator[j] = as_integer(Rational(-s.fixed().d(i) * vi[j], s.fixed().d(j)), "-d_i v_i");
    Integer g;
    r.direction = primitive_of(r.generator, g);
    if (g == 0) throw ValidationError("epsilon has a zero row " + std::to_string(i + 1));
    // <d_i v_i, e_j> = d_i {e_i, e_j} = -eps_ji, so ind(d_i v_i) is the gcd of
    // column i of epsilon.
    r.multiplicity = gcd_of(eps.column(i));
    fan.rays.push_back(std::move(r));
  }
  fan.coincidences = coincidences_of(fan.rays);
  return fan;
}

bool fan_mutation_consistency(const Seed& s, std::size_t k) {
  const Seed t = mutate_seed(s, k);
  for (std::size_t i : s.fixed().unfrozen()) {
    IntVector img = tropical_mutation_A(s, k, s.e(i));
    if (i == k)
      for (auto& x : img) x = -x;
    if (img != t.e(i)) return false;

    IntVector minus_v = s.v(i);
    for (auto& x : minus_v) x = -x;
    IntVector ximg = tropical_mutation_X(s, k, minus_v);
    if (i == k)
      for (auto& x : ximg) x = -x;
    IntVector target = t.v(i);
    for (auto& x : target) x = -x;
    if (ximg != target) return false;
  }
  return true;
}

std::string canonical_key(const Seed& s) { return to_string(s.basis()); }

std::string unlabeled_key(const Seed& s) {
  const FixedData& fd = s.fixed();
  std::map<Integer, std::vector<std::size_t>> classes;
  for (std::size_t i : fd.unfrozen()) classes[fd.d(i)].push_back(i);
  IntegerMatrix b = s.basis();
  for (auto& [d, idx] : classes) {
    std::vector<IntVector> cols;
    for (std::size_t i : idx) cols.push_back(s.basis().column(i));
    std::sort(cols.begin(), cols.end());
    for (std::size_t a = 0; a < idx.size(); ++a) b.set_column(idx[a], std::span<const Integer>(cols[a]));
  }
  return to_string(b);
}

}  // namespace clustergeom
