#include "clustergeom/rank2.hpp"

#include <algorithm>

#include "clustergeom/lattice.hpp"

namespace clustergeom {

Integer Rank2Data::nu_gcd() const { return gcd_of(nu); }

bool Rank2Data::all_nu_one() const {
  return std::all_of(nu.begin(), nu.end(), [](const Integer& x) { return x == 1; });
}

void Rank2Data::validate() const {
  if (w.empty()) throw ValidationError("rank-2 data needs at least one vector");
  if (nu.size() != w.size()) throw ValidationError("w and nu have different lengths");
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!is_primitive(w[i])) throw ValidationError("w_" + std::to_string(i + 1) + " is not primitive");
    if (nu[i] <= 0) throw ValidationError("nu_" + std::to_string(i + 1) + " must be positive");
  }
  const auto inv = cokernel_invariants(w_matrix(*this));
  if (!inv.empty()) throw ValidationError("the w_i do not generate Z^2");
}

IntegerMatrix w_matrix(const Rank2Data& data) {
  IntegerMatrix m(2, data.size());
  for (std::size_t i = 0; i < data.size(); ++i) {
    m(0, i) = data.w[i][0];
    m(1, i) = data.w[i][1];
  }
  return m;
}

Seed build_seed(const Rank2Data& data) {
  data.validate();
  const std::size_t n = data.size();
  const Integer nu = data.nu_gcd();
  RationalMatrix skew(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) skew(i, j) = nu * det2(data.w[i], data.w[j]);
  std::vector<Integer> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = data.nu[i] / nu;
  return Seed::root(make_fixed_data(std::move(skew), std::move(d), std::vector<bool>(n, true)));
}

Rank2Data seed_to_rank2(const Seed& s) {
  const FixedData& fd = s.fixed();
  const std::size_t n = s.rank();
  if (fd.has_frozen()) throw ValidationError("rank-2 realization needs no frozen variables");
  for (std::size_t i = 0; i < n; ++i)
    if (fd.d(i) != 1) throw ValidationError("rank-2 realization needs d_i = 1 (d_" + std::to_string(i + 1) + " != 1)");
  const IntegerMatrix& eps = s.epsilon();
  if (rank(eps) != 2) throw ValidationError("rank-2 realization needs a skew form of rank 2");

  // Quotient map N -> N/K = Z^2 from the Smith form of a K basis.
  const auto kb = kernel_basis(eps);
  IntegerMatrix kmat(n, kb.size());
  for (std::size_t c = 0; c < kb.size(); ++c) kmat.set_column(c, std::span<const Integer>(kb[c]));
  const SmithForm f = smith_normal_form(kmat);
  const std::size_t r = kb.size();
  IntegerMatrix q(2, n);
  IntVector lift0(n), lift1(n);
  for (std::size_t c = 0; c < n; ++c) {
    q(0, c) = f.U_inv(r, c);
    q(1, c) = f.U_inv(r + 1, c);
    lift0[c] = f.U(c, r);
    lift1[c] = f.U(c, r + 1);
  }
  // {lift0, lift1} with d = 1 is lift0^T eps lift1.
  const IntVector el = eps * lift1;
  Integer induced = 0;
  for (std::size_t c = 0; c < n; ++c) induced += lift0[c] * el[c];
  if (induced != 1 && induced != -1)
    throw ValidationError("rank-2 realization needs a unimodular induced form on N/K (got " + induced.get_str() + ")");

  Rank2Data out;
  for (std::size_t i = 0; i < n; ++i) {
    Vec2 w{q(0, i), induced == 1 ? q(1, i) : Integer(-q(1, i))};
    if (!is_primitive(w)) throw ValidationError("rank-2 realization needs primitive images of e_i in N/K");
    out.w.push_back(w);
    out.nu.emplace_back(1);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (det2(out.w[i], out.w[j]) != eps(i, j)) throw Error("rank-2 realization does not reproduce epsilon");
  return out;
}

BlowupSurface surface_of(const Rank2Data& data, std::span<const Vec2> extra_rays) {
  data.validate();
  if (!data.all_nu_one())
    throw UnsupportedError("blowups with nu_i > 1 give singular surfaces and are outside this checker");
  std::vector<Vec2> rays(data.w.begin(), data.w.end());
  rays.insert(rays.end(), extra_rays.begin(), extra_rays.end());
  const Fan2D fan = complete_smooth_fan(rays);
  std::vector<std::pair<std::size_t, Integer>> assign;
  for (const auto& w : data.w) assign.emplace_back(fan.find(w), Integer(1));
  return blowup_surface(fan, assign);
}

DivisorClass k_to_dperp(const Rank2Data& data, const BlowupSurface& y, std::span<const Integer> a) {
  const std::size_t n = data.size();
  if (a.size() != n) throw ValidationError("K vector has the wrong length");
  const IntVector image = w_matrix(data) * a;
  if (image[0] != 0 || image[1] != 0) throw ValidationError("vector is not in K");
  IntVector c(y.fan.size());
  for (std::size_t i = 0; i < n; ++i) c[y.centers[i]] += a[i];
  auto x = solve_integer(y.toric_gram, c);
  if (!x) throw Error("no toric divisor class C with the required degrees");
  DivisorClass cls{std::move(*x), IntVector(n)};
  for (std::size_t i = 0; i < n; ++i) cls.exceptional[i] = -a[i];
  for (std::size_t j = 0; j < y.fan.size(); ++j)
    if (y.intersect(cls, y.boundary_class(j)) != 0) throw Error("class of a K vector is not in D-perp");
  return cls;
}

DivisorClass k_to_dperp(const Rank2Data& data, std::span<const Integer> a) {
  return k_to_dperp(data, surface_of(data), a);
}

IntegerMatrix gram_on(const Rank2Data& data, const std::vector<IntVector>& vectors, std::span<const Vec2> extra_rays) {
  const BlowupSurface y = surface_of(data, extra_rays);
  std::vector<DivisorClass> classes;
  classes.reserve(vectors.size());
  for (const auto& a : vectors) classes.push_back(k_to_dperp(data, y, a));
  IntegerMatrix g(vectors.size(), vectors.size());
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = 0; j < vectors.size(); ++j) g(i, j) = y.intersect(classes[i], classes[j]);
  return g;
}

KGram symmetric_form(const Rank2Data& data, std::span<const Vec2> extra_rays) {
  data.validate();
  KGram k;
  k.k_basis = kernel_basis(w_matrix(data));
  k.gram = gram_on(data, k.k_basis, extra_rays);
  return k;
}

InvarianceResult invariance_check(const Rank2Data& data, std::span<const std::size_t> path,
                                  std::span<const Vec2> extra_rays) {
  const KGram base = symmetric_form(data);
  const Seed root = build_seed(data);
  const Seed mutated = mutate_along(root, path);
  const IntegerMatrix& b = mutated.basis();
  const IntegerMatrix wb = w_matrix(data) * b;
  Rank2Data moved;
  moved.nu = data.nu;
  for (std::size_t i = 0; i < data.size(); ++i) moved.w.push_back({wb(0, i), wb(1, i)});
  const IntegerMatrix binv = inverse_unimodular(b);
  std::vector<IntVector> transported;
  for (const auto& a : base.k_basis) transported.push_back(binv * a);
  InvarianceResult r;
  r.original = base.gram;
  r.mutated = gram_on(moved, transported, extra_rays);
  r.invariant = r.original == r.mutated;
  return r;
}

std::string to_string(Definiteness d) {
  switch (d) {
    case Definiteness::negative_definite: return "negative_definite";
    case Definiteness::negative_semidefinite_degenerate: return "negative_semidefinite_degenerate";
    case Definiteness::indefinite: return "indefinite";
    case Definiteness::zero_rank: return "zero_rank";
  }
  return "unknown";
}

Inertia inertia(const IntegerMatrix& gram) {
  if (!gram.is_square()) throw ValidationError("Gram matrix must be square");
  RationalMatrix m = to_rational(gram);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != m(j, i)) throw ValidationError("Gram matrix must be symmetric");
  Inertia in;
  std::vector<std::size_t> alive(m.rows());
  for (std::size_t i = 0; i < alive.size(); ++i) alive[i] = i;
  while (!alive.empty()) {
    auto piv = std::find_if(alive.begin(), alive.end(), [&](std::size_t i) { return m(i, i) != 0; });
    if (piv == alive.end()) {
      // Zero diagonal: a nonzero off-diagonal entry gives a hyperbolic plane.
      bool off = false;
      for (std::size_t a : alive)
        for (std::size_t b : alive) off = off || m(a, b) != 0;
      if (off) {
        in.positive += 1;
        in.negative += 1;
        in.zero += alive.size() - 2;
      } else {
        in.zero += alive.size();
      }
      break;
    }
    const std::size_t p = *piv;
    const Rational d = m(p, p);
    (d > 0 ? in.positive : in.negative) += 1;
    alive.erase(piv);
    for (std::size_t a : alive)
      for (std::size_t b : alive) m(a, b) -= m(a, p) * m(p, b) / d;
  }
  return in;
}

Definiteness classify_definiteness(const IntegerMatrix& gram) {
  if (gram.rows() == 0) return Definiteness::zero_rank;
  const Inertia in = inertia(gram);
  if (in.positive > 0) return Definiteness::indefinite;
  if (in.zero == 0) return Definiteness::negative_definite;
  return Definiteness::negative_semidefinite_degenerate;
}

FgReport fg_failure_flag(const Rank2Data& data) {
  const KGram k = symmetric_form(data);
  FgReport r;
  r.classification = classify_definiteness(k.gram);
  r.fg_conjecture_possible =
      r.classification == Definiteness::negative_definite || r.classification == Definiteness::zero_rank;
  r.rationale = r.fg_conjecture_possible
                    ? "form on K is negative definite (or K = 0): generic fibre affine, conjecture not excluded"
                    : "form on K is not negative definite: generic fibre not affine, conjecture fails";
  return r;
}

NonFgReport non_fg_flag(const Rank2Data& data) {
  data.validate();
  NonFgReport r;
  if (!data.all_nu_one()) {
    r.checked = false;
    r.citation =
        "weights nu_i > 1: the blown-up surface is singular; known non-FG cases of this kind need additional "
        "analysis and are outside this checker";
    return r;
  }
  const BlowupSurface y = surface_of(data);
  r.checked = true;
  r.boundary_self_intersections = y.boundary_self_intersections();
  r.all_minus_two = std::all_of(r.boundary_self_intersections.begin(), r.boundary_self_intersections.end(),
                                [](const Integer& a) { return a == -2; });
  r.non_noetherian_principal = r.all_minus_two;
  r.citation = r.all_minus_two ? "every boundary component has self-intersection -2: the upper cluster algebra with "
                                 "principal or general coefficients is not finitely generated"
                               : "some boundary component has self-intersection != -2: no conclusion";
  return r;
}

IntegerMatrix period_splitting(const Rank2Data& data) {
  data.validate();
  const IntegerMatrix w = w_matrix(data);
  const std::size_t n = data.size();
  const IntVector e0{1, 0}, e1{0, 1};
  const auto s0 = solve_integer(w, e0);
  const auto s1 = solve_integer(w, e1);
  if (!s0 || !s1) throw Error("no section of N -> N/K");
  const auto kb = kernel_basis(w);
  IntegerMatrix kmat(n, kb.size());
  for (std::size_t c = 0; c < kb.size(); ++c) kmat.set_column(c, std::span<const Integer>(kb[c]));
  IntegerMatrix out(kb.size(), n);
  for (std::size_t i = 0; i < n; ++i) {
    IntVector r(n);
    r[i] = 1;
    for (std::size_t j = 0; j < n; ++j) r[j] -= data.w[i][0] * (*s0)[j] + data.w[i][1] * (*s1)[j];
    const auto coords = solve_integer(kmat, r);
    if (!coords) throw Error("K-part of e_i is not in K");
    for (std::size_t c = 0; c < kb.size(); ++c) out(c, i) = (*coords)[c];
  }
  return out;
}

}  // namespace clustergeom
