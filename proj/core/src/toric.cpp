#include "clustergeom/toric.hpp"

#include <algorithm>

namespace clustergeom {

Integer det2(const Vec2& a, const Vec2& b) { return a[0] * b[1] - a[1] * b[0]; }

bool is_primitive(const Vec2& v) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), v[0].get_mpz_t(), v[1].get_mpz_t());
  return g == 1;
}

namespace {

int half(const Vec2& v) { return (v[1] > 0 || (v[1] == 0 && v[0] > 0)) ? 0 : 1; }

Vec2 rotate90(const Vec2& u) { return {-u[1], u[0]}; }

// Insert the Hirzebruch-Jung chain between u and w (det(u, w) = m > 1).
void resolve_cone(const Vec2& u, const Vec2& w, std::vector<Vec2>& out) {
  Vec2 a = u;
  for (;;) {
    const Integer m = det2(a, w);
    if (m == 1) return;
    // j a + w = 0 mod m. With s a_0 + t a_1 = 1 (a primitive), j = -(s w_0 + t w_1).
    Integer g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a[0].get_mpz_t(), a[1].get_mpz_t());
    Integer j = -(s * w[0] + t * w[1]);
    mpz_fdiv_r(j.get_mpz_t(), j.get_mpz_t(), m.get_mpz_t());
    Vec2 v{j * a[0] + w[0], j * a[1] + w[1]};
    if (mpz_divisible_p(v[0].get_mpz_t(), m.get_mpz_t()) == 0 || mpz_divisible_p(v[1].get_mpz_t(), m.get_mpz_t()) == 0)
      throw Error("Hirzebruch-Jung step failed");
    v[0] /= m;
    v[1] /= m;
    out.push_back(v);
    a = v;
  }
}

}  // namespace

bool angle_less(const Vec2& a, const Vec2& b) {
  const int ha = half(a);
  const int hb = half(b);
  if (ha != hb) return ha < hb;
  return det2(a, b) > 0;
}

std::size_t Fan2D::find(const Vec2& v) const {
  return static_cast<std::size_t>(std::find(rays.begin(), rays.end(), v) - rays.begin());
}

bool Fan2D::is_complete_smooth() const {
  if (rays.size() < 3) return false;
  for (std::size_t i = 0; i < rays.size(); ++i)
    if (det2(rays[i], rays[(i + 1) % rays.size()]) != 1) return false;
  return true;
}

Fan2D complete_smooth_fan(std::span<const Vec2> input) {
  if (input.empty()) throw ValidationError("cannot complete an empty fan");
  std::vector<Vec2> rays(input.begin(), input.end());
  for (const auto& r : rays)
    if (!is_primitive(r)) throw ValidationError("fan rays must be primitive nonzero vectors");
  std::sort(rays.begin(), rays.end(), angle_less);
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());

  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      const Vec2& u = rays[i];
      const Vec2& w = rays[(i + 1) % rays.size()];
      if (rays.size() == 1 || det2(u, w) <= 0) {
        const Vec2 r = rotate90(u);
        rays.insert(rays.begin() + static_cast<std::ptrdiff_t>(i) + 1, r);
        changed = true;
        break;
      }
    }
  }

  Fan2D fan;
  for (std::size_t i = 0; i < rays.size(); ++i) {
    const Vec2& u = rays[i];
    const Vec2& w = rays[(i + 1) % rays.size()];
    fan.rays.push_back(u);
    resolve_cone(u, w, fan.rays);
  }
  std::sort(fan.rays.begin(), fan.rays.end(), angle_less);
  return fan;
}

std::vector<Integer> self_intersections(const Fan2D& fan) {
  if (!fan.is_complete_smooth()) throw ValidationError("fan is not complete and smooth");
  const std::size_t r = fan.size();
  std::vector<Integer> a(r);
  for (std::size_t i = 0; i < r; ++i) {
    const Vec2& prev = fan.rays[(i + r - 1) % r];
    const Vec2& next = fan.rays[(i + 1) % r];
    const Vec2& u = fan.rays[i];
    const Vec2 s{prev[0] + next[0], prev[1] + next[1]};
    if (det2(s, u) != 0) throw ValidationError("malformed fan: neighbours do not sum to a multiple of the ray");
    const Integer dot = s[0] * u[0] + s[1] * u[1];
    const Integer norm = u[0] * u[0] + u[1] * u[1];
    if (mpz_divisible_p(dot.get_mpz_t(), norm.get_mpz_t()) == 0) throw ValidationError("malformed fan");
    a[i] = -(dot / norm);
  }
  return a;
}

std::vector<Integer> BlowupSurface::boundary_self_intersections() const {
  std::vector<Integer> out = toric_self_intersections;
  for (std::size_t j : centers) out[j] -= 1;
  return out;
}

DivisorClass BlowupSurface::boundary_class(std::size_t j) const {
  DivisorClass c{IntVector(fan.size()), IntVector(centers.size())};
  c.toric.at(j) = 1;
  for (std::size_t i = 0; i < centers.size(); ++i)
    if (centers[i] == j) c.exceptional[i] = -1;
  return c;
}

Integer BlowupSurface::intersect(const DivisorClass& a, const DivisorClass& b) const {
  if (a.toric.size() != fan.size() || b.toric.size() != fan.size() || a.exceptional.size() != centers.size() ||
      b.exceptional.size() != centers.size())
    throw ValidationError("divisor class has the wrong shape");
  const IntVector qb = toric_gram * b.toric;
  Integer s = 0;
  for (std::size_t j = 0; j < fan.size(); ++j) s += a.toric[j] * qb[j];
  for (std::size_t i = 0; i < centers.size(); ++i) s -= a.exceptional[i] * b.exceptional[i];
  return s;
}

std::vector<IntVector> BlowupSurface::toric_relations() const {
  std::vector<IntVector> rel(2, IntVector(fan.size()));
  for (std::size_t j = 0; j < fan.size(); ++j) {
    rel[0][j] = fan.rays[j][0];
    rel[1][j] = fan.rays[j][1];
  }
  return rel;
}

BlowupSurface blowup_surface(const Fan2D& fan, std::span<const std::pair<std::size_t, Integer>> assignments) {
  BlowupSurface y;
  y.fan = fan;
  y.toric_self_intersections = self_intersections(fan);
  const std::size_t r = fan.size();
  y.toric_gram = IntegerMatrix(r, r);
  for (std::size_t j = 0; j < r; ++j) {
    y.toric_gram(j, j) = y.toric_self_intersections[j];
    y.toric_gram(j, (j + 1) % r) = 1;
    y.toric_gram((j + 1) % r, j) = 1;
  }
  for (const auto& [ray, nu] : assignments) {
    if (ray >= r) throw ValidationError("blowup center on a ray that is not in the fan");
    if (nu != 1)
      throw UnsupportedError("blowup with multiplicity " + nu.get_str() +
                             " gives a singular surface; only multiplicity 1 is supported");
    y.centers.push_back(ray);
  }
  return y;
}

}  // namespace clustergeom
