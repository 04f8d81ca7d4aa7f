#include "clustergeom/lattice.hpp"

#include <sstream>
#include <utility>

namespace clustergeom {

std::string to_string(std::span<const Integer> v) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i].get_str();
  out << ']';
  return out.str();
}

std::string to_string(const IntegerMatrix& m) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const auto r = m.row(i);
    out << (i ? "," : "") << to_string(std::span<const Integer>(r));
  }
  out << ']';
  return out.str();
}

std::vector<Integer> SmithForm::diagonal() const {
  std::vector<Integer> d;
  const std::size_t k = std::min(S.rows(), S.cols());
  d.reserve(k);
  for (std::size_t i = 0; i < k; ++i) d.push_back(S(i, i));
  return d;
}

namespace {

// Applies elementary operations to S while keeping A = U S V and the
// inverses in sync.
class SmithReducer {
public:
  explicit SmithReducer(const IntegerMatrix& a)
      : f_{IntegerMatrix::identity(a.rows()), a, IntegerMatrix::identity(a.cols()),
           IntegerMatrix::identity(a.rows()), IntegerMatrix::identity(a.cols()), 0} {}

  SmithForm run() {
    IntegerMatrix& s = f_.S;
    const std::size_t m = s.rows();
    const std::size_t n = s.cols();
    std::size_t t = 0;
    for (; t < std::min(m, n); ++t) {
      if (!move_min_to(t, t, m, t, n)) break;
      for (;;) {
        bool clean = true;
        for (std::size_t i = t + 1; i < m; ++i) {
          if (s(i, t) == 0) continue;
          Integer q;
          mpz_tdiv_q(q.get_mpz_t(), s(i, t).get_mpz_t(), s(t, t).get_mpz_t());
          add_row(i, t, -q);
          if (s(i, t) != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < n; ++j) {
          if (s(t, j) == 0) continue;
          Integer q;
          mpz_tdiv_q(q.get_mpz_t(), s(t, j).get_mpz_t(), s(t, t).get_mpz_t());
          add_col(j, t, -q);
          if (s(t, j) != 0) clean = false;
        }
        if (!clean) {
          move_min_in_cross(t);
          continue;
        }
        // Row and column t are clear; enforce divisibility of the rest.
        bool divisible = true;
        for (std::size_t i = t + 1; i < m && divisible; ++i)
          for (std::size_t j = t + 1; j < n; ++j) {
            if (mpz_divisible_p(s(i, j).get_mpz_t(), s(t, t).get_mpz_t()) == 0) {
              add_row(t, i, 1);
              divisible = false;
              break;
            }
          }
        if (divisible) break;
      }
      if (s(t, t) < 0) negate_row(t);
    }
    f_.rank = t;
    return std::move(f_);
  }

private:
  // Moves the nonzero entry of smallest magnitude in the block to (t, t).
  bool move_min_to(std::size_t t, std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) {
    const IntegerMatrix& s = f_.S;
    std::size_t bi = r1, bj = c1;
    for (std::size_t i = r0; i < r1; ++i)
      for (std::size_t j = c0; j < c1; ++j) {
        if (s(i, j) == 0) continue;
        if (bi == r1 || abs(s(i, j)) < abs(s(bi, bj))) {
          bi = i;
          bj = j;
        }
      }
    if (bi == r1) return false;
    if (bi != t) swap_rows(bi, t);
    if (bj != t) swap_cols(bj, t);
    return true;
  }

  void move_min_in_cross(std::size_t t) {
    const IntegerMatrix& s = f_.S;
    std::size_t bi = t, bj = t;
    for (std::size_t i = t + 1; i < s.rows(); ++i)
      if (s(i, t) != 0 && abs(s(i, t)) < abs(s(bi, bj))) {
        bi = i;
        bj = t;
      }
    for (std::size_t j = t + 1; j < s.cols(); ++j)
      if (s(t, j) != 0 && abs(s(t, j)) < abs(s(bi, bj))) {
        bi = t;
        bj = j;
      }
    if (bi != t) swap_rows(bi, t);
    if (bj != t) swap_cols(bj, t);
  }

  void swap_rows(std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < f_.S.cols(); ++c) std::swap(f_.S(i, c), f_.S(j, c));
    for (std::size_t c = 0; c < f_.U_inv.cols(); ++c) std::swap(f_.U_inv(i, c), f_.U_inv(j, c));
    for (std::size_t r = 0; r < f_.U.rows(); ++r) std::swap(f_.U(r, i), f_.U(r, j));
  }

  void swap_cols(std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < f_.S.rows(); ++r) std::swap(f_.S(r, i), f_.S(r, j));
    for (std::size_t r = 0; r < f_.V_inv.rows(); ++r) std::swap(f_.V_inv(r, i), f_.V_inv(r, j));
    for (std::size_t c = 0; c < f_.V.cols(); ++c) std::swap(f_.V(i, c), f_.V(j, c));
  }

  // row dst += c * row src
  void add_row(std::size_t dst, std::size_t src, const Integer& c) {
    if (c == 0) return;
    for (std::size_t k = 0; k < f_.S.cols(); ++k) f_.S(dst, k) += c * f_.S(src, k);
    for (std::size_t k = 0; k < f_.U_inv.cols(); ++k) f_.U_inv(dst, k) += c * f_.U_inv(src, k);
    for (std::size_t r = 0; r < f_.U.rows(); ++r) f_.U(r, src) -= c * f_.U(r, dst);
  }

  // col dst += c * col src
  void add_col(std::size_t dst, std::size_t src, const Integer& c) {
    if (c == 0) return;
    for (std::size_t r = 0; r < f_.S.rows(); ++r) f_.S(r, dst) += c * f_.S(r, src);
    for (std::size_t r = 0; r < f_.V_inv.rows(); ++r) f_.V_inv(r, dst) += c * f_.V_inv(r, src);
    for (std::size_t k = 0; k < f_.V.cols(); ++k) f_.V(src, k) -= c * f_.V(dst, k);
  }

  void negate_row(std::size_t i) {
    for (std::size_t k = 0; k < f_.S.cols(); ++k) f_.S(i, k) = -f_.S(i, k);
    for (std::size_t k = 0; k < f_.U_inv.cols(); ++k) f_.U_inv(i, k) = -f_.U_inv(i, k);
    for (std::size_t r = 0; r < f_.U.rows(); ++r) f_.U(r, i) = -f_.U(r, i);
  }

  SmithForm f_;
};

}  // namespace

SmithForm smith_normal_form(const IntegerMatrix& a) { return SmithReducer(a).run(); }

IntegerMatrix hermite_normal_form(const IntegerMatrix& a) {
  IntegerMatrix h = a;
  const std::size_t m = h.rows();
  const std::size_t n = h.cols();
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    for (std::size_t i = row + 1; i < m; ++i) {
      if (h(i, col) == 0) continue;
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), h(row, col).get_mpz_t(),
                 h(i, col).get_mpz_t());
      const Integer a_g = h(row, col) / g;
      const Integer b_g = h(i, col) / g;
      for (std::size_t k = 0; k < n; ++k) {
        const Integer top = s * h(row, k) + t * h(i, k);
        const Integer bottom = a_g * h(i, k) - b_g * h(row, k);
        h(row, k) = top;
        h(i, k) = bottom;
      }
    }
    if (h(row, col) == 0) continue;
    if (h(row, col) < 0)
      for (std::size_t k = 0; k < n; ++k) h(row, k) = -h(row, k);
    const Integer pivot = h(row, col);
    for (std::size_t i = 0; i < row; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), h(i, col).get_mpz_t(), pivot.get_mpz_t());
      if (q == 0) continue;
      for (std::size_t k = 0; k < n; ++k) h(i, k) -= q * h(row, k);
    }
    ++row;
  }
  IntegerMatrix out(row, n);
  for (std::size_t i = 0; i < row; ++i)
    for (std::size_t k = 0; k < n; ++k) out(i, k) = h(i, k);
  return out;
}

std::vector<IntVector> kernel_basis(const IntegerMatrix& a) {
  const SmithForm f = smith_normal_form(a);
  const std::size_t n = a.cols();
  if (f.rank == n) return {};
  IntegerMatrix raw(n - f.rank, n);
  for (std::size_t j = f.rank; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) raw(j - f.rank, i) = f.V_inv(i, j);
  const IntegerMatrix h = hermite_normal_form(raw);
  std::vector<IntVector> basis;
  basis.reserve(h.rows());
  for (std::size_t i = 0; i < h.rows(); ++i) basis.push_back(h.row(i));
  return basis;
}

std::vector<Integer> cokernel_invariants(const IntegerMatrix& a) {
  const SmithForm f = smith_normal_form(a);
  std::vector<Integer> out;
  for (const Integer& d : f.diagonal())
    if (d != 1) out.push_back(d);
  for (std::size_t i = std::min(a.rows(), a.cols()); i < a.rows(); ++i) out.emplace_back(0);
  // Zeros of the diagonal already sit after the nonzero factors.
  return out;
}

Integer gcd_of(std::span<const Integer> v) {
  Integer g = 0;
  for (const Integer& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

Integer divisibility_index(std::span<const Integer> v) {
  Integer g = gcd_of(v);
  if (g == 0) throw ValidationError("divisibility index of the zero vector is undefined");
  return g;
}

std::optional<IntVector> solve_integer(const IntegerMatrix& a, std::span<const Integer> b) {
  if (b.size() != a.rows()) throw ValidationError("solve_integer: right-hand side has wrong length");
  const SmithForm f = smith_normal_form(a);
  const IntVector c = f.U_inv * b;
  IntVector y(a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (i < f.rank) {
      if (mpz_divisible_p(c[i].get_mpz_t(), f.S(i, i).get_mpz_t()) == 0) return std::nullopt;
      y[i] = c[i] / f.S(i, i);
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  return f.V_inv * y;
}

Integer determinant(const IntegerMatrix& a) {
  if (!a.is_square()) throw ValidationError("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  IntegerMatrix m = a;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = v;
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::size_t rank(const IntegerMatrix& a) { return smith_normal_form(a).rank; }

std::size_t rank(const RationalMatrix& a) {
  RationalMatrix m = a;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(p, j));
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, c) == 0) continue;
      const Rational f = m(i, c) / m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

bool is_unimodular(const IntegerMatrix& a) { return a.is_square() && abs(determinant(a)) == 1; }

IntegerMatrix inverse_unimodular(const IntegerMatrix& a) {
  if (!is_unimodular(a)) throw ValidationError("matrix is not unimodular");
  const SmithForm f = smith_normal_form(a);
  // A = U S V with S = I, so A^{-1} = V^{-1} U^{-1}.
  return f.V_inv * f.U_inv;
}

bool same_column_lattice(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.rows() != b.rows()) return false;
  return hermite_normal_form(a.transpose()) == hermite_normal_form(b.transpose());
}

}  // namespace clustergeom
