#pragma once
// Seifert matrices and the Conway polynomial read off from the exact
// determinant det(s^-1 M - s M^T) over the s-Laurent ring, with
// fraction-free Bareiss elimination. Includes the parametric family M(K_k)
// of (4k-4)x(4k-4) matrices and its expanded product formula.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <milnor/bigint.hpp>
#include <milnor/laurent.hpp>

namespace milnor {

// Square integer matrix; 0x0 represents the trivial knot. Knot validity
// (det(M - M^T) = 1) is checked on demand, not at construction.
class SeifertMatrix {
 public:
  SeifertMatrix() = default;

  explicit SeifertMatrix(std::vector<std::vector<std::int64_t>> rows)
      : rows_(std::move(rows)) {
    for (const auto& row : rows_)
      if (row.size() != rows_.size())
        throw std::invalid_argument("Seifert matrix must be square");
  }

  int size() const { return static_cast<int>(rows_.size()); }
  std::int64_t at(int i, int j) const { return rows_[i][j]; }
  const std::vector<std::vector<std::int64_t>>& rows() const { return rows_; }

  friend bool operator==(const SeifertMatrix&, const SeifertMatrix&) = default;

 private:
  std::vector<std::vector<std::int64_t>> rows_;
};

namespace detail {

// Exact division in Z[s, s^-1]; throws if the division leaves a remainder.
// Long division from the top exponent down; when num = q * den the leading
// integer division is exact at every step.
inline LaurentPoly divide_exact(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw std::logic_error("division by zero polynomial");
  if (num.is_zero()) return LaurentPoly::zero(num.var());
  detail::require_same_var(num, den);

  const int quotient_min = num.min_exponent() - den.min_exponent();
  LaurentPoly q(num.var());
  LaurentPoly r = num;
  while (!r.is_zero()) {
    const int e = r.max_exponent() - den.max_exponent();
    if (e < quotient_min)
      throw std::logic_error("inexact polynomial division in Bareiss step");
    const Int lead_r = r.coefficient(r.max_exponent());
    const Int lead_d = den.coefficient(den.max_exponent());
    if (lead_r % lead_d != 0)
      throw std::logic_error("inexact polynomial division in Bareiss step");
    const Int c = lead_r / lead_d;
    q.add_term(e, c);
    r = r - LaurentPoly::term(num.var(), e, c) * den;
  }
  return q;
}

// Fraction-free Bareiss determinant over the Laurent ring, with row
// pivoting. Entries stay minors of the input, so every division is exact.
inline LaurentPoly det_bareiss(std::vector<std::vector<LaurentPoly>> a, Var var) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return LaurentPoly::one(var);
  int sign = 1;
  LaurentPoly prev = LaurentPoly::one(var);
  for (int k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      int pivot = -1;
      for (int r = k + 1; r < n; ++r)
        if (!a[r][k].is_zero()) {
          pivot = r;
          break;
        }
      if (pivot < 0) return LaurentPoly::zero(var);
      std::swap(a[k], a[pivot]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        a[i][j] = divide_exact(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
      a[i][k] = LaurentPoly::zero(var);
    }
    prev = a[k][k];
  }
  return sign < 0 ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

// Cofactor expansion along the first row; the small-size oracle for the
// Bareiss engine.
inline LaurentPoly det_cofactor(const std::vector<std::vector<LaurentPoly>>& a, Var var) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return LaurentPoly::one(var);
  if (n == 1) return a[0][0];
  LaurentPoly det(var);
  for (int j = 0; j < n; ++j) {
    if (a[0][j].is_zero()) continue;
    std::vector<std::vector<LaurentPoly>> minor;
    minor.reserve(n - 1);
    for (int i = 1; i < n; ++i) {
      std::vector<LaurentPoly> row;
      row.reserve(n - 1);
      for (int jj = 0; jj < n; ++jj)
        if (jj != j) row.push_back(a[i][jj]);
      minor.push_back(std::move(row));
    }
    const LaurentPoly term = a[0][j] * det_cofactor(minor, var);
    det = (j % 2 == 0) ? det + term : det - term;
  }
  return det;
}

// Integer Bareiss determinant (for det(M - M^T)).
inline Int det_bareiss_int(std::vector<std::vector<Int>> a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return 1;
  int sign = 1;
  Int prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      int pivot = -1;
      for (int r = k + 1; r < n; ++r)
        if (a[r][k] != 0) {
          pivot = r;
          break;
        }
      if (pivot < 0) return 0;
      std::swap(a[k], a[pivot]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign < 0 ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

// The transposed-pair matrix s^-1 M - s M^T whose determinant is the
// Conway polynomial evaluated at z = s^-1 - s.
inline std::vector<std::vector<LaurentPoly>> alexander_matrix(const SeifertMatrix& m) {
  const int n = m.size();
  std::vector<std::vector<LaurentPoly>> t(n, std::vector<LaurentPoly>(n, LaurentPoly(Var::s)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      t[i][j].add_term(-1, m.at(i, j));
      t[i][j].add_term(1, -Int(m.at(j, i)));
    }
  return t;
}

}  // namespace detail

// The Seifert matrix of K_k with respect to the basis
// x_1..x_{2k-2}, y_1..y_{2k-3}, z. Blocks: zero block on the x-pairings,
// A on (x_i^+, y_j), B on (y_i^+, x_j), diag(1,0,...,0) on the y-pairings,
// and a single clasp column/row through z.
inline SeifertMatrix build_kk_matrix(int k) {
  if (k < 2) throw std::invalid_argument("build_kk_matrix requires k >= 2");
  const int nx = 2 * k - 2;
  const int ny = 2 * k - 3;
  const int n = nx + ny + 1;
  std::vector<std::vector<std::int64_t>> m(n, std::vector<std::int64_t>(n, 0));

  // A block: a_ij = lk(x_i^+, y_j), 1-based i in 1..2k-2, j in 1..2k-3.
  for (int i = 1; i <= nx; ++i)
    for (int j = 1; j <= ny; ++j) {
      if (i == j)
        m[i - 1][nx + j - 1] = 1;
      else if (i >= 3 && i % 2 == 1 && j == i - 1)
        m[i - 1][nx + j - 1] = -1;
    }
  // Final column of the x-rows: (1, 0, ..., 0, -1)^T.
  m[0][n - 1] = 1;
  m[nx - 1][n - 1] = -1;

  // B block: b_ij = lk(y_i^+, x_j), i in 1..2k-3, j in 1..2k-2.
  for (int i = 1; i <= ny; ++i)
    for (int j = 1; j <= nx; ++j) {
      if (i == j)
        m[nx + i - 1][j - 1] = 1;
      else if (i % 2 == 1 && j == i + 1)
        m[nx + i - 1][j - 1] = -1;
    }
  // Middle block diag(1, 0, ..., 0) on the y-pairings.
  m[nx][nx] = 1;

  // Bottom row: (0, ..., 0, -1 | 0, ..., 0 | 0).
  m[n - 1][nx - 1] = -1;

  return SeifertMatrix(std::move(m));
}

// Conway polynomial from a Seifert matrix: det(s^-1 M - s M^T) converted
// to z. The 0x0 matrix (trivial knot) gives 1. Inputs outside the Seifert
// convention surface as the s_to_z remainder error.
inline LaurentPoly conway_from_seifert(const SeifertMatrix& m) {
  return s_to_z(detail::det_bareiss(detail::alexander_matrix(m), Var::s));
}

// The expanded product formula for the K_k family:
// 1 + (-1)^k * 2 * z^{2k-2} + z^{4k-4}.
inline LaurentPoly kk_closed_form(int k) {
  if (k < 2) throw std::invalid_argument("kk_closed_form requires k >= 2");
  LaurentPoly p = LaurentPoly::one(Var::z);
  p.add_term(2 * k - 2, k % 2 == 0 ? 2 : -2);
  p.add_term(4 * k - 4, 1);
  return p;
}

// det(M - M^T) = 1; the intersection form of a knot Seifert surface is
// unimodular, so this is the knot-validity check.
inline bool validate_knot_matrix(const SeifertMatrix& m) {
  const int n = m.size();
  std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = Int(m.at(i, j)) - Int(m.at(j, i));
  return detail::det_bareiss_int(std::move(a)) == 1;
}

// Elementary enlargement [[M, u, 0], [0, x, 1], [0, 0, 0]]; leaves the
// Conway polynomial unchanged.
inline SeifertMatrix stabilize(const SeifertMatrix& m,
                               const std::vector<std::int64_t>& u,
                               std::int64_t x) {
  const int g = m.size();
  if (static_cast<int>(u.size()) != g)
    throw std::invalid_argument("stabilization column length must match matrix size");
  std::vector<std::vector<std::int64_t>> out(g + 2, std::vector<std::int64_t>(g + 2, 0));
  for (int i = 0; i < g; ++i) {
    for (int j = 0; j < g; ++j) out[i][j] = m.at(i, j);
    out[i][g] = u[i];
  }
  out[g][g] = x;
  out[g][g + 1] = 1;
  return SeifertMatrix(std::move(out));
}

}  // namespace milnor
