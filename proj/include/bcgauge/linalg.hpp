#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "bcgauge/module.hpp"

namespace bcg {
namespace linalg {

/// Row-major dense complex matrix, sized for constraint systems
/// (a handful of rows over a handful of coordinates).
struct CMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<Complex> a;

  CMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
  Complex& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  Complex at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

/// Gaussian elimination with partial pivoting.  Returns the rank and, when
/// `pivot_rows` is given, the indices of the rows used as pivots (a maximal
/// linearly independent subset of the input rows).
inline std::size_t rank(CMatrix m, double tol = 1e-9,
                        std::vector<std::size_t>* pivot_rows = nullptr) {
  std::vector<std::size_t> row_ids(m.rows);
  for (std::size_t r = 0; r < m.rows; ++r) row_ids[r] = r;

  double scale = 0.0;
  for (const Complex& v : m.a) scale = std::max(scale, std::abs(v));
  const double cutoff = tol * std::max(scale, 1e-300);

  std::size_t rk = 0;
  for (std::size_t col = 0; col < m.cols && rk < m.rows; ++col) {
    std::size_t best = rk;
    double best_mag = std::abs(m.at(rk, col));
    for (std::size_t r = rk + 1; r < m.rows; ++r) {
      const double mag = std::abs(m.at(r, col));
      if (mag > best_mag) {
        best = r;
        best_mag = mag;
      }
    }
    if (best_mag <= cutoff) continue;
    for (std::size_t c = 0; c < m.cols; ++c) std::swap(m.at(rk, c), m.at(best, c));
    std::swap(row_ids[rk], row_ids[best]);
    for (std::size_t r = rk + 1; r < m.rows; ++r) {
      const Complex f = m.at(r, col) / m.at(rk, col);
      for (std::size_t c = col; c < m.cols; ++c) m.at(r, c) -= f * m.at(rk, c);
    }
    if (pivot_rows) pivot_rows->push_back(row_ids[rk]);
    ++rk;
  }
  return rk;
}

/// Inverse of a square matrix by Gauss-Jordan with partial pivoting.
/// Returns false if the matrix is numerically singular.
inline bool invert(CMatrix m, CMatrix& out, double tol = 1e-12) {
  const std::size_t n = m.rows;
  if (m.cols != n) return false;
  out = CMatrix(n, n);
  for (std::size_t r = 0; r < n; ++r) out.at(r, r) = 1.0;

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t best = col;
    double best_mag = std::abs(m.at(col, col));
    for (std::size_t r = col + 1; r < n; ++r) {
      const double mag = std::abs(m.at(r, col));
      if (mag > best_mag) {
        best = r;
        best_mag = mag;
      }
    }
    if (best_mag <= tol) return false;
    if (best != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(m.at(col, c), m.at(best, c));
        std::swap(out.at(col, c), out.at(best, c));
      }
    }
    const Complex piv = m.at(col, col);
    for (std::size_t c = 0; c < n; ++c) {
      m.at(col, c) /= piv;
      out.at(col, c) /= piv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const Complex f = m.at(r, col);
      if (f == Complex{}) continue;
      for (std::size_t c = 0; c < n; ++c) {
        m.at(r, c) -= f * m.at(col, c);
        out.at(r, c) -= f * out.at(col, c);
      }
    }
  }
  return true;
}

inline double frobenius_norm(const CMatrix& m) {
  double s = 0.0;
  for (const Complex& v : m.a) s += std::norm(v);
  return std::sqrt(s);
}

/// Hermitian inner product, conjugate-linear in the first argument.
inline Complex inner(std::span<const Complex> f, std::span<const Complex> u) {
  Complex s = 0.0;
  for (std::size_t c = 0; c < f.size(); ++c) s += std::conj(f[c]) * u[c];
  return s;
}

}  // namespace linalg
}  // namespace bcg
