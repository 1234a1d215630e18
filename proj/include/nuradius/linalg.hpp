// Copyright 2026 the nuradius authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NURADIUS_LINALG_HPP
#define NURADIUS_LINALG_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "nuradius/error.hpp"

namespace nuradius {

using Vec = std::vector<double>;

/// Dense row-major matrix; everything here is desk scale (n <= 4 for the
/// polyhedral spaces, slightly larger for lp experiments).
struct Mat {
  int rows = 0;
  int cols = 0;
  std::vector<double> data;

  Mat() = default;
  Mat(int r, int c, double fill = 0.0)
      : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, fill) {}

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  static Mat from_rows(std::initializer_list<std::initializer_list<double>> rws) {
    Mat m(static_cast<int>(rws.size()),
          rws.size() ? static_cast<int>(rws.begin()->size()) : 0);
    int i = 0;
    for (const auto& row : rws) {
      if (static_cast<int>(row.size()) != m.cols)
        throw Error(ErrorCode::DimensionMismatch, "ragged matrix rows");
      int j = 0;
      for (double v : row) m(i, j++) = v;
      ++i;
    }
    return m;
  }

  double& operator()(int i, int j) { return data[static_cast<std::size_t>(i) * cols + j]; }
  double operator()(int i, int j) const { return data[static_cast<std::size_t>(i) * cols + j]; }
  bool square() const { return rows == cols; }
};

inline double dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size())
    throw Error(ErrorCode::DimensionMismatch, "dot of vectors with different lengths");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Vec matvec(const Mat& m, const Vec& x) {
  if (static_cast<int>(x.size()) != m.cols)
    throw Error(ErrorCode::DimensionMismatch, "matrix-vector size mismatch");
  Vec y(m.rows, 0.0);
  for (int i = 0; i < m.rows; ++i) {
    double s = 0.0;
    for (int j = 0; j < m.cols; ++j) s += m(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

inline Vec scaled(const Vec& v, double c) {
  Vec r(v);
  for (double& x : r) x *= c;
  return r;
}

inline Vec negated(const Vec& v) { return scaled(v, -1.0); }

inline Vec vadd(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch);
  Vec r(a);
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

inline Vec vsub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch);
  Vec r(a);
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return r;
}

inline double max_abs(const Vec& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::fabs(x));
  return m;
}

inline double max_abs(const Mat& m) {
  double r = 0.0;
  for (double x : m.data) r = std::max(r, std::fabs(x));
  return r;
}

inline Mat operator+(const Mat& a, const Mat& b) {
  if (a.rows != b.rows || a.cols != b.cols)
    throw Error(ErrorCode::DimensionMismatch, "matrix sum shape mismatch");
  Mat r(a);
  for (std::size_t i = 0; i < r.data.size(); ++i) r.data[i] += b.data[i];
  return r;
}

inline Mat operator*(double c, const Mat& m) {
  Mat r(m);
  for (double& x : r.data) x *= c;
  return r;
}

/// Rank-one operator z -> f(z) * y.
inline Mat outer(const Vec& y, const Vec& f) {
  Mat m(static_cast<int>(y.size()), static_cast<int>(f.size()));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) m(i, j) = y[i] * f[j];
  return m;
}

/// Gaussian elimination with partial pivoting; nullopt when a pivot falls
/// below `pivot_tol` (treated as singular).
inline std::optional<Vec> solve_linear(Mat a, Vec b, double pivot_tol) {
  if (!a.square() || static_cast<int>(b.size()) != a.rows)
    throw Error(ErrorCode::DimensionMismatch, "solve_linear shape mismatch");
  const int n = a.rows;
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::fabs(a(r, col)) > std::fabs(a(piv, col))) piv = r;
    if (std::fabs(a(piv, col)) <= pivot_tol) return std::nullopt;
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
      std::swap(b[piv], b[col]);
    }
    for (int r = col + 1; r < n; ++r) {
      const double f = a(r, col) / a(col, col);
      if (f == 0.0) continue;
      for (int j = col; j < n; ++j) a(r, j) -= f * a(col, j);
      b[r] -= f * b[col];
    }
  }
  Vec x(n, 0.0);
  for (int i = n - 1; i >= 0; --i) {
    double s = b[i];
    for (int j = i + 1; j < n; ++j) s -= a(i, j) * x[j];
    x[i] = s / a(i, i);
  }
  return x;
}

/// Numerical rank of a list of row vectors (row echelon with threshold).
inline int rank_of(std::vector<Vec> rows, double tol) {
  if (rows.empty()) return 0;
  const std::size_t ncols = rows[0].size();
  int rank = 0;
  std::size_t lead = 0;
  while (lead < ncols && rank < static_cast<int>(rows.size())) {
    std::size_t piv = rank;
    for (std::size_t r = rank; r < rows.size(); ++r)
      if (std::fabs(rows[r][lead]) > std::fabs(rows[piv][lead])) piv = r;
    if (std::fabs(rows[piv][lead]) <= tol) {
      ++lead;
      continue;
    }
    std::swap(rows[piv], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == static_cast<std::size_t>(rank)) continue;
      const double f = rows[r][lead] / rows[rank][lead];
      if (f == 0.0) continue;
      for (std::size_t j = lead; j < ncols; ++j) rows[r][j] -= f * rows[rank][j];
    }
    ++rank;
    ++lead;
  }
  return rank;
}

}  // namespace nuradius

#endif  // NURADIUS_LINALG_HPP
