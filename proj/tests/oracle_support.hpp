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
//
// Test-only oracles. Each one recomputes a quantity through a route
// independent of the implementation path it checks: the gauge via
// V-representation enumeration, attainment sets via raw double loops, norm
// profiles via grid scans.

#ifndef NURADIUS_TESTS_ORACLE_SUPPORT_HPP
#define NURADIUS_TESTS_ORACLE_SUPPORT_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "nuradius/linalg.hpp"
#include "nuradius/operator_core.hpp"
#include "nuradius/polytope_space.hpp"
#include "nuradius/random.hpp"

namespace nuradius::testing {

// Gauge of x with respect to CO(vertices): the smallest t >= 0 with
// x in t * CO(vertices). Solves min sum(lambda) s.t. sum lambda_i v_i = x,
// lambda >= 0 by enumerating basic solutions over dim-subsets; valid because
// an optimal basic feasible solution uses at most dim positive weights.
inline double gauge_from_vertices(const std::vector<Vec>& vertices, const Vec& x) {
  const int n = static_cast<int>(x.size());
  const int m = static_cast<int>(vertices.size());
  double best = std::numeric_limits<double>::infinity();

  std::vector<int> subset(n);
  for (int i = 0; i < n; ++i) subset[i] = i;
  const auto advance = [&]() -> bool {
    int k = n - 1;
    while (k >= 0 && subset[k] == m - n + k) --k;
    if (k < 0) return false;
    ++subset[k];
    for (int j = k + 1; j < n; ++j) subset[j] = subset[j - 1] + 1;
    return true;
  };

  do {
    Mat a(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) a(r, c) = vertices[subset[c]][r];  // columns = vertices
    auto lambda = solve_linear(a, x, 1e-12);
    if (!lambda) continue;
    double total = 0.0;
    bool feasible = true;
    for (double l : *lambda) {
      if (l < -1e-9) {
        feasible = false;
        break;
      }
      total += std::max(l, 0.0);
    }
    if (feasible) best = std::min(best, total);
  } while (advance());
  return best;
}

// Independent count of the extreme dual pairs.
inline int brute_force_pair_count(const PolyhedralSpace& space) {
  int count = 0;
  for (const Vec& v : space.vertices)
    for (const Vec& f : space.facets)
      if (std::fabs(dot(f, v) - 1.0) <= space.tolerance) ++count;
  return count;
}

// Numerical radius of a plain matrix by raw double loop (no report logic).
inline double brute_force_w_norm(const PolyhedralSpace& space, const Mat& t) {
  double best = 0.0;
  for (const Vec& v : space.vertices) {
    const Vec tv = matvec(t, v);
    for (const Vec& f : space.facets)
      if (std::fabs(dot(f, v) - 1.0) <= space.tolerance)
        best = std::max(best, std::fabs(dot(f, tv)));
  }
  return best;
}

// D = { x*(Tx) x*(Ax) } over radius witnesses, recomputed from scratch;
// returned sorted with duplicates within tol merged.
inline std::vector<double> brute_force_d_set(const PolyhedralSpace& space, const Mat& t,
                                             const Mat& a) {
  const double w = brute_force_w_norm(space, t);
  std::vector<double> values;
  for (const Vec& v : space.vertices) {
    const Vec tv = matvec(t, v);
    const Vec av = matvec(a, v);
    for (const Vec& f : space.facets) {
      if (std::fabs(dot(f, v) - 1.0) > space.tolerance) continue;
      const double te = dot(f, tv);
      if (std::fabs(std::fabs(te) - w) > space.tolerance) continue;
      values.push_back(te * dot(f, av));
    }
  }
  std::sort(values.begin(), values.end());
  std::vector<double> merged;
  for (double d : values)
    if (merged.empty() || d - merged.back() > space.tolerance) merged.push_back(d);
  return merged;
}

// min over a lambda grid of ||T + lambda A||_w, by direct evaluation.
inline double grid_min_w_profile(const PolyhedralSpace& space, const Mat& t, const Mat& a,
                                 double lo, double hi, int points) {
  double best = std::numeric_limits<double>::infinity();
  for (int k = 0; k < points; ++k) {
    const double lambda = lo + (hi - lo) * k / (points - 1);
    const Mat sum = t + (lambda * a);
    best = std::min(best, brute_force_w_norm(space, sum));
  }
  return best;
}

// Same scan for the operator norm.
inline double grid_min_op_profile(const PolyhedralSpace& space, const Mat& t, const Mat& a,
                                  double lo, double hi, int points) {
  double best = std::numeric_limits<double>::infinity();
  for (int k = 0; k < points; ++k) {
    const double lambda = lo + (hi - lo) * k / (points - 1);
    const Mat sum = t + (lambda * a);
    double value = 0.0;
    for (const Vec& v : space.vertices) value = std::max(value, norm(space, matvec(sum, v)));
    best = std::min(best, value);
  }
  return best;
}

inline Mat random_nonzero_matrix(std::mt19937_64& rng, int n) {
  for (;;) {
    Mat m = random_matrix(rng, n);
    if (max_abs(m) > 0.1) return m;
  }
}

// Refines a coarse grid minimum of the convex profile by ternary search on
// the bracketing interval.
inline double grid_min_w_refined(const PolyhedralSpace& space, const Mat& t, const Mat& a,
                                 double lo, double hi, int coarse_points) {
  double best = std::numeric_limits<double>::infinity();
  double best_lambda = 0.0;
  const auto value_at = [&](double lambda) {
    return brute_force_w_norm(space, t + (lambda * a));
  };
  const double h = (hi - lo) / (coarse_points - 1);
  for (int k = 0; k < coarse_points; ++k) {
    const double lambda = lo + h * k;
    const double value = value_at(lambda);
    if (value < best) {
      best = value;
      best_lambda = lambda;
    }
  }
  double left = best_lambda - h;
  double right = best_lambda + h;
  while (right - left > 1e-13) {
    const double m1 = left + (right - left) / 3.0;
    const double m2 = right - (right - left) / 3.0;
    if (value_at(m1) <= value_at(m2))
      right = m2;
    else
      left = m1;
  }
  return std::min(best, value_at(0.5 * (left + right)));
}

// Builds an operator whose numerical radius is 1 and attained at a single
// sign class: T z = g(z) * y with y interior to a random facet and g a
// perturbed copy of the facet functional with a unique argmax vertex on
// that facet. Returns the matrix and the unique witness pair.
inline std::pair<Mat, ExtremePair> single_class_operator(const PolyhedralSpace& space,
                                                         std::mt19937_64& rng) {
  const int n = space.dim;
  for (;;) {
    const int facet_idx = static_cast<int>(rng() % space.facets.size());
    const Vec& f = space.facets[facet_idx];
    std::vector<int> on_facet;
    for (std::size_t i = 0; i < space.vertices.size(); ++i)
      if (std::fabs(dot(f, space.vertices[i]) - 1.0) <= space.tolerance)
        on_facet.push_back(static_cast<int>(i));

    Vec y(n, 0.0);
    for (int i : on_facet) y = vadd(y, space.vertices[i]);
    y = scaled(y, 1.0 / static_cast<double>(on_facet.size()));
    bool interior = true;
    for (std::size_t j = 0; j < space.facets.size(); ++j) {
      if (static_cast<int>(j) == facet_idx ||
          static_cast<int>(j) == space.facet_negation[facet_idx])
        continue;
      if (std::fabs(dot(space.facets[j], y)) > 1.0 - 1e-3) interior = false;
    }
    if (!interior) continue;

    Vec g = vadd(f, scaled(random_vector(rng, n), 0.05));
    int v0 = 0;
    for (std::size_t i = 1; i < space.vertices.size(); ++i)
      if (dot(g, space.vertices[i]) > dot(g, space.vertices[v0])) v0 = static_cast<int>(i);
    if (std::find(on_facet.begin(), on_facet.end(), v0) == on_facet.end()) continue;
    g = scaled(g, 1.0 / dot(g, space.vertices[v0]));
    bool unique = true;
    for (std::size_t i = 0; i < space.vertices.size(); ++i) {
      if (static_cast<int>(i) == v0 || static_cast<int>(i) == space.vertex_negation[v0])
        continue;
      if (std::fabs(dot(g, space.vertices[i])) > 1.0 - 1e-3) unique = false;
    }
    if (!unique) continue;
    return {outer(y, g), ExtremePair{v0, facet_idx}};
  }
}

}  // namespace nuradius::testing

#endif  // NURADIUS_TESTS_ORACLE_SUPPORT_HPP
