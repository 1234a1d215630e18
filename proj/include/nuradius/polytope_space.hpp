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

#ifndef NURADIUS_POLYTOPE_SPACE_HPP
#define NURADIUS_POLYTOPE_SPACE_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "nuradius/error.hpp"
#include "nuradius/linalg.hpp"

namespace nuradius {

/// A finite-dimensional real normed space whose unit ball is a symmetric
/// polytope. `vertices` are the extreme points of the unit ball and `facets`
/// the coefficient vectors of the facet functionals (the extreme points of
/// the dual ball). Both lists are stored in full, i.e. they contain v and -v
/// for every member. All comparisons use the absolute tolerance `tolerance`.
///
/// Instances are immutable after construction and safe to share across
/// threads; every operation below is a pure function of its inputs.
struct PolyhedralSpace {
  int dim = 0;
  std::vector<Vec> vertices;
  std::vector<Vec> facets;
  double tolerance = 1e-9;

  // Index of -vertices[i] / -facets[j] in the respective list, or -1 when the
  // list is not symmetric (validate() reports that).
  std::vector<int> vertex_negation;
  std::vector<int> facet_negation;
};

namespace detail {

inline int find_negation(const std::vector<Vec>& items, std::size_t i, double tol) {
  for (std::size_t j = 0; j < items.size(); ++j) {
    if (j == i) continue;
    if (max_abs(vadd(items[i], items[j])) <= tol) return static_cast<int>(j);
  }
  return -1;
}

}  // namespace detail

/// Assembles a space from explicit V- and H-representations. Only structural
/// properties (vector lengths, positive tolerance) are enforced here; the
/// geometric invariants are checked by validate().
inline PolyhedralSpace make_space(int dim, std::vector<Vec> vertices,
                                  std::vector<Vec> facets, double tolerance = 1e-9) {
  if (dim <= 0) throw Error(ErrorCode::InvalidParameter, "dim must be positive");
  if (tolerance <= 0.0) throw Error(ErrorCode::InvalidParameter, "tolerance must be positive");
  for (const Vec& v : vertices)
    if (static_cast<int>(v.size()) != dim)
      throw Error(ErrorCode::DimensionMismatch, "vertex length != dim");
  for (const Vec& f : facets)
    if (static_cast<int>(f.size()) != dim)
      throw Error(ErrorCode::DimensionMismatch, "facet length != dim");

  PolyhedralSpace space;
  space.dim = dim;
  space.vertices = std::move(vertices);
  space.facets = std::move(facets);
  space.tolerance = tolerance;
  space.vertex_negation.resize(space.vertices.size());
  space.facet_negation.resize(space.facets.size());
  for (std::size_t i = 0; i < space.vertices.size(); ++i)
    space.vertex_negation[i] = detail::find_negation(space.vertices, i, tolerance);
  for (std::size_t j = 0; j < space.facets.size(); ++j)
    space.facet_negation[j] = detail::find_negation(space.facets, j, tolerance);
  return space;
}

/// The norm, evaluated as the maximum of the facet functionals over the full
/// symmetric list. Zero exactly on the zero vector for a valid space.
inline double norm(const PolyhedralSpace& space, const Vec& x) {
  if (static_cast<int>(x.size()) != space.dim)
    throw Error(ErrorCode::DimensionMismatch, "vector length != space dim");
  double m = 0.0;
  for (const Vec& f : space.facets) m = std::max(m, dot(f, x));
  return m;
}

/// Dual norm of a coefficient vector: max over vertices of |f(v)|.
inline double dual_norm(const PolyhedralSpace& space, const Vec& f) {
  if (static_cast<int>(f.size()) != space.dim)
    throw Error(ErrorCode::DimensionMismatch, "functional length != space dim");
  double m = 0.0;
  for (const Vec& v : space.vertices) m = std::max(m, std::fabs(dot(f, v)));
  return m;
}

/// Indices of all facet functionals attaining the norm of x, i.e. the extreme
/// points of J(x/||x||). The full support set is their convex hull.
inline std::vector<int> support_set(const PolyhedralSpace& space, const Vec& x) {
  const double nx = norm(space, x);
  if (nx <= space.tolerance) throw Error(ErrorCode::ZeroVector, "support set of the zero vector");
  std::vector<int> result;
  for (std::size_t j = 0; j < space.facets.size(); ++j)
    if (dot(space.facets[j], x) >= nx - space.tolerance) result.push_back(static_cast<int>(j));
  return result;
}

/// x is smooth iff exactly one facet functional supports it.
inline bool is_smooth_point(const PolyhedralSpace& space, const Vec& x) {
  return support_set(space, x).size() == 1;
}

/// A unit vector together with a norming functional, x*(x) = 1.
struct DualPair {
  Vec point;
  Vec functional;
  double pairing = 1.0;
};

inline DualPair make_dual_pair(const PolyhedralSpace& space, Vec point, Vec functional) {
  const double tol = space.tolerance;
  const double nx = norm(space, point);
  if (std::fabs(nx - 1.0) > tol)
    throw Error(ErrorCode::InvalidParameter, "dual pair point is not on the unit sphere");
  const double nf = dual_norm(space, functional);
  if (std::fabs(nf - 1.0) > tol)
    throw Error(ErrorCode::InvalidParameter, "dual pair functional is not norm-one");
  const double pairing = dot(functional, point);
  if (std::fabs(pairing - 1.0) > tol)
    throw Error(ErrorCode::InvalidParameter, "dual pair does not pair to 1");
  return DualPair{std::move(point), std::move(functional), pairing};
}

enum class Invariant { Symmetry, Consistency, Tightness, Fullness, VertexFacetCount };

inline const char* invariant_name(Invariant inv) {
  switch (inv) {
    case Invariant::Symmetry: return "symmetry";
    case Invariant::Consistency: return "consistency";
    case Invariant::Tightness: return "tightness";
    case Invariant::Fullness: return "fullness";
    case Invariant::VertexFacetCount: return "vertex_facet_count";
  }
  return "unknown";
}

struct Violation {
  Invariant invariant;
  int vertex = -1;  // offending vertex index, if any
  int facet = -1;   // offending facet index, if any
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  int vertex_count = 0;
  int facet_count = 0;
  int min_facets_per_vertex = 0;
  bool valid() const { return violations.empty(); }
};

/// Checks every structural invariant of the space and reports all failures.
/// For a consistent V/H pair every vertex lies in at least dim facets; a
/// violation therefore signals inconsistent input data rather than an exotic
/// polytope.
inline ValidationReport validate(const PolyhedralSpace& space) {
  const double tol = space.tolerance;
  const int n = space.dim;
  ValidationReport report;
  report.vertex_count = static_cast<int>(space.vertices.size());
  report.facet_count = static_cast<int>(space.facets.size());

  for (std::size_t i = 0; i < space.vertices.size(); ++i)
    if (space.vertex_negation[i] < 0)
      report.violations.push_back({Invariant::Symmetry, static_cast<int>(i), -1,
                                   "vertex has no antipodal partner"});
  for (std::size_t j = 0; j < space.facets.size(); ++j)
    if (space.facet_negation[j] < 0)
      report.violations.push_back({Invariant::Symmetry, -1, static_cast<int>(j),
                                   "facet has no antipodal partner"});

  for (std::size_t i = 0; i < space.vertices.size(); ++i) {
    double m = -1e300;
    for (const Vec& f : space.facets) m = std::max(m, dot(f, space.vertices[i]));
    if (std::fabs(m - 1.0) > tol)
      report.violations.push_back({Invariant::Consistency, static_cast<int>(i), -1,
                                   "max facet value at vertex = " + std::to_string(m)});
  }

  for (std::size_t j = 0; j < space.facets.size(); ++j) {
    std::vector<Vec> on_facet;
    for (const Vec& v : space.vertices)
      if (std::fabs(dot(space.facets[j], v) - 1.0) <= tol) on_facet.push_back(v);
    bool ok = on_facet.size() >= static_cast<std::size_t>(n);
    if (ok && n > 1) {
      std::vector<Vec> diffs;
      for (std::size_t k = 1; k < on_facet.size(); ++k)
        diffs.push_back(vsub(on_facet[k], on_facet[0]));
      ok = rank_of(diffs, tol) >= n - 1;
    }
    if (!ok)
      report.violations.push_back({Invariant::Tightness, -1, static_cast<int>(j),
                                   "facet is supported by fewer than dim affinely "
                                   "independent vertices"});
  }

  if (rank_of(space.vertices, tol) < n)
    report.violations.push_back({Invariant::Fullness, -1, -1,
                                 "vertices do not span the ambient space"});

  int min_count = space.vertices.empty() ? 0 : static_cast<int>(space.facets.size());
  for (std::size_t i = 0; i < space.vertices.size(); ++i) {
    int count = 0;
    for (const Vec& f : space.facets)
      if (std::fabs(dot(f, space.vertices[i]) - 1.0) <= tol) ++count;
    min_count = std::min(min_count, count);
    if (count < n)
      report.violations.push_back({Invariant::VertexFacetCount, static_cast<int>(i), -1,
                                   "vertex lies in " + std::to_string(count) +
                                       " facets, need >= " + std::to_string(n)});
  }
  report.min_facets_per_vertex = min_count;
  return report;
}

/// Enumerates the facet functionals of CO(vertices) by fitting a hyperplane
/// through every dim-subset of vertices and keeping the fits that support the
/// whole set. Desk-scale only: dim <= 4 and at most 64 vertices.
///
/// The result is deduplicated up to sign, sorted lexicographically and
/// emitted as [g_1, ..., g_k, -g_1, ..., -g_k].
inline std::vector<Vec> dual_from_vertices(const std::vector<Vec>& vertices,
                                           double tolerance = 1e-9) {
  if (vertices.empty()) throw Error(ErrorCode::DegenerateBall, "no vertices");
  const int n = static_cast<int>(vertices[0].size());
  for (const Vec& v : vertices)
    if (static_cast<int>(v.size()) != n)
      throw Error(ErrorCode::DimensionMismatch, "vertices of mixed dimension");
  if (n > 4)
    throw Error(ErrorCode::EnumerationTooLarge,
                "dimension > 4; supply facets explicitly");
  if (vertices.size() > 64)
    throw Error(ErrorCode::EnumerationTooLarge,
                "more than 64 vertices; supply facets explicitly");
  if (rank_of(vertices, tolerance) < n)
    throw Error(ErrorCode::DegenerateBall, "vertices do not span the space");

  const int m = static_cast<int>(vertices.size());
  double scale = 0.0;
  for (const Vec& v : vertices) scale = std::max(scale, max_abs(v));
  const double pivot_tol = 1e-12 * std::max(1.0, scale);

  std::vector<Vec> canonical;
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
      for (int c = 0; c < n; ++c) a(r, c) = vertices[subset[r]][c];
    auto f = solve_linear(a, Vec(n, 1.0), pivot_tol);
    if (!f) continue;

    bool supports = true;
    int on_count = 0;
    for (const Vec& v : vertices) {
      const double val = dot(*f, v);
      if (val > 1.0 + tolerance) {
        supports = false;
        break;
      }
      if (val >= 1.0 - tolerance) ++on_count;
    }
    if (!supports || on_count < n) continue;

    Vec g = *f;
    for (double c : g) {
      if (std::fabs(c) > tolerance) {
        if (c < 0.0) g = negated(g);
        break;
      }
    }
    bool seen = false;
    for (const Vec& h : canonical) {
      if (max_abs(vsub(g, h)) <= tolerance) {
        seen = true;
        break;
      }
    }
    if (!seen) canonical.push_back(std::move(g));
  } while (advance());

  if (canonical.empty()) throw Error(ErrorCode::DegenerateBall, "no supporting facets found");
  std::sort(canonical.begin(), canonical.end());
  std::vector<Vec> result = canonical;
  for (const Vec& g : canonical) result.push_back(negated(g));
  return result;
}

/// Builds a space from vertices alone, filling in the facet functionals by
/// enumeration.
inline PolyhedralSpace space_from_vertices(int dim, std::vector<Vec> vertices,
                                           double tolerance = 1e-9) {
  auto facets = dual_from_vertices(vertices, tolerance);
  return make_space(dim, std::move(vertices), std::move(facets), tolerance);
}

}  // namespace nuradius

#endif  // NURADIUS_POLYTOPE_SPACE_HPP
