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

#ifndef NURADIUS_ORTHOGONALITY_HPP
#define NURADIUS_ORTHOGONALITY_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "nuradius/error.hpp"
#include "nuradius/linalg.hpp"
#include "nuradius/operator_core.hpp"
#include "nuradius/polytope_space.hpp"

namespace nuradius {

/// One element of the set D = { x*(Tx) * x*(Ax) } together with the
/// radius witness that produced it.
struct DPoint {
  double value = 0.0;
  ExtremePair witness;
};

namespace detail {

inline void require_same_space(const Operator& T, const Operator& A) {
  if (T.space->dim != A.space->dim)
    throw Error(ErrorCode::DimensionMismatch, "operators act on different dimensions");
}

inline void require_nonzero_radius(const Operator& T, double radius) {
  if (radius <= T.space->tolerance)
    throw Error(ErrorCode::ZeroOperator, "numerical radius vanishes");
}

}  // namespace detail

/// The products x*(Tx) * x*(Ax) over the numerical-radius witnesses of T,
/// deduplicated within tolerance and sorted ascending. Each value keeps the
/// first witness (in index order) that produced it.
inline std::vector<DPoint> d_points(const Operator& T, const Operator& A) {
  detail::require_same_space(T, A);
  const PolyhedralSpace& space = *T.space;
  const AttainmentReport radius = numerical_radius(T);
  detail::require_nonzero_radius(T, radius.value);

  std::vector<DPoint> raw;
  raw.reserve(radius.witnesses.size());
  for (const Witness& w : radius.witnesses) {
    const double a_eval =
        dot(space.facets[w.facet], matvec(A.entries, space.vertices[w.vertex]));
    raw.push_back({w.value * a_eval, {w.vertex, w.facet}});
  }
  std::stable_sort(raw.begin(), raw.end(), [](const DPoint& x, const DPoint& y) {
    return x.value < y.value;
  });
  // Merge runs anchored at the run head so chains cannot drift.
  std::vector<DPoint> result;
  for (const DPoint& p : raw) {
    if (!result.empty() && p.value - result.back().value <= space.tolerance) continue;
    result.push_back(p);
  }
  return result;
}

inline std::vector<double> d_set(const Operator& T, const Operator& A) {
  std::vector<double> values;
  for (const DPoint& p : d_points(T, A)) values.push_back(p.value);
  return values;
}

/// Convex weights over radius witnesses realizing 0 in CO(D). On the real
/// line two points always suffice, though three are admissible.
struct OrthogonalityCertificate {
  std::vector<ExtremePair> pairs;
  std::vector<double> weights;
  std::vector<double> d_values;
};

struct OrthogonalityDecision {
  bool orthogonal = false;
  std::optional<OrthogonalityCertificate> certificate;
};

/// Birkhoff-James orthogonality of T to A in the numerical radius norm,
/// decided by checking 0 in CO(D). When orthogonal, returns a certificate:
/// a single pair whose d-value vanishes, or two pairs with d-values of
/// opposite sign and weights (d2, -d1)/(d2 - d1).
inline OrthogonalityDecision is_w_orthogonal(const Operator& T, const Operator& A) {
  const double tol = T.space->tolerance;
  const auto points = d_points(T, A);
  const double dmin = points.front().value;
  const double dmax = points.back().value;
  OrthogonalityDecision decision;
  decision.orthogonal = dmin <= tol && dmax >= -tol;
  if (!decision.orthogonal) return decision;

  for (const DPoint& p : points) {
    if (std::fabs(p.value) <= tol) {
      decision.certificate = OrthogonalityCertificate{{p.witness}, {1.0}, {p.value}};
      return decision;
    }
  }
  const double span = dmax - dmin;
  decision.certificate = OrthogonalityCertificate{
      {points.front().witness, points.back().witness},
      {dmax / span, -dmin / span},
      {dmin, dmax}};
  return decision;
}

/// Evaluates the support functional induced by a certificate,
/// rho(B) = (1/||T||_w) * sum t_j x_j*(T x_j) x_j*(B x_j). For a sound
/// certificate rho(T) = ||T||_w and rho(A) = 0.
inline double certificate_functional(const Operator& T,
                                     const OrthogonalityCertificate& cert,
                                     const Operator& B) {
  detail::require_same_space(T, B);
  const PolyhedralSpace& space = *T.space;
  const double radius = numerical_radius(T).value;
  detail::require_nonzero_radius(T, radius);
  double sum = 0.0;
  for (std::size_t j = 0; j < cert.pairs.size(); ++j) {
    const Vec& v = space.vertices[cert.pairs[j].vertex];
    const Vec& f = space.facets[cert.pairs[j].facet];
    sum += cert.weights[j] * dot(f, matvec(T.entries, v)) * dot(f, matvec(B.entries, v));
  }
  return sum / radius;
}

enum class NormKind { opnorm, wnorm };

/// One affine piece lambda -> base + lambda * slope of the norm profile.
struct ProfilePiece {
  double base = 0.0;
  double slope = 0.0;
};

/// The pieces whose absolute max over lambda is ||T + lambda A|| (operator
/// norm: all vertex x facet evaluations) or ||T + lambda A||_w (numerical
/// radius: extreme dual pairs only).
inline std::vector<ProfilePiece> lambda_profile(const Operator& T, const Operator& A,
                                                NormKind kind) {
  detail::require_same_space(T, A);
  const PolyhedralSpace& space = *T.space;
  std::vector<ProfilePiece> pieces;
  if (kind == NormKind::wnorm) {
    for (const ExtremePair& p : extreme_pairs(space)) {
      const Vec& v = space.vertices[p.vertex];
      const Vec& f = space.facets[p.facet];
      pieces.push_back({dot(f, matvec(T.entries, v)), dot(f, matvec(A.entries, v))});
    }
  } else {
    for (const Vec& v : space.vertices) {
      const Vec tv = matvec(T.entries, v);
      const Vec av = matvec(A.entries, v);
      for (const Vec& f : space.facets) pieces.push_back({dot(f, tv), dot(f, av)});
    }
  }
  return pieces;
}

inline double profile_value(const std::vector<ProfilePiece>& pieces, double lambda) {
  double m = 0.0;
  for (const ProfilePiece& p : pieces)
    m = std::max(m, std::fabs(p.base + lambda * p.slope));
  return m;
}

struct ProfileMinimum {
  double lambda = 0.0;
  double value = 0.0;
};

/// Exact minimizer of the piecewise-linear convex profile
/// lambda -> max_i |a_i + lambda b_i|. Candidate minimizers are the crossing
/// points of the signed pieces plus lambda = 0; the smallest minimizer is
/// returned. Serves as the independent oracle for both orthogonality
/// decisions.
inline ProfileMinimum lambda_profile_min(const Operator& T, const Operator& A,
                                         NormKind kind) {
  if (max_abs(A.entries) <= T.space->tolerance)
    throw Error(ErrorCode::ZeroDirection, "direction operator is zero");
  const auto pieces = lambda_profile(T, A, kind);

  std::vector<double> candidates{0.0};
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    for (std::size_t j = i; j < pieces.size(); ++j) {
      // a_i + l b_i = -(a_j + l b_j): includes each piece's own zero (i == j).
      const double den_opp = pieces[i].slope + pieces[j].slope;
      if (den_opp != 0.0) candidates.push_back(-(pieces[i].base + pieces[j].base) / den_opp);
      if (j > i) {
        const double den_same = pieces[i].slope - pieces[j].slope;
        if (den_same != 0.0)
          candidates.push_back((pieces[j].base - pieces[i].base) / den_same);
      }
    }
  }
  std::sort(candidates.begin(), candidates.end());

  ProfileMinimum best{candidates.front(), profile_value(pieces, candidates.front())};
  for (std::size_t k = 1; k < candidates.size(); ++k) {
    const double value = profile_value(pieces, candidates[k]);
    if (value < best.value) best = {candidates[k], value};
  }
  return best;
}

/// Birkhoff-James orthogonality in the usual operator norm, decided through
/// the exact profile minimum. The zero direction is trivially orthogonal.
inline bool is_operator_orthogonal(const Operator& T, const Operator& A) {
  const double tol = T.space->tolerance;
  const double op_value = operator_norm(T).value;
  if (op_value <= tol) throw Error(ErrorCode::ZeroOperator, "operator norm vanishes");
  if (max_abs(A.entries) <= tol) return true;
  return lambda_profile_min(T, A, NormKind::opnorm).value >= op_value - tol;
}

}  // namespace nuradius

#endif  // NURADIUS_ORTHOGONALITY_HPP
