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

#ifndef NURADIUS_SMOOTHNESS_HPP
#define NURADIUS_SMOOTHNESS_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "nuradius/error.hpp"
#include "nuradius/linalg.hpp"
#include "nuradius/operator_core.hpp"
#include "nuradius/orthogonality.hpp"
#include "nuradius/polytope_space.hpp"
#include "nuradius/random.hpp"

namespace nuradius {

namespace detail {

inline void require_nonzero(const Operator& T) {
  if (max_abs(T.entries) <= T.space->tolerance)
    throw Error(ErrorCode::ZeroOperator, "smoothness of the zero operator");
}

}  // namespace detail

/// T is nu-smooth iff its numerical radius is attained at a single sign
/// class of extreme dual pairs. A non-extreme attaining pair would force two
/// extreme witnesses inside one face, and no face contains antipodal points,
/// so the extreme reduction decides the full attainment set.
inline bool is_nu_smooth(const Operator& T) {
  detail::require_nonzero(T);
  return numerical_radius(T).sign_classes.size() == 1;
}

/// T is smooth in the operator norm iff it attains its norm at a single sign
/// class of vertices {±x0} and Tx0 is a smooth point of the sphere.
inline bool is_operator_smooth(const Operator& T) {
  detail::require_nonzero(T);
  const AttainmentReport report = operator_norm(T);
  if (report.sign_classes.size() != 1) return false;
  const int v0 = report.witnesses[report.sign_classes[0][0]].vertex;
  return is_smooth_point(*T.space, matvec(T.entries, T.space->vertices[v0]));
}

/// Both classifications with their evidence: the attainment reports, the
/// unique attaining vertex (when there is one) and the smoothness of its
/// image.
struct SmoothnessReport {
  bool operator_smooth = false;
  bool nu_smooth = false;
  double op_value = 0.0;
  double w_value = 0.0;
  AttainmentReport op_report;
  AttainmentReport w_report;
  int unique_attaining_vertex = -1;  // set when op_report has one sign class
  bool image_point_smooth = false;
};

inline SmoothnessReport classify(const Operator& T) {
  detail::require_nonzero(T);
  SmoothnessReport report;
  report.op_report = operator_norm(T);
  report.w_report = numerical_radius(T);
  report.op_value = report.op_report.value;
  report.w_value = report.w_report.value;
  report.nu_smooth = report.w_report.sign_classes.size() == 1;
  if (report.op_report.sign_classes.size() == 1) {
    report.unique_attaining_vertex =
        report.op_report.witnesses[report.op_report.sign_classes[0][0]].vertex;
    report.image_point_smooth = is_smooth_point(
        *T.space, matvec(T.entries, T.space->vertices[report.unique_attaining_vertex]));
  }
  report.operator_smooth =
      report.op_report.sign_classes.size() == 1 && report.image_point_smooth;
  return report;
}

/// Randomized right-additivity probe, straight from the definition of
/// nu-smoothness. Each trial draws two operators orthogonal to T (random
/// matrices projected so their d-value vanishes at a chosen radius witness)
/// and checks whether T stays orthogonal to their sum. One-sided: `false` is
/// conclusive, `true` only means no violation was found in `trials` attempts.
inline bool nu_smooth_by_definition(const Operator& T, int trials, std::uint64_t seed) {
  detail::require_nonzero(T);
  const PolyhedralSpace& space = *T.space;
  const AttainmentReport radius = numerical_radius(T);
  const std::size_t classes = radius.sign_classes.size();

  std::mt19937_64 rng(seed);
  const auto project_at = [&](const Mat& raw, std::size_t class_index) {
    const Witness& w = radius.witnesses[radius.sign_classes[class_index][0]];
    const Vec& v = space.vertices[w.vertex];
    const Vec& f = space.facets[w.facet];
    // Subtract f(raw v) * (v x f): afterwards f(. v) vanishes, so the d-value
    // at this witness is zero and T is w-orthogonal to the result.
    const double c = dot(f, matvec(raw, v));
    return raw + (-c * outer(v, f));
  };

  for (int trial = 0; trial < trials; ++trial) {
    const std::size_t ka = rng() % classes;
    const std::size_t kb = rng() % classes;
    const Operator A = make_operator(space, project_at(random_matrix(rng, space.dim), ka));
    const Operator B = make_operator(space, project_at(random_matrix(rng, space.dim), kb));
    if (!is_w_orthogonal(T, A).orthogonal || !is_w_orthogonal(T, B).orthogonal) continue;
    if (!is_w_orthogonal(T, make_operator(space, A.entries + B.entries)).orthogonal)
      return false;
  }
  return true;
}

}  // namespace nuradius

#endif  // NURADIUS_SMOOTHNESS_HPP
