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

#ifndef NURADIUS_OPERATOR_CORE_HPP
#define NURADIUS_OPERATOR_CORE_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "nuradius/error.hpp"
#include "nuradius/linalg.hpp"
#include "nuradius/polytope_space.hpp"

namespace nuradius {

/// A linear operator on a polyhedral space, stored as a dense matrix in the
/// standard basis. Holds a non-owning pointer to its space; the space must
/// outlive the operator.
struct Operator {
  const PolyhedralSpace* space = nullptr;
  Mat entries;
};

inline Operator make_operator(const PolyhedralSpace& space, Mat entries) {
  if (!entries.square() || entries.rows != space.dim)
    throw Error(ErrorCode::DimensionMismatch,
                "operator matrix must be dim x dim for its space");
  return Operator{&space, std::move(entries)};
}

/// A vertex/facet index pair (x, x*) with x*(x) = 1.
struct ExtremePair {
  int vertex = -1;
  int facet = -1;
  friend bool operator==(const ExtremePair&, const ExtremePair&) = default;
};

/// All extreme dual pairs of the space, in (vertex, facet) index order.
inline std::vector<ExtremePair> extreme_pairs(const PolyhedralSpace& space) {
  std::vector<ExtremePair> pairs;
  for (std::size_t i = 0; i < space.vertices.size(); ++i)
    for (std::size_t j = 0; j < space.facets.size(); ++j)
      if (std::fabs(dot(space.facets[j], space.vertices[i]) - 1.0) <= space.tolerance)
        pairs.push_back({static_cast<int>(i), static_cast<int>(j)});
  return pairs;
}

/// An attainment witness. For numerical-radius reports `facet` is the paired
/// functional index and `value` the signed evaluation x*(Tx); for
/// operator-norm reports `facet` is -1 and `value` = ||Tx|| >= 0.
struct Witness {
  int vertex = -1;
  int facet = -1;
  double value = 0.0;
};

/// A norm value with every extreme witness attaining it. `sign_classes`
/// groups witness indices under (x, x*) ~ (-x, -x*) (resp. x ~ -x);
/// `runner_up` is the largest non-attaining evaluation, when one exists.
struct AttainmentReport {
  double value = 0.0;
  std::vector<Witness> witnesses;
  std::vector<std::vector<std::size_t>> sign_classes;
  std::optional<double> runner_up;
};

namespace detail {

inline void group_sign_classes(const PolyhedralSpace& space, AttainmentReport& report) {
  report.sign_classes.clear();
  std::vector<bool> assigned(report.witnesses.size(), false);
  for (std::size_t i = 0; i < report.witnesses.size(); ++i) {
    if (assigned[i]) continue;
    const Witness& w = report.witnesses[i];
    const int nv = space.vertex_negation[w.vertex];
    const int nf = w.facet >= 0 ? space.facet_negation[w.facet] : -1;
    std::vector<std::size_t> members{i};
    assigned[i] = true;
    for (std::size_t j = i + 1; j < report.witnesses.size(); ++j) {
      if (assigned[j]) continue;
      const Witness& u = report.witnesses[j];
      if (u.vertex == nv && u.facet == nf) {
        members.push_back(j);
        assigned[j] = true;
      }
    }
    report.sign_classes.push_back(std::move(members));
  }
}

}  // namespace detail

/// Operator norm: max over unit-ball extreme points of ||Tx||, with argmax
/// vertices as witnesses. The maximum over the whole ball is attained at an
/// extreme point, so this is exact.
inline AttainmentReport operator_norm(const Operator& T) {
  const PolyhedralSpace& space = *T.space;
  const double tol = space.tolerance;
  std::vector<double> evals(space.vertices.size());
  double best = 0.0;
  for (std::size_t i = 0; i < space.vertices.size(); ++i) {
    evals[i] = norm(space, matvec(T.entries, space.vertices[i]));
    best = std::max(best, evals[i]);
  }
  AttainmentReport report;
  report.value = best;
  std::optional<double> runner;
  for (std::size_t i = 0; i < evals.size(); ++i) {
    if (evals[i] >= best - tol) {
      report.witnesses.push_back({static_cast<int>(i), -1, evals[i]});
    } else if (!runner || evals[i] > *runner) {
      runner = evals[i];
    }
  }
  report.runner_up = runner;
  detail::group_sign_classes(space, report);
  return report;
}

/// Numerical radius: max of |x*(Tx)| over the extreme dual pairs, which
/// realizes the supremum over all of J. Witnesses carry the signed value.
inline AttainmentReport numerical_radius(const Operator& T) {
  const PolyhedralSpace& space = *T.space;
  const double tol = space.tolerance;
  const auto pairs = extreme_pairs(space);
  std::vector<double> evals(pairs.size());
  double best = 0.0;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    evals[k] = dot(space.facets[pairs[k].facet],
                   matvec(T.entries, space.vertices[pairs[k].vertex]));
    best = std::max(best, std::fabs(evals[k]));
  }
  AttainmentReport report;
  report.value = best;
  std::optional<double> runner;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const double mag = std::fabs(evals[k]);
    if (mag >= best - tol) {
      report.witnesses.push_back({pairs[k].vertex, pairs[k].facet, evals[k]});
    } else if (!runner || mag > *runner) {
      runner = mag;
    }
  }
  report.runner_up = runner;
  detail::group_sign_classes(space, report);
  return report;
}

/// Property behind the definiteness of the numerical radius on polyhedral
/// spaces: vanishing radius implies the zero operator. Always true on a
/// valid space.
inline bool w_definiteness_check(const PolyhedralSpace& space, const Operator& T) {
  const double radius = numerical_radius(T).value;
  if (radius > space.tolerance) return true;
  return max_abs(T.entries) <= space.tolerance;
}

}  // namespace nuradius

#endif  // NURADIUS_OPERATOR_CORE_HPP
