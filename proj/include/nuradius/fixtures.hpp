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

#ifndef NURADIUS_FIXTURES_HPP
#define NURADIUS_FIXTURES_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nuradius/error.hpp"
#include "nuradius/linalg.hpp"
#include "nuradius/polytope_space.hpp"

namespace nuradius {

// Full-precision double literals, committed once so golden outputs are
// byte-stable.
inline constexpr double kSqrt3 = 1.7320508075688772;       // sqrt(3)
inline constexpr double kHalfSqrt3 = 0.8660254037844386;   // sqrt(3)/2
inline constexpr double kInvSqrt3 = 0.5773502691896258;    // 1/sqrt(3)
inline constexpr double kTwoInvSqrt3 = 1.1547005383792517; // 2/sqrt(3)
inline constexpr double kThirdSqrt3 = 0.5773502691896257;  // sqrt(3)/3
inline constexpr double kThird = 0.3333333333333333;       // 1/3

/// Regular hexagon in the plane: vertices x1=(1,0), x2=(1/2,s3/2),
/// x3=(-1/2,s3/2) and their negatives; facet functionals f1=x-y/s3,
/// f2=x+y/s3, f3=2y/s3 and their negatives. Vertex order [x1,x2,x3,-x1,
/// -x2,-x3]; facet order [f1,f2,f3,-f1,-f2,-f3].
inline PolyhedralSpace hexagon_space(double tolerance = 1e-9) {
  std::vector<Vec> vertices = {
      {1.0, 0.0},  {0.5, kHalfSqrt3},  {-0.5, kHalfSqrt3},
      {-1.0, 0.0}, {-0.5, -kHalfSqrt3}, {0.5, -kHalfSqrt3},
  };
  std::vector<Vec> facets = {
      {1.0, -kInvSqrt3}, {1.0, kInvSqrt3},  {0.0, kTwoInvSqrt3},
      {-1.0, kInvSqrt3}, {-1.0, -kInvSqrt3}, {0.0, -kTwoInvSqrt3},
  };
  return make_space(2, std::move(vertices), std::move(facets), tolerance);
}

/// Hexagonal prism: the hexagon summed with the reals under the sup norm.
/// Vertices x1..x6 at height +1 and their negatives at height -1; facets are
/// the two caps and six lifted hexagon functionals. Facet order starts with
/// f1=z, f2=-(2/s3)y, f3=-x-y/s3 (the three supporting x5), then the
/// remaining side facet, then the four negatives in the same order.
inline PolyhedralSpace hexagonal_prism_space(double tolerance = 1e-9) {
  std::vector<Vec> vertices = {
      {1.0, 0.0, 1.0},           {0.5, kHalfSqrt3, 1.0},   {-0.5, kHalfSqrt3, 1.0},
      {-1.0, 0.0, 1.0},          {-0.5, -kHalfSqrt3, 1.0}, {0.5, -kHalfSqrt3, 1.0},
      {-1.0, 0.0, -1.0},         {-0.5, -kHalfSqrt3, -1.0}, {0.5, -kHalfSqrt3, -1.0},
      {1.0, 0.0, -1.0},          {0.5, kHalfSqrt3, -1.0},  {-0.5, kHalfSqrt3, -1.0},
  };
  std::vector<Vec> facets = {
      {0.0, 0.0, 1.0},            {0.0, -kTwoInvSqrt3, 0.0}, {-1.0, -kInvSqrt3, 0.0},
      {1.0, -kInvSqrt3, 0.0},     {0.0, 0.0, -1.0},          {0.0, kTwoInvSqrt3, 0.0},
      {1.0, kInvSqrt3, 0.0},      {-1.0, kInvSqrt3, 0.0},
  };
  return make_space(3, std::move(vertices), std::move(facets), tolerance);
}

/// R^n with the sup norm: vertices are all sign vectors, facets the signed
/// coordinate functionals. Supported for n in [1, 4].
inline PolyhedralSpace linf_space(int n, double tolerance = 1e-9) {
  if (n < 1 || n > 4)
    throw Error(ErrorCode::InvalidParameter, "linf space supported for n in [1,4]");
  std::vector<Vec> vertices;
  for (int bits = 0; bits < (1 << n); ++bits) {
    Vec v(n);
    for (int k = 0; k < n; ++k) v[k] = (bits >> k) & 1 ? -1.0 : 1.0;
    vertices.push_back(std::move(v));
  }
  std::vector<Vec> facets;
  for (int sign = 0; sign < 2; ++sign)
    for (int k = 0; k < n; ++k) {
      Vec f(n, 0.0);
      f[k] = sign ? -1.0 : 1.0;
      facets.push_back(std::move(f));
    }
  return make_space(n, std::move(vertices), std::move(facets), tolerance);
}

/// R^n with the 1-norm: the cross-polytope, dual of linf_space.
inline PolyhedralSpace l1_space(int n, double tolerance = 1e-9) {
  if (n < 1 || n > 4)
    throw Error(ErrorCode::InvalidParameter, "l1 space supported for n in [1,4]");
  std::vector<Vec> vertices;
  for (int sign = 0; sign < 2; ++sign)
    for (int k = 0; k < n; ++k) {
      Vec v(n, 0.0);
      v[k] = sign ? -1.0 : 1.0;
      vertices.push_back(std::move(v));
    }
  std::vector<Vec> facets;
  for (int bits = 0; bits < (1 << n); ++bits) {
    Vec f(n);
    for (int k = 0; k < n; ++k) f[k] = (bits >> k) & 1 ? -1.0 : 1.0;
    facets.push_back(std::move(f));
  }
  return make_space(n, std::move(vertices), std::move(facets), tolerance);
}

/// Rank-one map (x,y) -> x * (0, s3/2) on the hexagon.
inline Mat hexagon_T_matrix() {
  return Mat::from_rows({{0.0, 0.0}, {kHalfSqrt3, 0.0}});
}

/// Rank-one map z -> g(z) * (-1,0,0) on the prism, g = (x + s3*y - z)/3.
inline Mat prism_T_matrix() {
  return Mat::from_rows({{-kThird, -kThirdSqrt3, kThird},
                         {0.0, 0.0, 0.0},
                         {0.0, 0.0, 0.0}});
}

inline std::optional<PolyhedralSpace> builtin_space(std::string_view name,
                                                    double tolerance = 1e-9) {
  if (name == "hexagon") return hexagon_space(tolerance);
  if (name == "hexagonal-prism") return hexagonal_prism_space(tolerance);
  for (int n = 2; n <= 4; ++n) {
    if (name == "linf-" + std::to_string(n)) return linf_space(n, tolerance);
    if (name == "l1-" + std::to_string(n)) return l1_space(n, tolerance);
  }
  return std::nullopt;
}

inline std::vector<std::string> builtin_space_names() {
  return {"hexagon", "hexagonal-prism", "linf-2", "linf-3", "linf-4",
          "l1-2", "l1-3", "l1-4"};
}

/// A named fixture: a space, optionally together with an operator acting on
/// it.
struct FixtureBundle {
  std::string name;
  std::string space_name;
  std::optional<Mat> op;
};

/// The four fixtures used throughout the tests: the two spaces and the two
/// rank-one operators acting on them.
inline std::vector<FixtureBundle> fixtures() {
  return {
      {"hexagon", "hexagon", std::nullopt},
      {"hexagonal-prism", "hexagonal-prism", std::nullopt},
      {"prism-T", "hexagonal-prism", prism_T_matrix()},
      {"hexagon-T", "hexagon", hexagon_T_matrix()},
  };
}

inline std::optional<FixtureBundle> fixture_operator(std::string_view name) {
  for (auto& bundle : fixtures())
    if (bundle.name == name && bundle.op.has_value()) return bundle;
  return std::nullopt;
}

}  // namespace nuradius

#endif  // NURADIUS_FIXTURES_HPP
