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

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "nuradius/fixtures.hpp"
#include "nuradius/polytope_space.hpp"
#include "nuradius/random.hpp"
#include "oracle_support.hpp"

using namespace nuradius;
namespace oracle = nuradius::testing;

namespace {

std::vector<PolyhedralSpace> all_builtin_spaces() {
  std::vector<PolyhedralSpace> spaces;
  spaces.push_back(hexagon_space());
  spaces.push_back(hexagonal_prism_space());
  for (int n = 2; n <= 4; ++n) {
    spaces.push_back(linf_space(n));
    spaces.push_back(l1_space(n));
  }
  return spaces;
}

bool same_functional(const Vec& a, const Vec& b, double tol) {
  return max_abs(vsub(a, b)) <= tol;
}

bool contains_functional(const std::vector<Vec>& list, const Vec& f, double tol) {
  return std::any_of(list.begin(), list.end(),
                     [&](const Vec& g) { return same_functional(f, g, tol); });
}

}  // namespace

TEST_CASE("hexagon norm matches the fixture geometry") {
  const auto space = hexagon_space();
  CHECK(norm(space, {1.0, 0.0}) == Catch::Approx(1.0).margin(1e-12));
  CHECK(norm(space, {0.0, 0.0}) == 0.0);
  // u = (0, sqrt3/2) lies on the top edge.
  const Vec u{0.0, kHalfSqrt3};
  CHECK(norm(space, u) == Catch::Approx(1.0).margin(1e-12));
  CHECK(norm(space, u) ==
        Catch::Approx(oracle::gauge_from_vertices(space.vertices, u)).margin(1e-9));
}

TEST_CASE("norm equals the V-representation gauge on random vectors") {
  std::mt19937_64 rng(71);
  for (const auto& space : all_builtin_spaces()) {
    for (int trial = 0; trial < 40; ++trial) {
      const Vec x = random_vector(rng, space.dim);
      const double via_facets = norm(space, x);
      const double via_gauge = oracle::gauge_from_vertices(space.vertices, x);
      CHECK(std::fabs(via_facets - via_gauge) <= 1e-8);
    }
  }
}

TEST_CASE("norm is a norm") {
  std::mt19937_64 rng(72);
  const auto space = hexagonal_prism_space();
  for (int trial = 0; trial < 200; ++trial) {
    const Vec x = random_vector(rng, 3);
    const Vec y = random_vector(rng, 3);
    const double c = 4.0 * uniform_pm1(rng);
    CHECK(norm(space, vadd(x, y)) <= norm(space, x) + norm(space, y) + 1e-12);
    CHECK(std::fabs(norm(space, scaled(x, c)) - std::fabs(c) * norm(space, x)) <= 1e-10);
    if (max_abs(x) > 1e-6) CHECK(norm(space, x) > 0.0);
  }
}

TEST_CASE("norm rejects mismatched dimensions") {
  const auto space = hexagon_space();
  REQUIRE_THROWS_AS(norm(space, {1.0, 0.0, 0.0}), Error);
}

TEST_CASE("support sets reproduce the fixture functionals") {
  const auto prism = hexagonal_prism_space();
  // x5 = (-1/2, -sqrt3/2, 1) is supported by f1 = z, f2 = -(2/sqrt3) y and
  // f3 = -x - y/sqrt3, the first three facets of the fixture.
  CHECK(support_set(prism, prism.vertices[4]) == std::vector<int>{0, 1, 2});

  const auto hexagon = hexagon_space();
  CHECK(support_set(hexagon, {1.0, 0.0}) == std::vector<int>{0, 1});
  CHECK(support_set(hexagon, {2.0, 0.0}) == std::vector<int>{0, 1});
}

TEST_CASE("support sets are homogeneous") {
  const auto space = hexagon_space();
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 100; ++trial) {
    const Vec x = random_vector(rng, 2);
    if (norm(space, x) < 1e-3) continue;
    const auto base = support_set(space, x);
    CHECK(support_set(space, scaled(x, 2.5)) == base);
    std::vector<int> negs;
    for (int j : base) negs.push_back(space.facet_negation[j]);
    std::sort(negs.begin(), negs.end());
    CHECK(support_set(space, scaled(x, -0.5)) == negs);
    CHECK(!base.empty());
  }
}

TEST_CASE("smooth points") {
  const auto hexagon = hexagon_space();
  CHECK(is_smooth_point(hexagon, {0.0, kHalfSqrt3}));
  CHECK_FALSE(is_smooth_point(hexagon, {1.0, 0.0}));

  const auto prism = hexagonal_prism_space();
  CHECK_FALSE(is_smooth_point(prism, {-1.0, 0.0, 0.0}));

  REQUIRE_THROWS_AS(support_set(hexagon, {0.0, 0.0}), Error);
  try {
    is_smooth_point(hexagon, {0.0, 0.0});
    FAIL("expected ZeroVector");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroVector);
  }
}

TEST_CASE("dual pairs validate their invariants") {
  const auto space = hexagon_space();
  const auto pair = make_dual_pair(space, {1.0, 0.0}, space.facets[0]);
  CHECK(pair.pairing == Catch::Approx(1.0).margin(1e-12));
  // Not norm-one point.
  REQUIRE_THROWS_AS(make_dual_pair(space, {2.0, 0.0}, space.facets[0]), Error);
  // Functional does not attain at the point.
  REQUIRE_THROWS_AS(make_dual_pair(space, {-1.0, 0.0}, space.facets[0]), Error);
}

TEST_CASE("validate accepts the builtins and reports their stats") {
  const auto hexagon_report = validate(hexagon_space());
  REQUIRE(hexagon_report.valid());
  CHECK(hexagon_report.vertex_count == 6);
  CHECK(hexagon_report.facet_count == 6);
  CHECK(hexagon_report.min_facets_per_vertex == 2);

  const auto prism_report = validate(hexagonal_prism_space());
  REQUIRE(prism_report.valid());
  CHECK(prism_report.vertex_count == 12);
  CHECK(prism_report.facet_count == 8);
  CHECK(prism_report.min_facets_per_vertex == 3);

  for (const auto& space : all_builtin_spaces()) {
    const auto report = validate(space);
    CHECK(report.valid());
    CHECK(report.min_facets_per_vertex >= space.dim);
  }
}

TEST_CASE("validate flags the hexagon with a facet pair removed") {
  auto space = hexagon_space();
  std::vector<Vec> facets = space.facets;
  facets.erase(facets.begin() + 5);  // -f3
  facets.erase(facets.begin() + 2);  // f3
  const auto corrupted = make_space(2, space.vertices, facets);
  const auto report = validate(corrupted);
  REQUIRE_FALSE(report.valid());
  // x2 and x3 (and their negatives) lose one of their two supporting facets.
  bool names_x2 = false;
  for (const auto& violation : report.violations) {
    CHECK(violation.invariant == Invariant::VertexFacetCount);
    if (violation.vertex == 1) names_x2 = true;
  }
  CHECK(names_x2);
  CHECK(report.min_facets_per_vertex == 1);
}

TEST_CASE("validate flags a vertex pulled inside the sphere") {
  auto space = hexagon_space();
  std::vector<Vec> vertices = space.vertices;
  vertices[1] = scaled(vertices[1], 0.9);
  vertices[4] = scaled(vertices[4], 0.9);
  const auto corrupted = make_space(2, vertices, space.facets);
  const auto report = validate(corrupted);
  REQUIRE_FALSE(report.valid());
  bool consistency_at_x2 = false;
  for (const auto& violation : report.violations)
    if (violation.invariant == Invariant::Consistency && violation.vertex == 1)
      consistency_at_x2 = true;
  CHECK(consistency_at_x2);
}

TEST_CASE("validate flags an asymmetric vertex list") {
  auto space = hexagon_space();
  std::vector<Vec> vertices = space.vertices;
  vertices.pop_back();
  const auto report = validate(make_space(2, vertices, space.facets));
  REQUIRE_FALSE(report.valid());
  bool symmetry = false;
  for (const auto& violation : report.violations)
    if (violation.invariant == Invariant::Symmetry) symmetry = true;
  CHECK(symmetry);
}

TEST_CASE("dual_from_vertices recovers the hexagon functionals") {
  const auto space = hexagon_space();
  const auto facets = dual_from_vertices(space.vertices);
  REQUIRE(facets.size() == 6);
  for (const Vec& expected : space.facets)
    CHECK(contains_functional(facets, expected, 1e-9));
}

TEST_CASE("dual_from_vertices on the square yields the coordinate functionals") {
  const std::vector<Vec> square = {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
  const auto facets = dual_from_vertices(square);
  REQUIRE(facets.size() == 4);
  for (const Vec& expected : {Vec{1, 0}, Vec{0, 1}, Vec{-1, 0}, Vec{0, -1}})
    CHECK(contains_functional(facets, expected, 1e-9));
}

TEST_CASE("dual_from_vertices recovers the prism facets") {
  const auto space = hexagonal_prism_space();
  const auto facets = dual_from_vertices(space.vertices);
  REQUIRE(facets.size() == 8);
  for (const Vec& expected : space.facets) CHECK(contains_functional(facets, expected, 1e-9));
  // Cross-check by direct evaluation against all vertices.
  const auto rebuilt = make_space(3, space.vertices, facets);
  CHECK(validate(rebuilt).valid());
}

TEST_CASE("dual_from_vertices rejects degenerate and oversized input") {
  // Rank-deficient: all vertices on a line.
  REQUIRE_THROWS_AS(dual_from_vertices({{1, 0}, {-1, 0}}), Error);
  try {
    dual_from_vertices({{1, 0}, {-1, 0}});
    FAIL("expected DegenerateBall");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegenerateBall);
  }

  // Dimension above the enumeration limit.
  std::vector<Vec> dim5;
  for (int sign = 0; sign < 2; ++sign)
    for (int k = 0; k < 5; ++k) {
      Vec v(5, 0.0);
      v[k] = sign ? -1.0 : 1.0;
      dim5.push_back(v);
    }
  try {
    dual_from_vertices(dim5);
    FAIL("expected EnumerationTooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EnumerationTooLarge);
  }

  // Vertex count above the enumeration limit.
  std::vector<Vec> many;
  for (int k = 0; k < 65; ++k) {
    const double angle = 3.14159265358979 * k / 65.0;
    many.push_back({std::cos(angle), std::sin(angle)});
    many.push_back({-std::cos(angle), -std::sin(angle)});
  }
  REQUIRE_THROWS_AS(dual_from_vertices(many), Error);
}

TEST_CASE("dual_from_vertices then validate succeeds on transformed builtins") {
  std::mt19937_64 rng(74);
  const auto random_invertible = [&](int n) {
    for (;;) {
      const Mat l = random_matrix(rng, n);
      std::vector<Vec> rows;
      for (int i = 0; i < n; ++i) {
        Vec row(n);
        for (int j = 0; j < n; ++j) row[j] = l(i, j);
        rows.push_back(std::move(row));
      }
      if (rank_of(rows, 1e-3) == n) return l;
    }
  };
  for (int trial = 0; trial < 10; ++trial) {
    for (int n = 2; n <= 3; ++n) {
      // A random invertible image of a builtin ball keeps every vertex
      // extreme, so the vertex list stays valid.
      const Mat l = random_invertible(n);
      const auto base = n == 2 ? l1_space(2) : linf_space(3);
      std::vector<Vec> vertices;
      for (const Vec& v : base.vertices) vertices.push_back(matvec(l, v));
      const auto space = space_from_vertices(n, vertices);
      CHECK(validate(space).valid());
    }
  }
}

TEST_CASE("duality consistency holds on every builtin") {
  for (const auto& space : all_builtin_spaces()) {
    for (const Vec& f : space.facets) {
      double best = -1e300;
      for (const Vec& v : space.vertices) {
        CHECK(std::fabs(dot(f, v)) <= 1.0 + space.tolerance);
        best = std::max(best, dot(f, v));
      }
      CHECK(best == Catch::Approx(1.0).margin(1e-9));
    }
  }
}
