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

#ifndef NURADIUS_IO_HPP
#define NURADIUS_IO_HPP

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "nuradius/error.hpp"
#include "nuradius/fixtures.hpp"
#include "nuradius/linalg.hpp"
#include "nuradius/operator_core.hpp"
#include "nuradius/orthogonality.hpp"
#include "nuradius/polytope_space.hpp"
#include "nuradius/smoothness.hpp"

namespace nuradius {

using Json = nlohmann::ordered_json;

namespace detail {

inline const Json& require_field(const Json& j, const char* field) {
  if (!j.contains(field))
    throw Error(ErrorCode::ParseError, std::string("missing field '") + field + "'");
  return j.at(field);
}

inline std::vector<Vec> vector_list_from_json(const Json& j, const char* field, int dim) {
  if (!j.is_array())
    throw Error(ErrorCode::ParseError, std::string("field '") + field + "' must be an array");
  std::vector<Vec> out;
  for (const Json& row : j) {
    if (!row.is_array() || static_cast<int>(row.size()) != dim)
      throw Error(ErrorCode::ParseError,
                  std::string("field '") + field + "' must contain arrays of length dim");
    Vec v;
    for (const Json& x : row) {
      if (!x.is_number())
        throw Error(ErrorCode::ParseError,
                    std::string("field '") + field + "' must contain numbers");
      v.push_back(x.get<double>());
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace detail

inline Json parse_json(const std::string& text, const std::string& origin) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded())
    throw Error(ErrorCode::ParseError, "invalid JSON in " + origin);
  return j;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Space file: {"dim": n, "vertices": [[...]], "facets": [[...]]?,
/// "tolerance": eps?, "symmetric": bool?}. With "symmetric": true the file
/// lists one representative per antipodal pair and the loader mirrors them.
/// Missing facets are filled by dual_from_vertices.
inline PolyhedralSpace space_from_json(const Json& j,
                                       std::optional<double> tolerance_override = {}) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "space document must be an object");
  const Json& dim_field = detail::require_field(j, "dim");
  if (!dim_field.is_number_integer() || dim_field.get<int>() <= 0)
    throw Error(ErrorCode::ParseError, "field 'dim' must be a positive integer");
  const int dim = dim_field.get<int>();

  double tolerance = 1e-9;
  if (j.contains("tolerance")) {
    if (!j.at("tolerance").is_number() || j.at("tolerance").get<double>() <= 0.0)
      throw Error(ErrorCode::ParseError, "field 'tolerance' must be a positive number");
    tolerance = j.at("tolerance").get<double>();
  }
  if (tolerance_override) tolerance = *tolerance_override;

  bool symmetric = false;
  if (j.contains("symmetric")) {
    if (!j.at("symmetric").is_boolean())
      throw Error(ErrorCode::ParseError, "field 'symmetric' must be a boolean");
    symmetric = j.at("symmetric").get<bool>();
  }

  auto vertices = detail::vector_list_from_json(detail::require_field(j, "vertices"),
                                                "vertices", dim);
  if (symmetric) {
    const std::size_t count = vertices.size();
    for (std::size_t i = 0; i < count; ++i) vertices.push_back(negated(vertices[i]));
  }

  if (j.contains("facets")) {
    auto facets = detail::vector_list_from_json(j.at("facets"), "facets", dim);
    if (symmetric) {
      const std::size_t count = facets.size();
      for (std::size_t i = 0; i < count; ++i) facets.push_back(negated(facets[i]));
    }
    return make_space(dim, std::move(vertices), std::move(facets), tolerance);
  }
  return space_from_vertices(dim, std::move(vertices), tolerance);
}

inline Json space_to_json(const PolyhedralSpace& space) {
  Json j;
  j["dim"] = space.dim;
  j["vertices"] = space.vertices;
  j["facets"] = space.facets;
  j["tolerance"] = space.tolerance;
  return j;
}

/// Resolves a builtin space name or loads a space file.
inline PolyhedralSpace load_space(const std::string& name_or_path,
                                  std::optional<double> tolerance_override = {}) {
  if (auto builtin = builtin_space(name_or_path, tolerance_override.value_or(1e-9)))
    return std::move(*builtin);
  return space_from_json(parse_json(read_file(name_or_path), name_or_path),
                         tolerance_override);
}

/// Operator file: {"matrix": [[row], ...]}.
inline Mat matrix_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "operator document must be an object");
  const Json& rows = detail::require_field(j, "matrix");
  if (!rows.is_array() || rows.empty())
    throw Error(ErrorCode::ParseError, "field 'matrix' must be a non-empty array of rows");
  const int n = static_cast<int>(rows.size());
  Mat m(n, static_cast<int>(rows.front().size()));
  for (int i = 0; i < n; ++i) {
    const Json& row = rows.at(i);
    if (!row.is_array() || static_cast<int>(row.size()) != m.cols)
      throw Error(ErrorCode::ParseError, "field 'matrix' must contain rows of equal length");
    for (int k = 0; k < m.cols; ++k) {
      if (!row.at(k).is_number())
        throw Error(ErrorCode::ParseError, "field 'matrix' must contain numbers");
      m(i, k) = row.at(k).get<double>();
    }
  }
  return m;
}

/// Operator source: a path to an operator file, or "fixture:<name>" for one
/// of the built-in fixture operators.
inline Mat load_operator_matrix(const std::string& source) {
  constexpr std::string_view prefix = "fixture:";
  if (source.rfind(prefix, 0) == 0) {
    const std::string name = source.substr(prefix.size());
    if (auto bundle = fixture_operator(name)) return *bundle->op;
    throw Error(ErrorCode::UnknownName, "no fixture operator named '" + name + "'");
  }
  return matrix_from_json(parse_json(read_file(source), source));
}

inline Json matrix_to_json(const Mat& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows; ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols; ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  Json j;
  j["matrix"] = std::move(rows);
  return j;
}

inline Json attainment_to_json(const AttainmentReport& report) {
  Json j;
  j["value"] = report.value;
  Json witnesses = Json::array();
  for (const Witness& w : report.witnesses) {
    Json entry;
    entry["vertex"] = w.vertex;
    if (w.facet >= 0) {
      entry["facet"] = w.facet;
      entry["signed_value"] = w.value;
    } else {
      entry["value"] = w.value;
    }
    witnesses.push_back(std::move(entry));
  }
  j["witnesses"] = std::move(witnesses);
  j["sign_classes"] = report.sign_classes;
  if (report.runner_up)
    j["runner_up"] = *report.runner_up;
  else
    j["runner_up"] = nullptr;
  return j;
}

inline Json validation_to_json(const ValidationReport& report) {
  Json j;
  j["valid"] = report.valid();
  j["vertex_count"] = report.vertex_count;
  j["facet_count"] = report.facet_count;
  j["min_facets_per_vertex"] = report.min_facets_per_vertex;
  Json violations = Json::array();
  for (const Violation& v : report.violations) {
    Json entry;
    entry["invariant"] = invariant_name(v.invariant);
    if (v.vertex >= 0) entry["vertex"] = v.vertex;
    if (v.facet >= 0) entry["facet"] = v.facet;
    entry["detail"] = v.detail;
    violations.push_back(std::move(entry));
  }
  j["violations"] = std::move(violations);
  return j;
}

inline Json certificate_to_json(const OrthogonalityCertificate& cert) {
  Json pairs = Json::array();
  for (const ExtremePair& p : cert.pairs) {
    Json entry;
    entry["vertex"] = p.vertex;
    entry["facet"] = p.facet;
    pairs.push_back(std::move(entry));
  }
  Json j;
  j["pairs"] = std::move(pairs);
  j["weights"] = cert.weights;
  j["d_values"] = cert.d_values;
  return j;
}

inline Json smoothness_to_json(const SmoothnessReport& report) {
  Json j;
  j["operator_smooth"] = report.operator_smooth;
  j["nu_smooth"] = report.nu_smooth;
  j["op_value"] = report.op_value;
  j["w_value"] = report.w_value;
  j["operator_norm"] = attainment_to_json(report.op_report);
  j["numerical_radius"] = attainment_to_json(report.w_report);
  if (report.unique_attaining_vertex >= 0) {
    j["unique_attaining_vertex"] = report.unique_attaining_vertex;
    j["image_point_smooth"] = report.image_point_smooth;
  }
  return j;
}

}  // namespace nuradius

#endif  // NURADIUS_IO_HPP
