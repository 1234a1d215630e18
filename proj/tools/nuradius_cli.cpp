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

#include <cstdint>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "nuradius/io.hpp"
#include "nuradius/nuradius.hpp"

namespace {

using namespace nuradius;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitInvalid = 2;
constexpr std::uint64_t kDefaultSeed = 20250915;

struct CommonOptions {
  std::string space;
  std::vector<std::string> operators;
  std::string format = "json";
  std::optional<double> tolerance;
};

std::optional<double> tolerance_from_env() {
  const char* raw = std::getenv("NURADIUS_TOLERANCE");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  char* end = nullptr;
  const double value = std::strtod(raw, &end);
  if (end == raw || *end != '\0' || !(value > 0.0))
    throw Error(ErrorCode::InvalidParameter,
                "NURADIUS_TOLERANCE must be a positive number");
  return value;
}

std::optional<double> effective_tolerance(const CommonOptions& opts) {
  if (opts.tolerance) {
    if (*opts.tolerance <= 0.0)
      throw Error(ErrorCode::InvalidParameter, "--tolerance must be positive");
    return opts.tolerance;
  }
  return tolerance_from_env();
}

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

// Loads the space and refuses to continue when it fails validation; every
// computation below assumes a valid space.
PolyhedralSpace load_valid_space(const CommonOptions& opts, int& exit_code) {
  PolyhedralSpace space = load_space(opts.space, effective_tolerance(opts));
  const auto report = validate(space);
  if (!report.valid()) {
    std::cerr << validation_to_json(report).dump(2) << '\n';
    exit_code = kExitInvalid;
  }
  return space;
}

std::string witness_line(const Witness& w) {
  std::ostringstream out;
  out << "vertex " << w.vertex;
  if (w.facet >= 0) out << ", facet " << w.facet;
  out << ", value " << std::setprecision(17) << w.value;
  return out.str();
}

void print_attainment_text(const std::string& label, const AttainmentReport& report) {
  std::cout << label << " = " << std::setprecision(17) << report.value << '\n';
  std::cout << "sign classes: " << report.sign_classes.size() << '\n';
  for (const Witness& w : report.witnesses) std::cout << "  " << witness_line(w) << '\n';
  if (report.runner_up)
    std::cout << "runner up: " << std::setprecision(17) << *report.runner_up << '\n';
}

int run_validate(const CommonOptions& opts) {
  int exit_code = kExitOk;
  PolyhedralSpace space = load_space(opts.space, effective_tolerance(opts));
  const auto report = validate(space);
  if (opts.format == "json") {
    emit(validation_to_json(report));
  } else {
    std::cout << report.vertex_count << " vertices, " << report.facet_count
              << " facets, min facet count per vertex = " << report.min_facets_per_vertex
              << '\n';
    for (const auto& v : report.violations) {
      std::cout << "violation: " << invariant_name(v.invariant);
      if (v.vertex >= 0) std::cout << " at vertex " << v.vertex;
      if (v.facet >= 0) std::cout << " at facet " << v.facet;
      std::cout << " (" << v.detail << ")\n";
    }
    std::cout << (report.valid() ? "valid" : "invalid") << '\n';
  }
  if (!report.valid()) exit_code = kExitInvalid;
  return exit_code;
}

int run_attainment(const CommonOptions& opts, bool with_op, bool with_w) {
  int exit_code = kExitOk;
  const PolyhedralSpace space = load_valid_space(opts, exit_code);
  if (exit_code != kExitOk) return exit_code;
  const Operator T = make_operator(space, load_operator_matrix(opts.operators.at(0)));

  std::optional<AttainmentReport> op_report, w_report;
  if (with_op) op_report = operator_norm(T);
  if (with_w) w_report = numerical_radius(T);

  if (opts.format == "json") {
    Json j;
    if (op_report) j["operator_norm"] = attainment_to_json(*op_report);
    if (w_report) j["numerical_radius"] = attainment_to_json(*w_report);
    if (with_op && with_w)
      j["extreme_pairs"] = static_cast<int>(extreme_pairs(space).size());
    emit(j);
  } else {
    if (op_report) print_attainment_text("operator norm", *op_report);
    if (w_report) print_attainment_text("numerical radius", *w_report);
  }
  return kExitOk;
}

int run_ortho(const CommonOptions& opts, const std::string& norm_kind) {
  int exit_code = kExitOk;
  const PolyhedralSpace space = load_valid_space(opts, exit_code);
  if (exit_code != kExitOk) return exit_code;
  const Operator T = make_operator(space, load_operator_matrix(opts.operators.at(0)));
  const Operator A = make_operator(space, load_operator_matrix(opts.operators.at(1)));

  Json j;
  j["norm_kind"] = norm_kind;
  if (norm_kind == "w") {
    const auto decision = is_w_orthogonal(T, A);
    j["orthogonal"] = decision.orthogonal;
    if (decision.certificate) j["certificate"] = certificate_to_json(*decision.certificate);
    const auto minimum = lambda_profile_min(T, A, NormKind::wnorm);
    j["min_profile"] = Json{{"lambda", minimum.lambda}, {"value", minimum.value}};
  } else {
    j["orthogonal"] = is_operator_orthogonal(T, A);
    const auto minimum = lambda_profile_min(T, A, NormKind::opnorm);
    j["min_profile"] = Json{{"lambda", minimum.lambda}, {"value", minimum.value}};
  }

  if (opts.format == "json") {
    emit(j);
  } else {
    std::cout << "norm kind: " << norm_kind << '\n'
              << "orthogonal: " << (j["orthogonal"].get<bool>() ? "true" : "false") << '\n'
              << "profile minimum: value " << std::setprecision(17)
              << j["min_profile"]["value"].get<double>() << " at lambda "
              << j["min_profile"]["lambda"].get<double>() << '\n';
  }
  return kExitOk;
}

int run_smooth(const CommonOptions& opts) {
  int exit_code = kExitOk;
  const PolyhedralSpace space = load_valid_space(opts, exit_code);
  if (exit_code != kExitOk) return exit_code;
  const Operator T = make_operator(space, load_operator_matrix(opts.operators.at(0)));
  const SmoothnessReport report = classify(T);

  if (opts.format == "json") {
    emit(smoothness_to_json(report));
  } else {
    const auto row = [](const std::string& k, const std::string& v) {
      std::cout << std::left << std::setw(22) << k << v << '\n';
    };
    std::ostringstream op_value, w_value;
    op_value << std::setprecision(17) << report.op_value;
    w_value << std::setprecision(17) << report.w_value;
    row("metric", "value");
    row("operator_norm", op_value.str());
    row("numerical_radius", w_value.str());
    row("operator_smooth", report.operator_smooth ? "true" : "false");
    row("nu_smooth", report.nu_smooth ? "true" : "false");
    row("op_sign_classes", std::to_string(report.op_report.sign_classes.size()));
    row("w_sign_classes", std::to_string(report.w_report.sign_classes.size()));
  }
  return kExitOk;
}

int run_fixtures(const CommonOptions& opts) {
  Json list = Json::array();
  for (const auto& bundle : fixtures()) {
    Json entry;
    entry["name"] = bundle.name;
    entry["space"] = bundle.space_name;
    const auto space = *builtin_space(bundle.space_name);
    entry["dim"] = space.dim;
    entry["vertices"] = static_cast<int>(space.vertices.size());
    entry["facets"] = static_cast<int>(space.facets.size());
    if (bundle.op) entry["operator"] = matrix_to_json(*bundle.op)["matrix"];
    list.push_back(std::move(entry));
  }
  if (opts.format == "json") {
    emit(list);
  } else {
    for (const auto& entry : list) {
      std::cout << entry["name"].get<std::string>() << ": space "
                << entry["space"].get<std::string>() << ", dim " << entry["dim"].get<int>()
                << ", " << entry["vertices"].get<int>() << " vertices, "
                << entry["facets"].get<int>() << " facets"
                << (entry.contains("operator") ? ", with operator" : "") << '\n';
    }
  }
  return kExitOk;
}

Vec vector_from_file(const std::string& path) {
  const Json j = parse_json(read_file(path), path);
  if (!j.is_object() || !j.contains("vector") || !j.at("vector").is_array())
    throw Error(ErrorCode::ParseError, "field 'vector' must be an array of numbers");
  Vec v;
  for (const Json& x : j.at("vector")) {
    if (!x.is_number())
      throw Error(ErrorCode::ParseError, "field 'vector' must contain numbers");
    v.push_back(x.get<double>());
  }
  return v;
}

int run_lp(double p, int dim, const std::string& mode, const std::string& matrix_path,
           const std::string& vector_path, int samples, std::uint64_t seed,
           const CommonOptions& opts) {
  const auto space = make_lp_space(dim, p, effective_tolerance(opts).value_or(1e-9));
  Json j;
  j["p"] = p;
  j["dim"] = dim;
  j["mode"] = mode;

  if (mode == "support") {
    if (vector_path.empty())
      throw Error(ErrorCode::InvalidParameter, "--mode support needs --vector");
    const Vec x = vector_from_file(vector_path);
    j["vector"] = x;
    j["support_functional"] = lp_support_functional(space, x);
  } else if (mode == "recover") {
    if (matrix_path.empty())
      throw Error(ErrorCode::InvalidParameter, "--mode recover needs --matrix");
    const Mat hidden = load_operator_matrix(matrix_path);
    if (!hidden.square() || hidden.rows != dim)
      throw Error(ErrorCode::DimensionMismatch, "matrix must be dim x dim");
    const auto oracle = [&](const Vec& x) {
      return dot(lp_support_functional(space, x, /*zero_sign=*/0.0), matvec(hidden, x));
    };
    const Mat recovered = recover_entries(space, oracle);
    double err = 0.0;
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < dim; ++c)
        err = std::max(err, std::fabs(recovered(r, c) - hidden(r, c)));
    j["recovered"] = matrix_to_json(recovered)["matrix"];
    j["max_error"] = err;
  } else if (mode == "estimate") {
    if (matrix_path.empty())
      throw Error(ErrorCode::InvalidParameter, "--mode estimate needs --matrix");
    const Mat m = load_operator_matrix(matrix_path);
    if (!m.square() || m.rows != dim)
      throw Error(ErrorCode::DimensionMismatch, "matrix must be dim x dim");
    j["samples"] = samples;
    j["seed"] = seed;
    j["estimate"] = lp_numerical_radius_estimate(space, m, samples, seed);
    j["note"] = "heuristic lower bound, not the supremum";
  } else {
    throw Error(ErrorCode::InvalidParameter, "unknown --mode '" + mode + "'");
  }

  if (opts.format == "json") {
    emit(j);
  } else {
    for (const auto& [key, value] : j.items())
      std::cout << key << ": " << value.dump() << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical radius toolkit for polyhedral Banach spaces"};
  app.require_subcommand(1);

  CommonOptions opts;
  double tolerance_flag = 0.0;
  std::string norm_kind = "w";
  double lp_p = 3.0;
  int lp_dim = 2;
  std::string lp_mode = "estimate";
  std::string lp_matrix;
  std::string lp_vector;
  int samples = 10000;
  std::uint64_t seed = kDefaultSeed;

  const auto add_common = [&](CLI::App* cmd, int op_count) {
    cmd->add_option("--space", opts.space, "builtin space name or space file")->required();
    if (op_count > 0) {
      auto* op = cmd->add_option("--op", opts.operators,
                                 "operator file or fixture:<name> (repeatable)");
      op->required()->expected(op_count);
    }
    cmd->add_option("--format", opts.format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--tolerance", tolerance_flag, "tolerance override")
        ->check(CLI::PositiveNumber);
  };

  auto* validate_cmd = app.add_subcommand("validate", "check a space's invariants");
  add_common(validate_cmd, 0);

  auto* norm_cmd = app.add_subcommand("norm", "operator norm with attainment set");
  add_common(norm_cmd, 1);

  auto* wnorm_cmd = app.add_subcommand("wnorm", "numerical radius with attainment set");
  add_common(wnorm_cmd, 1);

  auto* attain_cmd = app.add_subcommand("attain", "both attainment reports");
  add_common(attain_cmd, 1);

  auto* ortho_cmd = app.add_subcommand("ortho", "Birkhoff-James orthogonality of T to A");
  add_common(ortho_cmd, 2);
  ortho_cmd->add_option("--norm-kind", norm_kind, "w or operator")
      ->check(CLI::IsMember({"w", "operator"}));

  auto* smooth_cmd = app.add_subcommand("smooth", "smoothness classification");
  add_common(smooth_cmd, 1);

  auto* lp_cmd = app.add_subcommand("lp", "lp support functionals, recovery, estimates");
  lp_cmd->add_option("--p", lp_p, "exponent p (>= 1, != 2)")->required();
  lp_cmd->add_option("--dim", lp_dim, "dimension")->required();
  lp_cmd->add_option("--mode", lp_mode, "support | recover | estimate")->required();
  lp_cmd->add_option("--matrix", lp_matrix, "matrix file (recover/estimate)");
  lp_cmd->add_option("--vector", lp_vector, "vector file (support)");
  lp_cmd->add_option("--samples", samples, "sample count for estimate");
  lp_cmd->add_option("--seed", seed, "seed for randomized probes");
  lp_cmd->add_option("--format", opts.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  lp_cmd->add_option("--tolerance", tolerance_flag, "tolerance override")
      ->check(CLI::PositiveNumber);

  auto* fixtures_cmd = app.add_subcommand("fixtures", "list the built-in fixtures");
  fixtures_cmd->add_option("--format", opts.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  CLI11_PARSE(app, argc, argv);
  if (tolerance_flag > 0.0) opts.tolerance = tolerance_flag;

  try {
    if (validate_cmd->parsed()) return run_validate(opts);
    if (norm_cmd->parsed()) return run_attainment(opts, true, false);
    if (wnorm_cmd->parsed()) return run_attainment(opts, false, true);
    if (attain_cmd->parsed()) return run_attainment(opts, true, true);
    if (ortho_cmd->parsed()) return run_ortho(opts, norm_kind);
    if (smooth_cmd->parsed()) return run_smooth(opts);
    if (lp_cmd->parsed())
      return run_lp(lp_p, lp_dim, lp_mode, lp_matrix, lp_vector, samples, seed, opts);
    if (fixtures_cmd->parsed()) return run_fixtures(opts);
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
