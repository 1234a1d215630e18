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
// Walks through the library on the hexagon: norms, attainment, orthogonality
// with a certificate, and the smoothness split between the two norms.

#include <cstdio>

#include "nuradius/nuradius.hpp"

using namespace nuradius;

int main() {
  const auto space = hexagon_space();
  const auto T = make_operator(space, hexagon_T_matrix());

  const auto op = operator_norm(T);
  const auto w = numerical_radius(T);
  std::printf("operator norm   : %.17g (%zu sign classes)\n", op.value,
              op.sign_classes.size());
  std::printf("numerical radius: %.17g (%zu sign classes)\n", w.value,
              w.sign_classes.size());

  const auto report = classify(T);
  std::printf("operator smooth : %s\n", report.operator_smooth ? "yes" : "no");
  std::printf("nu smooth       : %s\n", report.nu_smooth ? "yes" : "no");

  // A direction orthogonal to T in the radius norm, with its certificate.
  const auto A = make_operator(space, Mat::from_rows({{1.0, 0.0}, {kSqrt3, 0.0}}));
  const auto decision = is_w_orthogonal(T, A);
  std::printf("T w-orthogonal A: %s\n", decision.orthogonal ? "yes" : "no");
  if (decision.certificate) {
    std::printf("certificate pairs:");
    for (const auto& p : decision.certificate->pairs)
      std::printf(" (vertex %d, facet %d)", p.vertex, p.facet);
    std::printf("\n");
  }

  // The same direction paired with its mirror breaks right-additivity.
  const auto B = make_operator(space, Mat::from_rows({{-1.0, 0.0}, {kSqrt3, 0.0}}));
  const bool additive =
      is_w_orthogonal(T, make_operator(space, A.entries + B.entries)).orthogonal;
  std::printf("orthogonal to A+B: %s\n", additive ? "yes" : "no");
  return 0;
}
