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
// Reconstructs a hidden matrix on l_p^4 from nothing but the scalar map
// x -> x*(Tx), then compares a sampled radius bound against the exact value
// on the polyhedral overlap p = 1.

#include <cmath>
#include <cstdio>
#include <random>

#include "nuradius/nuradius.hpp"

using namespace nuradius;

int main() {
  const auto space = make_lp_space(4, 3.0);
  std::mt19937_64 rng(2024);
  const Mat hidden = random_matrix(rng, 4);

  const auto oracle = [&](const Vec& x) {
    return dot(lp_support_functional(space, x, /*zero_sign=*/0.0), matvec(hidden, x));
  };
  const Mat recovered = recover_entries(space, oracle);
  double err = 0.0;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      err = std::max(err, std::fabs(recovered(r, c) - hidden(r, c)));
  std::printf("entry recovery max error: %.3g\n", err);

  const auto l1 = make_lp_space(3, 1.0);
  const auto polytope = l1_space(3);
  const Mat m = random_matrix(rng, 3);
  const double exact = numerical_radius(make_operator(polytope, m)).value;
  const double bound = lp_numerical_radius_estimate(l1, m, 50000, 7);
  std::printf("exact radius on l1^3: %.12g, sampled lower bound: %.12g\n", exact, bound);
  return 0;
}
