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

#ifndef NURADIUS_RANDOM_HPP
#define NURADIUS_RANDOM_HPP

#include <cstdint>
#include <random>

#include "nuradius/linalg.hpp"

namespace nuradius {

// Uniform doubles derived straight from mt19937_64 bits so seeded runs are
// reproducible across standard library implementations.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform_pm1(std::mt19937_64& rng) { return 2.0 * uniform01(rng) - 1.0; }

inline Vec random_vector(std::mt19937_64& rng, int n) {
  Vec v(n);
  for (double& x : v) x = uniform_pm1(rng);
  return v;
}

inline Mat random_matrix(std::mt19937_64& rng, int n) {
  Mat m(n, n);
  for (double& x : m.data) x = uniform_pm1(rng);
  return m;
}

}  // namespace nuradius

#endif  // NURADIUS_RANDOM_HPP
