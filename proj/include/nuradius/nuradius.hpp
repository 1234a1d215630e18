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

#ifndef NURADIUS_NURADIUS_HPP
#define NURADIUS_NURADIUS_HPP

#include "nuradius/error.hpp"
#include "nuradius/fixtures.hpp"
#include "nuradius/linalg.hpp"
#include "nuradius/operator_core.hpp"
#include "nuradius/orthogonality.hpp"
#include "nuradius/polytope_space.hpp"
#include "nuradius/random.hpp"
#include "nuradius/sequence_space.hpp"
#include "nuradius/smoothness.hpp"

#endif  // NURADIUS_NURADIUS_HPP
