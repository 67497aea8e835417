// Copyright 2026 The dising Authors
//
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

#pragma once

#include <cstdint>

#include "dising/rng.hpp"

namespace dising {

/// Poisson(mean) sample. Inversion by sequential search for mean < 30,
/// PTRS transformed rejection above. Throws std::invalid_argument for
/// negative or non-finite mean.
uint64_t poisson_sample(double mean, RngStream& stream);

/// Quantile-style inversion sampler: K = F_mean^{-1}(u). Monotone in u and
/// in mean, which makes it the coupling device for common-random-number
/// finite differences in the connectivity. O(mean) per call; intended for
/// moderate means.
uint64_t poisson_inversion(double mean, double u);

}  // namespace dising
