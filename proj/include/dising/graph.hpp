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
#include <span>
#include <utility>
#include <vector>

#include "dising/rng.hpp"

namespace dising {

/// Model parameters: system size N, connectivity alpha, inverse temperature
/// beta. The derived control parameter beta' = 2 alpha tanh(beta) is always
/// recomputed, never cached.
struct ModelParams {
  int n_sites = 0;
  double alpha = 0.0;
  double beta = 0.0;

  double beta_prime() const;
  bool high_temperature() const { return beta_prime() < 1.0; }

  /// Throws std::invalid_argument unless n_sites >= 1 and alpha, beta are
  /// finite and non-negative.
  void validate() const;
};

/// Inverse of beta' = 2 alpha tanh(beta) at fixed alpha.
/// Requires 0 <= beta_prime < 2 * alpha (otherwise no finite beta exists).
double beta_for_beta_prime(double beta_prime, double alpha);

/// One quenched disorder sample: a Poisson-sized multiset of ordered site
/// pairs. Self-pairs and duplicates are kept exactly as drawn. The incidence
/// structure is CSR with one entry per edge endpoint (duplicate edges appear
/// with their multiplicity); self-edges are excluded from incidence because
/// they never move under a spin flip.
struct DiluteGraph {
  int n_sites = 0;
  std::vector<std::pair<int32_t, int32_t>> edges;

  std::vector<int32_t> offsets;   // size n_sites + 1
  std::vector<int32_t> partners;  // flattened incidence rows
  int32_t self_edges = 0;         // each contributes a constant -1 to H
  int32_t max_degree = 0;         // largest incidence row

  static DiluteGraph build(int n_sites, std::vector<std::pair<int32_t, int32_t>> edges);

  std::span<const int32_t> neighbors(int site) const {
    return {partners.data() + offsets[site],
            static_cast<size_t>(offsets[site + 1] - offsets[site])};
  }
  int degree(int site) const { return offsets[site + 1] - offsets[site]; }
};

/// Draws K ~ Poisson(alpha * N) edges, each endpoint uniform on {0..N-1},
/// ordered as drawn. Deterministic given the stream state.
DiluteGraph sample_graph(const ModelParams& params, RngStream& stream);

}  // namespace dising
