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

#include <cstddef>
#include <cstdint>

namespace dising::kernels {

// Data-parallel inner kernels with scalar reference implementations and
// SIMD variants selected at runtime. Bit kernels operate on packed spin
// planes (bit = 1 means spin +1); callers guarantee padding bits are zero.

enum class Backend { scalar, avx2, neon };

struct Ops {
  // Population count over n words.
  uint64_t (*popcount)(const uint64_t* words, size_t n);
  // popcount(a XOR b): number of sites where two replicas disagree.
  uint64_t (*xor_popcount)(const uint64_t* a, const uint64_t* b, size_t n);
  // popcount of the XOR-fold of n_planes >= 1 bit planes.
  uint64_t (*fold_popcount)(const uint64_t* const* planes, int n_planes, size_t n);
  // Straight sum, dot product, and joint (sum x^2, sum x^4) reduction.
  double (*sum)(const double* x, size_t n);
  double (*dot)(const double* x, const double* y, size_t n);
  void (*moments24)(const double* x, size_t n, double* sum2, double* sum4);
};

/// Kernels for the backend chosen at first use (best supported by the CPU,
/// or whatever force_backend selected).
const Ops& active();
Backend active_backend();

/// Reference implementation, always available.
const Ops& scalar_ops();

bool backend_supported(Backend b);

/// Pins the dispatch table; throws std::runtime_error if the backend is not
/// supported on this CPU/build. Intended for tests and the CLI flag.
void force_backend(Backend b);

const char* backend_name(Backend b);

}  // namespace dising::kernels
