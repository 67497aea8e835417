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
#include <vector>

#include "dising/rng.hpp"

namespace dising {

/// One Ising configuration, bit-packed 64 sites per word (bit = 1 means
/// spin +1). Padding bits above n_sites are kept zero so the packed words
/// can feed the popcount kernels directly.
class SpinConfig {
 public:
  explicit SpinConfig(int n_sites);  // all spins -1

  static SpinConfig random(int n_sites, RngStream& stream);

  int n_sites() const { return n_sites_; }
  int spin(int site) const {
    return ((words_[site >> 6] >> (site & 63)) & 1u) ? +1 : -1;
  }
  void set_spin(int site, int value) {
    const uint64_t mask = uint64_t{1} << (site & 63);
    if (value > 0)
      words_[site >> 6] |= mask;
    else
      words_[site >> 6] &= ~mask;
  }
  void flip(int site) { words_[site >> 6] ^= uint64_t{1} << (site & 63); }

  /// Sum of all spins, exact integer.
  int64_t spin_sum() const;

  const uint64_t* words() const { return words_.data(); }
  size_t n_words() const { return words_.size(); }

  bool operator==(const SpinConfig&) const = default;

 private:
  int n_sites_;
  std::vector<uint64_t> words_;
};

/// m = (1/N) sum_i sigma_i, an exact multiple of 1/N.
double magnetization(const SpinConfig& sigma);

/// q = (1/N) sum_i prod_a sigma_i^(a) over n >= 1 replicas of equal size.
/// n = 1 reduces to the magnetization. Computed word-wise by XOR-fold and
/// popcount. Throws std::invalid_argument on empty input or size mismatch.
double multi_overlap(std::span<const SpinConfig* const> configs);
double multi_overlap(std::span<const SpinConfig> configs);

}  // namespace dising
