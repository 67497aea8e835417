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

namespace dising {

/// Counter-based pseudo-random stream (Philox-2x64, 10 rounds).
///
/// One instance represents one logical stream addressed by
/// (master_seed, stream_index):
///   * equal addresses produce identical output sequences,
///   * distinct stream indices produce statistically independent streams,
///     regardless of call order or thread placement.
///
/// The generator is a keyed bijection of the 128-bit counter
/// (block_counter, stream_index) with key = master_seed, so streams are
/// disjoint counter blocks of the same cipher. Streams are cheap values:
/// copy freely, never share one instance between concurrent tasks.
class RngStream {
 public:
  RngStream() : RngStream(0, 0) {}

  RngStream(uint64_t master_seed, uint64_t stream_index)
      : key_(master_seed),
        ctr_lo_(0),
        ctr_hi_(stream_index),
        master_seed_(master_seed),
        stream_index_(stream_index) {}

  uint64_t next_u64() {
    if (buf_pos_ == 2) fill_block();
    return buf_[buf_pos_++];
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, bound), bound >= 1. Unbiased (Lemire rejection).
  uint64_t next_below(uint64_t bound) {
    __uint128_t m = static_cast<__uint128_t>(next_u64()) * bound;
    auto lo = static_cast<uint64_t>(m);
    if (lo < bound) {
      const uint64_t threshold = (0 - bound) % bound;
      while (lo < threshold) {
        m = static_cast<__uint128_t>(next_u64()) * bound;
        lo = static_cast<uint64_t>(m);
      }
    }
    return static_cast<uint64_t>(m >> 64);
  }

  uint64_t master_seed() const { return master_seed_; }
  uint64_t stream_index() const { return stream_index_; }

  /// Name of the underlying algorithm, recorded in run metadata.
  static constexpr const char* algorithm() { return "philox2x64-10"; }

 private:
  void fill_block() {
    uint64_t x0 = ctr_lo_;
    uint64_t x1 = ctr_hi_;
    uint64_t k = key_;
    for (int round = 0; round < 10; ++round) {
      const __uint128_t prod = static_cast<__uint128_t>(x0) * kMultiplier;
      const auto hi = static_cast<uint64_t>(prod >> 64);
      const auto lo = static_cast<uint64_t>(prod);
      x0 = hi ^ k ^ x1;
      x1 = lo;
      k += kWeyl;
    }
    buf_[0] = x0;
    buf_[1] = x1;
    buf_pos_ = 0;
    ++ctr_lo_;
  }

  static constexpr uint64_t kMultiplier = 0xD2B74407B1CE6E93ull;
  static constexpr uint64_t kWeyl = 0x9E3779B97F4A7C15ull;

  uint64_t key_;
  uint64_t ctr_lo_;
  uint64_t ctr_hi_;
  uint64_t buf_[2] = {0, 0};
  int buf_pos_ = 2;
  uint64_t master_seed_;
  uint64_t stream_index_;
};

/// Independent stream addressed purely by (master_seed, index).
inline RngStream substream(uint64_t master_seed, uint64_t index) {
  return RngStream(master_seed, index);
}

}  // namespace dising
