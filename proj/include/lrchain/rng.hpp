// Copyright 2026 The lrchain Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or
// implied. See the License for the specific language governing
// permissions and limitations under the License.

#pragma once

/// @file
/// Counter-based splittable PRNG (Philox 2x64, 10 rounds).
///
/// Every (seed, stream) pair is an independent stream addressed purely by a
/// draw counter, so ensembles can be partitioned over any number of workers
/// and still produce bit-identical results, and a trajectory can be resumed
/// exactly by restoring position().

#include <cmath>
#include <cstdint>

namespace lrchain {

namespace detail {

inline constexpr std::uint64_t PHILOX_M = 0xD2B74407B1CE6E93ULL;
inline constexpr std::uint64_t PHILOX_W = 0x9E3779B97F4A7C15ULL;

/// One 10-round Philox 2x64 block: counter (ctr0, ctr1), 64-bit key.
inline void philox2x64_10(std::uint64_t key, std::uint64_t ctr0,
                          std::uint64_t ctr1, std::uint64_t out[2]) {
    std::uint64_t c0 = ctr0, c1 = ctr1, k = key;
    for (int r = 0; r < 10; ++r) {
        unsigned __int128 prod = static_cast<unsigned __int128>(PHILOX_M) * c0;
        c0 = static_cast<std::uint64_t>(prod >> 64) ^ k ^ c1;
        c1 = static_cast<std::uint64_t>(prod);
        k += PHILOX_W;
    }
    out[0] = c0;
    out[1] = c1;
}

}  // namespace detail

/// A deterministic random stream; (seed, stream, position) fixes every draw.
class RngStream {
  public:
    RngStream(std::uint64_t seed, std::uint64_t stream)
        : seed_(seed), stream_(stream) {}

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream() const { return stream_; }

    /// Number of 64-bit draws consumed; store and seek() to resume exactly.
    std::uint64_t position() const { return n_; }
    void seek(std::uint64_t n) { n_ = n; }

    std::uint64_t next_u64() {
        std::uint64_t b = n_ >> 1;
        int ph = static_cast<int>(n_ & 1);
        if (cached_block_ != b) {
            detail::philox2x64_10(seed_, stream_, b, buf_);
            cached_block_ = b;
        }
        ++n_;
        return buf_[ph];
    }

    /// Uniform in [0, 1), 53-bit resolution.
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Exp(1) sample; uses -log(1-U) so the argument never vanishes.
    double exponential() { return -std::log(1.0 - uniform()); }

    /// Standard normal (Box-Muller, no cached spare: two uniforms per call).
    double normal() {
        double u1 = 1.0 - uniform();
        double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * PI_ * u2);
    }

  private:
    static constexpr double PI_ = 3.14159265358979323846264338327950288;
    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t n_ = 0;
    std::uint64_t cached_block_ = ~0ULL;
    std::uint64_t buf_[2] = {0, 0};
};

}  // namespace lrchain
