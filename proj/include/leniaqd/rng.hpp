// Copyright 2026 The leniaqd Authors.
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

#ifndef LENIAQD_RNG_HPP
#define LENIAQD_RNG_HPP

#include <array>
#include <cmath>
#include <cstdint>

namespace leniaqd {

/// Counter-based Philox4x32-10 block cipher (Salmon et al., Random123).
/// A fixed (counter, key) pair always produces the same 128-bit block, which
/// makes independent, reproducible substreams trivial: every consumer of
/// randomness is keyed by (seed, stream id) and owns its own counter.
struct Philox4x32 {
    static constexpr std::uint32_t kMul0 = 0xD2511F53u;
    static constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
    static constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
    static constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

    static std::array<std::uint32_t, 4> block(std::array<std::uint32_t, 4> ctr,
                                              std::array<std::uint32_t, 2> key) {
        for (int round = 0; round < 10; ++round) {
            const std::uint64_t p0 = static_cast<std::uint64_t>(kMul0) * ctr[0];
            const std::uint64_t p1 = static_cast<std::uint64_t>(kMul1) * ctr[2];
            const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
            const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
            const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
            const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
            ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
            key[0] += kWeyl0;
            key[1] += kWeyl1;
        }
        return ctr;
    }
};

/// Mixes two 64-bit values into a stream id (splitmix64 finalizer).
inline std::uint64_t mix_stream(std::uint64_t a, std::uint64_t b) {
    std::uint64_t z = a + 0x9E3779B97F4A7C15ull + (b * 0xBF58476D1CE4E5B9ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// Stateful stream view over Philox: key = seed, high counter words = stream
/// id, low counter words = block index. Distinct (seed, stream) pairs yield
/// statistically independent sequences regardless of draw counts elsewhere.
class PhiloxRng {
public:
    explicit PhiloxRng(std::uint64_t seed, std::uint64_t stream = 0)
        : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
          stream_lo_(static_cast<std::uint32_t>(stream)),
          stream_hi_(static_cast<std::uint32_t>(stream >> 32)) {}

    std::uint32_t next_u32() {
        if (buffer_pos_ == 4) refill();
        return buffer_[buffer_pos_++];
    }

    std::uint64_t next_u64() {
        const std::uint64_t lo = next_u32();
        const std::uint64_t hi = next_u32();
        return (hi << 32) | lo;
    }

    /// Uniform double in [0, 1).
    double uniform() { return next_u32() * 0x1p-32; }

    /// Uniform double in (0, 1]; safe as a log() argument.
    double uniform_open() { return (static_cast<double>(next_u32()) + 1.0) * 0x1p-32; }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Standard normal via Box-Muller (no rejection, so draw counts are
    /// deterministic).
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = uniform_open();
        const double u2 = uniform();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 6.283185307179586476925286766559 * u2;
        spare_ = radius * std::sin(angle);
        have_spare_ = true;
        return radius * std::cos(angle);
    }

    /// Uniform integer in [0, n); n must be > 0. Uses 64-bit multiply-shift
    /// with rejection to avoid modulo bias.
    std::uint64_t below(std::uint64_t n) {
        // Lemire's multiply-shift rejection on 64-bit draws.
        std::uint64_t x = next_u64();
        __uint128_t m = static_cast<__uint128_t>(x) * n;
        auto lo = static_cast<std::uint64_t>(m);
        if (lo < n) {
            const std::uint64_t threshold = (0ull - n) % n;
            while (lo < threshold) {
                x = next_u64();
                m = static_cast<__uint128_t>(x) * n;
                lo = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

private:
    void refill() {
        buffer_ = Philox4x32::block({block_lo_, block_hi_, stream_lo_, stream_hi_}, key_);
        buffer_pos_ = 0;
        if (++block_lo_ == 0) ++block_hi_;
    }

    std::array<std::uint32_t, 2> key_;
    std::uint32_t stream_lo_ = 0;
    std::uint32_t stream_hi_ = 0;
    std::uint32_t block_lo_ = 0;
    std::uint32_t block_hi_ = 0;
    std::array<std::uint32_t, 4> buffer_{};
    int buffer_pos_ = 4;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

/// Stream-class tags so independent consumers never share a substream.
namespace rng_stream {
constexpr std::uint64_t kInitPopulation = 0x01;
constexpr std::uint64_t kSelection = 0x02;
constexpr std::uint64_t kVariation = 0x03;
constexpr std::uint64_t kVaeInit = 0x04;
constexpr std::uint64_t kVaeTrain = 0x05;
constexpr std::uint64_t kEntropy = 0x06;

/// Substream id for (class, generation, index) triples.
inline std::uint64_t at(std::uint64_t cls, std::uint64_t generation, std::uint64_t index = 0) {
    return mix_stream(cls, mix_stream(generation, index));
}
}  // namespace rng_stream

}  // namespace leniaqd

#endif  // LENIAQD_RNG_HPP
