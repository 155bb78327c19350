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
//
// Independent reference implementations used only by tests. These stay
// deliberately naive (direct sums, two-pass statistics, linear scans) so a
// bug in a production fast path cannot hide in its own oracle.

#ifndef LENIAQD_TESTS_ORACLES_HPP
#define LENIAQD_TESTS_ORACLES_HPP

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace oracles {

/// Direct O(sites * taps) circular convolution:
///   out(r, c) = sum_{dr, dc} kernel(dr, dc) * field((r - dr) mod H, (c - dc) mod W)
/// with the kernel's center tap at offset (0, 0).
inline std::vector<double> circular_convolve(std::span<const double> kernel, int kernel_edge,
                                             std::span<const double> field, int height,
                                             int width) {
    const int extent = kernel_edge / 2;
    std::vector<double> out(static_cast<std::size_t>(height) * width, 0.0);
    for (int r = 0; r < height; ++r) {
        for (int c = 0; c < width; ++c) {
            double acc = 0.0;
            for (int dr = -extent; dr <= extent; ++dr) {
                const int fr = ((r - dr) % height + height) % height;
                for (int dc = -extent; dc <= extent; ++dc) {
                    const int fc = ((c - dc) % width + width) % width;
                    acc += kernel[static_cast<std::size_t>(dr + extent) * kernel_edge +
                                  (dc + extent)] *
                           field[static_cast<std::size_t>(fr) * width + fc];
                }
            }
            out[static_cast<std::size_t>(r) * width + c] = acc;
        }
    }
    return out;
}

/// Two-pass population variance.
inline double population_variance(std::span<const double> values) {
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= static_cast<double>(values.size());
    double acc = 0.0;
    for (double v : values) acc += (v - mean) * (v - mean);
    return acc / static_cast<double>(values.size());
}

inline double mean(std::span<const double> values) {
    double m = 0.0;
    for (double v : values) m += v;
    return m / static_cast<double>(values.size());
}

}  // namespace oracles

#endif  // LENIAQD_TESTS_ORACLES_HPP
