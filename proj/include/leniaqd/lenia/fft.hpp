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

#ifndef LENIAQD_LENIA_FFT_HPP
#define LENIAQD_LENIA_FFT_HPP

#include <complex>
#include <span>
#include <vector>

namespace leniaqd::lenia {

/// Real-to-complex spectral transforms for one fixed grid shape. Each
/// instance owns aligned buffers and plans, so an instance must not be shared
/// across threads; concurrent workers hold one engine each. Plans are created
/// in deterministic (estimate-only) mode, so identical inputs give
/// bit-identical outputs across runs and processes.
class SpectralGrid {
public:
    SpectralGrid(int height, int width);
    ~SpectralGrid();

    SpectralGrid(const SpectralGrid&) = delete;
    SpectralGrid& operator=(const SpectralGrid&) = delete;

    int height() const { return height_; }
    int width() const { return width_; }
    /// Number of complex bins in the half spectrum: height * (width/2 + 1).
    int spectrum_size() const { return height_ * (width_ / 2 + 1); }

    /// DFT of a row-major height*width real field.
    void forward(std::span<const double> field, std::span<std::complex<double>> spectrum);
    /// Inverse DFT, scaled by 1/(height*width) so forward+inverse is identity.
    void inverse(std::span<const std::complex<double>> spectrum, std::span<double> field);

private:
    int height_, width_;
    double* real_buf_;
    void* complex_buf_;  // fftw_complex*
    void* plan_fwd_;
    void* plan_inv_;
};

/// spectrum_out[i] = a[i] * b[i]; sizes must match.
void multiply_spectra(std::span<const std::complex<double>> a,
                      std::span<const std::complex<double>> b,
                      std::span<std::complex<double>> out);

/// Embeds a small centered kernel (odd square array, center tap = zero
/// offset) into a height*width field, wrapping negative offsets, and returns
/// its spectrum, ready for repeated multiply_spectra use.
std::vector<std::complex<double>> kernel_spectrum(std::span<const double> kernel,
                                                  int kernel_edge, SpectralGrid& fft);

/// Circular (toroidal) convolution of a small centered kernel with a
/// row-major field via the spectral route:
///   out(p) = sum_d kernel(d) * field(p - d), indices wrapped.
std::vector<double> spectral_convolve(std::span<const double> kernel, int kernel_edge,
                                      std::span<const double> field, SpectralGrid& fft);

}  // namespace leniaqd::lenia

#endif  // LENIAQD_LENIA_FFT_HPP
