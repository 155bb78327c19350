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

#include "leniaqd/lenia/fft.hpp"

#include <fftw3.h>

#include <cassert>
#include <cstring>
#include <mutex>

#include "leniaqd/errors.hpp"

namespace leniaqd::lenia {

namespace {
// FFTW planning mutates global state; execution does not.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}
}  // namespace

SpectralGrid::SpectralGrid(int height, int width) : height_(height), width_(width) {
    if (height < 2 || width < 2) throw ValidationError("SpectralGrid: dimensions must be >= 2");
    const std::size_t n_real = static_cast<std::size_t>(height_) * width_;
    const std::size_t n_cplx = static_cast<std::size_t>(spectrum_size());
    real_buf_ = fftw_alloc_real(n_real);
    fftw_complex* cbuf = fftw_alloc_complex(n_cplx);
    complex_buf_ = cbuf;
    if (!real_buf_ || !cbuf) throw NumericalError("SpectralGrid: allocation failed");

    std::lock_guard<std::mutex> lock(planner_mutex());
    // FFTW_ESTIMATE keeps plan choice independent of runtime measurements so
    // results are reproducible across processes.
    plan_fwd_ = fftw_plan_dft_r2c_2d(height_, width_, real_buf_, cbuf, FFTW_ESTIMATE);
    plan_inv_ = fftw_plan_dft_c2r_2d(height_, width_, cbuf, real_buf_, FFTW_ESTIMATE);
    if (!plan_fwd_ || !plan_inv_) throw NumericalError("SpectralGrid: plan creation failed");
}

SpectralGrid::~SpectralGrid() {
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        if (plan_fwd_) fftw_destroy_plan(static_cast<fftw_plan>(plan_fwd_));
        if (plan_inv_) fftw_destroy_plan(static_cast<fftw_plan>(plan_inv_));
    }
    fftw_free(real_buf_);
    fftw_free(complex_buf_);
}

void SpectralGrid::forward(std::span<const double> field, std::span<std::complex<double>> spectrum) {
    assert(field.size() == static_cast<std::size_t>(height_) * width_);
    assert(spectrum.size() == static_cast<std::size_t>(spectrum_size()));
    std::memcpy(real_buf_, field.data(), field.size() * sizeof(double));
    fftw_execute(static_cast<fftw_plan>(plan_fwd_));
    std::memcpy(spectrum.data(), complex_buf_, spectrum.size() * sizeof(std::complex<double>));
}

void SpectralGrid::inverse(std::span<const std::complex<double>> spectrum, std::span<double> field) {
    assert(spectrum.size() == static_cast<std::size_t>(spectrum_size()));
    assert(field.size() == static_cast<std::size_t>(height_) * width_);
    // c2r destroys its input, so the copy into the owned buffer is required anyway.
    std::memcpy(complex_buf_, spectrum.data(), spectrum.size() * sizeof(std::complex<double>));
    fftw_execute(static_cast<fftw_plan>(plan_inv_));
    const double scale = 1.0 / (static_cast<double>(height_) * width_);
    for (std::size_t i = 0; i < field.size(); ++i) field[i] = real_buf_[i] * scale;
}

void multiply_spectra(std::span<const std::complex<double>> a,
                      std::span<const std::complex<double>> b,
                      std::span<std::complex<double>> out) {
    assert(a.size() == b.size() && a.size() == out.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
}

std::vector<std::complex<double>> kernel_spectrum(std::span<const double> kernel,
                                                  int kernel_edge, SpectralGrid& fft) {
    const int h = fft.height(), w = fft.width();
    if (kernel_edge < 1 || kernel_edge % 2 == 0)
        throw ValidationError("kernel_spectrum: kernel edge must be odd and positive");
    if (kernel.size() != static_cast<std::size_t>(kernel_edge) * kernel_edge)
        throw ValidationError("kernel_spectrum: kernel buffer size mismatch");

    const int extent = kernel_edge / 2;
    std::vector<double> padded(static_cast<std::size_t>(h) * w, 0.0);
    // Tap at offset (dr, dc) lands at lattice index (dr mod h, dc mod w), the
    // placement that makes the spectral product equal true circular
    // convolution. += handles kernels wider than the grid (taps alias).
    for (int dr = -extent; dr <= extent; ++dr) {
        const int r = (dr % h + h) % h;
        for (int dc = -extent; dc <= extent; ++dc) {
            const int c = (dc % w + w) % w;
            padded[static_cast<std::size_t>(r) * w + c] +=
                kernel[static_cast<std::size_t>(dr + extent) * kernel_edge + (dc + extent)];
        }
    }
    std::vector<std::complex<double>> spectrum(fft.spectrum_size());
    fft.forward(padded, spectrum);
    return spectrum;
}

std::vector<double> spectral_convolve(std::span<const double> kernel, int kernel_edge,
                                      std::span<const double> field, SpectralGrid& fft) {
    const auto kspec = kernel_spectrum(kernel, kernel_edge, fft);
    std::vector<std::complex<double>> fspec(fft.spectrum_size());
    fft.forward(field, fspec);
    multiply_spectra(fspec, kspec, fspec);
    std::vector<double> out(field.size());
    fft.inverse(fspec, out);
    return out;
}

}  // namespace leniaqd::lenia
