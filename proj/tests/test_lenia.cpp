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

#include <algorithm>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "leniaqd/lenia/fft.hpp"
#include "leniaqd/lenia/kernel.hpp"
#include "leniaqd/lenia/rollout.hpp"
#include "leniaqd/lenia/simulator.hpp"
#include "leniaqd/lenia/world.hpp"
#include "leniaqd/rng.hpp"
#include "oracles.hpp"

using namespace leniaqd;
using namespace leniaqd::lenia;

namespace {
std::vector<double> random_field(int h, int w, PhiloxRng& rng) {
    std::vector<double> f(static_cast<std::size_t>(h) * w);
    for (double& v : f) v = rng.uniform();
    return f;
}

std::vector<double> random_kernel(int edge, PhiloxRng& rng) {
    std::vector<double> k(static_cast<std::size_t>(edge) * edge);
    for (double& v : k) v = rng.uniform(-1.0, 1.0);
    return k;
}

SimConfig small_config(int h, int w, int channels, int R = 4) {
    SimConfig cfg;
    cfg.world_height = h;
    cfg.world_width = w;
    cfg.channels = channels;
    cfg.space_resolution = R;
    cfg.seed_height = std::min(4, h);
    cfg.seed_width = std::min(4, w);
    return cfg;
}
}  // namespace

TEST_CASE("spectral convolution matches the direct-sum reference") {
    PhiloxRng rng(2024, 1);
    // Mixed even/odd/rectangular shapes, kernels up to grid-sized.
    const int shapes[][2] = {{8, 8},  {9, 9},  {16, 16}, {15, 17}, {32, 32},
                             {7, 12}, {64, 64}, {33, 40}, {10, 10}, {128, 128}};
    double worst = 0.0;
    for (const auto& s : shapes) {
        const int h = s[0], w = s[1];
        SpectralGrid fft(h, w);
        for (int rep = 0; rep < 2; ++rep) {
            const int max_extent = (std::min(h, w) - 1) / 2;
            const int extent = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(max_extent)));
            const int edge = 2 * extent + 1;
            const auto kernel = random_kernel(edge, rng);
            const auto field = random_field(h, w, rng);
            const auto fast = spectral_convolve(kernel, edge, field, fft);
            const auto slow = oracles::circular_convolve(kernel, edge, field, h, w);
            for (std::size_t i = 0; i < fast.size(); ++i)
                worst = std::max(worst, std::fabs(fast[i] - slow[i]));
        }
    }
    CHECK(worst < 1e-6);
}

TEST_CASE("forward and inverse transforms round-trip") {
    PhiloxRng rng(5, 5);
    SpectralGrid fft(13, 21);
    const auto field = random_field(13, 21, rng);
    std::vector<std::complex<double>> spec(fft.spectrum_size());
    fft.forward(field, spec);
    std::vector<double> back(field.size());
    fft.inverse(spec, back);
    for (std::size_t i = 0; i < field.size(); ++i)
        CHECK(field[i] == doctest::Approx(back[i]).epsilon(1e-12));
}

TEST_CASE("radial profile peaks at the half-radius and vanishes at the ends") {
    CHECK(kernel_core(0.5) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(kernel_core(0.0) == 0.0);
    CHECK(kernel_core(1.0) == 0.0);
    // Frozen closed-form value: exp(4 - 1/(0.25 * 0.75)) = exp(-4/3).
    CHECK(kernel_core(0.25) == doctest::Approx(0.2635971381157267).epsilon(1e-12));
}

TEST_CASE("growth mapping hits its pinned values") {
    CHECK(growth_value(0.3, 0.3, 0.05) == doctest::Approx(1.0).epsilon(1e-12));
    // 2 exp(-1/2) - 1
    CHECK(growth_value(0.35, 0.3, 0.05) == doctest::Approx(0.21306131942526994).epsilon(1e-9));
    CHECK(growth_value(0.8, 0.3, 0.05) > -1.0);
    CHECK(growth_value(0.8, 0.3, 0.05) == doctest::Approx(-1.0).epsilon(1e-9));
}

TEST_CASE("discrete kernels normalize to unit sum and scale-invariant shape") {
    KernelSpec spec;
    spec.relative_radius = 0.9;
    spec.beta = {1.0};
    const DiscreteKernel a = build_kernel(spec, 6);
    double sum = 0.0;
    for (double t : a.taps) sum += t;
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));

    spec.beta = {0.5};
    const DiscreteKernel b = build_kernel(spec, 6);
    REQUIRE(a.taps.size() == b.taps.size());
    for (std::size_t i = 0; i < a.taps.size(); ++i)
        CHECK(a.taps[i] == doctest::Approx(b.taps[i]).epsilon(1e-12));
}

TEST_CASE("zeroed outer ring leaves the outer half-annulus empty") {
    KernelSpec spec;
    spec.relative_radius = 1.0;
    spec.beta = {1.0, 0.0};
    const int R = 8;
    const DiscreteKernel k = build_kernel(spec, R);
    const int extent = k.extent();
    for (int dr = -extent; dr <= extent; ++dr) {
        for (int dc = -extent; dc <= extent; ++dc) {
            const double u = std::sqrt(double(dr) * dr + double(dc) * dc) / R;
            if (u >= 0.5 && u < 1.0) CHECK(k.at(dr, dc) == 0.0);
        }
    }
}

TEST_CASE("a kernel too small to cover any site is rejected") {
    KernelSpec spec;
    spec.relative_radius = 0.1;  // support 0.4 sites at R=4: only the zero-weight center
    CHECK_THROWS_AS(build_kernel(spec, 4), ZeroKernelError);
}

TEST_CASE("kernel spectra round-trip back to their discrete taps") {
    SimConfig cfg = small_config(24, 24, 1, 6);
    KernelSpec spec;
    spec.relative_radius = 0.8;
    spec.beta = {1.0, 0.5};
    const KernelBank bank = KernelBank::build({spec}, cfg);
    // Convolving a delta field with the kernel must reproduce the taps.
    SpectralGrid fft(24, 24);
    std::vector<double> delta(24 * 24, 0.0);
    delta[0] = 1.0;
    std::vector<std::complex<double>> fspec(fft.spectrum_size());
    fft.forward(delta, fspec);
    multiply_spectra(fspec, bank.geometry->spectrum(0), fspec);
    std::vector<double> out(delta.size());
    fft.inverse(fspec, out);

    const DiscreteKernel& k = bank.geometry->kernel(0);
    const int extent = k.extent();
    for (int dr = -extent; dr <= extent; ++dr)
        for (int dc = -extent; dc <= extent; ++dc) {
            const int r = (dr % 24 + 24) % 24, c = (dc % 24 + 24) % 24;
            CHECK(out[static_cast<std::size_t>(r) * 24 + c] ==
                  doctest::Approx(k.at(dr, dc)).epsilon(1e-6));
        }
}

TEST_CASE("standard wiring covers self triples then ordered pairs") {
    const auto w = standard_wiring(3);
    REQUIRE(w.size() == 15);
    for (int c = 0; c < 3; ++c)
        for (int i = 0; i < 3; ++i) {
            CHECK(w[3 * c + i].first == c);
            CHECK(w[3 * c + i].second == c);
        }
    const std::vector<std::pair<int, int>> cross(w.begin() + 9, w.end());
    const std::vector<std::pair<int, int>> expected = {{0, 1}, {0, 2}, {1, 0},
                                                       {1, 2}, {2, 0}, {2, 1}};
    CHECK(cross == expected);
}

TEST_CASE("single-kernel step matches a direct convolution reference") {
    PhiloxRng rng(77, 3);
    SimConfig cfg = small_config(16, 16, 1);
    KernelSpec spec;
    spec.relative_radius = 0.75;
    spec.mu = 0.15;
    spec.sigma = 0.02;
    spec.weight = 1.0;
    const KernelBank bank = KernelBank::build({spec}, cfg);

    WorldState world(16, 16, 1);
    for (float& v : world.cells) v = static_cast<float>(rng.uniform());

    const double dt = cfg.dt();
    const WorldState next = stepped(world, bank, dt);

    // Direct reference: convolve, map through growth, integrate, clip.
    std::vector<double> field(world.cells.begin(), world.cells.end());
    const DiscreteKernel& k = bank.geometry->kernel(0);
    const auto conv = oracles::circular_convolve(k.taps, k.edge, field, 16, 16);
    for (std::size_t i = 0; i < field.size(); ++i) {
        const double g = growth_value(conv[i], spec.mu, spec.sigma);
        const double expected = std::clamp(field[i] + dt * g, 0.0, 1.0);
        CHECK(std::fabs(next.cells[i] - expected) < 1e-6);
    }
    CHECK(next.time == doctest::Approx(dt));
}

TEST_CASE("all-zero world is a fixed point when growth at zero is negative") {
    SimConfig cfg = small_config(32, 32, 2, 5);
    std::vector<KernelSpec> specs;
    for (int s = 0; s < 2; ++s)
        for (int t = 0; t < 2; ++t) {
            KernelSpec k;
            k.relative_radius = 0.7;
            k.mu = 0.4;   // mu > 3 sigma: growth(0) < 0 everywhere
            k.sigma = 0.1;
            k.weight = 0.5;
            k.source = s;
            k.target = t;
            specs.push_back(k);
        }
    const KernelBank bank = KernelBank::build(specs, cfg);
    WorldState world(32, 32, 2);
    SimWorkspace ws(32, 32, 2);
    for (int i = 0; i < 200; ++i) step(world, bank, cfg.dt(), ws);
    for (float v : world.cells) CHECK(v == 0.0f);
}

TEST_CASE("all-ones world is a fixed point when growth at one is positive") {
    SimConfig cfg = small_config(16, 16, 1, 4);
    KernelSpec k;
    k.relative_radius = 0.9;
    k.mu = 1.0;  // convolution of all-ones with a unit-sum kernel is 1
    k.sigma = 0.1;
    const KernelBank bank = KernelBank::build({k}, cfg);
    WorldState world(16, 16, 1);
    std::fill(world.cells.begin(), world.cells.end(), 1.0f);
    SimWorkspace ws(16, 16, 1);
    for (int i = 0; i < 50; ++i) step(world, bank, cfg.dt(), ws);
    for (float v : world.cells) CHECK(v == 1.0f);
}

TEST_CASE("stepping commutes with toroidal translation") {
    PhiloxRng rng(11, 0);
    SimConfig cfg = small_config(20, 20, 1, 4);
    KernelSpec spec;
    spec.relative_radius = 0.8;
    spec.mu = 0.25;
    spec.sigma = 0.04;
    const KernelBank bank = KernelBank::build({spec}, cfg);

    WorldState world(20, 20, 1);
    for (float& v : world.cells) v = static_cast<float>(rng.uniform());

    auto shift = [](const WorldState& w, int dr, int dc) {
        WorldState out(w.height, w.width, w.channels);
        out.time = w.time;
        for (int r = 0; r < w.height; ++r)
            for (int c = 0; c < w.width; ++c)
                for (int ch = 0; ch < w.channels; ++ch)
                    out.at((r + dr) % w.height, (c + dc) % w.width, ch) = w.at(r, c, ch);
        return out;
    };

    const WorldState a = shift(stepped(world, bank, cfg.dt()), 7, 3);
    const WorldState b = stepped(shift(world, 7, 3), bank, cfg.dt());
    for (std::size_t i = 0; i < a.cells.size(); ++i)
        CHECK(std::fabs(a.cells[i] - b.cells[i]) <= 1e-6);
}

TEST_CASE("channels with zero target weight stay frozen") {
    SimConfig cfg = small_config(16, 16, 2, 4);
    KernelSpec active;
    active.relative_radius = 0.8;
    active.mu = 0.2;
    active.sigma = 0.05;
    active.weight = 1.0;
    active.source = 0;
    active.target = 0;
    KernelSpec disabled = active;
    disabled.weight = 0.0;
    disabled.source = 0;
    disabled.target = 1;
    const KernelBank bank = KernelBank::build({active, disabled}, cfg);

    PhiloxRng rng(8, 8);
    WorldState world(16, 16, 2);
    for (float& v : world.cells) v = static_cast<float>(rng.uniform());
    const WorldState before = world;
    const WorldState after = stepped(world, bank, cfg.dt());

    bool channel0_changed = false;
    for (int r = 0; r < 16; ++r)
        for (int c = 0; c < 16; ++c) {
            channel0_changed = channel0_changed || after.at(r, c, 0) != before.at(r, c, 0);
            CHECK(after.at(r, c, 1) == before.at(r, c, 1));
        }
    CHECK(channel0_changed);
}

TEST_CASE("seed embedding centers the patch with floor offsets") {
    SimConfig cfg;
    cfg.world_height = 128;
    cfg.world_width = 128;
    cfg.channels = 3;
    cfg.seed_height = 32;
    cfg.seed_width = 32;
    std::vector<float> seed(32 * 32 * 3, 0.0f);
    seed[0] = 1.0f;  // seed cell (0, 0, 0)
    const WorldState world = embed_seed(seed, cfg);
    CHECK(world.at(48, 48, 0) == 1.0f);
    double mass = 0.0;
    for (float v : world.cells) mass += v;
    CHECK(mass == 1.0);

    std::vector<float> ones(32 * 32 * 3, 1.0f);
    const WorldState full = embed_seed(ones, cfg);
    mass = 0.0;
    for (float v : full.cells) mass += v;
    CHECK(mass == 3072.0);
}

TEST_CASE("oversized seeds are rejected") {
    SimConfig cfg;
    cfg.world_height = 16;
    cfg.world_width = 16;
    cfg.seed_height = 32;
    cfg.seed_width = 32;
    std::vector<float> seed(32 * 32 * 3, 0.0f);
    CHECK_THROWS_AS(embed_seed(seed, cfg), ValidationError);
}

TEST_CASE("rollouts discard a zero seed at the first checked step") {
    qd::GenotypeLayout layout;
    layout.seed_height = 4;
    layout.seed_width = 4;
    layout.channels = 1;
    layout.kernel_count = 1;

    SimConfig cfg = small_config(32, 32, 1, 4);
    cfg.steps = 20;

    KernelSpec spec;
    spec.relative_radius = 0.8;
    const KernelBank bank = KernelBank::build({spec}, cfg);

    qd::Genotype zero;
    zero.genes.assign(layout.total_genes(), 0.0f);
    zero.genes[layout.seed_genes() + 0] = 0.3f;   // mu
    zero.genes[layout.seed_genes() + 1] = 0.05f;  // sigma
    zero.genes[layout.seed_genes() + 2] = 1.0f;   // weight

    measures::GrowthConstraints constraints;
    constraints.discard_n = 5;
    const RetentionPolicy retain;

    const RolloutResult res = rollout(zero, layout, bank, cfg, constraints, retain);
    REQUIRE(!res.kept());
    CHECK(res.discarded == measures::DiscardReason::Evaporated);
    CHECK(res.steps_run == 6);  // first post-development step
}

TEST_CASE("surviving rollouts report full series and strided crops") {
    qd::GenotypeLayout layout;
    layout.seed_height = 32;
    layout.seed_width = 32;
    layout.channels = 1;
    layout.kernel_count = 1;

    SimConfig cfg = small_config(64, 64, 1, 6);
    cfg.seed_height = 32;
    cfg.seed_width = 32;
    cfg.steps = 37;

    KernelSpec spec;
    spec.relative_radius = 0.9;
    const KernelBank bank = KernelBank::build({spec}, cfg);

    // A stable blob: growth keeps mid activations near mu.
    qd::Genotype g;
    g.genes.assign(layout.total_genes(), 0.0f);
    for (int i = 0; i < layout.seed_genes(); ++i) g.genes[i] = 0.5f;
    g.genes[layout.seed_genes() + 0] = 0.5f;
    g.genes[layout.seed_genes() + 1] = 0.25f;
    g.genes[layout.seed_genes() + 2] = 1.0f;

    measures::GrowthConstraints constraints;
    constraints.discard_n = 5;
    constraints.min_mass = 1e-6;

    RetentionPolicy retain;
    retain.stride = 8;

    const RolloutResult res = rollout(g, layout, bank, cfg, constraints, retain);
    REQUIRE(res.kept());
    const Trajectory& traj = *res.trajectory;
    CHECK(traj.stats.steps.size() == 37);
    CHECK(traj.stats.initial.step == 0);
    CHECK(traj.stats.steps.front().step == 1);
    CHECK(traj.stats.steps.back().step == 37);
    // ceil((37 - 5) / 8) = 4 crops at steps 6, 14, 22, 30.
    REQUIRE(traj.crops.size() == 4);
    CHECK(traj.crops[0].source_step == 6);
    CHECK(traj.crops[3].source_step == 30);
    CHECK(traj.frames.empty());
}
