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

#ifndef LENIAQD_QD_GENOTYPE_HPP
#define LENIAQD_QD_GENOTYPE_HPP

#include <span>
#include <string>
#include <vector>

#include "leniaqd/errors.hpp"
#include "leniaqd/rng.hpp"

namespace leniaqd::qd {

/// Gene vector layout: seed cells first (row-major [row][col][channel]),
/// then kernel-major (mu, sigma, weight) rule triples.
struct GenotypeLayout {
    int seed_height = 32;
    int seed_width = 32;
    int channels = 3;
    int kernel_count = 15;

    int seed_genes() const { return seed_height * seed_width * channels; }
    int rule_genes() const { return kernel_count * 3; }
    int total_genes() const { return seed_genes() + rule_genes(); }

    /// 32x32x3 seed + 15 kernels: 3072 + 45 = 3117 genes.
    static GenotypeLayout standard() { return {}; }
};

/// The evolved parameter vector.
struct Genotype {
    std::vector<float> genes;

    std::span<const float> seed(const GenotypeLayout& layout) const {
        return {genes.data(), static_cast<std::size_t>(layout.seed_genes())};
    }
    std::span<const float> rule_params(const GenotypeLayout& layout) const {
        return {genes.data() + layout.seed_genes(), static_cast<std::size_t>(layout.rule_genes())};
    }
};

/// Per-gene clipping box. Seed genes live in [0,1]; rule genes per kind:
/// mu in [0,1], sigma in [0.001, 0.5], weight in [0,1].
struct GeneBounds {
    std::vector<float> lower, upper;

    static GeneBounds standard(const GenotypeLayout& layout) {
        GeneBounds b;
        const int n = layout.total_genes();
        b.lower.assign(n, 0.0f);
        b.upper.assign(n, 1.0f);
        for (int k = 0; k < layout.kernel_count; ++k) {
            const int i = layout.seed_genes() + 3 * k;
            b.lower[i + 1] = 0.001f;  // sigma: keep the growth width positive
            b.upper[i + 1] = 0.5f;
        }
        return b;
    }

    float clip(int gene, double value) const {
        if (value < lower[gene]) return lower[gene];
        if (value > upper[gene]) return upper[gene];
        return static_cast<float>(value);
    }

    void check(const Genotype& g, const std::string& what) const {
        if (g.genes.size() != lower.size())
            throw ValidationError(what + ": expected " + std::to_string(lower.size()) +
                                  " genes, got " + std::to_string(g.genes.size()));
        for (std::size_t i = 0; i < g.genes.size(); ++i)
            if (!(g.genes[i] >= lower[i] && g.genes[i] <= upper[i]))
                throw ValidationError(what + ": gene " + std::to_string(i) + " out of bounds");
    }
};

/// Scales of the two-parent variation operator.
struct VariationParams {
    double sigma1 = 0.005;  // per-gene isotropic noise scale
    double sigma2 = 0.05;   // shared line-step scale

    void validate() const {
        if (!(sigma1 >= 0.0) || !(sigma2 >= 0.0))
            throw ValidationError("VariationParams: scales must be >= 0");
    }
};

/// Two-parent variation: offspring = x1 + sigma1*N(0,I) + sigma2*s*(x2-x1)
/// with one shared scalar s ~ N(0,1), clipped per gene. The shared scalar is
/// drawn before the per-gene noise, which fixes the rng consumption order.
inline Genotype iso_line_dd(const Genotype& x1, const Genotype& x2, const VariationParams& params,
                            const GeneBounds& bounds, PhiloxRng& rng) {
    params.validate();
    if (x1.genes.size() != x2.genes.size())
        throw ValidationError("iso_line_dd: parent layouts differ");
    const double line = params.sigma2 * rng.gaussian();
    Genotype child;
    child.genes.resize(x1.genes.size());
    for (std::size_t i = 0; i < x1.genes.size(); ++i) {
        const double v = static_cast<double>(x1.genes[i]) + params.sigma1 * rng.gaussian() +
                         line * (static_cast<double>(x2.genes[i]) - x1.genes[i]);
        child.genes[i] = bounds.clip(static_cast<int>(i), v);
    }
    return child;
}

/// Initial batch: count copies of base, each perturbed by sigma1*N(0,I) and
/// clipped per gene.
inline std::vector<Genotype> init_population(const Genotype& base, int count,
                                             const VariationParams& params,
                                             const GeneBounds& bounds, PhiloxRng& rng) {
    params.validate();
    std::vector<Genotype> out;
    out.reserve(count);
    for (int j = 0; j < count; ++j) {
        Genotype g;
        g.genes.resize(base.genes.size());
        for (std::size_t i = 0; i < base.genes.size(); ++i)
            g.genes[i] = bounds.clip(static_cast<int>(i),
                                     static_cast<double>(base.genes[i]) +
                                         params.sigma1 * rng.gaussian());
        out.push_back(std::move(g));
    }
    return out;
}

}  // namespace leniaqd::qd

#endif  // LENIAQD_QD_GENOTYPE_HPP
