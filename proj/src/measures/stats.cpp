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

#include "leniaqd/measures/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace leniaqd::measures {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTau = 2.0 * std::numbers::pi;

// Per-site weights summed over channels, marginalized onto one axis.
// axis 0 = columns (x), axis 1 = rows (y).
std::vector<double> axis_marginal(const lenia::WorldState& world, int axis, double& total) {
    const int len = axis == 0 ? world.width : world.height;
    std::vector<double> marginal(len, 0.0);
    total = 0.0;
    for (int r = 0; r < world.height; ++r) {
        for (int c = 0; c < world.width; ++c) {
            double site = 0.0;
            for (int ch = 0; ch < world.channels; ++ch) site += world.at(r, c, ch);
            marginal[axis == 0 ? c : r] += site;
            total += site;
        }
    }
    return marginal;
}

double circular_mean_coordinate(std::span<const double> marginal, double total) {
    const int len = static_cast<int>(marginal.size());
    double s = 0.0, c = 0.0;
    for (int i = 0; i < len; ++i) {
        const double theta = kTau * i / len;
        s += marginal[i] * std::sin(theta);
        c += marginal[i] * std::cos(theta);
    }
    // A vanishing resultant means the distribution has no usable circular
    // mean (full symmetry); coordinate 0 by convention.
    if (std::hypot(s, c) < 1e-9 * total) return 0.0;
    double coord = std::atan2(s, c) / kTau * len;
    coord = std::fmod(coord + len, static_cast<double>(len));
    if (coord >= len) coord = 0.0;  // fmod rounding guard
    return coord;
}

double toroidal_site_distance_sq(double dr, double dc, int height, int width) {
    double ar = std::fabs(dr);
    ar = std::min(ar, height - ar);
    double ac = std::fabs(dc);
    ac = std::min(ac, width - ac);
    return ar * ar + ac * ac;
}

// Post-development slice of the series (entries with step index > discard_n).
std::span<const StepStats> post_dev(const StatsSeries& series) {
    std::size_t begin = 0;
    while (begin < series.steps.size() && series.steps[begin].step <= series.discard_n) ++begin;
    return {series.steps.data() + begin, series.steps.size() - begin};
}

double mean_of(std::span<const double> v) {
    double s = 0.0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
}

double population_variance(std::span<const double> v) {
    const double m = mean_of(v);
    double s = 0.0;
    for (double x : v) s += (x - m) * (x - m);
    return s / static_cast<double>(v.size());
}

std::vector<double> unwrap_headings(std::span<const StepStats> steps) {
    std::vector<double> out;
    out.reserve(steps.size());
    double current = 0.0;
    bool have_heading = false;
    for (const StepStats& st : steps) {
        if (!have_heading) {
            current = st.angle;
            have_heading = true;
        } else {
            current += angle_delta(current, st.angle);
        }
        out.push_back(current);
    }
    return out;
}

double circular_mean_of_headings(std::span<const StepStats> steps) {
    double s = 0.0, c = 0.0;
    for (const StepStats& st : steps) {
        s += std::sin(st.angle);
        c += std::cos(st.angle);
    }
    if (std::hypot(s, c) < 1e-12 * static_cast<double>(steps.size())) return 0.0;
    return std::atan2(s, c);
}
}  // namespace

double toroidal_delta(double from, double to, double length) {
    double d = to - from;
    d -= length * std::floor(d / length + 0.5);
    if (d >= length / 2.0) d -= length;  // pin the boundary representative to -length/2
    return d;
}

double angle_delta(double from, double to) {
    double d = std::fmod(to - from, kTau);
    if (d <= -kPi) d += kTau;
    if (d > kPi) d -= kTau;
    return d;
}

Eigen::Vector2d center_of_mass_toroidal(const lenia::WorldState& world) {
    double total_x = 0.0, total_y = 0.0;
    const std::vector<double> col_marginal = axis_marginal(world, 0, total_x);
    const std::vector<double> row_marginal = axis_marginal(world, 1, total_y);
    if (!(total_x > 0.0)) throw ZeroMassError("center_of_mass_toroidal: zero total mass");
    return {circular_mean_coordinate(col_marginal, total_x),
            circular_mean_coordinate(row_marginal, total_y)};
}

double mass_spread(const lenia::WorldState& world, const Eigen::Vector2d& center) {
    double total = 0.0, acc = 0.0;
    for (int r = 0; r < world.height; ++r) {
        for (int c = 0; c < world.width; ++c) {
            double site = 0.0;
            for (int ch = 0; ch < world.channels; ++ch) site += world.at(r, c, ch);
            if (site == 0.0) continue;
            total += site;
            acc += site * toroidal_site_distance_sq(r - center.y(), c - center.x(),
                                                    world.height, world.width);
        }
    }
    if (!(total > 0.0)) throw ZeroMassError("mass_spread: zero total mass");
    return std::sqrt(acc / total);
}

StepStats step_stats(const lenia::WorldState& world, const StepStats* previous, double dt,
                     int step_index) {
    StepStats st;
    st.step = step_index;
    st.color.assign(world.channels, 0.0);

    double mass = 0.0;
    for (int ch = 0; ch < world.channels; ++ch) {
        double channel_sum = 0.0;
        const float* p = world.cells.data() + ch;
        const std::size_t n = world.site_count();
        for (std::size_t i = 0; i < n; ++i) channel_sum += p[i * world.channels];
        st.color[ch] = channel_sum / static_cast<double>(world.site_count());
        mass += channel_sum;
    }
    st.mass = mass;

    if (!(mass > 0.0)) {
        st.degenerate = true;
        return st;
    }
    st.center = center_of_mass_toroidal(world);

    if (previous && !previous->degenerate) {
        const double dx = toroidal_delta(previous->center.x(), st.center.x(), world.width);
        const double dy = toroidal_delta(previous->center.y(), st.center.y(), world.height);
        st.velocity = Eigen::Vector2d(dx / dt, dy / dt);
        st.speed = st.velocity.norm();
        st.angle = st.speed > 0.0 ? std::atan2(st.velocity.y(), st.velocity.x()) : 0.0;
        if (st.speed > 0.0 && previous->speed > 0.0)
            st.angular_velocity = angle_delta(previous->angle, st.angle) / dt;
    }
    return st;
}

PhenotypeCrop crop_phenotype(const lenia::WorldState& world, const Eigen::Vector2d& center,
                             int step_index) {
    constexpr int kEdge = PhenotypeCrop::kEdge;
    if (world.height < kEdge || world.width < kEdge)
        throw ValidationError("crop_phenotype: world smaller than the crop window");
    PhenotypeCrop crop;
    crop.channels = world.channels;
    crop.source_step = step_index;
    crop.pixels.resize(static_cast<std::size_t>(kEdge) * kEdge * world.channels);

    const int row0 = static_cast<int>(std::llround(center.y())) - kEdge / 2;
    const int col0 = static_cast<int>(std::llround(center.x())) - kEdge / 2;
    std::size_t out = 0;
    for (int r = 0; r < kEdge; ++r) {
        const int wr = ((row0 + r) % world.height + world.height) % world.height;
        for (int c = 0; c < kEdge; ++c) {
            const int wc = ((col0 + c) % world.width + world.width) % world.width;
            for (int ch = 0; ch < world.channels; ++ch)
                crop.pixels[out++] = world.at(wr, wc, ch);
        }
    }
    return crop;
}

Eigen::VectorXd summarize(const StatsSeries& series, Measure measure, Aggregator aggregator) {
    const std::span<const StepStats> steps = post_dev(series);
    if (steps.size() < 2)
        throw SeriesTooShortError("summarize: fewer than 2 post-development steps");

    auto aggregate_scalar = [&](std::span<const double> values) {
        Eigen::VectorXd out(1);
        out[0] = aggregator == Aggregator::Mean ? mean_of(values) : population_variance(values);
        return out;
    };
    std::vector<double> values;
    values.reserve(steps.size());

    switch (measure) {
        case Measure::Mass:
            for (const StepStats& st : steps) values.push_back(st.mass);
            return aggregate_scalar(values);
        case Measure::Speed:
            for (const StepStats& st : steps) values.push_back(st.speed);
            return aggregate_scalar(values);
        case Measure::AngularVelocity:
            for (const StepStats& st : steps) values.push_back(st.angular_velocity);
            return aggregate_scalar(values);
        case Measure::Angle: {
            if (aggregator == Aggregator::Mean) {
                Eigen::VectorXd out(1);
                out[0] = circular_mean_of_headings(steps);
                return out;
            }
            const std::vector<double> unwrapped = unwrap_headings(steps);
            return aggregate_scalar(unwrapped);
        }
        case Measure::Color: {
            const int channels = static_cast<int>(steps[0].color.size());
            Eigen::VectorXd out(channels);
            for (int ch = 0; ch < channels; ++ch) {
                values.clear();
                for (const StepStats& st : steps) values.push_back(st.color[ch]);
                out[ch] = aggregator == Aggregator::Mean ? mean_of(values)
                                                         : population_variance(values);
            }
            return out;
        }
    }
    throw ValidationError("summarize: unknown measure");
}

SummaryStats summarize_all(const StatsSeries& series) {
    SummaryStats s;
    s.mass_mean = summarize(series, Measure::Mass, Aggregator::Mean)[0];
    s.mass_var = summarize(series, Measure::Mass, Aggregator::Variance)[0];
    s.speed_mean = summarize(series, Measure::Speed, Aggregator::Mean)[0];
    s.speed_var = summarize(series, Measure::Speed, Aggregator::Variance)[0];
    s.angle_mean = summarize(series, Measure::Angle, Aggregator::Mean)[0];
    s.angle_var = summarize(series, Measure::Angle, Aggregator::Variance)[0];
    s.angular_velocity_mean = summarize(series, Measure::AngularVelocity, Aggregator::Mean)[0];
    const Eigen::VectorXd color = summarize(series, Measure::Color, Aggregator::Mean);
    s.color_mean.assign(color.data(), color.data() + color.size());
    return s;
}

const char* to_string(DiscardReason reason) {
    switch (reason) {
        case DiscardReason::Evaporated: return "evaporated";
        case DiscardReason::Exploded: return "exploded";
        case DiscardReason::TooSpread: return "too_spread";
    }
    return "unknown";
}

std::optional<DiscardReason> growth_check(const StatsSeries& series,
                                          const GrowthConstraints& constraints) {
    constraints.validate();
    for (std::size_t i = 0; i < series.steps.size(); ++i) {
        const StepStats& st = series.steps[i];
        if (st.step <= constraints.discard_n) continue;
        if (st.degenerate) return DiscardReason::Evaporated;
        const double mass = st.mass / constraints.mass_unit;
        if (mass < constraints.min_mass) return DiscardReason::Evaporated;
        if (mass > constraints.max_mass) return DiscardReason::Exploded;
        if (constraints.spread_check_enabled() && i < series.spread.size()) {
            const double spread = series.spread[i];
            if (!std::isnan(spread) && spread > constraints.max_spread)
                return DiscardReason::TooSpread;
        }
    }
    return std::nullopt;
}

}  // namespace leniaqd::measures
