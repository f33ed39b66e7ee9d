// Copyright 2026 The qwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qwalk/measure.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qwalk/error.h"

namespace qwalk {

double Distribution::at(int site) const {
    if (std::abs(site) > step) {
        return 0.0;
    }
    return p[static_cast<std::size_t>(site + step)];
}

double Distribution::total() const {
    return std::accumulate(p.begin(), p.end(), 0.0);
}

void LossModel::validate() const {
    if (!(eta > 0.0 && eta <= 1.0)) {
        throw ParameterError("loss eta must lie in (0, 1], got " + std::to_string(eta));
    }
}

double LossModel::surviving_fraction(int step) const {
    return std::pow(eta, step);
}

Distribution position_distribution(const WalkerState &state) {
    const int k = state.step_index();
    Distribution dist{k, std::vector<double>(2 * static_cast<std::size_t>(k) + 1, 0.0)};
    for (int i = -k; i <= k; ++i) {
        dist.p[i + k] = std::norm(state.amplitude(0, i)) + std::norm(state.amplitude(1, i));
    }
    return dist;
}

std::vector<double> emulate_measured_powers(const WalkerState &state, const LossModel &loss) {
    loss.validate();
    Distribution ideal = position_distribution(state);
    const double fraction = loss.surviving_fraction(state.step_index());
    for (double &x : ideal.p) {
        x *= fraction;
    }
    return ideal.p;
}

Distribution renormalize_measured(int step, std::span<const double> raw) {
    if (step < 0 || raw.size() != 2 * static_cast<std::size_t>(step) + 1) {
        throw ShapeError("step " + std::to_string(step) + " needs " + std::to_string(2 * step + 1) +
                         " site powers, got " + std::to_string(raw.size()));
    }
    double total = 0.0;
    for (double x : raw) {
        if (!(x >= 0.0) || !std::isfinite(x)) {
            throw ParameterError("measured powers must be finite and nonnegative");
        }
        total += x;
    }
    if (total <= 0.0) {
        throw DegenerateMeasurementError("no measured power at step " + std::to_string(step));
    }
    Distribution dist{step, std::vector<double>(raw.begin(), raw.end())};
    for (double &x : dist.p) {
        x /= total;
    }
    return dist;
}

double variance(const Distribution &dist) {
    double mean = 0.0;
    double second = 0.0;
    for (int i = -dist.step; i <= dist.step; ++i) {
        double w = dist.at(i);
        mean += i * w;
        second += static_cast<double>(i) * i * w;
    }
    return std::max(0.0, second - mean * mean);
}

namespace {

void require_same_steps(const DistributionSeries &a, const DistributionSeries &b) {
    if (a.size() != b.size()) {
        throw ShapeError("series have " + std::to_string(a.size()) + " and " + std::to_string(b.size()) + " steps");
    }
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (a[j].step != b[j].step || a[j].p.size() != b[j].p.size()) {
            throw ShapeError("series rows " + std::to_string(j) + " cover different steps or sites");
        }
    }
}

}  // namespace

std::vector<double> similarity_partials(const DistributionSeries &a, const DistributionSeries &b) {
    require_same_steps(a, b);
    std::vector<double> partials;
    partials.reserve(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) {
        double overlap = 0.0;
        for (std::size_t i = 0; i < a[j].p.size(); ++i) {
            overlap += std::sqrt(a[j].p[i] * b[j].p[i]);
        }
        partials.push_back(overlap);
    }
    return partials;
}

double similarity(const DistributionSeries &a, const DistributionSeries &b) {
    auto partials = similarity_partials(a, b);
    double overlap = std::accumulate(partials.begin(), partials.end(), 0.0);
    double mass_a = 0.0;
    double mass_b = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        mass_a += a[j].total();
        mass_b += b[j].total();
    }
    if (mass_a <= 0.0 || mass_b <= 0.0) {
        throw DegenerateMeasurementError("similarity of a series with no probability mass");
    }
    return std::min(1.0, overlap * overlap / (mass_a * mass_b));
}

DistributionSeries ensemble_mean_series(std::span<const DistributionSeries> runs) {
    if (runs.empty()) {
        throw ParameterError("ensemble mean of zero runs");
    }
    DistributionSeries mean = runs.front();
    for (std::size_t r = 1; r < runs.size(); ++r) {
        require_same_steps(mean, runs[r]);
        for (std::size_t j = 0; j < mean.size(); ++j) {
            for (std::size_t i = 0; i < mean[j].p.size(); ++i) {
                mean[j].p[i] += runs[r][j].p[i];
            }
        }
    }
    const double count = static_cast<double>(runs.size());
    for (auto &row : mean) {
        for (double &x : row.p) {
            x /= count;
        }
    }
    return mean;
}

std::vector<double> variance_series(const DistributionSeries &series) {
    std::vector<double> out;
    out.reserve(series.size());
    for (const auto &row : series) {
        out.push_back(variance(row));
    }
    return out;
}

DistributionSeries distribution_series(std::span<const WalkerState> trajectory, std::size_t first) {
    DistributionSeries series;
    for (std::size_t k = first; k < trajectory.size(); ++k) {
        series.push_back(position_distribution(trajectory[k]));
    }
    return series;
}

DistributionSeries normalize_to_step_peak(const DistributionSeries &series) {
    DistributionSeries out = series;
    for (auto &row : out) {
        double peak = row.p.empty() ? 0.0 : *std::max_element(row.p.begin(), row.p.end());
        if (peak > 0.0) {
            for (double &x : row.p) {
                x /= peak;
            }
        }
    }
    return out;
}

}  // namespace qwalk
