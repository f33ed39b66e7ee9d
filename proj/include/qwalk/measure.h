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

#ifndef QWALK_MEASURE_H
#define QWALK_MEASURE_H

#include <span>
#include <vector>

#include "qwalk/walk.h"

namespace qwalk {

/// Site occupation probabilities at one step, for sites -step..step.
struct Distribution {
    int step = 0;
    std::vector<double> p;

    int first_site() const { return -step; }
    /// Zero outside [-step, step].
    double at(int site) const;
    double total() const;

    bool operator==(const Distribution &other) const = default;
};

/// Rows G(s_1), ..., G(s_m) in step order.
using DistributionSeries = std::vector<Distribution>;

/// Uniform per-step intensity transmission.
struct LossModel {
    double eta = 1.0;

    /// Throws ParameterError unless 0 < eta <= 1.
    void validate() const;
    /// Surviving intensity fraction after `step` steps.
    double surviving_fraction(int step) const;
};

/// Traces out the coin: P[i] = |p[0][i]|^2 + |p[1][i]|^2.
Distribution position_distribution(const WalkerState &state);

/// Detector powers a lossy apparatus would report at the state's step,
/// one per site in [-k, k].
std::vector<double> emulate_measured_powers(const WalkerState &state, const LossModel &loss);

/// P[i] = raw[i] / sum(raw). raw must have 2*step+1 nonnegative entries.
/// Throws DegenerateMeasurementError when every entry is zero.
Distribution renormalize_measured(int step, std::span<const double> raw);

/// sum i^2 P_i - (sum i P_i)^2, clamped at zero against round-off.
double variance(const Distribution &dist);

/// Per-step overlaps sum_i sqrt(G_i(s_j) G'_i(s_j)).
/// Throws ShapeError unless both series cover the same steps.
std::vector<double> similarity_partials(const DistributionSeries &a, const DistributionSeries &b);

/// S = (sum_ij sqrt(G_i(s_j) G'_i(s_j)))^2 / ((sum_ij G_i(s_j)) (sum_ij G'_i(s_j))).
double similarity(const DistributionSeries &a, const DistributionSeries &b);

/// Pointwise mean, accumulated in run order.
/// Throws ParameterError on an empty list and ShapeError on mismatched runs.
DistributionSeries ensemble_mean_series(std::span<const DistributionSeries> runs);

std::vector<double> variance_series(const DistributionSeries &series);

/// Distributions of trajectory[first..], one row per state.
DistributionSeries distribution_series(std::span<const WalkerState> trajectory, std::size_t first = 1);

/// Each row divided by its own maximum; used for heat-map style plots only.
DistributionSeries normalize_to_step_peak(const DistributionSeries &series);

}  // namespace qwalk

#endif  // QWALK_MEASURE_H
