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

#include "qwalk/schedule.h"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "qwalk/error.h"

namespace qwalk {

PhaseSchedule::PhaseSchedule(int num_steps) {
    if (num_steps < 1) {
        throw ParameterError("a phase schedule needs at least one step, got " + std::to_string(num_steps));
    }
    rows_.resize(num_steps);
    for (int k = 1; k <= num_steps; ++k) {
        rows_[k - 1].assign(k, 0.0);
    }
}

std::size_t PhaseSchedule::size() const {
    std::size_t n = rows_.size();
    return n * (n + 1) / 2;
}

bool PhaseSchedule::is_mesh_point(int step, int site) {
    if (step < 1) {
        return false;
    }
    int reach = step - 1;
    return std::abs(site) <= reach && (site + reach) % 2 == 0;
}

std::size_t PhaseSchedule::slot(int step, int site) const {
    if (step > num_steps() || !is_mesh_point(step, site)) {
        throw ReachabilityError("(step " + std::to_string(step) + ", site " + std::to_string(site) +
                                ") is not a mesh point of a " + std::to_string(num_steps()) + "-step schedule");
    }
    return static_cast<std::size_t>((site + step - 1) / 2);
}

double PhaseSchedule::theta(int step, int site) const {
    return rows_[step - 1][slot(step, site)];
}

void PhaseSchedule::set_theta(int step, int site, double theta) {
    rows_[step - 1][slot(step, site)] = theta;
}

std::span<const double> PhaseSchedule::row(int step) const {
    if (step < 1 || step > num_steps()) {
        throw ReachabilityError("schedule has no step " + std::to_string(step));
    }
    return rows_[step - 1];
}

std::span<double> PhaseSchedule::row(int step) {
    if (step < 1 || step > num_steps()) {
        throw ReachabilityError("schedule has no step " + std::to_string(step));
    }
    return rows_[step - 1];
}

std::string_view to_string(DisorderKind kind) {
    switch (kind) {
        case DisorderKind::kBinary:
            return "binary";
        case DisorderKind::kUniform:
            return "uniform";
    }
    return "unknown";
}

DisorderKind parse_disorder_kind(std::string_view name) {
    if (name == "binary" || name == "binary_0_pi") {
        return DisorderKind::kBinary;
    }
    if (name == "uniform" || name == "uniform_0_2pi") {
        return DisorderKind::kUniform;
    }
    throw ParameterError("unknown disorder kind '" + std::string(name) + "' (expected binary or uniform)");
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

PhaseSchedule ordered_schedule(int num_steps, double theta) {
    PhaseSchedule schedule(num_steps);
    for (int k = 1; k <= num_steps; ++k) {
        for (double &t : schedule.row(k)) {
            t = theta;
        }
    }
    return schedule;
}

PhaseSchedule disordered_schedule(int num_steps, const DisorderSpec &spec, int realization_index) {
    if (spec.realization_count < 1) {
        throw ParameterError("realization_count must be at least 1");
    }
    if (realization_index < 0 || realization_index >= spec.realization_count) {
        throw ParameterError("realization index " + std::to_string(realization_index) + " outside [0, " +
                             std::to_string(spec.realization_count) + ")");
    }
    PhaseSchedule schedule(num_steps);
    std::mt19937_64 stream(splitmix64(splitmix64(spec.seed) ^ static_cast<std::uint64_t>(realization_index)));
    constexpr double two_pi = 2 * std::numbers::pi;
    for (int k = 1; k <= num_steps; ++k) {
        for (double &t : schedule.row(k)) {
            std::uint64_t draw = stream();
            if (spec.kind == DisorderKind::kBinary) {
                t = (draw >> 63) ? std::numbers::pi : 0.0;
            } else {
                t = static_cast<double>(draw >> 11) * 0x1.0p-53 * two_pi;
            }
        }
    }
    return schedule;
}

std::vector<PhaseSchedule> ensemble_schedules(int num_steps, const DisorderSpec &spec) {
    std::vector<PhaseSchedule> out;
    out.reserve(spec.realization_count > 0 ? spec.realization_count : 0);
    for (int j = 0; j < spec.realization_count; ++j) {
        out.push_back(disordered_schedule(num_steps, spec, j));
    }
    if (out.empty()) {
        throw ParameterError("realization_count must be at least 1");
    }
    return out;
}

}  // namespace qwalk
