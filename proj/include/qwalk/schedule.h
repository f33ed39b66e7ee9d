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

#ifndef QWALK_SCHEDULE_H
#define QWALK_SCHEDULE_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace qwalk {

/// Relative phase theta for every mesh point (step k, site i) of an N-step walk.
///
/// Step k in [1, N] labels the coin layer applied to the state at t_{k-1}, so
/// its mesh points are the sites reachable after k-1 steps:
/// |i| <= k-1 and i + k - 1 even. Row k stores them in ascending site order.
class PhaseSchedule {
   public:
    /// All phases zero. Throws ParameterError for num_steps < 1.
    explicit PhaseSchedule(int num_steps);

    int num_steps() const { return static_cast<int>(rows_.size()); }

    /// Number of mesh points, N(N+1)/2.
    std::size_t size() const;

    static bool is_mesh_point(int step, int site);

    /// Throws ReachabilityError if (step, site) is not a mesh point of this schedule.
    double theta(int step, int site) const;
    void set_theta(int step, int site, double theta);

    /// Phases of step k for sites -(k-1), -(k-1)+2, ..., k-1.
    std::span<const double> row(int step) const;
    std::span<double> row(int step);

    bool operator==(const PhaseSchedule &other) const = default;

   private:
    std::size_t slot(int step, int site) const;

    std::vector<std::vector<double>> rows_;
};

enum class DisorderKind { kBinary, kUniform };

std::string_view to_string(DisorderKind kind);
/// Accepts "binary" / "binary_0_pi" and "uniform" / "uniform_0_2pi".
/// Throws ParameterError otherwise.
DisorderKind parse_disorder_kind(std::string_view name);

struct DisorderSpec {
    DisorderKind kind = DisorderKind::kBinary;
    std::uint64_t seed = 0;
    int realization_count = 1;

    bool operator==(const DisorderSpec &other) const = default;
};

/// Every mesh point set to theta. Throws ParameterError for num_steps < 1.
PhaseSchedule ordered_schedule(int num_steps, double theta);

/// One disorder realization.
///
/// Realization j draws from a 64-bit stream keyed by (seed, j): the key is
/// splitmix64(splitmix64(seed) ^ j), which seeds std::mt19937_64. Mesh points are
/// filled in (step, site) ascending order. Binary kind uses the top bit of each
/// draw to pick 0 or pi; uniform kind maps the top 53 bits to [0, 2 pi). Both
/// mappings are exact integer operations, so schedules are bit-identical on
/// every conforming platform.
///
/// Throws ParameterError if realization_index is outside [0, realization_count).
PhaseSchedule disordered_schedule(int num_steps, const DisorderSpec &spec, int realization_index);

/// All realizations of spec, in index order.
std::vector<PhaseSchedule> ensemble_schedules(int num_steps, const DisorderSpec &spec);

/// The splitmix64 finalizer used for sub-stream keys.
std::uint64_t splitmix64(std::uint64_t x);

}  // namespace qwalk

#endif  // QWALK_SCHEDULE_H
