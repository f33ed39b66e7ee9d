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

#ifndef QWALK_RUNNER_H
#define QWALK_RUNNER_H

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qwalk/config.h"
#include "qwalk/measure.h"
#include "qwalk/schedule.h"

namespace qwalk {

inline constexpr std::string_view kVersion = "0.1.0";

/// Largest tolerated |norm - 1| after any lossless step, and largest tolerated
/// evolve-vs-oracle amplitude difference.
inline constexpr double kNormTolerance = 1e-10;
inline constexpr double kOracleTolerance = 1e-10;

/// Statistics of one simulated configuration (ordered, or a whole disorder ensemble).
struct SimulationResult {
    std::vector<PhaseSchedule> schedules;
    /// One series per realization, steps 1..N, loss-renormalized.
    std::vector<DistributionSeries> realizations;
    /// Ensemble mean (the single realization for ordered runs).
    DistributionSeries mean;
    double max_norm_drift = 0.0;
    /// Set when the oracle comparison was requested.
    std::optional<double> oracle_deviation;
};

/// The schedules a spec calls for: one ordered schedule, or its disorder ensemble.
std::vector<PhaseSchedule> schedules_for(const SimulationSpec &spec);

/// Evolves every schedule from the spec's initial state and collects statistics.
/// Sites are relative to the injection site. With check_oracle, each final state
/// is also compared to the path sum.
SimulationResult simulate(const SimulationSpec &spec, std::vector<PhaseSchedule> schedules, bool check_oracle = false);

struct RunReport {
    SimulationResult main;
    std::optional<SimulationResult> reference;
    std::optional<double> similarity;
    std::vector<std::string> files_written;
    /// Non-empty when a numerical invariant (norm drift, oracle deviation) failed.
    std::vector<std::string> violations;
    std::string manifest_json;
};

/// Schedules to reuse instead of drawing them, as read back from a manifest.
struct ScheduleOverride {
    std::vector<PhaseSchedule> main;
    std::vector<PhaseSchedule> reference;
};

/// Runs a configuration and writes the requested files plus manifest.json
/// into output_dir (created if missing). Throws IoError on write failures.
RunReport run(const RunConfig &config, const std::optional<ScheduleOverride> &schedules = std::nullopt);

/// Writes the similarity S and per-step partial overlaps; returns S.
double similarity_report(const DistributionSeries &a, const DistributionSeries &b, std::ostream &out);

/// Header step,site,p; sites shifted by site_offset.
void write_distributions_csv(std::ostream &out, const DistributionSeries &series, int site_offset = 0);
/// Header step,variance.
void write_variances_csv(std::ostream &out, const DistributionSeries &series);

/// Reads a distributions.csv back; throws IoError on malformed input.
DistributionSeries read_distributions_csv(std::istream &in);

/// Manifest document for a finished run.
std::string manifest_json(const RunConfig &config, const RunReport &report, std::string_view generated_at);

/// Parses a manifest into its configuration and schedules.
std::pair<RunConfig, ScheduleOverride> read_manifest(std::string_view text);

}  // namespace qwalk

#endif  // QWALK_RUNNER_H
