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

#ifndef QWALK_CONFIG_H
#define QWALK_CONFIG_H

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qwalk/schedule.h"

namespace qwalk {

struct OrderedMode {
    double theta = 0.0;
    bool operator==(const OrderedMode &other) const = default;
};

struct DisorderedMode {
    DisorderSpec spec;
    bool operator==(const DisorderedMode &other) const = default;
};

using ScheduleMode = std::variant<OrderedMode, DisorderedMode>;

struct InitialCondition {
    int coin = 1;
    int site = 0;
    bool operator==(const InitialCondition &other) const = default;
};

/// Everything needed to produce one distribution series (or ensemble of them).
struct SimulationSpec {
    int steps = 1;
    double reflectivity = 0.5;
    ScheduleMode schedule_mode = OrderedMode{};
    InitialCondition initial;
    double loss_eta = 1.0;

    bool operator==(const SimulationSpec &other) const = default;
};

enum class OutputKind { kDistributions, kVariances, kSimilarity, kLayout, kOracleCheck, kPaths };

std::string_view to_string(OutputKind kind);

struct RunConfig {
    SimulationSpec simulation;
    std::vector<OutputKind> outputs;
    /// Present iff outputs contains kSimilarity. Shares the step count of `simulation`.
    std::optional<SimulationSpec> similarity_reference;
    std::string output_dir = ".";
    /// Also write distributions_peak.csv with each step divided by its maximum.
    bool step_peak_normalization = false;

    bool operator==(const RunConfig &other) const = default;
};

/// Parses a YAML (or JSON) run configuration.
///
/// Defaults: schedule_mode ordered with theta 0, initial coin 1 at site 0,
/// loss_eta 1, outputs [distributions, variances], output_dir ".".
/// A similarity_vs entry holds overrides of reflectivity, schedule_mode,
/// initial and loss_eta; other fields come from the main run.
///
/// Throws ConfigError naming the line and field for malformed documents,
/// unknown keys and out-of-range values.
RunConfig parse_config(std::string_view text);

/// Canonical JSON rendering; parse_config(config_to_json(c)) == c.
std::string config_to_json(const RunConfig &config);

}  // namespace qwalk

#endif  // QWALK_CONFIG_H
