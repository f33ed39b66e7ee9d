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

#include "qwalk/config.h"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <json.hpp>
#include <string>

#include "qwalk/error.h"
#include "qwalk/oracle.h"

namespace qwalk {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void fail(const YAML::Node &node, const std::string &field, const std::string &message) {
    std::string where;
    if (node.Mark().line >= 0) {
        where = "line " + std::to_string(node.Mark().line + 1) + ": ";
    }
    throw ConfigError(where + "field '" + field + "': " + message);
}

template <typename T>
T read_scalar(const YAML::Node &node, const std::string &field, const char *expected) {
    if (!node.IsScalar()) {
        fail(node, field, std::string("expected ") + expected);
    }
    try {
        return node.as<T>();
    } catch (const YAML::BadConversion &) {
        fail(node, field, std::string("expected ") + expected + ", got '" + node.Scalar() + "'");
    }
}

double read_real(const YAML::Node &node, const std::string &field) {
    double x = read_scalar<double>(node, field, "a real number");
    if (!std::isfinite(x)) {
        fail(node, field, "must be finite");
    }
    return x;
}

void require_map(const YAML::Node &node, const std::string &field) {
    if (!node.IsMap()) {
        fail(node, field, "expected a mapping");
    }
}

void reject_unknown_keys(const YAML::Node &map, const std::string &prefix, std::initializer_list<const char *> allowed) {
    for (const auto &entry : map) {
        const auto key = entry.first.as<std::string>();
        bool known = std::any_of(allowed.begin(), allowed.end(), [&](const char *a) { return key == a; });
        if (!known) {
            std::string expected;
            for (const char *a : allowed) {
                expected += expected.empty() ? a : std::string(", ") + a;
            }
            fail(entry.first, prefix + key, "unknown key (expected one of: " + expected + ")");
        }
    }
}

double read_reflectivity(const YAML::Node &node, const std::string &field) {
    double r = read_real(node, field);
    if (r < 0.0 || r > 1.0) {
        fail(node, field, "must lie in [0, 1], got " + node.Scalar());
    }
    return r;
}

double read_loss(const YAML::Node &node, const std::string &field) {
    double eta = read_real(node, field);
    if (!(eta > 0.0 && eta <= 1.0)) {
        fail(node, field, "must lie in (0, 1], got " + node.Scalar());
    }
    return eta;
}

ScheduleMode read_schedule_mode(const YAML::Node &node, const std::string &field) {
    if (node.IsScalar()) {
        if (node.Scalar() == "ordered") {
            return OrderedMode{};
        }
        fail(node, field, "expected 'ordered' or a mapping with key ordered or disordered");
    }
    require_map(node, field);
    if (node.size() != 1) {
        fail(node, field, "expected exactly one of ordered or disordered");
    }
    reject_unknown_keys(node, field + ".", {"ordered", "disordered"});
    if (const auto ordered = node["ordered"]) {
        const std::string sub = field + ".ordered";
        OrderedMode mode;
        if (ordered.IsNull()) {
            return mode;
        }
        require_map(ordered, sub);
        reject_unknown_keys(ordered, sub + ".", {"theta"});
        if (const auto theta = ordered["theta"]) {
            mode.theta = read_real(theta, sub + ".theta");
        }
        return mode;
    }
    const auto disordered = node["disordered"];
    const std::string sub = field + ".disordered";
    require_map(disordered, sub);
    reject_unknown_keys(disordered, sub + ".", {"kind", "seed", "realization_count"});
    DisorderedMode mode;
    if (const auto kind = disordered["kind"]) {
        try {
            mode.spec.kind = parse_disorder_kind(read_scalar<std::string>(kind, sub + ".kind", "a string"));
        } catch (const ParameterError &e) {
            fail(kind, sub + ".kind", e.what());
        }
    }
    if (const auto seed = disordered["seed"]) {
        if (seed.IsScalar() && !seed.Scalar().empty() && seed.Scalar().front() == '-') {
            fail(seed, sub + ".seed", "must be a nonnegative 64-bit integer");
        }
        mode.spec.seed = read_scalar<std::uint64_t>(seed, sub + ".seed", "a nonnegative 64-bit integer");
    }
    if (const auto count = disordered["realization_count"]) {
        mode.spec.realization_count = read_scalar<int>(count, sub + ".realization_count", "an integer");
        if (mode.spec.realization_count < 1) {
            fail(count, sub + ".realization_count", "must be at least 1");
        }
    }
    return mode;
}

InitialCondition read_initial(const YAML::Node &node, const std::string &field) {
    require_map(node, field);
    reject_unknown_keys(node, field + ".", {"coin", "site"});
    InitialCondition init;
    if (const auto coin = node["coin"]) {
        init.coin = read_scalar<int>(coin, field + ".coin", "an integer");
        if (init.coin != 0 && init.coin != 1) {
            fail(coin, field + ".coin", "must be 0 or 1");
        }
    }
    if (const auto site = node["site"]) {
        init.site = read_scalar<int>(site, field + ".site", "an integer");
    }
    return init;
}

SimulationSpec read_reference(const YAML::Node &node, const SimulationSpec &base, const std::string &field) {
    SimulationSpec ref = base;
    if (node.IsNull()) {
        return ref;
    }
    require_map(node, field);
    reject_unknown_keys(node, field + ".", {"reflectivity", "schedule_mode", "initial", "loss_eta"});
    if (const auto r = node["reflectivity"]) {
        ref.reflectivity = read_reflectivity(r, field + ".reflectivity");
    }
    if (const auto mode = node["schedule_mode"]) {
        ref.schedule_mode = read_schedule_mode(mode, field + ".schedule_mode");
    }
    if (const auto init = node["initial"]) {
        ref.initial = read_initial(init, field + ".initial");
    }
    if (const auto eta = node["loss_eta"]) {
        ref.loss_eta = read_loss(eta, field + ".loss_eta");
    }
    return ref;
}

OutputKind read_output_name(const YAML::Node &node, const std::string &field) {
    const auto name = read_scalar<std::string>(node, field, "an output name");
    for (OutputKind kind : {OutputKind::kDistributions, OutputKind::kVariances, OutputKind::kLayout,
                            OutputKind::kOracleCheck, OutputKind::kPaths}) {
        if (name == to_string(kind)) {
            return kind;
        }
    }
    fail(node, field,
         "unknown output '" + name + "' (expected distributions, variances, layout, oracle_check, paths or similarity_vs)");
}

Json mode_to_json(const ScheduleMode &mode) {
    if (const auto *ordered = std::get_if<OrderedMode>(&mode)) {
        return Json{{"ordered", Json{{"theta", ordered->theta}}}};
    }
    const auto &spec = std::get<DisorderedMode>(mode).spec;
    return Json{{"disordered", Json{{"kind", std::string(to_string(spec.kind))},
                                    {"seed", spec.seed},
                                    {"realization_count", spec.realization_count}}}};
}

Json initial_to_json(const InitialCondition &init) {
    return Json{{"coin", init.coin}, {"site", init.site}};
}

}  // namespace

std::string_view to_string(OutputKind kind) {
    switch (kind) {
        case OutputKind::kDistributions:
            return "distributions";
        case OutputKind::kVariances:
            return "variances";
        case OutputKind::kSimilarity:
            return "similarity_vs";
        case OutputKind::kLayout:
            return "layout";
        case OutputKind::kOracleCheck:
            return "oracle_check";
        case OutputKind::kPaths:
            return "paths";
    }
    return "unknown";
}

RunConfig parse_config(std::string_view text) {
    YAML::Node root;
    try {
        root = YAML::Load(std::string(text));
    } catch (const YAML::ParserException &e) {
        throw ConfigError("line " + std::to_string(e.mark.line + 1) + ": malformed document: " + e.msg);
    }
    if (!root.IsMap()) {
        throw ConfigError("configuration must be a mapping with at least steps and reflectivity");
    }
    reject_unknown_keys(root, "", {"steps", "reflectivity", "schedule_mode", "initial", "loss_eta", "outputs",
                                   "output_dir", "step_peak_normalization"});

    RunConfig config;
    SimulationSpec &sim = config.simulation;
    const auto steps = root["steps"];
    if (!steps) {
        fail(root, "steps", "required");
    }
    sim.steps = read_scalar<int>(steps, "steps", "an integer");
    if (sim.steps < 1) {
        fail(steps, "steps", "must be at least 1, got " + steps.Scalar());
    }
    const auto reflectivity = root["reflectivity"];
    if (!reflectivity) {
        fail(root, "reflectivity", "required");
    }
    sim.reflectivity = read_reflectivity(reflectivity, "reflectivity");
    if (const auto mode = root["schedule_mode"]) {
        sim.schedule_mode = read_schedule_mode(mode, "schedule_mode");
    }
    if (const auto init = root["initial"]) {
        sim.initial = read_initial(init, "initial");
    }
    if (const auto eta = root["loss_eta"]) {
        sim.loss_eta = read_loss(eta, "loss_eta");
    }
    if (const auto dir = root["output_dir"]) {
        config.output_dir = read_scalar<std::string>(dir, "output_dir", "a path");
    }
    if (const auto peak = root["step_peak_normalization"]) {
        config.step_peak_normalization = read_scalar<bool>(peak, "step_peak_normalization", "true or false");
    }

    if (const auto outputs = root["outputs"]) {
        if (!outputs.IsSequence()) {
            fail(outputs, "outputs", "expected a list");
        }
        for (std::size_t n = 0; n < outputs.size(); ++n) {
            const auto item = outputs[n];
            const std::string field = "outputs[" + std::to_string(n) + "]";
            OutputKind kind;
            if (item.IsMap()) {
                reject_unknown_keys(item, field + ".", {"similarity_vs"});
                kind = OutputKind::kSimilarity;
                config.similarity_reference = read_reference(item["similarity_vs"], sim, field + ".similarity_vs");
            } else {
                kind = read_output_name(item, field);
            }
            if (std::find(config.outputs.begin(), config.outputs.end(), kind) != config.outputs.end()) {
                fail(item, field, "output '" + std::string(to_string(kind)) + "' listed twice");
            }
            config.outputs.push_back(kind);
        }
    } else {
        config.outputs = {OutputKind::kDistributions, OutputKind::kVariances};
    }

    bool enumerates = std::any_of(config.outputs.begin(), config.outputs.end(), [](OutputKind k) {
        return k == OutputKind::kOracleCheck || k == OutputKind::kPaths;
    });
    if (enumerates && sim.steps > kMaxOracleSteps) {
        fail(steps, "steps", "oracle_check and paths outputs need steps <= " + std::to_string(kMaxOracleSteps));
    }
    return config;
}

std::string config_to_json(const RunConfig &config) {
    const SimulationSpec &sim = config.simulation;
    Json outputs = Json::array();
    for (OutputKind kind : config.outputs) {
        if (kind == OutputKind::kSimilarity && config.similarity_reference) {
            const SimulationSpec &ref = *config.similarity_reference;
            outputs.push_back(Json{{"similarity_vs", Json{{"reflectivity", ref.reflectivity},
                                                          {"schedule_mode", mode_to_json(ref.schedule_mode)},
                                                          {"initial", initial_to_json(ref.initial)},
                                                          {"loss_eta", ref.loss_eta}}}});
        } else {
            outputs.push_back(std::string(to_string(kind)));
        }
    }
    Json doc{
        {"steps", sim.steps},
        {"reflectivity", sim.reflectivity},
        {"schedule_mode", mode_to_json(sim.schedule_mode)},
        {"initial", initial_to_json(sim.initial)},
        {"loss_eta", sim.loss_eta},
        {"outputs", outputs},
        {"output_dir", config.output_dir},
        {"step_peak_normalization", config.step_peak_normalization},
    };
    return doc.dump(2);
}

}  // namespace qwalk
