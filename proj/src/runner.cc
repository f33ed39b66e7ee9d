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

#include "qwalk/runner.h"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <istream>
#include <json.hpp>
#include <map>
#include <ostream>
#include <sstream>

#include "qwalk/apparatus.h"
#include "qwalk/error.h"
#include "qwalk/format.h"
#include "qwalk/oracle.h"
#include "qwalk/walk.h"

namespace qwalk {

namespace {

using Json = nlohmann::ordered_json;

std::string utc_timestamp() {
    std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

class OutputDir {
   public:
    explicit OutputDir(std::filesystem::path root) : root_(std::move(root)) {
        std::error_code ec;
        std::filesystem::create_directories(root_, ec);
        if (ec) {
            throw IoError("cannot create output directory " + root_.string() + ": " + ec.message());
        }
    }

    template <typename Writer>
    void write(const std::string &name, Writer &&writer, std::vector<std::string> &written) {
        const auto path = root_ / name;
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw IoError("cannot open " + path.string() + " for writing");
        }
        writer(out);
        out.flush();
        if (!out) {
            throw IoError("failed writing " + path.string());
        }
        written.push_back(name);
    }

   private:
    std::filesystem::path root_;
};

Json schedule_table(const PhaseSchedule &schedule, int realization) {
    Json table = Json::array();
    for (int k = 1; k <= schedule.num_steps(); ++k) {
        for (int i = -(k - 1); i <= k - 1; i += 2) {
            table.push_back(Json{{"step", k}, {"site", i}, {"theta", schedule.theta(k, i)}});
        }
    }
    return Json{{"realization", realization}, {"table", table}};
}

Json schedule_list(const std::vector<PhaseSchedule> &schedules) {
    Json list = Json::array();
    for (std::size_t j = 0; j < schedules.size(); ++j) {
        list.push_back(schedule_table(schedules[j], static_cast<int>(j)));
    }
    return list;
}

std::vector<PhaseSchedule> parse_schedule_list(const Json &list, int steps) {
    std::vector<PhaseSchedule> out;
    if (!list.is_array()) {
        throw ConfigError("manifest schedules must be a list");
    }
    for (std::size_t j = 0; j < list.size(); ++j) {
        const Json &entry = list[j];
        if (!entry.contains("realization") || entry["realization"].get<std::size_t>() != j) {
            throw ConfigError("manifest schedule " + std::to_string(j) + " is out of order");
        }
        PhaseSchedule schedule(steps);
        const Json &table = entry.at("table");
        if (table.size() != schedule.size()) {
            throw ConfigError("manifest schedule " + std::to_string(j) + " has " + std::to_string(table.size()) +
                              " mesh points, expected " + std::to_string(schedule.size()));
        }
        for (const Json &cell : table) {
            try {
                schedule.set_theta(cell.at("step").get<int>(), cell.at("site").get<int>(),
                                   cell.at("theta").get<double>());
            } catch (const ReachabilityError &e) {
                throw ConfigError(std::string("manifest schedule ") + std::to_string(j) + ": " + e.what());
            }
        }
        out.push_back(std::move(schedule));
    }
    return out;
}

void require_schedule_count(const SimulationSpec &spec, const std::vector<PhaseSchedule> &schedules,
                            const char *which) {
    std::size_t expected = 1;
    if (const auto *d = std::get_if<DisorderedMode>(&spec.schedule_mode)) {
        expected = static_cast<std::size_t>(d->spec.realization_count);
    }
    if (schedules.size() != expected) {
        throw ConfigError(std::string(which) + " run needs " + std::to_string(expected) + " schedules, got " +
                          std::to_string(schedules.size()));
    }
}

}  // namespace

std::vector<PhaseSchedule> schedules_for(const SimulationSpec &spec) {
    if (const auto *ordered = std::get_if<OrderedMode>(&spec.schedule_mode)) {
        return {ordered_schedule(spec.steps, ordered->theta)};
    }
    return ensemble_schedules(spec.steps, std::get<DisorderedMode>(spec.schedule_mode).spec);
}

SimulationResult simulate(const SimulationSpec &spec, std::vector<PhaseSchedule> schedules, bool check_oracle) {
    if (schedules.empty()) {
        throw ParameterError("simulation needs at least one schedule");
    }
    const LossModel loss{spec.loss_eta};
    loss.validate();
    SimulationResult result;
    result.realizations.reserve(schedules.size());
    for (const PhaseSchedule &schedule : schedules) {
        auto trajectory = evolve(WalkerState::localized(spec.steps, spec.initial.coin), schedule, spec.reflectivity,
                                 spec.steps);
        DistributionSeries series;
        series.reserve(spec.steps);
        for (int k = 1; k <= spec.steps; ++k) {
            result.max_norm_drift = std::max(result.max_norm_drift, std::abs(trajectory[k].norm_squared() - 1.0));
            series.push_back(renormalize_measured(k, emulate_measured_powers(trajectory[k], loss)));
        }
        if (check_oracle) {
            double dev = max_amplitude_difference(
                trajectory.back(), oracle_state(spec.initial.coin, schedule, spec.reflectivity, spec.steps));
            result.oracle_deviation = std::max(result.oracle_deviation.value_or(0.0), dev);
        }
        result.realizations.push_back(std::move(series));
    }
    result.mean = ensemble_mean_series(result.realizations);
    result.schedules = std::move(schedules);
    return result;
}

void write_distributions_csv(std::ostream &out, const DistributionSeries &series, int site_offset) {
    out << "step,site,p\n";
    for (const auto &row : series) {
        for (int i : reachable_sites(row.step)) {
            out << row.step << ',' << (i + site_offset) << ',' << format_number(row.at(i)) << '\n';
        }
    }
}

void write_variances_csv(std::ostream &out, const DistributionSeries &series) {
    out << "step,variance\n";
    for (const auto &row : series) {
        out << row.step << ',' << format_number(variance(row)) << '\n';
    }
}

DistributionSeries read_distributions_csv(std::istream &in) {
    std::string line;
    if (!std::getline(in, line) || line != "step,site,p") {
        throw IoError("distributions file must start with header step,site,p");
    }
    std::map<int, std::map<int, double>> rows;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        int step = 0;
        int site = 0;
        double p = 0.0;
        const char *first = line.data();
        const char *last = line.data() + line.size();
        auto r1 = std::from_chars(first, last, step);
        auto r2 = r1.ec == std::errc{} && r1.ptr < last && *r1.ptr == ','
                      ? std::from_chars(r1.ptr + 1, last, site)
                      : std::from_chars_result{last, std::errc::invalid_argument};
        auto r3 = r2.ec == std::errc{} && r2.ptr < last && *r2.ptr == ','
                      ? std::from_chars(r2.ptr + 1, last, p)
                      : std::from_chars_result{last, std::errc::invalid_argument};
        if (r3.ec != std::errc{} || r3.ptr != last) {
            throw IoError("malformed distributions row at line " + std::to_string(line_no));
        }
        rows[step][site] = p;
    }
    DistributionSeries series;
    for (const auto &[step, sites] : rows) {
        if (step < 0 || sites.size() != static_cast<std::size_t>(step) + 1) {
            throw IoError("step " + std::to_string(step) + " must list " + std::to_string(step + 1) + " sites");
        }
        // Rows may carry an injection-site offset; recentre on the reachable set.
        const int offset = sites.begin()->first + step;
        Distribution dist{step, std::vector<double>(2 * static_cast<std::size_t>(step) + 1, 0.0)};
        int expected = -step;
        for (const auto &[site, p] : sites) {
            if (site - offset != expected) {
                throw IoError("step " + std::to_string(step) + " has non-reachable site " + std::to_string(site));
            }
            dist.p[expected + step] = p;
            expected += 2;
        }
        series.push_back(std::move(dist));
    }
    return series;
}

double similarity_report(const DistributionSeries &a, const DistributionSeries &b, std::ostream &out) {
    const double s = similarity(a, b);
    const auto partials = similarity_partials(a, b);
    out << "similarity," << format_number(s) << '\n';
    out << "step,partial\n";
    for (std::size_t j = 0; j < partials.size(); ++j) {
        out << a[j].step << ',' << format_number(partials[j]) << '\n';
    }
    return s;
}

std::string manifest_json(const RunConfig &config, const RunReport &report, std::string_view generated_at) {
    Json checks{{"max_norm_drift", report.main.max_norm_drift}};
    if (report.main.oracle_deviation) {
        checks["oracle_max_deviation"] = *report.main.oracle_deviation;
    }
    if (report.similarity) {
        checks["similarity"] = *report.similarity;
    }
    Json schedules{{"main", schedule_list(report.main.schedules)}};
    if (report.reference) {
        schedules["reference"] = schedule_list(report.reference->schedules);
    }
    Json doc{
        {"artifact", "qwalk"},
        {"version", std::string(kVersion)},
        {"generated_at", std::string(generated_at)},
        {"config", Json::parse(config_to_json(config))},
        {"schedules", schedules},
        {"files", report.files_written},
        {"checks", checks},
        {"violations", report.violations},
    };
    return doc.dump(2) + "\n";
}

std::pair<RunConfig, ScheduleOverride> read_manifest(std::string_view text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error &e) {
        throw ConfigError(std::string("malformed manifest: ") + e.what());
    }
    if (!doc.contains("config") || !doc.contains("schedules")) {
        throw ConfigError("manifest needs config and schedules");
    }
    RunConfig config = parse_config(doc["config"].dump());
    ScheduleOverride schedules;
    try {
        const Json &tables = doc["schedules"];
        schedules.main = parse_schedule_list(tables.at("main"), config.simulation.steps);
        if (config.similarity_reference) {
            schedules.reference = parse_schedule_list(tables.at("reference"), config.simulation.steps);
        }
    } catch (const Json::exception &e) {
        throw ConfigError(std::string("malformed manifest schedules: ") + e.what());
    }
    return {std::move(config), std::move(schedules)};
}

RunReport run(const RunConfig &config, const std::optional<ScheduleOverride> &schedules) {
    const SimulationSpec &sim = config.simulation;
    auto wants = [&](OutputKind kind) {
        return std::find(config.outputs.begin(), config.outputs.end(), kind) != config.outputs.end();
    };

    RunReport report;
    std::vector<PhaseSchedule> main_schedules = schedules ? schedules->main : schedules_for(sim);
    require_schedule_count(sim, main_schedules, "main");
    report.main = simulate(sim, std::move(main_schedules), wants(OutputKind::kOracleCheck));

    if (wants(OutputKind::kSimilarity)) {
        if (!config.similarity_reference) {
            throw ConfigError("similarity_vs output needs a reference configuration");
        }
        const SimulationSpec &ref = *config.similarity_reference;
        std::vector<PhaseSchedule> ref_schedules = schedules ? schedules->reference : schedules_for(ref);
        require_schedule_count(ref, ref_schedules, "reference");
        report.reference = simulate(ref, std::move(ref_schedules));
        report.similarity = similarity(report.main.mean, report.reference->mean);
    }

    for (const auto *result : {&report.main, report.reference ? &*report.reference : nullptr}) {
        if (result != nullptr && result->max_norm_drift > kNormTolerance) {
            report.violations.push_back("norm drift " + format_number(result->max_norm_drift) + " exceeds " +
                                        format_number(kNormTolerance));
        }
    }
    if (report.main.oracle_deviation && *report.main.oracle_deviation > kOracleTolerance) {
        report.violations.push_back("oracle deviation " + format_number(*report.main.oracle_deviation) +
                                    " exceeds " + format_number(kOracleTolerance));
    }

    OutputDir dir(config.output_dir);
    auto &written = report.files_written;
    const bool disordered = std::holds_alternative<DisorderedMode>(sim.schedule_mode);
    const int offset = sim.initial.site;

    if (wants(OutputKind::kDistributions)) {
        dir.write("distributions.csv", [&](std::ostream &out) { write_distributions_csv(out, report.main.mean, offset); },
                  written);
        if (config.step_peak_normalization) {
            dir.write("distributions_peak.csv",
                      [&](std::ostream &out) {
                          write_distributions_csv(out, normalize_to_step_peak(report.main.mean), offset);
                      },
                      written);
        }
    }
    if (wants(OutputKind::kVariances)) {
        dir.write("variances.csv", [&](std::ostream &out) { write_variances_csv(out, report.main.mean); }, written);
        if (disordered) {
            for (std::size_t j = 0; j < report.main.realizations.size(); ++j) {
                dir.write("variances_r" + std::to_string(j) + ".csv",
                          [&](std::ostream &out) { write_variances_csv(out, report.main.realizations[j]); }, written);
            }
        }
    }
    if (report.similarity) {
        dir.write("similarity.txt",
                  [&](std::ostream &out) { similarity_report(report.main.mean, report.reference->mean, out); },
                  written);
    }
    if (wants(OutputKind::kLayout)) {
        dir.write("layout.csv", [&](std::ostream &out) { write_layout_csv(out, sim.steps); }, written);
    }
    if (wants(OutputKind::kOracleCheck)) {
        dir.write("oracle_check.txt",
                  [&](std::ostream &out) {
                      out << "max_deviation," << format_number(report.main.oracle_deviation.value_or(0.0)) << '\n';
                      out << "tolerance," << format_number(kOracleTolerance) << '\n';
                      out << "status," << (*report.main.oracle_deviation > kOracleTolerance ? "fail" : "pass")
                          << '\n';
                  },
                  written);
    }
    if (wants(OutputKind::kPaths)) {
        dir.write("paths.csv",
                  [&](std::ostream &out) {
                      write_paths_csv(out, enumerate_paths(sim.initial.coin, report.main.schedules.front(),
                                                           sim.reflectivity, sim.steps));
                  },
                  written);
    }

    written.push_back("manifest.json");
    report.manifest_json = manifest_json(config, report, utc_timestamp());
    std::vector<std::string> unused;
    dir.write("manifest.json", [&](std::ostream &out) { out << report.manifest_json; }, unused);
    return report;
}

}  // namespace qwalk
