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

// Batch front end: qwalk run | replay | compare.
//
// Exit status: 0 success, 1 configuration error, 2 numerical-invariant
// violation, 3 I/O error.

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "qwalk/error.h"
#include "qwalk/format.h"
#include "qwalk/runner.h"

namespace {

enum ExitCode { kOk = 0, kConfigError = 1, kInvariantViolation = 2, kIoError = 3 };

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw qwalk::IoError("cannot read " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int report_run(const qwalk::RunReport &report, const std::string &dir) {
    std::cout << "wrote " << report.files_written.size() << " files to " << dir << "\n";
    std::cout << "max norm drift " << qwalk::format_number(report.main.max_norm_drift) << "\n";
    if (report.main.oracle_deviation) {
        std::cout << "oracle max deviation " << qwalk::format_number(*report.main.oracle_deviation) << "\n";
    }
    if (report.similarity) {
        std::cout << "similarity " << qwalk::format_number(*report.similarity) << "\n";
    }
    for (const auto &v : report.violations) {
        std::cerr << "invariant violated: " << v << "\n";
    }
    return report.violations.empty() ? kOk : kInvariantViolation;
}

int guarded(const std::function<int()> &body) {
    try {
        return body();
    } catch (const qwalk::ConfigError &e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kConfigError;
    } catch (const qwalk::ParameterError &e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kConfigError;
    } catch (const qwalk::IoError &e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return kIoError;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvariantViolation;
    }
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Discrete-time quantum walk simulator for beam-splitter meshes"};
    app.set_version_flag("--version", std::string(qwalk::kVersion));
    app.require_subcommand(1);

    std::string config_path;
    std::string output_dir;
    auto *run_cmd = app.add_subcommand("run", "Simulate a run configuration and write its outputs");
    run_cmd->add_option("config", config_path, "YAML or JSON run configuration")->required();
    run_cmd->add_option("-o,--output-dir", output_dir, "Override output_dir from the configuration");

    std::string manifest_path;
    auto *replay_cmd = app.add_subcommand("replay", "Re-run from a manifest using its recorded phase schedules");
    replay_cmd->add_option("manifest", manifest_path, "manifest.json from an earlier run")->required();
    replay_cmd->add_option("-o,--output-dir", output_dir, "Override output_dir from the manifest");

    std::string series_a;
    std::string series_b;
    std::string similarity_out;
    auto *compare_cmd = app.add_subcommand("compare", "Similarity of two distributions.csv files");
    compare_cmd->add_option("a", series_a, "First distributions.csv")->required();
    compare_cmd->add_option("b", series_b, "Second distributions.csv")->required();
    compare_cmd->add_option("-o,--output", similarity_out, "Write the report here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kConfigError;
    }

    if (*run_cmd) {
        return guarded([&] {
            qwalk::RunConfig config = qwalk::parse_config(read_file(config_path));
            if (!output_dir.empty()) {
                config.output_dir = output_dir;
            }
            return report_run(qwalk::run(config), config.output_dir);
        });
    }
    if (*replay_cmd) {
        return guarded([&] {
            auto [config, schedules] = qwalk::read_manifest(read_file(manifest_path));
            if (!output_dir.empty()) {
                config.output_dir = output_dir;
            }
            return report_run(qwalk::run(config, schedules), config.output_dir);
        });
    }
    return guarded([&] {
        std::ifstream a(series_a);
        std::ifstream b(series_b);
        if (!a || !b) {
            throw qwalk::IoError("cannot read " + std::string(!a ? series_a : series_b));
        }
        auto ga = qwalk::read_distributions_csv(a);
        auto gb = qwalk::read_distributions_csv(b);
        if (similarity_out.empty()) {
            qwalk::similarity_report(ga, gb, std::cout);
        } else {
            std::ofstream out(similarity_out, std::ios::binary);
            if (!out) {
                throw qwalk::IoError("cannot write " + similarity_out);
            }
            qwalk::similarity_report(ga, gb, out);
        }
        return kOk;
    });
}
