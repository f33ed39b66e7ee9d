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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "qwalk/error.h"

namespace {

using namespace qwalk;
namespace fs = std::filesystem;

fs::path fresh_dir(const std::string &tag) {
    const auto *info = ::testing::UnitTest::GetInstance()->current_test_info();
    auto dir = fs::temp_directory_path() / ("qwalk_" + std::string(info->name()) + "_" + tag);
    fs::remove_all(dir);
    return dir;
}

std::string slurp(const fs::path &path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

RunConfig config_in(const std::string &yaml, const fs::path &dir) {
    auto config = parse_config(yaml);
    config.output_dir = dir.string();
    return config;
}

TEST(run, ordered_golden_files) {
    auto dir = fresh_dir("a");
    auto report = run(config_in("steps: 3\nreflectivity: 0.5\noutputs: [distributions, variances]\n", dir));
    EXPECT_TRUE(report.violations.empty());
    EXPECT_EQ(slurp(dir / "variances.csv"), "step,variance\n1,1\n2,2\n3,2.75\n");
    EXPECT_EQ(slurp(dir / "distributions.csv"),
              "step,site,p\n"
              "1,-1,0.5\n1,1,0.5\n"
              "2,-2,0.25\n2,0,0.5\n2,2,0.25\n"
              "3,-3,0.125\n3,-1,0.625\n3,1,0.125\n3,3,0.125\n");
    EXPECT_TRUE(fs::exists(dir / "manifest.json"));
    EXPECT_EQ(report.files_written,
              (std::vector<std::string>{"distributions.csv", "variances.csv", "manifest.json"}));
}

TEST(run, injection_site_offsets_output_sites) {
    auto dir = fresh_dir("a");
    run(config_in("steps: 1\nreflectivity: 0.5\ninitial: {coin: 1, site: 5}\noutputs: [distributions]\n", dir));
    EXPECT_EQ(slurp(dir / "distributions.csv"), "step,site,p\n1,4,0.5\n1,6,0.5\n");
}

TEST(run, disordered_writes_per_realization_variances) {
    auto dir = fresh_dir("a");
    auto report = run(config_in(
        "steps: 4\nreflectivity: 0.5\nschedule_mode: {disordered: {seed: 3, realization_count: 3}}\n"
        "outputs: [variances]\n",
        dir));
    for (int j = 0; j < 3; ++j) {
        EXPECT_TRUE(fs::exists(dir / ("variances_r" + std::to_string(j) + ".csv")));
    }
    EXPECT_EQ(report.main.realizations.size(), 3u);
    EXPECT_EQ(report.main.schedules.size(), 3u);
}

TEST(run, all_outputs_and_oracle_check) {
    auto dir = fresh_dir("a");
    auto report = run(config_in(R"(
steps: 7
reflectivity: 0.44
schedule_mode: {disordered: {kind: binary, seed: 11, realization_count: 5}}
outputs: [distributions, variances, layout, oracle_check, paths, {similarity_vs: {reflectivity: 0.5}}]
step_peak_normalization: true
)",
                                dir));
    EXPECT_TRUE(report.violations.empty());
    ASSERT_TRUE(report.main.oracle_deviation);
    EXPECT_LT(*report.main.oracle_deviation, 1e-10);
    ASSERT_TRUE(report.similarity);
    EXPECT_GT(*report.similarity, 0.0);
    EXPECT_LE(*report.similarity, 1.0);
    for (const char *name : {"distributions.csv", "distributions_peak.csv", "variances.csv", "layout.csv",
                             "oracle_check.txt", "paths.csv", "similarity.txt", "manifest.json"}) {
        EXPECT_TRUE(fs::exists(dir / name)) << name;
    }
    EXPECT_NE(slurp(dir / "oracle_check.txt").find("status,pass"), std::string::npos);
    std::istringstream paths(slurp(dir / "paths.csv"));
    int lines = 0;
    for (std::string line; std::getline(paths, line);) {
        ++lines;
    }
    EXPECT_EQ(lines, 129);
}

TEST(run, deterministic_bytes_and_manifest_replay) {
    const std::string yaml = R"(
steps: 7
reflectivity: 0.46
schedule_mode: {disordered: {kind: uniform, seed: 8, realization_count: 12}}
outputs: [distributions, variances, {similarity_vs: {schedule_mode: {disordered: {seed: 9, realization_count: 4}}}}]
)";
    auto dir_a = fresh_dir("a");
    auto dir_b = fresh_dir("b");
    auto dir_c = fresh_dir("c");
    auto a = run(config_in(yaml, dir_a));
    run(config_in(yaml, dir_b));
    for (const auto &name : a.files_written) {
        if (name == "manifest.json") {
            continue;
        }
        EXPECT_EQ(slurp(dir_a / name), slurp(dir_b / name)) << name;
    }

    auto [config, schedules] = read_manifest(slurp(dir_a / "manifest.json"));
    EXPECT_EQ(schedules.main, a.main.schedules);
    EXPECT_EQ(schedules.reference, a.reference->schedules);
    config.output_dir = dir_c.string();
    auto replay = run(config, schedules);
    EXPECT_EQ(replay.main.mean, a.main.mean);
    EXPECT_EQ(replay.similarity, a.similarity);
    for (const auto &name : a.files_written) {
        if (name == "manifest.json") {
            continue;
        }
        EXPECT_EQ(slurp(dir_a / name), slurp(dir_c / name)) << name;
    }
}

TEST(run, replay_uses_recorded_schedules_not_the_seed) {
    auto dir = fresh_dir("a");
    auto config = config_in("steps: 3\nreflectivity: 0.5\nschedule_mode: {disordered: {realization_count: 1}}\n", dir);
    ScheduleOverride override_schedules{{ordered_schedule(3, 0.0)}, {}};
    auto report = run(config, override_schedules);
    EXPECT_NEAR(variance(report.main.mean.back()), 2.75, 1e-12);

    ScheduleOverride wrong_count{{ordered_schedule(3, 0.0), ordered_schedule(3, 0.0)}, {}};
    EXPECT_THROW(run(config, wrong_count), ConfigError);
}

TEST(read_manifest, rejects_malformed) {
    EXPECT_THROW(read_manifest("{"), ConfigError);
    EXPECT_THROW(read_manifest("{\"config\": {}}"), ConfigError);
    EXPECT_THROW(read_manifest(R"({"config": {"steps": 2, "reflectivity": 0.5},
                                   "schedules": {"main": [{"realization": 0, "table": []}]}})"),
                 ConfigError);
    EXPECT_THROW(read_manifest(R"({"config": {"steps": 1, "reflectivity": 0.5},
                                   "schedules": {"main": [{"realization": 0,
                                   "table": [{"step": 1, "site": 1, "theta": 0}]}]}})"),
                 ConfigError);
}

TEST(run, unwritable_output_dir) {
    auto dir = fresh_dir("a");
    fs::create_directories(dir);
    std::ofstream(dir / "blocker") << "x";
    auto config = config_in("steps: 2\nreflectivity: 0.5\n", dir / "blocker" / "sub");
    EXPECT_THROW(run(config), IoError);
}

TEST(similarity_report, self_comparison) {
    SimulationSpec spec;
    spec.steps = 3;
    auto result = simulate(spec, schedules_for(spec));
    std::ostringstream out;
    EXPECT_NEAR(similarity_report(result.mean, result.mean, out), 1.0, 1e-12);
    EXPECT_EQ(out.str(), "similarity,1\nstep,partial\n1,1\n2,1\n3,1\n");
}

TEST(distributions_csv, round_trip_with_offset) {
    SimulationSpec spec;
    spec.steps = 6;
    spec.reflectivity = 0.44;
    auto result = simulate(spec, schedules_for(spec));
    std::stringstream io;
    write_distributions_csv(io, result.mean, -2);
    auto back = read_distributions_csv(io);
    ASSERT_EQ(back.size(), result.mean.size());
    for (std::size_t j = 0; j < back.size(); ++j) {
        for (std::size_t i = 0; i < back[j].p.size(); ++i) {
            EXPECT_NEAR(back[j].p[i], result.mean[j].p[i], 1e-12);
        }
    }
    std::istringstream bad("step,site,p\n1,-1,0.5\n");
    EXPECT_THROW(read_distributions_csv(bad), IoError);
    std::istringstream garbage("step,site,p\n1;-1;0.5\n");
    EXPECT_THROW(read_distributions_csv(garbage), IoError);
}

TEST(simulate, reflectivity_sweep_ordering) {
    std::vector<double> var7;
    for (double r : {0.46, 0.50, 0.54}) {
        SimulationSpec spec;
        spec.steps = 7;
        spec.reflectivity = r;
        spec.schedule_mode = DisorderedMode{{DisorderKind::kBinary, 7, 100}};
        var7.push_back(variance(simulate(spec, schedules_for(spec)).mean.back()));
    }
    EXPECT_GT(var7[0], var7[1]);
    EXPECT_GT(var7[1], var7[2]);
}

}  // namespace
