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

#include <gtest/gtest.h>

#include "qwalk/error.h"

namespace {

using namespace qwalk;

std::string error_of(std::string_view text) {
    try {
        parse_config(text);
    } catch (const ConfigError &e) {
        return e.what();
    }
    return "";
}

TEST(parse_config, minimal_defaults) {
    auto c = parse_config("steps: 7\nreflectivity: 0.5\n");
    EXPECT_EQ(c.simulation.steps, 7);
    EXPECT_EQ(c.simulation.reflectivity, 0.5);
    ASSERT_TRUE(std::holds_alternative<OrderedMode>(c.simulation.schedule_mode));
    EXPECT_EQ(std::get<OrderedMode>(c.simulation.schedule_mode).theta, 0.0);
    EXPECT_EQ(c.simulation.initial, (InitialCondition{1, 0}));
    EXPECT_EQ(c.simulation.loss_eta, 1.0);
    EXPECT_EQ(c.outputs, (std::vector<OutputKind>{OutputKind::kDistributions, OutputKind::kVariances}));
    EXPECT_FALSE(c.similarity_reference);
    EXPECT_EQ(c.output_dir, ".");
}

TEST(parse_config, disordered_real_device) {
    auto c = parse_config(R"(
steps: 7
reflectivity: 0.44
schedule_mode:
  disordered: {kind: binary, seed: 42, realization_count: 100}
)");
    ASSERT_TRUE(std::holds_alternative<DisorderedMode>(c.simulation.schedule_mode));
    EXPECT_EQ(std::get<DisorderedMode>(c.simulation.schedule_mode).spec,
              (DisorderSpec{DisorderKind::kBinary, 42, 100}));
    EXPECT_EQ(c.simulation.reflectivity, 0.44);
}

TEST(parse_config, reflectivity_out_of_range_names_field_and_line) {
    auto msg = error_of("steps: 7\nreflectivity: 1.2\n");
    EXPECT_NE(msg.find("reflectivity"), std::string::npos) << msg;
    EXPECT_NE(msg.find("line 2"), std::string::npos) << msg;
}

TEST(parse_config, unknown_keys_rejected) {
    auto msg = error_of("steps: 7\nreflectivity: 0.5\ncolour: blue\n");
    EXPECT_NE(msg.find("colour"), std::string::npos) << msg;
    EXPECT_NE(msg.find("line 3"), std::string::npos) << msg;
    msg = error_of("steps: 7\nreflectivity: 0.5\nschedule_mode:\n  disordered: {kind: binary, sed: 1}\n");
    EXPECT_NE(msg.find("schedule_mode.disordered.sed"), std::string::npos) << msg;
    msg = error_of("steps: 7\nreflectivity: 0.5\ninitial: {coin: 1, site: 0, spin: up}\n");
    EXPECT_NE(msg.find("initial.spin"), std::string::npos) << msg;
}

TEST(parse_config, value_errors) {
    EXPECT_NE(error_of("steps: 0\nreflectivity: 0.5\n").find("steps"), std::string::npos);
    EXPECT_NE(error_of("steps: seven\nreflectivity: 0.5\n").find("steps"), std::string::npos);
    EXPECT_NE(error_of("reflectivity: 0.5\n").find("steps"), std::string::npos);
    EXPECT_NE(error_of("steps: 3\n").find("reflectivity"), std::string::npos);
    EXPECT_NE(error_of("steps: 3\nreflectivity: 0.5\nloss_eta: 0\n").find("loss_eta"), std::string::npos);
    EXPECT_NE(error_of("steps: 3\nreflectivity: 0.5\ninitial: {coin: 2}\n").find("initial.coin"), std::string::npos);
    EXPECT_NE(error_of("steps: 3\nreflectivity: 0.5\nschedule_mode: {disordered: {kind: gaussian}}\n")
                  .find("schedule_mode.disordered.kind"),
              std::string::npos);
    EXPECT_NE(error_of("steps: 3\nreflectivity: 0.5\nschedule_mode: {disordered: {realization_count: 0}}\n")
                  .find("realization_count"),
              std::string::npos);
    EXPECT_NE(error_of("steps: 3\nreflectivity: 0.5\nschedule_mode: {disordered: {seed: -4}}\n").find("seed"),
              std::string::npos);
    EXPECT_NE(error_of("steps: 3\nreflectivity: 0.5\noutputs: [histogram]\n").find("outputs[0]"), std::string::npos);
    EXPECT_NE(error_of("steps: 3\nreflectivity: 0.5\noutputs: [layout, layout]\n").find("twice"), std::string::npos);
    EXPECT_NE(error_of("steps: 21\nreflectivity: 0.5\noutputs: [oracle_check]\n").find("steps"), std::string::npos);
    EXPECT_NE(error_of("steps: [3\n").find("line"), std::string::npos);
    EXPECT_FALSE(error_of("- 1\n- 2\n").empty());
}

TEST(parse_config, similarity_reference_inherits) {
    auto c = parse_config(R"(
steps: 7
reflectivity: 0.44
initial: {coin: 0}
outputs:
  - variances
  - similarity_vs: {reflectivity: 0.5}
)");
    ASSERT_TRUE(c.similarity_reference);
    EXPECT_EQ(c.similarity_reference->reflectivity, 0.5);
    EXPECT_EQ(c.similarity_reference->steps, 7);
    EXPECT_EQ(c.similarity_reference->initial.coin, 0);
    EXPECT_EQ(c.outputs.back(), OutputKind::kSimilarity);
    EXPECT_NE(error_of("steps: 7\nreflectivity: 0.5\noutputs: [{similarity_vs: {steps: 3}}]\n")
                  .find("similarity_vs.steps"),
              std::string::npos);
}

TEST(parse_config, ordered_forms) {
    auto a = parse_config("steps: 2\nreflectivity: 0.5\nschedule_mode: ordered\n");
    auto b = parse_config("steps: 2\nreflectivity: 0.5\nschedule_mode: {ordered: {theta: 0.25}}\n");
    EXPECT_EQ(std::get<OrderedMode>(a.simulation.schedule_mode).theta, 0.0);
    EXPECT_EQ(std::get<OrderedMode>(b.simulation.schedule_mode).theta, 0.25);
}

TEST(config_to_json, round_trips) {
    const char *docs[] = {
        "steps: 7\nreflectivity: 0.5\n",
        "steps: 5\nreflectivity: 0.1\nschedule_mode: {ordered: {theta: 1.0471975511965976}}\nloss_eta: 0.85\n"
        "initial: {coin: 0, site: 3}\noutputs: [layout, paths, oracle_check]\noutput_dir: somewhere\n"
        "step_peak_normalization: true\n",
        "steps: 7\nreflectivity: 0.44\nschedule_mode: {disordered: {kind: uniform, seed: 18446744073709551615, "
        "realization_count: 9}}\noutputs: [{similarity_vs: {reflectivity: 0.5, schedule_mode: ordered}}]\n",
    };
    for (const char *doc : docs) {
        auto c = parse_config(doc);
        EXPECT_EQ(parse_config(config_to_json(c)), c) << doc;
    }
}

}  // namespace
