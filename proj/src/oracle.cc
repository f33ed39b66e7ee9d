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

#include "qwalk/oracle.h"

#include <cmath>
#include <numbers>
#include <ostream>
#include <string>

#include "qwalk/error.h"
#include "qwalk/format.h"

namespace qwalk {

namespace {

// Mesh-point transfer amplitude from incoming coin `in` to outgoing port `out`,
// written straight from the beam-splitter parametrization with theta1 = 0.
std::complex<double> transfer(double reflectivity, double theta, int out, int in) {
    const double half_pi = std::numbers::pi / 2;
    if (out == in) {
        double phase = (in == 0 ? theta : 0.0) + half_pi;
        return std::sqrt(reflectivity) * std::exp(std::complex<double>(0.0, phase));
    }
    double phase = (out == 0 ? theta : 0.0);
    return std::sqrt(1.0 - reflectivity) * std::exp(std::complex<double>(0.0, phase));
}

void check_inputs(int initial_coin, const PhaseSchedule &schedule, double reflectivity, int steps) {
    if (initial_coin != 0 && initial_coin != 1) {
        throw ParameterError("initial coin must be 0 or 1");
    }
    if (!(reflectivity >= 0.0 && reflectivity <= 1.0)) {
        throw ParameterError("reflectivity must lie in [0, 1]");
    }
    if (steps < 0) {
        throw ParameterError("step count must be nonnegative");
    }
    if (steps > kMaxOracleSteps) {
        throw CapacityError("path enumeration is limited to " + std::to_string(kMaxOracleSteps) + " steps, got " +
                            std::to_string(steps));
    }
    if (steps > schedule.num_steps()) {
        throw ScheduleError("schedule covers " + std::to_string(schedule.num_steps()) + " steps, enumeration needs " +
                            std::to_string(steps));
    }
}

}  // namespace

std::vector<int> PathRecord::moves() const {
    std::vector<int> out;
    out.reserve(choices.size());
    int coin = initial_coin;
    for (Branch b : choices) {
        int port = (b == Branch::kReflect) ? coin : 1 - coin;
        out.push_back(port == 0 ? -1 : +1);
        coin = 1 - port;
    }
    return out;
}

std::string PathRecord::choice_string() const {
    std::string s;
    s.reserve(choices.size());
    for (Branch b : choices) {
        s.push_back(b == Branch::kReflect ? 'R' : 'T');
    }
    return s;
}

std::vector<PathRecord> enumerate_paths(int initial_coin, const PhaseSchedule &schedule, double reflectivity,
                                        int steps) {
    check_inputs(initial_coin, schedule, reflectivity, steps);
    const std::uint64_t count = std::uint64_t{1} << steps;
    std::vector<PathRecord> paths;
    paths.reserve(count);
    for (std::uint64_t index = 0; index < count; ++index) {
        PathRecord path;
        path.initial_coin = initial_coin;
        path.choices.reserve(steps);
        int coin = initial_coin;
        int site = 0;
        std::complex<double> amp = 1.0;
        for (int k = 1; k <= steps; ++k) {
            bool transmit = (index >> (steps - k)) & 1U;
            int port = transmit ? 1 - coin : coin;
            amp *= transfer(reflectivity, schedule.theta(k, site), port, coin);
            site += (port == 0) ? -1 : +1;
            coin = 1 - port;
            path.choices.push_back(transmit ? Branch::kTransmit : Branch::kReflect);
        }
        path.final_site = site;
        path.final_coin = coin;
        path.amplitude = amp;
        paths.push_back(std::move(path));
    }
    return paths;
}

WalkerState oracle_state(int initial_coin, const PhaseSchedule &schedule, double reflectivity, int steps) {
    check_inputs(initial_coin, schedule, reflectivity, steps);
    if (steps == 0) {
        return WalkerState::localized(0, initial_coin);
    }
    std::vector<std::complex<double>> sums(2 * (2 * static_cast<std::size_t>(steps) + 1));
    for (const PathRecord &path : enumerate_paths(initial_coin, schedule, reflectivity, steps)) {
        sums[path.final_coin * (2 * steps + 1) + (path.final_site + steps)] += path.amplitude;
    }
    WalkerState state(steps, steps);
    for (int c = 0; c < 2; ++c) {
        for (int i = -steps; i <= steps; ++i) {
            state.set_amplitude(c, i, sums[c * (2 * steps + 1) + (i + steps)]);
        }
    }
    return state;
}

void write_paths_csv(std::ostream &out, const std::vector<PathRecord> &paths) {
    out << "path_index,choices,final_coin,final_site,re_amp,im_amp\n";
    for (std::size_t n = 0; n < paths.size(); ++n) {
        const auto &p = paths[n];
        out << n << ',' << p.choice_string() << ',' << p.final_coin << ',' << p.final_site << ','
            << format_number(p.amplitude.real()) << ',' << format_number(p.amplitude.imag()) << '\n';
    }
}

}  // namespace qwalk
