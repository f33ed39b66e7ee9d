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

#ifndef QWALK_ORACLE_H
#define QWALK_ORACLE_H

#include <complex>
#include <iosfwd>
#include <vector>

#include "qwalk/schedule.h"
#include "qwalk/walk.h"

namespace qwalk {

/// Branch taken at a mesh point: reflected (outgoing port equals incoming coin,
/// amplitude magnitude sqrt(R)) or transmitted (sqrt(1-R)).
enum class Branch { kReflect, kTransmit };

/// One of the 2^N walker trajectories.
struct PathRecord {
    int initial_coin = 1;
    std::vector<Branch> choices;
    int final_site = 0;
    int final_coin = 0;
    std::complex<double> amplitude;

    /// Site displacement (-1 or +1) of each step.
    std::vector<int> moves() const;
    /// Choices as a string of 'R' / 'T'.
    std::string choice_string() const;
};

/// Largest N accepted by the enumeration.
inline constexpr int kMaxOracleSteps = 20;

/// Every trajectory from |initial_coin>_c (x) |0>_p, lexicographic in the
/// choices (step 1 most significant, reflect before transmit).
///
/// Each step reads incoming coin c, picks the outgoing port r of the mesh-point
/// coin (entry at row r, column c), moves to i-1 for r = 0 or i+1 for r = 1,
/// and leaves with coin 1 - r.
///
/// Throws CapacityError for N > kMaxOracleSteps and ScheduleError when the
/// schedule is shorter than N.
std::vector<PathRecord> enumerate_paths(int initial_coin, const PhaseSchedule &schedule, double reflectivity,
                                        int steps);

/// Coherent sum of the path amplitudes into a state on a lattice of half-width N
/// at step N.
WalkerState oracle_state(int initial_coin, const PhaseSchedule &schedule, double reflectivity, int steps);

/// Columns path_index,choices,final_coin,final_site,re_amp,im_amp.
void write_paths_csv(std::ostream &out, const std::vector<PathRecord> &paths);

}  // namespace qwalk

#endif  // QWALK_ORACLE_H
