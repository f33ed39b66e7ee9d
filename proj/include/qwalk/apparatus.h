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

#ifndef QWALK_APPARATUS_H
#define QWALK_APPARATUS_H

#include <iosfwd>
#include <string_view>
#include <vector>

#include "qwalk/oracle.h"

namespace qwalk {

enum class Interferometer { kSI1, kSI2 };
enum class Direction { kTowardViewer, kAwayFromViewer };

std::string_view to_string(Interferometer which);
std::string_view to_string(Direction direction);

/// Where the mode (step k, site i, coin c) travels in the double-Sagnac setup.
///
/// Odd steps circulate in SI1 and even steps in SI2. Each beam-displacer
/// passage lifts a trajectory one transmission plane, so the plane equals the
/// number of upward moves, (i + k) / 2. Coin |0> beams travel toward the viewer
/// of the transverse cut, coin |1> beams away from it. Columns nest outward with
/// the step index inside each interferometer; the abstract model uses k itself.
struct ModeLocus {
    Interferometer interferometer = Interferometer::kSI1;
    int plane = 0;
    int column = 0;
    Direction direction = Direction::kTowardViewer;

    bool operator==(const ModeLocus &other) const = default;
};

/// Throws ReachabilityError unless k >= 1, |i| <= k and i + k is even,
/// and ParameterError for coin labels other than 0 and 1.
ModeLocus mode_locus(int step, int site, int coin);

/// {-k, -k+2, ..., k}. Throws ParameterError for k < 0.
std::vector<int> reachable_sites(int step);

/// Number of upward (+1) moves along the path.
int displacer_passages(const PathRecord &path);

/// Columns step,site,coin,interferometer,plane,direction for every reachable
/// mode of steps 1..N.
void write_layout_csv(std::ostream &out, int num_steps);

}  // namespace qwalk

#endif  // QWALK_APPARATUS_H
