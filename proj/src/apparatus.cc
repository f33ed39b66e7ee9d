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

#include "qwalk/apparatus.h"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <string>

#include "qwalk/error.h"

namespace qwalk {

std::string_view to_string(Interferometer which) {
    return which == Interferometer::kSI1 ? "SI1" : "SI2";
}

std::string_view to_string(Direction direction) {
    return direction == Direction::kTowardViewer ? "toward_viewer" : "away_from_viewer";
}

ModeLocus mode_locus(int step, int site, int coin) {
    if (step < 1 || std::abs(site) > step || (site + step) % 2 != 0) {
        throw ReachabilityError("mode (step " + std::to_string(step) + ", site " + std::to_string(site) +
                                ") is outside the light cone");
    }
    if (coin != 0 && coin != 1) {
        throw ParameterError("coin label must be 0 or 1");
    }
    return ModeLocus{
        step % 2 == 1 ? Interferometer::kSI1 : Interferometer::kSI2,
        (site + step) / 2,
        step,
        coin == 0 ? Direction::kTowardViewer : Direction::kAwayFromViewer,
    };
}

std::vector<int> reachable_sites(int step) {
    if (step < 0) {
        throw ParameterError("step must be nonnegative");
    }
    std::vector<int> sites;
    sites.reserve(step + 1);
    for (int i = -step; i <= step; i += 2) {
        sites.push_back(i);
    }
    return sites;
}

int displacer_passages(const PathRecord &path) {
    auto moves = path.moves();
    return static_cast<int>(std::count(moves.begin(), moves.end(), +1));
}

void write_layout_csv(std::ostream &out, int num_steps) {
    out << "step,site,coin,interferometer,plane,direction\n";
    for (int k = 1; k <= num_steps; ++k) {
        for (int i : reachable_sites(k)) {
            for (int c = 0; c < 2; ++c) {
                ModeLocus locus = mode_locus(k, i, c);
                out << k << ',' << i << ',' << c << ',' << to_string(locus.interferometer) << ',' << locus.plane
                    << ',' << to_string(locus.direction) << '\n';
            }
        }
    }
}

}  // namespace qwalk
