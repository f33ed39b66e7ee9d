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

#ifndef QWALK_TESTS_TEST_UTIL_H
#define QWALK_TESTS_TEST_UTIL_H

#include <cmath>
#include <random>

#include "qwalk/walk.h"

namespace qwalk::test_util {

/// Random normalized state supported on the light cone of `step`.
inline WalkerState random_state(std::mt19937_64 &rng, int num_steps, int step) {
    std::normal_distribution<double> gauss;
    WalkerState state(num_steps, step);
    double norm = 0.0;
    for (int c = 0; c < 2; ++c) {
        for (int i = -step; i <= step; i += 2) {
            Complex a{gauss(rng), gauss(rng)};
            state.set_amplitude(c, i, a);
            norm += std::norm(a);
        }
    }
    state *= 1.0 / std::sqrt(norm);
    return state;
}

/// Coin layer with independent random (R, theta0, theta1) at every site.
inline CoinLayer random_layer(std::mt19937_64 &rng, int half_width) {
    std::uniform_real_distribution<double> r01(0.0, 1.0);
    std::uniform_real_distribution<double> phase(0.0, 6.283185307179586);
    CoinLayer layer(half_width);
    for (int i = -half_width; i <= half_width; ++i) {
        layer.set(i, build_coin({r01(rng), phase(rng), phase(rng)}));
    }
    return layer;
}

}  // namespace qwalk::test_util

#endif  // QWALK_TESTS_TEST_UTIL_H
