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

#include "qwalk/coin.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qwalk/error.h"

namespace qwalk {

double CoinMatrix::unitarity_defect() const {
    double col0 = std::norm(alpha) + std::norm(gamma) - 1.0;
    double col1 = std::norm(beta) + std::norm(delta) - 1.0;
    double off = std::abs(alpha * std::conj(beta) + gamma * std::conj(delta));
    return std::max({std::abs(col0), std::abs(col1), off});
}

CoinMatrix build_coin(const CoinParams &params) {
    const double r = params.reflectivity;
    if (!(r >= 0.0 && r <= 1.0)) {
        throw ParameterError("reflectivity must lie in [0, 1], got " + std::to_string(r));
    }
    if (!std::isfinite(params.theta0) || !std::isfinite(params.theta1)) {
        throw ParameterError("coin phases must be finite");
    }
    constexpr double half_pi = std::numbers::pi / 2;
    const double refl = std::sqrt(r);
    const double trans = std::sqrt(1.0 - r);
    return CoinMatrix{
        std::polar(refl, params.theta0 + half_pi),
        std::polar(trans, params.theta0),
        std::polar(trans, params.theta1),
        std::polar(refl, params.theta1 + half_pi),
    };
}

}  // namespace qwalk
