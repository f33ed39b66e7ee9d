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

#ifndef QWALK_COIN_H
#define QWALK_COIN_H

#include <array>
#include <complex>

namespace qwalk {

using Complex = std::complex<double>;

/// Optical parameters of one beam-splitter mesh point.
///
/// Only the relative phase theta0 - theta1 is observable; the pair is kept so
/// that gauge invariance can be exercised directly.
struct CoinParams {
    double reflectivity = 0.5;
    double theta0 = 0.0;
    double theta1 = 0.0;
};

/// 2x2 coin unitary with entries (alpha, beta; gamma, delta).
///
/// Acts on the coin pair (p0, p1) at one site as
///     p0' = alpha * p0 + beta * p1
///     p1' = gamma * p0 + delta * p1
struct CoinMatrix {
    Complex alpha;
    Complex beta;
    Complex gamma;
    Complex delta;

    /// Entry at (row, col), both in {0, 1}.
    Complex operator()(int row, int col) const {
        if (row == 0) {
            return col == 0 ? alpha : beta;
        }
        return col == 0 ? gamma : delta;
    }

    std::array<Complex, 2> apply(Complex p0, Complex p1) const {
        return {alpha * p0 + beta * p1, gamma * p0 + delta * p1};
    }

    /// Largest deviation from the unitarity conditions
    /// |a|^2+|c|^2 = |b|^2+|d|^2 = 1 and a b* + c d* = 0.
    double unitarity_defect() const;
};

/// Builds the beam-splitter coin with amplitude magnitudes sqrt(R) on the
/// diagonal, sqrt(1-R) off the diagonal, and phases
///     theta_alpha = theta0 + pi/2, theta_beta = theta0,
///     theta_gamma = theta1,        theta_delta = theta1 + pi/2.
///
/// Throws ParameterError when R is outside [0, 1] or a phase is not finite.
CoinMatrix build_coin(const CoinParams &params);

}  // namespace qwalk

#endif  // QWALK_COIN_H
