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

#ifndef QWALK_WALK_H
#define QWALK_WALK_H

#include <optional>
#include <span>
#include <vector>

#include "qwalk/coin.h"
#include "qwalk/schedule.h"

namespace qwalk {

/// Coherent amplitudes p[c][i] over coin c in {0, 1} and site i in [-N, N]
/// at step k. The lattice is dense; N fixes both its half-width and the
/// largest step the state may reach.
class WalkerState {
   public:
    /// All-zero state at step 0. Throws ParameterError for num_steps < 0.
    explicit WalkerState(int num_steps);
    /// All-zero state at the given step. Throws ParameterError unless 0 <= step_index <= num_steps.
    WalkerState(int num_steps, int step_index);

    /// |coin>_c (x) |site>_p at step 0.
    static WalkerState localized(int num_steps, int coin, int site = 0);

    int step_index() const { return step_; }
    int num_steps() const { return half_width_; }
    int site_count() const { return 2 * half_width_ + 1; }

    /// Zero for sites outside the lattice.
    Complex amplitude(int coin, int site) const;
    /// Throws CapacityError for sites outside the lattice.
    void set_amplitude(int coin, int site, Complex value);

    /// Amplitudes of one coin label, index 0 is site -N.
    std::span<const Complex> coin_row(int coin) const;

    double norm_squared() const;

    /// True when every amplitude with (i + k) odd or |i| > k is exactly zero.
    bool respects_light_cone() const;

    WalkerState &operator+=(const WalkerState &other);
    WalkerState &operator*=(Complex scale);

   private:
    friend WalkerState apply_shift(const WalkerState &state);

    std::size_t index(int coin, int site) const;

    int step_ = 0;
    int half_width_ = 0;
    std::vector<Complex> amps_;
};

WalkerState operator+(WalkerState a, const WalkerState &b);
WalkerState operator*(Complex scale, WalkerState state);

/// Largest componentwise |a - b|. Throws ShapeError on lattice or step mismatch.
double max_amplitude_difference(const WalkerState &a, const WalkerState &b);

/// Coin matrices for one step, keyed by site over [-N, N]. Sites may be unset.
class CoinLayer {
   public:
    explicit CoinLayer(int half_width);
    static CoinLayer uniform(int half_width, const CoinMatrix &coin);

    int half_width() const { return half_width_; }
    /// Throws CapacityError outside [-N, N].
    void set(int site, const CoinMatrix &coin);
    /// nullptr when unset or outside the lattice.
    const CoinMatrix *find(int site) const;

   private:
    int half_width_;
    std::vector<std::optional<CoinMatrix>> coins_;
};

/// (p0', p1') = C_i (p0, p1) at every site. Step index is unchanged.
/// Throws ScheduleError when a populated site has no coin.
WalkerState apply_coin_layer(const WalkerState &state, const CoinLayer &coins);

/// Conditional shift with coin inversion:
/// (c=0, i) -> (c=1, i-1) and (c=1, i) -> (c=0, i+1). Advances the step index.
/// Throws CapacityError if the step index is already N or a boundary site is populated.
WalkerState apply_shift(const WalkerState &state);

/// apply_shift(apply_coin_layer(state, coins)).
WalkerState step(const WalkerState &state, const CoinLayer &coins);

/// Coin layers for steps 1..N of schedule on a lattice of half-width N.
/// Mesh point (k, i) gets build_coin({R, theta(k, i) + common_phase, common_phase}).
/// common_phase is a gauge shift and never changes any distribution.
std::vector<CoinLayer> coin_layers(const PhaseSchedule &schedule, double reflectivity, double common_phase = 0.0);

/// Trajectory of `steps` steps using layers[k] for the transition out of step k
/// (counting from initial.step_index()). Result has steps + 1 entries.
/// Throws ScheduleError if too few layers are supplied.
std::vector<WalkerState> evolve(const WalkerState &initial, std::span<const CoinLayer> layers, int steps);

/// Same, with coins built from schedule at reflectivity R.
std::vector<WalkerState> evolve(const WalkerState &initial, const PhaseSchedule &schedule, double reflectivity,
                                int steps);

}  // namespace qwalk

#endif  // QWALK_WALK_H
