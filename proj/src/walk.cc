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

#include "qwalk/walk.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "qwalk/error.h"

namespace qwalk {

WalkerState::WalkerState(int num_steps) : half_width_(num_steps) {
    if (num_steps < 0) {
        throw ParameterError("num_steps must be nonnegative");
    }
    amps_.assign(2 * static_cast<std::size_t>(site_count()), Complex{});
}

WalkerState::WalkerState(int num_steps, int step_index) : WalkerState(num_steps) {
    if (step_index < 0 || step_index > num_steps) {
        throw ParameterError("step index " + std::to_string(step_index) + " outside [0, " +
                             std::to_string(num_steps) + "]");
    }
    step_ = step_index;
}

WalkerState WalkerState::localized(int num_steps, int coin, int site) {
    WalkerState state(num_steps);
    state.set_amplitude(coin, site, 1.0);
    return state;
}

std::size_t WalkerState::index(int coin, int site) const {
    return static_cast<std::size_t>(coin) * site_count() + static_cast<std::size_t>(site + half_width_);
}

Complex WalkerState::amplitude(int coin, int site) const {
    if (coin < 0 || coin > 1) {
        throw ParameterError("coin label must be 0 or 1");
    }
    if (std::abs(site) > half_width_) {
        return {};
    }
    return amps_[index(coin, site)];
}

void WalkerState::set_amplitude(int coin, int site, Complex value) {
    if (coin < 0 || coin > 1) {
        throw ParameterError("coin label must be 0 or 1");
    }
    if (std::abs(site) > half_width_) {
        throw CapacityError("site " + std::to_string(site) + " outside lattice [-" + std::to_string(half_width_) +
                            ", " + std::to_string(half_width_) + "]");
    }
    amps_[index(coin, site)] = value;
}

std::span<const Complex> WalkerState::coin_row(int coin) const {
    return std::span<const Complex>(amps_).subspan(static_cast<std::size_t>(coin) * site_count(), site_count());
}

double WalkerState::norm_squared() const {
    double total = 0.0;
    for (const Complex &a : amps_) {
        total += std::norm(a);
    }
    return total;
}

bool WalkerState::respects_light_cone() const {
    for (int c = 0; c < 2; ++c) {
        for (int i = -half_width_; i <= half_width_; ++i) {
            bool reachable = std::abs(i) <= step_ && (i + step_) % 2 == 0;
            if (!reachable && amps_[index(c, i)] != Complex{}) {
                return false;
            }
        }
    }
    return true;
}

WalkerState &WalkerState::operator+=(const WalkerState &other) {
    if (other.half_width_ != half_width_ || other.step_ != step_) {
        throw ShapeError("cannot add walker states of different lattice or step");
    }
    for (std::size_t n = 0; n < amps_.size(); ++n) {
        amps_[n] += other.amps_[n];
    }
    return *this;
}

WalkerState &WalkerState::operator*=(Complex scale) {
    for (Complex &a : amps_) {
        a *= scale;
    }
    return *this;
}

WalkerState operator+(WalkerState a, const WalkerState &b) {
    a += b;
    return a;
}

WalkerState operator*(Complex scale, WalkerState state) {
    state *= scale;
    return state;
}

double max_amplitude_difference(const WalkerState &a, const WalkerState &b) {
    if (a.num_steps() != b.num_steps() || a.step_index() != b.step_index()) {
        throw ShapeError("walker states differ in lattice size or step index");
    }
    double worst = 0.0;
    for (int c = 0; c < 2; ++c) {
        auto ra = a.coin_row(c);
        auto rb = b.coin_row(c);
        for (std::size_t n = 0; n < ra.size(); ++n) {
            worst = std::max(worst, std::abs(ra[n] - rb[n]));
        }
    }
    return worst;
}

CoinLayer::CoinLayer(int half_width) : half_width_(half_width) {
    if (half_width < 0) {
        throw ParameterError("coin layer half-width must be nonnegative");
    }
    coins_.resize(2 * static_cast<std::size_t>(half_width) + 1);
}

CoinLayer CoinLayer::uniform(int half_width, const CoinMatrix &coin) {
    CoinLayer layer(half_width);
    std::fill(layer.coins_.begin(), layer.coins_.end(), coin);
    return layer;
}

void CoinLayer::set(int site, const CoinMatrix &coin) {
    if (std::abs(site) > half_width_) {
        throw CapacityError("coin site " + std::to_string(site) + " outside lattice");
    }
    coins_[site + half_width_] = coin;
}

const CoinMatrix *CoinLayer::find(int site) const {
    if (std::abs(site) > half_width_) {
        return nullptr;
    }
    const auto &slot = coins_[site + half_width_];
    return slot ? &*slot : nullptr;
}

WalkerState apply_coin_layer(const WalkerState &state, const CoinLayer &coins) {
    WalkerState out = state;
    const int n = state.num_steps();
    for (int i = -n; i <= n; ++i) {
        Complex p0 = state.amplitude(0, i);
        Complex p1 = state.amplitude(1, i);
        if (p0 == Complex{} && p1 == Complex{}) {
            continue;
        }
        const CoinMatrix *coin = coins.find(i);
        if (coin == nullptr) {
            throw ScheduleError("no coin for populated site " + std::to_string(i) + " at step " +
                                std::to_string(state.step_index()));
        }
        auto [q0, q1] = coin->apply(p0, p1);
        out.set_amplitude(0, i, q0);
        out.set_amplitude(1, i, q1);
    }
    return out;
}

WalkerState apply_shift(const WalkerState &state) {
    const int n = state.num_steps();
    if (state.step_index() >= n) {
        throw CapacityError("state is already at the final step " + std::to_string(n));
    }
    WalkerState out(n);
    out.step_ = state.step_index() + 1;
    for (int i = -n; i <= n; ++i) {
        Complex p0 = state.amps_[state.index(0, i)];
        Complex p1 = state.amps_[state.index(1, i)];
        if (p0 != Complex{}) {
            if (i == -n) {
                throw CapacityError("amplitude at site " + std::to_string(i) + " would leave the lattice");
            }
            out.amps_[out.index(1, i - 1)] += p0;
        }
        if (p1 != Complex{}) {
            if (i == n) {
                throw CapacityError("amplitude at site " + std::to_string(i) + " would leave the lattice");
            }
            out.amps_[out.index(0, i + 1)] += p1;
        }
    }
    return out;
}

WalkerState step(const WalkerState &state, const CoinLayer &coins) {
    return apply_shift(apply_coin_layer(state, coins));
}

std::vector<CoinLayer> coin_layers(const PhaseSchedule &schedule, double reflectivity, double common_phase) {
    const int n = schedule.num_steps();
    std::vector<CoinLayer> layers;
    layers.reserve(n);
    for (int k = 1; k <= n; ++k) {
        CoinLayer layer(n);
        auto row = schedule.row(k);
        for (std::size_t slot = 0; slot < row.size(); ++slot) {
            int site = -(k - 1) + 2 * static_cast<int>(slot);
            layer.set(site, build_coin({reflectivity, row[slot] + common_phase, common_phase}));
        }
        layers.push_back(std::move(layer));
    }
    return layers;
}

std::vector<WalkerState> evolve(const WalkerState &initial, std::span<const CoinLayer> layers, int steps) {
    if (steps < 0) {
        throw ParameterError("step count must be nonnegative");
    }
    const int first = initial.step_index();
    if (static_cast<std::size_t>(first + steps) > layers.size()) {
        throw ScheduleError("schedule covers " + std::to_string(layers.size()) + " steps, evolution needs " +
                            std::to_string(first + steps));
    }
    std::vector<WalkerState> trajectory;
    trajectory.reserve(steps + 1);
    trajectory.push_back(initial);
    for (int k = first; k < first + steps; ++k) {
        trajectory.push_back(step(trajectory.back(), layers[k]));
    }
    return trajectory;
}

std::vector<WalkerState> evolve(const WalkerState &initial, const PhaseSchedule &schedule, double reflectivity,
                                int steps) {
    if (initial.step_index() + steps > schedule.num_steps()) {
        throw ScheduleError("schedule covers " + std::to_string(schedule.num_steps()) + " steps, evolution needs " +
                            std::to_string(initial.step_index() + steps));
    }
    auto layers = coin_layers(schedule, reflectivity);
    // Layers are sized to the schedule; rebuild them on the state's lattice when it differs.
    if (schedule.num_steps() != initial.num_steps()) {
        std::vector<CoinLayer> resized;
        resized.reserve(layers.size());
        for (int k = 1; k <= schedule.num_steps(); ++k) {
            CoinLayer layer(initial.num_steps());
            for (int i = -(k - 1); i <= k - 1; i += 2) {
                if (const CoinMatrix *coin = layers[k - 1].find(i); coin && std::abs(i) <= initial.num_steps()) {
                    layer.set(i, *coin);
                }
            }
            resized.push_back(std::move(layer));
        }
        layers = std::move(resized);
    }
    return evolve(initial, layers, steps);
}

}  // namespace qwalk
