# Copyright 2026 The qwalk Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Discrete-time quantum walks on beam-splitter meshes."""

from ._qwalk import (  # noqa: F401
    CapacityError,
    ConfigError,
    DegenerateMeasurementError,
    DisorderKind,
    DisorderSpec,
    Distribution,
    IoError,
    ParameterError,
    PathRecord,
    PhaseSchedule,
    ReachabilityError,
    RunConfig,
    ScheduleError,
    ShapeError,
    WalkerState,
    __version__,
    build_coin,
    displacer_passages,
    disordered_schedule,
    distribution_series,
    ensemble_mean_series,
    ensemble_schedules,
    enumerate_paths,
    evolve,
    mode_locus,
    oracle_state,
    ordered_schedule,
    parse_config,
    position_distribution,
    reachable_sites,
    renormalize_measured,
    replay,
    run,
    similarity,
    similarity_partials,
    variance,
    variance_series,
)
