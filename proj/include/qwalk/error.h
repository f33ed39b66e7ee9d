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

#ifndef QWALK_ERROR_H
#define QWALK_ERROR_H

#include <stdexcept>
#include <string>

namespace qwalk {

/// Invalid numeric parameter (reflectivity out of range, zero steps, bad index).
struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A coin or phase is missing for a populated mesh point, or a schedule is too short.
struct ScheduleError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Amplitude would leave the dense lattice, or an enumeration is too large.
struct CapacityError : std::length_error {
    using std::length_error::length_error;
};

/// Two series or distributions do not cover the same steps and sites.
struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Measured powers carry no signal at all.
struct DegenerateMeasurementError : std::domain_error {
    using std::domain_error::domain_error;
};

/// (step, site) is outside the parity light cone.
struct ReachabilityError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Malformed or out-of-range run configuration. `what()` names the line and field.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Output file could not be written or input file could not be read.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace qwalk

#endif  // QWALK_ERROR_H
