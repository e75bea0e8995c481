// SPDX-License-Identifier: Apache-2.0
//
// beamkit - multibeam planar array synthesis and verification
// Copyright (C) 2026 beamkit contributors

#ifndef BEAMKIT_ERRORS_HPP
#define BEAMKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace beamkit {

// Base class for all beamkit failures.
struct error : std::runtime_error {
    explicit error(const std::string &msg) : std::runtime_error(msg) {}
};

// Malformed or out-of-range inputs (bad angles, empty lists, zero maps, ...).
struct invalid_input_error : error {
    using error::error;
};

// Operands with incompatible shapes or geometries.
struct dimension_error : invalid_input_error {
    explicit dimension_error(const std::string &msg) : invalid_input_error(msg) {}
};

// Requested directivity budget cannot be met by the aperture.
struct infeasible_error : error {
    using error::error;
};

// A beam is steered beyond the maximum scan angle of the aperture.
struct scan_limit_error : error {
    using error::error;
};

// Two beams share an azimuth plane; the power-superposition model breaks down.
struct same_azimuth_error : error {
    using error::error;
};

// Two beams are closer than the configured number of beamwidths.
struct separation_error : error {
    using error::error;
};

// Directivity requested for a map that radiates no power.
struct undefined_directivity_error : error {
    using error::error;
};

// Config file cannot be parsed or fails schema validation.
struct config_error : error {
    using error::error;
};

} // namespace beamkit

#endif
