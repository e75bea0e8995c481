// SPDX-License-Identifier: Apache-2.0
//
// beamkit - multibeam planar array synthesis and verification
// Copyright (C) 2026 beamkit contributors

#ifndef BEAMKIT_CONFIG_HPP
#define BEAMKIT_CONFIG_HPP

#include <optional>
#include <string>
#include <vector>

#include "beamkit/geometry.hpp"
#include "beamkit/synthesis.hpp"

namespace beamkit {

// Labelled coefficient-driven beam set used by the quantization sweep and the
// superposition error table.
struct SweepCase {
    std::string label;
    std::vector<BeamDirectiond> directions;
    std::vector<double> coefficients;
};

// Everything a command run needs: the design itself plus verification grid,
// tolerances, output destinations and sweep parameters.
struct RunConfig {
    DesignSpecd design;
    AngularGridd grid;
    double tolerance_db = 0.5;
    double peak_radius_deg = 5.0;
    bool fast_path = false;
    std::string out_dir = "out";
    bool write_json = true;
    bool write_csv = true;
    std::vector<double> cut_phi_deg;             // empty: one cut per beam azimuth
    std::vector<double> sweep_lengths{3, 5, 8, 10};
    std::vector<int> sweep_bits{2, 3, 0};        // 0 means continuous
    std::vector<SweepCase> cases;                // empty: derive from the design
};

// Parses a JSON config. Unknown keys are rejected by name so typos surface
// immediately; a top-level "resolved" block is ignored, which lets a plan
// file written by the plan command be fed straight back in as a config.
RunConfig parse_config(const std::string &text, const std::string &origin);
RunConfig load_config(const std::string &path);

// Command-line switches that take precedence over the file.
struct CliOverrides {
    std::optional<std::string> out_dir;
    std::optional<double> tolerance_db;
    std::optional<double> grid_step_deg;
    std::optional<Mode> mode;
    std::optional<bool> fast_path;
};

void apply_overrides(RunConfig &config, const CliOverrides &overrides);

}  // namespace beamkit

#endif
