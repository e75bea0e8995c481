// SPDX-License-Identifier: Apache-2.0
//
// beamkit - multibeam planar array synthesis and verification
// Copyright (C) 2026 beamkit contributors

#ifndef BEAMKIT_EXPORTS_HPP
#define BEAMKIT_EXPORTS_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "beamkit/pattern.hpp"
#include "beamkit/synthesis.hpp"

namespace beamkit {

// Numeric formatting shared by every CSV export: 9 significant digits.
std::string format_sig9(double v);

// Serializes a plan so that feeding the file back in as a config (the
// "resolved" block is ignored on input) rebuilds the identical excitation.
nlohmann::ordered_json plan_to_json(const SynthesisPland &plan);

nlohmann::ordered_json report_to_json(const DirectivityReportd &report, double tolerance_db,
                                      const AngularGridd &grid);

// Full hemisphere pattern, one row per (theta, phi) node, theta-major.
std::string pattern_csv(const RadiationPatternd &pattern, double total_power);

// Directivity along one azimuth plane against the signed scan angle in
// [-90, 90]; negative angles map to the opposite azimuth phi + 180.
std::string cut_csv(const ExcitationMapd &map, double total_power, double phi_deg,
                    double theta_step_deg);

struct LengthSweepRow {
    double length_wavelengths;
    int elements_per_side;
    double max_abs_delta_db;
};

struct QuantSweepRow {
    std::string label;
    int phase_bits;
    int amplitude_bits;
    double max_abs_delta_db;
};

struct ErrorTableRow {
    std::string label;
    int beam_count;
    double relative_power_error;
};

std::string length_sweep_csv(const std::vector<LengthSweepRow> &rows);
std::string quant_sweep_csv(const std::vector<QuantSweepRow> &rows);
std::string error_table_csv(const std::vector<ErrorTableRow> &rows);

void write_text_file(const std::string &path, const std::string &content);

}  // namespace beamkit

#endif
