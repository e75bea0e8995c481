// SPDX-License-Identifier: Apache-2.0
//
// beamkit - multibeam planar array synthesis and verification
// Copyright (C) 2026 beamkit contributors

#include "beamkit/exports.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "beamkit/errors.hpp"
#include "beamkit/geometry.hpp"

namespace beamkit {

namespace {

using nlohmann::ordered_json;

// Directivity in dBi with a floor for pattern nulls, where the log blows up.
constexpr double null_floor_dbi = -400.0;

double dbi_or_floor(double f2, double total_power) {
    if (!(f2 > 0)) return null_floor_dbi;
    const double d = 4.0 * pi_v<double> * f2 / total_power;
    return std::max(to_dbi(d), null_floor_dbi);
}

std::string csv_escape(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

ordered_json bits_to_json(int bits) {
    if (bits == 0) return "continuous";
    return bits;
}

std::string bits_to_csv(int bits) {
    if (bits == 0) return "continuous";
    return std::to_string(bits);
}

ordered_json excitation_to_json(const ExcitationMapd &map) {
    const auto amplitude = map.amplitude();
    const auto phase = map.phase();
    ordered_json amp_rows = ordered_json::array();
    ordered_json phase_rows = ordered_json::array();
    for (int m = 0; m < map.geometry.n_x; ++m) {
        ordered_json amp_row = ordered_json::array();
        ordered_json phase_row = ordered_json::array();
        for (int n = 0; n < map.geometry.n_y; ++n) {
            amp_row.push_back(amplitude(m, n));
            phase_row.push_back(phase(m, n));
        }
        amp_rows.push_back(std::move(amp_row));
        phase_rows.push_back(std::move(phase_row));
    }
    ordered_json out;
    out["amplitude"] = std::move(amp_rows);
    out["phase_rad"] = std::move(phase_rows);
    return out;
}

}  // namespace

std::string format_sig9(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

nlohmann::ordered_json plan_to_json(const SynthesisPland &plan) {
    ordered_json root;

    root["geometry"]["elements"] = {plan.geometry.n_x, plan.geometry.n_y};
    root["geometry"]["spacing"] = plan.geometry.spacing;

    ordered_json beams = ordered_json::array();
    for (const auto &b : plan.beams) {
        ordered_json beam;
        beam["theta_deg"] = b.direction.theta_deg;
        beam["phi_deg"] = b.direction.phi_deg;
        beam["coefficient"] = b.coefficient;
        beams.push_back(std::move(beam));
    }
    root["beams"] = std::move(beams);

    root["quantization"]["phase_bits"] = bits_to_json(plan.quantization.phase_bits);
    root["quantization"]["amplitude_bits"] = bits_to_json(plan.quantization.amplitude_bits);
    root["mode"] = plan.mode == Mode::strict ? "strict" : "permissive";

    ordered_json resolved;
    resolved["length_wavelengths"] = plan.aperture.length_wavelengths;
    resolved["dmax_linear"] = plan.aperture.dmax_linear;
    resolved["dmax_dbi"] = to_dbi(plan.aperture.dmax_linear);
    resolved["n_exact"] = plan.n_exact;
    resolved["geometry_solved"] = plan.geometry_solved;
    resolved["warnings"] = plan.warnings;

    ordered_json resolved_beams = ordered_json::array();
    for (const auto &b : plan.beams) {
        ordered_json beam;
        beam["theta_deg"] = b.direction.theta_deg;
        beam["phi_deg"] = b.direction.phi_deg;
        beam["coefficient"] = b.coefficient;
        beam["endfire"] = b.endfire;
        beam["predicted_linear"] = b.directivity_linear;
        beam["predicted_dbi"] = to_dbi(b.directivity_linear);
        resolved_beams.push_back(std::move(beam));
    }
    resolved["beams"] = std::move(resolved_beams);

    resolved["excitation"] = excitation_to_json(plan.excitation);
    if (plan.quantization.active())
        resolved["quantized_excitation"] = excitation_to_json(plan.quantized);

    root["resolved"] = std::move(resolved);
    return root;
}

nlohmann::ordered_json report_to_json(const DirectivityReportd &report, double tolerance_db,
                                      const AngularGridd &grid) {
    ordered_json root;
    root["grid"]["theta_step_deg"] = grid.theta_step_deg;
    root["grid"]["phi_step_deg"] = grid.phi_step_deg;
    root["tolerance_db"] = tolerance_db;
    root["total_power"] = report.total_power;
    root["max_abs_delta_db"] = report.max_abs_delta_db;
    root["within_tolerance"] = report.max_abs_delta_db <= tolerance_db;

    ordered_json beams = ordered_json::array();
    for (const auto &v : report.beams) {
        ordered_json beam;
        beam["requested"]["theta_deg"] = v.requested.theta_deg;
        beam["requested"]["phi_deg"] = v.requested.phi_deg;
        beam["peak"]["theta_deg"] = v.peak.theta_deg;
        beam["peak"]["phi_deg"] = v.peak.phi_deg;
        beam["predicted_linear"] = v.predicted_linear;
        beam["predicted_dbi"] = to_dbi(v.predicted_linear);
        beam["oracle_linear"] = v.oracle_linear;
        beam["oracle_dbi"] = to_dbi(v.oracle_linear);
        beam["delta_db"] = v.delta_db;
        beams.push_back(std::move(beam));
    }
    root["beams"] = std::move(beams);
    return root;
}

std::string pattern_csv(const RadiationPatternd &pattern, double total_power) {
    if (!(total_power > 0)) throw invalid_input_error("total radiated power must be positive");
    const int nt = pattern.grid.n_theta();
    const int np = pattern.grid.n_phi();

    std::string out = "theta_deg,phi_deg,f2,directivity_dbi\n";
    out.reserve(out.size() + std::size_t(nt) * std::size_t(np) * 48);
    for (int i = 0; i < nt; ++i) {
        const double theta = pattern.grid.theta_at(i);
        for (int j = 0; j < np; ++j) {
            const double f2 = std::norm(pattern.values(i, j));
            out += format_sig9(theta);
            out += ',';
            out += format_sig9(pattern.grid.phi_at(j));
            out += ',';
            out += format_sig9(f2);
            out += ',';
            out += format_sig9(dbi_or_floor(f2, total_power));
            out += '\n';
        }
    }
    return out;
}

std::string cut_csv(const ExcitationMapd &map, double total_power, double phi_deg,
                    double theta_step_deg) {
    if (!(total_power > 0)) throw invalid_input_error("total radiated power must be positive");
    if (!(theta_step_deg > 0) || theta_step_deg > 90)
        throw invalid_input_error("cut step must lie in (0, 90]");
    const long long half = std::llround(90.0 / theta_step_deg);
    if (std::abs(half * theta_step_deg - 90.0) > 1e-9)
        throw invalid_input_error("cut step must divide 90 degrees evenly");

    const double phi_back = phi_deg < 180 ? phi_deg + 180 : phi_deg - 180;
    std::string out = "angle_deg,f2,directivity_dbi\n";
    for (long long k = -half; k <= half; ++k) {
        const double angle = double(k) * theta_step_deg;
        const double theta = std::abs(angle);
        const double phi = k < 0 ? phi_back : phi_deg;
        const double f2 = std::norm(array_factor_at(map, theta, phi));
        out += format_sig9(angle);
        out += ',';
        out += format_sig9(f2);
        out += ',';
        out += format_sig9(dbi_or_floor(f2, total_power));
        out += '\n';
    }
    return out;
}

std::string length_sweep_csv(const std::vector<LengthSweepRow> &rows) {
    std::string out = "length_wavelengths,elements_per_side,max_abs_delta_db\n";
    for (const auto &r : rows) {
        out += format_sig9(r.length_wavelengths);
        out += ',';
        out += std::to_string(r.elements_per_side);
        out += ',';
        out += format_sig9(r.max_abs_delta_db);
        out += '\n';
    }
    return out;
}

std::string quant_sweep_csv(const std::vector<QuantSweepRow> &rows) {
    std::string out = "case,phase_bits,amplitude_bits,max_abs_delta_db\n";
    for (const auto &r : rows) {
        out += csv_escape(r.label);
        out += ',';
        out += bits_to_csv(r.phase_bits);
        out += ',';
        out += bits_to_csv(r.amplitude_bits);
        out += ',';
        out += format_sig9(r.max_abs_delta_db);
        out += '\n';
    }
    return out;
}

std::string error_table_csv(const std::vector<ErrorTableRow> &rows) {
    std::string out = "case,beams,relative_power_error\n";
    for (const auto &r : rows) {
        out += csv_escape(r.label);
        out += ',';
        out += std::to_string(r.beam_count);
        out += ',';
        out += format_sig9(r.relative_power_error);
        out += '\n';
    }
    return out;
}

void write_text_file(const std::string &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw error("cannot open for writing: " + path);
    out << content;
    out.flush();
    if (!out) throw error("write failed: " + path);
}

}  // namespace beamkit
