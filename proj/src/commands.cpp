// SPDX-License-Identifier: Apache-2.0
//
// beamkit - multibeam planar array synthesis and verification
// Copyright (C) 2026 beamkit contributors

#include "beamkit/commands.hpp"

#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "beamkit/beamkit.hpp"
#include "beamkit/exports.hpp"

namespace beamkit {

namespace {

std::string out_path(const RunConfig &config, const std::string &name) {
    std::filesystem::create_directories(config.out_dir);
    return (std::filesystem::path(config.out_dir) / name).string();
}

void print_plan_summary(const SynthesisPland &p) {
    std::printf("geometry: %d x %d elements, spacing %g (L = %g wavelengths%s)\n",
                p.geometry.n_x, p.geometry.n_y, p.geometry.spacing,
                p.aperture.length_wavelengths, p.geometry_solved ? ", solved" : "");
    std::printf("broadside budget: %.3f dBi  exact side count: %.4f\n",
                to_dbi(p.aperture.dmax_linear), p.n_exact);
    std::printf("%-4s %9s %9s %10s %12s\n", "beam", "theta", "phi", "coeff", "predicted");
    for (std::size_t i = 0; i < p.beams.size(); ++i) {
        const auto &b = p.beams[i];
        std::printf("%-4zu %9.3f %9.3f %10.6f %8.3f dBi%s\n", i + 1, b.direction.theta_deg,
                    b.direction.phi_deg, b.coefficient, to_dbi(b.directivity_linear),
                    b.endfire ? " (end-fire)" : "");
    }
    for (const auto &w : p.warnings) std::printf("warning: %s\n", w.c_str());
}

void print_report(const DirectivityReportd &report, double tolerance_db) {
    std::printf("%-4s %17s %17s %10s %10s %8s\n", "beam", "requested", "peak", "predicted",
                "oracle", "delta");
    for (std::size_t i = 0; i < report.beams.size(); ++i) {
        const auto &v = report.beams[i];
        std::printf("%-4zu (%6.2f, %6.2f) (%6.2f, %6.2f) %6.3f dBi %6.3f dBi %+.3f dB\n", i + 1,
                    v.requested.theta_deg, v.requested.phi_deg, v.peak.theta_deg, v.peak.phi_deg,
                    to_dbi(v.predicted_linear), to_dbi(v.oracle_linear), v.delta_db);
    }
    std::printf("max |delta|: %.4f dB  tolerance: %g dB  -> %s\n", report.max_abs_delta_db,
                tolerance_db, report.max_abs_delta_db <= tolerance_db ? "within" : "exceeded");
}

// Coefficient-mode spec reusing a resolved beam set on a given geometry.
// Sweeps are diagnostics across parameter ranges, so they run permissive:
// a scan-limit breach at a short aperture should show up as a bad delta,
// not abort the sweep.
DesignSpecd respec(const std::vector<BeamPlanEntryd> &beams, int n_x, int n_y, double spacing,
                   QuantizationScheme quantization) {
    DesignSpecd spec;
    spec.elements = std::make_pair(n_x, n_y);
    spec.spacing = spacing;
    spec.quantization = quantization;
    spec.mode = Mode::permissive;
    for (const auto &b : beams)
        spec.beams.push_back(BeamRequestd::coefficient(b.direction, b.coefficient));
    return spec;
}

// Cases for the quantization sweep and the error table: either taken from
// the config or derived from the resolved design itself.
std::vector<SweepCase> effective_cases(const RunConfig &config, const SynthesisPland &base) {
    if (!config.cases.empty()) return config.cases;
    SweepCase sc;
    sc.label = "design";
    for (const auto &b : base.beams) {
        sc.directions.push_back(b.direction);
        sc.coefficients.push_back(b.coefficient);
    }
    return {sc};
}

}  // namespace

int cmd_plan(const RunConfig &config) {
    const SynthesisPland p = plan(config.design);
    print_plan_summary(p);
    if (config.write_json) {
        const std::string path = out_path(config, "plan.json");
        write_text_file(path, plan_to_json(p).dump(2) + "\n");
        std::printf("wrote %s\n", path.c_str());
    }
    return 0;
}

int cmd_verify(const RunConfig &config) {
    const SynthesisPland p = plan(config.design);
    const DirectivityReportd report = verify(p, config.grid, config.peak_radius_deg,
                                             config.fast_path);
    print_report(report, config.tolerance_db);
    if (config.write_json) {
        const std::string path = out_path(config, "report.json");
        write_text_file(path, report_to_json(report, config.tolerance_db, config.grid).dump(2) +
                                  "\n");
        std::printf("wrote %s\n", path.c_str());
    }
    return report.max_abs_delta_db <= config.tolerance_db ? 0 : 3;
}

int cmd_pattern(const RunConfig &config) {
    const SynthesisPland p = plan(config.design);
    const RadiationPatternd pattern = compute_pattern(p.active_map(), config.grid,
                                                      config.fast_path);
    const double power = total_radiated_power(pattern);
    std::printf("pattern: %d x %d nodes, total radiated power %.9g\n", pattern.grid.n_theta(),
                pattern.grid.n_phi(), power);
    if (config.write_csv) {
        const std::string path = out_path(config, "pattern.csv");
        write_text_file(path, pattern_csv(pattern, power));
        std::printf("wrote %s\n", path.c_str());
    }
    return 0;
}

int cmd_cut(const RunConfig &config) {
    const SynthesisPland p = plan(config.design);
    const RadiationPatternd pattern = compute_pattern(p.active_map(), config.grid,
                                                      config.fast_path);
    const double power = total_radiated_power(pattern);

    std::vector<double> phis = config.cut_phi_deg;
    if (phis.empty()) {
        for (const auto &b : p.beams) {
            bool seen = false;
            for (double prev : phis) seen = seen || prev == b.direction.phi_deg;
            if (!seen) phis.push_back(b.direction.phi_deg);
        }
    }

    for (double phi : phis) {
        const std::string content = cut_csv(p.active_map(), power, phi,
                                            config.grid.theta_step_deg);
        if (config.write_csv) {
            const std::string path = out_path(config, "cut_phi" + format_sig9(phi) + ".csv");
            write_text_file(path, content);
            std::printf("wrote %s\n", path.c_str());
        } else {
            std::printf("cut at phi = %g deg: %lld rows\n", phi,
                        2 * std::llround(90.0 / config.grid.theta_step_deg) + 1);
        }
    }
    return 0;
}

int cmd_sweep_length(const RunConfig &config) {
    const SynthesisPland base = plan(config.design);
    std::vector<LengthSweepRow> rows;
    std::printf("%-20s %8s %16s\n", "length_wavelengths", "n", "max|delta| dB");
    for (double length : config.sweep_lengths) {
        const int n = std::max(1, int(std::llround(length / config.design.spacing)));
        const DesignSpecd spec = respec(base.beams, n, n, config.design.spacing,
                                        config.design.quantization);
        const SynthesisPland p = plan(spec);
        const DirectivityReportd report = verify(p, config.grid, config.peak_radius_deg,
                                                 config.fast_path);
        const LengthSweepRow row{n * config.design.spacing, n, report.max_abs_delta_db};
        std::printf("%-20g %8d %16.4f\n", row.length_wavelengths, row.elements_per_side,
                    row.max_abs_delta_db);
        rows.push_back(row);
    }
    if (config.write_csv) {
        const std::string path = out_path(config, "sweep_length.csv");
        write_text_file(path, length_sweep_csv(rows));
        std::printf("wrote %s\n", path.c_str());
    }
    return 0;
}

int cmd_sweep_quant(const RunConfig &config) {
    const SynthesisPland base = plan(config.design);
    const std::vector<SweepCase> cases = effective_cases(config, base);

    std::vector<QuantSweepRow> rows;
    std::printf("%-16s %12s %14s %16s\n", "case", "phase_bits", "amp_bits", "max|delta| dB");
    for (const auto &sc : cases) {
        std::vector<BeamPlanEntryd> beams;
        for (std::size_t i = 0; i < sc.directions.size(); ++i)
            beams.push_back({sc.directions[i], sc.coefficients[i], 0.0, false});
        for (int bits : config.sweep_bits) {
            QuantizationScheme scheme;
            scheme.phase_bits = bits;
            scheme.amplitude_bits = bits;
            const DesignSpecd spec = respec(beams, base.geometry.n_x, base.geometry.n_y,
                                            base.geometry.spacing, scheme);
            const SynthesisPland p = plan(spec);
            const DirectivityReportd report = verify(p, config.grid, config.peak_radius_deg,
                                                     config.fast_path);
            const QuantSweepRow row{sc.label, bits, bits, report.max_abs_delta_db};
            const std::string shown = bits == 0 ? "continuous" : std::to_string(bits);
            std::printf("%-16s %12s %14s %16.4f\n", row.label.c_str(), shown.c_str(),
                        shown.c_str(), row.max_abs_delta_db);
            rows.push_back(row);
        }
    }
    if (config.write_csv) {
        const std::string path = out_path(config, "sweep_quant.csv");
        write_text_file(path, quant_sweep_csv(rows));
        std::printf("wrote %s\n", path.c_str());
    }
    return 0;
}

int cmd_error_table(const RunConfig &config) {
    const SynthesisPland base = plan(config.design);

    std::vector<SweepCase> cases = config.cases;
    if (cases.empty()) {
        auto dir = [](double t, double p) { return BeamDirectiond{t, p}; };
        cases = {
            {"single", {dir(10, 180)}, {1}},
            {"distinct-azimuth", {dir(10, 180), dir(50, 270)}, {1, 1}},
            {"paired", {dir(15, 180), dir(45, 270)}, {1, 1}},
            {"same-azimuth", {dir(10, 180), dir(50, 180)}, {1, 1}},
        };
    }

    std::vector<ErrorTableRow> rows;
    std::printf("%-20s %8s %24s\n", "case", "beams", "relative_power_error");
    for (const auto &sc : cases) {
        std::vector<ExcitationMapd> parts;
        for (const auto &d : sc.directions)
            parts.push_back(gradient_phase_excitation(base.geometry, d));
        const double err = cross_term_error(parts, sc.coefficients, config.grid);
        const ErrorTableRow row{sc.label, int(sc.directions.size()), err};
        std::printf("%-20s %8d %24.9g\n", row.label.c_str(), row.beam_count,
                    row.relative_power_error);
        rows.push_back(row);
    }
    if (config.write_csv) {
        const std::string path = out_path(config, "error_table.csv");
        write_text_file(path, error_table_csv(rows));
        std::printf("wrote %s\n", path.c_str());
    }
    return 0;
}

int run_command(const std::string &verb, const RunConfig &config) {
    if (verb == "plan") return cmd_plan(config);
    if (verb == "verify") return cmd_verify(config);
    if (verb == "pattern") return cmd_pattern(config);
    if (verb == "cut") return cmd_cut(config);
    if (verb == "sweep-length") return cmd_sweep_length(config);
    if (verb == "sweep-quant") return cmd_sweep_quant(config);
    if (verb == "error-table") return cmd_error_table(config);
    throw invalid_input_error("unknown command: " + verb);
}

}  // namespace beamkit
