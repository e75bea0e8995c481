// SPDX-License-Identifier: Apache-2.0
//
// beamkit - multibeam planar array synthesis and verification
// Copyright (C) 2026 beamkit contributors

#include <cstdio>
#include <exception>
#include <string>

#include <CLI11.hpp>

#include "beamkit/commands.hpp"
#include "beamkit/config.hpp"
#include "beamkit/errors.hpp"

int main(int argc, char **argv) {
    CLI::App app{"multibeam planar array synthesis and verification"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir;
    double tolerance_db = 0;
    double grid_step_deg = 0;
    std::string fast_path;

    CLI::Option *o_config =
        app.add_option("--config", config_path, "JSON config file")->required();
    CLI::Option *o_out = app.add_option("--out", out_dir, "output directory");
    CLI::Option *o_tol =
        app.add_option("--tolerance-db", tolerance_db, "verification tolerance in dB");
    CLI::Option *o_grid =
        app.add_option("--grid-step-deg", grid_step_deg, "theta and phi step of the oracle grid");
    CLI::Option *o_strict = app.add_flag("--strict", "treat model-violating designs as errors");
    CLI::Option *o_permissive =
        app.add_flag("--permissive", "downgrade model violations to warnings");
    o_strict->excludes(o_permissive);
    o_permissive->excludes(o_strict);
    CLI::Option *o_fast = app.add_option("--fast-path", fast_path, "spectral pattern evaluation")
                              ->check(CLI::IsMember({"on", "off"}));

    app.add_subcommand("plan", "resolve a design and write the excitation plan");
    app.add_subcommand("verify", "check planned directivities against the numerical oracle");
    app.add_subcommand("pattern", "export the full hemisphere pattern");
    app.add_subcommand("cut", "export directivity cuts through the beam azimuths");
    app.add_subcommand("sweep-length", "re-verify the beam set across aperture lengths");
    app.add_subcommand("sweep-quant", "re-verify across quantization bit depths");
    app.add_subcommand("error-table", "tabulate the superposition power error per beam set");
    for (CLI::App *sub : app.get_subcommands(nullptr)) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    beamkit::CliOverrides overrides;
    if (o_out->count()) overrides.out_dir = out_dir;
    if (o_tol->count()) overrides.tolerance_db = tolerance_db;
    if (o_grid->count()) overrides.grid_step_deg = grid_step_deg;
    if (o_strict->count()) overrides.mode = beamkit::Mode::strict;
    if (o_permissive->count()) overrides.mode = beamkit::Mode::permissive;
    if (o_fast->count()) overrides.fast_path = fast_path == "on";

    const std::string verb = app.get_subcommands().front()->get_name();
    try {
        beamkit::RunConfig config = beamkit::load_config(config_path);
        beamkit::apply_overrides(config, overrides);
        return beamkit::run_command(verb, config);
    } catch (const beamkit::infeasible_error &e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const beamkit::scan_limit_error &e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const beamkit::same_azimuth_error &e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const beamkit::separation_error &e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const beamkit::error &e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::exception &e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
