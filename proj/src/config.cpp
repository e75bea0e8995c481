// SPDX-License-Identifier: Apache-2.0
//
// beamkit - multibeam planar array synthesis and verification
// Copyright (C) 2026 beamkit contributors

#include "beamkit/config.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>

#include <json.hpp>

#include "beamkit/errors.hpp"

namespace beamkit {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string &where, const std::string &what) {
    throw config_error(where + ": " + what);
}

void check_keys(const json &j, const std::string &where,
                std::initializer_list<const char *> allowed) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool known = false;
        for (const char *key : allowed) {
            if (it.key() == key) {
                known = true;
                break;
            }
        }
        if (!known) fail(where, "unknown key \"" + it.key() + "\"");
    }
}

const json &need(const json &j, const std::string &where, const char *key) {
    auto it = j.find(key);
    if (it == j.end()) fail(where, std::string("missing required key \"") + key + "\"");
    return *it;
}

double as_number(const json &v, const std::string &where) {
    if (!v.is_number()) fail(where, "expected a number");
    double x = v.get<double>();
    if (!std::isfinite(x)) fail(where, "value is not finite");
    return x;
}

int as_integer(const json &v, const std::string &where) {
    if (!v.is_number_integer()) fail(where, "expected an integer");
    return v.get<int>();
}

std::string as_string(const json &v, const std::string &where) {
    if (!v.is_string()) fail(where, "expected a string");
    return v.get<std::string>();
}

// "continuous" and 0 both mean an unquantized component.
int parse_bits(const json &v, const std::string &where) {
    if (v.is_string()) {
        if (v.get<std::string>() == "continuous") return 0;
        fail(where, "expected an integer bit count or \"continuous\"");
    }
    int bits = as_integer(v, where);
    if (bits < 0 || bits > 16) fail(where, "bit count must lie in [0, 16]");
    return bits;
}

BeamDirectiond parse_direction(const json &j, const std::string &where) {
    BeamDirectiond dir;
    dir.theta_deg = as_number(need(j, where, "theta_deg"), where + ".theta_deg");
    dir.phi_deg = as_number(need(j, where, "phi_deg"), where + ".phi_deg");
    try {
        dir.check();
    } catch (const invalid_input_error &e) {
        fail(where, e.what());
    }
    return dir;
}

void parse_geometry(const json &j, const std::string &where, DesignSpecd &design) {
    if (!j.is_object()) fail(where, "expected an object");
    check_keys(j, where, {"elements", "spacing"});

    const json &elements = need(j, where, "elements");
    if (elements.is_string()) {
        if (elements.get<std::string>() != "unknown")
            fail(where + ".elements", "expected an element count, a [nx, ny] pair or \"unknown\"");
        design.elements.reset();
    } else if (elements.is_array()) {
        if (elements.size() != 2) fail(where + ".elements", "expected exactly two entries");
        int nx = as_integer(elements[0], where + ".elements[0]");
        int ny = as_integer(elements[1], where + ".elements[1]");
        design.elements = std::make_pair(nx, ny);
    } else {
        int n = as_integer(elements, where + ".elements");
        design.elements = std::make_pair(n, n);
    }

    design.spacing = as_number(need(j, where, "spacing"), where + ".spacing");

    ArrayGeometryd probe;
    probe.spacing = design.spacing;
    if (design.elements) {
        probe.n_x = design.elements->first;
        probe.n_y = design.elements->second;
    }
    try {
        probe.check();
    } catch (const invalid_input_error &e) {
        fail(where, e.what());
    }
}

void parse_beams(const json &j, const std::string &where, DesignSpecd &design) {
    if (!j.is_array() || j.empty()) fail(where, "expected a non-empty array of beams");
    for (std::size_t i = 0; i < j.size(); ++i) {
        std::string at = where + "[" + std::to_string(i) + "]";
        const json &b = j[i];
        if (!b.is_object()) fail(at, "expected an object");
        check_keys(b, at, {"theta_deg", "phi_deg", "directivity_dbi", "coefficient"});

        BeamDirectiond dir = parse_direction(b, at);
        bool has_d = b.contains("directivity_dbi");
        bool has_c = b.contains("coefficient");
        if (has_d && has_c)
            fail(at, "give either \"directivity_dbi\" or \"coefficient\", not both");
        if (!has_d && !has_c)
            fail(at, "each beam needs a \"directivity_dbi\" target or a \"coefficient\"");

        if (has_d) {
            const json &v = b["directivity_dbi"];
            if (v.is_string()) {
                if (v.get<std::string>() != "free")
                    fail(at + ".directivity_dbi", "expected a number in dBi or \"free\"");
                design.beams.push_back(BeamRequestd::free_beam(dir));
            } else {
                double dbi = as_number(v, at + ".directivity_dbi");
                design.beams.push_back(BeamRequestd::directivity(dir, dbi));
            }
        } else {
            double a = as_number(b["coefficient"], at + ".coefficient");
            design.beams.push_back(BeamRequestd::coefficient(dir, a));
        }
    }
}

void parse_quantization(const json &j, const std::string &where, QuantizationScheme &q) {
    if (!j.is_object()) fail(where, "expected an object");
    check_keys(j, where, {"phase_bits", "amplitude_bits"});
    if (j.contains("phase_bits")) q.phase_bits = parse_bits(j["phase_bits"], where + ".phase_bits");
    if (j.contains("amplitude_bits"))
        q.amplitude_bits = parse_bits(j["amplitude_bits"], where + ".amplitude_bits");
}

void parse_grid(const json &j, const std::string &where, AngularGridd &grid) {
    if (!j.is_object()) fail(where, "expected an object");
    check_keys(j, where, {"theta_step_deg", "phi_step_deg"});
    if (j.contains("theta_step_deg"))
        grid.theta_step_deg = as_number(j["theta_step_deg"], where + ".theta_step_deg");
    if (j.contains("phi_step_deg"))
        grid.phi_step_deg = as_number(j["phi_step_deg"], where + ".phi_step_deg");
    try {
        grid.check();
    } catch (const invalid_input_error &e) {
        fail(where, e.what());
    }
}

void parse_verify(const json &j, const std::string &where, RunConfig &config) {
    if (!j.is_object()) fail(where, "expected an object");
    check_keys(j, where, {"tolerance_db", "peak_radius_deg"});
    if (j.contains("tolerance_db")) {
        config.tolerance_db = as_number(j["tolerance_db"], where + ".tolerance_db");
        if (config.tolerance_db <= 0) fail(where + ".tolerance_db", "must be positive");
    }
    if (j.contains("peak_radius_deg")) {
        config.peak_radius_deg = as_number(j["peak_radius_deg"], where + ".peak_radius_deg");
        if (config.peak_radius_deg <= 0 || config.peak_radius_deg > 90)
            fail(where + ".peak_radius_deg", "must lie in (0, 90]");
    }
}

void parse_output(const json &j, const std::string &where, RunConfig &config) {
    if (!j.is_object()) fail(where, "expected an object");
    check_keys(j, where, {"directory", "formats", "cut_phi_deg"});
    if (j.contains("directory")) {
        config.out_dir = as_string(j["directory"], where + ".directory");
        if (config.out_dir.empty()) fail(where + ".directory", "must not be empty");
    }
    if (j.contains("formats")) {
        const json &f = j["formats"];
        if (!f.is_array() || f.empty()) fail(where + ".formats", "expected a non-empty array");
        config.write_json = false;
        config.write_csv = false;
        for (std::size_t i = 0; i < f.size(); ++i) {
            std::string s = as_string(f[i], where + ".formats[" + std::to_string(i) + "]");
            if (s == "json")
                config.write_json = true;
            else if (s == "csv")
                config.write_csv = true;
            else
                fail(where + ".formats", "unknown format \"" + s + "\" (use \"json\" or \"csv\")");
        }
    }
    if (j.contains("cut_phi_deg")) {
        const json &c = j["cut_phi_deg"];
        if (!c.is_array() || c.empty()) fail(where + ".cut_phi_deg", "expected a non-empty array");
        for (std::size_t i = 0; i < c.size(); ++i) {
            std::string at = where + ".cut_phi_deg[" + std::to_string(i) + "]";
            double phi = as_number(c[i], at);
            if (phi < 0 || phi >= 360) fail(at, "azimuth must lie in [0, 360)");
            config.cut_phi_deg.push_back(phi);
        }
    }
}

void parse_sweep(const json &j, const std::string &where, RunConfig &config) {
    if (!j.is_object()) fail(where, "expected an object");
    check_keys(j, where, {"lengths_wavelengths", "bits", "cases"});
    if (j.contains("lengths_wavelengths")) {
        const json &l = j["lengths_wavelengths"];
        if (!l.is_array() || l.empty())
            fail(where + ".lengths_wavelengths", "expected a non-empty array");
        config.sweep_lengths.clear();
        for (std::size_t i = 0; i < l.size(); ++i) {
            std::string at = where + ".lengths_wavelengths[" + std::to_string(i) + "]";
            double len = as_number(l[i], at);
            if (len <= 0) fail(at, "aperture length must be positive");
            config.sweep_lengths.push_back(len);
        }
    }
    if (j.contains("bits")) {
        const json &b = j["bits"];
        if (!b.is_array() || b.empty()) fail(where + ".bits", "expected a non-empty array");
        config.sweep_bits.clear();
        for (std::size_t i = 0; i < b.size(); ++i)
            config.sweep_bits.push_back(
                parse_bits(b[i], where + ".bits[" + std::to_string(i) + "]"));
    }
    if (j.contains("cases")) {
        const json &cases = j["cases"];
        if (!cases.is_array() || cases.empty()) fail(where + ".cases", "expected a non-empty array");
        for (std::size_t i = 0; i < cases.size(); ++i) {
            std::string at = where + ".cases[" + std::to_string(i) + "]";
            const json &c = cases[i];
            if (!c.is_object()) fail(at, "expected an object");
            check_keys(c, at, {"label", "beams", "coefficients"});
            SweepCase sc;
            sc.label = as_string(need(c, at, "label"), at + ".label");
            if (sc.label.empty()) fail(at + ".label", "must not be empty");
            const json &beams = need(c, at, "beams");
            if (!beams.is_array() || beams.empty())
                fail(at + ".beams", "expected a non-empty array");
            for (std::size_t k = 0; k < beams.size(); ++k) {
                std::string bat = at + ".beams[" + std::to_string(k) + "]";
                if (!beams[k].is_object()) fail(bat, "expected an object");
                check_keys(beams[k], bat, {"theta_deg", "phi_deg"});
                sc.directions.push_back(parse_direction(beams[k], bat));
            }
            const json &coeffs = need(c, at, "coefficients");
            if (!coeffs.is_array() || coeffs.size() != sc.directions.size())
                fail(at + ".coefficients", "expected one coefficient per beam");
            for (std::size_t k = 0; k < coeffs.size(); ++k)
                sc.coefficients.push_back(
                    as_number(coeffs[k], at + ".coefficients[" + std::to_string(k) + "]"));
            config.cases.push_back(std::move(sc));
        }
    }
}

}  // namespace

RunConfig parse_config(const std::string &text, const std::string &origin) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error &e) {
        throw config_error(origin + ": invalid JSON: " + e.what());
    }
    if (!root.is_object()) throw config_error(origin + ": top level must be an object");

    // "resolved" is what the plan command appends; tolerating it here makes a
    // plan file directly re-usable as a config.
    check_keys(root, origin,
               {"geometry", "beams", "quantization", "mode", "grid", "verify",
                "separation_beamwidths", "fast_path", "output", "sweep", "resolved"});

    RunConfig config;
    parse_geometry(need(root, origin, "geometry"), origin + ": geometry", config.design);
    parse_beams(need(root, origin, "beams"), origin + ": beams", config.design);

    if (root.contains("quantization"))
        parse_quantization(root["quantization"], origin + ": quantization",
                           config.design.quantization);
    if (root.contains("mode")) {
        std::string mode = as_string(root["mode"], origin + ": mode");
        if (mode == "strict")
            config.design.mode = Mode::strict;
        else if (mode == "permissive")
            config.design.mode = Mode::permissive;
        else
            fail(origin + ": mode", "expected \"strict\" or \"permissive\"");
    }
    if (root.contains("grid")) parse_grid(root["grid"], origin + ": grid", config.grid);
    if (root.contains("verify")) parse_verify(root["verify"], origin + ": verify", config);
    if (root.contains("separation_beamwidths")) {
        config.design.separation_beamwidths =
            as_number(root["separation_beamwidths"], origin + ": separation_beamwidths");
        if (config.design.separation_beamwidths < 0)
            fail(origin + ": separation_beamwidths", "must be non-negative");
    }
    if (root.contains("fast_path")) {
        if (!root["fast_path"].is_boolean()) fail(origin + ": fast_path", "expected a boolean");
        config.fast_path = root["fast_path"].get<bool>();
    }
    if (root.contains("output")) parse_output(root["output"], origin + ": output", config);
    if (root.contains("sweep")) parse_sweep(root["sweep"], origin + ": sweep", config);

    try {
        config.design.quantization.check();
    } catch (const invalid_input_error &e) {
        fail(origin + ": quantization", e.what());
    }
    return config;
}

RunConfig load_config(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw config_error("cannot read config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str(), path);
}

void apply_overrides(RunConfig &config, const CliOverrides &overrides) {
    if (overrides.out_dir) config.out_dir = *overrides.out_dir;
    if (overrides.tolerance_db) {
        if (*overrides.tolerance_db <= 0 || !std::isfinite(*overrides.tolerance_db))
            throw config_error("--tolerance-db: must be a positive number");
        config.tolerance_db = *overrides.tolerance_db;
    }
    if (overrides.grid_step_deg) {
        config.grid.theta_step_deg = *overrides.grid_step_deg;
        config.grid.phi_step_deg = *overrides.grid_step_deg;
        try {
            config.grid.check();
        } catch (const invalid_input_error &e) {
            throw config_error(std::string("--grid-step-deg: ") + e.what());
        }
    }
    if (overrides.mode) config.design.mode = *overrides.mode;
    if (overrides.fast_path) config.fast_path = *overrides.fast_path;
}

}  // namespace beamkit
