// SPDX-License-Identifier: Apache-2.0
//
// beamkit - multibeam planar array synthesis and verification
// Copyright (C) 2026 beamkit contributors

#ifndef BEAMKIT_SYNTHESIS_HPP
#define BEAMKIT_SYNTHESIS_HPP

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "beamkit/closed_form.hpp"
#include "beamkit/errors.hpp"
#include "beamkit/excitation.hpp"
#include "beamkit/geometry.hpp"
#include "beamkit/pattern.hpp"

namespace beamkit {

enum class Mode { strict, permissive };

// One requested beam: a pointing direction plus either an absolute
// directivity target (dBi), a request to absorb the leftover power budget
// ("free"), or a direct superposition coefficient.
template <typename Scalar>
struct BeamRequest {
    enum class Kind { directivity, free, coefficient };

    BeamDirection<Scalar> direction;
    Kind kind = Kind::free;
    Scalar value = Scalar(0); // target dBi or coefficient, by kind

    static BeamRequest directivity(BeamDirection<Scalar> dir, Scalar dbi) {
        return {dir, Kind::directivity, dbi};
    }
    static BeamRequest free_beam(BeamDirection<Scalar> dir) { return {dir, Kind::free, Scalar(0)}; }
    static BeamRequest coefficient(BeamDirection<Scalar> dir, Scalar a) {
        return {dir, Kind::coefficient, a};
    }
};

// Full problem statement for the synthesis procedure. Element counts may be
// omitted, in which case every beam needs a directivity target and a square
// array is sized to fit the budget.
template <typename Scalar>
struct DesignSpec {
    std::optional<std::pair<int, int>> elements; // per-side counts; empty = solve
    Scalar spacing = Scalar(0.5);
    std::vector<BeamRequest<Scalar>> beams;
    QuantizationScheme quantization;
    Mode mode = Mode::strict;
    Scalar separation_beamwidths = Scalar(2);
};

// The resolved design: geometry, per-beam coefficients and predicted
// directivities, and the superimposed excitation before and after
// quantization.
template <typename Scalar>
struct SynthesisPlan {
    ArrayGeometry<Scalar> geometry;
    ApertureSummary<Scalar> aperture;
    std::vector<BeamPlanEntry<Scalar>> beams;
    Scalar n_exact = Scalar(0); // unrounded side count; n_x when geometry was given
    bool geometry_solved = false;
    QuantizationScheme quantization;
    Mode mode = Mode::strict;
    std::vector<std::string> warnings;
    ExcitationMap<Scalar> excitation; // continuous superposition
    ExcitationMap<Scalar> quantized;  // equals excitation when quantization is off

    const ExcitationMap<Scalar> &active_map() const {
        return quantization.active() ? quantized : excitation;
    }
};

namespace detail {

// Solves 4*pi*L^2 = budget(L) for the aperture side L when end-fire beams
// make the budget length-dependent. The left side grows quadratically and
// the right side only like sqrt(L), so the crossing is unique.
template <typename Scalar>
Scalar solve_endfire_length(Scalar sum_regular, Scalar sum_endfire) {
    auto excess = [&](Scalar length) {
        return dmax(length) - sum_regular - endfire_power_factor(length) * sum_endfire;
    };
    Scalar hi = Scalar(1);
    while (excess(hi) <= Scalar(0)) {
        hi *= Scalar(2);
        if (hi > Scalar(1e9))
            throw infeasible_error("end-fire budget equation has no finite solution");
    }
    Scalar lo = Scalar(0);
    for (int it = 0; it < 200; ++it) {
        const Scalar mid = (lo + hi) / Scalar(2);
        (excess(mid) > Scalar(0) ? hi : lo) = mid;
    }
    return (lo + hi) / Scalar(2);
}

template <typename Scalar>
std::string format_deg(Scalar v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

} // namespace detail

// Runs the synthesis procedure: resolve the free directivity or the array
// size from the power budget, derive coefficients, superpose the
// gradient-phase maps, and quantize. Pure function of the spec; identical
// specs give identical plans.
template <typename Scalar>
SynthesisPlan<Scalar> plan(const DesignSpec<Scalar> &spec) {
    using Request = BeamRequest<Scalar>;
    using Kind = typename Request::Kind;

    if (spec.beams.empty())
        throw invalid_input_error("a design needs at least one beam");
    if (!(spec.spacing > Scalar(0)) || !std::isfinite(spec.spacing))
        throw invalid_input_error("element spacing must be positive and finite");
    if (!(spec.separation_beamwidths >= Scalar(0)))
        throw invalid_input_error("separation threshold must be non-negative");
    spec.quantization.check();

    std::size_t n_coeff = 0, n_free = 0;
    for (const auto &b : spec.beams) {
        b.direction.check();
        if (b.kind == Kind::coefficient)
            ++n_coeff;
        if (b.kind == Kind::free)
            ++n_free;
    }
    if (n_coeff > 0 && n_coeff != spec.beams.size())
        throw invalid_input_error("directivity targets and coefficients cannot be mixed");
    const bool coefficient_mode = n_coeff == spec.beams.size();
    if (coefficient_mode && !spec.elements)
        throw invalid_input_error("coefficient-driven designs need a fixed geometry");
    if (coefficient_mode && n_free > 0)
        throw invalid_input_error("free beams are not meaningful in coefficient mode");
    if (!coefficient_mode) {
        if (!spec.elements && n_free > 0)
            throw invalid_input_error(
                "sizing the array requires a directivity target for every beam");
        if (spec.elements && n_free > 1)
            throw invalid_input_error("at most one beam may leave its directivity free");
    }

    SynthesisPlan<Scalar> result;
    result.quantization = spec.quantization;
    result.mode = spec.mode;

    std::vector<BeamDirection<Scalar>> directions;
    directions.reserve(spec.beams.size());
    for (const auto &b : spec.beams)
        directions.push_back(b.direction);

    std::vector<Scalar> coefficients;
    std::vector<Scalar> targets_linear(spec.beams.size(), Scalar(0));

    if (coefficient_mode) {
        for (const auto &b : spec.beams) {
            if (!(b.value > Scalar(0)) || !std::isfinite(b.value))
                throw invalid_input_error("beam coefficients must be positive and finite");
            coefficients.push_back(b.value);
        }
        result.geometry = {spec.elements->first, spec.elements->second, spec.spacing};
        result.geometry.check();
        result.n_exact = Scalar(result.geometry.n_x);
    } else {
        // Sum the budget demand of the beams whose targets are known.
        Scalar sum_regular = Scalar(0), sum_endfire = Scalar(0);
        for (const auto &b : spec.beams) {
            if (b.kind != Kind::directivity)
                continue;
            const Scalar d = from_dbi(b.value);
            if (b.direction.endfire())
                sum_endfire += d;
            else
                sum_regular += d / std::cos(deg2rad(b.direction.theta_deg));
        }

        if (!spec.elements) {
            Scalar n_exact;
            if (sum_endfire > Scalar(0)) {
                const Scalar length = detail::solve_endfire_length(sum_regular, sum_endfire);
                n_exact = length / spec.spacing;
            } else {
                std::vector<Scalar> d_lin, thetas;
                for (const auto &b : spec.beams) {
                    d_lin.push_back(from_dbi(b.value));
                    thetas.push_back(b.direction.theta_deg);
                }
                n_exact = required_elements(d_lin, thetas, spec.spacing).n_exact;
            }
            const int n = std::max(1, int(std::llround(n_exact)));
            result.geometry = {n, n, spec.spacing};
            result.n_exact = n_exact;
            result.geometry_solved = true;
        } else {
            result.geometry = {spec.elements->first, spec.elements->second, spec.spacing};
            result.geometry.check();
            result.n_exact = Scalar(result.geometry.n_x);
        }

        const Scalar length = result.geometry.length();
        const Scalar budget = dmax(length);
        const Scalar spent =
            sum_regular + endfire_power_factor(length) * sum_endfire;

        for (std::size_t i = 0; i < spec.beams.size(); ++i) {
            const auto &b = spec.beams[i];
            if (b.kind == Kind::directivity) {
                targets_linear[i] = from_dbi(b.value);
            } else { // the single free beam
                const Scalar remaining = budget - spent;
                if (remaining <= Scalar(0)) {
                    std::ostringstream os;
                    os << "directivity budget exceeded: the committed beams already demand "
                       << to_dbi(spent) << " dBi of broadside budget against Dmax = "
                       << to_dbi(budget) << " dBi, leaving nothing for the free beam at "
                       << b.direction.str();
                    throw infeasible_error(os.str());
                }
                targets_linear[i] = b.direction.endfire()
                                        ? remaining / endfire_power_factor(length)
                                        : remaining * std::cos(deg2rad(b.direction.theta_deg));
            }
        }

        if (n_free == 0 && !result.geometry_solved) {
            // Fully pinned budget against a user-pinned aperture: it must
            // fit. A solved geometry may sit a hair over after rounding N
            // down; predictions then scale down proportionally.
            if (spent > budget) {
                std::ostringstream os;
                os << "directivity budget exceeded: sum of D_k/cos(theta_k) terms is "
                   << to_dbi(spent) << " dBi against Dmax = " << to_dbi(budget) << " dBi";
                throw infeasible_error(os.str());
            }
        }

        coefficients = coefficients_from_directivities(targets_linear);
    }

    // Normalize so the strongest beam has coefficient exactly 1.
    const Scalar peak_coeff = *std::max_element(coefficients.begin(), coefficients.end());
    for (Scalar &c : coefficients)
        c /= peak_coeff;

    const Scalar length = result.geometry.length();
    result.aperture = aperture_summary(result.geometry);

    // Predicted absolute directivities at the realized aperture. When the
    // spec pinned every target and the budget is not exhausted, the surplus
    // scales all beams up proportionally.
    bool any_endfire = false;
    for (const auto &d : directions)
        any_endfire = any_endfire || d.endfire();
    const std::vector<Scalar> predicted =
        any_endfire ? predict_with_endfire(directions, coefficients, length)
                    : predict_multibeam(directions, coefficients, length);

    result.beams.reserve(spec.beams.size());
    for (std::size_t i = 0; i < spec.beams.size(); ++i)
        result.beams.push_back(
            {directions[i], coefficients[i], predicted[i], directions[i].endfire()});

    // Scan-limit check for beams below end-fire.
    const Scalar limit = length >= Scalar(9) / Scalar(8) ? max_scan_angle_deg(length) : Scalar(0);
    for (const auto &b : result.beams) {
        if (b.endfire)
            continue;
        const Scalar theta = b.direction.theta_deg;
        if (std::abs(theta - limit) <= Scalar(1e-9)) {
            result.warnings.push_back("beam " + b.direction.str() +
                                      " sits exactly at the scan limit of " +
                                      detail::format_deg(limit) + " deg");
        } else if (theta > limit) {
            std::string msg = "beam " + b.direction.str() + " exceeds the scan limit of " +
                              detail::format_deg(limit) + " deg for a " +
                              detail::format_deg(length) + " wavelength aperture";
            if (spec.mode == Mode::strict)
                throw scan_limit_error(msg);
            result.warnings.push_back(msg);
        }
    }

    // Pairwise azimuth and separation checks.
    const Scalar beamwidth_deg = rad2deg(Scalar(1) / length);
    for (std::size_t i = 0; i < directions.size(); ++i) {
        for (std::size_t j = i + 1; j < directions.size(); ++j) {
            Scalar dphi = std::abs(directions[i].phi_deg - directions[j].phi_deg);
            dphi = std::min(dphi, Scalar(360) - dphi);
            if (dphi <= Scalar(1e-9)) {
                std::string msg = "beams " + directions[i].str() + " and " + directions[j].str() +
                                  " share one azimuth plane; the power superposition model is "
                                  "unreliable there";
                if (spec.mode == Mode::strict)
                    throw same_azimuth_error(msg);
                result.warnings.push_back(msg);
                continue;
            }
            const Scalar dist = angular_distance_deg(directions[i], directions[j]);
            const Scalar min_dist = spec.separation_beamwidths * beamwidth_deg;
            if (dist < min_dist) {
                std::string msg = "beams " + directions[i].str() + " and " + directions[j].str() +
                                  " are separated by " + detail::format_deg(dist) +
                                  " deg, less than " + detail::format_deg(min_dist) +
                                  " deg (" + detail::format_deg(spec.separation_beamwidths) +
                                  " beamwidths)";
                if (spec.mode == Mode::strict)
                    throw separation_error(msg);
                result.warnings.push_back(msg);
            }
        }
    }

    std::vector<ExcitationMap<Scalar>> parts;
    parts.reserve(directions.size());
    for (const auto &d : directions)
        parts.push_back(gradient_phase_excitation(result.geometry, d));
    result.excitation = superpose(parts, coefficients);
    result.quantized = spec.quantization.active() ? quantize(result.excitation, spec.quantization)
                                                  : result.excitation;
    return result;
}

// Oracle check of one beam: where the pattern actually peaks near the
// requested direction and how much it radiates there.
template <typename Scalar>
struct BeamVerification {
    BeamDirection<Scalar> requested;
    BeamDirection<Scalar> peak;
    Scalar predicted_linear = Scalar(0);
    Scalar oracle_linear = Scalar(0);
    Scalar delta_db = Scalar(0); // oracle minus predicted, in dB
};

template <typename Scalar>
struct DirectivityReport {
    std::vector<BeamVerification<Scalar>> beams;
    Scalar total_power = Scalar(0);
    Scalar max_abs_delta_db = Scalar(0);
};

// Verifies a plan against the numerical oracle: evaluates the active
// (quantized if applicable) excitation on the grid, locates each beam's
// peak, and compares oracle directivity with the closed-form prediction.
template <typename Scalar>
DirectivityReport<Scalar> verify(const SynthesisPlan<Scalar> &p, const AngularGrid<Scalar> &grid,
                                 Scalar peak_radius_deg = Scalar(5), bool fast_path = false) {
    const ExcitationMap<Scalar> &map = p.active_map();
    const RadiationPattern<Scalar> pattern = compute_pattern(map, grid, fast_path);
    const Scalar power = total_radiated_power(pattern);
    if (power <= Scalar(0))
        throw undefined_directivity_error("planned map radiates no power");

    DirectivityReport<Scalar> report;
    report.total_power = power;
    for (const auto &beam : p.beams) {
        const PeakResult<Scalar> peak = find_peak(pattern, map, beam.direction, peak_radius_deg);
        const Scalar oracle = Scalar(4) * pi_v<Scalar> * peak.power / power;
        BeamVerification<Scalar> v;
        v.requested = beam.direction;
        v.peak = peak.direction;
        v.predicted_linear = beam.directivity_linear;
        v.oracle_linear = oracle;
        v.delta_db = to_dbi(oracle) - to_dbi(beam.directivity_linear);
        report.max_abs_delta_db = std::max(report.max_abs_delta_db, std::abs(v.delta_db));
        report.beams.push_back(v);
    }
    return report;
}

using BeamRequestd = BeamRequest<double>;
using DesignSpecd = DesignSpec<double>;
using SynthesisPland = SynthesisPlan<double>;
using BeamVerificationd = BeamVerification<double>;
using DirectivityReportd = DirectivityReport<double>;

} // namespace beamkit

#endif
