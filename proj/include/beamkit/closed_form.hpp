// SPDX-License-Identifier: Apache-2.0
//
// beamkit - multibeam planar array synthesis and verification
// Copyright (C) 2026 beamkit contributors

#ifndef BEAMKIT_CLOSED_FORM_HPP
#define BEAMKIT_CLOSED_FORM_HPP

#include <algorithm>
#include <cmath>
#include <vector>

#include "beamkit/errors.hpp"
#include "beamkit/geometry.hpp"

namespace beamkit {

// One beam of a resolved design: pointing direction, superposition
// coefficient, and the predicted absolute directivity.
template <typename Scalar>
struct BeamPlanEntry {
    BeamDirection<Scalar> direction;
    Scalar coefficient = Scalar(1);
    Scalar directivity_linear = Scalar(0);
    bool endfire = false;
};

// Aperture-level constants of a geometry: side length L (in wavelengths),
// the broadside peak directivity 4*pi*L^2, and the per-axis linear-array
// directivities 2*L used to factor it.
template <typename Scalar>
struct ApertureSummary {
    Scalar length_wavelengths = Scalar(0);
    Scalar dmax_linear = Scalar(0);
    Scalar dx_linear = Scalar(0);
    Scalar dy_linear = Scalar(0);
};

// Peak directivity of a uniformly excited broadside square aperture of side
// L wavelengths: 4*pi*L^2.
template <typename Scalar>
Scalar dmax(Scalar length_wavelengths) {
    if (!(length_wavelengths > Scalar(0)))
        throw invalid_input_error("aperture length must be positive");
    return Scalar(4) * pi_v<Scalar> * length_wavelengths * length_wavelengths;
}

template <typename Scalar>
ApertureSummary<Scalar> aperture_summary(const ArrayGeometry<Scalar> &geometry) {
    geometry.check();
    const Scalar length = geometry.length();
    return {length, dmax(length), Scalar(2) * geometry.length_x(), Scalar(2) * geometry.length_y()};
}

// Widest usable scan angle of an aperture of side L: arccos(sqrt(9/(8L))) in
// degrees. Below L = 9/8 wavelengths no scan range exists at all.
template <typename Scalar>
Scalar max_scan_angle_deg(Scalar length_wavelengths) {
    if (!(length_wavelengths > Scalar(0)))
        throw invalid_input_error("aperture length must be positive");
    const Scalar arg = Scalar(9) / (Scalar(8) * length_wavelengths);
    if (arg > Scalar(1))
        throw scan_limit_error("aperture shorter than 9/8 wavelengths has no usable scan range");
    return rad2deg(std::acos(std::sqrt(arg)));
}

// Single-beam directivity of a large scanning aperture: Dmax * cos(theta).
template <typename Scalar>
Scalar scanned_directivity(Scalar theta_deg, Scalar length_wavelengths) {
    const Scalar limit = max_scan_angle_deg(length_wavelengths);
    if (theta_deg > limit)
        throw scan_limit_error("beam scanned beyond the aperture's maximum scan angle");
    return dmax(length_wavelengths) * std::cos(deg2rad(theta_deg));
}

// Ratio of end-fire to broadside radiated power for a beam steered into the
// array plane: (4/3) * sqrt(L / 2).
template <typename Scalar>
Scalar endfire_power_factor(Scalar length_wavelengths) {
    if (!(length_wavelengths > Scalar(0)))
        throw invalid_input_error("aperture length must be positive");
    return Scalar(4) / Scalar(3) * std::sqrt(length_wavelengths / Scalar(2));
}

namespace detail {

// Power-budget denominator shared by the multibeam predictors: each beam
// below end-fire spends a_i^2 / cos(theta_i) of the broadside budget, an
// end-fire beam spends a_i^2 times the end-fire power factor.
template <typename Scalar>
Scalar budget_denominator(const std::vector<BeamDirection<Scalar>> &directions,
                          const std::vector<Scalar> &coefficients, Scalar length_wavelengths,
                          bool allow_endfire) {
    if (directions.empty())
        throw invalid_input_error("at least one beam is required");
    if (directions.size() != coefficients.size())
        throw dimension_error("beam and coefficient counts differ");
    bool any_nonzero = false;
    Scalar sum = Scalar(0);
    for (std::size_t i = 0; i < directions.size(); ++i) {
        directions[i].check();
        const Scalar a = coefficients[i];
        if (!(a >= Scalar(0)) || !std::isfinite(a))
            throw invalid_input_error("superposition coefficients must be finite and non-negative");
        any_nonzero = any_nonzero || a > Scalar(0);
        if (directions[i].endfire()) {
            if (!allow_endfire)
                throw invalid_input_error(
                    "end-fire beam requires the end-fire-aware predictor");
            sum += a * a * endfire_power_factor(length_wavelengths);
        } else {
            sum += a * a / std::cos(deg2rad(directions[i].theta_deg));
        }
    }
    if (!any_nonzero)
        throw invalid_input_error("all superposition coefficients are zero");
    return sum;
}

} // namespace detail

// Absolute directivity of every beam of a coefficient-weighted multibeam
// superposition: D_i = a_i^2 * Dmax / sum_k(a_k^2 / cos(theta_k)). All beams
// must stay off end-fire.
template <typename Scalar>
std::vector<Scalar> predict_multibeam(const std::vector<BeamDirection<Scalar>> &directions,
                                      const std::vector<Scalar> &coefficients,
                                      Scalar length_wavelengths) {
    const Scalar denom =
        detail::budget_denominator(directions, coefficients, length_wavelengths, false);
    const Scalar budget = dmax(length_wavelengths);
    std::vector<Scalar> out(directions.size());
    for (std::size_t i = 0; i < directions.size(); ++i)
        out[i] = coefficients[i] * coefficients[i] * budget / denom;
    return out;
}

// End-fire-aware variant: beams at theta = 90 use the end-fire power factor
// in the shared denominator. Reduces exactly to predict_multibeam when no
// beam points at end-fire.
template <typename Scalar>
std::vector<Scalar> predict_with_endfire(const std::vector<BeamDirection<Scalar>> &directions,
                                         const std::vector<Scalar> &coefficients,
                                         Scalar length_wavelengths) {
    const Scalar denom =
        detail::budget_denominator(directions, coefficients, length_wavelengths, true);
    const Scalar budget = dmax(length_wavelengths);
    std::vector<Scalar> out(directions.size());
    for (std::size_t i = 0; i < directions.size(); ++i)
        out[i] = coefficients[i] * coefficients[i] * budget / denom;
    return out;
}

// Superposition coefficients that realize a set of absolute directivities:
// a_i = sqrt(D_i / max_k D_k), so the strongest beam gets coefficient 1.
template <typename Scalar>
std::vector<Scalar> coefficients_from_directivities(const std::vector<Scalar> &directivities) {
    if (directivities.empty())
        throw invalid_input_error("at least one directivity is required");
    for (Scalar d : directivities)
        if (!(d > Scalar(0)) || !std::isfinite(d))
            throw invalid_input_error("directivities must be positive and finite");
    const Scalar top = *std::max_element(directivities.begin(), directivities.end());
    std::vector<Scalar> out(directivities.size());
    for (std::size_t i = 0; i < directivities.size(); ++i)
        out[i] = std::sqrt(directivities[i] / top);
    return out;
}

// Broadside budget needed to radiate the given absolute directivities:
// Dmax = sum_k D_k / cos(theta_k). Inverse of predict_multibeam.
template <typename Scalar>
Scalar dmax_from_directivities(const std::vector<Scalar> &directivities,
                               const std::vector<Scalar> &theta_deg) {
    if (directivities.empty() || directivities.size() != theta_deg.size())
        throw dimension_error("directivity and angle lists must match and be non-empty");
    Scalar sum = Scalar(0);
    for (std::size_t i = 0; i < directivities.size(); ++i) {
        if (!(directivities[i] > Scalar(0)))
            throw invalid_input_error("directivities must be positive");
        if (theta_deg[i] >= Scalar(90))
            throw invalid_input_error(
                "end-fire beam requires the end-fire-aware element solver");
        sum += directivities[i] / std::cos(deg2rad(theta_deg[i]));
    }
    return sum;
}

template <typename Scalar>
struct ElementCount {
    int n;          // rounded element count per side
    Scalar n_exact; // unrounded value the budget actually asks for
};

// Side element count of the square array that meets the directivity budget:
// N = (1/spacing) * sqrt(sum_k(D_k / cos(theta_k)) / 4*pi), rounded to the
// nearest integer.
template <typename Scalar>
ElementCount<Scalar> required_elements(const std::vector<Scalar> &directivities,
                                       const std::vector<Scalar> &theta_deg, Scalar spacing) {
    if (!(spacing > Scalar(0)))
        throw invalid_input_error("element spacing must be positive");
    const Scalar budget = dmax_from_directivities(directivities, theta_deg);
    const Scalar n_exact = std::sqrt(budget / (Scalar(4) * pi_v<Scalar>)) / spacing;
    const int n = std::max(1, int(std::llround(n_exact)));
    return {n, n_exact};
}

using BeamPlanEntryd = BeamPlanEntry<double>;
using ApertureSummaryd = ApertureSummary<double>;

} // namespace beamkit

#endif
