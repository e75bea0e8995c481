// SPDX-License-Identifier: Apache-2.0
//
// beamkit - multibeam planar array synthesis and verification
// Copyright (C) 2026 beamkit contributors

#ifndef BEAMKIT_GEOMETRY_HPP
#define BEAMKIT_GEOMETRY_HPP

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "beamkit/errors.hpp"

namespace beamkit {

template <typename Scalar>
inline constexpr Scalar pi_v = std::numbers::pi_v<Scalar>;

template <typename Scalar>
constexpr Scalar deg2rad(Scalar deg) {
    return deg * pi_v<Scalar> / Scalar(180);
}

template <typename Scalar>
constexpr Scalar rad2deg(Scalar rad) {
    return rad * Scalar(180) / pi_v<Scalar>;
}

template <typename Scalar>
Scalar to_dbi(Scalar linear) {
    return Scalar(10) * std::log10(linear);
}

template <typename Scalar>
Scalar from_dbi(Scalar dbi) {
    return std::pow(Scalar(10), dbi / Scalar(10));
}

// Wraps a phase into [0, 2*pi).
template <typename Scalar>
Scalar canonical_phase(Scalar phase) {
    const Scalar two_pi = Scalar(2) * pi_v<Scalar>;
    Scalar p = std::fmod(phase, two_pi);
    if (p < Scalar(0))
        p += two_pi;
    if (p >= two_pi) // fmod rounding can land exactly on 2*pi
        p = Scalar(0);
    return p;
}

// Rectangular element lattice: n_x by n_y elements, uniform spacing in
// wavelengths along both axes. Side lengths are L_x = n_x * spacing and
// L_y = n_y * spacing.
template <typename Scalar>
struct ArrayGeometry {
    int n_x = 1;
    int n_y = 1;
    Scalar spacing = Scalar(0.5); // d / lambda

    Scalar length_x() const { return Scalar(n_x) * spacing; }
    Scalar length_y() const { return Scalar(n_y) * spacing; }
    // Effective square-aperture side; equals length_x for square arrays.
    Scalar length() const { return std::sqrt(length_x() * length_y()); }

    bool operator==(const ArrayGeometry &) const = default;

    void check() const {
        if (n_x < 1 || n_y < 1)
            throw invalid_input_error("element counts must be at least 1");
        if (!(spacing > Scalar(0)) || !std::isfinite(spacing))
            throw invalid_input_error("element spacing must be positive and finite");
    }
};

// Far-field direction. theta is the polar angle off broadside in [0, 90]
// degrees; phi is the azimuth in [0, 360) degrees. theta = 90 is end-fire.
template <typename Scalar>
struct BeamDirection {
    Scalar theta_deg = Scalar(0);
    Scalar phi_deg = Scalar(0);

    bool endfire() const { return theta_deg == Scalar(90); }

    // Direction cosines u = sin(theta)cos(phi), v = sin(theta)sin(phi).
    Scalar u() const {
        return std::sin(deg2rad(theta_deg)) * std::cos(deg2rad(phi_deg));
    }
    Scalar v() const {
        return std::sin(deg2rad(theta_deg)) * std::sin(deg2rad(phi_deg));
    }
    Scalar w() const { return std::cos(deg2rad(theta_deg)); }

    bool operator==(const BeamDirection &) const = default;

    void check() const {
        if (!std::isfinite(theta_deg) || theta_deg < Scalar(0) || theta_deg > Scalar(90))
            throw invalid_input_error("theta_deg must lie in [0, 90]");
        if (!std::isfinite(phi_deg) || phi_deg < Scalar(0) || phi_deg >= Scalar(360))
            throw invalid_input_error("phi_deg must lie in [0, 360)");
    }

    std::string str() const {
        std::ostringstream os;
        os << "(" << theta_deg << " deg, " << phi_deg << " deg)";
        return os.str();
    }
};

// Great-circle angle between two directions, in degrees.
template <typename Scalar>
Scalar angular_distance_deg(const BeamDirection<Scalar> &a, const BeamDirection<Scalar> &b) {
    Scalar dot = a.u() * b.u() + a.v() * b.v() + a.w() * b.w();
    dot = std::min(Scalar(1), std::max(Scalar(-1), dot));
    return rad2deg(std::acos(dot));
}

// Uniform hemispherical sampling grid: theta in [0, 90] inclusive, phi in
// [0, 360) with periodic closure. Both steps must divide their span exactly.
template <typename Scalar>
struct AngularGrid {
    Scalar theta_step_deg = Scalar(0.25);
    Scalar phi_step_deg = Scalar(0.25);

    int n_theta() const { return int(std::llround(Scalar(90) / theta_step_deg)) + 1; }
    int n_phi() const { return int(std::llround(Scalar(360) / phi_step_deg)); }
    Scalar theta_at(int i) const { return Scalar(i) * theta_step_deg; }
    Scalar phi_at(int j) const { return Scalar(j) * phi_step_deg; }

    AngularGrid halved() const { return {theta_step_deg / Scalar(2), phi_step_deg / Scalar(2)}; }

    bool operator==(const AngularGrid &) const = default;

    void check() const {
        auto check_step = [](Scalar step, Scalar span, const char *name) {
            if (!std::isfinite(step) || step <= Scalar(0) || step > Scalar(1))
                throw invalid_input_error(std::string(name) + " must lie in (0, 1]");
            const Scalar n = span / step;
            if (std::abs(n - Scalar(std::llround(n))) > Scalar(1e-9))
                throw invalid_input_error(std::string(name) + " must divide the angular span exactly");
        };
        check_step(theta_step_deg, Scalar(90), "theta_step_deg");
        check_step(phi_step_deg, Scalar(360), "phi_step_deg");
    }
};

// Uniform quantizer depths for the phase and amplitude components.
// 0 bits means the component stays continuous.
struct QuantizationScheme {
    int phase_bits = 0;
    int amplitude_bits = 0;

    bool active() const { return phase_bits > 0 || amplitude_bits > 0; }

    bool operator==(const QuantizationScheme &) const = default;

    void check() const {
        for (int b : {phase_bits, amplitude_bits})
            if (b < 0 || b > 16)
                throw invalid_input_error("quantizer depths must be 1..16 bits or continuous");
    }
};

using ArrayGeometryd = ArrayGeometry<double>;
using BeamDirectiond = BeamDirection<double>;
using AngularGridd = AngularGrid<double>;

} // namespace beamkit

#endif
