// SPDX-License-Identifier: Apache-2.0
//
// beamkit - multibeam planar array synthesis and verification
// Copyright (C) 2026 beamkit contributors

#ifndef BEAMKIT_EXCITATION_HPP
#define BEAMKIT_EXCITATION_HPP

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "beamkit/errors.hpp"
#include "beamkit/geometry.hpp"

namespace beamkit {

// Per-element complex excitation of a planar array. weights(m, n) drives the
// element at position (m * spacing, n * spacing) in wavelengths, with the
// phase reference at the (0, 0) corner element.
template <typename Scalar>
struct ExcitationMap {
    using Complex = std::complex<Scalar>;
    using WeightMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;
    using RealMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

    ArrayGeometry<Scalar> geometry;
    WeightMatrix weights;

    RealMatrix amplitude() const { return weights.cwiseAbs(); }

    // Element phases wrapped into [0, 2*pi).
    RealMatrix phase() const {
        RealMatrix p(weights.rows(), weights.cols());
        for (Eigen::Index n = 0; n < weights.cols(); ++n)
            for (Eigen::Index m = 0; m < weights.rows(); ++m)
                p(m, n) = canonical_phase(std::arg(weights(m, n)));
        return p;
    }

    void check() const {
        geometry.check();
        if (weights.rows() != geometry.n_x || weights.cols() != geometry.n_y)
            throw dimension_error("weight matrix shape does not match the geometry");
        if (!weights.allFinite())
            throw invalid_input_error("excitation weights must be finite");
    }
};

// Uniform-amplitude excitation whose linear phase gradient steers the array
// factor peak to dir: phase(m, n) = -2*pi*spacing*(m*u + n*v).
template <typename Scalar>
ExcitationMap<Scalar> gradient_phase_excitation(const ArrayGeometry<Scalar> &geometry,
                                                const BeamDirection<Scalar> &dir) {
    geometry.check();
    dir.check();
    using WeightMatrix = typename ExcitationMap<Scalar>::WeightMatrix;
    const Scalar beta = Scalar(2) * pi_v<Scalar> * geometry.spacing;
    const Scalar u = dir.u(), v = dir.v();
    ExcitationMap<Scalar> map{geometry, WeightMatrix(geometry.n_x, geometry.n_y)};
    for (int n = 0; n < geometry.n_y; ++n)
        for (int m = 0; m < geometry.n_x; ++m)
            map.weights(m, n) =
                std::polar(Scalar(1), canonical_phase(-beta * (Scalar(m) * u + Scalar(n) * v)));
    return map;
}

// Coefficient-weighted sum of excitations sharing one geometry. The result
// carries the mixed amplitude/phase profile of the combined map.
template <typename Scalar>
ExcitationMap<Scalar> superpose(const std::vector<ExcitationMap<Scalar>> &parts,
                                const std::vector<Scalar> &coefficients) {
    if (parts.empty())
        throw invalid_input_error("superpose needs at least one excitation");
    if (parts.size() != coefficients.size())
        throw dimension_error("coefficient count does not match excitation count");
    for (const auto &p : parts) {
        p.check();
        if (!(p.geometry == parts.front().geometry))
            throw dimension_error("superposed excitations must share one geometry");
    }
    for (Scalar c : coefficients)
        if (!std::isfinite(c))
            throw invalid_input_error("superposition coefficients must be finite");

    using WeightMatrix = typename ExcitationMap<Scalar>::WeightMatrix;
    ExcitationMap<Scalar> out{parts.front().geometry,
                              WeightMatrix::Zero(parts.front().weights.rows(),
                                                 parts.front().weights.cols())};
    for (std::size_t i = 0; i < parts.size(); ++i)
        out.weights += coefficients[i] * parts[i].weights;
    return out;
}

namespace detail {

// Snaps x (in level units) to the nearest integer level; exact midpoints
// round toward the lower level.
template <typename Scalar>
long snap_level(Scalar x) {
    const Scalar k = std::floor(x);
    const Scalar frac = x - k;
    return long(k) + (frac > Scalar(0.5) ? 1 : 0);
}

} // namespace detail

// Snaps phases to 2^phase_bits uniform levels over [0, 2*pi) and amplitudes,
// after a global rescale to peak 1, to 2^amplitude_bits uniform levels over
// [0, 1]. A depth of 0 leaves that component continuous. The rescale is not
// undone; directivity is invariant under uniform amplitude scaling.
template <typename Scalar>
ExcitationMap<Scalar> quantize(const ExcitationMap<Scalar> &map, const QuantizationScheme &scheme) {
    map.check();
    scheme.check();
    if (!scheme.active())
        return map;

    const long phase_levels = scheme.phase_bits > 0 ? (1L << scheme.phase_bits) : 0;
    const long amp_levels = scheme.amplitude_bits > 0 ? (1L << scheme.amplitude_bits) : 0;
    const Scalar two_pi = Scalar(2) * pi_v<Scalar>;

    Scalar amp_peak = Scalar(0);
    if (amp_levels > 0) {
        amp_peak = map.weights.cwiseAbs().maxCoeff();
        if (amp_peak == Scalar(0))
            throw invalid_input_error("cannot quantize the amplitude of an all-zero excitation");
    }

    ExcitationMap<Scalar> out = map;
    for (Eigen::Index n = 0; n < map.weights.cols(); ++n) {
        for (Eigen::Index m = 0; m < map.weights.rows(); ++m) {
            const auto w = map.weights(m, n);
            Scalar a = std::abs(w);
            Scalar p = canonical_phase(std::arg(w));
            if (phase_levels > 0) {
                const Scalar step = two_pi / Scalar(phase_levels);
                const long idx = detail::snap_level(p / step) % phase_levels;
                p = Scalar(idx) * step;
            }
            if (amp_levels > 0) {
                const long top = amp_levels - 1;
                long idx = detail::snap_level(a / amp_peak * Scalar(top));
                idx = std::min(idx, top);
                a = Scalar(idx) / Scalar(top);
            }
            out.weights(m, n) = std::polar(a, p);
        }
    }
    return out;
}

using ExcitationMapd = ExcitationMap<double>;

} // namespace beamkit

#endif
