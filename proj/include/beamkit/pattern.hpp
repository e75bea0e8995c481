// SPDX-License-Identifier: Apache-2.0
//
// beamkit - multibeam planar array synthesis and verification
// Copyright (C) 2026 beamkit contributors

#ifndef BEAMKIT_PATTERN_HPP
#define BEAMKIT_PATTERN_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/FFT>

#include "beamkit/errors.hpp"
#include "beamkit/excitation.hpp"
#include "beamkit/geometry.hpp"

namespace beamkit {

// Complex array factor sampled on an angular grid; row i holds the ring
// theta = i * theta_step, column j the azimuth phi = j * phi_step.
template <typename Scalar>
struct RadiationPattern {
    using Complex = std::complex<Scalar>;
    using ValueMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;

    AngularGrid<Scalar> grid;
    ValueMatrix values;

    void check() const {
        grid.check();
        if (values.rows() != grid.n_theta() || values.cols() != grid.n_phi())
            throw dimension_error("pattern shape does not match its grid");
        if (!values.allFinite())
            throw invalid_input_error("pattern values must be finite");
    }
};

// Array factor at arbitrary (theta, phi) in degrees, unchecked. The phase
// convention is conjugate to the gradient-phase steering term, so a map
// steered to some direction evaluates to a positive real peak there.
template <typename Scalar>
std::complex<Scalar> array_factor_at(const ExcitationMap<Scalar> &map, Scalar theta_deg,
                                     Scalar phi_deg) {
    using Complex = std::complex<Scalar>;
    using ComplexVector = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;
    const Scalar beta = Scalar(2) * pi_v<Scalar> * map.geometry.spacing;
    const Scalar st = std::sin(deg2rad(theta_deg));
    const Scalar u = st * std::cos(deg2rad(phi_deg));
    const Scalar v = st * std::sin(deg2rad(phi_deg));
    ComplexVector px(map.geometry.n_x), py(map.geometry.n_y);
    for (int m = 0; m < map.geometry.n_x; ++m)
        px(m) = std::polar(Scalar(1), beta * Scalar(m) * u);
    for (int n = 0; n < map.geometry.n_y; ++n)
        py(n) = std::polar(Scalar(1), beta * Scalar(n) * v);
    return (px.transpose() * (map.weights * py))(0); // plain transpose, no conjugation
}

template <typename Scalar>
std::complex<Scalar> array_factor_at(const ExcitationMap<Scalar> &map,
                                     const BeamDirection<Scalar> &dir) {
    dir.check();
    return array_factor_at(map, dir.theta_deg, dir.phi_deg);
}

namespace detail {

// Smallest even 5-smooth integer >= n; keeps mixed-radix FFT sizes cheap.
inline int next_fft_size(int n) {
    for (int s = std::max(n, 2);; s += 2) {
        int r = s;
        for (int f : {2, 3, 5})
            while (r % f == 0)
                r /= f;
        if (r == 1)
            return s;
    }
}

// Direct separable evaluation of one constant-theta ring at n uniform
// azimuth nodes phi_j = j * (360 / n) degrees.
template <typename Scalar>
void eval_ring_direct(const ExcitationMap<Scalar> &map, Scalar sin_theta, int n_samples,
                      std::complex<Scalar> *out) {
    using Complex = std::complex<Scalar>;
    using ComplexMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;
    const int nx = map.geometry.n_x, ny = map.geometry.n_y;
    const Scalar beta = Scalar(2) * pi_v<Scalar> * map.geometry.spacing;

    ComplexMatrix px(nx, n_samples), py(ny, n_samples);
    for (int j = 0; j < n_samples; ++j) {
        const Scalar phi = deg2rad(Scalar(j) * Scalar(360) / Scalar(n_samples));
        const Scalar au = beta * sin_theta * std::cos(phi);
        const Scalar av = beta * sin_theta * std::sin(phi);
        px(0, j) = Complex(1);
        py(0, j) = Complex(1);
        const Complex ex = std::polar(Scalar(1), au), ey = std::polar(Scalar(1), av);
        for (int m = 1; m < nx; ++m)
            px(m, j) = px(m - 1, j) * ex;
        for (int n = 1; n < ny; ++n)
            py(n, j) = py(n - 1, j) * ey;
    }
    // F_j = px_j^T W py_j, batched as one product over the whole ring.
    ComplexMatrix a = map.weights.transpose() * px; // ny x n_samples
    for (int j = 0; j < n_samples; ++j)
        out[j] = (a.col(j).cwiseProduct(py.col(j))).sum();
}

// Azimuth harmonic bandwidth of a ring: the array factor on the ring is a
// trigonometric polynomial whose coefficients decay like Bessel functions of
// argument z = 2*pi*spacing*sin(theta)*max element radius; orders beyond
// z + O(z^(1/3)) are negligible. The margin keeps aliasing below 1e-9.
template <typename Scalar>
int ring_bandwidth(const ExcitationMap<Scalar> &map, Scalar sin_theta) {
    const Scalar rho = std::hypot(Scalar(map.geometry.n_x - 1), Scalar(map.geometry.n_y - 1));
    const Scalar z = Scalar(2) * pi_v<Scalar> * map.geometry.spacing * std::abs(sin_theta) * rho;
    return int(std::ceil(z + Scalar(10) * std::cbrt(z) + Scalar(16)));
}

// Spectral ring evaluation: sample the ring at m >= 2B+2 nodes, then
// resample to n_phi nodes by zero-padding the azimuth spectrum. Exact to
// roundoff for band-limited rings; falls back to direct evaluation when the
// coarse ring would not be smaller than the target grid.
template <typename Scalar>
void eval_ring_spectral(const ExcitationMap<Scalar> &map, Scalar sin_theta, int n_phi,
                        std::complex<Scalar> *out) {
    using Complex = std::complex<Scalar>;
    const int bw = ring_bandwidth(map, sin_theta);
    const int m = next_fft_size(2 * bw + 2);
    if (m >= n_phi) {
        eval_ring_direct(map, sin_theta, n_phi, out);
        return;
    }

    std::vector<Complex> coarse(m);
    eval_ring_direct(map, sin_theta, m, coarse.data());

    Eigen::FFT<Scalar> fft;
    std::vector<Complex> spectrum(m);
    fft.fwd(spectrum, coarse);

    // Zero-pad the spectrum; the Nyquist bin is split between +/- halves.
    std::vector<Complex> padded(n_phi, Complex(0));
    const int half = m / 2;
    for (int k = 0; k < half; ++k)
        padded[k] = spectrum[k];
    for (int k = half + 1; k < m; ++k)
        padded[n_phi - m + k] = spectrum[k];
    padded[half] = spectrum[half] * Scalar(0.5);
    padded[n_phi - half] = spectrum[half] * Scalar(0.5);

    std::vector<Complex> fine(n_phi);
    fft.inv(fine, padded); // applies 1/n_phi
    const Scalar scale = Scalar(n_phi) / Scalar(m);
    for (int j = 0; j < n_phi; ++j)
        out[j] = fine[j] * scale;
}

} // namespace detail

// Samples the array factor on the full grid. The spectral path accelerates
// wide grids and matches the direct sum to better than 1e-6 relative; the
// direct sum is the reference.
template <typename Scalar>
RadiationPattern<Scalar> compute_pattern(const ExcitationMap<Scalar> &map,
                                         const AngularGrid<Scalar> &grid,
                                         bool fast_path = false) {
    map.check();
    grid.check();
    using ValueMatrix = typename RadiationPattern<Scalar>::ValueMatrix;
    const int nt = grid.n_theta(), np = grid.n_phi();
    RadiationPattern<Scalar> pattern{grid, ValueMatrix(nt, np)};
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < nt; ++i) {
        const Scalar st = std::sin(deg2rad(grid.theta_at(i)));
        std::vector<std::complex<Scalar>> row(np);
        if (fast_path)
            detail::eval_ring_spectral(map, st, np, row.data());
        else
            detail::eval_ring_direct(map, st, np, row.data());
        for (int j = 0; j < np; ++j)
            pattern.values(i, j) = row[j];
    }
    return pattern;
}

// Hemispherical radiated power: integral of |F|^2 sin(theta) over theta in
// [0, pi/2], phi in [0, 2*pi). Trapezoid rule in theta (half weights at both
// ends), rectangle rule in phi (periodic). Summation order is fixed, so the
// result does not depend on thread count.
template <typename Scalar>
Scalar total_radiated_power(const RadiationPattern<Scalar> &pattern) {
    pattern.check();
    const int nt = pattern.grid.n_theta();
    const Scalar d_theta = deg2rad(pattern.grid.theta_step_deg);
    const Scalar d_phi = deg2rad(pattern.grid.phi_step_deg);
    Scalar sum = Scalar(0);
    for (int i = 0; i < nt; ++i) {
        const Scalar w = (i == 0 || i == nt - 1) ? Scalar(0.5) : Scalar(1);
        sum += w * std::sin(deg2rad(pattern.grid.theta_at(i))) * pattern.values.row(i).squaredNorm();
    }
    return sum * d_theta * d_phi;
}

// Change in the radiated-power integral from halving both grid steps, in dB.
// Small values certify that the grid resolves the pattern.
template <typename Scalar>
Scalar power_convergence_db(const ExcitationMap<Scalar> &map, const AngularGrid<Scalar> &grid,
                            bool fast_path = false) {
    const Scalar coarse = total_radiated_power(compute_pattern(map, grid, fast_path));
    const Scalar fine = total_radiated_power(compute_pattern(map, grid.halved(), fast_path));
    return std::abs(to_dbi(coarse / fine));
}

// Directivity oracle: 4*pi*|F(dir)|^2 / radiated power. Every closed-form
// prediction in beamkit is judged against this number.
template <typename Scalar>
Scalar directivity(const ExcitationMap<Scalar> &map, const BeamDirection<Scalar> &dir,
                   const AngularGrid<Scalar> &grid, bool fast_path = false) {
    dir.check();
    const Scalar power = total_radiated_power(compute_pattern(map, grid, fast_path));
    if (power <= Scalar(0))
        throw undefined_directivity_error("map radiates no power; directivity is undefined");
    const Scalar f2 = std::norm(array_factor_at(map, dir));
    return Scalar(4) * pi_v<Scalar> * f2 / power;
}

template <typename Scalar>
struct PeakResult {
    BeamDirection<Scalar> direction;
    Scalar power; // |F|^2 at the refined peak
};

namespace detail {

// Golden-section maximization of f over [lo, hi] to tol; f must be unimodal
// near the optimum, which a one-grid-step bracket guarantees.
template <typename Scalar, typename F>
Scalar golden_max(F &&f, Scalar lo, Scalar hi, Scalar tol) {
    const Scalar inv_phi = Scalar(0.6180339887498949);
    Scalar a = lo, b = hi;
    Scalar c = b - inv_phi * (b - a);
    Scalar d = a + inv_phi * (b - a);
    Scalar fc = f(c), fd = f(d);
    while (b - a > tol) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    return (a + b) / Scalar(2);
}

} // namespace detail

// Locates the pattern maximum near seed: grid argmax of |F|^2 over nodes
// within radius_deg great-circle distance, then coordinate-wise
// golden-section refinement inside a one-grid-step bracket.
template <typename Scalar>
PeakResult<Scalar> find_peak(const RadiationPattern<Scalar> &pattern,
                             const ExcitationMap<Scalar> &map, const BeamDirection<Scalar> &seed,
                             Scalar radius_deg) {
    pattern.check();
    seed.check();
    if (!(radius_deg >= std::max(pattern.grid.theta_step_deg, pattern.grid.phi_step_deg)))
        throw invalid_input_error("peak search radius must cover at least one grid step");

    const int nt = pattern.grid.n_theta(), np = pattern.grid.n_phi();
    const Scalar su = seed.u(), sv = seed.v(), sw = seed.w();
    const Scalar seed_sin = std::hypot(su, sv);
    const Scalar cos_radius = std::cos(deg2rad(radius_deg));

    std::vector<Scalar> cos_phi(np), sin_phi(np);
    for (int j = 0; j < np; ++j) {
        const Scalar phi = deg2rad(pattern.grid.phi_at(j));
        cos_phi[j] = std::cos(phi);
        sin_phi[j] = std::sin(phi);
    }

    int best_i = -1, best_j = -1;
    Scalar best = Scalar(-1);
    for (int i = 0; i < nt; ++i) {
        const Scalar theta = deg2rad(pattern.grid.theta_at(i));
        const Scalar st = std::sin(theta), ct = std::cos(theta);
        if (st * seed_sin + ct * sw < cos_radius)
            continue; // even the closest azimuth on this ring is outside the disc
        for (int j = 0; j < np; ++j) {
            const Scalar dot = st * (cos_phi[j] * su + sin_phi[j] * sv) + ct * sw;
            if (dot < cos_radius)
                continue;
            const Scalar p = std::norm(pattern.values(i, j));
            if (p > best) {
                best = p;
                best_i = i;
                best_j = j;
            }
        }
    }
    if (best_i < 0)
        throw invalid_input_error("no grid node lies within the peak search radius");

    Scalar theta = pattern.grid.theta_at(best_i);
    Scalar phi = pattern.grid.phi_at(best_j);
    const Scalar dt = pattern.grid.theta_step_deg, dp = pattern.grid.phi_step_deg;
    const Scalar tol = Scalar(1e-4);
    for (int pass = 0; pass < 3; ++pass) {
        theta = detail::golden_max(
            [&](Scalar t) { return std::norm(array_factor_at(map, t, phi)); },
            std::max(Scalar(0), theta - dt), std::min(Scalar(90), theta + dt), tol);
        phi = detail::golden_max(
            [&](Scalar p) { return std::norm(array_factor_at(map, theta, p)); }, phi - dp,
            phi + dp, tol);
    }
    Scalar phi_wrapped = std::fmod(phi, Scalar(360));
    if (phi_wrapped < Scalar(0))
        phi_wrapped += Scalar(360);
    if (phi_wrapped >= Scalar(360))
        phi_wrapped = Scalar(0);
    BeamDirection<Scalar> dir{std::clamp(theta, Scalar(0), Scalar(90)), phi_wrapped};
    return {dir, std::norm(array_factor_at(map, dir.theta_deg, dir.phi_deg))};
}

// Relative error of the cross-term-free power approximation: compares the
// radiated power of the combined map against the coefficient-weighted sum of
// the parts' powers. Small values justify treating the beams independently.
template <typename Scalar>
Scalar cross_term_error(const std::vector<ExcitationMap<Scalar>> &parts,
                        const std::vector<Scalar> &coefficients, const AngularGrid<Scalar> &grid) {
    const ExcitationMap<Scalar> combined = superpose(parts, coefficients);
    const Scalar exact = total_radiated_power(compute_pattern(combined, grid));
    if (exact <= Scalar(0))
        throw undefined_directivity_error("combined map radiates no power");
    Scalar approx = Scalar(0);
    for (std::size_t i = 0; i < parts.size(); ++i)
        approx += coefficients[i] * coefficients[i] *
                  total_radiated_power(compute_pattern(parts[i], grid));
    return std::abs(exact - approx) / exact;
}

using RadiationPatternd = RadiationPattern<double>;
using PeakResultd = PeakResult<double>;

} // namespace beamkit

#endif
