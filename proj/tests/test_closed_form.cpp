// SPDX-License-Identifier: Apache-2.0
//
// beamkit - multibeam planar array synthesis and verification
// Copyright (C) 2026 beamkit contributors

#include <cmath>
#include <vector>

#include <doctest.h>

#include "beamkit/closed_form.hpp"

using namespace beamkit;

TEST_CASE("broadside budget is 4*pi*L^2") {
    CHECK(dmax(10.0) == doctest::Approx(1256.637).epsilon(1e-6));
    CHECK(to_dbi(dmax(10.0)) == doctest::Approx(30.9921).epsilon(1e-5));
    CHECK_THROWS_AS(dmax(0.0), invalid_input_error);
    CHECK_THROWS_AS(dmax(-3.0), invalid_input_error);
}

TEST_CASE("aperture summary factors the budget into per-axis terms") {
    const ArrayGeometryd g{30, 30, 1.0 / 3.0};
    const ApertureSummaryd s = aperture_summary(g);
    CHECK(s.length_wavelengths == doctest::Approx(10.0).epsilon(1e-12));
    CHECK(s.dx_linear == doctest::Approx(20.0).epsilon(1e-12));
    CHECK(s.dy_linear == doctest::Approx(20.0).epsilon(1e-12));
    // dmax = pi * dx * dy, consistent to machine precision
    CHECK(s.dmax_linear ==
          doctest::Approx(pi_v<double> * s.dx_linear * s.dy_linear).epsilon(1e-12));
}

TEST_CASE("scan limit follows arccos(sqrt(9/8L)) and grows with length") {
    CHECK(max_scan_angle_deg(10.0) == doctest::Approx(70.4025).epsilon(1e-5));
    // 9/(8L) = 1/4 exactly at L = 4.5
    CHECK(max_scan_angle_deg(4.5) == doctest::Approx(60.0).epsilon(1e-12));
    CHECK(max_scan_angle_deg(9.0 / 8.0) == doctest::Approx(0.0));
    CHECK_THROWS_AS(max_scan_angle_deg(1.0), scan_limit_error);
    CHECK_THROWS_AS(max_scan_angle_deg(0.0), invalid_input_error);

    double prev = 0;
    for (double len : {2.0, 3.0, 5.0, 8.0, 10.0, 20.0, 100.0}) {
        const double limit = max_scan_angle_deg(len);
        CHECK(limit > prev);
        prev = limit;
    }
}

TEST_CASE("single-beam scan loss follows cos(theta)") {
    CHECK(scanned_directivity(0.0, 10.0) == doctest::Approx(dmax(10.0)).epsilon(1e-12));
    CHECK(scanned_directivity(60.0, 10.0) == doctest::Approx(dmax(10.0) / 2).epsilon(1e-12));
    CHECK_THROWS_AS(scanned_directivity(75.0, 10.0), scan_limit_error); // limit is 70.4
}

TEST_CASE("end-fire power factor") {
    CHECK(endfire_power_factor(10.0) == doctest::Approx(2.981424).epsilon(1e-6));
    CHECK(endfire_power_factor(38.0 / 3.0) == doctest::Approx(3.355482).epsilon(1e-6));
    CHECK_THROWS_AS(endfire_power_factor(0.0), invalid_input_error);
}

TEST_CASE("multibeam split spends exactly the broadside budget") {
    const std::vector<BeamDirectiond> dirs{{10, 180}, {30, 270}, {55, 90}};
    const std::vector<double> a{1.0, 0.7, 0.4};
    const double length = 10.0;
    const std::vector<double> d = predict_multibeam(dirs, a, length);

    double spent = 0;
    for (std::size_t i = 0; i < dirs.size(); ++i)
        spent += d[i] / std::cos(deg2rad(dirs[i].theta_deg));
    CHECK(spent == doctest::Approx(dmax(length)).epsilon(1e-12));

    // directivity scales with the square of the coefficient
    CHECK(d[1] / d[0] == doctest::Approx(0.49).epsilon(1e-12));
}

TEST_CASE("equal beams at equal scan angles split the budget evenly") {
    const std::vector<BeamDirectiond> dirs{{25, 0}, {25, 180}};
    const std::vector<double> d = predict_multibeam(dirs, {1.0, 1.0}, 8.0);
    CHECK(d[0] == doctest::Approx(d[1]).epsilon(1e-14));
    CHECK(d[0] == doctest::Approx(dmax(8.0) * std::cos(deg2rad(25.0)) / 2).epsilon(1e-12));
}

TEST_CASE("scale invariance of the coefficient split") {
    const std::vector<BeamDirectiond> dirs{{16, 270}, {25, 225}, {35, 135}};
    const std::vector<double> a{0.768294, 1.0, 0.845332};
    std::vector<double> scaled = a;
    for (double &x : scaled) x *= 2.7;
    const std::vector<double> d1 = predict_multibeam(dirs, a, 10.0);
    const std::vector<double> d2 = predict_multibeam(dirs, scaled, 10.0);
    for (std::size_t i = 0; i < d1.size(); ++i)
        CHECK(d2[i] == doctest::Approx(d1[i]).epsilon(1e-12));
}

TEST_CASE("coefficients and directivities round-trip") {
    const std::vector<BeamDirectiond> dirs{{10, 180}, {40, 225}, {60, 0}};
    const std::vector<double> a{0.9, 1.0, 0.55};
    const std::vector<double> d = predict_multibeam(dirs, a, 9.0);
    const std::vector<double> back = coefficients_from_directivities(d);
    for (std::size_t i = 0; i < a.size(); ++i)
        CHECK(back[i] == doctest::Approx(a[i] / 1.0).epsilon(1e-12)); // already peak-normalized
}

TEST_CASE("end-fire-aware split charges the in-plane beam its excess power") {
    const std::vector<BeamDirectiond> dirs{{10, 270}, {90, 180}};
    const std::vector<double> a{1.0, 1.0};
    const double length = 10.0;
    const std::vector<double> d = predict_with_endfire(dirs, a, length);

    const double spent = d[0] / std::cos(deg2rad(10.0)) + d[1] * endfire_power_factor(length);
    CHECK(spent == doctest::Approx(dmax(length)).epsilon(1e-12));
    // equal coefficients radiate equal peak directivity either way
    CHECK(d[0] == doctest::Approx(d[1]).epsilon(1e-14));

    // plain predictor refuses in-plane beams
    CHECK_THROWS_AS(predict_multibeam(dirs, a, length), invalid_input_error);
}

TEST_CASE("zeroed end-fire coefficient reduces to the plain split") {
    const std::vector<BeamDirectiond> with_ef{{10, 270}, {40, 225}, {90, 180}};
    const std::vector<BeamDirectiond> without{{10, 270}, {40, 225}};
    const std::vector<double> d_ef = predict_with_endfire(with_ef, {1.0, 0.8, 0.0}, 10.0);
    const std::vector<double> d_plain = predict_multibeam(without, {1.0, 0.8}, 10.0);
    CHECK(d_ef[0] == d_plain[0]);
    CHECK(d_ef[1] == d_plain[1]);
    CHECK(d_ef[2] == 0.0);
}

TEST_CASE("single end-fire beam reaches 3*pi*L*sqrt(2L)") {
    const double length = 10.0;
    const std::vector<double> d =
        predict_with_endfire({BeamDirectiond{90, 0}}, {1.0}, length);
    CHECK(d[0] == doctest::Approx(3 * pi_v<double> * length * std::sqrt(2 * length))
                      .epsilon(1e-12));
}

TEST_CASE("element solver reproduces the three-beam sizing") {
    const std::vector<double> targets{from_dbi(25.23), from_dbi(22.1), from_dbi(24.33)};
    const std::vector<double> thetas{10, 40, 60};

    CHECK(dmax_from_directivities(targets, thetas) == doctest::Approx(1092.3207).epsilon(1e-6));

    const ElementCount<double> n = required_elements(targets, thetas, 1.0 / 3.0);
    CHECK(n.n_exact == doctest::Approx(27.969931).epsilon(1e-6));
    CHECK(n.n == 28);

    const std::vector<double> a = coefficients_from_directivities(targets);
    CHECK(a[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(a[1] == doctest::Approx(0.697429).epsilon(1e-5));
    CHECK(a[2] == doctest::Approx(0.901571).epsilon(1e-5));
}

TEST_CASE("element solver rejects in-plane targets and bad inputs") {
    using dvec = std::vector<double>;
    CHECK_THROWS_AS(dmax_from_directivities(dvec{100.0}, dvec{90.0}), invalid_input_error);
    CHECK_THROWS_AS(dmax_from_directivities(dvec{100.0, 50.0}, dvec{10.0}), dimension_error);
    CHECK_THROWS_AS(dmax_from_directivities(dvec{-1.0}, dvec{10.0}), invalid_input_error);
    CHECK_THROWS_AS(required_elements(dvec{100.0}, dvec{10.0}, 0.0), invalid_input_error);
    CHECK_THROWS_AS(coefficients_from_directivities(dvec{}), invalid_input_error);
    CHECK_THROWS_AS(coefficients_from_directivities(dvec{1.0, 0.0}), invalid_input_error);
}

TEST_CASE("predictors validate coefficient lists") {
    const std::vector<BeamDirectiond> dirs{{10, 0}, {20, 90}};
    CHECK_THROWS_AS(predict_multibeam(dirs, {1.0}, 10.0), dimension_error);
    CHECK_THROWS_AS(predict_multibeam(dirs, {0.0, 0.0}, 10.0), invalid_input_error);
    CHECK_THROWS_AS(predict_multibeam(dirs, {-1.0, 1.0}, 10.0), invalid_input_error);
}
