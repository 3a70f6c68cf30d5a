#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "oracles.hpp"
#include "photongas/cavity.hpp"
#include "photongas/constants.hpp"

using namespace photongas;

namespace {
constexpr double kHbarC = PhysicalConstants::hbar_c;
}

TEST_CASE("box geometry measures") {
    const GeometryMeasures cube = geometry_measures(BoxCavity{1.0, 1.0, 1.0});
    CHECK(cube.volume == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(cube.area == doctest::Approx(6.0).epsilon(1e-15));

    const GeometryMeasures slab = geometry_measures(BoxCavity{2.0, 1.0, 0.5});
    CHECK(slab.volume == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(slab.area == doctest::Approx(7.0).epsilon(1e-15));

    CHECK_THROWS_AS(geometry_measures(BoxCavity{0.0, 1.0, 1.0}), std::domain_error);
    CHECK_THROWS_AS(geometry_measures(BoxCavity{1.0, -1.0, 1.0}), std::domain_error);
}

TEST_CASE("mirror microcavity geometry measures") {
    const MirrorMicrocavity mc{1.0, 1.46e-6};
    const GeometryMeasures g = geometry_measures(mc);
    CHECK(g.volume == doctest::Approx(6.6966156413708051e-12).epsilon(1e-12));
    CHECK(g.area == doctest::Approx(9.1734505484821963e-6).epsilon(1e-12));

    // Spherical-cap forms written out independently.
    const double d0 = mc.D0;
    const double r = mc.R_curv;
    CHECK(g.volume == doctest::Approx(M_PI * d0 * d0 * (r - d0 / 3.0)).epsilon(1e-15));
    CHECK(g.area == doctest::Approx(2.0 * M_PI * r * d0).epsilon(1e-15));

    CHECK_THROWS_AS(geometry_measures(MirrorMicrocavity{1.0, 1.0}), std::domain_error);
    CHECK_THROWS_AS(geometry_measures(MirrorMicrocavity{1.0, 1.5}), std::domain_error);
    CHECK_THROWS_AS(geometry_measures(MirrorMicrocavity{1.0, 0.0}), std::domain_error);
    CHECK_THROWS_AS(geometry_measures(MirrorMicrocavity{-1.0, 1e-6}), std::domain_error);
}

TEST_CASE("unit cube mode enumeration: ground state and first excited shell") {
    const BoxCavity cube{1.0, 1.0, 1.0};
    const double eps1 = kHbarC * M_PI * std::sqrt(3.0);
    const double lambda2 = kHbarC * M_PI * (std::sqrt(6.0) - std::sqrt(3.0));

    CHECK(eps1 == doctest::Approx(1.72031257447926e-25).epsilon(1e-13));
    CHECK(lambda2 == doctest::Approx(7.12576799870284e-26).epsilon(1e-13));

    const ModeSpectrum only_ground = enumerate_modes(cube, 0.5 * lambda2);
    CHECK(only_ground.size() == 1);
    CHECK(only_ground.lambdas[0] == 0.0);
    CHECK(only_ground.epsilon_1 == doctest::Approx(eps1).epsilon(1e-14));
    CHECK(only_ground.helicity_degeneracy == 2);
    CHECK(only_ground.lambda_cutoff == doctest::Approx(0.5 * lambda2).epsilon(1e-15));

    // Cutoff just above the (2,1,1) shell: ground mode plus three permutations.
    const ModeSpectrum first_shell = enumerate_modes(cube, lambda2 * (1.0 + 1e-9));
    CHECK(first_shell.size() == 4);
    CHECK(first_shell.lambdas[0] == 0.0);
    for (std::size_t i = 1; i < 4; ++i) {
        CHECK(first_shell.lambdas[i] == doctest::Approx(lambda2).epsilon(1e-13));
    }
}

TEST_CASE("mode enumeration matches a brute-force sweep on an anisotropic box") {
    const BoxCavity box{0.9, 1.1, 1.3};
    const double eps1 = kHbarC * M_PI
                        * std::sqrt(1.0 / (0.9 * 0.9) + 1.0 / (1.1 * 1.1) + 1.0 / (1.3 * 1.3));
    const double lambda_max = 25.0 * kHbarC;  // a few hundred modes

    const ModeSpectrum spectrum = enumerate_modes(box, lambda_max);
    std::vector<double> direct = oracles::box_modes_direct(0.9, 1.1, 1.3, eps1 + lambda_max);
    std::sort(direct.begin(), direct.end());

    REQUIRE(spectrum.size() == direct.size());
    CHECK(spectrum.size() > 100);
    for (std::size_t i = 0; i < direct.size(); ++i) {
        CHECK(spectrum.epsilon_1 + spectrum.lambdas[i]
              == doctest::Approx(direct[i]).epsilon(1e-13));
    }
    CHECK(std::is_sorted(spectrum.lambdas.begin(), spectrum.lambdas.end()));
    CHECK(spectrum.lambda_max() == doctest::Approx(direct.back() - direct.front()).epsilon(1e-13));
}

TEST_CASE("mode enumeration guards") {
    const BoxCavity cube{1.0, 1.0, 1.0};
    CHECK_THROWS_AS(enumerate_modes(cube, -1.0), std::domain_error);
    CHECK_THROWS_AS(enumerate_modes(BoxCavity{0.0, 1.0, 1.0}, 1e-26), std::domain_error);
    // Cap: a cutoff that admits far more modes than allowed must throw.
    CHECK_THROWS_AS(enumerate_modes(cube, 100.0 * kHbarC, 10), std::length_error);
}

TEST_CASE("two-term smoothed counting function on the unit cube") {
    // At lambda/(hbar c) = 10*pi: bulk (10pi)^3/(3 pi^2) and surface (6/(8 pi))(10 pi)^2.
    const double lambda = 10.0 * M_PI * kHbarC;
    const double value = weyl_integrated_density(lambda, 1.0, 6.0);
    CHECK(value == doctest::Approx(811.578102177363).epsilon(1e-12));

    const double x = 10.0 * M_PI;
    const double bulk = x * x * x / (3.0 * M_PI * M_PI);
    const double surface = 6.0 / (8.0 * M_PI) * x * x;
    CHECK(bulk == doctest::Approx(1047.19755119660).epsilon(1e-12));
    CHECK(surface == doctest::Approx(235.619449019234).epsilon(1e-12));
    CHECK(value == doctest::Approx(bulk - surface).epsilon(1e-14));

    CHECK_THROWS_AS(weyl_integrated_density(lambda, 0.0, 6.0), std::domain_error);
    CHECK_THROWS_AS(weyl_integrated_density(-1.0, 1.0, 6.0), std::domain_error);
}

TEST_CASE("smoothed density coefficients and consistency with the counting function") {
    const WeylCoefficients wc = weyl_density_coefficients(1.0, 6.0);
    CHECK(wc.bulk * M_PI * M_PI * kHbarC * kHbarC * kHbarC == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(wc.surface * 4.0 * M_PI * kHbarC * kHbarC == doctest::Approx(6.0).epsilon(1e-15));

    // d/d lambda of the integrated count equals bulk*lambda^2 - surface*lambda.
    const double lambda = 5.0 * kHbarC;
    const double h = 1e-6 * lambda;
    const double deriv = (weyl_integrated_density(lambda + h, 1.0, 6.0)
                          - weyl_integrated_density(lambda - h, 1.0, 6.0))
                         / (2.0 * h);
    const double density = wc.bulk * lambda * lambda - wc.surface * lambda;
    CHECK(deriv == doctest::Approx(density).epsilon(1e-9));
}
