#include "photongas/cavity.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "photongas/constants.hpp"

namespace photongas {

namespace {

void validate(const BoxCavity& box) {
    if (!(box.L1 > 0.0) || !(box.L2 > 0.0) || !(box.L3 > 0.0))
        throw std::domain_error("BoxCavity: all edges must be > 0");
}

void validate(const MirrorMicrocavity& cav) {
    if (!(cav.D0 > 0.0) || !(cav.D0 < cav.R_curv))
        throw std::domain_error("MirrorMicrocavity: need 0 < D0 < R_curv");
}

}  // namespace

GeometryMeasures geometry_measures(const BoxCavity& box) {
    validate(box);
    return {box.L1 * box.L2 * box.L3,
            2.0 * (box.L1 * box.L2 + box.L2 * box.L3 + box.L1 * box.L3)};
}

GeometryMeasures geometry_measures(const MirrorMicrocavity& cav) {
    validate(cav);
    const double pi = std::numbers::pi;
    return {pi * cav.D0 * cav.D0 * (cav.R_curv - cav.D0 / 3.0),
            2.0 * pi * cav.R_curv * cav.D0};
}

ModeSpectrum enumerate_modes(const BoxCavity& box, double lambda_max, std::size_t max_modes) {
    validate(box);
    if (!(lambda_max >= 0.0))
        throw std::domain_error("enumerate_modes: lambda_max must be >= 0");
    if (max_modes == 0)
        throw std::domain_error("enumerate_modes: max_modes must be > 0");

    const double hcpi = PhysicalConstants::hbar_c * std::numbers::pi;
    const auto eps = [&](double n1, double n2, double n3) {
        const double a = n1 / box.L1;
        const double b = n2 / box.L2;
        const double c = n3 / box.L3;
        return hcpi * std::sqrt(a * a + b * b + c * c);
    };

    const double eps_1 = eps(1, 1, 1);
    const double eps_max = eps_1 + lambda_max;

    std::vector<double> lambdas;
    for (double n1 = 1; eps(n1, 1, 1) <= eps_max; ++n1) {
        for (double n2 = 1; eps(n1, n2, 1) <= eps_max; ++n2) {
            for (double n3 = 1;; ++n3) {
                const double e = eps(n1, n2, n3);
                if (e > eps_max) break;
                lambdas.push_back(e - eps_1);
                if (lambdas.size() > max_modes)
                    throw std::length_error(
                        "enumerate_modes: spectrum below lambda_max exceeds mode cap of " +
                        std::to_string(max_modes) + " modes; lower lambda_max");
            }
        }
    }

    std::sort(lambdas.begin(), lambdas.end());

    ModeSpectrum spectrum;
    spectrum.epsilon_1 = eps_1;
    spectrum.lambdas = std::move(lambdas);
    spectrum.lambda_cutoff = lambda_max;
    return spectrum;
}

double weyl_integrated_density(double lambda, double volume, double area) {
    if (!(lambda >= 0.0))
        throw std::domain_error("weyl_integrated_density: lambda must be >= 0");
    if (!(volume > 0.0) || !(area >= 0.0))
        throw std::domain_error("weyl_integrated_density: need volume > 0 and area >= 0");
    const double pi = std::numbers::pi;
    const double x = lambda / PhysicalConstants::hbar_c;
    return x * x * x / (3.0 * pi * pi) - area / (8.0 * pi * volume) * x * x;
}

WeylCoefficients weyl_density_coefficients(double volume, double area) {
    if (!(volume > 0.0) || !(area >= 0.0))
        throw std::domain_error("weyl_density_coefficients: need volume > 0 and area >= 0");
    const double pi = std::numbers::pi;
    const double hc = PhysicalConstants::hbar_c;
    return {1.0 / (pi * pi * hc * hc * hc), area / (4.0 * pi * volume * hc * hc)};
}

}  // namespace photongas
