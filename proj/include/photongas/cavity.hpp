#pragma once

#include <cstddef>
#include <vector>

namespace photongas {

/// Rectangular box resonator with perfectly reflecting walls; edges in meters.
struct BoxCavity {
    double L1, L2, L3;
};

/// Plano-concave style optical microcavity: spherical mirror of radius
/// R_curv over a flat mirror at central distance D0 (both meters, D0 < R_curv).
struct MirrorMicrocavity {
    double R_curv, D0;
};

struct GeometryMeasures {
    double volume;  // V_R [m^3]
    double area;    // A_R [m^2]
};

/// V_R = L1 L2 L3, A_R = 2(L1 L2 + L2 L3 + L1 L3).
GeometryMeasures geometry_measures(const BoxCavity& box);

/// V_R = pi D0^2 (R_curv - D0/3), A_R = 2 pi R_curv D0.
GeometryMeasures geometry_measures(const MirrorMicrocavity& cavity);

/// Dirichlet eigenvalue spectrum of a box cavity, shifted so the lowest mode
/// sits at zero.  Each entry represents one (n1,n2,n3) mode; the two photon
/// helicities are carried as a degeneracy factor, not duplicated entries.
struct ModeSpectrum {
    double epsilon_1 = 0.0;        // lowest eigenvalue [J]
    std::vector<double> lambdas;   // eps_k - eps_1, ascending; lambdas[0] = 0
    int helicity_degeneracy = 2;
    double lambda_cutoff = 0.0;    // enumeration request [J]; every mode up to
                                   // this value is present (0 = unspecified)

    std::size_t size() const { return lambdas.size(); }
    double lambda_max() const { return lambdas.empty() ? 0.0 : lambdas.back(); }
};

/// Enumerate all box modes eps(n1,n2,n3) = hbar c pi sqrt(sum (n_i/L_i)^2),
/// n_i >= 1, with eps - eps_1 <= lambda_max, sorted ascending.
/// Throws std::length_error if more than max_modes would be produced.
ModeSpectrum enumerate_modes(const BoxCavity& box, double lambda_max,
                             std::size_t max_modes = 10000000);

/// Two-term smoothed mode count per unit volume (both helicities) below an
/// unnormalized eigenvalue lambda:
///   N(lambda)/V = (1/3pi^2) (lambda/hbar c)^3 - (A/8 pi V) (lambda/hbar c)^2.
double weyl_integrated_density(double lambda, double volume, double area);

/// Coefficients of the corresponding smoothed spectral density per unit
/// volume, rho(eps) = bulk * eps^2 - surface * eps (both helicities):
///   bulk = 1/(pi^2 (hbar c)^3),  surface = A/(4 pi V (hbar c)^2).
struct WeylCoefficients {
    double bulk;     // [1/(J^3 m^3)]
    double surface;  // [1/(J^2 m^3)]
};
WeylCoefficients weyl_density_coefficients(double volume, double area);

}  // namespace photongas
