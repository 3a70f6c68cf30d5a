#pragma once

#include <cstddef>
#include <vector>

#include "photongas/cavity.hpp"

namespace photongas {

/// Numerical controls for the finite-cavity mode sums.
struct FiniteGasOptions {
    /// Minimum required spectral coverage beta*lambda_max.  The default makes
    /// the truncated discrete remainder ~e^-60 and thus negligible; studies
    /// that rely on the smoothed tail instead (large boxes) set this to 0.
    double required_beta_lambda = 60.0;
    /// Add the smoothed-spectrum (two-term Weyl) integral over the modes
    /// above lambda_max.  Disable only for analytic toy spectra.
    bool include_weyl_tail = true;
    int max_bisection_steps = 200;
    double solver_rel_tol = 1e-10;    // residual target during bisection
    double solver_rel_limit = 1e-9;   // acceptance bound after bisection
    std::size_t max_tail_terms = 2000000;
};

/// Grand-canonical state of the finite gas at the solved chemical potential.
struct FiniteGasResult {
    double mu_R;            // normalized chemical potential [J], < 0
    double u_R;             // mean energy density [J/m^3]
    double ground_term;     // lowest-mode share of u_R [J/m^3]
    double entropy;         // [J/(K m^3)]
    std::size_t modes_used;
    double tail_estimate;   // smoothed remainder included in u_R [J/m^3]
};

struct FiniteEnergyDensity {
    double u_R;
    double ground_term;
    double tail_estimate;
};

/// Densities of the finite gas at fixed mu_R (all per unit volume).
struct FiniteGasThermo {
    double u;            // energy density [J/m^3]
    double rho;          // photon number density [1/m^3]
    double pressure;     // [J/m^3]
    double ground_term;  // [J/m^3]
    double tail_u;       // smoothed remainder in u [J/m^3]
    std::size_t modes_used;
};

/// Mean energy density u_R = (2/V) sum_k (lambda_k + eps_1) / (e^{beta(lambda_k - mu_R)} - 1)
/// over the enumerated modes, plus the smoothed remainder above lambda_max.
/// Requires mu_R < 0 strictly.
FiniteEnergyDensity u_finite(const ModeSpectrum& spectrum, double volume, double area,
                             double beta, double mu_R, const FiniteGasOptions& opts = {});

/// Energy, number and pressure densities in one pass (same conventions).
FiniteGasThermo finite_gas_thermo(const ModeSpectrum& spectrum, double volume, double area,
                                  double beta, double mu_R, const FiniteGasOptions& opts = {});

/// Entropy density by direct summation of
///   k_B (2/V) sum_k [ x_k n_k - ln(1 - e^{-x_k}) ],  x_k = beta (lambda_k - mu_R),
/// plus the smoothed remainder; agrees with k_B beta (u - mu* rho + p).
double entropy_finite(const ModeSpectrum& spectrum, double volume, double area,
                      double beta, double mu_R, const FiniteGasOptions& opts = {});

/// Invert u_finite for mu_R at fixed spectrum.  Bisection on
/// [-700 k_B T, -eps_1 * 1e-12], extending the upper end toward 0 when the
/// root lies closer to zero than the initial bracket (large cavities).
FiniteGasResult solve_mu_finite(const ModeSpectrum& spectrum, double volume, double area,
                                double beta, double target_u,
                                const FiniteGasOptions& opts = {});

struct ScalingPoint {
    double scale;
    double R;               // cube root of the volume [m]
    double epsilon_1;       // [J]
    double mu_R;            // [J]
    double u1;              // excess density target_u - u_crit_finite [J/m^3]
    double ground_term;     // [J/m^3]
    double entropy;         // [J/(K m^3)]
    std::size_t modes_used;
};

struct ScalingStudy {
    std::vector<ScalingPoint> points;
    double slope;  // least-squares slope of ln|mu_R| vs ln R
};

struct ScalingOptions {
    std::size_t mode_budget = 200000;  // approximate enumerated modes per box
    std::size_t max_modes = 10000000;
    FiniteGasOptions gas;  // coverage requirement is overridden internally
};

/// Solve the finite gas on geometrically scaled copies of a base box at a
/// fixed supercritical energy density and fit the decay of |mu_R| with the
/// cavity size R = V^(1/3).  The cutoff per box is chosen from the mode
/// budget; the smoothed tail carries the (dominant) remainder.
ScalingStudy mu_scaling_study(const BoxCavity& base, const std::vector<double>& scales,
                              double beta, double supercritical_u,
                              const ScalingOptions& opts = {});

/// Just the fitted slope of the study above (~ -4).
double mu_scaling_exponent(const BoxCavity& base, const std::vector<double>& scales,
                           double beta, double supercritical_u,
                           const ScalingOptions& opts = {});

}  // namespace photongas
