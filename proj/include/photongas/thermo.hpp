#pragma once

namespace photongas {

enum class Dimensionality { bulk3D, surface2D };
enum class Regime { normal, condensed };

/// Independent variables of a thermodynamic-limit query: inverse temperature
/// and the prescribed mean energy density (volumetric for bulk3D [J/m^3],
/// areal for surface2D [J/m^2]).
struct ThermoState {
    double beta;      // 1/(k_B T) [1/J]
    double target_u;  // mean energy density, >= 0
    Dimensionality dimensionality = Dimensionality::bulk3D;
};

/// Result of inverting u(beta, mu) = target_u for the chemical potential.
struct MuSolution {
    double mu;                  // normalized chemical potential, <= 0 [J]
    double condensate_density;  // ground-state energy density, units of target_u
    Regime regime;
};

struct CriticalDensities {
    double bulk;     // [J/m^3]
    double surface;  // [J/m^2]
};

/// Mean energy density of the unbounded 3D photon gas:
///   u = 6 g_4(e^{beta mu}) / (pi^2 (hbar c)^3 beta^4).
double u_bulk(double beta, double mu);

/// Areal energy density of the 2D photon gas:
///   u^s = 2 g_3(e^{beta mu}) / (4 pi (hbar c)^2 beta^3).
double u_surface(double beta, double mu);

/// Critical densities (mu = 0) in 3D and 2D.
CriticalDensities critical_densities(double beta);

/// Invert the density formula for mu at fixed beta.  Below the critical
/// density: bisection for the unique root, residual <= 1e-10 relative.
/// At or above it: mu = 0 and the excess goes into the condensate term.
MuSolution solve_mu(const ThermoState& state);

/// Two-term finite-cavity critical density
///   u_crit = u_crit_bulk - (A_R/V_R) u_crit_surface
/// (signed; negative for surface-dominated cavities).
double u_crit_finite(double beta, double volume, double area);

struct CriticalEnergy {
    double bulk_term;     // V_R * u_crit_bulk [J]
    double surface_term;  // A_R * u_crit_surface [J]
    double total;         // bulk_term - surface_term [J]
};
CriticalEnergy total_critical_energy(double beta, double volume, double area);

/// Photon number density of the unbounded 3D gas:
///   rho = 2 g_3(e^{beta mu}) / (pi^2 (hbar c)^3 beta^3).
double bulk_number_density(double beta, double mu);

/// Pressure of the unbounded 3D gas (equals u_bulk/3):
///   p = 2 g_4(e^{beta mu}) / (pi^2 (hbar c)^3 beta^4).
double bulk_pressure(double beta, double mu);

/// Entropy density of the unbounded 3D gas at prescribed mean energy density.
/// Subcritical: k_B beta (u - mu rho + p) at the solved mu.  At and above the
/// critical density the value saturates at (4/3) k_B beta u_crit_bulk —
/// the condensate itself carries no entropy.
double entropy_limit(double beta, double target_u);

}  // namespace photongas
