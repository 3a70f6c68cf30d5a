#pragma once

namespace photongas {

/// CODATA-2018 values in SI units.
struct PhysicalConstants {
    static constexpr double hbar = 1.054571817e-34;  // reduced Planck constant [J s]
    static constexpr double c    = 2.99792458e8;     // speed of light in vacuum [m/s]
    static constexpr double k_B  = 1.380649e-23;     // Boltzmann constant [J/K]

    static constexpr double hbar_c = hbar * c;       // [J m]
};

/// Inverse temperature beta = 1/(k_B T) [1/J]. Requires T > 0.
double beta_from_temperature(double temperature_K);

}  // namespace photongas
