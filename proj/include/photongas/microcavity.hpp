#pragma once

#include "photongas/cavity.hpp"

namespace photongas {

/// Pump reservoir (dye excitations) feeding the photon gas.  The reservoir
/// holds `ratio` times as many excitations as there are photons; when both
/// lifetimes are known the ratio is their quotient.
struct ReservoirModel {
    double ratio = 50.0;   // N_exc / N_ph, >= 0
    double tau_exc = 0.0;  // excitation lifetime [s] (0 = not specified)
    double tau_ph = 0.0;   // photon residence time [s] (0 = not specified)

    static ReservoirModel from_lifetimes(double tau_exc, double tau_ph);
};

/// Which length converts stored energy into circulating power via P = E c/l0.
enum class L0Convention { mirror_spacing, volume_over_area };

struct PowerPrediction {
    double u_crit_surf_total;  // A_R * u_crit_surface [J]
    double l0;                 // [m]
    L0Convention l0_convention;
    double power;              // (1 + ratio) * u_crit_surf_total * c / l0 [W]
};

/// Critical optical power to reach condensation in the microcavity,
/// including the reservoir's share.
PowerPrediction critical_power(const MirrorMicrocavity& geometry, double temperature_K,
                               const ReservoirModel& reservoir,
                               L0Convention convention = L0Convention::mirror_spacing);

/// Everything the application cares about in one pass: geometry measures,
/// critical densities, the three critical-energy terms, the surface/bulk
/// dominance ratio and the power prediction under both l0 conventions.
struct MicrocavityReport {
    double temperature_K;
    double beta;                  // [1/J]
    double volume;                // V_R [m^3]
    double area;                  // A_R [m^2]
    double u_crit_bulk;           // [J/m^3]
    double u_crit_surface;        // [J/m^2]
    double bulk_energy;           // V_R * u_crit_bulk [J]
    double surface_energy;        // A_R * u_crit_surface [J]
    double total_energy;          // bulk - surface [J]
    double surface_to_bulk_ratio;
    double reservoir_ratio;
    PowerPrediction power_mirror_spacing;
    PowerPrediction power_volume_over_area;
};

MicrocavityReport microcavity_report(const MirrorMicrocavity& geometry, double temperature_K,
                                     const ReservoirModel& reservoir);

}  // namespace photongas
