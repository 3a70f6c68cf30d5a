#include "photongas/microcavity.hpp"

#include <stdexcept>
#include <string>

#include "photongas/constants.hpp"
#include "photongas/thermo.hpp"

namespace photongas {

ReservoirModel ReservoirModel::from_lifetimes(double tau_exc, double tau_ph) {
    if (!(tau_exc > 0.0) || !(tau_ph > 0.0))
        throw std::domain_error("ReservoirModel: lifetimes must be > 0");
    return {tau_exc / tau_ph, tau_exc, tau_ph};
}

PowerPrediction critical_power(const MirrorMicrocavity& geometry, double temperature_K,
                               const ReservoirModel& reservoir, L0Convention convention) {
    if (!(reservoir.ratio >= 0.0))
        throw std::domain_error("critical_power: reservoir ratio must be >= 0");
    const double beta = beta_from_temperature(temperature_K);
    const GeometryMeasures g = geometry_measures(geometry);

    const double surf_total = g.area * u_surface(beta, 0.0);
    const double l0 =
        convention == L0Convention::mirror_spacing ? geometry.D0 : g.volume / g.area;
    const double power =
        (1.0 + reservoir.ratio) * surf_total * PhysicalConstants::c / l0;
    return {surf_total, l0, convention, power};
}

MicrocavityReport microcavity_report(const MirrorMicrocavity& geometry, double temperature_K,
                                     const ReservoirModel& reservoir) {
    const double beta = beta_from_temperature(temperature_K);
    const GeometryMeasures g = geometry_measures(geometry);
    const CriticalDensities crit = critical_densities(beta);
    const CriticalEnergy energy = total_critical_energy(beta, g.volume, g.area);

    MicrocavityReport report;
    report.temperature_K = temperature_K;
    report.beta = beta;
    report.volume = g.volume;
    report.area = g.area;
    report.u_crit_bulk = crit.bulk;
    report.u_crit_surface = crit.surface;
    report.bulk_energy = energy.bulk_term;
    report.surface_energy = energy.surface_term;
    report.total_energy = energy.total;
    report.surface_to_bulk_ratio = energy.surface_term / energy.bulk_term;
    report.reservoir_ratio = reservoir.ratio;
    report.power_mirror_spacing =
        critical_power(geometry, temperature_K, reservoir, L0Convention::mirror_spacing);
    report.power_volume_over_area =
        critical_power(geometry, temperature_K, reservoir, L0Convention::volume_over_area);
    return report;
}

}  // namespace photongas
