#include "photongas/thermo.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "photongas/constants.hpp"
#include "photongas/errors.hpp"
#include "photongas/polylog.hpp"

namespace photongas {

namespace {

// Below this value of beta*mu the fugacity underflows to zero, so it serves
// as the solver's finite stand-in for mu -> -inf.
constexpr double beta_mu_min = -700.0;

void require_beta(double beta) {
    if (!(beta > 0.0))
        throw std::domain_error("thermo: beta must be > 0, got " + std::to_string(beta));
}

void require_mu(double mu) {
    if (!(mu <= 0.0))
        throw std::domain_error("thermo: chemical potential must be <= 0, got " +
                                std::to_string(mu));
}

double bulk_prefactor(double beta) {
    const double pi = std::numbers::pi;
    const double hc = PhysicalConstants::hbar_c;
    const double b2 = beta * beta;
    return 6.0 / (pi * pi * hc * hc * hc * b2 * b2);
}

double surface_prefactor(double beta) {
    const double pi = std::numbers::pi;
    const double hc = PhysicalConstants::hbar_c;
    return 2.0 / (4.0 * pi * hc * hc * beta * beta * beta);
}

}  // namespace

double u_bulk(double beta, double mu) {
    require_beta(beta);
    require_mu(mu);
    return bulk_prefactor(beta) * polylog(4, std::exp(beta * mu));
}

double u_surface(double beta, double mu) {
    require_beta(beta);
    require_mu(mu);
    return surface_prefactor(beta) * polylog(3, std::exp(beta * mu));
}

CriticalDensities critical_densities(double beta) {
    return {u_bulk(beta, 0.0), u_surface(beta, 0.0)};
}

MuSolution solve_mu(const ThermoState& state) {
    require_beta(state.beta);
    if (!(state.target_u >= 0.0))
        throw std::domain_error("solve_mu: target_u must be >= 0, got " +
                                std::to_string(state.target_u));

    const bool bulk = state.dimensionality == Dimensionality::bulk3D;
    const int p = bulk ? 4 : 3;
    const double prefactor = bulk ? bulk_prefactor(state.beta) : surface_prefactor(state.beta);
    const double critical = prefactor * zeta(p);

    if (state.target_u > critical)
        return {0.0, state.target_u - critical, Regime::condensed};
    if (state.target_u == 0.0)
        return {beta_mu_min / state.beta, 0.0, Regime::normal};

    // Bisect g_p(e^x) = target/prefactor for x = beta*mu; the left side is
    // strictly increasing in x, so the bracket [beta_mu_min, 0] always works.
    const double g_target = state.target_u / prefactor;
    double lo = beta_mu_min;
    double hi = 0.0;
    for (int i = 0; i < 200 && (hi - lo) > 1e-13; ++i) {
        const double mid = 0.5 * (lo + hi);
        (polylog(p, std::exp(mid)) < g_target ? lo : hi) = mid;
    }

    const double mu = 0.5 * (lo + hi) / state.beta;
    const double u = bulk ? u_bulk(state.beta, mu) : u_surface(state.beta, mu);
    if (std::abs(u - state.target_u) > 1e-10 * state.target_u)
        throw ConvergenceError("solve_mu: residual " + std::to_string(u - state.target_u) +
                               " exceeds 1e-10 relative at target_u = " +
                               std::to_string(state.target_u));
    return {mu, 0.0, Regime::normal};
}

double u_crit_finite(double beta, double volume, double area) {
    if (!(volume > 0.0) || !(area >= 0.0))
        throw std::domain_error("u_crit_finite: need volume > 0 and area >= 0");
    const CriticalDensities crit = critical_densities(beta);
    return crit.bulk - area / volume * crit.surface;
}

CriticalEnergy total_critical_energy(double beta, double volume, double area) {
    if (!(volume > 0.0) || !(area >= 0.0))
        throw std::domain_error("total_critical_energy: need volume > 0 and area >= 0");
    const CriticalDensities crit = critical_densities(beta);
    const double bulk_term = volume * crit.bulk;
    const double surface_term = area * crit.surface;
    return {bulk_term, surface_term, bulk_term - surface_term};
}

double bulk_number_density(double beta, double mu) {
    require_beta(beta);
    require_mu(mu);
    const double pi = std::numbers::pi;
    const double hc = PhysicalConstants::hbar_c;
    const double b3 = beta * beta * beta;
    return 2.0 * polylog(3, std::exp(beta * mu)) / (pi * pi * hc * hc * hc * b3);
}

double bulk_pressure(double beta, double mu) {
    require_beta(beta);
    require_mu(mu);
    const double pi = std::numbers::pi;
    const double hc = PhysicalConstants::hbar_c;
    const double b2 = beta * beta;
    return 2.0 * polylog(4, std::exp(beta * mu)) / (pi * pi * hc * hc * hc * b2 * b2);
}

double entropy_limit(double beta, double target_u) {
    require_beta(beta);
    if (!(target_u >= 0.0))
        throw std::domain_error("entropy_limit: target_u must be >= 0");

    const double critical = u_bulk(beta, 0.0);
    // The condensate carries no entropy, so the density saturates once the
    // prescribed energy density crosses the critical value.
    if (target_u >= critical)
        return (4.0 / 3.0) * PhysicalConstants::k_B * beta * critical;
    if (target_u == 0.0) return 0.0;

    const MuSolution sol = solve_mu({beta, target_u, Dimensionality::bulk3D});
    const double rho = bulk_number_density(beta, sol.mu);
    const double p = bulk_pressure(beta, sol.mu);
    return PhysicalConstants::k_B * beta * (target_u - sol.mu * rho + p);
}

}  // namespace photongas
