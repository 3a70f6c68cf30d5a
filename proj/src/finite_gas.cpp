#include "photongas/finite_gas.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "photongas/constants.hpp"
#include "photongas/errors.hpp"
#include "photongas/kahan.hpp"
#include "photongas/thermo.hpp"

namespace photongas {

namespace {

void validate_inputs(const ModeSpectrum& spectrum, double volume, double area, double beta,
                     double mu_R, const FiniteGasOptions& opts) {
    if (spectrum.lambdas.empty())
        throw std::domain_error("finite gas: spectrum is empty");
    if (!(spectrum.epsilon_1 > 0.0) || spectrum.lambdas.front() != 0.0)
        throw std::domain_error("finite gas: spectrum must have eps_1 > 0 and lambdas[0] = 0");
    if (!(volume > 0.0) || !(area >= 0.0))
        throw std::domain_error("finite gas: need volume > 0 and area >= 0");
    if (!(beta > 0.0))
        throw std::domain_error("finite gas: beta must be > 0");
    if (!(mu_R < 0.0))
        throw std::domain_error(
            "finite gas: mu_R must be strictly negative (got " + std::to_string(mu_R) +
            " J); the lowest mode diverges at mu_R = 0");
    // Coverage counts the enumeration cutoff when known: no eigenvalue sits
    // exactly on the cutoff, so the achieved lambda_max alone would fall one
    // mode spacing short of the requested range.
    const double coverage =
        beta * std::max(spectrum.lambda_max(), spectrum.lambda_cutoff);
    if (coverage < opts.required_beta_lambda)
        throw std::invalid_argument(
            "finite gas: spectrum covers beta*lambda only up to " + std::to_string(coverage) +
            "; need >= " + std::to_string(opts.required_beta_lambda) +
            " (enumerate modes up to lambda >= " +
            std::to_string(opts.required_beta_lambda / beta) + " J or relax the option)");
}

struct TailMoments {
    double u = 0.0;        // [J/m^3]
    double rho = 0.0;      // [1/m^3]
    double pressure = 0.0; // [J/m^3]
};

// Smoothed-spectrum remainder above lambda_max: the Bose occupancy expanded
// in powers of the fugacity, each power integrated against the two-term Weyl
// density rho(eps) = c_b eps^2 - c_s eps from eps_c = eps_1 + lambda_max up.
// The incomplete-gamma moments int_x0^inf eps^k e^{-a eps} d eps =
// (k!/a^{k+1}) e^{-a x0} sum_{j<=k} (a x0)^j / j! are used with the
// exponential e^{-n beta (lambda_max - mu_R)} factored out so nothing
// overflows even when mu_R + eps_1 > 0.
TailMoments weyl_tail(const ModeSpectrum& spectrum, double volume, double area, double beta,
                      double mu_R, const FiniteGasOptions& opts) {
    const WeylCoefficients coeff = weyl_density_coefficients(volume, area);
    const double eps_c = spectrum.epsilon_1 + spectrum.lambda_max();
    const double gap = spectrum.lambda_max() - mu_R;  // > 0

    KahanSum su, srho, sp;
    double last_rel = 0.0;
    std::size_t n = 0;
    while (n < opts.max_tail_terms) {
        ++n;
        const double exponent = -static_cast<double>(n) * beta * gap;
        if (exponent < -745.0) { last_rel = 0.0; break; }
        const double w = std::exp(exponent);
        const double a = static_cast<double>(n) * beta;
        const double y = a * eps_c;
        const double s1 = 1.0 + y;
        const double s2 = s1 + 0.5 * y * y;
        const double s3 = s2 + y * y * y / 6.0;
        const double inv_a = 1.0 / a;
        const double g1 = inv_a * inv_a * s1;
        const double g2 = 2.0 * inv_a * inv_a * inv_a * s2;
        const double g3 = 6.0 * inv_a * inv_a * inv_a * inv_a * s3;

        const double u_term = w * (coeff.bulk * g3 - coeff.surface * g2);
        const double rho_term = w * (coeff.bulk * g2 - coeff.surface * g1);
        su.add(u_term);
        srho.add(rho_term);
        sp.add(w * inv_a * (coeff.bulk * g2 - coeff.surface * g1));

        last_rel = std::abs(u_term) / std::max(std::abs(su.value()), 1e-300);
        if (last_rel <= 1e-16) break;
    }
    if (last_rel > 1e-12)
        throw ConvergenceError("finite gas: smoothed-tail fugacity series did not converge "
                               "within " + std::to_string(opts.max_tail_terms) + " terms");
    return {su.value(), srho.value(), sp.value()};
}

// Energy-density-only pass, the solver's inner loop.
FiniteEnergyDensity energy_density(const ModeSpectrum& spectrum, double volume, double area,
                                   double beta, double mu_R, const FiniteGasOptions& opts) {
    const double weight = static_cast<double>(spectrum.helicity_degeneracy) / volume;
    const double eps_1 = spectrum.epsilon_1;

    KahanSum sum;
    for (const double lambda : spectrum.lambdas)
        sum.add((lambda + eps_1) / std::expm1(beta * (lambda - mu_R)));

    const double ground = weight * eps_1 / std::expm1(-beta * mu_R);
    double tail = 0.0;
    if (opts.include_weyl_tail)
        tail = weyl_tail(spectrum, volume, area, beta, mu_R, opts).u;
    return {weight * sum.value() + tail, ground, tail};
}

}  // namespace

FiniteEnergyDensity u_finite(const ModeSpectrum& spectrum, double volume, double area,
                             double beta, double mu_R, const FiniteGasOptions& opts) {
    validate_inputs(spectrum, volume, area, beta, mu_R, opts);
    return energy_density(spectrum, volume, area, beta, mu_R, opts);
}

FiniteGasThermo finite_gas_thermo(const ModeSpectrum& spectrum, double volume, double area,
                                  double beta, double mu_R, const FiniteGasOptions& opts) {
    validate_inputs(spectrum, volume, area, beta, mu_R, opts);
    const double weight = static_cast<double>(spectrum.helicity_degeneracy) / volume;
    const double eps_1 = spectrum.epsilon_1;

    KahanSum su, srho, sp;
    for (const double lambda : spectrum.lambdas) {
        const double x = beta * (lambda - mu_R);
        const double occ = 1.0 / std::expm1(x);
        su.add((lambda + eps_1) * occ);
        srho.add(occ);
        sp.add(-std::log1p(-std::exp(-x)));
    }

    TailMoments tail;
    if (opts.include_weyl_tail) tail = weyl_tail(spectrum, volume, area, beta, mu_R, opts);

    FiniteGasThermo result;
    result.u = weight * su.value() + tail.u;
    result.rho = weight * srho.value() + tail.rho;
    result.pressure = weight / beta * sp.value() + tail.pressure;
    result.ground_term = weight * eps_1 / std::expm1(-beta * mu_R);
    result.tail_u = tail.u;
    result.modes_used = spectrum.size();
    return result;
}

double entropy_finite(const ModeSpectrum& spectrum, double volume, double area, double beta,
                      double mu_R, const FiniteGasOptions& opts) {
    validate_inputs(spectrum, volume, area, beta, mu_R, opts);
    const double weight = static_cast<double>(spectrum.helicity_degeneracy) / volume;

    // Per-mode entropy x n - ln(1 - e^-x); both pieces vanish cleanly for
    // deeply unoccupied modes (x large).
    KahanSum sum;
    for (const double lambda : spectrum.lambdas) {
        const double x = beta * (lambda - mu_R);
        sum.add(x / std::expm1(x) - std::log1p(-std::exp(-x)));
    }

    double tail = 0.0;
    if (opts.include_weyl_tail) {
        const TailMoments t = weyl_tail(spectrum, volume, area, beta, mu_R, opts);
        const double mu_star = mu_R + spectrum.epsilon_1;
        tail = beta * (t.u - mu_star * t.rho + t.pressure);
    }
    return PhysicalConstants::k_B * (weight * sum.value() + tail);
}

FiniteGasResult solve_mu_finite(const ModeSpectrum& spectrum, double volume, double area,
                                double beta, double target_u, const FiniteGasOptions& opts) {
    if (!(target_u > 0.0))
        throw std::domain_error("solve_mu_finite: target_u must be > 0");
    // Validate the rest of the inputs through a probe evaluation at the
    // bracket's lower end (also the u(lo) < target side of the bracket).
    double lo = -700.0 / beta;
    FiniteEnergyDensity at_lo = u_finite(spectrum, volume, area, beta, lo, opts);
    if (!(at_lo.u_R < target_u))
        throw ConvergenceError("solve_mu_finite: target_u below the density at mu_R = -700 k_B T");

    // Upper end: nominally -eps_1 * 1e-12, pushed toward 0 while the density
    // there still falls short (the root approaches 0 ~ R^-4 with cavity size,
    // so a fixed offset cannot bracket every box).
    double hi = -spectrum.epsilon_1 * 1e-12;
    FiniteEnergyDensity at_hi = energy_density(spectrum, volume, area, beta, hi, opts);
    while (at_hi.u_R < target_u) {
        hi *= 1e-3;
        if (std::abs(hi) < 1e-300)
            throw ConvergenceError("solve_mu_finite: could not bracket mu_R below 0");
        at_hi = energy_density(spectrum, volume, area, beta, hi, opts);
    }

    double mu = hi;
    FiniteEnergyDensity cur = at_hi;
    for (int step = 0; step < opts.max_bisection_steps; ++step) {
        mu = 0.5 * (lo + hi);
        cur = energy_density(spectrum, volume, area, beta, mu, opts);
        if (std::abs(cur.u_R - target_u) <= opts.solver_rel_tol * target_u) break;
        (cur.u_R < target_u ? lo : hi) = mu;
    }
    if (std::abs(cur.u_R - target_u) > opts.solver_rel_limit * target_u)
        throw ConvergenceError(
            "solve_mu_finite: residual " + std::to_string((cur.u_R - target_u) / target_u) +
            " (relative) after " + std::to_string(opts.max_bisection_steps) + " bisection steps");

    FiniteGasResult result;
    result.mu_R = mu;
    result.u_R = cur.u_R;
    result.ground_term = cur.ground_term;
    result.entropy = entropy_finite(spectrum, volume, area, beta, mu, opts);
    result.modes_used = spectrum.size();
    result.tail_estimate = cur.tail_estimate;
    return result;
}

ScalingStudy mu_scaling_study(const BoxCavity& base, const std::vector<double>& scales,
                              double beta, double supercritical_u, const ScalingOptions& opts) {
    if (scales.size() < 3)
        throw std::domain_error("mu_scaling_study: need at least 3 scales");
    for (const double s : scales)
        if (!(s > 0.0)) throw std::domain_error("mu_scaling_study: scales must be > 0");
    if (!(beta > 0.0)) throw std::domain_error("mu_scaling_study: beta must be > 0");

    FiniteGasOptions gas = opts.gas;
    gas.required_beta_lambda = 0.0;  // coverage comes from the budgeted cutoff + tail

    ScalingStudy study;
    study.points.reserve(scales.size());
    for (const double s : scales) {
        const BoxCavity box{base.L1 * s, base.L2 * s, base.L3 * s};
        const GeometryMeasures g = geometry_measures(box);
        const double crit = u_crit_finite(beta, g.volume, g.area);
        if (!(supercritical_u > crit))
            throw std::domain_error(
                "mu_scaling_study: target density is not supercritical at scale " +
                std::to_string(s) + " (u_crit_finite = " + std::to_string(crit) + " J/m^3)");

        // Cutoff from the mode budget via the leading Weyl count.
        const double pi = std::numbers::pi;
        const double lambda_c =
            PhysicalConstants::hbar_c *
            std::cbrt(3.0 * pi * pi * static_cast<double>(opts.mode_budget) / g.volume);
        const ModeSpectrum spectrum = enumerate_modes(box, lambda_c, opts.max_modes);
        const FiniteGasResult r =
            solve_mu_finite(spectrum, g.volume, g.area, beta, supercritical_u, gas);

        study.points.push_back({s, std::cbrt(g.volume), spectrum.epsilon_1, r.mu_R,
                                supercritical_u - crit, r.ground_term, r.entropy,
                                r.modes_used});
    }

    // Least-squares slope of ln|mu_R| against ln R.
    const std::size_t n = study.points.size();
    double mx = 0.0, my = 0.0;
    for (const ScalingPoint& p : study.points) {
        mx += std::log(p.R);
        my += std::log(std::abs(p.mu_R));
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxx = 0.0, sxy = 0.0;
    for (const ScalingPoint& p : study.points) {
        const double dx = std::log(p.R) - mx;
        sxx += dx * dx;
        sxy += dx * (std::log(std::abs(p.mu_R)) - my);
    }
    if (!(sxx > 0.0))
        throw std::domain_error("mu_scaling_study: scales must not be all equal");
    study.slope = sxy / sxx;
    return study;
}

double mu_scaling_exponent(const BoxCavity& base, const std::vector<double>& scales, double beta,
                           double supercritical_u, const ScalingOptions& opts) {
    return mu_scaling_study(base, scales, beta, supercritical_u, opts).slope;
}

}  // namespace photongas
