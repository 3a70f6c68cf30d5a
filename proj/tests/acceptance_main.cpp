// Acceptance harness: runs the twelve release checks and prints one
// PASS/FAIL line per check.  Exits nonzero if any check fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "photongas/cavity.hpp"
#include "photongas/condensate.hpp"
#include "photongas/constants.hpp"
#include "photongas/finite_gas.hpp"
#include "photongas/microcavity.hpp"
#include "photongas/polylog.hpp"
#include "photongas/thermo.hpp"

using namespace photongas;

namespace {

int failures = 0;

void report(int index, bool ok, const char* label, const std::string& detail) {
    std::printf("[%2d] %s  %-38s %s\n", index, ok ? "PASS" : "FAIL", label, detail.c_str());
    if (!ok) ++failures;
}

std::string fmt(const char* format, ...) {
    char buffer[256];
    va_list args;
    va_start(args, format);
    std::vsnprintf(buffer, sizeof(buffer), format, args);
    va_end(args);
    return buffer;
}

double rel(double value, double reference) {
    return std::abs(value - reference) / std::abs(reference);
}

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// ---- 1. critical densities ------------------------------------------------
void criterion_1() {
    const auto t0 = Clock::now();
    const double beta = beta_from_temperature(300.0);
    const CriticalDensities crit = critical_densities(beta);
    const double ms = elapsed_ms(t0);

    const double rb = rel(crit.bulk, 6.1282e-6);
    const double rs = rel(crit.surface, 1.3601e-11);
    const bool ok = rb < 5e-4 && rs < 5e-4 && ms < 1000.0;
    report(1, ok, "critical densities at 300 K",
           fmt("u_cb=%.6e (rel %.1e), u_cs=%.6e (rel %.1e), %.0f ms",
               crit.bulk, rb, crit.surface, rs, ms));
}

// ---- 2. microcavity geometry ----------------------------------------------
void criterion_2() {
    const GeometryMeasures g = geometry_measures(MirrorMicrocavity{1.0, 1.46e-6});
    const double rv = rel(g.volume, 6.70e-12);
    const double ra = rel(g.area, 9.17e-6);
    const bool ok = rv < 5e-3 && ra < 5e-3;
    report(2, ok, "microcavity geometry measures",
           fmt("V_R=%.6e (rel %.1e), A_R=%.6e (rel %.1e)", g.volume, rv, g.area, ra));
}

// ---- 3. total critical energy ---------------------------------------------
void criterion_3() {
    const double beta = beta_from_temperature(300.0);
    const GeometryMeasures g = geometry_measures(MirrorMicrocavity{1.0, 1.46e-6});
    const CriticalEnergy e = total_critical_energy(beta, g.volume, g.area);
    const double rb = rel(e.bulk_term, 4.11e-17);
    const double rs = rel(e.surface_term, 12.47e-17);
    const double rt = rel(e.total, -8.36e-17);
    const bool ok = rb < 5e-3 && rs < 5e-3 && rt < 5e-3 && e.total < 0.0;
    report(3, ok, "microcavity critical energy",
           fmt("bulk rel %.1e, surface rel %.1e, total=%.6e J (rel %.1e)",
               rb, rs, e.total, rt));
}

// ---- 4. critical power ----------------------------------------------------
void criterion_4() {
    const PowerPrediction p =
        critical_power(MirrorMicrocavity{1.0, 1.46e-6}, 300.0, ReservoirModel{50.0, 0.0, 0.0});
    const double rp = rel(p.power, 1.31);
    const bool ok = rp < 1e-2;
    report(4, ok, "critical optical power",
           fmt("P=%.6f W vs 1.31 W (rel %.1e)", p.power, rp));
}

// ---- 5. zeta anchors ------------------------------------------------------
void criterion_5() {
    const double pi = 3.14159265358979323846;
    const double z4 = rel(zeta(4), pi * pi * pi * pi / 90.0);
    const double oracle3 = oracles::zeta_euler_maclaurin(3);
    const double z3 = rel(zeta(3), oracle3);
    const bool ok = z4 < 1e-12 && z3 < 1e-12;
    report(5, ok, "zeta anchors",
           fmt("zeta(4) vs pi^4/90 rel %.1e; zeta(3)=%.15f vs oracle rel %.1e",
               z4, zeta(3), z3));
}

// ---- 6. solver round trip -------------------------------------------------
void criterion_6() {
    const auto t0 = Clock::now();
    double worst = 0.0;
    bool ok = true;
    for (int i = 0; i < 20; ++i) {
        const double beta = beta_from_temperature(200.0 + 10.0 * i);
        const double f = std::pow(10.0, -4.0 + 4.0 * i / 19.0);
        const CriticalDensities crit = critical_densities(beta);
        {
            const double target = f * crit.bulk;
            const MuSolution s = solve_mu({beta, target, Dimensionality::bulk3D});
            const double r = rel(u_bulk(beta, s.mu), target);
            worst = std::max(worst, r);
            ok = ok && s.regime == Regime::normal;
        }
        {
            const double target = f * crit.surface;
            const MuSolution s = solve_mu({beta, target, Dimensionality::surface2D});
            const double r = rel(u_surface(beta, s.mu), target);
            worst = std::max(worst, r);
            ok = ok && s.regime == Regime::normal;
        }
    }
    const double ms = elapsed_ms(t0);
    ok = ok && worst <= 1e-10 && ms < 1000.0;
    report(6, ok, "solve_mu round trip, 3D and 2D",
           fmt("20 pairs per dimensionality, worst residual %.1e, %.0f ms", worst, ms));
}

// ---- 7. condensed-branch bookkeeping --------------------------------------
void criterion_7() {
    const double beta = beta_from_temperature(300.0);
    const double crit = critical_densities(beta).bulk;
    bool ok = true;
    double worst = 0.0;
    for (const double k : {1.01, 2.0, 10.0}) {
        const MuSolution s = solve_mu({beta, k * crit, Dimensionality::bulk3D});
        ok = ok && s.regime == Regime::condensed && s.mu == 0.0;
        const double r = rel(s.condensate_density, (k - 1.0) * crit);
        worst = std::max(worst, r);
    }
    ok = ok && worst <= 1e-14;
    report(7, ok, "condensed branch: mu=0, u1=(k-1)u_crit",
           fmt("k in {1.01, 2, 10}, worst u1 rel err %.1e", worst));
}

// ---- 8. mu_R scaling (the study also feeds criterion 10) -------------------
struct StudyOutcome {
    bool solved = false;
    ScalingStudy study;
    std::string error;
};

StudyOutcome criterion_8() {
    const double beta = beta_from_temperature(300.0);
    const double target = 2.0 * critical_densities(beta).bulk;

    const auto t0 = Clock::now();
    StudyOutcome outcome;
    try {
        outcome.study = mu_scaling_study(BoxCavity{0.02, 0.02, 0.02}, {1.0, 2.0, 4.0, 8.0},
                                         beta, target, ScalingOptions{});
        outcome.solved = true;
    } catch (const std::exception& e) {
        outcome.error = e.what();
    }
    const double ms = elapsed_ms(t0);

    if (!outcome.solved) {
        report(8, false, "mu_R finite-size scaling", "study failed: " + outcome.error);
        return outcome;
    }

    const ScalingStudy& study = outcome.study;
    bool ok = study.slope >= -4.5 && study.slope <= -3.5;
    std::size_t max_modes = 0;
    double prev_abs_mu = -1.0;
    bool mu_shrinks = true;
    for (const ScalingPoint& p : study.points) {
        max_modes = std::max(max_modes, p.modes_used);
        ok = ok && p.mu_R < 0.0;
        if (prev_abs_mu > 0.0 && std::abs(p.mu_R) >= prev_abs_mu) mu_shrinks = false;
        prev_abs_mu = std::abs(p.mu_R);
    }
    const ScalingPoint& big = study.points.back();
    const double ground_rel = rel(big.ground_term, big.u1);
    ok = ok && mu_shrinks && ground_rel < 0.05 && max_modes <= 10000000 && ms < 120000.0;
    report(8, ok, "mu_R finite-size scaling",
           fmt("slope %.5f, ground vs u1 rel %.1e at R=%.2f m, <=%zu modes, %.0f ms",
               study.slope, ground_rel, big.R, max_modes, ms));
    return outcome;
}

// ---- 10. entropy plateau ---------------------------------------------------
void criterion_10(const StudyOutcome& outcome) {
    if (!outcome.solved) {
        report(10, false, "entropy plateau, limit and finite gas", "scaling study unavailable");
        return;
    }
    const double beta = beta_from_temperature(300.0);
    const double crit = critical_densities(beta).bulk;
    const double plateau = 4.0 / 3.0 * PhysicalConstants::k_B * beta * crit;
    const double s15 = entropy_limit(beta, 1.5 * crit);
    const double s3 = entropy_limit(beta, 3.0 * crit);
    const double s6 = entropy_limit(beta, 6.0 * crit);
    const double spread =
        std::max({rel(s15, plateau), rel(s3, plateau), rel(s6, plateau), rel(s15, s6)});
    const double finite_rel = rel(outcome.study.points.back().entropy, plateau);
    const bool ok = spread < 1e-12 && finite_rel < 0.05;
    report(10, ok, "entropy plateau, limit and finite gas",
           fmt("s=%.6e J/(K m^3), supercritical spread %.1e, finite-box rel %.1e",
               plateau, spread, finite_rel));
}

// ---- 9. two-term mode counting --------------------------------------------
void criterion_9() {
    // Relative error of the smoothed two-term count against the exact
    // lattice count on the unit cube, sampled at lambda/(hbar c) = m pi.
    // The error oscillates as shells cross the threshold, so the decrease
    // is measured on window maxima and on a fitted trend.
    std::vector<double> log_m, log_err;
    double err_last = 0.0;
    double window_max[3] = {0.0, 0.0, 0.0};
    for (int m = 5; m <= 25; ++m) {
        const double exact = 2.0 * static_cast<double>(oracles::unit_cube_mode_count(m));
        const double smooth =
            weyl_integrated_density(PhysicalConstants::hbar_c * 3.14159265358979323846 * m,
                                    1.0, 6.0);
        const double e = std::abs(smooth - exact) / exact;
        log_m.push_back(std::log(static_cast<double>(m)));
        log_err.push_back(std::log(std::max(e, 1e-300)));
        const int w = m <= 11 ? 0 : (m <= 18 ? 1 : 2);
        window_max[w] = std::max(window_max[w], e);
        if (m == 25) err_last = e;
    }

    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < log_m.size(); ++i) {
        mx += log_m[i];
        my += log_err[i];
    }
    mx /= static_cast<double>(log_m.size());
    my /= static_cast<double>(log_m.size());
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < log_m.size(); ++i) {
        sxx += (log_m[i] - mx) * (log_m[i] - mx);
        sxy += (log_m[i] - mx) * (log_err[i] - my);
    }
    const double slope = sxy / sxx;

    const bool ok = window_max[0] > window_max[1] && window_max[1] > window_max[2]
                    && slope < 0.0 && err_last < 0.03;
    report(9, ok, "two-term count convergence",
           fmt("window maxima %.4f > %.4f > %.4f, trend slope %.2f, err(25)=%.4f",
               window_max[0], window_max[1], window_max[2], slope, err_last));
}

// ---- 11. condensate profile -----------------------------------------------
void criterion_11() {
    const BoxCavity cube{1.0, 1.0, 1.0};
    bool ok = true;

    for (const int n1 : {5, 100, 5000})
        ok = ok && profile_value(cube, n1, 0.0, 0.0, 0.0) == 1.0;

    // Strict pointwise sharpening on an interior grid (walls excluded: the
    // profile vanishes there for every occupation).
    for (int j = -49; j <= 49; ++j) {
        if (j == 0) continue;
        const double x = 0.01 * j;
        const double f5 = profile_value(cube, 5, x, 0.0, 0.0);
        const double f100 = profile_value(cube, 100, x, 0.0, 0.0);
        const double f5000 = profile_value(cube, 5000, x, 0.0, 0.0);
        ok = ok && f100 < f5 && f5000 < f100;
    }

    const double hw100 = half_width(cube, 100, 1);
    const double hw_err = std::abs(hw100 - 0.03748);
    const double ratio = half_width(cube, 4000, 1) / half_width(cube, 1000, 1);
    ok = ok && hw_err < 1e-4 && ratio > 0.49 && ratio < 0.51;
    report(11, ok, "condensate profile sharpening",
           fmt("f(0)=1, 98 interior points ordered, hw(100)=%.6f (|d|=%.1e), ratio=%.5f",
               hw100, hw_err, ratio));
}

// ---- 12. prediction inside the measured interval --------------------------
void criterion_12() {
    const PowerPrediction p =
        critical_power(MirrorMicrocavity{1.0, 1.46e-6}, 300.0, ReservoirModel{50.0, 0.0, 0.0});
    const bool ok = p.power >= 1.55 - 0.60 && p.power <= 1.55 + 0.60;
    report(12, ok, "prediction within measured band",
           fmt("P=%.4f W in [0.95, 2.15] W", p.power));
}

}  // namespace

int main() {
    std::printf("photon gas acceptance checks\n");
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    const StudyOutcome scaling = criterion_8();
    criterion_9();
    criterion_10(scaling);
    criterion_11();
    criterion_12();
    std::printf("%s (%d failed)\n", failures == 0 ? "ALL CHECKS PASSED" : "CHECKS FAILED",
                failures);
    return failures == 0 ? 0 : 1;
}
