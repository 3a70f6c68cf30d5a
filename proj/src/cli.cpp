#include "photongas/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "photongas/cavity.hpp"
#include "photongas/condensate.hpp"
#include "photongas/constants.hpp"
#include "photongas/errors.hpp"
#include "photongas/finite_gas.hpp"
#include "photongas/microcavity.hpp"
#include "photongas/thermo.hpp"

namespace photongas {

namespace {

// Scientific notation with 9 significant digits, the CSV number format.
std::string sci(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.8e", v);
    return buf;
}

void deliver(const std::string& out_path, std::ostream& out, const std::string& text) {
    if (out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file)
        throw std::invalid_argument("cannot open output file: " + out_path);
    file << text;
}

BoxCavity to_box(const std::vector<double>& edges) {
    return {edges.at(0), edges.at(1), edges.at(2)};
}

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return {};
    return s.substr(begin, s.find_last_not_of(" \t\r") - begin + 1);
}

// Expand `--config FILE` into ordinary flags.  The file holds plain
// `key=value` lines (blank lines and #/; comments allowed); each key becomes
// `--key value` inserted right after the subcommand token, but only when the
// command line does not set that flag itself — flags win on conflict.
std::vector<std::string> apply_config(const std::vector<std::string>& args) {
    std::vector<std::string> cleaned;
    std::vector<std::pair<std::string, std::string>> entries;  // file order
    for (std::size_t i = 0; i < args.size(); ++i) {
        std::string path;
        if (args[i] == "--config") {
            if (i + 1 >= args.size())
                throw std::invalid_argument("--config requires a file path");
            path = args[++i];
        } else if (args[i].rfind("--config=", 0) == 0) {
            path = args[i].substr(9);
        } else {
            cleaned.push_back(args[i]);
            continue;
        }

        std::ifstream file(path);
        if (!file)
            throw std::invalid_argument("cannot read config file: " + path);
        std::string line;
        std::size_t line_no = 0;
        while (std::getline(file, line)) {
            ++line_no;
            const std::string text = trim(line);
            if (text.empty() || text[0] == '#' || text[0] == ';') continue;
            const auto eq = text.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument(path + ":" + std::to_string(line_no) +
                                            ": expected key=value");
            const std::string key = trim(text.substr(0, eq));
            const std::string value = trim(text.substr(eq + 1));
            if (key.empty())
                throw std::invalid_argument(path + ":" + std::to_string(line_no) +
                                            ": empty key");
            // Later files / lines override earlier ones per key.
            bool replaced = false;
            for (auto& entry : entries)
                if (entry.first == key) {
                    entry.second = value;
                    replaced = true;
                }
            if (!replaced) entries.emplace_back(key, value);
        }
    }
    if (entries.empty()) return cleaned;

    // Insertion point: just after the subcommand name (first non-flag token).
    std::size_t at = cleaned.size();
    for (std::size_t i = 0; i < cleaned.size(); ++i)
        if (!cleaned[i].empty() && cleaned[i][0] != '-') {
            at = i + 1;
            break;
        }

    std::vector<std::string> expanded(cleaned.begin(), cleaned.begin() + at);
    for (const auto& [key, value] : entries) {
        const std::string flag = "--" + key;
        bool overridden = false;
        for (const std::string& arg : cleaned)
            if (arg == flag || arg.rfind(flag + "=", 0) == 0) {
                overridden = true;
                break;
            }
        if (!overridden) {
            expanded.push_back(flag);
            expanded.push_back(value);
        }
    }
    expanded.insert(expanded.end(), cleaned.begin() + at, cleaned.end());
    return expanded;
}

// Shared geometry rows for `critical` and `microcavity`.
void emit_energy_rows(std::ostringstream& csv, double beta, double volume, double area) {
    const CriticalEnergy energy = total_critical_energy(beta, volume, area);
    csv << "V_R," << sci(volume) << ",m^3\n";
    csv << "A_R," << sci(area) << ",m^2\n";
    csv << "u_crit_finite," << sci(u_crit_finite(beta, volume, area)) << ",J/m^3\n";
    csv << "E_crit_bulk," << sci(energy.bulk_term) << ",J\n";
    csv << "E_crit_surface," << sci(energy.surface_term) << ",J\n";
    csv << "E_crit_total," << sci(energy.total) << ",J\n";
}

struct CliState {
    // critical
    double crit_temp = 0.0;
    std::vector<double> crit_box;
    double crit_rcurv = 0.0, crit_d0 = 0.0;
    std::string crit_out;

    // solve-mu
    double solve_temp = 0.0, solve_u = 0.0;
    int solve_dim = 3;
    std::string solve_out;

    // oracle
    std::vector<double> oracle_box;
    double oracle_temp = 0.0, oracle_u = 0.0;
    double oracle_beta_lambda = 60.0;
    std::size_t oracle_max_modes = 10000000;
    std::size_t oracle_budget = 0;  // 0 = cutoff from --beta-lambda
    std::string oracle_out;

    // scaling
    std::vector<double> scaling_box;
    std::vector<double> scaling_scales{1.0, 2.0, 4.0, 8.0};
    double scaling_temp = 0.0, scaling_u_mult = 2.0;
    std::size_t scaling_budget = 200000;
    std::size_t scaling_max_modes = 10000000;
    std::string scaling_out;

    // profile
    std::vector<double> profile_box;
    std::vector<int> profile_n1{5, 100, 5000};
    int profile_axis = 1, profile_points = 512;
    std::string profile_out;

    // microcavity
    double mc_rcurv = 0.0, mc_d0 = 0.0, mc_temp = 0.0;
    double mc_ratio = 50.0;
    double mc_tau_exc = 0.0, mc_tau_ph = 0.0;
    L0Convention mc_l0 = L0Convention::mirror_spacing;
    std::string mc_out;

    std::string const_out;
};

void run_constants(const CliState& st, std::ostream& out) {
    std::ostringstream csv;
    csv << "quantity,value,unit\n";
    csv << "hbar," << sci(PhysicalConstants::hbar) << ",J s\n";
    csv << "c," << sci(PhysicalConstants::c) << ",m/s\n";
    csv << "k_B," << sci(PhysicalConstants::k_B) << ",J/K\n";
    csv << "hbar_c," << sci(PhysicalConstants::hbar_c) << ",J m\n";
    deliver(st.const_out, out, csv.str());
}

void run_critical(const CliState& st, bool has_box, bool has_mirror, std::ostream& out) {
    const double beta = beta_from_temperature(st.crit_temp);
    const CriticalDensities crit = critical_densities(beta);

    std::ostringstream csv;
    csv << "quantity,value,unit\n";
    csv << "T," << sci(st.crit_temp) << ",K\n";
    csv << "beta," << sci(beta) << ",1/J\n";
    csv << "u_crit_bulk," << sci(crit.bulk) << ",J/m^3\n";
    csv << "u_crit_surface," << sci(crit.surface) << ",J/m^2\n";

    if (has_box) {
        const GeometryMeasures g = geometry_measures(to_box(st.crit_box));
        emit_energy_rows(csv, beta, g.volume, g.area);
    } else if (has_mirror) {
        const GeometryMeasures g =
            geometry_measures(MirrorMicrocavity{st.crit_rcurv, st.crit_d0});
        emit_energy_rows(csv, beta, g.volume, g.area);
    }
    deliver(st.crit_out, out, csv.str());
}

void run_solve_mu(const CliState& st, std::ostream& out) {
    const double beta = beta_from_temperature(st.solve_temp);
    const bool bulk = st.solve_dim == 3;
    const Dimensionality dim = bulk ? Dimensionality::bulk3D : Dimensionality::surface2D;
    const char* unit = bulk ? "J/m^3" : "J/m^2";

    const MuSolution sol = solve_mu({beta, st.solve_u, dim});
    const CriticalDensities crit = critical_densities(beta);

    std::ostringstream csv;
    csv << "quantity,value,unit\n";
    csv << "T," << sci(st.solve_temp) << ",K\n";
    csv << "beta," << sci(beta) << ",1/J\n";
    csv << "dim," << st.solve_dim << ",\n";
    csv << "target_u," << sci(st.solve_u) << "," << unit << "\n";
    csv << "u_crit," << sci(bulk ? crit.bulk : crit.surface) << "," << unit << "\n";
    csv << "regime," << (sol.regime == Regime::condensed ? "condensed" : "normal") << ",\n";
    csv << "mu," << sci(sol.mu) << ",J\n";
    csv << "condensate_density," << sci(sol.condensate_density) << "," << unit << "\n";
    if (bulk) {
        csv << "number_density," << sci(bulk_number_density(beta, sol.mu)) << ",1/m^3\n";
        csv << "pressure," << sci(bulk_pressure(beta, sol.mu)) << ",J/m^3\n";
        csv << "entropy_density," << sci(entropy_limit(beta, st.solve_u)) << ",J/(K m^3)\n";
    }
    deliver(st.solve_out, out, csv.str());
}

void run_oracle(const CliState& st, std::ostream& out) {
    const double beta = beta_from_temperature(st.oracle_temp);
    const BoxCavity box = to_box(st.oracle_box);
    const GeometryMeasures g = geometry_measures(box);

    FiniteGasOptions opts;
    double lambda_max;
    if (st.oracle_budget > 0) {
        // Cutoff from a mode budget; the smoothed tail covers the remainder.
        opts.required_beta_lambda = 0.0;
        const double pi = std::numbers::pi;
        lambda_max = PhysicalConstants::hbar_c *
                     std::cbrt(3.0 * pi * pi * static_cast<double>(st.oracle_budget) / g.volume);
    } else {
        opts.required_beta_lambda = st.oracle_beta_lambda;
        lambda_max = st.oracle_beta_lambda / beta;
    }

    const ModeSpectrum spectrum = enumerate_modes(box, lambda_max, st.oracle_max_modes);
    const FiniteGasResult r = solve_mu_finite(spectrum, g.volume, g.area, beta, st.oracle_u, opts);

    std::ostringstream csv;
    csv << "quantity,value,unit\n";
    csv << "T," << sci(st.oracle_temp) << ",K\n";
    csv << "beta," << sci(beta) << ",1/J\n";
    csv << "V_R," << sci(g.volume) << ",m^3\n";
    csv << "A_R," << sci(g.area) << ",m^2\n";
    csv << "target_u," << sci(st.oracle_u) << ",J/m^3\n";
    csv << "epsilon_1," << sci(spectrum.epsilon_1) << ",J\n";
    csv << "lambda_max," << sci(spectrum.lambda_max()) << ",J\n";
    csv << "modes_used," << r.modes_used << ",\n";
    csv << "mu_R," << sci(r.mu_R) << ",J\n";
    csv << "u_R," << sci(r.u_R) << ",J/m^3\n";
    csv << "ground_term," << sci(r.ground_term) << ",J/m^3\n";
    csv << "tail_estimate," << sci(r.tail_estimate) << ",J/m^3\n";
    csv << "entropy," << sci(r.entropy) << ",J/(K m^3)\n";
    deliver(st.oracle_out, out, csv.str());
}

void run_scaling(const CliState& st, std::ostream& out) {
    const double beta = beta_from_temperature(st.scaling_temp);
    const double target_u = st.scaling_u_mult * critical_densities(beta).bulk;

    ScalingOptions opts;
    opts.mode_budget = st.scaling_budget;
    opts.max_modes = st.scaling_max_modes;
    const ScalingStudy study =
        mu_scaling_study(to_box(st.scaling_box), st.scaling_scales, beta, target_u, opts);

    std::ostringstream csv;
    csv << "scale,R_m,epsilon_1_J,mu_R_J,u1_J_per_m3,ground_term_J_per_m3,"
           "entropy_J_per_K_m3,modes_used\n";
    for (const ScalingPoint& p : study.points) {
        csv << sci(p.scale) << "," << sci(p.R) << "," << sci(p.epsilon_1) << ","
            << sci(p.mu_R) << "," << sci(p.u1) << "," << sci(p.ground_term) << ","
            << sci(p.entropy) << "," << p.modes_used << "\n";
    }
    csv << "\n";
    csv << "quantity,value,unit\n";
    csv << "T," << sci(st.scaling_temp) << ",K\n";
    csv << "target_u," << sci(target_u) << ",J/m^3\n";
    csv << "slope," << sci(study.slope) << ",\n";
    deliver(st.scaling_out, out, csv.str());
}

void run_profile(const CliState& st, std::ostream& out) {
    const BoxCavity box = to_box(st.profile_box);

    std::ostringstream csv;
    csv << "n1,x_m,f\n";
    for (const int n1 : st.profile_n1) {
        ProfileRequest request{box, n1, st.profile_axis, st.profile_points};
        for (const ProfileSample& s : profile_samples(request))
            csv << n1 << "," << sci(s.x) << "," << sci(s.f) << "\n";
    }
    deliver(st.profile_out, out, csv.str());
}

void run_microcavity(const CliState& st, bool has_lifetimes, std::ostream& out) {
    ReservoirModel reservoir;
    if (has_lifetimes)
        reservoir = ReservoirModel::from_lifetimes(st.mc_tau_exc, st.mc_tau_ph);
    else
        reservoir.ratio = st.mc_ratio;

    const MirrorMicrocavity cavity{st.mc_rcurv, st.mc_d0};
    const MicrocavityReport report = microcavity_report(cavity, st.mc_temp, reservoir);
    const PowerPrediction& selected = st.mc_l0 == L0Convention::mirror_spacing
                                          ? report.power_mirror_spacing
                                          : report.power_volume_over_area;
    const char* selected_name =
        st.mc_l0 == L0Convention::mirror_spacing ? "mirror_spacing" : "volume_over_area";

    std::ostringstream csv;
    csv << "quantity,qualifier,value,unit\n";
    csv << "T,," << sci(report.temperature_K) << ",K\n";
    csv << "beta,," << sci(report.beta) << ",1/J\n";
    csv << "R_curv,," << sci(st.mc_rcurv) << ",m\n";
    csv << "D0,," << sci(st.mc_d0) << ",m\n";
    csv << "V_R,," << sci(report.volume) << ",m^3\n";
    csv << "A_R,," << sci(report.area) << ",m^2\n";
    csv << "u_crit_bulk,," << sci(report.u_crit_bulk) << ",J/m^3\n";
    csv << "u_crit_surface,," << sci(report.u_crit_surface) << ",J/m^2\n";
    csv << "E_crit_bulk,," << sci(report.bulk_energy) << ",J\n";
    csv << "E_crit_surface,," << sci(report.surface_energy) << ",J\n";
    csv << "E_crit_total,," << sci(report.total_energy) << ",J\n";
    csv << "surface_to_bulk_ratio,," << sci(report.surface_to_bulk_ratio) << ",\n";
    csv << "reservoir_ratio,," << sci(report.reservoir_ratio) << ",\n";
    csv << "l0,mirror_spacing," << sci(report.power_mirror_spacing.l0) << ",m\n";
    csv << "P_crit,mirror_spacing," << sci(report.power_mirror_spacing.power) << ",W\n";
    csv << "l0,volume_over_area," << sci(report.power_volume_over_area.l0) << ",m\n";
    csv << "P_crit,volume_over_area," << sci(report.power_volume_over_area.power) << ",W\n";
    csv << "P_crit_selected," << selected_name << "," << sci(selected.power) << ",W\n";
    deliver(st.mc_out, out, csv.str());
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Ideal photon gas thermodynamics in reflecting cavities"};
    app.name("photongas");
    app.require_subcommand(0, 1);

    CliState st;

    CLI::App* sub_constants = app.add_subcommand("constants", "Print the physical constants in use");
    sub_constants->add_option("--out", st.const_out, "Write CSV to this file instead of stdout");
    sub_constants->add_option("--config", "Read flags from a plain key=value file (flags win)");

    CLI::App* sub_critical =
        app.add_subcommand("critical", "Critical energy densities, optionally for a geometry");
    sub_critical->add_option("--temp", st.crit_temp, "Temperature [K]")->required();
    CLI::Option* crit_box_opt =
        sub_critical->add_option("--box", st.crit_box, "Box edges L1,L2,L3 [m]")
            ->delimiter(',')->expected(3);
    CLI::Option* crit_rcurv_opt =
        sub_critical->add_option("--rcurv", st.crit_rcurv, "Mirror radius of curvature [m]");
    CLI::Option* crit_d0_opt =
        sub_critical->add_option("--d0", st.crit_d0, "Central mirror distance [m]");
    crit_rcurv_opt->needs(crit_d0_opt);
    crit_d0_opt->needs(crit_rcurv_opt);
    crit_box_opt->excludes(crit_rcurv_opt);
    sub_critical->add_option("--out", st.crit_out, "Write CSV to this file instead of stdout");
    sub_critical->add_option("--config", "Read flags from a plain key=value file (flags win)");

    CLI::App* sub_solve = app.add_subcommand(
        "solve-mu", "Solve the thermodynamic-limit chemical potential at a target density");
    sub_solve->add_option("--temp", st.solve_temp, "Temperature [K]")->required();
    sub_solve->add_option("--energy-density", st.solve_u,
                          "Target mean energy density [J/m^3 (3D) or J/m^2 (2D)]")->required();
    sub_solve->add_option("--dim", st.solve_dim, "Dimensionality (3 = bulk, 2 = surface)")
        ->check(CLI::IsMember({2, 3}));
    sub_solve->add_option("--out", st.solve_out, "Write CSV to this file instead of stdout");
    sub_solve->add_option("--config", "Read flags from a plain key=value file (flags win)");

    CLI::App* sub_oracle = app.add_subcommand(
        "oracle", "Solve the finite-cavity gas by brute-force mode summation");
    sub_oracle->add_option("--box", st.oracle_box, "Box edges L1,L2,L3 [m]")
        ->delimiter(',')->expected(3)->required();
    sub_oracle->add_option("--temp", st.oracle_temp, "Temperature [K]")->required();
    sub_oracle->add_option("--energy-density", st.oracle_u, "Target mean energy density [J/m^3]")
        ->required();
    sub_oracle->add_option("--beta-lambda", st.oracle_beta_lambda,
                           "Spectral coverage beta*lambda_max (default 60)");
    sub_oracle->add_option("--mode-budget", st.oracle_budget,
                           "Derive the cutoff from this mode budget instead of --beta-lambda");
    sub_oracle->add_option("--max-modes", st.oracle_max_modes, "Hard cap on enumerated modes");
    sub_oracle->add_option("--out", st.oracle_out, "Write CSV to this file instead of stdout");
    sub_oracle->add_option("--config", "Read flags from a plain key=value file (flags win)");

    CLI::App* sub_scaling = app.add_subcommand(
        "scaling", "Chemical-potential decay across geometrically scaled boxes");
    sub_scaling->add_option("--box", st.scaling_box, "Base box edges L1,L2,L3 [m]")
        ->delimiter(',')->expected(3)->required();
    sub_scaling->add_option("--scales", st.scaling_scales, "Scale factors (default 1,2,4,8)")
        ->delimiter(',');
    sub_scaling->add_option("--temp", st.scaling_temp, "Temperature [K]")->required();
    sub_scaling->add_option("--u-mult", st.scaling_u_mult,
                            "Target density as a multiple of u_crit_bulk (default 2)");
    sub_scaling->add_option("--mode-budget", st.scaling_budget,
                            "Approximate enumerated modes per box (default 200000)");
    sub_scaling->add_option("--max-modes", st.scaling_max_modes, "Hard cap on enumerated modes");
    sub_scaling->add_option("--out", st.scaling_out, "Write CSV to this file instead of stdout");
    sub_scaling->add_option("--config", "Read flags from a plain key=value file (flags win)");

    CLI::App* sub_profile =
        app.add_subcommand("profile", "Sample the spatial condensate profile along an axis");
    sub_profile->add_option("--box", st.profile_box, "Box edges L1,L2,L3 [m]")
        ->delimiter(',')->expected(3)->required();
    sub_profile->add_option("--n1", st.profile_n1,
                            "Condensate occupation; repeat for several curves (default 5 100 5000)");
    sub_profile->add_option("--axis", st.profile_axis, "Axis 1, 2 or 3 (default 1)")
        ->check(CLI::IsMember({1, 2, 3}));
    sub_profile->add_option("--points", st.profile_points, "Samples per curve (default 512)");
    sub_profile->add_option("--out", st.profile_out, "Write CSV to this file instead of stdout");
    sub_profile->add_option("--config", "Read flags from a plain key=value file (flags win)");

    CLI::App* sub_mc = app.add_subcommand(
        "microcavity", "Critical energy and power report for a mirror microcavity");
    sub_mc->add_option("--rcurv", st.mc_rcurv, "Mirror radius of curvature [m]")->required();
    sub_mc->add_option("--d0", st.mc_d0, "Central mirror distance [m]")->required();
    sub_mc->add_option("--temp", st.mc_temp, "Temperature [K]")->required();
    sub_mc->add_option("--ratio", st.mc_ratio, "Reservoir excitations per photon (default 50)");
    CLI::Option* tau_exc_opt =
        sub_mc->add_option("--tau-exc", st.mc_tau_exc, "Excitation lifetime [s]");
    CLI::Option* tau_ph_opt =
        sub_mc->add_option("--tau-ph", st.mc_tau_ph, "Photon residence time [s]");
    tau_exc_opt->needs(tau_ph_opt);
    tau_ph_opt->needs(tau_exc_opt);
    sub_mc->add_option("--l0", st.mc_l0, "Power conversion length: d0 or va (V_R/A_R)")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, L0Convention>{{"d0", L0Convention::mirror_spacing},
                                                {"va", L0Convention::volume_over_area}}));
    sub_mc->add_option("--out", st.mc_out, "Write CSV to this file instead of stdout");
    sub_mc->add_option("--config", "Read flags from a plain key=value file (flags win)");

    try {
        const std::vector<std::string> expanded = apply_config(args);
        std::vector<std::string> reversed(expanded.rbegin(), expanded.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    } catch (const std::invalid_argument& e) {  // config-file problems
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (sub_constants->parsed())
            run_constants(st, out);
        else if (sub_critical->parsed())
            run_critical(st, crit_box_opt->count() > 0, crit_rcurv_opt->count() > 0, out);
        else if (sub_solve->parsed())
            run_solve_mu(st, out);
        else if (sub_oracle->parsed())
            run_oracle(st, out);
        else if (sub_scaling->parsed())
            run_scaling(st, out);
        else if (sub_profile->parsed())
            run_profile(st, out);
        else if (sub_mc->parsed())
            run_microcavity(st, tau_exc_opt->count() > 0, out);
        else {
            out << app.help();
            return 2;
        }
    } catch (const ConvergenceError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::length_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace photongas
