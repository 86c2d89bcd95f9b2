// pentrap: command-line front end tying the trap, field, molecule, compiler,
// and simulator modules together. Subcommands: report, compile, simulate,
// validate, optimize-trap. Exit codes: 0 ok, 2 config error, 3 physics
// failure, 4 numerical non-convergence.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "pentrap/compiler.hpp"
#include "pentrap/config.hpp"
#include "pentrap/effective_model.hpp"
#include "pentrap/errors.hpp"
#include "pentrap/reports.hpp"
#include "pentrap/schedule_io.hpp"
#include "pentrap/simulator.hpp"
#include "pentrap/trap.hpp"
#include "pentrap/validity.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::vector<int> parse_sites(const std::string& text, std::size_t want) {
    std::vector<int> sites;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = text.find(',', pos);
        const std::string tok = text.substr(pos, comma == std::string::npos
                                                     ? std::string::npos
                                                     : comma - pos);
        try {
            std::size_t used = 0;
            const int v = std::stoi(tok, &used);
            if (used != tok.size() || v < 0) throw std::invalid_argument(tok);
            sites.push_back(v);
        } catch (const std::exception&) {
            throw pentrap::ConfigError("--sites: \"" + tok + "\" is not a site index");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (sites.size() != want)
        throw pentrap::ConfigError("--sites: expected " + std::to_string(want) +
                                   " comma-separated indices, got " +
                                   std::to_string(sites.size()));
    return sites;
}

std::string out_path(const std::string& dir, const std::string& name) {
    fs::create_directories(dir);
    return (fs::path(dir) / name).string();
}

int cmd_report(const std::string& config_path, const std::string& out) {
    const auto cfg = pentrap::load_device_config(config_path);
    const auto mol = pentrap::molecule_from_config(cfg);
    pentrap::write_text_file(out_path(out, "frequencies.csv"),
                             pentrap::frequencies_csv(mol));
    pentrap::write_text_file(out_path(out, "couplings.csv"), pentrap::couplings_csv(mol));
    const auto report = pentrap::validity_report(cfg.magnetic, mol, cfg.chi,
                                                 cfg.detection, cfg.validity_threshold);
    pentrap::write_text_file(out_path(out, "validity.json"),
                             pentrap::validity_json(report, cfg.validity_threshold));
    if (!report.all_pass) {
        std::cerr << "validity checks failed (see validity.json)\n";
        return 3;
    }
    return 0;
}

int cmd_compile(const std::string& config_path, const std::string& gate,
                const std::string& sites_text, std::optional<double> angle,
                const std::string& out) {
    const auto cfg = pentrap::load_device_config(config_path);
    const auto mol = pentrap::molecule_from_config(cfg);

    auto coupled_pair = [&](const std::vector<int>& s) {
        if (s[0] >= 0 && s[0] < mol.size() && s[1] >= 0 && s[1] < mol.size() &&
            s[0] != s[1] && mol.J(s[0], s[1]) < cfg.j_cutoff_hz)
            throw pentrap::PhysicsError("uncoupled pair; route via SWAPs");
        return s;
    };

    pentrap::PulseSchedule schedule{mol, {}};
    if (gate == "pseudo_hadamard") {
        schedule = pentrap::compile_pseudo_hadamard(mol, parse_sites(sites_text, 1)[0]);
    } else if (gate == "inverse_pseudo_hadamard") {
        schedule =
            pentrap::compile_inverse_pseudo_hadamard(mol, parse_sites(sites_text, 1)[0]);
    } else if (gate == "z_rotation") {
        if (!angle) throw pentrap::ConfigError("z_rotation needs --angle (radians)");
        schedule = pentrap::compile_z_rotation(mol, parse_sites(sites_text, 1)[0], *angle);
    } else if (gate == "cz") {
        const auto s = coupled_pair(parse_sites(sites_text, 2));
        schedule = pentrap::compile_cz(mol, s[0], s[1]);
    } else if (gate == "cnot") {
        const auto s = coupled_pair(parse_sites(sites_text, 2));
        schedule = pentrap::compile_cnot(mol, s[0], s[1]);
    } else if (gate == "swap") {
        const auto s = coupled_pair(parse_sites(sites_text, 2));
        schedule = pentrap::compile_swap(mol, s[0], s[1]);
    } else {
        throw pentrap::ConfigError(
            "unknown gate \"" + gate +
            "\" (pseudo_hadamard, inverse_pseudo_hadamard, z_rotation, cz, cnot, swap)");
    }
    pentrap::write_schedule_file(out_path(out, "schedule.json"), schedule.events);
    return 0;
}

int cmd_simulate(const std::string& config_path, const std::string& schedule_path,
                 const std::string& initial, const std::string& out) {
    const auto cfg = pentrap::load_device_config(config_path);
    const auto mol = pentrap::molecule_from_config(cfg);
    const pentrap::PulseSchedule schedule{mol, pentrap::read_schedule_file(schedule_path)};
    const auto final_state =
        pentrap::run_schedule(pentrap::SpinState::basis(initial), schedule);
    pentrap::write_text_file(out_path(out, "state.json"), pentrap::state_json(final_state));
    pentrap::write_text_file(out_path(out, "probabilities.csv"),
                             pentrap::probabilities_csv(final_state));
    return 0;
}

int cmd_validate(const std::optional<std::string>& config_path,
                 std::optional<double> xi, std::optional<double> epsilon,
                 std::optional<int> n_max, const std::string& out) {
    pentrap::EffectiveModelParams params;
    if (config_path) {
        const auto cfg = pentrap::load_device_config(*config_path);
        const auto mol = pentrap::molecule_from_config(cfg);
        params.g = pentrap::codata2018().g;
        params.epsilon = mol.sites.front().epsilon;
        if (mol.size() >= 2) params.xi = mol.xi(0, 1) / mol.omega_z;
    }
    if (xi) params.xi = *xi;
    if (epsilon) params.epsilon = *epsilon;
    if (n_max) params.n_max = *n_max;

    const auto result = pentrap::validate_effective_model(params);
    json j;
    j["J_measured"] = result.J_measured;
    j["J_predicted"] = result.J_predicted;
    j["relative_error"] = result.relative_error;
    j["n_max"] = result.n_max;
    j["converged"] = result.converged;
    pentrap::write_text_file(out_path(out, "validation.json"), j.dump(2) + "\n");
    if (!result.converged) {
        std::cerr << "effective-model validation did not converge in the Fock cutoff\n";
        return 4;
    }
    return 0;
}

int cmd_optimize_trap(const std::string& config_path, std::uint32_t seed,
                      const std::string& out) {
    const auto cfg = pentrap::load_device_config(config_path);
    if (!cfg.stack)
        throw pentrap::ConfigError("optimize-trap needs an axial.stack in the config");
    const pentrap::StackConfig& sc = *cfg.stack;
    pentrap::OptimizeOptions opt;
    opt.tunable = sc.tunable.empty() ? std::vector<std::size_t>{1} : sc.tunable;
    opt.v_lo = sc.v_lo;
    opt.v_hi = sc.v_hi;
    opt.z_lo = sc.z_lo;
    opt.z_hi = sc.z_hi;
    opt.seed = seed;
    const auto res = pentrap::optimize_harmonicity(sc.stack, opt);

    json j;
    j["radii_mm"] = json::array();
    j["voltages"] = json::array();
    for (double r : res.stack.radii) j["radii_mm"].push_back(r * 1e3);
    for (double v : res.stack.voltages) j["voltages"].push_back(v);
    j["z0_mm"] = res.well.z0 * 1e3;
    j["omega_z_rad_per_s"] = res.well.omega_z;
    j["objective_initial"] = res.objective_initial;
    j["objective_final"] = res.objective_final;
    pentrap::write_text_file(out_path(out, "optimized_stack.json"), j.dump(2) + "\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"planar-trap electron spin array: reports, pulse compilation, simulation"};
    app.require_subcommand(1);

    std::string config_path, out = ".", gate, sites, schedule_path, initial;
    std::optional<std::string> opt_config;
    std::optional<double> angle, xi, epsilon;
    std::optional<int> n_max;
    std::uint32_t seed = 12345;

    auto* report = app.add_subcommand("report", "write frequencies, couplings, validity");
    report->add_option("--config", config_path, "device config JSON")->required();
    report->add_option("--out", out, "output directory");

    auto* compile = app.add_subcommand("compile", "compile a gate to a pulse schedule");
    compile->add_option("--config", config_path, "device config JSON")->required();
    compile->add_option("--gate", gate, "gate name")->required();
    compile->add_option("--sites", sites, "site indices, e.g. 0 or 0,1")->required();
    compile->add_option("--angle", angle, "z_rotation angle, radians");
    compile->add_option("--out", out, "output directory");

    auto* simulate = app.add_subcommand("simulate", "run a schedule on a basis state");
    simulate->add_option("--config", config_path, "device config JSON")->required();
    simulate->add_option("--schedule", schedule_path, "schedule JSON")->required();
    simulate->add_option("--initial", initial, "initial bitstring, spin 0 first")
        ->required();
    simulate->add_option("--out", out, "output directory");

    auto* validate = app.add_subcommand("validate",
                                        "cross-check the effective coupling model");
    validate->add_option("--config", opt_config, "device config JSON");
    validate->add_option("--xi", xi, "dimensionless xi/omega_z");
    validate->add_option("--epsilon", epsilon, "dimensionless epsilon");
    validate->add_option("--n-max", n_max, "Fock truncation parameter");
    validate->add_option("--out", out, "output directory");

    auto* optimize = app.add_subcommand("optimize-trap", "tune voltages for harmonicity");
    optimize->add_option("--config", config_path, "device config JSON with axial.stack")
        ->required();
    optimize->add_option("--seed", seed, "restart-simplex seed");
    optimize->add_option("--out", out, "output directory");

    try {
        app.parse(argc, argv);
        if (report->parsed()) return cmd_report(config_path, out);
        if (compile->parsed()) return cmd_compile(config_path, gate, sites, angle, out);
        if (simulate->parsed())
            return cmd_simulate(config_path, schedule_path, initial, out);
        if (validate->parsed()) return cmd_validate(opt_config, xi, epsilon, n_max, out);
        if (optimize->parsed()) return cmd_optimize_trap(config_path, seed, out);
        return 2;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const pentrap::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const pentrap::PhysicsError& e) {
        std::cerr << "physics error: " << e.what() << "\n";
        return 3;
    } catch (const pentrap::ConvergenceError& e) {
        std::cerr << "convergence error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
