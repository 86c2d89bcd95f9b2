#include "pentrap/reports.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "pentrap/constants.hpp"
#include "pentrap/errors.hpp"

namespace pentrap {

namespace {

// Shortest decimal form that parses back to the same double.
std::string fmt(double v) {
    char buf[40];
    for (int prec = 15; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof buf, "%.*g", prec, v);
        if (std::strtod(buf, nullptr) == v) break;
    }
    return buf;
}

}  // namespace

std::string frequencies_csv(const MoleculeSpec& mol) {
    std::ostringstream out;
    out << "site,x0_m,Bc_T,omega_c0_rad_per_s,omega_m0_rad_per_s,omega_s0_rad_per_s,"
           "omega_z_rad_per_s,epsilon,delta_z_m,dz_omega_s_rad_per_s_per_m\n";
    for (std::size_t i = 0; i < mol.sites.size(); ++i) {
        const SiteFrequencies& s = mol.sites[i];
        out << i << ',' << fmt(s.x0) << ',' << fmt(s.Bc) << ',' << fmt(s.omega_c0) << ','
            << fmt(s.omega_m0) << ',' << fmt(s.omega_s0) << ',' << fmt(s.omega_z) << ','
            << fmt(s.epsilon) << ',' << fmt(s.delta_z) << ',' << fmt(s.dz_omega_s) << '\n';
    }
    return out.str();
}

std::string couplings_csv(const MoleculeSpec& mol) {
    std::ostringstream out;
    out << "i,j,J_hz,xi_hz\n";
    const int n = mol.size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            out << i << ',' << j << ',' << fmt(mol.J(i, j)) << ','
                << fmt(mol.xi(i, j) / (2.0 * kPi)) << '\n';
    return out.str();
}

std::string validity_json(const ValidityReport& report, double threshold) {
    nlohmann::json j;
    j["threshold"] = threshold;
    j["all_pass"] = report.all_pass;
    j["checks"] = nlohmann::json::array();
    for (const ValidityCheck& c : report.checks) {
        j["checks"].push_back({{"name", c.name},
                               {"left", c.left},
                               {"right", c.right},
                               {"ratio", c.ratio},
                               {"threshold", c.threshold},
                               {"strict", c.strict},
                               {"pass", c.pass}});
    }
    return j.dump(2) + "\n";
}

std::string state_json(const SpinState& state) {
    nlohmann::json j;
    j["n_spins"] = state.n_spins;
    j["amplitudes"] = nlohmann::json::array();
    for (long k = 0; k < state.amplitudes.size(); ++k) {
        j["amplitudes"].push_back({{"bitstring", bitstring_of_index(k, state.n_spins)},
                                   {"re", state.amplitudes(k).real()},
                                   {"im", state.amplitudes(k).imag()}});
    }
    return j.dump(2) + "\n";
}

std::string probabilities_csv(const SpinState& state) {
    std::ostringstream out;
    out << "bitstring,probability\n";
    for (long k = 0; k < state.amplitudes.size(); ++k)
        out << bitstring_of_index(k, state.n_spins) << ','
            << fmt(std::norm(state.amplitudes(k))) << '\n';
    return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ConfigError("cannot open " + path + " for writing");
    f << content;
    if (!f) throw ConfigError("failed writing " + path);
}

std::string read_text_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ConfigError("cannot open " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    return buf.str();
}

}  // namespace pentrap
