#include "pentrap/molecule.hpp"

#include <cmath>
#include <string>

#include "pentrap/constants.hpp"
#include "pentrap/errors.hpp"
#include "pentrap/fields.hpp"

namespace pentrap {

ArrayLayout uniform_layout(double spacing, int count) {
    if (!(spacing > 0.0)) throw ConfigError("site spacing must be positive");
    if (count < 1) throw ConfigError("site count must be at least 1");
    ArrayLayout layout;
    layout.x.resize(count);
    // Site i sits at x = i * spacing, on one side of the gradient axis.
    for (int i = 0; i < count; ++i) layout.x[i] = i * spacing;
    return layout;
}

double coupling_xi(double d, double delta_z, const PhysicalConstants& pc) {
    if (!(d > 0.0)) throw ConfigError("site separation must be positive");
    if (!(delta_z / d < 0.1))
        throw PhysicsError("dipole expansion invalid: axial spread must stay much "
                           "smaller than the site separation (delta_z/d < 0.1)");
    const double coulomb = pc.e * pc.e / (4.0 * kPi * pc.eps0 * pc.hbar * d);
    return coulomb * (delta_z / d) * (delta_z / d);
}

double j_coupling(double xi, double epsilon, double g) {
    return g * g * xi * epsilon * epsilon / (2.0 * kPi);
}

double spin_frequency_quoted(const MagneticConfig& cfg, double x0,
                             const PhysicalConstants& pc) {
    const double tilt = 0.5 * cfg.b * std::abs(x0) / cfg.B0;
    if (!(tilt < 0.5))
        throw PhysicsError("site too far off axis: b|x0|/(2 B0) must stay below 0.5");
    const double base = 0.5 * pc.g * pc.e * cfg.B0 / pc.m_e;
    const double rel = cfg.b * x0 / cfg.B0;
    return base * (1.0 + rel * rel / 8.0);
}

double equilibrium_shift(double d, double omega_c0, const PhysicalConstants& pc) {
    if (!(d > 0.0)) throw ConfigError("site separation must be positive");
    return pc.e * pc.e / (4.0 * kPi * pc.eps0 * d * d * pc.m_e * omega_c0 * omega_c0);
}

MoleculeSpec build_molecule(const MagneticConfig& cfg, const ArrayLayout& layout,
                            double omega_z, const PhysicalConstants& pc) {
    const int n = static_cast<int>(layout.x.size());
    if (n < 1) throw ConfigError("array layout is empty");
    MoleculeSpec mol;
    mol.layout = layout;
    mol.omega_z = omega_z;
    mol.sites.reserve(n);
    for (int i = 0; i < n; ++i) {
        try {
            mol.sites.push_back(site_frequencies(cfg, layout.x[i], omega_z, pc));
            spin_frequency_quoted(cfg, layout.x[i], pc);
        } catch (const PhysicsError& e) {
            throw PhysicsError("site " + std::to_string(i) + ": " + e.what());
        }
    }

    // delta_z and epsilon are site-independent (shared omega_z, uniform gradient).
    const double delta_z = mol.sites.front().delta_z;
    const double epsilon = mol.sites.front().epsilon;

    mol.xi = Eigen::MatrixXd::Zero(n, n);
    mol.J = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double d = std::abs(layout.x[j] - layout.x[i]);
            if (!(d > 0.0)) throw ConfigError("sites " + std::to_string(i) + " and " +
                                              std::to_string(j) + " coincide");
            try {
                const double xi = coupling_xi(d, delta_z, pc);
                mol.xi(i, j) = mol.xi(j, i) = xi;
                mol.J(i, j) = mol.J(j, i) = j_coupling(xi, epsilon, pc.g);
            } catch (const PhysicsError& e) {
                throw PhysicsError("pair (" + std::to_string(i) + "," +
                                   std::to_string(j) + "): " + e.what());
            }
        }
    }
    return mol;
}

}  // namespace pentrap
