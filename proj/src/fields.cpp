#include "pentrap/fields.hpp"

#include <cmath>

#include "pentrap/errors.hpp"

namespace pentrap {

double field_at_center(const MagneticConfig& cfg, double x0) {
    const double bt = 0.5 * cfg.b * x0;  // transverse component at the site
    return std::sqrt(cfg.B0 * cfg.B0 + bt * bt);
}

SiteFrequencies site_frequencies(const MagneticConfig& cfg, double x0, double omega_z,
                                 const PhysicalConstants& pc) {
    if (!(cfg.B0 > 0.0)) throw ConfigError("B0 must be positive");
    if (!(omega_z > 0.0)) throw ConfigError("omega_z must be positive");
    SiteFrequencies s;
    s.x0 = x0;
    s.omega_z = omega_z;
    s.Bc = field_at_center(cfg, x0);
    s.omega_c0 = pc.e * s.Bc / pc.m_e;
    if (!(s.omega_c0 * s.omega_c0 > 2.0 * omega_z * omega_z))
        throw PhysicsError("unstable site: cyclotron frequency too low for this axial well");
    s.omega_m0 = omega_z * omega_z / (2.0 * s.omega_c0);
    s.omega_s0 = 0.5 * pc.g * s.omega_c0;
    s.delta_z = std::sqrt(pc.hbar / (2.0 * pc.m_e * omega_z));
    s.dz_omega_s = 0.5 * pc.g * pc.e * cfg.b / pc.m_e;
    s.epsilon = s.dz_omega_s * s.delta_z / omega_z;
    return s;
}

MotionalFrequencies z_dependent_frequencies(const MagneticConfig& cfg, double x0,
                                            double omega_z, double z,
                                            const PhysicalConstants& pc) {
    if (!(omega_z > 0.0)) throw ConfigError("omega_z must be positive");
    MotionalFrequencies m;
    const double B = field_at_center(cfg, x0) + cfg.b * z;
    m.omega_c = pc.e * B / pc.m_e;
    const double disc = m.omega_c * m.omega_c - 2.0 * omega_z * omega_z;
    if (!(disc > 0.0))
        throw PhysicsError("unstable site: cyclotron frequency too low for this axial well");
    m.omega_ct = std::sqrt(disc);
    m.omega_m = 0.5 * (m.omega_c - m.omega_ct);
    m.omega_pc = 0.5 * (m.omega_c + m.omega_ct);
    return m;
}

}  // namespace pentrap
