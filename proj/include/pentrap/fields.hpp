#pragma once

// Magnetic field geometry and single-electron eigenfrequencies for a trap
// displaced from the gradient axis.

#include "pentrap/constants.hpp"

namespace pentrap {

struct MagneticConfig {
    double B0 = 0.0;  // uniform field, T
    double b = 0.0;   // linear gradient strength, T/m
};

// Static per-site frequency data. All omegas are angular (rad/s).
struct SiteFrequencies {
    double x0 = 0.0;          // trap center offset from the gradient axis, m
    double Bc = 0.0;          // effective static field at the trap center, T
    double omega_c0 = 0.0;    // cyclotron frequency at z = 0
    double omega_m0 = 0.0;    // magnetron frequency, omega_z^2 / (2 omega_c0)
    double omega_s0 = 0.0;    // spin precession frequency, g omega_c0 / 2
    double omega_z = 0.0;     // axial frequency
    double epsilon = 0.0;     // dimensionless spin-motion coupling
    double delta_z = 0.0;     // axial zero-point spread, m
    double dz_omega_s = 0.0;  // spin-frequency gradient g|e|b/(2 m_e), rad/s/m
};

// z-dependent radial eigenfrequencies at axial excursion z.
struct MotionalFrequencies {
    double omega_c = 0.0;       // local cyclotron frequency |e|(Bc + b z)/m_e
    double omega_ct = 0.0;      // sqrt(omega_c^2 - 2 omega_z^2)
    double omega_m = 0.0;       // magnetron, (omega_c - omega_ct)/2
    double omega_pc = 0.0;      // perturbed cyclotron, (omega_c + omega_ct)/2
};

// Field magnitude at a trap center offset x0 from the gradient axis:
// Bc = sqrt(B0^2 + b^2 x0^2 / 4).
double field_at_center(const MagneticConfig& cfg, double x0);

// Per-site frequencies for a trap at offset x0 with axial frequency omega_z.
// Throws PhysicsError when omega_c0^2 <= 2 omega_z^2 (unstable trap).
SiteFrequencies site_frequencies(const MagneticConfig& cfg, double x0, double omega_z,
                                 const PhysicalConstants& pc = codata2018());

// Radial eigenfrequencies at axial position z. Throws PhysicsError when the
// local field no longer supports stable radial motion.
MotionalFrequencies z_dependent_frequencies(const MagneticConfig& cfg, double x0,
                                            double omega_z, double z,
                                            const PhysicalConstants& pc = codata2018());

}  // namespace pentrap
