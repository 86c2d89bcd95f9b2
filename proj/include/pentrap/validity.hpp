#pragma once

// Regime-validity bookkeeping: every approximation behind the effective
// spin-spin model is recorded as a named inequality with its measured ratio.

#include <string>
#include <vector>

#include "pentrap/constants.hpp"
#include "pentrap/molecule.hpp"

namespace pentrap {

struct DetectionConfig {
    double spin_shift_hz = 10.0;   // dip displacement per spin flip
    double dip_width_hz = 10.0;    // absorption linewidth of the dip
    double peak_width_hz = 1000.0; // tank-circuit peak width
};

// One inequality left << right (or left <= right for non-strict checks).
// ratio = left / right; pass is ratio < threshold, or ratio <= threshold
// when strict is false.
struct ValidityCheck {
    std::string name;
    double left = 0.0;
    double right = 0.0;
    double ratio = 0.0;
    double threshold = 0.0;
    bool strict = true;
    bool pass = false;
};

struct ValidityReport {
    std::vector<ValidityCheck> checks;
    bool all_pass = false;
};

// Evaluates every validity inequality for a built molecule driven with Rabi
// frequency chi (rad/s): gradient tilt b|x0|/2 vs B0, omega_z vs omega_c0,
// xi vs omega_z, J vs chi/2pi, drive field B_d = 2 m_e chi/(g|e|) vs b*d,
// detection feasibility, and the size of the next-order coupling correction.
// Pair-based entries use the worst pair. `threshold` is the strict-check
// threshold (default 0.1).
ValidityReport validity_report(const MagneticConfig& cfg, const MoleculeSpec& mol,
                               double chi, const DetectionConfig& det,
                               double threshold = 0.1,
                               const PhysicalConstants& pc = codata2018());

}  // namespace pentrap
