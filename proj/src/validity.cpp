#include "pentrap/validity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pentrap/constants.hpp"

namespace pentrap {

namespace {

ValidityCheck make_check(std::string name, double left, double right, double threshold,
                         bool strict) {
    ValidityCheck c;
    c.name = std::move(name);
    c.left = left;
    c.right = right;
    c.ratio = right != 0.0 ? left / right
                           : (left == 0.0 ? 0.0 : std::numeric_limits<double>::infinity());
    c.threshold = threshold;
    c.strict = strict;
    c.pass = strict ? c.ratio < threshold : c.ratio <= threshold;
    return c;
}

}  // namespace

ValidityReport validity_report(const MagneticConfig& cfg, const MoleculeSpec& mol,
                               double chi, const DetectionConfig& det, double threshold,
                               const PhysicalConstants& pc) {
    ValidityReport rep;
    const int n = mol.size();

    double x_max = 0.0;
    double omega_c0_min = std::numeric_limits<double>::infinity();
    for (const auto& s : mol.sites) {
        x_max = std::max(x_max, std::abs(s.x0));
        omega_c0_min = std::min(omega_c0_min, s.omega_c0);
    }

    rep.checks.push_back(
        make_check("gradient_tilt", 0.5 * cfg.b * x_max, cfg.B0, threshold, true));
    rep.checks.push_back(
        make_check("axial_vs_cyclotron", mol.omega_z, omega_c0_min, threshold, true));

    if (n >= 2) {
        double xi_max = 0.0, j_max = 0.0, d_min = std::numeric_limits<double>::infinity();
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                xi_max = std::max(xi_max, mol.xi(i, j));
                j_max = std::max(j_max, mol.J(i, j));
                d_min = std::min(d_min, std::abs(mol.layout.x[j] - mol.layout.x[i]));
            }
        }
        rep.checks.push_back(make_check("xi_vs_axial", xi_max, mol.omega_z, threshold, true));
        rep.checks.push_back(
            make_check("j_vs_rabi", j_max, chi / (2.0 * kPi), threshold, true));
        const double drive_field = 2.0 * pc.m_e * chi / (pc.g * pc.e);
        rep.checks.push_back(
            make_check("drive_vs_gradient", drive_field, cfg.b * d_min, threshold, true));
        // Next-order correction to J, of relative size (2 xi / (g omega_z))^2.
        const double corr = 4.0 * xi_max * xi_max /
                            (pc.g * pc.g * mol.omega_z * mol.omega_z);
        rep.checks.push_back(
            make_check("coupling_correction_vs_j", corr * j_max, j_max, threshold, true));
    }

    rep.checks.push_back(make_check("detection_dip_in_peak", det.dip_width_hz,
                                    det.peak_width_hz, threshold, true));
    // A one-spin-flip shift is resolvable when it is at least the dip width.
    rep.checks.push_back(make_check("detection_shift_resolvable", det.dip_width_hz,
                                    det.spin_shift_hz, 1.0, false));

    rep.all_pass = std::all_of(rep.checks.begin(), rep.checks.end(),
                               [](const ValidityCheck& c) { return c.pass; });
    return rep;
}

}  // namespace pentrap
