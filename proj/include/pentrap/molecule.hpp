#pragma once

// Builds the coupled-spin description of a linear array of single-electron
// traps: per-site frequencies, Coulomb-mediated coupling strengths, and the
// resulting spin-spin J matrix.

#include <vector>

#include <Eigen/Dense>

#include "pentrap/constants.hpp"
#include "pentrap/fields.hpp"

namespace pentrap {

// Site positions along the gradient axis, meters.
struct ArrayLayout {
    std::vector<double> x;
};

ArrayLayout uniform_layout(double spacing, int count);

struct MoleculeSpec {
    ArrayLayout layout;
    double omega_z = 0.0;                // shared axial frequency, rad/s
    std::vector<SiteFrequencies> sites;  // one entry per site
    Eigen::MatrixXd xi;                  // motional coupling, rad/s; zero diagonal
    Eigen::MatrixXd J;                   // spin-spin coupling, Hz; zero diagonal

    int size() const { return static_cast<int>(layout.x.size()); }
};

// Coulomb-mediated motional coupling of two traps a distance d apart:
// xi = e^2/(4 pi eps0 hbar d) * (delta_z / d)^2, rad/s.
double coupling_xi(double d, double delta_z, const PhysicalConstants& pc = codata2018());

// Effective spin-spin coupling J = g^2 xi epsilon^2 / (2 pi), hertz.
double j_coupling(double xi, double epsilon, double g);

// Spin precession frequency of a site at offset x0, quoted closed form:
// (g|e|B0 / 2 m_e) * (1 + b^2 x0^2 / (8 B0^2)), rad/s.
double spin_frequency_quoted(const MagneticConfig& cfg, double x0,
                             const PhysicalConstants& pc = codata2018());

// Static displacement of two trapped electrons' equilibria due to their
// Coulomb repulsion: e^2 / (4 pi eps0 d^2 m_e omega_c0^2), meters.
double equilibrium_shift(double d, double omega_c0,
                         const PhysicalConstants& pc = codata2018());

// Assembles the full spin-molecule description. Positions must be distinct.
MoleculeSpec build_molecule(const MagneticConfig& cfg, const ArrayLayout& layout,
                            double omega_z, const PhysicalConstants& pc = codata2018());

}  // namespace pentrap
