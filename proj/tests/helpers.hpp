#pragma once

// Shared fixtures for the unit tests: hand-assembled molecules with explicit
// J matrices (for simulator/compiler tests that need no field physics) and
// the canonical ten-site device used throughout.

#include <cmath>
#include <vector>

#include "pentrap/molecule.hpp"

namespace testutil {

// Molecule with given positions and a fully explicit J matrix (hertz).
// Site frequency entries stay empty; the simulator and compiler only read
// the layout size and J.
inline pentrap::MoleculeSpec make_molecule(const std::vector<double>& x,
                                           const Eigen::MatrixXd& J) {
    pentrap::MoleculeSpec mol;
    mol.layout.x = x;
    mol.omega_z = 2.0 * pentrap::kPi * 1e7;
    mol.sites.resize(x.size());
    mol.J = J;
    mol.xi = Eigen::MatrixXd::Zero(J.rows(), J.cols());
    return mol;
}

inline pentrap::MoleculeSpec two_site_molecule(double j_hz) {
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(2, 2);
    J(0, 1) = J(1, 0) = j_hz;
    return make_molecule({0.0, 1e-3}, J);
}

// The ten-site array at x = 0..9 mm in B0 = 3.58 T, b = 50 T/m with
// omega_z/2pi = 10 MHz.
inline pentrap::MagneticConfig canonical_field() { return {3.58, 50.0}; }

inline pentrap::MoleculeSpec canonical_molecule() {
    return pentrap::build_molecule(canonical_field(),
                                   pentrap::uniform_layout(1e-3, 10),
                                   2.0 * pentrap::kPi * 1e7);
}

inline bool close_rel(double a, double b, double rel) {
    return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b));
}

}  // namespace testutil
