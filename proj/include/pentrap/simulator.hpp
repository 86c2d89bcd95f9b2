#pragma once

// Dense state-vector simulator for the spin register.
//
// Basis convention: bit i of the basis index holds spin i (little-endian),
// with 0 = |down> = logical |0> and 1 = |up> = logical |1>. Bitstrings are
// written with spin 0 as the leftmost character, so "10" on two spins is the
// index-1 basis state (spin 0 up, spin 1 down).
//
// A resonant pulse of area `angle` and phase `phase` acts on its target as
//   [ cos(a/2)              -i e^{+i phase} sin(a/2) ]
//   [ -i e^{-i phase} sin(a/2)            cos(a/2)   ]
// in the (|down>, |up>) basis. Free evolution for tau seconds multiplies each
// basis state by exp(-i (pi tau / 2) sum_{i>j} J_ij s_i s_j) with s = +1 for
// up and -1 for down; single-spin precession is absorbed into the rotating
// frames of the individual spins.

#include <complex>
#include <string>

#include <Eigen/Dense>

#include "pentrap/molecule.hpp"

namespace pentrap {

struct SpinState {
    int n_spins = 0;
    Eigen::VectorXcd amplitudes;

    // |bits> with bits[0] the state of spin 0 ('0' down, '1' up).
    static SpinState basis(const std::string& bits);
};

std::string bitstring_of_index(long index, int n_spins);

SpinState apply_pulse(const SpinState& state, int target, double angle, double phase);

SpinState free_evolution(const SpinState& state, const MoleculeSpec& mol, double tau);

// |Tr(U^dagger V)| / dim: 1 exactly when U and V agree up to a global phase.
double fidelity_up_to_global_phase(const Eigen::MatrixXcd& U, const Eigen::MatrixXcd& V);

}  // namespace pentrap
