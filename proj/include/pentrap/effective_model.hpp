#pragma once

// Cross-check of the effective spin-spin coupling against exact
// diagonalization of the two-site spin-boson model it is derived from.

namespace pentrap {

// Dimensionless two-site model (omega_z sets the unit):
//   H = sum_i [ omega_z a_i^dag a_i + (splitting_i / 2) sigma_z,i
//               + (g/4) omega_z epsilon (a_i + a_i^dag) sigma_z,i ]
//       + xi (a_1 + a_1^dag)(a_2 + a_2^dag)
// Both spins commute with H, so each joint spin sector is diagonalized
// separately on a (2 n_max)^2-dimensional truncated Fock space.
struct EffectiveModelParams {
    double omega_z = 1.0;
    double xi = 0.01;
    double epsilon = 0.05;
    double g = 2.0;
    double splitting1 = 5.0;
    double splitting2 = 5.5;
    int n_max = 10;  // half the per-oscillator Fock cutoff; must be >= 6
};

struct ValidationResult {
    double J_measured = 0.0;   // (E_uu + E_dd - E_ud - E_du) / (2 pi hbar)
    double J_predicted = 0.0;  // g^2 xi epsilon^2 / (2 pi)
    double relative_error = 0.0;
    int n_max = 0;
    bool converged = false;    // J shifts by <= 1% when n_max -> n_max + 2
};

// Requires xi/omega_z <= 0.05, epsilon <= 0.2, n_max >= 6.
ValidationResult validate_effective_model(const EffectiveModelParams& p);

}  // namespace pentrap
