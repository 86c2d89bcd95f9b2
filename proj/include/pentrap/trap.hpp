#pragma once

// On-axis electrostatics of a planar multi-ring trap: the potential of a
// stack of concentric flat electrodes, well location, and voltage tuning for
// harmonicity.

#include <array>
#include <cstdint>
#include <vector>

#include "pentrap/constants.hpp"

namespace pentrap {

// Concentric disc (first entry) plus annular electrodes on a grounded plane.
// radii[i] is the outer radius of electrode i, in meters, strictly increasing;
// voltages[i] is its potential in volts.
struct ElectrodeStack {
    std::vector<double> radii;
    std::vector<double> voltages;
};

// A confining axial well of the electron potential energy U(z) = -|e| phi(z).
// c2, c3, c4 are the Taylor coefficients of phi about z0 (phi''/2, phi'''/6,
// phi''''/24), in V/m^2, V/m^3, V/m^4.
struct AxialWell {
    double z0 = 0.0;        // well center, m
    double c2 = 0.0;
    double c3 = 0.0;
    double c4 = 0.0;
    double omega_z = 0.0;   // axial angular frequency, rad/s
    bool ambiguous = false; // more than one confining well was found
};

// Electrostatic potential on the symmetry axis at height z > 0, volts.
// Each electrode contributes V_i [ z/sqrt(z^2+R_{i-1}^2) - z/sqrt(z^2+R_i^2) ]
// with R_0 = 0.
double axial_potential(const ElectrodeStack& stack, double z);

// phi and its first four z-derivatives at z > 0, from the closed-form
// derivatives of the electrode terms. Returns {phi, phi', phi'', phi''', phi''''}.
std::array<double, 5> axial_potential_derivatives(const ElectrodeStack& stack, double z);

// Locates stationary points of U(z) = -|e| phi(z) inside (z_lo, z_hi) by a
// sign-change scan of phi' with bracketed bisection and Newton polish
// (position tolerance 1e-12 * R_1), and returns the confining one (U'' > 0).
// If several confine, returns the deepest (largest phi) and sets `ambiguous`.
// Throws PhysicsError if no confining stationary point exists in the interval.
AxialWell find_well(const ElectrodeStack& stack, double z_lo, double z_hi,
                    const PhysicalConstants& pc = codata2018());

struct OptimizeOptions {
    std::vector<std::size_t> tunable;  // indices into stack.voltages
    double v_lo = -40.0;               // common bounds for tunable voltages, V
    double v_hi = 40.0;
    double z_lo = 0.0;                 // well search interval; defaults derived
    double z_hi = 0.0;                 //   from the radii when left at zero
    double w3 = 1.0;                   // weights of the two anharmonicity terms
    double w4 = 1.0;
    int max_iterations = 500;
    std::uint32_t seed = 12345;        // orients the restart simplex
};

struct OptimizeResult {
    ElectrodeStack stack;
    AxialWell well;
    double objective_initial = 0.0;
    double objective_final = 0.0;
};

// Relative anharmonicity of the well over a probe length dz = 0.1 * z0:
//   w3 * (c3 dz / c2)^2 + w4 * (c4 dz^2 / c2)^2.
// Throws PhysicsError when the stack has no confining well in the interval.
double harmonicity_objective(const ElectrodeStack& stack, const OptimizeOptions& opt,
                             const PhysicalConstants& pc = codata2018());

// Minimizes harmonicity_objective over the tunable voltages with a
// deterministic Nelder-Mead direct search: fixed initial simplex (5% of the
// bounds span), capped iterations, one restart from the best point. Voltages
// outside the bounds and stacks without a confining well are rejected.
// Never returns an objective above the input stack's. Throws PhysicsError if
// no confining configuration exists at the probed points.
OptimizeResult optimize_harmonicity(const ElectrodeStack& stack, const OptimizeOptions& opt,
                                    const PhysicalConstants& pc = codata2018());

}  // namespace pentrap
