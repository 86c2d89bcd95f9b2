#pragma once

// Compiles logical gates into timed pulse schedules: resonant single-spin
// pulses plus free evolution under the always-on spin-spin couplings.

#include <cstdint>
#include <variant>
#include <vector>

#include "pentrap/molecule.hpp"
#include "pentrap/simulator.hpp"

namespace pentrap {

struct PulseEvent {
    int target = 0;
    double angle_rad = 0.0;  // non-negative pulse area
    double phase_rad = 0.0;
};

struct DelayEvent {
    double seconds = 0.0;  // non-negative
};

using ScheduleEvent = std::variant<PulseEvent, DelayEvent>;

struct PulseSchedule {
    MoleculeSpec molecule;
    std::vector<ScheduleEvent> events;

    double total_delay() const;
    int pulse_count() const;
};

// Validates targets and event parameters against the schedule's molecule.
void check_schedule(const PulseSchedule& schedule);

SpinState run_schedule(const SpinState& state, const PulseSchedule& schedule);

// Full unitary of the schedule, built column-by-column from basis states.
Eigen::MatrixXcd schedule_unitary(const PulseSchedule& schedule);

// Single-spin primitives. The pseudo-Hadamard is the (pi/2, -pi/2) pulse,
// exactly the real matrix {{1,-1},{1,1}}/sqrt(2); its inverse is (pi/2, pi/2).
PulseSchedule compile_pseudo_hadamard(const MoleculeSpec& mol, int j);
PulseSchedule compile_inverse_pseudo_hadamard(const MoleculeSpec& mol, int j);

// Composite (pi/2, 0), (angle, pi/2), (pi/2, pi): equals, exactly,
// diag(e^{-i angle/2}, e^{+i angle/2}) in the (|down>, |up>) basis.
PulseSchedule compile_z_rotation(const MoleculeSpec& mol, int j, double angle);

// Controlled-pi phase gate on spins i and j: delay 1/(4J), pi pulses on both,
// delay 1/(4J), then the three-pulse composite (pi/2,0), (pi/2,pi/2), (pi/2,0)
// on both spins. In this pulse convention the sequence equals
// e^{i pi/4} diag(1,1,1,-1) exactly, so no phase corrections are appended.
PulseSchedule compile_cz(const MoleculeSpec& mol, int i, int j);

// CNOT = inverse pseudo-Hadamard(target), CZ, pseudo-Hadamard(target).
PulseSchedule compile_cnot(const MoleculeSpec& mol, int control, int target);

// SWAP = CNOT(i,j) CNOT(j,i) CNOT(i,j).
PulseSchedule compile_swap(const MoleculeSpec& mol, int i, int j);

// Evolves the pair (i,j) under its own coupling for time tau while cancelling
// every other pairwise coupling, spectator-spectator included. Uses the sign
// rows of the Sylvester-Hadamard matrix of order M = smallest power of two
// >= N: spins i and j share the all-ones row, every other spin gets its own
// row, and a pi pulse is inserted wherever a row changes sign (plus a final
// one when the row ends at -1). Couplings below j_cutoff_hz are treated as
// zero, which drops the pulses on spins that are effectively uncoupled.
// With no spectators the schedule reduces to a bare delay of tau.
PulseSchedule refocus(const MoleculeSpec& mol, int i, int j, double tau,
                      double j_cutoff_hz = 0.0);

}  // namespace pentrap
