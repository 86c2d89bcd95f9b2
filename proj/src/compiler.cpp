#include "pentrap/compiler.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "pentrap/constants.hpp"
#include "pentrap/errors.hpp"

namespace pentrap {

double PulseSchedule::total_delay() const {
    double t = 0.0;
    for (const auto& ev : events)
        if (const auto* d = std::get_if<DelayEvent>(&ev)) t += d->seconds;
    return t;
}

int PulseSchedule::pulse_count() const {
    int n = 0;
    for (const auto& ev : events)
        if (std::holds_alternative<PulseEvent>(ev)) ++n;
    return n;
}

void check_schedule(const PulseSchedule& schedule) {
    const int n = schedule.molecule.size();
    if (n < 1) throw ConfigError("schedule has no molecule");
    for (const auto& ev : schedule.events) {
        if (const auto* p = std::get_if<PulseEvent>(&ev)) {
            if (p->target < 0 || p->target >= n)
                throw ConfigError("pulse target " + std::to_string(p->target) +
                                  " out of range for " + std::to_string(n) + " spins");
            if (!(p->angle_rad >= 0.0))
                throw ConfigError("pulse angle must be non-negative");
            if (!std::isfinite(p->phase_rad))
                throw ConfigError("pulse phase must be finite");
        } else {
            const auto& d = std::get<DelayEvent>(ev);
            if (!(d.seconds >= 0.0))
                throw ConfigError("delay must be non-negative");
        }
    }
}

SpinState run_schedule(const SpinState& state, const PulseSchedule& schedule) {
    check_schedule(schedule);
    if (state.n_spins != schedule.molecule.size())
        throw ConfigError("state spin count does not match the schedule's molecule");
    SpinState s = state;
    for (const auto& ev : schedule.events) {
        if (const auto* p = std::get_if<PulseEvent>(&ev))
            s = apply_pulse(s, p->target, p->angle_rad, p->phase_rad);
        else
            s = free_evolution(s, schedule.molecule, std::get<DelayEvent>(ev).seconds);
    }
    return s;
}

Eigen::MatrixXcd schedule_unitary(const PulseSchedule& schedule) {
    check_schedule(schedule);
    const int n = schedule.molecule.size();
    const long dim = 1L << n;
    Eigen::MatrixXcd U(dim, dim);
    for (long k = 0; k < dim; ++k) {
        SpinState col;
        col.n_spins = n;
        col.amplitudes = Eigen::VectorXcd::Zero(dim);
        col.amplitudes(k) = 1.0;
        U.col(k) = run_schedule(col, schedule).amplitudes;
    }
    return U;
}

namespace {

void check_site(const MoleculeSpec& mol, int j) {
    if (j < 0 || j >= mol.size())
        throw ConfigError("site index " + std::to_string(j) + " out of range");
}

void check_pair(const MoleculeSpec& mol, int i, int j) {
    check_site(mol, i);
    check_site(mol, j);
    if (i == j) throw ConfigError("gate needs two distinct sites");
}

void push_pulse(PulseSchedule& s, int target, double angle, double phase) {
    s.events.push_back(PulseEvent{target, angle, phase});
}

// The (pi/2,0), (pi/2,pi/2), (pi/2,0) composite closing the controlled-pi core.
void push_core_triple(PulseSchedule& s, int target) {
    push_pulse(s, target, kPi / 2.0, 0.0);
    push_pulse(s, target, kPi / 2.0, kPi / 2.0);
    push_pulse(s, target, kPi / 2.0, 0.0);
}

void append(PulseSchedule& dst, const PulseSchedule& src) {
    dst.events.insert(dst.events.end(), src.events.begin(), src.events.end());
}

}  // namespace

PulseSchedule compile_pseudo_hadamard(const MoleculeSpec& mol, int j) {
    check_site(mol, j);
    PulseSchedule s{mol, {}};
    push_pulse(s, j, kPi / 2.0, -kPi / 2.0);
    return s;
}

PulseSchedule compile_inverse_pseudo_hadamard(const MoleculeSpec& mol, int j) {
    check_site(mol, j);
    PulseSchedule s{mol, {}};
    push_pulse(s, j, kPi / 2.0, kPi / 2.0);
    return s;
}

PulseSchedule compile_z_rotation(const MoleculeSpec& mol, int j, double angle) {
    check_site(mol, j);
    if (!std::isfinite(angle)) throw ConfigError("z-rotation angle must be finite");
    // The composite is 4pi-periodic in the angle; fold into [0, 4pi).
    double a = std::fmod(angle, 4.0 * kPi);
    if (a < 0.0) a += 4.0 * kPi;
    PulseSchedule s{mol, {}};
    push_pulse(s, j, kPi / 2.0, 0.0);
    push_pulse(s, j, a, kPi / 2.0);
    push_pulse(s, j, kPi / 2.0, kPi);
    return s;
}

PulseSchedule compile_cz(const MoleculeSpec& mol, int i, int j) {
    check_pair(mol, i, j);
    const double J = mol.J(i, j);
    if (!(J > 0.0)) throw PhysicsError("uncoupled pair; route via SWAPs");
    const double quarter = 1.0 / (4.0 * J);
    PulseSchedule s{mol, {}};
    s.events.push_back(DelayEvent{quarter});
    push_pulse(s, i, kPi, 0.0);
    push_pulse(s, j, kPi, 0.0);
    s.events.push_back(DelayEvent{quarter});
    push_core_triple(s, i);
    push_core_triple(s, j);
    return s;
}

PulseSchedule compile_cnot(const MoleculeSpec& mol, int control, int target) {
    check_pair(mol, control, target);
    PulseSchedule s = compile_inverse_pseudo_hadamard(mol, target);
    append(s, compile_cz(mol, control, target));
    append(s, compile_pseudo_hadamard(mol, target));
    return s;
}

PulseSchedule compile_swap(const MoleculeSpec& mol, int i, int j) {
    check_pair(mol, i, j);
    PulseSchedule s = compile_cnot(mol, i, j);
    append(s, compile_cnot(mol, j, i));
    append(s, compile_cnot(mol, i, j));
    return s;
}

PulseSchedule refocus(const MoleculeSpec& mol, int i, int j, double tau,
                      double j_cutoff_hz) {
    check_pair(mol, i, j);
    if (!(tau > 0.0)) throw ConfigError("refocus time must be positive");
    if (j_cutoff_hz < 0.0) throw ConfigError("coupling cutoff must be non-negative");

    const int n = mol.size();
    int m = 1;
    while (m < n) m *= 2;

    // Row assignment: the pair shares the constant row 0; every spectator
    // whose couplings are not all below the cutoff gets its own row.
    std::vector<int> row(n, -1);
    row[i] = row[j] = 0;
    int next_row = 1;
    for (int s = 0; s < n; ++s) {
        if (s == i || s == j) continue;
        double j_max = 0.0;
        for (int u = 0; u < n; ++u)
            if (u != s) j_max = std::max(j_max, mol.J(s, u));
        if (j_max > 0.0 && j_max >= j_cutoff_hz) row[s] = next_row++;
    }

    auto sign = [](int r, int k) { return std::popcount(unsigned(r & k)) % 2 ? -1 : 1; };

    PulseSchedule sched{mol, {}};
    double pending = 0.0;  // accumulated delay, merged across pulse-free boundaries
    for (int slice = 0; slice < m; ++slice) {
        pending += tau / m;
        for (int s = 0; s < n; ++s) {
            if (row[s] <= 0) continue;  // pair spins and dropped spectators
            const bool last = slice == m - 1;
            const bool flip = last ? sign(row[s], slice) == -1
                                   : sign(row[s], slice + 1) != sign(row[s], slice);
            if (flip) {
                if (pending > 0.0) {
                    sched.events.push_back(DelayEvent{pending});
                    pending = 0.0;
                }
                push_pulse(sched, s, kPi, 0.0);
            }
        }
    }
    if (pending > 0.0) sched.events.push_back(DelayEvent{pending});
    return sched;
}

}  // namespace pentrap
