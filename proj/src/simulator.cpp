#include "pentrap/simulator.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "pentrap/constants.hpp"
#include "pentrap/errors.hpp"

namespace pentrap {

namespace {

constexpr int kMaxSpins = 24;

void check_spin_count(int n) {
    if (n < 1 || n > kMaxSpins)
        throw ConfigError("spin count must be between 1 and " + std::to_string(kMaxSpins));
}

}  // namespace

SpinState SpinState::basis(const std::string& bits) {
    const int n = static_cast<int>(bits.size());
    check_spin_count(n);
    long index = 0;
    for (int i = 0; i < n; ++i) {
        if (bits[i] == '1') index |= 1L << i;
        else if (bits[i] != '0') throw ConfigError("bitstring must contain only 0 and 1");
    }
    SpinState s;
    s.n_spins = n;
    s.amplitudes = Eigen::VectorXcd::Zero(1L << n);
    s.amplitudes(index) = 1.0;
    return s;
}

std::string bitstring_of_index(long index, int n_spins) {
    check_spin_count(n_spins);
    std::string bits(n_spins, '0');
    for (int i = 0; i < n_spins; ++i)
        if (index >> i & 1) bits[i] = '1';
    return bits;
}

SpinState apply_pulse(const SpinState& state, int target, double angle, double phase) {
    if (target < 0 || target >= state.n_spins)
        throw ConfigError("pulse target " + std::to_string(target) + " out of range");
    const std::complex<double> i_unit(0.0, 1.0);
    const double c = std::cos(0.5 * angle);
    const double s = std::sin(0.5 * angle);
    const std::complex<double> m01 = -i_unit * std::exp(i_unit * phase) * s;
    const std::complex<double> m10 = -i_unit * std::exp(-i_unit * phase) * s;

    SpinState out = state;
    const long bit = 1L << target;
    const long dim = state.amplitudes.size();
    for (long k = 0; k < dim; ++k) {
        if (k & bit) continue;
        const auto a0 = state.amplitudes(k);
        const auto a1 = state.amplitudes(k | bit);
        out.amplitudes(k) = c * a0 + m01 * a1;
        out.amplitudes(k | bit) = m10 * a0 + c * a1;
    }
    return out;
}

SpinState free_evolution(const SpinState& state, const MoleculeSpec& mol, double tau) {
    if (state.n_spins != mol.size())
        throw ConfigError("state and molecule have different spin counts");
    if (tau < 0.0) throw ConfigError("free evolution time must be non-negative");

    const int n = state.n_spins;
    const std::complex<double> i_unit(0.0, 1.0);
    SpinState out = state;
    const long dim = state.amplitudes.size();
    std::vector<double> s(n);
    for (long k = 0; k < dim; ++k) {
        for (int i = 0; i < n; ++i) s[i] = (k >> i & 1) ? 1.0 : -1.0;
        double zz = 0.0;
        for (int i = 1; i < n; ++i)
            for (int j = 0; j < i; ++j) zz += mol.J(i, j) * s[i] * s[j];
        out.amplitudes(k) *= std::exp(-i_unit * (kPi * tau / 2.0) * zz);
    }
    return out;
}

double fidelity_up_to_global_phase(const Eigen::MatrixXcd& U, const Eigen::MatrixXcd& V) {
    if (U.rows() != V.rows() || U.cols() != V.cols() || U.rows() != U.cols())
        throw ConfigError("fidelity needs two square matrices of equal size");
    return std::abs((U.adjoint() * V).trace()) / static_cast<double>(U.rows());
}

}  // namespace pentrap
