#include "pentrap/trap.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "pentrap/errors.hpp"

namespace pentrap {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_stack(const ElectrodeStack& stack) {
    if (stack.radii.empty() || stack.radii.size() != stack.voltages.size())
        throw ConfigError("electrode stack needs matching, non-empty radii and voltages");
    double prev = 0.0;
    for (double r : stack.radii) {
        if (!(r > prev))
            throw ConfigError("electrode radii must be positive and strictly increasing");
        prev = r;
    }
}

// Derivatives of f(z) = z / sqrt(z^2 + R^2). R = 0 gives f = 1 for z > 0.
struct TermDerivs {
    double f, f1, f2, f3, f4;
};

TermDerivs ring_term(double z, double R) {
    if (R == 0.0) return {1.0, 0.0, 0.0, 0.0, 0.0};
    const double q = z * z + R * R;
    const double s = std::sqrt(q);
    const double R2 = R * R;
    TermDerivs t;
    t.f = z / s;
    t.f1 = R2 / (q * s);
    t.f2 = -3.0 * R2 * z / (q * q * s);
    t.f3 = -3.0 * R2 * (R2 - 4.0 * z * z) / (q * q * q * s);
    t.f4 = -15.0 * R2 * z * (4.0 * z * z - 3.0 * R2) / (q * q * q * q * s);
    return t;
}

}  // namespace

double axial_potential(const ElectrodeStack& stack, double z) {
    check_stack(stack);
    if (!(z > 0.0)) throw std::domain_error("axial_potential requires z > 0");
    double phi = 0.0;
    double r_in = 0.0;
    for (std::size_t i = 0; i < stack.radii.size(); ++i) {
        const double inner = ring_term(z, r_in).f;
        const double outer = ring_term(z, stack.radii[i]).f;
        phi += stack.voltages[i] * (inner - outer);
        r_in = stack.radii[i];
    }
    return phi;
}

std::array<double, 5> axial_potential_derivatives(const ElectrodeStack& stack, double z) {
    check_stack(stack);
    if (!(z > 0.0)) throw std::domain_error("axial_potential_derivatives requires z > 0");
    std::array<double, 5> d{};
    double r_in = 0.0;
    for (std::size_t i = 0; i < stack.radii.size(); ++i) {
        const TermDerivs a = ring_term(z, r_in);
        const TermDerivs b = ring_term(z, stack.radii[i]);
        const double V = stack.voltages[i];
        d[0] += V * (a.f - b.f);
        d[1] += V * (a.f1 - b.f1);
        d[2] += V * (a.f2 - b.f2);
        d[3] += V * (a.f3 - b.f3);
        d[4] += V * (a.f4 - b.f4);
        r_in = stack.radii[i];
    }
    return d;
}

AxialWell find_well(const ElectrodeStack& stack, double z_lo, double z_hi,
                    const PhysicalConstants& pc) {
    check_stack(stack);
    if (!(z_lo > 0.0) || !(z_hi > z_lo))
        throw ConfigError("find_well requires 0 < z_lo < z_hi");

    const int n_grid = 8192;
    const double tol = 1e-12 * stack.radii.front();

    auto dphi = [&](double z) { return axial_potential_derivatives(stack, z)[1]; };

    // Bracket every sign change of phi' on the grid, then refine.
    std::vector<double> stationary;
    double z_prev = z_lo;
    double f_prev = dphi(z_prev);
    for (int k = 1; k <= n_grid; ++k) {
        const double z = z_lo + (z_hi - z_lo) * k / n_grid;
        const double f = dphi(z);
        if (f_prev == 0.0) {
            stationary.push_back(z_prev);
        } else if (f_prev * f < 0.0) {
            double lo = z_prev, hi = z, flo = f_prev;
            for (int it = 0; it < 200 && hi - lo > tol; ++it) {
                const double mid = 0.5 * (lo + hi);
                const double fm = dphi(mid);
                if (fm == 0.0) { lo = hi = mid; break; }
                if (flo * fm < 0.0) hi = mid;
                else { lo = mid; flo = fm; }
            }
            double root = 0.5 * (lo + hi);
            for (int it = 0; it < 20; ++it) {  // Newton polish inside the bracket
                const auto d = axial_potential_derivatives(stack, root);
                if (d[2] == 0.0) break;
                const double step = d[1] / d[2];
                const double next = root - step;
                if (!(next > z_prev) || !(next < z)) break;
                root = next;
                if (std::abs(step) < tol) break;
            }
            stationary.push_back(root);
        }
        z_prev = z;
        f_prev = f;
    }

    // Confining for an electron means U'' = -|e| phi'' > 0.
    AxialWell best;
    int found = 0;
    for (double z0 : stationary) {
        const auto d = axial_potential_derivatives(stack, z0);
        if (d[2] >= 0.0) continue;
        ++found;
        if (found == 1 || d[0] > axial_potential(stack, best.z0)) {
            best.z0 = z0;
            best.c2 = d[2] / 2.0;
            best.c3 = d[3] / 6.0;
            best.c4 = d[4] / 24.0;
            best.omega_z = std::sqrt(pc.e * std::abs(d[2]) / pc.m_e);
        }
    }
    if (found == 0)
        throw PhysicsError("no trap: no confining stationary point of the electron "
                           "potential energy in the search interval");
    best.ambiguous = found > 1;
    return best;
}

namespace {

struct Objective {
    const ElectrodeStack& base;
    const OptimizeOptions& opt;
    const PhysicalConstants& pc;
    double z_lo, z_hi;

    double operator()(const std::vector<double>& v) const {
        for (double x : v)
            if (!(x >= opt.v_lo) || !(x <= opt.v_hi)) return kInf;
        ElectrodeStack s = base;
        for (std::size_t k = 0; k < opt.tunable.size(); ++k)
            s.voltages[opt.tunable[k]] = v[k];
        try {
            const AxialWell w = find_well(s, z_lo, z_hi, pc);
            const double dz = 0.1 * w.z0;
            const double t3 = w.c3 * dz / w.c2;
            const double t4 = w.c4 * dz * dz / w.c2;
            const double f = opt.w3 * t3 * t3 + opt.w4 * t4 * t4;
            return std::isfinite(f) ? f : kInf;
        } catch (const PhysicsError&) {
            return kInf;
        }
    }
};

// Standard Nelder-Mead on k parameters; returns best vertex seen.
std::pair<std::vector<double>, double> nelder_mead(const Objective& f,
                                                   std::vector<std::vector<double>> simplex,
                                                   int max_iter) {
    const std::size_t k = simplex.front().size();
    std::vector<double> fv(simplex.size());
    for (std::size_t i = 0; i < simplex.size(); ++i) fv[i] = f(simplex[i]);

    auto order = [&]() {
        for (std::size_t i = 0; i < simplex.size(); ++i)
            for (std::size_t j = i + 1; j < simplex.size(); ++j)
                if (fv[j] < fv[i]) { std::swap(fv[i], fv[j]); std::swap(simplex[i], simplex[j]); }
    };
    order();

    for (int it = 0; it < max_iter; ++it) {
        if (std::isfinite(fv[0]) && std::isfinite(fv[k]) &&
            fv[k] - fv[0] <= 1e-14 * (1.0 + std::abs(fv[0])))
            break;
        std::vector<double> centroid(k, 0.0);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t d = 0; d < k; ++d) centroid[d] += simplex[i][d] / double(k);

        auto blend = [&](double c) {
            std::vector<double> p(k);
            for (std::size_t d = 0; d < k; ++d)
                p[d] = centroid[d] + c * (centroid[d] - simplex[k][d]);
            return p;
        };

        const auto refl = blend(1.0);
        const double f_refl = f(refl);
        if (f_refl < fv[0]) {
            const auto exp_ = blend(2.0);
            const double f_exp = f(exp_);
            if (f_exp < f_refl) { simplex[k] = exp_; fv[k] = f_exp; }
            else { simplex[k] = refl; fv[k] = f_refl; }
        } else if (f_refl < fv[k - 1]) {
            simplex[k] = refl; fv[k] = f_refl;
        } else {
            const auto con = blend(-0.5);
            const double f_con = f(con);
            if (f_con < fv[k]) { simplex[k] = con; fv[k] = f_con; }
            else {
                for (std::size_t i = 1; i <= k; ++i) {
                    for (std::size_t d = 0; d < k; ++d)
                        simplex[i][d] = simplex[0][d] + 0.5 * (simplex[i][d] - simplex[0][d]);
                    fv[i] = f(simplex[i]);
                }
            }
        }
        order();
    }
    return {simplex[0], fv[0]};
}

}  // namespace

double harmonicity_objective(const ElectrodeStack& stack, const OptimizeOptions& opt,
                             const PhysicalConstants& pc) {
    OptimizeOptions o = opt;
    if (o.z_lo <= 0.0) o.z_lo = 0.05 * stack.radii.front();
    if (o.z_hi <= 0.0) o.z_hi = 5.0 * stack.radii.back();
    const AxialWell w = find_well(stack, o.z_lo, o.z_hi, pc);
    const double dz = 0.1 * w.z0;
    const double t3 = w.c3 * dz / w.c2;
    const double t4 = w.c4 * dz * dz / w.c2;
    return o.w3 * t3 * t3 + o.w4 * t4 * t4;
}

OptimizeResult optimize_harmonicity(const ElectrodeStack& stack, const OptimizeOptions& opt,
                                    const PhysicalConstants& pc) {
    check_stack(stack);
    if (opt.tunable.empty())
        throw ConfigError("optimize_harmonicity needs at least one tunable voltage index");
    for (std::size_t idx : opt.tunable)
        if (idx >= stack.voltages.size())
            throw ConfigError("tunable voltage index out of range");
    if (!(opt.v_hi > opt.v_lo))
        throw ConfigError("voltage bounds must satisfy v_lo < v_hi");

    OptimizeOptions o = opt;
    if (o.z_lo <= 0.0) o.z_lo = 0.05 * stack.radii.front();
    if (o.z_hi <= 0.0) o.z_hi = 5.0 * stack.radii.back();
    const Objective f{stack, o, pc, o.z_lo, o.z_hi};

    const std::size_t k = o.tunable.size();
    std::vector<double> x0(k);
    for (std::size_t i = 0; i < k; ++i)
        x0[i] = std::clamp(stack.voltages[o.tunable[i]], o.v_lo, o.v_hi);
    double f0 = f(x0);

    if (!std::isfinite(f0)) {
        // Probe the bounds for any confining configuration before giving up.
        const int per_dim = k == 1 ? 64 : 8;
        bool ok = false;
        std::vector<double> probe(k);
        long total = 1;
        for (std::size_t i = 0; i < k && total < 4096; ++i) total *= per_dim;
        for (long c = 0; c < total && !ok; ++c) {
            long rem = c;
            for (std::size_t i = 0; i < k; ++i) {
                const int step = rem % per_dim;
                rem /= per_dim;
                probe[i] = o.v_lo + (o.v_hi - o.v_lo) * (step + 0.5) / per_dim;
            }
            if (std::isfinite(f(probe))) { ok = true; x0 = probe; f0 = f(probe); }
        }
        if (!ok)
            throw PhysicsError("optimize_harmonicity: no confining well anywhere "
                               "in the voltage bounds");
    }
    const double objective_initial = f0;

    auto make_simplex = [&](const std::vector<double>& center,
                            const std::vector<double>& steps) {
        std::vector<std::vector<double>> s{center};
        for (std::size_t i = 0; i < k; ++i) {
            auto v = center;
            v[i] += steps[i];
            if (v[i] > o.v_hi || v[i] < o.v_lo) v[i] = center[i] - steps[i];
            s.push_back(v);
        }
        return s;
    };

    std::vector<double> steps(k, 0.05 * (o.v_hi - o.v_lo));
    auto [best, f_best] = nelder_mead(f, make_simplex(x0, steps), o.max_iterations);

    // One restart from the incumbent with a reoriented simplex.
    std::mt19937 rng(o.seed);
    std::uniform_real_distribution<double> sgn(0.0, 1.0);
    std::vector<double> steps2(k);
    for (std::size_t i = 0; i < k; ++i)
        steps2[i] = (sgn(rng) < 0.5 ? -1.0 : 1.0) * 0.05 * (o.v_hi - o.v_lo);
    auto [best2, f_best2] = nelder_mead(f, make_simplex(best, steps2), o.max_iterations);
    if (f_best2 < f_best) { best = best2; f_best = f_best2; }

    // Monotone guarantee relative to the input point.
    if (f0 < f_best) { best = x0; f_best = f0; }

    OptimizeResult res;
    res.stack = stack;
    for (std::size_t i = 0; i < k; ++i) res.stack.voltages[o.tunable[i]] = best[i];
    res.well = find_well(res.stack, o.z_lo, o.z_hi, pc);
    res.objective_initial = objective_initial;
    res.objective_final = f_best;
    return res;
}

}  // namespace pentrap
