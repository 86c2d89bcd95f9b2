#include <doctest.h>

#include <cmath>
#include <random>

#include "pentrap/errors.hpp"
#include "pentrap/fields.hpp"

#include "helpers.hpp"

using namespace pentrap;

namespace {
const MagneticConfig kField = testutil::canonical_field();  // 3.58 T, 50 T/m
constexpr double kOmegaZ = 2.0 * kPi * 1e7;
}  // namespace

TEST_CASE("field at a displaced trap center") {
    CHECK(field_at_center(kField, 0.0) == 3.58);
    CHECK(field_at_center(kField, 10e-3) ==
          doctest::Approx(3.588718434204612).epsilon(1e-14));
    // Even in the displacement.
    CHECK(field_at_center(kField, -10e-3) == field_at_center(kField, 10e-3));
    // A pure uniform field is displacement independent.
    CHECK(field_at_center({3.58, 0.0}, 25e-3) == 3.58);
}

TEST_CASE("on-axis site frequencies at the canonical operating point") {
    const SiteFrequencies s = site_frequencies(kField, 0.0, kOmegaZ);
    CHECK(s.omega_c0 / (2.0 * kPi) == doctest::Approx(100213113742.95226).epsilon(1e-12));
    CHECK(s.omega_m0 == doctest::Approx(kOmegaZ * kOmegaZ / (2.0 * s.omega_c0)).epsilon(1e-14));
    CHECK(s.omega_s0 == doctest::Approx(0.5 * codata2018().g * s.omega_c0).epsilon(1e-14));
    CHECK(s.delta_z == doctest::Approx(9.59817470342862e-07).epsilon(1e-12));
    CHECK(s.dz_omega_s == doctest::Approx(8804298151159.412).epsilon(1e-12));
    CHECK(s.epsilon == doctest::Approx(0.13449418991246426).epsilon(1e-12));
}

TEST_CASE("epsilon scales linearly in the gradient and as omega_z^(-3/2)") {
    const SiteFrequencies base = site_frequencies(kField, 0.0, kOmegaZ);
    const SiteFrequencies doubled = site_frequencies({3.58, 100.0}, 0.0, kOmegaZ);
    CHECK(doubled.epsilon == doctest::Approx(2.0 * base.epsilon).epsilon(1e-12));

    const SiteFrequencies stiff = site_frequencies(kField, 0.0, 4.0 * kOmegaZ);
    CHECK(stiff.epsilon == doctest::Approx(base.epsilon / 8.0).epsilon(1e-12));
}

TEST_CASE("radial eigenfrequency identities hold across random draws") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> b0(0.5, 7.0);
    std::uniform_real_distribution<double> grad(0.0, 300.0);
    std::uniform_real_distribution<double> x(-20e-3, 20e-3);
    std::uniform_real_distribution<double> fz(1e6, 5e7);
    std::uniform_real_distribution<double> zex(-50e-6, 50e-6);

    for (int trial = 0; trial < 1000; ++trial) {
        const MagneticConfig cfg{b0(rng), grad(rng)};
        const double omega_z = 2.0 * kPi * fz(rng);
        const MotionalFrequencies m =
            z_dependent_frequencies(cfg, x(rng), omega_z, zex(rng));

        const double lhs = m.omega_pc * m.omega_pc + m.omega_m * m.omega_m +
                           omega_z * omega_z;
        const double rhs = m.omega_c * m.omega_c;
        CHECK(std::abs(lhs - rhs) <= 1e-12 * rhs);

        // Sum and product of the radial roots. The product is dominated by
        // the rounding of omega_m = (omega_c - omega_ct)/2, whose absolute
        // error scales with omega_c, so its tolerance is set by omega_c^2.
        CHECK(std::abs(m.omega_pc + m.omega_m - m.omega_c) <= 1e-12 * m.omega_c);
        CHECK(std::abs(m.omega_pc * m.omega_m - 0.5 * omega_z * omega_z) <=
              50.0 * 2.3e-16 * m.omega_c * m.omega_c);
    }
}

TEST_CASE("cyclotron frequency shifts linearly along the gradient") {
    const double z = 20e-6;
    const MotionalFrequencies at0 = z_dependent_frequencies(kField, 0.0, kOmegaZ, 0.0);
    const MotionalFrequencies atz = z_dependent_frequencies(kField, 0.0, kOmegaZ, z);
    CHECK((atz.omega_c - at0.omega_c) / (2.0 * kPi) ==
          doctest::Approx(27992489.87233304).epsilon(1e-9));
    const PhysicalConstants& pc = codata2018();
    CHECK(atz.omega_c - at0.omega_c ==
          doctest::Approx(pc.e * kField.b * z / pc.m_e).epsilon(1e-12));
}

TEST_CASE("unstable operating points are rejected") {
    // Tiny field: the cyclotron motion cannot balance the axial well.
    CHECK_THROWS_AS(site_frequencies({1e-6, 0.0}, 0.0, kOmegaZ), PhysicsError);
    CHECK_THROWS_AS(z_dependent_frequencies({1e-6, 0.0}, 0.0, kOmegaZ, 0.0), PhysicsError);
    // Negative axial excursion deep enough to cancel the field.
    CHECK_THROWS_AS(z_dependent_frequencies({0.01, 50.0}, 0.0, kOmegaZ, -2.1e-4),
                    PhysicsError);
}

TEST_CASE("input validation of the frequency calculators") {
    CHECK_THROWS_AS(site_frequencies({0.0, 50.0}, 0.0, kOmegaZ), ConfigError);
    CHECK_THROWS_AS(site_frequencies({-1.0, 50.0}, 0.0, kOmegaZ), ConfigError);
    CHECK_THROWS_AS(site_frequencies(kField, 0.0, 0.0), ConfigError);
    CHECK_THROWS_AS(site_frequencies(kField, 0.0, -kOmegaZ), ConfigError);
    CHECK_THROWS_AS(z_dependent_frequencies(kField, 0.0, 0.0, 0.0), ConfigError);
}
