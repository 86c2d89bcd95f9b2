#pragma once

namespace pentrap {

inline constexpr double kPi = 3.14159265358979323846;

// CODATA 2018 values, SI units. g is the magnitude of the electron g-factor.
struct PhysicalConstants {
    double e    = 1.602176634e-19;    // elementary charge, C
    double m_e  = 9.1093837015e-31;   // electron mass, kg
    double hbar = 1.054571817e-34;    // reduced Planck constant, J s
    double eps0 = 8.8541878128e-12;   // vacuum permittivity, F/m
    double g    = 2.00231930436;      // electron g-factor magnitude
};

inline const PhysicalConstants& codata2018() {
    static const PhysicalConstants c{};
    return c;
}

}  // namespace pentrap
