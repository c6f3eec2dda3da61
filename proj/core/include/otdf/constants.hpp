#pragma once

// CODATA 2018 values. Every formula in the library pulls constants from
// here so that unit conventions cannot drift between modules.
namespace otdf::constants {

inline constexpr double hbar = 1.054571817e-34;      // J s
inline constexpr double c = 299792458.0;             // m / s
inline constexpr double epsilon0 = 8.8541878128e-12; // F / m
inline constexpr double e0 = 1.602176634e-19;        // C
inline constexpr double amu = 1.66053906660e-27;     // kg

inline constexpr double pi = 3.141592653589793238462643383279502884;
inline constexpr double two_pi = 2.0 * pi;

// Spectroscopic energies are stored in 1/cm; angular frequency is
// 2*pi*c * (E in 1/cm) * 100.
inline constexpr double angular_freq_per_inverse_cm = two_pi * c * 100.0;

} // namespace otdf::constants
