// constants.hpp — physical constants in CGS units (erg, gauss, kelvin, second)
#pragma once

namespace spinbit {

struct PhysicalConstants {
    double k_boltzmann = 1.380649e-16;  // erg/K
    double bohr_magneton = 9.274e-21;   // erg/G (equivalently emu)
    double hbar = 1.0546e-27;           // erg*s
    double avogadro = 6.02214e23;       // 1/mol
    double tesla_to_gauss = 1.0e4;      // G/T
};

inline constexpr PhysicalConstants constants{};

// Zeeman energy per tesla of field and per unit of m*g, in kelvin.
// For g = 2 this evaluates to 1.34343 K/T.
inline constexpr double zeeman_kelvin_per_tesla(double g_factor) {
    return g_factor * constants.bohr_magneton * constants.tesla_to_gauss / constants.k_boltzmann;
}

// mu_B expressed in K/T, the conversion between magnetization in mu_B units
// and energy derivatives with respect to field.
inline constexpr double mu_b_kelvin_per_tesla() {
    return constants.bohr_magneton * constants.tesla_to_gauss / constants.k_boltzmann;
}

}  // namespace spinbit
