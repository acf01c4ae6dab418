// types.hpp — spin system parameters and magnetic field vectors
#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace spinbit {

// Giant-spin system: one collective spin with easy-axis (z) anisotropy,
// a rhombic term splitting the hard (x) and medium (y) axes, and an
// isotropic g-factor. Energies are kept in kelvin throughout.
struct SpinSystem {
    double spin = 10.0;                // total spin quantum number, half-integer
    double axial_anisotropy = 0.294;   // kelvin, > 0 (easy axis exists)
    double rhombic_anisotropy = 0.04;  // kelvin, 0 <= E < D/3
    double g_factor = 2.0;
    std::string label = "Fe8";

    int dimension() const { return static_cast<int>(std::lround(2.0 * spin)) + 1; }

    void validate() const {
        const double two_s = 2.0 * spin;
        if (spin < 0.5 || std::abs(two_s - std::lround(two_s)) > 1e-9)
            throw std::invalid_argument("SpinSystem: 2S must be a positive integer");
        if (!(axial_anisotropy > 0.0))
            throw std::invalid_argument("SpinSystem: axial anisotropy must be positive");
        if (rhombic_anisotropy < 0.0 || rhombic_anisotropy >= axial_anisotropy / 3.0)
            throw std::invalid_argument("SpinSystem: rhombic anisotropy must satisfy 0 <= E < D/3");
        if (!(g_factor > 0.0))
            throw std::invalid_argument("SpinSystem: g-factor must be positive");
    }
};

// Magnetic field in tesla, components in the molecular frame
// (x = hard, y = medium, z = easy).
struct FieldVector {
    double bx = 0.0;
    double by = 0.0;
    double bz = 0.0;

    double norm() const { return std::sqrt(bx * bx + by * by + bz * bz); }

    bool finite() const {
        return std::isfinite(bx) && std::isfinite(by) && std::isfinite(bz);
    }

    FieldVector operator+(const FieldVector& o) const { return {bx + o.bx, by + o.by, bz + o.bz}; }
    FieldVector operator-(const FieldVector& o) const { return {bx - o.bx, by - o.by, bz - o.bz}; }
    FieldVector operator*(double s) const { return {bx * s, by * s, bz * s}; }
};

enum class Axis { x, y, z };

inline FieldVector axis_unit(Axis a) {
    switch (a) {
        case Axis::x: return {1.0, 0.0, 0.0};
        case Axis::y: return {0.0, 1.0, 0.0};
        default: return {0.0, 0.0, 1.0};
    }
}

// Numerical failure (eigensolver breakdown and similar), carries the residual.
struct NumericalError : std::runtime_error {
    double residual;
    NumericalError(const std::string& what, double res)
        : std::runtime_error(what), residual(res) {}
};

}  // namespace spinbit
