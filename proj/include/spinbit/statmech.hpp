// statmech.hpp — equilibrium statistical mechanics over a spectrum:
// partition function, magnetization, susceptibility, free energy,
// and the Landauer bound
#pragma once

#include "spinbit/spectrum.hpp"
#include "spinbit/types.hpp"

namespace spinbit {

// Boltzmann sum with the ground state factored out: value = sum exp(-(E_i - E0)/T),
// so that F = ground_energy - T log(value) is exact and never underflows.
struct PartitionFunction {
    double value;
    double ground_energy;  // kelvin
};

PartitionFunction partition_function(const Spectrum& spec, double temperature);

// Helmholtz free energy in kelvin.
double free_energy(const Spectrum& spec, double temperature);

// Thermal magnetization along one molecular axis, in mu_B per molecule.
double magnetization(const Spectrum& spec, double temperature, Axis axis);
double equilibrium_magnetization(const SpinSystem& sys, const FieldVector& field,
                                 double temperature, Axis axis);

// Differential susceptibility dM/dB along one axis, in mu_B/(molecule*T).
// The defining implementation is a central finite difference of the
// magnetization with step chi_field_step(); susceptibility_from_spectrum is
// the spectral (Kubo) form that matches it to better than 1e-6 relative and
// needs only one diagonalization. The step keeps the O(dB^2) truncation and
// the cancellation noise both below 1e-6 of chi down to sub-kelvin
// temperatures.
inline constexpr double chi_field_step() { return 1e-5; }  // tesla

double equilibrium_susceptibility(const SpinSystem& sys, const FieldVector& field,
                                  double temperature, Axis axis);
double susceptibility_from_spectrum(const Spectrum& spec, double temperature, Axis axis);

// Variants taking a prebuilt spin-component matrix, for sweeps that reuse
// the operators across many field points.
double magnetization_given_operator(const Spectrum& spec, double temperature,
                                    const Eigen::MatrixXcd& s_axis);
double susceptibility_given_operator(const Spectrum& spec, double temperature,
                                     const Eigen::MatrixXcd& s_axis);

// Minimal erasure heat k_B T ln 2, in erg.
double landauer_bound(double temperature);

// One equilibrium state point; chi and M per axis.
struct ThermoPoint {
    double temperature = 0.0;
    FieldVector field;
    double m[3] = {0.0, 0.0, 0.0};      // mu_B per molecule
    double chi[3] = {0.0, 0.0, 0.0};    // mu_B/(molecule*T)
    double free_energy_K = 0.0;
};

ThermoPoint thermo_point(const SpinSystem& sys, const FieldVector& field, double temperature);

}  // namespace spinbit
