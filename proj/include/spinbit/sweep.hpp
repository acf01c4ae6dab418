// sweep.hpp — data-parallel kernels over field grids. Every kernel has a
// serial reference path and an OpenMP path selected by Exec; both produce
// bitwise-identical output (each grid point is computed independently and
// written by index), so results never depend on the thread count.
#pragma once

#include <Eigen/Dense>
#include <vector>

#include "spinbit/types.hpp"

namespace spinbit {

enum class Exec { serial, parallel };

// Parallel when compiled with OpenMP, serial otherwise.
Exec default_exec();

// Equilibrium and kinetic quantities at one field point, all obtainable
// from a single diagonalization.
struct FieldPointData {
    double m_z_eq = 0.0;     // mu_B per molecule
    double m_y_eq = 0.0;     // mu_B per molecule
    double chi_t_z = 0.0;    // mu_B/(molecule*T)
    double barrier = 0.0;    // kelvin, splitting-threshold rule
};

std::vector<FieldPointData> sweep_field_points(const SpinSystem& sys,
                                               const std::vector<FieldVector>& fields,
                                               double temperature,
                                               double splitting_threshold,
                                               Exec exec = default_exec());

// Effective barrier (splitting-threshold rule) at each field point;
// eigenvalues-only solves.
std::vector<double> sweep_barriers(const SpinSystem& sys,
                                   const std::vector<FieldVector>& fields,
                                   double splitting_threshold, Exec exec = default_exec());

// Sorted eigenvalues at each field point.
std::vector<Eigen::VectorXd> sweep_energies(const SpinSystem& sys,
                                            const std::vector<FieldVector>& fields,
                                            Exec exec = default_exec());

// Ground tunnel splitting at each field point.
std::vector<double> sweep_ground_splittings(const SpinSystem& sys,
                                            const std::vector<FieldVector>& fields,
                                            Exec exec = default_exec());

}  // namespace spinbit
