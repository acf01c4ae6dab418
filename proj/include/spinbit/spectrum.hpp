// spectrum.hpp — eigen-decomposition of the spin Hamiltonian and derived
// quantities: tunnel splittings, parity blocks, resonance fields
#pragma once

#include <Eigen/Dense>
#include <vector>

#include "spinbit/hamiltonian.hpp"
#include "spinbit/types.hpp"

namespace spinbit {

// Full eigen-decomposition at one field point. Energies are in kelvin,
// sorted ascending; ties are broken by descending <Sz> so that "up" and
// "down" labels are deterministic. Column i of `states` is the unit
// eigenvector of energies[i], with its largest component made real positive.
struct Spectrum {
    Eigen::VectorXd energies;
    Eigen::MatrixXcd states;
    FieldVector field;
    SpinSystem system;

    int dimension() const { return static_cast<int>(energies.size()); }
};

Spectrum diagonalize(const SpinSystem& sys, const FieldVector& field);
Spectrum diagonalize(const HamiltonianModel& model, const FieldVector& field);

// Low-level Hermitian solve with the same ordering conventions; `sz` is the
// operator used for the degeneracy tie-break. Throws NumericalError when the
// reconstruction residual exceeds the contract (1e-9 * matrix scale).
void eigensolve(const Eigen::MatrixXcd& h, const Eigen::MatrixXcd& sz,
                Eigen::VectorXd& values, Eigen::MatrixXcd& vectors);

// Energy gap between levels 2n+1 and 2n (>= 0 by the sort order).
double tunnel_splitting(const Spectrum& spec, int pair_index);

// Decomposition by m-parity, valid only when the transverse field vanishes
// (the rhombic term couples m to m +- 2 and Sz preserves m, so even-m and
// odd-m states never mix). For integer S the even-m block has dimension S+1.
struct ParityBlocks {
    Eigen::MatrixXcd even;
    Eigen::MatrixXcd odd;
};

ParityBlocks parity_blocks(const SpinSystem& sys, const FieldVector& field);

// Sorted union of the two blocks' eigenvalues; equals the full spectrum.
std::vector<double> parity_block_energies(const SpinSystem& sys, const FieldVector& field);

// Ground tunnel splitting at zero transverse field computed from the parity
// blocks, the preferred route for tiny splittings.
double ground_splitting_blocked(const SpinSystem& sys, double bz = 0.0);

// Longitudinal field at which level m crosses level m - n: B_n = n D k_B / (g mu_B).
double resonance_field(const SpinSystem& sys, int n);

}  // namespace spinbit
