// hamiltonian.hpp — assembly of the giant-spin Hamiltonian, in kelvin
#pragma once

#include <Eigen/Dense>

#include "spinbit/types.hpp"

namespace spinbit {

// H = -D Sz^2 + E (Sx^2 - Sy^2) - g mu_B (Sx Bx + Sy By + Sz Bz) / k_B
Eigen::MatrixXcd build_hamiltonian(const SpinSystem& sys, const FieldVector& field);

// Caches the field-independent anisotropy part and the spin operators so
// sweeps over many fields pay the assembly cost once.
class HamiltonianModel {
  public:
    explicit HamiltonianModel(const SpinSystem& sys);

    Eigen::MatrixXcd at(const FieldVector& field) const;

    const SpinSystem& system() const { return sys_; }
    const Eigen::MatrixXcd& sx() const { return sx_; }
    const Eigen::MatrixXcd& sy() const { return sy_; }
    const Eigen::MatrixXcd& sz() const { return sz_; }

  private:
    SpinSystem sys_;
    Eigen::MatrixXcd anisotropy_;
    Eigen::MatrixXcd sx_, sy_, sz_;
};

}  // namespace spinbit
