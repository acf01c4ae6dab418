#include "spinbit/hamiltonian.hpp"

#include "spinbit/constants.hpp"
#include "spinbit/operators.hpp"

namespace spinbit {

HamiltonianModel::HamiltonianModel(const SpinSystem& sys) : sys_(sys) {
    sys_.validate();
    const SpinOperators op = spin_operators(sys_.spin);
    sx_ = op.sx;
    sy_ = op.sy;
    sz_ = op.sz;
    anisotropy_ = -sys_.axial_anisotropy * (op.sz * op.sz) +
                  sys_.rhombic_anisotropy * (op.sx * op.sx - op.sy * op.sy);
}

Eigen::MatrixXcd HamiltonianModel::at(const FieldVector& field) const {
    if (!field.finite())
        throw std::invalid_argument("HamiltonianModel: field components must be finite");
    const double zeeman = zeeman_kelvin_per_tesla(sys_.g_factor);
    Eigen::MatrixXcd h = anisotropy_;
    if (field.bx != 0.0) h.noalias() -= (zeeman * field.bx) * sx_;
    if (field.by != 0.0) h.noalias() -= (zeeman * field.by) * sy_;
    if (field.bz != 0.0) h.noalias() -= (zeeman * field.bz) * sz_;
    return h;
}

Eigen::MatrixXcd build_hamiltonian(const SpinSystem& sys, const FieldVector& field) {
    return HamiltonianModel(sys).at(field);
}

}  // namespace spinbit
