#include "spinbit/statmech.hpp"

#include <cmath>

#include "spinbit/constants.hpp"
#include "spinbit/operators.hpp"

namespace spinbit {

namespace {

const Eigen::MatrixXcd& axis_operator(const SpinOperators& op, Axis axis) {
    switch (axis) {
        case Axis::x: return op.sx;
        case Axis::y: return op.sy;
        default: return op.sz;
    }
}

void require_positive_temperature(double temperature, const char* where) {
    if (!(temperature > 0.0))
        throw std::invalid_argument(std::string(where) + ": temperature must be positive");
}

Eigen::VectorXd boltzmann_weights(const Spectrum& spec, double temperature) {
    const double e0 = spec.energies(0);
    return ((spec.energies.array() - e0) / -temperature).exp().matrix();
}

}  // namespace

PartitionFunction partition_function(const Spectrum& spec, double temperature) {
    require_positive_temperature(temperature, "partition_function");
    const Eigen::VectorXd w = boltzmann_weights(spec, temperature);
    return {w.sum(), spec.energies(0)};
}

double free_energy(const Spectrum& spec, double temperature) {
    const PartitionFunction z = partition_function(spec, temperature);
    return z.ground_energy - temperature * std::log(z.value);
}

double magnetization_given_operator(const Spectrum& spec, double temperature,
                                    const Eigen::MatrixXcd& s_axis) {
    require_positive_temperature(temperature, "magnetization");
    const Eigen::VectorXd w = boltzmann_weights(spec, temperature);
    const int n = spec.dimension();
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
        const double exp_val = (spec.states.col(i).adjoint() * s_axis * spec.states.col(i))(0).real();
        acc += exp_val * w(i);
    }
    return spec.system.g_factor * acc / w.sum();
}

double magnetization(const Spectrum& spec, double temperature, Axis axis) {
    const SpinOperators op = spin_operators(spec.system.spin);
    return magnetization_given_operator(spec, temperature, axis_operator(op, axis));
}

double equilibrium_magnetization(const SpinSystem& sys, const FieldVector& field,
                                 double temperature, Axis axis) {
    return magnetization(diagonalize(sys, field), temperature, axis);
}

double susceptibility_given_operator(const Spectrum& spec, double temperature,
                                     const Eigen::MatrixXcd& s_axis) {
    require_positive_temperature(temperature, "susceptibility");
    const Eigen::VectorXd w = boltzmann_weights(spec, temperature);
    const double z = w.sum();
    const int n = spec.dimension();
    const double beta = 1.0 / temperature;
    const double g = spec.system.g_factor;

    // moment operator in the energy eigenbasis, mu_B units
    const Eigen::MatrixXcd m_eig = g * (spec.states.adjoint() * s_axis * spec.states);

    double mean_m = 0.0;
    double diag_sq = 0.0;
    for (int i = 0; i < n; ++i) {
        const double mii = m_eig(i, i).real();
        mean_m += mii * w(i);
        diag_sq += mii * mii * w(i);
    }
    mean_m /= z;
    diag_sq /= z;

    // off-diagonal (Van Vleck) part; (p_i - p_j)/(E_j - E_i) -> beta p_i as the
    // gap closes, handled smoothly via expm1
    double off = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double m2 = std::norm(m_eig(i, j));
            if (m2 == 0.0) continue;
            const double gap = spec.energies(j) - spec.energies(i);
            const double x = gap * beta;
            const double factor =
                (x > 1e-12) ? (w(i) / z) * (-std::expm1(-x) / gap) : beta * (w(i) / z);
            off += 2.0 * m2 * factor;
        }
    }

    const double chi_mu2_per_K = beta * (diag_sq - mean_m * mean_m) + off;
    return chi_mu2_per_K * mu_b_kelvin_per_tesla();
}

double susceptibility_from_spectrum(const Spectrum& spec, double temperature, Axis axis) {
    const SpinOperators op = spin_operators(spec.system.spin);
    return susceptibility_given_operator(spec, temperature, axis_operator(op, axis));
}

double equilibrium_susceptibility(const SpinSystem& sys, const FieldVector& field,
                                  double temperature, Axis axis) {
    require_positive_temperature(temperature, "equilibrium_susceptibility");
    const FieldVector step = axis_unit(axis) * chi_field_step();
    const double m_plus = equilibrium_magnetization(sys, field + step, temperature, axis);
    const double m_minus = equilibrium_magnetization(sys, field - step, temperature, axis);
    return (m_plus - m_minus) / (2.0 * chi_field_step());
}

double landauer_bound(double temperature) {
    if (temperature < 0.0)
        throw std::invalid_argument("landauer_bound: temperature must be non-negative");
    return constants.k_boltzmann * temperature * std::log(2.0);
}

ThermoPoint thermo_point(const SpinSystem& sys, const FieldVector& field, double temperature) {
    const Spectrum spec = diagonalize(sys, field);
    const SpinOperators op = spin_operators(sys.spin);
    ThermoPoint pt;
    pt.temperature = temperature;
    pt.field = field;
    pt.free_energy_K = free_energy(spec, temperature);
    const Eigen::MatrixXcd* ops[3] = {&op.sx, &op.sy, &op.sz};
    for (int a = 0; a < 3; ++a) {
        pt.m[a] = magnetization_given_operator(spec, temperature, *ops[a]);
        pt.chi[a] = susceptibility_given_operator(spec, temperature, *ops[a]);
    }
    return pt;
}

}  // namespace spinbit
