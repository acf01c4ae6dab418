#include "spinbit/sweep.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <limits>

#include "spinbit/kinetics.hpp"
#include "spinbit/spectrum.hpp"
#include "spinbit/statmech.hpp"

namespace spinbit {

Exec default_exec() {
#ifdef _OPENMP
    return Exec::parallel;
#else
    return Exec::serial;
#endif
}

namespace {

// The dispatch point: the serial loop is the reference implementation, the
// OpenMP loop must match it bitwise.
template <typename Body>
void for_each_index(std::size_t n, Exec exec, const Body& body) {
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i)
            body(static_cast<std::size_t>(i));
    } else {
        for (std::size_t i = 0; i < n; ++i) body(i);
    }
}

}  // namespace

std::vector<FieldPointData> sweep_field_points(const SpinSystem& sys,
                                               const std::vector<FieldVector>& fields,
                                               double temperature,
                                               double splitting_threshold, Exec exec) {
    const HamiltonianModel model(sys);
    std::vector<FieldPointData> out(fields.size());
    for_each_index(fields.size(), exec, [&](std::size_t i) {
        const Spectrum spec = diagonalize(model, fields[i]);
        FieldPointData& p = out[i];
        p.m_z_eq = magnetization_given_operator(spec, temperature, model.sz());
        p.m_y_eq = magnetization_given_operator(spec, temperature, model.sy());
        p.chi_t_z = susceptibility_given_operator(spec, temperature, model.sz());
        p.barrier = effective_barrier_from_spectrum(spec, splitting_threshold);
    });
    return out;
}

std::vector<double> sweep_barriers(const SpinSystem& sys,
                                   const std::vector<FieldVector>& fields,
                                   double splitting_threshold, Exec exec) {
    const HamiltonianModel model(sys);
    std::vector<double> out(fields.size());
    for_each_index(fields.size(), exec, [&](std::size_t i) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(model.at(fields[i]),
                                                               Eigen::EigenvaluesOnly);
        if (solver.info() != Eigen::Success)
            throw NumericalError("sweep_barriers: solver did not converge",
                                 std::numeric_limits<double>::quiet_NaN());
        out[i] = effective_barrier_from_energies(solver.eigenvalues(), splitting_threshold);
    });
    return out;
}

std::vector<Eigen::VectorXd> sweep_energies(const SpinSystem& sys,
                                            const std::vector<FieldVector>& fields,
                                            Exec exec) {
    const HamiltonianModel model(sys);
    std::vector<Eigen::VectorXd> out(fields.size());
    for_each_index(fields.size(), exec, [&](std::size_t i) {
        out[i] = diagonalize(model, fields[i]).energies;
    });
    return out;
}

std::vector<double> sweep_ground_splittings(const SpinSystem& sys,
                                            const std::vector<FieldVector>& fields,
                                            Exec exec) {
    const HamiltonianModel model(sys);
    std::vector<double> out(fields.size());
    for_each_index(fields.size(), exec, [&](std::size_t i) {
        out[i] = tunnel_splitting(diagonalize(model, fields[i]), 0);
    });
    return out;
}

}  // namespace spinbit
