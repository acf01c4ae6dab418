#include "spinbit/kinetics.hpp"

#include <cmath>

namespace spinbit {

double relaxation_time(const ArrheniusParams& p, double temperature) {
    p.validate();
    if (!(temperature > 0.0))
        throw std::invalid_argument("relaxation_time: temperature must be positive");
    return p.attempt_time * std::exp(p.barrier / temperature);
}

double effective_barrier_from_tau(double tau, double temperature, double attempt_time) {
    if (!(temperature > 0.0))
        throw std::invalid_argument("effective_barrier_from_tau: temperature must be positive");
    if (!(attempt_time > 0.0))
        throw std::invalid_argument("effective_barrier_from_tau: attempt time must be positive");
    if (tau < attempt_time)
        throw std::invalid_argument(
            "effective_barrier_from_tau: relaxation faster than the attempt time");
    return temperature * std::log(tau / attempt_time);
}

double effective_barrier_from_energies(const Eigen::VectorXd& energies,
                                       double splitting_threshold) {
    if (!(splitting_threshold > 0.0))
        throw std::invalid_argument(
            "effective_barrier_from_energies: splitting threshold must be positive");
    const int dim = static_cast<int>(energies.size());
    const double ground = energies(0);
    for (int n = 0; 2 * n + 1 < dim; ++n) {
        if (energies(2 * n + 1) - energies(2 * n) >= splitting_threshold)
            return energies(2 * n) - ground;
    }
    // no doublet opens a tunnel channel: classical barrier, top of the spectrum
    return energies(dim - 1) - ground;
}

double effective_barrier_from_spectrum(const Spectrum& spec, double splitting_threshold) {
    return effective_barrier_from_energies(spec.energies, splitting_threshold);
}

double effective_barrier_from_spectrum(const SpinSystem& sys, const FieldVector& field,
                                       double splitting_threshold) {
    return effective_barrier_from_spectrum(diagonalize(sys, field), splitting_threshold);
}

double tau_vs_transverse_field(const SpinSystem& sys, double temperature, double hy,
                               double splitting_threshold, double attempt_time) {
    const double barrier =
        effective_barrier_from_spectrum(sys, {0.0, hy, 0.0}, splitting_threshold);
    return relaxation_time({attempt_time, barrier}, temperature);
}

DebyeResponse debye_susceptibility(double chi_t, double chi_s, double tau, double omega) {
    if (chi_s < 0.0 || chi_t < chi_s)
        throw std::invalid_argument("debye_susceptibility: requires chi_T >= chi_S >= 0");
    if (tau < 0.0 || omega < 0.0)
        throw std::invalid_argument("debye_susceptibility: tau and omega must be non-negative");
    const double wt = omega * tau;
    const double denom = 1.0 + wt * wt;
    return {chi_s + (chi_t - chi_s) / denom, (chi_t - chi_s) * wt / denom, omega, tau};
}

double tau_from_chi_ratio(double chi_prime, double chi_double_prime, double omega) {
    if (!(chi_prime > 0.0))
        throw std::invalid_argument("tau_from_chi_ratio: chi' must be positive");
    if (!(omega > 0.0))
        throw std::invalid_argument("tau_from_chi_ratio: omega must be positive");
    return chi_double_prime / (omega * chi_prime);
}

double blocking_temperature(const ArrheniusParams& p, double omega) {
    p.validate();
    if (!(omega > 0.0))
        throw std::invalid_argument("blocking_temperature: omega must be positive");
    if (!(p.barrier > 0.0))
        throw std::invalid_argument("blocking_temperature: barrier must be positive");
    const double wt0 = omega * p.attempt_time;
    if (wt0 >= 1.0)
        throw std::domain_error(
            "blocking_temperature: relaxation is always faster than the drive");
    return p.barrier / std::log(1.0 / wt0);
}

}  // namespace spinbit
