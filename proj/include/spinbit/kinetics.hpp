// kinetics.hpp — thermally activated relaxation (Arrhenius) with a
// spectrum-derived effective barrier, and the single-relaxation-time
// (Debye) dynamic susceptibility
#pragma once

#include "spinbit/spectrum.hpp"
#include "spinbit/types.hpp"

namespace spinbit {

struct ArrheniusParams {
    double attempt_time = 1.43e-8;  // tau0, seconds
    double barrier = 26.75;         // U, kelvin

    void validate() const {
        if (!(attempt_time > 0.0))
            throw std::invalid_argument("ArrheniusParams: attempt time must be positive");
        if (barrier < 0.0)
            throw std::invalid_argument("ArrheniusParams: barrier must be non-negative");
    }
};

// tau = tau0 exp(U/T)
double relaxation_time(const ArrheniusParams& p, double temperature);

// Exact inverse: U = T log(tau/tau0). Requires tau >= tau0.
double effective_barrier_from_tau(double tau, double temperature, double attempt_time);

// Effective barrier from quantum tunneling: energy of the lowest doublet
// whose splitting reaches `splitting_threshold` above the ground level;
// falls back to the spectrum top when no doublet qualifies.
double effective_barrier_from_energies(const Eigen::VectorXd& energies,
                                       double splitting_threshold);
double effective_barrier_from_spectrum(const Spectrum& spec, double splitting_threshold);
double effective_barrier_from_spectrum(const SpinSystem& sys, const FieldVector& field,
                                       double splitting_threshold);

// tau(H_y) = tau0 exp(U_eff(H_y)/T) with the field applied along the medium axis.
double tau_vs_transverse_field(const SpinSystem& sys, double temperature, double hy,
                               double splitting_threshold, double attempt_time = 1.43e-8);

// chi(omega) = chi_S + (chi_T - chi_S)/(1 + i omega tau), split into components.
struct DebyeResponse {
    double chi_prime;
    double chi_double_prime;
    double omega;
    double tau;
};

DebyeResponse debye_susceptibility(double chi_t, double chi_s, double tau, double omega);

// tau = chi''/(omega chi'), exact inverse of the Debye form when chi_S = 0.
double tau_from_chi_ratio(double chi_prime, double chi_double_prime, double omega);

// Temperature where tau matches the drive period: T_b = U / log(1/(omega tau0)).
double blocking_temperature(const ArrheniusParams& p, double omega);

}  // namespace spinbit
