// protocol.hpp — relaxation dynamics along a field schedule and the loop
// work accounting of the erasure-storage cycle
#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "spinbit/schedule.hpp"
#include "spinbit/types.hpp"

namespace spinbit {

struct TrajectoryPoint {
    double time = 0.0;  // seconds
    FieldVector field;
    double m_z = 0.0;               // mu_B per molecule, relaxing state variable
    double m_y = 0.0;               // mu_B per molecule, instantaneous equilibrium
    double m_z_eq = 0.0;            // mu_B per molecule
    double tau = 0.0;               // seconds
    double chi_prime_z = 0.0;       // mu_B/(molecule*T)
    double chi_double_prime_z = 0.0;
};

struct Trajectory {
    std::vector<TrajectoryPoint> points;
    // segment_first[i] is the index of segment i's first point; points
    // segment_first[i] .. segment_first[i+1] span segment i (boundaries are
    // shared). segment_first.back() is the last point index.
    std::vector<std::size_t> segment_first;
    double temperature = 0.0;
    double omega = 0.0;
};

// How the longitudinal magnetization relaxes: tau(B) = tau0 exp(U_eff(B)/T)
// with the effective barrier from the splitting-threshold rule. The barrier
// is evaluated with the easy-axis component removed: transverse fields open
// tunneling channels, while the longitudinal bias only tilts the wells and
// must not register as a vanishing barrier. tau_override, when set, replaces
// the whole tau model (used by tests and what-if runs).
struct RelaxationModel {
    double attempt_time = 1.43e-8;      // seconds
    double splitting_threshold = 0.06;  // kelvin; see config for calibration
    double chi_s = 0.0;                 // adiabatic susceptibility
    std::function<double(const FieldVector&)> tau_override;
};

// Integrates dM_z/dt = -(M_z - M_eq(B(t)))/tau(B(t)) with the exact
// exponential update per substep, coefficients held at substep midpoints.
Trajectory run_protocol(const SpinSystem& sys, const FieldSchedule& schedule,
                        double initial_m_z, const RelaxationModel& relax);

// Per-step loop integrals in erg per molecule. Signs follow the loop-area
// convention: each W_i is taken with increasing-field orientation and the
// pairs combine as W13 = W3 - W1, W24 = W4 - W2 (see README).
struct WorkBreakdown {
    double w1 = 0.0, w2 = 0.0, w3 = 0.0, w4 = 0.0;
    double w13 = 0.0;
    double w24 = 0.0;
    double total = 0.0;
};

WorkBreakdown work_integrals(const Trajectory& traj);

// (field modulus, chi'_z) pairs in time order, for response-trace plots.
std::vector<std::pair<double, double>> chi_profile(const Trajectory& traj);

// Cumulative trapezoidal integral of chi'(H) giving M(H); H must be strictly
// monotone.
std::vector<std::pair<double, double>> magnetization_from_chi(
    const std::vector<std::pair<double, double>>& chi_samples, double m_start);

}  // namespace spinbit
