#include "spinbit/protocol.hpp"

#include <cmath>

#include "spinbit/kinetics.hpp"
#include "spinbit/sweep.hpp"

namespace spinbit {

namespace {

FieldVector lerp(const FieldVector& a, const FieldVector& b, double t) {
    return {a.bx + (b.bx - a.bx) * t, a.by + (b.by - a.by) * t, a.bz + (b.bz - a.bz) * t};
}

double component(const FieldVector& f, int axis) {
    return axis == 0 ? f.bx : (axis == 1 ? f.by : f.bz);
}

}  // namespace

Trajectory run_protocol(const SpinSystem& sys, const FieldSchedule& schedule,
                        double initial_m_z, const RelaxationModel& relax) {
    sys.validate();
    schedule.validate();
    const double m_max = sys.g_factor * sys.spin;
    if (std::abs(initial_m_z) > m_max)
        throw std::invalid_argument("run_protocol: |M0_z| exceeds the saturation moment");
    if (!(relax.attempt_time > 0.0))
        throw std::invalid_argument("run_protocol: attempt time must be positive");

    // grid: one point per substep boundary, boundaries shared across segments;
    // each substep's coefficients are held at its end point, so a vanishing
    // tau pins the state to the instantaneous equilibrium exactly
    std::vector<FieldVector> boundary_fields;
    std::vector<double> boundary_times;
    std::vector<double> substep_dt;
    Trajectory traj;
    traj.temperature = schedule.temperature;
    traj.omega = schedule.omega;

    boundary_fields.push_back(schedule.segments.front().start);
    boundary_times.push_back(0.0);
    double t0 = 0.0;
    for (const ScheduleSegment& seg : schedule.segments) {
        traj.segment_first.push_back(boundary_fields.size() - 1);
        const double dt = seg.duration / seg.substeps;
        for (int k = 0; k < seg.substeps; ++k) {
            substep_dt.push_back(dt);
            boundary_fields.push_back(lerp(seg.start, seg.end, double(k + 1) / seg.substeps));
            boundary_times.push_back(t0 + dt * (k + 1));
        }
        t0 += seg.duration;
    }
    traj.segment_first.push_back(boundary_fields.size() - 1);

    const double T = schedule.temperature;
    const std::vector<FieldPointData> at_boundary =
        sweep_field_points(sys, boundary_fields, T, relax.splitting_threshold);

    // the tunneling barrier sees only the transverse field components
    std::vector<double> tau(boundary_fields.size());
    if (relax.tau_override) {
        for (std::size_t i = 0; i < boundary_fields.size(); ++i)
            tau[i] = relax.tau_override(boundary_fields[i]);
    } else {
        std::vector<FieldVector> transverse(boundary_fields.size());
        for (std::size_t i = 0; i < boundary_fields.size(); ++i)
            transverse[i] = {boundary_fields[i].bx, boundary_fields[i].by, 0.0};
        const std::vector<double> barrier =
            sweep_barriers(sys, transverse, relax.splitting_threshold);
        for (std::size_t i = 0; i < boundary_fields.size(); ++i)
            tau[i] = relax.attempt_time * std::exp(barrier[i] / T);
    }

    traj.points.resize(boundary_fields.size());
    double m_z = initial_m_z;
    for (std::size_t i = 0; i < boundary_fields.size(); ++i) {
        const FieldPointData& p = at_boundary[i];
        if (i > 0) m_z = p.m_z_eq + (m_z - p.m_z_eq) * std::exp(-substep_dt[i - 1] / tau[i]);
        TrajectoryPoint& pt = traj.points[i];
        pt.time = boundary_times[i];
        pt.field = boundary_fields[i];
        pt.m_z = m_z;
        pt.m_y = p.m_y_eq;
        pt.m_z_eq = p.m_z_eq;
        pt.tau = tau[i];
        const DebyeResponse debye = debye_susceptibility(std::max(p.chi_t_z, relax.chi_s),
                                                         relax.chi_s, tau[i], schedule.omega);
        pt.chi_prime_z = debye.chi_prime;
        pt.chi_double_prime_z = debye.chi_double_prime;
    }
    return traj;
}

WorkBreakdown work_integrals(const Trajectory& traj) {
    if (traj.segment_first.size() != 5)
        throw std::invalid_argument("work_integrals: expects a four-step cycle");
    const FieldVector gap = traj.points.front().field - traj.points.back().field;
    if (gap.norm() > 1e-12)
        throw std::invalid_argument("work_integrals: field cycle is not closed");

    double w_step[4] = {0.0, 0.0, 0.0, 0.0};
    for (int s = 0; s < 4; ++s) {
        const std::size_t first = traj.segment_first[s];
        const std::size_t last = traj.segment_first[s + 1];
        for (int axis = 0; axis < 3; ++axis) {
            const double h_start = component(traj.points[first].field, axis);
            const double h_end = component(traj.points[last].field, axis);
            if (h_end == h_start) continue;
            if (axis == 0)
                throw std::invalid_argument(
                    "work_integrals: hard-axis ramps carry no tracked magnetization");
            const double orientation = (h_end > h_start) ? 1.0 : -1.0;
            double integral = 0.0;  // mu_B * tesla, along the traversal
            for (std::size_t i = first; i < last; ++i) {
                const TrajectoryPoint& a = traj.points[i];
                const TrajectoryPoint& b = traj.points[i + 1];
                const double ma = (axis == 1) ? a.m_y : a.m_z;
                const double mb = (axis == 1) ? b.m_y : b.m_z;
                integral += 0.5 * (ma + mb) * (component(b.field, axis) - component(a.field, axis));
            }
            w_step[s] += orientation * integral;
        }
    }

    const double erg_per_mub_tesla = constants.bohr_magneton * constants.tesla_to_gauss;
    WorkBreakdown w;
    w.w1 = w_step[0] * erg_per_mub_tesla;
    w.w2 = w_step[1] * erg_per_mub_tesla;
    w.w3 = w_step[2] * erg_per_mub_tesla;
    w.w4 = w_step[3] * erg_per_mub_tesla;
    w.w13 = w.w3 - w.w1;
    w.w24 = w.w4 - w.w2;
    w.total = w.w13 + w.w24;
    return w;
}

std::vector<std::pair<double, double>> chi_profile(const Trajectory& traj) {
    if (traj.points.empty())
        throw std::invalid_argument("chi_profile: empty trajectory");
    std::vector<std::pair<double, double>> out;
    out.reserve(traj.points.size());
    for (const TrajectoryPoint& p : traj.points)
        out.emplace_back(p.field.norm(), p.chi_prime_z);
    return out;
}

std::vector<std::pair<double, double>> magnetization_from_chi(
    const std::vector<std::pair<double, double>>& chi_samples, double m_start) {
    if (chi_samples.size() < 2)
        throw std::invalid_argument("magnetization_from_chi: needs at least two samples");
    const double dir = chi_samples[1].first - chi_samples[0].first;
    for (std::size_t i = 1; i < chi_samples.size(); ++i) {
        const double dh = chi_samples[i].first - chi_samples[i - 1].first;
        if (dh == 0.0 || (dh > 0.0) != (dir > 0.0))
            throw std::invalid_argument("magnetization_from_chi: field must be strictly monotone");
    }
    std::vector<std::pair<double, double>> out;
    out.reserve(chi_samples.size());
    double m = m_start;
    out.emplace_back(chi_samples[0].first, m);
    for (std::size_t i = 1; i < chi_samples.size(); ++i) {
        const double dh = chi_samples[i].first - chi_samples[i - 1].first;
        m += 0.5 * (chi_samples[i].second + chi_samples[i - 1].second) * dh;
        out.emplace_back(chi_samples[i].first, m);
    }
    return out;
}

}  // namespace spinbit
