// metrology.hpp — measurement statistics, uncertainty propagation, molecule
// counting, energy-time figures of merit, and the crystal-axis alignment
// procedure built on angular susceptibility sweeps
#pragma once

#include <Eigen/Dense>
#include <string>
#include <utility>
#include <vector>

#include "spinbit/sweep.hpp"
#include "spinbit/types.hpp"

namespace spinbit {
namespace metrology {

// ---------------------------------------------------------------- statistics

struct Measurement {
    double mean = 0.0;
    double sigma = 0.0;  // standard deviation of the mean (sample SD / sqrt(n))
    int count = 0;
};

Measurement average_sweeps(const std::vector<double>& samples);

// sigma_M = sqrt((dM/dchi * sigma_chi)^2 + (dM/dN * sigma_N)^2)
double propagate_sigma_m(double dm_dchi, double sigma_chi, double dm_dn, double sigma_n);

// Loop integral of a sampled magnetization path with pointwise uncertainties.
// The +/- bounds shift the path by sigma along the traversal direction, so for
// a constant sigma the work uncertainty is sigma times the total |dH| length.
struct WorkBounds {
    double work = 0.0;
    double work_plus = 0.0;
    double work_minus = 0.0;
    double sigma = 0.0;
};

WorkBounds work_confidence_bounds(const std::vector<double>& m_path,
                                  const std::vector<double>& sigma_path,
                                  const std::vector<double>& h_path);

// Independent loop uncertainties combine in quadrature.
double combined_sigma(double sigma_a, double sigma_b);

// ---------------------------------------------------------- molecule counts

// N = m / P_m * N_A
double molecule_count_mass(double mass_g, double molar_mass_g_per_mol);

// N = M_s / (moment * mu_B), with M_s in emu (erg/G) and the per-molecule
// saturation moment in mu_B; sigma propagated linearly.
Measurement molecule_count_saturation(double m_sat_emu, double sigma_emu = 0.0,
                                      double saturation_moment = 20.0);

// ------------------------------------------------------- energy-time figures

double energy_time_cost(double work_erg, double tau_s);  // erg*s

// Minimal evolution time between orthogonal states at energy scale delta.
double quantum_speed_limit_tau(double delta_erg);  // seconds

// pi hbar / 2, the floor of the work-time product.
double quantum_limit_product();  // erg*s

struct DeviceEntry {
    std::string name;
    double work_erg = 0.0;
    double tau_s = 0.0;
    double t_op_K = 0.0;
    double product_erg_s = 0.0;
};

DeviceEntry make_device(const std::string& name, double work_erg, double tau_s, double t_op_K);

// Bundled comparison set; products are the authoritative quoted figures.
std::vector<DeviceEntry> default_device_chart();

// Entries sorted by ascending work-time product.
std::vector<DeviceEntry> comparison_chart(std::vector<DeviceEntry> entries);

// ----------------------------------------------------------------- alignment

// Rotation taking molecular (x hard, y medium, z easy) components into the
// lab (X, Y, Z) frame; intrinsic Z-Y-Z Euler angles in degrees.
struct CrystalOrientation {
    double alpha_deg = 0.0;
    double beta_deg = 0.0;
    double gamma_deg = 0.0;

    Eigen::Matrix3d rotation() const;      // molecular -> lab
    Eigen::Vector3d easy_axis_lab() const; // third column of rotation()

    // Orientation whose easy axis points at lab spherical angles (theta from
    // +Z, phi from +X); the in-plane angle gamma is free.
    static CrystalOrientation from_easy_axis(double theta_deg, double phi_deg,
                                             double gamma_deg = 0.0);
};

FieldVector lab_to_molecular(const Eigen::Vector3d& lab_field, const CrystalOrientation& o);
Eigen::Vector3d molecular_to_lab(const FieldVector& mol_field, const CrystalOrientation& o);

enum class LabPlane { xz, xy };

// In-plane field direction at `angle_deg`: XZ plane sweeps the polar angle
// theta at phi = 0, XY sweeps the azimuth phi at theta = 90 deg.
Eigen::Vector3d plane_direction(LabPlane plane, double angle_deg);

struct PlaneSweepSettings {
    double field = 0.1;           // tesla
    double temperature = 3.0;     // kelvin
    double omega = 2.0 * 3.14159265358979323846 * 1333.0;  // rad/s
    double angular_step_deg = 0.25;
    double splitting_threshold = 0.06;  // kelvin
    double attempt_time = 1.43e-8;      // seconds
    int smoothing_window = 3;             // samples, moving average before peak search
};

// chi'_z (easy-axis response through the Debye filter) versus in-plane angle
// over a full turn; maxima mark the crossings with the hard plane.
std::vector<std::pair<double, double>> sweep_plane_chi(const SpinSystem& sys,
                                                       const CrystalOrientation& o,
                                                       LabPlane plane,
                                                       const PlaneSweepSettings& settings,
                                                       Exec exec = default_exec());

// Strict three-point local maxima of a periodic profile after moving-average
// smoothing; returns angles.
std::vector<double> profile_maxima(const std::vector<std::pair<double, double>>& profile,
                                   int smoothing_window);

struct EasyAxisResult {
    double theta_deg = 0.0;
    double phi_deg = 0.0;
    Eigen::Vector3d unit = Eigen::Vector3d::Zero();
};

// Normalized cross product of two hard-plane vectors, reported as spherical
// angles with theta <= 90 deg.
EasyAxisResult find_easy_axis(const Eigen::Vector3d& v1, const Eigen::Vector3d& v2);

struct AxisRecovery {
    double xz_crossing_deg = 0.0;  // hard-plane crossing found in the XZ sweep
    double xy_crossing_deg = 0.0;  // same for the XY sweep
    EasyAxisResult easy;
};

// Full procedure: in each lab plane, locate the hard-plane crossing as the
// sign reversal of the equilibrium easy-axis magnetization along the sweep
// circle (the susceptibility maxima only track the crossings approximately in
// this model), coarse scan first, then a fine rescan at fine_step_deg with
// linear interpolation of the zero; the two crossing vectors combine by cross
// product. Planes the easy axis is perpendicular to are handled by falling
// back to a fixed in-plane direction, which the cross product tolerates.
AxisRecovery recover_axes(const SpinSystem& sys, const CrystalOrientation& o,
                          const PlaneSweepSettings& settings, double fine_step_deg = 0.1,
                          Exec exec = default_exec());

// ---------------------------------------------------------- interference

struct InterferencePattern {
    std::vector<std::pair<double, double>> samples;  // (H_x tesla, ground splitting kelvin)
    std::vector<double> minima_fields;               // tesla
};

// Ground tunnel splitting versus hard-axis field, with three-point minima.
InterferencePattern interference_pattern(const SpinSystem& sys, double hx_max, double step,
                                         Exec exec = default_exec());

}  // namespace metrology
}  // namespace spinbit
