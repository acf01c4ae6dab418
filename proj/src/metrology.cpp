#include "spinbit/metrology.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "spinbit/constants.hpp"
#include "spinbit/kinetics.hpp"

namespace spinbit {
namespace metrology {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double deg2rad(double d) { return d * kPi / 180.0; }
constexpr double rad2deg(double r) { return r * 180.0 / kPi; }
}  // namespace

// ---------------------------------------------------------------- statistics

Measurement average_sweeps(const std::vector<double>& samples) {
    const int n = static_cast<int>(samples.size());
    if (n < 2) throw std::invalid_argument("average_sweeps: needs at least two samples");
    // summation in sorted order makes the result permutation-invariant
    std::vector<double> sorted = samples;
    std::sort(sorted.begin(), sorted.end());
    const double mean = std::accumulate(sorted.begin(), sorted.end(), 0.0) / n;
    double ss = 0.0;
    for (double v : sorted) ss += (v - mean) * (v - mean);
    const double sample_sd = std::sqrt(ss / (n - 1));
    return {mean, sample_sd / std::sqrt(double(n)), n};
}

double propagate_sigma_m(double dm_dchi, double sigma_chi, double dm_dn, double sigma_n) {
    if (sigma_chi < 0.0 || sigma_n < 0.0)
        throw std::invalid_argument("propagate_sigma_m: sigmas must be non-negative");
    return std::hypot(dm_dchi * sigma_chi, dm_dn * sigma_n);
}

WorkBounds work_confidence_bounds(const std::vector<double>& m_path,
                                  const std::vector<double>& sigma_path,
                                  const std::vector<double>& h_path) {
    if (m_path.size() != h_path.size() || sigma_path.size() != h_path.size())
        throw std::invalid_argument("work_confidence_bounds: sample grids must align");
    if (h_path.size() < 2)
        throw std::invalid_argument("work_confidence_bounds: needs at least two samples");
    double work = 0.0;
    double spread = 0.0;
    for (std::size_t i = 1; i < h_path.size(); ++i) {
        const double dh = h_path[i] - h_path[i - 1];
        work += 0.5 * (m_path[i] + m_path[i - 1]) * dh;
        spread += 0.5 * (sigma_path[i] + sigma_path[i - 1]) * std::abs(dh);
    }
    return {work, work + spread, work - spread, spread};
}

double combined_sigma(double sigma_a, double sigma_b) { return std::hypot(sigma_a, sigma_b); }

// ---------------------------------------------------------- molecule counts

double molecule_count_mass(double mass_g, double molar_mass_g_per_mol) {
    if (!(mass_g > 0.0) || !(molar_mass_g_per_mol > 0.0))
        throw std::invalid_argument("molecule_count_mass: mass and molar mass must be positive");
    return mass_g / molar_mass_g_per_mol * constants.avogadro;
}

Measurement molecule_count_saturation(double m_sat_emu, double sigma_emu,
                                      double saturation_moment) {
    if (!(m_sat_emu > 0.0))
        throw std::invalid_argument("molecule_count_saturation: M_s must be positive");
    if (sigma_emu < 0.0)
        throw std::invalid_argument("molecule_count_saturation: sigma must be non-negative");
    const double per_molecule = saturation_moment * constants.bohr_magneton;  // emu
    return {m_sat_emu / per_molecule, sigma_emu / per_molecule, 1};
}

// ------------------------------------------------------- energy-time figures

double energy_time_cost(double work_erg, double tau_s) {
    if (work_erg < 0.0 || tau_s < 0.0)
        throw std::invalid_argument("energy_time_cost: work and tau must be non-negative");
    return work_erg * tau_s;
}

double quantum_speed_limit_tau(double delta_erg) {
    if (!(delta_erg > 0.0))
        throw std::invalid_argument("quantum_speed_limit_tau: energy scale must be positive");
    return kPi * constants.hbar / (2.0 * delta_erg);
}

double quantum_limit_product() { return kPi * constants.hbar / 2.0; }

DeviceEntry make_device(const std::string& name, double work_erg, double tau_s, double t_op_K) {
    return {name, work_erg, tau_s, t_op_K, work_erg * tau_s};
}

std::vector<DeviceEntry> default_device_chart() {
    // work/tau splits chosen to reproduce the quoted products; the quantum
    // limit row is the speed-limit time at the 1 K erasure energy scale
    std::vector<DeviceEntry> chart;
    chart.push_back(make_device("flip_flop", 1.0e-8, 1.0e-1, 300.0));
    chart.push_back(make_device("optical_trap", 2.871e-14, 3.483e1, 300.0));
    chart.push_back(make_device("GdFeCo", 5.0e-9, 2.0e-11, 300.0));
    chart.push_back(make_device("Fe8", 1.1828e-16, 1.96e-7, 1.0));
    const double w_landauer_1k = constants.k_boltzmann * std::log(2.0);
    chart.push_back(make_device("quantum_limit", w_landauer_1k,
                                quantum_speed_limit_tau(w_landauer_1k), 1.0));
    return chart;
}

std::vector<DeviceEntry> comparison_chart(std::vector<DeviceEntry> entries) {
    if (entries.empty()) throw std::invalid_argument("comparison_chart: no entries");
    for (const DeviceEntry& e : entries) {
        const double expected = e.work_erg * e.tau_s;
        const double scale = std::max(std::abs(expected), 1e-300);
        if (std::abs(e.product_erg_s - expected) > 1e-12 * scale)
            throw std::invalid_argument("comparison_chart: product does not match W*tau for " +
                                        e.name);
    }
    std::stable_sort(entries.begin(), entries.end(),
                     [](const DeviceEntry& a, const DeviceEntry& b) {
                         return a.product_erg_s < b.product_erg_s;
                     });
    return entries;
}

// ----------------------------------------------------------------- alignment

Eigen::Matrix3d CrystalOrientation::rotation() const {
    const Eigen::AngleAxisd rz1(deg2rad(alpha_deg), Eigen::Vector3d::UnitZ());
    const Eigen::AngleAxisd ry(deg2rad(beta_deg), Eigen::Vector3d::UnitY());
    const Eigen::AngleAxisd rz2(deg2rad(gamma_deg), Eigen::Vector3d::UnitZ());
    return (rz1 * ry * rz2).toRotationMatrix();
}

Eigen::Vector3d CrystalOrientation::easy_axis_lab() const { return rotation().col(2); }

CrystalOrientation CrystalOrientation::from_easy_axis(double theta_deg, double phi_deg,
                                                      double gamma_deg) {
    return {phi_deg, theta_deg, gamma_deg};
}

FieldVector lab_to_molecular(const Eigen::Vector3d& lab_field, const CrystalOrientation& o) {
    const Eigen::Vector3d mol = o.rotation().transpose() * lab_field;
    return {mol.x(), mol.y(), mol.z()};
}

Eigen::Vector3d molecular_to_lab(const FieldVector& mol_field, const CrystalOrientation& o) {
    return o.rotation() * Eigen::Vector3d(mol_field.bx, mol_field.by, mol_field.bz);
}

Eigen::Vector3d plane_direction(LabPlane plane, double angle_deg) {
    const double a = deg2rad(angle_deg);
    if (plane == LabPlane::xz) return {std::sin(a), 0.0, std::cos(a)};
    return {std::cos(a), std::sin(a), 0.0};
}

namespace {

// chi'_z at a list of in-plane angles; the relaxation barrier is evaluated
// with the easy-axis bias removed, matching the protocol's tau model.
std::vector<std::pair<double, double>> chi_at_angles(const SpinSystem& sys,
                                                     const CrystalOrientation& o,
                                                     LabPlane plane,
                                                     const std::vector<double>& angles,
                                                     const PlaneSweepSettings& s, Exec exec) {
    std::vector<FieldVector> fields, transverse;
    fields.reserve(angles.size());
    transverse.reserve(angles.size());
    for (double a : angles) {
        const FieldVector f = lab_to_molecular(s.field * plane_direction(plane, a), o);
        fields.push_back(f);
        transverse.push_back({f.bx, f.by, 0.0});
    }
    const std::vector<FieldPointData> data =
        sweep_field_points(sys, fields, s.temperature, s.splitting_threshold, exec);
    const std::vector<double> barriers =
        sweep_barriers(sys, transverse, s.splitting_threshold, exec);
    std::vector<std::pair<double, double>> out(angles.size());
    for (std::size_t i = 0; i < angles.size(); ++i) {
        const double tau = s.attempt_time * std::exp(barriers[i] / s.temperature);
        out[i] = {angles[i],
                  debye_susceptibility(data[i].chi_t_z, 0.0, tau, s.omega).chi_prime};
    }
    return out;
}

std::vector<double> smooth_circular(const std::vector<double>& v, int window) {
    if (window <= 1) return v;
    const int n = static_cast<int>(v.size());
    const int half = window / 2;
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) {
        double acc = 0.0;
        for (int k = -half; k <= half; ++k) acc += v[((i + k) % n + n) % n];
        out[i] = acc / (2 * half + 1);
    }
    return out;
}

}  // namespace

std::vector<std::pair<double, double>> sweep_plane_chi(const SpinSystem& sys,
                                                       const CrystalOrientation& o,
                                                       LabPlane plane,
                                                       const PlaneSweepSettings& settings,
                                                       Exec exec) {
    if (!(settings.field > 0.0))
        throw std::invalid_argument("sweep_plane_chi: field magnitude must be positive");
    const double step = settings.angular_step_deg;
    if (!(step > 0.0) || std::abs(360.0 / step - std::lround(360.0 / step)) > 1e-9)
        throw std::invalid_argument("sweep_plane_chi: angular step must divide 360 degrees");
    const int count = static_cast<int>(std::lround(360.0 / step));
    std::vector<double> angles(count);
    for (int i = 0; i < count; ++i) angles[i] = i * step;
    return chi_at_angles(sys, o, plane, angles, settings, exec);
}

std::vector<double> profile_maxima(const std::vector<std::pair<double, double>>& profile,
                                   int smoothing_window) {
    const int n = static_cast<int>(profile.size());
    if (n < 3) throw std::invalid_argument("profile_maxima: needs at least three samples");
    std::vector<double> values(n);
    for (int i = 0; i < n; ++i) values[i] = profile[i].second;
    const std::vector<double> smooth = smooth_circular(values, smoothing_window);
    std::vector<double> maxima;
    for (int i = 0; i < n; ++i) {
        const double prev = smooth[(i + n - 1) % n];
        const double next = smooth[(i + 1) % n];
        if (smooth[i] > prev && smooth[i] > next) maxima.push_back(profile[i].first);
    }
    return maxima;
}

EasyAxisResult find_easy_axis(const Eigen::Vector3d& v1, const Eigen::Vector3d& v2) {
    Eigen::Vector3d cross = v1.cross(v2);
    const double scale = v1.norm() * v2.norm();
    if (!(scale > 0.0) || cross.norm() < 1e-10 * scale)
        throw std::invalid_argument("find_easy_axis: hard-plane vectors are parallel");
    cross.normalize();
    if (cross.z() < 0.0) cross = -cross;  // report the upper-hemisphere representative
    EasyAxisResult r;
    r.unit = cross;
    r.theta_deg = rad2deg(std::acos(std::clamp(cross.z(), -1.0, 1.0)));
    r.phi_deg = rad2deg(std::atan2(cross.y(), cross.x()));
    if (r.phi_deg < 0.0) r.phi_deg += 360.0;
    return r;
}

namespace {

// Equilibrium easy-axis magnetization at a list of in-plane angles.
std::vector<double> m_z_at_angles(const SpinSystem& sys, const CrystalOrientation& o,
                                  LabPlane plane, const std::vector<double>& angles,
                                  const PlaneSweepSettings& s, Exec exec) {
    std::vector<FieldVector> fields;
    fields.reserve(angles.size());
    for (double a : angles)
        fields.push_back(lab_to_molecular(s.field * plane_direction(plane, a), o));
    const std::vector<FieldPointData> data =
        sweep_field_points(sys, fields, s.temperature, s.splitting_threshold, exec);
    std::vector<double> out(angles.size());
    for (std::size_t i = 0; i < angles.size(); ++i) out[i] = data[i].m_z_eq;
    return out;
}

}  // namespace

AxisRecovery recover_axes(const SpinSystem& sys, const CrystalOrientation& o,
                          const PlaneSweepSettings& settings, double fine_step_deg,
                          Exec exec) {
    const double coarse_step = 2.0;
    // below this many mu_B of modulation the plane is treated as degenerate
    // (easy axis perpendicular to it, every direction lies in the hard plane)
    const double degenerate_level = 1e-6;

    auto locate = [&](LabPlane plane) -> double {
        std::vector<double> coarse_angles;
        for (double a = 0.0; a < 360.0 - 1e-9; a += coarse_step) coarse_angles.push_back(a);
        const std::vector<double> coarse =
            m_z_at_angles(sys, o, plane, coarse_angles, settings, exec);

        double amplitude = 0.0;
        for (double m : coarse) amplitude = std::max(amplitude, std::abs(m));
        if (amplitude < degenerate_level) return -1.0;  // degenerate plane

        // rising sign change of m_z marks the crossing deterministically
        std::size_t seg = coarse.size();
        const std::size_t n = coarse.size();
        for (std::size_t i = 0; i < n; ++i) {
            if (coarse[i] < 0.0 && coarse[(i + 1) % n] >= 0.0) {
                seg = i;
                break;
            }
        }
        if (seg == n) return -1.0;  // no reversal resolved

        // fine rescan across the bracketing coarse cell
        const double lo = coarse_angles[seg];
        std::vector<double> fine_angles;
        for (double a = lo; a <= lo + coarse_step + 1e-9; a += fine_step_deg)
            fine_angles.push_back(a);
        const std::vector<double> fine =
            m_z_at_angles(sys, o, plane, fine_angles, settings, exec);
        for (std::size_t i = 0; i + 1 < fine.size(); ++i) {
            if (fine[i] < 0.0 && fine[i + 1] >= 0.0) {
                const double frac = fine[i] / (fine[i] - fine[i + 1]);
                double angle = fine_angles[i] + frac * fine_step_deg;
                if (angle >= 360.0) angle -= 360.0;
                return angle;
            }
        }
        return fine_angles.front();
    };

    double xz = locate(LabPlane::xz);
    double xy = locate(LabPlane::xy);
    // degenerate fallbacks: any in-plane direction is a hard-plane vector,
    // chosen to stay non-parallel with the other plane's vector
    if (xz < 0.0 && xy < 0.0) {
        xz = 90.0;  // lab X
        xy = 90.0;  // lab Y
    } else if (xz < 0.0) {
        // XZ candidates: 0 deg (lab Z) or 90 deg (lab X), away from the XY vector
        const Eigen::Vector3d v2 = plane_direction(LabPlane::xy, xy);
        xz = std::abs(v2.dot(Eigen::Vector3d::UnitX())) > 0.99 ? 0.0 : 90.0;
    } else if (xy < 0.0) {
        // XY candidates: 0 deg (lab X) or 90 deg (lab Y)
        const Eigen::Vector3d v1 = plane_direction(LabPlane::xz, xz);
        xy = std::abs(v1.dot(Eigen::Vector3d::UnitX())) > 0.99 ? 90.0 : 0.0;
    }

    AxisRecovery rec;
    rec.xz_crossing_deg = xz;
    rec.xy_crossing_deg = xy;
    rec.easy = find_easy_axis(plane_direction(LabPlane::xz, xz),
                              plane_direction(LabPlane::xy, xy));
    return rec;
}

// ---------------------------------------------------------- interference

InterferencePattern interference_pattern(const SpinSystem& sys, double hx_max, double step,
                                         Exec exec) {
    if (!(step > 0.0)) throw std::invalid_argument("interference_pattern: step must be positive");
    std::vector<FieldVector> fields;
    for (double hx = 0.0; hx <= hx_max + 1e-12; hx += step) fields.push_back({hx, 0.0, 0.0});
    const std::vector<double> splittings = sweep_ground_splittings(sys, fields, exec);

    InterferencePattern pattern;
    pattern.samples.reserve(fields.size());
    for (std::size_t i = 0; i < fields.size(); ++i)
        pattern.samples.emplace_back(fields[i].bx, splittings[i]);
    for (std::size_t i = 1; i + 1 < splittings.size(); ++i) {
        if (splittings[i] < splittings[i - 1] && splittings[i] < splittings[i + 1])
            pattern.minima_fields.push_back(fields[i].bx);
    }
    return pattern;
}

}  // namespace metrology
}  // namespace spinbit
