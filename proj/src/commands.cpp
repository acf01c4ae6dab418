#include "spinbit/commands.hpp"

#include <chrono>
#include <cmath>
#include <fstream>

#include "spinbit/csv.hpp"
#include "spinbit/kinetics.hpp"
#include "spinbit/metrology.hpp"
#include "spinbit/protocol.hpp"
#include "spinbit/statmech.hpp"
#include "spinbit/sweep.hpp"
#include "spinbit/version.hpp"

namespace spinbit {
namespace cli {

namespace {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void ensure_directory(const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw IoError("cannot create output directory " + dir.string());
}

std::string timestamp_utc() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::tm tm_utc{};
    gmtime_r(&t, &tm_utc);
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    return buf;
}

CommandResult finalize(const std::string& command, const RunConfig& config,
                       const std::filesystem::path& out_dir,
                       std::vector<std::filesystem::path> files) {
    CommandResult result;
    result.files = std::move(files);
    nlohmann::json manifest;
    manifest["command"] = command;
    manifest["version"] = kVersion;
    manifest["timestamp"] = timestamp_utc();
    manifest["config"] = to_json(config);
    manifest["files"] = nlohmann::json::array();
    for (const auto& f : result.files) {
        manifest["files"].push_back(
            {{"name", f.filename().string()}, {"fnv1a64", csv::fnv1a_hex(f)}});
    }
    result.manifest = manifest;
    result.manifest_path = out_dir / "manifest.json";
    const std::filesystem::path tmp = result.manifest_path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw IoError("cannot write " + tmp.string());
        out << manifest.dump(2) << "\n";
    }
    std::filesystem::rename(tmp, result.manifest_path);
    return result;
}

void write_json_record(const nlohmann::json& j, const std::filesystem::path& path) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw IoError("cannot write " + tmp.string());
        out << j.dump(2) << "\n";
    }
    std::filesystem::rename(tmp, path);
}

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> v(n);
    if (n == 1) {
        v[0] = lo;
        return v;
    }
    for (int i = 0; i < n; ++i) v[i] = lo + (hi - lo) * i / (n - 1);
    return v;
}

// Least-squares fit of log tau against 1/T; exact for Arrhenius data.
struct ArrheniusFit {
    double barrier;       // kelvin
    double attempt_time;  // seconds
    double r_squared;
};

ArrheniusFit fit_arrhenius(const std::vector<double>& inv_t, const std::vector<double>& log_tau) {
    const std::size_t n = inv_t.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sx += inv_t[i];
        sy += log_tau[i];
        sxx += inv_t[i] * inv_t[i];
        sxy += inv_t[i] * log_tau[i];
        syy += log_tau[i] * log_tau[i];
    }
    const double denom = n * sxx - sx * sx;
    const double slope = (n * sxy - sx * sy) / denom;
    const double intercept = (sy - slope * sx) / n;
    const double ss_tot = syy - sy * sy / n;
    double ss_res = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = log_tau[i] - (slope * inv_t[i] + intercept);
        ss_res += r * r;
    }
    return {slope, std::exp(intercept), ss_tot > 0 ? 1.0 - ss_res / ss_tot : 1.0};
}

}  // namespace

CommandResult cmd_spectrum(const RunConfig& config, const std::filesystem::path& out_dir) {
    ensure_directory(out_dir);
    const SpinSystem sys = config.spin_system();
    const std::vector<double> fields = linspace(0.0, config.spectrum.field_max,
                                                config.spectrum.points);
    std::vector<FieldVector> grid;
    grid.reserve(fields.size());
    for (double b : fields) {
        if (config.spectrum.axis == "y")
            grid.push_back({0.0, b, 0.0});
        else
            grid.push_back({0.0, 0.0, b});
    }
    const std::vector<Eigen::VectorXd> energies = sweep_energies(sys, grid);

    csv::Writer out(out_dir / "spectrum.csv", {"field_T", "level_index", "energy_K"});
    for (std::size_t i = 0; i < grid.size(); ++i)
        for (int k = 0; k < energies[i].size(); ++k)
            out.row({fields[i], static_cast<long long>(k), energies[i](k)});
    out.commit();
    return finalize("spectrum", config, out_dir, {out.path()});
}

CommandResult cmd_relaxation(const RunConfig& config, const std::filesystem::path& out_dir) {
    ensure_directory(out_dir);
    const SpinSystem sys = config.spin_system();
    const double temperature = config.environment.temperature;
    const double tau0 = config.kinetics.attempt_time;
    const double threshold = config.kinetics.splitting_threshold;

    std::vector<std::filesystem::path> files;

    // tau versus transverse field at the working temperature
    {
        const std::vector<double> hy =
            linspace(0.0, config.relaxation.hy_max, config.relaxation.points);
        std::vector<FieldVector> grid;
        grid.reserve(hy.size());
        for (double h : hy) grid.push_back({0.0, h, 0.0});
        const std::vector<double> barriers = sweep_barriers(sys, grid, threshold);

        csv::Writer out(out_dir / "relaxation_tau_vs_hy.csv",
                        {"hy_T", "u_eff_K", "tau_s"});
        for (std::size_t i = 0; i < hy.size(); ++i)
            out.row({hy[i], barriers[i], tau0 * std::exp(barriers[i] / temperature)});
        out.commit();
        files.push_back(out.path());
    }

    // per-field temperature scans (synthetic Debye data) and their fits
    csv::Writer fits(out_dir / "relaxation_fits.csv",
                     {"hy_T", "u_eff_K", "u_fit_K", "tau0_fit_s", "tau_fit_at_T_s",
                      "r_squared"});
    const double omega = config.omega();
    for (std::size_t fi = 0; fi < config.relaxation.arrhenius_fields.size(); ++fi) {
        const double hy = config.relaxation.arrhenius_fields[fi];
        const double barrier =
            effective_barrier_from_spectrum(sys, {0.0, hy, 0.0}, threshold);
        const std::vector<double> temps = linspace(
            config.relaxation.temp_min, config.relaxation.temp_max, config.relaxation.temp_points);

        csv::Writer out(out_dir / ("relaxation_arrhenius_" + std::to_string(fi) + ".csv"),
                        {"hy_T", "T_K", "inv_T_per_K", "chi_prime", "chi_double_prime",
                         "tau_ratio_s"});
        std::vector<double> inv_t, log_tau;
        for (double t : temps) {
            const double tau = tau0 * std::exp(barrier / t);
            const double chi_t =
                equilibrium_susceptibility(sys, {0.0, hy, 0.0}, t, Axis::z);
            const DebyeResponse debye = debye_susceptibility(chi_t, 0.0, tau, omega);
            const double tau_ratio =
                tau_from_chi_ratio(debye.chi_prime, debye.chi_double_prime, omega);
            out.row({hy, t, 1.0 / t, debye.chi_prime, debye.chi_double_prime, tau_ratio});
            inv_t.push_back(1.0 / t);
            log_tau.push_back(std::log(tau_ratio));
        }
        out.commit();
        files.push_back(out.path());

        const ArrheniusFit fit = fit_arrhenius(inv_t, log_tau);
        fits.row({hy, barrier, fit.barrier, fit.attempt_time,
                  fit.attempt_time * std::exp(fit.barrier / temperature), fit.r_squared});
    }
    fits.commit();
    files.push_back(fits.path());
    return finalize("relaxation", config, out_dir, std::move(files));
}

CommandResult cmd_protocol(const RunConfig& config, const std::filesystem::path& out_dir) {
    ensure_directory(out_dir);
    const SpinSystem sys = config.spin_system();
    const FieldSchedule schedule = config.field_schedule();
    const Trajectory traj =
        run_protocol(sys, schedule, config.schedule.initial_m_z, config.relaxation_model());
    const WorkBreakdown work = work_integrals(traj);

    std::vector<std::filesystem::path> files;
    {
        csv::Writer out(out_dir / "trajectory.csv",
                        {"time_s", "hy_T", "hz_T", "field_modulus_T", "m_z", "m_y", "m_z_eq",
                         "tau_s", "chi_prime_z", "chi_double_prime_z"});
        for (const TrajectoryPoint& p : traj.points)
            out.row({p.time, p.field.by, p.field.bz, p.field.norm(), p.m_z, p.m_y, p.m_z_eq,
                     p.tau, p.chi_prime_z, p.chi_double_prime_z});
        out.commit();
        files.push_back(out.path());
    }
    {
        csv::Writer out(out_dir / "mz_loop.csv", {"step", "hz_T", "m_z"});
        for (int seg : {1, 3}) {
            for (std::size_t i = traj.segment_first[seg]; i <= traj.segment_first[seg + 1]; ++i)
                out.row({static_cast<long long>(seg + 1), traj.points[i].field.bz,
                         traj.points[i].m_z});
        }
        out.commit();
        files.push_back(out.path());
    }
    {
        csv::Writer out(out_dir / "my_loop.csv", {"step", "hy_T", "m_y"});
        for (int seg : {0, 2}) {
            for (std::size_t i = traj.segment_first[seg]; i <= traj.segment_first[seg + 1]; ++i)
                out.row({static_cast<long long>(seg + 1), traj.points[i].field.by,
                         traj.points[i].m_y});
        }
        out.commit();
        files.push_back(out.path());
    }

    const double bound = landauer_bound(schedule.temperature);
    const nlohmann::json summary = {{"W1_erg", work.w1},
                                    {"W2_erg", work.w2},
                                    {"W3_erg", work.w3},
                                    {"W4_erg", work.w4},
                                    {"W13_erg", work.w13},
                                    {"W24_erg", work.w24},
                                    {"W_total_erg", work.total},
                                    {"landauer_bound_erg", bound},
                                    {"ratio_W_over_bound", work.total / bound},
                                    {"final_m_z", traj.points.back().m_z},
                                    {"temperature_K", schedule.temperature}};
    const std::filesystem::path summary_path = out_dir / "work_summary.json";
    write_json_record(summary, summary_path);
    files.push_back(summary_path);
    return finalize("protocol", config, out_dir, std::move(files));
}

CommandResult cmd_align(const RunConfig& config, const std::filesystem::path& out_dir) {
    ensure_directory(out_dir);
    const SpinSystem sys = config.spin_system();
    const metrology::CrystalOrientation orientation{config.alignment.euler_deg[0],
                                                    config.alignment.euler_deg[1],
                                                    config.alignment.euler_deg[2]};
    const metrology::PlaneSweepSettings settings = config.plane_sweep_settings();

    std::vector<std::filesystem::path> files;
    std::vector<std::vector<double>> profile_peaks;
    for (auto plane : {metrology::LabPlane::xz, metrology::LabPlane::xy}) {
        const auto profile = metrology::sweep_plane_chi(sys, orientation, plane, settings);
        profile_peaks.push_back(
            metrology::profile_maxima(profile, settings.smoothing_window));
        const bool is_xz = plane == metrology::LabPlane::xz;
        csv::Writer out(out_dir / (is_xz ? "align_sweep_xz.csv" : "align_sweep_xy.csv"),
                        {is_xz ? "theta_deg" : "phi_deg", "chi_prime_z"});
        for (const auto& [angle, chi] : profile) out.row({angle, chi});
        out.commit();
        files.push_back(out.path());
    }

    const metrology::AxisRecovery recovery =
        metrology::recover_axes(sys, orientation, settings, config.alignment.fine_step_deg);

    const metrology::InterferencePattern pattern = metrology::interference_pattern(
        sys, config.alignment.hard_axis_max, config.alignment.hard_axis_step);
    {
        csv::Writer out(out_dir / "align_interference.csv", {"hx_T", "ground_splitting_K"});
        for (const auto& [hx, delta] : pattern.samples) out.row({hx, delta});
        out.commit();
        files.push_back(out.path());
    }

    const Eigen::Vector3d true_easy = orientation.easy_axis_lab();
    nlohmann::json report = {
        {"xz_crossing_deg", recovery.xz_crossing_deg},
        {"xy_crossing_deg", recovery.xy_crossing_deg},
        {"easy_axis_theta_deg", recovery.easy.theta_deg},
        {"easy_axis_phi_deg", recovery.easy.phi_deg},
        {"true_easy_axis_lab", {true_easy.x(), true_easy.y(), true_easy.z()}},
        // smoothed chi' peaks of the emitted sweeps; they track the crossings
        // only approximately, the recovery above interpolates the M_z reversal
        {"xz_chi_maxima_deg", profile_peaks[0]},
        {"xy_chi_maxima_deg", profile_peaks[1]},
        {"resonance_fields_T", {resonance_field(sys, 1), resonance_field(sys, 2)}},
        {"interference_minima_T", pattern.minima_fields}};
    const std::filesystem::path report_path = out_dir / "axes_report.json";
    write_json_record(report, report_path);
    files.push_back(report_path);
    return finalize("align", config, out_dir, std::move(files));
}

CommandResult cmd_chart(const RunConfig& config, const std::filesystem::path& out_dir) {
    ensure_directory(out_dir);
    std::vector<metrology::DeviceEntry> entries;
    if (!config.chart.devices_file.empty()) {
        const csv::Table table = csv::read(config.chart.devices_file);
        const std::vector<std::string> expected = {"name", "W_erg", "tau_s", "T_op_K"};
        if (table.columns != expected)
            throw ConfigError("devices file must have columns name,W_erg,tau_s,T_op_K");
        for (const auto& row : table.rows)
            entries.push_back(metrology::make_device(row[0], std::stod(row[1]),
                                                     std::stod(row[2]), std::stod(row[3])));
    }
    if (entries.empty()) entries = metrology::default_device_chart();
    const std::vector<metrology::DeviceEntry> chart = metrology::comparison_chart(entries);

    csv::Writer out(out_dir / "chart.csv",
                    {"name", "W_erg", "tau_s", "T_op_K", "product_erg_s"});
    for (const auto& e : chart)
        out.row({e.name, e.work_erg, e.tau_s, e.t_op_K, e.product_erg_s});
    out.commit();
    return finalize("chart", config, out_dir, {out.path()});
}

CommandResult run_command(const std::string& name, const RunConfig& config,
                          const std::filesystem::path& out_dir) {
    if (name == "spectrum") return cmd_spectrum(config, out_dir);
    if (name == "relaxation") return cmd_relaxation(config, out_dir);
    if (name == "protocol") return cmd_protocol(config, out_dir);
    if (name == "align") return cmd_align(config, out_dir);
    if (name == "chart") return cmd_chart(config, out_dir);
    throw ConfigError("unknown command: " + name);
}

}  // namespace cli
}  // namespace spinbit
