#include "spinbit/config.hpp"

#include <cmath>
#include <fstream>

namespace spinbit {
namespace cli {

namespace {
constexpr double kTwoPi = 2.0 * 3.14159265358979323846;
}

SpinSystem RunConfig::spin_system() const {
    return {system.spin, system.axial_anisotropy, system.rhombic_anisotropy, system.g_factor,
            system.label};
}

FieldSchedule RunConfig::field_schedule() const {
    return FieldSchedule::erasure_storage_cycle(schedule.hy_max, schedule.hz_max,
                                                schedule.durations, schedule.substeps,
                                                environment.temperature, omega());
}

RelaxationModel RunConfig::relaxation_model() const {
    RelaxationModel relax;
    relax.attempt_time = kinetics.attempt_time;
    relax.splitting_threshold = kinetics.splitting_threshold;
    relax.chi_s = kinetics.adiabatic_chi;
    return relax;
}

metrology::PlaneSweepSettings RunConfig::plane_sweep_settings() const {
    metrology::PlaneSweepSettings s;
    s.field = alignment.field;
    s.temperature = alignment.temperature;
    s.omega = kTwoPi * alignment.frequency_hz;
    s.angular_step_deg = alignment.angular_step_deg;
    s.splitting_threshold = kinetics.splitting_threshold;
    s.attempt_time = kinetics.attempt_time;
    s.smoothing_window = alignment.smoothing_window;
    return s;
}

double RunConfig::omega() const { return kTwoPi * environment.frequency_hz; }

void RunConfig::validate() const {
    try {
        spin_system().validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("system: ") + e.what());
    }
    if (!(environment.temperature > 0.0)) throw ConfigError("environment: temperature must be > 0");
    if (!(environment.frequency_hz > 0.0)) throw ConfigError("environment: frequency must be > 0");
    if (!(kinetics.attempt_time > 0.0)) throw ConfigError("kinetics: attempt time must be > 0");
    if (kinetics.activation_barrier < 0.0)
        throw ConfigError("kinetics: activation barrier must be >= 0");
    if (!(kinetics.splitting_threshold > 0.0))
        throw ConfigError("kinetics: splitting threshold must be > 0");
    if (kinetics.adiabatic_chi < 0.0) throw ConfigError("kinetics: adiabatic chi must be >= 0");
    for (double d : schedule.durations)
        if (!(d > 0.0)) throw ConfigError("schedule: durations must be > 0");
    if (schedule.substeps < 2) throw ConfigError("schedule: substeps must be >= 2");
    if (std::abs(schedule.initial_m_z) > system.g_factor * system.spin)
        throw ConfigError("schedule: |initial_m_z| exceeds saturation");
    if (spectrum.axis != "y" && spectrum.axis != "z")
        throw ConfigError("spectrum: axis must be 'y' or 'z'");
    if (spectrum.points < 1) throw ConfigError("spectrum: points must be >= 1");
    if (relaxation.points < 2) throw ConfigError("relaxation: points must be >= 2");
    if (relaxation.temp_points < 2) throw ConfigError("relaxation: temp_points must be >= 2");
    if (!(relaxation.temp_min > 0.0) || !(relaxation.temp_max > relaxation.temp_min))
        throw ConfigError("relaxation: temperature range is invalid");
    if (!(alignment.field > 0.0)) throw ConfigError("alignment: field must be > 0");
    if (!(alignment.temperature > 0.0)) throw ConfigError("alignment: temperature must be > 0");
    if (!(alignment.frequency_hz > 0.0)) throw ConfigError("alignment: frequency must be > 0");
    const double step = alignment.angular_step_deg;
    if (!(step > 0.0) || std::abs(360.0 / step - std::lround(360.0 / step)) > 1e-9)
        throw ConfigError("alignment: angular step must divide 360 degrees");
    if (!(alignment.fine_step_deg > 0.0)) throw ConfigError("alignment: fine step must be > 0");
    if (!(alignment.hard_axis_step > 0.0) || !(alignment.hard_axis_max > 0.0))
        throw ConfigError("alignment: hard-axis sweep parameters must be > 0");
    if (alignment.smoothing_window < 1 || alignment.smoothing_window % 2 == 0)
        throw ConfigError("alignment: smoothing window must be odd and >= 1");
    if (output.formats != std::vector<std::string>{"csv"})
        throw ConfigError("output: only the 'csv' format is supported");
    if (output.directory.empty()) throw ConfigError("output: directory must be set");
}

nlohmann::json to_json(const RunConfig& c) {
    return nlohmann::json{
        {"system",
         {{"spin", c.system.spin},
          {"axial_anisotropy_K", c.system.axial_anisotropy},
          {"rhombic_anisotropy_K", c.system.rhombic_anisotropy},
          {"g_factor", c.system.g_factor},
          {"label", c.system.label}}},
        {"environment",
         {{"temperature_K", c.environment.temperature},
          {"frequency_Hz", c.environment.frequency_hz}}},
        {"kinetics",
         {{"attempt_time_s", c.kinetics.attempt_time},
          {"activation_barrier_K", c.kinetics.activation_barrier},
          {"splitting_threshold_K", c.kinetics.splitting_threshold},
          {"adiabatic_chi", c.kinetics.adiabatic_chi}}},
        {"schedule",
         {{"hy_max_T", c.schedule.hy_max},
          {"hz_max_T", c.schedule.hz_max},
          {"durations_s", c.schedule.durations},
          {"substeps", c.schedule.substeps},
          {"initial_m_z", c.schedule.initial_m_z}}},
        {"spectrum",
         {{"axis", c.spectrum.axis},
          {"field_max_T", c.spectrum.field_max},
          {"points", c.spectrum.points}}},
        {"relaxation",
         {{"hy_max_T", c.relaxation.hy_max},
          {"points", c.relaxation.points},
          {"arrhenius_fields_T", c.relaxation.arrhenius_fields},
          {"temp_min_K", c.relaxation.temp_min},
          {"temp_max_K", c.relaxation.temp_max},
          {"temp_points", c.relaxation.temp_points}}},
        {"alignment",
         {{"euler_deg", c.alignment.euler_deg},
          {"field_T", c.alignment.field},
          {"temperature_K", c.alignment.temperature},
          {"frequency_Hz", c.alignment.frequency_hz},
          {"angular_step_deg", c.alignment.angular_step_deg},
          {"fine_step_deg", c.alignment.fine_step_deg},
          {"hard_axis_max_T", c.alignment.hard_axis_max},
          {"hard_axis_step_T", c.alignment.hard_axis_step},
          {"smoothing_window", c.alignment.smoothing_window}}},
        {"chart", {{"devices_file", c.chart.devices_file}}},
        {"output", {{"directory", c.output.directory}, {"formats", c.output.formats}}}};
}

namespace {

// Every key must be known; silent typos in a config are worse than an error.
void check_keys(const nlohmann::json& j, const std::string& where,
                const std::vector<std::string>& known) {
    for (const auto& item : j.items()) {
        if (std::find(known.begin(), known.end(), item.key()) == known.end())
            throw ConfigError("unknown key '" + item.key() + "' in " + where);
    }
}

template <typename T>
void fetch(const nlohmann::json& j, const char* key, T& out, const std::string& where) {
    if (!j.contains(key)) return;
    try {
        out = j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("bad value for " + where + "." + key + ": " + e.what());
    }
}

}  // namespace

RunConfig from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ConfigError("config root must be an object");
    check_keys(j, "config",
               {"system", "environment", "kinetics", "schedule", "spectrum", "relaxation",
                "alignment", "chart", "output"});
    RunConfig c;
    if (j.contains("system")) {
        const auto& s = j.at("system");
        check_keys(s, "system",
                   {"spin", "axial_anisotropy_K", "rhombic_anisotropy_K", "g_factor", "label"});
        fetch(s, "spin", c.system.spin, "system");
        fetch(s, "axial_anisotropy_K", c.system.axial_anisotropy, "system");
        fetch(s, "rhombic_anisotropy_K", c.system.rhombic_anisotropy, "system");
        fetch(s, "g_factor", c.system.g_factor, "system");
        fetch(s, "label", c.system.label, "system");
    }
    if (j.contains("environment")) {
        const auto& s = j.at("environment");
        check_keys(s, "environment", {"temperature_K", "frequency_Hz"});
        fetch(s, "temperature_K", c.environment.temperature, "environment");
        fetch(s, "frequency_Hz", c.environment.frequency_hz, "environment");
    }
    if (j.contains("kinetics")) {
        const auto& s = j.at("kinetics");
        check_keys(s, "kinetics",
                   {"attempt_time_s", "activation_barrier_K", "splitting_threshold_K",
                    "adiabatic_chi"});
        fetch(s, "attempt_time_s", c.kinetics.attempt_time, "kinetics");
        fetch(s, "activation_barrier_K", c.kinetics.activation_barrier, "kinetics");
        fetch(s, "splitting_threshold_K", c.kinetics.splitting_threshold, "kinetics");
        fetch(s, "adiabatic_chi", c.kinetics.adiabatic_chi, "kinetics");
    }
    if (j.contains("schedule")) {
        const auto& s = j.at("schedule");
        check_keys(s, "schedule",
                   {"hy_max_T", "hz_max_T", "durations_s", "substeps", "initial_m_z"});
        fetch(s, "hy_max_T", c.schedule.hy_max, "schedule");
        fetch(s, "hz_max_T", c.schedule.hz_max, "schedule");
        fetch(s, "durations_s", c.schedule.durations, "schedule");
        fetch(s, "substeps", c.schedule.substeps, "schedule");
        fetch(s, "initial_m_z", c.schedule.initial_m_z, "schedule");
    }
    if (j.contains("spectrum")) {
        const auto& s = j.at("spectrum");
        check_keys(s, "spectrum", {"axis", "field_max_T", "points"});
        fetch(s, "axis", c.spectrum.axis, "spectrum");
        fetch(s, "field_max_T", c.spectrum.field_max, "spectrum");
        fetch(s, "points", c.spectrum.points, "spectrum");
    }
    if (j.contains("relaxation")) {
        const auto& s = j.at("relaxation");
        check_keys(s, "relaxation",
                   {"hy_max_T", "points", "arrhenius_fields_T", "temp_min_K", "temp_max_K",
                    "temp_points"});
        fetch(s, "hy_max_T", c.relaxation.hy_max, "relaxation");
        fetch(s, "points", c.relaxation.points, "relaxation");
        fetch(s, "arrhenius_fields_T", c.relaxation.arrhenius_fields, "relaxation");
        fetch(s, "temp_min_K", c.relaxation.temp_min, "relaxation");
        fetch(s, "temp_max_K", c.relaxation.temp_max, "relaxation");
        fetch(s, "temp_points", c.relaxation.temp_points, "relaxation");
    }
    if (j.contains("alignment")) {
        const auto& s = j.at("alignment");
        check_keys(s, "alignment",
                   {"euler_deg", "field_T", "temperature_K", "frequency_Hz", "angular_step_deg",
                    "fine_step_deg", "hard_axis_max_T", "hard_axis_step_T", "smoothing_window"});
        fetch(s, "euler_deg", c.alignment.euler_deg, "alignment");
        fetch(s, "field_T", c.alignment.field, "alignment");
        fetch(s, "temperature_K", c.alignment.temperature, "alignment");
        fetch(s, "frequency_Hz", c.alignment.frequency_hz, "alignment");
        fetch(s, "angular_step_deg", c.alignment.angular_step_deg, "alignment");
        fetch(s, "fine_step_deg", c.alignment.fine_step_deg, "alignment");
        fetch(s, "hard_axis_max_T", c.alignment.hard_axis_max, "alignment");
        fetch(s, "hard_axis_step_T", c.alignment.hard_axis_step, "alignment");
        fetch(s, "smoothing_window", c.alignment.smoothing_window, "alignment");
    }
    if (j.contains("chart")) {
        const auto& s = j.at("chart");
        check_keys(s, "chart", {"devices_file"});
        fetch(s, "devices_file", c.chart.devices_file, "chart");
    }
    if (j.contains("output")) {
        const auto& s = j.at("output");
        check_keys(s, "output", {"directory", "formats"});
        fetch(s, "directory", c.output.directory, "output");
        fetch(s, "formats", c.output.formats, "output");
    }
    c.validate();
    return c;
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config: " + path.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("config parse error in " + path.string() + ": " + e.what());
    }
    return from_json(j);
}

void save_config(const RunConfig& config, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write config: " + path.string());
    out << to_json(config).dump(2) << "\n";
}

nlohmann::json apply_overrides(nlohmann::json j, const std::vector<std::string>& overrides) {
    for (const std::string& ov : overrides) {
        const std::size_t eq = ov.find('=');
        if (eq == std::string::npos || eq == 0)
            throw ConfigError("override must look like section.key=value: " + ov);
        const std::string path = ov.substr(0, eq);
        const std::string value = ov.substr(eq + 1);

        nlohmann::json parsed;
        try {
            parsed = nlohmann::json::parse(value);
        } catch (const nlohmann::json::exception&) {
            parsed = value;  // plain string
        }

        nlohmann::json* node = &j;
        std::size_t start = 0;
        while (true) {
            const std::size_t dot = path.find('.', start);
            const std::string key = path.substr(start, dot - start);
            if (key.empty()) throw ConfigError("bad override path: " + path);
            if (dot == std::string::npos) {
                (*node)[key] = parsed;
                break;
            }
            node = &(*node)[key];
            start = dot + 1;
        }
    }
    return j;
}

}  // namespace cli
}  // namespace spinbit
