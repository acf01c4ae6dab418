// simulate — command-line front end: spectrum | relaxation | protocol | align | chart
#include <cstdio>
#include <exception>
#include <fstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "spinbit/commands.hpp"
#include "spinbit/config.hpp"
#include "spinbit/types.hpp"
#include "spinbit/version.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitIo = 4;

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"molecular nanomagnet bit simulator"};
    app.set_version_flag("--version", spinbit::kVersion);

    std::string command;
    app.add_option("command", command, "one of: spectrum relaxation protocol align chart")
        ->required();
    std::string config_path;
    app.add_option("--config", config_path, "JSON config file (defaults used when omitted)");
    std::string out_dir = "out";
    app.add_option("--out", out_dir, "output directory");
    std::vector<std::string> overrides;
    app.add_option("--override", overrides, "section.key=value (repeatable)");

    CLI11_PARSE(app, argc, argv);

    try {
        nlohmann::json j = nlohmann::json::object();
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            if (!in) throw spinbit::cli::ConfigError("cannot open config: " + config_path);
            try {
                in >> j;
            } catch (const nlohmann::json::exception& e) {
                throw spinbit::cli::ConfigError("config parse error in " + config_path + ": " +
                                                e.what());
            }
        }
        j = spinbit::cli::apply_overrides(j, overrides);
        const spinbit::cli::RunConfig config = spinbit::cli::from_json(j);

        const spinbit::cli::CommandResult result =
            spinbit::cli::run_command(command, config, out_dir);
        for (const auto& f : result.files) std::printf("wrote %s\n", f.string().c_str());
        std::printf("wrote %s\n", result.manifest_path.string().c_str());
        return 0;
    } catch (const spinbit::cli::ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kExitConfig;
    } catch (const spinbit::NumericalError& e) {
        std::fprintf(stderr, "numerical failure: %s (residual %g)\n", e.what(), e.residual);
        return kExitNumerical;
    } catch (const std::filesystem::filesystem_error& e) {
        std::fprintf(stderr, "I/O error: %s\n", e.what());
        return kExitIo;
    } catch (const std::exception& e) {
        // writer failures carry "cannot open/write/rename" messages
        const std::string what = e.what();
        const bool io = what.find("cannot") != std::string::npos ||
                        what.find("write failed") != std::string::npos ||
                        what.find("rename failed") != std::string::npos;
        std::fprintf(stderr, "%s: %s\n", io ? "I/O error" : "error", what.c_str());
        return io ? kExitIo : kExitNumerical;
    }
}
