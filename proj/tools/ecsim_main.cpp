#include <cstdio>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "ecsim/config.hpp"
#include "ecsim/errors.hpp"
#include "ecsim/report.hpp"
#include "ecsim/scenarios.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;

struct Command {
    CLI::App* app = nullptr;
    ecsim::Scenario scenario;
    std::string config_path;
    std::map<std::string, std::string> values;
};

void print_report(const ecsim::RunReport& rep, const std::filesystem::path& out) {
    std::printf("%s: wrote %s\n", ecsim::to_string(rep.scenario), out.string().c_str());
    for (const auto& [k, v] : rep.scalars) std::printf("  %s = %.10g\n", k.c_str(), v);
    for (const auto& c : rep.checks) {
        std::printf("  [%s] %s = %.10g", c.pass ? "PASS" : "FAIL", c.name.c_str(), c.value);
        if (c.relation == "in")
            std::printf(" in [%.6g, %.6g]\n", c.threshold, c.upper);
        else
            std::printf(" %s %.6g\n", c.relation.c_str(), c.threshold);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-mode cavity QED simulator: entangled coherent states from a single atom"};
    app.require_subcommand(1);
    app.set_version_flag("--version", ecsim::tool_version());

    const std::pair<ecsim::Scenario, const char*> scenarios[] = {
        {ecsim::Scenario::validate, "Randomized checks of the quasi-mode transformation"},
        {ecsim::Scenario::zero_detuning, "Resonant cat preparation at half the revival time"},
        {ecsim::Scenario::large_detuning, "Dispersive preparation with an atomic measurement"},
        {ecsim::Scenario::adiabatic_sweep, "Adiabatic-elimination residual versus detuning"},
        {ecsim::Scenario::qfunc, "Husimi Q of quasi mode I at the preparation time"},
    };
    std::vector<Command> commands;
    commands.reserve(std::size(scenarios));
    for (const auto& [scenario, help] : scenarios) {
        Command& cmd = commands.emplace_back();
        cmd.scenario = scenario;
        cmd.app = app.add_subcommand(ecsim::to_string(scenario), help);
        cmd.app->add_option("--config", cmd.config_path, "flat key = value file; flags override it");
        for (const auto& p : ecsim::parameter_table()) {
            if (p.key == "scenario") continue;
            cmd.app->add_option(ecsim::flag_name(p.key), cmd.values[p.key], p.help);
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    for (const Command& cmd : commands) {
        if (!cmd.app->parsed()) continue;
        try {
            ecsim::ScenarioConfig cfg = ecsim::default_config(cmd.scenario);
            if (!cmd.config_path.empty()) {
                for (const auto& [k, v] : ecsim::read_config_file(cmd.config_path)) {
                    if (k == "scenario") {
                        if (ecsim::parse_scenario(v) != cmd.scenario) {
                            ecsim::fail(ecsim::ErrorCode::ConfigInvalid, "config file is for scenario " + v);
                        }
                        continue;
                    }
                    ecsim::set_parameter(cfg, k, v);
                }
            }
            // table order, so --dim comes before --dim1/--dim2 regardless of the command line
            for (const auto& p : ecsim::parameter_table()) {
                auto it = cmd.values.find(p.key);
                if (it == cmd.values.end()) continue;
                if (cmd.app->count(ecsim::flag_name(p.key)) > 0) ecsim::set_parameter(cfg, p.key, it->second);
            }
            const ecsim::RunReport rep = ecsim::run_scenario(cfg);
            ecsim::write_outputs(rep, cfg.out);
            print_report(rep, cfg.out);
            return rep.passed() ? kExitOk : kExitNumeric;
        } catch (const ecsim::Error& e) {
            std::cerr << "error [" << ecsim::to_string(e.code()) << "]: " << e.what() << "\n";
            return e.code() == ecsim::ErrorCode::ConfigInvalid ? kExitConfig : kExitNumeric;
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitNumeric;
        }
    }
    return kExitConfig;
}
