// SPDX-License-Identifier: Apache-2.0
//
// cipadc: frequency-response simulator for channel-interleaved photonic ADCs
// Copyright (C) 2026 The cipadc authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

// Command-line front end: load a scenario or preset, sweep it, write CSV.

#include "cipadc/errors.hpp"
#include "cipadc/report.hpp"
#include "cipadc/scenario.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

int main(int argc, char **argv)
{
    CLI::App app{"Stepped frequency response of channel-interleaved photonic ADCs"};
    app.set_version_flag("--version", "cipadc-sim 1.0.0");

    std::string scenario_path;
    std::string preset;
    std::string mode;
    std::string out_path;
    std::vector<double> sweep;
    bool list = false;

    auto *scenario_opt = app.add_option("--scenario", scenario_path, "Scenario JSON file");
    auto *preset_opt = app.add_option("--preset", preset, "Built-in preset name");
    scenario_opt->excludes(preset_opt);
    app.add_option("--mode", mode, "analytic | oracle | both (default: scenario value, else analytic)")
        ->check(CLI::IsMember({"analytic", "oracle", "both"}));
    app.add_option("--out", out_path, "CSV output path (default: stdout)");
    app.add_option("--sweep", sweep, "START STOP STEP in Hz, overrides the scenario sweep")->expected(3);
    app.add_flag("--list-presets", list, "List built-in presets and exit");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int code = app.exit(e);
        return code == 0 ? 0 : cipadc::kExitValidation;
    }

    if (list)
    {
        for (const auto &p : cipadc::list_presets())
            std::cout << std::left << std::setw(24) << p.name << p.description << '\n';
        return cipadc::kExitOk;
    }

    if (scenario_path.empty() && preset.empty())
    {
        std::cerr << "error: one of --scenario or --preset is required\n";
        return cipadc::kExitValidation;
    }

    std::optional<cipadc::SimScenario> scenario;
    try
    {
        scenario = scenario_path.empty() ? cipadc::preset_scenario(preset) : cipadc::load_scenario(scenario_path);
        if (!mode.empty())
            scenario->mode = mode == "oracle" ? cipadc::Mode::oracle
                             : mode == "both" ? cipadc::Mode::both
                                              : cipadc::Mode::analytic;
        if (!sweep.empty())
        {
            scenario->sweep = {sweep[0], sweep[1], sweep[2]};
            scenario->sweep.validate();
        }
    }
    catch (const cipadc::IoError &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return cipadc::kExitIo;
    }
    catch (const cipadc::ParseError &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return cipadc::kExitValidation;
    }
    catch (const cipadc::ValidationError &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return cipadc::kExitValidation;
    }

    // With CSV on stdout the summary goes to stderr so the CSV stays clean.
    std::optional<std::string> out;
    if (!out_path.empty() && out_path != "-")
        out = out_path;
    std::ostream &summary = out ? std::cout : std::cerr;
    return cipadc::run(*scenario, out, std::cout, summary, std::cerr);
}
