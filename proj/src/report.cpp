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

#include "cipadc/report.hpp"
#include "cipadc/errors.hpp"
#include "cipadc/oracle.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

namespace cipadc
{

std::string format_scientific(double value)
{
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::scientific);
    return {buf.data(), res.ptr};
}

std::string format_compact(double value)
{
    std::string s = format_scientific(value);
    const auto e = s.find('e');
    if (e == std::string::npos)
        return s;
    std::string mant = s.substr(0, e);
    std::string exp = s.substr(e + 1);
    bool negative = false;
    if (!exp.empty() && (exp[0] == '+' || exp[0] == '-'))
    {
        negative = exp[0] == '-';
        exp.erase(0, 1);
    }
    while (exp.size() > 1 && exp[0] == '0')
        exp.erase(0, 1);
    if (exp == "0")
        return mant;
    return mant + "e" + (negative ? "-" : "") + exp;
}

RunResult evaluate(const SimScenario &scenario)
{
    const std::vector<double> grid = scenario.sweep.points();
    RunResult result;
    result.response = sweep(scenario, grid);

    if (scenario.mode != Mode::analytic)
    {
        const OracleComparison cmp = compare_response(scenario, grid, scenario.oracle);
        for (std::size_t i = 0; i < grid.size(); ++i)
            result.response.points[i].oracle_power_db_rel = cmp.oracle_db[i];
        result.max_oracle_deviation_db = cmp.max_deviation_db;
    }

    std::set<int> steps;
    for (const auto &p : result.response.points)
        steps.insert(p.k0);
    result.num_steps = steps.size();
    return result;
}

void write_csv(std::ostream &out, const FrequencyResponse &response)
{
    out << "f0_hz,k0_channel,alias_channel_hz,k0_full,alias_full_hz,power_db_rel,oracle_power_db_rel,flag\n";
    for (const auto &p : response.points)
    {
        out << format_scientific(p.f0_hz) << ',' << p.k0 << ',' << format_scientific(p.alias_channel_hz) << ','
            << p.k0_full << ',' << format_scientific(p.alias_full_hz) << ',' << format_scientific(p.power_db_rel)
            << ',';
        if (p.oracle_power_db_rel)
            out << format_scientific(*p.oracle_power_db_rel);
        out << ',' << to_string(p.flag) << '\n';
    }
}

std::string summary_line(const RunResult &result)
{
    std::ostringstream s;
    const FrequencyResponse &r = result.response;
    s << "analog_bandwidth_hz=";
    if (r.exceeds_sweep)
        s << "exceeds-sweep(" << format_compact(r.sweep_max_hz) << ")";
    else
        s << format_compact(r.analog_bandwidth_hz);
    s << " steps=" << result.num_steps;
    if (result.max_oracle_deviation_db)
        s << " max_oracle_deviation_db=" << format_compact(*result.max_oracle_deviation_db);
    return s.str();
}

int run(const SimScenario &scenario, const std::optional<std::string> &out_path, std::ostream &csv_fallback,
        std::ostream &summary, std::ostream &diag)
{
    RunResult result;
    try
    {
        result = evaluate(scenario);
    }
    catch (const GridMismatchError &e)
    {
        diag << "error: oracle grid mismatch: " << e.what() << '\n';
        return kExitGridMismatch;
    }
    catch (const InvalidArgument &e)
    {
        diag << "error: " << e.what() << '\n';
        return kExitValidation;
    }
    catch (const ValidationError &e)
    {
        diag << "error: " << e.what() << '\n';
        return kExitValidation;
    }

    if (out_path)
    {
        std::ofstream file(*out_path, std::ios::binary | std::ios::trunc);
        if (!file)
        {
            diag << "error: cannot open " << *out_path << " for writing\n";
            return kExitIo;
        }
        write_csv(file, result.response);
        file.flush();
        if (!file)
        {
            diag << "error: failed writing " << *out_path << '\n';
            return kExitIo;
        }
    }
    else
    {
        write_csv(csv_fallback, result.response);
        if (!csv_fallback)
        {
            diag << "error: failed writing CSV\n";
            return kExitIo;
        }
    }
    summary << summary_line(result) << '\n';
    return kExitOk;
}

} // namespace cipadc
