// SPDX-License-Identifier: Apache-2.0
//
// lislink: link-level simulation of large-intelligent-surface uplinks
// Copyright (C) 2026 The lislink Authors
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

// lislink command-line front end. Every subcommand writes CSV files into --out.

#include "lislink/assoc.hpp"
#include "lislink/config.hpp"
#include "lislink/csv.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>

namespace fs = std::filesystem;

namespace
{

enum Exit
{
    ok = 0,
    validation_failed = 1,
    config_error = 2,
    runtime_error = 3
};

struct CommonFlags
{
    std::string config;
    std::string out = ".";
    lis::Overrides overrides;
    std::string area_parity;
};

void add_common(CLI::App *cmd, CommonFlags &f)
{
    cmd->add_option("--config", f.config, "JSON config file")->check(CLI::ExistingFile);
    cmd->add_option("--seed", f.overrides.seed, "master seed");
    cmd->add_option("--out", f.out, "output directory")->capture_default_str();
    cmd->add_option("--users", f.overrides.users, "users K")->check(CLI::PositiveNumber);
    cmd->add_option("--units", f.overrides.units, "D-LIS units M")->check(CLI::PositiveNumber);
    cmd->add_option("--radius", f.overrides.radius, "LIS radius in m (C-LIS radius under area parity)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--wavelength", f.overrides.wavelength, "wavelength in m")->check(CLI::PositiveNumber);
    cmd->add_option("--rho-db", f.overrides.rho_db, "transmit power to noise ratio in dB");
    cmd->add_option("--runs", f.overrides.runs, "realizations")->check(CLI::PositiveNumber);
    cmd->add_option("--associator", f.overrides.associator, "lua, nearest or random")
        ->check(CLI::IsMember({"lua", "nearest", "random"}));
    cmd->add_option("--area-parity", f.area_parity, "on or off")->check(CLI::IsMember({"on", "off"}));
}

lis::SimConfig resolve(CommonFlags &f, lis::Command command)
{
    lis::SimConfig config = f.config.empty() ? lis::SimConfig{} : lis::load_config(f.config);
    if (!f.area_parity.empty())
        f.overrides.area_parity = f.area_parity == "on";
    lis::apply_overrides(config, f.overrides, command);
    return config;
}

std::ofstream open_output(const std::string &dir, const std::string &name)
{
    fs::create_directories(dir);
    const fs::path path = fs::path(dir) / name;
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error("cannot write " + path.string());
    return out;
}

void finish(std::ofstream &out, const std::string &name)
{
    out.flush();
    if (!out)
        throw std::runtime_error("write failed for " + name);
    std::cout << "wrote " << name << '\n';
}

int response_curve(CommonFlags &f)
{
    const auto config = resolve(f, lis::Command::response_curve);
    const auto curves = lis::run_response_curves(config.response);
    auto chi = open_output(f.out, "response_chi.csv");
    lis::write_response_chi(chi, curves);
    finish(chi, "response_chi.csv");
    auto radius = open_output(f.out, "response_radius.csv");
    lis::write_response_radius(radius, curves);
    finish(radius, "response_radius.csv");
    return ok;
}

int clis_sweep(CommonFlags &f)
{
    const auto config = resolve(f, lis::Command::clis_sweep);
    const auto rows = lis::run_clis_sweep(lis::clis_sweep_params(config));
    auto out = open_output(f.out, "clis_sweep.csv");
    lis::write_clis_sweep(out, rows);
    finish(out, "clis_sweep.csv");
    return ok;
}

int dlis_cdf(CommonFlags &f)
{
    const auto config = resolve(f, lis::Command::dlis_cdf);
    const auto params = lis::dlis_params(config);
    const auto dlis = lis::run_dlis_cdf(params);
    const auto clis = lis::run_clis_cdf(params);
    const std::vector<lis::NamedEnsemble> series{{"dlis_" + lis::to_string(params.associator), &dlis},
                                                 {"clis", &clis}};
    auto cdf = open_output(f.out, "dlis_cdf.csv");
    lis::write_cdf(cdf, series);
    finish(cdf, "dlis_cdf.csv");
    auto summary = open_output(f.out, "dlis_summary.csv");
    lis::write_summary(summary, series);
    finish(summary, "dlis_summary.csv");
    return ok;
}

int validate(CommonFlags &f)
{
    const auto config = resolve(f, lis::Command::validate);
    const auto checks = lis::run_validation(lis::validate_params(config));
    auto out = open_output(f.out, "validate.csv");
    lis::write_checks(out, checks);
    finish(out, "validate.csv");
    for (const auto &c : checks)
        std::cout << lis::to_string(c.status) << ' ' << c.name << " measured=" << lis::format_number(c.measured)
                  << " threshold=" << lis::format_number(c.threshold) << " (" << c.detail << ")\n";
    return lis::all_passed(checks) ? ok : validation_failed;
}

int lsf_dump(CommonFlags &f, std::size_t realization)
{
    const auto config = resolve(f, lis::Command::dlis_cdf);
    auto sp = lis::dlis_params(config).scenario;
    sp.seed = lis::substream_seed(config.seed, realization);
    const auto scenario = lis::generate_scenario(sp);
    const std::string name = "lsf_" + std::to_string(realization) + ".txt";
    auto out = open_output(f.out, name);
    out << "# users x units path loss, realization " << realization << " of seed " << config.seed << '\n';
    lis::write_lsf(out, lis::lsf_matrix(scenario));
    finish(out, name);
    return ok;
}

int associate(CommonFlags &f, const std::string &lsf_path)
{
    const auto config = resolve(f, lis::Command::dlis_cdf);
    std::ifstream in(lsf_path);
    if (!in)
        throw lis::ConfigError("cannot open LSF dump '" + lsf_path + "'");
    const lis::LsfMatrix lsf = lis::read_lsf(in);
    lis::SelectionMatrix selection;
    switch (config.associator)
    {
    case lis::Associator::lua:
        selection = lis::lua(lsf, config.lua).binary;
        break;
    case lis::Associator::nearest:
        selection = lis::baseline_assign(lsf, lis::BaselinePolicy::nearest);
        break;
    case lis::Associator::random:
        selection = lis::baseline_assign(lsf, lis::BaselinePolicy::random, lis::substream_seed(config.seed, 2));
        break;
    }
    const auto exact = lis::exact_bottleneck_assign(lsf);
    auto out = open_output(f.out, "assignment.csv");
    lis::CsvWriter w(out, {"user", "unit", "lsf"});
    const auto column = selection.assignment();
    for (std::size_t k = 0; k < column.size(); ++k)
        w.row({k, static_cast<std::size_t>(column[k]), lsf(k, static_cast<std::size_t>(column[k]))});
    finish(out, "assignment.csv");
    std::cout << "min lsf " << lis::format_number(lis::min_lsf_objective(lsf, selection)) << ", exact optimum "
              << lis::format_number(exact.objective) << '\n';
    return ok;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"lislink: large-intelligent-surface uplink simulator"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "lislink 0.1.0");

    CommonFlags flags;
    std::size_t realization = 0;
    std::string lsf_path;

    auto *response = app.add_subcommand("response-curve", "LIS response versus chi and versus R");
    auto *sweep = app.add_subcommand("clis-sweep", "C-LIS sum SE and its bound over R and wavelength");
    auto *cdf = app.add_subcommand("dlis-cdf", "per-user SE CDF of D-LIS and C-LIS");
    auto *check = app.add_subcommand("validate", "closed form, phase model and far-field diagnostics");
    auto *dump = app.add_subcommand("lsf-dump", "write one D-LIS realization's LSF matrix");
    auto *assoc = app.add_subcommand("assoc", "associate users for an LSF dump");
    for (auto *cmd : {response, sweep, cdf, check, dump, assoc})
        add_common(cmd, flags);
    dump->add_option("--realization", realization, "realization index")->capture_default_str();
    assoc->add_option("--lsf", lsf_path, "LSF dump file")->required()->check(CLI::ExistingFile);

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int code = app.exit(e);
        return code == 0 ? ok : config_error;
    }

    try
    {
        if (*response)
            return response_curve(flags);
        if (*sweep)
            return clis_sweep(flags);
        if (*cdf)
            return dlis_cdf(flags);
        if (*check)
            return validate(flags);
        if (*dump)
            return lsf_dump(flags, realization);
        if (*assoc)
            return associate(flags, lsf_path);
    }
    catch (const lis::ConfigError &e)
    {
        std::cerr << "config error: " << e.what() << '\n';
        return config_error;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return runtime_error;
    }
    return ok;
}
