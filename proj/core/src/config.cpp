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

#include "lislink/config.hpp"

#include "json.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace lis
{

namespace
{

using nlohmann::json;

class Section
{
  public:
    Section(const json &node, std::string path) : node_(node), path_(std::move(path))
    {
        if (!node_.is_object())
            throw ConfigError(where() + "must be an object");
    }

    template <class T> void get(const char *key, T &target)
    {
        seen_.insert(key);
        auto it = node_.find(key);
        if (it == node_.end())
            return;
        try
        {
            target = it->template get<T>();
        }
        catch (const json::exception &e)
        {
            throw ConfigError(where() + key + ": " + e.what());
        }
    }

    Section child(const char *key)
    {
        seen_.insert(key);
        auto it = node_.find(key);
        static const json empty = json::object();
        return Section(it == node_.end() ? empty : *it, path_ + key + ".");
    }

    void finish() const
    {
        for (const auto &item : node_.items())
            if (!seen_.contains(item.key()))
                throw ConfigError("unknown config key '" + path_ + item.key() + "'");
    }

  private:
    std::string where() const { return "config " + (path_.empty() ? std::string("root") : path_) + ": "; }

    const json &node_;
    std::string path_;
    std::set<std::string> seen_;
};

} // namespace

SimConfig parse_config(const std::string &text)
{
    json doc;
    try
    {
        doc = json::parse(text, nullptr, true, true);
    }
    catch (const json::parse_error &e)
    {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }

    SimConfig c;
    Section root(doc, "");
    root.get("seed", c.seed);
    root.get("threads", c.threads);

    Section sc = root.child("scenario");
    sc.get("users", c.scenario.users);
    sc.get("units", c.scenario.units);
    sc.get("radius", c.scenario.radius);
    sc.get("area_parity", c.scenario.area_parity);
    sc.get("unit_radius", c.scenario.unit_radius);
    sc.get("region", c.scenario.region);
    sc.get("z_min", c.scenario.z_min);
    sc.get("z_max", c.scenario.z_max);
    sc.get("wavelength", c.scenario.wavelength);
    sc.get("rho_db", c.scenario.rho_db);
    sc.finish();

    Section dl = root.child("dlis");
    dl.get("runs", c.dlis_runs);
    std::string associator = to_string(c.associator);
    dl.get("associator", associator);
    c.associator = parse_associator(associator);
    Section lu = dl.child("lua");
    lu.get("max_iter", c.lua.max_iter);
    lu.get("varrho", c.lua.varrho);
    lu.get("tolerance", c.lua.tolerance);
    lu.get("top_columns", c.lua.top_columns);
    lu.finish();
    dl.finish();

    Section cs = root.child("clis_sweep");
    cs.get("runs", c.clis_sweep.runs);
    cs.get("radii", c.clis_sweep.radii);
    cs.get("wavelengths", c.clis_sweep.wavelengths);
    cs.get("user_counts", c.clis_sweep.user_counts);
    cs.finish();

    Section rs = root.child("response");
    rs.get("wavelength", c.response.wavelength);
    rs.get("radii", c.response.radii);
    rs.get("chi_max", c.response.chi_max);
    rs.get("chi_points", c.response.chi_points);
    rs.get("fixed_chi", c.response.fixed_chi);
    rs.get("radius_min", c.response.radius_min);
    rs.get("radius_max", c.response.radius_max);
    rs.get("radius_points", c.response.radius_points);
    rs.finish();

    Section va = root.child("validate");
    va.get("quadrature_samples", c.validate.quadrature_samples);
    va.get("quadrature_tolerance", c.validate.quadrature_tolerance);
    va.get("coverage_runs", c.validate.coverage_runs);
    va.finish();

    root.finish();
    return c;
}

SimConfig load_config(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

void apply_overrides(SimConfig &c, const Overrides &o, Command command)
{
    if (o.seed)
        c.seed = *o.seed;
    if (o.users)
    {
        c.scenario.users = *o.users;
        c.clis_sweep.user_counts = {*o.users};
    }
    if (o.units)
        c.scenario.units = *o.units;
    if (o.radius)
    {
        c.scenario.radius = *o.radius;
        c.clis_sweep.radii = {*o.radius};
        c.response.radii = {*o.radius};
    }
    if (o.wavelength)
    {
        c.scenario.wavelength = *o.wavelength;
        c.clis_sweep.wavelengths = {*o.wavelength};
        c.response.wavelength = *o.wavelength;
    }
    if (o.rho_db)
        c.scenario.rho_db = *o.rho_db;
    if (o.runs)
    {
        switch (command)
        {
        case Command::clis_sweep:
            c.clis_sweep.runs = *o.runs;
            break;
        case Command::dlis_cdf:
            c.dlis_runs = *o.runs;
            break;
        case Command::validate:
            c.validate.quadrature_samples = *o.runs;
            break;
        case Command::response_curve:
            break;
        }
    }
    if (o.associator)
        c.associator = parse_associator(*o.associator);
    if (o.area_parity)
        c.scenario.area_parity = *o.area_parity;

    if (command == Command::dlis_cdf)
    {
        if (c.dlis_runs == 0)
            throw ConfigError("runs must be positive");
        if (c.scenario.units < c.scenario.users)
            throw ConfigError("D-LIS needs at least as many units as users");
        dlis_unit_radius(c.scenario);
    }
    if (command == Command::clis_sweep && c.clis_sweep.runs == 0)
        throw ConfigError("runs must be positive");
}

DlisParams dlis_params(const SimConfig &c)
{
    DlisParams p;
    p.scenario = c.scenario;
    p.scenario.seed = c.seed;
    p.runs = c.dlis_runs;
    p.associator = c.associator;
    p.lua = c.lua;
    p.threads = c.threads;
    return p;
}

ClisSweepParams clis_sweep_params(const SimConfig &c)
{
    ClisSweepParams p = c.clis_sweep;
    p.scenario = c.scenario;
    p.scenario.seed = c.seed;
    p.threads = c.threads;
    return p;
}

ValidateParams validate_params(const SimConfig &c)
{
    ValidateParams p = c.validate;
    p.seed = c.seed;
    p.scenario = c.scenario;
    p.scenario.seed = c.seed;
    p.threads = c.threads;
    return p;
}

} // namespace lis
