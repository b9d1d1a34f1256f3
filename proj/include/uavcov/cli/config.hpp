// SPDX-License-Identifier: Apache-2.0
//
// uavcov: air-to-ground coverage modelling for UAV base stations
// Copyright (C) 2026 The uavcov authors
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


#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "../coverage.hpp"
#include "../environment.hpp"
#include "../errors.hpp"
#include "../geometry.hpp"
#include "../planner.hpp"
#include "../radio.hpp"
#include "../scenario.hpp"

namespace uavcov::cli
{

using nlohmann::json;

enum class Command
{
    sweep_plos,
    sweep_pathloss,
    sweep_coverage,
    optimize_altitude,
    coverage_radius,
    scenario,
    show_envs,
};

inline std::string_view to_string(Command cmd)
{
    switch (cmd)
    {
    case Command::sweep_plos: return "sweep-plos";
    case Command::sweep_pathloss: return "sweep-pathloss";
    case Command::sweep_coverage: return "sweep-coverage";
    case Command::optimize_altitude: return "optimize-altitude";
    case Command::coverage_radius: return "coverage-radius";
    case Command::scenario: return "scenario";
    case Command::show_envs: return "show-envs";
    }
    return "?";
}

/// Structural problem in a config document (unknown key, wrong type).
/// Reported like a usage error.
class ConfigError : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

/// A value that parses but is out of range. `flag` names the command-line
/// flag that sets it, `key` the config path.
class InvalidValue : public std::invalid_argument
{
  public:
    InvalidValue(std::string flag, std::string key, const std::string &what)
        : std::invalid_argument("invalid value for " + flag + " (" + key + "): " + what), flag_(std::move(flag)),
          key_(std::move(key))
    {
    }
    const std::string &flag() const { return flag_; }
    const std::string &key() const { return key_; }

  private:
    std::string flag_;
    std::string key_;
};

struct SweepSettings
{
    std::optional<SweepAxis> axis;
    std::optional<double> start;
    std::optional<double> stop;
    std::optional<double> step;
    bool nlos = false;
    std::uint64_t mc_samples = 0;
};

struct PlannerSettings
{
    double r_edge_m = 500.0;
    double h_min_m = 50.0;
    double h_max_m = 2000.0;
    std::uint64_t steps = 1951;
    double target = 0.9;
    double r_max_scan_m = 1000.0;
    double resolution_m = 1.0;
};

struct ScenarioSettings
{
    double area_side_m = 1000.0;
    AreaShape shape = AreaShape::square;
    std::uint64_t n_users = 100;
    std::optional<double> uav_x_m;
    std::optional<double> uav_y_m;
    std::uint64_t n_draws = 100;
    std::optional<double> total_power_w;
};

/// Fully merged settings of one CLI invocation. Everything except the
/// output location, plotting and the worker count is serialized into the
/// output metadata.
struct RunConfig
{
    Command command = Command::show_envs;
    FormulationMode mode = FormulationMode::standard;
    std::uint64_t seed = 1;
    RadioConfig radio;
    std::vector<EnvironmentProfile> environments;
    LinkGeometry geometry{0.0, 100.0};
    SweepSettings sweep;
    PlannerSettings planner;
    ScenarioSettings scenario;

    std::optional<double> sigma_los;
    std::optional<double> sigma_nlos;
    std::string output_path;
    bool plot = false;
    unsigned workers = 0;
};

/// Command-dependent defaults: all four built-ins for everything except
/// `scenario`, which runs a single urban environment.
inline RunConfig default_config(Command cmd)
{
    RunConfig cfg;
    cfg.command = cmd;
    if (cmd == Command::scenario)
        cfg.environments = {urban()};
    else
    {
        auto all = builtin_environments();
        cfg.environments.assign(all.begin(), all.end());
    }
    return cfg;
}

struct AxisGrid
{
    double start, stop, step;
};

inline AxisGrid default_grid(SweepAxis axis)
{
    switch (axis)
    {
    case SweepAxis::elevation_angle_deg: return {0.5, 90.0, 0.5};
    case SweepAxis::user_distance_m: return {15.0, 500.0, 5.0};
    case SweepAxis::altitude_m: return {50.0, 2000.0, 1.0};
    }
    return {0, 0, 1};
}

inline SweepAxis default_axis(Command cmd)
{
    return cmd == Command::sweep_plos ? SweepAxis::elevation_angle_deg : SweepAxis::user_distance_m;
}

// ------------------------------------------------------------------------
// JSON
// ------------------------------------------------------------------------

namespace detail
{

inline void check_keys(const json &obj, const std::string &where, std::initializer_list<std::string_view> allowed)
{
    if (!obj.is_object())
        throw ConfigError("config: '" + where + "' must be an object");
    for (auto it = obj.begin(); it != obj.end(); ++it)
    {
        bool known = false;
        for (auto key : allowed)
            known = known || it.key() == key;
        if (!known)
            throw ConfigError("config: unknown key '" + (where.empty() ? "" : where + ".") + it.key() + "'");
    }
}

template <typename T>
void read(const json &obj, const char *key, const std::string &where, T &target)
{
    auto it = obj.find(key);
    if (it == obj.end())
        return;
    const std::string path = where + "." + key;
    if constexpr (std::is_same_v<T, bool>)
    {
        if (!it->is_boolean())
            throw ConfigError("config: '" + path + "' must be a boolean");
        target = it->template get<bool>();
    }
    else if constexpr (std::is_same_v<T, std::uint64_t>)
    {
        if (!it->is_number_unsigned())
            throw ConfigError("config: '" + path + "' must be a non-negative integer");
        target = it->template get<std::uint64_t>();
    }
    else if constexpr (std::is_same_v<T, std::string>)
    {
        if (!it->is_string())
            throw ConfigError("config: '" + path + "' must be a string");
        target = it->template get<std::string>();
    }
    else
    {
        if (!it->is_number())
            throw ConfigError("config: '" + path + "' must be a number");
        target = it->template get<double>();
    }
}

template <typename T>
void read_optional(const json &obj, const char *key, const std::string &where, std::optional<T> &target)
{
    auto it = obj.find(key);
    if (it == obj.end())
        return;
    if (it->is_null())
    {
        target.reset();
        return;
    }
    T value{};
    read(obj, key, where, value);
    target = value;
}

inline EnvironmentProfile environment_from_json(const json &node, const std::string &where)
{
    if (node.is_string())
    {
        auto env = find_builtin(node.get<std::string>());
        if (!env)
            throw InvalidValue("--env", where, "unknown environment '" + node.get<std::string>() + "'");
        return *env;
    }
    check_keys(node, where, {"name", "a", "b", "mu_los", "mu_nlos", "sigma_los", "sigma_nlos"});
    for (const char *required : {"name", "a", "b", "mu_los", "mu_nlos"})
        if (!node.contains(required))
            throw ConfigError("config: '" + where + "' is missing '" + required + "'");
    EnvironmentProfile env;
    read(node, "name", where, env.name);
    read(node, "a", where, env.a);
    read(node, "b", where, env.b);
    read(node, "mu_los", where, env.mu_los);
    read(node, "mu_nlos", where, env.mu_nlos);
    read(node, "sigma_los", where, env.sigma_los);
    read(node, "sigma_nlos", where, env.sigma_nlos);
    return env;
}

inline json environment_to_json(const EnvironmentProfile &env)
{
    return {{"name", env.name},       {"a", env.a},
            {"b", env.b},             {"mu_los", env.mu_los},
            {"mu_nlos", env.mu_nlos}, {"sigma_los", env.sigma_los},
            {"sigma_nlos", env.sigma_nlos}};
}

template <typename T>
json optional_to_json(const std::optional<T> &v)
{
    return v ? json(*v) : json(nullptr);
}

} // namespace detail

/*!
 * Overlays a config document onto `cfg`. Keys absent from the document keep
 * their current value. Top-level keys: mode, seed, radio, environment or
 * environments, geometry, sweep, planner, scenario.
 */
inline void apply_json(RunConfig &cfg, const json &doc)
{
    using namespace detail;
    check_keys(doc, "", {"mode", "seed", "radio", "environment", "environments", "geometry", "sweep", "planner",
                         "scenario"});

    if (doc.contains("mode"))
    {
        std::string text;
        read(doc, "mode", "", text);
        auto mode = parse_mode(text);
        if (!mode)
            throw InvalidValue("--mode", "mode", "expected 'standard' or 'paper-literal', got '" + text + "'");
        cfg.mode = *mode;
    }
    read(doc, "seed", "", cfg.seed);

    if (auto it = doc.find("radio"); it != doc.end())
    {
        check_keys(*it, "radio",
                   {"f_c_hz", "p_tx_dbm", "g_db", "p_min_dbm", "noise_density_dbm_hz", "bandwidth_hz"});
        read(*it, "f_c_hz", "radio", cfg.radio.f_c_hz);
        read(*it, "p_tx_dbm", "radio", cfg.radio.p_tx_dbm);
        read(*it, "g_db", "radio", cfg.radio.g_db);
        read(*it, "p_min_dbm", "radio", cfg.radio.p_min_dbm);
        read(*it, "noise_density_dbm_hz", "radio", cfg.radio.noise_density_dbm_hz);
        read(*it, "bandwidth_hz", "radio", cfg.radio.bandwidth_hz);
    }

    if (doc.contains("environment") && doc.contains("environments"))
        throw ConfigError("config: give either 'environment' or 'environments', not both");
    if (auto it = doc.find("environment"); it != doc.end())
        cfg.environments = {environment_from_json(*it, "environment")};
    if (auto it = doc.find("environments"); it != doc.end())
    {
        if (!it->is_array())
            throw ConfigError("config: 'environments' must be an array");
        cfg.environments.clear();
        for (std::size_t i = 0; i < it->size(); ++i)
            cfg.environments.push_back(environment_from_json((*it)[i], "environments[" + std::to_string(i) + "]"));
    }

    if (auto it = doc.find("geometry"); it != doc.end())
    {
        check_keys(*it, "geometry", {"r0_m", "h_m"});
        read(*it, "r0_m", "geometry", cfg.geometry.r0);
        read(*it, "h_m", "geometry", cfg.geometry.h);
    }

    if (auto it = doc.find("sweep"); it != doc.end())
    {
        check_keys(*it, "sweep", {"axis", "start", "stop", "step", "nlos", "mc_samples"});
        if (auto ax = it->find("axis"); ax != it->end() && !ax->is_null())
        {
            std::string text;
            read(*it, "axis", "sweep", text);
            auto axis = parse_axis(text);
            if (!axis)
                throw InvalidValue("--axis", "sweep.axis", "unknown axis '" + text + "'");
            cfg.sweep.axis = *axis;
        }
        read_optional(*it, "start", "sweep", cfg.sweep.start);
        read_optional(*it, "stop", "sweep", cfg.sweep.stop);
        read_optional(*it, "step", "sweep", cfg.sweep.step);
        read(*it, "nlos", "sweep", cfg.sweep.nlos);
        read(*it, "mc_samples", "sweep", cfg.sweep.mc_samples);
    }

    if (auto it = doc.find("planner"); it != doc.end())
    {
        check_keys(*it, "planner", {"r_edge_m", "h_min_m", "h_max_m", "steps", "target", "r_max_scan_m", "resolution_m"});
        read(*it, "r_edge_m", "planner", cfg.planner.r_edge_m);
        read(*it, "h_min_m", "planner", cfg.planner.h_min_m);
        read(*it, "h_max_m", "planner", cfg.planner.h_max_m);
        read(*it, "steps", "planner", cfg.planner.steps);
        read(*it, "target", "planner", cfg.planner.target);
        read(*it, "r_max_scan_m", "planner", cfg.planner.r_max_scan_m);
        read(*it, "resolution_m", "planner", cfg.planner.resolution_m);
    }

    if (auto it = doc.find("scenario"); it != doc.end())
    {
        check_keys(*it, "scenario",
                   {"area_side_m", "shape", "n_users", "uav_x_m", "uav_y_m", "n_draws", "total_power_w"});
        read(*it, "area_side_m", "scenario", cfg.scenario.area_side_m);
        if (it->contains("shape"))
        {
            std::string text;
            read(*it, "shape", "scenario", text);
            auto shape = parse_shape(text);
            if (!shape)
                throw InvalidValue("--shape", "scenario.shape", "expected 'square' or 'disk', got '" + text + "'");
            cfg.scenario.shape = *shape;
        }
        read(*it, "n_users", "scenario", cfg.scenario.n_users);
        read_optional(*it, "uav_x_m", "scenario", cfg.scenario.uav_x_m);
        read_optional(*it, "uav_y_m", "scenario", cfg.scenario.uav_y_m);
        read(*it, "n_draws", "scenario", cfg.scenario.n_draws);
        read_optional(*it, "total_power_w", "scenario", cfg.scenario.total_power_w);
    }
}

/// Serializes the resolved configuration; apply_json on a default config
/// of the same command reproduces it.
inline json to_json(const RunConfig &cfg)
{
    using detail::optional_to_json;
    json envs = json::array();
    for (const auto &env : cfg.environments)
        envs.push_back(detail::environment_to_json(env));
    return {
        {"mode", std::string(to_string(cfg.mode))},
        {"seed", cfg.seed},
        {"radio",
         {{"f_c_hz", cfg.radio.f_c_hz},
          {"p_tx_dbm", cfg.radio.p_tx_dbm},
          {"g_db", cfg.radio.g_db},
          {"p_min_dbm", cfg.radio.p_min_dbm},
          {"noise_density_dbm_hz", cfg.radio.noise_density_dbm_hz},
          {"bandwidth_hz", cfg.radio.bandwidth_hz}}},
        {"environments", envs},
        {"geometry", {{"r0_m", cfg.geometry.r0}, {"h_m", cfg.geometry.h}}},
        {"sweep",
         {{"axis", cfg.sweep.axis ? json(std::string(to_string(*cfg.sweep.axis))) : json(nullptr)},
          {"start", optional_to_json(cfg.sweep.start)},
          {"stop", optional_to_json(cfg.sweep.stop)},
          {"step", optional_to_json(cfg.sweep.step)},
          {"nlos", cfg.sweep.nlos},
          {"mc_samples", cfg.sweep.mc_samples}}},
        {"planner",
         {{"r_edge_m", cfg.planner.r_edge_m},
          {"h_min_m", cfg.planner.h_min_m},
          {"h_max_m", cfg.planner.h_max_m},
          {"steps", cfg.planner.steps},
          {"target", cfg.planner.target},
          {"r_max_scan_m", cfg.planner.r_max_scan_m},
          {"resolution_m", cfg.planner.resolution_m}}},
        {"scenario",
         {{"area_side_m", cfg.scenario.area_side_m},
          {"shape", std::string(to_string(cfg.scenario.shape))},
          {"n_users", cfg.scenario.n_users},
          {"uav_x_m", optional_to_json(cfg.scenario.uav_x_m)},
          {"uav_y_m", optional_to_json(cfg.scenario.uav_y_m)},
          {"n_draws", cfg.scenario.n_draws},
          {"total_power_w", optional_to_json(cfg.scenario.total_power_w)}}},
    };
}

/// Reads a config document. A file whose first character is '#' is taken
/// to be an emitted CSV and the JSON on its "# config: " line is used.
inline json parse_config_text(const std::string &text)
{
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '#')
    {
        constexpr std::string_view tag = "# config: ";
        std::size_t pos = 0;
        while (pos < text.size())
        {
            auto eol = text.find('\n', pos);
            if (eol == std::string::npos)
                eol = text.size();
            std::string_view line(text.data() + pos, eol - pos);
            if (line.starts_with(tag))
            {
                line.remove_prefix(tag.size());
                try
                {
                    return json::parse(line);
                }
                catch (const json::parse_error &e)
                {
                    throw ConfigError(std::string("config: malformed metadata JSON: ") + e.what());
                }
            }
            if (!line.starts_with("#"))
                break;
            pos = eol + 1;
        }
        throw ConfigError("config: no '# config:' line in the metadata block");
    }
    try
    {
        return json::parse(text);
    }
    catch (const json::parse_error &e)
    {
        throw ConfigError(std::string("config: malformed JSON: ") + e.what());
    }
}

/*!
 * Fills command-dependent defaults and applies the sigma overrides. After
 * this every field that enters the output is explicit.
 */
inline void resolve(RunConfig &cfg)
{
    if (cfg.sigma_los)
        for (auto &env : cfg.environments)
            env.sigma_los = *cfg.sigma_los;
    if (cfg.sigma_nlos)
        for (auto &env : cfg.environments)
            env.sigma_nlos = *cfg.sigma_nlos;
    cfg.sigma_los.reset();
    cfg.sigma_nlos.reset();

    if (!cfg.sweep.axis)
        cfg.sweep.axis = default_axis(cfg.command);
    const auto grid = default_grid(*cfg.sweep.axis);
    if (!cfg.sweep.start)
        cfg.sweep.start = grid.start;
    if (!cfg.sweep.stop)
        cfg.sweep.stop = grid.stop;
    if (!cfg.sweep.step)
        cfg.sweep.step = grid.step;

    if (!cfg.scenario.uav_x_m)
        cfg.scenario.uav_x_m = cfg.scenario.area_side_m / 2.0;
    if (!cfg.scenario.uav_y_m)
        cfg.scenario.uav_y_m = cfg.scenario.area_side_m / 2.0;
    if (!cfg.scenario.total_power_w)
        cfg.scenario.total_power_w = dbm_to_watts(cfg.radio.p_tx_dbm);
}

/// Range checks on a resolved config; errors name the flag.
inline void validate(const RunConfig &cfg)
{
    auto check = [](bool ok, const char *flag, const char *key, const char *what) {
        if (!ok)
            throw InvalidValue(flag, key, what);
    };
    using uavcov::detail::finite;
    const auto &r = cfg.radio;
    check(finite(r.f_c_hz) && r.f_c_hz > 0, "--fc", "radio.f_c_hz", "must be > 0");
    check(finite(r.p_tx_dbm), "--ptx", "radio.p_tx_dbm", "must be finite");
    check(finite(r.g_db), "--gain", "radio.g_db", "must be finite");
    check(finite(r.p_min_dbm), "--pmin", "radio.p_min_dbm", "must be finite");
    check(finite(r.noise_density_dbm_hz), "--noise-density", "radio.noise_density_dbm_hz", "must be finite");
    check(finite(r.bandwidth_hz) && r.bandwidth_hz > 0, "--bandwidth", "radio.bandwidth_hz", "must be > 0");

    check(!cfg.environments.empty(), "--env", "environments", "at least one environment is required");
    for (const auto &env : cfg.environments)
    {
        check(finite(env.sigma_los) && env.sigma_los > 0, "--sigma-los", "environments[].sigma_los", "must be > 0");
        check(finite(env.sigma_nlos) && env.sigma_nlos > 0, "--sigma-nlos", "environments[].sigma_nlos",
              "must be > 0");
        try
        {
            uavcov::validate(env);
        }
        catch (const InvalidSpec &e)
        {
            throw InvalidValue("--env", "environments", e.what());
        }
    }
    if (cfg.command == Command::scenario)
        check(cfg.environments.size() == 1, "--env", "environments", "scenario takes exactly one environment");

    check(finite(cfg.geometry.h) && cfg.geometry.h > 0, "--h", "geometry.h_m", "must be > 0");
    check(finite(cfg.geometry.r0) && cfg.geometry.r0 >= 0, "--r0", "geometry.r0_m", "must be >= 0");

    const double start = cfg.sweep.start.value_or(0), stop = cfg.sweep.stop.value_or(0),
                 step = cfg.sweep.step.value_or(1);
    check(finite(step) && step > 0, "--step", "sweep.step", "must be > 0");
    check(finite(start) && finite(stop) && start <= stop, "--start", "sweep.start", "must be finite and <= stop");
    switch (cfg.sweep.axis.value_or(SweepAxis::user_distance_m))
    {
    case SweepAxis::elevation_angle_deg:
        check(start > 0, "--start", "sweep.start", "angle sweeps must start above 0 deg");
        check(stop <= 90, "--stop", "sweep.stop", "angle sweeps must end at or below 90 deg");
        break;
    case SweepAxis::user_distance_m:
        check(start >= 0, "--start", "sweep.start", "distance sweeps must start at >= 0 m");
        break;
    case SweepAxis::altitude_m:
        check(start > 0, "--start", "sweep.start", "altitude sweeps must start above 0 m");
        break;
    }

    const auto &p = cfg.planner;
    check(finite(p.r_edge_m) && p.r_edge_m >= 0, "--r-edge", "planner.r_edge_m", "must be >= 0");
    check(finite(p.h_min_m) && p.h_min_m > 0, "--h-min", "planner.h_min_m", "must be > 0");
    check(finite(p.h_max_m) && p.h_max_m > p.h_min_m, "--h-max", "planner.h_max_m", "must be > h_min");
    check(p.steps >= 2, "--steps", "planner.steps", "must be >= 2");
    check(finite(p.target) && p.target > 0 && p.target < 1, "--target", "planner.target", "must lie in (0, 1)");
    check(finite(p.r_max_scan_m) && p.r_max_scan_m >= 0, "--r-max", "planner.r_max_scan_m", "must be >= 0");
    check(finite(p.resolution_m) && p.resolution_m > 0, "--resolution", "planner.resolution_m", "must be > 0");

    const auto &s = cfg.scenario;
    check(finite(s.area_side_m) && s.area_side_m > 0, "--area", "scenario.area_side_m", "must be > 0");
    check(s.n_users >= 1, "--users", "scenario.n_users", "must be >= 1");
    check(s.n_draws >= 1, "--draws", "scenario.n_draws", "must be >= 1");
    check(!s.uav_x_m || finite(*s.uav_x_m), "--uav-x", "scenario.uav_x_m", "must be finite");
    check(!s.uav_y_m || finite(*s.uav_y_m), "--uav-y", "scenario.uav_y_m", "must be finite");
    check(!s.total_power_w || (finite(*s.total_power_w) && *s.total_power_w > 0), "--total-power",
          "scenario.total_power_w", "must be > 0");
}

} // namespace uavcov::cli
