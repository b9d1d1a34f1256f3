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

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "../coverage.hpp"
#include "../environment.hpp"
#include "../errors.hpp"
#include "../monte_carlo.hpp"
#include "../planner.hpp"
#include "../report/csv.hpp"
#include "../report/svg.hpp"
#include "../scenario.hpp"
#include "../version.hpp"
#include "config.hpp"

namespace uavcov::cli
{

enum ExitCode : int
{
    kExitOk = 0,
    kExitUsage = 1,
    kExitInvalidValue = 2,
    kExitIo = 3,
};

/// What to chart when --plot is given.
struct PlotSpec
{
    std::vector<std::size_t> columns;
    std::vector<std::string> labels;
    std::string title;
    std::string y_label;
};

struct CommandOutput
{
    report::OutputTable table;
    std::optional<PlotSpec> plot;
};

namespace detail
{

inline std::string axis_column(SweepAxis axis)
{
    switch (axis)
    {
    case SweepAxis::elevation_angle_deg: return "angle_deg";
    case SweepAxis::user_distance_m: return "distance_m";
    case SweepAxis::altitude_m: return "altitude_m";
    }
    return "x";
}

inline std::string axis_note(const RunConfig &cfg)
{
    switch (*cfg.sweep.axis)
    {
    case SweepAxis::elevation_angle_deg:
        return "axis: elevation-angle-deg; UAV altitude fixed at h = " + report::format_number(cfg.geometry.h) +
               " m, horizontal distance r0 = h / tan(angle)";
    case SweepAxis::user_distance_m:
        return "axis: user-distance-m = horizontal distance r0; UAV altitude fixed at h = " +
               report::format_number(cfg.geometry.h) + " m";
    case SweepAxis::altitude_m:
        return "axis: altitude-m; horizontal distance fixed at r0 = " + report::format_number(cfg.geometry.r0) + " m";
    }
    return {};
}

inline std::vector<std::string> base_metadata(const RunConfig &cfg)
{
    return {std::string("uavcov ") + kVersion, "command: " + std::string(to_string(cfg.command)),
            "config: " + to_json(cfg).dump()};
}

inline SweepSpec sweep_spec(const RunConfig &cfg)
{
    SweepSpec spec;
    spec.axis = *cfg.sweep.axis;
    spec.start = *cfg.sweep.start;
    spec.stop = *cfg.sweep.stop;
    spec.step = *cfg.sweep.step;
    spec.environments = cfg.environments;
    spec.baseline = cfg.geometry;
    spec.radio = cfg.radio;
    spec.mode = cfg.mode;
    return spec;
}

inline std::vector<std::string> env_labels(const RunConfig &cfg)
{
    std::vector<std::string> labels;
    for (const auto &env : cfg.environments)
        labels.push_back(env.name);
    return labels;
}

inline std::vector<std::size_t> column_range(std::size_t first, std::size_t count)
{
    std::vector<std::size_t> cols(count);
    for (std::size_t i = 0; i < count; ++i)
        cols[i] = first + i;
    return cols;
}

inline CommandOutput run_sweep_command(const RunConfig &cfg)
{
    const auto spec = sweep_spec(cfg);
    const auto result = run_sweep(spec);
    const std::size_t n_env = cfg.environments.size();

    CommandOutput out;
    auto &t = out.table;
    t.metadata = base_metadata(cfg);
    t.metadata.push_back(axis_note(cfg));
    t.header.push_back(axis_column(spec.axis));

    PlotSpec plot;
    plot.labels = env_labels(cfg);
    plot.columns = column_range(1, n_env);

    switch (cfg.command)
    {
    case Command::sweep_plos: {
        const std::string prefix = cfg.sweep.nlos ? "p_nlos_" : "p_los_";
        for (const auto &env : cfg.environments)
            t.header.push_back(prefix + column_slug(env));
        for (const auto &row : result.rows)
        {
            std::vector<report::Cell> cells{row.axis_value};
            for (const auto &pt : row.points)
                cells.emplace_back(cfg.sweep.nlos ? pt.p_nlos : pt.p_los);
            t.rows.push_back(std::move(cells));
        }
        plot.title = cfg.sweep.nlos ? "NLoS probability" : "LoS probability";
        plot.y_label = cfg.sweep.nlos ? "P_NLoS" : "P_LoS";
        break;
    }
    case Command::sweep_pathloss: {
        t.header.push_back("fspl_db");
        for (const auto &env : cfg.environments)
            t.header.push_back("mean_pl_db_" + column_slug(env));
        for (const auto &row : result.rows)
        {
            std::vector<report::Cell> cells{row.axis_value, row.points.front().fspl_db};
            for (const auto &pt : row.points)
                cells.emplace_back(pt.mean_pl_db);
            t.rows.push_back(std::move(cells));
        }
        plot.columns = column_range(2, n_env);
        plot.title = "Mean path loss";
        plot.y_label = "path loss (dB)";
        break;
    }
    default: {
        const bool mc = cfg.sweep.mc_samples > 0;
        for (const auto &env : cfg.environments)
            t.header.push_back("p_cov_" + column_slug(env));
        if (mc)
        {
            for (const auto &env : cfg.environments)
                t.header.push_back("p_cov_mc_" + column_slug(env));
            for (const auto &env : cfg.environments)
                t.header.push_back("mc_stderr_" + column_slug(env));
            t.metadata.push_back("monte carlo: " + std::to_string(cfg.sweep.mc_samples) +
                                 " draws per cell, seed " + std::to_string(cfg.seed) +
                                 ", stream = row * n_env + env");
        }
        for (std::size_t r = 0; r < result.rows.size(); ++r)
        {
            const auto &row = result.rows[r];
            std::vector<report::Cell> cells{row.axis_value};
            for (const auto &pt : row.points)
                cells.emplace_back(pt.p_cov);
            if (mc)
            {
                std::vector<report::Cell> se;
                for (std::size_t e = 0; e < n_env; ++e)
                {
                    const auto est = coverage_monte_carlo(row.geometry, cfg.environments[e], cfg.radio,
                                                          cfg.sweep.mc_samples, cfg.seed, cfg.workers, r * n_env + e);
                    cells.emplace_back(est.estimate);
                    se.emplace_back(est.std_error);
                }
                cells.insert(cells.end(), se.begin(), se.end());
            }
            t.rows.push_back(std::move(cells));
        }
        plot.title = "Coverage probability";
        plot.y_label = "P_cov";
        break;
    }
    }
    out.plot = std::move(plot);
    return out;
}

inline CommandOutput run_optimize_altitude(const RunConfig &cfg)
{
    CommandOutput out;
    auto &t = out.table;
    t.metadata = base_metadata(cfg);
    t.metadata.push_back("grid: " + std::to_string(cfg.planner.steps) + " altitudes from " +
                         report::format_number(cfg.planner.h_min_m) + " to " +
                         report::format_number(cfg.planner.h_max_m) + " m; ties go to the lowest altitude");
    t.header = {"environment", "r_edge_m", "h_star_m", "p_cov_star"};
    for (const auto &env : cfg.environments)
    {
        const auto best = optimal_altitude(cfg.planner.r_edge_m, env, cfg.radio, cfg.planner.h_min_m,
                                           cfg.planner.h_max_m, cfg.planner.steps, cfg.mode);
        t.rows.push_back({env.name, cfg.planner.r_edge_m, best.h_star, best.p_cov_star});
    }
    return out;
}

inline CommandOutput run_coverage_radius(const RunConfig &cfg)
{
    CommandOutput out;
    auto &t = out.table;
    t.metadata = base_metadata(cfg);
    t.metadata.push_back("grid: r0 = k * " + report::format_number(cfg.planner.resolution_m) + " m up to " +
                         report::format_number(cfg.planner.r_max_scan_m) + " m");
    t.header = {"environment", "h_m", "target", "radius_m"};
    for (const auto &env : cfg.environments)
    {
        const double radius = max_coverage_radius(cfg.geometry.h, env, cfg.radio, cfg.planner.target,
                                                  cfg.planner.r_max_scan_m, cfg.planner.resolution_m, cfg.mode);
        t.rows.push_back({env.name, cfg.geometry.h, cfg.planner.target, radius});
    }
    return out;
}

inline ScenarioSpec scenario_spec(const RunConfig &cfg)
{
    ScenarioSpec spec;
    spec.area_side_m = cfg.scenario.area_side_m;
    spec.shape = cfg.scenario.shape;
    spec.n_users = cfg.scenario.n_users;
    spec.uav = {*cfg.scenario.uav_x_m, *cfg.scenario.uav_y_m, cfg.geometry.h};
    spec.env = cfg.environments.front();
    spec.radio = cfg.radio;
    spec.seed = cfg.seed;
    spec.n_draws = cfg.scenario.n_draws;
    spec.mode = cfg.mode;
    spec.total_power_w = cfg.scenario.total_power_w;
    spec.workers = cfg.workers;
    return spec;
}

inline CommandOutput run_scenario_command(const RunConfig &cfg)
{
    const auto result = evaluate_scenario(scenario_spec(cfg));
    const auto &s = result.summary;

    CommandOutput out;
    auto &t = out.table;
    t.metadata = base_metadata(cfg);
    const nlohmann::json summary = {{"mean_p_cov", s.mean_p_cov},
                                    {"sum_rate_bps", s.sum_rate_bps},
                                    {"total_power_w", s.total_power_w},
                                    {"energy_efficiency_bit_per_j", s.energy_efficiency},
                                    {"covered_fraction_draws", s.covered_fraction_draws}};
    t.metadata.push_back("summary: " + summary.dump());
    t.header = {"user", "x_m", "y_m", "r0_m", "theta_deg", "p_los", "mean_pl_db", "p_cov", "snr_db", "rate_bps"};
    for (std::size_t i = 0; i < result.records.size(); ++i)
    {
        const auto &u = result.records[i];
        t.rows.push_back({static_cast<std::int64_t>(i), u.position.x, u.position.y, u.r0, u.theta_deg, u.p_los,
                          u.mean_pl_db, u.p_cov, u.snr_db, u.rate_bps});
    }
    return out;
}

inline CommandOutput run_show_envs(const RunConfig &cfg)
{
    CommandOutput out;
    auto &t = out.table;
    t.metadata = base_metadata(cfg);
    t.header = {"name", "a", "b", "mu_los_db", "mu_nlos_db", "sigma_los_db", "sigma_nlos_db"};
    for (const auto &env : cfg.environments)
        t.rows.push_back({env.name, env.a, env.b, env.mu_los, env.mu_nlos, env.sigma_los, env.sigma_nlos});
    return out;
}

} // namespace detail

/// Builds the output table of a resolved, validated config.
inline CommandOutput execute(const RunConfig &cfg)
{
    switch (cfg.command)
    {
    case Command::sweep_plos:
    case Command::sweep_pathloss:
    case Command::sweep_coverage: return detail::run_sweep_command(cfg);
    case Command::optimize_altitude: return detail::run_optimize_altitude(cfg);
    case Command::coverage_radius: return detail::run_coverage_radius(cfg);
    case Command::scenario: return detail::run_scenario_command(cfg);
    case Command::show_envs: return detail::run_show_envs(cfg);
    }
    return {};
}

/// Path of the chart written next to a CSV: same stem, .svg extension.
inline std::filesystem::path svg_path_for(const std::filesystem::path &csv)
{
    auto p = csv;
    p.replace_extension(".svg");
    return p;
}

/*!
 * Writes the CSV to `path` (or to `out` when path is empty or "-") and, if
 * requested, the SVG chart beside it. Throws IoError on failure.
 */
inline void emit_table(const CommandOutput &result, const std::string &path, bool plot, std::ostream &out,
                       std::ostream &err)
{
    const std::string csv = report::render_csv(result.table);
    if (path.empty() || path == "-")
    {
        out << csv;
        if (plot)
            err << "warning: --plot needs --out; no chart written\n";
        return;
    }
    report::write_file_atomic(path, csv);
    if (!plot)
        return;
    if (!result.plot)
    {
        err << "warning: this command has no chart; --plot ignored\n";
        return;
    }
    const auto &p = *result.plot;
    report::write_file_atomic(svg_path_for(path),
                              report::render_svg(result.table, p.columns, p.labels, p.title, p.y_label));
}

namespace detail
{

struct FlagValues
{
    std::string config_path;
    std::vector<std::string> envs;
    std::optional<std::string> mode, axis, shape;
    std::optional<double> h, r0, fc, ptx, gain, pmin, noise_density, bandwidth, sigma_los, sigma_nlos;
    std::optional<double> start, stop, step;
    std::optional<std::uint64_t> mc_samples, seed, steps, users, draws;
    std::optional<double> r_edge, h_min, h_max, target, r_max, resolution, area, uav_x, uav_y, total_power;
    bool nlos = false;
    bool plot = false;
    std::string out;
    unsigned workers = 0;
};

inline void add_common_flags(CLI::App &sub, FlagValues &f)
{
    sub.add_option("--config", f.config_path, "JSON config file, or a CSV emitted by this tool");
    sub.add_option("--env", f.envs, "environments: all | suburban | urban | dense-urban | highrise-urban")
        ->delimiter(',');
    sub.add_option("--mode", f.mode, "formulation: standard | paper-literal");
    sub.add_option("--h", f.h, "UAV altitude (m)");
    sub.add_option("--r0", f.r0, "horizontal user distance (m)");
    sub.add_option("--fc", f.fc, "carrier frequency (Hz)");
    sub.add_option("--ptx", f.ptx, "transmit power (dBm)");
    sub.add_option("--gain", f.gain, "antenna gain (dB)");
    sub.add_option("--pmin", f.pmin, "receiver threshold (dBm)");
    sub.add_option("--noise-density", f.noise_density, "noise density (dBm/Hz)");
    sub.add_option("--bandwidth", f.bandwidth, "bandwidth (Hz)");
    sub.add_option("--sigma-los", f.sigma_los, "LoS shadowing std dev (dB), all environments");
    sub.add_option("--sigma-nlos", f.sigma_nlos, "NLoS shadowing std dev (dB), all environments");
    sub.add_option("--seed", f.seed, "seed for stochastic output");
    sub.add_option("--out", f.out, "output CSV path (default: stdout)");
    sub.add_flag("--plot", f.plot, "also write an SVG chart beside the CSV");
    sub.add_option("--workers", f.workers, "worker threads, 0 = all cores (never changes results)");
}

inline void add_sweep_flags(CLI::App &sub, FlagValues &f)
{
    sub.add_option("--axis", f.axis, "angle | distance | altitude");
    sub.add_option("--start", f.start, "first grid value");
    sub.add_option("--stop", f.stop, "last grid value (inclusive)");
    sub.add_option("--step", f.step, "grid step");
}

inline std::vector<EnvironmentProfile> environments_from_flags(const std::vector<std::string> &names)
{
    std::vector<EnvironmentProfile> envs;
    for (const auto &name : names)
    {
        if (name == "all")
        {
            auto all = builtin_environments();
            envs.insert(envs.end(), all.begin(), all.end());
            continue;
        }
        auto env = find_builtin(name);
        if (!env)
            throw InvalidValue("--env", "environments", "unknown environment '" + name + "'");
        envs.push_back(*env);
    }
    return envs;
}

inline void apply_flags(RunConfig &cfg, const FlagValues &f)
{
    if (!f.envs.empty())
        cfg.environments = environments_from_flags(f.envs);
    if (f.mode)
    {
        auto mode = parse_mode(*f.mode);
        if (!mode)
            throw InvalidValue("--mode", "mode", "expected 'standard' or 'paper-literal', got '" + *f.mode + "'");
        cfg.mode = *mode;
    }
    if (f.axis)
    {
        auto axis = parse_axis(*f.axis);
        if (!axis)
            throw InvalidValue("--axis", "sweep.axis", "unknown axis '" + *f.axis + "'");
        cfg.sweep.axis = *axis;
    }
    if (f.shape)
    {
        auto shape = parse_shape(*f.shape);
        if (!shape)
            throw InvalidValue("--shape", "scenario.shape", "expected 'square' or 'disk', got '" + *f.shape + "'");
        cfg.scenario.shape = *shape;
    }
    auto set = [](auto &target, const auto &value) {
        if (value)
            target = *value;
    };
    set(cfg.geometry.h, f.h);
    set(cfg.geometry.r0, f.r0);
    set(cfg.radio.f_c_hz, f.fc);
    set(cfg.radio.p_tx_dbm, f.ptx);
    set(cfg.radio.g_db, f.gain);
    set(cfg.radio.p_min_dbm, f.pmin);
    set(cfg.radio.noise_density_dbm_hz, f.noise_density);
    set(cfg.radio.bandwidth_hz, f.bandwidth);
    set(cfg.sigma_los, f.sigma_los);
    set(cfg.sigma_nlos, f.sigma_nlos);
    set(cfg.seed, f.seed);
    set(cfg.sweep.start, f.start);
    set(cfg.sweep.stop, f.stop);
    set(cfg.sweep.step, f.step);
    set(cfg.sweep.mc_samples, f.mc_samples);
    if (f.nlos)
        cfg.sweep.nlos = true;
    set(cfg.planner.r_edge_m, f.r_edge);
    set(cfg.planner.h_min_m, f.h_min);
    set(cfg.planner.h_max_m, f.h_max);
    set(cfg.planner.steps, f.steps);
    set(cfg.planner.target, f.target);
    set(cfg.planner.r_max_scan_m, f.r_max);
    set(cfg.planner.resolution_m, f.resolution);
    set(cfg.scenario.area_side_m, f.area);
    set(cfg.scenario.n_users, f.users);
    set(cfg.scenario.n_draws, f.draws);
    set(cfg.scenario.uav_x_m, f.uav_x);
    set(cfg.scenario.uav_y_m, f.uav_y);
    set(cfg.scenario.total_power_w, f.total_power);
    cfg.output_path = f.out;
    cfg.plot = f.plot;
    cfg.workers = f.workers;
}

inline void reject_nonfinite_flags(const FlagValues &f)
{
    auto check = [](const std::optional<double> &v, const char *flag) {
        if (v && !std::isfinite(*v))
            throw InvalidValue(flag, "command line", "must be finite");
    };
    check(f.h, "--h");
    check(f.r0, "--r0");
    check(f.sigma_los, "--sigma-los");
    check(f.sigma_nlos, "--sigma-nlos");
}

} // namespace detail

/// Parses argv into a fully resolved and validated RunConfig. Flags
/// override config-file values, which override defaults.
inline RunConfig build_config(Command cmd, const detail::FlagValues &flags)
{
    RunConfig cfg = default_config(cmd);
    if (!flags.config_path.empty())
        apply_json(cfg, parse_config_text(report::read_file(flags.config_path)));
    detail::reject_nonfinite_flags(flags);
    detail::apply_flags(cfg, flags);
    resolve(cfg);
    validate(cfg);
    return cfg;
}

/*!
 * Entry point of the uavcov tool. `args` excludes the program name.
 * Returns the process exit code: 0 success, 1 usage, 2 invalid value,
 * 3 I/O failure.
 */
inline int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"uavcov: air-to-ground coverage of UAV base stations", "uavcov"};
    // "--h" is the altitude flag, so help is long-form only
    app.set_help_flag("--help", "print this help and exit");
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    detail::FlagValues f;
    std::optional<Command> chosen;

    auto add = [&](Command cmd, const char *help) {
        auto *sub = app.add_subcommand(std::string(to_string(cmd)), help);
        sub->set_help_flag("--help", "print this help and exit");
        detail::add_common_flags(*sub, f);
        sub->callback([&chosen, cmd] { chosen = cmd; });
        return sub;
    };

    auto *plos = add(Command::sweep_plos, "LoS (or NLoS) probability versus elevation angle");
    detail::add_sweep_flags(*plos, f);
    plos->add_flag("--nlos", f.nlos, "emit P_NLoS instead of P_LoS");

    auto *pl = add(Command::sweep_pathloss, "mean path loss versus user distance");
    detail::add_sweep_flags(*pl, f);

    auto *cov = add(Command::sweep_coverage, "coverage probability versus user distance");
    detail::add_sweep_flags(*cov, f);
    cov->add_option("--mc-samples", f.mc_samples, "Monte Carlo draws per cell (0 = analytic only)");

    auto *opt = add(Command::optimize_altitude, "coverage-maximizing UAV altitude for an edge user");
    opt->add_option("--r-edge", f.r_edge, "horizontal distance of the edge user (m)");
    opt->add_option("--h-min", f.h_min, "lowest altitude on the grid (m)");
    opt->add_option("--h-max", f.h_max, "highest altitude on the grid (m)");
    opt->add_option("--steps", f.steps, "number of grid altitudes");

    auto *rad = add(Command::coverage_radius, "largest radius meeting a coverage target");
    rad->add_option("--target", f.target, "coverage probability target in (0, 1)");
    rad->add_option("--r-max", f.r_max, "scan limit (m)");
    rad->add_option("--resolution", f.resolution, "grid spacing (m)");

    auto *sc = add(Command::scenario, "random users under one UAV: per-user links and aggregates");
    sc->add_option("--users", f.users, "number of ground users");
    sc->add_option("--area", f.area, "side of the square area (m)");
    sc->add_option("--shape", f.shape, "square | disk (inscribed)");
    sc->add_option("--uav-x", f.uav_x, "UAV x (m), default area centre");
    sc->add_option("--uav-y", f.uav_y, "UAV y (m), default area centre");
    sc->add_option("--draws", f.draws, "shadowing realizations");
    sc->add_option("--total-power", f.total_power, "total power for energy efficiency (W)");

    add(Command::show_envs, "print the built-in environment parameters");

    try
    {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    }
    catch (const CLI::CallForHelp &)
    {
        out << app.help();
        return kExitOk;
    }
    catch (const CLI::CallForAllHelp &)
    {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    }
    catch (const CLI::CallForVersion &)
    {
        out << kVersion << "\n";
        return kExitOk;
    }
    catch (const CLI::ParseError &e)
    {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    try
    {
        const RunConfig cfg = build_config(*chosen, f);
        emit_table(execute(cfg), cfg.output_path, cfg.plot, out, err);
        return kExitOk;
    }
    catch (const ConfigError &e)
    {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }
    catch (const IoError &e)
    {
        err << "i/o error: " << e.what() << "\n";
        return kExitIo;
    }
    catch (const std::invalid_argument &e)
    {
        err << "error: " << e.what() << "\n";
        return kExitInvalidValue;
    }
    catch (const std::domain_error &e)
    {
        err << "error: " << e.what() << "\n";
        return kExitInvalidValue;
    }
}

} // namespace uavcov::cli
