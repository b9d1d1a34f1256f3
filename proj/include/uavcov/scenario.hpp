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

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string_view>
#include <vector>

#include "channel.hpp"
#include "coverage.hpp"
#include "environment.hpp"
#include "errors.hpp"
#include "geometry.hpp"
#include "monte_carlo.hpp"
#include "parallel.hpp"
#include "philox.hpp"
#include "radio.hpp"

namespace uavcov
{

enum class AreaShape
{
    square, // [0, side]^2
    disk,   // radius side / 2 centred on (side / 2, side / 2)
};

inline std::string_view to_string(AreaShape shape) { return shape == AreaShape::square ? "square" : "disk"; }

inline std::optional<AreaShape> parse_shape(std::string_view text)
{
    if (text == "square")
        return AreaShape::square;
    if (text == "disk")
        return AreaShape::disk;
    return std::nullopt;
}

struct Position
{
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Position &, const Position &) = default;
};

struct UavPosition
{
    double x = 500.0;
    double y = 500.0;
    double h = 100.0;
};

struct ScenarioSpec
{
    double area_side_m = 1000.0;
    AreaShape shape = AreaShape::square;
    std::size_t n_users = 100;
    UavPosition uav;
    EnvironmentProfile env = urban();
    RadioConfig radio;
    std::uint64_t seed = 1;
    std::size_t n_draws = 100;
    FormulationMode mode = FormulationMode::standard;
    std::optional<double> total_power_w; // defaults to the transmitter power
    unsigned workers = 1;                 // does not affect results
};

struct UserRecord
{
    Position position;
    double r0 = 0.0;
    double theta_deg = 0.0;
    double p_los = 0.0;
    double mean_pl_db = 0.0;
    double p_cov = 0.0;
    double snr_db = 0.0;
    double rate_bps = 0.0;
};

struct ScenarioSummary
{
    double mean_p_cov = 0.0;
    std::vector<double> covered_fraction_draws;
    double sum_rate_bps = 0.0;
    double total_power_w = 0.0;
    double energy_efficiency = 0.0; // bit/J
};

struct ScenarioResult
{
    std::vector<UserRecord> records;
    ScenarioSummary summary;
};

// Stream ids under the scenario seed. Placement uses one stream; the
// shadowing draws of user i use stream kShadowingStreamBase + i.
inline constexpr std::uint64_t kPlacementStream = 0x706c616365ULL;
inline constexpr std::uint64_t kShadowingStreamBase = 1ULL << 40;

/// n positions drawn uniformly over the square [0, area_side]^2.
inline std::vector<Position> generate_users(std::size_t n, double area_side, std::uint64_t seed)
{
    detail::require<InvalidSpec>(n >= 1, "need at least one user");
    detail::require<InvalidSpec>(detail::finite(area_side) && area_side > 0.0, "area side must be > 0");
    const CounterStream rng(seed, kPlacementStream);
    std::vector<Position> users(n);
    for (std::size_t i = 0; i < n; ++i)
    {
        const auto bits = rng.block(i);
        users[i] = {area_side * unit_closed_open(bits[0]), area_side * unit_closed_open(bits[1])};
    }
    return users;
}

/// n positions drawn uniformly over the disk inscribed in the square.
inline std::vector<Position> generate_users_disk(std::size_t n, double area_side, std::uint64_t seed)
{
    detail::require<InvalidSpec>(n >= 1, "need at least one user");
    detail::require<InvalidSpec>(detail::finite(area_side) && area_side > 0.0, "area side must be > 0");
    const CounterStream rng(seed, kPlacementStream);
    const double radius = area_side / 2.0;
    std::vector<Position> users(n);
    for (std::size_t i = 0; i < n; ++i)
    {
        const auto bits = rng.block(i);
        const double r = radius * std::sqrt(unit_closed_open(bits[0]));
        const double phi = 2.0 * std::numbers::pi * unit_closed_open(bits[1]);
        users[i] = {radius + r * std::cos(phi), radius + r * std::sin(phi)};
    }
    return users;
}

inline double energy_efficiency(double sum_rate_bps, double total_power_w)
{
    detail::require<DomainError>(detail::finite(total_power_w) && total_power_w > 0.0, "total power must be > 0 W");
    return sum_rate_bps / total_power_w;
}

inline void validate(const ScenarioSpec &spec)
{
    detail::require<InvalidSpec>(detail::finite(spec.area_side_m) && spec.area_side_m > 0.0, "area side must be > 0");
    detail::require<InvalidSpec>(spec.n_users >= 1, "need at least one user");
    detail::require<InvalidSpec>(spec.n_draws >= 1, "need at least one shadowing draw");
    detail::require<InvalidSpec>(detail::finite(spec.uav.x) && detail::finite(spec.uav.y),
                                 "UAV position must be finite");
    detail::require<InvalidSpec>(detail::finite(spec.uav.h) && spec.uav.h > 0.0, "UAV altitude must be > 0");
    if (spec.total_power_w)
        detail::require<InvalidSpec>(detail::finite(*spec.total_power_w) && *spec.total_power_w > 0.0,
                                     "total power must be > 0 W");
    validate(spec.env);
    validate(spec.radio);
}

/// Per-user link statistics for the given positions, plus the aggregate
/// metrics. covered_fraction_draws[j] is the fraction of users covered in
/// shadowing realization j.
inline ScenarioResult evaluate_users(const ScenarioSpec &spec, const std::vector<Position> &users)
{
    validate(spec);
    detail::require<InvalidSpec>(!users.empty(), "need at least one user");

    ScenarioResult out;
    out.records.reserve(users.size());
    std::vector<BranchModel> models;
    models.reserve(users.size());
    const double noise_dbm = noise_power_dbm(spec.radio);

    for (const auto &pos : users)
    {
        UserRecord rec;
        rec.position = pos;
        rec.r0 = std::hypot(pos.x - spec.uav.x, pos.y - spec.uav.y);
        const LinkGeometry geom{rec.r0, spec.uav.h};
        const auto cov = coverage_probability(geom, spec.env, spec.radio, spec.mode);
        rec.theta_deg = cov.theta_deg;
        rec.p_los = cov.p_los;
        rec.mean_pl_db = cov.mean_pl_db;
        rec.p_cov = cov.p_cov;
        rec.snr_db = received_power_dbm(spec.radio, rec.mean_pl_db) - noise_dbm;
        rec.rate_bps = shannon_rate_bps(spec.radio.bandwidth_hz, rec.snr_db);
        out.records.push_back(rec);
        models.push_back(make_branch_model(geom, spec.env, spec.radio));
    }

    auto &sum = out.summary;
    double p_cov_total = 0.0;
    for (const auto &rec : out.records)
    {
        p_cov_total += rec.p_cov;
        sum.sum_rate_bps += rec.rate_bps;
    }
    sum.mean_p_cov = p_cov_total / static_cast<double>(out.records.size());
    sum.total_power_w = spec.total_power_w.value_or(dbm_to_watts(spec.radio.p_tx_dbm));
    sum.energy_efficiency = energy_efficiency(sum.sum_rate_bps, sum.total_power_w);

    // One draw per chunk keeps the work units coarse; draw j of user i is
    // always block pair j of that user's stream.
    std::vector<CounterStream> streams;
    streams.reserve(users.size());
    for (std::size_t i = 0; i < users.size(); ++i)
        streams.emplace_back(spec.seed, kShadowingStreamBase + i);

    sum.covered_fraction_draws.assign(spec.n_draws, 0.0);
    const double p_min = spec.radio.p_min_dbm;
    for_each_chunk(spec.n_draws, 1, spec.workers, [&](std::size_t draw, std::size_t, std::size_t) {
        std::size_t covered = 0;
        for (std::size_t i = 0; i < models.size(); ++i)
            covered += models[i].covered(shadowing_sample(streams[i], draw), p_min) ? 1 : 0;
        sum.covered_fraction_draws[draw] = static_cast<double>(covered) / static_cast<double>(models.size());
    });
    return out;
}

inline ScenarioResult evaluate_scenario(const ScenarioSpec &spec)
{
    validate(spec);
    const auto users = spec.shape == AreaShape::square ? generate_users(spec.n_users, spec.area_side_m, spec.seed)
                                                       : generate_users_disk(spec.n_users, spec.area_side_m, spec.seed);
    return evaluate_users(spec, users);
}

} // namespace uavcov
