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
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "channel.hpp"
#include "coverage.hpp"
#include "environment.hpp"
#include "errors.hpp"
#include "geometry.hpp"
#include "radio.hpp"

namespace uavcov
{

enum class SweepAxis
{
    elevation_angle_deg,
    user_distance_m,
    altitude_m,
};

inline std::string_view to_string(SweepAxis axis)
{
    switch (axis)
    {
    case SweepAxis::elevation_angle_deg:
        return "elevation-angle-deg";
    case SweepAxis::user_distance_m:
        return "user-distance-m";
    case SweepAxis::altitude_m:
        return "altitude-m";
    }
    return "?";
}

inline std::optional<SweepAxis> parse_axis(std::string_view text)
{
    if (text == "elevation-angle-deg" || text == "angle")
        return SweepAxis::elevation_angle_deg;
    if (text == "user-distance-m" || text == "distance")
        return SweepAxis::user_distance_m;
    if (text == "altitude-m" || text == "altitude")
        return SweepAxis::altitude_m;
    return std::nullopt;
}

/*!
 * A one-dimensional sweep. The coordinate not swept is taken from
 * `baseline`:
 *  - elevation-angle-deg: h fixed, r0 = h / tan(theta)
 *  - user-distance-m:     h fixed, r0 swept
 *  - altitude-m:          r0 fixed, h swept
 */
struct SweepSpec
{
    SweepAxis axis = SweepAxis::elevation_angle_deg;
    double start = 0.5;
    double stop = 90.0;
    double step = 0.5;
    std::vector<EnvironmentProfile> environments;
    LinkGeometry baseline;
    RadioConfig radio;
    FormulationMode mode = FormulationMode::standard;
};

struct SweepPoint
{
    double p_los = 0.0;
    double p_nlos = 0.0;
    double fspl_db = 0.0;
    double mean_pl_db = 0.0;
    double p_cov = 0.0;
};

struct SweepRow
{
    double axis_value = 0.0;
    LinkGeometry geometry;
    std::vector<SweepPoint> points; // one per environment, in spec order
};

struct SweepResult
{
    SweepAxis axis = SweepAxis::elevation_angle_deg;
    std::vector<SweepRow> rows;
};

// Tolerates (stop - start) / step landing a few ulps below an integer.
inline std::size_t grid_size(double start, double stop, double step)
{
    detail::require<InvalidSpec>(detail::finite(start) && detail::finite(stop) && detail::finite(step),
                                 "sweep bounds must be finite");
    detail::require<InvalidSpec>(step > 0.0, "sweep step must be > 0");
    detail::require<InvalidSpec>(start <= stop, "sweep start must be <= stop");
    return static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
}

inline double grid_value(double start, double step, std::size_t i) { return start + static_cast<double>(i) * step; }

inline void validate(const SweepSpec &spec)
{
    grid_size(spec.start, spec.stop, spec.step);
    detail::require<InvalidSpec>(!spec.environments.empty(), "sweep needs at least one environment");
    for (const auto &env : spec.environments)
        validate(env);
    validate(spec.radio);
    switch (spec.axis)
    {
    case SweepAxis::elevation_angle_deg:
        detail::require<InvalidSpec>(spec.start > 0.0 && spec.stop <= 90.0,
                                     "elevation sweep must stay within (0, 90] degrees");
        detail::require<InvalidSpec>(detail::finite(spec.baseline.h) && spec.baseline.h > 0.0,
                                     "elevation sweep needs a baseline altitude > 0");
        break;
    case SweepAxis::user_distance_m:
        detail::require<InvalidSpec>(spec.start >= 0.0, "distance sweep must start at >= 0 m");
        detail::require<InvalidSpec>(detail::finite(spec.baseline.h) && spec.baseline.h > 0.0,
                                     "distance sweep needs a baseline altitude > 0");
        break;
    case SweepAxis::altitude_m:
        detail::require<InvalidSpec>(spec.start > 0.0, "altitude sweep must start above 0 m");
        detail::require<InvalidSpec>(detail::finite(spec.baseline.r0) && spec.baseline.r0 >= 0.0,
                                     "altitude sweep needs a baseline r0 >= 0");
        break;
    }
}

/// Evaluates P_LoS, P_NLoS, mean path loss and P_cov at every grid point for
/// every environment. Angle sweeps evaluate the S-curve at the exact axis
/// angle rather than the one recovered from the derived geometry.
inline SweepResult run_sweep(const SweepSpec &spec)
{
    validate(spec);
    const std::size_t n = grid_size(spec.start, spec.stop, spec.step);

    SweepResult result;
    result.axis = spec.axis;
    result.rows.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
    {
        SweepRow row;
        row.axis_value = grid_value(spec.start, spec.step, i);
        row.geometry = spec.baseline;
        switch (spec.axis)
        {
        case SweepAxis::elevation_angle_deg:
            row.geometry.r0 = horizontal_distance_for_elevation(spec.baseline.h, row.axis_value);
            break;
        case SweepAxis::user_distance_m:
            row.geometry.r0 = row.axis_value;
            break;
        case SweepAxis::altitude_m:
            row.geometry.h = row.axis_value;
            break;
        }

        row.points.reserve(spec.environments.size());
        for (const auto &env : spec.environments)
        {
            const auto cov = coverage_probability(row.geometry, env, spec.radio, spec.mode);
            SweepPoint pt;
            if (spec.axis == SweepAxis::elevation_angle_deg)
            {
                pt.p_los = p_los(row.axis_value, env);
                pt.p_nlos = 1.0 - pt.p_los;
                pt.fspl_db = cov.fspl_db;
                pt.mean_pl_db = pt.fspl_db + env.mu_los * pt.p_los + env.mu_nlos * pt.p_nlos;
            }
            else
            {
                pt.p_los = cov.p_los;
                pt.p_nlos = cov.p_nlos;
                pt.fspl_db = cov.fspl_db;
                pt.mean_pl_db = cov.mean_pl_db;
            }
            pt.p_cov = cov.p_cov;
            row.points.push_back(pt);
        }
        result.rows.push_back(std::move(row));
    }
    return result;
}

struct AltitudeOptimum
{
    double h_star = 0.0;
    double p_cov_star = 0.0;
};

/// i-th point of an inclusive linear grid of `steps` points; the last point
/// is exactly `hi`.
inline double linspace_point(double lo, double hi, std::size_t steps, std::size_t i)
{
    if (i + 1 == steps)
        return hi;
    return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1);
}

/*!
 * Altitude on the grid linspace(h_min, h_max, steps) that maximizes the
 * coverage probability of a user at horizontal distance r_edge. Ties go to
 * the lowest altitude.
 */
inline AltitudeOptimum optimal_altitude(double r_edge, const EnvironmentProfile &env, const RadioConfig &radio,
                                        double h_min, double h_max, std::size_t steps,
                                        FormulationMode mode = FormulationMode::standard)
{
    detail::require<InvalidSpec>(detail::finite(h_min) && detail::finite(h_max) && h_min > 0.0 && h_min < h_max,
                                 "altitude range must satisfy 0 < h_min < h_max");
    detail::require<InvalidSpec>(steps >= 2, "altitude grid needs at least 2 steps");
    detail::require<InvalidSpec>(detail::finite(r_edge) && r_edge >= 0.0, "r_edge must be >= 0");

    AltitudeOptimum best{h_min, -1.0};
    for (std::size_t i = 0; i < steps; ++i)
    {
        const double h = linspace_point(h_min, h_max, steps, i);
        const double p = coverage_probability({r_edge, h}, env, radio, mode).p_cov;
        if (p > best.p_cov_star)
            best = {h, p};
    }
    return best;
}

/*!
 * Largest grid distance k * resolution <= r_max_scan whose coverage
 * probability reaches `target`. Every grid point is evaluated, so coverage
 * holes inside the returned radius are possible. If the nadir point
 * (r0 = 0) itself misses the target the result is 0.
 */
inline double max_coverage_radius(double h, const EnvironmentProfile &env, const RadioConfig &radio, double target,
                                  double r_max_scan, double resolution,
                                  FormulationMode mode = FormulationMode::standard)
{
    detail::require<InvalidSpec>(detail::finite(target) && target > 0.0 && target < 1.0, "target must lie in (0, 1)");
    detail::require<InvalidSpec>(detail::finite(resolution) && resolution > 0.0, "resolution must be > 0");
    detail::require<InvalidSpec>(detail::finite(r_max_scan) && r_max_scan >= 0.0, "r_max_scan must be >= 0");

    if (coverage_probability({0.0, h}, env, radio, mode).p_cov < target)
        return 0.0;
    const std::size_t n = grid_size(0.0, r_max_scan, resolution);
    double radius = 0.0;
    for (std::size_t k = 1; k < n; ++k)
    {
        const double r = grid_value(0.0, resolution, k);
        if (coverage_probability({r, h}, env, radio, mode).p_cov >= target)
            radius = r;
    }
    return radius;
}

} // namespace uavcov
