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
#include <numbers>

#include "environment.hpp"
#include "errors.hpp"
#include "geometry.hpp"

namespace uavcov
{

inline constexpr double kSpeedOfLight = 299'792'458.0; // m/s

/*!
 * Probability that the link is line-of-sight at elevation theta_deg.
 *
 * Logistic S-curve 1 / (1 + a exp(-b (theta - a))) with theta in degrees.
 * The constant a is subtracted from the angle as-is; the tabulated (a, b)
 * pairs are calibrated for that form.
 */
inline double p_los(double theta_deg, const EnvironmentProfile &env)
{
    detail::require<DomainError>(detail::finite(theta_deg) && theta_deg >= 0.0 && theta_deg <= 90.0,
                                 "elevation angle must lie in [0, 90] degrees");
    return 1.0 / (1.0 + env.a * std::exp(-env.b * (theta_deg - env.a)));
}

inline double p_nlos(double theta_deg, const EnvironmentProfile &env) { return 1.0 - p_los(theta_deg, env); }

/// Free-space path loss in dB for carrier f_c (Hz) over distance d (m).
inline double fspl_db(double f_c, double d)
{
    detail::require<DomainError>(detail::finite(f_c) && f_c > 0.0, "carrier frequency must be > 0");
    detail::require<DomainError>(detail::finite(d) && d > 0.0, "distance must be > 0");
    return 20.0 * std::log10(4.0 * std::numbers::pi * f_c * d / kSpeedOfLight);
}

/// FSPL plus the LoS/NLoS-probability-weighted excess loss, for a link of
/// slant length slant_m seen at elevation theta_deg.
inline double mean_path_loss_db(double slant_m, double theta_deg, const EnvironmentProfile &env, double f_c)
{
    const double los = p_los(theta_deg, env);
    return fspl_db(f_c, slant_m) + env.mu_los * los + env.mu_nlos * (1.0 - los);
}

inline double mean_path_loss_db(const LinkGeometry &geom, const EnvironmentProfile &env, double f_c)
{
    return mean_path_loss_db(slant_distance(geom), elevation_angle_deg(geom), env, f_c);
}

} // namespace uavcov
