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
#include <optional>
#include <string>
#include <string_view>

#include "channel.hpp"
#include "environment.hpp"
#include "errors.hpp"
#include "geometry.hpp"
#include "qfunction.hpp"
#include "radio.hpp"

namespace uavcov
{

/*!
 * How the branch arguments of the coverage formula are built.
 *
 * standard:      (p_min - p_tx - G + FSPL + mu) / sigma. The branch mean
 *                loss is FSPL + mu and the spread is the standard deviation,
 *                which is the model sampled by coverage_monte_carlo.
 * paper_literal: (p_min + PL - p_tx - G + mu) / sigma^2 with PL the mean
 *                path loss (FSPL plus the weighted excess loss). Kept for
 *                auditing the printed formula; it counts mu twice and
 *                divides by the variance.
 */
enum class FormulationMode
{
    standard,
    paper_literal,
};

inline std::string_view to_string(FormulationMode mode)
{
    return mode == FormulationMode::standard ? "standard" : "paper-literal";
}

inline std::optional<FormulationMode> parse_mode(std::string_view text)
{
    if (text == "standard")
        return FormulationMode::standard;
    if (text == "paper-literal" || text == "paper_literal")
        return FormulationMode::paper_literal;
    return std::nullopt;
}

/// The two path-loss figures of a link; which one enters a branch argument
/// depends on the formulation mode.
struct LinkLosses
{
    double fspl_db = 0.0;
    double mean_pl_db = 0.0;
};

inline double branch_argument(const RadioConfig &radio, const LinkLosses &losses, double mu, double sigma,
                              FormulationMode mode)
{
    detail::require<DomainError>(detail::finite(sigma) && sigma > 0.0, "shadowing sigma must be > 0");
    if (mode == FormulationMode::standard)
        return (radio.p_min_dbm - radio.p_tx_dbm - radio.g_db + losses.fspl_db + mu) / sigma;
    return (radio.p_min_dbm + losses.mean_pl_db - radio.p_tx_dbm - radio.g_db + mu) / (sigma * sigma);
}

/// Every intermediate of one coverage evaluation.
struct CoverageBreakdown
{
    double theta_deg = 0.0;
    double slant_m = 0.0;
    double p_los = 0.0;
    double p_nlos = 0.0;
    double fspl_db = 0.0;
    double mean_pl_db = 0.0;
    double deficit_los = 0.0;  // A
    double deficit_nlos = 0.0; // B
    double q_los = 0.0;
    double q_nlos = 0.0;
    double p_cov = 0.0;
};

/*!
 * Downlink coverage probability P(p_r >= p_min) for one link:
 * P_LoS Q(A) + P_NLoS Q(B).
 *
 * When the two branches have identical Q values the mixture collapses to
 * that value exactly, independent of the LoS weight.
 */
inline CoverageBreakdown coverage_probability(const LinkGeometry &geom, const EnvironmentProfile &env,
                                              const RadioConfig &radio,
                                              FormulationMode mode = FormulationMode::standard)
{
    validate(geom);
    validate(env);
    validate(radio);

    CoverageBreakdown out;
    out.slant_m = slant_distance(geom);
    out.theta_deg = elevation_angle_deg(geom);
    out.p_los = p_los(out.theta_deg, env);
    out.p_nlos = 1.0 - out.p_los;
    out.fspl_db = fspl_db(radio.f_c_hz, out.slant_m);
    out.mean_pl_db = out.fspl_db + env.mu_los * out.p_los + env.mu_nlos * out.p_nlos;

    const LinkLosses losses{out.fspl_db, out.mean_pl_db};
    out.deficit_los = branch_argument(radio, losses, env.mu_los, env.sigma_los, mode);
    out.deficit_nlos = branch_argument(radio, losses, env.mu_nlos, env.sigma_nlos, mode);
    out.q_los = q_function(out.deficit_los);
    out.q_nlos = q_function(out.deficit_nlos);

    if (out.q_los == out.q_nlos)
        out.p_cov = out.q_los;
    else
        out.p_cov = std::clamp(out.p_los * out.q_los + out.p_nlos * out.q_nlos, 0.0, 1.0);
    return out;
}

} // namespace uavcov
