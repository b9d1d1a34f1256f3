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
#include <vector>

#include "channel.hpp"
#include "environment.hpp"
#include "errors.hpp"
#include "geometry.hpp"
#include "parallel.hpp"
#include "philox.hpp"
#include "radio.hpp"

namespace uavcov
{

/// One realization of the LoS/NLoS shadowing model: a uniform used to pick
/// the branch and a standard normal deviate for the shadowing term.
struct ShadowingSample
{
    double u_select = 0.0;
    double z = 0.0;
};

/// Draw `index` of a stream consumes blocks 2*index and 2*index + 1.
/// Box-Muller on (0, 1] x [0, 1) uniforms.
inline ShadowingSample shadowing_sample(const CounterStream &stream, std::uint64_t index) noexcept
{
    const auto first = stream.block(2 * index);
    const auto second = stream.block(2 * index + 1);
    const double radius = std::sqrt(-2.0 * std::log(unit_open_closed(first[1])));
    const double angle = 2.0 * std::numbers::pi * unit_closed_open(second[0]);
    return {unit_closed_open(first[0]), radius * std::cos(angle)};
}

/// Sampled received power of one link, mean loss FSPL + mu_k per branch.
struct BranchModel
{
    double p_los = 0.0;
    double rx_los_mean_dbm = 0.0;
    double rx_nlos_mean_dbm = 0.0;
    double sigma_los = 0.0;
    double sigma_nlos = 0.0;

    bool covered(const ShadowingSample &s, double p_min_dbm) const noexcept
    {
        const bool los = s.u_select < p_los;
        const double rx = los ? rx_los_mean_dbm - sigma_los * s.z : rx_nlos_mean_dbm - sigma_nlos * s.z;
        return rx >= p_min_dbm;
    }
};

/// Builds the sampled model of a link. Zero sigmas are accepted here (the
/// noiseless limit); the analytic route requires them to be positive.
inline BranchModel make_branch_model(const LinkGeometry &geom, const EnvironmentProfile &env,
                                     const RadioConfig &radio)
{
    validate(geom);
    validate(radio);
    detail::require<InvalidSpec>(env.sigma_los >= 0.0 && env.sigma_nlos >= 0.0, "sigma must be >= 0");
    const double loss = fspl_db(radio.f_c_hz, slant_distance(geom));
    const double rx_free = received_power_dbm(radio, loss);
    return {p_los(elevation_angle_deg(geom), env), rx_free - env.mu_los, rx_free - env.mu_nlos, env.sigma_los,
            env.sigma_nlos};
}

struct MonteCarloEstimate
{
    double estimate = 0.0;
    double std_error = 0.0;
    std::uint64_t hits = 0;
    std::uint64_t samples = 0;
};

inline constexpr std::size_t kMonteCarloChunk = 1 << 16;

/*!
 * Empirical coverage probability of one link from n_samples independent
 * draws of the shadowing model.
 *
 * Draw i always uses counter block 2i, 2i+1 of (seed, stream), and hits are
 * integer-summed per chunk, so the estimate is bit-identical for any worker
 * count.
 */
inline MonteCarloEstimate coverage_monte_carlo(const LinkGeometry &geom, const EnvironmentProfile &env,
                                               const RadioConfig &radio, std::uint64_t n_samples,
                                               std::uint64_t seed, unsigned workers = 1,
                                               std::uint64_t stream = 0)
{
    detail::require<DomainError>(n_samples >= 1, "Monte Carlo needs at least one sample");
    const BranchModel model = make_branch_model(geom, env, radio);
    const CounterStream rng(seed, stream);

    std::vector<std::uint64_t> chunk_hits(chunk_count(n_samples, kMonteCarloChunk), 0);
    for_each_chunk(n_samples, kMonteCarloChunk, workers, [&](std::size_t chunk, std::size_t begin, std::size_t end) {
        std::uint64_t hits = 0;
        for (std::size_t i = begin; i < end; ++i)
            hits += model.covered(shadowing_sample(rng, i), radio.p_min_dbm) ? 1 : 0;
        chunk_hits[chunk] = hits;
    });

    MonteCarloEstimate out;
    out.samples = n_samples;
    for (auto h : chunk_hits)
        out.hits += h;
    const double n = static_cast<double>(n_samples);
    out.estimate = static_cast<double>(out.hits) / n;
    out.std_error = std::sqrt(out.estimate * (1.0 - out.estimate) / n);
    return out;
}

} // namespace uavcov
