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
#include <array>
#include <cctype>
#include <optional>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace uavcov
{

// Shadowing spreads are not part of the tabulated S-curve data; these are
// the library-wide defaults, overridable wherever an environment is used.
inline constexpr double kDefaultSigmaLosDb = 3.0;
inline constexpr double kDefaultSigmaNlosDb = 8.0;

/*!
 * Propagation environment: the LoS S-curve parameters (a, b) and the
 * Gaussian excess-loss statistics of the LoS and NLoS branches.
 *
 * b is a slope per degree of elevation. mu and sigma are in dB.
 */
struct EnvironmentProfile
{
    std::string name;
    double a = 0.0;
    double b = 0.0;
    double mu_los = 0.0;
    double mu_nlos = 0.0;
    double sigma_los = kDefaultSigmaLosDb;
    double sigma_nlos = kDefaultSigmaNlosDb;

    friend bool operator==(const EnvironmentProfile &, const EnvironmentProfile &) = default;
};

/// Throws InvalidSpec unless a, b > 0, 0 <= mu_los <= mu_nlos and both sigmas > 0.
inline void validate(const EnvironmentProfile &env)
{
    using detail::finite;
    const std::string tag = "environment '" + env.name + "': ";
    detail::require<InvalidSpec>(finite(env.a) && env.a > 0.0, tag + "a must be > 0");
    detail::require<InvalidSpec>(finite(env.b) && env.b > 0.0, tag + "b must be > 0");
    detail::require<InvalidSpec>(finite(env.mu_los) && env.mu_los >= 0.0, tag + "mu_los must be >= 0");
    detail::require<InvalidSpec>(finite(env.mu_nlos) && env.mu_nlos >= env.mu_los,
                                 tag + "mu_nlos must be >= mu_los");
    detail::require<InvalidSpec>(finite(env.sigma_los) && env.sigma_los > 0.0, tag + "sigma_los must be > 0");
    detail::require<InvalidSpec>(finite(env.sigma_nlos) && env.sigma_nlos > 0.0, tag + "sigma_nlos must be > 0");
}

inline EnvironmentProfile suburban() { return {"suburban", 5.2, 0.35, 0.1, 21.0}; }
inline EnvironmentProfile urban() { return {"urban", 10.6, 0.18, 1.0, 20.0}; }
inline EnvironmentProfile dense_urban() { return {"dense-urban", 11.95, 0.14, 1.6, 23.0}; }
inline EnvironmentProfile highrise_urban() { return {"highrise-urban", 26.5, 0.13, 2.3, 34.0}; }

/// The four built-in environments, ordered from least to most obstructed.
inline std::array<EnvironmentProfile, 4> builtin_environments()
{
    return {suburban(), urban(), dense_urban(), highrise_urban()};
}

namespace detail
{

inline std::string normalize_env_name(std::string_view name)
{
    std::string key;
    for (char c : name)
    {
        if (c == '-' || c == '_' || c == ' ')
            continue;
        key.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    return key;
}

} // namespace detail

/// Looks up a built-in by name; case, '-', '_' and spaces are ignored
/// ("dense urban", "Dense-Urban" and "dense_urban" all match).
inline std::optional<EnvironmentProfile> find_builtin(std::string_view name)
{
    auto key = detail::normalize_env_name(name);
    if (key == "highriseurban")
        return highrise_urban();
    for (auto &env : builtin_environments())
        if (detail::normalize_env_name(env.name) == key)
            return env;
    return std::nullopt;
}

inline EnvironmentProfile with_shadowing(EnvironmentProfile env, double sigma_los, double sigma_nlos)
{
    env.sigma_los = sigma_los;
    env.sigma_nlos = sigma_nlos;
    return env;
}

/// Identifier-safe form of the environment name, used for column labels.
inline std::string column_slug(const EnvironmentProfile &env)
{
    std::string slug;
    for (char c : env.name)
    {
        auto u = static_cast<unsigned char>(c);
        slug.push_back(std::isalnum(u) ? static_cast<char>(std::tolower(u)) : '_');
    }
    return slug;
}

} // namespace uavcov
