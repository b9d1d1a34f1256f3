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
#include <cmath>
#include <numbers>

#include "errors.hpp"

namespace uavcov
{

/// UAV position relative to one ground user: horizontal distance r0 (m) and
/// altitude h (m).
struct LinkGeometry
{
    double r0 = 0.0;
    double h = 100.0;
};

inline void validate(const LinkGeometry &geom)
{
    detail::require<InvalidGeometry>(detail::finite(geom.r0) && geom.r0 >= 0.0,
                                     "link geometry: r0 must be finite and >= 0");
    detail::require<InvalidGeometry>(detail::finite(geom.h) && geom.h > 0.0,
                                     "link geometry: h must be finite and > 0");
}

/// 3-D UAV-to-user distance in metres.
inline double slant_distance(const LinkGeometry &geom)
{
    validate(geom);
    return std::hypot(geom.r0, geom.h);
}

/// Elevation of the UAV seen from the user, in degrees. Directly overhead
/// (r0 = 0) is exactly 90.
inline double elevation_angle_deg(const LinkGeometry &geom)
{
    validate(geom);
    if (geom.r0 == 0.0)
        return 90.0;
    const double deg = std::atan2(geom.h, geom.r0) * (180.0 / std::numbers::pi);
    return std::min(deg, 90.0);
}

/// Horizontal distance at which a UAV at altitude h is seen at elevation
/// theta_deg. theta_deg must lie in (0, 90].
inline double horizontal_distance_for_elevation(double h, double theta_deg)
{
    detail::require<InvalidGeometry>(detail::finite(h) && h > 0.0, "altitude must be finite and > 0");
    detail::require<InvalidGeometry>(detail::finite(theta_deg) && theta_deg > 0.0 && theta_deg <= 90.0,
                                     "elevation angle must lie in (0, 90] degrees");
    if (theta_deg == 90.0)
        return 0.0;
    const double rad = theta_deg * (std::numbers::pi / 180.0);
    return std::max(0.0, h * std::cos(rad) / std::sin(rad));
}

} // namespace uavcov
