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

#include "errors.hpp"

namespace uavcov
{

inline constexpr double kUavTxPowerDbm = 40.0;  // 10 W
inline constexpr double kUserTxPowerDbm = 30.0; // 1 W

/// Link-budget parameters of the serving transmitter and the receiver.
struct RadioConfig
{
    double f_c_hz = 2.0e9;
    double p_tx_dbm = kUavTxPowerDbm;
    double g_db = 3.0;
    double p_min_dbm = -80.0;
    double noise_density_dbm_hz = -174.0;
    double bandwidth_hz = 5.0e6;

    friend bool operator==(const RadioConfig &, const RadioConfig &) = default;
};

inline void validate(const RadioConfig &radio)
{
    using detail::finite;
    detail::require<InvalidSpec>(finite(radio.f_c_hz) && radio.f_c_hz > 0.0, "radio: f_c must be > 0");
    detail::require<InvalidSpec>(finite(radio.bandwidth_hz) && radio.bandwidth_hz > 0.0,
                                 "radio: bandwidth must be > 0");
    detail::require<InvalidSpec>(finite(radio.p_tx_dbm) && finite(radio.g_db) && finite(radio.p_min_dbm) &&
                                     finite(radio.noise_density_dbm_hz),
                                 "radio: all fields must be finite");
}

inline double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

inline double watts_to_dbm(double watts)
{
    detail::require<DomainError>(watts > 0.0, "power must be > 0 W");
    return 10.0 * std::log10(watts) + 30.0;
}

inline double received_power_dbm(const RadioConfig &radio, double total_path_loss_db)
{
    return radio.p_tx_dbm + radio.g_db - total_path_loss_db;
}

/// Thermal noise integrated over the receiver bandwidth.
inline double noise_power_dbm(const RadioConfig &radio)
{
    detail::require<DomainError>(detail::finite(radio.bandwidth_hz) && radio.bandwidth_hz > 0.0,
                                 "bandwidth must be > 0");
    return radio.noise_density_dbm_hz + 10.0 * std::log10(radio.bandwidth_hz);
}

inline double snr_db(const RadioConfig &radio, double total_path_loss_db)
{
    return received_power_dbm(radio, total_path_loss_db) - noise_power_dbm(radio);
}

/// Shannon capacity in bit/s at the given SNR.
inline double shannon_rate_bps(double bandwidth_hz, double snr_db_value)
{
    return bandwidth_hz * std::log2(1.0 + std::pow(10.0, snr_db_value / 10.0));
}

} // namespace uavcov
