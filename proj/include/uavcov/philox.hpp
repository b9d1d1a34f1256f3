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

#include <array>
#include <cstdint>

namespace uavcov
{

/*!
 * Philox4x32-10 counter-based bijection (Salmon et al., SC'11).
 *
 * Each 128-bit counter maps to an independent-looking 128-bit block under a
 * 64-bit key, so any draw can be addressed directly without advancing a
 * sequential state. That is what makes parallel sampling seed-deterministic.
 */
class Philox4x32
{
  public:
    using Counter = std::array<std::uint32_t, 4>;
    using Key = std::array<std::uint32_t, 2>;

    static constexpr Counter apply(Counter ctr, Key key) noexcept
    {
        for (int round = 0; round < 10; ++round)
        {
            if (round > 0)
            {
                key[0] += kWeylA;
                key[1] += kWeylB;
            }
            ctr = single_round(ctr, key);
        }
        return ctr;
    }

  private:
    static constexpr std::uint32_t kMulA = 0xD2511F53;
    static constexpr std::uint32_t kMulB = 0xCD9E8D57;
    static constexpr std::uint32_t kWeylA = 0x9E3779B9;
    static constexpr std::uint32_t kWeylB = 0xBB67AE85;

    static constexpr Counter single_round(const Counter &ctr, const Key &key) noexcept
    {
        const std::uint64_t prod0 = std::uint64_t{kMulA} * ctr[0];
        const std::uint64_t prod1 = std::uint64_t{kMulB} * ctr[2];
        const auto hi0 = static_cast<std::uint32_t>(prod0 >> 32);
        const auto lo0 = static_cast<std::uint32_t>(prod0);
        const auto hi1 = static_cast<std::uint32_t>(prod1 >> 32);
        const auto lo1 = static_cast<std::uint32_t>(prod1);
        return {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    }
};

/*!
 * A seeded family of streams. Block `index` of stream `stream` is
 * Philox(counter = {index, stream}, key = seed), returned as two 64-bit
 * words.
 */
class CounterStream
{
  public:
    constexpr CounterStream(std::uint64_t seed, std::uint64_t stream) noexcept
        : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)}, stream_(stream)
    {
    }

    constexpr std::array<std::uint64_t, 2> block(std::uint64_t index) const noexcept
    {
        const Philox4x32::Counter ctr{static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
                                      static_cast<std::uint32_t>(stream_),
                                      static_cast<std::uint32_t>(stream_ >> 32)};
        const auto out = Philox4x32::apply(ctr, key_);
        return {std::uint64_t{out[0]} | (std::uint64_t{out[1]} << 32),
                std::uint64_t{out[2]} | (std::uint64_t{out[3]} << 32)};
    }

  private:
    Philox4x32::Key key_;
    std::uint64_t stream_;
};

/// Uniform double in [0, 1) from the top 53 bits.
constexpr double unit_closed_open(std::uint64_t bits) noexcept
{
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

/// Uniform double in (0, 1] from the top 53 bits; safe to take the log of.
constexpr double unit_open_closed(std::uint64_t bits) noexcept
{
    return static_cast<double>((bits >> 11) + 1) * 0x1.0p-53;
}

} // namespace uavcov
