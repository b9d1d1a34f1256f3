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


#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdint>
#include <set>
#include <vector>

#include "uavcov/monte_carlo.hpp"
#include "uavcov/parallel.hpp"
#include "uavcov/philox.hpp"

using namespace uavcov;

TEST_CASE("Philox4x32-10 known-answer vectors", "[random]")
{
    // Reference vectors distributed with Random123 (kat_vectors).
    using C = Philox4x32::Counter;
    using K = Philox4x32::Key;
    CHECK(Philox4x32::apply(C{0, 0, 0, 0}, K{0, 0}) == C{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
    CHECK(Philox4x32::apply(C{0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, K{0xffffffff, 0xffffffff}) ==
          C{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
    CHECK(Philox4x32::apply(C{0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, K{0xa4093822, 0x299f31d0}) ==
          C{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
}

TEST_CASE("counter streams are addressable and distinct", "[random]")
{
    const CounterStream a(11, 0), b(11, 1), c(12, 0);
    CHECK(a.block(5) == CounterStream(11, 0).block(5));
    CHECK(a.block(5) != a.block(6));
    CHECK(a.block(5) != b.block(5));
    CHECK(a.block(5) != c.block(5));

    std::set<std::uint64_t> seen;
    for (std::uint64_t i = 0; i < 10000; ++i)
        seen.insert(a.block(i)[0]);
    CHECK(seen.size() == 10000);
}

TEST_CASE("unit conversions stay in range", "[random]")
{
    CHECK(unit_closed_open(0) == 0.0);
    CHECK(unit_closed_open(~std::uint64_t{0}) < 1.0);
    CHECK(unit_open_closed(0) > 0.0);
    CHECK(unit_open_closed(~std::uint64_t{0}) == 1.0);
}

TEST_CASE("shadowing samples have the right moments", "[random][property]")
{
    const CounterStream rng(2026, 9);
    const std::size_t n = 400'000;
    double su = 0, sz = 0, szz = 0, tail = 0;
    for (std::size_t i = 0; i < n; ++i)
    {
        const auto s = shadowing_sample(rng, i);
        REQUIRE(s.u_select >= 0.0);
        REQUIRE(s.u_select < 1.0);
        su += s.u_select;
        sz += s.z;
        szz += s.z * s.z;
        tail += s.z > 1.0 ? 1.0 : 0.0;
    }
    const double dn = static_cast<double>(n);
    CHECK(std::abs(su / dn - 0.5) < 4.0 * std::sqrt(1.0 / 12.0 / dn));
    CHECK(std::abs(sz / dn) < 4.0 / std::sqrt(dn));
    CHECK(std::abs(szz / dn - 1.0) < 4.0 * std::sqrt(2.0 / dn));
    const double q1 = 0.15865525393145705141;
    CHECK(std::abs(tail / dn - q1) < 4.0 * std::sqrt(q1 * (1 - q1) / dn));
}

TEST_CASE("chunked parallel loop visits every index once", "[parallel]")
{
    for (unsigned workers : {1u, 3u, 8u})
    {
        std::vector<int> visits(1001, 0);
        std::vector<std::size_t> chunk_of(1001, 0);
        for_each_chunk(visits.size(), 64, workers, [&](std::size_t chunk, std::size_t begin, std::size_t end) {
            for (auto i = begin; i < end; ++i)
            {
                ++visits[i];
                chunk_of[i] = chunk;
            }
        });
        for (std::size_t i = 0; i < visits.size(); ++i)
        {
            CHECK(visits[i] == 1);
            CHECK(chunk_of[i] == i / 64);
        }
    }
    CHECK(chunk_count(1001, 64) == 16);
    CHECK(chunk_count(0, 64) == 0);
    std::size_t calls = 0;
    for_each_chunk(0, 8, 4, [&](std::size_t, std::size_t, std::size_t) { ++calls; });
    CHECK(calls == 0);
}
