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

#include <array>
#include <cmath>
#include <random>

#include "uavcov/coverage.hpp"
#include "uavcov/monte_carlo.hpp"
#include "uavcov/qfunction.hpp"
#include "uavcov/radio.hpp"

using namespace uavcov;
using Catch::Approx;

TEST_CASE("Q function against quadrature", "[qfunction]")
{
    // Gaussian tail integrated numerically at 40 digits (mpmath quad).
    struct Point
    {
        double x, q;
    };
    const std::array<Point, 11> table{{{-8.0, 0.9999999999999993779},
                                       {-5.0, 0.99999971334842812081},
                                       {-2.5, 0.99379033467422386483},
                                       {-1.0, 0.84134474606854294859},
                                       {0.5, 0.30853753872598689636},
                                       {1.0, 0.15865525393145705141},
                                       {2.0, 0.0227501319481792072},
                                       {3.5, 0.00023262907903552503635},
                                       {5.0, 2.8665157187919391167e-7},
                                       {6.0, 9.865876450376981407e-10},
                                       {8.0, 6.2209605742717841235e-16}}};
    for (const auto &p : table)
        CHECK(std::abs(q_function(p.x) - p.q) <= 1e-10 * p.q);
    CHECK(q_function(0.0) == 0.5);
}

TEST_CASE("Q function properties", "[qfunction][property]")
{
    std::mt19937_64 gen(42);
    std::uniform_real_distribution<double> dist(-8.0, 8.0);
    for (int i = 0; i < 1000; ++i)
    {
        const double x = dist(gen);
        CHECK(std::abs(q_function(x) + q_function(-x) - 1.0) <= 1e-12);
        CHECK(q_function(x) > 0.0);
        CHECK(q_function(x) < 1.0);
    }
    // non-increasing everywhere; strictly so away from the saturated tail
    double prev = 2.0;
    for (double x = -8.0; x <= 8.0; x += 0.01)
    {
        const double q = q_function(x);
        CHECK(q <= prev);
        if (x > -7.0)
            CHECK(q < prev);
        prev = q;
    }
}

TEST_CASE("received and noise power", "[radio]")
{
    RadioConfig radio;
    CHECK(received_power_dbm(radio, 0.0) == 43.0);
    CHECK(received_power_dbm(radio, 81.57) == Approx(-38.57).epsilon(1e-15));
    CHECK(received_power_dbm(radio, 90.0) - received_power_dbm(radio, 97.5) == Approx(7.5).epsilon(1e-15));

    radio.bandwidth_hz = 1.0;
    CHECK(noise_power_dbm(radio) == -174.0);
    radio.bandwidth_hz = 5e6;
    CHECK(noise_power_dbm(radio) == Approx(-107.01029995663981195).epsilon(1e-14));
    const double base = noise_power_dbm(radio);
    radio.bandwidth_hz = 5e7;
    CHECK(noise_power_dbm(radio) - base == Approx(10.0).epsilon(1e-14));
    radio.bandwidth_hz = 0.0;
    CHECK_THROWS_AS(noise_power_dbm(radio), DomainError);

    CHECK(dbm_to_watts(40.0) == Approx(10.0).epsilon(1e-15));
    CHECK(dbm_to_watts(kUserTxPowerDbm) == Approx(1.0).epsilon(1e-15));
    CHECK(watts_to_dbm(10.0) == Approx(40.0).epsilon(1e-15));
}

TEST_CASE("branch argument", "[coverage]")
{
    RadioConfig radio;
    radio.p_min_dbm = -80.0;
    CHECK(branch_argument(radio, {78.468, 0.0}, 0.1, 3.0, FormulationMode::standard) ==
          Approx(-14.810666666666666667).epsilon(1e-13));

    // exact balance
    radio.p_min_dbm = radio.p_tx_dbm + radio.g_db - 78.0 - 1.5;
    CHECK(branch_argument(radio, {78.0, 0.0}, 1.5, 3.0, FormulationMode::standard) == Approx(0.0).margin(1e-15));

    radio.p_min_dbm = -70.0;
    const double base = branch_argument(radio, {90.0, 0.0}, 20.0, 8.0, FormulationMode::standard);
    radio.p_min_dbm = -78.0;
    CHECK(branch_argument(radio, {90.0, 0.0}, 20.0, 8.0, FormulationMode::standard) == Approx(base - 1.0));

    // paper-literal: mean PL and sigma squared
    radio.p_min_dbm = -80.0;
    CHECK(branch_argument(radio, {78.0, 81.0}, 2.0, 4.0, FormulationMode::paper_literal) ==
          Approx((-80.0 + 81.0 - 40.0 - 3.0 + 2.0) / 16.0));

    CHECK_THROWS_AS(branch_argument(radio, {78.0, 81.0}, 2.0, 0.0, FormulationMode::standard), DomainError);
    CHECK_THROWS_AS(branch_argument(radio, {78.0, 81.0}, 2.0, -1.0, FormulationMode::paper_literal), DomainError);
}

TEST_CASE("formulation mode names", "[coverage]")
{
    CHECK(parse_mode("standard") == FormulationMode::standard);
    CHECK(parse_mode("paper-literal") == FormulationMode::paper_literal);
    CHECK_FALSE(parse_mode("literal"));
    CHECK(to_string(FormulationMode::paper_literal) == "paper-literal");
}

TEST_CASE("coverage breakdown against a high-precision evaluation", "[coverage]")
{
    RadioConfig radio;
    radio.p_min_dbm = -45.0;
    const LinkGeometry geom{200.0, 100.0};

    const auto s = coverage_probability(geom, urban(), radio, FormulationMode::standard);
    CHECK(s.p_los == Approx(0.62547556363781973986).epsilon(1e-13));
    CHECK(s.fspl_db == Approx(85.45808317852318576).epsilon(1e-13));
    CHECK(s.mean_pl_db == Approx(93.574047469404610702).epsilon(1e-13));
    CHECK(s.deficit_los == Approx(-0.51397227382560474671).epsilon(1e-11));
    CHECK(s.deficit_nlos == Approx(2.18226039731539822).epsilon(1e-12));
    CHECK(s.q_los == Approx(0.6963643122141665557).epsilon(1e-12));
    CHECK(s.q_nlos == Approx(0.014545160017920261242).epsilon(1e-11));
    CHECK(s.p_cov == Approx(0.44100637853692781304).epsilon(1e-12));
    CHECK(std::abs(s.p_cov - (s.p_los * s.q_los + s.p_nlos * s.q_nlos)) <= 1e-15);

    const auto lit = coverage_probability(geom, urban(), radio, FormulationMode::paper_literal);
    CHECK(lit.deficit_los == Approx(0.7304497188227345225).epsilon(1e-12));
    CHECK(lit.deficit_nlos == Approx(0.39959449170944704223).epsilon(1e-12));
    CHECK(lit.p_cov == Approx(0.27456805150664163871).epsilon(1e-12));
}

TEST_CASE("coverage edge cases", "[coverage]")
{
    RadioConfig radio;
    radio.p_min_dbm = -200.0;
    for (const auto &env : builtin_environments())
        CHECK(coverage_probability({300.0, 100.0}, env, radio).p_cov >= 1.0 - 1e-12);

    // Equal branch statistics and a threshold at the branch mean: Q(0) = 0.5.
    EnvironmentProfile flat{"flat", 9.0, 0.2, 5.0, 5.0, 4.0, 4.0};
    const LinkGeometry geom{150.0, 90.0};
    radio.p_min_dbm = radio.p_tx_dbm + radio.g_db - fspl_db(radio.f_c_hz, slant_distance(geom)) - 5.0;
    const auto c = coverage_probability(geom, flat, radio);
    CHECK(c.deficit_los == Approx(0.0).margin(1e-12));
    CHECK(c.p_cov == Approx(0.5).margin(1e-12));

    CHECK_THROWS_AS(coverage_probability({-1.0, 90.0}, flat, radio), InvalidGeometry);
    radio.f_c_hz = -1.0;
    CHECK_THROWS_AS(coverage_probability(geom, flat, radio), InvalidSpec);
}

TEST_CASE("coverage is monotone in the threshold and shift invariant", "[coverage][property]")
{
    for (const auto &env : builtin_environments())
        for (double r0 : {0.0, 150.0, 600.0})
        {
            RadioConfig radio;
            double prev = 2.0;
            for (int k = 0; k < 50; ++k)
            {
                radio.p_min_dbm = -140.0 + 2.0 * k;
                const double p = coverage_probability({r0, 120.0}, env, radio).p_cov;
                CHECK(p <= prev);
                CHECK(p >= 0.0);
                CHECK(p <= 1.0);
                prev = p;
            }

            RadioConfig shifted;
            shifted.p_min_dbm = -60.0;
            const double p0 = coverage_probability({r0, 120.0}, env, shifted).p_cov;
            shifted.p_tx_dbm += 7.0;
            shifted.p_min_dbm += 7.0;
            CHECK(coverage_probability({r0, 120.0}, env, shifted).p_cov == Approx(p0).margin(1e-12));
        }
}

TEST_CASE("collapsed branches make coverage independent of the LoS weight", "[coverage][property]")
{
    EnvironmentProfile same{"same", 12.0, 0.15, 6.0, 6.0, 5.0, 5.0};
    RadioConfig radio;
    radio.p_min_dbm = -55.0;
    const double h = 100.0;
    const LinkGeometry ref{200.0, h};
    const double slant = slant_distance(ref);
    for (double theta = 1.0; theta <= 90.0; theta += 1.0)
    {
        // keep d fixed, vary the elevation angle
        const double rad = theta * std::numbers::pi / 180.0;
        const LinkGeometry g{slant * std::cos(rad), slant * std::sin(rad)};
        if (g.r0 < 0.0 || g.h <= 0.0)
            continue;
        const auto c = coverage_probability(g, same, radio);
        CHECK(c.p_cov == c.q_los);
        CHECK(c.q_los == c.q_nlos);
    }
}

TEST_CASE("Monte Carlo agrees with the analytic mixture", "[monte_carlo]")
{
    RadioConfig radio;
    radio.p_min_dbm = -45.0;
    const LinkGeometry geom{200.0, 100.0};
    const double analytic = coverage_probability(geom, urban(), radio).p_cov;
    const auto mc = coverage_monte_carlo(geom, urban(), radio, 10'000'000, 20261016, 0);
    CHECK(std::abs(mc.estimate - analytic) <= 3.0 * mc.std_error);
    CHECK(mc.samples == 10'000'000);
    CHECK(mc.std_error == Approx(std::sqrt(mc.estimate * (1 - mc.estimate) / 1e7)));
}

TEST_CASE("Monte Carlo is consistent across seeds", "[monte_carlo][property]")
{
    RadioConfig radio;
    radio.p_min_dbm = -60.0;
    const LinkGeometry geom{350.0, 120.0};
    const double analytic = coverage_probability(geom, dense_urban(), radio).p_cov;
    int inside = 0;
    const int n_seeds = 200;
    for (int seed = 0; seed < n_seeds; ++seed)
    {
        const auto mc = coverage_monte_carlo(geom, dense_urban(), radio, 20'000, seed);
        inside += std::abs(mc.estimate - analytic) <= 3.0 * mc.std_error ? 1 : 0;
    }
    // 99.7% expected; allow a little sampling slack on 200 seeds
    CHECK(inside >= 195);
}

TEST_CASE("Monte Carlo determinism", "[monte_carlo]")
{
    RadioConfig radio;
    radio.p_min_dbm = -50.0;
    const LinkGeometry geom{120.0, 80.0};
    const auto a = coverage_monte_carlo(geom, highrise_urban(), radio, 300'000, 7, 1);
    const auto b = coverage_monte_carlo(geom, highrise_urban(), radio, 300'000, 7, 1);
    const auto c = coverage_monte_carlo(geom, highrise_urban(), radio, 300'000, 7, 4);
    const auto d = coverage_monte_carlo(geom, highrise_urban(), radio, 300'000, 8, 4);
    CHECK(a.hits == b.hits);
    CHECK(a.estimate == b.estimate);
    CHECK(a.hits == c.hits);
    CHECK(a.hits != d.hits);
    CHECK_THROWS_AS(coverage_monte_carlo(geom, urban(), radio, 0, 1), DomainError);
}

TEST_CASE("Monte Carlo noiseless limit", "[monte_carlo]")
{
    // sigma = 0: a draw is covered iff its branch mean clears the threshold.
    RadioConfig radio;
    const LinkGeometry geom{250.0, 100.0};
    auto env = with_shadowing(urban(), 0.0, 0.0);
    const double rx = received_power_dbm(radio, fspl_db(radio.f_c_hz, slant_distance(geom)));
    radio.p_min_dbm = rx - 10.0; // between the LoS (mu 1) and NLoS (mu 20) branch means
    const double plos = p_los(elevation_angle_deg(geom), env);

    const std::uint64_t n = 400'000;
    const auto mc = coverage_monte_carlo(geom, env, radio, n, 3);
    // Indicator mixture: P_LoS * 1 + P_NLoS * 0
    const double se = std::sqrt(plos * (1 - plos) / static_cast<double>(n));
    CHECK(std::abs(mc.estimate - plos) <= 4.0 * se);

    // Branch selection is the only randomness left: count it directly.
    const CounterStream rng(3, 0);
    std::uint64_t los = 0;
    for (std::uint64_t i = 0; i < n; ++i)
        los += shadowing_sample(rng, i).u_select < plos ? 1 : 0;
    CHECK(mc.hits == los);

    radio.p_min_dbm = rx - 30.0; // both branches clear
    CHECK(coverage_monte_carlo(geom, env, radio, 1000, 3).estimate == 1.0);
    radio.p_min_dbm = rx; // neither clears
    CHECK(coverage_monte_carlo(geom, env, radio, 1000, 3).estimate == 0.0);
}
