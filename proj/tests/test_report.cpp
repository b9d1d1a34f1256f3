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

#include <clocale>
#include <filesystem>
#include <locale>

#include "uavcov/report/csv.hpp"
#include "uavcov/report/svg.hpp"

using namespace uavcov;
using namespace uavcov::report;
namespace fs = std::filesystem;

namespace
{

fs::path scratch_dir(const std::string &name)
{
    auto dir = fs::temp_directory_path() / ("uavcov_report_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

} // namespace

TEST_CASE("number formatting", "[report]")
{
    CHECK(format_number(0.0) == "0");
    CHECK(format_number(5.2) == "5.2");
    CHECK(format_number(0.35) == "0.35");
    CHECK(format_number(21.0) == "21");
    CHECK(format_number(78.468383135162997712) == "78.4683831");
    CHECK(format_number(-107.01029995663981195) == "-107.0103");
    CHECK(format_number(1.0 / 3.0) == "0.333333333");
    CHECK(format_number(6.2209605742717841235e-16) == "6.22096057e-16");
    CHECK(format_number(5e6) == "5000000");
    CHECK(format_number(1.5e12) == "1.5e+12");
    CHECK(format_number(std::nan("")) == "nan");
}

TEST_CASE("number formatting ignores the global locale", "[report]")
{
    const std::string before = format_number(1234.5678);
    std::setlocale(LC_ALL, "de_DE.UTF-8");
    try
    {
        std::locale::global(std::locale("de_DE.UTF-8"));
    }
    catch (const std::runtime_error &)
    {
        // locale not installed; the C locale call above is enough
    }
    CHECK(format_number(1234.5678) == before);
    CHECK(before == "1234.5678");
    std::setlocale(LC_ALL, "C");
    std::locale::global(std::locale::classic());
}

TEST_CASE("CSV rendering", "[report]")
{
    OutputTable t;
    t.metadata = {"tool 1", "config: {}"};
    t.header = {"x", "name", "n"};
    t.rows.push_back({0.5, std::string("urban"), std::int64_t{3}});
    t.rows.push_back({1.0 / 3.0, std::string("suburban"), std::int64_t{-1}});
    CHECK(render_csv(t) == "# tool 1\n# config: {}\nx,name,n\n0.5,urban,3\n0.333333333,suburban,-1\n");

    OutputTable empty;
    empty.metadata = {"m"};
    empty.header = {"a", "b"};
    CHECK(render_csv(empty) == "# m\na,b\n");

    t.rows.push_back({1.0});
    CHECK_THROWS_AS(render_csv(t), InvalidSpec);
}

TEST_CASE("atomic writes", "[report]")
{
    const auto dir = scratch_dir("atomic");
    const auto path = dir / "out.csv";
    write_file_atomic(path, "first\n");
    CHECK(read_file(path) == "first\n");
    write_file_atomic(path, "second\n");
    CHECK(read_file(path) == "second\n");
    CHECK_FALSE(fs::exists(dir / "out.csv.tmp"));

    CHECK_THROWS_AS(write_file_atomic(dir / "missing" / "x.csv", "data"), IoError);
    CHECK_THROWS_AS(read_file(dir / "nope.csv"), IoError);

    // The target is a directory: the rename fails and nothing is clobbered.
    fs::create_directories(dir / "taken");
    fs::create_directories(dir / "taken" / "child");
    CHECK_THROWS_AS(write_file_atomic(dir / "taken", "data"), IoError);
    CHECK(fs::is_directory(dir / "taken" / "child"));
    CHECK_FALSE(fs::exists(dir / "taken.tmp"));
    fs::remove_all(dir);
}

TEST_CASE("SVG chart", "[report]")
{
    OutputTable t;
    t.header = {"angle_deg", "p_los_a", "p_los_b"};
    for (int i = 0; i < 10; ++i)
        t.rows.push_back({double(i), 0.1 * i, 0.05 * i});
    const auto svg = render_svg(t, {1, 2}, {"urban", "dense & co"}, "LoS", "P_LoS");
    CHECK(svg.starts_with("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"500\""));
    CHECK(svg.find("urban") != std::string::npos);
    CHECK(svg.find("dense &amp; co") != std::string::npos);
    std::size_t lines = 0;
    for (auto pos = svg.find("<polyline"); pos != std::string::npos; pos = svg.find("<polyline", pos + 1))
        ++lines;
    CHECK(lines == 2);
    CHECK(svg.ends_with("</svg>\n"));

    OutputTable empty;
    empty.header = {"x", "y"};
    CHECK_NOTHROW(render_svg(empty, {1}, {"y"}, "t", "y"));
}
