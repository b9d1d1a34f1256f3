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

#include <charconv>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <system_error>
#include <variant>
#include <vector>

#include "../errors.hpp"

namespace uavcov::report
{

using Cell = std::variant<double, std::int64_t, std::string>;

/*!
 * A CSV payload: `#`-prefixed metadata lines, one header row and records.
 * The metadata carries everything needed to regenerate the rows.
 */
struct OutputTable
{
    std::vector<std::string> metadata;
    std::vector<std::string> header;
    std::vector<std::vector<Cell>> rows;
};

/// Shortest %.9g-style rendering; independent of the global locale.
inline std::string format_number(double value)
{
    if (std::isnan(value))
        return "nan";
    if (std::isinf(value))
        return value > 0 ? "inf" : "-inf";
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 9);
    if (ec != std::errc{})
        throw std::logic_error("number formatting failed");
    return {buf, end};
}

inline std::string format_cell(const Cell &cell)
{
    struct Visitor
    {
        std::string operator()(double v) const { return format_number(v); }
        std::string operator()(std::int64_t v) const { return std::to_string(v); }
        std::string operator()(const std::string &s) const { return s; }
    };
    return std::visit(Visitor{}, cell);
}

inline void validate(const OutputTable &table)
{
    for (std::size_t r = 0; r < table.rows.size(); ++r)
        detail::require<InvalidSpec>(table.rows[r].size() == table.header.size(),
                                     "output row " + std::to_string(r) + " has " +
                                         std::to_string(table.rows[r].size()) + " fields, header has " +
                                         std::to_string(table.header.size()));
}

inline std::string render_csv(const OutputTable &table)
{
    validate(table);
    std::string out;
    for (const auto &line : table.metadata)
        out += "# " + line + "\n";
    auto join = [&out](const auto &fields, auto &&fmt) {
        for (std::size_t i = 0; i < fields.size(); ++i)
        {
            if (i)
                out += ',';
            out += fmt(fields[i]);
        }
        out += '\n';
    };
    join(table.header, [](const std::string &s) { return s; });
    for (const auto &row : table.rows)
        join(row, [](const Cell &c) { return format_cell(c); });
    return out;
}

/// Writes `content` to a sibling temporary file and renames it over `path`,
/// so an existing file is either fully replaced or left untouched.
inline void write_file_atomic(const std::filesystem::path &path, const std::string &content)
{
    namespace fs = std::filesystem;
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os)
            throw IoError("cannot open '" + tmp.string() + "' for writing");
        os.write(content.data(), static_cast<std::streamsize>(content.size()));
        os.flush();
        if (!os)
        {
            os.close();
            std::error_code ignored;
            fs::remove(tmp, ignored);
            throw IoError("write to '" + tmp.string() + "' failed");
        }
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec)
    {
        std::error_code ignored;
        fs::remove(tmp, ignored);
        throw IoError("cannot move output into place at '" + path.string() + "': " + ec.message());
    }
}

inline std::string read_file(const std::filesystem::path &path)
{
    std::ifstream is(path, std::ios::binary);
    if (!is)
        throw IoError("cannot open '" + path.string() + "'");
    return {std::istreambuf_iterator<char>(is), std::istreambuf_iterator<char>()};
}

} // namespace uavcov::report
