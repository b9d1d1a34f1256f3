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
#include <limits>
#include <string>
#include <variant>
#include <vector>

#include "csv.hpp"

namespace uavcov::report
{

namespace svg_detail
{

inline std::string xml_escape(const std::string &text)
{
    std::string out;
    for (char c : text)
    {
        switch (c)
        {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

inline double as_number(const Cell &cell)
{
    if (auto d = std::get_if<double>(&cell))
        return *d;
    if (auto i = std::get_if<std::int64_t>(&cell))
        return static_cast<double>(*i);
    return std::numeric_limits<double>::quiet_NaN();
}

} // namespace svg_detail

/*!
 * Standalone 800x500 SVG line chart. Column 0 is the x axis; every other
 * column listed in `series_columns` becomes one line, labelled in the legend
 * by `series_labels`.
 */
inline std::string render_svg(const OutputTable &table, const std::vector<std::size_t> &series_columns,
                              const std::vector<std::string> &series_labels, const std::string &title,
                              const std::string &y_label)
{
    constexpr double width = 800, height = 500;
    constexpr double left = 70, right = 180, top = 40, bottom = 60;
    constexpr double plot_w = width - left - right, plot_h = height - top - bottom;
    static const char *palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

    double x_lo = std::numeric_limits<double>::infinity(), x_hi = -x_lo;
    double y_lo = x_lo, y_hi = -x_lo;
    for (const auto &row : table.rows)
    {
        const double x = svg_detail::as_number(row[0]);
        if (!std::isfinite(x))
            continue;
        x_lo = std::min(x_lo, x);
        x_hi = std::max(x_hi, x);
        for (auto c : series_columns)
        {
            const double y = svg_detail::as_number(row[c]);
            if (std::isfinite(y))
            {
                y_lo = std::min(y_lo, y);
                y_hi = std::max(y_hi, y);
            }
        }
    }
    if (!(x_lo < x_hi))
    {
        x_lo = std::isfinite(x_lo) ? x_lo - 1 : 0;
        x_hi = x_lo + 2;
    }
    if (!(y_lo < y_hi))
    {
        y_lo = std::isfinite(y_lo) ? y_lo - 1 : 0;
        y_hi = y_lo + 2;
    }

    auto px = [&](double x) { return left + (x - x_lo) / (x_hi - x_lo) * plot_w; };
    auto py = [&](double y) { return top + plot_h - (y - y_lo) / (y_hi - y_lo) * plot_h; };

    std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"500\" viewBox=\"0 0 800 500\">\n";
    svg += "<rect width=\"800\" height=\"500\" fill=\"white\"/>\n";
    svg += "<text x=\"" + format_number(left + plot_w / 2) + "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">" +
           svg_detail::xml_escape(title) + "</text>\n";
    svg += "<rect x=\"" + format_number(left) + "\" y=\"" + format_number(top) + "\" width=\"" + format_number(plot_w) +
           "\" height=\"" + format_number(plot_h) + "\" fill=\"none\" stroke=\"black\"/>\n";

    for (int t = 0; t <= 5; ++t)
    {
        const double xv = x_lo + (x_hi - x_lo) * t / 5.0;
        const double yv = y_lo + (y_hi - y_lo) * t / 5.0;
        svg += "<text x=\"" + format_number(px(xv)) + "\" y=\"" + format_number(top + plot_h + 18) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" + format_number(xv) + "</text>\n";
        svg += "<text x=\"" + format_number(left - 6) + "\" y=\"" + format_number(py(yv) + 4) +
               "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" + format_number(yv) + "</text>\n";
    }
    svg += "<text x=\"" + format_number(left + plot_w / 2) + "\" y=\"" + format_number(height - 15) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" + svg_detail::xml_escape(table.header[0]) + "</text>\n";
    svg += "<text x=\"16\" y=\"" + format_number(top + plot_h / 2) + "\" transform=\"rotate(-90 16 " +
           format_number(top + plot_h / 2) + ")\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" +
           svg_detail::xml_escape(y_label) + "</text>\n";

    for (std::size_t s = 0; s < series_columns.size(); ++s)
    {
        const char *color = palette[s % std::size(palette)];
        std::string points;
        for (const auto &row : table.rows)
        {
            const double x = svg_detail::as_number(row[0]);
            const double y = svg_detail::as_number(row[series_columns[s]]);
            if (!std::isfinite(x) || !std::isfinite(y))
                continue;
            if (!points.empty())
                points += ' ';
            points += format_number(px(x)) + "," + format_number(py(y));
        }
        svg += "<polyline fill=\"none\" stroke=\"" + std::string(color) + "\" stroke-width=\"2\" points=\"" + points + "\"/>\n";
        const double ly = top + 10 + 20.0 * static_cast<double>(s);
        svg += "<line x1=\"" + format_number(width - right + 15) + "\" y1=\"" + format_number(ly) + "\" x2=\"" +
               format_number(width - right + 40) + "\" y2=\"" + format_number(ly) + "\" stroke=\"" + color +
               "\" stroke-width=\"2\"/>\n";
        const std::string label = s < series_labels.size() ? series_labels[s] : table.header[series_columns[s]];
        svg += "<text x=\"" + format_number(width - right + 46) + "\" y=\"" + format_number(ly + 4) +
               "\" font-family=\"sans-serif\" font-size=\"12\">" + svg_detail::xml_escape(label) + "</text>\n";
    }
    svg += "</svg>\n";
    return svg;
}

} // namespace uavcov::report
