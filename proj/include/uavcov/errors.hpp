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
#include <stdexcept>
#include <string>

namespace uavcov
{

/// Geometry with a negative, zero-altitude or non-finite coordinate.
class InvalidGeometry : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error
{
  public:
    using std::domain_error::domain_error;
};

/// Malformed sweep, scenario or environment specification.
class InvalidSpec : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

/// File could not be read or written.
class IoError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

namespace detail
{

template <typename Error>
inline void require(bool ok, const std::string &what)
{
    if (!ok)
        throw Error(what);
}

inline bool finite(double x) { return std::isfinite(x); }

} // namespace detail
} // namespace uavcov
