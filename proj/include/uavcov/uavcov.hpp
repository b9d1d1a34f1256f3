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

#include "channel.hpp"
#include "coverage.hpp"
#include "environment.hpp"
#include "errors.hpp"
#include "geometry.hpp"
#include "monte_carlo.hpp"
#include "parallel.hpp"
#include "philox.hpp"
#include "planner.hpp"
#include "qfunction.hpp"
#include "radio.hpp"
#include "scenario.hpp"
#include "version.hpp"
