// SPDX-License-Identifier: Apache-2.0
//
// fdaris - range-angle secrecy toolkit for RIS-assisted FDA links
// Copyright (C) 2026 The fdaris authors
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

#ifndef FDARIS_UNITS_HPP
#define FDARIS_UNITS_HPP

#include <cmath>
#include <numbers>

namespace fdaris
{
    inline constexpr double speed_of_light = 299792458.0; // m/s
    inline constexpr double pi = std::numbers::pi;
    inline constexpr double two_pi = 2.0 * std::numbers::pi;

    inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
    inline double linear_to_db(double lin) { return 10.0 * std::log10(lin); }

    inline double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
    inline double watts_to_dbm(double w) { return 10.0 * std::log10(w) + 30.0; }

    // Fractional part of a cycle count, in [0, 1)
    inline double wrap_cycles(double cycles)
    {
        double f = cycles - std::floor(cycles);
        return f >= 1.0 ? 0.0 : f;
    }

    // Angle wrapped to (-pi, pi]
    inline double wrap_angle(double a)
    {
        double w = std::remainder(a, two_pi);
        return w <= -pi ? w + two_pi : w;
    }

    inline double angle_distance(double a, double b) { return std::abs(wrap_angle(a - b)); }

} // namespace fdaris

#endif
