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

#ifndef FDARIS_SWEEPS_HPP
#define FDARIS_SWEEPS_HPP

#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

#include "config.hpp"
#include "oracle.hpp"

namespace fdaris
{
    struct EvePoint
    {
        double param = 0.0; // swept quantity: range, bearing, or circle angle
        Point2 xy;
        std::optional<PolarLocation> polar; // empty when the point sits on the RIS
    };

    inline std::optional<PolarLocation> polar_or_empty(const Scenario &sc, const Point2 &p)
    {
        if (p.x == sc.placement.ris().x && p.y == sc.placement.ris().y)
            return std::nullopt;
        return to_polar(sc.placement, p);
    }

    // Eve positions described by a sweep-type specification (not grid)
    inline std::vector<EvePoint> sweep_points(const EveSpec &e, const Scenario &sc)
    {
        const PolarLocation bob = sc.bob();
        const Point2 &ris = sc.placement.ris();
        std::vector<EvePoint> out;
        switch (e.mode)
        {
        case EveMode::Point:
        {
            const Point2 p{e.x_m, e.y_m};
            out.push_back({0.0, p, polar_or_empty(sc, p)});
            break;
        }
        case EveMode::RangeSweep:
            for (double r : linspace(e.range_min_m, e.range_max_m, e.points))
            {
                const PolarLocation loc{r, e.aoa_rad.value_or(bob.aoa_rad)};
                out.push_back({r, from_polar(ris, loc), loc});
            }
            break;
        case EveMode::AngleSweep:
            for (double a : linspace(e.aoa_min_rad, e.aoa_max_rad, e.points))
            {
                const PolarLocation loc{e.range_m.value_or(bob.range_m), a};
                out.push_back({a, from_polar(ris, loc), loc});
            }
            break;
        case EveMode::Circle:
            for (double phi : linspace(e.phi_min_rad, e.phi_max_rad, e.points))
            {
                const Point2 p = circle_trajectory(sc.placement.bob(), e.radius_m, phi);
                out.push_back({phi, p, polar_or_empty(sc, p)});
            }
            break;
        case EveMode::Grid:
            throw std::invalid_argument("sweep_points: eve.mode = grid is a heatmap specification, not a sweep.");
        }
        return out;
    }

    // Row-major grid, x varying fastest
    inline std::vector<Point2> grid_points(const EveSpec &e)
    {
        if (e.mode != EveMode::Grid)
            throw std::invalid_argument("grid_points: eve.mode must be grid.");
        std::vector<Point2> out;
        const auto xs = linspace(e.x_min_m, e.x_max_m, e.nx);
        const auto ys = linspace(e.y_min_m, e.y_max_m, e.ny);
        for (double y : ys)
            for (double x : xs)
                out.push_back({x, y});
        return out;
    }

} // namespace fdaris

#endif
