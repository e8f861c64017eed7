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

#ifndef FDARIS_GEOMETRY_HPP
#define FDARIS_GEOMETRY_HPP

#include <cmath>
#include <stdexcept>

#include "units.hpp"

namespace fdaris
{
    struct Point2
    {
        double x = 0.0; // m
        double y = 0.0; // m
    };

    inline double distance(const Point2 &a, const Point2 &b) { return std::hypot(b.x - a.x, b.y - a.y); }

    // Range and angle of a user as seen from the RIS. The angle is measured so that the unit
    // vector from the RIS towards the user is (cos(aoa), -sin(aoa)).
    struct PolarLocation
    {
        double range_m = 0.0;
        double aoa_rad = 0.0;
    };

    // Base station is pinned to the origin.
    class Placement
    {
    public:
        Placement() = default;
        Placement(Point2 ris, Point2 bob) : ris_(ris), bob_(bob)
        {
            if (ris.x == 0.0 && ris.y == 0.0)
                throw std::invalid_argument("Placement: RIS must not coincide with the base station at the origin.");
            if (ris.x == bob.x && ris.y == bob.y)
                throw std::invalid_argument("Placement: Bob must not coincide with the RIS.");
        }

        Point2 bs() const { return {0.0, 0.0}; }
        const Point2 &ris() const { return ris_; }
        const Point2 &bob() const { return bob_; }

    private:
        Point2 ris_{30.0, 30.0};
        Point2 bob_{100.0, -20.0};
    };

    class PathLossModel
    {
    public:
        PathLossModel() = default;
        PathLossModel(double l0_db, double alpha) : l0_db_(l0_db), alpha_(alpha)
        {
            if (!(l0_db >= 0.0) || !std::isfinite(l0_db))
                throw std::invalid_argument("PathLossModel: 'l0_db' must be finite and >= 0.");
            if (!(alpha > 0.0) || !std::isfinite(alpha))
                throw std::invalid_argument("PathLossModel: 'alpha' must be finite and > 0.");
        }

        double l0_db() const { return l0_db_; }
        double alpha() const { return alpha_; }

        double loss_db(double range_m) const
        {
            if (!(range_m > 0.0))
                throw std::domain_error("PathLossModel: range must be > 0.");
            return l0_db_ + 10.0 * alpha_ * std::log10(range_m);
        }

    private:
        double l0_db_ = 60.0;
        double alpha_ = 2.0;
    };

    inline double path_loss_linear(const PathLossModel &model, double range_m)
    {
        return std::pow(10.0, -model.loss_db(range_m) / 10.0);
    }

    inline PolarLocation to_polar(const Point2 &ris, const Point2 &user)
    {
        const double dx = user.x - ris.x, dy = user.y - ris.y;
        const double r = std::hypot(dx, dy);
        if (!(r > 0.0))
            throw std::domain_error("to_polar: user coincides with the RIS.");
        double a = std::atan2(-dy, dx);
        if (a <= -pi)
            a = pi;
        return {r, a};
    }

    inline PolarLocation to_polar(const Placement &p, const Point2 &user) { return to_polar(p.ris(), user); }

    inline Point2 from_polar(const Point2 &ris, const PolarLocation &loc)
    {
        return {ris.x + loc.range_m * std::cos(loc.aoa_rad), ris.y - loc.range_m * std::sin(loc.aoa_rad)};
    }

    // Link from the base station (origin) to the RIS: distance and departure angle.
    struct BsRisLink
    {
        double r1_m = 0.0;
        double theta_tx_rad = 0.0;
    };

    inline BsRisLink bs_ris_link(const Placement &p)
    {
        return {std::hypot(p.ris().x, p.ris().y), std::atan2(p.ris().y, p.ris().x)};
    }

    inline Point2 circle_trajectory(const Point2 &center, double radius_m, double phi_rad)
    {
        if (!(radius_m > 0.0))
            throw std::invalid_argument("circle_trajectory: radius must be > 0.");
        return {center.x + radius_m * std::cos(phi_rad), center.y + radius_m * std::sin(phi_rad)};
    }

} // namespace fdaris

#endif
