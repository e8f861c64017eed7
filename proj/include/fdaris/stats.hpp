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

#ifndef FDARIS_STATS_HPP
#define FDARIS_STATS_HPP

#include <cmath>
#include <complex>
#include <stdexcept>

#include "beamforming.hpp"
#include "channel.hpp"
#include "geometry.hpp"

namespace fdaris
{
    // sin(count*x)/sin(x), continuous through the zeros of sin(x)
    inline double dirichlet(double x, int count)
    {
        if (count < 1)
            throw std::invalid_argument("dirichlet: count must be >= 1.");
        // Periodic in pi up to the sign (-1)^(k (count - 1)); reducing first keeps the ratio
        // accurate next to every grating lobe, not only the one at the origin.
        const double k = std::round(x / pi);
        const double r = x - k * pi;
        const double sign = (std::fmod(std::abs(k), 2.0) == 1.0 && count % 2 == 0) ? -1.0 : 1.0;
        const double s = std::sin(r);
        if (std::abs(s) < 1e-9)
            return sign * count * std::cos(count * r) / std::cos(r);
        return sign * std::sin(count * r) / s;
    }

    struct DirichletKernels
    {
        double mu1 = 0.0; // range
        double mu2 = 0.0; // horizontal angle
        double mu3 = 0.0; // vertical angle
    };

    // Kernel arguments. The angle terms use product-to-sum forms of the cosine and sine differences.
    inline double range_kernel_arg(const FdaPlan &plan, double r_eve, double r_bob)
    {
        return pi * plan.delta_f_hz() * (r_eve - r_bob) / speed_of_light;
    }

    inline double horizontal_kernel_arg(const FdaPlan &plan, const RisGeometry &geom, double theta_bob, double theta_eve)
    {
        // cos(b) - cos(e) = -2 sin((b+e)/2) sin((b-e)/2)
        const double diff = -2.0 * std::sin(0.5 * (theta_bob + theta_eve)) * std::sin(0.5 * (theta_bob - theta_eve));
        return pi * plan.f0_hz() * geom.d_h_m() / speed_of_light * diff;
    }

    inline double vertical_kernel_arg(const FdaPlan &plan, const RisGeometry &geom, double theta_bob, double theta_eve)
    {
        // sin(e) - sin(b) = 2 cos((e+b)/2) sin((e-b)/2)
        const double diff = 2.0 * std::cos(0.5 * (theta_eve + theta_bob)) * std::sin(0.5 * (theta_eve - theta_bob));
        return pi * plan.f0_hz() * geom.d_v_m() / speed_of_light * diff;
    }

    inline DirichletKernels kernels_at(const FdaPlan &plan, const RisGeometry &geom, const PolarLocation &bob, const PolarLocation &eve)
    {
        return {dirichlet(range_kernel_arg(plan, eve.range_m, bob.range_m), plan.m_antennas()),
                dirichlet(horizontal_kernel_arg(plan, geom, bob.aoa_rad, eve.aoa_rad), geom.n_h()),
                dirichlet(vertical_kernel_arg(plan, geom, bob.aoa_rad, eve.aoa_rad), geom.n_v())};
    }

    struct Moments
    {
        double mean = 0.0;
        double variance = 0.0;
    };

    // Mean and variance of (sum over a random k-subset) - (sum over its complement) of n unit
    // phasors whose total is the real value `total`.
    inline Moments signed_subset_moments(int n, int k, double total)
    {
        if (n < 1 || k > n || 2 * k <= n)
            throw std::invalid_argument("signed_subset_moments: subset size must satisfy n/2 < k <= n.");
        Moments out;
        out.mean = double(2 * k - n) / n * total;
        if (k == n)
            return out;
        if (n == 1)
            throw std::invalid_argument("signed_subset_moments: a single-entry array cannot be partially selected.");
        const double v = 4.0 * k * double(n - k) / (double(n) * (n - 1)) * (n - total * total / n);
        out.variance = v > 0.0 ? v : 0.0;
        return out;
    }

    inline Moments moments_u(const FdaPlan &plan, const SelectionSizes &sizes, double mu1)
    {
        return signed_subset_moments(plan.m_antennas(), sizes.m_s(), mu1);
    }

    inline Moments moments_v(const RisGeometry &geom, const SelectionSizes &sizes, double mu2, double mu3)
    {
        return signed_subset_moments(geom.size(), sizes.n_s(), mu2 * mu3);
    }

    struct ScalingStats
    {
        std::complex<double> mean_beta;
        double var_beta = 0.0;
        double e_u = 0.0, v_u = 0.0;
        double e_v = 0.0, v_v = 0.0;
    };

    inline ScalingStats scaling_stats(double pathloss_g, double pathloss_h_eve, const FdaPlan &plan, const RisGeometry &geom,
                                      const SelectionSizes &sizes, const DirichletKernels &k)
    {
        const Moments u = moments_u(plan, sizes, k.mu1);
        const Moments v = moments_v(geom, sizes, k.mu2, k.mu3);
        const double scale = pathloss_g * pathloss_h_eve / plan.m_antennas();
        ScalingStats s;
        s.e_u = u.mean;
        s.v_u = u.variance;
        s.e_v = v.mean;
        s.v_v = v.variance;
        s.mean_beta = std::sqrt(scale) * u.mean * v.mean;
        s.var_beta = scale * (u.variance * v.variance + v.variance * u.mean * u.mean + u.variance * v.mean * v.mean);
        return s;
    }

} // namespace fdaris

#endif
