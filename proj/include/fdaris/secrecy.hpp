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

#ifndef FDARIS_SECRECY_HPP
#define FDARIS_SECRECY_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "beamforming.hpp"
#include "channel.hpp"
#include "geometry.hpp"
#include "stats.hpp"
#include "units.hpp"

namespace fdaris
{
    inline constexpr double unbounded = std::numeric_limits<double>::infinity();

    struct LinkBudget
    {
        double power_w = 1.0;
        double noise_bob_w = 1e-15;
        double noise_eve_w = 1e-15;

        static LinkBudget from_dbm(double power_dbm, double noise_bob_dbm, double noise_eve_dbm)
        {
            LinkBudget b{dbm_to_watts(power_dbm), dbm_to_watts(noise_bob_dbm), dbm_to_watts(noise_eve_dbm)};
            b.validate();
            return b;
        }

        void validate() const
        {
            if (!(power_w > 0.0) || !std::isfinite(power_w))
                throw std::invalid_argument("LinkBudget: 'power' must be finite and > 0.");
            if (!(noise_bob_w > 0.0) || !std::isfinite(noise_bob_w))
                throw std::invalid_argument("LinkBudget: 'noise_bob' must be finite and > 0.");
            if (!(noise_eve_w > 0.0) || !std::isfinite(noise_eve_w))
                throw std::invalid_argument("LinkBudget: 'noise_eve' must be finite and > 0.");
        }
    };

    enum class CombineRule
    {
        Conjunction,
        Union
    };

    inline std::string to_string(CombineRule c) { return c == CombineRule::Union ? "union" : "conjunction"; }

    inline CombineRule parse_combine_rule(const std::string &s)
    {
        if (s == "conjunction")
            return CombineRule::Conjunction;
        if (s == "union")
            return CombineRule::Union;
        throw std::invalid_argument("combine rule must be 'conjunction' or 'union', got '" + s + "'.");
    }

    // Everything needed to evaluate secrecy for an arbitrary eavesdropper position.
    struct Scenario
    {
        Placement placement;
        FdaPlan plan;
        RisGeometry ris;
        PathLossModel pathloss;
        LinkBudget budget;
        SelectionSizes sizes{14, 441};
        CombineRule combine = CombineRule::Conjunction;

        // Carrier 60 GHz, 21 antennas at 1 MHz spacing, 21 x 21 RIS, 30 dBm, -120 dBm noise,
        // 60 dB reference loss with exponent 2.
        static Scenario paper_baseline()
        {
            Scenario s;
            s.placement = Placement({30.0, 30.0}, {100.0, -20.0});
            s.plan = FdaPlan(60e9, 1e6, 21);
            s.ris = RisGeometry::from_plan(s.plan, 21, 21);
            s.pathloss = PathLossModel(60.0, 2.0);
            s.budget = LinkBudget::from_dbm(30.0, -120.0, -120.0);
            s.sizes = SelectionSizes(14, 441);
            return s;
        }

        void validate() const
        {
            budget.validate();
            sizes.validate(plan.m_antennas(), ris.size());
        }

        int m() const { return plan.m_antennas(); }
        int n() const { return ris.size(); }
        BsRisLink link() const { return bs_ris_link(placement); }
        PolarLocation bob() const { return to_polar(placement, placement.bob()); }
        double lg() const { return path_loss_linear(pathloss, link().r1_m); }
        double lh(double range_m) const { return path_loss_linear(pathloss, range_m); }
    };

    inline double snr_bob_fda(const LinkBudget &b, double lg, double lh_bob, int m, int n)
    {
        return b.power_w / b.noise_bob_w * lg * lh_bob * m * double(n) * n;
    }

    inline double snr_bob_ribes(const LinkBudget &b, double lg, double lh_bob, int m, int n, const SelectionSizes &sizes)
    {
        sizes.validate(m, n);
        const double a = 2.0 * sizes.m_s() - m, e = 2.0 * sizes.n_s() - n;
        return b.power_w / b.noise_bob_w * lg * lh_bob * a * a / m * e * e;
    }

    inline double snr_eve_fda(const LinkBudget &b, double lg, double lh_eve, const DirichletKernels &k, int m)
    {
        return b.power_w / b.noise_eve_w * lg * lh_eve * k.mu1 * k.mu1 / m * k.mu2 * k.mu2 * k.mu3 * k.mu3;
    }

    // Noise power may be zero here to study the noise-free limit.
    inline double snr_eve_ribes(const ScalingStats &s, double power_w, double noise_eve_w)
    {
        if (s.var_beta < 0.0)
            throw std::invalid_argument("snr_eve_ribes: negative variance.");
        const double num = power_w * std::norm(s.mean_beta);
        const double den = power_w * s.var_beta + noise_eve_w;
        if (den == 0.0)
            return num == 0.0 ? 0.0 : unbounded;
        return num / den;
    }

    inline double snr_eve_ribes(const ScalingStats &s, const LinkBudget &b) { return snr_eve_ribes(s, b.power_w, b.noise_eve_w); }

    inline double secrecy_rate(double gamma_bob, double gamma_eve)
    {
        if (gamma_bob < 0.0 || gamma_eve < 0.0)
            throw std::invalid_argument("secrecy_rate: SNRs must be >= 0.");
        return std::max(0.0, std::log2(1.0 + gamma_bob) - std::log2(1.0 + gamma_eve));
    }

    struct WiretapRegion
    {
        double delta_r_m = unbounded;
        double delta_theta1_rad = 0.0; // first horizontal-kernel null
        double delta_theta2_rad = 0.0; // first vertical-kernel null
        CombineRule combine = CombineRule::Conjunction;

        double angle_threshold() const { return std::min(delta_theta1_rad, delta_theta2_rad); }
    };

    namespace detail
    {
        // Smallest angular distance from theta_b to an angle whose cosine (or sine) equals target
        inline double nearest_angle_gap(double theta_b, double target, bool cosine)
        {
            if (std::abs(target) > 1.0)
                return unbounded;
            const double base = cosine ? std::acos(target) : std::asin(target);
            const double other = cosine ? -base : pi - base;
            return std::min(angle_distance(base, theta_b), angle_distance(other, theta_b));
        }
    } // namespace detail

    inline WiretapRegion wiretap_region(const FdaPlan &plan, const RisGeometry &geom, const PolarLocation &bob,
                                        CombineRule combine = CombineRule::Conjunction)
    {
        WiretapRegion r;
        r.combine = combine;
        if (plan.delta_f_hz() > 0.0)
            r.delta_r_m = speed_of_light / (plan.m_antennas() * plan.delta_f_hz());

        // Null spacing in cos/sin space for a general element pitch (2/N at half wavelength)
        const double step_h = speed_of_light / (plan.f0_hz() * geom.d_h_m() * geom.n_h());
        const double step_v = speed_of_light / (plan.f0_hz() * geom.d_v_m() * geom.n_v());
        const double cb = std::cos(bob.aoa_rad), sb = std::sin(bob.aoa_rad);
        r.delta_theta1_rad = std::min(detail::nearest_angle_gap(bob.aoa_rad, cb + step_h, true),
                                      detail::nearest_angle_gap(bob.aoa_rad, cb - step_h, true));
        r.delta_theta2_rad = std::min(detail::nearest_angle_gap(bob.aoa_rad, sb + step_v, false),
                                      detail::nearest_angle_gap(bob.aoa_rad, sb - step_v, false));
        return r;
    }

    inline bool range_condition(const WiretapRegion &r, const PolarLocation &bob, const PolarLocation &eve)
    {
        return std::isfinite(r.delta_r_m) && std::abs(eve.range_m - bob.range_m) >= r.delta_r_m;
    }

    inline bool angle_condition(const WiretapRegion &r, const PolarLocation &bob, const PolarLocation &eve)
    {
        const double th = r.angle_threshold();
        return std::isfinite(th) && angle_distance(eve.aoa_rad, bob.aoa_rad) >= th;
    }

    inline bool in_wiretap(const WiretapRegion &r, const PolarLocation &bob, const PolarLocation &eve)
    {
        const bool a = range_condition(r, bob, eve), b = angle_condition(r, bob, eve);
        return r.combine == CombineRule::Union ? (a || b) : (a && b);
    }

    struct EveBounds
    {
        double ub_range = unbounded; // on the equal-angle cut
        double ub_angle = unbounded; // on the equal-range cut
        double lambda = 0.0;
        double lambda_h = 0.0;       // best horizontal-sidelobe branch
        double lambda_v = 0.0;       // best vertical-sidelobe branch
    };

    // Approximate largest |mu2 mu3| outside the main angular lobe: one kernel at its first-sidelobe
    // midpoint, the other evaluated at the corresponding angle.
    inline void approximate_lambda(const FdaPlan &plan, const RisGeometry &geom, double theta_b, double &lambda_h, double &lambda_v)
    {
        const double kh = pi * plan.f0_hz() * geom.d_h_m() / speed_of_light;
        const double kv = pi * plan.f0_hz() * geom.d_v_m() / speed_of_light;
        const double ch = 1.5 / (kh * geom.n_h() / pi), cv = 1.5 / (kv * geom.n_v() / pi);
        const double cb = std::cos(theta_b), sb = std::sin(theta_b);
        lambda_h = 0.0;
        lambda_v = 0.0;
        for (double sgn : {1.0, -1.0})
        {
            const double c = cb + sgn * ch;
            if (std::abs(c) <= 1.0)
            {
                const double big_h = kh * (std::sqrt(1.0 - c * c) - sb);
                lambda_h = std::max(lambda_h, std::abs(dirichlet(big_h, geom.n_v()) / std::sin(1.5 * pi / geom.n_h())));
            }
            const double s = sb + sgn * cv;
            if (std::abs(s) <= 1.0)
            {
                const double big_v = kv * (cb - std::sqrt(1.0 - s * s));
                lambda_v = std::max(lambda_v, std::abs(dirichlet(big_v, geom.n_h()) / std::sin(1.5 * pi / geom.n_v())));
            }
        }
    }

    // Noise-free Eve SNR under selection of k out of n when the relevant kernel product has
    // magnitude `peak`: a^2 (n-1) peak^2 / (4 k (n-k) (n^2 - peak^2)) with a = 2k - n.
    inline double subset_bound(int n, int k, double peak)
    {
        if (k >= n)
            return unbounded;
        const double a = 2.0 * k - n;
        const double den = 4.0 * k * double(n - k) * (double(n) * n - peak * peak);
        return den > 0.0 ? a * a * (n - 1) * peak * peak / den : unbounded;
    }

    // Range-cut bound: the range kernel at the midpoint of its first sidelobe, 1/sin(3pi/(2M))
    inline double range_bound(int m, int m_s) { return subset_bound(m, m_s, 1.0 / std::sin(1.5 * pi / m)); }

    inline double angle_bound(int n, int n_s, double lambda) { return subset_bound(n, n_s, lambda); }

    // Largest |sin(count x)/sin(x)| over the first sidelobe, located by golden-section search
    inline double first_sidelobe_peak(int count)
    {
        if (count < 3)
            return count == 2 ? 0.0 : 1.0;
        double lo = pi / count, hi = 2.0 * pi / count;
        const double g = 0.5 * (std::sqrt(5.0) - 1.0);
        double a = hi - g * (hi - lo), b = lo + g * (hi - lo);
        double fa = std::abs(dirichlet(a, count)), fb = std::abs(dirichlet(b, count));
        for (int it = 0; it < 200 && hi - lo > 1e-15; ++it)
        {
            if (fa < fb)
            {
                lo = a;
                a = b;
                fa = fb;
                b = lo + g * (hi - lo);
                fb = std::abs(dirichlet(b, count));
            }
            else
            {
                hi = b;
                b = a;
                fb = fa;
                a = hi - g * (hi - lo);
                fa = std::abs(dirichlet(a, count));
            }
        }
        return std::max(fa, fb);
    }

    inline EveBounds eve_upper_bounds(const SelectionSizes &sizes, const FdaPlan &plan, const RisGeometry &geom, double theta_b)
    {
        sizes.validate(plan.m_antennas(), geom.size());
        EveBounds b;
        approximate_lambda(plan, geom, theta_b, b.lambda_h, b.lambda_v);
        b.lambda = std::max(b.lambda_h, b.lambda_v);
        b.ub_range = range_bound(plan.m_antennas(), sizes.m_s());
        b.ub_angle = angle_bound(geom.size(), sizes.n_s(), b.lambda);
        return b;
    }

    struct WorstCaseReport
    {
        double gamma_bob = 0.0;
        EveBounds bounds;
        double eve_range_cut = 0.0; // Eve SNR bound used on each cut
        double eve_angle_cut = 0.0;
        double rate_range_cut = 0.0;
        double rate_angle_cut = 0.0;
        double rate_joint = 0.0;
        bool range_cut_empty = false;     // no range protection (delta_f = 0)
        bool range_deterministic = false; // m_s = M: no randomization on the equal-angle cut
        bool angle_deterministic = false; // n_s = N: no randomization on the equal-range cut
    };

    // Bob's rate minus the worst Eve rate on each cut, using the closed-form Eve bounds.
    // Without randomization the bound is replaced by the deterministic Eve SNR at the first
    // sidelobe midpoints.
    inline WorstCaseReport worst_case_secrecy(const Scenario &sc)
    {
        sc.validate();
        const PolarLocation bob = sc.bob();
        const int M = sc.m(), N = sc.n();
        WorstCaseReport w;
        w.gamma_bob = snr_bob_ribes(sc.budget, sc.lg(), sc.lh(bob.range_m), M, N, sc.sizes);
        w.bounds = eve_upper_bounds(sc.sizes, sc.plan, sc.ris, bob.aoa_rad);
        const double bob_rate = std::log2(1.0 + w.gamma_bob);

        const WiretapRegion region = wiretap_region(sc.plan, sc.ris, bob, CombineRule::Union);
        w.range_cut_empty = !std::isfinite(region.delta_r_m);
        w.eve_range_cut = w.bounds.ub_range;
        if (sc.sizes.m_s() == M && !w.range_cut_empty)
        {
            w.range_deterministic = true;
            w.eve_range_cut = 0.0;
            for (double sgn : {1.0, -1.0})
            {
                const PolarLocation eve{bob.range_m + sgn * 1.5 * region.delta_r_m, bob.aoa_rad};
                if (eve.range_m <= 0.0)
                    continue;
                const ScalingStats st = scaling_stats(sc.lg(), sc.lh(eve.range_m), sc.plan, sc.ris, sc.sizes, kernels_at(sc.plan, sc.ris, bob, eve));
                w.eve_range_cut = std::max(w.eve_range_cut, snr_eve_ribes(st, sc.budget));
            }
        }
        w.rate_range_cut = w.range_cut_empty ? bob_rate : bob_rate - std::log2(1.0 + w.eve_range_cut);

        w.eve_angle_cut = w.bounds.ub_angle;
        if (sc.sizes.n_s() == N)
        {
            w.angle_deterministic = true;
            const double a = 2.0 * sc.sizes.m_s() - M;
            w.eve_angle_cut = sc.budget.power_w / sc.budget.noise_eve_w * sc.lg() * sc.lh(bob.range_m) * a * a / M * w.bounds.lambda * w.bounds.lambda;
        }
        w.rate_angle_cut = bob_rate - std::log2(1.0 + w.eve_angle_cut);
        w.rate_joint = std::min(w.rate_range_cut, w.rate_angle_cut);
        return w;
    }

} // namespace fdaris

#endif
