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

#ifndef FDARIS_VERIFY_HPP
#define FDARIS_VERIFY_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "csv.hpp"
#include "oracle.hpp"
#include "optimize.hpp"
#include "secrecy.hpp"

namespace fdaris
{
    struct VerificationRecord
    {
        std::string name;
        double closed_form = 0.0;
        double oracle = 0.0;
        double error = 0.0;
        bool pass = false;
    };

    inline bool all_pass(const std::vector<VerificationRecord> &v)
    {
        for (const auto &r : v)
            if (!r.pass)
                return false;
        return true;
    }

    // Exhaustive subset statistics against the closed-form moments, for arrays of up to
    // max_size entries. One record per (size, subset size) with the worst error over the
    // random trials.
    inline std::vector<VerificationRecord> verify_moments(std::uint64_t seed, int max_size = 8, int trials = 20, double tol = 1e-12)
    {
        std::vector<VerificationRecord> out;
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> offset(-300.0, 300.0);
        std::uniform_real_distribution<double> bearing(-0.5 * pi, 0.5 * pi);

        for (int m = 1; m <= max_size; ++m)
        {
            const FdaPlan plan(60e9, 1e6, m);
            for (int ms = m / 2 + 1; ms <= m; ++ms)
            {
                VerificationRecord rec{"moments.u.M" + std::to_string(m) + ".Ms" + std::to_string(ms)};
                for (int t = 0; t < trials; ++t)
                {
                    const double r_bob = 80.0, r_eve = r_bob + offset(rng);
                    const EnumerationReport e = enumerate_u_moments(plan, r_bob, std::abs(r_eve) + 1.0, ms);
                    if (e.max_rel_error >= rec.error)
                    {
                        rec.error = e.max_rel_error;
                        rec.closed_form = e.closed_form_variance;
                        rec.oracle = e.exact_variance;
                    }
                    // centred layouts give a real mean
                    rec.error = std::max(rec.error, std::abs(e.exact_mean.imag()) / std::max(1.0, std::abs(e.exact_mean)));
                }
                rec.pass = rec.error <= tol;
                out.push_back(rec);
            }
        }

        const FdaPlan carrier(60e9, 0.0, 1);
        const BsRisLink link{42.0, 0.7};
        for (int n = 1; n <= max_size; ++n)
            for (int nh = 1; nh <= n; ++nh)
            {
                if (n % nh)
                    continue;
                const RisGeometry geom = RisGeometry::from_plan(carrier, nh, n / nh);
                for (int ns = n / 2 + 1; ns <= n; ++ns)
                {
                    VerificationRecord rec{"moments.v.NH" + std::to_string(nh) + ".NV" + std::to_string(n / nh) + ".Ns" + std::to_string(ns)};
                    for (int t = 0; t < trials; ++t)
                    {
                        const PolarLocation bob{80.0, bearing(rng)}, eve{60.0, bearing(rng)};
                        const EnumerationReport e = enumerate_v_moments(carrier, geom, link, bob, eve, ns);
                        if (e.max_rel_error >= rec.error)
                        {
                            rec.error = e.max_rel_error;
                            rec.closed_form = e.closed_form_variance;
                            rec.oracle = e.exact_variance;
                        }
                        rec.error = std::max(rec.error, std::abs(e.exact_mean.imag()) / std::max(1.0, std::abs(e.exact_mean)));
                    }
                    rec.pass = rec.error <= tol;
                    out.push_back(rec);
                }
            }
        return out;
    }

    // Bob: literal received samples under random masks against the closed form (dB error), at
    // the scenario's increment and at the largest feasible increment.
    inline std::vector<VerificationRecord> verify_bob_snr(const Scenario &sc, int masks, std::uint64_t seed, double tol_db = 0.1)
    {
        std::vector<VerificationRecord> out;
        Scenario at_limit = sc;
        if (sc.m() > 1)
            at_limit.plan = sc.plan.with_delta_f(FdaPlan::max_relative_shift * sc.plan.f0_hz() * 2.0 / (sc.m() - 1));
        for (const auto &[name, s] : {std::pair<std::string, Scenario>{"snr.bob.scenario_df", sc}, {"snr.bob.max_df", at_limit}})
        {
            const BobSnrCheck c = signal_level_bob_snr(s, masks, seed);
            const double worst = std::abs(c.max_snr - c.closed_form_snr) > std::abs(c.min_snr - c.closed_form_snr) ? c.max_snr : c.min_snr;
            out.push_back({name, c.closed_form_snr, worst, c.max_abs_db_error, c.max_abs_db_error <= tol_db});
        }
        return out;
    }

    inline const std::vector<double> &eve_check_ranges()
    {
        static const std::vector<double> r{5.0, 15.0, 25.0, 40.0, 50.0, 60.0, 75.0, 110.0, 150.0, 190.0};
        return r;
    }

    // Eve: per-symbol Monte Carlo against the closed form at sweep points on Bob's bearing.
    // The error field is the z-score.
    inline std::vector<VerificationRecord> verify_eve_snr(const Scenario &sc, std::uint64_t samples, std::uint64_t seed, unsigned threads,
                                                          double k_sigma = 3.0)
    {
        std::vector<VerificationRecord> out;
        const PolarLocation bob = sc.bob();
        std::uint64_t stream = 0;
        for (double r : eve_check_ranges())
        {
            const McReport mc = monte_carlo_eve_snr(sc, {r, bob.aoa_rad}, samples, stream_seed(seed, stream++), threads);
            out.push_back({"snr.eve.range_" + format_number(r), mc.closed_form_snr, mc.empirical_snr, mc.z_score(), mc.within(k_sigma)});
        }
        return out;
    }

    struct BoundCheck
    {
        VerificationRecord printed; // closed-form bound as stated
        VerificationRecord exact;   // same bound with the exact sidelobe level
    };

    inline SelectionSizes bound_sizes(const Scenario &sc)
    {
        const int M = sc.m(), N = sc.n();
        const int ms = sc.sizes.m_s() < M ? sc.sizes.m_s() : int(round_nearest(2.0 * M / 3.0));
        const int ns = sc.sizes.n_s() < N ? sc.sizes.n_s() : int(round_nearest(2.0 * N / 3.0));
        return {std::max(ms, M / 2 + 1), std::max(ns, N / 2 + 1)};
    }

    // Equal-bearing cut against the range-cut bound. A scenario without antenna selection is
    // checked with two thirds of the antennas selected.
    inline BoundCheck verify_range_bound(const Scenario &sc, int points = 2000, double lo = 1.0, double hi = 200.0)
    {
        Scenario s = sc;
        s.sizes = SelectionSizes(bound_sizes(sc).m_s(), sc.sizes.n_s());
        const GridMax g = grid_max_eve_snr(s, {Cut::Range, lo, hi, points});
        const double printed = range_bound(s.m(), s.sizes.m_s());
        const double exact = subset_bound(s.m(), s.sizes.m_s(), first_sidelobe_peak(s.m()));
        BoundCheck c;
        c.printed = {"bounds.range_cut.Ms" + std::to_string(s.sizes.m_s()), printed, g.max_snr, g.max_snr / printed, !g.degenerate && g.max_snr <= printed};
        c.exact = {"bounds.range_cut.exact_peak.Ms" + std::to_string(s.sizes.m_s()), exact, g.max_snr, g.max_snr / exact, !g.degenerate && g.max_snr <= exact};
        return c;
    }

    // Equal-range cut over bearings in [lo, hi] against the angle-cut bound. A scenario without
    // element selection is checked with two thirds of the elements selected.
    inline BoundCheck verify_angle_bound(const Scenario &sc, int points = 2000, double lo = -0.5 * pi, double hi = 0.5 * pi)
    {
        Scenario s = sc;
        s.sizes = SelectionSizes(sc.sizes.m_s(), bound_sizes(sc).n_s());
        const GridMax g = grid_max_eve_snr(s, {Cut::Angle, lo, hi, points});
        const EveBounds b = eve_upper_bounds(s.sizes, s.plan, s.ris, s.bob().aoa_rad);
        const LambdaSearch lam = exact_lambda(s, lo, hi, 200001);
        const double exact = angle_bound(s.n(), s.sizes.n_s(), lam.lambda);
        BoundCheck c;
        c.printed = {"bounds.angle_cut.Ns" + std::to_string(s.sizes.n_s()), b.ub_angle, g.max_snr, g.max_snr / b.ub_angle, !g.degenerate && g.max_snr <= b.ub_angle};
        c.exact = {"bounds.angle_cut.exact_lambda.Ns" + std::to_string(s.sizes.n_s()), exact, g.max_snr, g.max_snr / exact, !g.degenerate && g.max_snr <= exact};
        return c;
    }

} // namespace fdaris

#endif
