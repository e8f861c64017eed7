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

#ifndef FDARIS_ORACLE_HPP
#define FDARIS_ORACLE_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "beamforming.hpp"
#include "channel.hpp"
#include "parallel.hpp"
#include "secrecy.hpp"
#include "stats.hpp"

namespace fdaris
{
    inline double binomial(int n, int k)
    {
        if (k < 0 || k > n)
            return 0.0;
        double r = 1.0;
        for (int i = 1; i <= k; ++i)
            r = r * (n - k + i) / i;
        return std::round(r);
    }

    // Visits every k-subset of {0..n-1} as a bit mask (Gosper's hack)
    template <typename Fn>
    void for_each_combination(int n, int k, Fn &&fn)
    {
        if (n < 0 || n > 62 || k < 0 || k > n)
            throw std::invalid_argument("for_each_combination: need 0 <= k <= n <= 62.");
        if (k == 0)
        {
            fn(std::uint64_t(0));
            return;
        }
        const std::uint64_t limit = std::uint64_t(1) << n;
        std::uint64_t c = (std::uint64_t(1) << k) - 1;
        while (c < limit)
        {
            fn(c);
            const std::uint64_t lo = c & (~c + 1);
            const std::uint64_t r = c + lo;
            c = (((r ^ c) >> 2) / lo) | r;
        }
    }

    struct EnumerationReport
    {
        std::complex<double> exact_mean;
        double exact_variance = 0.0;
        double subset_count = 0.0;
        double inclusion_total = 0.0; // sum of subset sizes over all subsets
        double closed_form_mean = 0.0;
        double closed_form_variance = 0.0;
        double max_rel_error = 0.0;   // relative to max(|closed form|, 1)
    };

    inline constexpr double enumeration_guard = 1e6;

    // Exact moments of sum(selected) - sum(rest) over all k-subsets of the given phasors
    inline EnumerationReport enumerate_signed_sums(const std::vector<std::complex<double>> &z, int k)
    {
        const int n = int(z.size());
        if (binomial(n, k) > enumeration_guard)
            throw std::invalid_argument("enumerate: C(" + std::to_string(n) + ", " + std::to_string(k) + ") exceeds the enumeration guard.");
        std::complex<double> total = 0.0;
        for (const auto &v : z)
            total += v;

        std::vector<std::complex<double>> values;
        values.reserve(std::size_t(binomial(n, k)));
        EnumerationReport r;
        for_each_combination(n, k, [&](std::uint64_t bits)
        {
            std::complex<double> sel = 0.0;
            for (int i = 0; i < n; ++i)
                if (bits >> i & 1U)
                {
                    sel += z[i];
                    r.inclusion_total += 1.0;
                }
            values.push_back(2.0 * sel - total);
        });
        r.subset_count = double(values.size());
        std::complex<double> mean = 0.0;
        for (const auto &v : values)
            mean += v;
        mean /= r.subset_count;
        double var = 0.0;
        for (const auto &v : values)
            var += std::norm(v - mean);
        r.exact_mean = mean;
        r.exact_variance = var / r.subset_count;
        return r;
    }

    inline void finish_report(EnumerationReport &r, const Moments &cf)
    {
        r.closed_form_mean = cf.mean;
        r.closed_form_variance = cf.variance;
        const double e_mean = std::abs(r.exact_mean - cf.mean) / std::max(std::abs(cf.mean), 1.0);
        const double e_var = std::abs(r.exact_variance - cf.variance) / std::max(std::abs(cf.variance), 1.0);
        r.max_rel_error = std::max(e_mean, e_var);
    }

    // Antenna-side sum for Eve at range r_eve against Bob at r_bob
    inline EnumerationReport enumerate_u_moments(const FdaPlan &plan, double r_bob, double r_eve, int m_s)
    {
        std::vector<std::complex<double>> z;
        for (int m = 1; m <= plan.m_antennas(); ++m)
            z.push_back(std::polar(1.0, two_pi * plan.offset_hz(m) * (r_eve - r_bob) / speed_of_light));
        EnumerationReport r = enumerate_signed_sums(z, m_s);
        const double mu1 = dirichlet(range_kernel_arg(plan, r_eve, r_bob), plan.m_antennas());
        finish_report(r, signed_subset_moments(plan.m_antennas(), m_s, mu1));
        return r;
    }

    // Element-side sum built from the per-element delay differences of the channel model
    inline EnumerationReport enumerate_v_moments(const FdaPlan &plan, const RisGeometry &geom, const BsRisLink &link,
                                                 const PolarLocation &bob, const PolarLocation &eve, int n_s)
    {
        std::vector<std::complex<double>> z;
        for (int n = 1; n <= geom.size(); ++n)
        {
            const double dtau = element_aux_delay(geom, link, eve, n) - element_aux_delay(geom, link, bob, n);
            z.push_back(std::polar(1.0, two_pi * plan.f0_hz() * dtau));
        }
        EnumerationReport r = enumerate_signed_sums(z, n_s);
        const DirichletKernels k = kernels_at(plan, geom, bob, eve);
        finish_report(r, signed_subset_moments(geom.size(), n_s, k.mu2 * k.mu3));
        return r;
    }

    // Per-location cascade ingredients: element-wise product of both segments and the full-phase response
    struct CascadeCache
    {
        Eigen::MatrixXcd product; // G o H, M x N, already multiplied by the base RIS phasors
        Eigen::VectorXcd full;    // response with every element at its base phase
    };

    inline CascadeCache make_cascade_cache(const Scenario &sc, const PolarLocation &user, const Eigen::VectorXd &base_phases)
    {
        const ChannelPair ch = synthesize_channels(sc.plan, sc.ris, sc.pathloss, sc.placement, user);
        CascadeCache c;
        c.product = ch.g.entries.cwiseProduct(ch.h.entries) * ris_phasors(base_phases).asDiagonal();
        c.full = c.product.rowwise().sum();
        return c;
    }

    // Cascaded channel under a mask: excluded elements are inverted
    inline Eigen::VectorXcd masked_response(const CascadeCache &c, const SelectionMask &mask)
    {
        Eigen::VectorXcd h = c.full;
        for (int n : mask.element_excluded)
            h -= 2.0 * c.product.col(n);
        return h;
    }

    struct McReport
    {
        std::uint64_t samples = 0;
        std::uint64_t seed = 0;
        double empirical_snr = 0.0;
        double closed_form_snr = 0.0;
        double std_error = 0.0;
        std::complex<double> empirical_mean;
        double empirical_variance = 0.0;

        double z_score() const { return std_error > 0.0 ? (empirical_snr - closed_form_snr) / std_error : 0.0; }
        bool within(double k_sigma, double rel_floor = 1e-9) const
        {
            return std::abs(empirical_snr - closed_form_snr) <= k_sigma * std_error + rel_floor * std::abs(closed_form_snr);
        }
    };

    inline constexpr std::uint64_t mc_batch_size = 1024;

    // Per-symbol scaling factor at Eve, synthesized from exact channels. Batch b draws its masks
    // from stream (seed, b); results are identical for any thread count.
    inline std::vector<std::complex<double>> sample_eve_scaling(const Scenario &sc, const PolarLocation &eve, std::uint64_t samples,
                                                                std::uint64_t seed, unsigned threads = 1)
    {
        sc.validate();
        const PolarLocation bob = sc.bob();
        const Eigen::VectorXd phi = ris_phases_closed_form(sc.plan, sc.ris, sc.link(), bob);
        const CascadeCache cb = make_cascade_cache(sc, bob, phi);
        const CascadeCache ce = make_cascade_cache(sc, eve, phi);

        std::vector<std::complex<double>> beta(samples);
        const std::uint64_t batches = (samples + mc_batch_size - 1) / mc_batch_size;
        parallel_for(batches, threads, [&](std::size_t b)
        {
            MaskSampler sampler(stream_seed(seed, b), sc.m(), sc.n(), sc.sizes);
            const std::uint64_t end = std::min<std::uint64_t>(samples, (b + 1) * mc_batch_size);
            for (std::uint64_t k = b * mc_batch_size; k < end; ++k)
            {
                const SelectionMask mask = sampler.draw();
                const BeamformerVector w = ribes_beamformer(masked_response(cb, mask), mask);
                beta[k] = masked_response(ce, mask).dot(w.weights);
            }
        });
        return beta;
    }

    inline McReport monte_carlo_eve_snr(const Scenario &sc, const PolarLocation &eve, std::uint64_t samples, std::uint64_t seed,
                                        unsigned threads = 1)
    {
        if (samples < 100)
            throw std::invalid_argument("monte_carlo_eve_snr: need at least 100 samples.");
        const std::vector<std::complex<double>> beta = sample_eve_scaling(sc, eve, samples, seed, threads);
        const double K = double(samples);
        const double P = sc.budget.power_w, s2 = sc.budget.noise_eve_w;

        std::complex<double> mean = 0.0;
        for (const auto &b : beta)
            mean += b;
        mean /= K;
        double var = 0.0;
        for (const auto &b : beta)
            var += std::norm(b - mean);
        var /= (K - 1.0);

        // Delta method on (Re mean, Im mean, variance)
        Eigen::Matrix3d cov = Eigen::Matrix3d::Zero();
        for (const auto &b : beta)
        {
            const Eigen::Vector3d d(b.real() - mean.real(), b.imag() - mean.imag(), std::norm(b - mean) - var);
            cov += d * d.transpose();
        }
        cov /= (K - 1.0);
        const double den = P * var + s2;
        const Eigen::Vector3d grad(2.0 * P * mean.real() / den, 2.0 * P * mean.imag() / den, -P * P * std::norm(mean) / (den * den));

        McReport r;
        r.samples = samples;
        r.seed = seed;
        r.empirical_mean = mean;
        r.empirical_variance = var;
        r.empirical_snr = P * std::norm(mean) / den;
        r.std_error = std::sqrt(std::max(0.0, grad.dot(cov * grad) / K));
        const PolarLocation bob = sc.bob();
        const ScalingStats st = scaling_stats(sc.lg(), sc.lh(eve.range_m), sc.plan, sc.ris, sc.sizes, kernels_at(sc.plan, sc.ris, bob, eve));
        r.closed_form_snr = snr_eve_ribes(st, sc.budget);
        return r;
    }

    struct BobSnrCheck
    {
        double closed_form_snr = 0.0;
        double min_snr = 0.0;
        double max_snr = 0.0;
        double max_abs_db_error = 0.0;
        double relative_spread = 0.0; // (max - min) / closed form
    };

    // Bob's SNR from the literal received sample under `masks` random selections
    inline BobSnrCheck signal_level_bob_snr(const Scenario &sc, int masks, std::uint64_t seed)
    {
        sc.validate();
        const PolarLocation bob = sc.bob();
        const Eigen::VectorXd phi = ris_phases_closed_form(sc.plan, sc.ris, sc.link(), bob);
        const ChannelPair ch = synthesize_channels(sc.plan, sc.ris, sc.pathloss, sc.placement, bob);
        MaskSampler sampler(seed, sc.m(), sc.n(), sc.sizes);

        BobSnrCheck out;
        out.closed_form_snr = snr_bob_ribes(sc.budget, sc.lg(), sc.lh(bob.range_m), sc.m(), sc.n(), sc.sizes);
        out.min_snr = std::numeric_limits<double>::infinity();
        out.max_snr = 0.0;
        for (int k = 0; k < masks; ++k)
        {
            const SelectionMask mask = sampler.draw();
            const CascadedChannel h = cascaded_channel(ch.g, ch.h, ris_phases_ribes(phi, mask));
            const BeamformerVector w = ribes_beamformer(h, mask);
            const std::complex<double> y = received_sample(h, w, sc.budget.power_w, 1.0, 0.0);
            const double snr = std::norm(y) / sc.budget.noise_bob_w;
            out.min_snr = std::min(out.min_snr, snr);
            out.max_snr = std::max(out.max_snr, snr);
            out.max_abs_db_error = std::max(out.max_abs_db_error, std::abs(linear_to_db(snr / out.closed_form_snr)));
        }
        out.relative_spread = (out.max_snr - out.min_snr) / out.closed_form_snr;
        return out;
    }

    enum class Cut
    {
        Range, // Eve on Bob's bearing, range varies
        Angle  // Eve at Bob's range, bearing varies
    };

    struct GridSpec
    {
        Cut cut = Cut::Range;
        double lo = 1.0;
        double hi = 200.0;
        int points = 2000;
    };

    struct GridMax
    {
        double max_snr = 0.0;
        PolarLocation argmax;
        int evaluated = 0;       // grid points inside the cut's wiretap condition
        bool degenerate = false; // the cut holds no wiretap points (e.g. no range protection)
    };

    inline std::vector<double> linspace(double lo, double hi, int points)
    {
        if (points < 1)
            throw std::invalid_argument("linspace: need at least one point.");
        std::vector<double> v(points);
        for (int i = 0; i < points; ++i)
            v[i] = points == 1 ? lo : lo + (hi - lo) * i / (points - 1);
        return v;
    }

    inline PolarLocation cut_location(const PolarLocation &bob, Cut cut, double value)
    {
        return cut == Cut::Range ? PolarLocation{value, bob.aoa_rad} : PolarLocation{bob.range_m, value};
    }

    // Dense-grid maximum of the closed-form Eve SNR over the wiretap part of a cut. `noise_eve_w`
    // overrides the budget's Eve noise (0 gives the noise-free ratio).
    inline GridMax grid_max_eve_snr(const Scenario &sc, const GridSpec &spec, std::optional<double> noise_eve_w = std::nullopt)
    {
        if (spec.points < 1 || !(spec.hi >= spec.lo))
            throw std::invalid_argument("grid_max_eve_snr: empty grid.");
        const PolarLocation bob = sc.bob();
        const WiretapRegion region = wiretap_region(sc.plan, sc.ris, bob, CombineRule::Union);
        const double noise = noise_eve_w ? *noise_eve_w : sc.budget.noise_eve_w;
        GridMax g;
        g.degenerate = spec.cut == Cut::Range && !std::isfinite(region.delta_r_m);
        if (g.degenerate)
            return g;
        for (double v : linspace(spec.lo, spec.hi, spec.points))
        {
            const PolarLocation eve = cut_location(bob, spec.cut, v);
            const bool inside = spec.cut == Cut::Range ? range_condition(region, bob, eve) : angle_condition(region, bob, eve);
            if (!inside || !(eve.range_m > 0.0))
                continue;
            ++g.evaluated;
            const ScalingStats st = scaling_stats(sc.lg(), sc.lh(eve.range_m), sc.plan, sc.ris, sc.sizes, kernels_at(sc.plan, sc.ris, bob, eve));
            const double snr = snr_eve_ribes(st, sc.budget.power_w, noise);
            if (snr > g.max_snr || g.evaluated == 1)
            {
                g.max_snr = snr;
                g.argmax = eve;
            }
        }
        g.degenerate = g.evaluated == 0;
        return g;
    }

    struct LambdaSearch
    {
        double lambda = 0.0;
        double argmax_rad = 0.0;
    };

    // Largest |mu2 mu3| over wiretap bearings in [lo, hi]
    inline LambdaSearch exact_lambda(const Scenario &sc, double lo, double hi, int points)
    {
        const PolarLocation bob = sc.bob();
        const WiretapRegion region = wiretap_region(sc.plan, sc.ris, bob, CombineRule::Union);
        LambdaSearch out;
        for (double th : linspace(lo, hi, points))
        {
            const PolarLocation eve{bob.range_m, th};
            if (!angle_condition(region, bob, eve))
                continue;
            const DirichletKernels k = kernels_at(sc.plan, sc.ris, bob, eve);
            const double v = std::abs(k.mu2 * k.mu3);
            if (v > out.lambda)
            {
                out.lambda = v;
                out.argmax_rad = th;
            }
        }
        return out;
    }

} // namespace fdaris

#endif
