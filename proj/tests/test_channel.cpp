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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "fdaris/beamforming.hpp"
#include "fdaris/channel.hpp"

using namespace fdaris;

namespace
{
    const Placement baseline_placement({30, 30}, {100, -20});

    double phase_gap(cdouble a, cdouble b) { return std::abs(std::arg(a * std::conj(b))); }
}

TEST(FdaPlan, Frequencies)
{
    const FdaPlan p(60e9, 1e6, 21);
    EXPECT_EQ(antenna_frequency(p, 11), 60e9);
    EXPECT_EQ(antenna_frequency(p, 21), 60e9 + 10e6);
    EXPECT_EQ(antenna_frequency(p, 1), 60e9 - 10e6);
    const FdaPlan flat(60e9, 0.0, 3);
    for (int m = 1; m <= 3; ++m)
        EXPECT_EQ(antenna_frequency(flat, m), 60e9);
    EXPECT_THROW(antenna_frequency(p, 0), std::out_of_range);
    EXPECT_THROW(antenna_frequency(p, 22), std::out_of_range);
}

TEST(FdaPlan, OffsetsAreCentred)
{
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.0, 2e6);
    for (int M = 1; M <= 60; ++M)
    {
        const double df = u(rng);
        const FdaPlan p(60e9, df, M);
        for (int m = 1; m <= M; ++m)
            EXPECT_EQ(p.offset_hz(m) + p.offset_hz(M + 1 - m), 0.0);
        double sum = 0.0;
        for (int m = 1, k = M; m < k; ++m, --k)
            sum += p.offset_hz(m) + p.offset_hz(k);
        EXPECT_EQ(sum, 0.0);
    }
}

TEST(FdaPlan, ShiftConstraint)
{
    EXPECT_NO_THROW(FdaPlan(60e9, 6e6, 21));
    EXPECT_THROW(FdaPlan(60e9, 6.01e6, 21), std::invalid_argument);
    EXPECT_THROW(FdaPlan(60e9, -1.0, 21), std::invalid_argument);
    EXPECT_THROW(FdaPlan(0.0, 1.0, 21), std::invalid_argument);
    EXPECT_THROW(FdaPlan(60e9, 1.0, 0), std::invalid_argument);
}

TEST(RisGeometry, IndexSplitIsOneBasedRowMajor)
{
    const RisGeometry g(4, 3, 0.1, 0.1, 0.1);
    EXPECT_EQ(g.split(1).h, 1);
    EXPECT_EQ(g.split(1).v, 1);
    EXPECT_EQ(g.split(4).h, 4);
    EXPECT_EQ(g.split(4).v, 1);
    EXPECT_EQ(g.split(5).h, 1);
    EXPECT_EQ(g.split(5).v, 2);
    EXPECT_EQ(g.split(12).h, 4);
    EXPECT_EQ(g.split(12).v, 3);
    EXPECT_THROW(g.split(0), std::out_of_range);
    EXPECT_THROW(g.split(13), std::out_of_range);
    double sh = 0.0, sv = 0.0;
    for (int n = 1; n <= g.size(); ++n)
    {
        sh += g.centred_h(n);
        sv += g.centred_v(n);
    }
    EXPECT_EQ(sh, 0.0);
    EXPECT_EQ(sv, 0.0);
}

TEST(RisGeometry, HalfWavelengthFromPlan)
{
    const RisGeometry g = RisGeometry::from_plan(FdaPlan(60e9, 1e6, 21), 21, 21);
    EXPECT_DOUBLE_EQ(g.d_h_m(), speed_of_light / 120e9);
    EXPECT_EQ(g.d_h_m(), g.d_v_m());
    EXPECT_EQ(g.d_h_m(), g.d_bs_m());
    EXPECT_EQ(g.size(), 441);
}

TEST(Delays, BsRis)
{
    const FdaPlan p(60e9, 1e6, 21);
    const RisGeometry g = RisGeometry::from_plan(p, 21, 21);
    const BsRisLink l = bs_ris_link(baseline_placement);
    EXPECT_EQ(delay_bs_ris(p, g, l, 11, 221), l.r1_m / speed_of_light);
    EXPECT_NEAR(delay_bs_ris(p, g, l, 1, 7) - delay_bs_ris(p, g, l, 21, 7), 20 * g.d_bs_m() * std::sin(pi / 4) / speed_of_light, 1e-22);
    const BsRisLink flat{42.0, 0.0};
    EXPECT_EQ(delay_bs_ris(p, g, flat, 1, 9), delay_bs_ris(p, g, flat, 21, 9));
    EXPECT_THROW(delay_bs_ris(p, g, BsRisLink{0.0, 0.1}, 1, 1), std::domain_error);
}

TEST(Delays, RisUser)
{
    const RisGeometry g(5, 5, 0.0025, 0.0025, 0.0025);
    const PolarLocation u{80.0, 0.62};
    EXPECT_EQ(delay_ris_user(g, u, 13), 80.0 / speed_of_light);
    // bearing pi/2 removes the horizontal term: elements in one row share a delay
    const PolarLocation up{80.0, pi / 2};
    EXPECT_NEAR(delay_ris_user(g, up, 6), delay_ris_user(g, up, 10), 1e-24);
    // mirrored columns (same row) are symmetric about R/c
    for (int col = 1; col <= 5; ++col)
    {
        const int n = 10 + col, mirror = 10 + (6 - col);
        EXPECT_NEAR(delay_ris_user(g, u, n) + delay_ris_user(g, u, mirror) - 2 * delay_ris_user(g, u, 13), 0.0, 1e-22);
    }
}

TEST(Channels, UnitModulusAndAmplitude)
{
    const FdaPlan p(60e9, 1e6, 5);
    const RisGeometry g = RisGeometry::from_plan(p, 4, 3);
    const PathLossModel pl(60.0, 2.0);
    const PolarLocation bob = to_polar(baseline_placement, baseline_placement.bob());
    const ChannelPair ch = synthesize_channels(p, g, pl, baseline_placement, bob);
    EXPECT_EQ(ch.g.entries.rows(), 5);
    EXPECT_EQ(ch.g.entries.cols(), 12);
    for (int m = 0; m < 5; ++m)
        for (int n = 0; n < 12; ++n)
        {
            EXPECT_NEAR(std::abs(ch.g.entries(m, n)) / ch.g.amplitude, 1.0, 1e-12);
            EXPECT_NEAR(std::abs(ch.h.entries(m, n)) / ch.h.amplitude, 1.0, 1e-12);
        }
    EXPECT_NEAR(ch.g.amplitude * ch.g.amplitude, path_loss_linear(pl, std::hypot(30.0, 30.0)), 1e-12 * path_loss_linear(pl, std::hypot(30.0, 30.0)));
    EXPECT_NEAR(ch.h.amplitude * ch.h.amplitude, path_loss_linear(pl, bob.range_m), 1e-12 * path_loss_linear(pl, bob.range_m));
}

TEST(Channels, SingleFrequencyRowsIdentical)
{
    const FdaPlan p(60e9, 0.0, 4);
    const RisGeometry g = RisGeometry::from_plan(p, 3, 3);
    const ChannelPair ch = synthesize_channels(p, g, PathLossModel(60, 2), baseline_placement, {50.0, 0.3});
    for (int m = 1; m < 4; ++m)
        EXPECT_EQ((ch.h.entries.row(m) - ch.h.entries.row(0)).norm(), 0.0);
}

TEST(Channels, DelaySplitMatchesDirectPhase)
{
    const FdaPlan p(60e9, 1e6, 21);
    const RisGeometry g = RisGeometry::from_plan(p, 21, 21);
    const BsRisLink l = bs_ris_link(baseline_placement);
    for (int m : {1, 6, 11, 17, 21})
        for (int n : {1, 30, 221, 300, 441})
        {
            const double direct = delay_bs_ris(p, g, l, m, n);
            const double element = (g.centred_v(n) * g.d_v_m() * std::sin(l.theta_tx_rad) + g.centred_h(n) * g.d_h_m() * std::cos(l.theta_tx_rad)) / speed_of_light;
            const cdouble a = propagation_phasor(p.f0_hz(), p.offset_hz(m), direct);
            const cdouble b = propagation_phasor(p.f0_hz(), p.offset_hz(m), l.r1_m / speed_of_light) *
                              propagation_phasor(p.f0_hz(), p.offset_hz(m), antenna_aux_delay(p, g, l, m)) *
                              propagation_phasor(p.f0_hz(), p.offset_hz(m), element);
            EXPECT_LT(phase_gap(a, b), 1e-9);
        }
}

TEST(Cascade, SingleElement)
{
    const FdaPlan p(60e9, 1e6, 3);
    const RisGeometry g = RisGeometry::from_plan(p, 1, 1);
    const ChannelPair ch = synthesize_channels(p, g, PathLossModel(60, 2), baseline_placement, {40.0, 0.1});
    const CascadedChannel h = cascaded_channel(ch.g, ch.h, Eigen::VectorXd::Zero(1));
    for (int m = 0; m < 3; ++m)
        EXPECT_EQ(h.entries(m), ch.g.entries(m, 0) * ch.h.entries(m, 0));
}

TEST(Cascade, CoherentAtBobWithoutFrequencyOffsets)
{
    const FdaPlan p(60e9, 0.0, 21);
    const RisGeometry g = RisGeometry::from_plan(p, 21, 21);
    const PathLossModel pl(60, 2);
    const PolarLocation bob = to_polar(baseline_placement, baseline_placement.bob());
    const ChannelPair ch = synthesize_channels(p, g, pl, baseline_placement, bob);
    const CascadedChannel h = cascaded_channel(ch.g, ch.h, ris_phases_closed_form(p, g, bs_ris_link(baseline_placement), bob));
    const double expect = ch.g.amplitude * ch.h.amplitude * 441;
    for (int m = 0; m < 21; ++m)
        EXPECT_NEAR(std::abs(h.entries(m)) / expect, 1.0, 1e-9);
}

TEST(Cascade, HadamardAndFactoredFormsAgree)
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::uniform_int_distribution<int> small(1, 7);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial)
    {
        const int M = small(rng) + 1;
        const double f0 = 10e9 + 90e9 * u(rng);
        const FdaPlan p(f0, u(rng) * 2e-3 * f0 / (M - 1), M);
        const RisGeometry g = RisGeometry::from_plan(p, small(rng), small(rng));
        const Placement pl({10 + 60 * u(rng), -40 + 80 * u(rng)}, {100 + 50 * u(rng), -60 + 120 * u(rng)});
        const PolarLocation user{5 + 150 * u(rng), -pi + 2 * pi * u(rng)};
        Eigen::VectorXd phases(g.size());
        for (int n = 0; n < g.size(); ++n)
            phases(n) = two_pi * u(rng);
        const PathLossModel model(60, 2);
        const ChannelPair ch = synthesize_channels(p, g, model, pl, user);
        const CascadedChannel a = cascaded_channel(ch.g, ch.h, phases);
        const CascadedChannel b = cascaded_channel_factored(p, g, model, pl, user, phases);
        const double scale = ch.g.amplitude * ch.h.amplitude * g.size();
        for (int m = 0; m < M; ++m)
        {
            worst = std::max(worst, std::abs(a.entries(m) - b.entries(m)) / scale);
            EXPECT_LE(std::abs(a.entries(m)), scale * (1 + 1e-12));
        }
        EXPECT_EQ(b.antenna_aux_s.size(), M);
        EXPECT_EQ(b.element_aux_s.size(), g.size());
    }
    EXPECT_LT(worst, 1e-9);
}

TEST(Cascade, DimensionMismatch)
{
    const FdaPlan p(60e9, 1e6, 3);
    const RisGeometry g = RisGeometry::from_plan(p, 2, 2);
    const ChannelPair ch = synthesize_channels(p, g, PathLossModel(60, 2), baseline_placement, {40.0, 0.1});
    EXPECT_THROW(cascaded_channel(ch.g, ch.h, Eigen::VectorXd::Zero(3)), std::invalid_argument);
}
