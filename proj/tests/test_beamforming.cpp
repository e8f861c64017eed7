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
#include "fdaris/secrecy.hpp"

using namespace fdaris;

namespace
{
    Scenario small_scenario(double delta_f, int m, int nh, int nv, SelectionSizes sizes)
    {
        Scenario s = Scenario::paper_baseline();
        s.plan = FdaPlan(60e9, delta_f, m);
        s.ris = RisGeometry::from_plan(s.plan, nh, nv);
        s.sizes = sizes;
        return s;
    }

    SelectionMask mask_from(int m, std::vector<int> ant_sel, int n, std::vector<int> el_sel)
    {
        SelectionMask k;
        std::vector<bool> a(m, false), e(n, false);
        for (int i : ant_sel)
            a[i] = true;
        for (int i : el_sel)
            e[i] = true;
        for (int i = 0; i < m; ++i)
            (a[i] ? k.antenna_subset : k.antenna_excluded).push_back(i);
        for (int i = 0; i < n; ++i)
            (e[i] ? k.element_subset : k.element_excluded).push_back(i);
        return k;
    }
}

TEST(Sizes, Validation)
{
    EXPECT_NO_THROW(SelectionSizes(11, 221).validate(21, 441));
    EXPECT_THROW(SelectionSizes(10, 441).validate(21, 441), std::invalid_argument);
    EXPECT_THROW(SelectionSizes(22, 441).validate(21, 441), std::invalid_argument);
    EXPECT_THROW(SelectionSizes(21, 220).validate(21, 441), std::invalid_argument);
    EXPECT_THROW(SelectionSizes(2, 2).validate(4, 4), std::invalid_argument);
    EXPECT_NO_THROW(SelectionSizes(2, 1).validate(2, 1));
}

TEST(RisPhases, CentreElementIsZero)
{
    const Scenario s = small_scenario(1e6, 5, 21, 21, {5, 441});
    const Eigen::VectorXd phi = ris_phases_closed_form(s.plan, s.ris, s.link(), s.bob());
    EXPECT_EQ(phi(220), 0.0);
    for (int n = 0; n < phi.size(); ++n)
    {
        EXPECT_GE(phi(n), 0.0);
        EXPECT_LT(phi(n), two_pi);
    }
}

TEST(RisPhases, ComposedFromDelayDifferences)
{
    const Scenario s = small_scenario(1e6, 3, 3, 3, {3, 9});
    const BsRisLink l = s.link();
    const PolarLocation bob = s.bob();
    EXPECT_NEAR(bob.aoa_rad, 0.62, 0.005);
    const Eigen::VectorXd phi = ris_phases_closed_form(s.plan, s.ris, l, bob);
    for (int n = 1; n <= 9; ++n)
    {
        const double tau = (delay_bs_ris(s.plan, s.ris, l, 2, n) - l.r1_m / speed_of_light) + (delay_ris_user(s.ris, bob, n) - bob.range_m / speed_of_light);
        const double expect = two_pi * s.plan.f0_hz() * tau;
        EXPECT_LT(std::abs(std::arg(std::polar(1.0, phi(n - 1) - expect))), 1e-9);
    }
}

TEST(RisPhases, Inversion)
{
    Eigen::VectorXd base(4);
    base << 0.1, 3.5, 6.0, 1.0;
    const SelectionMask full = mask_from(1, {0}, 4, {0, 1, 2, 3});
    EXPECT_EQ((ris_phases_ribes(base, full) - base).norm(), 0.0);

    const SelectionMask one = mask_from(1, {0}, 4, {0, 1, 3});
    Eigen::VectorXd hand = base;
    hand(2) = 6.0 + pi - two_pi;
    const Eigen::VectorXd got = ris_phases_ribes(base, one);
    for (int n = 0; n < 4; ++n)
        EXPECT_NEAR(got(n), hand(n), 1e-15);
    EXPECT_THROW(ris_phases_ribes(Eigen::VectorXd::Zero(3), one), std::invalid_argument);
}

TEST(Mrt, BasicProperties)
{
    Eigen::VectorXcd e = Eigen::VectorXcd::Zero(4);
    e(0) = 1.0;
    const BeamformerVector w = mrt_beamformer(e);
    EXPECT_EQ(w.weights, e);

    std::mt19937_64 rng(5);
    std::normal_distribution<double> g;
    for (int t = 0; t < 50; ++t)
    {
        Eigen::VectorXcd h(7);
        for (int i = 0; i < 7; ++i)
            h(i) = cdouble(g(rng), g(rng));
        const BeamformerVector v = mrt_beamformer(h);
        EXPECT_NEAR(v.norm(), 1.0, 1e-12);
        EXPECT_NEAR(std::abs(h.dot(v.weights)), h.norm(), 1e-12 * h.norm());
    }
    EXPECT_THROW(mrt_beamformer(Eigen::VectorXcd::Zero(3).eval()), std::domain_error);
}

TEST(Mrt, FullArrayMeetsCoherentSnr)
{
    const Scenario s = small_scenario(0.0, 21, 21, 21, {21, 441});
    const PolarLocation bob = s.bob();
    const ChannelPair ch = synthesize_channels(s.plan, s.ris, s.pathloss, s.placement, bob);
    const CascadedChannel h = cascaded_channel(ch.g, ch.h, ris_phases_closed_form(s.plan, s.ris, s.link(), bob));
    const cdouble y = received_sample(h, mrt_beamformer(h), s.budget.power_w, 1.0, 0.0);
    const double snr = std::norm(y) / s.budget.noise_bob_w;
    EXPECT_NEAR(snr / snr_bob_fda(s.budget, s.lg(), s.lh(bob.range_m), 21, 441), 1.0, 1e-9);
}

TEST(Ribes, BeamformerSigns)
{
    Eigen::VectorXcd h(4);
    h << cdouble(1, 2), cdouble(-1, 0.5), cdouble(0.3, 0.3), cdouble(2, -1);
    const SelectionMask all = mask_from(4, {0, 1, 2, 3}, 1, {0});
    EXPECT_EQ(ribes_beamformer(h, all).weights, mrt_beamformer(h).weights);
    const SelectionMask three = mask_from(4, {0, 1, 2}, 1, {0});
    const BeamformerVector w = ribes_beamformer(h, three);
    const BeamformerVector m = mrt_beamformer(h);
    for (int i = 0; i < 3; ++i)
        EXPECT_EQ(w.weights(i), m.weights(i));
    EXPECT_EQ(w.weights(3), -m.weights(3));
    EXPECT_NEAR(w.norm(), 1.0, 1e-12);
}

TEST(Ribes, BobAmplitudeIsMaskIndependentAtSingleFrequency)
{
    const Scenario s = small_scenario(0.0, 21, 21, 21, {14, 294});
    const PolarLocation bob = s.bob();
    const ChannelPair ch = synthesize_channels(s.plan, s.ris, s.pathloss, s.placement, bob);
    const Eigen::VectorXd phi = ris_phases_closed_form(s.plan, s.ris, s.link(), bob);
    const double expect = std::sqrt(s.budget.power_w * s.lg() * s.lh(bob.range_m) / 21.0) * (2 * 14 - 21) * (2 * 294 - 441);
    MaskSampler sampler(99, 21, 441, s.sizes);
    double lo = 1e300, hi = 0.0;
    for (int k = 0; k < 1000; ++k)
    {
        const SelectionMask mask = sampler.draw();
        const CascadedChannel h = cascaded_channel(ch.g, ch.h, ris_phases_ribes(phi, mask));
        const BeamformerVector w = ribes_beamformer(h, mask);
        EXPECT_NEAR(w.norm(), 1.0, 1e-12);
        const double a = std::abs(received_sample(h, w, s.budget.power_w, 1.0, 0.0));
        lo = std::min(lo, a);
        hi = std::max(hi, a);
    }
    EXPECT_LT((hi - lo) / expect, 1e-9);
    EXPECT_NEAR(hi / expect, 1.0, 1e-9);
}

TEST(ReceivedSample, NoiseFreeLinearity)
{
    Eigen::VectorXcd h(3);
    h << cdouble(0.2, 0.1), cdouble(-0.4, 0.3), cdouble(0.05, -0.7);
    const BeamformerVector w = mrt_beamformer(h);
    EXPECT_NEAR(std::abs(received_sample(h, w, 4.0, 1.0, 0.0) - 2.0 * h.norm()), 0.0, 1e-15);
    const cdouble y = received_sample(h, w, 4.0, cdouble(0.6, -0.8), 0.0);
    const cdouble rot = std::polar(1.0, 0.7);
    EXPECT_NEAR(std::abs(received_sample(h, w, 4.0, cdouble(0.6, -0.8) * rot, 0.0) - y * rot), 0.0, 1e-15);
    EXPECT_EQ(received_sample(h, w, 4.0, 0.0, cdouble(1, 2)), cdouble(1, 2));
}

TEST(Masks, FullSelectionAndDeterminism)
{
    MaskSampler full(1, 5, 4, {5, 4});
    for (int k = 0; k < 10; ++k)
    {
        const SelectionMask m = full.draw();
        EXPECT_EQ(m.antenna_subset.size(), 5u);
        EXPECT_TRUE(m.antenna_excluded.empty());
        EXPECT_TRUE(m.element_excluded.empty());
        EXPECT_EQ(m.symbol_index, std::uint64_t(k));
    }
    MaskSampler a(42, 21, 441, {14, 294}), b(42, 21, 441, {14, 294});
    for (int k = 0; k < 100; ++k)
    {
        const SelectionMask x = a.draw(), y = b.draw();
        EXPECT_EQ(x.antenna_subset, y.antenna_subset);
        EXPECT_EQ(x.element_excluded, y.element_excluded);
        EXPECT_EQ(x.antenna_subset.size(), 14u);
        EXPECT_EQ(x.element_subset.size(), 294u);
    }
    std::mt19937_64 r1(8), r2(8);
    EXPECT_EQ(draw_mask(r1, {4, 3}, 6, 5).antenna_subset, draw_mask(r2, {4, 3}, 6, 5).antenna_subset);
    EXPECT_THROW(MaskSampler(1, 6, 6, {3, 6}), std::invalid_argument);
}

TEST(Masks, InclusionProbability)
{
    // 1e5 draws of 4 from 6 (and 3 from 5): every index appears with probability k/n
    MaskSampler s(2024, 6, 5, {4, 3});
    const int draws = 100000;
    std::vector<int> ca(6, 0), ce(5, 0);
    for (int k = 0; k < draws; ++k)
    {
        const SelectionMask m = s.draw();
        for (int i : m.antenna_subset)
            ++ca[i];
        for (int i : m.element_subset)
            ++ce[i];
    }
    double chi_a = 0.0, chi_e = 0.0;
    for (int c : ca)
    {
        EXPECT_NEAR(double(c) / draws, 4.0 / 6.0, 0.01);
        const double e = draws * 4.0 / 6.0;
        chi_a += (c - e) * (c - e) / e;
    }
    for (int c : ce)
    {
        EXPECT_NEAR(double(c) / draws, 3.0 / 5.0, 0.01);
        const double e = draws * 3.0 / 5.0;
        chi_e += (c - e) * (c - e) / e;
    }
    // 99.9% quantile of chi-square with 5 (4) degrees of freedom
    EXPECT_LT(chi_a, 20.52);
    EXPECT_LT(chi_e, 18.47);
}

TEST(Masks, StreamSeedsDiffer)
{
    EXPECT_NE(stream_seed(1, 0), stream_seed(1, 1));
    EXPECT_NE(stream_seed(1, 0), stream_seed(2, 0));
    EXPECT_EQ(stream_seed(9, 4), stream_seed(9, 4));
}
