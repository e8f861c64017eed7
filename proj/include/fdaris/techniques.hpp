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

#ifndef FDARIS_TECHNIQUES_HPP
#define FDARIS_TECHNIQUES_HPP

#include <optional>
#include <stdexcept>
#include <string>

#include "optimize.hpp"
#include "secrecy.hpp"

namespace fdaris
{
    enum class Technique
    {
        Conventional,  // phased array, no selection
        Fda,           // frequency diverse array, no selection
        FdaRibes,      // FDA with random subset selection at BS and RIS
        OptimalDeltaF  // FDA with the increment that nulls Eve's range
    };

    inline std::string to_string(Technique t)
    {
        switch (t)
        {
        case Technique::Conventional:
            return "conventional";
        case Technique::Fda:
            return "fda";
        case Technique::FdaRibes:
            return "fda+ribes";
        default:
            return "optimal-df";
        }
    }

    inline Technique parse_technique(const std::string &s)
    {
        if (s == "conventional")
            return Technique::Conventional;
        if (s == "fda")
            return Technique::Fda;
        if (s == "fda+ribes")
            return Technique::FdaRibes;
        if (s == "optimal-df")
            return Technique::OptimalDeltaF;
        throw std::invalid_argument("technique must be one of conventional, fda, fda+ribes, optimal-df; got '" + s + "'.");
    }

    struct SecrecyReport
    {
        Technique technique = Technique::FdaRibes;
        PolarLocation eve;
        double gamma_bob = 0.0;
        double gamma_eve = 0.0;
        double rate_bits = 0.0;
        bool in_wiretap = false;
        double delta_f_hz = 0.0;             // increment actually used
        std::optional<bool> delta_f_feasible; // optimal-df only
        DirichletKernels kernels;
        ScalingStats stats;
    };

    inline SecrecyReport evaluate(const Scenario &sc, const PolarLocation &eve, Technique t, std::optional<SelectionSizes> sizes_override = std::nullopt)
    {
        const PolarLocation bob = sc.bob();
        const int M = sc.m(), N = sc.n();
        SecrecyReport r;
        r.technique = t;
        r.eve = eve;

        FdaPlan plan = sc.plan;
        SelectionSizes sizes = sizes_override ? *sizes_override : sc.sizes;
        switch (t)
        {
        case Technique::Conventional:
            plan = plan.with_delta_f(0.0);
            sizes = SelectionSizes::full(M, N);
            break;
        case Technique::Fda:
            sizes = SelectionSizes::full(M, N);
            break;
        case Technique::FdaRibes:
            break;
        case Technique::OptimalDeltaF:
            r.delta_f_feasible = false;
            if (eve.range_m != bob.range_m)
            {
                const DeltaFChoice c = optimal_delta_f(plan, bob, eve);
                if (c.feasible)
                {
                    plan = plan.with_delta_f(c.delta_f_hz);
                    r.delta_f_feasible = true;
                }
            }
            break;
        }
        sizes.validate(M, N);
        r.delta_f_hz = plan.delta_f_hz();

        const double lg = sc.lg();
        r.kernels = kernels_at(plan, sc.ris, bob, eve);
        r.stats = scaling_stats(lg, sc.lh(eve.range_m), plan, sc.ris, sizes, r.kernels);
        r.gamma_bob = snr_bob_ribes(sc.budget, lg, sc.lh(bob.range_m), M, N, sizes);
        r.gamma_eve = snr_eve_ribes(r.stats, sc.budget);
        r.rate_bits = secrecy_rate(r.gamma_bob, r.gamma_eve);
        r.in_wiretap = in_wiretap(wiretap_region(plan, sc.ris, bob, sc.combine), bob, eve);
        return r;
    }

    inline SecrecyReport evaluate(const Scenario &sc, const Point2 &eve, Technique t, std::optional<SelectionSizes> sizes_override = std::nullopt)
    {
        return evaluate(sc, to_polar(sc.placement, eve), t, sizes_override);
    }

} // namespace fdaris

#endif
