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

#ifndef FDARIS_OPTIMIZE_HPP
#define FDARIS_OPTIMIZE_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "secrecy.hpp"

namespace fdaris
{
    enum class OptimizationMethod
    {
        ClosedForm,
        Simplified,
        Sweep
    };

    inline std::string to_string(OptimizationMethod m)
    {
        switch (m)
        {
        case OptimizationMethod::ClosedForm:
            return "closed_form";
        case OptimizationMethod::Simplified:
            return "simplified";
        default:
            return "sweep";
        }
    }

    // Integer closest to x, halves away from zero
    inline long round_nearest(double x) { return std::lround(x); }

    struct AuxiliaryCoefficients
    {
        double eta_b = 0.0;  // Bob SNR per squared antenna imbalance
        double eta_e = 0.0;  // antenna-side Eve bound constant
        double zeta_b = 0.0; // Bob SNR per squared element imbalance
        double zeta_e = 0.0; // element-side Eve bound constant
    };

    inline double eta_e_of(int m)
    {
        const double s = std::sin(1.5 * pi / m);
        return (m - 1.0) / (double(m) * m * s * s - 1.0);
    }

    inline double zeta_e_of(int n, double lambda) { return (n - 1.0) * lambda * lambda / (double(n) * n - lambda * lambda); }

    inline AuxiliaryCoefficients auxiliary_coefficients(const Scenario &sc, double lambda)
    {
        const int M = sc.m(), N = sc.n();
        const double g = sc.budget.power_w / (M * sc.budget.noise_bob_w) * sc.lg() * sc.lh(sc.bob().range_m);
        const double en = 2.0 * sc.sizes.n_s() - N, am = 2.0 * sc.sizes.m_s() - M;
        return {g * en * en, eta_e_of(M), g * am * am, zeta_e_of(N, lambda)};
    }

    inline double approximate_lambda(const Scenario &sc)
    {
        double lh = 0.0, lv = 0.0;
        approximate_lambda(sc.plan, sc.ris, sc.bob().aoa_rad, lh, lv);
        return std::max(lh, lv);
    }

    struct SizeOptimum
    {
        int value = 0;
        double continuous = 0.0; // unrounded stationary point (NaN when swept)
        OptimizationMethod method = OptimizationMethod::ClosedForm;
        double objective_bits = 0.0;
    };

    struct SweepPoint
    {
        int size = 0;
        double objective_bits = 0.0;
    };

    // Worst-case objective for an array of n entries with k selected: Bob rate gain * a^2 against the
    // Eve bound constant * a^2/(n^2 - a^2), a = 2k - n.
    inline double size_objective(int n, int k, double bob_gain, double eve_const)
    {
        const double a = 2.0 * k - n;
        const double rest = double(n) * n - a * a;
        const double eve = rest > 0.0 ? eve_const * a * a / rest : std::numeric_limits<double>::infinity();
        return std::log2(1.0 + bob_gain * a * a) - std::log2(1.0 + eve);
    }

    inline std::vector<SweepPoint> size_sweep(int n, double bob_gain, double eve_const)
    {
        std::vector<SweepPoint> out;
        for (int k = n / 2 + 1; k <= n; ++k)
            out.push_back({k, size_objective(n, k, bob_gain, eve_const)});
        return out;
    }

    inline SweepPoint sweep_argmax(const std::vector<SweepPoint> &pts)
    {
        if (pts.empty())
            throw std::invalid_argument("sweep_argmax: empty sweep.");
        SweepPoint best = pts.front();
        for (const auto &p : pts)
            if (p.objective_bits > best.objective_bits)
                best = p;
        return best;
    }

    // Stationary point of the size objective. The squared imbalance y = (2k - n)^2 solves
    // (1 - e) g y^2 - 2 g n^2 y + g n^4 - e n^2 = 0; the admissible root is written without
    // cancellation as y = (n^2 - e/g) / (1 + sqrt(e + (1 - e) e / (g n^2))).
    inline SizeOptimum optimal_size(int n, double bob_gain, double eve_const)
    {
        if (n < 2)
            throw std::invalid_argument("optimal_size: array size must be >= 2.");
        const int lo = n / 2 + 1;
        SizeOptimum out;
        auto fallback = [&]
        {
            const SweepPoint best = sweep_argmax(size_sweep(n, bob_gain, eve_const));
            out.value = best.size;
            out.continuous = std::numeric_limits<double>::quiet_NaN();
            out.method = OptimizationMethod::Sweep;
            out.objective_bits = best.objective_bits;
            return out;
        };
        if (lo == n)
            return fallback();
        const double nn = double(n) * n;
        const double disc = eve_const + (1.0 - eve_const) * eve_const / (bob_gain * nn);
        if (!(disc >= 0.0) || !(bob_gain > 0.0))
            return fallback();
        const double y = (nn - eve_const / bob_gain) / (1.0 + std::sqrt(disc));
        if (!(y > 0.0))
            return fallback();
        out.continuous = 0.5 * (n + std::sqrt(y));
        // Selecting every entry removes the randomization and the Eve bound diverges, so the
        // admissible integers stop at n - 1.
        const long k = std::min<long>(round_nearest(out.continuous), n - 1);
        if (k < lo)
            return fallback();
        out.value = int(k);
        out.method = OptimizationMethod::ClosedForm;
        out.objective_bits = size_objective(n, out.value, bob_gain, eve_const);
        return out;
    }

    // High-SNR limit: depends on n and the Eve bound constant only
    inline SizeOptimum optimal_size_simplified(int n, double eve_const)
    {
        if (n < 2)
            throw std::invalid_argument("optimal_size_simplified: array size must be >= 2.");
        SizeOptimum out;
        out.method = OptimizationMethod::Simplified;
        out.continuous = 0.5 * n * (1.0 + 1.0 / std::sqrt(1.0 + std::sqrt(eve_const)));
        const long k = round_nearest(out.continuous);
        out.value = int(std::clamp<long>(k, n / 2 + 1, std::max(n / 2 + 1, n - 1)));
        return out;
    }

    inline SizeOptimum optimal_m_s(const Scenario &sc)
    {
        sc.validate();
        const AuxiliaryCoefficients c = auxiliary_coefficients(sc, approximate_lambda(sc));
        return optimal_size(sc.m(), c.eta_b, c.eta_e);
    }

    inline SizeOptimum optimal_m_s_simplified(int m) { return optimal_size_simplified(m, eta_e_of(m)); }

    // Element subset size; lambda defaults to the closed-form approximation
    inline SizeOptimum optimal_n_s(const Scenario &sc, std::optional<double> lambda = std::nullopt)
    {
        sc.validate();
        const double lam = lambda ? *lambda : approximate_lambda(sc);
        const AuxiliaryCoefficients c = auxiliary_coefficients(sc, lam);
        return optimal_size(sc.n(), c.zeta_b, c.zeta_e);
    }

    inline SizeOptimum optimal_n_s_simplified(int n, double lambda) { return optimal_size_simplified(n, zeta_e_of(n, lambda)); }

    inline std::vector<SweepPoint> sweep_m_s(const Scenario &sc)
    {
        const AuxiliaryCoefficients c = auxiliary_coefficients(sc, approximate_lambda(sc));
        return size_sweep(sc.m(), c.eta_b, c.eta_e);
    }

    inline std::vector<SweepPoint> sweep_n_s(const Scenario &sc, std::optional<double> lambda = std::nullopt)
    {
        const double lam = lambda ? *lambda : approximate_lambda(sc);
        const AuxiliaryCoefficients c = auxiliary_coefficients(sc, lam);
        return size_sweep(sc.n(), c.zeta_b, c.zeta_e);
    }

    struct OptimizationResult
    {
        int m_s_star = 0;
        int n_s_star = 0;
        OptimizationMethod method_m = OptimizationMethod::ClosedForm;
        OptimizationMethod method_n = OptimizationMethod::ClosedForm;
        double objective_bits = 0.0; // joint worst case at the returned sizes
    };

    // Antenna size first (element imbalance from the scenario), then element size at the chosen antenna size
    inline OptimizationResult optimize_sizes(const Scenario &sc)
    {
        OptimizationResult r;
        const SizeOptimum ms = optimal_m_s(sc);
        Scenario next = sc;
        next.sizes = SelectionSizes(ms.value, sc.sizes.n_s());
        const SizeOptimum ns = optimal_n_s(next);
        next.sizes = SelectionSizes(ms.value, ns.value);
        r.m_s_star = ms.value;
        r.n_s_star = ns.value;
        r.method_m = ms.method;
        r.method_n = ns.method;
        r.objective_bits = worst_case_secrecy(next).rate_joint;
        return r;
    }

    struct DeltaFChoice
    {
        double delta_f_hz = 0.0;
        int multiple = 0; // null order i
        bool feasible = false;
    };

    // Smallest increment that puts the first range null of the array on Eve
    inline DeltaFChoice optimal_delta_f(const FdaPlan &plan, const PolarLocation &bob, const PolarLocation &eve)
    {
        const double gap = std::abs(eve.range_m - bob.range_m);
        if (!(gap > 0.0))
            throw std::domain_error("optimal_delta_f: Eve is equidistant from the RIS with Bob; no range null exists.");
        DeltaFChoice out;
        const int M = plan.m_antennas();
        if (M < 2)
            return out;
        out.multiple = 1;
        out.delta_f_hz = speed_of_light / (M * gap);
        out.feasible = FdaPlan::shift_is_feasible(plan.f0_hz(), out.delta_f_hz, M);
        return out;
    }

    inline double secrecy_upper_bound(const LinkBudget &b, double lg, double lh_bob, int m, int n)
    {
        return std::log2(1.0 + snr_bob_fda(b, lg, lh_bob, m, n));
    }

} // namespace fdaris

#endif
