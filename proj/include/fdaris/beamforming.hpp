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

#ifndef FDARIS_BEAMFORMING_HPP
#define FDARIS_BEAMFORMING_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "channel.hpp"

namespace fdaris
{
    // Sizes of the per-symbol "normal" subsets. Both must exceed half of the array.
    class SelectionSizes
    {
    public:
        SelectionSizes() = default;
        SelectionSizes(int m_s, int n_s) : m_s_(m_s), n_s_(n_s) {}

        int m_s() const { return m_s_; }
        int n_s() const { return n_s_; }

        static SelectionSizes full(int m, int n) { return {m, n}; }

        void validate(int m, int n) const
        {
            if (m_s_ > m || 2 * m_s_ <= m)
                throw std::invalid_argument("SelectionSizes: 'm_s' = " + std::to_string(m_s_) + " must satisfy M/2 < m_s <= M with M = " + std::to_string(m) + ".");
            if (n_s_ > n || 2 * n_s_ <= n)
                throw std::invalid_argument("SelectionSizes: 'n_s' = " + std::to_string(n_s_) + " must satisfy N/2 < n_s <= N with N = " + std::to_string(n) + ".");
        }

    private:
        int m_s_ = 1;
        int n_s_ = 1;
    };

    // One symbol's random selection. Index vectors are 0-based and sorted.
    struct SelectionMask
    {
        std::vector<int> antenna_subset;
        std::vector<int> antenna_excluded;
        std::vector<int> element_subset;
        std::vector<int> element_excluded;
        std::uint64_t symbol_index = 0;

        int m() const { return int(antenna_subset.size() + antenna_excluded.size()); }
        int n() const { return int(element_subset.size() + element_excluded.size()); }

        // +1 on the selected antennas, -1 elsewhere
        Eigen::VectorXd antenna_signs() const
        {
            Eigen::VectorXd a = Eigen::VectorXd::Ones(m());
            for (int i : antenna_excluded)
                a(i) = -1.0;
            return a;
        }
    };

    inline std::uint64_t splitmix64(std::uint64_t x)
    {
        x += 0x9E3779B97F4A7C15ULL;
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
        return x ^ (x >> 31);
    }

    // Seed of an independent stream identified by (master seed, stream id)
    inline std::uint64_t stream_seed(std::uint64_t master, std::uint64_t stream)
    {
        return splitmix64(splitmix64(master) ^ splitmix64(stream + 0x632BE59BD9B4E019ULL));
    }

    namespace detail
    {
        // Partial Fisher-Yates on a persistent permutation; the first k entries become the drawn set.
        inline void partial_shuffle(std::vector<int> &perm, int k, std::mt19937_64 &rng)
        {
            const int n = int(perm.size());
            for (int i = 0; i < k; ++i)
            {
                std::uniform_int_distribution<int> pick(i, n - 1);
                std::swap(perm[i], perm[pick(rng)]);
            }
        }

        // Draws a uniform k-subset of {0..n-1}; the smaller of the subset and its complement is sampled.
        inline void draw_split(std::vector<int> &perm, int k, std::mt19937_64 &rng, std::vector<int> &chosen, std::vector<int> &rest)
        {
            const int n = int(perm.size());
            const bool direct = k <= n - k;
            const int r = direct ? k : n - k;
            partial_shuffle(perm, r, rng);
            std::vector<int> &head = direct ? chosen : rest;
            std::vector<int> &tail = direct ? rest : chosen;
            head.assign(perm.begin(), perm.begin() + r);
            tail.assign(perm.begin() + r, perm.end());
            std::sort(head.begin(), head.end());
            std::sort(tail.begin(), tail.end());
        }
    } // namespace detail

    class MaskSampler
    {
    public:
        MaskSampler(std::uint64_t seed, int m, int n, SelectionSizes sizes)
            : rng_(seed), sizes_(sizes), perm_m_(m), perm_n_(n)
        {
            sizes.validate(m, n);
            std::iota(perm_m_.begin(), perm_m_.end(), 0);
            std::iota(perm_n_.begin(), perm_n_.end(), 0);
        }

        SelectionMask draw()
        {
            SelectionMask mask;
            detail::draw_split(perm_m_, sizes_.m_s(), rng_, mask.antenna_subset, mask.antenna_excluded);
            detail::draw_split(perm_n_, sizes_.n_s(), rng_, mask.element_subset, mask.element_excluded);
            mask.symbol_index = next_symbol_++;
            return mask;
        }

    private:
        std::mt19937_64 rng_;
        SelectionSizes sizes_;
        std::vector<int> perm_m_, perm_n_;
        std::uint64_t next_symbol_ = 0;
    };

    inline SelectionMask draw_mask(std::mt19937_64 &rng, SelectionSizes sizes, int m, int n)
    {
        sizes.validate(m, n);
        std::vector<int> pm(m), pn(n);
        std::iota(pm.begin(), pm.end(), 0);
        std::iota(pn.begin(), pn.end(), 0);
        SelectionMask mask;
        detail::draw_split(pm, sizes.m_s(), rng, mask.antenna_subset, mask.antenna_excluded);
        detail::draw_split(pn, sizes.n_s(), rng, mask.element_subset, mask.element_excluded);
        return mask;
    }

    // Phases that co-phase every element towards Bob at the carrier, in [0, 2pi)
    inline Eigen::VectorXd ris_phases_closed_form(const FdaPlan &plan, const RisGeometry &geom, const BsRisLink &link,
                                                  const PolarLocation &bob)
    {
        Eigen::VectorXd phi(geom.size());
        for (int n = 1; n <= geom.size(); ++n)
            phi(n - 1) = two_pi * wrap_cycles(plan.f0_hz() * element_aux_delay(geom, link, bob, n));
        return phi;
    }

    inline Eigen::VectorXd ris_phases_ribes(const Eigen::VectorXd &base, const SelectionMask &mask)
    {
        if (mask.n() != base.size())
            throw std::invalid_argument("ris_phases_ribes: mask size does not match the phase vector.");
        Eigen::VectorXd phi = base;
        for (int i : mask.element_excluded)
        {
            phi(i) += pi;
            if (phi(i) >= two_pi)
                phi(i) -= two_pi;
        }
        return phi;
    }

    struct BeamformerVector
    {
        Eigen::VectorXcd weights;
        double norm() const { return weights.norm(); }
    };

    inline BeamformerVector mrt_beamformer(const Eigen::VectorXcd &h)
    {
        const double nrm = h.norm();
        if (!(nrm > 0.0) || !std::isfinite(nrm))
            throw std::domain_error("mrt_beamformer: degenerate (zero) channel.");
        return {h / nrm};
    }

    inline BeamformerVector mrt_beamformer(const CascadedChannel &h) { return mrt_beamformer(h.entries); }

    inline BeamformerVector ribes_beamformer(const Eigen::VectorXcd &h_star, const SelectionMask &mask)
    {
        if (mask.m() != h_star.size())
            throw std::invalid_argument("ribes_beamformer: mask size does not match the channel length.");
        BeamformerVector w = mrt_beamformer(h_star);
        for (int i : mask.antenna_excluded)
            w.weights(i) = -w.weights(i);
        return w;
    }

    inline BeamformerVector ribes_beamformer(const CascadedChannel &h_star, const SelectionMask &mask)
    {
        return ribes_beamformer(h_star.entries, mask);
    }

    // sqrt(P) h^H w x + noise
    inline cdouble received_sample(const Eigen::VectorXcd &h, const BeamformerVector &w, double power_w, cdouble symbol, cdouble noise)
    {
        if (h.size() != w.weights.size())
            throw std::invalid_argument("received_sample: channel and beamformer lengths differ.");
        return std::sqrt(power_w) * h.dot(w.weights) * symbol + noise;
    }

    inline cdouble received_sample(const CascadedChannel &h, const BeamformerVector &w, double power_w, cdouble symbol, cdouble noise)
    {
        return received_sample(h.entries, w, power_w, symbol, noise);
    }

} // namespace fdaris

#endif
