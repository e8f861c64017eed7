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

#ifndef FDARIS_CHANNEL_HPP
#define FDARIS_CHANNEL_HPP

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

#include "geometry.hpp"
#include "units.hpp"

namespace fdaris
{
    using cdouble = std::complex<double>;

    // Per-antenna carrier plan of the frequency diverse array. Antenna m (1-based) radiates at
    // f0 + (m - (M+1)/2) * delta_f.
    class FdaPlan
    {
    public:
        // Largest allowed frequency shift relative to the carrier
        static constexpr double max_relative_shift = 1e-3;

        FdaPlan() = default;
        FdaPlan(double f0_hz, double delta_f_hz, int m_antennas) : f0_(f0_hz), df_(delta_f_hz), m_(m_antennas)
        {
            if (!(f0_hz > 0.0) || !std::isfinite(f0_hz))
                throw std::invalid_argument("FdaPlan: 'f0_hz' must be finite and > 0.");
            if (!(delta_f_hz >= 0.0) || !std::isfinite(delta_f_hz))
                throw std::invalid_argument("FdaPlan: 'delta_f_hz' must be finite and >= 0.");
            if (m_antennas < 1)
                throw std::invalid_argument("FdaPlan: 'm_antennas' must be >= 1.");
            if (!shift_is_feasible(f0_hz, delta_f_hz, m_antennas))
                throw std::invalid_argument("FdaPlan: 'delta_f_hz' violates the maximum frequency shift (M-1)/2*delta_f <= 1e-3*f0.");
        }

        static bool shift_is_feasible(double f0_hz, double delta_f_hz, int m_antennas)
        {
            return 0.5 * (m_antennas - 1) * delta_f_hz <= max_relative_shift * f0_hz * (1.0 + 1e-12);
        }

        double f0_hz() const { return f0_; }
        double delta_f_hz() const { return df_; }
        int m_antennas() const { return m_; }
        double wavelength_m() const { return speed_of_light / f0_; }

        // Centred antenna index m - (M+1)/2
        double centred_index(int m) const
        {
            check_index(m);
            return m - 0.5 * (m_ + 1);
        }
        double offset_hz(int m) const { return centred_index(m) * df_; }
        double frequency_hz(int m) const { return f0_ + offset_hz(m); }

        FdaPlan with_delta_f(double delta_f_hz) const { return FdaPlan(f0_, delta_f_hz, m_); }

    private:
        void check_index(int m) const
        {
            if (m < 1 || m > m_)
                throw std::out_of_range("FdaPlan: antenna index " + std::to_string(m) + " outside 1.." + std::to_string(m_) + ".");
        }

        double f0_ = 60e9;
        double df_ = 1e6;
        int m_ = 21;
    };

    inline double antenna_frequency(const FdaPlan &plan, int m) { return plan.frequency_hz(m); }

    struct ElementIndex
    {
        int h = 1; // column, 1..N_H
        int v = 1; // row, 1..N_V
    };

    class RisGeometry
    {
    public:
        RisGeometry() = default;
        RisGeometry(int n_h, int n_v, double d_h_m, double d_v_m, double d_bs_m)
            : n_h_(n_h), n_v_(n_v), d_h_(d_h_m), d_v_(d_v_m), d_bs_(d_bs_m)
        {
            if (n_h < 1 || n_v < 1)
                throw std::invalid_argument("RisGeometry: 'n_h' and 'n_v' must be >= 1.");
            if (!(d_h_m > 0.0) || !(d_v_m > 0.0) || !(d_bs_m > 0.0))
                throw std::invalid_argument("RisGeometry: element and antenna spacings must be > 0.");
        }

        // Half-wavelength spacing at the carrier for the RIS and the BS array
        static RisGeometry from_plan(const FdaPlan &plan, int n_h, int n_v)
        {
            const double d = 0.5 * plan.wavelength_m();
            return RisGeometry(n_h, n_v, d, d, d);
        }

        int n_h() const { return n_h_; }
        int n_v() const { return n_v_; }
        int size() const { return n_h_ * n_v_; }
        double d_h_m() const { return d_h_; }
        double d_v_m() const { return d_v_; }
        double d_bs_m() const { return d_bs_; }

        // Row-major split of the 1-based element index n into (column, row), both 1-based
        ElementIndex split(int n) const
        {
            if (n < 1 || n > size())
                throw std::out_of_range("RisGeometry: element index " + std::to_string(n) + " outside 1.." + std::to_string(size()) + ".");
            return {(n - 1) % n_h_ + 1, (n - 1) / n_h_ + 1};
        }

        double centred_h(int n) const { return split(n).h - 0.5 * (n_h_ + 1); }
        double centred_v(int n) const { return split(n).v - 0.5 * (n_v_ + 1); }

    private:
        int n_h_ = 21, n_v_ = 21;
        double d_h_ = 0.0025, d_v_ = 0.0025, d_bs_ = 0.0025;
    };

    inline double delay_bs_ris(const FdaPlan &plan, const RisGeometry &geom, const BsRisLink &link, int m, int n)
    {
        if (!(link.r1_m > 0.0))
            throw std::domain_error("delay_bs_ris: BS-RIS distance must be > 0.");
        const double s = std::sin(link.theta_tx_rad), c = std::cos(link.theta_tx_rad);
        return (link.r1_m - plan.centred_index(m) * geom.d_bs_m() * s + geom.centred_v(n) * geom.d_v_m() * s +
                geom.centred_h(n) * geom.d_h_m() * c) /
               speed_of_light;
    }

    inline double delay_ris_user(const RisGeometry &geom, const PolarLocation &loc, int n)
    {
        return (loc.range_m + geom.centred_v(n) * geom.d_v_m() * std::sin(loc.aoa_rad) -
                geom.centred_h(n) * geom.d_h_m() * std::cos(loc.aoa_rad)) /
               speed_of_light;
    }

    // Antenna part of the BS-RIS delay beyond R1/c
    inline double antenna_aux_delay(const FdaPlan &plan, const RisGeometry &geom, const BsRisLink &link, int m)
    {
        return -plan.centred_index(m) * geom.d_bs_m() * std::sin(link.theta_tx_rad) / speed_of_light;
    }

    // Element part of the BS-RIS-user delay beyond (R1 + R)/c
    inline double element_aux_delay(const RisGeometry &geom, const BsRisLink &link, const PolarLocation &loc, int n)
    {
        return (geom.centred_v(n) * geom.d_v_m() * (std::sin(link.theta_tx_rad) + std::sin(loc.aoa_rad)) +
                geom.centred_h(n) * geom.d_h_m() * (std::cos(link.theta_tx_rad) - std::cos(loc.aoa_rad))) /
               speed_of_light;
    }

    // exp(-j 2 pi (f0 + df) tau). Carrier and offset cycles are reduced separately so that the
    // exponent stays within one turn.
    inline cdouble propagation_phasor(double f0_hz, double df_hz, double tau_s)
    {
        const double cycles = wrap_cycles(wrap_cycles(f0_hz * tau_s) + wrap_cycles(df_hz * tau_s));
        return std::polar(1.0, -two_pi * cycles);
    }

    enum class Segment
    {
        BsRis,
        RisUser
    };

    struct ChannelMatrix
    {
        Eigen::MatrixXcd entries; // M x N
        Segment segment = Segment::BsRis;
        double amplitude = 0.0; // sqrt of the segment path loss
    };

    struct ChannelPair
    {
        ChannelMatrix g;
        ChannelMatrix h;
    };

    inline ChannelPair synthesize_channels(const FdaPlan &plan, const RisGeometry &geom, const PathLossModel &pathloss,
                                           const Placement &placement, const PolarLocation &user)
    {
        const BsRisLink link = bs_ris_link(placement);
        const int M = plan.m_antennas(), N = geom.size();
        ChannelPair out;
        out.g.segment = Segment::BsRis;
        out.g.amplitude = std::sqrt(path_loss_linear(pathloss, link.r1_m));
        out.h.segment = Segment::RisUser;
        out.h.amplitude = std::sqrt(path_loss_linear(pathloss, user.range_m));
        out.g.entries.resize(M, N);
        out.h.entries.resize(M, N);

        Eigen::VectorXd tau_user(N);
        for (int n = 1; n <= N; ++n)
            tau_user(n - 1) = delay_ris_user(geom, user, n);

        for (int m = 1; m <= M; ++m)
        {
            const double df = plan.offset_hz(m);
            for (int n = 1; n <= N; ++n)
            {
                out.g.entries(m - 1, n - 1) = out.g.amplitude * propagation_phasor(plan.f0_hz(), df, delay_bs_ris(plan, geom, link, m, n));
                out.h.entries(m - 1, n - 1) = out.h.amplitude * propagation_phasor(plan.f0_hz(), df, tau_user(n - 1));
            }
        }
        return out;
    }

    struct CascadedChannel
    {
        Eigen::VectorXcd entries;        // M
        Eigen::VectorXd antenna_aux_s;   // M, filled by the factored construction only
        Eigen::VectorXd element_aux_s;   // N, filled by the factored construction only
    };

    inline Eigen::VectorXcd ris_phasors(const Eigen::VectorXd &phases)
    {
        Eigen::VectorXcd v(phases.size());
        for (Eigen::Index n = 0; n < phases.size(); ++n)
            v(n) = std::polar(1.0, phases(n));
        return v;
    }

    inline CascadedChannel cascaded_channel(const ChannelMatrix &g, const ChannelMatrix &h, const Eigen::VectorXd &ris_phases)
    {
        if (g.entries.rows() != h.entries.rows() || g.entries.cols() != h.entries.cols())
            throw std::invalid_argument("cascaded_channel: G and H dimensions differ.");
        if (g.entries.cols() != ris_phases.size())
            throw std::invalid_argument("cascaded_channel: phase vector length does not match the number of RIS elements.");
        CascadedChannel out;
        out.entries = g.entries.cwiseProduct(h.entries) * ris_phasors(ris_phases);
        return out;
    }

    // Same channel built from the delay decomposition: a common term per antenna times an
    // element sum driven by the auxiliary delays.
    inline CascadedChannel cascaded_channel_factored(const FdaPlan &plan, const RisGeometry &geom, const PathLossModel &pathloss,
                                                     const Placement &placement, const PolarLocation &user,
                                                     const Eigen::VectorXd &ris_phases)
    {
        const BsRisLink link = bs_ris_link(placement);
        const int M = plan.m_antennas(), N = geom.size();
        if (ris_phases.size() != N)
            throw std::invalid_argument("cascaded_channel_factored: phase vector length does not match the number of RIS elements.");

        const double amp = std::sqrt(path_loss_linear(pathloss, link.r1_m) * path_loss_linear(pathloss, user.range_m));
        const double common = (link.r1_m + user.range_m) / speed_of_light;

        CascadedChannel out;
        out.entries.resize(M);
        out.antenna_aux_s.resize(M);
        out.element_aux_s.resize(N);
        for (int n = 1; n <= N; ++n)
            out.element_aux_s(n - 1) = element_aux_delay(geom, link, user, n);

        for (int m = 1; m <= M; ++m)
        {
            const double df = plan.offset_hz(m);
            const double aux = antenna_aux_delay(plan, geom, link, m);
            out.antenna_aux_s(m - 1) = aux;
            cdouble sum = 0.0;
            for (int n = 0; n < N; ++n)
                sum += propagation_phasor(plan.f0_hz(), df, out.element_aux_s(n)) * std::polar(1.0, ris_phases(n));
            out.entries(m - 1) = amp * propagation_phasor(plan.f0_hz(), df, common) * propagation_phasor(plan.f0_hz(), df, aux) * sum;
        }
        return out;
    }

} // namespace fdaris

#endif
