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

#ifndef FDARIS_CONFIG_HPP
#define FDARIS_CONFIG_HPP

#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "csv.hpp"
#include "optimize.hpp"
#include "techniques.hpp"

namespace fdaris
{
    class ConfigError : public std::runtime_error
    {
    public:
        ConfigError(const std::string &source, int line, const std::string &field, const std::string &msg)
            : std::runtime_error(source + ":" + std::to_string(line) + ": '" + field + "': " + msg), line_(line), field_(field) {}

        int line() const { return line_; }
        const std::string &field() const { return field_; }

    private:
        int line_;
        std::string field_;
    };

    enum class EveMode
    {
        Point,
        RangeSweep,
        AngleSweep,
        Circle,
        Grid
    };

    inline std::string to_string(EveMode m)
    {
        switch (m)
        {
        case EveMode::Point:
            return "point";
        case EveMode::RangeSweep:
            return "range_sweep";
        case EveMode::AngleSweep:
            return "angle_sweep";
        case EveMode::Circle:
            return "circle";
        default:
            return "grid";
        }
    }

    // Only the keys belonging to `mode` are read and written.
    struct EveSpec
    {
        EveMode mode = EveMode::Point;
        double x_m = 0.0, y_m = 0.0;                         // point
        double range_min_m = 0.0, range_max_m = 0.0;         // range_sweep
        std::optional<double> aoa_rad;                       // range_sweep, defaults to Bob's bearing
        double aoa_min_rad = 0.0, aoa_max_rad = 0.0;         // angle_sweep
        std::optional<double> range_m;                       // angle_sweep, defaults to Bob's range
        double radius_m = 0.0, phi_min_rad = 0.0, phi_max_rad = 0.0; // circle around Bob
        int points = 0;                                      // sweeps and circle
        double x_min_m = 0.0, x_max_m = 0.0, y_min_m = 0.0, y_max_m = 0.0; // grid
        int nx = 0, ny = 0;

        bool operator==(const EveSpec &) const = default;
    };

    struct ScenarioConfig
    {
        double ris_x_m = 30.0, ris_y_m = 30.0;
        double bob_x_m = 100.0, bob_y_m = -20.0;
        double f0_hz = 60e9;
        double delta_f_hz = 1e6;
        int m_antennas = 21;
        int n_h = 21, n_v = 21;
        double power_dbm = 30.0;
        double noise_bob_dbm = -120.0;
        double noise_eve_dbm = -120.0;
        double l0_db = 60.0;
        double alpha = 2.0;
        std::optional<int> m_s = 14;  // nullopt: optimized
        std::optional<int> n_s = 441; // nullopt: optimized
        EveSpec eve;
        Technique technique = Technique::FdaRibes;
        std::uint64_t seed = 1;
        CombineRule combine = CombineRule::Conjunction;
        std::uint64_t samples = 100000;

        bool operator==(const ScenarioConfig &) const = default;

        static ScenarioConfig paper_baseline()
        {
            ScenarioConfig c;
            c.eve.mode = EveMode::RangeSweep;
            c.eve.range_min_m = 1.0;
            c.eve.range_max_m = 200.0;
            c.eve.points = 200;
            return c;
        }

        // Builds the runtime scenario; optimized sizes are resolved antenna side first
        Scenario to_scenario() const
        {
            Scenario s;
            s.placement = Placement({ris_x_m, ris_y_m}, {bob_x_m, bob_y_m});
            s.plan = FdaPlan(f0_hz, delta_f_hz, m_antennas);
            s.ris = RisGeometry::from_plan(s.plan, n_h, n_v);
            s.pathloss = PathLossModel(l0_db, alpha);
            s.budget = LinkBudget::from_dbm(power_dbm, noise_bob_dbm, noise_eve_dbm);
            s.combine = combine;
            const int M = s.m(), N = s.n();
            s.sizes = SelectionSizes(m_s.value_or(M), n_s.value_or(N));
            if (!m_s)
                s.sizes = SelectionSizes(optimal_m_s(s).value, s.sizes.n_s());
            if (!n_s)
                s.sizes = SelectionSizes(s.sizes.m_s(), optimal_n_s(s).value);
            s.validate();
            return s;
        }
    };

    namespace detail
    {
        struct RawEntry
        {
            std::string value;
            int line = 0;
            bool used = false;
        };

        struct RawSection
        {
            int line = 0;
            std::map<std::string, RawEntry> keys;
        };

        inline std::string trim(const std::string &s)
        {
            const auto b = s.find_first_not_of(" \t\r");
            if (b == std::string::npos)
                return "";
            const auto e = s.find_last_not_of(" \t\r");
            return s.substr(b, e - b + 1);
        }

        inline std::string strip_comment(const std::string &s)
        {
            for (std::size_t i = 0; i < s.size(); ++i)
                if ((s[i] == '#' || s[i] == ';') && (i == 0 || s[i - 1] == ' ' || s[i - 1] == '\t'))
                    return s.substr(0, i);
            return s;
        }

        class ConfigReader
        {
        public:
            ConfigReader(const std::string &text, std::string source) : source_(std::move(source))
            {
                std::istringstream in(text);
                std::string raw, section;
                int lineno = 0;
                while (std::getline(in, raw))
                {
                    ++lineno;
                    const std::string line = trim(strip_comment(raw));
                    if (line.empty())
                        continue;
                    if (line.front() == '[')
                    {
                        if (line.back() != ']' || line.size() < 3)
                            throw ConfigError(source_, lineno, line, "malformed section header.");
                        section = trim(line.substr(1, line.size() - 2));
                        if (!known_section(section))
                            throw ConfigError(source_, lineno, section, "unknown section.");
                        if (sections_.count(section))
                            throw ConfigError(source_, lineno, section, "duplicate section.");
                        sections_[section].line = lineno;
                        continue;
                    }
                    const auto eq = line.find('=');
                    if (eq == std::string::npos)
                        throw ConfigError(source_, lineno, line, "expected 'key = value'.");
                    const std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
                    if (section.empty())
                        throw ConfigError(source_, lineno, key, "key outside of any section.");
                    if (key.empty() || value.empty())
                        throw ConfigError(source_, lineno, section + "." + key, "empty key or value.");
                    auto &keys = sections_[section].keys;
                    if (keys.count(key))
                        throw ConfigError(source_, lineno, section + "." + key, "duplicate key.");
                    keys[key] = RawEntry{value, lineno, false};
                }
            }

            bool has(const std::string &sec, const std::string &key) const
            {
                auto s = sections_.find(sec);
                return s != sections_.end() && s->second.keys.count(key);
            }

            int line_of(const std::string &sec, const std::string &key) const
            {
                auto s = sections_.find(sec);
                if (s == sections_.end())
                    return 0;
                auto k = s->second.keys.find(key);
                return k == s->second.keys.end() ? s->second.line : k->second.line;
            }

            [[noreturn]] void fail(const std::string &sec, const std::string &key, const std::string &msg) const
            {
                throw ConfigError(source_, line_of(sec, key), sec + "." + key, msg);
            }

            const std::string &text(const std::string &sec, const std::string &key)
            {
                auto s = sections_.find(sec);
                if (s == sections_.end() || !s->second.keys.count(key))
                    fail(sec, key, "required key is missing.");
                RawEntry &e = s->second.keys[key];
                e.used = true;
                return e.value;
            }

            double number(const std::string &sec, const std::string &key)
            {
                const std::string &v = text(sec, key);
                double out = 0.0;
                auto res = std::from_chars(v.data(), v.data() + v.size(), out);
                if (res.ec != std::errc() || res.ptr != v.data() + v.size() || !std::isfinite(out))
                    fail(sec, key, "expected a finite number, got '" + v + "'.");
                return out;
            }

            std::int64_t integer(const std::string &sec, const std::string &key)
            {
                const std::string &v = text(sec, key);
                std::int64_t out = 0;
                auto res = std::from_chars(v.data(), v.data() + v.size(), out);
                if (res.ec != std::errc() || res.ptr != v.data() + v.size())
                    fail(sec, key, "expected an integer, got '" + v + "'.");
                return out;
            }

            int count(const std::string &sec, const std::string &key, int min_value)
            {
                const std::int64_t v = integer(sec, key);
                if (v < min_value || v > 100000000)
                    fail(sec, key, "must be an integer >= " + std::to_string(min_value) + ".");
                return int(v);
            }

            std::uint64_t unsigned_integer(const std::string &sec, const std::string &key)
            {
                const std::string &v = text(sec, key);
                std::uint64_t out = 0;
                auto res = std::from_chars(v.data(), v.data() + v.size(), out);
                if (res.ec != std::errc() || res.ptr != v.data() + v.size())
                    fail(sec, key, "expected a non-negative integer, got '" + v + "'.");
                return out;
            }

            void check_all_used() const
            {
                for (const auto &[name, sec] : sections_)
                {
                    if (!known_section(name))
                        throw ConfigError(source_, sec.line, name, "unknown section.");
                    for (const auto &[key, e] : sec.keys)
                        if (!e.used)
                            throw ConfigError(source_, e.line, name + "." + key, "unknown or unused key.");
                }
            }

        private:
            static bool known_section(const std::string &s)
            {
                for (const char *k : {"placement", "plan", "ris", "budget", "pathloss", "selection", "eve", "run"})
                    if (s == k)
                        return true;
                return false;
            }

            std::string source_;
            std::map<std::string, RawSection> sections_;
        };
    } // namespace detail

    inline ScenarioConfig parse_config(const std::string &text, const std::string &source = "<config>")
    {
        detail::ConfigReader r(text, source);
        ScenarioConfig c;

        c.ris_x_m = r.number("placement", "ris_x_m");
        c.ris_y_m = r.number("placement", "ris_y_m");
        c.bob_x_m = r.number("placement", "bob_x_m");
        c.bob_y_m = r.number("placement", "bob_y_m");
        if (c.ris_x_m == 0.0 && c.ris_y_m == 0.0)
            r.fail("placement", "ris_x_m", "RIS must not coincide with the base station at the origin.");
        if (c.ris_x_m == c.bob_x_m && c.ris_y_m == c.bob_y_m)
            r.fail("placement", "bob_x_m", "Bob must not coincide with the RIS.");

        c.f0_hz = r.number("plan", "f0_hz");
        if (!(c.f0_hz > 0.0))
            r.fail("plan", "f0_hz", "must be > 0.");
        c.m_antennas = r.count("plan", "m_antennas", 1);
        c.delta_f_hz = r.number("plan", "delta_f_hz");
        if (!(c.delta_f_hz >= 0.0))
            r.fail("plan", "delta_f_hz", "must be >= 0.");
        if (!FdaPlan::shift_is_feasible(c.f0_hz, c.delta_f_hz, c.m_antennas))
            r.fail("plan", "delta_f_hz", "violates the maximum frequency shift (M-1)/2*delta_f <= 1e-3*f0.");

        c.n_h = r.count("ris", "n_h", 1);
        c.n_v = r.count("ris", "n_v", 1);

        c.power_dbm = r.number("budget", "power_dbm");
        c.noise_bob_dbm = r.number("budget", "noise_bob_dbm");
        c.noise_eve_dbm = r.number("budget", "noise_eve_dbm");

        c.l0_db = r.number("pathloss", "l0_db");
        if (!(c.l0_db >= 0.0))
            r.fail("pathloss", "l0_db", "must be >= 0.");
        c.alpha = r.number("pathloss", "alpha");
        if (!(c.alpha > 0.0))
            r.fail("pathloss", "alpha", "must be > 0.");

        auto size = [&](const std::string &key, int total) -> std::optional<int>
        {
            if (r.text("selection", key) == "auto")
                return std::nullopt;
            const std::int64_t v = r.integer("selection", key);
            if (v > total || 2 * v <= total)
                r.fail("selection", key, "must satisfy " + std::to_string(total) + "/2 < value <= " + std::to_string(total) + " (or be 'auto').");
            return int(v);
        };
        c.m_s = size("m_s", c.m_antennas);
        c.n_s = size("n_s", c.n_h * c.n_v);

        const std::string mode = r.text("eve", "mode");
        EveSpec &e = c.eve;
        if (mode == "point")
        {
            e.mode = EveMode::Point;
            e.x_m = r.number("eve", "x_m");
            e.y_m = r.number("eve", "y_m");
            if (e.x_m == c.ris_x_m && e.y_m == c.ris_y_m)
                r.fail("eve", "x_m", "Eve must not coincide with the RIS.");
        }
        else if (mode == "range_sweep")
        {
            e.mode = EveMode::RangeSweep;
            e.range_min_m = r.number("eve", "range_min_m");
            e.range_max_m = r.number("eve", "range_max_m");
            e.points = r.count("eve", "points", 1);
            if (r.has("eve", "aoa_rad"))
                e.aoa_rad = r.number("eve", "aoa_rad");
            if (!(e.range_min_m > 0.0))
                r.fail("eve", "range_min_m", "must be > 0.");
            if (!(e.range_max_m >= e.range_min_m))
                r.fail("eve", "range_max_m", "empty sweep range (must be >= range_min_m).");
        }
        else if (mode == "angle_sweep")
        {
            e.mode = EveMode::AngleSweep;
            e.aoa_min_rad = r.number("eve", "aoa_min_rad");
            e.aoa_max_rad = r.number("eve", "aoa_max_rad");
            e.points = r.count("eve", "points", 1);
            if (r.has("eve", "range_m"))
            {
                e.range_m = r.number("eve", "range_m");
                if (!(*e.range_m > 0.0))
                    r.fail("eve", "range_m", "must be > 0.");
            }
            if (!(e.aoa_max_rad >= e.aoa_min_rad))
                r.fail("eve", "aoa_max_rad", "empty sweep range (must be >= aoa_min_rad).");
        }
        else if (mode == "circle")
        {
            e.mode = EveMode::Circle;
            e.radius_m = r.number("eve", "radius_m");
            e.phi_min_rad = r.number("eve", "phi_min_rad");
            e.phi_max_rad = r.number("eve", "phi_max_rad");
            e.points = r.count("eve", "points", 1);
            if (!(e.radius_m > 0.0))
                r.fail("eve", "radius_m", "must be > 0.");
            if (!(e.phi_max_rad >= e.phi_min_rad))
                r.fail("eve", "phi_max_rad", "empty sweep range (must be >= phi_min_rad).");
        }
        else if (mode == "grid")
        {
            e.mode = EveMode::Grid;
            e.x_min_m = r.number("eve", "x_min_m");
            e.x_max_m = r.number("eve", "x_max_m");
            e.y_min_m = r.number("eve", "y_min_m");
            e.y_max_m = r.number("eve", "y_max_m");
            e.nx = r.count("eve", "nx", 1);
            e.ny = r.count("eve", "ny", 1);
            if (!(e.x_max_m >= e.x_min_m))
                r.fail("eve", "x_max_m", "empty grid (must be >= x_min_m).");
            if (!(e.y_max_m >= e.y_min_m))
                r.fail("eve", "y_max_m", "empty grid (must be >= y_min_m).");
        }
        else
            r.fail("eve", "mode", "must be one of point, range_sweep, angle_sweep, circle, grid; got '" + mode + "'.");

        try
        {
            c.technique = parse_technique(r.text("run", "technique"));
        }
        catch (const std::invalid_argument &ex)
        {
            r.fail("run", "technique", ex.what());
        }
        c.seed = r.unsigned_integer("run", "seed");
        try
        {
            c.combine = parse_combine_rule(r.text("run", "combine"));
        }
        catch (const std::invalid_argument &ex)
        {
            r.fail("run", "combine", ex.what());
        }
        c.samples = r.unsigned_integer("run", "samples");

        r.check_all_used();

        // Remaining cross-field invariants are checked by the runtime types
        try
        {
            (void)c.to_scenario();
        }
        catch (const std::exception &ex)
        {
            throw ConfigError(source, 0, "scenario", ex.what());
        }
        return c;
    }

    inline ScenarioConfig load_config(const std::string &path)
    {
        std::ifstream in(path);
        if (!in)
            throw ConfigError(path, 0, "config", "cannot open file.");
        std::stringstream ss;
        ss << in.rdbuf();
        return parse_config(ss.str(), path);
    }

    inline std::string serialize_config(const ScenarioConfig &c)
    {
        std::ostringstream o;
        auto kv = [&](const char *k, const std::string &v) { o << k << " = " << v << '\n'; };
        auto num = [&](const char *k, double v) { kv(k, format_number(v)); };
        auto cnt = [&](const char *k, std::int64_t v) { kv(k, std::to_string(v)); };

        o << "[placement]\n";
        num("ris_x_m", c.ris_x_m);
        num("ris_y_m", c.ris_y_m);
        num("bob_x_m", c.bob_x_m);
        num("bob_y_m", c.bob_y_m);
        o << "\n[plan]\n";
        num("f0_hz", c.f0_hz);
        num("delta_f_hz", c.delta_f_hz);
        cnt("m_antennas", c.m_antennas);
        o << "\n[ris]\n";
        cnt("n_h", c.n_h);
        cnt("n_v", c.n_v);
        o << "\n[budget]\n";
        num("power_dbm", c.power_dbm);
        num("noise_bob_dbm", c.noise_bob_dbm);
        num("noise_eve_dbm", c.noise_eve_dbm);
        o << "\n[pathloss]\n";
        num("l0_db", c.l0_db);
        num("alpha", c.alpha);
        o << "\n[selection]\n";
        kv("m_s", c.m_s ? std::to_string(*c.m_s) : "auto");
        kv("n_s", c.n_s ? std::to_string(*c.n_s) : "auto");
        o << "\n[eve]\n";
        const EveSpec &e = c.eve;
        kv("mode", to_string(e.mode));
        switch (e.mode)
        {
        case EveMode::Point:
            num("x_m", e.x_m);
            num("y_m", e.y_m);
            break;
        case EveMode::RangeSweep:
            num("range_min_m", e.range_min_m);
            num("range_max_m", e.range_max_m);
            cnt("points", e.points);
            if (e.aoa_rad)
                num("aoa_rad", *e.aoa_rad);
            break;
        case EveMode::AngleSweep:
            num("aoa_min_rad", e.aoa_min_rad);
            num("aoa_max_rad", e.aoa_max_rad);
            cnt("points", e.points);
            if (e.range_m)
                num("range_m", *e.range_m);
            break;
        case EveMode::Circle:
            num("radius_m", e.radius_m);
            num("phi_min_rad", e.phi_min_rad);
            num("phi_max_rad", e.phi_max_rad);
            cnt("points", e.points);
            break;
        case EveMode::Grid:
            num("x_min_m", e.x_min_m);
            num("x_max_m", e.x_max_m);
            num("y_min_m", e.y_min_m);
            num("y_max_m", e.y_max_m);
            cnt("nx", e.nx);
            cnt("ny", e.ny);
            break;
        }
        o << "\n[run]\n";
        kv("technique", to_string(c.technique));
        kv("seed", std::to_string(c.seed));
        kv("combine", to_string(c.combine));
        kv("samples", std::to_string(c.samples));
        return o.str();
    }

} // namespace fdaris

#endif
