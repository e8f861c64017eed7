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

#include <fstream>
#include <locale>
#include <sstream>

#include "fdaris/config.hpp"
#include "fdaris/csv.hpp"
#include "fdaris/sweeps.hpp"

using namespace fdaris;

namespace
{
    std::string replace_line(std::string text, const std::string &from, const std::string &to)
    {
        const auto p = text.find(from);
        EXPECT_NE(p, std::string::npos) << from;
        return text.replace(p, from.size(), to);
    }

    // Replaces the value of the first line starting with "key = "
    std::string set_value(std::string text, const std::string &key, const std::string &value)
    {
        const auto p = text.find("\n" + key + " = ");
        EXPECT_NE(p, std::string::npos) << key;
        const auto b = p + key.size() + 4, e = text.find('\n', b);
        return text.replace(b, e - b, value);
    }

    int line_of(const std::string &text, const std::string &needle)
    {
        std::istringstream in(text);
        std::string l;
        int n = 0;
        while (std::getline(in, l))
        {
            ++n;
            if (l.find(needle) != std::string::npos)
                return n;
        }
        return -1;
    }

    struct CommaDecimal : std::numpunct<char>
    {
        char do_decimal_point() const override { return ','; }
        char do_thousands_sep() const override { return '.'; }
        std::string do_grouping() const override { return "\3"; }
    };
}

TEST(Config, BaselineRoundTrip)
{
    const ScenarioConfig c = ScenarioConfig::paper_baseline();
    const std::string text = serialize_config(c);
    const ScenarioConfig back = parse_config(text);
    EXPECT_EQ(back, c);
    EXPECT_EQ(serialize_config(back), text);
}

TEST(Config, EveryModeRoundTrips)
{
    std::vector<ScenarioConfig> cs;
    ScenarioConfig c = ScenarioConfig::paper_baseline();
    c.eve = {};
    c.eve.mode = EveMode::Point;
    c.eve.x_m = 50.1;
    c.eve.y_m = -3.25;
    c.m_s.reset();
    c.n_s.reset();
    cs.push_back(c);
    c = ScenarioConfig::paper_baseline();
    c.eve.aoa_rad = 0.1 + 0.2;
    cs.push_back(c);
    c.eve = {};
    c.eve.mode = EveMode::AngleSweep;
    c.eve.aoa_min_rad = -1.5707963267948966;
    c.eve.aoa_max_rad = 1.5707963267948966;
    c.eve.points = 7;
    c.eve.range_m = 1.0 / 3.0;
    c.combine = CombineRule::Union;
    c.technique = Technique::OptimalDeltaF;
    cs.push_back(c);
    c.eve = {};
    c.eve.mode = EveMode::Circle;
    c.eve.radius_m = 10.0;
    c.eve.phi_max_rad = 6.283185307179586;
    c.eve.points = 361;
    c.seed = 18446744073709551615ULL;
    cs.push_back(c);
    c.eve = {};
    c.eve.mode = EveMode::Grid;
    c.eve.x_min_m = 25.0;
    c.eve.x_max_m = 175.0;
    c.eve.y_min_m = -95.0;
    c.eve.y_max_m = 55.0;
    c.eve.nx = 101;
    c.eve.ny = 3;
    c.l0_db = 50.0;
    c.noise_eve_dbm = -117.3;
    cs.push_back(c);
    for (const auto &x : cs)
    {
        const ScenarioConfig y = parse_config(serialize_config(x));
        EXPECT_EQ(y, x) << serialize_config(x);
    }
}

TEST(Config, AutoSizesResolveToOptimum)
{
    ScenarioConfig c = ScenarioConfig::paper_baseline();
    c.m_s.reset();
    const Scenario s = c.to_scenario();
    EXPECT_EQ(s.sizes.m_s(), 18);
    EXPECT_EQ(s.sizes.n_s(), 441);
}

TEST(Config, ErrorsNameLineAndField)
{
    const std::string good = serialize_config(ScenarioConfig::paper_baseline());
    const std::vector<std::pair<std::string, std::string>> cases{
        {"plan.f0_hz", "sixty"},
        {"plan.f0_hz", "-1"},
        {"plan.m_antennas", "0"},
        {"plan.delta_f_hz", "1e9"},
        {"ris.n_h", "0"},
        {"selection.m_s", "10"},
        {"selection.n_s", "442"},
        {"pathloss.l0_db", "60 dB"},
        {"pathloss.alpha", "0"},
        {"budget.power_dbm", "inf"},
        {"eve.mode", "spiral"},
        {"eve.range_max_m", "0.5"},
        {"run.combine", "both"},
        {"run.technique", "magic"},
        {"run.seed", "-4"},
    };
    for (const auto &[field, value] : cases)
    {
        const std::string key = field.substr(field.find('.') + 1);
        const std::string bad = set_value(good, key, value);
        try
        {
            parse_config(bad, "x.ini");
            ADD_FAILURE() << "accepted " << field << " = " << value;
        }
        catch (const ConfigError &e)
        {
            EXPECT_EQ(e.field(), field) << e.what();
            EXPECT_EQ(e.line(), line_of(bad, key + " = " + value)) << e.what();
            EXPECT_NE(std::string(e.what()).find("x.ini:" + std::to_string(e.line()) + ":"), std::string::npos);
        }
    }
}

TEST(Config, StructuralErrors)
{
    const std::string good = serialize_config(ScenarioConfig::paper_baseline());
    const int lines = int(std::count(good.begin(), good.end(), '\n'));
    auto expect_error = [](const std::string &text, int line, const std::string &field)
    {
        try
        {
            parse_config(text);
            ADD_FAILURE() << "accepted";
        }
        catch (const ConfigError &e)
        {
            EXPECT_EQ(e.line(), line) << e.what();
            EXPECT_EQ(e.field(), field) << e.what();
        }
    };
    const int alpha = line_of(good, "alpha = ");
    expect_error(good + "\n[plan]\nf0_hz = 1\n", lines + 2, "plan");
    expect_error(set_value(good, "alpha", "2\nalpha = 3"), alpha + 1, "pathloss.alpha");
    expect_error(set_value(good, "alpha", "2\ngamma = 3"), alpha + 1, "pathloss.gamma");
    expect_error(replace_line(good, "alpha = 2", "alpha"), alpha, "alpha");
    expect_error(replace_line(good, "[run]", "[runn]"), line_of(good, "[run]"), "runn");
    expect_error(replace_line(good, "seed = 1\n", ""), line_of(good, "[run]"), "run.seed");
    expect_error("f0_hz = 1\n", 1, "f0_hz");
    expect_error(set_value(set_value(good, "bob_x_m", "30"), "bob_y_m", "30"), line_of(good, "bob_x_m = "), "placement.bob_x_m");
    // comments and blank lines are ignored
    const std::string commented = "# leading comment\n; another\n\n" + set_value(good, "alpha", "2   # free space");
    EXPECT_EQ(parse_config(commented), ScenarioConfig::paper_baseline());
}

TEST(Config, ShippedBaselineMatchesBuiltIn)
{
    const ScenarioConfig c = load_config(std::string(FDARIS_SOURCE_DIR) + "/scenarios/paper-baseline.ini");
    EXPECT_EQ(c, ScenarioConfig::paper_baseline());
    EXPECT_THROW(load_config(std::string(FDARIS_SOURCE_DIR) + "/scenarios/missing.ini"), ConfigError);
}

TEST(Config, ShippedScenariosLoadAndRoundTrip)
{
    for (const char *name : {"paper-baseline", "heatmap", "range-sweep", "angle-sweep", "circle"})
    {
        const std::string path = std::string(FDARIS_SOURCE_DIR) + "/scenarios/" + name + ".ini";
        const ScenarioConfig c = load_config(path);
        EXPECT_EQ(parse_config(serialize_config(c)), c) << name;
    }
}

TEST(Sweeps, PointsFollowSpec)
{
    const ScenarioConfig c = ScenarioConfig::paper_baseline();
    const Scenario s = c.to_scenario();
    const auto pts = sweep_points(c.eve, s);
    ASSERT_EQ(pts.size(), 200u);
    EXPECT_DOUBLE_EQ(pts.front().param, 1.0);
    EXPECT_DOUBLE_EQ(pts.back().param, 200.0);
    EXPECT_NEAR(pts.back().polar->aoa_rad, s.bob().aoa_rad, 1e-15);
    EveSpec g;
    g.mode = EveMode::Grid;
    g.x_min_m = 0.0;
    g.x_max_m = 2.0;
    g.y_min_m = 5.0;
    g.y_max_m = 6.0;
    g.nx = 3;
    g.ny = 2;
    const auto grid = grid_points(g);
    ASSERT_EQ(grid.size(), 6u);
    EXPECT_EQ(grid[1].x, 1.0);
    EXPECT_EQ(grid[1].y, 5.0);
    EXPECT_EQ(grid[3].y, 6.0);
    EXPECT_THROW(sweep_points(g, s), std::invalid_argument);
    EveSpec on_ris;
    on_ris.x_m = 30.0;
    on_ris.y_m = 30.0;
    EXPECT_FALSE(sweep_points(on_ris, s).front().polar.has_value());
}

TEST(Csv, LocaleIndependentNumbers)
{
    const std::locale saved = std::locale::global(std::locale(std::locale::classic(), new CommaDecimal));
    std::ostringstream os;
    os.imbue(std::locale());
    {
        CsvWriter w(os, {"a", "b", "c", "d"});
        w.row({1234.5, -0.1, std::nan(""), 1e-300});
        EXPECT_THROW(w.row({1.0}), std::invalid_argument);
    }
    std::locale::global(saved);
    EXPECT_EQ(os.str(), "a,b,c,d\n1234.5,-0.1,nan,1e-300\n");
    double back = 0.0;
    const std::string s = format_number(0.1 + 0.2);
    std::from_chars(s.data(), s.data() + s.size(), back);
    EXPECT_EQ(back, 0.1 + 0.2);
}
