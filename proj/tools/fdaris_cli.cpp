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

// fdaris command-line front end

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "fdaris.hpp"

namespace
{
    using json = nlohmann::json;
    using namespace fdaris;

    enum Exit
    {
        exit_ok = 0,
        exit_invalid = 1,
        exit_verify_failed = 2
    };

    struct Options
    {
        std::string config;
        std::string out;
        bool json = false;
        std::optional<std::uint64_t> seed;
        unsigned threads = 0;
        std::optional<std::uint64_t> samples;
        std::optional<std::string> combine;

        // report
        std::vector<double> eve_xy;
        // optimize
        std::string target = "antenna";
        std::vector<int> m_list;
        // verify
        std::string suite = "all";
        int bob_masks = 100;
    };

    struct Loaded
    {
        ScenarioConfig cfg;
        Scenario sc;
    };

    Loaded load(const Options &o)
    {
        Loaded l;
        l.cfg = o.config.empty() ? ScenarioConfig::paper_baseline() : load_config(o.config);
        if (o.seed)
            l.cfg.seed = *o.seed;
        if (o.samples)
            l.cfg.samples = *o.samples;
        if (o.combine)
            l.cfg.combine = parse_combine_rule(*o.combine);
        l.sc = l.cfg.to_scenario();
        return l;
    }

    // Writes to --out when given, stdout otherwise
    class Sink
    {
    public:
        explicit Sink(const std::string &path)
        {
            if (!path.empty())
            {
                file_.open(path);
                if (!file_)
                    throw ConfigError(path, 0, "--out", "cannot open output file.");
            }
        }
        std::ostream &os() { return file_.is_open() ? file_ : std::cout; }

    private:
        std::ofstream file_;
    };

    double to_db(double v) { return v > 0.0 ? linear_to_db(v) : -std::numeric_limits<double>::infinity(); }

    json num(double v)
    {
        if (std::isfinite(v))
            return v;
        return format_number(v);
    }

    json sizes_json(const SelectionSizes &s) { return {{"m_s", s.m_s()}, {"n_s", s.n_s()}}; }

    int cmd_report(const Options &o)
    {
        const Loaded l = load(o);
        const Scenario &sc = l.sc;
        const PolarLocation bob = sc.bob();
        const BsRisLink link = sc.link();
        const WiretapRegion region = wiretap_region(sc.plan, sc.ris, bob, sc.combine);
        const WorstCaseReport wc = worst_case_secrecy(sc);
        const double gb_full = snr_bob_fda(sc.budget, sc.lg(), sc.lh(bob.range_m), sc.m(), sc.n());

        std::optional<Point2> eve;
        if (o.eve_xy.size() == 2)
            eve = Point2{o.eve_xy[0], o.eve_xy[1]};
        else if (l.cfg.eve.mode == EveMode::Point)
            eve = Point2{l.cfg.eve.x_m, l.cfg.eve.y_m};
        std::vector<SecrecyReport> rows;
        std::optional<PolarLocation> eve_polar;
        if (eve)
        {
            eve_polar = polar_or_empty(sc, *eve);
            if (!eve_polar)
                throw ConfigError(o.config.empty() ? "<built-in>" : o.config, 0, "eve", "Eve must not coincide with the RIS.");
            for (Technique t : {Technique::Conventional, Technique::Fda, Technique::FdaRibes, Technique::OptimalDeltaF})
                rows.push_back(evaluate(sc, *eve_polar, t));
        }

        Sink sink(o.out);
        std::ostream &os = sink.os();
        if (o.json)
        {
            json j;
            j["bob"] = {{"range_m", bob.range_m}, {"aoa_rad", bob.aoa_rad}};
            j["bs_ris"] = {{"r1_m", link.r1_m}, {"theta_tx_rad", link.theta_tx_rad}};
            j["sizes"] = sizes_json(sc.sizes);
            j["snr_bob_fda_db"] = num(to_db(gb_full));
            j["snr_bob_ribes_db"] = num(to_db(wc.gamma_bob));
            j["rate_cap_bits"] = num(std::log2(1.0 + gb_full));
            j["region"] = {{"delta_r_m", num(region.delta_r_m)},
                           {"delta_theta1_rad", region.delta_theta1_rad},
                           {"delta_theta2_rad", region.delta_theta2_rad},
                           {"combine", to_string(region.combine)}};
            j["bounds"] = {{"ub_range", num(wc.bounds.ub_range)}, {"ub_angle", num(wc.bounds.ub_angle)}, {"lambda", wc.bounds.lambda}};
            j["worst_case"] = {{"eve_range_cut", num(wc.eve_range_cut)},
                               {"eve_angle_cut", num(wc.eve_angle_cut)},
                               {"rate_range_cut", num(wc.rate_range_cut)},
                               {"rate_angle_cut", num(wc.rate_angle_cut)},
                               {"rate_joint", num(wc.rate_joint)}};
            if (eve_polar)
            {
                j["eve"] = {{"x_m", eve->x}, {"y_m", eve->y}, {"range_m", eve_polar->range_m}, {"aoa_rad", eve_polar->aoa_rad}};
                for (const SecrecyReport &r : rows)
                {
                    json t{{"technique", to_string(r.technique)},
                           {"rate_bits", num(r.rate_bits)},
                           {"snr_bob_db", num(to_db(r.gamma_bob))},
                           {"snr_eve_db", num(to_db(r.gamma_eve))},
                           {"in_wiretap", r.in_wiretap},
                           {"delta_f_hz", r.delta_f_hz}};
                    if (r.delta_f_feasible)
                        t["delta_f_feasible"] = *r.delta_f_feasible;
                    j["techniques"].push_back(t);
                }
            }
            os << j.dump(2) << '\n';
            return exit_ok;
        }

        os << "bob         range_m=" << format_number(bob.range_m) << " aoa_rad=" << format_number(bob.aoa_rad) << '\n';
        os << "bs->ris     r1_m=" << format_number(link.r1_m) << " theta_tx_rad=" << format_number(link.theta_tx_rad) << '\n';
        os << "sizes       m_s=" << sc.sizes.m_s() << " n_s=" << sc.sizes.n_s() << '\n';
        os << "snr_bob     fda_db=" << format_number(to_db(gb_full)) << " ribes_db=" << format_number(to_db(wc.gamma_bob))
           << " rate_cap_bits=" << format_number(std::log2(1.0 + gb_full)) << '\n';
        os << "region      delta_r_m=" << format_number(region.delta_r_m) << " delta_theta1_rad=" << format_number(region.delta_theta1_rad)
           << " delta_theta2_rad=" << format_number(region.delta_theta2_rad) << " combine=" << to_string(region.combine) << '\n';
        os << "bounds      ub_range=" << format_number(wc.bounds.ub_range) << " ub_angle=" << format_number(wc.bounds.ub_angle)
           << " lambda=" << format_number(wc.bounds.lambda) << '\n';
        os << "worst_case  range_cut_bits=" << format_number(wc.rate_range_cut) << " angle_cut_bits=" << format_number(wc.rate_angle_cut)
           << " joint_bits=" << format_number(wc.rate_joint) << '\n';
        if (eve_polar)
        {
            os << "eve         x_m=" << format_number(eve->x) << " y_m=" << format_number(eve->y) << " range_m=" << format_number(eve_polar->range_m)
               << " aoa_rad=" << format_number(eve_polar->aoa_rad) << '\n';
            for (const SecrecyReport &r : rows)
            {
                os << "  " << to_string(r.technique) << std::string(14 - to_string(r.technique).size(), ' ') << "rate_bits=" << format_number(r.rate_bits)
                   << " snr_eve_db=" << format_number(to_db(r.gamma_eve)) << " in_wiretap=" << (r.in_wiretap ? "yes" : "no")
                   << " delta_f_hz=" << format_number(r.delta_f_hz);
                if (r.delta_f_feasible && !*r.delta_f_feasible)
                    os << " (no feasible null)";
                os << '\n';
            }
        }
        return exit_ok;
    }

    int cmd_heatmap(const Options &o)
    {
        const Loaded l = load(o);
        if (l.cfg.eve.mode != EveMode::Grid)
            throw ConfigError(o.config.empty() ? "<built-in>" : o.config, 0, "eve.mode", "heatmap needs mode = grid.");
        const Scenario &sc = l.sc;
        const std::vector<Point2> pts = grid_points(l.cfg.eve);
        const SelectionSizes full = SelectionSizes::full(sc.m(), sc.n());
        std::vector<std::array<double, 4>> rates(pts.size());
        parallel_for(pts.size(), o.threads, [&](std::size_t i)
        {
            const auto eve = polar_or_empty(sc, pts[i]);
            if (!eve)
            {
                rates[i].fill(std::numeric_limits<double>::quiet_NaN());
                return;
            }
            rates[i] = {evaluate(sc, *eve, Technique::Conventional).rate_bits, evaluate(sc, *eve, Technique::Fda).rate_bits,
                        evaluate(sc, *eve, Technique::FdaRibes).rate_bits, evaluate(sc, *eve, Technique::OptimalDeltaF, full).rate_bits};
        });
        Sink sink(o.out);
        CsvWriter w(sink.os(), {"x_m", "y_m", "rate_conv", "rate_fda", "rate_ribes", "rate_ub"});
        for (std::size_t i = 0; i < pts.size(); ++i)
            w.row({pts[i].x, pts[i].y, rates[i][0], rates[i][1], rates[i][2], rates[i][3]});
        return exit_ok;
    }

    int cmd_sweep(const Options &o)
    {
        const Loaded l = load(o);
        const Scenario &sc = l.sc;
        if (l.cfg.eve.mode == EveMode::Grid)
            throw ConfigError(o.config.empty() ? "<built-in>" : o.config, 0, "eve.mode", "sweep needs a point, range_sweep, angle_sweep or circle specification.");
        const std::vector<EvePoint> pts = sweep_points(l.cfg.eve, sc);
        const OptimizationResult opt = optimize_sizes(sc);
        const SelectionSizes best{opt.m_s_star, opt.n_s_star};
        const std::uint64_t samples = o.samples.value_or(0);
        const bool mc = samples > 0;

        std::vector<std::string> header{"param", "x_m", "y_m", "range_m", "aoa_rad", "in_wiretap", "snr_bob_db",
                                        "snr_eve_conv_db", "snr_eve_fda_db", "snr_eve_ribes_db",
                                        "rate_conv", "rate_fda", "rate_ribes", "rate_opt_df", "rate_ribes_opt"};
        if (mc)
            for (const char *h : {"snr_eve_ribes_mc_db", "mc_std_error", "mc_z"})
                header.push_back(h);
        const double nan = std::numeric_limits<double>::quiet_NaN();
        std::vector<std::vector<double>> rows(pts.size());
        for (std::size_t i = 0; i < pts.size(); ++i)
        {
            const EvePoint &p = pts[i];
            std::vector<double> &r = rows[i];
            r = {p.param, p.xy.x, p.xy.y};
            if (!p.polar)
            {
                r.resize(header.size(), nan);
                continue;
            }
            const SecrecyReport conv = evaluate(sc, *p.polar, Technique::Conventional);
            const SecrecyReport fda = evaluate(sc, *p.polar, Technique::Fda);
            const SecrecyReport ribes = evaluate(sc, *p.polar, Technique::FdaRibes);
            const SecrecyReport odf = evaluate(sc, *p.polar, Technique::OptimalDeltaF);
            const SecrecyReport ropt = evaluate(sc, *p.polar, Technique::FdaRibes, best);
            r.insert(r.end(), {p.polar->range_m, p.polar->aoa_rad, ribes.in_wiretap ? 1.0 : 0.0, to_db(ribes.gamma_bob),
                               to_db(conv.gamma_eve), to_db(fda.gamma_eve), to_db(ribes.gamma_eve),
                               conv.rate_bits, fda.rate_bits, ribes.rate_bits, odf.rate_bits, ropt.rate_bits});
            if (mc)
            {
                const McReport m = monte_carlo_eve_snr(sc, *p.polar, samples, stream_seed(l.cfg.seed, i), o.threads);
                r.insert(r.end(), {to_db(m.empirical_snr), m.std_error, m.z_score()});
            }
        }
        Sink sink(o.out);
        CsvWriter w(sink.os(), header);
        for (const auto &r : rows)
            w.row(r);
        return exit_ok;
    }

    int cmd_optimize(const Options &o)
    {
        const Loaded l = load(o);
        const Scenario &sc = l.sc;
        Sink sink(o.out);

        if (!o.m_list.empty())
        {
            // Antenna-size optimum against array size
            CsvWriter w(sink.os(), {"m", "m_s_closed_form", "m_s_continuous", "m_s_simplified", "m_s_sweep", "objective_gap_bits"});
            for (int m : o.m_list)
            {
                Scenario s = sc;
                s.plan = FdaPlan(sc.plan.f0_hz(), sc.plan.delta_f_hz(), m);
                if (!FdaPlan::shift_is_feasible(s.plan.f0_hz(), s.plan.delta_f_hz(), m))
                    throw ConfigError("--m-list", 0, "plan.delta_f_hz", "shift infeasible for M = " + std::to_string(m) + ".");
                s.sizes = SelectionSizes(m, sc.sizes.n_s());
                const SizeOptimum cf = optimal_m_s(s);
                const SweepPoint sw = sweep_argmax(sweep_m_s(s));
                w.row({double(m), double(cf.value), cf.continuous, double(optimal_m_s_simplified(m).value), double(sw.size),
                       sw.objective_bits - cf.objective_bits});
            }
            return exit_ok;
        }

        const OptimizationResult r = optimize_sizes(sc);
        const SizeOptimum ms = optimal_m_s(sc);
        Scenario at_m = sc;
        at_m.sizes = SelectionSizes(sc.m(), sc.sizes.n_s());
        const double lambda = approximate_lambda(sc);
        const SizeOptimum ns = optimal_n_s(at_m);
        const SweepPoint ms_sw = sweep_argmax(sweep_m_s(sc));
        const SweepPoint ns_sw = sweep_argmax(sweep_n_s(at_m));

        if (!o.out.empty())
        {
            const bool element = o.target == "element";
            CsvWriter w(sink.os(), {element ? "n_s" : "m_s", "objective_bits"});
            for (const SweepPoint &p : element ? sweep_n_s(at_m) : sweep_m_s(sc))
                w.row({double(p.size), p.objective_bits});
        }

        auto opt_json = [](const SizeOptimum &s, const SweepPoint &sw)
        {
            return json{{"value", s.value}, {"continuous", num(s.continuous)}, {"method", to_string(s.method)},
                        {"objective_bits", num(s.objective_bits)}, {"sweep_argmax", sw.size}, {"sweep_objective_bits", num(sw.objective_bits)}};
        };
        json j;
        j["m_s"] = opt_json(ms, ms_sw);
        j["m_s"]["simplified"] = optimal_m_s_simplified(sc.m()).value;
        j["n_s_at_full_antennas"] = opt_json(ns, ns_sw);
        j["n_s_at_full_antennas"]["simplified"] = optimal_n_s_simplified(sc.n(), lambda).value;
        j["lambda"] = lambda;
        j["joint"] = {{"m_s", r.m_s_star}, {"n_s", r.n_s_star}, {"method_m", to_string(r.method_m)}, {"method_n", to_string(r.method_n)},
                      {"worst_case_bits", num(r.objective_bits)}};
        const PolarLocation bob = sc.bob();
        j["rate_cap_bits"] = num(secrecy_upper_bound(sc.budget, sc.lg(), sc.lh(bob.range_m), sc.m(), sc.n()));
        if (l.cfg.eve.mode == EveMode::Point)
        {
            const auto eve = polar_or_empty(sc, {l.cfg.eve.x_m, l.cfg.eve.y_m});
            if (eve && eve->range_m != bob.range_m)
            {
                const DeltaFChoice c = optimal_delta_f(sc.plan, bob, *eve);
                j["delta_f"] = {{"hz", c.delta_f_hz}, {"null_order", c.multiple}, {"feasible", c.feasible}};
            }
        }

        std::ostream &os = o.out.empty() ? std::cout : std::cerr;
        if (o.json)
        {
            os << j.dump(2) << '\n';
            return exit_ok;
        }
        os << "m_s*  " << ms.value << " (" << to_string(ms.method) << ", continuous " << format_number(ms.continuous) << "; simplified "
           << j["m_s"]["simplified"].get<int>() << "; sweep " << ms_sw.size << ")\n";
        os << "n_s*  " << ns.value << " at m_s = M (" << to_string(ns.method) << ", continuous " << format_number(ns.continuous) << "; simplified "
           << j["n_s_at_full_antennas"]["simplified"].get<int>() << "; sweep " << ns_sw.size << "; lambda " << format_number(lambda) << ")\n";
        os << "joint m_s=" << r.m_s_star << " n_s=" << r.n_s_star << " worst_case_bits=" << format_number(r.objective_bits) << '\n';
        if (j.contains("delta_f"))
            os << "delta_f* " << format_number(j["delta_f"]["hz"].get<double>()) << " Hz" << (j["delta_f"]["feasible"].get<bool>() ? "" : " (infeasible)") << '\n';
        return exit_ok;
    }

    int cmd_verify(const Options &o)
    {
        const Loaded l = load(o);
        const Scenario &sc = l.sc;
        const std::uint64_t seed = l.cfg.seed;
        std::vector<VerificationRecord> recs;
        const bool all = o.suite == "all";
        if (all || o.suite == "moments")
        {
            const auto m = verify_moments(seed);
            recs.insert(recs.end(), m.begin(), m.end());
        }
        if (all || o.suite == "snr")
        {
            const auto b = verify_bob_snr(sc, o.bob_masks, seed);
            recs.insert(recs.end(), b.begin(), b.end());
            const auto e = verify_eve_snr(sc, l.cfg.samples, seed, o.threads);
            recs.insert(recs.end(), e.begin(), e.end());
        }
        if (all || o.suite == "bounds")
        {
            const BoundCheck r = verify_range_bound(sc);
            const BoundCheck a = verify_angle_bound(sc);
            recs.insert(recs.end(), {r.printed, r.exact, a.printed, a.exact});
        }
        Sink sink(o.out);
        std::size_t failed = 0;
        for (const VerificationRecord &r : recs)
        {
            sink.os() << json{{"name", r.name}, {"closed_form", num(r.closed_form)}, {"oracle", num(r.oracle)}, {"error", num(r.error)}, {"pass", r.pass}}.dump()
                      << '\n';
            failed += r.pass ? 0 : 1;
        }
        std::cerr << "verify: " << recs.size() - failed << "/" << recs.size() << " checks passed\n";
        return failed ? exit_verify_failed : exit_ok;
    }
}

int main(int argc, char **argv)
{
    CLI::App app{"fdaris: range-angle secrecy toolkit for RIS-assisted FDA links"};
    app.require_subcommand(1, 1);
    Options o;

    auto common = [&](CLI::App *sub)
    {
        sub->add_option("--config", o.config, "scenario file (default: built-in baseline)")->check(CLI::ExistingFile);
        sub->add_option("--out", o.out, "output file (default: stdout)");
        sub->add_flag("--json", o.json, "JSON output where supported");
        sub->add_option("--seed", o.seed, "master seed (overrides run.seed)");
        sub->add_option("--threads", o.threads, "worker threads, 0 = all cores")->capture_default_str();
        sub->add_option("--samples", o.samples, "Monte-Carlo samples per point");
        sub->add_option("--combine", o.combine, "wiretap combine rule")->check(CLI::IsMember({"conjunction", "union"}));
    };

    CLI::App *report = app.add_subcommand("report", "scenario summary and per-technique rates for one Eve position");
    common(report);
    report->add_option("--eve", o.eve_xy, "Eve position X,Y in metres")->expected(2)->delimiter(',');
    CLI::App *heatmap = app.add_subcommand("heatmap", "secrecy-rate grid as CSV");
    common(heatmap);
    CLI::App *sweep = app.add_subcommand("sweep", "closed-form (and Monte-Carlo) columns along an Eve sweep");
    common(sweep);
    CLI::App *optimize = app.add_subcommand("optimize", "subset sizes and increment");
    common(optimize);
    optimize->add_option("--target", o.target, "sweep written to --out")->check(CLI::IsMember({"antenna", "element"}))->capture_default_str();
    optimize->add_option("--m-list", o.m_list, "antenna counts for an optimum-vs-M table")->delimiter(',');
    CLI::App *verify = app.add_subcommand("verify", "oracle checks as JSON lines");
    common(verify);
    verify->add_option("--suite", o.suite, "moments, snr, bounds or all")->check(CLI::IsMember({"moments", "snr", "bounds", "all"}))->capture_default_str();
    verify->add_option("--bob-masks", o.bob_masks, "random masks for the Bob check")->check(CLI::PositiveNumber)->capture_default_str();

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::Success &e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError &e)
    {
        app.exit(e);
        return exit_invalid;
    }

    try
    {
        if (report->parsed())
            return cmd_report(o);
        if (heatmap->parsed())
            return cmd_heatmap(o);
        if (sweep->parsed())
            return cmd_sweep(o);
        if (optimize->parsed())
            return cmd_optimize(o);
        return cmd_verify(o);
    }
    catch (const ConfigError &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return exit_invalid;
    }
    catch (const std::invalid_argument &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return exit_invalid;
    }
    catch (const std::domain_error &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return exit_invalid;
    }
}
