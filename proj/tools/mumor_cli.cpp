// SPDX-License-Identifier: Apache-2.0
//
// mumor: channel modelling and sum-rate bounds for networks of reflecting surfaces
// Copyright (C) 2026 The mumor authors
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

#include "mumor/experiments.hpp"
#include "mumor/scenario_io.hpp"
#include "validation.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace
{
    using namespace mumor;

    constexpr int kExitOk = 0;
    constexpr int kExitFailed = 1;
    constexpr int kExitConfig = 2;

    struct Globals
    {
        std::string config;
        std::string out;
        std::uint64_t seed = 1;
        int threads = 1;
    };

    // <dir>/<stem><suffix> next to the main CSV
    std::string sibling(const std::string &csv, const std::string &suffix)
    {
        std::filesystem::path p(csv);
        return (p.parent_path() / (p.stem().string() + suffix)).string();
    }

    template <typename Writer>
    void write_file(const std::string &path, Writer &&writer)
    {
        std::ofstream f(path, std::ios::binary);
        if (!f)
            throw ConfigError(path, "cannot open file for writing");
        writer(f);
        f.flush();
        if (!f)
            throw ConfigError(path, "write failed");
    }

    void write_text(const std::string &path, const std::string &text)
    {
        write_file(path, [&](std::ostream &o) { o << text; });
    }

    std::string out_path(const Globals &g, const char *fallback)
    {
        return g.out.empty() ? std::string(fallback) : g.out;
    }

    std::string config_text(const Globals &g)
    {
        return g.config.empty() ? std::string() : read_text_file(g.config);
    }

    // Re-tags parse errors in a config file with its path
    template <typename F>
    auto with_config_path(const Globals &g, F &&parse)
    {
        try
        {
            return parse(config_text(g));
        }
        catch (const ConfigError &e)
        {
            if (g.config.empty() || e.field() == g.config)
                throw;
            throw ConfigError(g.config + ": " + e.field(), std::string(e.what()).substr(e.field().size() + 2));
        }
    }

    void report(const std::string &csv, const std::string &json)
    {
        std::cout << "wrote " << csv << " and " << json << '\n';
    }
} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Channel models and sum-rate bounds for networks of reflecting surfaces"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", std::string(kVersion));

    Globals g;
    app.add_option("--config", g.config, "YAML config file (experiment parameters or scenario)");
    app.add_option("--out", g.out, "Output CSV path; sidecars are written next to it");
    app.add_option("--seed", g.seed, "Seed for every random draw");
    app.add_option("--threads", g.threads, "Worker threads (results do not depend on this)")->check(CLI::Range(1, 1024));

    // fig5
    auto *fig5 = app.add_subcommand("fig5", "Capacity surface of a second pair next to an MRC-served pair");
    int f5_elements = 0;
    double f5_length = 0, f5_aoa = 0, f5_aod = 0, f5_step = 0, f5_snr = 0;
    auto *o5e = fig5->add_option("--elements", f5_elements, "Elements M");
    auto *o5l = fig5->add_option("--relative-length", f5_length, "Array length L = M dr in wavelengths");
    auto *o5a = fig5->add_option("--fixed-aoa", f5_aoa, "AOA of the fixed pair, degrees");
    auto *o5d = fig5->add_option("--fixed-aod", f5_aod, "AOD of the fixed pair, degrees");
    auto *o5s = fig5->add_option("--step", f5_step, "Grid step in degrees, must divide 180");
    auto *o5n = fig5->add_option("--snr-db", f5_snr, "P_T / N0 in dB");

    // fig6
    auto *fig6 = app.add_subcommand("fig6", "Monte-Carlo sum rates of random, random+ZF and interference-free weights");
    int f6_pairs = 0, f6_trials = 0;
    std::vector<int> f6_elements;
    double f6_snr = 0;
    bool f6_cos = false;
    auto *o6p = fig6->add_option("--pairs", f6_pairs, "Transceiver pairs N");
    auto *o6e = fig6->add_option("--elements", f6_elements, "Element counts to sweep")->delimiter(',');
    auto *o6t = fig6->add_option("--trials", f6_trials, "Trials per element count");
    auto *o6n = fig6->add_option("--snr-db", f6_snr, "P_T / N0 in dB");
    auto *o6c = fig6->add_flag("--uniform-in-cos", f6_cos, "Draw angles uniform in cosine instead of in angle");

    // fig7
    auto *fig7 = app.add_subcommand("fig7", "Linear-graph vs null-graph sum-rate bounds");
    int f7_elements = 0;
    std::vector<int> f7_surfaces;
    std::vector<double> f7_loss;
    auto *o7e = fig7->add_option("--elements", f7_elements, "Elements M per surface");
    auto *o7k = fig7->add_option("--surfaces", f7_surfaces, "Surface counts K")->delimiter(',');
    auto *o7l = fig7->add_option("--edge-loss-db", f7_loss, "Loss per inter-surface edge in dB")->delimiter(',');

    // fig8
    auto *fig8 = app.add_subcommand("fig8", "Complete-graph bounds for equal-length path decompositions");
    int f8_elements = 0;
    std::vector<std::string> f8_cases;
    double f8_loss = 0;
    auto *o8e = fig8->add_option("--elements", f8_elements, "Elements M per surface");
    auto *o8c = fig8->add_option("--case", f8_cases, "K:tau, repeatable or comma separated")->delimiter(',');
    auto *o8l = fig8->add_option("--edge-loss-db", f8_loss, "Loss per inter-surface edge in dB");

    auto *scenario = app.add_subcommand("scenario", "Evaluate the network channel of a YAML scenario (--config)");
    auto *validate = app.add_subcommand("validate", "Compare the library against independent reference computations");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try
    {
        if (*fig5)
        {
            Fig5Config c = with_config_path(g, [](const std::string &t) { return fig5_config_from_yaml(t); });
            if (*o5e)
                c.element_count = f5_elements;
            if (*o5l)
                c.relative_length = f5_length;
            if (*o5a)
                c.fixed_aoa = Angle::degrees(f5_aoa);
            if (*o5d)
                c.fixed_aod = Angle::degrees(f5_aod);
            if (*o5s)
                c.grid_step_deg = f5_step;
            if (*o5n)
                c.snr_db = f5_snr;
            const auto r = run_fig5(c, g.threads);
            const std::string csv = out_path(g, "fig5.csv");
            write_file(csv, [&](std::ostream &o) { write_fig5_csv(r, o); });
            write_file(sibling(csv, "_optima.csv"), [&](std::ostream &o) { write_fig5_optima_csv(r, o); });
            write_text(sibling(csv, ".json"), fig5_metadata(r, g.seed));
            report(csv, sibling(csv, ".json"));
            for (const auto &p : r.analytic)
                std::cout << "analytic optimum (" << p.aoa.deg() << ", " << p.aod.deg() << ") deg\n";
        }
        else if (*fig6)
        {
            Fig6Config c = with_config_path(g, [](const std::string &t) { return fig6_config_from_yaml(t); });
            if (*o6p)
                c.pair_count = f6_pairs;
            if (*o6e)
                c.element_grid = f6_elements;
            if (*o6t)
                c.trials = f6_trials;
            if (*o6n)
                c.snr_db = f6_snr;
            if (*o6c)
                c.uniform_in_cos = f6_cos;
            if (app.get_option("--seed")->count())
                c.seed = g.seed;
            const auto r = run_fig6(c, g.threads);
            const std::string csv = out_path(g, "fig6.csv");
            write_file(csv, [&](std::ostream &o) { write_fig6_csv(r, o); });
            write_text(sibling(csv, ".json"), fig6_metadata(r));
            report(csv, sibling(csv, ".json"));
        }
        else if (*fig7)
        {
            Fig7Config c = with_config_path(g, [](const std::string &t) { return fig7_config_from_yaml(t); });
            if (*o7e)
                c.element_count = f7_elements;
            if (*o7k)
                c.surface_counts = f7_surfaces;
            if (*o7l)
                c.edge_loss_db = f7_loss;
            const auto r = run_fig7(c, g.threads);
            const std::string csv = out_path(g, "fig7.csv");
            write_file(csv, [&](std::ostream &o) { write_fig7_csv(r, o); });
            write_text(sibling(csv, ".json"), fig7_metadata(r, g.seed));
            report(csv, sibling(csv, ".json"));
        }
        else if (*fig8)
        {
            Fig8Config c = with_config_path(g, [](const std::string &t) { return fig8_config_from_yaml(t); });
            if (*o8e)
                c.element_count = f8_elements;
            if (*o8l)
                c.edge_loss_db = f8_loss;
            if (*o8c)
            {
                c.cases.clear();
                for (const auto &s : f8_cases)
                {
                    int K = 0, tau = 0;
                    char colon = 0;
                    std::istringstream in(s);
                    if (!(in >> K >> colon >> tau) || colon != ':' || !in.eof())
                        throw ConfigError("--case", "expected K:tau, got '" + s + "'");
                    c.cases.push_back({K, tau});
                }
            }
            const auto r = run_fig8(c, g.threads);
            const std::string csv = out_path(g, "fig8.csv");
            write_file(csv, [&](std::ostream &o) { write_fig8_csv(r, o); });
            write_text(sibling(csv, ".json"), fig8_metadata(r, g.seed));
            report(csv, sibling(csv, ".json"));
            for (const auto &x : r.rejected)
                std::cout << "rejected K=" << x.c.surface_count << " tau=" << x.c.tau << ": " << x.reason << '\n';
        }
        else if (*scenario)
        {
            if (g.config.empty())
                throw ConfigError("--config", "the scenario subcommand needs a scenario file");
            const NetworkScenario s = load_scenario(g.config);
            const auto rep = evaluate_scenario(s);
            const std::string csv = out_path(g, "scenario.csv");
            write_file(csv, [&](std::ostream &o) { write_scenario_csv(rep, o); });
            write_text(sibling(csv, ".json"), scenario_metadata(s, rep, g.config, g.seed));
            report(csv, sibling(csv, ".json"));
        }
        else if (*validate)
        {
            const auto checks = run_validation(g.seed);
            print_checks(checks, std::cout);
            std::size_t failed = 0;
            for (const auto &c : checks)
                failed += c.passed ? 0 : 1;
            std::cout << checks.size() - failed << "/" << checks.size() << " checks passed\n";
            return failed ? kExitFailed : kExitOk;
        }
    }
    catch (const ConfigError &e)
    {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    }
    catch (const std::invalid_argument &e)
    {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailed;
    }
    return kExitOk;
}
