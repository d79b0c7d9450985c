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
#include "mumor/capacity.hpp"
#include "mumor/rng.hpp"
#include "mumor/topology.hpp"
#include "parallel.hpp"
#include "scenario_yaml.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

namespace mumor
{
    using Json = nlohmann::ordered_json;

    namespace
    {
        // Shortest text that keeps 12 significant digits; identical on every run
        std::string num(double x)
        {
            if (std::isnan(x))
                return "nan";
            if (std::isinf(x))
                return x > 0 ? "inf" : "-inf";
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.12g", x);
            return buf;
        }

        std::string num(const std::optional<double> &x)
        {
            return x ? num(*x) : "";
        }

        std::vector<double> default_snr_grid()
        {
            std::vector<double> g;
            for (int s = -30; s <= 40; ++s)
                g.push_back(s);
            return g;
        }

        void require(bool ok, const std::string &what)
        {
            if (!ok)
                throw std::invalid_argument(what);
        }

        Json to_json(const Quartiles &q)
        {
            return Json{{"q1", q.q1}, {"median", q.median}, {"q3", q.q3}};
        }

        Json header(std::string_view experiment, std::uint64_t seed)
        {
            return Json{{"experiment", experiment}, {"version", kVersion}, {"seed", seed}};
        }
    } // namespace

    // ------------------------------------------------------------------ fig5

    Fig5Result run_fig5(const Fig5Config &config, int threads)
    {
        require(config.element_count >= 1, "fig5: element_count must be at least 1.");
        require(config.relative_length > 0.0, "fig5: relative_length must be positive.");
        require(config.grid_step_deg > 0.0 && config.grid_step_deg < 180.0, "fig5: grid step must lie in (0, 180).");
        const double cells = 180.0 / config.grid_step_deg;
        const long n_cells = std::lround(cells);
        require(std::abs(cells - n_cells) < 1e-9 * cells, "fig5: grid step must divide 180 degrees.");
        require(config.peak_count >= 0, "fig5: peak_count must be non-negative.");

        Fig5Result r;
        r.config = config;
        for (long k = 1; k < n_cells; ++k)
            r.grid_deg.push_back(k * config.grid_step_deg);

        const UlaSurface surface(config.element_count, config.relative_length / config.element_count);
        const TransceiverPair fixed{config.fixed_aoa, config.fixed_aod};
        const WeightVector w = mrc_weights(fixed, surface).weights;
        const RateParams params = RateParams::from_snr_db(config.snr_db);
        r.analytic = optimal_positions(fixed, surface);

        const auto G = static_cast<Eigen::Index>(r.grid_deg.size());
        r.capacity_bits.resize(G, G);
        parallel_for(static_cast<std::size_t>(G), threads, [&](std::size_t a) {
            const auto ai = static_cast<Eigen::Index>(a);
            for (Eigen::Index b = 0; b < G; ++b)
            {
                const TransceiverPair pairs[2] = {
                    fixed, {Angle::degrees(r.grid_deg[a]), Angle::degrees(r.grid_deg[static_cast<std::size_t>(b)])}};
                r.capacity_bits(ai, b) = logdet_capacity(single_irs_channel(surface, w, pairs), params);
            }
        });

        // Local maxima over the 8-neighbourhood, strongest first. A plateau yields
        // several equal cells, so anything within one step of a kept peak is dropped.
        std::vector<Fig5Peak> candidates;
        for (Eigen::Index a = 0; a < G; ++a)
            for (Eigen::Index b = 0; b < G; ++b)
            {
                const double v = r.capacity_bits(a, b);
                bool is_max = true;
                for (Eigen::Index da = -1; da <= 1 && is_max; ++da)
                    for (Eigen::Index db = -1; db <= 1; ++db)
                    {
                        const Eigen::Index na = a + da, nb = b + db;
                        if ((da || db) && na >= 0 && nb >= 0 && na < G && nb < G && r.capacity_bits(na, nb) > v)
                        {
                            is_max = false;
                            break;
                        }
                    }
                if (is_max)
                    candidates.push_back(
                        {r.grid_deg[static_cast<std::size_t>(a)], r.grid_deg[static_cast<std::size_t>(b)], v});
            }
        std::stable_sort(candidates.begin(), candidates.end(),
                         [](const Fig5Peak &x, const Fig5Peak &y) { return x.capacity_bits > y.capacity_bits; });
        const double reach = config.grid_step_deg * (1.0 + 1e-9);
        for (const auto &c : candidates)
        {
            if (static_cast<int>(r.peaks.size()) >= config.peak_count)
                break;
            const bool near = std::any_of(r.peaks.begin(), r.peaks.end(), [&](const Fig5Peak &p) {
                return std::abs(p.alpha_deg - c.alpha_deg) <= reach && std::abs(p.beta_deg - c.beta_deg) <= reach;
            });
            if (!near)
                r.peaks.push_back(c);
        }
        return r;
    }

    void write_fig5_csv(const Fig5Result &r, std::ostream &out)
    {
        out << "alpha_deg,beta_deg,capacity_bits\n";
        for (std::size_t a = 0; a < r.grid_deg.size(); ++a)
            for (std::size_t b = 0; b < r.grid_deg.size(); ++b)
                out << num(r.grid_deg[a]) << ',' << num(r.grid_deg[b]) << ','
                    << num(r.capacity_bits(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b))) << '\n';
    }

    void write_fig5_optima_csv(const Fig5Result &r, std::ostream &out)
    {
        out << "kind,alpha_deg,beta_deg,null_index,capacity_bits\n";
        for (const auto &p : r.analytic)
            out << "analytic," << num(p.aoa.deg()) << ',' << num(p.aod.deg()) << ',' << p.null_index << ",\n";
        for (const auto &p : r.peaks)
            out << "grid_peak," << num(p.alpha_deg) << ',' << num(p.beta_deg) << ",," << num(p.capacity_bits) << '\n';
    }

    std::string fig5_metadata(const Fig5Result &r, std::uint64_t seed)
    {
        Json j = header("fig5", seed);
        j["config"] = {{"elements", r.config.element_count},
                       {"relative_length", r.config.relative_length},
                       {"fixed_aoa_deg", r.config.fixed_aoa.deg()},
                       {"fixed_aod_deg", r.config.fixed_aod.deg()},
                       {"grid_step_deg", r.config.grid_step_deg},
                       {"snr_db", r.config.snr_db},
                       {"peak_count", r.config.peak_count}};
        Json analytic = Json::array();
        for (const auto &p : r.analytic)
            analytic.push_back({{"alpha_deg", p.aoa.deg()}, {"beta_deg", p.aod.deg()}, {"null_index", p.null_index}});
        Json peaks = Json::array();
        for (const auto &p : r.peaks)
            peaks.push_back({{"alpha_deg", p.alpha_deg}, {"beta_deg", p.beta_deg}, {"capacity_bits", p.capacity_bits}});
        j["analytic_optima"] = analytic;
        j["grid_peaks"] = peaks;
        return j.dump(2) + "\n";
    }

    // ------------------------------------------------------------------ fig6

    Quartiles quartiles(std::vector<double> s)
    {
        if (s.empty())
            return {std::nan(""), std::nan(""), std::nan("")};
        std::sort(s.begin(), s.end());
        auto q = [&](double p) {
            const double pos = p * static_cast<double>(s.size() - 1);
            const auto lo = static_cast<std::size_t>(std::floor(pos));
            const std::size_t hi = std::min(lo + 1, s.size() - 1);
            return s[lo] + (pos - static_cast<double>(lo)) * (s[hi] - s[lo]);
        };
        return {q(0.25), q(0.5), q(0.75)};
    }

    std::vector<TransceiverPair> fig6_draw_pairs(std::uint64_t seed, std::uint64_t trial, int pair_count,
                                                 bool uniform_in_cos)
    {
        auto gen = stream_generator(seed, trial);
        auto draw = [&] {
            double u = 0.0;
            while (u == 0.0)
                u = uniform01(gen);
            return Angle::radians(uniform_in_cos ? std::acos(1.0 - 2.0 * u) : kPi * u);
        };
        std::vector<TransceiverPair> pairs;
        for (int n = 0; n < pair_count; ++n)
        {
            const Angle aoa = draw();
            const Angle aod = draw();
            pairs.push_back({aoa, aod});
        }
        return pairs;
    }

    Fig6Result run_fig6(const Fig6Config &config, int threads)
    {
        require(config.pair_count >= 1, "fig6: pair_count must be at least 1.");
        require(config.trials >= 1, "fig6: trials must be at least 1.");
        require(!config.element_grid.empty(), "fig6: element grid must not be empty.");
        require(config.spacing_wavelengths > 0.0, "fig6: spacing must be positive.");
        for (int M : config.element_grid)
            require(M >= 1, "fig6: element counts must be at least 1.");

        const RateParams params = RateParams::from_snr_db(config.snr_db);
        const std::size_t T = static_cast<std::size_t>(config.trials);
        const std::size_t G = config.element_grid.size();

        struct Sample
        {
            double random, random_zf, lcmv, phase_only, lcmv_residual, phase_only_residual;
        };
        std::vector<Sample> samples(G * T);

        parallel_for(G * T, threads, [&](std::size_t task) {
            const std::size_t g = task / T, t = task % T;
            const int M = config.element_grid[g];
            const UlaSurface surface(M, config.spacing_wavelengths);
            // Common random angles across M, weights drawn per (M, trial)
            const auto pairs = fig6_draw_pairs(config.seed, t, config.pair_count, config.uniform_in_cos);
            const WeightVector w_rand =
                random_weights(M, mix64(config.seed ^ mix64(static_cast<std::uint64_t>(M))) + t);

            Sample &s = samples[task];
            const ComplexMatrix H_rand = single_irs_channel(surface, w_rand, pairs);
            s.random = sinr_sum_rate(H_rand, params).sum;
            s.random_zf = 0.0;
            for (double rate : zf_decode(H_rand, params.noise_power_w, params.transmit_power_w))
                s.random_zf += rate;

            const InterferenceFreeSolution lcmv = lcmv_solve(pairs, surface);
            s.lcmv = sinr_sum_rate(single_irs_channel(surface, lcmv.weights, pairs), params).sum;
            s.lcmv_residual = lcmv.residual;
            const PhaseOnlyProjection po = phase_only_projection(lcmv, pairs, surface);
            s.phase_only = sinr_sum_rate(single_irs_channel(surface, po.weights, pairs), params).sum;
            s.phase_only_residual = po.residual_after;
        });

        Fig6Result r;
        r.config = config;
        for (std::size_t g = 0; g < G; ++g)
        {
            auto column = [&](double Sample::*field) {
                std::vector<double> v(T);
                for (std::size_t t = 0; t < T; ++t)
                    v[t] = samples[g * T + t].*field;
                return quartiles(std::move(v));
            };
            const int M = config.element_grid[g];
            r.rows.push_back({M, M >= config.pair_count * config.pair_count, column(&Sample::random),
                              column(&Sample::random_zf), column(&Sample::lcmv), column(&Sample::phase_only),
                              column(&Sample::lcmv_residual), column(&Sample::phase_only_residual)});
        }
        return r;
    }

    void write_fig6_csv(const Fig6Result &r, std::ostream &out)
    {
        out << "elements,feasible";
        for (const char *name : {"random", "random_zf", "lcmv", "phase_only"})
            for (const char *q : {"q1", "median", "q3"})
                out << ',' << name << '_' << q << "_bits";
        for (const char *name : {"lcmv_residual", "phase_only_residual"})
            for (const char *q : {"q1", "median", "q3"})
                out << ',' << name << '_' << q << "_linear";
        out << '\n';
        for (const auto &row : r.rows)
        {
            out << row.element_count << ',' << (row.feasible ? 1 : 0);
            for (const Quartiles *q : {&row.random_bits, &row.random_zf_bits, &row.lcmv_bits, &row.phase_only_bits,
                                       &row.lcmv_residual, &row.phase_only_residual})
                out << ',' << num(q->q1) << ',' << num(q->median) << ',' << num(q->q3);
            out << '\n';
        }
    }

    std::string fig6_metadata(const Fig6Result &r)
    {
        Json j = header("fig6", r.config.seed);
        j["config"] = {{"pairs", r.config.pair_count},     {"elements", r.config.element_grid},
                       {"trials", r.config.trials},        {"uniform_in_cos", r.config.uniform_in_cos},
                       {"snr_db", r.config.snr_db},        {"spacing_wavelengths", r.config.spacing_wavelengths}};
        Json rows = Json::array();
        for (const auto &row : r.rows)
            rows.push_back({{"elements", row.element_count},
                            {"feasible", row.feasible},
                            {"lcmv_residual", to_json(row.lcmv_residual)},
                            {"lcmv_bits", to_json(row.lcmv_bits)},
                            {"random_zf_bits", to_json(row.random_zf_bits)}});
        j["summary"] = rows;
        return j.dump(2) + "\n";
    }

    // ------------------------------------------------------------------ fig7

    Fig7Config::Fig7Config() : snr_db(default_snr_grid()) {}

    Fig7Result run_fig7(const Fig7Config &config, int threads)
    {
        require(config.element_count >= 1, "fig7: element_count must be at least 1.");
        require(!config.surface_counts.empty() && !config.snr_db.empty() && !config.edge_loss_db.empty(),
                "fig7: grids must not be empty.");
        for (int K : config.surface_counts)
            require(K >= 1, "fig7: surface counts must be at least 1.");

        Fig7Result r;
        r.config = config;
        for (int K : config.surface_counts)
            for (double loss : config.edge_loss_db)
                for (double snr : config.snr_db)
                    r.rows.push_back({K, loss, snr, 0.0, 0.0});

        parallel_for(r.rows.size(), threads, [&](std::size_t i) {
            Fig7Row &row = r.rows[i];
            const RateParams params = RateParams::from_snr_db(row.snr_db);
            row.lg_bits = bound_lg(config.element_count, row.surface_count, params, -row.edge_loss_db);
            row.ng_bits = bound_ng(config.element_count, row.surface_count, config.element_count, params);
        });

        const std::size_t S = config.snr_db.size();
        for (std::size_t start = 0; start < r.rows.size(); start += S)
        {
            Fig7Crossover c{r.rows[start].surface_count, r.rows[start].edge_loss_db, std::nullopt, false};
            std::size_t from = S;
            while (from > 0 && r.rows[start + from - 1].ng_bits >= r.rows[start + from - 1].lg_bits)
                --from;
            if (from < S)
                c.snr_db = r.rows[start + from].snr_db;
            c.lg_above_below = true;
            for (std::size_t k = 0; k < from; ++k)
                c.lg_above_below = c.lg_above_below && r.rows[start + k].lg_bits > r.rows[start + k].ng_bits;
            r.crossovers.push_back(c);
        }
        return r;
    }

    void write_fig7_csv(const Fig7Result &r, std::ostream &out)
    {
        out << "surfaces,edge_loss_db,snr_db,lg_bound_bits,ng_bound_bits\n";
        for (const auto &row : r.rows)
            out << row.surface_count << ',' << num(row.edge_loss_db) << ',' << num(row.snr_db) << ','
                << num(row.lg_bits) << ',' << num(row.ng_bits) << '\n';
    }

    std::string fig7_metadata(const Fig7Result &r, std::uint64_t seed)
    {
        Json j = header("fig7", seed);
        j["config"] = {{"elements", r.config.element_count},
                       {"surfaces", r.config.surface_counts},
                       {"snr_db", r.config.snr_db},
                       {"edge_loss_db", r.config.edge_loss_db}};
        Json cross = Json::array();
        for (const auto &c : r.crossovers)
            cross.push_back({{"surfaces", c.surface_count},
                             {"edge_loss_db", c.edge_loss_db},
                             {"ng_dominates_from_snr_db", c.snr_db ? Json(*c.snr_db) : Json(nullptr)},
                             {"lg_above_before", c.lg_above_below}});
        j["crossovers"] = cross;
        return j.dump(2) + "\n";
    }

    // ------------------------------------------------------------------ fig8

    Fig8Config::Fig8Config() : snr_db(default_snr_grid()) {}

    Fig8Result run_fig8(const Fig8Config &config, int threads)
    {
        require(config.element_count >= 1, "fig8: element_count must be at least 1.");
        require(!config.cases.empty() && !config.snr_db.empty(), "fig8: grids must not be empty.");

        Fig8Result r;
        r.config = config;
        const double gain_db = -config.edge_loss_db;
        for (const auto &c : config.cases)
        {
            try
            {
                const auto probe = bound_cg_equal(config.element_count, c.surface_count, c.tau,
                                                  RateParams(1.0, 1.0), false, gain_db);
                std::optional<int> supported;
                try
                {
                    supported = bound_cg_equal(config.element_count, c.surface_count, c.tau, RateParams(1.0, 1.0),
                                               true, gain_db)
                                    .supported_pairs;
                }
                catch (const BoundUndefinedError &)
                {
                }
                r.accepted.push_back(
                    {c, probe.n_tau, supported, to_text(decompose_complete_graph(c.surface_count, c.tau))});
            }
            catch (const DecompositionInfeasibleError &e)
            {
                r.rejected.push_back({c, e.what()});
            }
        }

        for (const auto &a : r.accepted)
            for (double snr : config.snr_db)
                r.rows.push_back({a.c, a.n_tau, snr, 0.0, std::nullopt});

        parallel_for(r.rows.size(), threads, [&](std::size_t i) {
            Fig8Row &row = r.rows[i];
            const RateParams params = RateParams::from_snr_db(row.snr_db);
            row.paths_only_bits =
                bound_cg_equal(config.element_count, row.c.surface_count, row.c.tau, params, false, gain_db).bits;
            try
            {
                row.with_first_order_bits =
                    bound_cg_equal(config.element_count, row.c.surface_count, row.c.tau, params, true, gain_db).bits;
            }
            catch (const BoundUndefinedError &)
            {
            }
        });
        return r;
    }

    void write_fig8_csv(const Fig8Result &r, std::ostream &out)
    {
        out << "surfaces,tau,n_tau,snr_db,paths_only_bits,with_first_order_bits\n";
        for (const auto &row : r.rows)
            out << row.c.surface_count << ',' << row.c.tau << ',' << row.n_tau << ',' << num(row.snr_db) << ','
                << num(row.paths_only_bits) << ',' << num(row.with_first_order_bits) << '\n';
    }

    std::string fig8_metadata(const Fig8Result &r, std::uint64_t seed)
    {
        Json j = header("fig8", seed);
        Json cases = Json::array();
        for (const auto &c : r.config.cases)
            cases.push_back(Json::array({c.surface_count, c.tau}));
        j["config"] = {{"elements", r.config.element_count},
                       {"cases", cases},
                       {"snr_db", r.config.snr_db},
                       {"edge_loss_db", r.config.edge_loss_db}};
        Json accepted = Json::array();
        for (const auto &a : r.accepted)
            accepted.push_back({{"surfaces", a.c.surface_count},
                                {"tau", a.c.tau},
                                {"n_tau", a.n_tau},
                                {"supported_pairs_with_first_order",
                                 a.supported_pairs ? Json(*a.supported_pairs) : Json(nullptr)},
                                {"decomposition", a.plan}});
        Json rejected = Json::array();
        for (const auto &x : r.rejected)
            rejected.push_back({{"surfaces", x.c.surface_count}, {"tau", x.c.tau}, {"reason", x.reason}});
        j["accepted"] = accepted;
        j["rejected"] = rejected;
        return j.dump(2) + "\n";
    }

    // ------------------------------------------------------------------ scenario

    ScenarioReport evaluate_scenario(const NetworkScenario &scenario)
    {
        ScenarioReport rep;
        rep.channel = network_channel(scenario);

        // Column u scaled by sqrt(P_u) so each transmitter keeps its own power
        const int N = scenario.transceiver_count();
        ComplexMatrix Hp = rep.channel.total;
        for (int u = 0; u < N; ++u)
            Hp.col(u) *= std::sqrt(scenario.transceivers[static_cast<std::size_t>(u)].power_w);
        const RateParams unit(1.0, scenario.noise_power_w);
        rep.sinr_bits = sinr_sum_rate(Hp, unit).per_user;
        rep.zf_bits = zf_decode(Hp, scenario.noise_power_w, 1.0);
        rep.logdet_bits = logdet_capacity(Hp, unit);
        return rep;
    }

    void write_scenario_csv(const ScenarioReport &rep, std::ostream &out)
    {
        out << "rx_index,tx_index,real_linear,imag_linear,gain_db\n";
        const ComplexMatrix &H = rep.channel.total;
        for (Eigen::Index v = 0; v < H.rows(); ++v)
            for (Eigen::Index u = 0; u < H.cols(); ++u)
            {
                const double mag = std::abs(H(v, u));
                out << v << ',' << u << ',' << num(H(v, u).real()) << ',' << num(H(v, u).imag()) << ','
                    << num(mag > 0.0 ? 20.0 * std::log10(mag) : -std::numeric_limits<double>::infinity()) << '\n';
            }
    }

    std::string scenario_metadata(const NetworkScenario &scenario, const ScenarioReport &rep,
                                  const std::string &config_path, std::uint64_t seed)
    {
        Json j = header("scenario", seed);
        j["config"] = {{"path", config_path},
                       {"surfaces", scenario.surface_count()},
                       {"transceivers", scenario.transceiver_count()},
                       {"max_order", scenario.max_order},
                       {"allow_revisit", scenario.allow_revisit},
                       {"inter_irs_model", scenario.inter_irs_model == InterIrsModel::exact ? "exact" : "farfield"},
                       {"noise_power_w", scenario.noise_power_w}};
        Json orders = Json::array();
        for (const auto &[order, H] : rep.channel.orders)
            orders.push_back({{"order", order}, {"frobenius_norm", H.norm()}});
        double sinr_sum = 0.0, zf_sum = 0.0;
        for (double x : rep.sinr_bits)
            sinr_sum += x;
        for (double x : rep.zf_bits)
            zf_sum += x;
        j["orders"] = orders;
        j["rates_bits"] = {{"sinr_per_user", rep.sinr_bits}, {"sinr_sum", sinr_sum},
                           {"zf_per_user", rep.zf_bits},     {"zf_sum", zf_sum},
                           {"logdet", rep.logdet_bits}};
        return j.dump(2) + "\n";
    }

    // ------------------------------------------------------------------ configs

    namespace
    {
        using yaml::Field;

        Field experiment_root(const std::string &text, const char *expected,
                              std::initializer_list<const char *> known)
        {
            Field root = yaml::parse_document(text);
            root.reject_unknown(known);
            if (root.has("experiment") && root.at("experiment").text() != expected)
                throw ConfigError("experiment", std::string("expected '") + expected + "'");
            return root;
        }

        int positive_int(const Field &f)
        {
            const long long v = f.integer();
            if (v < 1 || v > 100'000'000)
                throw ConfigError(f.path, "expected a positive integer");
            return static_cast<int>(v);
        }

        // Either an explicit list or {from, to, step}
        std::vector<double> grid(const Field &f)
        {
            std::vector<double> out;
            if (f.node.IsSequence())
                out = f.reals();
            else
            {
                f.reject_unknown({"from", "to", "step"});
                const double from = f.at("from").real(), to = f.at("to").real(), step = f.at("step").real();
                if (!(step > 0.0) || to < from)
                    throw ConfigError(f.path, "need step > 0 and to >= from");
                const auto n = static_cast<long>(std::floor((to - from) / step + 1e-9));
                if (n > 1'000'000)
                    throw ConfigError(f.path, "grid too large");
                for (long i = 0; i <= n; ++i)
                    out.push_back(from + static_cast<double>(i) * step);
            }
            if (out.empty())
                throw ConfigError(f.path, "grid must not be empty");
            return out;
        }

        std::vector<int> positive_ints(const Field &f)
        {
            const std::size_t n = f.require_sequence();
            if (n == 0)
                throw ConfigError(f.path, "list must not be empty");
            std::vector<int> out;
            for (std::size_t i = 0; i < n; ++i)
                out.push_back(positive_int(f.at(i)));
            return out;
        }
    } // namespace

    Fig5Config fig5_config_from_yaml(const std::string &text)
    {
        const Field root = experiment_root(text, "fig5",
                                           {"experiment", "elements", "relative_length", "fixed_aoa_deg",
                                            "fixed_aod_deg", "grid_step_deg", "snr_db", "peak_count"});
        Fig5Config c;
        if (root.has("elements"))
            c.element_count = positive_int(root.at("elements"));
        c.relative_length = root.at("relative_length").real_or(c.relative_length);
        if (!(c.relative_length > 0.0))
            throw ConfigError("relative_length", "must be positive");
        if (root.has("fixed_aoa_deg"))
            c.fixed_aoa = root.at("fixed_aoa_deg").angle_deg();
        if (root.has("fixed_aod_deg"))
            c.fixed_aod = root.at("fixed_aod_deg").angle_deg();
        c.grid_step_deg = root.at("grid_step_deg").real_or(c.grid_step_deg);
        const double cells = 180.0 / c.grid_step_deg;
        if (!(c.grid_step_deg > 0.0 && c.grid_step_deg < 180.0) || std::abs(cells - std::round(cells)) > 1e-9 * cells)
            throw ConfigError("grid_step_deg", "must divide 180 degrees");
        c.snr_db = root.at("snr_db").real_or(c.snr_db);
        c.peak_count = static_cast<int>(root.at("peak_count").integer_or(c.peak_count));
        if (c.peak_count < 0)
            throw ConfigError("peak_count", "must be non-negative");
        return c;
    }

    Fig6Config fig6_config_from_yaml(const std::string &text)
    {
        const Field root = experiment_root(text, "fig6",
                                           {"experiment", "pairs", "elements", "trials", "seed", "uniform_in_cos",
                                            "snr_db", "spacing_wavelengths"});
        Fig6Config c;
        if (root.has("pairs"))
            c.pair_count = positive_int(root.at("pairs"));
        if (root.has("elements"))
            c.element_grid = positive_ints(root.at("elements"));
        if (root.has("trials"))
            c.trials = positive_int(root.at("trials"));
        if (root.has("seed"))
        {
            const long long s = root.at("seed").integer();
            if (s < 0)
                throw ConfigError("seed", "must be non-negative");
            c.seed = static_cast<std::uint64_t>(s);
        }
        c.uniform_in_cos = root.at("uniform_in_cos").boolean_or(c.uniform_in_cos);
        c.snr_db = root.at("snr_db").real_or(c.snr_db);
        c.spacing_wavelengths = root.at("spacing_wavelengths").real_or(c.spacing_wavelengths);
        if (!(c.spacing_wavelengths > 0.0))
            throw ConfigError("spacing_wavelengths", "must be positive");
        return c;
    }

    Fig7Config fig7_config_from_yaml(const std::string &text)
    {
        const Field root =
            experiment_root(text, "fig7", {"experiment", "elements", "surfaces", "snr_db", "edge_loss_db"});
        Fig7Config c;
        if (root.has("elements"))
            c.element_count = positive_int(root.at("elements"));
        if (root.has("surfaces"))
            c.surface_counts = positive_ints(root.at("surfaces"));
        if (root.has("snr_db"))
            c.snr_db = grid(root.at("snr_db"));
        if (root.has("edge_loss_db"))
            c.edge_loss_db = grid(root.at("edge_loss_db"));
        return c;
    }

    Fig8Config fig8_config_from_yaml(const std::string &text)
    {
        const Field root =
            experiment_root(text, "fig8", {"experiment", "elements", "cases", "snr_db", "edge_loss_db"});
        Fig8Config c;
        if (root.has("elements"))
            c.element_count = positive_int(root.at("elements"));
        if (root.has("cases"))
        {
            const Field cases = root.at("cases");
            const std::size_t n = cases.require_sequence();
            if (n == 0)
                throw ConfigError(cases.path, "list must not be empty");
            c.cases.clear();
            for (std::size_t i = 0; i < n; ++i)
            {
                const Field item = cases.at(i);
                if (item.require_sequence() != 2)
                    throw ConfigError(item.path, "expected [surfaces, tau]");
                c.cases.push_back({positive_int(item.at(std::size_t{0})), positive_int(item.at(std::size_t{1}))});
            }
        }
        if (root.has("snr_db"))
            c.snr_db = grid(root.at("snr_db"));
        c.edge_loss_db = root.at("edge_loss_db").real_or(c.edge_loss_db);
        return c;
    }
} // namespace mumor
