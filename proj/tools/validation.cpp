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

#include "validation.hpp"

#include "mumor/beamforming.hpp"
#include "mumor/capacity.hpp"
#include "mumor/rng.hpp"
#include "mumor/topology.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

namespace mumor
{
    namespace
    {
        double uniform(std::mt19937_64 &gen, double lo, double hi)
        {
            return lo + (hi - lo) * uniform01(gen);
        }

        // Interior angle, kept away from the endfire directions
        double random_angle(std::mt19937_64 &gen)
        {
            return uniform(gen, 0.01, kPi - 0.01);
        }

        int random_int(std::mt19937_64 &gen, int lo, int hi)
        {
            return lo + static_cast<int>(uniform01(gen) * (hi - lo + 1));
        }

        Complex random_complex(std::mt19937_64 &gen)
        {
            return std::polar(uniform(gen, 0.2, 1.5), uniform(gen, 0.0, kTwoPi));
        }

        oracle::Grid to_grid(const ComplexMatrix &m)
        {
            oracle::Grid g(static_cast<std::size_t>(m.rows()), std::vector<oracle::cplx>(m.cols()));
            for (Eigen::Index r = 0; r < m.rows(); ++r)
                for (Eigen::Index c = 0; c < m.cols(); ++c)
                    g[r][c] = m(r, c);
            return g;
        }

        oracle::Grid random_grid(std::mt19937_64 &gen, int n)
        {
            oracle::Grid g(n, std::vector<oracle::cplx>(n));
            for (auto &row : g)
                for (auto &x : row)
                    x = oracle::cplx(uniform(gen, -1.0, 1.0), uniform(gen, -1.0, 1.0));
            return g;
        }

        ComplexMatrix from_grid(const oracle::Grid &g)
        {
            ComplexMatrix m(static_cast<Eigen::Index>(g.size()), static_cast<Eigen::Index>(g[0].size()));
            for (std::size_t r = 0; r < g.size(); ++r)
                for (std::size_t c = 0; c < g[r].size(); ++c)
                    m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = g[r][c];
            return m;
        }

        CheckResult check(std::string name, double measured, double tol, std::string detail = {})
        {
            return {std::move(name), measured <= tol, measured, tol, std::move(detail)};
        }
    } // namespace

    RandomNetwork random_network(std::mt19937_64 &gen, int K, int N, int max_order)
    {
        RandomNetwork r;
        r.scenario.max_order = max_order;
        r.scenario.allow_revisit = true;
        for (int k = 0; k < K; ++k)
        {
            const int M = random_int(gen, 2, 5);
            const double dr = uniform(gen, 0.3, 0.7);
            const double l = uniform(gen, 0.5, 1.0);
            r.scenario.surfaces.emplace_back(M, dr, l);
            ComplexVector w(M);
            oracle::Surface s{M, dr, l, {}};
            for (int m = 0; m < M; ++m)
            {
                w(m) = random_complex(gen);
                s.w.push_back(w(m));
            }
            r.scenario.weights.emplace_back(w);
            r.surfaces.push_back(std::move(s));
        }

        r.edges.assign(K, std::vector<oracle::Link>(K, oracle::Link{0.0, 0.0, 0.0}));
        for (int a = 0; a < K; ++a)
            for (int b = a + 1; b < K; ++b)
            {
                const double dep = random_angle(gen), arr = random_angle(gen), amp = uniform(gen, 0.3, 1.0);
                r.scenario.add_link(a, b, {Angle::radians(dep), Angle::radians(arr), 50.0, amp});
                r.edges[a][b] = {dep, arr, amp};
                r.edges[b][a] = {arr, dep, amp};
            }

        for (int n = 0; n < N; ++n)
        {
            const int entry = random_int(gen, 0, K - 1), exit = random_int(gen, 0, K - 1);
            const double aoa = random_angle(gen), aod = random_angle(gen);
            r.scenario.transceivers.push_back(
                NetworkTransceiver::single(entry, Angle::radians(aoa), exit, Angle::radians(aod)));
            r.pairs.push_back({entry, aoa, exit, aod});
        }
        return r;
    }

    double max_relative_error(const ComplexMatrix &a, const oracle::Grid &b)
    {
        double diff = 0.0, scale = 0.0;
        for (Eigen::Index r = 0; r < a.rows(); ++r)
            for (Eigen::Index c = 0; c < a.cols(); ++c)
            {
                diff = std::max(diff, std::abs(a(r, c) - b[r][c]));
                scale = std::max(scale, std::abs(b[r][c]));
            }
        return scale > 0.0 ? diff / scale : diff;
    }

    std::vector<CheckResult> run_validation(std::uint64_t seed)
    {
        std::vector<CheckResult> out;
        std::uint64_t stream = 0;

        // Single surface: matrix form against element sums
        {
            auto gen = stream_generator(seed, stream++);
            double worst = 0.0;
            for (int t = 0; t < 50; ++t)
            {
                const auto net = random_network(gen, 1, random_int(gen, 1, 4), 1);
                std::vector<TransceiverPair> pairs;
                for (const auto &p : net.pairs)
                    pairs.push_back({Angle::radians(p.aoa_rad), Angle::radians(p.aod_rad)});
                const ComplexMatrix H = single_irs_channel(net.scenario.surfaces[0], net.scenario.weights[0], pairs);
                worst = std::max(worst, max_relative_error(H, oracle::element_sum_channel(net.surfaces, net.edges,
                                                                                         net.pairs, 1, true)));
            }
            out.push_back(check("single-surface channel vs element sums", worst, 1e-12));
        }

        // Two surfaces, cutoff 2, against the explicit first- and second-order sums
        {
            auto gen = stream_generator(seed, stream++);
            double worst = 0.0;
            for (int t = 0; t < 50; ++t)
            {
                const auto net = random_network(gen, 2, random_int(gen, 1, 4), 2);
                const auto ref = oracle::two_surface_channel(net.surfaces[0], net.surfaces[1], net.edges[0][1],
                                                             net.pairs, true);
                worst = std::max(worst, max_relative_error(network_channel(net.scenario).total, ref));
            }
            out.push_back(check("two-surface network channel vs explicit double sums", worst, 1e-12));
        }

        // Third-order dual reflection and three-surface networks against element-tuple sums
        {
            auto gen = stream_generator(seed, stream++);
            double worst = 0.0;
            for (int t = 0; t < 20; ++t)
            {
                const int K = random_int(gen, 2, 3);
                const auto net = random_network(gen, K, random_int(gen, 1, 3), 3);
                for (int order = 1; order <= 3; ++order)
                    worst = std::max(worst, max_relative_error(network_channel_order(net.scenario, order),
                                                               oracle::element_sum_channel(
                                                                   net.surfaces, net.edges, net.pairs, order, true)));
            }
            out.push_back(check("per-order cascade vs element-tuple sums (K<=3, order<=3)", worst, 1e-12));
        }

        // Index matrices against brute-force filtering
        {
            int mismatches = 0;
            for (int K = 2; K <= 6; ++K)
                for (int g = 1; g <= 5; ++g)
                    for (bool revisit : {true, false})
                        if (index_matrix(K, g, revisit).rows() != oracle::brute_force_sequences(K, g, revisit))
                            ++mismatches;
            out.push_back(check("index matrices vs brute-force sequences", mismatches, 0));
        }

        // Exact inter-surface distances against the law of cosines
        {
            auto gen = stream_generator(seed, stream++);
            double worst = 0.0;
            for (int t = 0; t < 50; ++t)
            {
                const UlaSurface src(random_int(gen, 2, 16), uniform(gen, 0.3, 0.7), 1.0, 0.01);
                const UlaSurface dst(random_int(gen, 2, 16), uniform(gen, 0.3, 0.7), 1.0, 0.01);
                const InterIrsLink link{Angle::radians(uniform(gen, 0.2, 2.9)), Angle::radians(uniform(gen, 0.2, 2.9)),
                                        uniform(gen, 5.0, 50.0)};
                const Eigen::MatrixXd D = inter_irs_distances(link, src, dst);
                const auto ref = oracle::link_distances(link.departure.rad(), link.arrival.rad(), link.distance_m,
                                                        src.element_count(), src.spacing_m(), dst.element_count(),
                                                        dst.spacing_m());
                for (Eigen::Index j = 0; j < D.rows(); ++j)
                    for (Eigen::Index i = 0; i < D.cols(); ++i)
                        worst = std::max(worst, std::abs(D(j, i) - ref[j][i]) / ref[j][i]);
            }
            out.push_back(check("exact link distances vs law of cosines", worst, 1e-12));
        }

        // Rank-one behaviour of the exact link, singular values by Jacobi sweeps
        {
            const UlaSurface s(16, 0.5, 1.0, 1.0);
            std::vector<double> ratios;
            std::ostringstream detail;
            double lib_gap = 0.0;
            for (double d : {1e2, 1e3, 1e4, 1e5})
            {
                const InterIrsLink link{Angle::degrees(60.0), Angle::degrees(110.0), d};
                const ComplexMatrix E = inter_irs_channel_exact(link, s, s);
                const auto sv = oracle::singular_values(to_grid(E));
                ratios.push_back(sv[1] / sv[0]);
                Eigen::JacobiSVD<ComplexMatrix> svd(E);
                lib_gap = std::max(lib_gap, std::abs(svd.singularValues()(1) / svd.singularValues()(0) - ratios.back()));
                detail << d << ":" << ratios.back() << " ";
            }
            bool monotone = std::is_sorted(ratios.rbegin(), ratios.rend());
            out.push_back(check("exact link sigma2/sigma1 at 1e4 wavelengths (monotone: " +
                                    std::string(monotone ? "yes" : "no") + ")",
                                monotone ? ratios[2] : 1.0, 1e-2, detail.str()));
            out.push_back(check("exact link singular values, Eigen vs Jacobi", lib_gap, 1e-10));

            const InterIrsLink link{Angle::degrees(60.0), Angle::degrees(110.0), 100.0};
            const auto sv = oracle::singular_values(to_grid(inter_irs_channel_farfield(link, s, s)));
            out.push_back(check("far-field link sigma2/sigma1", sv[1] / sv[0], 1e-12));
        }

        // Per-user SINR rates against a scalar recomputation
        {
            auto gen = stream_generator(seed, stream++);
            double worst = 0.0;
            for (int t = 0; t < 50; ++t)
            {
                const auto g = random_grid(gen, 3);
                const double P = uniform(gen, 0.1, 10.0), N0 = uniform(gen, 0.1, 2.0);
                const auto lib = sinr_sum_rate(from_grid(g), RateParams(P, N0)).per_user;
                const auto ref = oracle::sinr_rates(g, P, N0);
                for (std::size_t i = 0; i < ref.size(); ++i)
                    worst = std::max(worst, std::abs(lib[i] - ref[i]));
            }
            out.push_back(check("SINR rates vs scalar recomputation (bits)", worst, 1e-12));
        }

        // ZF rates against the explicit 2x2 inverse
        {
            auto gen = stream_generator(seed, stream++);
            double worst = 0.0;
            for (int t = 0; t < 50; ++t)
            {
                const auto g = random_grid(gen, 2);
                const double P = uniform(gen, 0.1, 10.0), N0 = uniform(gen, 0.1, 2.0);
                const auto lib = zf_decode(from_grid(g), N0, P);
                const auto [r0, r1] = oracle::zf_rates_2x2(g, P, N0);
                worst = std::max({worst, std::abs(lib[0] - r0), std::abs(lib[1] - r1)});
            }
            out.push_back(check("ZF rates vs explicit 2x2 inverse (bits)", worst, 1e-9));
        }

        // Decomposition plans: every feasible case up to K = 8
        {
            int failures = 0, plans = 0;
            std::string first_error;
            for (int K = 2; K <= 8; ++K)
                for (int tau = 2; tau <= K; ++tau)
                {
                    if ((K * (K - 1) / 2) % (tau - 1) != 0)
                        continue;
                    ++plans;
                    const auto plan = decompose_complete_graph(K, tau);
                    const std::string err = oracle::check_path_cover(K, tau, plan.paths);
                    if (!err.empty())
                    {
                        ++failures;
                        if (first_error.empty())
                            first_error = "K=" + std::to_string(K) + " tau=" + std::to_string(tau) + ": " + err;
                    }
                }
            out.push_back(check("path covers of K_n (" + std::to_string(plans) + " plans)", failures, 0, first_error));
        }

        // Optimal positions against null search on the beampattern
        {
            double worst = 0.0;
            int count_mismatch = 0;
            struct Case
            {
                int M;
                double dr;
            };
            for (const Case c : {Case{4, 0.5}, Case{8, 0.5}, Case{64, 2.0 / 64.0}, Case{6, 0.5}})
            {
                const UlaSurface s(c.M, c.dr);
                const TransceiverPair fixed{Angle::degrees(30.0), Angle::degrees(135.0)};
                const auto lib = optimal_positions(fixed, s);
                const auto ref = oracle::searched_positions(fixed.aoa.rad(), fixed.aod.rad(), c.M, c.dr);
                if (lib.size() != ref.size())
                {
                    ++count_mismatch;
                    continue;
                }
                for (std::size_t i = 0; i < lib.size(); ++i)
                    worst = std::max({worst, std::abs(lib[i].aoa.rad() - ref[i].first),
                                      std::abs(lib[i].aod.rad() - ref[i].second)});
            }
            out.push_back(check("optimal positions vs beampattern null search (rad)",
                                count_mismatch ? 1.0 : worst, 1e-7,
                                count_mismatch ? std::to_string(count_mismatch) + " count mismatches" : ""));
        }

        // Interference-free weights: residual recomputed with oracle steering vectors
        {
            auto gen = stream_generator(seed, stream++);
            double worst = 0.0;
            for (int t = 0; t < 50; ++t)
            {
                const int N = random_int(gen, 1, 3);
                const int M = N * N + random_int(gen, 0, 4);
                const UlaSurface s(M, 0.5);
                std::vector<TransceiverPair> pairs;
                for (int n = 0; n < N; ++n)
                    pairs.push_back({Angle::radians(random_angle(gen)), Angle::radians(random_angle(gen))});
                const auto sol = interference_free_weights(pairs, s);
                for (int v = 0; v < N; ++v)
                    for (int u = 0; u < N; ++u)
                    {
                        const auto ao = oracle::steering(pairs[v].aod.rad(), M, 0.5);
                        const auto ai = oracle::steering(pairs[u].aoa.rad(), M, 0.5);
                        oracle::cplx g = 0.0;
                        for (int m = 0; m < M; ++m)
                            g += std::conj(sol.weights.values()(m)) * ao[m] * ai[m];
                        worst = std::max(worst, std::abs(g - (u == v ? oracle::cplx(M, 0.0) : oracle::cplx(0.0))));
                    }
            }
            out.push_back(check("interference-free gains, M >= N^2", worst, 1e-8));
        }

        // MRC gain
        {
            auto gen = stream_generator(seed, stream++);
            double worst = 0.0;
            for (int t = 0; t < 200; ++t)
            {
                const int M = random_int(gen, 1, 64);
                const double dr = uniform(gen, 0.1, 1.0), l = uniform(gen, 0.1, 1.0);
                const UlaSurface s(M, dr, l);
                const TransceiverPair p{Angle::radians(random_angle(gen)), Angle::radians(random_angle(gen))};
                const auto w = mrc_weights(p, s).weights;
                const auto ao = oracle::steering(p.aod.rad(), M, dr);
                const auto ai = oracle::steering(p.aoa.rad(), M, dr);
                oracle::cplx g = 0.0;
                for (int m = 0; m < M; ++m)
                    g += std::conj(w.values()(m)) * l * ao[m] * ai[m];
                worst = std::max(worst, std::abs(std::abs(g) - M * l) / (M * l));
            }
            out.push_back(check("MRC gain |w^H a_C| = M l (relative)", worst, 1e-12));
        }

        // Closed-form bounds against 50-digit evaluation
        {
            double worst = 0.0;
            for (double snr_db : {-30.0, -10.0, 0.0, 10.0, 40.0})
                for (double gain_db : {0.0, -10.0})
                {
                    const RateParams p = RateParams::from_snr_db(snr_db);
                    for (int K : {2, 4, 8})
                    {
                        worst = std::max(worst, std::abs(bound_lg(6, K, p, gain_db) -
                                                         oracle::bound_lg_hp(6, K, p.snr(), gain_db)));
                        worst = std::max(worst, std::abs(bound_ng(6, K, 6, p) - oracle::bound_ng_hp(6, K, 6, p.snr())));
                    }
                    for (auto [K, tau] : {std::pair{4, 2}, {4, 4}, {6, 2}, {6, 4}, {6, 6}})
                        for (bool first : {false, true})
                            worst = std::max(worst,
                                             std::abs(bound_cg_equal(6, K, tau, p, first, gain_db).bits -
                                                      oracle::bound_cg_equal_hp(6, K, tau, p.snr(), first, gain_db)));
                }
            out.push_back(check("closed-form bounds vs 50-digit evaluation (bits)", worst, 1e-9));
        }
        return out;
    }

    void print_checks(const std::vector<CheckResult> &checks, std::ostream &out)
    {
        for (const auto &c : checks)
        {
            char buf[64];
            std::snprintf(buf, sizeof buf, "measured=%.3e tol=%.1e", c.measured, c.tolerance);
            out << (c.passed ? "PASS  " : "FAIL  ") << c.name << "  " << buf;
            if (!c.detail.empty())
                out << "  [" << c.detail << "]";
            out << '\n';
        }
    }
} // namespace mumor
