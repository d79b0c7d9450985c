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

#include "oracles.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace mumor::oracle
{
    namespace
    {
        constexpr double pi = 3.14159265358979323846;

        Grid zeros(std::size_t n)
        {
            return Grid(n, std::vector<cplx>(n, cplx(0.0, 0.0)));
        }
    } // namespace

    std::vector<cplx> steering(double phi_rad, int M, double dr)
    {
        std::vector<cplx> a(static_cast<std::size_t>(M));
        const double c = std::cos(phi_rad);
        for (int m = 0; m < M; ++m)
        {
            const double phase = -2.0 * pi * dr * c * m;
            a[static_cast<std::size_t>(m)] = cplx(std::cos(phase), std::sin(phase));
        }
        return a;
    }

    Grid two_surface_channel(const Surface &s0, const Surface &s1, const Link &link, const std::vector<Pair> &pairs,
                             bool second_order)
    {
        const std::size_t N = pairs.size();
        Grid H = zeros(N);
        const Surface *s[2] = {&s0, &s1};

        // First order: l_k sum_m conj(w_m) a_out(m) a_in(m) on the shared surface
        for (std::size_t v = 0; v < N; ++v)
            for (std::size_t u = 0; u < N; ++u)
            {
                const int k = pairs[u].entry;
                if (pairs[v].exit != k)
                    continue;
                const Surface &S = *s[k];
                const auto a_in = steering(pairs[u].aoa_rad, S.M, S.dr);
                const auto a_out = steering(pairs[v].aod_rad, S.M, S.dr);
                cplx acc = 0.0;
                for (int m = 0; m < S.M; ++m)
                    acc += std::conj(S.w[m]) * a_out[m] * a_in[m];
                H[v][u] += S.l * acc;
            }
        if (!second_order)
            return H;

        // Second order, 0 -> 1: l0 l1 rho sum_n sum_m
        //   a1(aod_v)_n conj(w1_n) a1(arr)_n  a0(dep)_m conj(w0_m) a0(aoa_u)_m
        // and 1 -> 0 uses the same link backwards (departure at 1 = arrival, arrival at 0 = departure)
        for (int from = 0; from < 2; ++from)
        {
            const int to = 1 - from;
            const Surface &A = *s[from];
            const Surface &B = *s[to];
            const double dep = from == 0 ? link.departure_rad : link.arrival_rad;
            const double arr = from == 0 ? link.arrival_rad : link.departure_rad;
            const auto a_dep = steering(dep, A.M, A.dr);
            const auto a_arr = steering(arr, B.M, B.dr);
            for (std::size_t v = 0; v < N; ++v)
                for (std::size_t u = 0; u < N; ++u)
                {
                    if (pairs[u].entry != from || pairs[v].exit != to)
                        continue;
                    const auto a_in = steering(pairs[u].aoa_rad, A.M, A.dr);
                    const auto a_out = steering(pairs[v].aod_rad, B.M, B.dr);
                    cplx acc = 0.0;
                    for (int n = 0; n < B.M; ++n)
                        for (int m = 0; m < A.M; ++m)
                            acc += a_out[n] * std::conj(B.w[n]) * a_arr[n] * a_dep[m] * std::conj(A.w[m]) * a_in[m];
                    H[v][u] += A.l * B.l * link.amplitude * acc;
                }
        }
        return H;
    }

    std::vector<std::vector<int>> brute_force_sequences(int K, int order, bool allow_revisit)
    {
        std::vector<std::vector<int>> out;
        long total = 1;
        for (int g = 0; g < order; ++g)
            total *= K;
        for (long code = 0; code < total; ++code)
        {
            // Most significant digit first, so codes run in lexicographic order
            std::vector<int> seq(static_cast<std::size_t>(order));
            long c = code;
            for (int g = order - 1; g >= 0; --g)
            {
                seq[static_cast<std::size_t>(g)] = static_cast<int>(c % K);
                c /= K;
            }
            bool ok = true;
            for (int g = 0; g + 1 < order; ++g)
                ok = ok && seq[g] != seq[g + 1];
            if (!allow_revisit)
                ok = ok && std::set<int>(seq.begin(), seq.end()).size() == seq.size();
            if (ok)
                out.push_back(std::move(seq));
        }
        return out;
    }

    Grid element_sum_channel(const std::vector<Surface> &surfaces, const std::vector<std::vector<Link>> &edges,
                             const std::vector<Pair> &pairs, int order, bool allow_revisit)
    {
        const std::size_t N = pairs.size();
        Grid H = zeros(N);
        const int K = static_cast<int>(surfaces.size());

        for (const auto &seq : brute_force_sequences(K, order, allow_revisit))
        {
            bool connected = true;
            for (int g = 0; g + 1 < order; ++g)
                connected = connected && edges[seq[g]][seq[g + 1]].amplitude != 0.0;
            if (!connected)
                continue;

            for (std::size_t v = 0; v < N; ++v)
                for (std::size_t u = 0; u < N; ++u)
                {
                    if (pairs[u].entry != seq.front() || pairs[v].exit != seq.back())
                        continue;

                    // Iterate over every tuple (m_0, ..., m_{order-1}) of element indices
                    std::vector<int> idx(static_cast<std::size_t>(order), 0);
                    cplx acc = 0.0;
                    while (true)
                    {
                        const Surface &first = surfaces[seq.front()];
                        const Surface &last = surfaces[seq.back()];
                        cplx term = steering(pairs[u].aoa_rad, first.M, first.dr)[idx.front()] *
                                    steering(pairs[v].aod_rad, last.M, last.dr)[idx.back()];
                        for (int g = 0; g < order; ++g)
                        {
                            const Surface &S = surfaces[seq[g]];
                            term *= S.l * std::conj(S.w[idx[g]]);
                            if (g + 1 < order)
                            {
                                const Link &e = edges[seq[g]][seq[g + 1]];
                                const Surface &T = surfaces[seq[g + 1]];
                                term *= e.amplitude * steering(e.departure_rad, S.M, S.dr)[idx[g]] *
                                        steering(e.arrival_rad, T.M, T.dr)[idx[g + 1]];
                            }
                        }
                        acc += term;

                        int g = order - 1;
                        while (g >= 0 && ++idx[g] == surfaces[seq[g]].M)
                            idx[g--] = 0;
                        if (g < 0)
                            break;
                    }
                    H[v][u] += acc;
                }
        }
        return H;
    }

    std::vector<std::vector<double>> link_distances(double departure_rad, double arrival_rad, double d11,
                                                    int M_src, double spacing_src, int M_dst, double spacing_dst)
    {
        const double mu = arrival_rad - departure_rad;
        std::vector<std::vector<double>> D(static_cast<std::size_t>(M_dst), std::vector<double>(M_src));
        for (int j = 0; j < M_dst; ++j)
            for (int i = 0; i < M_src; ++i)
            {
                const double a = i * spacing_src, b = j * spacing_dst;
                const double sq = d11 * d11 + a * a + b * b - 2.0 * d11 * b * std::cos(arrival_rad) -
                                  2.0 * d11 * a * std::cos(departure_rad) + 2.0 * a * b * std::cos(mu);
                D[j][i] = std::sqrt(sq);
            }
        return D;
    }

    std::vector<double> singular_values(const Grid &A)
    {
        const std::size_t rows = A.size();
        const std::size_t cols = rows ? A[0].size() : 0;
        // Work on columns
        std::vector<std::vector<cplx>> c(cols, std::vector<cplx>(rows));
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t k = 0; k < cols; ++k)
                c[k][r] = A[r][k];

        for (int sweep = 0; sweep < 80; ++sweep)
        {
            bool rotated = false;
            for (std::size_t p = 0; p + 1 < cols; ++p)
                for (std::size_t q = p + 1; q < cols; ++q)
                {
                    double alpha = 0.0, beta = 0.0;
                    cplx gamma = 0.0;
                    for (std::size_t r = 0; r < rows; ++r)
                    {
                        alpha += std::norm(c[p][r]);
                        beta += std::norm(c[q][r]);
                        gamma += std::conj(c[p][r]) * c[q][r];
                    }
                    const double g = std::abs(gamma);
                    if (g <= 1e-300 || g <= 1e-15 * std::sqrt(alpha * beta))
                        continue;
                    rotated = true;
                    // Rotate column q by the phase of gamma, then apply a real Jacobi rotation
                    const cplx phase = std::conj(gamma) / g;
                    const double zeta = (beta - alpha) / (2.0 * g);
                    const double t = (zeta >= 0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                    const double cs = 1.0 / std::sqrt(1.0 + t * t), sn = cs * t;
                    for (std::size_t r = 0; r < rows; ++r)
                    {
                        const cplx xp = c[p][r];
                        const cplx xq = c[q][r] * phase;
                        c[p][r] = cs * xp - sn * xq;
                        c[q][r] = sn * xp + cs * xq;
                    }
                }
            if (!rotated)
                break;
        }

        std::vector<double> s(cols);
        for (std::size_t k = 0; k < cols; ++k)
        {
            double n = 0.0;
            for (std::size_t r = 0; r < rows; ++r)
                n += std::norm(c[k][r]);
            s[k] = std::sqrt(n);
        }
        std::sort(s.rbegin(), s.rend());
        return s;
    }

    std::vector<double> sinr_rates(const Grid &H, double P, double N0)
    {
        std::vector<double> out;
        for (std::size_t i = 0; i < H.size(); ++i)
        {
            const double re = H[i][i].real(), im = H[i][i].imag();
            const double signal = P * (re * re + im * im);
            double interference = 0.0;
            for (std::size_t u = 0; u < H[i].size(); ++u)
                if (u != i)
                    interference += P * (H[i][u].real() * H[i][u].real() + H[i][u].imag() * H[i][u].imag());
            out.push_back(std::log(1.0 + signal / (N0 + interference)) / std::log(2.0));
        }
        return out;
    }

    std::pair<double, double> zf_rates_2x2(const Grid &H, double P, double N0)
    {
        // G = H^-1 = [d -b; -c a] / det; noise at output i is N0 ||row i of G||^2
        const cplx a = H[0][0], b = H[0][1], c = H[1][0], d = H[1][1];
        const double det2 = std::norm(a * d - b * c);
        const double g0 = (std::norm(d) + std::norm(b)) / det2;
        const double g1 = (std::norm(c) + std::norm(a)) / det2;
        return {std::log2(1.0 + P / (N0 * g0)), std::log2(1.0 + P / (N0 * g1))};
    }

    std::string check_path_cover(int K, int tau, const std::vector<std::vector<int>> &paths)
    {
        std::ostringstream err;
        std::set<std::pair<int, int>> seen;
        for (std::size_t p = 0; p < paths.size(); ++p)
        {
            const auto &path = paths[p];
            if (static_cast<int>(path.size()) != tau)
            {
                err << "path " << p << " has " << path.size() << " nodes, expected " << tau;
                return err.str();
            }
            if (std::set<int>(path.begin(), path.end()).size() != path.size())
            {
                err << "path " << p << " repeats a node";
                return err.str();
            }
            for (std::size_t i = 0; i + 1 < path.size(); ++i)
            {
                const int x = std::min(path[i], path[i + 1]), y = std::max(path[i], path[i + 1]);
                if (x < 0 || y >= K)
                {
                    err << "path " << p << " leaves the node range";
                    return err.str();
                }
                if (!seen.insert({x, y}).second)
                {
                    err << "edge (" << x << ", " << y << ") is used twice";
                    return err.str();
                }
            }
        }
        if (static_cast<int>(seen.size()) != K * (K - 1) / 2)
        {
            err << "covered " << seen.size() << " of " << K * (K - 1) / 2 << " edges";
            return err.str();
        }
        return {};
    }

    namespace
    {
        // |sum_m conj(w_m) a(out)_m a(in)_m| for the MRC weights of (aoa0, aod0)
        double mrc_gain(double aoa0, double aod0, double in, double out, int M, double dr)
        {
            const double zeta = -std::cos(aoa0) - std::cos(aod0);
            cplx acc = 0.0;
            for (int m = 0; m < M; ++m)
            {
                const double phase = -2.0 * pi * dr * (zeta + std::cos(out) + std::cos(in)) * m;
                acc += cplx(std::cos(phase), std::sin(phase));
            }
            return std::abs(acc);
        }

        // Zeros of f on (0, pi): scan, then golden-section refine each local minimum
        template <typename F>
        std::vector<double> nulls(F f, double M)
        {
            const double step = pi / 36000.0;
            std::vector<double> out;
            for (double x = step; x + 2 * step < pi; x += step)
            {
                const double f0 = f(x), f1 = f(x + step), f2 = f(x + 2 * step);
                if (!(f1 <= f0 && f1 < f2 && f1 < 0.05 * M))
                    continue;
                double lo = x, hi = x + 2 * step;
                const double r = (std::sqrt(5.0) - 1.0) / 2.0;
                for (int it = 0; it < 200 && hi - lo > 1e-15; ++it)
                {
                    const double c = hi - r * (hi - lo), d = lo + r * (hi - lo);
                    if (f(c) < f(d))
                        hi = d;
                    else
                        lo = c;
                }
                const double root = 0.5 * (lo + hi);
                if (f(root) < 1e-6)
                    out.push_back(root);
            }
            return out;
        }
    } // namespace

    std::vector<std::pair<double, double>> searched_positions(double aoa_rad, double aod_rad, int M, double dr)
    {
        // Receive directions nulled against the fixed transmitter, and transmit
        // directions nulled against the fixed receiver
        const auto betas = nulls([&](double b) { return mrc_gain(aoa_rad, aod_rad, aoa_rad, b, M, dr); }, M);
        const auto alphas = nulls([&](double a) { return mrc_gain(aoa_rad, aod_rad, a, aod_rad, M, dr); }, M);

        std::vector<std::pair<double, double>> out;
        for (double b : betas)
            for (double a : alphas)
                if (mrc_gain(aoa_rad, aod_rad, a, b, M, dr) > M * (1.0 - 1e-6))
                    out.emplace_back(a, b);
        std::sort(out.begin(), out.end(), [](const auto &x, const auto &y) { return x.second < y.second; });
        return out;
    }

    namespace
    {
        using hp = boost::multiprecision::cpp_bin_float_50;

        hp log2_hp(const hp &x)
        {
            return log(x) / log(hp(2));
        }

        // log2(1 + snr M^(2 g) rho^(g - 1)) with rho = 10^(edge_gain_db / 10)
        hp path_bits(int M, int g, double snr, double edge_gain_db)
        {
            const hp rho = pow(hp(10), hp(edge_gain_db) / 10);
            return log2_hp(1 + hp(snr) * pow(hp(M), 2 * g) * pow(rho, g - 1));
        }
    } // namespace

    double bound_lg_hp(int M, int K, double snr, double edge_gain_db)
    {
        const hp bits = path_bits(M, K, snr, edge_gain_db) + hp(K) * (M - 1) * path_bits(M, 1, snr, edge_gain_db);
        return bits.convert_to<double>();
    }

    double bound_ng_hp(int M, int K, int pairs_per_surface, double snr)
    {
        const hp bits = hp(K) * pairs_per_surface * log2_hp(1 + hp(snr) * M * M);
        return bits.convert_to<double>();
    }

    double bound_cg_equal_hp(int M, int K, int tau, double snr, bool first_order, double edge_gain_db)
    {
        const hp n_tau = hp(K) * (K - 1) / (2 * (tau - 1));
        hp bits = n_tau * path_bits(M, tau, snr, edge_gain_db);
        if (first_order)
            bits += (hp(K) * M - n_tau * tau) * path_bits(M, 1, snr, edge_gain_db);
        return bits.convert_to<double>();
    }
} // namespace mumor::oracle
