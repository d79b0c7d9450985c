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

// Reference computations for tests and `mumor validate`. Everything here is
// written with plain loops over std::complex and never calls the library code
// it is compared against; inputs are plain numbers so callers cannot pass
// library-computed intermediates by accident.

#ifndef MUMOR_ORACLES_HPP
#define MUMOR_ORACLES_HPP

#include <complex>
#include <string>
#include <utility>
#include <vector>

namespace mumor::oracle
{
    using cplx = std::complex<double>;
    using Grid = std::vector<std::vector<cplx>>; // [row][column]

    struct Surface
    {
        int M;
        double dr;            // spacing in wavelengths
        double l;             // amplitude loss per reflection
        std::vector<cplx> w;  // weight vector, reflection coefficients are conj(w)
    };

    // Transceiver entering at one surface and leaving at one surface
    struct Pair
    {
        int entry;
        double aoa_rad;
        int exit;
        double aod_rad;
    };

    // Far-field link from surface 0 to surface 1
    struct Link
    {
        double departure_rad; // at surface 0
        double arrival_rad;   // at surface 1
        double amplitude;
    };

    // exp(-j 2 pi dr cos(phi) m), m = 0..M-1
    std::vector<cplx> steering(double phi_rad, int M, double dr);

    // Two surfaces: first-order terms of both surfaces, plus (if requested) the two
    // second-order terms 0 -> 1 and 1 -> 0, each written out as explicit double sums
    Grid two_surface_channel(const Surface &s0, const Surface &s1, const Link &link, const std::vector<Pair> &pairs,
                             bool second_order);

    // Every surface sequence of length `order` (brute-force filtered from K^order),
    // each summed over all element index tuples. `edges[a][b]` holds the far-field
    // link a -> b as {departure at a, arrival at b, amplitude}; amplitude 0 = absent.
    Grid element_sum_channel(const std::vector<Surface> &surfaces, const std::vector<std::vector<Link>> &edges,
                             const std::vector<Pair> &pairs, int order, bool allow_revisit);

    // All sequences over [0, K) of length `order` with distinct neighbours (and all
    // distinct entries when !allow_revisit), by filtering the K^order candidates
    std::vector<std::vector<int>> brute_force_sequences(int K, int order, bool allow_revisit);

    // Element-to-element distances D[j][i] by the law of cosines, destination array on
    // the x axis, source array leaving its first element at angle pi + (arrival - departure)
    std::vector<std::vector<double>> link_distances(double departure_rad, double arrival_rad, double d11,
                                                    int M_src, double spacing_src, int M_dst, double spacing_dst);

    // Singular values, descending, of a small complex matrix via one-sided Jacobi
    std::vector<double> singular_values(const Grid &A);

    // User i: log2(1 + P |H_ii|^2 / (N0 + P sum_{u != i} |H_iu|^2)), term by term
    std::vector<double> sinr_rates(const Grid &H, double P, double N0);

    // Zero-forcing rates of an invertible 2 x 2 channel, from the explicit inverse
    std::pair<double, double> zf_rates_2x2(const Grid &H, double P, double N0);

    // Empty if `paths` are simple paths of tau nodes that cover every edge of K_n exactly once
    std::string check_path_cover(int K, int tau, const std::vector<std::vector<int>> &paths);

    // Positions (aoa, aod) in radians where a second pair gets full MRC gain and is nulled
    // with the fixed pair, found by scanning the beampattern and refining each null
    std::vector<std::pair<double, double>> searched_positions(double aoa_rad, double aod_rad, int M, double dr);

    // Bounds in 50-digit binary floating point, returned as double
    double bound_lg_hp(int M, int K, double snr, double edge_gain_db);
    double bound_ng_hp(int M, int K, int pairs_per_surface, double snr);
    double bound_cg_equal_hp(int M, int K, int tau, double snr, bool first_order, double edge_gain_db);
} // namespace mumor::oracle

#endif
