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

#ifndef MUMOR_BEAMFORMING_HPP
#define MUMOR_BEAMFORMING_HPP

#include "mumor/irs_channel.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace mumor
{
    // Phase-only weights that put every element of the served pair in phase
    struct MrcDesign
    {
        double zeta;        // alignment constant, -cos(aoa) - cos(aod) + offset / dr
        int offset;         // integer 2 pi ambiguity index
        WeightVector weights;
    };

    // Maximal ratio combining for `pair`. Weight m is exp(j 2 pi dr zeta m), so the
    // element reflection phase is -2 pi dr zeta m and |w^H a_C(aod, aoa)| = M l_IRS.
    // The offset defaults to 0, the value that minimizes |zeta + cos(aoa) + cos(aod)|.
    MrcDesign mrc_weights(const TransceiverPair &pair, const UlaSurface &surface,
                          std::optional<int> offset = std::nullopt);

    struct OptimalPosition
    {
        Angle aoa;
        Angle aod;
        int null_index; // j in 1..M-1: the pair sits on the j-th null of the fixed pair's pattern
    };

    // Transceiver positions that reuse the MRC weights of `fixed` at full gain while
    // being mutually nulled with it. For every null index j and every 1/dr image
    // with direction cosines inside [-1, 1]:
    //   cos(aod_j) = cos(aod_i) + j / L  (mod 1/dr)
    //   cos(aoa_j) = cos(aoa_i) - j / L  (mod 1/dr)
    // Sorted by ascending aod, then aoa. Empty when L <= 1 yields no interior null.
    std::vector<OptimalPosition> optimal_positions(const TransceiverPair &fixed, const UlaSurface &surface);

    struct InterferenceFreeSolution
    {
        WeightVector weights;
        double residual;  // max |a_C(aod_v, aoa_u)^H w - conj(f_vu)| over all N^2 constraints
        bool feasible;    // M >= N^2
        int rank;         // numerical rank of the constraint matrix
    };

    // Minimum-norm weights meeting w^H a_C(aod_v, aoa_u) = f_vu with f_vv = responses(v)
    // and f_vu = 0 for u != v, via a complete orthogonal decomposition. Never throws on
    // rank; use when the residual itself is the quantity of interest.
    InterferenceFreeSolution lcmv_solve(std::span<const TransceiverPair> pairs, const UlaSurface &surface,
                                        const std::optional<ComplexVector> &responses = std::nullopt);

    // As lcmv_solve, but throws RankDeficientError when M >= N^2 and the constraints
    // still cannot be met (rank below N^2 and residual above 1e-8): the angle set is
    // geometrically degenerate. Responses default to M for every pair.
    InterferenceFreeSolution interference_free_weights(std::span<const TransceiverPair> pairs,
                                                       const UlaSurface &surface,
                                                       const std::optional<ComplexVector> &responses = std::nullopt);

    // Residual of arbitrary weights against the interference-free constraints
    double constraint_residual(const WeightVector &w, std::span<const TransceiverPair> pairs,
                               const UlaSurface &surface, const ComplexVector &responses);

    struct PhaseOnlyProjection
    {
        WeightVector weights; // each entry projected to unit modulus
        double residual_before;
        double residual_after;
    };

    // Keeps the phase of every LCMV weight and drops its amplitude
    PhaseOnlyProjection phase_only_projection(const InterferenceFreeSolution &solution,
                                              std::span<const TransceiverPair> pairs, const UlaSurface &surface,
                                              const std::optional<ComplexVector> &responses = std::nullopt);

    // Zero-forcing joint decoding of y = H s + n with the pseudo-inverse G = H^+.
    // Stream i gets log2(1 + P |(GH)_ii|^2 / (P sum_k!=i |(GH)_ik|^2 + N0 ||g_i||^2)),
    // which is log2(1 + P / (N0 [(H^H H)^-1]_ii)) for invertible H. Streams outside the
    // range of the pseudo-inverse get rate 0.
    std::vector<double> zf_decode(const ComplexMatrix &H, double noise_power, double transmit_power);

    // Unit-modulus weights with i.i.d. uniform phases, deterministic under `seed`
    WeightVector random_weights(int element_count, std::uint64_t seed);
} // namespace mumor

#endif
