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

#ifndef MUMOR_CAPACITY_HPP
#define MUMOR_CAPACITY_HPP

#include "mumor/types.hpp"

#include <vector>

namespace mumor
{
    // All rates are in bits per channel use (log base 2)
    struct RateParams
    {
        double transmit_power_w; // per user
        double noise_power_w;

        RateParams(double transmit_power_w, double noise_power_w);

        // Unit noise power and the given SNR P_T / N0 in dB
        static RateParams from_snr_db(double snr_db);

        double snr() const noexcept { return transmit_power_w / noise_power_w; }
    };

    // log2 det(I + (P_T / N0) H H^H), from the eigenvalues of H H^H
    double logdet_capacity(const ComplexMatrix &H, const RateParams &params);

    struct SumRate
    {
        std::vector<double> per_user;
        double sum = 0.0;
    };

    // User i: log2(1 + P |H_ii|^2 / (N0 + P sum_{u != i} |H_iu|^2))
    SumRate sinr_sum_rate(const ComplexMatrix &H, const RateParams &params);

    // N log2(1 + P_T M^2 / N0); throws BoundUndefinedError when N > M
    double single_irs_bound(int element_count, int pair_count, const RateParams &params);
} // namespace mumor

#endif
