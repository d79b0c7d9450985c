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

#include "mumor/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace mumor
{
    RateParams::RateParams(double transmit_power_w_, double noise_power_w_)
        : transmit_power_w(transmit_power_w_), noise_power_w(noise_power_w_)
    {
        if (!(transmit_power_w >= 0.0) || !std::isfinite(transmit_power_w))
            throw std::invalid_argument("RateParams: transmit power must be non-negative and finite.");
        if (!(noise_power_w > 0.0) || !std::isfinite(noise_power_w))
            throw std::invalid_argument("RateParams: noise power must be positive and finite.");
    }

    RateParams RateParams::from_snr_db(double snr_db)
    {
        return RateParams(db_to_power(snr_db), 1.0);
    }

    double logdet_capacity(const ComplexMatrix &H, const RateParams &params)
    {
        if (H.rows() != H.cols())
            throw DimensionError("logdet_capacity: channel must be square.");
        require_finite(H, "logdet_capacity: channel");
        if (H.size() == 0)
            return 0.0;

        const ComplexMatrix gram = H * H.adjoint();
        Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(gram, Eigen::EigenvaluesOnly);
        double bits = 0.0;
        for (Eigen::Index k = 0; k < eig.eigenvalues().size(); ++k)
            bits += std::log2(1.0 + params.snr() * std::max(eig.eigenvalues()(k), 0.0));
        return bits;
    }

    SumRate sinr_sum_rate(const ComplexMatrix &H, const RateParams &params)
    {
        if (H.rows() != H.cols())
            throw DimensionError("sinr_sum_rate: channel must be square.");
        require_finite(H, "sinr_sum_rate: channel");

        SumRate out;
        const double P = params.transmit_power_w;
        for (Eigen::Index i = 0; i < H.rows(); ++i)
        {
            const double own = std::norm(H(i, i));
            double leak = 0.0;
            for (Eigen::Index u = 0; u < H.cols(); ++u)
                if (u != i)
                    leak += std::norm(H(i, u));
            const double r = std::log2(1.0 + P * own / (params.noise_power_w + P * leak));
            out.per_user.push_back(r);
            out.sum += r;
        }
        return out;
    }

    double single_irs_bound(int element_count, int pair_count, const RateParams &params)
    {
        if (element_count < 1 || pair_count < 0)
            throw std::invalid_argument("single_irs_bound: element_count must be >= 1 and pair_count >= 0.");
        if (pair_count > element_count)
        {
            std::ostringstream msg;
            msg << "single_irs_bound: " << pair_count << " pairs exceed " << element_count
                << " elements; inter-user interference is unavoidable.";
            throw BoundUndefinedError(msg.str());
        }
        const double M = element_count;
        return pair_count * std::log2(1.0 + params.snr() * M * M);
    }
} // namespace mumor
