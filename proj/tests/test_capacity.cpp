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
#include "mumor/rng.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace mumor;

namespace
{
    ComplexMatrix random_matrix(std::mt19937_64 &gen, int n)
    {
        ComplexMatrix H(n, n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                H(r, c) = {2.0 * uniform01(gen) - 1.0, 2.0 * uniform01(gen) - 1.0};
        return H;
    }

    ComplexMatrix random_unitary(std::mt19937_64 &gen, int n)
    {
        return Eigen::HouseholderQR<ComplexMatrix>(random_matrix(gen, n)).householderQ();
    }
} // namespace

TEST_CASE("RateParams")
{
    const RateParams p = RateParams::from_snr_db(10.0);
    CHECK(p.noise_power_w == 1.0);
    CHECK(p.snr() == doctest::Approx(10.0));
    CHECK_THROWS_AS(RateParams(-1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(RateParams(1.0, 0.0), std::invalid_argument);
}

TEST_CASE("log-det capacity")
{
    const RateParams unit(1.0, 1.0);
    CHECK(logdet_capacity(ComplexMatrix::Zero(3, 3), unit) == 0.0);

    const double M = 3.0;
    CHECK(logdet_capacity(M * M * ComplexMatrix::Identity(4, 4), unit) ==
          doctest::Approx(4.0 * std::log2(1.0 + std::pow(M, 4))));

    // Singular values {2, 1} after arbitrary unitary rotations
    auto gen = stream_generator(41, 0);
    ComplexMatrix S = ComplexMatrix::Zero(2, 2);
    S(0, 0) = 2.0;
    S(1, 1) = 1.0;
    const ComplexMatrix H = random_unitary(gen, 2) * S * random_unitary(gen, 2);
    CHECK(logdet_capacity(H, unit) == doctest::Approx(std::log2(5.0) + 1.0).epsilon(1e-12));
    CHECK(logdet_capacity(H, unit) == doctest::Approx(3.3219).epsilon(1e-4));

    for (int t = 0; t < 50; ++t)
    {
        const int n = 1 + t % 5;
        const ComplexMatrix A = random_matrix(gen, n);
        const RateParams p(0.1 + 5.0 * uniform01(gen), 0.5);
        const double c = logdet_capacity(A, p);
        CHECK(c >= 0.0);
        CHECK(logdet_capacity(random_unitary(gen, n) * A * random_unitary(gen, n), p) ==
              doctest::Approx(c).epsilon(1e-10));
        CHECK(logdet_capacity(A, RateParams(2.0 * p.transmit_power_w, 0.5)) >= c);

        double ref = 0.0;
        oracle::Grid g(n, std::vector<oracle::cplx>(n));
        for (int r = 0; r < n; ++r)
            for (int k = 0; k < n; ++k)
                g[r][k] = A(r, k);
        for (double s : oracle::singular_values(g))
            ref += std::log2(1.0 + p.snr() * s * s);
        CHECK(c == doctest::Approx(ref).epsilon(1e-10));
    }
    CHECK_THROWS_AS(logdet_capacity(ComplexMatrix::Ones(2, 3), unit), DimensionError);
}

TEST_CASE("SINR sum rate")
{
    const double M = 4.0;
    const SumRate diag = sinr_sum_rate(M * M * ComplexMatrix::Identity(3, 3), RateParams(2.0, 1.0));
    CHECK(diag.sum == doctest::Approx(3.0 * std::log2(1.0 + 2.0 * std::pow(M, 4))));

    const SumRate equal = sinr_sum_rate(ComplexMatrix::Constant(2, 2, Complex(0.3, 0.4)), RateParams(1e12, 1.0));
    for (double r : equal.per_user)
        CHECK(r == doctest::Approx(1.0).epsilon(1e-9));

    auto gen = stream_generator(42, 0);
    for (int t = 0; t < 50; ++t)
    {
        const ComplexMatrix H = random_matrix(gen, 3);
        oracle::Grid g(3, std::vector<oracle::cplx>(3));
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c)
                g[r][c] = H(r, c);
        const SumRate s = sinr_sum_rate(H, RateParams(3.0, 0.7));
        const auto ref = oracle::sinr_rates(g, 3.0, 0.7);
        double total = 0.0;
        for (int i = 0; i < 3; ++i)
        {
            CHECK(s.per_user[i] == doctest::Approx(ref[i]).epsilon(1e-12));
            total += ref[i];
        }
        CHECK(s.sum == doctest::Approx(total).epsilon(1e-12));
        // Interference can only lower the rate below log-det
        CHECK(s.sum <= logdet_capacity(H, RateParams(3.0, 0.7)) + 1e-9);
    }

    // On a diagonal channel SINR and log-det agree
    const ComplexMatrix D = Eigen::VectorXcd::LinSpaced(4, 1.0, 4.0).asDiagonal();
    CHECK(sinr_sum_rate(D, RateParams(1.0, 1.0)).sum == doctest::Approx(logdet_capacity(D, RateParams(1.0, 1.0))));
}

TEST_CASE("single-surface bound")
{
    CHECK(single_irs_bound(6, 6, RateParams(1.0, 1.0)) == doctest::Approx(31.254).epsilon(1e-4));
    CHECK(single_irs_bound(6, 6, RateParams(0.0, 1.0)) == 0.0);
    CHECK(single_irs_bound(6, 0, RateParams(1.0, 1.0)) == 0.0);
    CHECK_THROWS_AS(single_irs_bound(6, 7, RateParams(1.0, 1.0)), BoundUndefinedError);

    double previous = -1.0;
    for (double snr_db = -30.0; snr_db <= 40.0; snr_db += 5.0)
    {
        const double b = single_irs_bound(8, 5, RateParams::from_snr_db(snr_db));
        CHECK(b > previous);
        previous = b;
    }
    // Reached by a diagonal channel of amplitude M
    const ComplexMatrix H = 6.0 * ComplexMatrix::Identity(6, 6);
    CHECK(logdet_capacity(H, RateParams(1.0, 1.0)) == doctest::Approx(single_irs_bound(6, 6, RateParams(1.0, 1.0))));
}
