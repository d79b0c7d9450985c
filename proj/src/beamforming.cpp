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

#include "mumor/beamforming.hpp"
#include "mumor/rng.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace mumor
{
    MrcDesign mrc_weights(const TransceiverPair &pair, const UlaSurface &surface, std::optional<int> offset)
    {
        const double dr = surface.spacing_wavelengths();
        const int n = offset.value_or(0);
        const double zeta = -pair.aoa.cos() - pair.aod.cos() + n / dr;

        Eigen::VectorXd phases(surface.element_count());
        for (int m = 0; m < surface.element_count(); ++m)
            phases(m) = kTwoPi * dr * zeta * m;
        return {zeta, n, WeightVector::from_phases(phases)};
    }

    namespace
    {
        constexpr double kCosSlack = 1e-12;

        // All values base + k / dr (k integer) inside [-1, 1]
        std::vector<double> cosine_images(double base, double dr)
        {
            std::vector<double> out;
            const double period = 1.0 / dr;
            const auto k_lo = static_cast<long>(std::ceil((-1.0 - kCosSlack - base) / period));
            const auto k_hi = static_cast<long>(std::floor((1.0 + kCosSlack - base) / period));
            for (long k = k_lo; k <= k_hi; ++k)
                out.push_back(std::clamp(base + k * period, -1.0, 1.0));
            return out;
        }
    } // namespace

    std::vector<OptimalPosition> optimal_positions(const TransceiverPair &fixed, const UlaSurface &surface)
    {
        const int M = surface.element_count();
        const double dr = surface.spacing_wavelengths();
        const double L = surface.relative_length();
        const double cos_aoa = fixed.aoa.cos();
        const double cos_aod = fixed.aod.cos();

        struct Candidate
        {
            double cos_aoa, cos_aod;
            int j;
        };
        std::vector<Candidate> found;

        // j = 0 (mod M) is the main lobe of the fixed pair itself
        for (int j = 1; j < M; ++j)
            for (double cb : cosine_images(cos_aod + j / L, dr))
                for (double ca : cosine_images(cos_aoa - j / L, dr))
                {
                    if (std::abs(ca - cos_aoa) < 1e-12 && std::abs(cb - cos_aod) < 1e-12)
                        continue;
                    const bool duplicate = std::any_of(found.begin(), found.end(), [&](const Candidate &c) {
                        return std::abs(c.cos_aoa - ca) < 1e-12 && std::abs(c.cos_aod - cb) < 1e-12;
                    });
                    if (!duplicate)
                        found.push_back({ca, cb, j});
                }

        std::vector<OptimalPosition> out;
        out.reserve(found.size());
        for (const auto &c : found)
            out.push_back({Angle::radians(std::acos(c.cos_aoa)), Angle::radians(std::acos(c.cos_aod)), c.j});
        std::sort(out.begin(), out.end(), [](const OptimalPosition &a, const OptimalPosition &b) {
            if (a.aod.rad() != b.aod.rad())
                return a.aod.rad() < b.aod.rad();
            return a.aoa.rad() < b.aoa.rad();
        });
        return out;
    }

    namespace
    {
        // Row (v * N + u) is a_C(aod_v, aoa_u)^H, so that row * w = conj(w^H a_C)
        ComplexMatrix constraint_matrix(std::span<const TransceiverPair> pairs, const UlaSurface &surface)
        {
            const auto N = static_cast<Eigen::Index>(pairs.size());
            ComplexMatrix C(N * N, surface.element_count());
            for (Eigen::Index v = 0; v < N; ++v)
                for (Eigen::Index u = 0; u < N; ++u)
                    C.row(v * N + u) = combined_steering(pairs[v].aod, pairs[u].aoa, surface).adjoint();
            return C;
        }

        ComplexVector constraint_rhs(std::span<const TransceiverPair> pairs, const UlaSurface &surface,
                                     const std::optional<ComplexVector> &responses)
        {
            const auto N = static_cast<Eigen::Index>(pairs.size());
            ComplexVector f = responses.value_or(ComplexVector::Constant(N, Complex(surface.element_count(), 0.0)));
            require_size(f.size(), N, "interference-free responses");
            require_finite(f, "interference-free responses");
            ComplexVector rhs = ComplexVector::Zero(N * N);
            for (Eigen::Index v = 0; v < N; ++v)
                rhs(v * N + v) = std::conj(f(v));
            return rhs;
        }

        double max_abs(const ComplexVector &x)
        {
            return x.size() == 0 ? 0.0 : x.cwiseAbs().maxCoeff();
        }
    } // namespace

    InterferenceFreeSolution lcmv_solve(std::span<const TransceiverPair> pairs, const UlaSurface &surface,
                                        const std::optional<ComplexVector> &responses)
    {
        if (pairs.empty())
            throw DimensionError("lcmv_solve: at least one transceiver pair is required.");
        const ComplexMatrix C = constraint_matrix(pairs, surface);
        const ComplexVector rhs = constraint_rhs(pairs, surface, responses);

        Eigen::CompleteOrthogonalDecomposition<ComplexMatrix> cod(C);
        ComplexVector w = cod.solve(rhs);
        const double residual = max_abs(C * w - rhs);
        const auto N = static_cast<long>(pairs.size());
        return {WeightVector(std::move(w)), residual, surface.element_count() >= N * N, static_cast<int>(cod.rank())};
    }

    InterferenceFreeSolution interference_free_weights(std::span<const TransceiverPair> pairs,
                                                       const UlaSurface &surface,
                                                       const std::optional<ComplexVector> &responses)
    {
        InterferenceFreeSolution s = lcmv_solve(pairs, surface, responses);
        const auto constraints = static_cast<int>(pairs.size() * pairs.size());
        if (s.feasible && s.rank < constraints && s.residual > 1e-8)
        {
            std::ostringstream msg;
            msg << "interference_free_weights: constraint matrix has rank " << s.rank << " < " << constraints
                << " and residual " << s.residual << "; the angle set is degenerate.";
            throw RankDeficientError(msg.str());
        }
        return s;
    }

    double constraint_residual(const WeightVector &w, std::span<const TransceiverPair> pairs,
                               const UlaSurface &surface, const ComplexVector &responses)
    {
        require_size(w.size(), surface.element_count(), "constraint_residual: weight vector");
        const ComplexMatrix C = constraint_matrix(pairs, surface);
        return max_abs(C * w.values() - constraint_rhs(pairs, surface, responses));
    }

    PhaseOnlyProjection phase_only_projection(const InterferenceFreeSolution &solution,
                                              std::span<const TransceiverPair> pairs, const UlaSurface &surface,
                                              const std::optional<ComplexVector> &responses)
    {
        const ComplexVector &w = solution.weights.values();
        ComplexVector p(w.size());
        for (Eigen::Index m = 0; m < w.size(); ++m)
            p(m) = std::abs(w(m)) > 0.0 ? w(m) / std::abs(w(m)) : Complex(1.0, 0.0);

        const auto N = static_cast<Eigen::Index>(pairs.size());
        const ComplexVector f = responses.value_or(ComplexVector::Constant(N, Complex(surface.element_count(), 0.0)));
        WeightVector projected(std::move(p));
        const double after = constraint_residual(projected, pairs, surface, f);
        return {std::move(projected), solution.residual, after};
    }

    std::vector<double> zf_decode(const ComplexMatrix &H, double noise_power, double transmit_power)
    {
        if (H.rows() != H.cols())
            throw DimensionError("zf_decode: channel must be square.");
        require_finite(H, "zf_decode: channel");
        if (!(noise_power > 0.0) || !(transmit_power >= 0.0))
            throw std::invalid_argument("zf_decode: noise power must be positive and transmit power non-negative.");

        const Eigen::Index N = H.rows();
        Eigen::JacobiSVD<ComplexMatrix> svd(H, Eigen::ComputeFullU | Eigen::ComputeFullV);
        const Eigen::VectorXd &s = svd.singularValues();
        const double tol = (N > 0 && s.size() > 0 ? s(0) : 0.0) * static_cast<double>(N) * 1e-13;
        Eigen::VectorXd s_inv = Eigen::VectorXd::Zero(s.size());
        for (Eigen::Index k = 0; k < s.size(); ++k)
            if (s(k) > tol && s(k) > 0.0)
                s_inv(k) = 1.0 / s(k);
        const ComplexMatrix G = svd.matrixV() * s_inv.asDiagonal() * svd.matrixU().adjoint();
        const ComplexMatrix T = G * H;

        std::vector<double> rates(static_cast<std::size_t>(N), 0.0);
        for (Eigen::Index i = 0; i < N; ++i)
        {
            const double own = std::norm(T(i, i));
            if (std::sqrt(own) < 1e-9)
                continue;
            const double leak = T.row(i).squaredNorm() - own;
            const double denom = transmit_power * std::max(leak, 0.0) + noise_power * G.row(i).squaredNorm();
            rates[static_cast<std::size_t>(i)] = std::log2(1.0 + transmit_power * own / denom);
        }
        return rates;
    }

    WeightVector random_weights(int element_count, std::uint64_t seed)
    {
        if (element_count < 1)
            throw std::invalid_argument("random_weights: element_count must be at least 1.");
        auto gen = stream_generator(seed, 0);
        Eigen::VectorXd phases(element_count);
        for (int m = 0; m < element_count; ++m)
            phases(m) = kTwoPi * (1.0 - uniform01(gen)); // (0, 2 pi]
        return WeightVector::from_phases(phases);
    }
} // namespace mumor
