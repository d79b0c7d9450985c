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

#include "mumor/irs_channel.hpp"

#include <cmath>
#include <sstream>

namespace mumor
{
    WeightVector::WeightVector(ComplexVector values) : values_(std::move(values))
    {
        require_finite(values_, "WeightVector");
    }

    WeightVector WeightVector::from_phases(const Eigen::VectorXd &phases)
    {
        ComplexVector v(phases.size());
        for (Eigen::Index m = 0; m < phases.size(); ++m)
            v(m) = std::polar(1.0, phases(m));
        return WeightVector(std::move(v));
    }

    WeightVector WeightVector::ones(int element_count)
    {
        return WeightVector(ComplexVector::Ones(element_count));
    }

    bool WeightVector::is_unit_modulus(double tol) const
    {
        for (Eigen::Index m = 0; m < values_.size(); ++m)
            if (std::abs(std::abs(values_(m)) - 1.0) > tol)
                return false;
        return true;
    }

    namespace
    {
        void check_link(const InterIrsLink &link, const UlaSurface &src, const UlaSurface &dst)
        {
            if (!(link.distance_m > 0.0) || !std::isfinite(link.distance_m))
                throw GeometryError("InterIrsLink: distance must be positive and finite.");
            if (!(link.edge_loss >= 0.0) || !std::isfinite(link.edge_loss))
                throw std::invalid_argument("InterIrsLink: edge_loss must be non-negative and finite.");
            if (std::abs(src.wavelength_m() - dst.wavelength_m()) > 1e-12 * src.wavelength_m())
                throw std::invalid_argument("InterIrsLink: both surfaces must use the same wavelength.");
        }

        double wrap_pi(double x)
        {
            x = std::fmod(x + kPi, kTwoPi);
            if (x < 0.0)
                x += kTwoPi;
            return x - kPi;
        }
    } // namespace

    InterIrsLink link_from_poses(const UlaSurface &src, const UlaSurface &dst, double edge_loss)
    {
        // Work in the frame of the destination array: first element at the
        // origin, axis along +x.
        const Pose &a = src.pose();
        const Pose &b = dst.pose();
        const double ub_x = std::cos(b.orientation_rad), ub_y = std::sin(b.orientation_rad);
        const double vx = a.x_m - b.x_m, vy = a.y_m - b.y_m;
        const double distance = std::hypot(vx, vy);
        if (!(distance > 0.0))
            throw GeometryError("link_from_poses: surfaces share the first-element position.");

        double arrival = std::atan2(ub_x * vy - ub_y * vx, ub_x * vx + ub_y * vy);
        double src_axis = wrap_pi(a.orientation_rad - b.orientation_rad);
        if (arrival < 0.0)
        {
            // Mirror the frame so the source lies on the +y side
            arrival = -arrival;
            src_axis = -src_axis;
        }
        if (arrival < 1e-12 || arrival > kPi - 1e-12)
            throw GeometryError("link_from_poses: source array lies on the axis of the destination array.");

        // The exact construction places the source axis at (arrival - departure + pi)
        const double departure = wrap_pi(arrival + kPi - src_axis);
        if (departure < 0.0)
            throw GeometryError("link_from_poses: source array orientation is mirrored with respect to the link.");

        return {Angle::radians(departure), Angle::radians(arrival), distance, edge_loss};
    }

    ComplexMatrix single_irs_channel(const UlaSurface &surface, const WeightVector &w,
                                     std::span<const TransceiverPair> pairs)
    {
        const int M = surface.element_count();
        require_size(w.size(), M, "single_irs_channel: weight vector");
        if (pairs.empty())
            throw DimensionError("single_irs_channel: at least one transceiver pair is required.");

        const auto N = static_cast<Eigen::Index>(pairs.size());
        ComplexMatrix A_in(M, N), A_out(M, N);
        for (Eigen::Index u = 0; u < N; ++u)
        {
            A_in.col(u) = steering_vector(pairs[u].aoa, surface);
            A_out.col(u) = steering_vector(pairs[u].aod, surface);
        }
        ComplexMatrix H = surface.path_loss() * (A_out.transpose() * w.reflection_coefficients().asDiagonal() * A_in);
        return H;
    }

    ComplexMatrix single_irs_channel_entrywise(const UlaSurface &surface, const WeightVector &w,
                                               std::span<const TransceiverPair> pairs)
    {
        require_size(w.size(), surface.element_count(), "single_irs_channel_entrywise: weight vector");
        if (pairs.empty())
            throw DimensionError("single_irs_channel_entrywise: at least one transceiver pair is required.");

        const auto N = static_cast<Eigen::Index>(pairs.size());
        ComplexMatrix H(N, N);
        for (Eigen::Index v = 0; v < N; ++v)
            for (Eigen::Index u = 0; u < N; ++u)
                H(v, u) = w.values().dot(combined_steering(pairs[v].aod, pairs[u].aoa, surface)); // dot() conjugates w
        return H;
    }

    ComplexMatrix inter_irs_channel_farfield(const InterIrsLink &link, const UlaSurface &src, const UlaSurface &dst)
    {
        check_link(link, src, dst);
        return link.edge_loss * (steering_vector(link.arrival, dst) * steering_vector(link.departure, src).transpose());
    }

    Eigen::MatrixXd inter_irs_distances(const InterIrsLink &link, const UlaSurface &src, const UlaSurface &dst)
    {
        check_link(link, src, dst);
        const double D11 = link.distance_m;
        const double eps = link.arrival.rad();
        const double mu = link.dihedral_rad();
        const double da = src.spacing_m(), db = dst.spacing_m();

        Eigen::MatrixXd D(dst.element_count(), src.element_count());
        for (int i = 0; i < src.element_count(); ++i)
        {
            const double a = da * i;
            const double num = D11 * std::sin(eps) - a * std::sin(mu);
            if (!(num > 0.0))
            {
                std::ostringstream msg;
                msg << "inter_irs_distances: element " << i
                    << " of the source surface is not in front of the destination surface (D11 too small).";
                throw GeometryError(msg.str());
            }
            for (int j = 0; j < dst.element_count(); ++j)
            {
                const double den = D11 * std::cos(eps) - a * std::cos(mu) - db * j;
                const double eps_ij = std::atan2(num, den); // in (0, pi) since num > 0
                D(j, i) = num / std::sin(eps_ij);
            }
        }
        return D;
    }

    ComplexMatrix inter_irs_channel_exact(const InterIrsLink &link, const UlaSurface &src, const UlaSurface &dst)
    {
        const Eigen::MatrixXd D = inter_irs_distances(link, src, dst);
        const double k = kTwoPi / src.wavelength_m();
        ComplexMatrix E(D.rows(), D.cols());
        for (Eigen::Index j = 0; j < D.rows(); ++j)
            for (Eigen::Index i = 0; i < D.cols(); ++i)
                E(j, i) = link.edge_loss * std::polar(1.0, -k * D(j, i));
        return E;
    }
} // namespace mumor
