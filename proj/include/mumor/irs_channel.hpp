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

#ifndef MUMOR_IRS_CHANNEL_HPP
#define MUMOR_IRS_CHANNEL_HPP

#include "mumor/array_model.hpp"

#include <span>

namespace mumor
{
    // Weight vector w of one surface. The gain of a hop is w^H a_C, so the
    // reflection coefficients actually applied by the elements (the diagonal of
    // W) are conj(w).
    class WeightVector
    {
    public:
        WeightVector() = default;
        explicit WeightVector(ComplexVector values);

        // Unit-modulus weights from element phases in radians
        static WeightVector from_phases(const Eigen::VectorXd &phases);
        static WeightVector ones(int element_count);

        const ComplexVector &values() const noexcept { return values_; }
        Eigen::Index size() const noexcept { return values_.size(); }

        // diag(W) = conj(w)
        ComplexVector reflection_coefficients() const { return values_.conjugate(); }

        bool is_unit_modulus(double tol = 1e-12) const;

    private:
        ComplexVector values_;
    };

    // One Tx/Rx pair served through a single surface
    struct TransceiverPair
    {
        Angle aoa; // Tx -> surface, phi_in
        Angle aod; // surface -> Rx, phi_out
        double power_w = 1.0;
    };

    // Line-of-sight link between the first elements of two surfaces
    struct InterIrsLink
    {
        Angle departure;        // AOD at the source surface
        Angle arrival;          // AOA at the destination surface
        double distance_m;      // first element to first element
        double edge_loss = 1.0; // amplitude factor per traversal

        // Dihedral angle between the two arrays, arrival - departure
        double dihedral_rad() const noexcept { return arrival.rad() - departure.rad(); }

        // Same link traversed in the opposite direction; its far-field channel is the transpose
        InterIrsLink reversed() const noexcept { return {arrival, departure, distance_m, edge_loss}; }
    };

    // Derives departure/arrival angles and distance from the poses of the two surfaces.
    // Throws GeometryError if the surfaces are collinear or the source array is
    // mirrored with respect to the exact construction.
    InterIrsLink link_from_poses(const UlaSurface &src, const UlaSurface &dst, double edge_loss = 1.0);

    // N x N channel, entry (v, u) = w^H a_C(aod_v, aoa_u), assembled as A_out^T diag(conj(w)) A_in
    ComplexMatrix single_irs_channel(const UlaSurface &surface, const WeightVector &w,
                                     std::span<const TransceiverPair> pairs);

    // Same channel assembled entry by entry from combined steering vectors
    ComplexMatrix single_irs_channel_entrywise(const UlaSurface &surface, const WeightVector &w,
                                               std::span<const TransceiverPair> pairs);

    // Far-field rank-one channel E = edge_loss * a_dst(arrival) a_src(departure)^T,
    // size M_dst x M_src. The constant phase exp(-j k D11) is dropped.
    ComplexMatrix inter_irs_channel_farfield(const InterIrsLink &link, const UlaSurface &src, const UlaSurface &dst);

    // Exact element-to-element distances D_ij in meters, size M_dst x M_src
    Eigen::MatrixXd inter_irs_distances(const InterIrsLink &link, const UlaSurface &src, const UlaSurface &dst);

    // Exact channel, entry (j, i) = edge_loss * exp(-j k D_ij). Keeps the absolute
    // phase, and physical element ordering makes it the complex conjugate of the
    // far-field form up to that phase: E_exact ~ exp(-j k D11) conj(E_farfield).
    ComplexMatrix inter_irs_channel_exact(const InterIrsLink &link, const UlaSurface &src, const UlaSurface &dst);
} // namespace mumor

#endif
