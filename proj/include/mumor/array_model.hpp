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

#ifndef MUMOR_ARRAY_MODEL_HPP
#define MUMOR_ARRAY_MODEL_HPP

#include "mumor/types.hpp"

namespace mumor
{
    // Placement of a surface in the 2-D plane. Only used to derive inter-surface
    // link geometry; the first element sits at (x_m, y_m) and the array axis
    // points along orientation_rad.
    struct Pose
    {
        double x_m = 0.0;
        double y_m = 0.0;
        double orientation_rad = 0.0;
    };

    // Uniform linear array of passive reflecting elements
    class UlaSurface
    {
    public:
        // element_count >= 1, spacing_wavelengths > 0 (element spacing d / lambda),
        // path_loss >= 0 is an amplitude factor applied once per reflection,
        // wavelength_m > 0 only matters for exact inter-surface distances.
        explicit UlaSurface(int element_count,
                            double spacing_wavelengths = 0.5,
                            double path_loss = 1.0,
                            double wavelength_m = 1.0,
                            Pose pose = {});

        int element_count() const noexcept { return element_count_; }
        double spacing_wavelengths() const noexcept { return spacing_; }
        double path_loss() const noexcept { return path_loss_; }
        double wavelength_m() const noexcept { return wavelength_; }
        const Pose &pose() const noexcept { return pose_; }

        // Array length in wavelengths, L = M * d / lambda
        double relative_length() const noexcept { return element_count_ * spacing_; }

        // Physical element spacing in meters
        double spacing_m() const noexcept { return spacing_ * wavelength_; }

    private:
        int element_count_;
        double spacing_;
        double path_loss_;
        double wavelength_;
        Pose pose_;
    };

    // a(phi): entry m (0-based) is exp(-j 2 pi dr cos(phi) m)
    ComplexVector steering_vector(Angle phi, const UlaSurface &surface);

    // a_C(out, in) = l_IRS * a(out) .* a(in)
    ComplexVector combined_steering(Angle phi_out, Angle phi_in, const UlaSurface &surface);

    // Array factor sum_{m=0}^{M-1} exp(-j 2 pi dr f_cc m), evaluated by direct summation
    Complex beampattern(double f_cc, const UlaSurface &surface);

    // |sin(pi f_cc L) / sin(pi f_cc L / M)|, with the removable singularities
    // (f_cc a multiple of 1/dr) resolved to M. Used only as a magnitude cross-check.
    double beampattern_magnitude_closed_form(double f_cc, const UlaSurface &surface);
} // namespace mumor

#endif
