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

#include "mumor/array_model.hpp"

#include <cmath>
#include <sstream>

namespace mumor
{
    UlaSurface::UlaSurface(int element_count, double spacing_wavelengths, double path_loss,
                           double wavelength_m, Pose pose)
        : element_count_(element_count), spacing_(spacing_wavelengths), path_loss_(path_loss),
          wavelength_(wavelength_m), pose_(pose)
    {
        if (element_count_ < 1)
            throw std::invalid_argument("UlaSurface: element_count must be at least 1.");
        if (!(spacing_ > 0.0) || !std::isfinite(spacing_))
            throw std::invalid_argument("UlaSurface: spacing_wavelengths must be positive and finite.");
        if (!(path_loss_ >= 0.0) || !std::isfinite(path_loss_))
            throw std::invalid_argument("UlaSurface: path_loss must be non-negative and finite.");
        if (!(wavelength_ > 0.0) || !std::isfinite(wavelength_))
            throw std::invalid_argument("UlaSurface: wavelength_m must be positive and finite.");
        if (!std::isfinite(pose_.x_m) || !std::isfinite(pose_.y_m) || !std::isfinite(pose_.orientation_rad))
            throw std::invalid_argument("UlaSurface: pose must be finite.");
    }

    ComplexVector steering_vector(Angle phi, const UlaSurface &surface)
    {
        const int M = surface.element_count();
        const double step = -kTwoPi * surface.spacing_wavelengths() * phi.cos();
        ComplexVector a(M);
        for (int m = 0; m < M; ++m)
            a(m) = std::polar(1.0, step * m);
        return a;
    }

    ComplexVector combined_steering(Angle phi_out, Angle phi_in, const UlaSurface &surface)
    {
        ComplexVector a = steering_vector(phi_out, surface).cwiseProduct(steering_vector(phi_in, surface));
        return surface.path_loss() * a;
    }

    Complex beampattern(double f_cc, const UlaSurface &surface)
    {
        if (!std::isfinite(f_cc))
            throw std::invalid_argument("beampattern: f_cc must be finite.");
        const double step = -kTwoPi * surface.spacing_wavelengths() * f_cc;
        Complex sum = 0.0;
        for (int m = 0; m < surface.element_count(); ++m)
            sum += std::polar(1.0, step * m);
        return sum;
    }

    double beampattern_magnitude_closed_form(double f_cc, const UlaSurface &surface)
    {
        const double L = surface.relative_length();
        const double M = surface.element_count();
        const double den = std::sin(kPi * f_cc * L / M);
        if (std::abs(den) < 1e-14)
            return M;
        return std::abs(std::sin(kPi * f_cc * L) / den);
    }
} // namespace mumor
