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

#include "mumor/types.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace mumor
{
    namespace
    {
        // Values this close outside [0, pi] are rounding noise from acos/atan2
        constexpr double kAngleSlack = 1e-12;
    } // namespace

    Angle Angle::radians(double value)
    {
        if (!std::isfinite(value))
            throw std::invalid_argument("Angle must be finite.");
        if (value < -kAngleSlack || value > kPi + kAngleSlack)
        {
            std::ostringstream msg;
            msg << "Angle " << value * 180.0 / kPi << " deg is outside the physical range [0, 180] deg.";
            throw std::invalid_argument(msg.str());
        }
        return Angle(std::clamp(value, 0.0, kPi));
    }

    Angle Angle::degrees(double value)
    {
        return radians(deg_to_rad(value));
    }

    double deg_to_rad(double deg) noexcept { return deg * kPi / 180.0; }
    double rad_to_deg(double rad) noexcept { return rad * 180.0 / kPi; }

    double db_to_power(double db) noexcept { return std::pow(10.0, db / 10.0); }
    double db_to_amplitude(double db) noexcept { return std::pow(10.0, db / 20.0); }

    void require_finite(const ComplexMatrix &m, std::string_view what)
    {
        if (!m.allFinite())
            throw DimensionError(std::string(what) + " contains NaN or infinite entries.");
    }

    void require_finite(const ComplexVector &v, std::string_view what)
    {
        if (!v.allFinite())
            throw DimensionError(std::string(what) + " contains NaN or infinite entries.");
    }

    void require_size(Eigen::Index actual, Eigen::Index expected, std::string_view what)
    {
        if (actual != expected)
        {
            std::ostringstream msg;
            msg << what << ": expected size " << expected << ", got " << actual << ".";
            throw DimensionError(msg.str());
        }
    }
} // namespace mumor
