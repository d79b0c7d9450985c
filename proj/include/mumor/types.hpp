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

#ifndef MUMOR_TYPES_HPP
#define MUMOR_TYPES_HPP

#include <Eigen/Dense>

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mumor
{
    using Complex = std::complex<double>;
    using ComplexVector = Eigen::VectorXcd;
    using ComplexMatrix = Eigen::MatrixXcd;

    inline constexpr double kPi = std::numbers::pi;
    inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
    inline constexpr Complex kJ{0.0, 1.0};

    // Base class of all errors raised by the library
    class Error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    class DimensionError : public Error { public: using Error::Error; };
    class GeometryError : public Error { public: using Error::Error; };
    class ModelError : public Error { public: using Error::Error; };
    class RankDeficientError : public Error { public: using Error::Error; };
    class BoundUndefinedError : public Error { public: using Error::Error; };
    class DecompositionInfeasibleError : public Error { public: using Error::Error; };
    class SearchExhaustedError : public Error { public: using Error::Error; };

    // Azimuth direction measured from the array axis, so that the projection
    // onto the axis is cos(angle). Physical directions lie in [0, pi].
    class Angle
    {
    public:
        static Angle radians(double value);
        static Angle degrees(double value);

        double rad() const noexcept { return value_; }
        double deg() const noexcept { return value_ * 180.0 / kPi; }
        double cos() const noexcept { return std::cos(value_); }

        friend bool operator==(const Angle &, const Angle &) = default;

    private:
        explicit Angle(double value) noexcept : value_(value) {}
        double value_;
    };

    double deg_to_rad(double deg) noexcept;
    double rad_to_deg(double rad) noexcept;

    // Power dB to linear power ratio, and to linear amplitude ratio
    double db_to_power(double db) noexcept;
    double db_to_amplitude(double db) noexcept;

    // Throws DimensionError naming `what` if any entry is NaN or infinite
    void require_finite(const ComplexMatrix &m, std::string_view what);
    void require_finite(const ComplexVector &v, std::string_view what);

    void require_size(Eigen::Index actual, Eigen::Index expected, std::string_view what);
} // namespace mumor

#endif
