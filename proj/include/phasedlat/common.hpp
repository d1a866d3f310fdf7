// SPDX-License-Identifier: Apache-2.0
//
// phasedlat - phased-array lattice analysis toolkit
// Copyright (C) 2026 The phasedlat authors
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

#ifndef PHASEDLAT_COMMON_HPP
#define PHASEDLAT_COMMON_HPP

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace phasedlat
{
using Complex = std::complex<double>;

inline constexpr double pi = std::numbers::pi;

// The toolkit pairs lambda_H = 15 mm with 20 GHz, i.e. c = 3e8 m/s.
inline constexpr double speed_of_light = 3.0e8;

// Floor substituted for -inf in every dB quantity.
inline constexpr double db_floor = -200.0;

inline constexpr const char *version_string = "0.1.0";

inline double wavenumber(double frequency_hz) { return 2.0 * pi * frequency_hz / speed_of_light; }

inline double deg2rad(double deg) { return deg * pi / 180.0; }
inline double rad2deg(double rad) { return rad * 180.0 / pi; }

/// 2-D vector used for both positions (m) and transverse wavevectors (rad/m).
struct Vec2
{
    double x = 0.0;
    double y = 0.0;

    constexpr Vec2 operator+(const Vec2 &o) const { return {x + o.x, y + o.y}; }
    constexpr Vec2 operator-(const Vec2 &o) const { return {x - o.x, y - o.y}; }
    constexpr Vec2 operator-() const { return {-x, -y}; }
    constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
    constexpr bool operator==(const Vec2 &) const = default;

    double norm() const { return std::hypot(x, y); }
    bool finite() const { return std::isfinite(x) && std::isfinite(y); }
};

constexpr Vec2 operator*(double s, const Vec2 &v) { return v * s; }
constexpr double dot(const Vec2 &a, const Vec2 &b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(const Vec2 &a, const Vec2 &b) { return a.x * b.y - a.y * b.x; }

// Error hierarchy. The CLI maps each kind onto its exit code.
class Error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/// Invalid or incomplete run configuration.
class ConfigError : public Error
{
  public:
    using Error::Error;
};

/// Transform-domain violation, e.g. an aperture wider than the coupling grid.
class TransformDomainError : public Error
{
  public:
    using Error::Error;
};

/// Data does not fit the declared array (port count, frequencies, polarization).
class DataMismatchError : public Error
{
  public:
    using Error::Error;
};

/// Malformed Touchstone or CSV input.
class ParseError : public Error
{
  public:
    using Error::Error;
};

/// Network reduction hit a singular denominator.
class SingularTerminationError : public Error
{
  public:
    using Error::Error;
};

} // namespace phasedlat

#endif
