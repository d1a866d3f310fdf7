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

#ifndef PHASEDLAT_SYNTHMODEL_HPP
#define PHASEDLAT_SYNTHMODEL_HPP

#include "phasedlat/common.hpp"
#include "phasedlat/spectral.hpp"

#include <array>
#include <cstdint>
#include <utility>
#include <variant>
#include <vector>

namespace phasedlat
{

/// Piecewise-linear complex profile over frequency; clamped outside the knot range.
struct BandProfile
{
    std::vector<std::pair<double, Complex>> knots; // (Hz, value), increasing frequency

    static BandProfile constant(Complex v) { return BandProfile{{{1.0, v}}}; }
    Complex at(double frequency) const;
};

struct ConstantModel
{
    Complex gamma0;
};

/// Co-pol: alpha(f) + beta(f) (|k_t| / k_ref)^2. Cross-pol: level * (kx ky / k_ref^2) * beta(f).
struct ScanPolyModel
{
    BandProfile alpha;
    BandProfile beta;
    double k_ref = 0.0;
};

/*!
Smooth pseudo-random field: twelve seeded terms per pol pair with spatial offsets inside a
24 mm / smoothness radius. Co-pol terms are cosines of k_t . r (even in k_t); cross-pol terms
are plane waves, YX mirroring XY. Sum of term magnitudes is 0.9, so |Gamma| <= 0.9.
*/
struct SeededRandomModel
{
    std::uint64_t seed = 0;
    int smoothness = 4;
};

struct ModelSpec
{
    std::variant<ConstantModel, ScanPolyModel, SeededRandomModel> variant;
    double f_min = 3e9;
    double f_max = 20e9;
    double cross_pol_level = 0.0;
};

/*!
Analytic stand-in for a unit-cell solver: an active reflection coefficient defined for
every real transverse wavevector, including invisible-space scan samples.

Evaluation is pure and deterministic; one instance may be shared across threads.
*/
class SyntheticModel
{
  public:
    explicit SyntheticModel(ModelSpec spec);

    const ModelSpec &spec() const { return spec_; }

    /// Throws std::out_of_range for frequencies outside [f_min, f_max].
    Complex eval(PolPair pair, const Vec2 &k_t, double frequency) const;

  private:
    struct Term
    {
        Vec2 offset;  // m
        Complex c0;   // value at band center
        Complex c1;   // linear slope across the band
    };

    ModelSpec spec_;
    std::array<std::vector<Term>, 4> terms_;
};

Complex eval_gamma(const ModelSpec &spec, PolPair pair, const Vec2 &k_t, double frequency);

ActiveGammaGrid sample_grid(const SyntheticModel &model, const ScanGrid &grid, const std::vector<double> &frequencies,
                            PolPair pair, unsigned threads = 1);

ActiveGammaGrid sample_grid(const ModelSpec &spec, const ScanGrid &grid, const std::vector<double> &frequencies,
                            PolPair pair, unsigned threads = 1);

/*!
Demonstration model: broadside VSWR 3 at 3 GHz easing to 1.5 from 4 GHz up, a scan
term in phase with the broadside mismatch, and diagonal-plane cross-pol coupling.
Passive over every scan-grid point of a lambda_H = 15 mm lattice.
*/
ModelSpec default_demo_model();

/// Largest |Gamma| the model can produce for |k_t| <= kt_max (passivity check helper).
double scan_poly_bound(const ScanPolyModel &m, double frequency, double kt_max);

} // namespace phasedlat

#endif
