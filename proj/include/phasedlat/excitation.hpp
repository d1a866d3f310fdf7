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

#ifndef PHASEDLAT_EXCITATION_HPP
#define PHASEDLAT_EXCITATION_HPP

#include "phasedlat/common.hpp"
#include "phasedlat/lattice.hpp"
#include "phasedlat/snp.hpp"

#include <string>
#include <variant>
#include <vector>

namespace phasedlat
{

struct UniformTaper
{
};

/// Amplitude exp(-r^2 / w0^2), r from the aperture centroid.
struct GaussianTaper
{
    double w0 = 0.017;
};

using TaperSpec = std::variant<UniformTaper, GaussianTaper>;

struct ScanSpec
{
    double theta_deg = 0.0;
    double phi_deg = 0.0;
    double frequency = 0.0;
};

/// Complex incident wave per port; length equals the port count.
struct ExcitationPlan
{
    std::vector<Complex> weights;
};

enum class ScanPlane
{
    E,
    H,
    D
};

/// Named scan point such as "broadside", "E60", "H45" or "D60".
struct NamedScan
{
    std::string label;
    std::string plane; // "broadside", "E", "H", "D", or "phi<deg>" for explicit azimuths
    double theta_deg = 0.0;
    double phi_deg = 0.0;
};

/// Azimuth of a principal plane for a given excited polarization (E: along the pol, H: across, D: 45 deg).
double plane_azimuth(ScanPlane plane, Pol excited);

/// Parses "broadside" or "<E|H|D><theta>" relative to the excited polarization.
NamedScan parse_scan_label(const std::string &label, Pol excited);

std::vector<double> gaussian_taper(const std::vector<Vec2> &positions, double w0);

Vec2 scan_wavevector(const ScanSpec &scan);

/// Centroid of the aperture element positions.
Vec2 aperture_centroid(const LatticeBasis &basis, const std::vector<ElementIndex> &aperture);

/// Aperture element closest to the centroid; ties go to the lexicographically smallest index.
ElementIndex centermost_element(const LatticeBasis &basis, const std::vector<ElementIndex> &aperture);

/*!
Weights w = taper(R) * exp(-j k_t . R) on the `pol` port of every aperture element, with R
measured from the aperture centroid. Ports of the other polarization get zero.
*/
ExcitationPlan build_plan(const std::vector<ElementIndex> &aperture, const LatticeBasis &basis, const PortMap &map,
                          const TaperSpec &taper, const ScanSpec &scan, Pol pol);

/// CSV "port,re,im".
std::string plan_csv(const ExcitationPlan &plan, std::string_view comment = {});

} // namespace phasedlat

#endif
