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

#ifndef PHASEDLAT_LATTICE_HPP
#define PHASEDLAT_LATTICE_HPP

#include "phasedlat/common.hpp"

#include <compare>
#include <string>
#include <variant>
#include <vector>

namespace phasedlat
{

enum class LatticeKind
{
    square,
    triangular
};

std::string to_string(LatticeKind kind);
LatticeKind lattice_kind_from_string(const std::string &name);

/*!
Direct lattice of a planar array.

- `a1`, `a2` are the primitive vectors in meters.
- `lambda_h` is the free-space wavelength at the highest grating-lobe-free frequency.
- Square: a1 = (lambda_h/2)(1, 0), a2 = (lambda_h/2)(0, 1).
- Triangular: a1 = (lambda_h/sqrt3)(-sin 15deg, cos 15deg), a2 = (lambda_h/sqrt3)(1/sqrt2, 1/sqrt2).
  The 15 deg rotation is kept so positions follow the same coordinate convention as
  the reciprocal-basis closed forms.
*/
struct LatticeBasis
{
    Vec2 a1;
    Vec2 a2;
    LatticeKind kind = LatticeKind::square;
    double lambda_h = 0.0;

    double determinant() const { return cross(a1, a2); }
};

struct ElementIndex
{
    int n1 = 0;
    int n2 = 0;

    constexpr ElementIndex operator+(const ElementIndex &o) const { return {n1 + o.n1, n2 + o.n2}; }
    constexpr ElementIndex operator-(const ElementIndex &o) const { return {n1 - o.n1, n2 - o.n2}; }
    constexpr auto operator<=>(const ElementIndex &) const = default;
};

/// Scan-space sampling basis; rows k1, k2 satisfy [k1; k2][a1 a2] = (2 pi / N) I.
struct ReciprocalBasis
{
    Vec2 k1;
    Vec2 k2;
    int n_scan = 0;
};

struct RectangleAperture
{
    int n1_min = 0, n1_max = 0;
    int n2_min = 0, n2_max = 0;
};

/// All indices within `rings` nearest-neighbour shells of the origin.
struct HexagonAperture
{
    int rings = 0;
};

/// n1, n2 >= 0 and n1 + n2 < rows.
struct TriangleAperture
{
    int rows = 1;
};

struct ExplicitAperture
{
    std::vector<ElementIndex> indices;
};

using ApertureShape = std::variant<RectangleAperture, HexagonAperture, TriangleAperture, ExplicitAperture>;

LatticeBasis make_basis(LatticeKind kind, double lambda_h);

/// Throws std::invalid_argument when the basis breaks its kind's invariants.
void validate_basis(const LatticeBasis &basis);

double unit_cell_area(const LatticeBasis &basis);

Vec2 element_position(const LatticeBasis &basis, const ElementIndex &idx);

std::vector<Vec2> element_positions(const LatticeBasis &basis, const std::vector<ElementIndex> &indices);

ReciprocalBasis reciprocal_basis(const LatticeBasis &basis, int n_scan);

/// Closed-form reciprocal basis for the two supported lattices (reference route).
ReciprocalBasis reciprocal_basis_closed_form(LatticeKind kind, double lambda_h, int n_scan);

/// Sorted lexicographically by (n1, n2). Throws on an empty or duplicated result.
std::vector<ElementIndex> enumerate_aperture(const ApertureShape &shape);

/// Hexagonal lattice distance in the (n1, n2) index space.
int ring_distance(const ElementIndex &idx);

/*!
Lowest frequency (Hz) at which a grating lobe enters visible space for a beam scanned
to `scan_theta_deg` from normal, minimized over scan azimuth.
*/
double grating_lobe_onset(const LatticeBasis &basis, double scan_theta_deg);

} // namespace phasedlat

#endif
