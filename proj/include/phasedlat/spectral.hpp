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

#ifndef PHASEDLAT_SPECTRAL_HPP
#define PHASEDLAT_SPECTRAL_HPP

#include "phasedlat/common.hpp"
#include "phasedlat/lattice.hpp"
#include "phasedlat/snp.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace phasedlat
{

/*!
Infinite-array scan-space <-> coupling-coefficient transforms.

Scan samples live at k_t = m1 k1 + m2 k2 and coupling coefficients at element offsets
(n1, n2); both index ranges are [-N/2, N/2 - 1]. With [k1; k2][a1 a2] = (2 pi / N) I the
active reflection coefficient

    Gamma(k_t) = sum_n S_n exp(-j k_t . R_n)

is a 2-D DFT of the coupling coefficients, and its inverse

    S_n = 1/N^2 sum_m Gamma(m) exp(+j 2 pi (n1 m1 + n2 m2) / N)

recovers them from N^2 unit-cell samples.
*/

/// (row pol, column pol) of the finite-array block a coefficient set feeds.
enum class PolPair
{
    XX,
    XY,
    YX,
    YY
};

inline constexpr std::array<PolPair, 4> all_pol_pairs{PolPair::XX, PolPair::XY, PolPair::YX, PolPair::YY};

std::string to_string(PolPair pair);
PolPair pol_pair_from_string(const std::string &name);
Pol first_pol(PolPair pair);
Pol second_pol(PolPair pair);
PolPair make_pol_pair(Pol first, Pol second);
inline bool is_co_pol(PolPair p) { return p == PolPair::XX || p == PolPair::YY; }

/// Position of index m in [-N/2, N/2 - 1] within a length-N row.
inline std::size_t grid_slot(int m, int n) { return static_cast<std::size_t>(m + n / 2); }

struct ScanGrid
{
    ReciprocalBasis recip;
    std::vector<Vec2> points; // slot(m1) * N + slot(m2)

    int n() const { return recip.n_scan; }
    const Vec2 &point(int m1, int m2) const { return points[grid_slot(m1, n()) * n() + grid_slot(m2, n())]; }
};

ScanGrid build_scan_grid(const ReciprocalBasis &recip);

/// Active reflection samples, one N x N block per frequency.
struct ActiveGammaGrid
{
    std::vector<double> frequencies;
    int n = 0;
    PolPair pol_pair = PolPair::XX;
    std::vector<std::vector<Complex>> values;

    Complex &at(std::size_t fi, int m1, int m2) { return values[fi][grid_slot(m1, n) * n + grid_slot(m2, n)]; }
    const Complex &at(std::size_t fi, int m1, int m2) const
    {
        return values[fi][grid_slot(m1, n) * n + grid_slot(m2, n)];
    }
};

/// Coupling coefficients S_{n1 n2, 0}, one N x N block per frequency.
struct CouplingSet
{
    std::vector<double> frequencies;
    int n = 0;
    PolPair pol_pair = PolPair::XX;
    std::vector<std::vector<Complex>> values;

    Complex &at(std::size_t fi, int n1, int n2) { return values[fi][grid_slot(n1, n) * n + grid_slot(n2, n)]; }
    const Complex &at(std::size_t fi, int n1, int n2) const
    {
        return values[fi][grid_slot(n1, n) * n + grid_slot(n2, n)];
    }
    bool contains(int n1, int n2) const { return n1 >= -n / 2 && n1 < n / 2 && n2 >= -n / 2 && n2 < n / 2; }
};

enum class TransformPath
{
    fast,  // FFT
    naive, // explicit double sum, reference route
};

CouplingSet gamma_to_coupling(const ActiveGammaGrid &grid, TransformPath path = TransformPath::fast,
                              unsigned threads = 1);

/// Evaluates the forward sum at an arbitrary transverse wavevector.
Complex coupling_to_gamma(const CouplingSet &coupling, std::size_t freq_index, const Vec2 &k_t,
                          const LatticeBasis &basis);

/// Forward sum at every grid point of `grid`, returned as an ActiveGammaGrid.
ActiveGammaGrid coupling_to_gamma_grid(const CouplingSet &coupling, const ScanGrid &grid, const LatticeBasis &basis,
                                       unsigned threads = 1);

/// Coupling sets keyed by pol pair; missing entries are std::nullopt.
using CouplingBundle = std::array<std::optional<CouplingSet>, 4>;

inline std::size_t bundle_slot(PolPair p) { return static_cast<std::size_t>(p); }

/*!
Builds the finite-array scattering matrix by translation invariance:

    S[(p, A), (q, B)] = c_AB(n_q - n_p)

- Dual-polarized when all four pol pairs are present (`map` must then hold both pols).
- Single-polarized when only XX or only YY is present.
- Throws TransformDomainError when an element offset falls outside the N x N coupling grid.
*/
NetworkData assemble_finite_smatrix(const CouplingBundle &sets, const std::vector<ElementIndex> &aperture,
                                    const PortMap &map);

/// Maximum |a - b| over all coefficients; throws when shapes differ.
double max_abs_difference(const CouplingSet &a, const CouplingSet &b);

// CSV exchange. Grids: "freq_hz,m1,m2,re,im"; couplings: "freq_hz,n1,n2,re,im".
// Lines starting with '#' are comments.
std::string gamma_grid_csv(const ActiveGammaGrid &grid, std::string_view comment = {});
std::string coupling_csv(const CouplingSet &set, std::string_view comment = {});
ActiveGammaGrid parse_gamma_grid_csv(std::string_view text, PolPair pair);
CouplingSet parse_coupling_csv(std::string_view text, PolPair pair);

/// "_xx", "_xy", "_yx", "_yy"
std::string pol_pair_suffix(PolPair pair);

} // namespace phasedlat

#endif
