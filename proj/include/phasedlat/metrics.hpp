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

#ifndef PHASEDLAT_METRICS_HPP
#define PHASEDLAT_METRICS_HPP

#include "phasedlat/common.hpp"
#include "phasedlat/excitation.hpp"
#include "phasedlat/lattice.hpp"
#include "phasedlat/snp.hpp"
#include "phasedlat/spectral.hpp"

#include <functional>
#include <string>
#include <variant>
#include <vector>

namespace phasedlat
{

inline constexpr double vswr_cap = 100.0;

/// Gamma_p = (sum_q S_pq a_q) / a_p at frequency index `fi`. Throws when a_p == 0.
Complex active_reflection(const NetworkData &net, std::size_t fi, const ExcitationPlan &plan, std::size_t port);

/// Same plan applied at every frequency.
std::vector<Complex> active_reflection(const NetworkData &net, const ExcitationPlan &plan, std::size_t port);

/// (1 + |G|) / (1 - |G|), capped at 100 when |G| >= 1 or the ratio exceeds the cap.
double vswr(Complex gamma);

/// Converts a magnitude ratio to dB with the -200 dB floor.
double amplitude_db(double ratio);

/// 20 log10(|b_observed| / |a_excited|) at frequency index `fi`.
double orthogonal_coupling(const NetworkData &net, std::size_t fi, const ExcitationPlan &plan,
                           std::size_t observed_port, std::size_t excited_port);

/// Per-frequency orthogonal coupling for a frequency-independent plan.
std::vector<double> orthogonal_coupling(const NetworkData &net, const PortMap &map, const ExcitationPlan &plan,
                                        const ElementIndex &center, Pol excited);

struct GainValue
{
    double linear = 0.0;
    double db = 0.0;
};

/// Mismatch loss times radiation efficiency.
GainValue normalized_gain(Complex gamma_act, double efficiency);

/// 10 log10(4 pi A / lambda^2 * cos(theta)), floored at -200 dBi.
double ideal_embedded_gain(double area, double frequency, double theta_deg);

/// Sum_n w_n exp(+j k_t(theta, phi) . R_n); theta may be negative (mirrored azimuth).
Complex array_factor(const std::vector<Vec2> &positions, const std::vector<Complex> &weights, double frequency,
                     double theta_deg, double phi_deg);

struct PatternSample
{
    double theta_deg = 0.0;
    double phi_deg = 0.0;
    double gain_dbi = 0.0;
    Complex af;
};

struct Pattern
{
    double frequency = 0.0;
    std::string plane;
    std::vector<PatternSample> samples;
};

struct PatternCut
{
    std::string plane;
    double phi_deg = 0.0;
    std::vector<double> theta_deg; // each within [-90, 90]
};

/*!
Scalar realized-gain pattern of a weighted aperture: ideal cos(theta) element gain of one
unit cell times |AF|^2 / (sum |w_n|)^2, in dBi.
*/
Pattern array_factor_pattern(const std::vector<Vec2> &positions, const std::vector<Complex> &weights,
                             double frequency, double cell_area, const PatternCut &cut);

/// Evenly spaced theta grid from -90 to 90 degrees.
std::vector<double> theta_grid(double step_deg);

enum class MetricKind
{
    vswr,
    coupling,
    gain
};

std::string to_string(MetricKind kind);

/// One labeled curve: metric value per frequency for one scan point.
struct MetricSweep
{
    MetricKind metric = MetricKind::vswr;
    NamedScan scan;
    std::vector<double> frequencies;
    std::vector<double> values;   // VSWR, coupling dB, or normalized gain dB
    std::vector<Complex> gammas;  // active reflection (VSWR/gain) or observed cross-pol wave ratio (coupling)
    std::vector<double> realized; // realized gain dBi (gain metric only)
};

/// Active response of an infinite array, e.g. a synthetic model: (pol pair, k_t, f) -> Gamma.
using InfiniteResponse = std::function<Complex(PolPair, const Vec2 &, double)>;

struct InfiniteSource
{
    InfiniteResponse response;
    std::vector<double> frequencies;
};

using SweepSource = std::variant<NetworkData, InfiniteSource>;

/// Array context for finite-network sweeps; ignored for infinite sources except `basis` and `excited`.
struct SweepSetup
{
    LatticeBasis basis;
    std::vector<ElementIndex> aperture;
    PortMap map;
    TaperSpec taper = GaussianTaper{};
    Pol excited = Pol::X;
    double efficiency = 1.0;
};

/*!
Evaluates `metric` for every scan in `scans` and every source frequency. Results are ordered
like `scans`; parallel evaluation over (scan, frequency) writes into fixed slots.
Errors are rethrown with the scan label and frequency attached.
*/
std::vector<MetricSweep> sweep(const SweepSource &source, const SweepSetup &setup, const std::vector<NamedScan> &scans,
                               MetricKind metric, unsigned threads = 1);

// Stable CSV contracts for plotting scripts.
std::string vswr_table_csv(const std::vector<MetricSweep> &sweeps, std::string_view comment = {});
std::string coupling_table_csv(const std::vector<MetricSweep> &sweeps, std::string_view comment = {});
std::string gain_table_csv(const std::vector<MetricSweep> &sweeps, std::string_view comment = {});
std::string pattern_table_csv(const std::vector<Pattern> &patterns, std::string_view comment = {});

} // namespace phasedlat

#endif
