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

#ifndef PHASEDLAT_CONFIG_HPP
#define PHASEDLAT_CONFIG_HPP

#include "phasedlat/excitation.hpp"
#include "phasedlat/lattice.hpp"
#include "phasedlat/snp.hpp"
#include "phasedlat/synthmodel.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace phasedlat
{

/*!
Lattice block: {"kind": "square"|"triangular", "lambda_h_mm": number, "n_scan": integer, "aperture": {...}}

Aperture forms:
- {"shape": "rectangle", "n1": [min, max], "n2": [min, max]}
- {"shape": "hexagon", "rings": r}
- {"shape": "triangle", "rows": r}
- {"shape": "explicit", "indices": [[n1, n2], ...]}
*/
struct LatticeConfig
{
    LatticeKind kind = LatticeKind::square;
    double lambda_h = 0.015; // m
    int n_scan = 24;
    std::optional<ApertureShape> aperture;
};

struct ExcitationConfig
{
    TaperSpec taper = GaussianTaper{0.017};
    Pol pol = Pol::X;
    double efficiency = 1.0;
};

struct SweepConfig
{
    std::vector<double> frequencies; // Hz
    std::vector<std::string> scans{"broadside"};
    std::vector<double> theta_deg;   // optional explicit scan grid
    std::vector<double> phi_deg;
};

struct PatternConfig
{
    std::vector<double> frequencies{4e9, 9e9, 18e9};
    std::vector<std::string> planes{"E", "H", "D"};
    double theta_step_deg = 1.0;
    std::string scan = "broadside";
};

struct TransformConfig
{
    bool write_grids = false;
    bool write_touchstone = true;
    DataFormat format = DataFormat::RI;
};

struct RunConfig
{
    LatticeConfig lattice;
    std::optional<ModelSpec> model;
    std::optional<std::filesystem::path> measured;
    ExcitationConfig excitation;
    SweepConfig sweep;
    PatternConfig pattern;
    TransformConfig transform;
    std::filesystem::path output_dir = "out";
    std::uint64_t hash = 0; // FNV-1a of the source text
};

/// Default scan-frequency sweep: 3 to 20 GHz in 0.1 GHz steps.
std::vector<double> default_frequencies();

/// Parses a JSON config; relative paths resolve against `base_dir`. Throws ConfigError with the field path.
RunConfig parse_run_config(const std::string &json_text, const std::filesystem::path &base_dir = {});

RunConfig load_run_config(const std::filesystem::path &path);

LatticeConfig parse_lattice_config(const std::string &json_text);
std::string lattice_config_to_json(const LatticeConfig &cfg);

} // namespace phasedlat

#endif
