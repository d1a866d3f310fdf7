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

#ifndef PHASEDLAT_PIPELINE_HPP
#define PHASEDLAT_PIPELINE_HPP

#include "phasedlat/config.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>

namespace phasedlat
{

/// Global flags shared by every subcommand.
struct RunOptions
{
    std::optional<std::filesystem::path> out_dir; // overrides config output_dir
    bool oracle = false;                          // naive double-sum transform
    unsigned threads = 1;
    std::optional<std::uint64_t> seed;            // overrides a seeded_random model seed
};

// Process exit codes.
inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;
inline constexpr int exit_config = 2;
inline constexpr int exit_transform_domain = 3;
inline constexpr int exit_data_mismatch = 4;

/// Maps an in-flight exception to its exit code.
int exit_code_for(const std::exception &e);

/// Basis vectors, reciprocal basis, cell area, area ratio and grating-lobe onset table.
void cmd_lattice(const RunConfig &cfg, const RunOptions &opt, std::ostream &report);

/// Samples the model on the scan grid, transforms to coupling coefficients and assembles the finite array.
void cmd_transform(const RunConfig &cfg, const RunOptions &opt, std::ostream &report);

/// VSWR / orthogonal coupling / gain tables for the configured scans.
void cmd_metrics(const RunConfig &cfg, const RunOptions &opt, std::ostream &report);

/// Array-factor realized-gain cuts.
void cmd_pattern(const RunConfig &cfg, const RunOptions &opt, std::ostream &report);

/// Rewrites a Touchstone file in another data format and exports |S| in dB as CSV.
void cmd_convert(const std::filesystem::path &input, DataFormat fmt, const std::filesystem::path &out_dir,
                 std::ostream &report);

/// Header line recorded at the top of every output file.
std::string provenance_line(std::uint64_t config_hash);

} // namespace phasedlat

#endif
