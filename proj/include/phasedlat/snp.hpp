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

#ifndef PHASEDLAT_SNP_HPP
#define PHASEDLAT_SNP_HPP

#include "phasedlat/common.hpp"
#include "phasedlat/lattice.hpp"

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace phasedlat
{

/// Dense square complex matrix, row-major.
class SMatrix
{
  public:
    SMatrix() = default;
    explicit SMatrix(std::size_t n) : n_(n), data_(n * n) {}

    std::size_t size() const { return n_; }

    Complex &operator()(std::size_t row, std::size_t col) { return data_[row * n_ + col]; }
    const Complex &operator()(std::size_t row, std::size_t col) const { return data_[row * n_ + col]; }

    const std::vector<Complex> &data() const { return data_; }
    std::vector<Complex> &data() { return data_; }

    bool operator==(const SMatrix &) const = default;

  private:
    std::size_t n_ = 0;
    std::vector<Complex> data_;
};

enum class Pol
{
    X,
    Y
};

inline char to_char(Pol p) { return p == Pol::X ? 'X' : 'Y'; }

struct PortAssignment
{
    ElementIndex element;
    Pol pol = Pol::X;

    bool operator==(const PortAssignment &) const = default;
};

/*!
Bijection between 0-based port numbers and (element, polarization).

The canonical array ordering is lexicographic by (pol, n1, n2) with X before Y.
*/
class PortMap
{
  public:
    PortMap() = default;
    explicit PortMap(std::vector<PortAssignment> entries);

    /// Dual-polarized map in canonical order: X ports of every element, then Y ports.
    static PortMap dual_pol(const std::vector<ElementIndex> &aperture);
    static PortMap single_pol(const std::vector<ElementIndex> &aperture, Pol pol);

    std::size_t size() const { return entries_.size(); }
    const PortAssignment &operator[](std::size_t port) const { return entries_[port]; }
    const std::vector<PortAssignment> &entries() const { return entries_; }

    std::optional<std::size_t> port_of(const ElementIndex &element, Pol pol) const;

    bool operator==(const PortMap &) const = default;

  private:
    std::vector<PortAssignment> entries_;
};

/*!
Multiport frequency-domain scattering data.

- `frequencies` in Hz, strictly increasing and positive.
- One `port_count` x `port_count` matrix per frequency.
- `z_ref` is the single global reference impedance in ohms.
*/
struct NetworkData
{
    std::vector<double> frequencies;
    std::size_t port_count = 0;
    std::vector<SMatrix> s;
    double z_ref = 50.0;
    std::optional<PortMap> ports;

    /// Throws std::invalid_argument when an invariant is broken.
    void validate() const;
};

enum class DataFormat
{
    RI,
    MA,
    DB
};

std::string to_string(DataFormat fmt);
DataFormat data_format_from_string(const std::string &name);

/// Port count encoded in a `.sNp` extension (case-insensitive). Throws ParseError.
std::size_t port_count_from_filename(const std::filesystem::path &path);

/*!
Parses Touchstone v1.x content. Warnings (e.g. skipped noise data) are appended to
`warnings` when supplied. Throws ParseError on malformed input.
*/
NetworkData parse_touchstone(std::string_view text, std::size_t port_count,
                             std::vector<std::string> *warnings = nullptr);

NetworkData read_touchstone(const std::filesystem::path &path, std::vector<std::string> *warnings = nullptr);

/// Frequencies are written in Hz with round-trip-exact digits. `comment` lines are emitted with '!' prefixes.
std::string write_touchstone(const NetworkData &net, DataFormat fmt, std::string_view comment = {});

/// Reduces the network by loading port `k` with reflection coefficient `gamma_load`.
NetworkData terminate_port(const NetworkData &net, std::size_t k, Complex gamma_load);

/// Simultaneous row/column permutation so that `result[new] = net[order[new]]`.
NetworkData permute_ports(const NetworkData &net, const std::vector<std::size_t> &order);

/// Reorders ports to canonical (pol, n1, n2) order using `map`; the result carries the updated map.
NetworkData reorder_ports(const NetworkData &net, const PortMap &map);

/// CSV "freq_hz,port_i,port_j,mag_db,phase_deg" with 1-based port numbers.
std::string s_parameter_db_csv(const NetworkData &net, std::string_view comment = {});

} // namespace phasedlat

#endif
