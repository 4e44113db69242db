// Copyright 2026 The gjit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GJIT_NOISE_H
#define GJIT_NOISE_H

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gjit/lattice.h"

namespace gjit {

/// Qubits per site used in the threshold arithmetic.
constexpr int kQubitsPerSite = 120;
/// Qubits in a full unit cell of the three overlapping codes.
constexpr int kQubitsPerUnitCell = 160;

using Rng = std::mt19937_64;

/// Independent stream for (seed, trial, stream). Streams separate the random
/// gauge, data errors, measurement errors, partner errors, ...
Rng make_rng(uint64_t seed, uint64_t trial, uint64_t stream);

enum Stream : uint64_t {
    kStreamGauge = 1,
    kStreamErrors = 2,
    kStreamPrefix = 3,
    kStreamPartner = 4,
    kStreamPlant = 5,
};

struct NoiseParams {
    double eps = 0.0;
    uint64_t seed = 0;
    int qubits_per_site = kQubitsPerSite;
};

struct MeasFlip {
    int plaquette = 0;
    int t = 0;
    auto operator<=>(const MeasFlip &) const = default;
};

/// X-frame flips on data qubits (edge indices) and flipped plaquette outcomes.
struct ErrorSet {
    std::vector<int> data;
    std::vector<MeasFlip> meas;

    bool empty() const {
        return data.empty() && meas.empty();
    }
    size_t size() const {
        return data.size() + meas.size();
    }
    /// Sorts and cancels repeated entries pairwise.
    void normalize();

    std::string to_json() const;
    static ErrorSet from_json(const std::string &text);
};

/// Half-open range of time coordinates [begin, end) whose entities are noisy.
struct TimeWindow {
    int begin = 0;
    int end = 0;
    bool contains(int t) const {
        return t >= begin && t < end;
    }
};

/// Flips every edge and plaquette whose time coordinate lies in [0, time_extent)
/// independently with probability eps.
ErrorSet sample_errors(const LatticeGeometry &g, const NoiseParams &params, int time_extent, uint64_t trial = 0);
ErrorSet sample_errors(const LatticeGeometry &g, const NoiseParams &params, TimeWindow window, uint64_t trial,
                       uint64_t stream = kStreamErrors);

/// Each edge independently with probability eps.
std::vector<int> sample_edge_flips(const LatticeGeometry &g, double eps, Rng &rng);

/// 1 - (1 - eps)^N.
double site_error_probability(double eps, int N);

/// Cubic grouping of qubits into sites of the given side (in lattice units).
struct SiteGrid {
    int side = 2;

    Coord3 site_of(const Coord3 &anchor) const;
};

Coord3 edge_site(const LatticeGeometry &g, int edge, const SiteGrid &grid);
Coord3 plaquette_site(const LatticeGeometry &g, int plaquette, const SiteGrid &grid);

/// Sorted distinct sites holding at least one flip.
std::vector<Coord3> to_sites(const LatticeGeometry &g, const ErrorSet &errors, const SiteGrid &grid);

}  // namespace gjit

#endif
