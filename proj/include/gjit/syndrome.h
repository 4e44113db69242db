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

#ifndef GJIT_SYNDROME_H
#define GJIT_SYNDROME_H

#include <cstdint>
#include <string>
#include <vector>

#include "gjit/lattice.h"
#include "gjit/noise.h"

namespace gjit {

/// Plaquette outcomes; minus[p] == 1 means outcome -1.
struct GaugeOutcome {
    std::vector<uint8_t> minus;

    int count() const;
    /// Indices of -1 plaquettes.
    std::vector<int> support() const;
};

/// Support of a Pauli-X operator on edges, sorted.
struct Membrane {
    std::vector<int> edges;
};

struct GaugeSample {
    GaugeOutcome outcome;
    Membrane frame;
};

/// Odd constraint cell.
struct Defect {
    int cell = 0;
    Coord3 pos;
    ConstraintCell::Kind kind = ConstraintCell::Kind::Cube;
    int t = 0;
    auto operator<=>(const Defect &) const = default;
};

using DefectSet = std::vector<Defect>;

/// Symmetric difference of sorted-or-not index lists; result sorted.
std::vector<int> xor_sets(const std::vector<int> &a, const std::vector<int> &b);

/// Plaquettes flipped by X on the given edges.
GaugeOutcome outcome_of(const LatticeGeometry &g, const std::vector<int> &edges);
GaugeOutcome plaquette_set(const LatticeGeometry &g, const std::vector<int> &plaquettes);

/// Stars flipped by Z on the given edges.
std::vector<uint8_t> star_syndrome(const LatticeGeometry &g, const std::vector<int> &edges);

/// Uniform X-frame on every edge off the initial plane (time coordinate 0).
GaugeSample sample_random_gauge(const LatticeGeometry &g, uint64_t seed, uint64_t trial = 0);

GaugeOutcome apply_errors(const LatticeGeometry &g, const GaugeOutcome &gauge, const ErrorSet &errors);

DefectSet extract_defects(const LatticeGeometry &g, const GaugeOutcome &gauge);

/// `cell_x,cell_y,cell_t,kind` with x, y the two spatial axes in order.
std::string defects_csv(const LatticeGeometry &g, const DefectSet &defects);

enum class FillMethod : uint8_t {
    /// Push loops slab by slab toward the terminal face (cubic only).
    Sweep,
    /// Solve each loop component inside its bounding box, growing the box on
    /// failure.
    Local,
};

/// Membrane whose plaquette flips equal the given loop configuration. Throws
/// std::invalid_argument when the loops leave odd constraint cells.
Membrane fix_gauge(const LatticeGeometry &g, const GaugeOutcome &loops, FillMethod method = FillMethod::Local);

}  // namespace gjit

#endif
