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


#ifndef GJIT_JIT_DECODER_H
#define GJIT_JIT_DECODER_H

#include <span>
#include <string>
#include <vector>

#include "gjit/chunks.h"
#include "gjit/lattice.h"
#include "gjit/noise.h"
#include "gjit/syndrome.h"

namespace gjit {

struct ActiveDefect {
    int id = 0;
    /// Cell anchor at birth; pos[time axis] == birth.
    Coord3 pos;
    int birth = 0;
};

enum class MatchKind : uint8_t { PairDefects, PairToBoundary };

struct MatchDecision {
    MatchKind kind = MatchKind::PairDefects;
    ActiveDefect u;
    ActiveDefect v;             // PairDefects only
    Side side = Side::XMin;     // PairToBoundary only
    int t = 0;                  // decision time
    int separation = 0;         // l-inf spacetime (pairs) or links to the side
    std::vector<int> plaquettes;  // deferral strings plus the connecting path

    /// One JSON object; boundary segments end on a virtual cell just outside
    /// the box.
    std::string to_json(const LatticeGeometry &g) const;
};

struct JitOptions {
    /// Smooth spatial sides where defects may terminate; empty means every
    /// smooth side normal to a spatial axis.
    std::vector<Side> absorbing;
    /// Tie order among sides; unlisted sides follow kSides order.
    std::vector<Side> boundary_order;
};

/// Time-sliced decoder: a defect born at t is matched with v once both have
/// been deferred at least their l-inf spacetime separation, or to a side once
/// deferred at least its distance to it. Cubic lattice only.
class JitDecoder {
   public:
    explicit JitDecoder(const LatticeGeometry &g, JitOptions options = {});

    /// Processes slice t. Throws std::invalid_argument when t does not
    /// increase or a defect is not born at t.
    std::vector<MatchDecision> step(const DefectSet &new_defects, int t);
    /// Sends every survivor to its nearest side, the terminal face included.
    std::vector<MatchDecision> flush();

    const std::vector<ActiveDefect> &active() const {
        return active_;
    }
    int time() const {
        return t_;
    }

   private:
    int boundary_distance(const Coord3 &spatial, Side side, int t) const;
    int side_rank(Side s) const;
    std::vector<int> deferral(const ActiveDefect &d, int t) const;
    std::vector<int> spatial_path(Coord3 from, const Coord3 &to, int t) const;
    std::vector<int> side_path(Coord3 from, Side side, int t) const;
    MatchDecision to_boundary(const ActiveDefect &d, Side side, int distance) const;

    const LatticeGeometry *g_;
    JitOptions options_;
    Axis T_;
    std::vector<ActiveDefect> active_;
    int t_ = -1;
    int next_id_ = 0;
};

struct JitResult {
    std::vector<MatchDecision> decisions;
    /// Plaquettes flipped by all decisions, sorted, each at most once.
    std::vector<int> correction;
    /// Decision time minus birth, indexed by defect id.
    std::vector<int> lifetimes;
    int max_lifetime = 0;

    std::string decisions_jsonl(const LatticeGeometry &g) const;
};

/// Feeds defects slice by slice over the whole time extent, then flushes.
/// Defect ids follow (t, cell) order.
JitResult run_jit(const LatticeGeometry &g, const DefectSet &defects, const JitOptions &options = {});

struct ComponentSpread {
    int level = 0;
    std::vector<Coord3> core;
    int box_diameter = 0;        // raw box B: core extent + 2
    int container_diameter = 0;  // core extent + 2r
    double s_emp = 0.0;          // container_diameter / Q^j
    double growth = 0.0;         // container_diameter / box_diameter
};

struct SpreadReport {
    std::vector<ComponentSpread> components;
    double max_s_emp = 0.0;
    int max_lifetime = 0;

    std::string to_json() const;
};

/// Assigns each share point to the nearest component F_{j,alpha} (lowest
/// level first on ties) and grows a container of radius r >= 1 around each
/// component until it covers its share.
SpreadReport measure_spread(const ChunkDecomposition &d, std::span<const Coord3> share, int max_lifetime = 0);

/// Defect pairs whose two sites lie in no common raw box B_{j,alpha}.
int count_cross_box_pairs(const ChunkDecomposition &d, const std::vector<MatchDecision> &decisions,
                          const SiteGrid &grid);

}  // namespace gjit

#endif
