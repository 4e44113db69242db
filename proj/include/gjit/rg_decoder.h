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

#ifndef GJIT_RG_DECODER_H
#define GJIT_RG_DECODER_H

#include <limits>
#include <string>
#include <vector>

#include "gjit/lattice.h"
#include "gjit/noise.h"

namespace gjit {

/// Point charges of one sector of a cubic geometry.
///
/// Cells: nodes are cubes, links are plaquettes; charges are endpoints of
/// broken plaquette loops and terminate on smooth faces.
/// Stars: nodes are star vertices, links are edges; charges are star
/// violations of Z errors and terminate on rough faces.
class ChargeSpace {
   public:
    enum class Sector : uint8_t { Cells, Stars };

    /// `absorbing` lists the faces where charges may terminate; each must be
    /// smooth (cells) or rough (stars).
    ChargeSpace(const LatticeGeometry &g, Sector sector, std::vector<Side> absorbing);

    const LatticeGeometry &geometry() const {
        return *g_;
    }
    Sector sector() const {
        return sector_;
    }
    int num_nodes() const;
    int num_links() const;
    Coord3 position(int node) const;
    /// -1 when no node sits at `pos`.
    int node_at(const Coord3 &pos) const;
    const std::vector<Side> &absorbing() const {
        return absorbing_;
    }
    bool is_absorbing(Side s) const;

    /// Number of links from the node to the side; max int when not absorbing.
    int boundary_distance(int node, Side side) const;
    int nearest_boundary_distance(int node) const;

    /// Axis-ordered geodesic: spatial axes first (x, y, z order), time last.
    std::vector<int> path(int a, int b) const;
    std::vector<int> boundary_path(int node, Side side) const;

    /// Nodes with odd charge under the given link flips.
    std::vector<int> charges(const std::vector<int> &links) const;
    /// Extent of the largest axis.
    int size() const {
        return g_->size();
    }

   private:
    int link_between(const Coord3 &p, Axis a, int dir) const;

    const LatticeGeometry *g_;
    Sector sector_;
    std::vector<Side> absorbing_;
    std::array<Axis, 3> axis_order_;
};

constexpr int kNoBoundary = -1;

struct RgMatch {
    int level = 0;
    int a = 0;
    int b = -1;             // partner node, or -1 for a boundary match
    int side = kNoBoundary; // Side index when b == -1
    int distance = 0;
};

struct RgLevelResult {
    std::vector<int> links;
    std::vector<RgMatch> matches;
    std::vector<int> residual;
};

struct RgResult {
    std::vector<int> links;  // sorted, each link at most once
    std::vector<RgMatch> matches;
    std::vector<int> residual;
    int levels = 0;
    bool success = false;

    std::string to_json(const ChargeSpace &space) const;
};

struct RgOptions {
    /// Highest level; negative means ceil(log2 L).
    int max_level = -1;
    /// Tie order among boundary sides; sides absent from the list rank last
    /// in kSides order.
    std::vector<Side> boundary_order;
};

/// Neutralises every neutral 2^p-connected cluster of `defects`.
RgLevelResult error_correct_level(const ChargeSpace &space, const std::vector<int> &defects, int p,
                                  const RgOptions &options = {});

RgResult rg_decode(const ChargeSpace &space, const std::vector<int> &defects, const RgOptions &options = {});

enum class Outcome : uint8_t { Success, LogicalFailure };

/// Z errors on a cubic geometry. Throws std::invalid_argument when error and
/// correction leave a star violation.
Outcome check_success(const LatticeGeometry &g, const std::vector<int> &error, const std::vector<int> &correction);

/// Edges of the Z-logical detector: edges along the rough axis leaving the
/// rough min face.
std::vector<int> logical_membrane(const LatticeGeometry &g);

/// Arbitrary Z error confined to one container: a level-0 chunk spread to a
/// box of the given diameter.
struct SpreadInstance {
    Box container;
    std::vector<int> edges;
};

/// Instance `index` of a deterministic family mixing dense, random-walk,
/// segment and rough-anchored errors, with containers in the bulk, on faces
/// and in corners.
SpreadInstance sample_spread_instance(const LatticeGeometry &g, int diameter, uint64_t seed, uint64_t index);

}  // namespace gjit

#endif
