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

#include "gjit/prefix.h"

#include <stdexcept>

#include "json.hpp"

namespace gjit {

PrefixVolume make_prefix_volume(const LatticeGeometry &main, int depth) {
    if (depth < 1)
        throw std::invalid_argument("prefix depth must be at least 1");
    if (main.kind() != LatticeKind::Cubic)
        throw std::invalid_argument("prefixing runs on the cubic lattice");
    const Axis T = main.time_axis();
    Coord3 extents = main.extents();
    extents[T] = depth;
    PrefixVolume v{LatticeGeometry::build_box(LatticeKind::Cubic, extents, main.boundary(), T), depth, {}};
    v.to_main.assign(v.slab.num_plaquettes(), -1);
    for (int p = 0; p < v.slab.num_plaquettes(); p++) {
        const auto &site = v.slab.plaquette(p);
        if (site.normal != T || site.anchor[T] != depth)
            continue;
        Coord3 anchor = site.anchor;
        anchor[T] = 0;
        v.to_main[p] = main.plaquette_index(FaceId{anchor, T});
    }
    return v;
}

PrefixResult prefix_initial_face(const PrefixVolume &volume, const std::vector<int> &slab_flips) {
    const auto &g = volume.slab;
    const Axis T = g.time_axis();
    const Side initial = side_of(T, true);
    std::vector<Side> absorbing;
    for (Side s : kSides)
        if (side_axis(s) != T && g.boundary()[s] == BoundaryType::Smooth)
            absorbing.push_back(s);
    absorbing.push_back(initial);
    ChargeSpace space(g, ChargeSpace::Sector::Cells, absorbing);

    RgOptions options;
    options.boundary_order = {initial};
    PrefixResult result;
    result.rg = rg_decode(space, space.charges(slab_flips), options);
    for (int p : result.rg.links)
        if (volume.to_main[p] >= 0)
            result.flags.push_back(volume.to_main[p]);
    std::sort(result.flags.begin(), result.flags.end());
    return result;
}

std::string flags_json(const std::vector<int> &flags) {
    return nlohmann::json(flags).dump();
}

}  // namespace gjit
