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


#ifndef GJIT_PREFIX_H
#define GJIT_PREFIX_H

#include <string>
#include <vector>

#include "gjit/lattice.h"
#include "gjit/rg_decoder.h"

namespace gjit {

/// Spacetime slab of depth T_pre that ends on the initial face of `main`.
struct PrefixVolume {
    LatticeGeometry slab;
    int depth = 0;
    /// Main-volume plaquette for each slab plaquette on the last plane, -1
    /// elsewhere.
    std::vector<int> to_main;
};

/// Throws std::invalid_argument for depth < 1 or a non-cubic main volume.
PrefixVolume make_prefix_volume(const LatticeGeometry &main, int depth);

struct PrefixResult {
    /// Flagged initial-face plaquettes (main-volume ids), sorted.
    std::vector<int> flags;
    RgResult rg;
};

/// Decodes the slab's flipped plaquette outcomes with the smooth spatial sides
/// and the initial face absorbing; ties go to the initial face.
PrefixResult prefix_initial_face(const PrefixVolume &volume, const std::vector<int> &slab_flips);

std::string flags_json(const std::vector<int> &flags);

}  // namespace gjit

#endif
