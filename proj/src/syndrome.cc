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

#include "gjit/syndrome.h"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "gjit/gf2.h"

namespace gjit {

namespace {

constexpr int kMaxLocalVars = 4000;

Axis third_axis(Axis a, Axis b) {
    for (Axis c : kAxes)
        if (c != a && c != b)
            return c;
    return Axis::X;
}

void flip_edge(const LatticeGeometry &g, int e, std::vector<uint8_t> &loops, std::vector<int> &membrane) {
    membrane.push_back(e);
    for (int p : g.edge_plaquettes(e))
        loops[p] ^= 1;
}

int find_root(std::vector<int> &parent, int x) {
    while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    return x;
}

std::vector<int> sweep_fill(const LatticeGeometry &g, std::vector<uint8_t> loops) {
    if (g.kind() != LatticeKind::Cubic)
        throw std::invalid_argument("sweep fill needs the cubic lattice");
    const Axis T = g.time_axis();
    const Axis R = g.boundary().rough_axis();
    const Axis A = third_axis(T, R);
    std::vector<int> membrane;

    // Time-normal faces on the initial plane: strings of R-edges to the A-min face.
    for (int p = 0; p < g.num_plaquettes(); p++) {
        const auto &site = g.plaquette(p);
        if (!loops[p] || site.normal != T || site.anchor[T] != 0)
            continue;
        for (int a = 0; a <= site.anchor[A]; a++) {
            Coord3 v = site.anchor;
            v[A] = a;
            flip_edge(g, g.edge_index({v, R}), loops, membrane);
        }
    }
    for (int t = 0; t < g.extent(T); t++) {
        for (int p = 0; p < g.num_plaquettes(); p++) {
            const auto &site = g.plaquette(p);
            if (!loops[p] || site.normal == T || site.anchor[T] != t)
                continue;
            Coord3 v = site.anchor;
            v[T] = t + 1;
            Axis along = site.normal == A ? R : A;
            int e = g.edge_index({v, along});
            if (e < 0)
                throw std::logic_error("sweep reached a missing edge at " + v.str());
            flip_edge(g, e, loops, membrane);
        }
    }
    for (uint8_t b : loops)
        if (b)
            throw std::invalid_argument("loop configuration is not closed");
    return xor_sets(membrane, {});
}

// Solves for edges inside `box` whose plaquette flips equal `targets`.
std::optional<std::vector<int>> solve_in_box(const LatticeGeometry &g, const Box &box,
                                             const std::vector<uint8_t> &targets) {
    std::vector<int> vars;
    std::vector<int> local(g.num_edges(), -1);
    for (int e = 0; e < g.num_edges(); e++) {
        const auto &id = g.edge(e);
        if (box.contains(id.anchor) && box.contains(id.anchor + Coord3::unit(id.axis))) {
            local[e] = static_cast<int>(vars.size());
            vars.push_back(e);
        }
    }
    std::vector<int> plaquettes;
    std::vector<uint8_t> seen(g.num_plaquettes(), 0);
    for (int e : vars)
        for (int p : g.edge_plaquettes(e))
            if (!seen[p]) {
                seen[p] = 1;
                plaquettes.push_back(p);
            }
    for (int p = 0; p < g.num_plaquettes(); p++)
        if (targets[p] && !seen[p])
            return std::nullopt;
    std::vector<std::vector<int>> rows;
    std::vector<uint8_t> rhs;
    for (int p : plaquettes) {
        std::vector<int> row;
        for (int e : g.plaquette_edges(p))
            if (local[e] >= 0)
                row.push_back(local[e]);
        rows.push_back(std::move(row));
        rhs.push_back(targets[p]);
    }
    auto x = solve_gf2(static_cast<int>(vars.size()), rows, rhs);
    if (!x)
        return std::nullopt;
    std::vector<int> out;
    for (size_t i = 0; i < vars.size(); i++)
        if ((*x)[i])
            out.push_back(vars[i]);
    return out;
}

std::vector<int> local_fill(const LatticeGeometry &g, const std::vector<uint8_t> &loops) {
    std::vector<int> parent(g.num_plaquettes());
    std::iota(parent.begin(), parent.end(), 0);
    for (int c = 0; c < g.num_cells(); c++) {
        int first = -1;
        for (int p : g.cell_plaquettes(c)) {
            if (!loops[p])
                continue;
            if (first < 0)
                first = p;
            else
                parent[find_root(parent, p)] = find_root(parent, first);
        }
    }
    std::vector<std::vector<int>> components(g.num_plaquettes());
    for (int p = 0; p < g.num_plaquettes(); p++)
        if (loops[p])
            components[find_root(parent, p)].push_back(p);

    const Box whole = g.vertex_box();
    std::vector<int> membrane;
    for (const auto &comp : components) {
        if (comp.empty())
            continue;
        Box box;
        std::vector<uint8_t> targets(g.num_plaquettes(), 0);
        for (int p : comp) {
            targets[p] = 1;
            for (int e : g.plaquette_edges(p)) {
                box.include(g.edge(e).anchor);
                box.include(g.edge(e).anchor + Coord3::unit(g.edge(e).axis));
            }
        }
        std::optional<std::vector<int>> part;
        for (int margin = 0;; margin = margin ? 2 * margin : 1) {
            Box b = box.expanded(margin).clipped(whole);
            int64_t vars = 3LL * (b.hi.x - b.lo.x + 1) * (b.hi.y - b.lo.y + 1) * (b.hi.z - b.lo.z + 1);
            if (vars > kMaxLocalVars && g.kind() == LatticeKind::Cubic) {
                part = sweep_fill(g, targets);
                break;
            }
            part = solve_in_box(g, b, targets);
            if (part || b == whole)
                break;
        }
        if (!part)
            throw std::invalid_argument("loop component cannot be filled");
        membrane.insert(membrane.end(), part->begin(), part->end());
    }
    return xor_sets(membrane, {});
}

}  // namespace

int GaugeOutcome::count() const {
    int n = 0;
    for (uint8_t b : minus)
        n += b;
    return n;
}

std::vector<int> GaugeOutcome::support() const {
    std::vector<int> out;
    for (size_t p = 0; p < minus.size(); p++)
        if (minus[p])
            out.push_back(static_cast<int>(p));
    return out;
}

std::vector<int> xor_sets(const std::vector<int> &a, const std::vector<int> &b) {
    std::vector<int> all(a);
    all.insert(all.end(), b.begin(), b.end());
    std::sort(all.begin(), all.end());
    std::vector<int> out;
    for (size_t i = 0; i < all.size();) {
        size_t j = i;
        while (j < all.size() && all[j] == all[i])
            j++;
        if ((j - i) % 2)
            out.push_back(all[i]);
        i = j;
    }
    return out;
}

GaugeOutcome outcome_of(const LatticeGeometry &g, const std::vector<int> &edges) {
    GaugeOutcome out{std::vector<uint8_t>(g.num_plaquettes(), 0)};
    for (int e : edges)
        for (int p : g.edge_plaquettes(e))
            out.minus[p] ^= 1;
    return out;
}

GaugeOutcome plaquette_set(const LatticeGeometry &g, const std::vector<int> &plaquettes) {
    GaugeOutcome out{std::vector<uint8_t>(g.num_plaquettes(), 0)};
    for (int p : plaquettes)
        out.minus[p] ^= 1;
    return out;
}

std::vector<uint8_t> star_syndrome(const LatticeGeometry &g, const std::vector<int> &edges) {
    std::vector<uint8_t> out(g.num_stars(), 0);
    for (int e : edges)
        for (int s : g.edge_stars(e))
            out[s] ^= 1;
    return out;
}

GaugeSample sample_random_gauge(const LatticeGeometry &g, uint64_t seed, uint64_t trial) {
    Rng rng = make_rng(seed, trial, kStreamGauge);
    const Axis T = g.time_axis();
    GaugeSample s;
    for (int e = 0; e < g.num_edges(); e++) {
        const auto &id = g.edge(e);
        bool initial_plane = id.axis != T && id.anchor[T] == 0;
        if (!initial_plane && (rng() & 1))
            s.frame.edges.push_back(e);
    }
    s.outcome = outcome_of(g, s.frame.edges);
    return s;
}

GaugeOutcome apply_errors(const LatticeGeometry &g, const GaugeOutcome &gauge, const ErrorSet &errors) {
    GaugeOutcome out = gauge;
    if (out.minus.size() != static_cast<size_t>(g.num_plaquettes()))
        throw std::invalid_argument("gauge outcome does not match geometry");
    for (int e : errors.data)
        for (int p : g.edge_plaquettes(e))
            out.minus[p] ^= 1;
    for (const auto &m : errors.meas)
        out.minus[m.plaquette] ^= 1;
    return out;
}

DefectSet extract_defects(const LatticeGeometry &g, const GaugeOutcome &gauge) {
    DefectSet out;
    for (int c = 0; c < g.num_cells(); c++) {
        int parity = 0;
        for (int p : g.cell_plaquettes(c))
            parity ^= gauge.minus[p];
        if (parity) {
            const auto &cell = g.cell(c);
            out.push_back({c, cell.anchor, cell.kind, cell.anchor[g.time_axis()]});
        }
    }
    return out;
}

std::string defects_csv(const LatticeGeometry &g, const DefectSet &defects) {
    std::ostringstream out;
    out << "cell_x,cell_y,cell_t,kind\n";
    const Axis T = g.time_axis();
    for (const auto &d : defects) {
        bool first = true;
        for (Axis a : kAxes) {
            if (a == T)
                continue;
            out << d.pos[a] << (first ? "," : "");
            first = false;
        }
        out << ',' << d.pos[T] << ',' << (d.kind == ConstraintCell::Kind::Cube ? "cube" : "vertex") << '\n';
    }
    return out.str();
}

Membrane fix_gauge(const LatticeGeometry &g, const GaugeOutcome &loops, FillMethod method) {
    if (!extract_defects(g, loops).empty())
        throw std::invalid_argument("loop configuration has unpaired endpoints");
    if (method == FillMethod::Sweep)
        return {sweep_fill(g, loops.minus)};
    return {local_fill(g, loops.minus)};
}

}  // namespace gjit
