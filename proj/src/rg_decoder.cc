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

#include "gjit/rg_decoder.h"

#include <numeric>
#include <stdexcept>
#include <tuple>

#include "gjit/syndrome.h"
#include "json.hpp"

namespace gjit {

namespace {

constexpr int kFar = std::numeric_limits<int>::max();

int find_root(std::vector<int> &parent, int i) {
    while (parent[i] != i) {
        parent[i] = parent[parent[i]];
        i = parent[i];
    }
    return i;
}

void toggle(std::vector<uint8_t> &mask, const std::vector<int> &links) {
    for (int l : links)
        mask[l] ^= 1;
}

struct Candidate {
    int distance;
    int is_boundary;
    int rank;
    int a;
    int b;
    Side side;
};

bool operator<(const Candidate &x, const Candidate &y) {
    return std::tie(x.distance, x.is_boundary, x.rank, x.a, x.b) <
           std::tie(y.distance, y.is_boundary, y.rank, y.a, y.b);
}

}  // namespace

ChargeSpace::ChargeSpace(const LatticeGeometry &g, Sector sector, std::vector<Side> absorbing)
    : g_(&g), sector_(sector), absorbing_(std::move(absorbing)) {
    if (g.kind() != LatticeKind::Cubic)
        throw std::invalid_argument("charge spaces are defined on the cubic lattice");
    BoundaryType wanted = sector == Sector::Cells ? BoundaryType::Smooth : BoundaryType::Rough;
    for (Side s : absorbing_)
        if (g.boundary()[s] != wanted)
            throw std::invalid_argument("side " + side_name(s) + " cannot absorb this charge type");
    int k = 0;
    for (Axis a : kAxes)
        if (a != g.time_axis())
            axis_order_[k++] = a;
    axis_order_[2] = g.time_axis();
}

int ChargeSpace::num_nodes() const {
    return sector_ == Sector::Cells ? g_->num_cells() : g_->num_stars();
}

int ChargeSpace::num_links() const {
    return sector_ == Sector::Cells ? g_->num_plaquettes() : g_->num_edges();
}

Coord3 ChargeSpace::position(int node) const {
    return sector_ == Sector::Cells ? g_->cell(node).anchor : g_->star(node).anchor;
}

int ChargeSpace::node_at(const Coord3 &pos) const {
    if (sector_ == Sector::Cells)
        return g_->in_cell_box(pos) ? g_->cell_index({ConstraintCell::Kind::Cube, pos}) : -1;
    return g_->in_vertex_box(pos) ? g_->star_index({StarSite::Kind::Vertex, pos}) : -1;
}

bool ChargeSpace::is_absorbing(Side s) const {
    return std::find(absorbing_.begin(), absorbing_.end(), s) != absorbing_.end();
}

int ChargeSpace::boundary_distance(int node, Side side) const {
    if (!is_absorbing(side))
        return kFar;
    Coord3 p = position(node);
    Axis a = side_axis(side);
    int n = g_->extent(a);
    if (sector_ == Sector::Cells)
        return side_is_max(side) ? n - p[a] : p[a] + 1;
    return side_is_max(side) ? n - p[a] : p[a];
}

int ChargeSpace::nearest_boundary_distance(int node) const {
    int best = kFar;
    for (Side s : absorbing_)
        best = std::min(best, boundary_distance(node, s));
    return best;
}

int ChargeSpace::link_between(const Coord3 &p, Axis a, int dir) const {
    Coord3 step = Coord3::unit(a);
    int link;
    if (sector_ == Sector::Cells)
        link = g_->plaquette_index(FaceId{dir > 0 ? p + step : p, a});
    else
        link = g_->edge_index(EdgeId{dir > 0 ? p : p - step, a});
    if (link < 0)
        throw std::logic_error("missing link at " + p.str());
    return link;
}

std::vector<int> ChargeSpace::path(int a, int b) const {
    std::vector<int> links;
    Coord3 p = position(a);
    Coord3 q = position(b);
    for (Axis ax : axis_order_) {
        int dir = q[ax] > p[ax] ? 1 : -1;
        while (p[ax] != q[ax]) {
            links.push_back(link_between(p, ax, dir));
            p[ax] += dir;
        }
    }
    return links;
}

std::vector<int> ChargeSpace::boundary_path(int node, Side side) const {
    if (!is_absorbing(side))
        throw std::invalid_argument("side " + side_name(side) + " is not absorbing");
    std::vector<int> links;
    Coord3 p = position(node);
    Axis a = side_axis(side);
    int dir = side_is_max(side) ? 1 : -1;
    int steps = boundary_distance(node, side);
    for (int i = 0; i < steps; i++) {
        links.push_back(link_between(p, a, dir));
        p[a] += dir;
    }
    return links;
}

std::vector<int> ChargeSpace::charges(const std::vector<int> &links) const {
    std::vector<uint8_t> odd(num_nodes(), 0);
    for (int l : links) {
        auto nodes = sector_ == Sector::Cells ? g_->plaquette_cells(l) : g_->edge_stars(l);
        for (int n : nodes)
            odd[n] ^= 1;
    }
    std::vector<int> out;
    for (int i = 0; i < num_nodes(); i++)
        if (odd[i])
            out.push_back(i);
    return out;
}

namespace {

int boundary_rank(const RgOptions &options, Side s) {
    auto it = std::find(options.boundary_order.begin(), options.boundary_order.end(), s);
    if (it != options.boundary_order.end())
        return static_cast<int>(it - options.boundary_order.begin());
    return static_cast<int>(options.boundary_order.size()) + static_cast<int>(s);
}

// Greedy nearest-first matching. Returns false when some member is left
// without a partner.
bool greedy_match(const ChargeSpace &space, const std::vector<int> &members, int reach, bool allow_boundary,
                  const RgOptions &options, std::vector<Candidate> &chosen) {
    std::vector<Candidate> cands;
    for (size_t i = 0; i < members.size(); i++) {
        Coord3 pi = space.position(members[i]);
        for (size_t j = i + 1; j < members.size(); j++) {
            Coord3 d = pi - space.position(members[j]);
            int links = std::abs(d.x) + std::abs(d.y) + std::abs(d.z);
            cands.push_back({links, 0, 0, members[i], members[j], Side::XMin});
        }
        if (!allow_boundary)
            continue;
        for (Side s : space.absorbing()) {
            int d = space.boundary_distance(members[i], s);
            if (d <= reach)
                cands.push_back({d, 1, boundary_rank(options, s), members[i], -1, s});
        }
    }
    std::sort(cands.begin(), cands.end());
    std::vector<int> done;
    auto used = [&](int n) { return std::find(done.begin(), done.end(), n) != done.end(); };
    for (const auto &c : cands) {
        if (used(c.a) || (c.b >= 0 && used(c.b)))
            continue;
        chosen.push_back(c);
        done.push_back(c.a);
        if (c.b >= 0)
            done.push_back(c.b);
    }
    return done.size() == members.size();
}

constexpr int kExactClusterLimit = 14;

// Lowest-cost pairing by dynamic programming over subsets. Cost orders by
// total links, then number of boundary matches, then boundary ranks.
void exact_match(const ChargeSpace &space, const std::vector<int> &members, int reach, bool allow_boundary,
                 const RgOptions &options, std::vector<Candidate> &chosen) {
    const int k = static_cast<int>(members.size());
    const int full = (1 << k) - 1;
    using Cost = std::tuple<int, int, int>;
    const Cost inf{kFar, 0, 0};
    std::vector<Cost> best(1 << k, inf);
    std::vector<Candidate> step(1 << k);
    best[full] = {0, 0, 0};
    for (int mask = full - 1; mask >= 0; mask--) {
        int i = 0;
        while (mask >> i & 1)
            i++;
        auto consider = [&](const Candidate &c, int next) {
            if (std::get<0>(best[next]) == kFar)
                return;
            Cost total{std::get<0>(best[next]) + c.distance, std::get<1>(best[next]) + c.is_boundary,
                       std::get<2>(best[next]) + c.rank};
            if (total < best[mask]) {
                best[mask] = total;
                step[mask] = c;
            }
        };
        Coord3 pi = space.position(members[i]);
        for (int j = i + 1; j < k; j++) {
            if (mask >> j & 1)
                continue;
            Coord3 d = pi - space.position(members[j]);
            consider({std::abs(d.x) + std::abs(d.y) + std::abs(d.z), 0, 0, members[i], members[j], Side::XMin},
                     mask | 1 << i | 1 << j);
        }
        if (!allow_boundary)
            continue;
        for (Side s : space.absorbing()) {
            int d = space.boundary_distance(members[i], s);
            if (d <= reach)
                consider({d, 1, boundary_rank(options, s), members[i], -1, s}, mask | 1 << i);
        }
    }
    int mask = 0;
    while (mask != full) {
        const Candidate &c = step[mask];
        chosen.push_back(c);
        int i = static_cast<int>(std::find(members.begin(), members.end(), c.a) - members.begin());
        mask |= 1 << i;
        if (c.b >= 0)
            mask |= 1 << static_cast<int>(std::find(members.begin(), members.end(), c.b) - members.begin());
    }
}

}  // namespace

RgLevelResult error_correct_level(const ChargeSpace &space, const std::vector<int> &defects, int p,
                                  const RgOptions &options) {
    RgLevelResult result;
    const int reach = 1 << p;
    const int k = static_cast<int>(defects.size());
    std::vector<int> parent(k);
    std::iota(parent.begin(), parent.end(), 0);
    for (int i = 0; i < k; i++)
        for (int j = i + 1; j < k; j++)
            if (linf_distance(space.position(defects[i]), space.position(defects[j])) <= reach)
                parent[find_root(parent, i)] = find_root(parent, j);

    std::vector<std::vector<int>> clusters(k);
    for (int i = 0; i < k; i++)
        clusters[find_root(parent, i)].push_back(defects[i]);

    std::vector<uint8_t> mask(space.num_links(), 0);
    for (auto &members : clusters) {
        if (members.empty())
            continue;
        std::sort(members.begin(), members.end());
        int near = kFar;
        for (int n : members)
            near = std::min(near, space.nearest_boundary_distance(n));
        bool odd = members.size() % 2 == 1;
        bool reachable = near <= reach;
        if (odd && !reachable) {
            result.residual.insert(result.residual.end(), members.begin(), members.end());
            continue;
        }
        std::vector<Candidate> chosen;
        if (static_cast<int>(members.size()) <= kExactClusterLimit) {
            exact_match(space, members, reach, reachable, options, chosen);
        } else if (!greedy_match(space, members, reach, reachable, options, chosen)) {
            chosen.clear();
            std::vector<int> rest = members;
            if (odd) {
                Candidate best{kFar, 1, 0, -1, -1, Side::XMin};
                for (int n : members)
                    for (Side s : space.absorbing()) {
                        Candidate c{space.boundary_distance(n, s), 1, boundary_rank(options, s), n, -1, s};
                        if (c < best)
                            best = c;
                    }
                chosen.push_back(best);
                rest.erase(std::find(rest.begin(), rest.end(), best.a));
            }
            greedy_match(space, rest, reach, false, options, chosen);
        }
        for (const auto &c : chosen) {
            RgMatch m{p, c.a, c.b, c.b >= 0 ? kNoBoundary : static_cast<int>(c.side), c.distance};
            result.matches.push_back(m);
            toggle(mask, c.b >= 0 ? space.path(c.a, c.b) : space.boundary_path(c.a, c.side));
        }
    }
    for (int l = 0; l < space.num_links(); l++)
        if (mask[l])
            result.links.push_back(l);
    std::sort(result.residual.begin(), result.residual.end());
    return result;
}

RgResult rg_decode(const ChargeSpace &space, const std::vector<int> &defects, const RgOptions &options) {
    int m = options.max_level;
    if (m < 0) {
        m = 0;
        while ((1 << m) < space.size())
            m++;
    }
    RgResult result;
    result.levels = m;
    std::vector<int> current = defects;
    std::sort(current.begin(), current.end());
    current.erase(std::unique(current.begin(), current.end()), current.end());
    std::vector<uint8_t> mask(space.num_links(), 0);
    for (int p = 0; p <= m && !current.empty(); p++) {
        RgLevelResult level = error_correct_level(space, current, p, options);
        toggle(mask, level.links);
        result.matches.insert(result.matches.end(), level.matches.begin(), level.matches.end());
        current = std::move(level.residual);
    }
    for (int l = 0; l < space.num_links(); l++)
        if (mask[l])
            result.links.push_back(l);
    result.residual = std::move(current);
    result.success = result.residual.empty();
    return result;
}

std::string RgResult::to_json(const ChargeSpace &space) const {
    auto pos = [&](int n) {
        Coord3 p = space.position(n);
        return nlohmann::json::array({p.x, p.y, p.z});
    };
    nlohmann::json j;
    j["success"] = success;
    j["levels"] = levels;
    j["links"] = links;
    j["matches"] = nlohmann::json::array();
    for (const auto &m : matches) {
        nlohmann::json e{{"level", m.level}, {"a", pos(m.a)}, {"distance", m.distance}};
        if (m.b >= 0)
            e["b"] = pos(m.b);
        else
            e["boundary"] = side_name(static_cast<Side>(m.side));
        j["matches"].push_back(e);
    }
    j["residual"] = nlohmann::json::array();
    for (int n : residual)
        j["residual"].push_back(pos(n));
    return j.dump();
}

std::vector<int> logical_membrane(const LatticeGeometry &g) {
    Axis r = g.boundary().rough_axis();
    std::vector<int> out;
    for (int e = 0; e < g.num_edges(); e++)
        if (g.edge(e).axis == r && g.edge(e).anchor[r] == 0)
            out.push_back(e);
    return out;
}

Outcome check_success(const LatticeGeometry &g, const std::vector<int> &error, const std::vector<int> &correction) {
    std::vector<int> combined = xor_sets(error, correction);
    auto syn = star_syndrome(g, combined);
    if (std::find(syn.begin(), syn.end(), 1) != syn.end())
        throw std::invalid_argument("correction leaves a star violation");
    Axis r = g.boundary().rough_axis();
    int parity = 0;
    for (int e : combined)
        if (g.edge(e).axis == r && g.edge(e).anchor[r] == 0)
            parity ^= 1;
    return parity ? Outcome::LogicalFailure : Outcome::Success;
}

SpreadInstance sample_spread_instance(const LatticeGeometry &g, int diameter, uint64_t seed, uint64_t index) {
    Rng rng = make_rng(seed, index, kStreamPlant);
    SpreadInstance inst;
    const Axis rough = g.boundary().rough_axis();
    const int placement = static_cast<int>(index / 4 % 3);
    const int mode = static_cast<int>(index % 4);
    for (Axis a : kAxes) {
        int hi = g.extent(a) - diameter;
        if (hi < 0)
            throw std::invalid_argument("container does not fit in the lattice");
        std::uniform_int_distribution<int> lo(0, hi);
        int v = lo(rng);
        bool pin = placement == 2 || (placement == 1 && a == rough) || (mode == 3 && a == rough);
        if (pin)
            v = std::bernoulli_distribution(0.5)(rng) ? 0 : hi;
        inst.container.lo[a] = v;
        inst.container.hi[a] = v + diameter;
    }
    const Box &box = inst.container;
    auto inside = [&](const Coord3 &v) { return box.contains(v); };
    auto edge_ok = [&](const Coord3 &v, Axis a) {
        return inside(v) && inside(v + Coord3::unit(a)) && g.has_edge({v, a});
    };
    std::vector<uint8_t> mask(g.num_edges(), 0);
    auto flip = [&](const Coord3 &v, Axis a) {
        if (edge_ok(v, a))
            mask[g.edge_index({v, a})] ^= 1;
    };
    auto random_point = [&]() {
        Coord3 p;
        for (Axis a : kAxes)
            p[a] = std::uniform_int_distribution<int>(box.lo[a], box.hi[a])(rng);
        return p;
    };
    std::uniform_int_distribution<int> pick_axis(0, 2);
    if (mode == 0) {
        double density = std::uniform_real_distribution<double>(0.05, 0.6)(rng);
        std::bernoulli_distribution hit(density);
        for (int e = 0; e < g.num_edges(); e++) {
            const EdgeId &id = g.edge(e);
            if (edge_ok(id.anchor, id.axis) && hit(rng))
                mask[e] = 1;
        }
    } else if (mode == 1) {
        Coord3 p = random_point();
        int steps = std::uniform_int_distribution<int>(1, 3 * diameter)(rng);
        for (int i = 0; i < steps; i++) {
            Axis a = static_cast<Axis>(pick_axis(rng));
            int dir = std::bernoulli_distribution(0.5)(rng) ? 1 : -1;
            Coord3 q = p;
            q[a] += dir;
            if (!inside(q))
                continue;
            flip(dir > 0 ? p : q, a);
            p = q;
        }
    } else {
        int segments = std::uniform_int_distribution<int>(1, 4)(rng);
        for (int i = 0; i < segments; i++) {
            Coord3 p = random_point();
            Axis a = static_cast<Axis>(pick_axis(rng));
            if (mode == 3) {
                a = rough;
                p[rough] = box.lo[rough];
            }
            int len = std::uniform_int_distribution<int>(1, diameter)(rng);
            for (int k = 0; k < len && p[a] < box.hi[a]; k++) {
                flip(p, a);
                p[a]++;
            }
        }
    }
    for (int e = 0; e < g.num_edges(); e++)
        if (mask[e])
            inst.edges.push_back(e);
    return inst;
}

}  // namespace gjit
