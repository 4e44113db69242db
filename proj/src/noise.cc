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

#include "gjit/noise.h"

#include <cmath>
#include <stdexcept>

#include "json.hpp"

namespace gjit {

namespace {

uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

int floor_div(int a, int b) {
    int q = a / b;
    return (a % b != 0 && (a < 0) != (b < 0)) ? q - 1 : q;
}

template <typename T>
void cancel_pairs(std::vector<T> &v) {
    std::sort(v.begin(), v.end());
    std::vector<T> out;
    for (size_t i = 0; i < v.size();) {
        size_t j = i;
        while (j < v.size() && v[j] == v[i])
            j++;
        if ((j - i) % 2 == 1)
            out.push_back(v[i]);
        i = j;
    }
    v = std::move(out);
}

}  // namespace

Rng make_rng(uint64_t seed, uint64_t trial, uint64_t stream) {
    uint64_t h = splitmix64(seed);
    h = splitmix64(h ^ trial);
    h = splitmix64(h ^ (stream * 0xd1342543de82ef95ULL));
    return Rng(h);
}

void ErrorSet::normalize() {
    cancel_pairs(data);
    cancel_pairs(meas);
}

std::string ErrorSet::to_json() const {
    nlohmann::json j;
    j["data"] = data;
    j["meas"] = nlohmann::json::array();
    for (const auto &m : meas)
        j["meas"].push_back({m.plaquette, m.t});
    return j.dump();
}

ErrorSet ErrorSet::from_json(const std::string &text) {
    auto j = nlohmann::json::parse(text);
    ErrorSet e;
    e.data = j.at("data").get<std::vector<int>>();
    for (const auto &m : j.at("meas"))
        e.meas.push_back({m.at(0).get<int>(), m.at(1).get<int>()});
    return e;
}

ErrorSet sample_errors(const LatticeGeometry &g, const NoiseParams &params, int time_extent, uint64_t trial) {
    if (time_extent < 1)
        throw std::invalid_argument("time extent must be at least 1");
    return sample_errors(g, params, TimeWindow{0, time_extent}, trial);
}

ErrorSet sample_errors(const LatticeGeometry &g, const NoiseParams &params, TimeWindow window, uint64_t trial,
                       uint64_t stream) {
    if (params.eps < 0.0 || params.eps > 1.0)
        throw std::invalid_argument("eps must lie in [0, 1]");
    ErrorSet out;
    if (params.eps == 0.0)
        return out;
    Rng rng = make_rng(params.seed, trial, stream);
    std::bernoulli_distribution flip(params.eps);
    const Axis t = g.time_axis();
    for (int e = 0; e < g.num_edges(); e++)
        if (window.contains(g.edge(e).anchor[t]) && flip(rng))
            out.data.push_back(e);
    for (int p = 0; p < g.num_plaquettes(); p++) {
        int time = g.plaquette_time(p);
        if (window.contains(time) && flip(rng))
            out.meas.push_back({p, time});
    }
    return out;
}

std::vector<int> sample_edge_flips(const LatticeGeometry &g, double eps, Rng &rng) {
    std::vector<int> out;
    if (eps <= 0.0)
        return out;
    std::bernoulli_distribution flip(eps);
    for (int e = 0; e < g.num_edges(); e++)
        if (flip(rng))
            out.push_back(e);
    return out;
}

double site_error_probability(double eps, int N) {
    if (N < 1)
        throw std::invalid_argument("qubits per site must be positive");
    if (eps < 0.0 || eps > 1.0)
        throw std::invalid_argument("eps must lie in [0, 1]");
    if (eps == 1.0)
        return 1.0;
    return -std::expm1(N * std::log1p(-eps));
}

Coord3 SiteGrid::site_of(const Coord3 &anchor) const {
    return {floor_div(anchor.x, side), floor_div(anchor.y, side), floor_div(anchor.z, side)};
}

Coord3 edge_site(const LatticeGeometry &g, int edge, const SiteGrid &grid) {
    return grid.site_of(g.edge(edge).anchor);
}

Coord3 plaquette_site(const LatticeGeometry &g, int plaquette, const SiteGrid &grid) {
    return grid.site_of(g.plaquette(plaquette).anchor);
}

std::vector<Coord3> to_sites(const LatticeGeometry &g, const ErrorSet &errors, const SiteGrid &grid) {
    std::vector<Coord3> sites;
    for (int e : errors.data)
        sites.push_back(edge_site(g, e, grid));
    for (const auto &m : errors.meas)
        sites.push_back(plaquette_site(g, m.plaquette, grid));
    std::sort(sites.begin(), sites.end());
    sites.erase(std::unique(sites.begin(), sites.end()), sites.end());
    return sites;
}

}  // namespace gjit
