#include "gjit/noise.h"

#include <gtest/gtest.h>

#include <cmath>
#include <map>

using namespace gjit;

namespace {

LatticeGeometry cubic(int L) {
    return build_lattice(LatticeKind::Cubic, L, BoundarySpec::rough_pair(Axis::Z));
}

}  // namespace

TEST(Noise, ZeroAndOneProbability) {
    auto g = cubic(4);
    NoiseParams p{0.0, 7};
    EXPECT_TRUE(sample_errors(g, p, g.extent(Axis::X) + 1).empty());
    p.eps = 1.0;
    auto all = sample_errors(g, p, g.extent(Axis::X) + 1);
    EXPECT_EQ(static_cast<int>(all.data.size()), g.num_edges());
    EXPECT_EQ(static_cast<int>(all.meas.size()), g.num_plaquettes());
}

TEST(Noise, TimeExtentLimitsFlips) {
    auto g = cubic(4);
    auto e = sample_errors(g, NoiseParams{1.0, 1}, 2);
    for (int d : e.data)
        EXPECT_LT(g.edge(d).anchor.x, 2);
    for (const auto &m : e.meas) {
        EXPECT_LT(m.t, 2);
        EXPECT_EQ(m.t, g.plaquette_time(m.plaquette));
    }
    EXPECT_THROW(sample_errors(g, NoiseParams{0.1, 1}, 0), std::invalid_argument);
}

TEST(Noise, Deterministic) {
    auto g = cubic(5);
    NoiseParams p{0.1, 1234};
    auto a = sample_errors(g, p, 6, 17);
    auto b = sample_errors(g, p, 6, 17);
    EXPECT_EQ(a.data, b.data);
    EXPECT_EQ(a.meas, b.meas);
    auto c = sample_errors(g, p, 6, 18);
    EXPECT_NE(a.data, c.data);
}

TEST(Noise, BinomialFlipCount) {
    auto g = cubic(4);
    const int n = g.num_edges() + g.num_plaquettes();
    const double eps = 0.1;
    double total = 0;
    const int samples = 1000;
    for (int t = 0; t < samples; t++)
        total += sample_errors(g, NoiseParams{eps, 99}, 5, t).size();
    double mean = total / samples;
    double sigma = std::sqrt(n * eps * (1 - eps) / samples);
    EXPECT_NEAR(mean, n * eps, 5 * sigma);
}

TEST(Noise, SiteErrorProbability) {
    EXPECT_EQ(site_error_probability(0.0, 120), 0.0);
    EXPECT_DOUBLE_EQ(site_error_probability(0.3, 1), 0.3);
    EXPECT_NEAR(site_error_probability(0.01, 120), 0.700619608687668, 1e-14);
    EXPECT_EQ(site_error_probability(1.0, 5), 1.0);
    EXPECT_THROW(site_error_probability(0.1, 0), std::invalid_argument);
}

TEST(Noise, EmpiricalSiteFrequency) {
    auto g = cubic(6);
    SiteGrid grid{2};
    const Coord3 site{1, 1, 1};
    int qubits = 0;
    for (int e = 0; e < g.num_edges(); e++)
        qubits += edge_site(g, e, grid) == site;
    for (int p = 0; p < g.num_plaquettes(); p++)
        qubits += plaquette_site(g, p, grid) == site;
    ASSERT_EQ(qubits, 48);
    EXPECT_NEAR(site_error_probability(0.001, 48), 0.0468891031201057, 1e-14);

    const double eps = 0.02;
    const int samples = 10000;
    int hits = 0;
    for (int t = 0; t < samples; t++) {
        auto sites = to_sites(g, sample_errors(g, NoiseParams{eps, 5}, 7, t), grid);
        hits += std::binary_search(sites.begin(), sites.end(), site);
    }
    double p = site_error_probability(eps, qubits);
    double sigma = std::sqrt(p * (1 - p) / samples);
    EXPECT_NEAR(static_cast<double>(hits) / samples, p, 5 * sigma);
}

TEST(Noise, ToSites) {
    auto g = cubic(4);
    SiteGrid grid{2};
    EXPECT_TRUE(to_sites(g, ErrorSet{}, grid).empty());
    int e1 = g.edge_index({{2, 2, 2}, Axis::X});
    int e2 = g.edge_index({{3, 3, 3}, Axis::Y});
    ErrorSet one{{e1}, {}};
    EXPECT_EQ(to_sites(g, one, grid), (std::vector<Coord3>{{1, 1, 1}}));
    ErrorSet two{{e1, e2}, {}};
    EXPECT_EQ(to_sites(g, two, grid).size(), 1u);
}

TEST(Noise, JsonRoundTrip) {
    ErrorSet e{{3, 5, 9}, {{2, 0}, {7, 3}}};
    auto text = e.to_json();
    EXPECT_EQ(text, R"({"data":[3,5,9],"meas":[[2,0],[7,3]]})");
    auto back = ErrorSet::from_json(text);
    EXPECT_EQ(back.data, e.data);
    EXPECT_EQ(back.meas, e.meas);
}

TEST(Noise, NormalizeCancelsPairs) {
    ErrorSet e{{4, 1, 4, 4}, {{1, 0}, {1, 0}}};
    e.normalize();
    EXPECT_EQ(e.data, (std::vector<int>{1, 4}));
    EXPECT_TRUE(e.meas.empty());
}
