// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gjit/chunks.h"
#include "gjit/harness.h"
#include "gjit/jit_decoder.h"
#include "gjit/lattice.h"
#include "gjit/noise.h"
#include "gjit/prefix.h"
#include "gjit/rg_decoder.h"
#include "gjit/syndrome.h"

using namespace gjit;

namespace {

struct Verdict {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string &what) {
        if (!ok) {
            if (pass)
                detail << "first failure: " << what << "; ";
            pass = false;
        }
    }
};

LatticeGeometry cubic(int L) {
    return build_lattice(LatticeKind::Cubic, L, BoundarySpec::rough_pair(Axis::Z));
}

// Criterion 1
void exact_counts(Verdict &v) {
    v.require(unit_cell_counts(UnitCellModel::CubicOnly).total == 48, "cubic unit cell");
    v.require(unit_cell_counts(UnitCellModel::AlternativeOnly).total == 56, "alternative unit cell");
    v.require(unit_cell_counts(UnitCellModel::FullTripleOverlap).total == 160, "full unit cell");
    for (int64_t d = 3; d <= 25; d++) {
        v.require(estimate_resources(d, Layout::Local).spacetime_volume == 30 * d * d * d,
                  "local volume d=" + std::to_string(d));
        v.require(estimate_resources(d, Layout::Cylinder).spacetime_volume == 18 * d * d * d,
                  "cylinder volume d=" + std::to_string(d));
    }
    v.detail << "48/56/160, 30d^3 and 18d^3 for d=3..25";
}

// Criterion 2
void stabilizer_structure(Verdict &v) {
    int pairs = 0, cells = 0, interior = 0;
    for (auto kind : {LatticeKind::Cubic, LatticeKind::Alternative}) {
        for (Axis rough : kAxes) {
            for (int L = 2; L <= 4; L++) {
                auto g = build_lattice(kind, L, BoundarySpec::rough_pair(rough));
                const std::string tag = kind_name(kind) + " L=" + std::to_string(L) + " rough " + axis_char(rough);
                for (int p = 0; p < g.num_plaquettes(); p++) {
                    std::vector<int> overlap(g.num_stars(), 0);
                    for (int e : g.plaquette_edges(p))
                        for (int s : g.edge_stars(e))
                            overlap[s]++;
                    for (int s = 0; s < g.num_stars(); s++) {
                        v.require(overlap[s] % 2 == 0, tag + " odd overlap");
                        pairs++;
                    }
                    if (kind == LatticeKind::Alternative)
                        v.require(g.plaquette_edges(p).size() == 3, tag + " plaquette weight");
                }
                for (int c = 0; c < g.num_cells(); c++) {
                    std::vector<int> sum;
                    for (int p : g.cell_plaquettes(c)) {
                        auto edges = g.plaquette_edges(p);
                        sum = xor_sets(sum, std::vector<int>(edges.begin(), edges.end()));
                    }
                    v.require(sum.empty(), tag + " cell product");
                    cells++;
                }
                if (kind != LatticeKind::Alternative)
                    continue;
                for (int s = 0; s < g.num_stars(); s++) {
                    const Coord3 a = g.star(s).anchor;
                    bool inside = true;
                    for (Axis ax : kAxes)
                        inside = inside && a[ax] >= 1 && a[ax] <= L - 2;
                    if (!inside)
                        continue;
                    v.require(g.star_edges(s).size() == 12, tag + " interior star weight");
                    interior++;
                }
            }
        }
    }
    v.detail << pairs << " star/plaquette pairs, " << cells << " cells, " << interior << " interior stars";
}

// Criterion 3
void noiseless_closure(Verdict &v) {
    for (auto kind : {LatticeKind::Cubic, LatticeKind::Alternative}) {
        auto g = build_lattice(kind, 6, BoundarySpec::rough_pair(Axis::Z));
        int defects = 0;
        int64_t minus = 0;
        for (uint64_t i = 0; i < 10000; i++) {
            auto gauge = sample_random_gauge(g, 2024, i).outcome;
            minus += gauge.count();
            defects += static_cast<int>(extract_defects(g, gauge).size());
        }
        v.require(defects == 0, kind_name(kind) + " defects");
        v.require(minus > 0, kind_name(kind) + " trivial gauges");
        v.detail << kind_name(kind) << " " << defects << " defects (mean " << minus / 10000.0 << " of "
                 << g.num_plaquettes() << " outcomes -1); ";
    }
}

// Criterion 4
void chunk_machinery(Verdict &v) {
    const DecoderParams untethered{87, 2, 8};
    const int n = 10000;
    for (int Q : {6, 33, 87}) {
        for (double eps : {0.01, 0.05}) {
            int violations = 0, overflow = 0, tethered = 0;
            int64_t components = 0;
            for (int i = 0; i < n; i++) {
                const int L = 4 + i % 9;
                auto g = cubic(L);
                auto errors = sample_errors(g, NoiseParams{eps, 4242}, L, i);
                auto d = decompose(to_sites(g, errors, SiteGrid{2}), Q);
                auto report = verify_diameter_lemma(d);
                violations += static_cast<int>(report.violations.size());
                components += report.components_checked;
                overflow += d.overflow;
                if (Q == 87)
                    tethered += same_level_tethering(d, untethered).same_level_tethered;
            }
            std::ostringstream tag;
            tag << "Q=" << Q << " eps=" << eps;
            v.require(violations == 0, tag.str() + " lemma");
            v.require(overflow == 0, tag.str() + " overflow");
            v.require(tethered == 0, tag.str() + " tethering");
            v.detail << tag.str() << ": " << violations << "/" << components << " violations";
            if (Q == 87)
                v.detail << ", " << tethered << " tethered";
            v.detail << "; ";
        }
    }
}

// Criterion 5. Reference values from a 60-digit mpmath evaluation.
void threshold_arithmetic(Verdict &v) {
    struct Case {
        int64_t L;
        int Q;
        const char *p0;
        int m;
        const char *expected;
    };
    const Case cases[] = {
        {100, 87, "1e-16", 3, "6.8120999999999998345e-118"},
        {12, 6, "1e-3", 2, "5.3333333333333334631e-12"},
        {1000, 33, "1e-6", 5, "7.7004314580515531421e-132"},
        {64, 87, "3e-15", 6, "1.3165872639980862448e-784"},
        {10, 6, "1e-4", 0, "5.292214940134464726e-8"},
    };
    for (const auto &c : cases) {
        BigFloat got = chunk_probability_bound(c.L, c.Q, BigFloat(c.p0), c.m);
        BigFloat want(c.expected);
        BigFloat rel = abs(got - want) / want;
        v.require(rel < BigFloat("5e-13"), "bound L=" + std::to_string(c.L));
    }
    auto report = threshold_report(87, 120);
    v.require(abs(report.p0_threshold - BigFloat("3.1634207280163461272e-15")) / report.p0_threshold < BigFloat("5e-13"),
              "p0 threshold");
    v.detail << "5 bounds to 12 digits; report follows\n" << report.to_text() << "\n"
             << threshold_report(87, 160).to_text();
}

// Criterion 6
struct Planted {
    std::vector<int> meas;
    std::vector<Coord3> sites;
};

Planted plant(const LatticeGeometry &g, std::mt19937_64 &rng, const std::vector<Coord3> &sites) {
    Planted out;
    for (const auto &s : sites) {
        std::vector<int> faces;
        for (Axis a : kAxes) {
            int p = g.plaquette_index(FaceId{s, a});
            if (p >= 0 && std::bernoulli_distribution(0.5)(rng))
                faces.push_back(p);
        }
        if (faces.empty()) {
            for (Axis a : kAxes) {
                int p = g.plaquette_index(FaceId{s, a});
                if (p >= 0) {
                    faces.push_back(p);
                    break;
                }
            }
        }
        out.meas.insert(out.meas.end(), faces.begin(), faces.end());
        out.sites.push_back(s);
    }
    std::sort(out.meas.begin(), out.meas.end());
    std::sort(out.sites.begin(), out.sites.end());
    return out;
}

struct RegimeStats {
    int runs = 0;
    int max_lifetime = 0;
    int max_reach = 0;
    double max_s_emp = 0.0;
    int cross = 0;
};

int reach(const std::vector<Coord3> &core, const Coord3 &p) {
    int best = std::numeric_limits<int>::max();
    for (const auto &c : core)
        best = std::min(best, linf_distance(c, p));
    return best;
}

void run_planted(const LatticeGeometry &g, const Planted &planted, int Q, int j, RegimeStats &stats, Verdict &v,
                 const std::string &tag) {
    const SiteGrid grid{1};
    auto defects = extract_defects(g, plaquette_set(g, planted.meas));
    auto result = run_jit(g, defects);
    auto d = decompose(planted.sites, Q);
    v.require(d.m == j && d.components(j).size() == 1, tag + " planted level");

    std::vector<Coord3> share;
    for (const auto &x : defects)
        share.push_back(grid.site_of(x.pos));
    for (int p : xor_sets(planted.meas, result.correction))
        share.push_back(plaquette_site(g, p, grid));
    auto spread = measure_spread(d, share, result.max_lifetime);

    stats.runs++;
    stats.max_lifetime = std::max(stats.max_lifetime, result.max_lifetime);
    for (int p : result.correction)
        stats.max_reach = std::max(stats.max_reach, reach(planted.sites, plaquette_site(g, p, grid)));
    stats.max_s_emp = std::max(stats.max_s_emp, spread.max_s_emp);
    stats.cross += count_cross_box_pairs(d, result.decisions, grid);
}

void jit_bounds(Verdict &v) {
    const int L = 16;
    auto g = cubic(L);
    std::mt19937_64 rng(616);
    auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };

    auto report = [&](const std::string &tag, const RegimeStats &s, int life_cap, int reach_cap) {
        v.require(s.max_lifetime <= life_cap, tag + " lifetime");
        v.require(s.max_reach <= reach_cap, tag + " neighbourhood");
        v.require(s.max_s_emp <= 8.0, tag + " spread");
        v.detail << tag << ": " << s.runs << " runs, lifetime " << s.max_lifetime << "<=" << life_cap << ", reach "
                 << s.max_reach << "<=" << reach_cap << ", s_emp " << s.max_s_emp << "; ";
    };

    // Bulk, level 0: one site at least four cells from every side.
    RegimeStats bulk;
    for (int i = 0; i < 1000; i++) {
        Coord3 s{uniform(4, L - 5), uniform(4, L - 5), uniform(4, L - 5)};
        run_planted(g, plant(g, rng, {s}), 33, 0, bulk, v, "bulk j=0");
    }
    report("bulk j=0", bulk, 2 * (1 + 2), 1 + 1);

    // Boundary-adjacent, level 0: within one cell of a smooth side or the terminal face.
    RegimeStats edge0;
    for (int i = 0; i < 1000; i++) {
        Coord3 s{uniform(1, L - 1), uniform(0, L - 1), uniform(0, L - 1)};
        switch (i % 3) {
            case 0: s.y = uniform(0, 1); break;
            case 1: s.y = uniform(L - 2, L - 1); break;
            default: s.x = uniform(L - 2, L - 1); break;
        }
        run_planted(g, plant(g, rng, {s}), 33, 0, edge0, v, "boundary j=0");
    }
    report("boundary j=0", edge0, 3 * (1 + 2), 3 * (1 + 2));

    // Boundary-adjacent, level 1 at Q = 6: two or three sites within a box of side 3.
    RegimeStats edge1;
    for (int i = 0; i < 1000; i++) {
        Coord3 lo{uniform(1, L - 4), uniform(0, L - 4), uniform(0, L - 4)};
        switch (i % 3) {
            case 0: lo.y = uniform(0, 3); break;
            case 1: lo.y = uniform(L - 7, L - 4); break;
            default: lo.x = uniform(L - 7, L - 4); break;
        }
        std::vector<Coord3> sites;
        const int count = 2 + i % 2;
        while (static_cast<int>(sites.size()) < count) {
            Coord3 s = lo + Coord3{uniform(0, 3), uniform(0, 3), uniform(0, 3)};
            if (std::find(sites.begin(), sites.end(), s) == sites.end())
                sites.push_back(s);
        }
        run_planted(g, plant(g, rng, sites), 6, 1, edge1, v, "boundary j=1");
    }
    report("boundary j=1 Q=6", edge1, 3 * (6 + 2), 3 * (6 + 2));

    // Cross-box pairing under random noise, raw boxes at Q = 33 and 87.
    int cross = 0, pairs = 0;
    for (int Q : {33, 87}) {
        for (int i = 0; i < 1000; i++) {
            auto errors = sample_errors(g, NoiseParams{i % 2 ? 0.01 : 0.002, 3333}, L, i);
            std::vector<int> meas;
            for (const auto &m : errors.meas)
                meas.push_back(m.plaquette);
            std::sort(meas.begin(), meas.end());
            auto observed = xor_sets(outcome_of(g, errors.data).support(), meas);
            auto result = run_jit(g, extract_defects(g, plaquette_set(g, observed)));
            auto d = decompose(to_sites(g, errors, SiteGrid{1}), Q);
            cross += count_cross_box_pairs(d, result.decisions, SiteGrid{1});
            for (const auto &m : result.decisions)
                pairs += m.kind == MatchKind::PairDefects;
        }
    }
    v.require(cross == 0, "cross-box pairs");
    v.detail << "random noise: " << cross << " cross-box pairs among " << pairs << " pairings";
}

// Criterion 7
void rg_soundness(Verdict &v) {
    auto g4 = cubic(4);
    ChargeSpace s4(g4, ChargeSpace::Sector::Stars, {Side::ZMin, Side::ZMax});
    auto defects_of = [](const LatticeGeometry &g, const std::vector<int> &edges) {
        auto syn = star_syndrome(g, edges);
        std::vector<int> out;
        for (int i = 0; i < static_cast<int>(syn.size()); i++)
            if (syn[i])
                out.push_back(i);
        return out;
    };
    int single_ok = 0;
    for (int e = 0; e < g4.num_edges(); e++) {
        auto r = rg_decode(s4, defects_of(g4, {e}));
        single_ok += r.success && check_success(g4, {e}, r.links) == Outcome::Success;
    }
    v.require(single_ok == g4.num_edges(), "single errors");

    const DecoderParams params;
    const int diameter = params.s;
    int instances = 0, ok = 0;
    for (int L = 31; L <= 40; L++) {
        auto g = cubic(L);
        v.require(3 * params.fattened_diameter(0) < L, "D_m < L/3");
        ChargeSpace s(g, ChargeSpace::Sector::Stars, {Side::ZMin, Side::ZMax});
        for (uint64_t i = 0; i < 60; i++) {
            auto inst = sample_spread_instance(g, diameter, 7000 + L, i);
            bool contained = inst.container.diameter() <= diameter;
            for (int e : inst.edges)
                contained = contained && inst.container.contains(g.edge(e).anchor) &&
                            inst.container.contains(g.edge(e).anchor + Coord3::unit(g.edge(e).axis));
            v.require(contained, "instance containment");
            auto r = rg_decode(s, defects_of(g, inst.edges));
            ok += r.success && check_success(g, inst.edges, r.links) == Outcome::Success;
            instances++;
        }
    }
    v.require(ok == instances, "spread instances");
    v.detail << "single errors " << single_ok << "/" << g4.num_edges() << " at L=4; spread instances " << ok << "/"
             << instances << " at L=31..40";
}

// Criterion 8
void prefixing(Verdict &v) {
    int planted = 0, recalled = 0, false_flags = 0;
    for (int L = 2; L <= 8; L++) {
        auto main = cubic(L);
        auto volume = make_prefix_volume(main, L);
        false_flags += static_cast<int>(prefix_initial_face(volume, {}).flags.size());
        for (int p = 0; p < volume.slab.num_plaquettes(); p++) {
            if (volume.to_main[p] < 0)
                continue;
            auto flags = prefix_initial_face(volume, {p}).flags;
            planted++;
            for (int f : flags) {
                if (f == volume.to_main[p])
                    recalled++;
                else
                    false_flags++;
            }
        }
    }
    v.require(recalled == planted && false_flags == 0, "flags");
    v.detail << "recall " << recalled << "/" << planted << ", false flags " << false_flags << " (L=2..8, T_pre=L)";
}

// Criterion 9
void threshold_existence(Verdict &v) {
    ExperimentConfig low;
    low.L = {4, 6, 8};
    low.eps = {0.001};
    low.trials = 40000;
    low.seed = 1;
    ExperimentConfig rest = low;
    rest.eps = {0.002, 0.003, 0.005, 0.01};
    rest.trials = 20000;

    std::vector<SweepRow> rows = run_sweep(low);
    for (const auto &r : run_sweep(rest))
        rows.push_back(r);
    std::cout << sweep_csv_header() << "\n";
    for (const auto &r : rows) {
        std::cout << r.csv_line() << "\n";
        v.require(r.trials >= 1000, "trials per point");
        v.require(r.accepted_failure_rate() <= r.failure_rate(), "post-selection dominance");
    }
    auto at = [&](int L, double eps) -> const SweepRow & {
        for (const auto &r : rows)
            if (r.L == L && r.eps == eps)
                return r;
        throw std::logic_error("missing sweep row");
    };
    const double lowest = 0.001, highest = 0.01;
    v.require(at(4, lowest).failure_rate() > at(6, lowest).failure_rate() &&
                  at(6, lowest).failure_rate() > at(8, lowest).failure_rate(),
              "decreasing at lowest eps");
    v.require(at(4, highest).failure_rate() < at(6, highest).failure_rate() &&
                  at(6, highest).failure_rate() < at(8, highest).failure_rate(),
              "increasing at highest eps");
    v.require(at(4, lowest).ci_lo > at(8, lowest).ci_hi, "disjoint intervals at lowest eps");
    v.require(at(8, highest).ci_lo > at(4, highest).ci_hi, "disjoint intervals at highest eps");
    v.detail << "failures at eps=0.001: " << at(4, lowest).failures << "/" << at(6, lowest).failures << "/"
             << at(8, lowest).failures << " of " << low.trials << "; at eps=0.01: " << at(4, highest).failures << "/"
             << at(6, highest).failures << "/" << at(8, highest).failures << " of " << rest.trials;
}

}  // namespace

int main(int argc, char **argv) {
    const std::vector<std::function<void(Verdict &)>> criteria = {
        exact_counts,     stabilizer_structure, noiseless_closure, chunk_machinery,     threshold_arithmetic,
        jit_bounds,       rg_soundness,         prefixing,         threshold_existence,
    };
    // Optional argument: run a single criterion.
    int only = argc > 1 ? std::atoi(argv[1]) : 0;
    int failed = 0;
    for (int i = 0; i < static_cast<int>(criteria.size()); i++) {
        if (only && only != i + 1)
            continue;
        Verdict v;
        auto start = std::chrono::steady_clock::now();
        try {
            criteria[i](v);
        } catch (const std::exception &e) {
            v.require(false, std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        char time[32];
        std::snprintf(time, sizeof time, "%.1fs", secs);
        std::cout << "criterion " << i + 1 << ": " << (v.pass ? "PASS" : "FAIL") << " [" << time << "] "
                  << v.detail.str() << std::endl;
        failed += !v.pass;
    }
    return failed == 0 ? 0 : 1;
}
