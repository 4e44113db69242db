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

#include "gjit/harness.h"

#include <atomic>
#include <boost/math/distributions/binomial.hpp>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "gjit/syndrome.h"
#include "json.hpp"

namespace gjit {

namespace {

using nlohmann::json;

std::vector<int> meas_plaquettes(const ErrorSet &e) {
    std::vector<int> out;
    for (const auto &m : e.meas)
        out.push_back(m.plaquette);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> handoff(const LatticeGeometry &from, const LatticeGeometry &to, const std::vector<int> &edges) {
    std::vector<int> out;
    for (int e : edges) {
        int k = to.edge_index(from.edge(e));
        if (k >= 0)
            out.push_back(k);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> fill(const LatticeGeometry &g, const std::vector<int> &loops) {
    try {
        return fix_gauge(g, plaquette_set(g, loops), FillMethod::Local).edges;
    } catch (const std::invalid_argument &e) {
        throw std::logic_error(std::string("correction leaves open loops: ") + e.what());
    }
}

Outcome decode_partner(const LatticeGeometry &partner, const std::vector<int> &z_errors) {
    const Axis rough = partner.boundary().rough_axis();
    ChargeSpace space(partner, ChargeSpace::Sector::Stars, {side_of(rough, false), side_of(rough, true)});
    auto result = rg_decode(space, space.charges(z_errors));
    if (!result.success)
        throw std::logic_error("partner decode left charges behind");
    return check_success(partner, z_errors, result.links);
}

template <typename T>
std::vector<T> as_list(const json &v) {
    if (v.is_array())
        return v.get<std::vector<T>>();
    return {v.get<T>()};
}

}  // namespace

std::string layout_name(Layout l) {
    return l == Layout::Local ? "Local" : "Cylinder";
}

Layout parse_layout(const std::string &s) {
    if (s == "Local" || s == "local")
        return Layout::Local;
    if (s == "Cylinder" || s == "cylinder")
        return Layout::Cylinder;
    throw ConfigError("unknown layout: " + s);
}

ResourceEstimate estimate_resources(int d, Layout layout) {
    if (d < 1)
        throw std::invalid_argument("code distance must be at least 1");
    const int64_t D = d;
    ResourceEstimate r;
    // Local: two d x 2d patches beside a d x 3d transit region, twice over.
    r.qubit_count = layout == Layout::Local ? 2 * (2 * D * D + 3 * D * D) : 6 * D * D;
    r.time_units = 3 * D;
    r.spacetime_volume = r.qubit_count * r.time_units;
    r.transit_time = 2 * D;
    return r;
}

std::string ResourceEstimate::to_json() const {
    return json{{"qubit_count", qubit_count},
                {"time_units", time_units},
                {"spacetime_volume", spacetime_volume},
                {"transit_time", transit_time}}
        .dump();
}

void ExperimentConfig::validate() const {
    if (lattices.empty() || L.empty() || eps.empty())
        throw ConfigError("lattices, L and eps must be non-empty");
    if (trials < 1)
        throw ConfigError("trials must be at least 1");
    for (int l : L)
        if (l < 2)
            throw ConfigError("every L must be at least 2");
    for (double e : eps)
        if (!(e >= 0.0 && e <= 1.0))
            throw ConfigError("every eps must lie in [0, 1]");
    if (params.Q < 6 || params.r < 2 || params.s < 1)
        throw ConfigError("need Q >= 6, r >= 2, s >= 1");
    if (t_pre < 0)
        throw ConfigError("t_pre must be non-negative");
    if (site_side < 1)
        throw ConfigError("site_side must be at least 1");
    if (output.empty())
        throw ConfigError("output path is empty");
}

std::string ExperimentConfig::to_json() const {
    json j;
    std::vector<std::string> kinds;
    for (auto k : lattices)
        kinds.push_back(kind_name(k));
    j["lattices"] = kinds;
    j["L"] = L;
    j["eps"] = eps;
    j["trials"] = trials;
    j["Q"] = params.Q;
    j["r"] = params.r;
    j["s"] = params.s;
    j["t_pre"] = t_pre;
    j["prefix"] = prefix;
    j["seed"] = seed;
    j["layout"] = layout_name(layout);
    j["output"] = output;
    j["site_side"] = site_side;
    return j.dump();
}

ExperimentConfig ExperimentConfig::parse(const std::string &text) {
    json j;
    size_t first = text.find_first_not_of(" \t\r\n");
    try {
        if (first != std::string::npos && text[first] == '{') {
            j = json::parse(text);
        } else {
            j = json::object();
            std::istringstream in(text);
            std::string line;
            int lineno = 0;
            while (std::getline(in, line)) {
                lineno++;
                size_t hash = line.find('#');
                if (hash != std::string::npos && line.find('"') > hash)
                    line.erase(hash);
                if (line.find_first_not_of(" \t\r") == std::string::npos)
                    continue;
                size_t eq = line.find('=');
                if (eq == std::string::npos)
                    throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
                std::string key = line.substr(0, eq);
                key.erase(0, key.find_first_not_of(" \t"));
                key.erase(key.find_last_not_of(" \t") + 1);
                j[key] = json::parse(line.substr(eq + 1));
            }
        }
    } catch (const json::exception &e) {
        throw ConfigError(std::string("malformed config: ") + e.what());
    }

    ExperimentConfig c;
    try {
        for (auto it = j.begin(); it != j.end(); ++it) {
            const std::string &k = it.key();
            const json &v = it.value();
            if (k == "lattices" || k == "lattice") {
                c.lattices.clear();
                for (const auto &s : as_list<std::string>(v))
                    c.lattices.push_back(parse_kind(s));
            } else if (k == "L") {
                c.L = as_list<int>(v);
            } else if (k == "eps") {
                c.eps = as_list<double>(v);
            } else if (k == "trials") {
                c.trials = v.get<int>();
            } else if (k == "Q") {
                c.params.Q = v.get<int>();
            } else if (k == "r") {
                c.params.r = v.get<int>();
            } else if (k == "s") {
                c.params.s = v.get<int>();
            } else if (k == "t_pre") {
                c.t_pre = v.get<int>();
            } else if (k == "prefix") {
                c.prefix = v.get<bool>();
            } else if (k == "seed") {
                c.seed = v.get<uint64_t>();
            } else if (k == "layout") {
                c.layout = parse_layout(v.get<std::string>());
            } else if (k == "output") {
                c.output = v.get<std::string>();
            } else if (k == "site_side") {
                c.site_side = v.get<int>();
            } else {
                throw ConfigError("unknown config key: " + k);
            }
        }
    } catch (const json::exception &e) {
        throw ConfigError(std::string("bad config value: ") + e.what());
    } catch (const std::invalid_argument &e) {
        throw ConfigError(e.what());
    }
    c.validate();
    return c;
}

ExperimentConfig ExperimentConfig::load(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot read config file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

TrialGeometry::TrialGeometry(int L, int t_pre)
    : main(build_lattice(LatticeKind::Cubic, L, BoundarySpec::rough_pair(Axis::Z))),
      partner(build_lattice(LatticeKind::Cubic, L, BoundarySpec::rough_pair(Axis::Y))),
      prefix(make_prefix_volume(main, t_pre > 0 ? t_pre : L)) {}

std::string TrialRecord::to_json(bool with_time) const {
    json j{{"seed", seed},
           {"trial", trial},
           {"L", L},
           {"eps", eps},
           {"jit_success", jit_success},
           {"hp_success", hp_success},
           {"agreement", agreement},
           {"postselect_accept", postselect_accept},
           {"max_s_emp", max_s_emp},
           {"logical", logical == Outcome::Success ? "Success" : "LogicalFailure"},
           {"defects", defects},
           {"flags", flags},
           {"residual_weight", residual_weight}};
    if (with_time)
        j["wall_ms"] = wall_ms;
    return j.dump();
}

TrialRecord run_trial(const ExperimentConfig &config, const TrialGeometry &geometry, double eps, uint64_t trial,
                      const PlantedErrors *planted, TrialDetail *detail) {
    auto start = std::chrono::steady_clock::now();
    const LatticeGeometry &g = geometry.main;
    const PrefixVolume &prefix = geometry.prefix;
    const Axis T = g.time_axis();
    const int L = g.extent(T);

    ErrorSet errors;
    std::vector<int> slab_flips;
    std::vector<int> partner_noise;
    if (planted) {
        errors = planted->main;
        slab_flips = planted->slab;
        partner_noise = planted->partner;
    } else {
        NoiseParams np{eps, config.seed};
        errors = sample_errors(g, np, TimeWindow{0, L + 1}, trial, kStreamErrors);
        slab_flips = meas_plaquettes(sample_errors(prefix.slab, np, TimeWindow{1, prefix.depth + 1}, trial, kStreamPrefix));
        Rng rng = make_rng(config.seed, trial, kStreamPartner);
        partner_noise = sample_edge_flips(geometry.partner, eps, rng);
    }
    // Initial-face outcomes are the last layer of the prefix slab.
    std::erase_if(errors.meas, [&](const MeasFlip &m) {
        const auto &site = g.plaquette(m.plaquette);
        return site.normal == T && site.anchor[T] == 0;
    });
    for (int p : slab_flips)
        if (prefix.to_main[p] >= 0)
            errors.meas.push_back({prefix.to_main[p], 0});
    errors.normalize();

    const auto gauge = sample_random_gauge(g, config.seed, trial);
    const std::vector<int> M = meas_plaquettes(errors);
    std::vector<int> flags;
    if (config.prefix)
        flags = prefix_initial_face(prefix, slab_flips).flags;
    const std::vector<int> noisy = xor_sets(M, flags);
    const std::vector<int> observed =
        xor_sets(xor_sets(gauge.outcome.support(), outcome_of(g, errors.data).support()), noisy);
    const DefectSet defects = extract_defects(g, plaquette_set(g, observed));

    JitResult jit = run_jit(g, defects);
    if (!extract_defects(g, plaquette_set(g, xor_sets(observed, jit.correction))).empty())
        throw std::logic_error("JIT corrections leave defects");

    std::vector<Side> absorbing;
    for (Side s : kSides)
        if (side_axis(s) != T && g.boundary()[s] == BoundaryType::Smooth)
            absorbing.push_back(s);
    absorbing.push_back(side_of(T, true));
    ChargeSpace cells(g, ChargeSpace::Sector::Cells, absorbing);
    std::vector<int> nodes;
    for (const auto &d : defects)
        nodes.push_back(d.cell);
    RgResult hp = rg_decode(cells, nodes);
    if (!hp.success)
        throw std::logic_error("global decode left defects");

    const auto residual_jit = xor_sets(errors.data, fill(g, xor_sets(noisy, jit.correction)));
    const auto residual_hp = xor_sets(errors.data, fill(g, xor_sets(noisy, hp.links)));
    const auto &partner = geometry.partner;

    TrialRecord rec;
    rec.seed = config.seed;
    rec.trial = trial;
    rec.L = L;
    rec.eps = eps;
    rec.jit_success = decode_partner(partner, xor_sets(handoff(g, partner, residual_jit), partner_noise)) ==
                      Outcome::Success;
    rec.hp_success = decode_partner(partner, xor_sets(handoff(g, partner, residual_hp), partner_noise)) ==
                     Outcome::Success;
    const auto difference = fill(g, xor_sets(jit.correction, hp.links));
    rec.agreement = decode_partner(partner, handoff(g, partner, difference)) == Outcome::Success;
    rec.postselect_accept = rec.agreement;
    rec.logical = rec.jit_success ? Outcome::Success : Outcome::LogicalFailure;
    rec.defects = static_cast<int>(defects.size());
    rec.flags = static_cast<int>(flags.size());
    rec.residual_weight = static_cast<int>(residual_jit.size());

    const SiteGrid grid{config.site_side};
    const auto sites = to_sites(g, errors, grid);
    SpreadReport spread;
    if (!sites.empty()) {
        std::vector<Coord3> share;
        for (int e : residual_jit)
            share.push_back(edge_site(g, e, grid));
        for (const auto &d : defects)
            share.push_back(grid.site_of(d.pos));
        spread = measure_spread(decompose(sites, config.params.Q), share, jit.max_lifetime);
    }
    rec.max_s_emp = spread.max_s_emp;
    rec.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    if (detail) {
        detail->errors = errors;
        detail->slab_flips = slab_flips;
        detail->flags = flags;
        detail->defects = defects;
        detail->jit = std::move(jit);
        detail->hp = std::move(hp);
        detail->residual_jit = residual_jit;
        detail->residual_hp = residual_hp;
        detail->spread = std::move(spread);
    }
    return rec;
}

TrialRecord run_trial(const ExperimentConfig &config, int L, double eps, uint64_t trial) {
    config.validate();
    for (auto k : config.lattices)
        if (k != LatticeKind::Cubic)
            throw ConfigError("trials run on the cubic lattice only");
    TrialGeometry geometry(L, config.t_pre);
    return run_trial(config, geometry, eps, trial);
}

std::pair<double, double> binomial_interval(int successes, int trials, double confidence) {
    using boost::math::binomial_distribution;
    if (trials <= 0)
        throw std::invalid_argument("need at least one trial");
    const double alpha = (1.0 - confidence) / 2.0;
    double lo = binomial_distribution<>::find_lower_bound_on_p(trials, successes, alpha);
    double hi = binomial_distribution<>::find_upper_bound_on_p(trials, successes, alpha);
    return {lo, hi};
}

double SweepRow::failure_rate() const {
    return trials ? static_cast<double>(failures) / trials : 0.0;
}

double SweepRow::accepted_failure_rate() const {
    return accepted ? static_cast<double>(accepted_failures) / accepted : 0.0;
}

std::string sweep_csv_header() {
    return "L,eps,trials,failures,ci_lo,ci_hi,discard_rate,accepted_failures,max_spread";
}

std::string SweepRow::csv_line() const {
    std::ostringstream out;
    out << L << ',' << std::setprecision(12) << eps << ',' << trials << ',' << failures << ',' << ci_lo << ','
        << ci_hi << ',' << discard_rate << ',' << accepted_failures << ',' << max_spread;
    return out.str();
}

int thread_count() {
    if (const char *env = std::getenv("GJIT_THREADS")) {
        char *end = nullptr;
        long n = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || n < 1)
            throw ConfigError(std::string("GJIT_THREADS must be a positive integer, got ") + env);
        return static_cast<int>(n);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<SweepRow> run_sweep(const ExperimentConfig &config, std::ostream *csv) {
    config.validate();
    for (auto k : config.lattices)
        if (k != LatticeKind::Cubic)
            throw ConfigError("sweeps run on the cubic lattice only");
    const int workers = thread_count();
    std::vector<SweepRow> rows;
    if (csv)
        *csv << sweep_csv_header() << '\n' << std::flush;
    for (int L : config.L) {
        const TrialGeometry geometry(L, config.t_pre);
        for (double eps : config.eps) {
            std::vector<TrialRecord> records(config.trials);
            std::atomic<int> next{0};
            std::atomic<bool> failed{false};
            std::exception_ptr error;
            std::mutex error_lock;
            auto work = [&] {
                for (int i = next++; i < config.trials && !failed; i = next++) {
                    try {
                        records[i] = run_trial(config, geometry, eps, static_cast<uint64_t>(i));
                    } catch (...) {
                        std::lock_guard<std::mutex> lock(error_lock);
                        if (!error)
                            error = std::current_exception();
                        failed = true;
                    }
                }
            };
            {
                std::vector<std::jthread> pool;
                for (int w = 1; w < std::min(workers, config.trials); w++)
                    pool.emplace_back(work);
                work();
            }
            if (error)
                std::rethrow_exception(error);

            SweepRow row;
            row.L = L;
            row.eps = eps;
            row.trials = config.trials;
            double spread_sum = 0.0;
            for (const auto &r : records) {
                row.failures += r.jit_success ? 0 : 1;
                row.accepted += r.postselect_accept ? 1 : 0;
                row.accepted_failures += (r.postselect_accept && !r.jit_success) ? 1 : 0;
                row.max_spread = std::max(row.max_spread, r.max_s_emp);
                spread_sum += r.max_s_emp;
            }
            row.mean_spread = spread_sum / row.trials;
            row.discard_rate = 1.0 - static_cast<double>(row.accepted) / row.trials;
            std::tie(row.ci_lo, row.ci_hi) = binomial_interval(row.failures, row.trials);
            if (csv)
                *csv << row.csv_line() << '\n' << std::flush;
            rows.push_back(row);
        }
    }
    return rows;
}

std::string sweep_manifest(const ExperimentConfig &config, const std::vector<SweepRow> &rows) {
    const std::string text = config.to_json();
    std::ostringstream hash;
    hash << std::hex << std::setw(16) << std::setfill('0') << std::hash<std::string>{}(text);
    json j;
    j["config"] = json::parse(text);
    j["config_hash"] = hash.str();
    j["version"] = "0.1.0";
    j["seed"] = config.seed;
    j["trial_indices"] = {0, config.trials - 1};
    j["streams"] = {{"gauge", kStreamGauge}, {"errors", kStreamErrors}, {"prefix", kStreamPrefix},
                    {"partner", kStreamPartner}};
    j["rows"] = json::array();
    for (const auto &r : rows)
        j["rows"].push_back({{"L", r.L},
                             {"eps", r.eps},
                             {"failures", r.failures},
                             {"accepted", r.accepted},
                             {"accepted_failures", r.accepted_failures},
                             {"mean_spread", r.mean_spread}});
    return j.dump(2);
}

}  // namespace gjit
