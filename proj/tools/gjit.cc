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

// Command-line front end.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "gjit/chunks.h"
#include "gjit/harness.h"
#include "gjit/lattice.h"
#include "gjit/syndrome.h"
#include "json.hpp"

using namespace gjit;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitFault = 3;

void write_file(const std::string &path, const std::string &text) {
    if (path.empty())
        return;
    std::ofstream out(path);
    if (!out)
        throw ConfigError("cannot write " + path);
    out << text;
}

std::string read_file(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct RunOptions {
    std::string config;
    int L = 0;
    double eps = -1.0;
    int64_t seed = -1;
    int trials = 0;
    int Q = 0;
    int site_side = 0;
    bool no_prefix = false;
};

void add_run_options(CLI::App *cmd, RunOptions &o) {
    cmd->add_option("-c,--config", o.config, "Config file (key = value or JSON)");
    cmd->add_option("--L", o.L, "Lattice size");
    cmd->add_option("--eps", o.eps, "Error rate per location");
    cmd->add_option("--seed", o.seed, "Master seed");
    cmd->add_option("--Q", o.Q, "Chunk scale factor");
    cmd->add_option("--site-side", o.site_side, "Site side in lattice units");
    cmd->add_flag("--no-prefix", o.no_prefix, "Skip prefixing of the initial face");
}

ExperimentConfig resolve(const RunOptions &o) {
    ExperimentConfig c = o.config.empty() ? ExperimentConfig{} : ExperimentConfig::load(o.config);
    if (o.L)
        c.L = {o.L};
    if (o.eps >= 0)
        c.eps = {o.eps};
    if (o.seed >= 0)
        c.seed = static_cast<uint64_t>(o.seed);
    if (o.trials)
        c.trials = o.trials;
    if (o.Q)
        c.params.Q = o.Q;
    if (o.site_side)
        c.site_side = o.site_side;
    if (o.no_prefix)
        c.prefix = false;
    c.validate();
    return c;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Gauge fixing, just-in-time decoding and chunk analysis for the 3D surface code"};
    app.require_subcommand(1);

    // lattice dump
    auto *lattice = app.add_subcommand("lattice", "Lattice geometry");
    lattice->require_subcommand(1);
    auto *dump = lattice->add_subcommand("dump", "Write the cell complex, one entity per line");
    std::string kind = "cubic", rough = "z", dump_out;
    int dump_L = 3;
    dump->add_option("--kind", kind, "cubic or alternative");
    dump->add_option("--L", dump_L, "Lattice size")->check(CLI::PositiveNumber);
    dump->add_option("--rough", rough, "Axis whose faces are rough");
    dump->add_option("-o,--out", dump_out, "Output file (default stdout)");

    // trial run
    auto *trial = app.add_subcommand("trial", "Single trials");
    trial->require_subcommand(1);
    auto *trial_run = trial->add_subcommand("run", "Run one trial and print its record");
    RunOptions trial_opts;
    uint64_t trial_index = 0;
    std::string errors_out, defects_out, decisions_out, flags_out, correction_out;
    add_run_options(trial_run, trial_opts);
    trial_run->add_option("--trial", trial_index, "Trial index");
    trial_run->add_option("--errors-out", errors_out, "ErrorSet JSON");
    trial_run->add_option("--defects-out", defects_out, "Defect CSV");
    trial_run->add_option("--decisions-out", decisions_out, "JIT decision log (JSON lines)");
    trial_run->add_option("--flags-out", flags_out, "Prefix flags JSON");
    trial_run->add_option("--correction-out", correction_out, "Global decode report JSON");

    // sweep run
    auto *sweep = app.add_subcommand("sweep", "Monte Carlo sweeps");
    sweep->require_subcommand(1);
    auto *sweep_run = sweep->add_subcommand("run", "Run every (L, eps) point of a config");
    RunOptions sweep_opts;
    std::string csv_out, manifest_out;
    add_run_options(sweep_run, sweep_opts);
    sweep_run->add_option("--trials", sweep_opts.trials, "Trials per point");
    sweep_run->add_option("-o,--output", csv_out, "CSV path (default: config output)");
    sweep_run->add_option("--manifest", manifest_out, "Manifest path (default: CSV path + .json)");

    // spread audit
    auto *spread = app.add_subcommand("spread", "Error spread");
    spread->require_subcommand(1);
    auto *audit = spread->add_subcommand("audit", "Measure container growth over trials");
    RunOptions audit_opts;
    add_run_options(audit, audit_opts);
    audit->add_option("--trials", audit_opts.trials, "Number of trials");
    bool audit_verbose = false;
    audit->add_flag("--per-trial", audit_verbose, "Include every trial's report");

    // chunk analyze
    auto *chunk = app.add_subcommand("chunk", "Chunk decomposition");
    chunk->require_subcommand(1);
    auto *analyze = chunk->add_subcommand("analyze", "Decompose an error and check the structural lemmas");
    RunOptions chunk_opts;
    std::string errors_in;
    int N = kQubitsPerSite;
    add_run_options(analyze, chunk_opts);
    analyze->add_option("--errors", errors_in, "ErrorSet JSON (default: sample one at --eps)");
    analyze->add_option("--N", N, "Qubits per site for the threshold report");

    // resources
    auto *resources = app.add_subcommand("resources", "Qubit and spacetime cost");
    int d = 0;
    std::string layout = "Local";
    resources->add_option("-d,--distance", d, "Code distance")->required();
    resources->add_option("--layout", layout, "Local or Cylinder");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    try {
        if (dump->parsed()) {
            BoundarySpec b = BoundarySpec::rough_pair(axis_from_char(rough.empty() ? 'z' : rough[0]));
            auto g = build_lattice(parse_kind(kind), dump_L, b);
            std::ostringstream out;
            g.dump(out);
            if (dump_out.empty())
                std::cout << out.str();
            write_file(dump_out, out.str());
        } else if (trial_run->parsed()) {
            auto c = resolve(trial_opts);
            TrialGeometry geometry(c.L.front(), c.t_pre);
            TrialDetail detail;
            auto rec = run_trial(c, geometry, c.eps.front(), trial_index, nullptr, &detail);
            std::cout << rec.to_json() << '\n';
            write_file(errors_out, detail.errors.to_json() + "\n");
            write_file(defects_out, defects_csv(geometry.main, detail.defects));
            write_file(decisions_out, detail.jit.decisions_jsonl(geometry.main));
            write_file(flags_out, flags_json(detail.flags) + "\n");
            if (!correction_out.empty()) {
                std::vector<Side> absorbing = {Side::YMin, Side::YMax, Side::XMax};
                ChargeSpace cells(geometry.main, ChargeSpace::Sector::Cells, absorbing);
                write_file(correction_out, detail.hp.to_json(cells) + "\n");
            }
        } else if (sweep_run->parsed()) {
            auto c = resolve(sweep_opts);
            std::string path = csv_out.empty() ? c.output : csv_out;
            std::ofstream csv(path);
            if (!csv)
                throw ConfigError("cannot write " + path);
            auto rows = run_sweep(c, &csv);
            write_file(manifest_out.empty() ? path + ".json" : manifest_out, sweep_manifest(c, rows) + "\n");
            std::cout << sweep_csv_header() << '\n';
            for (const auto &r : rows)
                std::cout << r.csv_line() << '\n';
        } else if (audit->parsed()) {
            auto c = resolve(audit_opts);
            TrialGeometry geometry(c.L.front(), c.t_pre);
            nlohmann::json out;
            double max_s = 0.0;
            int max_life = 0;
            nlohmann::json per = nlohmann::json::array();
            for (int t = 0; t < c.trials; t++) {
                TrialDetail detail;
                run_trial(c, geometry, c.eps.front(), static_cast<uint64_t>(t), nullptr, &detail);
                max_s = std::max(max_s, detail.spread.max_s_emp);
                max_life = std::max(max_life, detail.jit.max_lifetime);
                if (audit_verbose)
                    per.push_back(nlohmann::json::parse(detail.spread.to_json()));
            }
            out["L"] = c.L.front();
            out["eps"] = c.eps.front();
            out["trials"] = c.trials;
            out["site_side"] = c.site_side;
            out["Q"] = c.params.Q;
            out["max_s_emp"] = max_s;
            out["max_lifetime"] = max_life;
            if (audit_verbose)
                out["reports"] = per;
            std::cout << out.dump(2) << '\n';
        } else if (analyze->parsed()) {
            auto c = resolve(chunk_opts);
            auto g = build_lattice(LatticeKind::Cubic, c.L.front(), BoundarySpec::rough_pair(Axis::Z));
            ErrorSet errors = errors_in.empty()
                                  ? sample_errors(g, NoiseParams{c.eps.front(), c.seed}, g.extent(g.time_axis()))
                                  : ErrorSet::from_json(read_file(errors_in));
            for (int e : errors.data)
                if (e < 0 || e >= g.num_edges())
                    throw ConfigError("edge id out of range: " + std::to_string(e));
            for (const auto &m : errors.meas)
                if (m.plaquette < 0 || m.plaquette >= g.num_plaquettes())
                    throw ConfigError("plaquette id out of range: " + std::to_string(m.plaquette));
            auto sites = to_sites(g, errors, SiteGrid{c.site_side});
            auto dec = decompose(sites, c.params.Q);
            auto lemma = verify_diameter_lemma(dec);
            auto tether = same_level_tethering(dec, c.params);
            nlohmann::json out;
            out["decomposition"] = nlohmann::json::parse(dec.to_json());
            out["lemma"] = {{"components_checked", lemma.components_checked},
                            {"violations", lemma.violations.size()}};
            out["tethering"] = {{"pairs_checked", tether.pairs_checked},
                                {"same_level_tethered", tether.same_level_tethered},
                                {"separates_containers", c.params.separates_containers()}};
            out["threshold"] = threshold_report(c.params.Q, N).to_text();
            std::cout << out.dump(2) << '\n';
        } else if (resources->parsed()) {
            std::cout << estimate_resources(d, parse_layout(layout)).to_json() << '\n';
        }
    } catch (const ConfigError &e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::invalid_argument &e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception &e) {
        std::cerr << "internal fault: " << e.what() << '\n';
        return kExitFault;
    }
    return 0;
}
