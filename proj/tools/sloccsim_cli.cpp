/**
 * Copyright 2026 The sloccsim Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Command-line front end. Exit codes: 0 success, 2 config error, 3 empty
// post-selection, 4 numerical-invariant violation, 1 anything else.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "sloccsim/experiments.hpp"

namespace fs = std::filesystem;
using namespace sloccsim;

namespace {

struct GlobalOptions {
    std::string config_path;
    std::optional<std::uint64_t> seed_override;
    std::string out_dir = ".";
    bool dump_state = false;
};

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write output file: " + path.string());
    out << content;
}

Scenario load(const GlobalOptions& opts) {
    Scenario scenario = load_scenario(opts.config_path);
    if (opts.seed_override) scenario.seed = *opts.seed_override;
    return scenario;
}

std::string sanitize(std::string label) {
    for (char& c : label)
        if (c == ',' || c == '/' || c == ' ') c = '_';
    return label;
}

int cmd_distribute(const GlobalOptions& opts) {
    Scenario scenario = load(opts);
    DistributionRun run = run_distribution(scenario);
    fs::create_directories(opts.out_dir);
    write_file(fs::path(opts.out_dir) / "report.json", serialize_report(run.report));
    if (opts.dump_state) {
        write_file(fs::path(opts.out_dir) / "initial_state.txt", dump_state(run.initial_state));
        if (run.postselected_state)
            write_file(fs::path(opts.out_dir) / "postselected_state.txt",
                       dump_state(*run.postselected_state));
        if (run.split_state)
            write_file(fs::path(opts.out_dir) / "split_state.txt", dump_state(*run.split_state));
    }
    for (const HeraldReportEntry& e : run.report.heralds) {
        if (e.counts.empty() || e.pauli_corrected) continue;
        std::string name = "counts_" + std::string(basis_name(e.basis)) + "_" +
                           sanitize(e.outcome_label) + ".csv";
        write_file(fs::path(opts.out_dir) / name, counts_csv(e.counts));
    }
    if (!run.report.failures.empty()) {
        std::cerr << "post-selection failed; see report.json\n";
        return 3;
    }
    std::cout << "postselection probability " << run.report.postselection_probability << ", "
              << run.report.heralds.size() << " herald entries -> "
              << (fs::path(opts.out_dir) / "report.json").string() << "\n";
    return 0;
}

int cmd_hom(const GlobalOptions& opts) {
    Scenario scenario = load(opts);
    HomRun run = run_hom(scenario);
    fs::create_directories(opts.out_dir);
    for (const auto& [name, curve] : run.curves)
        write_file(fs::path(opts.out_dir) / ("hom_" + name + ".csv"), hom_curve_csv(curve));
    write_file(fs::path(opts.out_dir) / "hom_report.json",
               hom_report_json(scenario, run).dump(2) + "\n");
    for (const auto& [name, curve] : run.curves)
        std::cout << name << " visibility " << curve.visibility << "\n";
    return 0;
}

int cmd_swap_baseline(const GlobalOptions& opts) {
    Scenario scenario = load(opts);
    json report = run_swap_baseline(scenario);
    fs::create_directories(opts.out_dir);
    write_file(fs::path(opts.out_dir) / "swap_report.json", report.dump(2) + "\n");
    std::cout << "swap baseline: 4 BSM outcomes, LPSM success probability "
              << report["comparison"]["lpsm"]["success_probability"].get<double>() << "\n";
    return 0;
}

int cmd_scan(const GlobalOptions& opts) {
    Scenario scenario = load(opts);
    auto rows = run_scan(scenario);
    fs::create_directories(opts.out_dir);
    write_file(fs::path(opts.out_dir) / "scan.csv", scan_csv(rows));
    std::cout << rows.size() << " grid points -> " << (fs::path(opts.out_dir) / "scan.csv").string()
              << "\n";
    return 0;
}

int cmd_tomo(const GlobalOptions& opts, const std::string& counts_path) {
    Scenario scenario = load(opts);
    std::ifstream in(counts_path, std::ios::binary);
    if (!in) throw ConfigError("cannot open counts file: " + counts_path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    auto records = parse_counts_csv(text);
    json report = tomo_report_json(scenario, records);
    fs::create_directories(opts.out_dir);
    write_file(fs::path(opts.out_dir) / "tomo_report.json", report.dump(2) + "\n");
    std::cout << "reconstructed density written; concurrence "
              << report["concurrence"].get<double>() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Heralded remote entanglement distribution simulator"};
    app.require_subcommand(1);

    GlobalOptions opts;
    std::uint64_t seed_value = 0;
    auto* seed_opt = app.add_option("--seed", seed_value, "Override the scenario seed");
    app.add_option("--config", opts.config_path, "Scenario config file (JSON)")->required();
    app.add_option("--out-dir", opts.out_dir, "Output directory (default: .)");
    app.add_flag("--dump-state", opts.dump_state, "Dump intermediate Fock states (distribute)");

    auto* distribute = app.add_subcommand("distribute", "Run the heralded distribution pipeline");
    auto* hom = app.add_subcommand("hom", "Emit Hong-Ou-Mandel interference curves");
    auto* swap = app.add_subcommand("swap-baseline", "Entanglement-swapping comparison baseline");
    auto* scan = app.add_subcommand("scan", "Post-selection probability over a (theta, phi) grid");
    auto* tomo = app.add_subcommand("tomo", "Reconstruct a density matrix from a counts CSV");
    std::string counts_path;
    tomo->add_option("--counts", counts_path, "Input counts CSV (setting,observed,shots)")->required();
    // global flags may follow the subcommand name
    for (auto* sub : {distribute, hom, swap, scan, tomo}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (seed_opt->count() > 0) opts.seed_override = seed_value;

    try {
        if (distribute->parsed()) return cmd_distribute(opts);
        if (hom->parsed()) return cmd_hom(opts);
        if (swap->parsed()) return cmd_swap_baseline(opts);
        if (scan->parsed()) return cmd_scan(opts);
        if (tomo->parsed()) return cmd_tomo(opts, counts_path);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const EmptyPostselection& e) {
        std::cerr << "empty post-selection: " << e.what() << "\n";
        return 3;
    } catch (const InvariantViolation& e) {
        std::cerr << "numerical invariant violated: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
