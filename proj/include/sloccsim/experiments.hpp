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
#ifndef SLOCCSIM_EXPERIMENTS_HPP
#define SLOCCSIM_EXPERIMENTS_HPP

/**
 * Declarative scenario configuration (strict JSON schema, version 1),
 * end-to-end protocol runs, the entanglement-swapping comparison baseline,
 * and the serialized reports the CLI emits. Reports are reproducible: the
 * same scenario file and seed produce byte-identical output.
 */

#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "sloccsim/errors.hpp"
#include "sloccsim/fock.hpp"
#include "sloccsim/measurement.hpp"
#include "sloccsim/rng.hpp"
#include "sloccsim/slocc.hpp"
#include "sloccsim/tomography.hpp"
#include "sloccsim/version.hpp"

namespace sloccsim {

using json = nlohmann::json;

inline constexpr int scenario_schema_version = 1;

enum class BasisSelection { HV, Circular, Diagonal, All };

inline BasisSelection parse_basis_selection(const std::string& s) {
    if (s == "all") return BasisSelection::All;
    return s == "HV"         ? BasisSelection::HV
           : s == "circular" ? BasisSelection::Circular
           : s == "diagonal" ? BasisSelection::Diagonal
                             : throw ConfigError("unknown basis selection: " + s);
}

inline std::vector<MeasBasis> selected_bases(BasisSelection sel) {
    switch (sel) {
        case BasisSelection::HV: return {MeasBasis::HV};
        case BasisSelection::Circular: return {MeasBasis::Circular};
        case BasisSelection::Diagonal: return {MeasBasis::Diagonal};
        case BasisSelection::All: return {MeasBasis::HV, MeasBasis::Circular, MeasBasis::Diagonal};
    }
    return {};
}

struct HomGrid {
    double sigma = 1.0;
    double delay_min = -5.0;
    double delay_max = 5.0;
    int points = 101;

    std::vector<double> delays() const {
        if (points < 2) throw ConfigError("hom.points must be >= 2");
        if (!(delay_max > delay_min)) throw ConfigError("hom delay range is empty");
        std::vector<double> d;
        d.reserve(std::size_t(points));
        for (int i = 0; i < points; ++i)
            d.push_back(delay_min + (delay_max - delay_min) * double(i) / double(points - 1));
        return d;
    }
};

struct ScanGrid {
    int theta_points = 9;
    int phi_points = 9;
    std::map<Site, int> pattern = {{Site::R, 1}, {Site::M, 2}, {Site::L, 1}};
};

/// Everything one protocol run depends on. shots_per_setting == 0 selects the
/// exact (infinite-statistics) mode, which never touches the random generator.
struct Scenario {
    std::string name = "unnamed";
    SourceConfig source{std::numbers::pi / 4, std::numbers::pi / 4};
    DistinguishabilityConfig dist{};
    BasisSelection basis = BasisSelection::All;
    bool pauli_correction = true;
    std::uint64_t shots_per_setting = 0;
    int bootstrap_resamples = 200;
    bool use_mle = false;
    std::optional<BellTag> tomo_target;
    std::uint64_t seed = 0;
    HomGrid hom{};
    ScanGrid scan{};
    json raw_config;  // canonical copy for hashing/provenance

    void validate() const {
        const double half_pi = std::numbers::pi / 2;
        if (!(source.theta >= 0.0 && source.theta <= half_pi + 1e-12) ||
            !(source.phi >= 0.0 && source.phi <= half_pi + 1e-12))
            throw ConfigError("source angles must lie in [0, pi/2]");
        dist.validate();
        if (bootstrap_resamples < 2) throw ConfigError("tomography.bootstrap_resamples must be >= 2");
    }
};

namespace detail {

inline void check_keys(const json& j, const std::vector<std::string>& allowed,
                       const std::string& context) {
    if (!j.is_object()) throw ConfigError(context + " must be a JSON object");
    for (const auto& [key, value] : j.items()) {
        bool ok = false;
        for (const std::string& a : allowed)
            if (key == a) ok = true;
        if (!ok) throw ConfigError("unknown key \"" + key + "\" in " + context);
    }
}

template <typename T>
inline T get_or(const json& j, const std::string& key, T fallback) {
    if (!j.contains(key)) return fallback;
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw ConfigError("bad value for \"" + key + "\": " + e.what());
    }
}

inline DistinguishabilityConfig parse_distinguishability(const json& j) {
    DistinguishabilityConfig d;
    if (j.contains("visibilities")) {
        check_keys(j, {"visibilities"}, "distinguishability");
        const json& v = j.at("visibilities");
        check_keys(v, {"pair_i", "pair_ii", "four_photon"}, "distinguishability.visibilities");
        d.pair_overlap_i = overlap_from_visibility(get_or<double>(v, "pair_i", 1.0));
        d.pair_overlap_ii = overlap_from_visibility(get_or<double>(v, "pair_ii", 1.0));
        d.cross_overlap = overlap_from_visibility(get_or<double>(v, "four_photon", 1.0));
    } else {
        check_keys(j, {"pair_overlap_i", "pair_overlap_ii", "cross_overlap"}, "distinguishability");
        d.pair_overlap_i = get_or<double>(j, "pair_overlap_i", 1.0);
        d.pair_overlap_ii = get_or<double>(j, "pair_overlap_ii", 1.0);
        d.cross_overlap = get_or<double>(j, "cross_overlap", 1.0);
    }
    d.validate();
    return d;
}

}  // namespace detail

inline Scenario parse_scenario(const json& j) {
    detail::check_keys(j,
                       {"schema_version", "name", "seed", "source", "distinguishability",
                        "measurement", "tomography", "hom", "scan"},
                       "scenario");
    if (!j.contains("schema_version"))
        throw ConfigError("scenario is missing schema_version");
    if (j.at("schema_version").get<int>() != scenario_schema_version)
        throw ConfigError("unsupported schema_version (expected 1)");
    if (!j.contains("name")) throw ConfigError("scenario is missing name");

    Scenario s;
    s.raw_config = j;
    s.name = j.at("name").get<std::string>();
    s.seed = detail::get_or<std::uint64_t>(j, "seed", 0);

    if (j.contains("source")) {
        const json& src = j.at("source");
        detail::check_keys(src, {"theta", "phi"}, "source");
        s.source.theta = detail::get_or<double>(src, "theta", std::numbers::pi / 4);
        s.source.phi = detail::get_or<double>(src, "phi", std::numbers::pi / 4);
    }
    if (j.contains("distinguishability"))
        s.dist = detail::parse_distinguishability(j.at("distinguishability"));
    if (j.contains("measurement")) {
        const json& m = j.at("measurement");
        detail::check_keys(m, {"basis", "pauli_correction"}, "measurement");
        s.basis = parse_basis_selection(detail::get_or<std::string>(m, "basis", "all"));
        s.pauli_correction = detail::get_or<bool>(m, "pauli_correction", true);
    }
    if (j.contains("tomography")) {
        const json& t = j.at("tomography");
        detail::check_keys(t, {"shots_per_setting", "bootstrap_resamples", "use_mle", "target"},
                           "tomography");
        s.shots_per_setting = detail::get_or<std::uint64_t>(t, "shots_per_setting", 0);
        s.bootstrap_resamples = detail::get_or<int>(t, "bootstrap_resamples", 200);
        s.use_mle = detail::get_or<bool>(t, "use_mle", false);
        if (t.contains("target")) s.tomo_target = parse_bell(t.at("target").get<std::string>());
    }
    if (j.contains("hom")) {
        const json& h = j.at("hom");
        detail::check_keys(h, {"sigma", "delay_min", "delay_max", "points"}, "hom");
        s.hom.sigma = detail::get_or<double>(h, "sigma", 1.0);
        s.hom.delay_min = detail::get_or<double>(h, "delay_min", -5.0);
        s.hom.delay_max = detail::get_or<double>(h, "delay_max", 5.0);
        s.hom.points = detail::get_or<int>(h, "points", 101);
    }
    if (j.contains("scan")) {
        const json& sc = j.at("scan");
        detail::check_keys(sc, {"theta_points", "phi_points", "pattern"}, "scan");
        s.scan.theta_points = detail::get_or<int>(sc, "theta_points", 9);
        s.scan.phi_points = detail::get_or<int>(sc, "phi_points", 9);
        if (sc.contains("pattern")) {
            std::map<Site, int> pat;
            for (const auto& [key, value] : sc.at("pattern").items())
                pat[parse_site(key)] = value.get<int>();
            if (pat.empty()) throw ConfigError("scan.pattern must not be empty");
            s.scan.pattern = pat;
        }
    }
    s.validate();
    return s;
}

inline Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open scenario file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ConfigError("scenario file is not valid JSON: " + std::string(e.what()));
    }
    return parse_scenario(j);
}

/// FNV-1a 64 over the canonical (sorted-key) dump of the config.
inline std::string config_hash(const json& j) {
    std::string text = j.dump();
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

// --- report building ----------------------------------------------------

inline json density_to_json(const TwoQubitDensity& rho) {
    json re = json::array(), im = json::array();
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            re.push_back(rho.matrix(r, c).real());
            im.push_back(rho.matrix(r, c).imag());
        }
    }
    return json{{"basis_order", density_basis_order}, {"re", re}, {"im", im}};
}

inline TwoQubitDensity density_from_json(const json& j) {
    if (j.at("basis_order").get<std::string>() != density_basis_order)
        throw ConfigError("density matrix carries an unexpected basis_order tag");
    Eigen::Matrix4cd m;
    const json& re = j.at("re");
    const json& im = j.at("im");
    if (re.size() != 16 || im.size() != 16) throw ConfigError("density matrix must be 4x4");
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            m(r, c) = complex(re[std::size_t(4 * r + c)].get<double>(),
                              im[std::size_t(4 * r + c)].get<double>());
    return TwoQubitDensity(m);
}

/// One row of the heralded-state table, exact metrics plus (optionally) the
/// simulated-tomography block.
struct HeraldReportEntry {
    MeasBasis basis;
    std::string outcome_label;
    double joint_probability = 0.0;
    std::optional<BellTag> target;
    bool pauli_corrected = false;
    TwoQubitDensity rl_state;
    double concurrence_value = 0.0;
    std::optional<double> fidelity_value;       // only with a target
    std::optional<bool> classical_limit;        // only with a target
    std::optional<TwoQubitDensity> reconstructed;
    std::vector<CountRecord> counts;            // empty in exact mode
    std::optional<ErrorBarReport> errors;
};

struct RunReport {
    Scenario scenario;
    double postselection_probability = 0.0;
    std::map<std::string, double> non_coincidence_probability;  // per basis
    std::vector<HeraldReportEntry> heralds;
    std::vector<std::string> failures;
};

/// Full pipeline outputs, including the intermediate states for --dump-state.
struct DistributionRun {
    RunReport report;
    FockState initial_state;
    std::optional<FockState> postselected_state;
    std::optional<FockState> split_state;
};

namespace detail {

inline HeraldReportEntry make_entry(const Scenario& scenario, const HeraldRecord& rec,
                                    const TwoQubitDensity& rho, std::optional<BellTag> target,
                                    bool pauli_corrected, std::uint64_t entry_index) {
    HeraldReportEntry e{rec.basis, rec.outcome_label, rec.joint_probability, target,
                        pauli_corrected,  rho,         concurrence(rho),     {},
                        {},               {},          {},                   {}};
    if (target) {
        e.fidelity_value = fidelity(rho, *target);
        e.classical_limit = classical_limit_check(*e.fidelity_value);
    }
    if (scenario.shots_per_setting > 0) {
        std::uint64_t count_seed = mix_seed(scenario.seed, 2 * entry_index);
        std::uint64_t boot_seed = mix_seed(scenario.seed, 2 * entry_index + 1);
        e.counts = simulate_counts(rho, scenario.shots_per_setting, count_seed);
        e.reconstructed = reconstruct(e.counts, scenario.use_mle);
        if (target)
            e.errors = error_bars(e.counts, scenario.bootstrap_resamples, boot_seed,
                                  bell_vector(*target), scenario.use_mle);
    }
    return e;
}

}  // namespace detail

/**
 * The heralded-distribution pipeline: prepare the four-photon state, apply
 * sLOCC post-selection on {R:1, M:2, L:1}, run the node-M splitting chain and
 * the LPSM projections of every selected basis, evaluate the heralded R-L
 * states, and (when shots_per_setting > 0) simulate tomography with bootstrap
 * error bars. An empty post-selection becomes a structured failure entry.
 */
inline DistributionRun run_distribution(const Scenario& scenario) {
    scenario.validate();
    DistributionRun run{RunReport{scenario, 0.0, {}, {}, {}}, FockState{}, {}, {}};
    run.initial_state = prepare_initial(scenario.source, scenario.dist);
    try {
        auto [ps, probability] = postselect(run.initial_state, herald_pattern());
        run.report.postselection_probability = probability;
        run.postselected_state = ps;
    } catch (const EmptyPostselection& e) {
        run.report.failures.push_back(std::string("postselect: ") + e.what());
        return run;
    }
    run.split_state = split_node_m(*run.postselected_state);

    std::uint64_t entry_index = 0;
    for (MeasBasis basis : selected_bases(scenario.basis)) {
        LpsmResult res = lpsm_herald(*run.split_state, basis);
        run.report.non_coincidence_probability[basis_name(basis)] = res.non_coincidence_probability;
        for (const HeraldRecord& rec : res.records) {
            run.report.heralds.push_back(detail::make_entry(scenario, rec, rec.rl_state, rec.target,
                                                            false, entry_index++));
            if (scenario.pauli_correction && rec.target == BellTag::psi_plus) {
                TwoQubitDensity corrected = pauli_z(rec.rl_state, Node::R);
                run.report.heralds.push_back(detail::make_entry(
                    scenario, rec, corrected, BellTag::psi_minus, true, entry_index++));
            }
        }
    }
    return run;
}

// --- serialization -------------------------------------------------------

inline json report_to_json(const RunReport& report) {
    json heralds = json::array();
    for (const HeraldReportEntry& e : report.heralds) {
        json h{{"basis", basis_name(e.basis)},
               {"outcome", e.outcome_label},
               {"joint_probability", e.joint_probability},
               {"pauli_corrected", e.pauli_corrected},
               {"concurrence", e.concurrence_value},
               {"rl_density", density_to_json(e.rl_state)}};
        h["target"] = e.target ? json(bell_name(*e.target)) : json(nullptr);
        if (e.fidelity_value) h["fidelity"] = *e.fidelity_value;
        if (e.classical_limit) h["classical_limit_exceeded"] = *e.classical_limit;
        if (e.reconstructed) {
            json t{{"shots_per_setting", report.scenario.shots_per_setting},
                   {"density", density_to_json(*e.reconstructed)},
                   {"concurrence", concurrence(*e.reconstructed)}};
            if (e.target) {
                t["fidelity"] = fidelity(*e.reconstructed, *e.target);
                t["classical_limit_exceeded"] =
                    classical_limit_check(fidelity(*e.reconstructed, *e.target));
            }
            if (e.errors) {
                t["resamples"] = report.scenario.bootstrap_resamples;
                t["fidelity_mean"] = e.errors->fidelity_mean;
                t["fidelity_err"] = e.errors->fidelity_sigma;
                t["concurrence_mean"] = e.errors->concurrence_mean;
                t["concurrence_err"] = e.errors->concurrence_sigma;
            }
            h["tomography"] = t;
        }
        heralds.push_back(h);
    }
    return json{{"report", "distribution"},
                {"name", report.scenario.name},
                {"version", project_version},
                {"config_hash", config_hash(report.scenario.raw_config)},
                {"seed", report.scenario.seed},
                {"postselection_probability", report.postselection_probability},
                {"non_coincidence_probability", report.non_coincidence_probability},
                {"heralds", heralds},
                {"failures", report.failures}};
}

inline std::string serialize_report(const RunReport& report) {
    return report_to_json(report).dump(2) + "\n";
}

// --- HOM runs -------------------------------------------------------------

struct HomRun {
    std::map<std::string, HomCurve> curves;  // source_i, source_ii, four_photon
};

/**
 * Two-photon dips for the Source I / Source II presets and the four-photon
 * central-dip variant (the two photons meeting at node M interfere while R
 * and L act as triggers; their mutual overlap is the cross overlap).
 */
inline HomRun run_hom(const Scenario& scenario) {
    scenario.validate();
    std::vector<double> delays = scenario.hom.delays();
    HomRun out;
    out.curves["source_i"] = hom_curve(scenario.hom.sigma, delays, scenario.dist.pair_overlap_i);
    out.curves["source_ii"] = hom_curve(scenario.hom.sigma, delays, scenario.dist.pair_overlap_ii);
    out.curves["four_photon"] = hom_curve(scenario.hom.sigma, delays, scenario.dist.cross_overlap);
    return out;
}

inline std::string hom_curve_csv(const HomCurve& curve) {
    std::string out = "delay,coincidence\n";
    for (std::size_t i = 0; i < curve.delays.size(); ++i)
        out += format_double(curve.delays[i]) + "," + format_double(curve.coincidences[i]) + "\n";
    return out;
}

inline json hom_report_json(const Scenario& scenario, const HomRun& run) {
    json curves;
    for (const auto& [name, curve] : run.curves)
        curves[name] = json{{"visibility", curve.visibility},
                            {"points", curve.delays.size()},
                            {"min_coincidence",
                             *std::min_element(curve.coincidences.begin(), curve.coincidences.end())}};
    return json{{"report", "hom"},
                {"name", scenario.name},
                {"version", project_version},
                {"config_hash", config_hash(scenario.raw_config)},
                {"sigma", scenario.hom.sigma},
                {"curves", curves}};
}

// --- scan -------------------------------------------------------------

inline std::vector<ScanRow> run_scan(const Scenario& scenario) {
    scenario.validate();
    auto linspace = [](int n) {
        std::vector<double> v;
        v.reserve(std::size_t(n));
        for (int i = 0; i < n; ++i)
            v.push_back(std::numbers::pi / 2 * double(i) / double(std::max(1, n - 1)));
        return v;
    };
    NodePattern pattern(scenario.scan.pattern, {Site::Blocked});
    return success_probability_scan(linspace(scenario.scan.theta_points),
                                    linspace(scenario.scan.phi_points), pattern, scenario.dist);
}

inline std::string scan_csv(const std::vector<ScanRow>& rows) {
    std::string out = "theta,phi,probability\n";
    for (const ScanRow& r : rows)
        out += format_double(r.theta) + "," + format_double(r.phi) + "," +
               format_double(r.probability) + "\n";
    return out;
}

// --- swap baseline ---------------------------------------------------------

inline std::pair<BellTag, double> closest_bell(const Eigen::Vector4cd& state) {
    BellTag best = BellTag::psi_plus;
    double best_overlap = -1.0;
    for (BellTag t : {BellTag::psi_plus, BellTag::psi_minus, BellTag::phi_plus, BellTag::phi_minus}) {
        double o = std::norm((bell_vector(t).adjoint() * state)(0, 0));
        if (o > best_overlap) {
            best_overlap = o;
            best = t;
        }
    }
    return {best, best_overlap};
}

/**
 * Standard entanglement swapping (two ideal Φ⁺ pairs, four-outcome BSM) next
 * to the LPSM pipeline numbers of the same scenario, as a resource
 * comparison: 2 initial entangled pairs + BSM versus 0 pairs + product-state
 * measurements with the sLOCC success probability.
 */
inline json run_swap_baseline(const Scenario& scenario) {
    scenario.validate();
    auto outcomes = swap_baseline(BellTag::phi_plus, BellTag::phi_plus);
    json outs = json::array();
    for (const SwapOutcome& o : outcomes) {
        auto [tag, overlap] = closest_bell(o.heralded_ab);
        outs.push_back(json{{"bsm_outcome", bell_name(o.bsm_outcome)},
                            {"probability", o.probability},
                            {"heralded", bell_name(tag)},
                            {"heralded_overlap", overlap}});
    }

    // Fold in the LPSM pipeline probabilities for the comparison table.
    Scenario exact = scenario;
    exact.shots_per_setting = 0;
    exact.basis = BasisSelection::All;
    DistributionRun lpsm = run_distribution(exact);
    double coverage = 0.0;
    json fractions;
    for (MeasBasis basis : selected_bases(BasisSelection::All)) {
        double targeted = 0.0, total = 0.0;
        for (const HeraldReportEntry& e : lpsm.report.heralds) {
            if (e.basis != basis || e.pauli_corrected) continue;
            total += e.joint_probability;
            if (e.target) targeted += e.joint_probability;
        }
        double fraction = total > 0.0 ? targeted / total : 0.0;
        fractions[basis_name(basis)] = fraction;
        coverage += fraction;
    }
    double success = lpsm.report.postselection_probability * coverage;

    return json{{"report", "swap_baseline"},
                {"name", scenario.name},
                {"version", project_version},
                {"config_hash", config_hash(scenario.raw_config)},
                {"input_pairs", json::array({bell_name(BellTag::phi_plus), bell_name(BellTag::phi_plus)})},
                {"outcomes", outs},
                {"comparison",
                 json{{"swap", json{{"initial_entangled_pairs", 2},
                                    {"measurement", "BSM"},
                                    {"outcome_probability_each", 0.25}}},
                      {"lpsm", json{{"initial_entangled_pairs", 0},
                                    {"measurement", "LPSM"},
                                    {"postselection_probability",
                                     lpsm.report.postselection_probability},
                                    {"herald_fraction_per_basis", fractions},
                                    {"family_coverage", coverage},
                                    {"success_probability", success}}}}}};
}

// --- external count tables --------------------------------------------

inline std::string counts_csv(const std::vector<CountRecord>& records) {
    std::string out = "setting,observed,shots\n";
    for (const CountRecord& r : records)
        out += std::string(analyzer_label(r.setting.r_idx)) + analyzer_label(r.setting.l_idx) + "," +
               std::to_string(r.observed) + "," + std::to_string(r.shots) + "\n";
    return out;
}

inline std::vector<CountRecord> parse_counts_csv(const std::string& text) {
    std::vector<CountRecord> records;
    std::stringstream ss(text);
    std::string line;
    bool header = true;
    while (std::getline(ss, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (header) {
            if (line != "setting,observed,shots")
                throw ConfigError("counts CSV must start with header setting,observed,shots");
            header = false;
            continue;
        }
        std::stringstream ls(line);
        std::string setting, observed, shots;
        if (!std::getline(ls, setting, ',') || !std::getline(ls, observed, ',') ||
            !std::getline(ls, shots, ','))
            throw ConfigError("malformed counts line: " + line);
        if (setting.size() != 2) throw ConfigError("setting token must be two analyzer labels: " + setting);
        CountRecord r{};
        r.setting.r_idx = parse_analyzer(setting.substr(0, 1));
        r.setting.l_idx = parse_analyzer(setting.substr(1, 1));
        r.observed = std::stoull(observed);
        r.shots = std::stoull(shots);
        if (r.shots < 1) throw ConfigError("counts CSV requires shots >= 1");
        r.expected_rate = double(r.observed) / double(r.shots);
        records.push_back(r);
    }
    if (records.empty()) throw ConfigError("counts CSV holds no records");
    return records;
}

/// Reconstruction report for externally supplied counts.
inline json tomo_report_json(const Scenario& scenario, const std::vector<CountRecord>& records) {
    TwoQubitDensity rho = reconstruct(records, scenario.use_mle);
    json out{{"report", "tomography"},
             {"name", scenario.name},
             {"version", project_version},
             {"config_hash", config_hash(scenario.raw_config)},
             {"density", density_to_json(rho)},
             {"concurrence", concurrence(rho)}};
    if (scenario.tomo_target) {
        double f = fidelity(rho, *scenario.tomo_target);
        out["target"] = bell_name(*scenario.tomo_target);
        out["fidelity"] = f;
        out["classical_limit_exceeded"] = classical_limit_check(f);
        ErrorBarReport err = error_bars(records, scenario.bootstrap_resamples,
                                        mix_seed(scenario.seed, 0),
                                        bell_vector(*scenario.tomo_target), scenario.use_mle);
        out["fidelity_mean"] = err.fidelity_mean;
        out["fidelity_err"] = err.fidelity_sigma;
        out["concurrence_mean"] = err.concurrence_mean;
        out["concurrence_err"] = err.concurrence_sigma;
    }
    return out;
}

}  // namespace sloccsim

#endif
