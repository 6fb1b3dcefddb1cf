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
#ifndef SLOCCSIM_TOMOGRAPHY_HPP
#define SLOCCSIM_TOMOGRAPHY_HPP

/**
 * Finite-statistics two-qubit tomography: Poisson photon counting over the
 * standard 36 product-analyzer settings, linear-inversion reconstruction with
 * nearest-PSD projection (optional maximum-likelihood refinement), parametric
 * bootstrap error bars, and Hong-Ou-Mandel interference curves.
 */

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <set>
#include <string>
#include <vector>

#include "sloccsim/entanglement.hpp"
#include "sloccsim/errors.hpp"
#include "sloccsim/rng.hpp"

namespace sloccsim {

// Analyzer order is fixed: H, V, d, c, r, l per side.
inline constexpr int n_analyzers = 6;

inline Eigen::Vector2cd analyzer_ket(int idx) {
    const double r = 1.0 / std::numbers::sqrt2;
    const complex i(0, 1);
    switch (idx) {
        case 0: return Eigen::Vector2cd(1, 0);        // H
        case 1: return Eigen::Vector2cd(0, 1);        // V
        case 2: return Eigen::Vector2cd(r, r);        // d
        case 3: return Eigen::Vector2cd(r, -r);       // c
        case 4: return Eigen::Vector2cd(r, r * i);    // r
        case 5: return Eigen::Vector2cd(r, -r * i);   // l
    }
    throw InvariantViolation("analyzer_ket: bad index");
}

inline const char* analyzer_label(int idx) {
    static const char* labels[] = {"H", "V", "d", "c", "r", "l"};
    if (idx < 0 || idx >= n_analyzers) throw InvariantViolation("analyzer_label: bad index");
    return labels[idx];
}

inline int parse_analyzer(const std::string& s) {
    for (int i = 0; i < n_analyzers; ++i)
        if (s == analyzer_label(i)) return i;
    throw ConfigError("unknown analyzer label: " + s);
}

/// One product projector (R-side analyzer, L-side analyzer).
struct MeasurementSetting {
    int r_idx;
    int l_idx;

    auto operator<=>(const MeasurementSetting&) const = default;
};

/// The 36 informationally complete product settings, canonical order.
inline std::vector<MeasurementSetting> tomography_settings() {
    std::vector<MeasurementSetting> s;
    s.reserve(36);
    for (int r = 0; r < n_analyzers; ++r)
        for (int l = 0; l < n_analyzers; ++l) s.push_back({r, l});
    return s;
}

inline Eigen::Vector4cd setting_ket(const MeasurementSetting& s) {
    Eigen::Vector2cd a = analyzer_ket(s.r_idx), b = analyzer_ket(s.l_idx);
    Eigen::Vector4cd v;
    v << a(0) * b(0), a(0) * b(1), a(1) * b(0), a(1) * b(1);
    return v;
}

inline double born_rate(const TwoQubitDensity& rho, const MeasurementSetting& s) {
    Eigen::Vector4cd v = setting_ket(s);
    return std::max(0.0, (v.adjoint() * rho.matrix * v)(0, 0).real());
}

/**
 * Per-setting coincidence bookkeeping. `shots` is the Poisson exposure: the
 * observed count is drawn with mean expected_rate * shots, so an upward
 * fluctuation can exceed `shots` when the rate is near 1 (for Bell-state
 * sources all product rates are <= 1/2 and the bound holds in practice).
 * shots == 0 marks an exact record whose frequency is expected_rate itself.
 */
struct CountRecord {
    MeasurementSetting setting;
    double expected_rate;
    std::uint64_t observed;
    std::uint64_t shots;

    double frequency() const {
        return shots > 0 ? double(observed) / double(shots) : expected_rate;
    }
};

/// Deterministic given the seed; E[observed/shots] equals the Born rate.
inline std::vector<CountRecord> simulate_counts(const TwoQubitDensity& rho,
                                                std::uint64_t shots_per_setting, std::uint64_t seed) {
    if (shots_per_setting < 1)
        throw InvariantViolation("simulate_counts: shots_per_setting must be >= 1");
    Rng rng(seed);
    std::vector<CountRecord> records;
    for (const MeasurementSetting& s : tomography_settings()) {
        double rate = born_rate(rho, s);
        std::uint64_t observed = rng.poisson(rate * double(shots_per_setting));
        records.push_back({s, rate, observed, shots_per_setting});
    }
    return records;
}

/// Exact-statistics records (shots = 0): frequencies are the Born rates.
inline std::vector<CountRecord> exact_counts(const TwoQubitDensity& rho) {
    std::vector<CountRecord> records;
    for (const MeasurementSetting& s : tomography_settings())
        records.push_back({s, born_rate(rho, s), 0, 0});
    return records;
}

namespace detail {

inline Eigen::Matrix2cd pauli(int k) {
    Eigen::Matrix2cd m;
    const complex i(0, 1);
    switch (k) {
        case 0: m << 1, 0, 0, 1; break;
        case 1: m << 0, 1, 1, 0; break;
        case 2: m << 0, -i, i, 0; break;
        case 3: m << 1, 0, 0, -1; break;
        default: throw InvariantViolation("pauli: bad index");
    }
    return m;
}

inline Eigen::Matrix4cd kron2(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
    Eigen::Matrix4cd m;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) m.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    return m;
}

inline const std::array<Eigen::Matrix4cd, 16>& pauli_basis() {
    static const std::array<Eigen::Matrix4cd, 16> basis = [] {
        std::array<Eigen::Matrix4cd, 16> b;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) b[std::size_t(4 * i + j)] = kron2(pauli(i), pauli(j));
        return b;
    }();
    return basis;
}

/// Pseudoinverse of the 36x16 design matrix rate_s = sum_k A_sk c_k with
/// rho = (1/4) sum_k c_k (sigma_i x sigma_j). Fixed by the setting order.
inline const Eigen::MatrixXd& design_pseudoinverse() {
    static const Eigen::MatrixXd pinv = [] {
        auto settings = tomography_settings();
        Eigen::MatrixXd a(36, 16);
        for (int s = 0; s < 36; ++s) {
            Eigen::Vector4cd v = setting_ket(settings[std::size_t(s)]);
            for (int k = 0; k < 16; ++k)
                a(s, k) = (v.adjoint() * pauli_basis()[std::size_t(k)] * v)(0, 0).real() / 4.0;
        }
        return Eigen::MatrixXd((a.transpose() * a).ldlt().solve(a.transpose()));
    }();
    return pinv;
}

/// Eigenvalue clamp + trace renormalization: the nearest-PSD projection used
/// after linear inversion.
inline Eigen::Matrix4cd project_psd(const Eigen::Matrix4cd& m) {
    Eigen::Matrix4cd h = (m + m.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(h);
    Eigen::Vector4d ev = es.eigenvalues().cwiseMax(0.0);
    double tr = ev.sum();
    if (tr <= 0.0) throw InvariantViolation("project_psd: all eigenvalues clamped to zero");
    ev /= tr;
    return es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
}

inline Eigen::Matrix4cd mle_refine(const Eigen::Matrix4cd& start,
                                   const std::vector<double>& frequencies, int max_iters = 300) {
    auto settings = tomography_settings();
    Eigen::Matrix4cd rho = start;
    // Keep the iteration away from exactly singular starting points.
    rho = 0.999 * rho + 0.001 * Eigen::Matrix4cd::Identity() / 4.0;
    for (int it = 0; it < max_iters; ++it) {
        Eigen::Matrix4cd r_op = Eigen::Matrix4cd::Zero();
        for (int s = 0; s < 36; ++s) {
            Eigen::Vector4cd v = setting_ket(settings[std::size_t(s)]);
            double p = std::max(1e-12, (v.adjoint() * rho * v)(0, 0).real());
            r_op += (frequencies[std::size_t(s)] / p) * (v * v.adjoint());
        }
        Eigen::Matrix4cd next = r_op * rho * r_op;
        next /= next.trace().real();
        double delta = (next - rho).cwiseAbs().maxCoeff();
        rho = next;
        if (delta < 1e-12) break;
    }
    return (rho + rho.adjoint()) / 2.0;
}

}  // namespace detail

/**
 * Linear-inversion reconstruction over the 36-setting overcomplete set via
 * least squares, then nearest-PSD projection. `use_mle` switches on an RρR
 * maximum-likelihood refinement seeded by the linear estimate.
 */
inline TwoQubitDensity reconstruct(const std::vector<CountRecord>& records, bool use_mle = false) {
    std::vector<double> freq(36, 0.0);
    std::set<MeasurementSetting> seen;
    for (const CountRecord& r : records) {
        if (r.setting.r_idx < 0 || r.setting.r_idx >= n_analyzers || r.setting.l_idx < 0 ||
            r.setting.l_idx >= n_analyzers)
            throw IncompleteSettings("reconstruct: setting index out of range");
        if (!seen.insert(r.setting).second)
            throw IncompleteSettings("reconstruct: duplicate setting " +
                                     std::string(analyzer_label(r.setting.r_idx)) +
                                     analyzer_label(r.setting.l_idx));
        freq[std::size_t(r.setting.r_idx * n_analyzers + r.setting.l_idx)] = r.frequency();
    }
    if (seen.size() != 36)
        throw IncompleteSettings("reconstruct: informationally complete set requires all 36 settings");

    Eigen::VectorXd f = Eigen::Map<Eigen::VectorXd>(freq.data(), 36);
    Eigen::VectorXd c = detail::design_pseudoinverse() * f;
    Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
    for (int k = 0; k < 16; ++k) rho += (c(k) / 4.0) * detail::pauli_basis()[std::size_t(k)];
    rho = detail::project_psd(rho);
    if (use_mle) rho = detail::project_psd(detail::mle_refine(rho, freq));
    return TwoQubitDensity(rho);
}

/// Bootstrap estimate for the fidelity and concurrence of a reconstruction.
struct ErrorBarReport {
    double fidelity_mean = 0.0;
    double fidelity_sigma = 0.0;
    double concurrence_mean = 0.0;
    double concurrence_sigma = 0.0;
};

/**
 * Parametric bootstrap: resample each observed count from Poisson(observed),
 * reconstruct, evaluate the metrics against `target`; report mean and sample
 * standard deviation. Exact records (shots = 0) are carried through
 * unchanged, so a fully exact record set reports zero sigma.
 */
inline ErrorBarReport error_bars(const std::vector<CountRecord>& records, int resamples,
                                 std::uint64_t seed, const Eigen::Vector4cd& target,
                                 bool use_mle = false) {
    if (resamples < 2) throw InvariantViolation("error_bars: resamples must be >= 2");
    Rng rng(seed);
    std::vector<double> fs, cs;
    fs.reserve(std::size_t(resamples));
    cs.reserve(std::size_t(resamples));
    std::vector<CountRecord> resampled = records;
    for (int r = 0; r < resamples; ++r) {
        for (std::size_t i = 0; i < records.size(); ++i) {
            if (records[i].shots > 0)
                resampled[i].observed = rng.poisson(double(records[i].observed));
        }
        TwoQubitDensity rho = reconstruct(resampled, use_mle);
        fs.push_back(fidelity(rho, target));
        cs.push_back(concurrence(rho));
    }
    auto mean_sigma = [](const std::vector<double>& xs) {
        double mean = 0.0;
        for (double x : xs) mean += x;
        mean /= double(xs.size());
        double var = 0.0;
        for (double x : xs) var += (x - mean) * (x - mean);
        var /= double(xs.size() - 1);
        return std::pair<double, double>{mean, std::sqrt(var)};
    };
    auto [fm, fsig] = mean_sigma(fs);
    auto [cm, csig] = mean_sigma(cs);
    return ErrorBarReport{fm, fsig, cm, csig};
}

// --- Hong-Ou-Mandel interference ---------------------------------------

/// Coincidence probability of two photons with wavepacket overlap o meeting
/// at a balanced beam splitter, one per input port.
inline double hom_coincidence(double overlap) { return 0.5 * (1.0 - overlap * overlap); }

/// Dip visibility (C_max - C_min)/(C_max + C_min) for zero-delay overlap o,
/// with C_max = 1/2 at infinite delay.
inline double visibility_from_overlap(double overlap) {
    double o2 = overlap * overlap;
    return o2 / (2.0 - o2);
}

/// Inverse of visibility_from_overlap; how named experimental visibilities
/// become overlap presets.
inline double overlap_from_visibility(double visibility) {
    if (!(visibility >= 0.0 && visibility <= 1.0))
        throw ConfigError("visibility must lie in [0, 1]");
    return std::sqrt(2.0 * visibility / (1.0 + visibility));
}

struct HomCurve {
    std::vector<double> delays;        // in units of the wavepacket width σ
    std::vector<double> coincidences;  // probability per delay
    double visibility = 0.0;
};

/**
 * Coincidence dip for a Gaussian wavepacket model: o(τ) = o₀·exp(−τ²/(2σ²)).
 * The grid should extend to a few σ so the wings reach the C_max plateau.
 */
inline HomCurve hom_curve(double sigma, const std::vector<double>& delays, double zero_delay_overlap) {
    if (!(sigma > 0.0)) throw ConfigError("hom_curve: sigma must be positive");
    if (delays.empty()) throw ConfigError("hom_curve: empty delay grid");
    HomCurve curve;
    curve.delays = delays;
    curve.coincidences.reserve(delays.size());
    for (double tau : delays) {
        double o = zero_delay_overlap * std::exp(-tau * tau / (2.0 * sigma * sigma));
        curve.coincidences.push_back(hom_coincidence(o));
    }
    double cmax = *std::max_element(curve.coincidences.begin(), curve.coincidences.end());
    double cmin = *std::min_element(curve.coincidences.begin(), curve.coincidences.end());
    curve.visibility = (cmax + cmin) > 0.0 ? (cmax - cmin) / (cmax + cmin) : 0.0;
    return curve;
}

}  // namespace sloccsim

#endif
