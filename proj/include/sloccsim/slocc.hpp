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
#ifndef SLOCCSIM_SLOCC_HPP
#define SLOCCSIM_SLOCC_HPP

/**
 * Spatially localized post-selection on per-node photon counts, the Bell-pair
 * decomposition of the post-selected four-photon state, and the partial
 * distinguishability model (pairwise wavepacket overlaps realized on at most
 * four orthogonal temporal modes).
 */

#include <array>
#include <cmath>
#include <map>
#include <set>
#include <vector>

#include "sloccsim/bell.hpp"
#include "sloccsim/errors.hpp"
#include "sloccsim/fock.hpp"
#include "sloccsim/optics.hpp"

namespace sloccsim {

/// Per-node photon-count requirement. Sites not mentioned in `required` are
/// unconstrained; sites in `forbidden_sites` must hold zero photons.
struct NodePattern {
    std::map<Site, int> required;
    std::set<Site> forbidden_sites;

    NodePattern(std::map<Site, int> req, std::set<Site> forbidden = {})
        : required(std::move(req)), forbidden_sites(std::move(forbidden)) {
        if (required.empty()) throw InvariantViolation("NodePattern: at least one required entry");
        for (const auto& [s, c] : required)
            if (c < 0) throw InvariantViolation("NodePattern: negative required count");
    }

    bool matches(const OccupationPattern& pattern) const {
        std::map<Site, int> counts = node_counts(pattern);
        for (const auto& [s, c] : required) {
            auto it = counts.find(s);
            int have = it == counts.end() ? 0 : it->second;
            if (have != c) return false;
        }
        for (Site s : forbidden_sites) {
            auto it = counts.find(s);
            if (it != counts.end() && it->second != 0) return false;
        }
        return true;
    }
};

/// The heralding pattern of the protocol: one photon at each remote node, two
/// in the central node, nothing lost to the shutter.
inline NodePattern herald_pattern() {
    return NodePattern({{Site::R, 1}, {Site::M, 2}, {Site::L, 1}}, {Site::Blocked});
}

/// Mode-splitter angles of the two sources. Both photons of a source pass
/// identically set splitters, so the primed amplitudes equal the unprimed
/// ones: a = a' = cosθ, b = b' = sinθ (Source I), c = c' = cosφ, d = d' = sinφ
/// (Source II).
struct SourceConfig {
    double theta;
    double phi;

    double a() const { return std::cos(theta); }
    double b() const { return std::sin(theta); }
    double c() const { return std::cos(phi); }
    double d() const { return std::sin(phi); }
};

/// Pairwise wavepacket overlaps, 1 = indistinguishable, 0 = orthogonal.
/// `cross_overlap` applies between any Source-I photon and any Source-II
/// photon (one delay stage tunes the four-photon dip).
struct DistinguishabilityConfig {
    double pair_overlap_i = 1.0;
    double pair_overlap_ii = 1.0;
    double cross_overlap = 1.0;

    void validate() const {
        for (double o : {pair_overlap_i, pair_overlap_ii, cross_overlap})
            if (!(o >= 0.0 && o <= 1.0))
                throw ConfigError("overlaps must lie in [0, 1]");
    }
};

namespace detail {

/**
 * Temporal wavepacket vectors for the four photons (I_H, I_V, II_H, II_V),
 * one row each over four orthogonal temporal modes, realizing the Gram matrix
 * of the configured overlaps. Tolerance-aware Cholesky; an overlap triple
 * whose Gram matrix is not PSD describes no physical wavepacket arrangement
 * and is rejected.
 */
inline std::array<std::array<double, 4>, 4> temporal_wavepackets(const DistinguishabilityConfig& d) {
    d.validate();
    const double oi = d.pair_overlap_i, oii = d.pair_overlap_ii, ox = d.cross_overlap;
    const double g[4][4] = {{1, oi, ox, ox}, {oi, 1, ox, ox}, {ox, ox, 1, oii}, {ox, ox, oii, 1}};
    std::array<std::array<double, 4>, 4> l{};
    for (int i = 0; i < 4; ++i) {
        double diag = g[i][i];
        for (int k = 0; k < i; ++k) diag -= l[i][k] * l[i][k];
        if (diag < -1e-10)
            throw ConfigError("overlap configuration is unphysical: (1+pair_i)(1+pair_ii) >= 4*cross^2 required");
        l[i][i] = diag > 1e-14 ? std::sqrt(diag) : 0.0;
        for (int j = i + 1; j < 4; ++j) {
            double off = g[j][i];
            for (int k = 0; k < i; ++k) off -= l[j][k] * l[i][k];
            if (l[i][i] > 0.0) {
                l[j][i] = off / l[i][i];
            } else if (std::abs(off) > 1e-7) {
                throw ConfigError("overlap configuration is unphysical (rank-deficient Gram mismatch)");
            } else {
                l[j][i] = 0.0;
            }
        }
    }
    return l;
}

}  // namespace detail

/**
 * The four-photon initial state: two photons with opposite polarizations per
 * source, spatial wavepackets cosθ|R⟩+sinθ|M⟩ (Source I) and cosφ|M⟩+sinφ|L⟩
 * (Source II). With all overlaps 1 every photon sits in temporal mode 0.
 * Returned normalized.
 */
inline FockState prepare_initial(const SourceConfig& sources, const DistinguishabilityConfig& dist) {
    auto wp = detail::temporal_wavepackets(dist);
    struct Photon {
        Site first;
        Site second;
        double amp_first;
        double amp_second;
        Pol pol;
        int wp_row;
    };
    const std::vector<Photon> photons = {
        {Site::R, Site::M, sources.a(), sources.b(), Pol::H, 0},
        {Site::R, Site::M, sources.a(), sources.b(), Pol::V, 1},
        {Site::M, Site::L, sources.c(), sources.d(), Pol::H, 2},
        {Site::M, Site::L, sources.c(), sources.d(), Pol::V, 3},
    };
    FockState state = vacuum();
    for (const Photon& p : photons) {
        std::vector<std::pair<ModeLabel, complex>> wavepacket;
        for (std::uint8_t t = 0; t < max_temporal_modes; ++t) {
            double w = wp[p.wp_row][t];
            if (std::abs(w) < amplitude_epsilon) continue;
            wavepacket.push_back({mode(p.first, p.pol, t), complex(p.amp_first * w, 0)});
            wavepacket.push_back({mode(p.second, p.pol, t), complex(p.amp_second * w, 0)});
        }
        state = create_superposition(state, wavepacket);
    }
    return normalize(state).first;
}

/**
 * Projects onto the subspace whose node counts match `pattern` (forbidden
 * sites empty) and renormalizes. The returned probability is relative to the
 * normalized input state.
 */
inline std::pair<FockState, double> postselect(const FockState& state, const NodePattern& pattern) {
    double total = norm_squared(state);
    if (total <= amplitude_epsilon * amplitude_epsilon)
        throw ZeroNorm("postselect: input state has zero norm");
    FockState kept;
    kept.photon_number = state.photon_number;
    double selected = 0.0;
    for (const auto& [pat, amp] : state.terms) {
        if (!pattern.matches(pat)) continue;
        kept.terms[pat] = amp;
        selected += std::norm(amp);
    }
    double probability = selected / total;
    if (kept.terms.empty() || probability < amplitude_epsilon)
        throw EmptyPostselection("postselect: no component matches the node pattern");
    return {normalize(kept).first, probability};
}

/// Expansion of a {R:1, M:2, L:1}-supported state over {M-pair Bell} x {R-L
/// Bell} product vectors at temporal index 0. Anything outside that span
/// (eg. temporally mismatched M photons) lands in `residual`.
struct BellDecomposition {
    std::map<std::pair<BellTag, BellTag>, complex> coefficients;  // (M tag, RL tag) -> amplitude
    double residual = 0.0;
};

inline BellDecomposition bell_decompose(const FockState& state) {
    const std::map<Site, int> want = {{Site::R, 1}, {Site::M, 2}, {Site::L, 1}};
    for (const auto& [pat, amp] : state.terms)
        if (node_counts(pat) != want)
            throw UnsupportedSupport("bell_decompose: state not supported on {R:1, M:2, L:1}");

    BellDecomposition out;
    const BellTag m_tags[] = {BellTag::psi_plus, BellTag::phi_plus, BellTag::phi_minus};
    const BellTag rl_tags[] = {BellTag::psi_plus, BellTag::psi_minus, BellTag::phi_plus,
                               BellTag::phi_minus};
    // The residual is taken from the explicit remainder vector; subtracting
    // squared norms would square-root rounding error into the answer.
    std::vector<std::pair<complex, FockState>> remainder = {{complex(1, 0), state}};
    for (BellTag mt : m_tags) {
        for (BellTag rt : rl_tags) {
            FockState basis_vec = tensor(bell_m(mt), bell_rl(rt));
            complex c = inner_product(basis_vec, state);
            out.coefficients[{mt, rt}] = c;
            if (std::abs(c) > 0.0) remainder.push_back({-c, basis_vec});
        }
    }
    out.residual = norm(superpose(remainder));
    return out;
}

struct ScanRow {
    double theta;
    double phi;
    double probability;
};

/// Post-selection probability over a (θ, φ) grid; grid points where nothing
/// matches report probability 0.
inline std::vector<ScanRow> success_probability_scan(const std::vector<double>& thetas,
                                                     const std::vector<double>& phis,
                                                     const NodePattern& pattern,
                                                     const DistinguishabilityConfig& dist = {}) {
    std::vector<ScanRow> rows;
    rows.reserve(thetas.size() * phis.size());
    for (double theta : thetas) {
        for (double phi : phis) {
            FockState st = prepare_initial(SourceConfig{theta, phi}, dist);
            double p = 0.0;
            try {
                p = postselect(st, pattern).second;
            } catch (const EmptyPostselection&) {
                p = 0.0;
            }
            rows.push_back({theta, phi, p});
        }
    }
    return rows;
}

}  // namespace sloccsim

#endif
