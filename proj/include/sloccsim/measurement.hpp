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
#ifndef SLOCCSIM_MEASUREMENT_HPP
#define SLOCCSIM_MEASUREMENT_HPP

/**
 * The node-M measurement chain: shutter beam splitter (one output dumped on
 * BLOCKED), arm-splitting beam splitter into paths 1 and 2, and localized
 * product-state measurements on the two arms that herald the R-L state.
 * Only coincidences with exactly one photon per arm and an empty BLOCKED port
 * are valid; everything else is bookkept as one aggregate probability.
 */

#include <array>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "sloccsim/bell.hpp"
#include "sloccsim/entanglement.hpp"
#include "sloccsim/errors.hpp"
#include "sloccsim/fock.hpp"
#include "sloccsim/optics.hpp"

namespace sloccsim {

enum class MeasBasis { HV, Circular, Diagonal };

inline const char* basis_name(MeasBasis b) {
    switch (b) {
        case MeasBasis::HV: return "HV";
        case MeasBasis::Circular: return "circular";
        case MeasBasis::Diagonal: return "diagonal";
    }
    return "?";
}

inline MeasBasis parse_basis(const std::string& s) {
    if (s == "HV") return MeasBasis::HV;
    if (s == "circular") return MeasBasis::Circular;
    if (s == "diagonal") return MeasBasis::Diagonal;
    throw ConfigError("unknown measurement basis: " + s);
}

/// Single-arm polarization projector. |r⟩=(|H⟩+i|V⟩)/√2, |l⟩=(|H⟩−i|V⟩)/√2,
/// |d⟩=(|H⟩+|V⟩)/√2, |c⟩=(|H⟩−|V⟩)/√2.
struct PolProjector {
    MeasBasis basis;
    int outcome;                   // 0 or 1 within the basis pair
    std::array<complex, 2> ket;    // components over (H, V)
    const char* label;
};

inline PolProjector projector(MeasBasis basis, int outcome) {
    const double r = 1.0 / std::numbers::sqrt2;
    const complex i(0, 1);
    switch (basis) {
        case MeasBasis::HV:
            return outcome == 0 ? PolProjector{basis, 0, {complex(1), complex(0)}, "H"}
                                : PolProjector{basis, 1, {complex(0), complex(1)}, "V"};
        case MeasBasis::Circular:
            return outcome == 0 ? PolProjector{basis, 0, {complex(r), i * r}, "r"}
                                : PolProjector{basis, 1, {complex(r), -i * r}, "l"};
        case MeasBasis::Diagonal:
            return outcome == 0 ? PolProjector{basis, 0, {complex(r), complex(r)}, "d"}
                                : PolProjector{basis, 1, {complex(r), complex(-r)}, "c"};
    }
    throw InvariantViolation("projector: bad basis");
}

/// Measurement-induced two-photon states on the arm pair (path 1, path 2):
/// Ψ' = (|H₁V₂⟩+|V₁H₂⟩)/√2, Φ'± = (|H₁H₂⟩±|V₁V₂⟩)/√2.
inline FockState arm_state(BellTag tag) {
    const double r = 1.0 / std::numbers::sqrt2;
    auto two = [](Pol p1, Pol p2) {
        return create(create(vacuum(), mode(Site::M1, p1)), mode(Site::M2, p2));
    };
    switch (tag) {
        case BellTag::psi_plus: return superpose({{r, two(Pol::H, Pol::V)}, {r, two(Pol::V, Pol::H)}});
        case BellTag::psi_minus: return superpose({{r, two(Pol::H, Pol::V)}, {-r, two(Pol::V, Pol::H)}});
        case BellTag::phi_plus: return superpose({{r, two(Pol::H, Pol::H)}, {r, two(Pol::V, Pol::V)}});
        case BellTag::phi_minus: return superpose({{r, two(Pol::H, Pol::H)}, {-r, two(Pol::V, Pol::V)}});
    }
    throw InvariantViolation("arm_state: bad tag");
}

/**
 * Sends the two M photons through the shutter beam splitter (second output
 * dumped on BLOCKED) and the arm beam splitter into paths 1 and 2. The result
 * is not yet post-selected on arm occupancy; blocked and bunched components
 * stay in the state with their amplitudes.
 */
inline FockState split_node_m(const FockState& state) {
    const std::map<Site, int> want = {{Site::R, 1}, {Site::M, 2}, {Site::L, 1}};
    for (const auto& [pat, amp] : state.terms)
        if (node_counts(pat) != want)
            throw UnsupportedSupport("split_node_m: state must be post-selected on {R:1, M:2, L:1}");
    Circuit chain;
    for (Pol pol : {Pol::H, Pol::V}) {
        for (std::uint8_t t = 0; t < max_temporal_modes; ++t) {
            chain.then(beam_splitter(mode(Site::M, pol, t), mode(Site::Blocked, pol, t)));
            chain.then(beam_splitter(mode(Site::M, pol, t), mode(Site::M2, pol, t)));
            chain.then(relabel(mode(Site::M, pol, t), mode(Site::M1, pol, t)));
        }
    }
    return apply(chain, state);
}

/// One heralding event: which product state fired on the arms, the heralded
/// R-L density operator, and its joint probability (relative to the state
/// split_node_m was fed). `target` is set for the protocol-designated
/// outcomes only.
struct HeraldRecord {
    MeasBasis basis;
    std::array<int, 2> outcome;
    std::string outcome_label;
    TwoQubitDensity rl_state;
    double joint_probability;
    std::optional<BellTag> target;
};

struct LpsmResult {
    std::vector<HeraldRecord> records;
    double non_coincidence_probability = 0.0;  // blocked photons or two photons in one arm
};

inline std::optional<BellTag> lpsm_target(MeasBasis basis, int o1, int o2) {
    if (o1 == o2) return std::nullopt;  // same-label pairs do not discriminate
    switch (basis) {
        case MeasBasis::HV: return BellTag::psi_plus;
        case MeasBasis::Circular: return BellTag::phi_plus;
        case MeasBasis::Diagonal: return BellTag::phi_minus;
    }
    return std::nullopt;
}

/**
 * Projects the two arms onto every ordered product-state outcome of the
 * chosen basis, heralding the R-L polarization state for coincidence events.
 * Temporal indices are unobserved and traced out, so the heralded state can
 * be mixed for partially distinguishable photons.
 */
inline LpsmResult lpsm_herald(const FockState& split_state, MeasBasis basis) {
    LpsmResult result;

    // (σR, σL, tR, tL, t1, t2) -> amplitude, one map per outcome pair.
    using SectorKey = std::tuple<int, int, int, int, int, int>;
    std::array<std::map<SectorKey, complex>, 4> outcome_amps;

    for (const auto& [pat, amp] : split_state.terms) {
        int n_blocked = 0, n1 = 0, n2 = 0;
        for (const auto& [m, c] : pat.entries()) {
            if (m.site == Site::Blocked) n_blocked += c;
            if (m.site == Site::M1) n1 += c;
            if (m.site == Site::M2) n2 += c;
        }
        if (n_blocked > 0 || n1 != 1 || n2 != 1) {
            result.non_coincidence_probability += std::norm(amp);
            continue;
        }
        int p1 = 0, t1 = 0, p2 = 0, t2 = 0, sr = 0, tr = 0, sl = 0, tl = 0;
        for (const auto& [m, c] : pat.entries()) {
            int pol = (m.pol == Pol::V) ? 1 : 0;
            switch (m.site) {
                case Site::M1: p1 = pol; t1 = m.temporal; break;
                case Site::M2: p2 = pol; t2 = m.temporal; break;
                case Site::R: sr = pol; tr = m.temporal; break;
                case Site::L: sl = pol; tl = m.temporal; break;
                default: break;
            }
        }
        for (int o1 = 0; o1 < 2; ++o1) {
            for (int o2 = 0; o2 < 2; ++o2) {
                complex w = std::conj(projector(basis, o1).ket[p1]) *
                            std::conj(projector(basis, o2).ket[p2]) * amp;
                if (std::abs(w) < amplitude_epsilon) continue;
                outcome_amps[2 * o1 + o2][{sr, sl, tr, tl, t1, t2}] += w;
            }
        }
    }

    for (int o1 = 0; o1 < 2; ++o1) {
        for (int o2 = 0; o2 < 2; ++o2) {
            const auto& amps = outcome_amps[2 * o1 + o2];
            // Trace out all temporal labels; keep (σR, σL) coherences.
            std::map<std::array<int, 4>, Eigen::Vector4cd> sectors;
            double prob = 0.0;
            for (const auto& [key, a] : amps) {
                auto [sr, sl, tr, tl, t1, t2] = key;
                auto [it, ins] =
                    sectors.try_emplace(std::array<int, 4>{tr, tl, t1, t2}, Eigen::Vector4cd::Zero());
                it->second(2 * sr + sl) += a;
                prob += std::norm(a);
            }
            if (prob < 1e-14) continue;
            Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
            for (const auto& [key, v] : sectors) rho += v * v.adjoint();
            rho /= rho.trace().real();
            std::string label = std::string(projector(basis, o1).label) + "1," +
                                std::string(projector(basis, o2).label) + "2";
            result.records.push_back(HeraldRecord{basis,
                                                  {o1, o2},
                                                  label,
                                                  TwoQubitDensity(rho),
                                                  prob,
                                                  lpsm_target(basis, o1, o2)});
        }
    }
    return result;
}

enum class Node { R, L };

/// Conjugation by σ_z ⊗ I (node R) or I ⊗ σ_z (node L).
inline TwoQubitDensity pauli_z(const TwoQubitDensity& rl, Node which) {
    Eigen::Vector4cd diag;
    if (which == Node::R)
        diag << 1, 1, -1, -1;
    else
        diag << 1, -1, 1, -1;
    Eigen::Matrix4cd z = diag.asDiagonal();
    return TwoQubitDensity(z * rl.matrix * z);
}

inline Eigen::Vector4cd pauli_z(const Eigen::Vector4cd& state, Node which) {
    Eigen::Vector4cd diag;
    if (which == Node::R)
        diag << 1, 1, -1, -1;
    else
        diag << 1, -1, 1, -1;
    return diag.asDiagonal() * state;
}

/// One Bell-state-measurement branch of standard entanglement swapping.
struct SwapOutcome {
    BellTag bsm_outcome;
    Eigen::Vector4cd heralded_ab;
    double probability;
};

/**
 * Standard entanglement swapping at the two-qubit level: Bell pairs (A,M1)
 * and (M2,B), BSM on (M1,M2), heralded A-B state per outcome. The comparison
 * baseline for the LPSM protocol.
 */
inline std::array<SwapOutcome, 4> swap_baseline(BellTag pair_am, BellTag pair_mb) {
    Eigen::Vector4cd b1 = bell_vector(pair_am);
    Eigen::Vector4cd b2 = bell_vector(pair_mb);
    const BellTag outcomes[] = {BellTag::psi_plus, BellTag::psi_minus, BellTag::phi_plus,
                                BellTag::phi_minus};
    std::array<SwapOutcome, 4> result{};
    for (int k = 0; k < 4; ++k) {
        Eigen::Vector4cd bk = bell_vector(outcomes[k]);
        Eigen::Vector4cd ab = Eigen::Vector4cd::Zero();
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
                for (int m1 = 0; m1 < 2; ++m1)
                    for (int m2 = 0; m2 < 2; ++m2)
                        ab(2 * a + b) += std::conj(bk(2 * m1 + m2)) * b1(2 * a + m1) * b2(2 * m2 + b);
        double p = ab.squaredNorm();
        if (p > 0) ab /= std::sqrt(p);
        result[k] = SwapOutcome{outcomes[k], ab, p};
    }
    return result;
}

}  // namespace sloccsim

#endif
