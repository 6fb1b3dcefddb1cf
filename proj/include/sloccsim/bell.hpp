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
#ifndef SLOCCSIM_BELL_HPP
#define SLOCCSIM_BELL_HPP

#include <numbers>
#include <string>

#include "sloccsim/fock.hpp"

namespace sloccsim {

enum class BellTag { psi_plus, psi_minus, phi_plus, phi_minus };

inline const char* bell_name(BellTag t) {
    switch (t) {
        case BellTag::psi_plus: return "psi_plus";
        case BellTag::psi_minus: return "psi_minus";
        case BellTag::phi_plus: return "phi_plus";
        case BellTag::phi_minus: return "phi_minus";
    }
    return "?";
}

inline BellTag parse_bell(const std::string& s) {
    if (s == "psi_plus") return BellTag::psi_plus;
    if (s == "psi_minus") return BellTag::psi_minus;
    if (s == "phi_plus") return BellTag::phi_plus;
    if (s == "phi_minus") return BellTag::phi_minus;
    throw ConfigError("unknown Bell state name: " + s);
}

inline double detail_factorial_ratio(int na, int nb) {
    // (na+nb)! / (na! nb!)
    double f = 1.0;
    for (int i = 1; i <= nb; ++i) f *= double(na + i) / double(i);
    return f;
}

/// Product of states on disjoint (or overlapping, with the right bosonic
/// weights) mode sets.
inline FockState tensor(const FockState& a, const FockState& b) {
    FockState out;
    out.photon_number = a.photon_number + b.photon_number;
    for (const auto& [pa, aa] : a.terms) {
        for (const auto& [pb, ab] : b.terms) {
            std::vector<OccupationPattern::Entry> entries = pa.entries();
            double boson = 1.0;
            for (const auto& [m, c] : pb.entries()) {
                int na = pa.count(m);
                if (na > 0)
                    boson *= detail_factorial_ratio(na, c);
                entries.push_back({m, c});
            }
            out.terms[OccupationPattern::from_counts(entries)] += aa * ab * std::sqrt(boson);
        }
    }
    prune(out);
    return out;
}

/// Polarization Bell states between one photon at R and one at L (temporal 0).
/// Ordering convention: R factor first, H before V.
inline FockState bell_rl(BellTag tag) {
    const double r = 1.0 / std::numbers::sqrt2;
    FockState hv = create(create(vacuum(), mode(Site::R, Pol::H)), mode(Site::L, Pol::V));
    FockState vh = create(create(vacuum(), mode(Site::R, Pol::V)), mode(Site::L, Pol::H));
    FockState hh = create(create(vacuum(), mode(Site::R, Pol::H)), mode(Site::L, Pol::H));
    FockState vv = create(create(vacuum(), mode(Site::R, Pol::V)), mode(Site::L, Pol::V));
    switch (tag) {
        case BellTag::psi_plus: return superpose({{r, hv}, {r, vh}});
        case BellTag::psi_minus: return superpose({{r, hv}, {-r, vh}});
        case BellTag::phi_plus: return superpose({{r, hh}, {r, vv}});
        case BellTag::phi_minus: return superpose({{r, hh}, {-r, vv}});
    }
    throw InvariantViolation("bell_rl: bad tag");
}

/**
 * Two-photon Bell states of the M pair at equal temporal mode: Ψ_M = |1_H,1_V⟩
 * and Φ±_M = (|2_V⟩ ± |2_H⟩)/√2. The antisymmetric Ψ⁻ combination is
 * annihilated by bosonic symmetry when both photons share the spatial and
 * temporal mode, so requesting it is an error.
 */
inline FockState bell_m(BellTag tag) {
    const double r = 1.0 / std::numbers::sqrt2;
    FockState hv = create(create(vacuum(), mode(Site::M, Pol::H)), mode(Site::M, Pol::V));
    FockState hh = normalize(create(create(vacuum(), mode(Site::M, Pol::H)), mode(Site::M, Pol::H))).first;
    FockState vv = normalize(create(create(vacuum(), mode(Site::M, Pol::V)), mode(Site::M, Pol::V))).first;
    switch (tag) {
        case BellTag::psi_plus: return hv;
        case BellTag::phi_plus: return superpose({{r, vv}, {r, hh}});
        case BellTag::phi_minus: return superpose({{r, vv}, {-r, hh}});
        case BellTag::psi_minus:
            throw InvariantViolation("bell_m: psi_minus vanishes for indistinguishable bosons");
    }
    throw InvariantViolation("bell_m: bad tag");
}

}  // namespace sloccsim

#endif
