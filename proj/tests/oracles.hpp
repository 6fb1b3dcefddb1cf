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
#ifndef SLOCCSIM_TESTS_ORACLES_HPP
#define SLOCCSIM_TESTS_ORACLES_HPP

// Test-side oracles, deliberately independent of the library's incremental
// creation-operator path: states are expanded by enumerating every assignment
// of each photon to one of its wavepacket options and converting the operator
// monomials to normalized kets in one step.

#include <map>
#include <utility>
#include <vector>

#include "sloccsim/fock.hpp"

namespace sloccsim::testing {

using Wavepacket = std::vector<std::pair<ModeLabel, complex>>;

/// Brute-force expansion of a product of single-photon wavepacket creations
/// applied to vacuum. Amplitude of a pattern = sum over assignments of the
/// coefficient product, times sqrt(prod_m n_m!).
inline std::map<OccupationPattern, complex> product_expansion(const std::vector<Wavepacket>& photons) {
    std::map<OccupationPattern, complex> monomials;

    std::vector<std::size_t> choice(photons.size(), 0);
    while (true) {
        complex coeff(1.0, 0.0);
        std::vector<OccupationPattern::Entry> entries;
        for (std::size_t p = 0; p < photons.size(); ++p) {
            const auto& [m, c] = photons[p][choice[p]];
            coeff *= c;
            entries.push_back({m, 1});
        }
        monomials[OccupationPattern::from_counts(entries)] += coeff;

        // next assignment
        std::size_t p = 0;
        while (p < photons.size()) {
            if (++choice[p] < photons[p].size()) break;
            choice[p] = 0;
            ++p;
        }
        if (p == photons.size()) break;
    }

    std::map<OccupationPattern, complex> amplitudes;
    for (auto& [pat, coeff] : monomials) {
        double factor = 1.0;
        for (const auto& [m, c] : pat.entries())
            for (int i = 2; i <= c; ++i) factor *= i;
        complex amp = coeff * std::sqrt(factor);
        if (std::abs(amp) > 1e-14) amplitudes[pat] = amp;
    }
    return amplitudes;
}

inline double expansion_norm_squared(const std::map<OccupationPattern, complex>& amps) {
    double acc = 0.0;
    for (const auto& [pat, amp] : amps) acc += std::norm(amp);
    return acc;
}

/// Max absolute amplitude difference between a FockState and an oracle
/// expansion, after scaling the expansion by `scale` (use 1/norm to compare
/// against normalized states).
inline double max_amplitude_deviation(const FockState& state,
                                      const std::map<OccupationPattern, complex>& amps,
                                      double scale = 1.0) {
    double worst = 0.0;
    for (const auto& [pat, amp] : amps) {
        auto it = state.terms.find(pat);
        complex have = it == state.terms.end() ? complex(0, 0) : it->second;
        worst = std::max(worst, std::abs(have - amp * scale));
    }
    for (const auto& [pat, amp] : state.terms) {
        if (amps.find(pat) == amps.end()) worst = std::max(worst, std::abs(amp));
    }
    return worst;
}

}  // namespace sloccsim::testing

#endif
