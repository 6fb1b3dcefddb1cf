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
#ifndef SLOCCSIM_OPTICS_HPP
#define SLOCCSIM_OPTICS_HPP

/**
 * Linear-optical elements as mode unitaries, applied to Fock states through
 * creation-operator substitution a†_k -> sum_j U_jk a†_j. Elements act on one
 * polarization/temporal sector at a time; callers instantiate them per sector
 * (the optics are temporal-mode-blind, distinguishability only selects which
 * modes interfere).
 */

#include <cmath>
#include <numbers>
#include <set>
#include <vector>

#include "sloccsim/errors.hpp"
#include "sloccsim/fock.hpp"

namespace sloccsim {

// Temporal indices run 0..3; four orthogonal wavepackets are exact for
// pairwise-overlap models of four photons.
inline constexpr int max_temporal_modes = 4;

namespace detail {

inline double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

/**
 * Creation-operator substitution with a general |out| x |in| matrix
 * (column k = image of input mode k). Unitary elements use in == out; the
 * non-isometric case is what a state-preparation routing needs when spatial
 * wavepackets from different sources land on shared node modes.
 */
inline FockState substitute(const FockState& s, const std::vector<ModeLabel>& in_modes,
                            const std::vector<ModeLabel>& out_modes,
                            const std::vector<complex>& matrix) {
    const std::size_t n_in = in_modes.size();
    const std::size_t n_out = out_modes.size();
    if (matrix.size() != n_in * n_out)
        throw InvariantViolation("substitute: matrix shape does not match mode lists");
    auto u = [&](std::size_t row, std::size_t col) { return matrix[row * n_in + col]; };

    FockState out;
    out.photon_number = s.photon_number;
    for (const auto& [pat, amp] : s.terms) {
        // Split the pattern into the acted-on counts and the untouched rest.
        std::vector<int> counts(n_in, 0);
        std::vector<OccupationPattern::Entry> rest;
        for (const auto& [m, c] : pat.entries()) {
            bool hit = false;
            for (std::size_t k = 0; k < n_in; ++k) {
                if (in_modes[k] == m) {
                    counts[k] = c;
                    hit = true;
                    break;
                }
            }
            if (!hit) rest.push_back({m, c});
        }

        double denom = 1.0;
        for (std::size_t k = 0; k < n_in; ++k) denom *= factorial(counts[k]);

        // Expand prod_k (sum_j U_jk a†_j)^{n_k} as a polynomial in the output
        // creation operators; powers commute so a count-vector map suffices.
        std::map<std::vector<int>, complex> monomials;
        monomials[std::vector<int>(n_out, 0)] = amp / std::sqrt(denom);
        for (std::size_t k = 0; k < n_in; ++k) {
            for (int rep = 0; rep < counts[k]; ++rep) {
                std::map<std::vector<int>, complex> next;
                for (const auto& [mono, coeff] : monomials) {
                    for (std::size_t j = 0; j < n_out; ++j) {
                        complex ujk = u(j, k);
                        if (std::abs(ujk) == 0.0) continue;
                        std::vector<int> m2 = mono;
                        ++m2[j];
                        next[m2] += coeff * ujk;
                    }
                }
                monomials.swap(next);
            }
        }

        for (const auto& [mono, coeff] : monomials) {
            if (std::abs(coeff) < amplitude_epsilon) continue;
            std::vector<OccupationPattern::Entry> entries = rest;
            double boson = 1.0;
            for (std::size_t j = 0; j < n_out; ++j) {
                if (mono[j] == 0) continue;
                int already = 0;
                for (const auto& [m, c] : rest)
                    if (m == out_modes[j]) already = c;
                boson *= factorial(already + mono[j]) / factorial(already);
                entries.push_back({out_modes[j], mono[j]});
            }
            out.terms[OccupationPattern::from_counts(entries)] += coeff * std::sqrt(boson);
        }
    }
    prune(out);
    return out;
}

}  // namespace detail

/// A unitary on a small set of distinct modes; every optical element compiles
/// to one. Column k of `matrix` is the image of input mode k.
struct ModeUnitary {
    std::vector<ModeLabel> modes;
    std::vector<complex> matrix;  // k×k row-major

    ModeUnitary(std::vector<ModeLabel> mode_list, std::vector<complex> mat)
        : modes(std::move(mode_list)), matrix(std::move(mat)) {
        const std::size_t k = modes.size();
        if (matrix.size() != k * k) throw InvariantViolation("ModeUnitary: matrix is not k×k");
        std::set<ModeLabel> uniq(modes.begin(), modes.end());
        if (uniq.size() != k) throw DuplicateMode("ModeUnitary: repeated mode in mode list");
        for (const ModeLabel& m : modes)
            if (m.temporal >= max_temporal_modes)
                throw UnknownMode("ModeUnitary: temporal index out of range for " + mode_name(m));
        // U·U† = I within 1e-10, max-abs entry deviation.
        for (std::size_t r = 0; r < k; ++r) {
            for (std::size_t c = 0; c < k; ++c) {
                complex acc(0.0, 0.0);
                for (std::size_t j = 0; j < k; ++j)
                    acc += matrix[r * k + j] * std::conj(matrix[c * k + j]);
                complex want = (r == c) ? complex(1.0, 0.0) : complex(0.0, 0.0);
                if (std::abs(acc - want) > 1e-10)
                    throw InvariantViolation("ModeUnitary: matrix is not unitary");
            }
        }
    }
};

/// Elements are applied in list order (front first).
struct Circuit {
    std::vector<ModeUnitary> elements;

    Circuit& then(ModeUnitary u) {
        elements.push_back(std::move(u));
        return *this;
    }
};

inline FockState apply(const ModeUnitary& u, const FockState& s) {
    FockState out = detail::substitute(s, u.modes, u.modes, u.matrix);
    out.normalized = s.normalized;  // unitaries preserve the norm
    return out;
}

inline FockState apply(const Circuit& circuit, const FockState& s) {
    FockState cur = s;
    for (const ModeUnitary& u : circuit.elements) cur = apply(u, cur);
    return cur;
}

// --- element constructors ----------------------------------------------

/// 50:50 beam splitter, matrix (1/√2)[[1, i],[i, 1]] on the (in1, in2) pair.
/// Polarization-preserving: both modes must share polarization and temporal
/// index.
inline ModeUnitary beam_splitter(const ModeLabel& in1, const ModeLabel& in2) {
    if (in1 == in2) throw DuplicateMode("beam_splitter: identical input modes");
    if (in1.pol != in2.pol || in1.temporal != in2.temporal)
        throw InvariantViolation("beam_splitter: inputs must share polarization and temporal index");
    const double r = 1.0 / std::numbers::sqrt2;
    return ModeUnitary({in1, in2}, {complex(r, 0), complex(0, r), complex(0, r), complex(r, 0)});
}

/// HWP(θ) = [[cos2θ, sin2θ],[sin2θ, -cos2θ]] on the (site,H)/(site,V) pair.
/// Fixed convention: HWP(0) maps |V⟩ -> -|V⟩.
inline ModeUnitary half_wave_plate(Site site, double angle, std::uint8_t temporal = 0) {
    if (!std::isfinite(angle)) throw InvariantViolation("half_wave_plate: angle must be finite");
    double c = std::cos(2 * angle), s = std::sin(2 * angle);
    return ModeUnitary({mode(site, Pol::H, temporal), mode(site, Pol::V, temporal)},
                       {complex(c, 0), complex(s, 0), complex(s, 0), complex(-c, 0)});
}

/// QWP(θ) = R(θ)·diag(1, i)·R(-θ); QWP(0) = diag(1, i).
inline ModeUnitary quarter_wave_plate(Site site, double angle, std::uint8_t temporal = 0) {
    if (!std::isfinite(angle)) throw InvariantViolation("quarter_wave_plate: angle must be finite");
    double c = std::cos(angle), s = std::sin(angle);
    complex i(0, 1);
    return ModeUnitary({mode(site, Pol::H, temporal), mode(site, Pol::V, temporal)},
                       {c * c + i * s * s, c * s * (1.0 - i), c * s * (1.0 - i), s * s + i * c * c});
}

/**
 * Routes a photon at source_site to cosθ·|target_a⟩ + sinθ·|target_b⟩ with
 * the polarization preserved; one element standing in for the HWP+PBS+HWP(45°)
 * splitting group. The completion of the unitary beyond the source column is
 * arbitrary but fixed (target_a -> source, target_b -> -sinθ·a + cosθ·b) and
 * only matters if the target modes are already occupied.
 */
inline ModeUnitary mode_splitter(Site source_site, Site target_a, Site target_b, double angle,
                                 Pol pol, std::uint8_t temporal = 0) {
    if (source_site == target_a || source_site == target_b || target_a == target_b)
        throw DuplicateMode("mode_splitter: sites must be distinct");
    double c = std::cos(angle), s = std::sin(angle);
    return ModeUnitary(
        {mode(source_site, pol, temporal), mode(target_a, pol, temporal), mode(target_b, pol, temporal)},
        {complex(0, 0), complex(1, 0), complex(0, 0),
         complex(c, 0), complex(0, 0), complex(-s, 0),
         complex(s, 0), complex(0, 0), complex(c, 0)});
}

/// Polarizing beam splitter: H at site_in exits at site_tx, V at site_rx.
/// Plain mode relabeling, no extra phases.
inline ModeUnitary pbs(Site site_in, Site site_tx, Site site_rx, std::uint8_t temporal = 0) {
    if (site_in == site_tx || site_in == site_rx || site_tx == site_rx)
        throw DuplicateMode("pbs: sites must be distinct");
    std::vector<ModeLabel> modes = {mode(site_in, Pol::H, temporal), mode(site_in, Pol::V, temporal),
                                    mode(site_tx, Pol::H, temporal), mode(site_rx, Pol::V, temporal)};
    std::vector<complex> u(16, complex(0, 0));
    auto set = [&](int r, int c) { u[r * 4 + c] = complex(1, 0); };
    set(2, 0);  // in,H -> tx,H
    set(3, 1);  // in,V -> rx,V
    set(0, 2);
    set(1, 3);
    return ModeUnitary(std::move(modes), std::move(u));
}

/// Lossless relabeling m_from -> m_to (beam-displacer style rerouting).
inline ModeUnitary relabel(const ModeLabel& m_from, const ModeLabel& m_to) {
    if (m_from == m_to) throw DuplicateMode("relabel: identical modes");
    return ModeUnitary({m_from, m_to}, {complex(0, 0), complex(1, 0), complex(1, 0), complex(0, 0)});
}

}  // namespace sloccsim

#endif
