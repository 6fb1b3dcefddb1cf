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
#ifndef SLOCCSIM_FOCK_HPP
#define SLOCCSIM_FOCK_HPP

/**
 * Sparse second-quantized representation of few-photon states over typed
 * optical modes. A mode is (site, polarization, temporal index); a state is a
 * complex superposition of photon-number occupation patterns. Everything here
 * is a pure function over immutable values.
 */

#include <algorithm>
#include <cmath>
#include <compare>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "sloccsim/errors.hpp"

namespace sloccsim {

using complex = std::complex<double>;

// Amplitudes below this are pruned after every operation.
inline constexpr double amplitude_epsilon = 1e-12;

enum class Site : std::uint8_t { R = 0, M = 1, L = 2, M1 = 3, M2 = 4, Blocked = 5 };
enum class Pol : std::uint8_t { H = 0, V = 1 };

inline const char* site_name(Site s) {
    switch (s) {
        case Site::R: return "R";
        case Site::M: return "M";
        case Site::L: return "L";
        case Site::M1: return "M1";
        case Site::M2: return "M2";
        case Site::Blocked: return "BLOCKED";
    }
    return "?";
}

inline Site parse_site(const std::string& s) {
    if (s == "R") return Site::R;
    if (s == "M") return Site::M;
    if (s == "L") return Site::L;
    if (s == "M1") return Site::M1;
    if (s == "M2") return Site::M2;
    if (s == "BLOCKED") return Site::Blocked;
    throw ConfigError("unknown site name: " + s);
}

inline const char* pol_name(Pol p) { return p == Pol::H ? "H" : "V"; }

inline Pol parse_pol(const std::string& s) {
    if (s == "H") return Pol::H;
    if (s == "V") return Pol::V;
    throw ConfigError("unknown polarization name: " + s);
}

/// One optical mode. Ordered by (site, polarization, temporal), stable.
struct ModeLabel {
    Site site;
    Pol pol;
    std::uint8_t temporal = 0;

    auto operator<=>(const ModeLabel&) const = default;
};

inline ModeLabel mode(Site s, Pol p, std::uint8_t t = 0) { return ModeLabel{s, p, t}; }

inline std::string mode_name(const ModeLabel& m) {
    return std::string(site_name(m.site)) + ":" + pol_name(m.pol) + ":" + std::to_string(int(m.temporal));
}

/**
 * Photon counts per mode, sparse: only entries with count >= 1 are stored,
 * kept sorted by mode so patterns are canonical map keys.
 */
class OccupationPattern {
public:
    using Entry = std::pair<ModeLabel, int>;

    OccupationPattern() = default;

    static OccupationPattern from_counts(std::vector<Entry> entries) {
        OccupationPattern p;
        std::sort(entries.begin(), entries.end(),
                  [](const Entry& a, const Entry& b) { return a.first < b.first; });
        for (const auto& [m, c] : entries) {
            if (c < 0) throw InvariantViolation("negative occupation for mode " + mode_name(m));
            if (c == 0) continue;
            if (!p.m_entries.empty() && p.m_entries.back().first == m)
                p.m_entries.back().second += c;
            else
                p.m_entries.push_back({m, c});
        }
        return p;
    }

    int count(const ModeLabel& m) const {
        auto it = std::lower_bound(m_entries.begin(), m_entries.end(), m,
                                   [](const Entry& e, const ModeLabel& k) { return e.first < k; });
        return (it != m_entries.end() && it->first == m) ? it->second : 0;
    }

    int total_photons() const {
        int n = 0;
        for (const auto& e : m_entries) n += e.second;
        return n;
    }

    OccupationPattern with_increment(const ModeLabel& m, int delta = 1) const {
        std::vector<Entry> e = m_entries;
        e.push_back({m, delta});
        return from_counts(std::move(e));
    }

    const std::vector<Entry>& entries() const { return m_entries; }
    bool empty() const { return m_entries.empty(); }

    auto operator<=>(const OccupationPattern&) const = default;

private:
    std::vector<Entry> m_entries;
};

/**
 * Sparse complex superposition over occupation patterns with a fixed total
 * photon number. `normalized` is set by normalize() and cleared by any
 * operation that can change the norm.
 */
struct FockState {
    std::map<OccupationPattern, complex> terms;
    int photon_number = 0;
    bool normalized = false;
};

inline FockState vacuum() {
    FockState s;
    s.terms[OccupationPattern{}] = complex(1.0, 0.0);
    s.photon_number = 0;
    s.normalized = true;
    return s;
}

inline void prune(FockState& s) {
    for (auto it = s.terms.begin(); it != s.terms.end();)
        it = (std::abs(it->second) < amplitude_epsilon) ? s.terms.erase(it) : std::next(it);
}

/// a†_mode acting on the state; amplitudes pick up the bosonic sqrt(n+1).
inline FockState create(const FockState& s, const ModeLabel& m) {
    FockState out;
    out.photon_number = s.photon_number + 1;
    for (const auto& [pat, amp] : s.terms) {
        int n = pat.count(m);
        out.terms[pat.with_increment(m)] += amp * std::sqrt(double(n + 1));
    }
    prune(out);
    return out;
}

/// (sum_k c_k a†_{m_k}) acting once; the wavepacket creation operator.
inline FockState create_superposition(const FockState& s,
                                      const std::vector<std::pair<ModeLabel, complex>>& wavepacket) {
    FockState out;
    out.photon_number = s.photon_number + 1;
    for (const auto& [pat, amp] : s.terms) {
        for (const auto& [m, c] : wavepacket) {
            if (std::abs(c) == 0.0) continue;
            int n = pat.count(m);
            out.terms[pat.with_increment(m)] += amp * c * std::sqrt(double(n + 1));
        }
    }
    prune(out);
    return out;
}

/// Conjugate-linear in the first argument. States with different photon
/// numbers are orthogonal by contract.
inline complex inner_product(const FockState& a, const FockState& b) {
    if (a.photon_number != b.photon_number) return complex(0.0, 0.0);
    const auto& small = a.terms.size() <= b.terms.size() ? a.terms : b.terms;
    complex acc(0.0, 0.0);
    for (const auto& [pat, amp] : small) {
        auto ita = a.terms.find(pat);
        auto itb = b.terms.find(pat);
        if (ita == a.terms.end() || itb == b.terms.end()) continue;
        acc += std::conj(ita->second) * itb->second;
    }
    return acc;
}

inline double norm_squared(const FockState& s) {
    double acc = 0.0;
    for (const auto& [pat, amp] : s.terms) acc += std::norm(amp);
    return acc;
}

inline double norm(const FockState& s) { return std::sqrt(norm_squared(s)); }

/// Returns the unit-norm state and the pre-normalization norm.
inline std::pair<FockState, double> normalize(const FockState& s) {
    double n = norm(s);
    if (n <= amplitude_epsilon) throw ZeroNorm("cannot normalize a state with norm " + std::to_string(n));
    FockState out = s;
    for (auto& [pat, amp] : out.terms) amp /= n;
    out.normalized = true;
    return {out, n};
}

inline FockState scaled(const FockState& s, complex factor) {
    FockState out = s;
    for (auto& [pat, amp] : out.terms) amp *= factor;
    out.normalized = false;
    prune(out);
    return out;
}

/// sum_k c_k |s_k> ; all inputs must share one photon number.
inline FockState superpose(const std::vector<std::pair<complex, FockState>>& parts) {
    if (parts.empty()) throw InvariantViolation("superpose needs at least one component");
    FockState out;
    out.photon_number = parts.front().second.photon_number;
    for (const auto& [c, st] : parts) {
        if (st.photon_number != out.photon_number)
            throw InvariantViolation("superpose: mixed photon numbers");
        for (const auto& [pat, amp] : st.terms) out.terms[pat] += c * amp;
    }
    prune(out);
    return out;
}

/// Photons per site, summed over polarization and temporal index. BLOCKED is
/// an ordinary site and appears under its own key.
inline std::map<Site, int> node_counts(const OccupationPattern& pattern) {
    std::map<Site, int> counts;
    for (const auto& [m, c] : pattern.entries()) counts[m.site] += c;
    return counts;
}

/// Consistency check used by tests: pattern photon totals, pruning, and the
/// `normalized` flag.
inline void validate(const FockState& s) {
    for (const auto& [pat, amp] : s.terms) {
        if (pat.total_photons() != s.photon_number)
            throw InvariantViolation("pattern photon total does not match state photon_number");
        if (std::abs(amp) < amplitude_epsilon)
            throw InvariantViolation("stored amplitude below amplitude_epsilon");
        for (const auto& [m, c] : pat.entries())
            if (c < 1) throw InvariantViolation("stored occupation below 1");
    }
    if (s.normalized && std::abs(norm(s) - 1.0) > 1e-10)
        throw InvariantViolation("state flagged normalized but norm deviates: " + std::to_string(norm(s)));
}

// --- text dump format -------------------------------------------------------
//
// One line per term: "<re> <im> <pattern>" where the pattern is
// "site:pol:temporal=count" tokens joined by "," in mode order, or "-" for
// the vacuum pattern. Lines are sorted by pattern. Round-trips to 1e-12.

inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline std::string pattern_to_string(const OccupationPattern& pat) {
    if (pat.empty()) return "-";
    std::string out;
    for (const auto& [m, c] : pat.entries()) {
        if (!out.empty()) out += ",";
        out += mode_name(m) + "=" + std::to_string(c);
    }
    return out;
}

inline std::string dump_state(const FockState& s) {
    std::string out;
    for (const auto& [pat, amp] : s.terms) {
        out += format_double(amp.real());
        out += " ";
        out += format_double(amp.imag());
        out += " ";
        out += pattern_to_string(pat);
        out += "\n";
    }
    return out;
}

inline OccupationPattern parse_pattern(const std::string& text) {
    if (text == "-") return OccupationPattern{};
    std::vector<OccupationPattern::Entry> entries;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        auto eq = token.find('=');
        auto c1 = token.find(':');
        auto c2 = token.find(':', c1 + 1);
        if (eq == std::string::npos || c1 == std::string::npos || c2 == std::string::npos || c2 > eq)
            throw ConfigError("malformed pattern token: " + token);
        Site site = parse_site(token.substr(0, c1));
        Pol pol = parse_pol(token.substr(c1 + 1, c2 - c1 - 1));
        int temporal = std::stoi(token.substr(c2 + 1, eq - c2 - 1));
        int count = std::stoi(token.substr(eq + 1));
        entries.push_back({mode(site, pol, std::uint8_t(temporal)), count});
    }
    return OccupationPattern::from_counts(std::move(entries));
}

inline FockState parse_state(const std::string& text) {
    FockState s;
    std::stringstream ss(text);
    std::string line;
    bool first = true;
    while (std::getline(ss, line)) {
        if (line.empty()) continue;
        std::stringstream ls(line);
        double re = 0.0, im = 0.0;
        std::string patext;
        if (!(ls >> re >> im >> patext)) throw ConfigError("malformed state line: " + line);
        OccupationPattern pat = parse_pattern(patext);
        if (first) {
            s.photon_number = pat.total_photons();
            first = false;
        } else if (pat.total_photons() != s.photon_number) {
            throw ConfigError("state dump mixes photon numbers");
        }
        s.terms[pat] += complex(re, im);
    }
    if (first) throw ConfigError("empty state dump");
    prune(s);
    return s;
}

}  // namespace sloccsim

#endif
