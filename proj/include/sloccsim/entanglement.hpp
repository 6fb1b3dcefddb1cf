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
#ifndef SLOCCSIM_ENTANGLEMENT_HPP
#define SLOCCSIM_ENTANGLEMENT_HPP

/**
 * Two-qubit density operators for the heralded R-L polarization state, with
 * fidelity and Wootters concurrence. Basis order |HH⟩,|HV⟩,|VH⟩,|VV⟩, first
 * factor = node R, everywhere (serialized matrices carry this tag).
 */

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "sloccsim/bell.hpp"
#include "sloccsim/errors.hpp"
#include "sloccsim/fock.hpp"

namespace sloccsim {

inline constexpr const char* density_basis_order = "HH,HV,VH,VV;R-first";

struct TwoQubitDensity {
    Eigen::Matrix4cd matrix;

    explicit TwoQubitDensity(const Eigen::Matrix4cd& m) : matrix(m) {
        if ((matrix - matrix.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
            throw InvariantViolation("TwoQubitDensity: matrix is not Hermitian");
        if (std::abs(matrix.trace().real() - 1.0) > 1e-10 || std::abs(matrix.trace().imag()) > 1e-10)
            throw InvariantViolation("TwoQubitDensity: trace is not 1");
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(matrix, Eigen::EigenvaluesOnly);
        if (es.eigenvalues().minCoeff() < -1e-9)
            throw InvariantViolation("TwoQubitDensity: negative eigenvalue beyond tolerance");
    }
};

inline Eigen::Vector4cd bell_vector(BellTag tag) {
    const double r = 1.0 / std::numbers::sqrt2;
    switch (tag) {
        case BellTag::psi_plus: return Eigen::Vector4cd(0, r, r, 0);
        case BellTag::psi_minus: return Eigen::Vector4cd(0, r, -r, 0);
        case BellTag::phi_plus: return Eigen::Vector4cd(r, 0, 0, r);
        case BellTag::phi_minus: return Eigen::Vector4cd(r, 0, 0, -r);
    }
    throw InvariantViolation("bell_vector: bad tag");
}

inline TwoQubitDensity density_from_pure(const Eigen::Vector4cd& v) {
    if (std::abs(v.norm() - 1.0) > 1e-10)
        throw InvariantViolation("density_from_pure: state vector is not unit norm");
    return TwoQubitDensity(v * v.adjoint());
}

/// F = ⟨target|ρ|target⟩ for a unit-norm pure target.
inline double fidelity(const TwoQubitDensity& rho, const Eigen::Vector4cd& target) {
    if (std::abs(target.norm() - 1.0) > 1e-9)
        throw InvariantViolation("fidelity: target is not unit norm");
    return (target.adjoint() * rho.matrix * target)(0, 0).real();
}

inline double fidelity(const TwoQubitDensity& rho, BellTag target) {
    return fidelity(rho, bell_vector(target));
}

/**
 * Wootters concurrence. The eigenvalues of ρρ̃ are taken from the equivalent
 * Hermitian form √ρ ρ̃ √ρ; round-off negatives are clamped before the square
 * roots.
 */
inline double concurrence(const TwoQubitDensity& rho) {
    Eigen::Matrix4cd yy = Eigen::Matrix4cd::Zero();
    // σ_y ⊗ σ_y in the HH,HV,VH,VV basis.
    yy(0, 3) = complex(-1, 0);
    yy(1, 2) = complex(1, 0);
    yy(2, 1) = complex(1, 0);
    yy(3, 0) = complex(-1, 0);

    Eigen::Matrix4cd rho_tilde = yy * rho.matrix.conjugate() * yy;

    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(rho.matrix);
    Eigen::Vector4d ev = es.eigenvalues().cwiseMax(0.0);
    Eigen::Matrix4cd sqrt_rho =
        es.eigenvectors() * ev.cwiseSqrt().asDiagonal() * es.eigenvectors().adjoint();

    Eigen::Matrix4cd herm = sqrt_rho * rho_tilde * sqrt_rho;
    herm = (herm + herm.adjoint()) / 2.0;  // clean round-off asymmetry
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es2(herm, Eigen::EigenvaluesOnly);
    // Eigenvalues at rounding level would inject sqrt(eps)-sized noise; clamp
    // them before the square roots. rho has unit trace, so absolute 1e-14 is
    // still far above the arithmetic error of the two matrix products.
    double lmax = es2.eigenvalues().maxCoeff();
    double floor = 1e-14 + std::max(0.0, lmax) * 1e-12;
    std::array<double, 4> lams;
    for (int i = 0; i < 4; ++i) {
        double lam = es2.eigenvalues()(i);
        lams[std::size_t(i)] = lam > floor ? std::sqrt(lam) : 0.0;
    }
    std::sort(lams.begin(), lams.end(), std::greater<double>());
    return std::max(0.0, lams[0] - lams[1] - lams[2] - lams[3]);
}

/// True iff F exceeds the classical fidelity ceiling 2/3 (strict at the
/// boundary).
inline bool classical_limit_check(double fidelity_value) { return fidelity_value > 2.0 / 3.0; }

/**
 * R-L polarization density operator of a two-photon state with exactly one
 * photon at R and one at L, tracing out the temporal indices. Pure iff no
 * temporal-mode entanglement leaks into the polarization pair.
 */
inline TwoQubitDensity reduce_rl(const FockState& state) {
    // key: (tR, tL) temporal sector; value: amplitudes over (σR, σL).
    std::map<std::pair<int, int>, Eigen::Vector4cd> sectors;
    for (const auto& [pat, amp] : state.terms) {
        int r_idx = -1, l_idx = -1, tr = 0, tl = 0;
        int total = 0;
        for (const auto& [m, c] : pat.entries()) {
            total += c;
            if (m.site == Site::R && c == 1 && r_idx < 0) {
                r_idx = (m.pol == Pol::V) ? 1 : 0;
                tr = m.temporal;
            } else if (m.site == Site::L && c == 1 && l_idx < 0) {
                l_idx = (m.pol == Pol::V) ? 1 : 0;
                tl = m.temporal;
            } else {
                throw UnsupportedSupport("reduce_rl: support is not one photon at R and one at L");
            }
        }
        if (total != 2 || r_idx < 0 || l_idx < 0)
            throw UnsupportedSupport("reduce_rl: support is not one photon at R and one at L");
        auto [it, inserted] = sectors.try_emplace({tr, tl}, Eigen::Vector4cd::Zero());
        it->second(2 * r_idx + l_idx) += amp;
    }
    if (sectors.empty()) throw UnsupportedSupport("reduce_rl: empty state");
    Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
    for (const auto& [key, v] : sectors) rho += v * v.adjoint();
    double tr = rho.trace().real();
    if (tr <= amplitude_epsilon) throw ZeroNorm("reduce_rl: zero-trace reduction");
    rho /= tr;
    return TwoQubitDensity(rho);
}

}  // namespace sloccsim

#endif
