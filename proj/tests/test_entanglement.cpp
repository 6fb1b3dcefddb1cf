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
#include <catch2/catch.hpp>

#include <random>

#include "sloccsim/entanglement.hpp"
#include "sloccsim/measurement.hpp"
#include "sloccsim/optics.hpp"

using namespace sloccsim;

namespace {

TwoQubitDensity werner(double p, BellTag tag) {
    Eigen::Vector4cd v = bell_vector(tag);
    Eigen::Matrix4cd m = p * (v * v.adjoint()) + (1.0 - p) / 4.0 * Eigen::Matrix4cd::Identity();
    return TwoQubitDensity(m);
}

Eigen::Matrix2cd random_unitary2(std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    Eigen::Matrix2cd a;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) a(r, c) = complex(g(rng), g(rng));
    Eigen::HouseholderQR<Eigen::Matrix2cd> qr(a);
    return qr.householderQ();
}

TwoQubitDensity random_density(std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
    std::uniform_real_distribution<double> w(0.1, 1.0);
    for (int k = 0; k < 3; ++k) {
        Eigen::Vector4cd v;
        for (int i = 0; i < 4; ++i) v(i) = complex(g(rng), g(rng));
        v.normalize();
        m += w(rng) * (v * v.adjoint());
    }
    m /= m.trace().real();
    return TwoQubitDensity(m);
}

}  // namespace

TEST_CASE("fidelity on pure and mixed references") {
    TwoQubitDensity psi_plus = density_from_pure(bell_vector(BellTag::psi_plus));
    REQUIRE(fidelity(psi_plus, BellTag::psi_plus) == Approx(1.0).margin(1e-12));
    REQUIRE(fidelity(density_from_pure(bell_vector(BellTag::phi_plus)), BellTag::psi_plus) ==
            Approx(0.0).margin(1e-12));
    TwoQubitDensity mixed(Eigen::Matrix4cd(Eigen::Matrix4cd::Identity() / 4.0));
    for (BellTag t : {BellTag::psi_plus, BellTag::psi_minus, BellTag::phi_plus, BellTag::phi_minus})
        REQUIRE(fidelity(mixed, t) == Approx(0.25).margin(1e-12));
}

TEST_CASE("fidelities over an orthonormal Bell completion sum to one") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 10; ++trial) {
        TwoQubitDensity rho = random_density(rng);
        double total = 0.0;
        for (BellTag t :
             {BellTag::psi_plus, BellTag::psi_minus, BellTag::phi_plus, BellTag::phi_minus})
            total += fidelity(rho, t);
        REQUIRE(total == Approx(1.0).margin(1e-9));
    }
}

TEST_CASE("concurrence of Bell, product, and Werner states") {
    for (BellTag t : {BellTag::psi_plus, BellTag::psi_minus, BellTag::phi_plus, BellTag::phi_minus})
        REQUIRE(concurrence(density_from_pure(bell_vector(t))) == Approx(1.0).margin(1e-10));

    Eigen::Vector4cd hv(0, 1, 0, 0);  // |H>|V>, a pure product state
    REQUIRE(concurrence(density_from_pure(hv)) == Approx(0.0).margin(1e-10));

    REQUIRE(concurrence(werner(0.8, BellTag::psi_minus)) == Approx(0.7).margin(1e-10));
    // closed form (3p-1)/2 across the entangled range
    for (double p : {0.4, 0.5, 0.75, 0.9, 1.0})
        REQUIRE(concurrence(werner(p, BellTag::psi_minus)) ==
                Approx(std::max(0.0, (3.0 * p - 1.0) / 2.0)).margin(1e-10));
    // separable below p = 1/3
    REQUIRE(concurrence(werner(0.2, BellTag::psi_minus)) == Approx(0.0).margin(1e-10));
}

TEST_CASE("concurrence is invariant under local unitaries") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 12; ++trial) {
        TwoQubitDensity rho = random_density(rng);
        Eigen::Matrix2cd u = random_unitary2(rng), v = random_unitary2(rng);
        Eigen::Matrix4cd uv = Eigen::Matrix4cd::Zero();
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) uv.block<2, 2>(2 * i, 2 * j) = u(i, j) * v;
        TwoQubitDensity rotated(Eigen::Matrix4cd(uv * rho.matrix * uv.adjoint()));
        REQUIRE(std::abs(concurrence(rotated) - concurrence(rho)) <= 1e-8);
    }
}

TEST_CASE("classical limit check is strict at 2/3") {
    REQUIRE(classical_limit_check(0.8392));
    REQUIRE_FALSE(classical_limit_check(2.0 / 3.0));
    REQUIRE_FALSE(classical_limit_check(0.5));
}

TEST_CASE("density validation rejects broken operators") {
    Eigen::Matrix4cd not_trace_one = Eigen::Matrix4cd::Identity();
    REQUIRE_THROWS_AS(TwoQubitDensity(not_trace_one), InvariantViolation);
    Eigen::Matrix4cd not_hermitian = Eigen::Matrix4cd::Identity() / 4.0;
    not_hermitian(0, 1) = complex(0.1, 0.0);
    REQUIRE_THROWS_AS(TwoQubitDensity(not_hermitian), InvariantViolation);
}

TEST_CASE("reduce_rl on the ideal heralded pair is pure") {
    TwoQubitDensity rho = reduce_rl(bell_rl(BellTag::psi_plus));
    REQUIRE(rho.matrix.trace().real() == Approx(1.0).margin(1e-10));
    REQUIRE(fidelity(rho, BellTag::psi_plus) == Approx(1.0).margin(1e-10));
    REQUIRE(concurrence(rho) == Approx(1.0).margin(1e-9));
}

TEST_CASE("reduce_rl traces out temporal which-path information") {
    // |R_H(t0) L_V(t0)> + |R_V(t1) L_H(t1)>: the temporal tag marks the
    // branch, so the reduction is classically correlated.
    const double r = 1.0 / std::numbers::sqrt2;
    FockState a = create(create(vacuum(), mode(Site::R, Pol::H, 0)), mode(Site::L, Pol::V, 0));
    FockState b = create(create(vacuum(), mode(Site::R, Pol::V, 1)), mode(Site::L, Pol::H, 1));
    TwoQubitDensity rho = reduce_rl(superpose({{r, a}, {r, b}}));
    REQUIRE(concurrence(rho) == Approx(0.0).margin(1e-9));
    REQUIRE(rho.matrix(1, 1).real() == Approx(0.5).margin(1e-10));
    REQUIRE(rho.matrix(2, 2).real() == Approx(0.5).margin(1e-10));
    REQUIRE(std::abs(rho.matrix(1, 2)) < 1e-12);
    REQUIRE(fidelity(rho, BellTag::psi_plus) == Approx(0.5).margin(1e-10));
}

TEST_CASE("reduce_rl rejects foreign support") {
    FockState two_at_r = create(create(vacuum(), mode(Site::R, Pol::H)), mode(Site::R, Pol::V));
    REQUIRE_THROWS_AS(reduce_rl(two_at_r), UnsupportedSupport);
    FockState with_m =
        create(create(vacuum(), mode(Site::R, Pol::H)), mode(Site::M, Pol::V));
    REQUIRE_THROWS_AS(reduce_rl(with_m), UnsupportedSupport);
}

TEST_CASE("reduce_rl commutes with the sigma_z correction") {
    std::mt19937_64 rng(47);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 8; ++trial) {
        std::vector<std::pair<complex, FockState>> parts;
        for (int k = 0; k < 3; ++k) {
            Pol pr = u(rng) > 0 ? Pol::H : Pol::V;
            Pol pl = u(rng) > 0 ? Pol::H : Pol::V;
            std::uint8_t tr = u(rng) > 0 ? 0 : 1, tl = u(rng) > 0 ? 0 : 1;
            parts.push_back({complex(u(rng), u(rng)),
                             create(create(vacuum(), mode(Site::R, pr, tr)), mode(Site::L, pl, tl))});
        }
        FockState psi = normalize(superpose(parts)).first;

        Circuit zr;
        for (std::uint8_t t = 0; t < max_temporal_modes; ++t)
            zr.then(ModeUnitary({mode(Site::R, Pol::H, t), mode(Site::R, Pol::V, t)},
                                {complex(1, 0), complex(0, 0), complex(0, 0), complex(-1, 0)}));
        TwoQubitDensity via_fock = reduce_rl(apply(zr, psi));
        TwoQubitDensity via_matrix = pauli_z(reduce_rl(psi), Node::R);
        REQUIRE((via_fock.matrix - via_matrix.matrix).cwiseAbs().maxCoeff() < 1e-10);
    }
}
