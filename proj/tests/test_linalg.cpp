// Copyright 2026 The qid authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <catch2/catch.hpp>

#include "qid/haar.hpp"
#include "qid/linalg.hpp"

using namespace qid;

namespace {

DensityOperator random_mixed_state(Index dim, Index rank, Rng &rng) {
    ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
    std::uniform_real_distribution<double> unif(0.1, 1.0);
    std::vector<double> w(rank);
    double z = 0.0;
    for (auto &x : w) {
        x = unif(rng);
        z += x;
    }
    for (Index k = 0; k < rank; ++k) {
        const ComplexVector v = haar_pure_state(dim, rng).amplitudes();
        m += (w[k] / z) * (v * v.adjoint());
    }
    return DensityOperator(m);
}

} // namespace

TEST_CASE("partial trace", "[linalg]") {
    Rng rng = make_rng(11);

    SECTION("product state reduces to first factor") {
        const DensityOperator rho = random_mixed_state(3, 2, rng);
        const DensityOperator sigma = random_mixed_state(2, 2, rng);
        const ComplexMatrix prod = kron(rho.matrix(), sigma.matrix());
        const DensityOperator out = partial_trace(DensityOperator(prod), 3, 2);
        REQUIRE((out.matrix() - rho.matrix()).cwiseAbs().maxCoeff() < 1e-12);
    }

    SECTION("maximally entangled state reduces to maximally mixed") {
        ComplexVector bell = ComplexVector::Zero(4);
        bell(0) = 1.0 / std::sqrt(2.0);
        bell(3) = 1.0 / std::sqrt(2.0);
        const DensityOperator out =
            partial_trace(DensityOperator::pure(PureState(bell)), 2, 2);
        REQUIRE((out.matrix() - 0.5 * ComplexMatrix::Identity(2, 2))
                    .cwiseAbs()
                    .maxCoeff() < 1e-14);
    }

    SECTION("output is a valid state for arbitrary 4x4 input") {
        for (int t = 0; t < 20; ++t) {
            const DensityOperator rho = random_mixed_state(4, 4, rng);
            const DensityOperator out = partial_trace(rho, 2, 2);
            REQUIRE(std::abs(out.matrix().trace().real() - 1.0) < 1e-12);
            REQUIRE(hermitian_eigenvalues(out.matrix()).minCoeff() >= -1e-12);
        }
    }

    SECTION("dimension mismatch throws") {
        const DensityOperator rho = random_mixed_state(6, 3, rng);
        REQUIRE_THROWS_AS(partial_trace(rho, 4, 2), invalid_dimension);
    }

    SECTION("linear in the input") {
        const DensityOperator a = random_mixed_state(4, 2, rng);
        const DensityOperator b = random_mixed_state(4, 3, rng);
        const ComplexMatrix mix = 0.3 * a.matrix() + 0.7 * b.matrix();
        const ComplexMatrix lhs =
            partial_trace_second(mix, 2, 2);
        const ComplexMatrix rhs =
            0.3 * partial_trace_second(a.matrix(), 2, 2) +
            0.7 * partial_trace_second(b.matrix(), 2, 2);
        REQUIRE((lhs - rhs).cwiseAbs().maxCoeff() < 1e-14);
    }
}

TEST_CASE("trace distance", "[linalg]") {
    Rng rng = make_rng(12);

    SECTION("identical states give zero") {
        const DensityOperator rho = random_mixed_state(3, 3, rng);
        REQUIRE(trace_distance(rho, rho) == Approx(0.0).margin(1e-14));
    }

    SECTION("orthogonal pure states give one") {
        const DensityOperator a = DensityOperator::pure(PureState::basis(2, 0));
        const DensityOperator b = DensityOperator::pure(PureState::basis(2, 1));
        REQUIRE(trace_distance(a, b) == Approx(1.0));
    }

    SECTION("pure vs maximally mixed qubit is 1/2") {
        // eigenvalues of the difference are +-1/2
        const DensityOperator a = DensityOperator::pure(PureState::basis(2, 0));
        const DensityOperator b = DensityOperator::maximally_mixed(2);
        REQUIRE(trace_distance(a, b) == Approx(0.5));
    }

    SECTION("symmetry and triangle inequality") {
        const DensityOperator a = random_mixed_state(3, 2, rng);
        const DensityOperator b = random_mixed_state(3, 3, rng);
        const DensityOperator c = random_mixed_state(3, 1, rng);
        REQUIRE(trace_distance(a, b) == Approx(trace_distance(b, a)));
        REQUIRE(trace_distance(a, c) <=
                trace_distance(a, b) + trace_distance(b, c) + 1e-12);
    }

    SECTION("mismatched dimensions throw") {
        const DensityOperator a = random_mixed_state(2, 1, rng);
        const DensityOperator b = random_mixed_state(3, 1, rng);
        REQUIRE_THROWS_AS(trace_distance(a, b), invalid_dimension);
    }

    SECTION("pure-state analytic formula agrees with eigenvalue route") {
        for (int t = 0; t < 20; ++t) {
            const PureState a = haar_pure_state(4, rng);
            const PureState b = haar_pure_state(4, rng);
            REQUIRE(pure_trace_distance(a, b) ==
                    Approx(trace_distance(DensityOperator::pure(a),
                                          DensityOperator::pure(b)))
                        .margin(1e-10));
        }
    }
}

TEST_CASE("support projector", "[linalg]") {
    Rng rng = make_rng(13);

    SECTION("pure state projects onto itself") {
        const PureState psi = haar_pure_state(4, rng);
        const PovmEffect p = support_projector(DensityOperator::pure(psi));
        REQUIRE((p.matrix() -
                 psi.amplitudes() * psi.amplitudes().adjoint())
                    .cwiseAbs()
                    .maxCoeff() < 1e-10);
    }

    SECTION("maximally mixed supports everything") {
        const PovmEffect p =
            support_projector(DensityOperator::maximally_mixed(5));
        REQUIRE((p.matrix() - ComplexMatrix::Identity(5, 5))
                    .cwiseAbs()
                    .maxCoeff() < 1e-12);
    }

    SECTION("rank-2 mixture on C^4 gives a rank-2 projector") {
        const ComplexMatrix u = haar_unitary(4, rng);
        ComplexMatrix m = ComplexMatrix::Zero(4, 4);
        m += 0.9 * u.col(0) * u.col(0).adjoint();
        m += 0.1 * u.col(1) * u.col(1).adjoint();
        const PovmEffect p = support_projector(DensityOperator(m));
        REQUIRE(p.matrix().trace().real() == Approx(2.0).margin(1e-10));
        // idempotent
        REQUIRE((p.matrix() * p.matrix() - p.matrix()).cwiseAbs().maxCoeff() <
                1e-10);
    }

    SECTION("captures nearly all probability mass") {
        const DensityOperator rho = random_mixed_state(6, 3, rng);
        const PovmEffect p = support_projector(rho);
        REQUIRE(outcome_probability(rho, p) >= 1.0 - 6 * 1e-10);
    }

    SECTION("commutes with unitary relabeling of the kept factor") {
        // Low-rank state on C^3 (x) C^2 so the reduced support is nontrivial.
        ComplexMatrix m = ComplexMatrix::Zero(6, 6);
        const ComplexVector v0 = haar_pure_state(6, rng).amplitudes();
        const ComplexVector v1 = haar_pure_state(6, rng).amplitudes();
        m = 0.6 * v0 * v0.adjoint() + 0.4 * v1 * v1.adjoint();
        const DensityOperator rho(m);

        const ComplexMatrix u = haar_unitary(3, rng);
        const ComplexMatrix lift = kron(u, ComplexMatrix::Identity(2, 2));
        const DensityOperator rotated(lift * rho.matrix() * lift.adjoint());

        const ComplexMatrix p_rot =
            support_projector(partial_trace(rotated, 3, 2)).matrix();
        const ComplexMatrix p_ref =
            support_projector(partial_trace(rho, 3, 2)).matrix();
        REQUIRE((p_rot - u * p_ref * u.adjoint()).cwiseAbs().maxCoeff() <
                1e-8);
    }
}

TEST_CASE("pure overlap", "[linalg]") {
    SECTION("self overlap is one") {
        const PureState a = PureState::basis(3, 1);
        REQUIRE(pure_overlap(a, a) == Approx(1.0));
    }
    SECTION("orthogonal basis vectors give zero") {
        REQUIRE(pure_overlap(PureState::basis(3, 0), PureState::basis(3, 2)) ==
                Approx(0.0).margin(1e-15));
    }
    SECTION("plus state against |0> gives one half") {
        ComplexVector plus(2);
        plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
        REQUIRE(pure_overlap(PureState(plus), PureState::basis(2, 0)) ==
                Approx(0.5));
    }
    SECTION("dimension mismatch throws") {
        REQUIRE_THROWS_AS(
            pure_overlap(PureState::basis(2, 0), PureState::basis(3, 0)),
            invalid_dimension);
    }
}

TEST_CASE("fidelity and entropy", "[linalg]") {
    Rng rng = make_rng(14);

    SECTION("fidelity of identical states is one") {
        const DensityOperator rho = random_mixed_state(3, 2, rng);
        REQUIRE(fidelity(rho, rho) == Approx(1.0).margin(1e-9));
    }

    SECTION("fidelity of pure states equals overlap") {
        const PureState a = haar_pure_state(3, rng);
        const PureState b = haar_pure_state(3, rng);
        REQUIRE(fidelity(DensityOperator::pure(a), DensityOperator::pure(b)) ==
                Approx(pure_overlap(a, b)).margin(1e-9));
    }

    SECTION("entropy of maximally mixed is log2 d") {
        REQUIRE(von_neumann_entropy_bits(DensityOperator::maximally_mixed(8)) ==
                Approx(3.0).margin(1e-12));
    }

    SECTION("entropy of a pure state is zero") {
        const PureState psi = haar_pure_state(5, rng);
        REQUIRE(von_neumann_entropy_bits(DensityOperator::pure(psi)) ==
                Approx(0.0).margin(1e-9));
    }

    SECTION("binary relative entropy basics") {
        REQUIRE(binary_relative_entropy_bits(0.25, 0.25) ==
                Approx(0.0).margin(1e-15));
        REQUIRE(binary_relative_entropy_bits(0.25, 0.0625) ==
                Approx(0.25 * 2.0 + 0.75 * std::log2(0.75 / 0.9375)));
        REQUIRE_THROWS_AS(binary_relative_entropy_bits(0.5, 0.0),
                          std::invalid_argument);
    }
}

TEST_CASE("state type invariants", "[states]") {
    SECTION("density operator rejects bad inputs") {
        ComplexMatrix not_herm(2, 2);
        not_herm << 0.5, 0.5, -0.5, 0.5;
        REQUIRE_THROWS(DensityOperator(not_herm));

        ComplexMatrix wrong_trace = ComplexMatrix::Identity(2, 2);
        REQUIRE_THROWS(DensityOperator(wrong_trace));
    }

    SECTION("povm effect rejects eigenvalues above one") {
        REQUIRE_THROWS(PovmEffect(2.0 * ComplexMatrix::Identity(2, 2)));
    }

    SECTION("pure state rejects unnormalized vectors") {
        ComplexVector v(2);
        v << 1.0, 1.0;
        REQUIRE_THROWS(PureState(v));
    }

    SECTION("isometry rejects non-isometric matrices") {
        ComplexMatrix m(3, 2);
        m.setOnes();
        REQUIRE_THROWS(Isometry(m));
    }
}
