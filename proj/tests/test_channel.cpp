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

#include "qid/channel.hpp"
#include "qid/haar.hpp"

using namespace qid;

namespace {
PureState plus_state() {
    ComplexVector v(2);
    v << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
    return PureState(v);
}
} // namespace

TEST_CASE("channel application", "[channel]") {
    Rng rng = make_rng(21);

    SECTION("identity channel returns its input") {
        const Channel id = identity_channel(2);
        const DensityOperator rho = DensityOperator::pure(haar_pure_state(2, rng));
        REQUIRE((id.apply(rho).matrix() - rho.matrix()).cwiseAbs().maxCoeff() <
                1e-14);
    }

    SECTION("dephasing kills off-diagonals of the plus state") {
        const Channel deph = dephasing_channel(2);
        const DensityOperator out =
            deph.apply(DensityOperator::pure(plus_state()));
        REQUIRE((out.matrix() - 0.5 * ComplexMatrix::Identity(2, 2))
                    .cwiseAbs()
                    .maxCoeff() < 1e-14);
    }

    SECTION("fully depolarizing sends everything to I/d") {
        const Channel dep = depolarizing_channel(3, 1.0);
        const DensityOperator rho = DensityOperator::pure(haar_pure_state(3, rng));
        REQUIRE((dep.apply(rho).matrix() -
                 ComplexMatrix::Identity(3, 3) / 3.0)
                    .cwiseAbs()
                    .maxCoeff() < 1e-12);
    }

    SECTION("dimension mismatch throws") {
        const Channel id = identity_channel(2);
        REQUIRE_THROWS_AS(id.apply(DensityOperator::maximally_mixed(3)),
                          invalid_dimension);
    }

    SECTION("apply preserves trace and positivity on random inputs") {
        const std::vector<Channel> standard = {
            identity_channel(2), dephasing_channel(2),
            depolarizing_channel(2, 0.3)};
        for (const auto &ch : standard) {
            for (int t = 0; t < 100; ++t) {
                const DensityOperator rho =
                    DensityOperator::pure(haar_pure_state(2, rng));
                const DensityOperator out = ch.apply(rho);
                REQUIRE(std::abs(out.matrix().trace().real() - 1.0) < 1e-9);
                REQUIRE(hermitian_eigenvalues(out.matrix()).minCoeff() >=
                        -1e-9);
            }
        }
    }
}

TEST_CASE("tensor power", "[channel]") {
    SECTION("n = 1 is the same channel") {
        const Channel deph = dephasing_channel(2);
        const Channel t1 = tensor_power(deph, 1);
        REQUIRE(t1.in_dim() == 2);
        REQUIRE(t1.kraus_ops().size() == deph.kraus_ops().size());
    }

    SECTION("identity qubit to the third power is identity on C^8") {
        const Channel t3 = tensor_power(identity_channel(2), 3);
        REQUIRE(t3.in_dim() == 8);
        REQUIRE(t3.kraus_ops().size() == 1);
        REQUIRE((t3.kraus_ops()[0] - ComplexMatrix::Identity(8, 8))
                    .cwiseAbs()
                    .maxCoeff() < 1e-15);
    }

    SECTION("dephasing squared on a Bell state gives diag(1/2,0,0,1/2)") {
        const Channel t2 = tensor_power(dephasing_channel(2), 2);
        ComplexVector bell = ComplexVector::Zero(4);
        bell(0) = 1.0 / std::sqrt(2.0);
        bell(3) = 1.0 / std::sqrt(2.0);
        const DensityOperator out =
            t2.apply(DensityOperator::pure(PureState(bell)));
        ComplexMatrix expect = ComplexMatrix::Zero(4, 4);
        expect(0, 0) = 0.5;
        expect(3, 3) = 0.5;
        REQUIRE((out.matrix() - expect).cwiseAbs().maxCoeff() < 1e-14);
    }

    SECTION("tensor power factorizes on product states") {
        Rng rng = make_rng(22);
        const Channel dep = depolarizing_channel(2, 0.25);
        const Channel t2 = tensor_power(dep, 2);
        const DensityOperator a = DensityOperator::pure(haar_pure_state(2, rng));
        const DensityOperator b = DensityOperator::pure(haar_pure_state(2, rng));
        const DensityOperator joint =
            t2.apply(DensityOperator(kron(a.matrix(), b.matrix())));
        const ComplexMatrix expect =
            kron(dep.apply(a).matrix(), dep.apply(b).matrix());
        REQUIRE((joint.matrix() - expect).cwiseAbs().maxCoeff() < 1e-9);
    }

    SECTION("budget exceeded throws resource_limit") {
        const Channel dep = depolarizing_channel(2, 0.5);
        REQUIRE_THROWS_AS(tensor_power(dep, 12, 1u << 16), resource_limit);
    }
}

TEST_CASE("cq channels", "[channel]") {
    SECTION("orthogonal pure rows embed a noiseless classical bit") {
        const std::vector<DensityOperator> rows = {
            DensityOperator::pure(PureState::basis(2, 0)),
            DensityOperator::pure(PureState::basis(2, 1))};
        const Channel cq = cq_channel(rows);
        const DensityOperator out =
            cq.apply(DensityOperator::pure(PureState::basis(2, 0)));
        REQUIRE((out.matrix() - rows[0].matrix()).cwiseAbs().maxCoeff() <
                1e-12);
        // coherences between input symbols are destroyed
        const DensityOperator mixed = cq.apply(DensityOperator::pure(plus_state()));
        REQUIRE((mixed.matrix() - 0.5 * ComplexMatrix::Identity(2, 2))
                    .cwiseAbs()
                    .maxCoeff() < 1e-12);
    }

    SECTION("equal rows give a constant channel") {
        Rng rng = make_rng(23);
        const DensityOperator w = DensityOperator::pure(haar_pure_state(2, rng));
        const Channel cq = cq_channel({w, w});
        const DensityOperator out = cq.apply(DensityOperator::pure(plus_state()));
        REQUIRE((out.matrix() - w.matrix()).cwiseAbs().maxCoeff() < 1e-12);
    }

    SECTION("row states are reproduced exactly on basis inputs") {
        Rng rng = make_rng(24);
        ComplexMatrix m = ComplexMatrix::Zero(2, 2);
        m(0, 0) = 0.75;
        m(1, 1) = 0.25;
        m(0, 1) = 0.2;
        m(1, 0) = 0.2;
        const DensityOperator w0(m);
        const DensityOperator w1 = DensityOperator::pure(haar_pure_state(2, rng));
        const Channel cq = cq_channel({w0, w1});
        const DensityOperator out =
            cq.apply(DensityOperator::pure(PureState::basis(2, 0)));
        REQUIRE((out.matrix() - w0.matrix()).cwiseAbs().maxCoeff() < 1e-12);
    }

    SECTION("linear in the input distribution") {
        Rng rng = make_rng(25);
        const DensityOperator w0 = DensityOperator::pure(haar_pure_state(3, rng));
        const DensityOperator w1 = DensityOperator::maximally_mixed(3);
        const Channel cq = cq_channel({w0, w1});
        ComplexMatrix in = ComplexMatrix::Zero(2, 2);
        in(0, 0) = 0.3;
        in(1, 1) = 0.7;
        const DensityOperator out = cq.apply(DensityOperator(in));
        const ComplexMatrix expect =
            0.3 * w0.matrix() + 0.7 * w1.matrix();
        REQUIRE((out.matrix() - expect).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("hybrid algebra and ensemble validation", "[channel]") {
    REQUIRE_NOTHROW(HybridAlgebra({2, 3}));
    REQUIRE_THROWS_AS(HybridAlgebra({}), invalid_dimension);
    REQUIRE_THROWS_AS(HybridAlgebra({2, 0}), invalid_dimension);

    const DensityOperator q0 = DensityOperator::pure(PureState::basis(2, 0));
    REQUIRE_NOTHROW(Ensemble({0.5, 0.5}, {q0, q0}));
    REQUIRE_THROWS(Ensemble({0.5, 0.4}, {q0, q0}));
    REQUIRE_THROWS(
        Ensemble({0.5, 0.5}, {q0, DensityOperator::maximally_mixed(3)}));
}
