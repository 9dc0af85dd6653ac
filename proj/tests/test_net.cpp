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

#include "qid/net.hpp"

using namespace qid;

TEST_CASE("exact qubit nets", "[net]") {
    Rng rng = make_rng(31);

    SECTION("epsilon 1.0 net stays within the counting bound") {
        const EpsilonNet net =
            build_net(2, 1.0, NetStrategy::exact_qubit, 100000, rng);
        REQUIRE(net.size() <= 25);
        REQUIRE(std::log2(static_cast<double>(net.size())) <=
                pure_net_size_bound_log2(2, 1.0));
        REQUIRE(net.certificate().kind == NetCertificateKind::exact_qubit);
    }

    SECTION("epsilon 2.0 needs a single point") {
        const EpsilonNet net =
            build_net(2, 2.0, NetStrategy::exact_qubit, 100000, rng);
        REQUIRE(net.size() == 1);
    }

    SECTION("coverage hard assertion at epsilon 0.3") {
        const EpsilonNet net =
            build_net(2, 0.3, NetStrategy::exact_qubit, 100000, rng);
        REQUIRE(net.certificate().max_observed_distance <= 0.3);
        for (int i = 0; i < 100000; ++i) {
            const PureState s = haar_pure_state(2, rng);
            REQUIRE(nearest(net, s).distance <= 0.3 + 1e-12);
        }
        REQUIRE(std::log2(static_cast<double>(net.size())) <=
                pure_net_size_bound_log2(2, 0.3));
    }

    SECTION("exact strategy is rejected away from qubits") {
        REQUIRE_THROWS_AS(build_net(3, 0.5, NetStrategy::exact_qubit, 10, rng),
                          unsupported);
    }

    SECTION("point budget enforced") {
        REQUIRE_THROWS_AS(build_net(2, 0.05, NetStrategy::exact_qubit, 8, rng),
                          resource_limit);
    }
}

TEST_CASE("random nets carry an empirical certificate", "[net]") {
    Rng rng = make_rng(32);
    const EpsilonNet net = build_net(4, 0.5, NetStrategy::random, 500, rng);
    REQUIRE(net.size() == 500);
    REQUIRE(net.certificate().kind == NetCertificateKind::empirical);
    REQUIRE(net.certificate().sample_count == 10000);
    REQUIRE(net.certificate().max_observed_distance > 0.0);
    REQUIRE(net.certificate().max_observed_distance <= 1.0);
}

TEST_CASE("nearest lookup", "[net]") {
    Rng rng = make_rng(33);

    SECTION("a net point maps to itself at distance zero") {
        const EpsilonNet net = build_net(3, 1.0, NetStrategy::random, 50, rng);
        const auto hit = nearest(net, net.point(17));
        REQUIRE(hit.index == 17);
        // sqrt(1 - overlap) turns rounding in the overlap into sqrt(eps)
        REQUIRE(hit.distance == Approx(0.0).margin(1e-7));
    }

    SECTION("basis states resolve exactly") {
        const std::vector<PureState> pts = {PureState::basis(2, 0),
                                            PureState::basis(2, 1)};
        const EpsilonNet net(2, 1.0, pts,
                             {NetCertificateKind::empirical, 0, 0.0});
        const auto hit = nearest(net, PureState::basis(2, 1));
        REQUIRE(hit.index == 1);
        REQUIRE(hit.distance == Approx(0.0).margin(1e-12));
    }

    SECTION("plus state sits 1/sqrt(2) away from both basis states") {
        const std::vector<PureState> pts = {PureState::basis(2, 0),
                                            PureState::basis(2, 1)};
        const EpsilonNet net(2, 1.0, pts,
                             {NetCertificateKind::empirical, 0, 0.0});
        ComplexVector v(2);
        v << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
        const auto hit = nearest(net, PureState(v));
        REQUIRE(hit.index == 0); // tie broken to lowest index
        REQUIRE(hit.distance == Approx(1.0 / std::sqrt(2.0)));
    }

    SECTION("returned distance is the pure-state trace distance") {
        const EpsilonNet net = build_net(4, 1.0, NetStrategy::random, 64, rng);
        for (int t = 0; t < 50; ++t) {
            const PureState s = haar_pure_state(4, rng);
            const auto hit = nearest(net, s);
            REQUIRE(hit.distance == pure_trace_distance(net.point(hit.index), s));
        }
    }

    SECTION("dimension mismatch throws") {
        const EpsilonNet net = build_net(4, 1.0, NetStrategy::random, 8, rng);
        REQUIRE_THROWS_AS(nearest(net, PureState::basis(3, 0)),
                          invalid_dimension);
    }
}

TEST_CASE("net size bounds", "[net]") {
    SECTION("mixed-state bound at d=2, eps=0.5") {
        REQUIRE(mixed_net_size_bound_log2(2, 0.5) ==
                Approx(8.0 * std::log2(10.0)));
    }
    SECTION("pure-state bound is the 2d variant") {
        REQUIRE(pure_net_size_bound_log2(2, 0.5) ==
                Approx(4.0 * std::log2(10.0)));
    }
    SECTION("degenerate one-state space") {
        REQUIRE(pure_net_size_bound_log2(1, 0.5) ==
                Approx(2.0 * std::log2(10.0)));
    }
    SECTION("epsilon above the diameter is a domain error") {
        REQUIRE_THROWS_AS(mixed_net_size_bound_log2(2, 5.0),
                          std::invalid_argument);
        REQUIRE_THROWS_AS(pure_net_size_bound_log2(2, -0.1),
                          std::invalid_argument);
    }
}

TEST_CASE("net from explicit points measures its coverage", "[net]") {
    Rng rng = make_rng(34);
    std::vector<PureState> pts;
    for (int i = 0; i < 40; ++i) {
        pts.push_back(haar_pure_state(3, rng));
    }
    const EpsilonNet net = net_from_points(pts, rng, 2000);
    REQUIRE(net.size() == 40);
    REQUIRE(net.certificate().sample_count == 2000);
    REQUIRE(net.epsilon() == net.certificate().max_observed_distance);
}
