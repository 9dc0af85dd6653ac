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

#include "qid/serialize.hpp"

using namespace qid;

TEST_CASE("matrix json round trip preserves values bit-exactly",
          "[serialize]") {
    Rng rng = make_rng(81);
    const ComplexMatrix m = complex_gaussian(3, 5, rng);
    const ComplexMatrix back = matrix_from_json(matrix_to_json(m));
    REQUIRE(back.rows() == 3);
    REQUIRE(back.cols() == 5);
    REQUIRE(back == m);

    const Json j = matrix_to_json(m);
    REQUIRE(j.at("rows") == 3);
    REQUIRE(j.at("re").size() == 3);
    REQUIRE(j.at("re").at(0).size() == 5);
}

TEST_CASE("codes survive a round trip through json", "[serialize]") {
    Rng rng = make_rng(82);

    SECTION("channel") {
        const Channel dep = depolarizing_channel(2, 0.3);
        const Channel back = channel_from_json(to_json(dep));
        REQUIRE(back.in_dim() == 2);
        REQUIRE(back.kraus_ops().size() == dep.kraus_ops().size());
        const DensityOperator probe =
            DensityOperator::pure(haar_pure_state(2, rng));
        REQUIRE((back.apply(probe).matrix() - dep.apply(probe).matrix())
                    .cwiseAbs()
                    .maxCoeff() < 1e-15);
    }

    SECTION("classical code") {
        const AdBuildResult r = ad_construct(12, 0.25, 0.5, 6, rng);
        const ClassicalIdCode back = classical_code_from_json(to_json(r.code));
        REQUIRE(back.sets == r.code.sets);
        REQUIRE(back.ground_size == 12);
    }

    SECTION("quantum-ID code rebuilds its decoder cache") {
        const QuantumIdCode code = build_quantum_id(3, 4, 2, 8, rng);
        const QuantumIdCode back = quantum_id_from_json(to_json(code));
        REQUIRE(back.net().size() == code.net().size());
        for (std::size_t i = 0; i < code.net().size(); ++i) {
            REQUIRE((back.decode_effect_at(i).matrix() -
                     code.decode_effect_at(i).matrix())
                        .cwiseAbs()
                        .maxCoeff() < 1e-12);
        }
    }

    SECTION("net with certificate") {
        const EpsilonNet net = build_net(2, 0.4, NetStrategy::exact_qubit,
                                         100000, rng);
        const EpsilonNet back = net_from_json(to_json(net));
        REQUIRE(back.size() == net.size());
        REQUIRE(back.certificate().kind == NetCertificateKind::exact_qubit);
        REQUIRE(back.certificate().max_observed_distance ==
                net.certificate().max_observed_distance);
    }

    SECTION("fingerprint code") {
        const FingerprintBuildResult fp =
            build_fingerprint_code(8, 0.25, 0.5, 4, rng, true);
        const FingerprintCode back = fingerprint_from_json(to_json(fp.code));
        REQUIRE(back.states.size() == fp.code.states.size());
        REQUIRE(back.max_overlap == fp.code.max_overlap);
    }

    SECTION("mixed code chains inner code and embedding") {
        const MixedBuildResult r =
            build_mixed_code(8, 0.5, 4, 4, rng, 0.25, 1);
        REQUIRE(r.code.has_value());
        const MixedIdCode back = mixed_code_from_json(to_json(*r.code));
        REQUIRE(back.states.size() == r.code->states.size());
        for (std::size_t i = 0; i < back.states.size(); ++i) {
            REQUIRE((back.states[i].matrix() - r.code->states[i].matrix())
                        .cwiseAbs()
                        .maxCoeff() < 1e-12);
        }
        REQUIRE(back.measured.lambda2 == r.code->measured.lambda2);
    }

    SECTION("invalid payloads are rejected by the type invariants") {
        Json j = to_json(DensityOperator::maximally_mixed(2));
        j["re"][0][0] = 5.0; // breaks the unit trace
        REQUIRE_THROWS(density_from_json(j));
    }
}
