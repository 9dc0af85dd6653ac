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

#include "qid/fingerprint.hpp"

using namespace qid;

TEST_CASE("fingerprint encoding", "[fingerprint]") {
    SECTION("point mass encodes to a basis vector") {
        const PureState psi = fingerprint_encode({0.0, 0.0, 1.0, 0.0});
        REQUIRE(pure_overlap(psi, PureState::basis(4, 2)) == Approx(1.0));
    }

    SECTION("uniform pair vs point mass overlaps one half") {
        const PureState a = fingerprint_encode({0.5, 0.5});
        const PureState b = fingerprint_encode({1.0, 0.0});
        REQUIRE(pure_overlap(a, b) == Approx(0.5));
    }

    SECTION("disjoint supports are orthogonal") {
        const PureState a = fingerprint_encode({0.5, 0.5, 0.0, 0.0});
        const PureState b = fingerprint_encode({0.0, 0.0, 0.5, 0.5});
        REQUIRE(pure_overlap(a, b) == Approx(0.0).margin(1e-15));
    }

    SECTION("overlap is the squared Bhattacharyya coefficient") {
        const std::vector<double> p = {0.5, 0.3, 0.2};
        const std::vector<double> q = {0.1, 0.6, 0.3};
        double bc = 0.0;
        for (std::size_t k = 0; k < p.size(); ++k) {
            bc += std::sqrt(p[k] * q[k]);
        }
        REQUIRE(pure_overlap(fingerprint_encode(p), fingerprint_encode(q)) ==
                Approx(bc * bc).margin(1e-14));
    }

    SECTION("non-distributions are rejected") {
        REQUIRE_THROWS(fingerprint_encode({0.5, 0.6}));
        REQUIRE_THROWS(fingerprint_encode({1.5, -0.5}));
        REQUIRE_THROWS(fingerprint_encode({}));
    }
}

TEST_CASE("fingerprint codes", "[fingerprint]") {
    SECTION("uniform-support overlap identity, exhaustively") {
        Rng rng = make_rng(71);
        const FingerprintBuildResult r =
            build_fingerprint_code(16, 0.25, 0.5, 12, rng, true);
        const auto &code = r.code;
        REQUIRE(code.states.size() == code.base.sets.size());
        const double s = static_cast<double>(code.base.set_size);
        for (std::size_t i = 0; i < code.states.size(); ++i) {
            for (std::size_t j = 0; j < code.states.size(); ++j) {
                if (i == j) {
                    continue;
                }
                const double inter = static_cast<double>(
                    sorted_intersection_size(code.base.sets[i],
                                             code.base.sets[j]));
                REQUIRE(pure_overlap(code.states[i], code.states[j]) ==
                        Approx((inter / s) * (inter / s)).margin(1e-12));
            }
        }
        REQUIRE(code.max_overlap <= 0.5);
    }

    SECTION("error of first kind is exactly zero") {
        Rng rng = make_rng(72);
        const FingerprintBuildResult r =
            build_fingerprint_code(8, 0.25, 0.5, 4, rng, true);
        for (const auto &psi : r.code.states) {
            const DensityOperator rho = DensityOperator::pure(psi);
            REQUIRE(outcome_probability(rho, PovmEffect(rho.matrix())) ==
                    Approx(1.0).margin(1e-12));
        }
    }

    SECTION("worked example: sets {0,1,2,3} and {2,3,4,5} in d=8") {
        std::vector<double> p(8, 0.0);
        std::vector<double> q(8, 0.0);
        for (int k : {0, 1, 2, 3}) {
            p[k] = 0.25;
        }
        for (int k : {2, 3, 4, 5}) {
            q[k] = 0.25;
        }
        REQUIRE(pure_overlap(fingerprint_encode(p), fingerprint_encode(q)) ==
                Approx(0.25).margin(1e-14));
    }

    SECTION("hypothesis gate") {
        Rng rng = make_rng(73);
        // 0.5 * log2(3) < 4, so this needs the override
        REQUIRE_THROWS_AS(build_fingerprint_code(16, 0.25, 0.5, 4, rng, false),
                          std::invalid_argument);
        REQUIRE(fingerprint_hypothesis_value(1.0 / 1025.0, 0.5) ==
                Approx(5.0));
    }
}

TEST_CASE("mixed-state codes", "[fingerprint]") {
    SECTION("schedule constants collapse without an override") {
        Rng rng = make_rng(74);
        REQUIRE_THROWS_AS(
            build_mixed_code(1024, 0.5, std::nullopt, 4, rng),
            degenerate_parameters);
        // K(0.5) * 2^20 is far below one
        REQUIRE(quantum_id_k_constant(0.5) * std::exp2(20.0) < 1.0);
    }

    SECTION("identity-like regime a=1: cross-acceptance equals overlap") {
        Rng rng = make_rng(75);
        const MixedBuildResult r =
            build_mixed_code(8, 0.5, 8, 5, rng, 0.25, 1);
        REQUIRE(r.code.has_value());
        const MixedIdCode &code = *r.code;
        REQUIRE(code.embedding.ancilla_dim() == 1);
        for (std::size_t i = 0; i < code.states.size(); ++i) {
            for (std::size_t j = 0; j < code.states.size(); ++j) {
                if (i == j) {
                    continue;
                }
                const double cross =
                    outcome_probability(code.states[i], code.effects[j]);
                const double overlap = pure_overlap(code.inner.states[i],
                                                    code.inner.states[j]);
                REQUIRE(cross == Approx(overlap).margin(1e-9));
            }
        }
        REQUIRE(code.measured.lambda1 < 1e-8);
    }

    SECTION("injected states keep the first kind error at zero") {
        Rng rng = make_rng(76);
        const MixedBuildResult r =
            build_mixed_code(16, 0.5, 4, 6, rng, 0.25, std::nullopt, 8);
        REQUIRE(r.code.has_value());
        REQUIRE(r.code->measured.lambda1 < 1e-8);
    }

    SECTION("second kind bounded by overlap plus twice the embedding deviation") {
        Rng rng = make_rng(77);
        const MixedBuildResult r =
            build_mixed_code(16, 0.5, 4, 6, rng, 0.25, 2);
        REQUIRE(r.code.has_value());
        const MixedIdCode &code = *r.code;
        const DeviationReport dev =
            verify_quantum_id(code.embedding, 0, true, 770);
        for (std::size_t i = 0; i < code.states.size(); ++i) {
            for (std::size_t j = 0; j < code.states.size(); ++j) {
                if (i == j) {
                    continue;
                }
                const double cross =
                    outcome_probability(code.states[i], code.effects[j]);
                const double overlap = pure_overlap(code.inner.states[i],
                                                    code.inner.states[j]);
                REQUIRE(cross <=
                        overlap + 2.0 * dev.max_deviation + 1e-9);
            }
        }
    }

    SECTION("dimension sanity: S must fit in d*a") {
        Rng rng = make_rng(78);
        REQUIRE_THROWS_AS(
            build_mixed_code(4, 0.5, 9, 4, rng, 0.25, 2),
            invalid_dimension);
    }
}
