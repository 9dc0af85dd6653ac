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

/**
 * @file
 * Quantum fingerprinting: pure-state ID codes built from subset-construction
 * distributions, and mixed-state ID codes obtained by pushing a fingerprint
 * code through a quantum-ID embedding.
 */

#pragma once

#include <optional>

#include "qid/classical_id.hpp"
#include "qid/quantum_id.hpp"

namespace qid {

/// |psi> = sum_k sqrt(P(k)) |k>. Overlaps of two encodings equal the squared
/// Bhattacharyya coefficient of the distributions.
inline PureState fingerprint_encode(const std::vector<double> &dist) {
    if (dist.empty()) {
        throw std::invalid_argument("fingerprint_encode: empty distribution");
    }
    double sum = 0.0;
    for (double p : dist) {
        if (p < 0.0 || !std::isfinite(p)) {
            throw std::invalid_argument(
                "fingerprint_encode: negative or non-finite mass");
        }
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-9) {
        throw std::invalid_argument(
            "fingerprint_encode: probabilities must sum to 1");
    }
    ComplexVector amp(static_cast<Index>(dist.size()));
    for (std::size_t k = 0; k < dist.size(); ++k) {
        amp(static_cast<Index>(k)) = std::sqrt(dist[k]);
    }
    return PureState(amp);
}

/// Pure-state ID code {(psi_i, psi_i)}: error of first kind is 0 exactly,
/// second kind equals the worst pairwise overlap.
struct FingerprintCode {
    Index dim = 0;
    std::vector<PureState> states;
    ClassicalIdCode base; ///< the subset family behind the distributions
    double max_overlap = 0.0;
    double lambda_target = 0.0;
};

struct FingerprintBuildResult {
    FingerprintCode code;
    bool complete = false;
};

/// lambda * log2(1/eps - 1) > 4 guarantees the fingerprint size; construction
/// still runs below the threshold when explicitly overridden.
inline double fingerprint_hypothesis_value(double epsilon, double lambda) {
    return ad_hypothesis_value(epsilon, lambda);
}

/**
 * @brief Fingerprints from the subset construction on a ground set of size d.
 *
 * Runs the subset construction with second-kind target lambda/2 and encodes
 * the uniform distribution on each subset. For uniform distributions the
 * overlap is computable in closed form, (|intersection| / set size)^2, so the
 * bound max_overlap <= lambda is verified by exhaustive direct computation
 * rather than through distinguishability inequalities.
 */
inline FingerprintBuildResult build_fingerprint_code(
    Index d, double epsilon, double lambda, std::size_t target_n, Rng &rng,
    bool override_hypothesis = false, std::size_t attempt_budget = 0) {
    if (d < 2) {
        throw invalid_dimension("build_fingerprint_code: need d >= 2");
    }
    if (!override_hypothesis &&
        !(fingerprint_hypothesis_value(epsilon, lambda) > 4.0)) {
        throw std::invalid_argument(
            "build_fingerprint_code: lambda log2(1/eps - 1) <= 4; pass the "
            "override to construct anyway");
    }
    const AdBuildResult ad =
        ad_construct(d, epsilon, lambda / 2.0, target_n, rng, attempt_budget);

    FingerprintBuildResult result;
    result.complete = ad.complete;
    result.code.dim = d;
    result.code.base = ad.code;
    result.code.lambda_target = lambda;
    const double set_size = static_cast<double>(ad.code.set_size);
    for (const auto &set : ad.code.sets) {
        std::vector<double> dist(d, 0.0);
        for (std::uint32_t k : set) {
            dist[k] = 1.0 / set_size;
        }
        result.code.states.push_back(fingerprint_encode(dist));
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < result.code.states.size(); ++i) {
        for (std::size_t j = i + 1; j < result.code.states.size(); ++j) {
            worst = std::max(worst, pure_overlap(result.code.states[i],
                                                 result.code.states[j]));
        }
    }
    result.code.max_overlap = worst;
    if (worst > lambda + 1e-12) {
        throw std::logic_error(
            "build_fingerprint_code: overlap bound violated");
    }
    return result;
}

/// Mixed-state ID code: a fingerprint code on C^S pushed through a quantum-ID
/// embedding into C^d. The fingerprint states are injected into the
/// embedding's net, which is what keeps the error of first kind at zero.
struct MixedIdCode {
    FingerprintCode inner;
    QuantumIdCode embedding;
    std::vector<DensityOperator> states;
    std::vector<PovmEffect> effects;
    VerificationReport measured;
};

struct MixedBuildResult {
    std::optional<MixedIdCode> code;
    bool complete = false;
};

/**
 * @brief Concatenated mixed-state code.
 *
 * S defaults to floor(K(lambda) d^2) from the asymptotic schedule, which is
 * zero for every desk-scale d; pass S_override to build anything real. The
 * embedding ancilla defaults to the smallest a with S <= d*a.
 */
inline MixedBuildResult build_mixed_code(
    Index d, double lambda, std::optional<Index> S_override,
    std::size_t target_n, Rng &rng, double epsilon = 0.25,
    std::optional<Index> a_override = std::nullopt,
    std::size_t net_extra_budget = 0) {
    if (d < 2) {
        throw invalid_dimension("build_mixed_code: need d >= 2");
    }
    const Index S = S_override.value_or(static_cast<Index>(
        quantum_id_k_constant(lambda) * static_cast<double>(d) *
        static_cast<double>(d)));
    if (S < 2) {
        throw degenerate_parameters(
            "build_mixed_code: S = floor(K(lambda) d^2) = " +
            std::to_string(S) +
            " at this scale; the schedule constants are existence-proof "
            "artifacts, pass S_override");
    }
    const Index a = a_override.value_or((S + d - 1) / d);
    if (S > d * a) {
        throw invalid_dimension("build_mixed_code: S exceeds d*a");
    }

    // inner fingerprints at second-kind lambda/2, embedding budget lambda/2
    const FingerprintBuildResult fp = build_fingerprint_code(
        S, epsilon, lambda / 2.0, target_n, rng, /*override_hypothesis=*/true);

    std::vector<PureState> net_points = fp.code.states;
    for (std::size_t i = 0; i < net_extra_budget; ++i) {
        net_points.push_back(haar_pure_state(S, rng));
    }
    const EpsilonNet net = net_from_points(std::move(net_points), rng);
    const QuantumIdCode embedding = build_quantum_id(S, d, a, net, rng);

    MixedBuildResult result;
    result.complete = fp.complete;
    std::vector<DensityOperator> states;
    std::vector<PovmEffect> effects;
    states.reserve(fp.code.states.size());
    for (const auto &psi : fp.code.states) {
        states.push_back(embedding.encode(psi));
        effects.push_back(embedding.decode_effect(psi));
    }
    VerificationReport measured;
    for (std::size_t i = 0; i < states.size(); ++i) {
        measured.lambda1 = std::max(
            measured.lambda1,
            1.0 - outcome_probability(states[i], effects[i]));
        for (std::size_t j = 0; j < states.size(); ++j) {
            if (i == j) {
                continue;
            }
            measured.lambda2 =
                std::max(measured.lambda2,
                         outcome_probability(states[i], effects[j]));
            ++measured.pairs_checked;
        }
    }
    result.code = MixedIdCode{fp.code, embedding, std::move(states),
                              std::move(effects), measured};
    return result;
}

} // namespace qid
