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
 * Classical identification codes: the randomized-greedy subset construction,
 * the blow-up extension over a classical side register, Sanov tail bounds and
 * exact verification of error probabilities.
 */

#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "qid/report.hpp"
#include "qid/states.hpp"
#include "qid/linalg.hpp"

namespace qid {

/// Family of uniform distributions on same-size subsets of {0..M-1}; the
/// decoder for message i accepts exactly the outcomes in its own subset, so
/// the error of first kind is 0 and the second kind is governed by pairwise
/// intersections.
struct ClassicalIdCode {
    Index ground_size = 0;                       ///< M
    Index set_size = 0;                          ///< floor(eps M)
    std::vector<std::vector<std::uint32_t>> sets; ///< sorted, unique entries
    double lambda2_target = 0.0;

    void validate() const {
        if (ground_size < 1 || set_size < 1 || sets.empty()) {
            throw std::invalid_argument("ClassicalIdCode: empty code");
        }
        for (const auto &s : sets) {
            if (static_cast<Index>(s.size()) != set_size) {
                throw std::invalid_argument(
                    "ClassicalIdCode: set size mismatch");
            }
            for (std::size_t i = 0; i < s.size(); ++i) {
                if (s[i] >= static_cast<std::uint32_t>(ground_size)) {
                    throw std::invalid_argument(
                        "ClassicalIdCode: index out of range");
                }
                if (i > 0 && s[i - 1] >= s[i]) {
                    throw std::invalid_argument(
                        "ClassicalIdCode: sets must be sorted and unique");
                }
            }
        }
    }
};

inline std::size_t sorted_intersection_size(
    const std::vector<std::uint32_t> &a, const std::vector<std::uint32_t> &b) {
    std::size_t n = 0;
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) {
            ++i;
        } else if (a[i] > b[j]) {
            ++j;
        } else {
            ++n;
            ++i;
            ++j;
        }
    }
    return n;
}

/// lambda * log2(1/eps - 1); the subset construction is guaranteed to reach
/// 2^{floor(eps M)} / M sets when this exceeds 2.
inline double ad_hypothesis_value(double epsilon, double lambda) {
    if (!(epsilon > 0.0) || !(epsilon < 1.0)) {
        throw std::invalid_argument("ad_hypothesis: epsilon outside (0,1)");
    }
    return lambda * std::log2(1.0 / epsilon - 1.0);
}

struct AdBuildResult {
    ClassicalIdCode code;
    bool complete = false;
    std::size_t attempts_used = 0;
};

/**
 * @brief Randomized-greedy subset construction.
 *
 * Samples random floor(eps M)-subsets and keeps each candidate whose
 * intersection with every kept set is at most lambda * floor(eps M). Stops at
 * target_n sets or when the attempt budget (default 50 * target_n) runs out;
 * the result reports which.
 */
inline AdBuildResult ad_construct(Index M, double epsilon, double lambda,
                                  std::size_t target_n, Rng &rng,
                                  std::size_t attempt_budget = 0) {
    if (!(epsilon > 0.0) || !(epsilon < 1.0)) {
        throw std::invalid_argument("ad_construct: epsilon outside (0,1)");
    }
    if (!(lambda > 0.0) || !(lambda < 1.0)) {
        throw std::invalid_argument("ad_construct: lambda outside (0,1)");
    }
    const Index set_size = static_cast<Index>(epsilon * static_cast<double>(M));
    if (set_size < 1) {
        throw degenerate_parameters("ad_construct: floor(eps M) is zero");
    }
    if (target_n < 1) {
        throw std::invalid_argument("ad_construct: target_n must be >= 1");
    }
    if (attempt_budget == 0) {
        attempt_budget = 50 * target_n;
    }
    const double max_intersection =
        lambda * static_cast<double>(set_size) + 1e-9;

    std::vector<std::uint32_t> pool(M);
    for (Index i = 0; i < M; ++i) {
        pool[i] = static_cast<std::uint32_t>(i);
    }

    AdBuildResult result;
    result.code.ground_size = M;
    result.code.set_size = set_size;
    result.code.lambda2_target = lambda;

    for (std::size_t attempt = 0;
         attempt < attempt_budget && result.code.sets.size() < target_n;
         ++attempt) {
        ++result.attempts_used;
        // partial Fisher-Yates: uniform subset of size set_size
        for (Index i = 0; i < set_size; ++i) {
            std::uniform_int_distribution<Index> pick(i, M - 1);
            std::swap(pool[i], pool[pick(rng)]);
        }
        std::vector<std::uint32_t> candidate(pool.begin(),
                                             pool.begin() + set_size);
        std::sort(candidate.begin(), candidate.end());
        bool ok = true;
        for (const auto &kept : result.code.sets) {
            if (static_cast<double>(sorted_intersection_size(candidate, kept)) >
                max_intersection) {
                ok = false;
                break;
            }
        }
        if (ok) {
            result.code.sets.push_back(std::move(candidate));
        }
    }
    result.complete = result.code.sets.size() >= target_n;
    return result;
}

/// Exhaustive O(N^2) verification. lambda1 is 0 by construction (the decoder
/// accepts exactly its own set); lambda2 is the worst intersection ratio.
inline VerificationReport verify_classical_id(const ClassicalIdCode &code) {
    code.validate();
    VerificationReport report;
    double worst = 0.0;
    for (std::size_t i = 0; i < code.sets.size(); ++i) {
        // own-set acceptance: |M_i cap M_i| / |M_i| = 1, first kind error 0
        for (std::size_t j = 0; j < code.sets.size(); ++j) {
            if (i == j) {
                continue;
            }
            const double ratio =
                static_cast<double>(
                    sorted_intersection_size(code.sets[i], code.sets[j])) /
                static_cast<double>(code.set_size);
            worst = std::max(worst, ratio);
            ++report.pairs_checked;
        }
    }
    report.lambda1 = 0.0;
    report.lambda1_mean = 0.0;
    report.lambda2 = worst;
    return report;
}

/**
 * Blow-up of a base ID code {(rho_i, D_i)} over a classical register of
 * dimension M via functions f: {0..M-1} -> {0..N-1}. The blown-up states and
 * effects are block diagonal over the register,
 *   sigma_f = (1/M) sum_k rho_{f(k)} (x) [k],   D~_f = sum_k D_{f(k)} (x) [k],
 * so every trace reduces to a mean over blocks and the tensor product is
 * never materialized.
 */
struct BlowupCode {
    std::vector<DensityOperator> base_states;
    std::vector<PovmEffect> base_effects;
    Index classical_dim = 0; ///< M
    std::vector<std::vector<std::uint32_t>> functions;

    Index base_size() const { return static_cast<Index>(base_states.size()); }
};

/// Exact base cross matrix C(i, j) = Tr(rho_i D_j).
inline RealMatrix base_cross_matrix(
    const std::vector<DensityOperator> &states,
    const std::vector<PovmEffect> &effects) {
    if (states.empty() || states.size() != effects.size()) {
        throw std::invalid_argument("base code: states/effects mismatch");
    }
    const Index n = static_cast<Index>(states.size());
    RealMatrix c(n, n);
    for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) {
            c(i, j) = outcome_probability(states[i], effects[j]);
        }
    }
    return c;
}

/// Tr(sigma_f D~_g) = (1/M) sum_k C(f(k), g(k)), evaluated block-wise.
inline double blowup_cross(const RealMatrix &cross,
                           const std::vector<std::uint32_t> &f,
                           const std::vector<std::uint32_t> &g) {
    double s = 0.0;
    for (std::size_t k = 0; k < f.size(); ++k) {
        s += cross(f[k], g[k]);
    }
    return s / static_cast<double>(f.size());
}

struct BlowupBuildResult {
    BlowupCode code;
    bool complete = false;
    std::size_t attempts_used = 0;
};

/**
 * @brief Iterative randomized blow-up construction.
 *
 * Candidates are uniform random functions; a candidate is kept when its exact
 * cross-error against every kept function (both orders) stays within
 * lambda2_base + epsilon. Acceptance uses the measured per-pair base values,
 * which is what the per-pair inequality needs when base errors are not
 * exactly 0 or lambda2.
 */
inline BlowupBuildResult blowup(const std::vector<DensityOperator> &base_states,
                                const std::vector<PovmEffect> &base_effects,
                                double lambda2_base, Index M, double epsilon,
                                std::size_t target_n, Rng &rng,
                                std::size_t attempt_budget = 0) {
    if (base_states.empty()) {
        throw std::invalid_argument("blowup: empty base code");
    }
    if (!(epsilon > 0.0) || !(epsilon < 1.0)) {
        throw std::invalid_argument("blowup: epsilon outside (0,1)");
    }
    if (M < 1 || target_n < 1) {
        throw std::invalid_argument("blowup: M and target_n must be >= 1");
    }
    if (attempt_budget == 0) {
        attempt_budget = 50 * target_n;
    }
    const RealMatrix cross = base_cross_matrix(base_states, base_effects);
    const Index n_base = static_cast<Index>(base_states.size());
    const double threshold = lambda2_base + epsilon + 1e-12;

    BlowupBuildResult result;
    result.code.base_states = base_states;
    result.code.base_effects = base_effects;
    result.code.classical_dim = M;

    std::uniform_int_distribution<std::uint32_t> pick(
        0, static_cast<std::uint32_t>(n_base - 1));
    for (std::size_t attempt = 0;
         attempt < attempt_budget && result.code.functions.size() < target_n;
         ++attempt) {
        ++result.attempts_used;
        std::vector<std::uint32_t> f(M);
        for (auto &x : f) {
            x = pick(rng);
        }
        bool ok = true;
        for (const auto &g : result.code.functions) {
            if (blowup_cross(cross, f, g) > threshold ||
                blowup_cross(cross, g, f) > threshold) {
                ok = false;
                break;
            }
        }
        if (ok) {
            result.code.functions.push_back(std::move(f));
        }
    }
    result.complete = result.code.functions.size() >= target_n;
    return result;
}

/// Exhaustive verification of a blow-up code. The error of first kind of
/// sigma_f is 1 minus the mean base success over the register; both the mean
/// and the max over functions are reported.
inline VerificationReport verify_blowup(const BlowupCode &code) {
    const RealMatrix cross =
        base_cross_matrix(code.base_states, code.base_effects);
    VerificationReport report;
    double worst_first = 0.0;
    double sum_first = 0.0;
    for (const auto &f : code.functions) {
        const double success = blowup_cross(cross, f, f);
        worst_first = std::max(worst_first, 1.0 - success);
        sum_first += 1.0 - success;
    }
    double worst_second = 0.0;
    for (std::size_t i = 0; i < code.functions.size(); ++i) {
        for (std::size_t j = 0; j < code.functions.size(); ++j) {
            if (i == j) {
                continue;
            }
            worst_second = std::max(
                worst_second,
                blowup_cross(cross, code.functions[i], code.functions[j]));
            ++report.pairs_checked;
        }
    }
    report.lambda1 = worst_first;
    report.lambda1_mean =
        code.functions.empty()
            ? 0.0
            : sum_first / static_cast<double>(code.functions.size());
    report.lambda2 = worst_second;
    return report;
}

/// log2 of the Sanov bound exp2(-M D(eps || 1/N)) on the probability that two
/// independent uniform functions agree on more than an eps fraction of M
/// points.
inline double sanov_tail_log2(Index M, Index N, double epsilon) {
    if (M < 1 || N < 1) {
        throw std::invalid_argument("sanov_tail: M and N must be >= 1");
    }
    if (!(epsilon < 1.0)) {
        throw std::invalid_argument("sanov_tail: epsilon must be < 1");
    }
    const double q = 1.0 / static_cast<double>(N);
    if (!(epsilon > q)) {
        throw vacuous_bound("sanov_tail: bound vacuous for epsilon <= 1/N");
    }
    return -static_cast<double>(M) * binary_relative_entropy_bits(epsilon, q);
}

struct SanovMcResult {
    double empirical_tail = 0.0;
    double bound = 0.0;      ///< 2^log2_bound when valid
    double log2_bound = 0.0;
    bool bound_valid = false;
    double slack3 = 0.0;     ///< 3 binomial standard errors at the bound
};

/// Samples i.i.d. agreement indicators with success 1/N and measures the
/// frequency of trials whose mean exceeds epsilon.
inline SanovMcResult sanov_monte_carlo(Index M, Index N, double epsilon,
                                       std::size_t trials, Rng &rng) {
    if (M < 1 || N < 1 || trials < 1) {
        throw std::invalid_argument("sanov_monte_carlo: bad parameters");
    }
    const double q = 1.0 / static_cast<double>(N);
    std::bernoulli_distribution agree(q);
    std::size_t exceed = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        Index hits = 0;
        for (Index k = 0; k < M; ++k) {
            hits += agree(rng) ? 1 : 0;
        }
        if (static_cast<double>(hits) / static_cast<double>(M) > epsilon) {
            ++exceed;
        }
    }
    SanovMcResult result;
    result.empirical_tail =
        static_cast<double>(exceed) / static_cast<double>(trials);
    result.bound_valid = epsilon > q && epsilon < 1.0;
    if (result.bound_valid) {
        result.log2_bound = sanov_tail_log2(M, N, epsilon);
        result.bound = std::exp2(result.log2_bound);
        result.slack3 = 3.0 * std::sqrt(result.bound * (1.0 - result.bound) /
                                        static_cast<double>(trials));
    }
    return result;
}

struct SimultaneousCode {
    std::vector<PovmEffect> effects;
    std::vector<std::vector<std::uint32_t>> partition; ///< witnessing subsets
};

/**
 * @brief Coarse-grain a POVM through an ID code: D_i = sum_{k in M_i} E_k.
 *
 * The returned partition witnesses co-existence of all binary tests by
 * construction.
 */
inline SimultaneousCode simultaneous_from_transmission(
    const std::vector<PovmEffect> &povm, const ClassicalIdCode &code) {
    code.validate();
    if (povm.empty()) {
        throw std::invalid_argument("simultaneous: empty POVM");
    }
    const Index dim = povm.front().dim();
    ComplexMatrix sum = ComplexMatrix::Zero(dim, dim);
    for (const auto &e : povm) {
        if (e.dim() != dim) {
            throw invalid_dimension("simultaneous: POVM dimension mismatch");
        }
        sum += e.matrix();
    }
    if ((sum - ComplexMatrix::Identity(dim, dim)).cwiseAbs().maxCoeff() >
        1e-9) {
        throw std::invalid_argument("simultaneous: POVM does not sum to 1");
    }
    if (code.ground_size != static_cast<Index>(povm.size())) {
        throw invalid_dimension(
            "simultaneous: code ground set must index the POVM");
    }
    SimultaneousCode out;
    out.partition = code.sets;
    out.effects.reserve(code.sets.size());
    for (const auto &set : code.sets) {
        ComplexMatrix d = ComplexMatrix::Zero(dim, dim);
        for (std::uint32_t k : set) {
            d += povm[k].matrix();
        }
        out.effects.emplace_back(d);
    }
    return out;
}

} // namespace qid
