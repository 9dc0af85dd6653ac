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
 * Identification of quantum messages: a random-isometry encoder
 *   encode(pi) = Tr_a(V pi V*),  V: C^S -> C^d (x) C^a Haar,
 * with decoder effects D_tau = support projector of the encoded state nearest
 * to tau in an epsilon-net. Includes Monte Carlo verification against the
 * fidelity-test criterion |Tr(pi tau) - Tr(encode(pi) D_tau)|, the Haar
 * concentration tail check behind the construction, and the visible-decoder
 * (POVM simulation) deviation measurement.
 */

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qid/haar.hpp"
#include "qid/net.hpp"
#include "qid/report.hpp"

namespace qid {

/// Constant of the dimension schedule S = floor(K(lambda) d^2). Vanishingly
/// small below astronomical d; exposed so callers can see why.
inline double quantum_id_k_constant(double lambda) {
    if (!(lambda > 0.0) || !(lambda < 1.0)) {
        throw std::invalid_argument("k_constant: lambda outside (0,1)");
    }
    const double x = lambda / 100.0;
    return x * x * x * x / (4.0 * std::log2(100.0 / lambda));
}

struct QuantumIdSchedule {
    double eta = 0.0;     ///< net radius, lambda/8
    double epsilon = 0.0; ///< concentration threshold, (eta/2)^2
    Index a = 0;          ///< ancilla dimension, floor(epsilon d / 2)
    Index S = 0;          ///< message dimension, floor(K(lambda) d^2)
};

inline QuantumIdSchedule quantum_id_schedule(Index d, double lambda) {
    QuantumIdSchedule s;
    s.eta = lambda / 8.0;
    s.epsilon = (s.eta / 2.0) * (s.eta / 2.0);
    s.a = static_cast<Index>(s.epsilon * static_cast<double>(d) / 2.0);
    s.S = static_cast<Index>(quantum_id_k_constant(lambda) *
                             static_cast<double>(d) * static_cast<double>(d));
    return s;
}

class QuantumIdCode {
  public:
    QuantumIdCode(Index message_dim, Index output_dim, Index ancilla_dim,
                  Isometry encoder, EpsilonNet net)
        : S_(message_dim), d_(output_dim), a_(ancilla_dim),
          V_(std::move(encoder)), net_(std::move(net)) {
        if (S_ < 1 || d_ < 1 || a_ < 1) {
            throw invalid_dimension("QuantumIdCode: dimensions must be >= 1");
        }
        if (S_ > d_ * a_) {
            throw invalid_dimension(
                "QuantumIdCode: message dimension exceeds d*a");
        }
        if (V_.source_dim() != S_ || V_.target_dim() != d_ * a_) {
            throw invalid_dimension("QuantumIdCode: encoder shape mismatch");
        }
        if (net_.dim() != S_) {
            throw invalid_dimension("QuantumIdCode: net lives on the wrong space");
        }
        decoder_cache_.reserve(net_.size());
        for (const auto &point : net_.points()) {
            decoder_cache_.push_back(support_projector(encode(point)));
        }
    }

    Index message_dim() const { return S_; }
    Index output_dim() const { return d_; }
    Index ancilla_dim() const { return a_; }
    const Isometry &encoder() const { return V_; }
    const EpsilonNet &net() const { return net_; }
    const std::vector<PovmEffect> &decoder_cache() const {
        return decoder_cache_;
    }

    /// Tr_a(V pi V*).
    DensityOperator encode(const DensityOperator &pi) const {
        if (pi.dim() != S_) {
            throw invalid_dimension("encode: dimension mismatch");
        }
        const ComplexMatrix lifted =
            V_.matrix() * pi.matrix() * V_.matrix().adjoint();
        return DensityOperator(partial_trace_second(lifted, d_, a_));
    }

    /// Pure-input fast path: reshape V|phi> to d x a and form B B*.
    DensityOperator encode(const PureState &phi) const {
        if (phi.dim() != S_) {
            throw invalid_dimension("encode: dimension mismatch");
        }
        const ComplexVector w = V_.matrix() * phi.amplitudes();
        ComplexMatrix b(d_, a_);
        for (Index i = 0; i < d_; ++i) {
            for (Index k = 0; k < a_; ++k) {
                b(i, k) = w(i * a_ + k);
            }
        }
        return DensityOperator(b * b.adjoint());
    }

    /// Support projector of the encoded net point nearest to tau. Arbitrary
    /// test states route through the net (D_tau = D_tau~), so the effect is
    /// cached per net point.
    const PovmEffect &decode_effect(const PureState &tau) const {
        return decoder_cache_.at(nearest(net_, tau).index);
    }

    const PovmEffect &decode_effect_at(std::size_t net_index) const {
        return decoder_cache_.at(net_index);
    }

  private:
    Index S_;
    Index d_;
    Index a_;
    Isometry V_;
    EpsilonNet net_;
    std::vector<PovmEffect> decoder_cache_;
};

/// Random code over a caller-supplied net (e.g. with injected code states).
inline QuantumIdCode build_quantum_id(Index S, Index d, Index a,
                                      const EpsilonNet &net, Rng &rng) {
    if (S < 1 || d < 1 || a < 1) {
        throw invalid_dimension("build_quantum_id: dimensions must be >= 1");
    }
    if (S > d * a) {
        throw invalid_dimension("build_quantum_id: S exceeds d*a");
    }
    return QuantumIdCode(S, d, a, random_isometry(S, d * a, rng), net);
}

/// Random code with a random net of net_budget Haar points.
inline QuantumIdCode build_quantum_id(Index S, Index d, Index a,
                                      std::size_t net_budget, Rng &rng) {
    if (S < 1 || d < 1 || a < 1) {
        throw invalid_dimension("build_quantum_id: dimensions must be >= 1");
    }
    if (S > d * a) {
        throw invalid_dimension("build_quantum_id: S exceeds d*a");
    }
    std::vector<PureState> pts;
    pts.reserve(net_budget);
    for (std::size_t i = 0; i < net_budget; ++i) {
        pts.push_back(haar_pure_state(S, rng));
    }
    return QuantumIdCode(S, d, a, random_isometry(S, d * a, rng),
                         net_from_points(std::move(pts), rng));
}

/// Code from the asymptotic parameter schedule. Degenerate below
/// astronomical d, in which case this reports exactly how the floors
/// collapsed.
inline QuantumIdCode build_quantum_id_preset(Index d, double lambda,
                                             std::size_t net_budget, Rng &rng) {
    const QuantumIdSchedule sched = quantum_id_schedule(d, lambda);
    if (sched.a < 1 || sched.S < 1) {
        throw degenerate_parameters(
            "quantum-ID schedule collapsed: a = " + std::to_string(sched.a) +
            ", S = " + std::to_string(sched.S) +
            "; choose S and a explicitly at this scale");
    }
    return build_quantum_id(sched.S, d, sched.a, net_budget, rng);
}

/// Deviation |Tr(pi tau) - Tr(encode(pi) D_tau)| for one pair of pure states.
inline double fidelity_test_deviation(const QuantumIdCode &code,
                                      const PureState &pi,
                                      const PureState &tau) {
    const double ideal = pure_overlap(pi, tau);
    const double simulated =
        outcome_probability(code.encode(pi), code.decode_effect(tau));
    return std::abs(ideal - simulated);
}

/// Deviation statistics over an explicit list of (pi, tau) pairs.
inline DeviationReport verify_pairs(
    const QuantumIdCode &code,
    const std::vector<std::pair<PureState, PureState>> &pairs,
    double lambda_target = 0.0) {
    if (pairs.empty()) {
        throw std::invalid_argument("verify_pairs: no pairs");
    }
    DeviationReport report;
    report.lambda_target = lambda_target;
    double sum = 0.0;
    for (const auto &[pi, tau] : pairs) {
        const double dev = fidelity_test_deviation(code, pi, tau);
        report.max_deviation = std::max(report.max_deviation, dev);
        sum += dev;
        ++report.samples;
    }
    report.mean_deviation = sum / static_cast<double>(report.samples);
    return report;
}

/**
 * @brief Monte Carlo verification over Haar pairs, optionally exhausting all
 * net x net pairs (the rigorously-controlled part of the construction).
 *
 * The supremum over all states is not computable; the report carries the
 * sample count and seed instead. sample_pairs may be 0 only when
 * include_net_pairs is set.
 */
inline DeviationReport verify_quantum_id(const QuantumIdCode &code,
                                         std::size_t sample_pairs,
                                         bool include_net_pairs,
                                         std::uint64_t seed,
                                         double lambda_target = 0.0) {
    if (sample_pairs < 1 && !include_net_pairs) {
        throw std::invalid_argument(
            "verify_quantum_id: nothing to verify (no samples, no net pairs)");
    }
    Rng rng = make_rng(seed);
    DeviationReport report;
    report.lambda_target = lambda_target;
    report.seed = seed;
    double sum = 0.0;

    auto record = [&](double dev) {
        report.max_deviation = std::max(report.max_deviation, dev);
        sum += dev;
        ++report.samples;
    };

    for (std::size_t i = 0; i < sample_pairs; ++i) {
        const PureState pi = haar_pure_state(code.message_dim(), rng);
        const PureState tau = haar_pure_state(code.message_dim(), rng);
        record(fidelity_test_deviation(code, pi, tau));
    }

    const std::size_t n = code.net().size();
    if (include_net_pairs && n * n <= 1000000) {
        std::vector<DensityOperator> encoded;
        encoded.reserve(n);
        for (const auto &p : code.net().points()) {
            encoded.push_back(code.encode(p));
        }
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                const double ideal =
                    pure_overlap(code.net().point(i), code.net().point(j));
                const double simulated = outcome_probability(
                    encoded[i], code.decode_effect_at(j));
                record(std::abs(ideal - simulated));
            }
        }
    }
    if (report.samples == 0) {
        throw std::invalid_argument(
            "verify_quantum_id: net too large to exhaust; request samples");
    }
    report.mean_deviation = sum / static_cast<double>(report.samples);
    return report;
}

struct ConcentrationResult {
    double empirical = 0.0;
    double bound = 0.0;
    double log2_bound = 0.0;
    double slack3 = 0.0; ///< 3 binomial standard errors at the bound
    bool vacuous = false;
};

/**
 * @brief Tail check for Tr(U psi U* P) >= (1+eps) r/d under Haar U.
 *
 * psi is fixed to e_0 and P to the projector onto the first r coordinates;
 * by invariance only the distribution of the first column of U matters.
 */
inline ConcentrationResult concentration_check(Index d, Index r, double eps,
                                               std::size_t trials, Rng &rng) {
    if (r < 1 || r > d) {
        throw invalid_dimension("concentration_check: need 1 <= r <= d");
    }
    if (!(eps > 0.0)) {
        throw std::invalid_argument("concentration_check: eps must be > 0");
    }
    if (trials < 1) {
        throw std::invalid_argument("concentration_check: trials must be >= 1");
    }
    const double threshold =
        (1.0 + eps) * static_cast<double>(r) / static_cast<double>(d);
    std::size_t exceed = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        const ComplexVector u = haar_pure_state(d, rng).amplitudes();
        const double mass = u.head(r).squaredNorm();
        if (mass >= threshold) {
            ++exceed;
        }
    }
    ConcentrationResult result;
    result.empirical = static_cast<double>(exceed) / static_cast<double>(trials);
    result.log2_bound = -static_cast<double>(r) *
                        (eps - std::log1p(eps)) / std::log(2.0);
    result.bound = std::exp2(result.log2_bound);
    result.slack3 = 3.0 * std::sqrt(result.bound * (1.0 - result.bound) /
                                    static_cast<double>(trials));
    result.vacuous = result.bound >= 1.0 - 1e-12;
    return result;
}

/**
 * @brief Total-variation deviation of a simulated POVM.
 *
 * Measures max over the given states of
 *   sum_y |Tr(pi M_y) - Tr(encode(pi) M'_y)|.
 * Pure measurement of the visible-decoding criterion; no construction or
 * bound is claimed for this regime.
 */
inline double povm_simulation_deviation(const std::vector<PovmEffect> &povm,
                                        const std::vector<PovmEffect> &mapped,
                                        const QuantumIdCode &code,
                                        const std::vector<DensityOperator> &states) {
    if (povm.empty() || povm.size() != mapped.size()) {
        throw std::invalid_argument(
            "povm_simulation_deviation: POVM size mismatch");
    }
    if (states.empty()) {
        throw std::invalid_argument("povm_simulation_deviation: no states");
    }
    auto check_complete = [](const std::vector<PovmEffect> &effects,
                             Index dim) {
        ComplexMatrix sum = ComplexMatrix::Zero(dim, dim);
        for (const auto &e : effects) {
            if (e.dim() != dim) {
                throw invalid_dimension(
                    "povm_simulation_deviation: effect dimension mismatch");
            }
            sum += e.matrix();
        }
        if ((sum - ComplexMatrix::Identity(dim, dim)).cwiseAbs().maxCoeff() >
            1e-9) {
            throw std::invalid_argument(
                "povm_simulation_deviation: POVM does not sum to 1");
        }
    };
    check_complete(povm, code.message_dim());
    check_complete(mapped, code.output_dim());

    double worst = 0.0;
    for (const auto &pi : states) {
        const DensityOperator encoded = code.encode(pi);
        double total = 0.0;
        for (std::size_t y = 0; y < povm.size(); ++y) {
            total += std::abs(outcome_probability(pi, povm[y]) -
                              outcome_probability(encoded, mapped[y]));
        }
        worst = std::max(worst, total);
    }
    return worst;
}

} // namespace qid
