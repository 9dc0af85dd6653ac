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
 * Numerical evaluation of the capacity quantities that admit computable
 * single-copy form: the Holevo quantity chi via multi-start ascent, the
 * hybrid-memory identification capacity in closed form and via its
 * maximization, the coherent-information/Holevo certificate for a given
 * ensemble, net-counting converse bounds, and rate extraction.
 */

#pragma once

#include <array>
#include <optional>
#include <vector>

#include "qid/channel.hpp"
#include "qid/haar.hpp"

namespace qid {

/// chi(ensemble) = H(sum_i p_i T(rho_i)) - sum_i p_i H(T(rho_i)), in bits.
inline double chi_value(const Channel &channel, const Ensemble &ensemble) {
    if (ensemble.dim() != channel.in_dim()) {
        throw invalid_dimension("chi_value: ensemble/channel mismatch");
    }
    ComplexMatrix mean = ComplexMatrix::Zero(channel.out_dim(),
                                             channel.out_dim());
    double avg_entropy = 0.0;
    for (std::size_t i = 0; i < ensemble.probs.size(); ++i) {
        const DensityOperator out = channel.apply(ensemble.states[i]);
        mean += ensemble.probs[i] * out.matrix();
        avg_entropy += ensemble.probs[i] * von_neumann_entropy_bits(out);
    }
    return von_neumann_entropy_bits(mean) - avg_entropy;
}

struct ChiResult {
    double value = 0.0;
    std::optional<Ensemble> ensemble; ///< argmax found (pure input states)
    int restarts = 0;
    bool converged = false;
    /// optimizer trace rows (restart, sweep, value) for optional CSV output
    std::vector<std::array<double, 3>> trace;
};

namespace detail {

// Mutable optimizer state. Keeping the channel outputs, their entropies and
// the running mean lets a single-state proposal be scored with one channel
// application and two eigensolves instead of re-evaluating the ensemble.
struct ChiWorkspace {
    std::vector<ComplexMatrix> outs;
    std::vector<double> entropies;
    std::vector<double> probs;
    ComplexMatrix mean;
    double avg_entropy = 0.0;

    double chi() const {
        return von_neumann_entropy_bits(mean) - avg_entropy;
    }

    void rebuild_mean() {
        mean.setZero();
        avg_entropy = 0.0;
        for (std::size_t i = 0; i < outs.size(); ++i) {
            mean += probs[i] * outs[i];
            avg_entropy += probs[i] * entropies[i];
        }
    }
};

// One Nagaoka-style update of the probability vector for fixed states:
// p_i <- p_i 2^{D(T(rho_i) || mean)} / Z. Monotone in chi.
inline void chi_probability_update(ChiWorkspace &ws) {
    const HermitianEigensystem mes = hermitian_eigensystem(ws.mean);
    // log of the mean on its support; directions outside the support carry
    // no weight in any output with positive probability
    ComplexMatrix log_mean = ComplexMatrix::Zero(ws.mean.rows(),
                                                 ws.mean.cols());
    for (Index k = 0; k < mes.values.size(); ++k) {
        log_mean += std::log2(std::max(mes.values(k), 1e-15)) *
                    (mes.vectors.col(k) * mes.vectors.col(k).adjoint());
    }
    const std::size_t n = ws.outs.size();
    std::vector<double> exponent(n);
    double zmax = -1e300;
    for (std::size_t i = 0; i < n; ++i) {
        exponent[i] = -ws.entropies[i] -
                      (ws.outs[i] * log_mean).trace().real();
        zmax = std::max(zmax, exponent[i]);
    }
    double z = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        ws.probs[i] *= std::exp2(exponent[i] - zmax);
        z += ws.probs[i];
    }
    for (auto &p : ws.probs) {
        p /= z;
    }
    ws.rebuild_mean();
}

inline Ensemble make_pure_ensemble(const std::vector<double> &probs,
                                   const std::vector<PureState> &states) {
    std::vector<DensityOperator> rho;
    rho.reserve(states.size());
    for (const auto &s : states) {
        rho.push_back(DensityOperator::pure(s));
    }
    return Ensemble(probs, rho);
}

} // namespace detail

/**
 * @brief Multi-start maximization of the Holevo quantity.
 *
 * Alternates an exponentiated-gradient update on the probabilities with
 * local-perturbation hill climbing on the pure input states, under a
 * decreasing perturbation scale. The result is a certified lower bound: it
 * never falls below the warm start and is cross-checked against known
 * channels in the tests. chi is nonconvex in the states, hence the restarts.
 */
inline ChiResult holevo_chi(const Channel &channel, Index ensemble_size = 0,
                            int restarts = 16, double tol = 1e-9,
                            std::uint64_t seed = 1,
                            const std::optional<Ensemble> &warm_start =
                                std::nullopt,
                            bool keep_trace = false) {
    if (ensemble_size == 0) {
        ensemble_size = channel.in_dim() * channel.in_dim();
    }
    if (ensemble_size < 2) {
        throw std::invalid_argument("holevo_chi: ensemble_size must be >= 2");
    }
    constexpr int max_sweeps = 360;
    constexpr int proposals_per_state = 3;

    ChiResult result;
    result.restarts = restarts;
    double warm_value = 0.0;
    if (warm_start) {
        warm_value = chi_value(channel, *warm_start);
    }

    const Index din = channel.in_dim();
    for (int restart = 0; restart < restarts; ++restart) {
        Rng rng = derive_rng(seed, static_cast<std::uint64_t>(restart));
        std::vector<PureState> states;
        states.reserve(ensemble_size);
        detail::ChiWorkspace ws;
        ws.mean = ComplexMatrix::Zero(channel.out_dim(), channel.out_dim());
        for (Index i = 0; i < ensemble_size; ++i) {
            states.push_back(haar_pure_state(din, rng));
            ws.outs.push_back(
                channel.apply(DensityOperator::pure(states.back())).matrix());
            ws.entropies.push_back(von_neumann_entropy_bits(ws.outs.back()));
            ws.probs.push_back(1.0 / static_cast<double>(ensemble_size));
        }
        ws.rebuild_mean();

        double current = ws.chi();
        bool converged = false;
        int quiet_sweeps = 0;
        std::normal_distribution<double> normal(0.0, 1.0);
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        for (int sweep = 0; sweep < max_sweeps; ++sweep) {
            const double before = current;
            const double sweep_scale =
                std::max(0.6 * std::pow(0.97, sweep), 2e-5);

            detail::chi_probability_update(ws);
            current = ws.chi();

            for (Index i = 0; i < ensemble_size; ++i) {
                for (int prop = 0; prop < proposals_per_state; ++prop) {
                    // spread proposals over three decades below the sweep
                    // scale; optima on the boundary of state space need
                    // ever finer moves than the sweep schedule alone gives
                    const double scale =
                        sweep_scale * std::pow(10.0, -3.0 * unif(rng));
                    ComplexVector step(din);
                    for (Index k = 0; k < din; ++k) {
                        step(k) = Complex(normal(rng), normal(rng));
                    }
                    const ComplexVector &base = states[i].amplitudes();
                    // tangent step keeps the move local on the sphere
                    step -= base.dot(step) * base;
                    ComplexVector moved = base + scale * step;
                    moved /= moved.norm();
                    const PureState candidate(moved);
                    const ComplexMatrix out =
                        channel.apply(DensityOperator::pure(candidate))
                            .matrix();
                    const double h = von_neumann_entropy_bits(out);
                    const ComplexMatrix mean_trial =
                        ws.mean + ws.probs[i] * (out - ws.outs[i]);
                    const double avg_trial =
                        ws.avg_entropy + ws.probs[i] * (h - ws.entropies[i]);
                    const double trial =
                        von_neumann_entropy_bits(mean_trial) - avg_trial;
                    if (trial > current) {
                        current = trial;
                        states[i] = candidate;
                        ws.mean = mean_trial;
                        ws.avg_entropy = avg_trial;
                        ws.outs[i] = out;
                        ws.entropies[i] = h;
                    }
                }
            }
            if (keep_trace) {
                result.trace.push_back({static_cast<double>(restart),
                                        static_cast<double>(sweep), current});
            }
            // stochastic proposals stall for a sweep or two near optima, so
            // require a run of quiet sweeps before declaring convergence
            quiet_sweeps = current - before < tol ? quiet_sweeps + 1 : 0;
            if (quiet_sweeps >= 8) {
                converged = true;
                break;
            }
        }
        if (current > result.value || !result.ensemble) {
            result.value = current;
            result.ensemble = detail::make_pure_ensemble(ws.probs, states);
            result.converged = converged;
        }
    }

    if (warm_start && warm_value > result.value) {
        result.value = warm_value;
        result.ensemble = warm_start;
        result.converged = true;
    }
    result.value = std::max(0.0, result.value);
    return result;
}

struct HybridCapacityResult {
    double closed_form = 0.0;      ///< log2(sum_i d_i^2)
    double via_optimization = 0.0; ///< max_p 2 sum p_i log d_i + H(p)
    std::vector<double> argmax_p;
    double stationarity_residual = 0.0;
};

/**
 * @brief Identification capacity of a hybrid quantum memory.
 *
 * The maximizer is p_i = d_i^2 / sum_j d_j^2; the result verifies
 * stationarity and agreement of both routes within 1e-9.
 */
inline HybridCapacityResult hybrid_capacity(const HybridAlgebra &algebra) {
    HybridCapacityResult result;
    double z = 0.0;
    for (Index d : algebra.block_dims) {
        z += static_cast<double>(d) * static_cast<double>(d);
    }
    result.closed_form = std::log2(z);

    const std::size_t r = algebra.block_dims.size();
    result.argmax_p.resize(r);
    for (std::size_t i = 0; i < r; ++i) {
        const double d = static_cast<double>(algebra.block_dims[i]);
        result.argmax_p[i] = d * d / z;
    }
    double objective = 0.0;
    for (std::size_t i = 0; i < r; ++i) {
        const double d = static_cast<double>(algebra.block_dims[i]);
        objective += 2.0 * result.argmax_p[i] * std::log2(d);
    }
    objective += shannon_entropy_bits(result.argmax_p);
    result.via_optimization = objective;

    // stationarity of 2 sum p log d + H(p) on the simplex: the gradient
    // components 2 log d_i - log p_i - 1/ln 2 must all be equal
    double gmin = 1e300;
    double gmax = -1e300;
    for (std::size_t i = 0; i < r; ++i) {
        const double d = static_cast<double>(algebra.block_dims[i]);
        const double g = 2.0 * std::log2(d) - std::log2(result.argmax_p[i]);
        gmin = std::min(gmin, g);
        gmax = std::max(gmax, g);
    }
    result.stationarity_residual = gmax - gmin;
    if (std::abs(result.closed_form - result.via_optimization) > 1e-9 ||
        result.stationarity_residual > 1e-9) {
        throw std::logic_error("hybrid_capacity: routes disagree");
    }
    return result;
}

struct DsSingleLetterResult {
    double value = 0.0;                  ///< 2 I_c + I(X;B)
    double coherent_info = 0.0;          ///< unclamped; may be negative
    double coherent_info_clamped = 0.0;
    double holevo_term = 0.0;            ///< I(X;B)
    Index n = 1; ///< single-copy certificate; no regularization claimed
};

/**
 * @brief 2 I_c(A>BX) + I(X;B) for a GIVEN ensemble of bipartite pure states.
 *
 * sigma^{XAB} = sum_x p_x |x><x| (x) (id (x) T) phi_x is block diagonal in X,
 * so all entropies decompose blockwise. A lower-bound certificate only; the
 * maximization over ensembles and block lengths is not attempted.
 */
inline DsSingleLetterResult ds_single_letter(
    const Channel &channel,
    const std::vector<std::pair<double, PureState>> &inputs) {
    if (inputs.empty()) {
        throw std::invalid_argument("ds_single_letter: empty ensemble");
    }
    double psum = 0.0;
    for (const auto &[p, phi] : inputs) {
        if (p < -1e-12) {
            throw std::invalid_argument("ds_single_letter: negative weight");
        }
        psum += p;
        if (phi.dim() % channel.in_dim() != 0) {
            throw invalid_dimension(
                "ds_single_letter: state does not factor as ref x in_dim");
        }
    }
    if (std::abs(psum - 1.0) > 1e-9) {
        throw std::invalid_argument("ds_single_letter: weights must sum to 1");
    }

    const Index din = channel.in_dim();
    const Index dout = channel.out_dim();
    ComplexMatrix mean_b = ComplexMatrix::Zero(dout, dout);
    double sum_hb = 0.0;
    double sum_hab = 0.0;
    for (const auto &[p, phi] : inputs) {
        const Index dref = phi.dim() / din;
        // lift the channel to act on the second factor
        ComplexMatrix joint = ComplexMatrix::Zero(dref * dout, dref * dout);
        const ComplexMatrix phi_mat =
            phi.amplitudes() * phi.amplitudes().adjoint();
        const ComplexMatrix id_ref = ComplexMatrix::Identity(dref, dref);
        for (const auto &k : channel.kraus_ops()) {
            const ComplexMatrix lifted = kron(id_ref, k);
            joint += lifted * phi_mat * lifted.adjoint();
        }
        const ComplexMatrix sigma_b = partial_trace_first(joint, dref, dout);
        sum_hb += p * von_neumann_entropy_bits(sigma_b);
        sum_hab += p * von_neumann_entropy_bits(joint);
        mean_b += p * sigma_b;
    }

    DsSingleLetterResult result;
    // X is classical: H(sigma^{XB}) = H(p) + sum_x p_x H(sigma_x^B), likewise
    // for XAB, so I_c(A>BX) reduces to the weighted entropy differences.
    result.coherent_info = sum_hb - sum_hab;
    result.coherent_info_clamped = std::max(0.0, result.coherent_info);
    result.holevo_term = von_neumann_entropy_bits(mean_b) - sum_hb;
    result.value = 2.0 * result.coherent_info + result.holevo_term;
    return result;
}

/// log2 of the net-counting converse N <= (5/(1-l1-l2))^{2d} (pure inputs)
/// or exponent 2d^2 (general inputs).
inline double converse_bound_log2(Index d, double lambda1, double lambda2,
                                  bool pure_only) {
    if (lambda1 < 0.0 || lambda2 < 0.0) {
        throw std::invalid_argument("converse_bound: negative error bound");
    }
    if (!(lambda1 + lambda2 < 1.0)) {
        throw vacuous_bound(
            "converse_bound: vacuous for lambda1 + lambda2 >= 1");
    }
    const double dd = static_cast<double>(d);
    const double exponent = pure_only ? 2.0 * dd : 2.0 * dd * dd;
    return exponent * std::log2(5.0 / (1.0 - lambda1 - lambda2));
}

struct PairwiseDistanceReport {
    double min_pairwise = 0.0;
    double required = 0.0;
    bool pass = false;
    std::size_t pairs_checked = 0;
};

/// Any ID code with errors (l1, l2) must keep its states pairwise
/// (1 - l1 - l2)-separated in trace distance; checked exhaustively.
inline PairwiseDistanceReport pairwise_distance_check(
    const std::vector<DensityOperator> &states, double lambda1,
    double lambda2) {
    if (!(lambda1 + lambda2 < 1.0)) {
        throw vacuous_bound(
            "pairwise_distance_check: vacuous for lambda1 + lambda2 >= 1");
    }
    if (states.size() < 2) {
        throw std::invalid_argument(
            "pairwise_distance_check: need at least two states");
    }
    PairwiseDistanceReport report;
    report.required = 1.0 - lambda1 - lambda2;
    report.min_pairwise = 1e300;
    for (std::size_t i = 0; i < states.size(); ++i) {
        for (std::size_t j = i + 1; j < states.size(); ++j) {
            report.min_pairwise = std::min(
                report.min_pairwise, trace_distance(states[i], states[j]));
            ++report.pairs_checked;
        }
    }
    report.pass = report.min_pairwise >= report.required - 1e-9;
    return report;
}

enum class RateKind { id_double_log, quantum_id_log, transmission_log };

struct RateReport {
    RateKind kind = RateKind::transmission_log;
    Index n = 0;
    std::uint64_t size = 0;
    double rate = 0.0; ///< bits per channel use
};

/// (1/n) log log N for classical ID, (1/n) log S for quantum ID, and
/// (1/n) log M for transmission.
inline RateReport rate_report(RateKind kind, Index n, std::uint64_t size) {
    if (n < 1 || size < 1) {
        throw std::invalid_argument("rate_report: n and size must be >= 1");
    }
    RateReport report;
    report.kind = kind;
    report.n = n;
    report.size = size;
    const double nn = static_cast<double>(n);
    const double s = static_cast<double>(size);
    switch (kind) {
    case RateKind::id_double_log:
        if (size < 2) {
            throw undefined_rate("rate_report: log log undefined for N < 2");
        }
        report.rate = std::log2(std::log2(s)) / nn;
        break;
    case RateKind::quantum_id_log:
        report.rate = std::log2(s) / nn;
        break;
    case RateKind::transmission_log:
        report.rate = std::log2(s) / nn;
        break;
    }
    return report;
}

} // namespace qid
