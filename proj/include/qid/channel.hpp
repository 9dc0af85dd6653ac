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
 * Quantum channels in operator-sum (Kraus) form, the standard constructors
 * used throughout, tensor powers with an explicit memory budget, and the
 * hybrid-memory algebra descriptor.
 */

#pragma once

#include <numeric>
#include <vector>

#include "qid/linalg.hpp"

namespace qid {

/// Completely positive trace-preserving map, stored as Kraus operators.
class Channel {
  public:
    Channel(std::vector<ComplexMatrix> kraus_ops, Index in_dim, Index out_dim)
        : kraus_(std::move(kraus_ops)), in_(in_dim), out_(out_dim) {
        if (in_ < 1 || out_ < 1 || kraus_.empty()) {
            throw invalid_dimension("Channel: empty Kraus set or bad dims");
        }
        ComplexMatrix sum = ComplexMatrix::Zero(in_, in_);
        for (const auto &k : kraus_) {
            if (k.rows() != out_ || k.cols() != in_ || !all_finite(k)) {
                throw invalid_dimension("Channel: Kraus operator shape");
            }
            sum += k.adjoint() * k;
        }
        if ((sum - ComplexMatrix::Identity(in_, in_)).cwiseAbs().maxCoeff() >
            1e-9) {
            throw std::invalid_argument("Channel: not trace preserving");
        }
    }

    Index in_dim() const { return in_; }
    Index out_dim() const { return out_; }
    const std::vector<ComplexMatrix> &kraus_ops() const { return kraus_; }

    /// sum_k K rho K^dagger.
    DensityOperator apply(const DensityOperator &state) const {
        if (state.dim() != in_) {
            throw invalid_dimension("Channel::apply: dimension mismatch");
        }
        ComplexMatrix out = ComplexMatrix::Zero(out_, out_);
        for (const auto &k : kraus_) {
            out += k * state.matrix() * k.adjoint();
        }
        return DensityOperator(out);
    }

  private:
    std::vector<ComplexMatrix> kraus_;
    Index in_;
    Index out_;
};

inline Channel identity_channel(Index dim) {
    return Channel({ComplexMatrix::Identity(dim, dim)}, dim, dim);
}

/// Completely dephasing channel: zeroes all off-diagonal entries.
inline Channel dephasing_channel(Index dim) {
    std::vector<ComplexMatrix> kraus;
    kraus.reserve(dim);
    for (Index k = 0; k < dim; ++k) {
        ComplexMatrix p = ComplexMatrix::Zero(dim, dim);
        p(k, k) = 1.0;
        kraus.push_back(std::move(p));
    }
    return Channel(std::move(kraus), dim, dim);
}

/**
 * @brief Depolarizing channel rho -> (1-p) rho + p I/d.
 *
 * Kraus set built from the discrete Weyl (shift/clock) unitaries, which
 * average any input to the maximally mixed state.
 */
inline Channel depolarizing_channel(Index dim, double p) {
    if (p < 0.0 || p > 1.0) {
        throw std::invalid_argument("depolarizing_channel: p outside [0,1]");
    }
    const double d = static_cast<double>(dim);
    ComplexMatrix shift = ComplexMatrix::Zero(dim, dim);
    ComplexMatrix clock = ComplexMatrix::Zero(dim, dim);
    for (Index k = 0; k < dim; ++k) {
        shift((k + 1) % dim, k) = 1.0;
        const double angle = 2.0 * M_PI * static_cast<double>(k) / d;
        clock(k, k) = Complex(std::cos(angle), std::sin(angle));
    }
    std::vector<ComplexMatrix> kraus;
    kraus.reserve(dim * dim);
    kraus.push_back(std::sqrt(1.0 - p + p / (d * d)) *
                    ComplexMatrix::Identity(dim, dim));
    ComplexMatrix xj = ComplexMatrix::Identity(dim, dim);
    for (Index j = 0; j < dim; ++j) {
        ComplexMatrix w = xj;
        for (Index k = 0; k < dim; ++k) {
            if (j != 0 || k != 0) {
                kraus.push_back(std::sqrt(p / (d * d)) * w);
            }
            w = w * clock;
        }
        xj = shift * xj;
    }
    return Channel(std::move(kraus), dim, dim);
}

/**
 * @brief Channel with classical input: measures in the computational basis
 * and emits the row state W_x for outcome x.
 */
inline Channel cq_channel(const std::vector<DensityOperator> &rows) {
    if (rows.empty()) {
        throw invalid_dimension("cq_channel: no rows");
    }
    const Index in = static_cast<Index>(rows.size());
    const Index out = rows.front().dim();
    std::vector<ComplexMatrix> kraus;
    for (Index x = 0; x < in; ++x) {
        if (rows[x].dim() != out) {
            throw invalid_dimension("cq_channel: row dimensions differ");
        }
        const HermitianEigensystem es = hermitian_eigensystem(rows[x].matrix());
        for (Index m = 0; m < out; ++m) {
            if (es.values(m) > 1e-14) {
                ComplexMatrix k = ComplexMatrix::Zero(out, in);
                k.col(x) = std::sqrt(es.values(m)) * es.vectors.col(m);
                kraus.push_back(std::move(k));
            }
        }
    }
    return Channel(std::move(kraus), in, out);
}

/**
 * @brief n-fold tensor power. The Kraus set is all n-fold products.
 *
 * Fails loudly rather than thrash: throws resource_limit if the expanded
 * Kraus set would exceed budget_entries complex numbers.
 */
inline Channel tensor_power(const Channel &channel, Index n,
                            std::size_t budget_entries = (1u << 24)) {
    if (n < 1) {
        throw std::invalid_argument("tensor_power: n must be >= 1");
    }
    const double k = static_cast<double>(channel.kraus_ops().size());
    const double entries =
        std::pow(k, static_cast<double>(n)) *
        std::pow(static_cast<double>(channel.out_dim()),
                 static_cast<double>(n)) *
        std::pow(static_cast<double>(channel.in_dim()),
                 static_cast<double>(n));
    if (entries > static_cast<double>(budget_entries)) {
        throw resource_limit("tensor_power: memory budget exceeded");
    }
    std::vector<ComplexMatrix> cur = {ComplexMatrix::Ones(1, 1)};
    Index in = 1;
    Index out = 1;
    for (Index step = 0; step < n; ++step) {
        std::vector<ComplexMatrix> next;
        next.reserve(cur.size() * channel.kraus_ops().size());
        for (const auto &a : cur) {
            for (const auto &b : channel.kraus_ops()) {
                next.push_back(kron(a, b));
            }
        }
        cur = std::move(next);
        in *= channel.in_dim();
        out *= channel.out_dim();
    }
    return Channel(std::move(cur), in, out);
}

/// Direct sum of full matrix blocks; stores mixed classical-quantum data.
struct HybridAlgebra {
    std::vector<Index> block_dims;

    explicit HybridAlgebra(std::vector<Index> dims)
        : block_dims(std::move(dims)) {
        if (block_dims.empty()) {
            throw invalid_dimension("HybridAlgebra: needs at least one block");
        }
        for (Index d : block_dims) {
            if (d < 1) {
                throw invalid_dimension("HybridAlgebra: block dims must be >= 1");
            }
        }
    }
};

/// Input ensemble {p_i, rho_i} for the Holevo quantity.
struct Ensemble {
    std::vector<double> probs;
    std::vector<DensityOperator> states;

    Ensemble(std::vector<double> p, std::vector<DensityOperator> s)
        : probs(std::move(p)), states(std::move(s)) {
        if (probs.empty() || probs.size() != states.size()) {
            throw invalid_dimension("Ensemble: probs/states size mismatch");
        }
        double sum = 0.0;
        for (double x : probs) {
            if (x < -1e-12) {
                throw std::invalid_argument("Ensemble: negative probability");
            }
            sum += x;
        }
        if (std::abs(sum - 1.0) > 1e-12) {
            throw std::invalid_argument("Ensemble: probabilities must sum to 1");
        }
        const Index d = states.front().dim();
        for (const auto &st : states) {
            if (st.dim() != d) {
                throw invalid_dimension("Ensemble: state dimensions differ");
            }
        }
    }

    Index dim() const { return states.front().dim(); }
};

} // namespace qid
