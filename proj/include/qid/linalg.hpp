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
 * Quantum-state primitives on dense complex matrices: Hermitian
 * eigendecomposition, partial traces, trace distance, fidelity, support
 * projectors and entropies. All logarithms are base 2.
 */

#pragma once

#include <cmath>
#include <vector>

#include "qid/states.hpp"

namespace qid {

struct HermitianEigensystem {
    RealVector values;      ///< ascending
    ComplexMatrix vectors;  ///< columns match values
};

/// Eigendecomposition of (A + A^dagger)/2.
inline HermitianEigensystem hermitian_eigensystem(const ComplexMatrix &m) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(symmetrized(m));
    if (es.info() != Eigen::Success) {
        throw std::runtime_error("hermitian_eigensystem: solver failed");
    }
    return {es.eigenvalues(), es.eigenvectors()};
}

inline RealVector hermitian_eigenvalues(const ComplexMatrix &m) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(symmetrized(m),
                                                    Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) {
        throw std::runtime_error("hermitian_eigenvalues: solver failed");
    }
    return es.eigenvalues();
}

/**
 * @brief Trace over the second tensor factor of a (keep_dim * trace_dim)
 * matrix.
 */
inline ComplexMatrix partial_trace_second(const ComplexMatrix &m,
                                          Index keep_dim, Index trace_dim) {
    if (keep_dim < 1 || trace_dim < 1 ||
        m.rows() != keep_dim * trace_dim || m.cols() != m.rows()) {
        throw invalid_dimension("partial_trace: dimensions do not factor");
    }
    ComplexMatrix out = ComplexMatrix::Zero(keep_dim, keep_dim);
    for (Index i = 0; i < keep_dim; ++i) {
        for (Index j = 0; j < keep_dim; ++j) {
            Complex s = 0.0;
            for (Index k = 0; k < trace_dim; ++k) {
                s += m(i * trace_dim + k, j * trace_dim + k);
            }
            out(i, j) = s;
        }
    }
    return out;
}

/// Trace over the first tensor factor of a (trace_dim * keep_dim) matrix.
inline ComplexMatrix partial_trace_first(const ComplexMatrix &m,
                                         Index trace_dim, Index keep_dim) {
    if (keep_dim < 1 || trace_dim < 1 ||
        m.rows() != keep_dim * trace_dim || m.cols() != m.rows()) {
        throw invalid_dimension("partial_trace: dimensions do not factor");
    }
    ComplexMatrix out = ComplexMatrix::Zero(keep_dim, keep_dim);
    for (Index i = 0; i < keep_dim; ++i) {
        for (Index j = 0; j < keep_dim; ++j) {
            Complex s = 0.0;
            for (Index k = 0; k < trace_dim; ++k) {
                s += m(k * keep_dim + i, k * keep_dim + j);
            }
            out(i, j) = s;
        }
    }
    return out;
}

inline DensityOperator partial_trace(const DensityOperator &state,
                                     Index keep_dim, Index trace_dim) {
    return DensityOperator(
        partial_trace_second(state.matrix(), keep_dim, trace_dim));
}

/// (1/2) || a - b ||_1 via the eigenvalues of the difference.
inline double trace_distance(const DensityOperator &a,
                             const DensityOperator &b) {
    if (a.dim() != b.dim()) {
        throw invalid_dimension("trace_distance: dimension mismatch");
    }
    const RealVector ev = hermitian_eigenvalues(a.matrix() - b.matrix());
    return 0.5 * ev.cwiseAbs().sum();
}

/// |<a|b>|^2.
inline double pure_overlap(const PureState &a, const PureState &b) {
    if (a.dim() != b.dim()) {
        throw invalid_dimension("pure_overlap: dimension mismatch");
    }
    return std::norm(a.amplitudes().dot(b.amplitudes()));
}

/// Trace distance between pure states, sqrt(1 - overlap), computed
/// analytically. Exact and cheap; used in net lookups.
inline double pure_trace_distance(const PureState &a, const PureState &b) {
    const double ov = pure_overlap(a, b);
    return std::sqrt(std::max(0.0, 1.0 - ov));
}

/// Uhlmann fidelity (Tr sqrt(sqrt(a) b sqrt(a)))^2.
inline double fidelity(const DensityOperator &a, const DensityOperator &b) {
    if (a.dim() != b.dim()) {
        throw invalid_dimension("fidelity: dimension mismatch");
    }
    const HermitianEigensystem ea = hermitian_eigensystem(a.matrix());
    const RealVector clamped = ea.values.cwiseMax(0.0);
    const ComplexMatrix sqrt_a = ea.vectors *
                                 clamped.cwiseSqrt().asDiagonal() *
                                 ea.vectors.adjoint();
    const RealVector ev =
        hermitian_eigenvalues(sqrt_a * b.matrix() * sqrt_a);
    const double root_sum = ev.cwiseMax(0.0).cwiseSqrt().sum();
    return root_sum * root_sum;
}

/**
 * @brief Projector onto the eigenspaces of rho above tol * (max eigenvalue).
 *
 * The relative default separates true support from floating-point noise at
 * the dimensions this library targets (d <= ~256).
 */
inline PovmEffect support_projector(const DensityOperator &rho,
                                    double tol_rel = 1e-10) {
    const HermitianEigensystem es = hermitian_eigensystem(rho.matrix());
    const double cutoff = tol_rel * es.values.maxCoeff();
    const Index d = rho.dim();
    ComplexMatrix proj = ComplexMatrix::Zero(d, d);
    for (Index i = 0; i < d; ++i) {
        if (es.values(i) > cutoff) {
            proj += es.vectors.col(i) * es.vectors.col(i).adjoint();
        }
    }
    return PovmEffect(proj);
}

/// H(rho) = -Tr rho log2 rho, with 0 log 0 = 0.
inline double von_neumann_entropy_bits(const ComplexMatrix &rho) {
    const RealVector ev = hermitian_eigenvalues(rho);
    double h = 0.0;
    for (Index i = 0; i < ev.size(); ++i) {
        if (ev(i) > 1e-15) {
            h -= ev(i) * std::log2(ev(i));
        }
    }
    return h;
}

inline double von_neumann_entropy_bits(const DensityOperator &rho) {
    return von_neumann_entropy_bits(rho.matrix());
}

inline double shannon_entropy_bits(const std::vector<double> &p) {
    double h = 0.0;
    for (double x : p) {
        if (x > 1e-15) {
            h -= x * std::log2(x);
        }
    }
    return h;
}

/// Binary relative entropy D(p || q) in bits.
inline double binary_relative_entropy_bits(double p, double q) {
    if (p < 0.0 || p > 1.0 || q <= 0.0 || q >= 1.0) {
        throw std::invalid_argument(
            "binary_relative_entropy: arguments outside domain");
    }
    double d = 0.0;
    if (p > 0.0) {
        d += p * std::log2(p / q);
    }
    if (p < 1.0) {
        d += (1.0 - p) * std::log2((1.0 - p) / (1.0 - q));
    }
    return d;
}

} // namespace qid
