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
 * Value types for quantum states, measurement effects and isometries.
 * Each constructor validates its defining invariant and throws on violation;
 * instances are immutable afterwards and safe to share across threads.
 */

#pragma once

#include <cmath>
#include <utility>

#include "qid/matrix.hpp"

namespace qid {

namespace tol {
// Construction tolerances. Looser than the per-operation contracts the tests
// assert, so legitimately accumulated error does not reject valid values.
inline constexpr double hermitian = 1e-8;
inline constexpr double trace_one = 1e-8;
inline constexpr double unit_norm = 1e-8;
inline constexpr double effect_eigenvalue = 1e-9;
inline constexpr double isometry = 1e-10;
} // namespace tol

/// Unit vector in C^d.
class PureState {
  public:
    explicit PureState(ComplexVector amplitudes)
        : amp_(std::move(amplitudes)) {
        if (amp_.size() < 1) {
            throw invalid_dimension("PureState: dimension must be positive");
        }
        if (!amp_.allFinite()) {
            throw std::invalid_argument("PureState: non-finite amplitude");
        }
        if (std::abs(amp_.norm() - 1.0) > tol::unit_norm) {
            throw std::invalid_argument("PureState: vector is not normalized");
        }
    }

    static PureState basis(Index dim, Index k) {
        return PureState(basis_vector(dim, k));
    }

    Index dim() const { return amp_.size(); }
    const ComplexVector &amplitudes() const { return amp_; }

  private:
    ComplexVector amp_;
};

/// Positive semidefinite operator of unit trace.
class DensityOperator {
  public:
    explicit DensityOperator(const ComplexMatrix &m) {
        if (m.rows() != m.cols() || m.rows() < 1) {
            throw invalid_dimension("DensityOperator: matrix must be square");
        }
        if (!all_finite(m)) {
            throw std::invalid_argument("DensityOperator: non-finite entry");
        }
        if (hermiticity_error(m) > tol::hermitian) {
            throw std::invalid_argument("DensityOperator: not Hermitian");
        }
        if (std::abs(m.trace().real() - 1.0) > tol::trace_one ||
            std::abs(m.trace().imag()) > tol::trace_one) {
            throw std::invalid_argument("DensityOperator: trace != 1");
        }
        mat_ = symmetrized(m);
    }

    static DensityOperator pure(const PureState &psi) {
        const ComplexVector &v = psi.amplitudes();
        return DensityOperator(v * v.adjoint());
    }

    static DensityOperator maximally_mixed(Index dim) {
        if (dim < 1) {
            throw invalid_dimension("maximally_mixed: dim must be positive");
        }
        return DensityOperator(ComplexMatrix::Identity(dim, dim) /
                               static_cast<double>(dim));
    }

    Index dim() const { return mat_.rows(); }
    const ComplexMatrix &matrix() const { return mat_; }

  private:
    ComplexMatrix mat_;
};

/// Measurement effect: Hermitian with spectrum in [0, 1].
class PovmEffect {
  public:
    explicit PovmEffect(const ComplexMatrix &m) {
        if (m.rows() != m.cols() || m.rows() < 1) {
            throw invalid_dimension("PovmEffect: matrix must be square");
        }
        if (!all_finite(m)) {
            throw std::invalid_argument("PovmEffect: non-finite entry");
        }
        if (hermiticity_error(m) > tol::hermitian) {
            throw std::invalid_argument("PovmEffect: not Hermitian");
        }
        mat_ = symmetrized(m);
        Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(mat_,
                                                        Eigen::EigenvaluesOnly);
        const double lo = es.eigenvalues().minCoeff();
        const double hi = es.eigenvalues().maxCoeff();
        if (lo < -tol::effect_eigenvalue || hi > 1.0 + tol::effect_eigenvalue) {
            throw std::invalid_argument(
                "PovmEffect: eigenvalues outside [0, 1]");
        }
    }

    static PovmEffect identity(Index dim) {
        return PovmEffect(ComplexMatrix::Identity(dim, dim));
    }

    Index dim() const { return mat_.rows(); }
    const ComplexMatrix &matrix() const { return mat_; }

  private:
    ComplexMatrix mat_;
};

/// V with V^dagger V = identity on the source space.
class Isometry {
  public:
    explicit Isometry(ComplexMatrix m) : mat_(std::move(m)) {
        if (mat_.rows() < mat_.cols() || mat_.cols() < 1) {
            throw invalid_dimension(
                "Isometry: target dimension smaller than source");
        }
        if (!all_finite(mat_)) {
            throw std::invalid_argument("Isometry: non-finite entry");
        }
        const ComplexMatrix gram = mat_.adjoint() * mat_;
        const double err =
            (gram - ComplexMatrix::Identity(mat_.cols(), mat_.cols()))
                .cwiseAbs()
                .maxCoeff();
        if (err > tol::isometry) {
            throw std::invalid_argument("Isometry: V^dagger V != identity");
        }
    }

    Index source_dim() const { return mat_.cols(); }
    Index target_dim() const { return mat_.rows(); }
    const ComplexMatrix &matrix() const { return mat_; }

  private:
    ComplexMatrix mat_;
};

/// Tr(rho E), guaranteed real for valid arguments.
inline double outcome_probability(const DensityOperator &rho,
                                  const PovmEffect &effect) {
    if (rho.dim() != effect.dim()) {
        throw invalid_dimension("outcome_probability: dimension mismatch");
    }
    return (rho.matrix() * effect.matrix()).trace().real();
}

} // namespace qid
