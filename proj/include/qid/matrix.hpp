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
 * Dense complex matrix aliases and small helpers used across the library.
 * Tensor index convention everywhere: the composite index of C^d (x) C^a is
 * row-major, i.e. (i, k) -> i*a + k with the second factor fastest.
 */

#pragma once

#include <complex>

#include <Eigen/Dense>

#include "qid/common.hpp"

namespace qid {

using Index = Eigen::Index;
using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;

inline bool all_finite(const ComplexMatrix &m) {
    return m.allFinite();
}

/// max |(A - A^dagger)_{ij}|; zero for exactly Hermitian input.
inline double hermiticity_error(const ComplexMatrix &m) {
    if (m.rows() != m.cols()) {
        return std::numeric_limits<double>::infinity();
    }
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

/// (A + A^dagger)/2. Guards downstream eigensolves against accumulated
/// asymmetry.
inline ComplexMatrix symmetrized(const ComplexMatrix &m) {
    return 0.5 * (m + m.adjoint());
}

inline ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Index i = 0; i < a.rows(); ++i) {
        for (Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) =
                a(i, j) * b;
        }
    }
    return out;
}

inline ComplexVector kron(const ComplexVector &a, const ComplexVector &b) {
    ComplexVector out(a.size() * b.size());
    for (Index i = 0; i < a.size(); ++i) {
        out.segment(i * b.size(), b.size()) = a(i) * b;
    }
    return out;
}

inline ComplexVector basis_vector(Index dim, Index k) {
    if (dim < 1 || k < 0 || k >= dim) {
        throw invalid_dimension("basis_vector: index out of range");
    }
    ComplexVector v = ComplexVector::Zero(dim);
    v(k) = 1.0;
    return v;
}

} // namespace qid
