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
 * Haar-distributed unitaries, isometries and pure states.
 *
 * Sampling is by QR factorization of a complex standard-Gaussian matrix with
 * the phase convention that makes the factorization unique (diagonal of the
 * triangular factor real positive). Without that correction the naive QR
 * output is not Haar distributed.
 */

#pragma once

#include "qid/linalg.hpp"

namespace qid {

/// target_dim x source_dim matrix of i.i.d. CN(0, 1) entries, filled in
/// row-major order so draws are reproducible for a given seed.
inline ComplexMatrix complex_gaussian(Index rows, Index cols, Rng &rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    ComplexMatrix g(rows, cols);
    for (Index i = 0; i < rows; ++i) {
        for (Index j = 0; j < cols; ++j) {
            const double re = normal(rng);
            const double im = normal(rng);
            g(i, j) = Complex(re, im);
        }
    }
    return g;
}

/**
 * @brief Haar-random isometry C^source -> C^target.
 *
 * Distributed as the first source_dim columns of a Haar unitary.
 */
inline Isometry random_isometry(Index source_dim, Index target_dim, Rng &rng) {
    if (source_dim < 1 || target_dim < 1) {
        throw invalid_dimension("random_isometry: dimensions must be >= 1");
    }
    if (source_dim > target_dim) {
        throw invalid_dimension(
            "random_isometry: source dimension exceeds target");
    }
    const ComplexMatrix g = complex_gaussian(target_dim, source_dim, rng);
    Eigen::HouseholderQR<ComplexMatrix> qr(g);
    ComplexMatrix q = qr.householderQ() *
                      ComplexMatrix::Identity(target_dim, source_dim);
    for (Index j = 0; j < source_dim; ++j) {
        const Complex r = qr.matrixQR()(j, j);
        const double mag = std::abs(r);
        if (mag > 0.0) {
            q.col(j) *= r / mag;
        }
    }
    return Isometry(std::move(q));
}

/// Haar-random unitary on C^dim.
inline ComplexMatrix haar_unitary(Index dim, Rng &rng) {
    if (dim < 1) {
        throw invalid_dimension("haar_unitary: dim must be >= 1");
    }
    return random_isometry(dim, dim, rng).matrix();
}

/// Uniformly random pure state (single column of a Haar unitary).
inline PureState haar_pure_state(Index dim, Rng &rng) {
    return PureState(random_isometry(1, dim, rng).matrix().col(0));
}

} // namespace qid
