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

#pragma once

#include <cstdint>
#include <cstddef>

namespace qid {

/// Measured error probabilities of an identification code.
/// lambda1 is the worst error of first kind (rejecting the true message),
/// lambda2 the worst error of second kind over ordered pairs (accepting a
/// wrong one). lambda1_mean averages the first kind where the construction
/// makes that distinction meaningful (blow-up codes).
struct VerificationReport {
    double lambda1 = 0.0;
    double lambda1_mean = 0.0;
    double lambda2 = 0.0;
    std::size_t pairs_checked = 0;
    std::uint64_t seed = 0;
};

/// Measured deviations of a quantum-ID code from the fidelity test.
struct DeviationReport {
    std::size_t samples = 0;
    double max_deviation = 0.0;
    double mean_deviation = 0.0;
    double lambda_target = 0.0;
    std::uint64_t seed = 0;
};

} // namespace qid
