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
 * Error types and seeded random-number plumbing shared by every module.
 */

#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace qid {

/// Dimension preconditions violated (mismatched or non-factoring sizes).
class invalid_dimension : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Parameter schedule collapsed to nothing (e.g. a floor hit zero).
class degenerate_parameters : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A configured memory or size budget would be exceeded.
class resource_limit : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// The requested bound carries no information in this parameter range.
class vacuous_bound : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Requested strategy or combination is not implemented for these inputs.
class unsupported : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Rate expression undefined for the given size (log log of N < 2).
class undefined_rate : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// All randomized operations draw from this generator type. Identical seeds
/// give identical results for a fixed binary.
using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t &state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline Rng make_rng(std::uint64_t seed) { return Rng(seed); }

/**
 * @brief Generator for one of several independent streams under a root seed.
 *
 * Parallel or repeated sub-tasks must not share a stream; deriving by
 * (root, stream) keeps runs reproducible while decorrelating workers.
 */
inline Rng derive_rng(std::uint64_t root_seed, std::uint64_t stream) {
    std::uint64_t s = root_seed;
    std::uint64_t a = splitmix64(s);
    s ^= 0x632be59bd9b4e019ULL * (stream + 1);
    std::uint64_t b = splitmix64(s);
    return Rng(a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2)));
}

} // namespace qid
