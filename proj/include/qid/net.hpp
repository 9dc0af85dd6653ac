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
 * Epsilon-nets over pure states with nearest-neighbor lookup.
 *
 * Qubits get a deterministic construction: an icosahedral refinement of the
 * Bloch sphere whose covering radius is certified through per-cell spherical
 * circumradii. Trace distance between qubit pure states is the sine of half
 * the Bloch angle, so an angular covering radius theta translates to a trace
 * distance radius of sin(theta/2). Higher dimensions get random nets with an
 * empirically measured coverage certificate; a provable general-dimension
 * construction at the counting bound (5/eps)^{2d} is far too large to build.
 */

#pragma once

#include <array>
#include <map>
#include <vector>

#include "qid/haar.hpp"

namespace qid {

enum class NetStrategy { exact_qubit, random };

enum class NetCertificateKind { exact_qubit, empirical };

struct NetCertificate {
    NetCertificateKind kind = NetCertificateKind::empirical;
    std::size_t sample_count = 0;
    /// For empirical certificates: the max nearest-neighbor distance seen
    /// over fresh samples. For exact-qubit: the proven covering radius.
    double max_observed_distance = 0.0;
};

class EpsilonNet {
  public:
    EpsilonNet(Index dim, double epsilon, std::vector<PureState> points,
               NetCertificate certificate)
        : dim_(dim), epsilon_(epsilon), points_(std::move(points)),
          cert_(certificate) {
        if (points_.empty()) {
            throw std::invalid_argument("EpsilonNet: no points");
        }
        for (const auto &p : points_) {
            if (p.dim() != dim_) {
                throw invalid_dimension("EpsilonNet: point dimension mismatch");
            }
        }
    }

    Index dim() const { return dim_; }
    double epsilon() const { return epsilon_; }
    std::size_t size() const { return points_.size(); }
    const std::vector<PureState> &points() const { return points_; }
    const PureState &point(std::size_t i) const { return points_.at(i); }
    const NetCertificate &certificate() const { return cert_; }

  private:
    Index dim_;
    double epsilon_;
    std::vector<PureState> points_;
    NetCertificate cert_;
};

struct NearestResult {
    std::size_t index = 0;
    double distance = 0.0;
};

/// Argmin of trace distance over net points; ties break to the lowest index.
inline NearestResult nearest(const EpsilonNet &net, const PureState &state) {
    if (state.dim() != net.dim()) {
        throw invalid_dimension("nearest: dimension mismatch");
    }
    std::size_t best = 0;
    double best_overlap = -1.0;
    for (std::size_t i = 0; i < net.size(); ++i) {
        const double ov = pure_overlap(net.point(i), state);
        if (ov > best_overlap) {
            best_overlap = ov;
            best = i;
        }
    }
    return {best, std::sqrt(std::max(0.0, 1.0 - best_overlap))};
}

namespace detail {

using Vec3 = std::array<double, 3>;

inline Vec3 normalized(const Vec3 &v) {
    const double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    return {v[0] / n, v[1] / n, v[2] / n};
}

inline PureState bloch_to_state(const Vec3 &v) {
    const double z = std::clamp(v[2], -1.0, 1.0);
    const double theta = std::acos(z);
    const double phi = std::atan2(v[1], v[0]);
    ComplexVector amp(2);
    amp(0) = std::cos(theta / 2.0);
    amp(1) = Complex(std::cos(phi), std::sin(phi)) * std::sin(theta / 2.0);
    return PureState(amp);
}

struct IcosphereMesh {
    std::vector<Vec3> vertices;
    double covering_angle = 0.0; // max spherical circumradius over cells
};

/// Subdivide each icosahedron face into frequency^2 triangles, project to the
/// sphere, and certify the covering radius by the largest spherical
/// circumradius. Any sphere point lies in some projected cell and is within
/// that cell's circumradius of one of its corners.
inline IcosphereMesh icosphere(Index frequency) {
    const double g = (1.0 + std::sqrt(5.0)) / 2.0;
    std::vector<Vec3> base = {
        {-1, g, 0}, {1, g, 0}, {-1, -g, 0}, {1, -g, 0},
        {0, -1, g}, {0, 1, g}, {0, -1, -g}, {0, 1, -g},
        {g, 0, -1}, {g, 0, 1}, {-g, 0, -1}, {-g, 0, 1}};
    for (auto &v : base) {
        v = normalized(v);
    }
    const std::vector<std::array<int, 3>> faces = {
        {0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
        {1, 5, 9},  {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
        {3, 9, 4},  {3, 4, 2},  {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
        {4, 9, 5},  {2, 4, 11}, {6, 2, 10},  {8, 6, 7},  {9, 8, 1}};

    IcosphereMesh mesh;
    std::map<std::array<long long, 3>, std::size_t> seen;
    auto intern = [&](const Vec3 &v) {
        // Quantized key; distinct mesh vertices are far apart relative to
        // the grid so collisions cannot merge different points.
        const std::array<long long, 3> key = {
            static_cast<long long>(std::llround(v[0] * 1e9)),
            static_cast<long long>(std::llround(v[1] * 1e9)),
            static_cast<long long>(std::llround(v[2] * 1e9))};
        auto it = seen.find(key);
        if (it != seen.end()) {
            return it->second;
        }
        mesh.vertices.push_back(v);
        const std::size_t idx = mesh.vertices.size() - 1;
        seen.emplace(key, idx);
        return idx;
    };

    auto circumangle = [](const Vec3 &a, const Vec3 &b, const Vec3 &c) {
        const Vec3 ab = {b[0] - a[0], b[1] - a[1], b[2] - a[2]};
        const Vec3 ac = {c[0] - a[0], c[1] - a[1], c[2] - a[2]};
        Vec3 n = {ab[1] * ac[2] - ab[2] * ac[1],
                  ab[2] * ac[0] - ab[0] * ac[2],
                  ab[0] * ac[1] - ab[1] * ac[0]};
        n = normalized(n);
        double h = n[0] * a[0] + n[1] * a[1] + n[2] * a[2];
        if (h < 0.0) {
            h = -h;
        }
        return std::acos(std::clamp(h, -1.0, 1.0));
    };

    const Index f = frequency;
    for (const auto &face : faces) {
        const Vec3 &va = base[face[0]];
        const Vec3 &vb = base[face[1]];
        const Vec3 &vc = base[face[2]];
        // lattice point (i, j): (i*a + j*b + (f-i-j)*c) / f projected
        std::vector<std::vector<Vec3>> grid(f + 1);
        for (Index i = 0; i <= f; ++i) {
            grid[i].resize(f + 1 - i);
            for (Index j = 0; j + i <= f; ++j) {
                const double wi = static_cast<double>(i) / f;
                const double wj = static_cast<double>(j) / f;
                const double wk = 1.0 - wi - wj;
                const Vec3 p = normalized({wi * va[0] + wj * vb[0] + wk * vc[0],
                                           wi * va[1] + wj * vb[1] + wk * vc[1],
                                           wi * va[2] + wj * vb[2] + wk * vc[2]});
                grid[i][j] = p;
                intern(p);
            }
        }
        for (Index i = 0; i < f; ++i) {
            for (Index j = 0; j + i < f; ++j) {
                mesh.covering_angle =
                    std::max(mesh.covering_angle,
                             circumangle(grid[i][j], grid[i + 1][j],
                                         grid[i][j + 1]));
                if (j + i < f - 1) {
                    mesh.covering_angle = std::max(
                        mesh.covering_angle,
                        circumangle(grid[i + 1][j], grid[i + 1][j + 1],
                                    grid[i][j + 1]));
                }
            }
        }
    }
    return mesh;
}

} // namespace detail

/**
 * @brief Build an epsilon-net over the pure states of C^dim.
 *
 * exact_qubit (dim = 2 only): deterministic Bloch-sphere triangulation with a
 * certified covering radius <= epsilon in trace distance; budget caps the
 * number of points. random: budget Haar samples, with the certificate
 * recording the max nearest-neighbor distance over 10^4 fresh samples.
 */
inline EpsilonNet build_net(Index dim, double epsilon, NetStrategy strategy,
                            std::size_t budget, Rng &rng) {
    if (!(epsilon > 0.0) || epsilon > 2.0) {
        throw std::invalid_argument("build_net: epsilon outside (0, 2]");
    }
    if (budget < 1) {
        throw std::invalid_argument("build_net: budget must be >= 1");
    }
    if (strategy == NetStrategy::exact_qubit) {
        if (dim != 2) {
            throw unsupported("build_net: exact-qubit strategy needs dim 2");
        }
        if (epsilon >= 1.0) {
            // The trace-distance diameter of state space is 1.
            return EpsilonNet(
                2, epsilon, {PureState::basis(2, 0)},
                {NetCertificateKind::exact_qubit, 0, 1.0});
        }
        for (Index f = 1; f <= 4096; ++f) {
            const detail::IcosphereMesh mesh = detail::icosphere(f);
            const double radius = std::sin(mesh.covering_angle / 2.0);
            if (radius > epsilon) {
                continue;
            }
            if (mesh.vertices.size() > budget) {
                throw resource_limit(
                    "build_net: exact-qubit net exceeds point budget");
            }
            std::vector<PureState> pts;
            pts.reserve(mesh.vertices.size());
            for (const auto &v : mesh.vertices) {
                pts.push_back(detail::bloch_to_state(v));
            }
            return EpsilonNet(2, epsilon, std::move(pts),
                              {NetCertificateKind::exact_qubit, 0, radius});
        }
        throw resource_limit("build_net: refinement limit reached");
    }

    std::vector<PureState> pts;
    pts.reserve(budget);
    for (std::size_t i = 0; i < budget; ++i) {
        pts.push_back(haar_pure_state(dim, rng));
    }
    EpsilonNet net(dim, epsilon, std::move(pts),
                   {NetCertificateKind::empirical, 0, 0.0});
    constexpr std::size_t probe_count = 10000;
    double max_dist = 0.0;
    for (std::size_t i = 0; i < probe_count; ++i) {
        max_dist =
            std::max(max_dist, nearest(net, haar_pure_state(dim, rng)).distance);
    }
    return EpsilonNet(dim, epsilon, net.points(),
                      {NetCertificateKind::empirical, probe_count, max_dist});
}

/**
 * @brief Net from explicit points (e.g. code states injected so the decoder
 * is exact on them), with coverage measured rather than assumed.
 */
inline EpsilonNet net_from_points(std::vector<PureState> points, Rng &rng,
                                  std::size_t coverage_samples = 10000) {
    if (points.empty()) {
        throw std::invalid_argument("net_from_points: no points");
    }
    const Index dim = points.front().dim();
    EpsilonNet probe(dim, 2.0, std::move(points),
                     {NetCertificateKind::empirical, 0, 0.0});
    double max_dist = 0.0;
    for (std::size_t i = 0; i < coverage_samples; ++i) {
        max_dist = std::max(
            max_dist, nearest(probe, haar_pure_state(dim, rng)).distance);
    }
    return EpsilonNet(dim, max_dist, probe.points(),
                      {NetCertificateKind::empirical, coverage_samples,
                       max_dist});
}

/// log2 of the counting bound (5/eps)^{2d} for nets over pure states.
inline double pure_net_size_bound_log2(Index dim, double epsilon) {
    if (!(epsilon > 0.0) || epsilon > 2.0) {
        throw std::invalid_argument("net_size_bound: epsilon outside (0, 2]");
    }
    return 2.0 * static_cast<double>(dim) * std::log2(5.0 / epsilon);
}

/// log2 of the bound (5/eps)^{2d^2} for nets over mixed states, obtained by
/// purification.
inline double mixed_net_size_bound_log2(Index dim, double epsilon) {
    if (!(epsilon > 0.0) || epsilon > 2.0) {
        throw std::invalid_argument("net_size_bound: epsilon outside (0, 2]");
    }
    return 2.0 * static_cast<double>(dim) * static_cast<double>(dim) *
           std::log2(5.0 / epsilon);
}

} // namespace qid
