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
 * JSON encoding of every value the CLI reads or writes. Matrices and states
 * use {"rows", "cols", "re": [[..]], "im": [[..]]} in row-major order; states
 * are d x 1 matrices. Parsing validates through the type constructors, so a
 * file that decodes is a file that satisfies the invariants.
 */

#pragma once

#include <string>

#include <json.hpp>

#include "qid/channel.hpp"
#include "qid/classical_id.hpp"
#include "qid/fingerprint.hpp"
#include "qid/net.hpp"
#include "qid/quantum_id.hpp"

namespace qid {

using Json = nlohmann::json;

inline Json matrix_to_json(const ComplexMatrix &m) {
    Json re = Json::array();
    Json im = Json::array();
    for (Index i = 0; i < m.rows(); ++i) {
        Json rrow = Json::array();
        Json irow = Json::array();
        for (Index j = 0; j < m.cols(); ++j) {
            rrow.push_back(m(i, j).real());
            irow.push_back(m(i, j).imag());
        }
        re.push_back(std::move(rrow));
        im.push_back(std::move(irow));
    }
    return Json{{"rows", m.rows()}, {"cols", m.cols()},
                {"re", std::move(re)}, {"im", std::move(im)}};
}

inline ComplexMatrix matrix_from_json(const Json &j) {
    const Index rows = j.at("rows").get<Index>();
    const Index cols = j.at("cols").get<Index>();
    if (rows < 1 || cols < 1) {
        throw std::invalid_argument("matrix_from_json: bad dimensions");
    }
    const auto &re = j.at("re");
    const auto &im = j.at("im");
    if (re.size() != static_cast<std::size_t>(rows) ||
        im.size() != static_cast<std::size_t>(rows)) {
        throw std::invalid_argument("matrix_from_json: row count mismatch");
    }
    ComplexMatrix m(rows, cols);
    for (Index i = 0; i < rows; ++i) {
        const auto &rrow = re.at(i);
        const auto &irow = im.at(i);
        if (rrow.size() != static_cast<std::size_t>(cols) ||
            irow.size() != static_cast<std::size_t>(cols)) {
            throw std::invalid_argument(
                "matrix_from_json: column count mismatch");
        }
        for (Index jcol = 0; jcol < cols; ++jcol) {
            m(i, jcol) = Complex(rrow.at(jcol).get<double>(),
                                 irow.at(jcol).get<double>());
        }
    }
    return m;
}

inline Json to_json(const PureState &s) {
    ComplexMatrix column(s.dim(), 1);
    column.col(0) = s.amplitudes();
    return matrix_to_json(column);
}

inline PureState pure_state_from_json(const Json &j) {
    const ComplexMatrix m = matrix_from_json(j);
    if (m.cols() != 1) {
        throw std::invalid_argument("pure_state_from_json: not a column");
    }
    return PureState(m.col(0));
}

inline Json to_json(const DensityOperator &rho) {
    return matrix_to_json(rho.matrix());
}

inline DensityOperator density_from_json(const Json &j) {
    return DensityOperator(matrix_from_json(j));
}

inline Json to_json(const PovmEffect &e) { return matrix_to_json(e.matrix()); }

inline PovmEffect effect_from_json(const Json &j) {
    return PovmEffect(matrix_from_json(j));
}

inline Json to_json(const Channel &ch) {
    Json kraus = Json::array();
    for (const auto &k : ch.kraus_ops()) {
        kraus.push_back(matrix_to_json(k));
    }
    return Json{{"in_dim", ch.in_dim()},
                {"out_dim", ch.out_dim()},
                {"kraus", std::move(kraus)}};
}

inline Channel channel_from_json(const Json &j) {
    std::vector<ComplexMatrix> kraus;
    for (const auto &k : j.at("kraus")) {
        kraus.push_back(matrix_from_json(k));
    }
    return Channel(std::move(kraus), j.at("in_dim").get<Index>(),
                   j.at("out_dim").get<Index>());
}

inline Json to_json(const NetCertificate &c) {
    return Json{{"kind", c.kind == NetCertificateKind::exact_qubit
                             ? "exact-qubit"
                             : "empirical"},
                {"sample_count", c.sample_count},
                {"max_observed_distance", c.max_observed_distance}};
}

inline NetCertificate certificate_from_json(const Json &j) {
    NetCertificate c;
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "exact-qubit") {
        c.kind = NetCertificateKind::exact_qubit;
    } else if (kind == "empirical") {
        c.kind = NetCertificateKind::empirical;
    } else {
        throw std::invalid_argument("certificate_from_json: unknown kind");
    }
    c.sample_count = j.at("sample_count").get<std::size_t>();
    c.max_observed_distance = j.at("max_observed_distance").get<double>();
    return c;
}

inline Json to_json(const EpsilonNet &net) {
    Json points = Json::array();
    for (const auto &p : net.points()) {
        points.push_back(to_json(p));
    }
    return Json{{"dim", net.dim()},
                {"epsilon", net.epsilon()},
                {"certificate", to_json(net.certificate())},
                {"points", std::move(points)}};
}

inline EpsilonNet net_from_json(const Json &j) {
    std::vector<PureState> points;
    for (const auto &p : j.at("points")) {
        points.push_back(pure_state_from_json(p));
    }
    return EpsilonNet(j.at("dim").get<Index>(), j.at("epsilon").get<double>(),
                      std::move(points),
                      certificate_from_json(j.at("certificate")));
}

inline Json to_json(const ClassicalIdCode &code) {
    return Json{{"M", code.ground_size},
                {"set_size", code.set_size},
                {"sets", code.sets},
                {"lambda2_target", code.lambda2_target}};
}

inline ClassicalIdCode classical_code_from_json(const Json &j) {
    ClassicalIdCode code;
    code.ground_size = j.at("M").get<Index>();
    code.set_size = j.at("set_size").get<Index>();
    code.sets = j.at("sets").get<std::vector<std::vector<std::uint32_t>>>();
    code.lambda2_target = j.at("lambda2_target").get<double>();
    code.validate();
    return code;
}

inline Json to_json(const BlowupCode &code) {
    Json states = Json::array();
    for (const auto &s : code.base_states) {
        states.push_back(to_json(s));
    }
    Json effects = Json::array();
    for (const auto &e : code.base_effects) {
        effects.push_back(to_json(e));
    }
    return Json{{"M", code.classical_dim},
                {"base_states", std::move(states)},
                {"base_effects", std::move(effects)},
                {"functions", code.functions}};
}

inline BlowupCode blowup_from_json(const Json &j) {
    BlowupCode code;
    code.classical_dim = j.at("M").get<Index>();
    for (const auto &s : j.at("base_states")) {
        code.base_states.push_back(density_from_json(s));
    }
    for (const auto &e : j.at("base_effects")) {
        code.base_effects.push_back(effect_from_json(e));
    }
    code.functions =
        j.at("functions").get<std::vector<std::vector<std::uint32_t>>>();
    return code;
}

inline Json to_json(const QuantumIdCode &code) {
    return Json{{"S", code.message_dim()},
                {"d", code.output_dim()},
                {"a", code.ancilla_dim()},
                {"V", matrix_to_json(code.encoder().matrix())},
                {"net", to_json(code.net())}};
}

/// The decoder cache is intentionally not serialized: it is recomputed from
/// (V, net) on construction, which is also what keeps it honest.
inline QuantumIdCode quantum_id_from_json(const Json &j) {
    return QuantumIdCode(j.at("S").get<Index>(), j.at("d").get<Index>(),
                         j.at("a").get<Index>(),
                         Isometry(matrix_from_json(j.at("V"))),
                         net_from_json(j.at("net")));
}

inline Json to_json(const FingerprintCode &code) {
    Json states = Json::array();
    for (const auto &s : code.states) {
        states.push_back(to_json(s));
    }
    return Json{{"dim", code.dim},
                {"states", std::move(states)},
                {"base", to_json(code.base)},
                {"max_overlap", code.max_overlap},
                {"lambda_target", code.lambda_target}};
}

inline FingerprintCode fingerprint_from_json(const Json &j) {
    FingerprintCode code;
    code.dim = j.at("dim").get<Index>();
    for (const auto &s : j.at("states")) {
        code.states.push_back(pure_state_from_json(s));
    }
    code.base = classical_code_from_json(j.at("base"));
    code.max_overlap = j.at("max_overlap").get<double>();
    code.lambda_target = j.at("lambda_target").get<double>();
    return code;
}

inline Json to_json(const VerificationReport &r);

/// Mixed codes serialize as the chain that defines them: the inner
/// fingerprint code plus the embedding. States and effects are recomputable.
inline Json to_json(const MixedIdCode &code) {
    return Json{{"inner", to_json(code.inner)},
                {"embedding", to_json(code.embedding)},
                {"measured", to_json(code.measured)}};
}

inline MixedIdCode mixed_code_from_json(const Json &j) {
    const FingerprintCode inner = fingerprint_from_json(j.at("inner"));
    QuantumIdCode embedding = quantum_id_from_json(j.at("embedding"));
    std::vector<DensityOperator> states;
    std::vector<PovmEffect> effects;
    for (const auto &psi : inner.states) {
        states.push_back(embedding.encode(psi));
        effects.push_back(embedding.decode_effect(psi));
    }
    VerificationReport measured;
    measured.lambda1 = j.at("measured").at("lambda1").get<double>();
    measured.lambda1_mean = j.at("measured").at("lambda1_mean").get<double>();
    measured.lambda2 = j.at("measured").at("lambda2").get<double>();
    measured.pairs_checked =
        j.at("measured").at("pairs_checked").get<std::size_t>();
    measured.seed = j.at("measured").at("seed").get<std::uint64_t>();
    return MixedIdCode{inner, std::move(embedding), std::move(states),
                       std::move(effects), measured};
}

inline Json to_json(const VerificationReport &r) {
    return Json{{"lambda1", r.lambda1},
                {"lambda1_mean", r.lambda1_mean},
                {"lambda2", r.lambda2},
                {"pairs_checked", r.pairs_checked},
                {"seed", r.seed}};
}

inline Json to_json(const DeviationReport &r) {
    return Json{{"samples", r.samples},
                {"max_deviation", r.max_deviation},
                {"mean_deviation", r.mean_deviation},
                {"lambda_target", r.lambda_target},
                {"seed", r.seed}};
}

} // namespace qid
