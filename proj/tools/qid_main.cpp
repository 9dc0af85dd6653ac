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

// Command-line front end. Every run emits one JSON report:
//   {"command", "params", "result", "seed", "version", "meta": {...}}
// meta holds the volatile fields (timestamp, duration); everything else is
// byte-identical across runs with equal parameters and seed. Exit codes:
// 0 success, 1 invalid input, 2 constraint violation (a construction ran but
// missed its target, or a parameter schedule degenerated).

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qid/qid.hpp"
#include "qid/serialize.hpp"

namespace {

using qid::Index;
using qid::Json;
using qid::Rng;

std::uint64_t default_seed() {
    if (const char *env = std::getenv("QID_SEED")) {
        return std::strtoull(env, nullptr, 10);
    }
    return 1;
}

Json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open file: " + path);
    }
    Json j;
    in >> j;
    return j;
}

// Channel descriptors: identity:d | dephasing:d | depolarizing:d:p |
// cq:path | file:path
qid::Channel parse_channel(const std::string &spec) {
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ':')) {
        parts.push_back(item);
    }
    if (parts.empty()) {
        throw std::invalid_argument("empty channel spec");
    }
    const std::string &kind = parts[0];
    if (kind == "identity" && parts.size() == 2) {
        return qid::identity_channel(std::stoll(parts[1]));
    }
    if (kind == "dephasing" && parts.size() == 2) {
        return qid::dephasing_channel(std::stoll(parts[1]));
    }
    if (kind == "depolarizing" && parts.size() == 3) {
        return qid::depolarizing_channel(std::stoll(parts[1]),
                                         std::stod(parts[2]));
    }
    if (kind == "cq" && parts.size() == 2) {
        std::vector<qid::DensityOperator> rows;
        for (const auto &r : read_json_file(parts[1])) {
            rows.push_back(qid::density_from_json(r));
        }
        return qid::cq_channel(rows);
    }
    if (kind == "file" && parts.size() == 2) {
        return qid::channel_from_json(read_json_file(parts[1]));
    }
    throw std::invalid_argument("unrecognized channel spec: " + spec);
}

// ---------------------------------------------------------------------------
// runners: params json in, result json out. Shared by subcommands and sweep.

Json run_construct_ad(const Json &p) {
    Rng rng = qid::make_rng(p.at("seed").get<std::uint64_t>());
    const qid::AdBuildResult r = qid::ad_construct(
        p.at("M").get<Index>(), p.at("eps").get<double>(),
        p.at("lambda").get<double>(), p.at("target").get<std::size_t>(), rng,
        p.value("budget", std::size_t{0}));
    const qid::VerificationReport v = qid::verify_classical_id(r.code);
    return Json{{"code", qid::to_json(r.code)},
                {"complete", r.complete},
                {"attempts_used", r.attempts_used},
                {"achieved_n", r.code.sets.size()},
                {"hypothesis_value",
                 qid::ad_hypothesis_value(p.at("eps").get<double>(),
                                          p.at("lambda").get<double>())},
                {"verification", qid::to_json(v)}};
}

Json run_construct_fingerprint(const Json &p) {
    Rng rng = qid::make_rng(p.at("seed").get<std::uint64_t>());
    const qid::FingerprintBuildResult r = qid::build_fingerprint_code(
        p.at("d").get<Index>(), p.at("eps").get<double>(),
        p.at("lambda").get<double>(), p.at("target").get<std::size_t>(), rng,
        p.value("override_hypothesis", false),
        p.value("budget", std::size_t{0}));
    return Json{{"code", qid::to_json(r.code)},
                {"complete", r.complete},
                {"achieved_n", r.code.states.size()},
                {"max_overlap", r.code.max_overlap}};
}

Json run_construct_mixed(const Json &p) {
    Rng rng = qid::make_rng(p.at("seed").get<std::uint64_t>());
    std::optional<Index> s_override;
    if (p.contains("S")) {
        s_override = p.at("S").get<Index>();
    }
    std::optional<Index> a_override;
    if (p.contains("a")) {
        a_override = p.at("a").get<Index>();
    }
    const qid::MixedBuildResult r = qid::build_mixed_code(
        p.at("d").get<Index>(), p.at("lambda").get<double>(), s_override,
        p.at("target").get<std::size_t>(), rng, p.value("eps", 0.25),
        a_override, p.value("net_extra", std::size_t{0}));
    const qid::MixedIdCode &code = *r.code;
    return Json{{"S", code.embedding.message_dim()},
                {"d", code.embedding.output_dim()},
                {"a", code.embedding.ancilla_dim()},
                {"achieved_n", code.states.size()},
                {"complete", r.complete},
                {"inner_max_overlap", code.inner.max_overlap},
                {"measured", qid::to_json(code.measured)},
                {"code", qid::to_json(code)}};
}

Json run_construct_quantum_id(const Json &p) {
    Rng rng = qid::make_rng(p.at("seed").get<std::uint64_t>());
    const qid::QuantumIdCode code = qid::build_quantum_id(
        p.at("S").get<Index>(), p.at("d").get<Index>(), p.at("a").get<Index>(),
        p.value("net_budget", std::size_t{32}), rng);
    const qid::DeviationReport quick = qid::verify_quantum_id(
        code, 128, false, p.at("seed").get<std::uint64_t>() ^ 0xdeadu);
    return Json{{"code", qid::to_json(code)},
                {"quick_deviation", qid::to_json(quick)}};
}

Json run_construct_blowup(const Json &p) {
    Rng rng = qid::make_rng(p.at("seed").get<std::uint64_t>());
    std::vector<qid::DensityOperator> states;
    std::vector<qid::PovmEffect> effects;
    double lambda2_base = 0.0;
    if (p.contains("base")) {
        // fingerprint code file: pure states with their own projectors
        const qid::FingerprintCode fp =
            qid::fingerprint_from_json(read_json_file(p.at("base").get<std::string>()));
        for (const auto &psi : fp.states) {
            states.push_back(qid::DensityOperator::pure(psi));
            effects.emplace_back(states.back().matrix());
        }
        lambda2_base = fp.max_overlap;
    } else {
        // synthetic orthogonal base of size N: exactly known error 0
        const Index n = p.at("basis").get<Index>();
        for (Index i = 0; i < n; ++i) {
            states.push_back(
                qid::DensityOperator::pure(qid::PureState::basis(n, i)));
            effects.emplace_back(states.back().matrix());
        }
    }
    const qid::BlowupBuildResult r = qid::blowup(
        states, effects, p.value("lambda2_base", lambda2_base),
        p.at("M").get<Index>(), p.at("eps").get<double>(),
        p.at("target").get<std::size_t>(), rng,
        p.value("budget", std::size_t{0}));
    const qid::VerificationReport v = qid::verify_blowup(r.code);
    return Json{{"code", qid::to_json(r.code)},
                {"complete", r.complete},
                {"achieved_n", r.code.functions.size()},
                {"verification", qid::to_json(v)}};
}

Json run_construct_simultaneous(const Json &p) {
    const qid::ClassicalIdCode code =
        qid::classical_code_from_json(read_json_file(p.at("code").get<std::string>()));
    std::vector<qid::PovmEffect> povm;
    if (p.contains("povm")) {
        for (const auto &e : read_json_file(p.at("povm").get<std::string>())) {
            povm.push_back(qid::effect_from_json(e));
        }
    } else {
        for (Index k = 0; k < code.ground_size; ++k) {
            qid::ComplexMatrix e = qid::ComplexMatrix::Zero(code.ground_size,
                                                            code.ground_size);
            e(k, k) = 1.0;
            povm.emplace_back(e);
        }
    }
    const qid::SimultaneousCode sim =
        qid::simultaneous_from_transmission(povm, code);
    Json effects = Json::array();
    for (const auto &e : sim.effects) {
        effects.push_back(qid::to_json(e));
    }
    return Json{{"effects", std::move(effects)},
                {"partition", sim.partition}};
}

Json run_verify_classical(const Json &p) {
    const qid::ClassicalIdCode code =
        qid::classical_code_from_json(read_json_file(p.at("in").get<std::string>()));
    return qid::to_json(qid::verify_classical_id(code));
}

Json run_verify_fingerprint(const Json &p) {
    const qid::FingerprintCode code =
        qid::fingerprint_from_json(read_json_file(p.at("in").get<std::string>()));
    double worst = 0.0;
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < code.states.size(); ++i) {
        for (std::size_t j = 0; j < code.states.size(); ++j) {
            if (i != j) {
                worst = std::max(worst, qid::pure_overlap(code.states[i],
                                                          code.states[j]));
                ++pairs;
            }
        }
    }
    return Json{{"lambda1", 0.0},
                {"lambda2", worst},
                {"pairs_checked", pairs},
                {"matches_recorded", std::abs(worst - code.max_overlap) < 1e-12}};
}

Json run_verify_quantum_id(const Json &p) {
    const qid::QuantumIdCode code =
        qid::quantum_id_from_json(read_json_file(p.at("in").get<std::string>()));
    const qid::DeviationReport r = qid::verify_quantum_id(
        code, p.value("pairs", std::size_t{1000}),
        p.value("net_pairs", false), p.at("seed").get<std::uint64_t>(),
        p.value("lambda_target", 0.0));
    return qid::to_json(r);
}

void atomic_write(const std::string &path, const std::string &payload);

Json run_capacity_chi(const Json &p) {
    const qid::Channel channel =
        parse_channel(p.at("channel").get<std::string>());
    const bool want_trace =
        p.value("keep_trace", false) || p.contains("trace_csv");
    const qid::ChiResult r = qid::holevo_chi(
        channel, p.value("ensemble_size", Index{0}),
        p.value("restarts", 16), p.value("tol", 1e-9),
        p.at("seed").get<std::uint64_t>(), std::nullopt, want_trace);
    Json out{{"value", r.value},
             {"restarts", r.restarts},
             {"converged", r.converged},
             {"out_dim_log2", std::log2(static_cast<double>(channel.out_dim()))}};
    if (p.value("keep_trace", false)) {
        Json trace = Json::array();
        for (const auto &row : r.trace) {
            trace.push_back({row[0], row[1], row[2]});
        }
        out["trace"] = std::move(trace);
    }
    if (p.contains("trace_csv")) {
        std::ostringstream csv;
        csv << "restart,sweep,value\n";
        for (const auto &row : r.trace) {
            csv << static_cast<int>(row[0]) << ","
                << static_cast<int>(row[1]) << "," << row[2] << "\n";
        }
        atomic_write(p.at("trace_csv").get<std::string>(), csv.str());
        out["trace_csv"] = p.at("trace_csv");
    }
    return out;
}

Json run_capacity_hybrid(const Json &p) {
    const qid::HybridCapacityResult r =
        qid::hybrid_capacity(qid::HybridAlgebra(
            p.at("dims").get<std::vector<Index>>()));
    return Json{{"closed_form", r.closed_form},
                {"via_optimization", r.via_optimization},
                {"argmax_p", r.argmax_p},
                {"stationarity_residual", r.stationarity_residual}};
}

Json run_capacity_ds(const Json &p) {
    const qid::Channel channel =
        parse_channel(p.at("channel").get<std::string>());
    std::vector<std::pair<double, qid::PureState>> inputs;
    for (const auto &item : read_json_file(p.at("ensemble").get<std::string>())) {
        inputs.emplace_back(item.at("prob").get<double>(),
                            qid::pure_state_from_json(item.at("state")));
    }
    const qid::DsSingleLetterResult r = qid::ds_single_letter(channel, inputs);
    return Json{{"value", r.value},
                {"coherent_info", r.coherent_info},
                {"coherent_info_clamped", r.coherent_info_clamped},
                {"holevo_term", r.holevo_term},
                {"n", r.n}};
}

Json run_capacity_converse(const Json &p) {
    const double log2_bound = qid::converse_bound_log2(
        p.at("d").get<Index>(), p.at("lambda1").get<double>(),
        p.at("lambda2").get<double>(), p.value("pure", false));
    return Json{{"log2_bound", log2_bound}};
}

Json run_montecarlo_concentration(const Json &p) {
    Rng rng = qid::make_rng(p.at("seed").get<std::uint64_t>());
    const qid::ConcentrationResult r = qid::concentration_check(
        p.at("d").get<Index>(), p.at("r").get<Index>(),
        p.at("eps").get<double>(), p.at("trials").get<std::size_t>(), rng);
    return Json{{"empirical", r.empirical},
                {"bound", r.bound},
                {"log2_bound", r.log2_bound},
                {"slack3", r.slack3},
                {"within_bound", r.empirical <= r.bound + r.slack3},
                {"vacuous", r.vacuous}};
}

Json run_montecarlo_sanov(const Json &p) {
    Rng rng = qid::make_rng(p.at("seed").get<std::uint64_t>());
    const qid::SanovMcResult r = qid::sanov_monte_carlo(
        p.at("M").get<Index>(), p.at("N").get<Index>(),
        p.at("eps").get<double>(), p.at("trials").get<std::size_t>(), rng);
    Json out{{"empirical_tail", r.empirical_tail},
             {"bound_valid", r.bound_valid}};
    if (r.bound_valid) {
        out["bound"] = r.bound;
        out["log2_bound"] = r.log2_bound;
        out["slack3"] = r.slack3;
        out["within_bound"] = r.empirical_tail <= r.bound + r.slack3;
    }
    return out;
}

Json run_net_build(const Json &p) {
    Rng rng = qid::make_rng(p.at("seed").get<std::uint64_t>());
    const std::string strategy = p.value("strategy", "random");
    qid::NetStrategy s;
    if (strategy == "exact-qubit") {
        s = qid::NetStrategy::exact_qubit;
    } else if (strategy == "random") {
        s = qid::NetStrategy::random;
    } else {
        throw std::invalid_argument("unknown net strategy: " + strategy);
    }
    const qid::EpsilonNet net =
        qid::build_net(p.at("dim").get<Index>(), p.at("eps").get<double>(), s,
                       p.value("budget", std::size_t{1000}), rng);
    return Json{{"net", qid::to_json(net)},
                {"size", net.size()},
                {"size_log2", std::log2(static_cast<double>(net.size()))},
                {"pure_bound_log2",
                 qid::pure_net_size_bound_log2(p.at("dim").get<Index>(),
                                               p.at("eps").get<double>())}};
}

Json run_rate(const Json &p) {
    const std::string kind = p.at("kind").get<std::string>();
    qid::RateKind k;
    if (kind == "id-double-log") {
        k = qid::RateKind::id_double_log;
    } else if (kind == "quantum-id-log") {
        k = qid::RateKind::quantum_id_log;
    } else if (kind == "transmission-log") {
        k = qid::RateKind::transmission_log;
    } else {
        throw std::invalid_argument("unknown rate kind: " + kind);
    }
    const qid::RateReport r =
        qid::rate_report(k, p.at("n").get<Index>(),
                         p.at("size").get<std::uint64_t>());
    return Json{{"kind", kind}, {"n", r.n}, {"size", r.size},
                {"rate", r.rate}};
}

const std::map<std::string, std::function<Json(const Json &)>> &runners() {
    static const std::map<std::string, std::function<Json(const Json &)>> r = {
        {"construct ad", run_construct_ad},
        {"construct fingerprint", run_construct_fingerprint},
        {"construct mixed", run_construct_mixed},
        {"construct quantum-id", run_construct_quantum_id},
        {"construct blowup", run_construct_blowup},
        {"construct simultaneous", run_construct_simultaneous},
        {"verify classical", run_verify_classical},
        {"verify fingerprint", run_verify_fingerprint},
        {"verify quantum-id", run_verify_quantum_id},
        {"capacity chi", run_capacity_chi},
        {"capacity hybrid", run_capacity_hybrid},
        {"capacity ds", run_capacity_ds},
        {"capacity converse", run_capacity_converse},
        {"montecarlo concentration", run_montecarlo_concentration},
        {"montecarlo sanov", run_montecarlo_sanov},
        {"net build", run_net_build},
        {"rate", run_rate},
    };
    return r;
}

// ---------------------------------------------------------------------------
// report envelope and output

std::string iso_timestamp() {
    const std::time_t now =
        std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void atomic_write(const std::string &path, const std::string &payload) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw std::runtime_error("cannot write: " + tmp);
        }
        out << payload;
    }
    std::filesystem::rename(tmp, path);
}

int emit_report(const std::string &command, const Json &params,
                const std::string &out_path) {
    const auto start = std::chrono::steady_clock::now();
    Json result;
    int code = 0;
    try {
        result = runners().at(command)(params);
    } catch (const qid::degenerate_parameters &e) {
        result = Json{{"error", e.what()}, {"kind", "degenerate-parameters"}};
        code = 2;
    }
    if (code == 0 && result.is_object() && !result.value("complete", true)) {
        code = 2; // construction ran but missed its target
    }
    const auto stop = std::chrono::steady_clock::now();
    Json report{
        {"command", command},
        {"params", params},
        {"result", std::move(result)},
        {"seed", params.value("seed", std::uint64_t{0})},
        {"version", qid::kVersion},
        {"meta",
         Json{{"timestamp", iso_timestamp()},
              {"duration_ms",
               std::chrono::duration<double, std::milli>(stop - start)
                   .count()}}}};
    const std::string payload = report.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << payload;
    } else {
        atomic_write(out_path, payload);
    }
    return code;
}

// ---------------------------------------------------------------------------
// sweep: cartesian grid over one command, CSV out

void flatten_scalars(const Json &j, const std::string &prefix,
                     std::map<std::string, std::string> &out) {
    if (j.is_object()) {
        for (const auto &[k, v] : j.items()) {
            flatten_scalars(v, prefix.empty() ? k : prefix + "." + k, out);
        }
    } else if (j.is_number() || j.is_boolean() || j.is_string()) {
        out[prefix] = j.is_string() ? j.get<std::string>() : j.dump();
    }
}

int run_sweep(const std::string &config_path, const std::string &out_path) {
    const Json config = read_json_file(config_path);
    const std::string command = config.at("command").get<std::string>();
    if (runners().find(command) == runners().end()) {
        throw std::invalid_argument("sweep: unknown command " + command);
    }
    const Json fixed = config.value("fixed", Json::object());
    const Json grid = config.value("grid", Json::object());

    std::vector<std::string> grid_keys;
    for (const auto &[k, v] : grid.items()) {
        if (!v.is_array()) {
            throw std::invalid_argument("sweep: grid values must be arrays");
        }
        grid_keys.push_back(k);
    }

    std::vector<Json> points;
    std::function<void(std::size_t, Json)> expand = [&](std::size_t level,
                                                        Json point) {
        if (level == grid_keys.size()) {
            points.push_back(std::move(point));
            return;
        }
        for (const auto &value : grid.at(grid_keys[level])) {
            Json next = point;
            next[grid_keys[level]] = value;
            expand(level + 1, next);
        }
    };
    expand(0, Json::object());
    if (grid_keys.empty()) {
        points.clear(); // an empty grid sweeps nothing
    }

    std::vector<std::map<std::string, std::string>> rows;
    std::vector<std::string> columns = grid_keys;
    for (const auto &point : points) {
        Json params = fixed;
        for (const auto &[k, v] : point.items()) {
            params[k] = v;
        }
        if (!params.contains("seed")) {
            params["seed"] = default_seed();
        }
        const Json result = runners().at(command)(params);
        std::map<std::string, std::string> row;
        for (const auto &[k, v] : point.items()) {
            row[k] = v.dump();
        }
        flatten_scalars(result, "", row);
        for (const auto &[k, v] : row) {
            if (std::find(columns.begin(), columns.end(), k) ==
                columns.end()) {
                columns.push_back(k);
            }
        }
        rows.push_back(std::move(row));
    }

    std::ostringstream csv;
    for (std::size_t c = 0; c < columns.size(); ++c) {
        csv << (c ? "," : "") << columns[c];
    }
    csv << "\n";
    for (const auto &row : rows) {
        for (std::size_t c = 0; c < columns.size(); ++c) {
            csv << (c ? "," : "");
            const auto it = row.find(columns[c]);
            if (it != row.end()) {
                csv << it->second;
            }
        }
        csv << "\n";
    }
    if (out_path.empty()) {
        std::cout << csv.str();
    } else {
        atomic_write(out_path, csv.str());
    }
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"identification codes over quantum channels"};
    app.require_subcommand(1);

    std::string out_path;
    app.add_option("--out", out_path, "write the report here (default stdout)")
        ->capture_default_str();

    std::string pending_command;
    Json params;

    auto add_seed = [&](CLI::App *cmd) {
        auto seed = std::make_shared<std::uint64_t>(default_seed());
        cmd->add_option("--seed", *seed, "RNG seed (env QID_SEED)");
        // the final callback slot is taken by each subcommand's param capture
        cmd->parse_complete_callback([&params, seed] { params["seed"] = *seed; });
        return cmd;
    };

    // construct -------------------------------------------------------------
    auto *construct = app.add_subcommand("construct", "build a code");
    construct->require_subcommand(1);
    {
        auto *ad = add_seed(construct->add_subcommand(
            "ad", "subset-construction classical ID code"));
        auto vals = std::make_shared<Json>();
        ad->add_option_function<Index>(
              "--M", [vals](Index v) { (*vals)["M"] = v; }, "ground set size")
            ->required();
        ad->add_option_function<double>(
              "--eps", [vals](double v) { (*vals)["eps"] = v; },
              "subset density")
            ->required();
        ad->add_option_function<double>(
              "--lambda", [vals](double v) { (*vals)["lambda"] = v; },
              "second-kind error target")
            ->required();
        ad->add_option_function<std::size_t>(
              "--target", [vals](std::size_t v) { (*vals)["target"] = v; },
              "number of sets requested")
            ->required();
        ad->add_option_function<std::size_t>(
            "--budget", [vals](std::size_t v) { (*vals)["budget"] = v; },
            "attempt budget (default 50x target)");
        ad->final_callback([&, vals] {
            pending_command = "construct ad";
            params.update(*vals);
        });
    }
    {
        auto *fp = add_seed(construct->add_subcommand(
            "fingerprint", "pure-state fingerprint ID code"));
        auto vals = std::make_shared<Json>();
        fp->add_option_function<Index>(
              "--d", [vals](Index v) { (*vals)["d"] = v; }, "dimension")
            ->required();
        fp->add_option_function<double>(
              "--eps", [vals](double v) { (*vals)["eps"] = v; },
              "subset density")
            ->required();
        fp->add_option_function<double>(
              "--lambda", [vals](double v) { (*vals)["lambda"] = v; },
              "overlap target")
            ->required();
        fp->add_option_function<std::size_t>(
              "--target", [vals](std::size_t v) { (*vals)["target"] = v; },
              "number of fingerprints")
            ->required();
        fp->add_flag_function(
            "--override-hypothesis",
            [vals](std::int64_t) { (*vals)["override_hypothesis"] = true; },
            "construct even when lambda log2(1/eps - 1) <= 4");
        fp->final_callback([&, vals] {
            pending_command = "construct fingerprint";
            params.update(*vals);
        });
    }
    {
        auto *mx = add_seed(construct->add_subcommand(
            "mixed", "mixed-state code via quantum-ID embedding"));
        auto vals = std::make_shared<Json>();
        mx->add_option_function<Index>(
              "--d", [vals](Index v) { (*vals)["d"] = v; }, "output dimension")
            ->required();
        mx->add_option_function<double>(
              "--lambda", [vals](double v) { (*vals)["lambda"] = v; },
              "total error target")
            ->required();
        mx->add_option_function<Index>(
            "--S", [vals](Index v) { (*vals)["S"] = v; },
            "message dimension override (asymptotic schedule otherwise)");
        mx->add_option_function<Index>(
            "--a", [vals](Index v) { (*vals)["a"] = v; },
            "ancilla dimension override");
        mx->add_option_function<double>(
            "--eps", [vals](double v) { (*vals)["eps"] = v; },
            "inner subset density (default 0.25)");
        mx->add_option_function<std::size_t>(
            "--net-extra", [vals](std::size_t v) { (*vals)["net_extra"] = v; },
            "extra random net points");
        mx->add_option_function<std::size_t>(
              "--target", [vals](std::size_t v) { (*vals)["target"] = v; },
              "number of messages")
            ->required();
        mx->final_callback([&, vals] {
            pending_command = "construct mixed";
            params.update(*vals);
        });
    }
    {
        auto *qi = add_seed(construct->add_subcommand(
            "quantum-id", "random-isometry quantum-ID code"));
        auto vals = std::make_shared<Json>();
        qi->add_option_function<Index>(
              "--S", [vals](Index v) { (*vals)["S"] = v; }, "message dimension")
            ->required();
        qi->add_option_function<Index>(
              "--d", [vals](Index v) { (*vals)["d"] = v; }, "output dimension")
            ->required();
        qi->add_option_function<Index>(
              "--a", [vals](Index v) { (*vals)["a"] = v; }, "ancilla dimension")
            ->required();
        qi->add_option_function<std::size_t>(
            "--net-budget",
            [vals](std::size_t v) { (*vals)["net_budget"] = v; },
            "random net points (default 32)");
        qi->final_callback([&, vals] {
            pending_command = "construct quantum-id";
            params.update(*vals);
        });
    }
    {
        auto *bl = add_seed(construct->add_subcommand(
            "blowup", "extend a base code over a classical register"));
        auto vals = std::make_shared<Json>();
        bl->add_option_function<std::string>(
            "--base", [vals](const std::string &v) { (*vals)["base"] = v; },
            "fingerprint code JSON to blow up");
        bl->add_option_function<Index>(
            "--basis", [vals](Index v) { (*vals)["basis"] = v; },
            "or: synthetic orthogonal base of this size");
        bl->add_option_function<Index>(
              "--M", [vals](Index v) { (*vals)["M"] = v; },
              "classical register dimension")
            ->required();
        bl->add_option_function<double>(
              "--eps", [vals](double v) { (*vals)["eps"] = v; },
              "second-kind slack")
            ->required();
        bl->add_option_function<std::size_t>(
              "--target", [vals](std::size_t v) { (*vals)["target"] = v; },
              "number of functions")
            ->required();
        bl->final_callback([&, vals] {
            pending_command = "construct blowup";
            params.update(*vals);
        });
    }
    {
        auto *sim = add_seed(construct->add_subcommand(
            "simultaneous", "coarse-grain a POVM through a classical code"));
        auto vals = std::make_shared<Json>();
        sim->add_option_function<std::string>(
               "--code", [vals](const std::string &v) { (*vals)["code"] = v; },
               "classical ID code JSON")
            ->required();
        sim->add_option_function<std::string>(
            "--povm", [vals](const std::string &v) { (*vals)["povm"] = v; },
            "POVM JSON (default: computational basis)");
        sim->final_callback([&, vals] {
            pending_command = "construct simultaneous";
            params.update(*vals);
        });
    }

    // verify ----------------------------------------------------------------
    auto *verify = app.add_subcommand("verify", "verify a stored code");
    verify->require_subcommand(1);
    for (const std::string kind : {"classical", "fingerprint"}) {
        auto *v = add_seed(
            verify->add_subcommand(kind, "exhaustive verification"));
        auto vals = std::make_shared<Json>();
        v->add_option_function<std::string>(
             "--in", [vals](const std::string &s) { (*vals)["in"] = s; },
             "code JSON file")
            ->required();
        v->final_callback([&, vals, kind] {
            pending_command = "verify " + kind;
            params.update(*vals);
        });
    }
    {
        auto *v = add_seed(
            verify->add_subcommand("quantum-id", "Monte Carlo verification"));
        auto vals = std::make_shared<Json>();
        v->add_option_function<std::string>(
             "--in", [vals](const std::string &s) { (*vals)["in"] = s; },
             "code JSON file")
            ->required();
        v->add_option_function<std::size_t>(
            "--pairs", [vals](std::size_t n) { (*vals)["pairs"] = n; },
            "Haar sample pairs (default 1000)");
        v->add_flag_function(
            "--net-pairs",
            [vals](std::int64_t) { (*vals)["net_pairs"] = true; },
            "also exhaust all net x net pairs");
        v->add_option_function<double>(
            "--lambda-target",
            [vals](double x) { (*vals)["lambda_target"] = x; },
            "record the target in the report");
        v->final_callback([&, vals] {
            pending_command = "verify quantum-id";
            params.update(*vals);
        });
    }

    // capacity ----------------------------------------------------------------
    auto *capacity = app.add_subcommand("capacity", "capacity quantities");
    capacity->require_subcommand(1);
    {
        auto *chi = add_seed(
            capacity->add_subcommand("chi", "Holevo quantity, multi-start"));
        auto vals = std::make_shared<Json>();
        chi->add_option_function<std::string>(
               "--channel",
               [vals](const std::string &s) { (*vals)["channel"] = s; },
               "identity:d | dephasing:d | depolarizing:d:p | cq:file | "
               "file:path")
            ->required();
        chi->add_option_function<Index>(
            "--ensemble-size",
            [vals](Index n) { (*vals)["ensemble_size"] = n; },
            "default in_dim^2");
        chi->add_option_function<int>(
            "--restarts", [vals](int n) { (*vals)["restarts"] = n; },
            "default 16");
        chi->add_option_function<double>(
            "--tol", [vals](double x) { (*vals)["tol"] = x; }, "default 1e-9");
        chi->add_flag_function(
            "--keep-trace",
            [vals](std::int64_t) { (*vals)["keep_trace"] = true; },
            "include the optimizer trace in the report");
        chi->add_option_function<std::string>(
            "--trace-csv",
            [vals](const std::string &s) { (*vals)["trace_csv"] = s; },
            "write the (restart, sweep, value) trace as CSV");
        chi->final_callback([&, vals] {
            pending_command = "capacity chi";
            params.update(*vals);
        });
    }
    {
        auto *hy = add_seed(capacity->add_subcommand(
            "hybrid", "hybrid-memory ID capacity"));
        auto dims = std::make_shared<std::vector<Index>>();
        hy->add_option("--dims", *dims, "block dimensions, e.g. 2,3")
            ->required()
            ->delimiter(',');
        hy->final_callback([&, dims] {
            pending_command = "capacity hybrid";
            params["dims"] = *dims;
        });
    }
    {
        auto *ds = add_seed(capacity->add_subcommand(
            "ds", "2 Ic + I(X;B) certificate for a given ensemble"));
        auto vals = std::make_shared<Json>();
        ds->add_option_function<std::string>(
              "--channel",
              [vals](const std::string &s) { (*vals)["channel"] = s; },
              "channel descriptor")
            ->required();
        ds->add_option_function<std::string>(
              "--ensemble",
              [vals](const std::string &s) { (*vals)["ensemble"] = s; },
              "JSON list of {prob, state} with bipartite states")
            ->required();
        ds->final_callback([&, vals] {
            pending_command = "capacity ds";
            params.update(*vals);
        });
    }
    {
        auto *cv = add_seed(capacity->add_subcommand(
            "converse", "net-counting converse bound"));
        auto vals = std::make_shared<Json>();
        cv->add_option_function<Index>(
              "--d", [vals](Index v) { (*vals)["d"] = v; }, "dimension")
            ->required();
        cv->add_option_function<double>(
              "--lambda1", [vals](double v) { (*vals)["lambda1"] = v; },
              "first-kind error")
            ->required();
        cv->add_option_function<double>(
              "--lambda2", [vals](double v) { (*vals)["lambda2"] = v; },
              "second-kind error")
            ->required();
        cv->add_flag_function(
            "--pure", [vals](std::int64_t) { (*vals)["pure"] = true; },
            "pure-state code variant (exponent 2d instead of 2d^2)");
        cv->final_callback([&, vals] {
            pending_command = "capacity converse";
            params.update(*vals);
        });
    }

    // montecarlo --------------------------------------------------------------
    auto *mc = app.add_subcommand("montecarlo", "tail-bound experiments");
    mc->require_subcommand(1);
    {
        auto *con = add_seed(mc->add_subcommand(
            "concentration", "Haar projector-overlap tail vs bound"));
        auto vals = std::make_shared<Json>();
        con->add_option_function<Index>(
               "--d", [vals](Index v) { (*vals)["d"] = v; }, "dimension")
            ->required();
        con->add_option_function<Index>(
               "--r", [vals](Index v) { (*vals)["r"] = v; }, "projector rank")
            ->required();
        con->add_option_function<double>(
               "--eps", [vals](double v) { (*vals)["eps"] = v; },
               "relative threshold")
            ->required();
        con->add_option_function<std::size_t>(
               "--trials", [vals](std::size_t v) { (*vals)["trials"] = v; },
               "Haar samples")
            ->required();
        con->final_callback([&, vals] {
            pending_command = "montecarlo concentration";
            params.update(*vals);
        });
    }
    {
        auto *sv = add_seed(
            mc->add_subcommand("sanov", "agreement-fraction tail vs bound"));
        auto vals = std::make_shared<Json>();
        sv->add_option_function<Index>(
              "--M", [vals](Index v) { (*vals)["M"] = v; }, "register size")
            ->required();
        sv->add_option_function<Index>(
              "--N", [vals](Index v) { (*vals)["N"] = v; }, "alphabet size")
            ->required();
        sv->add_option_function<double>(
              "--eps", [vals](double v) { (*vals)["eps"] = v; },
              "agreement threshold")
            ->required();
        sv->add_option_function<std::size_t>(
              "--trials", [vals](std::size_t v) { (*vals)["trials"] = v; },
              "trials")
            ->required();
        sv->final_callback([&, vals] {
            pending_command = "montecarlo sanov";
            params.update(*vals);
        });
    }

    // net / rate / sweep --------------------------------------------------------
    auto *netcmd = app.add_subcommand("net", "epsilon-nets");
    netcmd->require_subcommand(1);
    {
        auto *nb = add_seed(netcmd->add_subcommand("build", "build a net"));
        auto vals = std::make_shared<Json>();
        nb->add_option_function<Index>(
              "--dim", [vals](Index v) { (*vals)["dim"] = v; }, "dimension")
            ->required();
        nb->add_option_function<double>(
              "--eps", [vals](double v) { (*vals)["eps"] = v; }, "radius")
            ->required();
        nb->add_option_function<std::string>(
            "--strategy",
            [vals](const std::string &s) { (*vals)["strategy"] = s; },
            "exact-qubit | random (default)");
        nb->add_option_function<std::size_t>(
            "--budget", [vals](std::size_t v) { (*vals)["budget"] = v; },
            "points (random) or cap (exact-qubit)");
        nb->final_callback([&, vals] {
            pending_command = "net build";
            params.update(*vals);
        });
    }
    {
        auto *rt = add_seed(app.add_subcommand("rate", "rate extraction"));
        auto vals = std::make_shared<Json>();
        rt->add_option_function<std::string>(
              "--kind", [vals](const std::string &s) { (*vals)["kind"] = s; },
              "id-double-log | quantum-id-log | transmission-log")
            ->required();
        rt->add_option_function<Index>(
              "--n", [vals](Index v) { (*vals)["n"] = v; }, "block length")
            ->required();
        rt->add_option_function<std::uint64_t>(
              "--size", [vals](std::uint64_t v) { (*vals)["size"] = v; },
              "N, S or M")
            ->required();
        rt->final_callback([&, vals] {
            pending_command = "rate";
            params.update(*vals);
        });
    }
    std::string sweep_config;
    {
        auto *sw = app.add_subcommand("sweep", "grid sweep to CSV");
        sw->add_option("--config", sweep_config, "grid config JSON")
            ->required();
        sw->final_callback([&] { pending_command = "sweep"; });
    }

    // let --out appear after a subcommand as well as before it
    std::function<void(CLI::App *)> enable_fallthrough = [&](CLI::App *a) {
        a->fallthrough();
        for (CLI::App *sub : a->get_subcommands([](CLI::App *) { return true; })) {
            enable_fallthrough(sub);
        }
    };
    enable_fallthrough(&app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (pending_command == "sweep") {
            return run_sweep(sweep_config, out_path);
        }
        return emit_report(pending_command, params, out_path);
    } catch (const qid::degenerate_parameters &e) {
        std::cerr << "degenerate-parameters: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
