// Copyright 2026 The symcomm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "commands.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <mutex>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "acceptance.h"
#include "symcomm/analysis.h"
#include "symcomm/composed.h"
#include "symcomm/descriptors.h"
#include "symcomm/errors.h"
#include "symcomm/search.h"
#include "symcomm/sparse.h"
#include "workloads.h"

using namespace symcomm;
using namespace symcomm::tools;
using nlohmann::json;

namespace {

const std::vector<std::string> kProtocols = {"find-one", "find-exact", "find-more", "composed", "sym-and", "sparse-intersect"};

CostMode parse_mode(const std::string &mode) {
    if (mode == "sim") {
        return CostMode::sim;
    }
    if (mode == "ledger") {
        return CostMode::ledger;
    }
    throw InputError("mode must be sim or ledger, got '" + mode + "'");
}

RandomnessModel parse_model(const std::string &model) {
    if (model == "shared") {
        return RandomnessModel::shared;
    }
    if (model == "private") {
        return RandomnessModel::private_only;
    }
    throw InputError("model must be shared or private, got '" + model + "'");
}

void check_protocol(const std::string &protocol) {
    if (std::find(kProtocols.begin(), kProtocols.end(), protocol) == kProtocols.end()) {
        throw InputError("unknown protocol '" + protocol + "'");
    }
}

json ledger_json(const CostLedger &l) {
    return {{"qubits_sim", l.qubits_sim},
            {"qubits_claimed", l.qubits_claimed},
            {"classical_bits", l.classical_bits},
            {"shared_random_bits", l.shared_random_bits},
            {"epr_pairs", l.epr_pairs},
            {"rounds", l.rounds}};
}

// Bit strings for one-bit inputs, otherwise comma-separated integers.
std::vector<std::uint32_t> parse_inputs(const std::string &text, unsigned width, const char *who) {
    if (text.empty()) {
        throw InputError(std::string("missing --") + who);
    }
    std::vector<std::uint32_t> out;
    if (width == 1 && text.find(',') == std::string::npos) {
        for (char c : BitString::parse(text).str()) {
            out.push_back(c == '1');
        }
        return out;
    }
    for (auto v : parse_size_list(text)) {
        if (v >> width) {
            throw InputError(std::string("--") + who + " value " + std::to_string(v) + " does not fit in " + std::to_string(width) + " bits");
        }
        out.push_back(static_cast<std::uint32_t>(v));
    }
    return out;
}

BitString parse_bits(const std::string &text, const char *who) {
    if (text.empty()) {
        throw InputError(std::string("missing --") + who);
    }
    return BitString::parse(text);
}

std::size_t require(const std::optional<std::size_t> &v, const char *name) {
    if (!v) {
        throw InputError(std::string("missing --") + name);
    }
    return *v;
}

void check_n(const Settings &s, std::size_t n) {
    if (s.n && *s.n != n) {
        throw InputError("--n " + std::to_string(*s.n) + " disagrees with input length " + std::to_string(n));
    }
}

json find_json(const FindResult &r) {
    return r.is_found() ? json{{"kind", "found"}, {"index", *r.index}} : json{{"kind", "none"}};
}

struct Execution {
    json outcome;
    json oracle;
    bool match = false;
    CostLedger ledger;
    std::string short_outcome;
};

// Runs one protocol on fully specified inputs.
Execution execute(const std::string &protocol, const Settings &s, const Instance *instance, const BitString *x, const BitString *y, RandomTape &tape) {
    SearchOptions options;
    options.mode = parse_mode(s.mode);
    Channel channel(false);
    Execution e;
    if (protocol == "find-one" || protocol == "find-exact" || protocol == "find-more") {
        FindResult r;
        if (protocol == "find-one") {
            r = find_one(*instance, tape, channel, options);
        } else if (protocol == "find-exact") {
            r = find_exact(*instance, require(s.gamma, "gamma"), tape, channel, options);
        } else {
            r = find_more(*instance, require(s.k, "k"), tape, channel, options);
        }
        auto marked = instance->marked_set();
        e.outcome = find_json(r);
        e.oracle = {{"marked", marked}};
        e.match = r.is_found() ? instance->marked(*r.index) : marked.empty();
        e.short_outcome = r.is_found() ? std::to_string(*r.index) : "none";
    } else if (protocol == "composed") {
        auto f = parse_outer(s.f, instance->size());
        bool v = compute_composed(f, *instance, tape, channel, options);
        bool truth = eval_composed(f, *instance);
        e.outcome = {{"value", v}};
        e.oracle = {{"value", truth}};
        e.match = v == truth;
        e.short_outcome = v ? "1" : "0";
    } else if (protocol == "sym-and") {
        auto f = parse_outer(s.f, x->size());
        bool v = compute_sym_and(f, *x, *y, parse_model(s.model), tape, channel, options);
        bool truth = f(*x & *y);
        e.outcome = {{"value", v}};
        e.oracle = {{"value", truth}};
        e.match = v == truth;
        e.short_outcome = v ? "1" : "0";
    } else {
        std::size_t k = s.k ? *s.k : std::max(x->weight(), y->weight());
        auto r = sparse_intersect(*x, *y, k, tape, channel);
        auto truth = (*x & *y).support();
        e.outcome = {{"aborted", r.aborted}, {"alice", r.alice}, {"bob", r.bob}};
        e.oracle = {{"intersection", truth}};
        e.match = !r.aborted && r.alice == truth && r.bob == truth;
        e.short_outcome = r.aborted ? "abort" : std::to_string(r.alice.size());
    }
    e.ledger = channel.ledger();
    return e;
}

std::string csv_row(std::size_t row, const std::string &protocol, const Settings &s, std::size_t n, std::size_t k, std::uint64_t seed, const Execution &e) {
    const auto &l = e.ledger;
    std::ostringstream out;
    out << row << ',' << protocol << ',' << n << ',' << k << ',' << s.f << ',' << s.g << ',' << s.mode << ',' << seed << ',' << (e.match ? 1 : 0) << ','
        << e.short_outcome << ',' << l.qubits_sim << ',' << l.qubits_claimed << ',' << l.classical_bits << ',' << l.shared_random_bits << ',' << l.epr_pairs << ','
        << l.rounds;
    return out.str();
}

}  // namespace

void tools::apply_config(Settings &s, const json &config) {
    if (!config.is_object()) {
        throw InputError("config must be a JSON object");
    }
    for (const auto &[raw, value] : config.items()) {
        std::string key = raw;
        std::replace(key.begin(), key.end(), '_', '-');
        try {
            auto text = [&] { return value.is_string() ? value.get<std::string>() : value.dump(); };
            if (key == "seed") {
                s.seed = value.get<std::uint64_t>();
            } else if (key == "mode") {
                s.mode = value.get<std::string>();
            } else if (key == "out") {
                s.out = value.get<std::string>();
            } else if (key == "f") {
                s.f = value.get<std::string>();
            } else if (key == "g") {
                s.g = value.get<std::string>();
            } else if (key == "n") {
                s.n = value.get<std::size_t>();
            } else if (key == "x") {
                s.x = value.get<std::string>();
            } else if (key == "y") {
                s.y = value.get<std::string>();
            } else if (key == "k") {
                s.k = value.get<std::size_t>();
            } else if (key == "gamma") {
                s.gamma = value.get<std::size_t>();
            } else if (key == "model") {
                s.model = value.get<std::string>();
            } else if (key == "n-list") {
                s.n_list = text();
            } else if (key == "k-list") {
                s.k_list = text();
            } else if (key == "trials") {
                s.trials = value.get<std::size_t>();
            } else if (key == "only") {
                s.only = text();
            } else if (key == "json") {
                s.json_out = value.get<std::string>();
            } else if (key == "wallclock") {
                s.wallclock = value.get<bool>();
            } else {
                throw InputError("unknown config key '" + raw + "'");
            }
        } catch (const json::exception &ex) {
            throw InputError("config key '" + raw + "': " + ex.what());
        }
    }
}

json tools::cmd_analyze(const Settings &s) {
    auto f = parse_outer(s.f, s.n);
    auto rep = analyze(f);
    auto bound = fooling_set_bound(rep.n, rep.l1);
    json fooling = {{"log2_size", rep.fooling_log}, {"log2_log2_size", bound.log_log_size}};
    if (bound.size) {
        fooling["size"] = bound.size->str();
    }
    return {{"f", s.f},
            {"n", rep.n},
            {"l0", rep.l0},
            {"l1", rep.l1},
            {"bounds", "class representatives with unit constants"},
            {"query_bound", rep.query_bound},
            {"razborov", rep.razborov},
            {"fooling_set", fooling},
            {"classification", std::string(to_string(rep.classification))},
            {"private_lower", {{"regime", std::string(to_string(rep.regime))}, {"value", rep.private_lower}}},
            {"newman_bits", rep.newman_bits}};
}

json tools::cmd_run(const std::string &protocol, const Settings &s) {
    check_protocol(protocol);
    auto start = std::chrono::steady_clock::now();
    RandomTape tape = RandomTape::shared(s.seed);
    json inputs = {{"x", s.x}, {"y", s.y}};
    Execution e;
    std::size_t n = 0;
    if (protocol == "sym-and" || protocol == "sparse-intersect") {
        BitString x = parse_bits(s.x, "x"), y = parse_bits(s.y, "y");
        n = x.size();
        check_n(s, n);
        e = execute(protocol, s, nullptr, &x, &y, tape);
    } else {
        auto g = parse_inner(s.g);
        auto xs = parse_inputs(s.x, g->alice_width(), "x");
        auto ys = parse_inputs(s.y, g->bob_width(), "y");
        Instance inst(g, xs, ys);
        n = inst.size();
        check_n(s, n);
        inputs["g"] = s.g;
        e = execute(protocol, s, &inst, nullptr, nullptr, tape);
    }
    if (!s.f.empty()) {
        inputs["f"] = s.f;
    }
    if (s.k) {
        inputs["k"] = *s.k;
    }
    if (s.gamma) {
        inputs["gamma"] = *s.gamma;
    }
    if (protocol == "sym-and") {
        inputs["model"] = s.model;
    }
    json report = {{"protocol", protocol},
                   {"inputs", inputs},
                   {"n", n},
                   {"mode", s.mode},
                   {"seed", s.seed},
                   {"outcome", e.outcome},
                   {"oracle", e.oracle},
                   {"match", e.match},
                   {"ledger", ledger_json(e.ledger)}};
    if (s.wallclock) {
        report["wallclock_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
    return report;
}

std::string tools::sweep_header() {
    return "row,protocol,n,k,f,g,mode,seed,success,outcome,qubits_sim,qubits_claimed,classical_bits,shared_random_bits,epr_pairs,rounds";
}

std::size_t tools::cmd_sweep(const std::string &protocol, const Settings &s, std::ostream &out) {
    check_protocol(protocol);
    auto ns = parse_size_list(s.n_list);
    auto ks = parse_size_list(s.k_list);
    if (ns.empty() || ks.empty()) {
        throw InputError("sweep grid is empty");
    }
    if ((protocol == "composed" || protocol == "sym-and") && s.f.empty()) {
        throw InputError("missing --f");
    }
    parse_mode(s.mode);
    struct Point {
        std::size_t n, k;
    };
    std::vector<Point> rows;
    for (auto n : ns) {
        for (auto k : ks) {
            if (k > n) {
                throw InputError("k = " + std::to_string(k) + " exceeds n = " + std::to_string(n));
            }
            for (std::size_t t = 0; t < s.trials; t++) {
                rows.push_back({n, k});
            }
        }
    }
    auto g = parse_inner(protocol == "sym-and" ? "and2" : s.g);
    auto pre = preimages(*g);
    std::vector<std::string> lines(rows.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        while (true) {
            std::size_t row = next++;
            if (row >= rows.size()) {
                return;
            }
            try {
                auto [n, k] = rows[row];
                std::uint64_t seed = s.seed ^ row;
                Rng rng(derive_seed(seed, 0));
                RandomTape tape = RandomTape::shared(derive_seed(seed, 1));
                Settings local = s;
                local.k = std::max<std::size_t>(k, 1);
                local.gamma = std::min(n, 2 * std::max<std::size_t>(k, 1));
                Execution e;
                if (protocol == "sparse-intersect") {
                    auto [x, y] = sparse_pair(n, k, rng);
                    local.k = k;
                    e = execute(protocol, local, nullptr, &x, &y, tape);
                } else {
                    auto inst = realize(g, pre, BitString::from_support(n, random_subset(n, k, rng)), rng);
                    if (protocol == "sym-and") {
                        BitString x(n), y(n);
                        for (std::size_t i = 0; i < n; i++) {
                            x.set(i, inst.alice_input(i));
                            y.set(i, inst.bob_input(i));
                        }
                        e = execute(protocol, local, nullptr, &x, &y, tape);
                    } else {
                        e = execute(protocol, local, &inst, nullptr, nullptr, tape);
                    }
                }
                lines[row] = csv_row(row, protocol, s, n, k, seed, e);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
                next = rows.size();
                return;
            }
        }
    };
    unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), static_cast<unsigned>(rows.size())));
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; w++) {
        pool.emplace_back(worker);
    }
    for (auto &t : pool) {
        t.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    out << sweep_header() << '\n';
    for (const auto &line : lines) {
        out << line << '\n';
    }
    return rows.size();
}

int tools::cmd_verify(const std::string &suite, const Settings &s, std::ostream &log) {
    AcceptanceOptions options;
    if (suite == "fast") {
        options.suite = Suite::fast;
    } else if (suite != "full") {
        throw InputError("suite must be fast or full, got '" + suite + "'");
    }
    options.seed = s.seed;
    options.skip_verification = s.skip_verification;
    std::vector<int> ids;
    if (s.only.empty()) {
        for (int id = 1; id <= kCriterionCount; id++) {
            ids.push_back(id);
        }
    } else {
        for (auto v : parse_size_list(s.only)) {
            if (v < 1 || v > static_cast<std::size_t>(kCriterionCount)) {
                throw InputError("criteria are numbered 1 to " + std::to_string(kCriterionCount));
            }
            ids.push_back(static_cast<int>(v));
        }
    }
    auto results = run_acceptance(ids, options, [&](const CriterionResult &r) { log << format_line(r) << std::endl; });
    auto summary = summary_json(results, options);
    std::string path = !s.json_out.empty() ? s.json_out : s.out;
    if (!path.empty()) {
        std::ofstream file(path);
        if (!file) {
            throw InputError("cannot write " + path);
        }
        file << summary.dump(2) << '\n';
    } else if (options.suite == Suite::full) {
        log << summary.dump(2) << '\n';
    }
    return summary["all_passed"].get<bool>() ? kOk : kVerificationFailure;
}

namespace {

void write_output(const Settings &s, const std::string &text, std::ostream &out) {
    if (s.out.empty()) {
        out << text;
        return;
    }
    std::ofstream file(s.out);
    if (!file) {
        throw InputError("cannot write " + s.out);
    }
    file << text;
}

// The config file is read before the flags so that flags win.
void load_config(int argc, const char *const *argv, Settings &s) {
    for (int i = 1; i < argc; i++) {
        std::string arg = argv[i];
        std::string path;
        if (arg == "--config" && i + 1 < argc) {
            path = argv[i + 1];
        } else if (arg.rfind("--config=", 0) == 0) {
            path = arg.substr(9);
        }
        if (path.empty()) {
            continue;
        }
        std::ifstream file(path);
        if (!file) {
            throw InputError("cannot read config " + path);
        }
        json config;
        try {
            config = json::parse(file);
        } catch (const json::parse_error &ex) {
            throw InputError("config " + path + " is not valid JSON: " + ex.what());
        }
        apply_config(s, config);
    }
}

}  // namespace

int tools::main_with_args(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    Settings s;
    try {
        load_config(argc, argv, s);
    } catch (const InputError &ex) {
        err << "error: " << ex.what() << '\n';
        return kInputError;
    }

    CLI::App app{"Simulator and experiment harness for quantum protocols computing composed functions"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string config_path;
    app.add_option("--config", config_path, "Flat JSON file with default values for any flag");
    app.add_option("--seed", s.seed, "Seed of the shared random tape");
    app.add_option("--mode", s.mode, "Cost engine")->check(CLI::IsMember({"sim", "ledger"}));
    app.add_option("--out", s.out, "Write output to this file instead of stdout");

    std::size_t n = 0, k = 0, gamma = 0;
    auto add_n = [&](CLI::App *cmd) { return cmd->add_option("--n", n, "Number of coordinates"); };

    auto *analyze_cmd = app.add_subcommand("analyze", "Lower and upper bounds of a symmetric outer function");
    analyze_cmd->add_option("--f", s.f, "Outer function: or | and | parity | thr:<t> | table:<bits>");
    auto *analyze_n = add_n(analyze_cmd);

    std::string protocol;
    auto *run_cmd = app.add_subcommand("run", "Run one protocol on explicit inputs");
    run_cmd->add_option("protocol", protocol, "find-one | find-exact | find-more | composed | sym-and | sparse-intersect")->required();
    run_cmd->add_option("--f", s.f, "Outer function descriptor");
    run_cmd->add_option("--g", s.g, "Inner function: and2 | xor2 | tt:<j>:<k>:<hex>");
    auto *run_n = add_n(run_cmd);
    run_cmd->add_option("--x", s.x, "Alice's input: bits, or comma-separated integers for wider G");
    run_cmd->add_option("--y", s.y, "Bob's input, same format");
    auto *run_k = run_cmd->add_option("--k", k, "Promise for find-more, sparsity for sparse-intersect");
    auto *run_gamma = run_cmd->add_option("--gamma", gamma, "Block size for find-exact");
    run_cmd->add_option("--model", s.model, "Randomness for sym-and")->check(CLI::IsMember({"shared", "private"}));
    run_cmd->add_flag("--wallclock,!--no-wallclock", s.wallclock, "Include wallclock time in the report");

    std::string sweep_protocol;
    auto *sweep_cmd = app.add_subcommand("sweep", "Run a protocol over a parameter grid and write CSV");
    sweep_cmd->add_option("protocol", sweep_protocol, "Protocol name as for run")->required();
    sweep_cmd->add_option("--f", s.f, "Outer function descriptor");
    sweep_cmd->add_option("--g", s.g, "Inner function descriptor");
    sweep_cmd->add_option("--n-list", s.n_list, "Comma-separated sizes");
    sweep_cmd->add_option("--k-list", s.k_list, "Comma-separated marked counts or sparsities");
    sweep_cmd->add_option("--trials", s.trials, "Trials per grid point");

    std::string suite;
    auto *verify_cmd = app.add_subcommand("verify", "Run the acceptance suite");
    verify_cmd->add_option("suite", suite, "fast | full")->required();
    verify_cmd->add_option("--only", s.only, "Comma-separated criterion numbers");
    verify_cmd->add_option("--json", s.json_out, "Write the JSON summary here");
    verify_cmd->add_flag("--skip-verification", s.skip_verification, "Mutation check: accept search candidates unverified");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &ex) {
        int code = app.exit(ex, out, err);
        return code == 0 ? kOk : kInputError;
    }
    if (analyze_n->count() > 0 || run_n->count() > 0) {
        s.n = n;
    }
    if (run_k->count() > 0) {
        s.k = k;
    }
    if (run_gamma->count() > 0) {
        s.gamma = gamma;
    }

    try {
        if (*analyze_cmd) {
            if (s.f.empty()) {
                throw InputError("missing --f");
            }
            write_output(s, cmd_analyze(s).dump(2) + "\n", out);
        } else if (*run_cmd) {
            write_output(s, cmd_run(protocol, s).dump(2) + "\n", out);
        } else if (*sweep_cmd) {
            std::ostringstream csv;
            cmd_sweep(sweep_protocol, s, csv);
            write_output(s, csv.str(), out);
        } else if (*verify_cmd) {
            return cmd_verify(suite, s, out);
        }
    } catch (const CapacityError &ex) {
        err << "capacity error: " << ex.what() << "; rerun with --mode ledger\n";
        return kCapacityError;
    } catch (const InputError &ex) {
        err << "error: " << ex.what() << '\n';
        return kInputError;
    } catch (const std::invalid_argument &ex) {
        err << "error: " << ex.what() << '\n';
        return kInputError;
    }
    return kOk;
}
