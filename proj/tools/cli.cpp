// Copyright 2026 The cliffc Authors
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

#include "cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <sstream>

#include "cliffc/compiler.hpp"
#include "cliffc/errors.hpp"
#include "cliffc/random.hpp"
#include "cliffc/state_prep.hpp"
#include "cliffc/synthesis.hpp"
#include "cliffc/tableau.hpp"

namespace cliffc::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

enum class InputKind { Symplectic, Circuit, Spec };

struct Target {
    F2Matrix s;
    std::optional<PhaseVector> p;
};

/// Raised when a written circuit fails its own check.
struct SelfCheckFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void spit(const fs::path &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write '" + path.string() + "'");
    }
    out << text;
}

InputKind sniff(const std::string &text) {
    std::istringstream in(text);
    std::string line;
    bool saw_header = false;
    while (std::getline(in, line)) {
        std::istringstream words(line);
        std::string head;
        if (!(words >> head) || head[0] == '#') {
            continue;
        }
        if (!saw_header) {
            if (head != "n") {
                return InputKind::Symplectic;
            }
            saw_header = true;
            continue;
        }
        return (head[0] == '+' || head[0] == '-') ? InputKind::Spec : InputKind::Circuit;
    }
    return InputKind::Circuit;
}

Target load_target(const std::string &text) {
    std::istringstream in(text);
    switch (sniff(text)) {
        case InputKind::Symplectic: {
            SymplecticFile file = read_symplectic(in);
            return {std::move(file.s), std::move(file.p)};
        }
        case InputKind::Circuit: {
            Tableau t = simulate_circuit(read_circuit(in));
            return {t.s(), t.phases()};
        }
        case InputKind::Spec:
            break;
    }
    throw std::invalid_argument("expected a symplectic or circuit file, got a stabilizer spec");
}

std::string circuit_text(const Circuit &c) {
    std::ostringstream out;
    write_circuit(out, c);
    return out.str();
}

std::string qasm_text(const Circuit &c) {
    std::ostringstream out;
    write_qasm(out, c);
    return out.str();
}

Circuit reread(const std::string &text) {
    std::istringstream in(text);
    return read_circuit(in);
}

ordered_json counts_json(const Circuit &c) {
    GateCounts k = count(c);
    ordered_json tags = ordered_json::array();
    for (SegmentTag t : c.segment_tags()) {
        tags.push_back(std::string(segment_name(t)));
    }
    return ordered_json{
        {"segments", tags},
        {"cx_count", k.of(GateKind::CNOT)},
        {"cz_count", k.of(GateKind::CZ)},
        {"p_count", k.of(GateKind::P)},
        {"h_count", k.of(GateKind::H)},
        {"pauli_count", k.of(GateKind::X) + k.of(GateKind::Y) + k.of(GateKind::Z)},
        {"total", k.total},
        {"total_2q", k.two_qubit_total},
        {"depth", k.depth},
    };
}

/// Flat "key: value" rendering of a one-level-nested report.
std::string report_text(const ordered_json &report) {
    std::ostringstream out;
    for (const auto &[key, value] : report.items()) {
        if (value.is_object()) {
            for (const auto &[sub, v] : value.items()) {
                out << key << '.' << sub << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
            }
        } else {
            out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
        }
    }
    return out.str();
}

void write_report(const fs::path &dir, const ordered_json &report, std::ostream &out) {
    std::string text = report_text(report);
    spit(dir / "report.txt", text);
    spit(dir / "report.json", report.dump(2) + "\n");
    out << text;
}

struct FormFlags {
    std::string form = "both";
    size_t pmh_block = 0;
    bool gauss = false;
    bool qasm = false;
    std::string out_dir = ".";

    bool nine() const {
        return form == "both" || form == "nine";
    }
    bool one_cnot() const {
        return form == "both" || form == "one-cnot";
    }
    CompileOptions options() const {
        CompileOptions opts;
        opts.pmh_block = pmh_block;
        opts.use_pmh = !gauss;
        return opts;
    }
};

void add_form_flags(CLI::App *cmd, FormFlags &flags) {
    cmd->add_option("--form", flags.form, "Which circuit forms to write")
        ->check(CLI::IsMember({"nine", "one-cnot", "both"}));
    cmd->add_option("--pmh-block", flags.pmh_block, "PMH section width (0 = automatic)");
    cmd->add_flag("--gauss", flags.gauss, "Use Gaussian elimination instead of PMH for CNOT segments");
    cmd->add_flag("--qasm", flags.qasm, "Also write OpenQASM 2 files");
    cmd->add_option("--out", flags.out_dir, "Output directory");
}

/// Writes `c` to dir/name.circ (and .qasm), reads it back and checks it against the target.
void emit_verified(const fs::path &dir, const std::string &name, const Circuit &c, const Target &target,
                   bool qasm) {
    std::string text = circuit_text(c);
    spit(dir / (name + ".circ"), text);
    if (qasm) {
        spit(dir / (name + ".qasm"), qasm_text(c));
    }
    Tableau t = simulate_circuit(reread(text));
    if (auto diff = first_mismatch(t, target.s, target.p ? &*target.p : nullptr)) {
        throw SelfCheckFailure(name + ": " + *diff);
    }
}

int cmd_compile(const std::string &input, const FormFlags &flags, std::ostream &out) {
    Target target = load_target(slurp(input));
    CompileOptions opts = flags.options();
    CompiledClifford cc = compile(target.s, target.p, opts);
    fs::path dir(flags.out_dir);
    fs::create_directories(dir);

    size_t n = target.s.rows() / 2;
    ordered_json report;
    report["n"] = n;
    report["cnot_synthesis"] = flags.gauss ? "gauss" : "pmh";
    report["pmh_block"] = flags.gauss ? 0 : (flags.pmh_block ? flags.pmh_block : default_pmh_block(n));
    report["phase_target"] = target.p ? "given" : "none";
    if (flags.nine()) {
        emit_verified(dir, "nine", cc.fixed_nine_form(), target, flags.qasm);
        report["nine"] = counts_json(cc.nine_form);
    }
    if (flags.one_cnot()) {
        emit_verified(dir, "one_cnot", cc.fixed_one_cnot_form(), target, flags.qasm);
        report["one_cnot"] = counts_json(cc.one_cnot_form);
    }
    spit(dir / "pauli.circ", circuit_text(cc.pauli_layer));
    std::ostringstream achieved;
    for (size_t k = 0; k < cc.achieved_p.size(); k++) {
        achieved << (k ? " " : "") << static_cast<int>(cc.achieved_p[k]);
    }
    report["pauli_count"] = cc.pauli_layer.gates().size();
    report["achieved_p"] = achieved.str();
    report["verified"] = true;
    write_report(dir, report, out);
    return kOk;
}

int cmd_prep(const std::string &input, const FormFlags &flags, std::ostream &out) {
    std::istringstream in(slurp(input));
    StabilizerStateSpec spec = read_stabilizer_spec(in);
    spec.validate();
    PreparedState prepared = prep_state(spec, flags.options());
    fs::path dir(flags.out_dir);
    fs::create_directories(dir);
    std::vector<PauliString> want = canonical_form(spec.generators);

    ordered_json report;
    report["n"] = spec.n;
    auto emit = [&](const std::string &name, const Circuit &c) {
        std::string text = circuit_text(c);
        spit(dir / (name + ".circ"), text);
        if (flags.qasm) {
            spit(dir / (name + ".qasm"), qasm_text(c));
        }
        if (canonical_form(prepared_stabilizers(reread(text))) != want) {
            throw SelfCheckFailure(name + ": prepared state differs from the spec");
        }
        report[name] = counts_json(c);
    };
    if (flags.one_cnot()) {
        emit("prep_cz", prepared.cz_form);
    }
    if (flags.nine()) {
        emit("prep_cx", prepared.cx_form);
    }
    report["verified"] = true;
    write_report(dir, report, out);
    return kOk;
}

int cmd_verify(const std::string &target_path, const std::string &circuit_path, std::ostream &out) {
    std::string text = slurp(target_path);
    std::istringstream cin(slurp(circuit_path));
    Circuit c = read_circuit(cin);
    if (sniff(text) == InputKind::Spec) {
        std::istringstream in(text);
        StabilizerStateSpec spec = read_stabilizer_spec(in);
        spec.validate();
        if (c.num_qubits() != spec.n) {
            out << "FAIL: qubit count differs\n";
            return kVerifyMismatch;
        }
        auto want = canonical_form(spec.generators);
        auto got = canonical_form(prepared_stabilizers(c));
        for (size_t k = 0; k < want.size(); k++) {
            if (!(want[k] == got[k])) {
                out << "FAIL: canonical stabilizer " << k << " expected " << want[k].str() << ", got "
                    << (got[k].is_hermitian() ? got[k].str() : std::string("<non-Hermitian>")) << '\n';
                return kVerifyMismatch;
            }
        }
        out << "PASS\n";
        return kOk;
    }
    Target target = load_target(text);
    if (auto diff = first_mismatch(simulate_circuit(c), target.s, target.p ? &*target.p : nullptr)) {
        out << "FAIL: " << *diff << '\n';
        return kVerifyMismatch;
    }
    out << "PASS\n";
    return kOk;
}

struct BenchFlags {
    std::vector<size_t> ns{4, 8, 16, 32};
    size_t samples = 10;
    uint64_t seed = 1;
    size_t gates = 0;
    size_t pmh_block = 0;
    std::string form = "both";
    std::string out_file;
};

size_t auto_gate_count(size_t n) {
    size_t log = 1;
    while ((size_t{1} << log) < n + 1) {
        log++;
    }
    return std::max<size_t>(500, 8 * n * log);
}

int cmd_bench(const BenchFlags &flags, std::ostream &out) {
    std::mt19937_64 rng(flags.seed);
    std::ostringstream csv;
    csv << "n,form,cx_count,cz_count,total_2q,depth,ratio_to_n2_over_log\n";
    csv << std::fixed;
    CompileOptions opts;
    opts.pmh_block = flags.pmh_block;
    for (size_t n : flags.ns) {
        // Per form: cx, cz, total_2q, depth sums.
        std::array<std::array<double, 4>, 2> sums{};
        size_t gates = flags.gates ? flags.gates : auto_gate_count(n);
        for (size_t k = 0; k < flags.samples; k++) {
            Tableau t = simulate_circuit(random_clifford_circuit(n, gates, rng));
            CompiledClifford cc = compile(t.s(), t.phases(), opts);
            const GateCounts *forms[2] = {&cc.nine_counts, &cc.one_cnot_counts};
            for (size_t f = 0; f < 2; f++) {
                sums[f][0] += static_cast<double>(forms[f]->of(GateKind::CNOT));
                sums[f][1] += static_cast<double>(forms[f]->of(GateKind::CZ));
                sums[f][2] += static_cast<double>(forms[f]->two_qubit_total);
                sums[f][3] += static_cast<double>(forms[f]->depth);
            }
        }
        double nd = static_cast<double>(n);
        double scale = nd * nd / std::log2(std::max(nd, 2.0));
        const char *names[2] = {"nine", "one-cnot"};
        for (size_t f = 0; f < 2; f++) {
            if ((f == 0 && flags.form == "one-cnot") || (f == 1 && flags.form == "nine")) {
                continue;
            }
            double denom = static_cast<double>(std::max<size_t>(flags.samples, 1));
            csv << n << ',' << names[f] << std::setprecision(2);
            for (double v : sums[f]) {
                csv << ',' << v / denom;
            }
            csv << ',' << std::setprecision(4) << (sums[f][0] / denom) / scale << '\n';
        }
    }
    if (flags.out_file.empty()) {
        out << csv.str();
    } else {
        spit(flags.out_file, csv.str());
    }
    return kOk;
}

int cmd_random(size_t n, size_t gates, uint64_t seed, const std::string &out_dir, std::ostream &out) {
    std::mt19937_64 rng(seed);
    Circuit c = random_clifford_circuit(n, gates, rng);
    Tableau t = simulate_circuit(c);
    PhaseVector p = t.phases();
    fs::path dir(out_dir);
    fs::create_directories(dir);
    std::ostringstream sym;
    write_symplectic(sym, t.s(), &p);
    if (!is_symplectic(t.s())) {
        throw SelfCheckFailure("random: simulated matrix is not symplectic");
    }
    spit(dir / "random.sym", sym.str());
    emit_verified(dir, "random", c, Target{t.s(), p}, false);
    out << "wrote " << (dir / "random.sym").string() << " and " << (dir / "random.circ").string() << '\n';
    return kOk;
}

std::vector<char *> as_argv(const std::vector<std::string> &args, std::vector<std::string> &storage) {
    storage = args;
    std::vector<char *> argv;
    for (auto &s : storage) {
        argv.push_back(s.data());
    }
    return argv;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Clifford circuit compiler over the symplectic representation"};
    app.require_subcommand(1);

    FormFlags compile_flags;
    std::string compile_input;
    auto *compile_cmd = app.add_subcommand("compile", "Compile a symplectic matrix or circuit file");
    compile_cmd->add_option("input", compile_input, "Symplectic (.sym) or circuit file")->required();
    add_form_flags(compile_cmd, compile_flags);

    FormFlags prep_flags;
    std::string prep_input;
    auto *prep_cmd = app.add_subcommand("prep", "Build preparation circuits for a stabilizer state");
    prep_cmd->add_option("spec", prep_input, "Stabilizer spec file")->required();
    add_form_flags(prep_cmd, prep_flags);

    std::string verify_target;
    std::string verify_circuit;
    auto *verify_cmd = app.add_subcommand("verify", "Check a circuit against a target");
    verify_cmd->add_option("target", verify_target, "Symplectic, circuit or stabilizer spec file")->required();
    verify_cmd->add_option("circuit", verify_circuit, "Circuit file")->required();

    BenchFlags bench;
    auto *bench_cmd = app.add_subcommand("bench", "Gate counts of compiled random Cliffords as CSV");
    bench_cmd->add_option("--n", bench.ns, "Qubit counts")->delimiter(',');
    bench_cmd->add_option("--samples", bench.samples, "Random Cliffords per n");
    bench_cmd->add_option("--seed", bench.seed, "RNG seed");
    bench_cmd->add_option("--gates", bench.gates, "Gates per random circuit (0 = automatic)");
    bench_cmd->add_option("--pmh-block", bench.pmh_block, "PMH section width (0 = automatic)");
    bench_cmd->add_option("--form", bench.form, "Forms to report")->check(CLI::IsMember({"nine", "one-cnot", "both"}));
    bench_cmd->add_option("--out", bench.out_file, "CSV output file (default stdout)");

    size_t random_n = 4;
    size_t random_gates = 500;
    uint64_t random_seed = 1;
    std::string random_out = ".";
    auto *random_cmd = app.add_subcommand("random", "Write a random Clifford as symplectic and circuit files");
    random_cmd->add_option("--n", random_n, "Qubit count");
    random_cmd->add_option("--gates", random_gates, "Gate count of the random circuit");
    random_cmd->add_option("--seed", random_seed, "RNG seed");
    random_cmd->add_option("--out", random_out, "Output directory");

    std::vector<std::string> storage;
    std::vector<char *> argv = as_argv(args, storage);
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kParseError;
    }

    try {
        if (*compile_cmd) {
            return cmd_compile(compile_input, compile_flags, out);
        }
        if (*prep_cmd) {
            return cmd_prep(prep_input, prep_flags, out);
        }
        if (*verify_cmd) {
            return cmd_verify(verify_target, verify_circuit, out);
        }
        if (*bench_cmd) {
            return cmd_bench(bench, out);
        }
        if (*random_cmd) {
            return cmd_random(random_n, random_gates, random_seed, random_out, out);
        }
    } catch (const ParseError &e) {
        err << "parse error: " << e.what() << '\n';
        return kParseError;
    } catch (const InternalError &e) {
        err << "internal error: " << e.what() << '\n';
        return kInternalFailure;
    } catch (const SelfCheckFailure &e) {
        err << "verification failed: " << e.what() << '\n';
        return kInternalFailure;
    } catch (const std::invalid_argument &e) {
        err << "invalid input: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const std::domain_error &e) {
        err << "invalid input: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kInternalFailure;
    }
    return kOk;
}

}  // namespace cliffc::cli
