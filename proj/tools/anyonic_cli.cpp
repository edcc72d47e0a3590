/*
   Copyright 2026 The anyonic project

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Command-line front end. Talks to the library exclusively through the
// C interface in anyonic.h; JSON handling here is presentation only.

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "anyonic.h"

namespace {

using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

int exit_code_for(any_status status) {
    switch (status) {
        case ANY_OK:
            return kExitPass;
        case ANY_ERR_PRECONDITION:
        case ANY_ERR_DIVISION_BY_ZERO:
            return kExitCheckFailed;
        default:
            return kExitUsage;
    }
}

struct CliFailure {
    int code;
    std::string message;
};

[[noreturn]] void bail(any_status status) {
    throw CliFailure{exit_code_for(status), any_last_error()};
}

[[noreturn]] void usage_error(const std::string& message) { throw CliFailure{kExitUsage, message}; }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) usage_error("cannot open input file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// ANYONIC_OUT_DIR redirects relative output paths.
std::filesystem::path resolve_output(const std::string& path) {
    std::filesystem::path p(path);
    const char* base = std::getenv("ANYONIC_OUT_DIR");
    if (base != nullptr && *base != '\0' && p.is_relative())
        return std::filesystem::path(base) / p;
    return p;
}

void emit(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content << "\n";
        return;
    }
    std::filesystem::path full = resolve_output(path);
    if (full.has_parent_path()) std::filesystem::create_directories(full.parent_path());
    std::ofstream out(full, std::ios::binary);
    if (!out) usage_error("cannot write output file '" + full.string() + "'");
    out << content << "\n";
}

struct OwnedString {
    char* ptr = nullptr;
    ~OwnedString() { any_string_free(ptr); }
    std::string str() const { return ptr == nullptr ? std::string() : std::string(ptr); }
};

using HopfHandle = std::unique_ptr<any_hopf, decltype(&any_hopf_free)>;
using RmatrixHandle = std::unique_ptr<any_rmatrix, decltype(&any_rmatrix_free)>;
using CocyclicHandle = std::unique_ptr<any_cocyclic, decltype(&any_cocyclic_free)>;
using TripleHandle = std::unique_ptr<any_triple, decltype(&any_triple_free)>;

HopfHandle load_hopf(const std::string& path) {
    any_hopf* raw = nullptr;
    any_status status = any_hopf_from_json(read_file(path).c_str(), &raw);
    if (status != ANY_OK) bail(status);
    return HopfHandle(raw, &any_hopf_free);
}

RmatrixHandle load_rmatrix(const any_hopf* h, const std::string& path) {
    any_rmatrix* raw = nullptr;
    any_status status = any_rmatrix_from_json(h, read_file(path).c_str(), &raw);
    if (status != ANY_OK) bail(status);
    return RmatrixHandle(raw, &any_rmatrix_free);
}

void print_check_report(const std::string& report_json) {
    json rep = json::parse(report_json);
    for (const auto& check : rep.at("checks")) {
        bool pass = check.at("pass").get<bool>();
        std::cout << (pass ? "[ok]   " : "[FAIL] ") << check.at("name").get<std::string>();
        if (check.contains("witness"))
            std::cout << "  (" << check.at("witness").get<std::string>() << ")";
        std::cout << "\n";
    }
    std::cout << (rep.at("all_pass").get<bool>() ? "all checks passed" : "CHECKS FAILED") << "\n";
}

void print_cohomology_table(const json& table) {
    std::cout << "degree  dim C^n  dim lambda  HH  HC\n";
    for (const auto& row : table.at("rows")) {
        std::cout << row.at("degree").get<int>() << "\t" << row.at("dim").get<int>() << "\t"
                  << row.at("dim_lambda").get<int>() << "\t" << row.at("hh").get<int>() << "\t"
                  << row.at("hc").get<int>() << "\n";
    }
}

int finish_report(const std::string& report_json, bool as_json, int all_pass) {
    if (as_json)
        std::cout << report_json << "\n";
    else
        print_check_report(report_json);
    return all_pass != 0 ? kExitPass : kExitCheckFailed;
}

std::vector<int> parse_support(const std::string& csv) {
    std::vector<int> out;
    std::stringstream stream(csv);
    std::string item;
    while (std::getline(stream, item, ',')) {
        if (item.empty()) continue;
        try {
            size_t used = 0;
            int value = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(value);
        } catch (const std::exception&) {
            usage_error("invalid degree '" + item + "' in support list");
        }
    }
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"exact braided Hopf cyclic cohomology in graded vector spaces"};
    app.require_subcommand(1);

    // builtin czn / czn-r
    auto* builtin = app.add_subcommand("builtin", "emit built-in structure files");
    builtin->require_subcommand(1);
    int builtin_n = 2;
    std::string builtin_out;
    auto* czn = builtin->add_subcommand("czn", "cyclic group algebra");
    czn->add_option("--n", builtin_n, "group order")->required();
    czn->add_option("-o,--output", builtin_out, "output file (default stdout)");
    auto* cznr = builtin->add_subcommand("czn-r", "nontrivial r-matrix of the cyclic group algebra");
    cznr->add_option("--n", builtin_n, "group order")->required();
    cznr->add_option("-o,--output", builtin_out, "output file (default stdout)");

    // verify hopf / quasitriangular
    auto* verify = app.add_subcommand("verify", "verify structure axioms");
    verify->require_subcommand(1);
    std::string verify_hopf_path, verify_r_path;
    bool verify_json = false;
    auto* verify_hopf = verify->add_subcommand("hopf", "Hopf algebra axiom suite");
    verify_hopf->add_option("--hopf", verify_hopf_path, "Hopf algebra file")->required();
    verify_hopf->add_flag("--json", verify_json, "machine-readable report");
    auto* verify_qt = verify->add_subcommand("quasitriangular", "r-matrix axioms");
    verify_qt->add_option("--hopf", verify_hopf_path, "Hopf algebra file")->required();
    verify_qt->add_option("--r", verify_r_path, "r-matrix file")->required();
    verify_qt->add_flag("--json", verify_json, "machine-readable report");

    // braid-check
    auto* braid = app.add_subcommand("braid-check", "pair-symmetry of degree supports");
    int braid_n = 0;
    std::string support_a, support_b;
    bool braid_json = false;
    braid->add_option("--n", braid_n, "grading modulus")->required();
    braid->add_option("--support", support_a, "comma-separated degree support")->required();
    braid->add_option("--support-b", support_b, "second support (defaults to the first)");
    braid->add_flag("--json", braid_json, "machine-readable report");

    // transmute
    auto* transmute_cmd = app.add_subcommand("transmute", "braided Hopf algebra of a quasitriangular pair");
    std::string tr_hopf, tr_r, tr_out;
    transmute_cmd->add_option("--hopf", tr_hopf, "Hopf algebra file")->required();
    transmute_cmd->add_option("--r", tr_r, "r-matrix file")->required();
    transmute_cmd->add_option("-o,--output", tr_out, "output file (default stdout)");

    // cocyclic build
    auto* cocyclic_cmd = app.add_subcommand("cocyclic", "cocyclic module of a Hopf algebra with a pair");
    cocyclic_cmd->require_subcommand(1);
    auto* cocyclic_build = cocyclic_cmd->add_subcommand("build", "build and optionally verify");
    std::string cb_hopf, cb_pair, cb_operators;
    int cb_level = 2;
    long cb_cap = 1000000;
    bool cb_verify = false, cb_json = false, cb_force = false;
    cocyclic_build->add_option("--hopf", cb_hopf, "Hopf algebra file")->required();
    cocyclic_build->add_option("--pair", cb_pair, "modular pair file");
    cocyclic_build->add_option("--level", cb_level, "top level N")->required();
    cocyclic_build->add_option("--cap", cb_cap, "matrix-size cap");
    cocyclic_build->add_flag("--verify", cb_verify, "run the identity suite");
    cocyclic_build->add_flag("--force", cb_force, "build through failed structure checks");
    cocyclic_build->add_option("--emit-operators", cb_operators, "write all operator matrices to a file");
    cocyclic_build->add_flag("--json", cb_json, "machine-readable report");

    // triple build
    auto* triple_cmd = app.add_subcommand("triple", "coefficient data and balanced quotients");
    triple_cmd->require_subcommand(1);
    auto* triple_build = triple_cmd->add_subcommand("build", "build quotients and induce operators");
    std::string tb_hopf, tb_coalgebra, tb_module;
    int tb_level = 2;
    long tb_cap = 1000000;
    bool tb_json = false, tb_verify = false;
    triple_build->add_option("--hopf", tb_hopf, "Hopf algebra file")->required();
    triple_build->add_option("--coalgebra", tb_coalgebra, "module-coalgebra file (default: C = H)");
    triple_build->add_option("--module", tb_module, "coefficient module file (default: M = I)");
    triple_build->add_option("--level", tb_level, "top level N")->required();
    triple_build->add_option("--cap", tb_cap, "matrix-size cap");
    triple_build->add_flag("--verify", tb_verify, "run the induction checks and identity suite");
    triple_build->add_flag("--json", tb_json, "machine-readable report");

    // cohomology
    auto* cohomology_cmd = app.add_subcommand("cohomology", "HH/HC dimension table");
    std::string ch_hopf, ch_pair;
    int ch_level = 2;
    long ch_cap = 1000000;
    bool ch_json = false;
    cohomology_cmd->add_option("--hopf", ch_hopf, "Hopf algebra file")->required();
    cohomology_cmd->add_option("--pair", ch_pair, "modular pair file");
    cohomology_cmd->add_option("--level", ch_level, "top level N (table reaches degree N-1)")->required();
    cohomology_cmd->add_option("--cap", ch_cap, "matrix-size cap");
    cohomology_cmd->add_flag("--json", ch_json, "machine-readable report");

    // pipeline
    auto* pipeline_cmd = app.add_subcommand("pipeline", "end-to-end run for the cyclic group algebra");
    int pl_n = 2, pl_level = 4;
    long pl_cap = 1000000;
    bool pl_json = false;
    pipeline_cmd->add_option("--n", pl_n, "group order")->required();
    pipeline_cmd->add_option("--level", pl_level, "top level N")->required();
    pipeline_cmd->add_option("--cap", pl_cap, "matrix-size cap");
    pipeline_cmd->add_flag("--json", pl_json, "machine-readable report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e);
            return kExitPass;
        }
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    auto started = std::chrono::steady_clock::now();
    auto note_elapsed = [&] {
        auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - started);
        std::cerr << "elapsed: " << elapsed.count() << " ms\n";
    };

    int code = kExitPass;
    if (czn->parsed() || cznr->parsed()) {
        any_hopf* raw = nullptr;
        any_status status = any_hopf_czn(builtin_n, &raw);
        if (status != ANY_OK) bail(status);
        HopfHandle h(raw, &any_hopf_free);
        OwnedString out;
        if (czn->parsed()) {
            status = any_hopf_to_json(h.get(), &out.ptr);
        } else {
            any_rmatrix* r = nullptr;
            status = any_rmatrix_czn(builtin_n, &r);
            if (status != ANY_OK) bail(status);
            RmatrixHandle rm(r, &any_rmatrix_free);
            status = any_rmatrix_to_json(h.get(), rm.get(), &out.ptr);
        }
        if (status != ANY_OK) bail(status);
        emit(builtin_out, out.str());
    } else if (verify_hopf->parsed()) {
        HopfHandle h = load_hopf(verify_hopf_path);
        OwnedString report;
        int all_pass = 0;
        any_status status = any_hopf_verify(h.get(), &report.ptr, &all_pass);
        if (status != ANY_OK) bail(status);
        code = finish_report(report.str(), verify_json, all_pass);
    } else if (verify_qt->parsed()) {
        HopfHandle h = load_hopf(verify_hopf_path);
        RmatrixHandle r = load_rmatrix(h.get(), verify_r_path);
        OwnedString report;
        int all_pass = 0;
        any_status status = any_quasitriangular_verify(h.get(), r.get(), &report.ptr, &all_pass);
        if (status != ANY_OK) bail(status);
        code = finish_report(report.str(), verify_json, all_pass);
    } else if (braid->parsed()) {
        std::vector<int> a = parse_support(support_a);
        std::vector<int> b = support_b.empty() ? a : parse_support(support_b);
        OwnedString report;
        int agree = 0;
        any_status status =
            any_braid_check_report(braid_n, a.data(), static_cast<int>(a.size()), b.data(),
                                   static_cast<int>(b.size()), &report.ptr, &agree);
        if (status != ANY_OK) bail(status);
        if (braid_json) {
            std::cout << report.str() << "\n";
        } else {
            json rep = json::parse(report.str());
            std::cout << "criterion: symmetric_pair="
                      << (rep.at("criterion").at("symmetric_pair").get<bool>() ? "yes" : "no")
                      << " flip=" << (rep.at("criterion").at("flip").get<bool>() ? "yes" : "no")
                      << "\n";
            std::cout << "matrix:    symmetric_pair="
                      << (rep.at("matrix").at("symmetric_pair").get<bool>() ? "yes" : "no")
                      << " flip=" << (rep.at("matrix").at("flip").get<bool>() ? "yes" : "no")
                      << "\n";
            std::cout << (agree ? "criterion and matrix agree" : "DISAGREEMENT") << "\n";
        }
        code = agree ? kExitPass : kExitCheckFailed;
    } else if (transmute_cmd->parsed()) {
        HopfHandle h = load_hopf(tr_hopf);
        RmatrixHandle r = load_rmatrix(h.get(), tr_r);
        any_hopf* out_raw = nullptr;
        any_status status = any_transmute(h.get(), r.get(), &out_raw);
        if (status != ANY_OK) bail(status);
        HopfHandle out(out_raw, &any_hopf_free);
        OwnedString text;
        status = any_hopf_to_json(out.get(), &text.ptr);
        if (status != ANY_OK) bail(status);
        emit(tr_out, text.str());
    } else if (cocyclic_build->parsed()) {
        HopfHandle h = load_hopf(cb_hopf);
        std::optional<std::string> pair_text;
        if (!cb_pair.empty()) pair_text = read_file(cb_pair);
        any_cocyclic* raw = nullptr;
        any_status status =
            any_cocyclic_build(h.get(), pair_text ? pair_text->c_str() : nullptr, cb_level, cb_cap,
                               cb_force ? 1 : 0, &raw);
        if (status != ANY_OK) bail(status);
        CocyclicHandle cm(raw, &any_cocyclic_free);
        if (!cb_operators.empty()) {
            OwnedString ops;
            status = any_cocyclic_operators_json(cm.get(), &ops.ptr);
            if (status != ANY_OK) bail(status);
            emit(cb_operators, ops.str());
        }
        if (cb_verify) {
            OwnedString report;
            int all_pass = 0;
            status = any_cocyclic_verify(cm.get(), &report.ptr, &all_pass);
            if (status != ANY_OK) bail(status);
            code = finish_report(report.str(), cb_json, all_pass);
        } else if (cb_json) {
            std::cout << json{{"built", true}, {"level", cb_level}}.dump(2) << "\n";
        } else {
            std::cout << "built cocyclic module to level " << cb_level << "\n";
        }
    } else if (triple_build->parsed()) {
        HopfHandle h = load_hopf(tb_hopf);
        std::optional<std::string> coalgebra_text, module_text;
        if (!tb_coalgebra.empty()) coalgebra_text = read_file(tb_coalgebra);
        if (!tb_module.empty()) module_text = read_file(tb_module);
        any_triple* raw = nullptr;
        any_status status = any_triple_build(
            h.get(), coalgebra_text ? coalgebra_text->c_str() : nullptr,
            module_text ? module_text->c_str() : nullptr, tb_level, tb_cap, &raw);
        if (status != ANY_OK) bail(status);
        TripleHandle t(raw, &any_triple_free);
        if (tb_verify) {
            OwnedString report;
            int all_pass = 0;
            status = any_triple_verify(t.get(), &report.ptr, &all_pass);
            if (status != ANY_OK) bail(status);
            code = finish_report(report.str(), tb_json, all_pass);
        } else if (tb_json) {
            std::cout << json{{"built", true}, {"level", tb_level}}.dump(2) << "\n";
        } else {
            std::cout << "built balanced quotients to level " << tb_level << "\n";
        }
    } else if (cohomology_cmd->parsed()) {
        if (ch_level < 1) usage_error("cohomology needs --level >= 1; the table reaches degree level-1");
        HopfHandle h = load_hopf(ch_hopf);
        std::optional<std::string> pair_text;
        if (!ch_pair.empty()) pair_text = read_file(ch_pair);
        any_cocyclic* raw = nullptr;
        any_status status = any_cocyclic_build(
            h.get(), pair_text ? pair_text->c_str() : nullptr, ch_level, ch_cap, 0, &raw);
        if (status != ANY_OK) bail(status);
        CocyclicHandle cm(raw, &any_cocyclic_free);
        OwnedString verify_report;
        int all_pass = 0;
        status = any_cocyclic_verify(cm.get(), &verify_report.ptr, &all_pass);
        if (status != ANY_OK) bail(status);
        if (all_pass == 0) {
            code = finish_report(verify_report.str(), ch_json, all_pass);
        } else {
            OwnedString table;
            status = any_cohomology(cm.get(), ch_level - 1, &table.ptr);
            if (status != ANY_OK) bail(status);
            if (ch_json)
                std::cout << table.str() << "\n";
            else
                print_cohomology_table(json::parse(table.str()));
        }
    } else if (pipeline_cmd->parsed()) {
        OwnedString report;
        int all_pass = 0;
        any_status status = any_pipeline(pl_n, pl_level, pl_cap, &report.ptr, &all_pass);
        if (status != ANY_OK) bail(status);
        if (pl_json) {
            std::cout << report.str() << "\n";
        } else {
            json rep = json::parse(report.str());
            std::cout << "== quasitriangular axioms ==\n";
            print_check_report(rep.at("quasitriangular").dump());
            std::cout << "== transmutation ==\n";
            print_check_report(rep.at("transmutation").dump());
            std::cout << "== cocyclic identities ==\n";
            print_check_report(rep.at("cocyclic").dump());
            std::cout << "== cohomology ==\n";
            print_cohomology_table(rep.at("cohomology"));
        }
        code = all_pass != 0 ? kExitPass : kExitCheckFailed;
    }
    note_elapsed();
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CliFailure& failure) {
        std::cerr << "error: " << failure.message << "\n";
        return failure.code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
