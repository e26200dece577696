// Command-line front door. Everything goes through the C API in adeg.h.

#include "adeg.h"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

bool slurp(const std::string& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::ostringstream buf;
    buf << in.rdbuf();
    out = buf.str();
    return true;
}

int emit(adeg_result* r, bool json, const std::string& dot_path) {
    if (!r) return ADEG_ERR_ARG;
    std::cout << (json ? adeg_result_json(r) : adeg_result_text(r));
    if (!dot_path.empty()) {
        std::ofstream out(dot_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write " << dot_path << "\n";
            adeg_result_free(r);
            return ADEG_ERR_INVALID;
        }
        if (const char* d = adeg_result_dot_start(r)) out << d;
        if (const char* d = adeg_result_dot_end(r)) out << d;
    }
    int code = adeg_result_exit_code(r);
    adeg_result_free(r);
    return code;
}

int report_failure(adeg_status st) {
    std::cerr << "error: " << adeg_last_error() << "\n";
    return st;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"adeg — signed-graph ADE classification engine"};
    app.require_subcommand(1);
    app.set_version_flag("--version", adeg_version());

    std::string file, mode = "t", word, suite, dot_path;
    bool json = false, emit_cert = false, do_reduce = false;
    int max_n = 0;

    auto* classify = app.add_subcommand("classify", "definiteness, certificates, ADE type");
    classify->add_option("file", file, "graph file")->required();
    classify->add_flag("--json", json, "machine-readable output");
    classify->add_option("--dot", dot_path, "write DOT export here");

    auto* reduce = app.add_subcommand("reduce", "reduce a positive graph to its ADE form");
    reduce->add_option("file", file, "graph file")->required();
    reduce->add_option("--mode", mode, "t | tprime | checkerboard")
        ->check(CLI::IsMember({"t", "tprime", "checkerboard"}));
    reduce->add_flag("--emit-certificate", emit_cert, "include U in the transcript JSON");
    reduce->add_flag("--json", json, "machine-readable output");
    reduce->add_option("--dot", dot_path, "write DOT export of start/end graphs");

    auto* verify = app.add_subcommand("verify", "replay a transcript and verify its certificate");
    verify->add_option("file", file, "transcript JSON file")->required();
    verify->add_flag("--json", json, "machine-readable output");

    auto* minors = app.add_subcommand("minors", "derive the forbidden-minor catalog");
    minors->add_option("--max-n", max_n, "largest pattern size (default 9)");
    minors->add_flag("--json", json, "machine-readable output");

    auto* braid = app.add_subcommand("braid", "positive braid words");
    auto* analyze = braid->add_subcommand("analyze", "linking graph, Seifert form, signature");
    analyze->add_option("word", word, "braid word, e.g. \"s1 s1 s1\"")->required();
    analyze->add_flag("--reduce", do_reduce, "also reduce the linking graph");
    analyze->add_flag("--json", json, "machine-readable output");
    braid->require_subcommand(1);

    auto* checker = app.add_subcommand("checkerboard", "plane checkerboard graphs");
    auto* validate = checker->add_subcommand("validate", "face coherence and dual bipartiteness");
    validate->add_option("file", file, "plane graph file")->required();
    validate->add_flag("--json", json, "machine-readable output");
    auto* creduce = checker->add_subcommand("reduce", "reduce with validity-preserving moves");
    creduce->add_option("file", file, "plane graph file")->required();
    creduce->add_flag("--emit-certificate", emit_cert, "include U in the transcript JSON");
    creduce->add_flag("--json", json, "machine-readable output");
    checker->require_subcommand(1);

    auto* oracle = app.add_subcommand("oracle", "brute-force validation suites");
    oracle->add_option("--suite", suite, "definiteness|equivalence|lemma33|degree6|coherence")
        ->required()
        ->check(CLI::IsMember({"definiteness", "equivalence", "lemma33", "degree6", "coherence"}));
    oracle->add_option("--max-n", max_n, "vertex bound (suite default when omitted)");
    oracle->add_flag("--json", json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help, --version
        app.exit(e);
        return ADEG_ERR_PARSE;
    }

    adeg_result* res = nullptr;
    adeg_status st = ADEG_OK;

    if (*classify || (*reduce && mode != "checkerboard")) {
        std::string text;
        if (!slurp(file, text)) {
            std::cerr << "error: cannot read " << file << "\n";
            return ADEG_ERR_PARSE;
        }
        adeg_graph* g = nullptr;
        st = adeg_graph_parse(text.c_str(), &g);
        if (st != ADEG_OK) return report_failure(st);
        st = *classify ? adeg_classify(g, &res)
                       : adeg_reduce(g, mode.c_str(), emit_cert ? 1 : 0, &res);
        adeg_graph_free(g);
    } else if (*reduce || (*checker && (*validate || *creduce))) {
        std::string text;
        if (!slurp(file, text)) {
            std::cerr << "error: cannot read " << file << "\n";
            return ADEG_ERR_PARSE;
        }
        adeg_plane* p = nullptr;
        st = adeg_plane_parse(text.c_str(), &p);
        if (st != ADEG_OK) return report_failure(st);
        if (*checker && *validate)
            st = adeg_checkerboard_validate(p, &res);
        else
            st = adeg_checkerboard_reduce(p, emit_cert ? 1 : 0, &res);
        adeg_plane_free(p);
    } else if (*verify) {
        std::string text;
        if (!slurp(file, text)) {
            std::cerr << "error: cannot read " << file << "\n";
            return ADEG_ERR_PARSE;
        }
        st = adeg_verify_transcript(text.c_str(), &res);
    } else if (*minors) {
        st = adeg_mine_minors(max_n, &res);
    } else if (*braid) {
        st = adeg_braid_analyze(word.c_str(), do_reduce ? 1 : 0, &res);
    } else if (*oracle) {
        st = adeg_oracle(suite.c_str(), max_n, &res);
    }

    if (st != ADEG_OK) return report_failure(st);
    return emit(res, json, dot_path);
}
