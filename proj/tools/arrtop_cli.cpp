#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "arrtop.h"

namespace {

struct Options {
    std::string builtin;
    std::string input;
    std::string faces_file;
    std::string output;
    std::string format = "json";
    std::size_t cap = 12;
    std::uint64_t seed = 20260815;
    bool essentialize = false;
    bool with_homology = false;
};

int exit_code_of(arrtop_status s) {
    switch (s) {
        case ARRTOP_OK: return 0;
        case ARRTOP_PARSE: return 2;
        case ARRTOP_INVALID: return 2;
        case ARRTOP_PRECONDITION: return 3;
        case ARRTOP_SYMMETRY: return 4;
        default: return 1;
    }
}

arrtop_format format_of(const std::string& name) {
    if (name == "dot") return ARRTOP_FORMAT_DOT;
    if (name == "text") return ARRTOP_FORMAT_TEXT;
    return ARRTOP_FORMAT_JSON;
}

int report_error(arrtop_status s) {
    std::cerr << "error: " << arrtop_last_error() << "\n";
    return exit_code_of(s);
}

bool read_file(const std::string& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::ostringstream buf;
    buf << in.rdbuf();
    out = buf.str();
    return true;
}

int emit(const Options& opt, const char* body) {
    if (opt.output.empty()) {
        std::cout << body;
        return 0;
    }
    std::ofstream out(opt.output, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot write " << opt.output << "\n";
        return 1;
    }
    out << body;
    return 0;
}

using ArrangementPtr = std::unique_ptr<arrtop_arrangement, decltype(&arrtop_arrangement_free)>;

int load_arrangement(const Options& opt, ArrangementPtr& arr) {
    arrtop_arrangement* raw = nullptr;
    arrtop_status s;
    if (!opt.builtin.empty()) {
        s = arrtop_arrangement_builtin(opt.builtin.c_str(), opt.essentialize ? 1 : 0, &raw);
    } else {
        std::string text;
        if (!read_file(opt.input, text)) {
            std::cerr << "error: cannot read " << opt.input << "\n";
            return 2;
        }
        if (opt.essentialize) {
            std::cerr << "error: only braid builtins support --essentialize\n";
            return 2;
        }
        s = arrtop_arrangement_from_json(text.c_str(), &raw);
    }
    if (s != ARRTOP_OK) return report_error(s);
    arr = ArrangementPtr(raw, &arrtop_arrangement_free);
    return 0;
}

void add_source_options(CLI::App* cmd, Options& opt, bool essentialize_flag = true) {
    auto* builtin = cmd->add_option("--builtin", opt.builtin,
                                    "Builtin arrangement: coords, braid:L, dihedral:M");
    auto* input = cmd->add_option("--input", opt.input, "Arrangement JSON file");
    builtin->excludes(input);
    input->excludes(builtin);
    cmd->add_option("--cap", opt.cap, "Hyperplane cap for geometric enumeration");
    cmd->add_option("--output", opt.output, "Write the artifact to a file instead of stdout");
    if (essentialize_flag)
        cmd->add_flag("--essentialize", opt.essentialize,
                      "Replace a braid builtin by its essential form");
}

int require_source(const Options& opt) {
    if (opt.builtin.empty() && opt.input.empty()) {
        std::cerr << "error: pass --builtin or --input\n";
        return 2;
    }
    return 0;
}

int run_faces(const Options& opt) {
    ArrangementPtr arr(nullptr, &arrtop_arrangement_free);
    if (int rc = require_source(opt)) return rc;
    if (int rc = load_arrangement(opt, arr)) return rc;
    char* body = nullptr;
    arrtop_status s = arrtop_faces(arr.get(), opt.cap, format_of(opt.format), &body);
    if (s != ARRTOP_OK) return report_error(s);
    int rc = emit(opt, body);
    arrtop_string_free(body);
    return rc;
}

int run_salvetti(const Options& opt) {
    ArrangementPtr arr(nullptr, &arrtop_arrangement_free);
    if (int rc = require_source(opt)) return rc;
    if (int rc = load_arrangement(opt, arr)) return rc;
    char* body = nullptr;
    arrtop_status s = arrtop_salvetti(arr.get(), opt.cap, opt.with_homology ? 1 : 0,
                                      format_of(opt.format), &body);
    if (s != ARRTOP_OK) return report_error(s);
    int rc = emit(opt, body);
    arrtop_string_free(body);
    return rc;
}

int run_presentation(const Options& opt) {
    ArrangementPtr arr(nullptr, &arrtop_arrangement_free);
    if (int rc = require_source(opt)) return rc;
    if (int rc = load_arrangement(opt, arr)) return rc;
    char* body = nullptr;
    arrtop_status s = arrtop_presentation(arr.get(), opt.cap, format_of(opt.format), &body);
    if (s != ARRTOP_OK) return report_error(s);
    int rc = emit(opt, body);
    arrtop_string_free(body);
    return rc;
}

int run_check(const Options& opt) {
    char* body = nullptr;
    int all_pass = 0, symmetry_pass = 1;

    if (!opt.faces_file.empty()) {
        std::string text;
        if (!read_file(opt.faces_file, text)) {
            std::cerr << "error: cannot read " << opt.faces_file << "\n";
            return 2;
        }
        arrtop_status s = arrtop_check_faces(text.c_str(), format_of(opt.format), &all_pass, &body);
        if (s != ARRTOP_OK) return report_error(s);
    } else {
        ArrangementPtr arr(nullptr, &arrtop_arrangement_free);
        if (int rc = require_source(opt)) return rc;
        if (int rc = load_arrangement(opt, arr)) return rc;
        arrtop_status s = arrtop_check(arr.get(), opt.cap, opt.seed, format_of(opt.format),
                                       &all_pass, &symmetry_pass, &body);
        if (s != ARRTOP_OK) return report_error(s);
    }
    int rc = emit(opt, body);
    arrtop_string_free(body);
    if (rc) return rc;
    if (all_pass) return 0;
    return symmetry_pass ? 1 : 4;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact face enumeration, Salvetti complexes, reflection-group quotients, and "
                 "Artin presentations for real hyperplane arrangements"};
    app.require_subcommand(1);

    Options faces_opt, sal_opt, check_opt, pres_opt;

    auto* faces = app.add_subcommand("faces", "Enumerate the face poset");
    add_source_options(faces, faces_opt);
    faces->add_option("--format", faces_opt.format, "Output format")
        ->check(CLI::IsMember({"json", "dot", "text"}));

    auto* salvetti = app.add_subcommand("salvetti", "Build the Salvetti poset");
    add_source_options(salvetti, sal_opt);
    salvetti->add_option("--format", sal_opt.format, "Output format")
        ->check(CLI::IsMember({"json", "dot", "text"}));
    salvetti->add_flag("--homology", sal_opt.with_homology, "Include integer homology");

    auto* check = app.add_subcommand("check", "Run structural checks");
    add_source_options(check, check_opt);
    check->add_option("--faces", check_opt.faces_file,
                      "Run covector-axiom checks over a face file instead");
    check->add_option("--format", check_opt.format, "Output format")
        ->check(CLI::IsMember({"json", "text"}));
    check->add_option("--seed", check_opt.seed, "Seed for the sampling oracle");

    auto* pres = app.add_subcommand("presentation", "Extract the Artin presentation");
    add_source_options(pres, pres_opt);
    pres->add_option("--format", pres_opt.format, "Output format")
        ->check(CLI::IsMember({"json", "text"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (faces->parsed()) return run_faces(faces_opt);
    if (salvetti->parsed()) return run_salvetti(sal_opt);
    if (check->parsed()) return run_check(check_opt);
    return run_presentation(pres_opt);
}
