// slweyl: batch CLI over the sl(1|2)[t] Weyl/CV-module combinatorics engine.
//
// Exit codes: 0 ok, 2 usage error, 3 invariant violation, 4 uncovered case.
// stdout carries data (JSON unless --format says otherwise), stderr carries
// diagnostics. Identical flags produce byte-identical output.

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "slweyl/checks.hpp"
#include "slweyl/cvmod.hpp"
#include "slweyl/weylchar.hpp"

namespace {

constexpr int kDefaultCap = 10;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitInvariant = 3;
constexpr int kExitUncovered = 4;

std::string join_ints(const std::vector<int>& values) {
    std::string out;
    for (size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(values[i]);
    }
    return out;
}

std::string json_int_list(const std::vector<int>& values) {
    return "[" + join_ints(values) + "]";
}

bool check_cap(int n, bool force) {
    if (n > kDefaultCap && !force) {
        std::cerr << "error: --n " << n << " exceeds the default cap " << kDefaultCap
                  << "; pass --force to override\n";
        return false;
    }
    return true;
}

int run_superpops(int n, const std::string& format, bool force) {
    if (!check_cap(n, force)) {
        return kExitUsage;
    }
    long long count = 0;
    for (const slweyl::SuperPop& sp : slweyl::enumerate_superpops(n)) {
        slweyl::BasisTuple t = slweyl::superpop_to_tuple(sp);
        slweyl::PbwWord word = slweyl::superpop_word(sp);
        slweyl::WordWeight w = slweyl::word_weight_grade(word);
        ++count;
        if (format == "json") {
            std::string record = slweyl::to_json(sp);
            record.pop_back();  // extend the super POP object in place
            record += ",\"a\":" + json_int_list(t.a) + ",\"b\":" + json_int_list(t.b) +
                      ",\"c\":" + json_int_list(t.c) + ",\"word\":\"" + word.to_string() +
                      "\",\"du1\":" + std::to_string(w.h1_offset) +
                      ",\"du2\":" + std::to_string(n + w.h2_offset) +
                      ",\"grade\":" + std::to_string(w.grade) + "}";
            std::cout << record << "\n";
        } else {
            std::cout << "row1=" << sp.matrix.row1_string() << " row2=" << sp.matrix.row2_string()
                      << " m=" << sp.pop.m << " overlay=" << sp.pop.overlay.to_string()
                      << " a=" << (t.a.empty() ? "-" : join_ints(t.a))
                      << " b=" << (t.b.empty() ? "-" : join_ints(t.b))
                      << " c=" << (t.c.empty() ? "-" : join_ints(t.c)) << " word=\""
                      << word.to_string() << "\" du1=" << w.h1_offset
                      << " du2=" << n + w.h2_offset << " grade=" << w.grade << "\n";
        }
    }
    if (format == "json") {
        std::cout << "{\"count\":" << count << "}\n";
    } else {
        std::cout << "count: " << count << "\n";
    }
    return kExitOk;
}

int run_character(int n, const std::string& method, const std::string& format, bool force) {
    if (!check_cap(n, force)) {
        return kExitUsage;
    }
    slweyl::GradedCharacter character;
    bool agree = true;
    if (method == "closed") {
        character = slweyl::character_closed(n);
    } else if (method == "tuples") {
        character = slweyl::character_from_tuples(n);
    } else if (method == "superpops") {
        character = slweyl::character_from_superpops(n);
    } else {
        character = slweyl::character_closed(n);
        agree = character == slweyl::character_from_tuples(n) &&
                character == slweyl::character_from_superpops(n);
    }
    std::cout << (format == "csv" ? slweyl::to_csv(character) : slweyl::to_json(character) + "\n");
    if (method == "all") {
        std::cout << "agree: " << (agree ? "true" : "false") << "\n";
        if (!agree) {
            std::cerr << "error: character routes disagree at n=" << n << "\n";
            return kExitInvariant;
        }
    }
    return kExitOk;
}

int run_cv_dim(const slweyl::CVIndex& idx) {
    std::cout << slweyl::cv_dim(idx.xi).get_str() << " / "
              << slweyl::fusion_dim(idx.xi).get_str() << "\n";
    return kExitOk;
}

int run_cv_relations(const slweyl::CVIndex& idx) {
    std::string out = "{\"xi\":\"" + idx.xi.to_string() + "\",\"relations\":[";
    bool first = true;
    for (const auto& [r, s] : slweyl::minimal_relations(idx.xi)) {
        if (!first) out += ",";
        first = false;
        out += "{\"r\":" + std::to_string(r) + ",\"s\":" + std::to_string(s) +
               ",\"bound\":" + std::to_string(slweyl::lemma_bound(idx.xi, r)) + "}";
    }
    out += "]}";
    std::cout << out << "\n";
    return kExitOk;
}

int run_cv_filtration(const slweyl::CVIndex& idx) {
    slweyl::FiltrationReport report = slweyl::verify_filtration(idx);
    std::cout << slweyl::to_json(report) << "\n";
    if (!report.balanced) {
        std::cerr << "error: dimension balance failed at xi=" << idx.xi.to_string() << "\n";
        return kExitInvariant;
    }
    return kExitOk;
}

int run_verify(int max_n, int max_size, int max_parts) {
    std::vector<slweyl::checks::CheckResult> results =
        slweyl::checks::run_all(max_n, max_size, max_parts);
    std::string out = "{\"max_n\":" + std::to_string(max_n) +
                      ",\"max_size\":" + std::to_string(max_size) +
                      ",\"max_parts\":" + std::to_string(max_parts) + ",\"sections\":[";
    bool all_passed = true;
    for (size_t i = 0; i < results.size(); ++i) {
        if (i > 0) out += ",";
        out += "{\"name\":\"" + results[i].name + "\",\"passed\":";
        out += results[i].passed ? "true" : "false";
        out += ",\"detail\":\"" + results[i].detail + "\"}";
        all_passed = all_passed && results[i].passed;
    }
    out += "],\"passed\":";
    out += all_passed ? "true}" : "false}";
    std::cout << out << "\n";
    if (!all_passed) {
        for (const auto& result : results) {
            if (!result.passed) {
                std::cerr << "verify failed (" << result.name << "): " << result.detail << "\n";
                break;
            }
        }
        return kExitInvariant;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact combinatorics of local Weyl and Chari-Venkatesh modules for sl(1|2)[t]"};
    app.require_subcommand(1);

    int n = 0;
    bool force = false;
    std::string format = "json";

    CLI::App* superpops = app.add_subcommand(
        "superpops", "Stream all super POPs with their tuples, words, weights and grades");
    superpops->add_option("--n", n, "Parameter n = psi(h2)")
        ->required()
        ->check(CLI::NonNegativeNumber);
    superpops->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "table"}))
        ->capture_default_str();
    superpops->add_flag("--force", force, "Override the default cap n <= 10");

    std::string method;
    CLI::App* character =
        app.add_subcommand("character", "Graded character of the local Weyl module");
    character->add_option("--n", n, "Parameter n = psi(h2)")
        ->required()
        ->check(CLI::NonNegativeNumber);
    character->add_option("--method", method, "Computation route")
        ->required()
        ->check(CLI::IsMember({"closed", "tuples", "superpops", "all"}));
    character->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    character->add_flag("--force", force, "Override the default cap n <= 10");

    std::string xi_text;
    long long lambda1_offset = 0;
    CLI::App* cv = app.add_subcommand("cv", "Chari-Venkatesh module V(xi) calculus");
    cv->fallthrough();
    cv->add_option("--xi", xi_text, "Partition, e.g. \"3,2\" (\"-\" for empty)")->required();
    cv->add_option("--lambda1-offset", lambda1_offset, "Offset of lambda_1 from its baseline")
        ->capture_default_str();
    cv->require_subcommand(1);
    CLI::App* cv_dim_cmd = cv->add_subcommand("dim", "Product and fusion dimensions");
    CLI::App* cv_rel_cmd =
        cv->add_subcommand("relations", "Minimal Garland relations and their bounds");
    CLI::App* cv_filt_cmd =
        cv->add_subcommand("filtration", "Kernel filtration report of the short exact sequence");

    int max_n = 8;
    int max_size = 12;
    int max_parts = 5;
    CLI::App* verify = app.add_subcommand("verify", "Run the full self-verification suite");
    verify->add_option("--max-n", max_n, "Largest Weyl module parameter")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    verify->add_option("--max-size", max_size, "Largest partition size in the filtration sweep")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    verify->add_option("--max-parts", max_parts, "Largest part count in the filtration sweep")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (superpops->parsed()) {
            return run_superpops(n, format, force);
        }
        if (character->parsed()) {
            return run_character(n, method, format, force);
        }
        if (cv->parsed()) {
            slweyl::CVIndex idx{lambda1_offset, slweyl::Partition::parse(xi_text)};
            if (cv_dim_cmd->parsed()) return run_cv_dim(idx);
            if (cv_rel_cmd->parsed()) return run_cv_relations(idx);
            if (cv_filt_cmd->parsed()) return run_cv_filtration(idx);
        }
        if (verify->parsed()) {
            return run_verify(max_n, max_size, max_parts);
        }
    } catch (const slweyl::UncoveredCaseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUncovered;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitOk;
}
