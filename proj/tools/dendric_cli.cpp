#include <CLI11.hpp>
#include <json.hpp>

#include <climits>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "dendric/cassaigne.hpp"
#include "dendric/extensions.hpp"
#include "dendric/iet.hpp"
#include "dendric/sadic.hpp"
#include "dendric/ternary.hpp"

using namespace dendric;
using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUndecided = 2;
constexpr int kExitUsage = 64;

int default_horizon() {
    if (const char* env = std::getenv("DENDRIC_HORIZON")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 64;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("cannot read file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

DirectiveSequence load_ds(const std::string& path, int k_cap) {
    return DirectiveSequence::parse(slurp(path), k_cap);
}

std::vector<Rational> parse_lambda(const std::string& arg) {
    std::vector<Rational> out;
    std::string item;
    std::stringstream ss(arg);
    while (std::getline(ss, item, ',')) out.push_back(Rational::parse(item));
    return out;
}

struct Options {
    bool json_output = false;
    int horizon = default_horizon();
    int depth = 20;
    int k_cap = 64;
    int step_cap = 4096;
};

void emit(const Options& opt, const json& doc, const std::string& text) {
    if (opt.json_output) {
        json wrapped = doc;
        wrapped["schema"] = 1;
        std::cout << wrapped.dump(2) << "\n";
    } else {
        std::cout << text;
    }
}

int run_gen(const Options& opt, const std::string& ds_path, int level, int max_len) {
    DirectiveSequence ds = load_ds(ds_path, opt.k_cap);
    LevelLanguage l = language_of_level(ds, level, level + opt.depth, opt.horizon);
    int cap = max_len > 0 ? std::min(max_len, l.language.horizon()) : l.language.horizon();
    json doc{{"stabilized", l.stabilized}, {"levels", l.levels_used}, {"words", json::array()}};
    std::string text;
    for (const auto& w : l.language.all_words(cap)) {
        doc["words"].push_back(w.empty() ? "@" : w);
        text += (w.empty() ? "@" : w) + "\n";
    }
    emit(opt, doc, text);
    return l.stabilized ? kExitPass : kExitUndecided;
}

int run_audit(const Options& opt, const std::string& ds_path, int n_max) {
    DirectiveSequence ds = load_ds(ds_path, opt.k_cap);
    LevelLanguage l = language_of_level(ds, 1, 1 + opt.depth, opt.horizon);
    if (n_max <= 0) n_max = l.language.horizon() - 2;
    AuditReport report = dendricity_audit(l.language, n_max);
    json doc{{"pass", report.pass},
             {"stabilized", l.stabilized},
             {"n_max", report.n_max_effective},
             {"non_dendric", report.non_dendric},
             {"eq1_failures", report.multiplicity_failures},
             {"complexity", report.complexity}};
    std::string text = std::string("audit: ") + (report.pass ? "pass" : "FAIL") +
                       (l.stabilized ? "" : " (language not stabilized at this depth)") + "\n";
    text += "  n  p(n)\n";
    for (size_t n = 0; n < report.complexity.size(); ++n) {
        text += "  " + std::to_string(n) + "  " + std::to_string(report.complexity[n]) + "\n";
    }
    for (const auto& w : report.non_dendric) text += "  non-dendric: " + w + "\n";
    for (const auto& w : report.multiplicity_failures) text += "  multiplicity: " + w + "\n";
    emit(opt, doc, text);
    if (!report.pass) return kExitFail;
    return l.stabilized ? kExitPass : kExitUndecided;
}

int run_classify(const Options& opt, const std::string& ds_path, int scan_max) {
    DirectiveSequence ds = load_ds(ds_path, opt.k_cap);
    LevelLanguage l = language_of_level(ds, 1, 1 + opt.depth, opt.horizon);
    if (scan_max <= 0) scan_max = l.language.horizon() - 2;
    ShiftClass cls = classify_shift(l.language, scan_max);
    json doc{{"class", cls.label.str()},
             {"stable_at_minus", cls.stable_at_minus},
             {"stable_at_plus", cls.stable_at_plus},
             {"stabilized", l.stabilized}};
    std::string text = "class: " + cls.label.str() + "\n";
    emit(opt, doc, text);
    return l.stabilized ? kExitPass : kExitUndecided;
}

int run_derive(const Options& opt, const std::string& ds_path, int steps) {
    DirectiveSequence ds = load_ds(ds_path, opt.k_cap);
    LevelLanguage l = language_of_level(ds, 1, 1 + opt.depth, opt.horizon);
    FiniteLanguage current = l.language;
    json doc{{"steps", json::array()}};
    std::string text;
    for (int i = 0; i < steps; ++i) {
        DeriveStep step = ternary_derive_step(current);
        doc["steps"].push_back({{"label", label_expr(step.label)},
                                {"letter", std::string(1, step.special_letter)},
                                {"images", step.sigma.describe()}});
        text += label_expr(step.label) + "\n";
        current = step.derived;
    }
    emit(opt, doc, text);
    return kExitPass;
}

int run_graph_check(const Options& opt, const std::string& graph_name, const std::string& seq_path, bool equivalent) {
    ClassGraph g;
    if (graph_name == "G" || graph_name == "g") {
        g = build_g();
    } else if (graph_name == "Gp" || graph_name == "gp") {
        g = build_g_prime();
    } else if (graph_name == "Giet" || graph_name == "giet") {
        g = build_g_iet();
    } else {
        throw CLI::ValidationError("unknown graph: " + graph_name);
    }
    DirectiveSequence ds = load_ds(seq_path, opt.k_cap);
    if (ds.available_length() == INT_MAX) {
        throw CLI::ValidationError("graph check expects a finite prefix (no repeat: section)");
    }
    std::vector<Morphism> prefix = ds.prefix(ds.available_length());
    bool accepted;
    json doc{{"graph", g.name}, {"equivalent", equivalent}};
    std::string text;
    if (equivalent) {
        auto witness = equivalent_path(prefix, g);
        accepted = witness.has_value();
        if (witness) {
            json path = json::array();
            for (int v : witness->vertices) path.push_back(g.vertices[static_cast<size_t>(v)].str());
            doc["path"] = path;
        }
    } else {
        PathCheckResult r = path_check(prefix, g);
        accepted = r.accepted;
        json paths = json::array();
        for (const auto& path : r.vertex_paths) {
            json p = json::array();
            for (const auto& v : path) p.push_back(v.str());
            paths.push_back(p);
        }
        doc["paths"] = paths;
    }
    doc["accepted"] = accepted;
    text = accepted ? "accepted\n" : "rejected\n";
    emit(opt, doc, text);
    return accepted ? kExitPass : kExitFail;
}

int run_iet_code(const Options& opt, const std::string& lambda_arg, const std::string& pair, int n) {
    Iet t = make_iet(parse_lambda(lambda_arg), pair);
    FiniteLanguage l = coding_factors(t, n);
    json doc{{"pair", t.pair_str()}, {"words", json::array()}};
    std::string text;
    for (const auto& w : l.all_words(n)) {
        doc["words"].push_back(w.empty() ? "@" : w);
        text += (w.empty() ? "@" : w) + "\n";
    }
    emit(opt, doc, text);
    return kExitPass;
}

int run_iet_expand(const Options& opt, const std::string& lambda_arg, const std::string& pair, int depth) {
    Iet t = make_iet(parse_lambda(lambda_arg), pair);
    Expansion e = iet_expansion(t, depth);
    json doc{{"labels", json::array()}, {"classes", json::array()}};
    std::string text;
    for (const auto& s : e.steps) {
        doc["labels"].push_back(label_expr(s.label));
        text += label_expr(s.label) + "\n";
    }
    for (int c : e.class_path) doc["classes"].push_back(c == 0 ? "[3,2]" : "[3,3]");
    if (e.connection_at) {
        doc["connection_at"] = *e.connection_at;
        text += "# connection at step " + std::to_string(*e.connection_at) + "\n";
    }
    emit(opt, doc, text);
    return kExitPass;
}

int run_cassaigne_check(const Options& opt, int max_len) {
    DisjointnessReport r = disjointness_check(max_len);
    json ces = json::array();
    for (const auto& v : r.counterexamples) {
        std::string word;
        for (ScProduct p : v.word) word += sc_product_name(p) + " ";
        ces.push_back(word);
    }
    json doc{{"max_len", r.max_len},
             {"words_checked", r.words_checked},
             {"primitive_compatible", r.primitive_compatible},
             {"counterexamples", ces},
             {"pass", r.pass()}};
    std::string text = std::string("disjointness: ") + (r.pass() ? "pass" : "FAIL") + " (" +
                       std::to_string(r.words_checked) + " words, " + std::to_string(r.primitive_compatible) +
                       " primitive-compatible)\n";
    emit(opt, doc, text);
    return r.pass() ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dendric S-adic shift toolkit"};
    app.require_subcommand(1);
    Options opt;
    std::string format = "text";
    app.add_option("--format", format, "output format: text or json")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--horizon", opt.horizon, "language horizon (default 64 or DENDRIC_HORIZON)");
    app.add_option("--depth", opt.depth, "composition depth for language generation");
    app.add_option("--k-cap", opt.k_cap, "cap on k in parametric morphisms");
    app.add_option("--step-cap", opt.step_cap, "orbit step cap for induced maps");

    std::string ds_path, seq_path, graph_name = "G", lambda_arg, pair = "123/231";
    int level = 1, max_len = 0, n_max = 0, scan_max = 0, steps = 1, code_n = 8, depth = 10, cassaigne_len = 5;
    bool equivalent = false;

    CLI::App* gen = app.add_subcommand("gen", "generate and dump a level language");
    gen->add_option("--ds", ds_path, "directive sequence file")->required();
    gen->add_option("--level", level, "level to generate (1-based)");
    gen->add_option("--max-len", max_len, "dump words up to this length");

    CLI::App* audit = app.add_subcommand("audit", "dendricity audit of the generated language");
    audit->add_option("--ds", ds_path, "directive sequence file")->required();
    audit->add_option("--n-max", n_max, "audit words up to this length");

    CLI::App* classify = app.add_subcommand("classify", "compute the class label of the generated language");
    classify->add_option("--ds", ds_path, "directive sequence file")->required();
    classify->add_option("--scan-max", scan_max, "scan bispecial words up to this length");

    CLI::App* derive = app.add_subcommand("derive", "iterate the ternary derivation step");
    derive->add_option("--ds", ds_path, "directive sequence file")->required();
    derive->add_option("--steps", steps, "number of derivation steps");

    CLI::App* graph = app.add_subcommand("graph", "class graph operations");
    CLI::App* graph_check = graph->add_subcommand("check", "check a directive prefix against a graph");
    graph_check->add_option("--graph", graph_name, "G, Gp or Giet");
    graph_check->add_option("--seq", seq_path, "directive sequence file")->required();
    graph_check->add_flag("--equivalent", equivalent, "search over equivalent sequences");

    CLI::App* iet = app.add_subcommand("iet", "interval exchange operations");
    CLI::App* iet_code = iet->add_subcommand("code", "dump the natural coding language");
    iet_code->add_option("--lambda", lambda_arg, "lengths, e.g. 1/2,1/4,1/4")->required();
    iet_code->add_option("--perm", pair, "pair of permutations, e.g. 123/231");
    iet_code->add_option("--n", code_n, "coding horizon");
    CLI::App* iet_expand = iet->add_subcommand("expand", "expand into a directive prefix");
    iet_expand->add_option("--lambda", lambda_arg, "lengths, e.g. 5/9,3/9,1/9")->required();
    iet_expand->add_option("--perm", pair, "pair of permutations");
    iet_expand->add_option("--depth", depth, "maximal number of expansion steps");

    CLI::App* cassaigne = app.add_subcommand("cassaigne", "Cassaigne shift checks");
    CLI::App* cassaigne_check = cassaigne->add_subcommand("check", "bounded disjointness check");
    cassaigne_check->add_option("--max-len", cassaigne_len, "maximal product word length");

    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; })) sub->fallthrough();
    for (CLI::App* sub : {graph_check, iet_code, iet_expand, cassaigne_check}) sub->fallthrough();

    try {
        app.parse(argc, argv);
        opt.json_output = format == "json";
        if (gen->parsed()) return run_gen(opt, ds_path, level, max_len);
        if (audit->parsed()) return run_audit(opt, ds_path, n_max);
        if (classify->parsed()) return run_classify(opt, ds_path, scan_max);
        if (derive->parsed()) return run_derive(opt, ds_path, steps);
        if (graph->parsed() && graph_check->parsed()) return run_graph_check(opt, graph_name, seq_path, equivalent);
        if (iet->parsed() && iet_code->parsed()) return run_iet_code(opt, lambda_arg, pair, code_n);
        if (iet->parsed() && iet_expand->parsed()) return run_iet_expand(opt, lambda_arg, pair, depth);
        if (cassaigne->parsed() && cassaigne_check->parsed()) return run_cassaigne_check(opt, cassaigne_len);
        std::cerr << "missing subcommand\n";
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
