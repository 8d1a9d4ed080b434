#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "braidlink/braid.hpp"
#include "braidlink/links.hpp"
#include "braidlink/monodromy.hpp"
#include "braidlink/parse.hpp"
#include "braidlink/suite.hpp"

namespace {

using braidlink::BraidWord;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUnsupported = 3;

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

void emit(const json& report, bool as_json) {
    if (as_json) std::cout << report.dump(2) << "\n";
}

struct EvalReport {
    BraidWord compiled;
    BraidWord reduced;
    braidlink::NormalForm nf;
};

EvalReport evaluate(const std::string& expr, int strands) {
    EvalReport r;
    r.compiled = braidlink::eval_text(expr, strands);
    r.reduced = braidlink::free_reduce(r.compiled);
    r.nf = braidlink::normal_form(r.compiled);
    return r;
}

json eval_json(const std::string& expr, const EvalReport& r) {
    json out;
    out["input"] = expr;
    out["strands"] = r.compiled.strands;
    out["word"] = braidlink::word_str(r.compiled);
    out["reduced"] = braidlink::word_str(r.reduced);
    json nf;
    nf["delta"] = r.nf.delta_power;
    json fs = json::array();
    for (const auto& f : r.nf.factors) {
        std::vector<int> images;
        for (int x : f.images) images.push_back(x + 1);
        fs.push_back(images);
    }
    nf["factors"] = fs;
    out["normal_form"] = nf;
    out["normal_form_str"] = braidlink::normal_form_str(r.nf);
    out["permutation"] = braidlink::permutation_str(braidlink::permutation_image(r.compiled));
    out["exponent_sum"] = braidlink::exponent_sum(r.compiled);
    return out;
}

void print_eval(const EvalReport& r) {
    std::cout << "word:        " << braidlink::word_str(r.compiled) << "\n";
    std::cout << "reduced:     " << braidlink::word_str(r.reduced) << "\n";
    std::cout << "normal form: " << braidlink::normal_form_str(r.nf) << "\n";
    std::cout << "permutation: "
              << braidlink::permutation_str(braidlink::permutation_image(r.compiled)) << "\n";
    std::cout << "exponent sum: " << braidlink::exponent_sum(r.compiled) << "\n";
}

void print_summary(const braidlink::LinkSummary& s) {
    std::cout << "components (" << s.components.size() << "):";
    for (const auto& c : s.components) {
        std::cout << " {";
        for (size_t i = 0; i < c.size(); ++i) std::cout << (i ? " " : "") << c[i];
        std::cout << "}";
    }
    std::cout << "\nlinking matrix:\n";
    for (const auto& row : s.linking_matrix) {
        std::cout << " ";
        for (int x : row) std::cout << " " << x;
        std::cout << "\n";
    }
    std::cout << "self-writhes:";
    for (int x : s.self_writhes) std::cout << " " << x;
    std::cout << "\njones (t^{1/2} powers): " << s.jones.str("x") << "\n";
    for (size_t i = 0; i < s.per_component_jones.size(); ++i)
        std::cout << "jones of component " << i + 1 << ": " << s.per_component_jones[i].str("x")
                  << "\n";
    std::cout << "atlas: " << s.atlas_match << "\n";
}

json factorization_json(const braidlink::Factorization& f) {
    json fs = json::array();
    for (const auto& [label, w] : f.factors) {
        json row;
        row["label"] = label;
        row["word"] = braidlink::word_str(w);
        fs.push_back(row);
    }
    return fs;
}

int run_regen(const std::string& source, bool as_json, std::chrono::steady_clock::time_point t0) {
    // built-in name, or a JSON file holding a configuration or a diagram
    json report;
    report["input"] = source;
    bool is_builtin = std::find(braidlink::builtin_names().begin(),
                                braidlink::builtin_names().end(),
                                source) != braidlink::builtin_names().end();
    nlohmann::json doc;
    if (!is_builtin) {
        std::ifstream in(source);
        if (!in) {
            std::cerr << "error: no built-in example or readable file named '" << source
                      << "'\n";
            return kExitUsage;
        }
        try {
            in >> doc;
        } catch (const std::exception& e) {
            std::cerr << "error: bad JSON in " << source << ": " << e.what() << "\n";
            return kExitUsage;
        }
    }

    if (!is_builtin && doc.contains("vertices")) {
        auto diagram = braidlink::diagram_from_json(doc);
        auto regens = braidlink::regenerate_diagram(diagram);
        json rows = json::array();
        for (const auto& r : regens) {
            json row;
            row["vertex"] = r.point.vertex;
            row["k"] = r.point.count;
            row["variant"] = r.variant;
            row["factors"] = factorization_json(r.local);
            BraidWord p = braidlink::table_product(r.local);
            row["product"] = braidlink::word_str(p);
            row["summary"] = braidlink::summary_to_json(braidlink::summarize(p));
            rows.push_back(row);
            if (!as_json) {
                std::cout << "vertex " << r.point.vertex << ": " << r.point.count << "-point"
                          << (r.variant.empty() ? "" : " case " + r.variant) << ", product "
                          << braidlink::word_str(p) << "\n";
            }
        }
        report["points"] = rows;
        report["timing_ms"] = elapsed_ms(t0);
        emit(report, as_json);
        return kExitOk;
    }

    braidlink::Configuration cfg =
        is_builtin ? braidlink::builtin(source).config : braidlink::configuration_from_json(doc);
    auto f = braidlink::factorization_of(cfg);
    BraidWord p = braidlink::table_product(f);
    report["name"] = cfg.name;
    report["strands"] = f.strands;
    report["factors"] = factorization_json(f);
    report["product"] = braidlink::word_str(p);
    report["normal_form"] = braidlink::normal_form_str(braidlink::normal_form(p));
    report["summary"] = braidlink::summary_to_json(braidlink::summarize(p));
    report["timing_ms"] = elapsed_ms(t0);
    if (!as_json) {
        std::cout << "factors (" << f.factors.size() << "):\n";
        for (const auto& [label, w] : f.factors)
            std::cout << "  " << label << ": " << braidlink::word_str(w) << "\n";
        std::cout << "product: " << braidlink::word_str(p) << "\n";
        std::cout << "normal form: "
                  << braidlink::normal_form_str(braidlink::normal_form(p)) << "\n";
        print_summary(braidlink::summarize(p));
    }
    emit(report, as_json);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact braid words, monodromy factorizations and link invariants"};
    app.require_subcommand(1);

    int strands = 0;
    bool as_json = false;

    std::string expr;
    auto* cmd_eval = app.add_subcommand("eval", "compile an expression and print its word forms");
    cmd_eval->add_option("-n,--strands", strands, "strand count")->required();
    cmd_eval->add_option("expr", expr, "expression or word")->required();
    cmd_eval->add_flag("--json", as_json, "machine-readable output");

    auto* cmd_nf = app.add_subcommand("nf", "normal form of an expression");
    cmd_nf->add_option("-n,--strands", strands, "strand count")->required();
    cmd_nf->add_option("expr", expr, "expression or word")->required();
    cmd_nf->add_flag("--json", as_json, "machine-readable output");

    std::string expr_b;
    auto* cmd_eq = app.add_subcommand("eq", "decide whether two expressions are the same braid");
    cmd_eq->add_option("-n,--strands", strands, "strand count")->required();
    cmd_eq->add_option("a", expr, "first expression")->required();
    cmd_eq->add_option("b", expr_b, "second expression")->required();
    cmd_eq->add_flag("--json", as_json, "machine-readable output");

    auto* cmd_closure = app.add_subcommand("closure", "close a braid and print link invariants");
    cmd_closure->add_option("-n,--strands", strands, "strand count")->required();
    cmd_closure->add_option("expr", expr, "expression or word")->required();
    cmd_closure->add_flag("--json", as_json, "machine-readable output");

    auto* cmd_jones = app.add_subcommand("jones", "Jones polynomial of the closure");
    cmd_jones->add_option("-n,--strands", strands, "strand count")->required();
    cmd_jones->add_option("expr", expr, "expression or word")->required();
    cmd_jones->add_flag("--json", as_json, "machine-readable output");

    int component = 1, copies = 2, twists = 0;
    auto* cmd_cable = app.add_subcommand("cable", "replace a closure component by parallel copies");
    cmd_cable->add_option("-n,--strands", strands, "strand count")->required();
    cmd_cable->add_option("expr", expr, "expression or word")->required();
    cmd_cable->add_option("-c,--component", component, "component number (1-based)")->required();
    cmd_cable->add_option("-p,--copies", copies, "parallel copies");
    cmd_cable->add_option("-t,--twists", twists, "half twists inserted on the copies");
    cmd_cable->add_flag("--json", as_json, "machine-readable output");

    std::string source;
    auto* cmd_regen = app.add_subcommand("regen", "factorization of a built-in or JSON config");
    cmd_regen->add_option("config", source, "built-in name or JSON file");
    cmd_regen->add_flag("--json", as_json, "machine-readable output");
    bool list_builtins = false;
    cmd_regen->add_flag("--list", list_builtins, "list built-in example names");

    std::string filter;
    int jobs = 1;
    auto* cmd_suite = app.add_subcommand("suite", "run the built-in verification table");
    cmd_suite->add_option("--filter", filter, "run only rows whose id contains this substring");
    cmd_suite->add_option("--jobs", jobs, "rows to run in parallel");
    cmd_suite->add_flag("--json", as_json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    auto t0 = std::chrono::steady_clock::now();
    try {
        if (app.got_subcommand(cmd_eval) || app.got_subcommand(cmd_nf)) {
            EvalReport r = evaluate(expr, strands);
            if (as_json) {
                json out = eval_json(expr, r);
                out["timing_ms"] = elapsed_ms(t0);
                emit(out, true);
            } else if (app.got_subcommand(cmd_nf)) {
                std::cout << braidlink::normal_form_str(r.nf) << "\n";
            } else {
                print_eval(r);
            }
            return kExitOk;
        }
        if (app.got_subcommand(cmd_eq)) {
            BraidWord a = braidlink::eval_text(expr, strands);
            BraidWord b = braidlink::eval_text(expr_b, strands);
            bool same = braidlink::equal(a, b);
            if (as_json) {
                json out;
                out["a"] = expr;
                out["b"] = expr_b;
                out["equal"] = same;
                out["timing_ms"] = elapsed_ms(t0);
                emit(out, true);
            } else {
                std::cout << (same ? "equal" : "not equal") << "\n";
            }
            return same ? kExitOk : kExitCheckFailed;
        }
        if (app.got_subcommand(cmd_closure)) {
            BraidWord w = braidlink::eval_text(expr, strands);
            braidlink::LinkSummary s = braidlink::summarize(w);
            if (as_json) {
                json out;
                out["input"] = expr;
                out["summary"] = braidlink::summary_to_json(s);
                out["timing_ms"] = elapsed_ms(t0);
                emit(out, true);
            } else {
                print_summary(s);
            }
            return kExitOk;
        }
        if (app.got_subcommand(cmd_jones)) {
            BraidWord w = braidlink::eval_text(expr, strands);
            braidlink::LaurentPoly v = braidlink::jones(w);
            if (as_json) {
                json out;
                out["input"] = expr;
                out["jones"] = braidlink::jones_to_json(v);
                out["timing_ms"] = elapsed_ms(t0);
                emit(out, true);
            } else {
                std::cout << v.str("x") << "  (x = t^{1/2})\n";
            }
            return kExitOk;
        }
        if (app.got_subcommand(cmd_cable)) {
            BraidWord w = braidlink::eval_text(expr, strands);
            braidlink::CableResult r =
                braidlink::cable(w, braidlink::CableSpec{component - 1, copies, twists});
            braidlink::LinkSummary s = braidlink::summarize(r.word);
            if (as_json) {
                json out;
                out["input"] = expr;
                out["word"] = braidlink::word_str(r.word);
                out["strands"] = r.word.strands;
                out["blackboard_framing"] = r.blackboard_framing;
                out["summary"] = braidlink::summary_to_json(s);
                out["timing_ms"] = elapsed_ms(t0);
                emit(out, true);
            } else {
                std::cout << "cabled word (" << r.word.strands
                          << " strands): " << braidlink::word_str(r.word) << "\n";
                std::cout << "blackboard framing: " << r.blackboard_framing << "\n";
                print_summary(s);
            }
            return kExitOk;
        }
        if (app.got_subcommand(cmd_regen)) {
            if (list_builtins) {
                for (const auto& name : braidlink::builtin_names()) std::cout << name << "\n";
                return kExitOk;
            }
            if (source.empty()) {
                std::cerr << "error: pass a built-in name or JSON file (or --list)\n";
                return kExitUsage;
            }
            return run_regen(source, as_json, t0);
        }
        if (app.got_subcommand(cmd_suite)) {
            auto results = braidlink::run_suite(filter, jobs);
            if (as_json) {
                json out = braidlink::suite_report_json(results);
                out["filter"] = filter;
                out["timing_ms"] = elapsed_ms(t0);
                emit(out, true);
            } else {
                for (const auto& r : results)
                    std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.id << "  ("
                              << r.detail << ")\n";
                int failed = 0;
                for (const auto& r : results) failed += r.pass ? 0 : 1;
                std::cout << results.size() - failed << "/" << results.size() << " rows passed\n";
            }
            for (const auto& r : results)
                if (!r.pass) return kExitCheckFailed;
            return kExitOk;
        }
    } catch (const braidlink::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const braidlink::unsupported_feature& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return kExitUnsupported;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    return kExitUsage;
}
