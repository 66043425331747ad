// dualtv CLI: evaluate single inferences under either calculus, verify the
// bundled reference examples, run grid sweeps to CSV/JSON, and execute
// scenario files with optional golden checks.
//
// Exit codes: 0 success / all checks passed, 1 runtime or domain error,
// 2 usage or parse error.

#include "dualtv/comparison.hpp"
#include "dualtv/report.hpp"
#include "dualtv/scenario.hpp"
#include "dualtv/sweep.hpp"
#include "dualtv/truth_core.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = text.find(sep, start);
        if (pos == std::string::npos) {
            parts.push_back(text.substr(start));
            return parts;
        }
        parts.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

double parse_number(const std::string& text, const std::string& what) {
    try {
        std::size_t consumed = 0;
        const double v = std::stod(text, &consumed);
        if (consumed != text.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw dualtv::UsageError(what + ": expected a number, got '" + text + "'");
    }
}

dualtv::TruthValue parse_tv_flag(const std::string& text, const std::string& flag) {
    const std::vector<std::string> parts = split(text, ',');
    if (parts.size() != 2) {
        throw dualtv::UsageError(flag + ": expected 'value,confidence', got '" + text + "'");
    }
    return dualtv::make_truth_value(parse_number(parts[0], flag + " value"),
                                    parse_number(parts[1], flag + " confidence"));
}

dualtv::TermProbabilities parse_terms_flag(const std::string& text) {
    const std::vector<std::string> parts = split(text, ',');
    if (parts.size() != 3) {
        throw dualtv::UsageError("--terms: expected 's_a,s_b,s_c', got '" + text + "'");
    }
    return dualtv::make_term_probabilities(parse_number(parts[0], "--terms s_a"),
                                           parse_number(parts[1], "--terms s_b"),
                                           parse_number(parts[2], "--terms s_c"));
}

struct EvalOptions {
    std::string system;
    std::string rule;
    std::string variant;
    std::string tv1;
    std::string tv2;
    std::string terms;
    double k = 0.5;
    std::string format = "text";
};

int cmd_eval(const EvalOptions& opt) {
    const dualtv::RuleKind rule = dualtv::parse_rule_kind(opt.rule);
    const dualtv::TruthValue tv1 = parse_tv_flag(opt.tv1, "--tv1");
    const dualtv::TruthValue tv2 = parse_tv_flag(opt.tv2, "--tv2");
    std::optional<dualtv::TermProbabilities> terms;
    if (!opt.terms.empty()) terms = parse_terms_flag(opt.terms);

    dualtv::InferenceResult result;
    if (opt.system == "nars") {
        if (!opt.variant.empty()) {
            throw dualtv::UsageError("--variant applies to --system pln only");
        }
        if (terms.has_value()) {
            throw dualtv::UsageError("--terms applies to pln full variants only");
        }
        result = dualtv::evaluate_nars(rule, tv1, tv2, opt.k);
    } else {
        if (opt.variant.empty()) {
            throw dualtv::UsageError("--system pln requires --variant");
        }
        const dualtv::PlnVariant variant = dualtv::parse_pln_variant(opt.variant);
        if (!dualtv::variant_needs_terms(variant) && terms.has_value()) {
            throw dualtv::UsageError("--terms applies to pln full variants only");
        }
        result = dualtv::evaluate_pln(rule, variant, tv1, tv2, terms);
    }

    if (opt.format == "json") {
        std::cout << dualtv::result_to_json(result).dump(2) << "\n";
    } else {
        std::cout << dualtv::render_result_text(result);
    }
    return kExitOk;
}

int cmd_examples(const std::string& format) {
    const std::vector<dualtv::ReferenceExample> examples = dualtv::reference_examples();
    const bool all_pass =
        std::all_of(examples.begin(), examples.end(),
                    [](const dualtv::ReferenceExample& ex) { return ex.all_pass; });
    if (format == "json") {
        std::cout << dualtv::examples_to_json(examples).dump(2) << "\n";
    } else {
        std::cout << dualtv::render_examples_text(examples);
    }
    return all_pass ? kExitOk : kExitRuntime;
}

struct SweepOptions {
    std::string rule;
    std::string variants;
    std::string terms;
    std::string out;
    std::string format = "csv";
    double grid_step = 0.05;
    double k = 0.5;
    std::vector<std::string> pins;
};

int cmd_sweep(const SweepOptions& opt) {
    dualtv::SweepConfig cfg;
    cfg.rule = dualtv::parse_rule_kind(opt.rule);
    cfg.variants = dualtv::parse_pln_variants(opt.variants);
    cfg.grid_step = opt.grid_step;
    cfg.k = opt.k;
    for (const std::string& pin : opt.pins) {
        const std::size_t eq = pin.find('=');
        if (eq == std::string::npos) {
            throw dualtv::UsageError("--pin: expected 'dim=value', got '" + pin + "'");
        }
        const dualtv::Dim dim = dualtv::parse_dim(pin.substr(0, eq));
        auto& slot = cfg.pins[static_cast<std::size_t>(dim)];
        if (slot.has_value()) {
            throw dualtv::UsageError("--pin: dimension '" +
                                     std::string(dualtv::to_string(dim)) + "' pinned twice");
        }
        slot = parse_number(pin.substr(eq + 1), "--pin " + pin.substr(0, eq));
    }
    if (!opt.terms.empty()) {
        try {
            cfg.terms = parse_terms_flag(opt.terms);
        } catch (const dualtv::DomainError& e) {
            throw dualtv::UsageError(e.what());  // bad sweep config, not a runtime failure
        }
    }

    const dualtv::SweepResult result = dualtv::run_sweep(cfg);

    std::ofstream out(opt.out, std::ios::binary);
    if (!out) {
        throw dualtv::Error("cannot open output file '" + opt.out + "'");
    }
    if (opt.format == "json") {
        dualtv::write_sweep_json(out, result);
    } else {
        dualtv::write_records_csv(out, result.records);
    }
    out.flush();
    if (!out) {
        throw dualtv::Error("failed while writing output file '" + opt.out + "'");
    }

    std::cout << dualtv::render_summary_text(result.summary);
    std::cout << "wrote " << opt.out << "\n";
    return kExitOk;
}

int cmd_run(const std::string& path) {
    const dualtv::ScenarioFile file = dualtv::load_scenario_file(path);
    const std::vector<dualtv::ScenarioOutcome> outcomes = dualtv::evaluate_scenarios(file);
    std::size_t total = 0;
    std::size_t passed = 0;
    for (const dualtv::ScenarioOutcome& oc : outcomes) {
        std::cout << "scenario " << oc.index << " (" << dualtv::to_string(oc.record.rule)
                  << "): ";
        if (oc.checks.empty()) {
            std::cout << "no expected values\n";
            continue;
        }
        std::size_t ok = 0;
        for (const dualtv::ValueCheck& c : oc.checks) {
            if (c.pass) ++ok;
        }
        std::cout << ok << "/" << oc.checks.size() << " checks passed\n";
        for (const dualtv::ValueCheck& c : oc.checks) {
            if (!c.pass) {
                std::cout << "  " << c.key << ": computed " << dualtv::format_double(c.computed)
                          << " expected " << dualtv::format_double(c.expected) << " FAIL\n";
            }
        }
        total += oc.checks.size();
        passed += ok;
    }
    std::cout << outcomes.size() << " scenarios, " << passed << "/" << total
              << " checks passed\n";
    return passed == total ? kExitOk : kExitRuntime;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Compare the NARS and PLN truth-value calculi pointwise and over grids"};
    app.require_subcommand(1);

    EvalOptions eval_opt;
    CLI::App* eval = app.add_subcommand("eval", "Evaluate one inference rule at one point");
    eval->add_option("--system", eval_opt.system, "Calculus to run")
        ->required()
        ->check(CLI::IsMember({"nars", "pln"}));
    eval->add_option("--rule", eval_opt.rule, "deduction|induction|abduction")->required();
    eval->add_option("--variant", eval_opt.variant, "PLN variant name (pln only)");
    eval->add_option("--tv1", eval_opt.tv1, "First premise as value,confidence")->required();
    eval->add_option("--tv2", eval_opt.tv2, "Second premise as value,confidence")->required();
    eval->add_option("--k", eval_opt.k, "NARS experience parameter")->capture_default_str();
    eval->add_option("--terms", eval_opt.terms, "Term probabilities s_a,s_b,s_c (full variants)");
    eval->add_option("--format", eval_opt.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    std::string examples_format = "text";
    CLI::App* examples =
        app.add_subcommand("examples", "Check the bundled reference examples");
    examples->add_option("--format", examples_format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    SweepOptions sweep_opt;
    CLI::App* sweep = app.add_subcommand("sweep", "Grid sweep premise space to a file");
    sweep->add_option("--rule", sweep_opt.rule, "deduction|induction|abduction")->required();
    sweep->add_option("--variants", sweep_opt.variants, "Comma-separated PLN variant names")
        ->required();
    sweep->add_option("--grid-step", sweep_opt.grid_step, "Axis step; must divide 1")
        ->capture_default_str();
    sweep->add_option("--k", sweep_opt.k, "NARS experience parameter")->capture_default_str();
    sweep->add_option("--pin", sweep_opt.pins, "Pin a dimension, e.g. f1=0.5 (repeatable)");
    sweep->add_option("--terms", sweep_opt.terms, "Pinned term probabilities s_a,s_b,s_c");
    sweep->add_option("--out", sweep_opt.out, "Output file path")->required();
    sweep->add_option("--format", sweep_opt.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();

    std::string scenarios_path;
    CLI::App* run = app.add_subcommand("run", "Run a scenario file with optional checks");
    run->add_option("--scenarios", scenarios_path, "Path to a scenario JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (eval->parsed()) return cmd_eval(eval_opt);
        if (examples->parsed()) return cmd_examples(examples_format);
        if (sweep->parsed()) return cmd_sweep(sweep_opt);
        if (run->parsed()) return cmd_run(scenarios_path);
        std::cerr << "error: no subcommand given\n";
        return kExitUsage;
    } catch (const dualtv::UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const dualtv::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
}
