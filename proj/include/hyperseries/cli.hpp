#pragma once

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hyperseries/errors.hpp"
#include "hyperseries/hyperreal.hpp"
#include "hyperseries/oracle.hpp"
#include "hyperseries/series.hpp"
#include "hyperseries/summation.hpp"
#include "hyperseries/text.hpp"

namespace hyperseries::cli {

enum ExitCode : int { ok = 0, check_failed = 1, usage_error = 2 };

struct Options {
    bool json = false;
    bool principal = false;
    bool std_part = false;
    std::string neg_base_mode = "error";
    int max_degree = 16;
    std::int64_t n = 0;
    std::int64_t window = 200;
    int holder = 0;
    std::int64_t mean_n = 100000;
    double tol = 1e-3;
    std::string batch;
    std::vector<std::string> inputs;

    EvalConfig config() const {
        EvalConfig cfg;
        cfg.neg_base_mode = neg_base_mode == "conjecture" ? NegBaseMode::conjecture_extended : NegBaseMode::error;
        cfg.max_power = max_degree;
        return cfg;
    }
};

inline void report_error(std::ostream& err, std::string_view input, const std::exception& e) {
    err << "error: " << e.what() << "\n";
    if (const auto* pe = dynamic_cast<const parse_error*>(&e)) {
        err << "  at byte " << pe->offset() << ":\n  " << input << "\n  " << std::string(pe->offset(), ' ') << "^\n";
    }
}

// One input line -> exit code. Output goes to `out`, diagnostics to `err`.
using Handler = std::function<int(const std::string&, std::ostream&)>;

inline int run_one(const Handler& handler, const std::string& input, std::ostream& out, std::ostream& err) {
    try {
        return handler(input, out);
    } catch (const error& e) {
        report_error(err, input, e);
        return usage_error;
    } catch (const std::invalid_argument& e) {
        report_error(err, input, e);
        return usage_error;
    }
}

inline int run_inputs(const Handler& handler, const Options& opt, std::istream& in, std::ostream& out,
                      std::ostream& err) {
    std::vector<std::string> inputs = opt.inputs;
    if (!opt.batch.empty()) {
        std::ifstream file;
        std::istream* src = &in;
        if (opt.batch != "-") {
            file.open(opt.batch);
            if (!file) {
                err << "error: cannot open batch file '" << opt.batch << "'\n";
                return usage_error;
            }
            src = &file;
        }
        for (std::string line; std::getline(*src, line);) {
            const auto first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos || line[first] == '#') {
                continue;
            }
            inputs.push_back(line.substr(0, line.find_last_not_of(" \t\r") + 1));
        }
    }
    if (inputs.empty()) {
        err << "error: no input expression given\n";
        return usage_error;
    }
    int code = ok;
    for (const auto& input : inputs) {
        code = std::max(code, run_one(handler, input, out, err));
    }
    return code;
}

inline int eval_command(const Options& opt, const std::string& input, std::ostream& out) {
    const Hyperreal value = sum_series(parse_series(input), opt.config());
    if (opt.json) {
        out << value_json(input, value).dump() << "\n";
        return ok;
    }
    if (opt.std_part) {
        const auto finite = standard_part(value);
        out << (finite ? finite->str() : std::string("none")) << "\n";
    } else if (opt.principal) {
        out << format_hyperreal(principal_value(value)) << "\n";
    } else {
        out << format_hyperreal(value) << "\n";
    }
    return ok;
}

inline int hyper_command(const Options& opt, const std::string& input, std::ostream& out) {
    const Hyperreal value = parse_hyperreal(input);
    if (opt.json) {
        out << value_json(input, value).dump() << "\n";
    } else if (opt.std_part) {
        const auto finite = standard_part(value);
        out << (finite ? finite->str() : std::string("none")) << "\n";
    } else {
        out << format_hyperreal(opt.principal ? principal_value(value) : value) << "\n";
    }
    return ok;
}

inline int partial_command(const Options& opt, const std::string& input, std::ostream& out) {
    out << brute_partial_sum(parse_series(input), opt.n).str() << "\n";
    return ok;
}

inline int formula_command(const Options& opt, const std::string& input, std::ostream& out) {
    const auto f = partial_sum_formula(parse_series(input), opt.config());
    if (opt.json) {
        out << nlohmann::json{{"input", input}, {"formula", format_formula(f)}, {"validFrom", f.valid_from}}.dump()
            << "\n";
    } else {
        out << format_formula(f) << "    (n >= " << f.valid_from << ")\n";
    }
    return ok;
}

inline int oracle_command(const Options& opt, const std::string& input, std::ostream& out) {
    const SeriesExpr s = parse_series(input);
    std::vector<VerificationReport> reports{check_formula(s, opt.window, input, opt.config())};
    if (opt.holder > 0) {
        reports.push_back(standard_part_crosscheck(s, opt.holder, opt.mean_n, opt.tol, input, opt.config()));
    }
    bool all_passed = true;
    for (const auto& r : reports) {
        all_passed = all_passed && r.passed();
        if (opt.json) {
            out << report_json(r).dump() << "\n";
            continue;
        }
        out << (r.passed() ? "pass" : "fail") << " [" << r.range_from << ", " << r.range_to << "] " << input;
        if (r.first_mismatch) {
            out << "  first mismatch at n=" << r.first_mismatch->n << ": expected " << r.first_mismatch->expected
                << ", got " << r.first_mismatch->got;
        }
        out << "\n";
    }
    return all_passed ? ok : check_failed;
}

/// Entry point of the `hyperseries` tool; returns the process exit code.
inline int run_cli(int argc, const char* const* argv, std::istream& in = std::cin, std::ostream& out = std::cout,
                   std::ostream& err = std::cerr) {
    CLI::App app{"Exact hyperreal values of convergent and divergent series", "hyperseries"};
    app.require_subcommand(1);
    Options opt;

    const auto add_common = [&opt](CLI::App* sub, bool evaluates) {
        sub->add_option("expr", opt.inputs, "Expression(s) to process");
        sub->add_option("--batch", opt.batch, "Read one expression per line from FILE ('-' for standard input)");
        sub->add_flag("--json", opt.json, "Emit JSON");
        if (evaluates) {
            sub->add_option("--neg-base-mode", opt.neg_base_mode, "Negative bases other than -1: error|conjecture")
                ->check(CLI::IsMember({"error", "conjecture"}));
            sub->add_option("--max-degree", opt.max_degree, "Largest power of i the engine will sum")
                ->check(CLI::PositiveNumber);
        }
    };

    auto* eval = app.add_subcommand("eval", "Hyperreal value of a series");
    add_common(eval, true);
    eval->add_flag("--principal", opt.principal, "Print only the principal value");
    eval->add_flag("--std", opt.std_part, "Print only the standard part (or 'none')");

    auto* hyper = app.add_subcommand("hyper", "Normalize a hyperreal literal such as 'w^2/2 + w/2'");
    add_common(hyper, false);
    hyper->add_flag("--principal", opt.principal, "Print only the principal value");
    hyper->add_flag("--std", opt.std_part, "Print only the standard part (or 'none')");

    auto* partial = app.add_subcommand("partial", "Brute-force partial sum up to index n");
    add_common(partial, false);
    partial->add_option("-n,--n", opt.n, "Upper index of the partial sum")->required();

    auto* formula = app.add_subcommand("formula", "Closed-form partial-sum formula");
    add_common(formula, true);

    auto* oracle = app.add_subcommand("oracle", "Check the closed form against brute-force partial sums");
    add_common(oracle, true);
    oracle->add_option("-N,--N", opt.window, "Number of points past validFrom to check")->check(CLI::PositiveNumber);
    oracle->add_option("--holder", opt.holder, "Also compare the Hoelder-k mean against the standard part")
        ->check(CLI::PositiveNumber);
    oracle->add_option("--mean-n", opt.mean_n, "Partial sums averaged by --holder")->check(CLI::PositiveNumber);
    oracle->add_option("--tol", opt.tol, "Tolerance for --holder")->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? ok : usage_error;
    }

    std::map<CLI::App*, Handler> handlers{
        {eval, [&opt](const std::string& s, std::ostream& o) { return eval_command(opt, s, o); }},
        {hyper, [&opt](const std::string& s, std::ostream& o) { return hyper_command(opt, s, o); }},
        {partial, [&opt](const std::string& s, std::ostream& o) { return partial_command(opt, s, o); }},
        {formula, [&opt](const std::string& s, std::ostream& o) { return formula_command(opt, s, o); }},
        {oracle, [&opt](const std::string& s, std::ostream& o) { return oracle_command(opt, s, o); }},
    };
    for (auto& [sub, handler] : handlers) {
        if (sub->parsed()) {
            return run_inputs(handler, opt, in, out, err);
        }
    }
    return usage_error;
}

} // namespace hyperseries::cli
