// Command-line front end: verify named statements, run ad-hoc congruence
// checks, evaluate expressions. Exit status: 0 all verdicts hold, 1 some
// verdict fails, 2 usage, parse or evaluation error.

#include "qcong/expr.hpp"
#include "qcong/statements.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitUsage = 2;

std::string format_params(const std::map<std::string, std::int64_t>& params) {
    std::string out;
    for (const auto& [key, value] : params) {
        if (!out.empty()) out += ' ';
        out += key + '=' + std::to_string(value);
    }
    return out;
}

void print_table(const std::vector<qcong::VerificationReport>& reports, bool verbose) {
    for (const auto& r : reports) {
        std::ostringstream line;
        line << std::left << std::setw(5) << (r.holds ? "ok" : "FAIL") << std::setw(14) << r.statement
             << std::setw(14) << format_params(r.params) << std::setw(25) << r.reason;
        if (r.residual_degree) line << "deg " << std::setw(8) << *r.residual_degree;
        else line << std::setw(12) << "";
        line << std::right << std::fixed << std::setprecision(2) << std::setw(10) << r.elapsed.count() << " ms";
        if (verbose && !r.residual.is_zero()) line << "  residual " << qcong::to_string(r.residual);
        std::cout << line.str() << '\n';
    }
}

int emit(const std::vector<qcong::VerificationReport>& reports, bool json, bool verbose) {
    if (json) {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& r : reports) out.push_back(qcong::to_json(r, verbose));
        std::cout << out.dump(2) << '\n';
    } else {
        print_table(reports, verbose);
    }
    return qcong::all_hold(reports) ? kExitHolds : kExitFails;
}

qcong::SuiteParams parse_params(const std::string& text) {
    qcong::SuiteParams params;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("parameter '" + item + "' must look like key=value");
        const std::string key = item.substr(0, eq);
        const std::string value = item.substr(eq + 1);
        std::size_t used = 0;
        std::int64_t v = 0;
        try {
            v = std::stoll(value, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (value.empty() || used != value.size())
            throw std::invalid_argument("parameter '" + key + "' needs an integer value, got '" + value + "'");
        if (key == "a") params.a = v;
        else if (key == "b") params.b = v;
        else throw std::invalid_argument("unknown parameter '" + key + "' (known: a, b)");
    }
    return params;
}

qcong::ExprAst parse_option(const std::string& flag, const std::string& text) {
    try {
        return qcong::parse(text);
    } catch (const qcong::ParseError& e) {
        std::ostringstream msg;
        msg << flag << ": parse error " << e.what() << "\n  " << text << "\n  " << std::string(e.offset(), ' ') << '^';
        throw std::invalid_argument(msg.str());
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of q-congruences modulo powers of cyclotomic polynomials"};
    app.require_subcommand(1);

    std::string statement;
    std::string range;
    std::string params_text;
    bool json = false;
    bool verbose = false;
    auto* verify = app.add_subcommand("verify", "Check a named statement (or 'all') over a range of n");
    verify->add_option("statement", statement, "Statement id or 'all'")->required();
    verify->add_option("--range", range, "Inclusive range A..B")->required();
    verify->add_option("--params", params_text, "Extra parameters, e.g. a=3,b=1");
    verify->add_flag("--json", json, "Emit a JSON array");
    verify->add_flag("--verbose", verbose, "Include residual polynomials");

    std::string lhs;
    std::string rhs;
    std::string modulus;
    std::int64_t power = 1;
    auto* check = app.add_subcommand("check", "Decide lhs = rhs modulo mod^pow for each n in range");
    check->add_option("--lhs", lhs, "Left-hand side")->required();
    check->add_option("--rhs", rhs, "Right-hand side")->required();
    check->add_option("--mod", modulus, "Monic modulus base")->required();
    check->add_option("--pow", power, "Power of the modulus")->check(CLI::PositiveNumber)->default_val(1);
    check->add_option("--range", range, "Inclusive range A..B")->required();
    check->add_flag("--json", json, "Emit a JSON array");
    check->add_flag("--verbose", verbose, "Include residual polynomials");

    std::string expression;
    std::int64_t n = 0;
    auto* evaluate = app.add_subcommand("eval", "Evaluate an expression at one n");
    evaluate->add_option("expression", expression, "Expression in q and n")->required();
    evaluate->add_option("--n", n, "Value of n")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitHolds : kExitUsage;
    }

    try {
        if (*verify) {
            const auto [first, last] = qcong::parse_range(range);
            std::vector<qcong::StatementId> ids;
            if (statement == "all") {
                ids.assign(qcong::kAllStatements.begin(), qcong::kAllStatements.end());
            } else if (auto id = qcong::parse_statement_id(statement)) {
                ids.push_back(*id);
            } else {
                throw std::invalid_argument("unknown statement '" + statement + "'");
            }
            return emit(qcong::run_suite(ids, first, last, parse_params(params_text)), json, verbose);
        }
        if (*check) {
            const auto [first, last] = qcong::parse_range(range);
            const qcong::CheckSpec spec{parse_option("--lhs", lhs), parse_option("--rhs", rhs),
                                        parse_option("--mod", modulus), power, first, last};
            const auto reports = qcong::run_check(spec, [](std::int64_t at, const std::string& message) {
                std::cerr << "n=" << at << ": " << message << '\n';
            });
            return emit(reports, json, verbose);
        }
        const qcong::ExprAst ast = parse_option("expression", expression);
        if (ast.sort() == qcong::ExprSort::integer) {
            std::cout << qcong::eval_integer(ast, n).get_str() << '\n';
        } else {
            const qcong::RatFun value = qcong::eval(ast, n);
            std::cout << (value.is_polynomial() ? qcong::to_string(value.num()) : qcong::to_string(value)) << '\n';
        }
        return kExitHolds;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
    } catch (const qcong::EvalError& e) {
        std::cerr << "evaluation error: " << e.what() << '\n';
    }
    return kExitUsage;
}
