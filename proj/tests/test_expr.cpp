#include "qcong/expr.hpp"
#include "qcong/qseries.hpp"
#include "expr_corpus.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <functional>
#include <string>
#include <vector>

namespace qcong {
namespace {

TEST(Parse, Structure) {
    const ExprAst call = parse("qbinom(2*n, n)");
    EXPECT_EQ(call.root().kind, ExprKind::call);
    EXPECT_EQ(call.root().function, ExprFunction::qbinom);
    ASSERT_EQ(call.root().children.size(), 2U);
    EXPECT_EQ(call.root().children[0]->sort, ExprSort::integer);
    EXPECT_EQ(call.root().children[1]->kind, ExprKind::n);
    EXPECT_EQ(call.sort(), ExprSort::series);

    const ExprAst power = parse("q^(n^2)");
    EXPECT_EQ(power.root().kind, ExprKind::pow);
    EXPECT_EQ(power.root().children[1]->kind, ExprKind::pow);
    EXPECT_EQ(power.root().children[1]->sort, ExprSort::integer);
}

TEST(Parse, PrecedenceAndAssociativity) {
    EXPECT_EQ(parse("-q^2"), parse("-(q^2)"));
    EXPECT_EQ(parse("2^3^2"), parse("2^(3^2)"));
    EXPECT_EQ(parse("1 - 2 - 3"), parse("(1 - 2) - 3"));
    EXPECT_EQ(parse("1 + 2*3"), parse("1 + (2*3)"));
    EXPECT_EQ(parse("q/2/3"), parse("(q/2)/3"));
    EXPECT_FALSE(parse("1 - 2 - 3") == parse("1 - (2 - 3)"));
    EXPECT_EQ(parse("  q  +n "), parse("q+n"));
}

TEST(Parse, Sorts) {
    EXPECT_EQ(parse("n^2 - 1").sort(), ExprSort::integer);
    EXPECT_EQ(parse("trinom(3, 1)").sort(), ExprSort::integer);
    EXPECT_EQ(parse("n/2").sort(), ExprSort::series);
    EXPECT_EQ(parse("n*q").sort(), ExprSort::series);
    EXPECT_EQ(parse("-cyclo(n)").sort(), ExprSort::series);
}

TEST(Parse, TypeErrorsCarryPosition) {
    try {
        parse("qbinom(q, 1)");
        FAIL() << "expected a type error";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.offset(), 7U);
        EXPECT_NE(e.expected().find("integer"), std::string::npos);
    }
    try {
        parse("q^(1 + q)");
        FAIL() << "expected a type error";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.offset(), 3U);
    }
    EXPECT_THROW(parse("subst(q, q)"), ParseError);
    EXPECT_THROW(parse("trinom(n, n/2)"), ParseError);
    EXPECT_THROW(parse("q^(n/2)"), ParseError);
}

TEST(Parse, SyntaxErrorsCarryPosition) {
    struct Case {
        const char* text;
        std::size_t offset;
    };
    const std::vector<Case> cases = {
        {"", 0},        {"1 +", 3},       {"(q", 2},         {"q)", 1},        {"foo(1)", 0},
        {"qint(1, 2)", 6}, {"qint 3", 5}, {"1 $ 2", 2},      {"qbinom(3)", 8}, {"q^", 2},
        {"2 q", 2},     {"x", 0},
    };
    for (const auto& c : cases) {
        try {
            parse(c.text);
            ADD_FAILURE() << "no error for '" << c.text << "'";
        } catch (const ParseError& e) {
            EXPECT_EQ(e.offset(), c.offset) << c.text << ": " << e.what();
            EXPECT_FALSE(e.expected().empty());
        }
    }
}

TEST(Print, RoundTripCorpus) {
    ASSERT_GE(testing::expr_corpus().size(), 30U);
    for (const auto& text : testing::expr_corpus()) {
        const ExprAst ast = parse(text);
        const std::string printed = print(ast);
        ASSERT_EQ(parse(printed), ast) << text << " -> " << printed;
        ASSERT_EQ(print(parse(printed)), printed);
    }
}

TEST(Print, CorpusCoversEveryNodeKind) {
    std::vector<bool> kinds(static_cast<std::size_t>(ExprKind::call) + 1);
    std::vector<bool> functions(static_cast<std::size_t>(ExprFunction::rn) + 1);
    std::function<void(const ExprNode&)> visit = [&](const ExprNode& e) {
        kinds[static_cast<std::size_t>(e.kind)] = true;
        if (e.kind == ExprKind::call) functions[static_cast<std::size_t>(e.function)] = true;
        for (const auto& c : e.children) visit(*c);
    };
    for (const auto& text : testing::expr_corpus()) visit(parse(text).root());
    for (bool seen : kinds) EXPECT_TRUE(seen);
    for (bool seen : functions) EXPECT_TRUE(seen);
}

TEST(Print, CanonicalPolynomialTextRoundTrips) {
    testing::PolyGen gen(31);
    for (int trial = 0; trial < 100; ++trial) {
        const IntPoly num = gen.poly(10);
        const IntPoly den = gen.nonzero(4);
        ASSERT_EQ(eval(parse(to_string(num)), 0), RatFun(num));
        const RatFun r = ratfun_make(num, den);
        ASSERT_EQ(eval(parse(to_string(r)), 0), r) << to_string(r);
    }
}

TEST(Eval, Examples) {
    for (std::int64_t n : {0, 1, 7}) {
        EXPECT_EQ(eval(parse("qint(3)"), n), RatFun(IntPoly{1, 1, 1}));
        EXPECT_EQ(eval(parse("qtrinom(2,0)"), n), RatFun(IntPoly{1, 1, 1}));
        EXPECT_EQ(eval(parse("q^(0-2) * q^3"), n), RatFun(IntPoly::q()));
    }
    EXPECT_EQ(eval(parse("(1 - q^2)/(1 - q)"), 0), RatFun(IntPoly{1, 1}));
    EXPECT_EQ(eval(parse("qbinom(2*n, n)"), 3), RatFun(gauss_binom(6, 3)));
    EXPECT_EQ(eval(parse("subst(qbinom(3, 1), n^2)"), 2), RatFun(IntPoly{1, 0, 0, 0, 1, 0, 0, 0, 1}));
    EXPECT_EQ(eval(parse("cyclo(n)"), 6), RatFun(cyclotomic(6)));
    EXPECT_EQ(eval(parse("rn(n)"), 3), RatFun(r_n(3).value));
    EXPECT_EQ(eval_integer(parse("trinom(n, 0)"), 4), 19);
    EXPECT_EQ(eval_integer(parse("2^3^2 - n"), 12), 500);
    EXPECT_EQ(eval(parse("n/2"), 3), ratfun_make(IntPoly::constant(3), IntPoly::constant(2)));
}

TEST(Eval, Errors) {
    EXPECT_THROW(eval(parse("1/(q - q)"), 0), EvalError);
    EXPECT_THROW(eval(parse("qint(n)"), 0), EvalError);
    EXPECT_THROW(eval(parse("cyclo(n - 5)"), 2), EvalError);
    EXPECT_THROW(eval(parse("subst(q, 0)"), 0), EvalError);
    EXPECT_THROW(eval(parse("2^(0 - 1)"), 0), EvalError);
    EXPECT_THROW(eval(parse("(q - q)^(0 - 1)"), 0), EvalError);
    EXPECT_THROW(eval(parse("q^(10^30)"), 0), EvalError);
    EXPECT_THROW(eval_integer(parse("q"), 0), std::invalid_argument);
}

TEST(Eval, IsPureAndRepeatable) {
    const ExprAst e = parse("qbinom(2*n, n)*q^(-n) + cyclo(n)/(1 - q^(n + 1))");
    for (std::int64_t n = 1; n <= 8; ++n) ASSERT_EQ(eval(e, n), eval(parse(print(e)), n));
}

CheckSpec spec(const char* lhs, const char* rhs, const char* mod, std::int64_t power, std::int64_t a, std::int64_t b) {
    return CheckSpec{parse(lhs), parse(rhs), parse(mod), power, a, b};
}

TEST(RunCheck, Examples) {
    const auto c5 = run_check(spec("qbinom(2*n,n)", "2 - n*(1-q^n)", "cyclo(n)", 2, 1, 50));
    ASSERT_EQ(c5.size(), 50U);
    EXPECT_TRUE(all_hold(c5));
    for (std::size_t i = 0; i < c5.size(); ++i) {
        EXPECT_EQ(c5[i].statement, "adhoc");
        EXPECT_EQ(c5[i].params.at("n"), static_cast<std::int64_t>(i) + 1);
    }
    EXPECT_TRUE(all_hold(run_check(spec("q^n", "1", "cyclo(n)", 1, 1, 50))));
    const auto fail = run_check(spec("q", "1", "cyclo(2)", 1, 2, 2));
    ASSERT_EQ(fail.size(), 1U);
    EXPECT_FALSE(fail[0].holds);
    EXPECT_EQ(fail[0].residual_degree, 0);
    EXPECT_EQ(fail[0].residual, IntPoly::constant(-2));
}

TEST(RunCheck, PerPointFailuresAreReports) {
    std::vector<std::int64_t> flagged;
    const auto r = run_check(spec("q", "q", "2*q + 1", 1, 1, 2),
                             [&flagged](std::int64_t n, const std::string&) { flagged.push_back(n); });
    ASSERT_EQ(r.size(), 2U);
    EXPECT_EQ(r[0].reason, "invalid_modulus");
    EXPECT_FALSE(r[0].holds);
    EXPECT_EQ(flagged, (std::vector<std::int64_t>{1, 2}));
    const auto e = run_check(spec("qint(n)", "1", "cyclo(3)", 1, 0, 1));
    EXPECT_EQ(e[0].reason, "evaluation_error");
    EXPECT_TRUE(e[1].holds);
    EXPECT_EQ(run_check(spec("q", "q", "1/(1 - q)", 1, 1, 1))[0].reason, "invalid_modulus");
    EXPECT_EQ(run_check(spec("q", "q", "7", 1, 1, 1))[0].reason, "invalid_modulus");
    EXPECT_THROW(run_check(spec("q", "q", "q", 0, 1, 1)), std::invalid_argument);
    EXPECT_THROW(run_check(spec("q", "q", "q", 1, 2, 1)), std::invalid_argument);
}

TEST(RunCheck, EqualSidesAlwaysHold) {
    const std::vector<std::string> moduli = {"cyclo(n)", "q^2 + 1", "qint(n + 1)", "(q - 2)^n"};
    for (const auto& m : moduli) {
        const auto r = run_check(CheckSpec{parse("qbinom(n + 3, 2)/(3 + q)"), parse("qbinom(n + 3, 2)/(3 + q)"),
                                           parse(m), 2, 1, 6});
        ASSERT_TRUE(all_hold(r)) << m;
    }
}

TEST(Range, Parsing) {
    EXPECT_EQ(parse_range("1..20"), (std::pair<std::int64_t, std::int64_t>{1, 20}));
    EXPECT_EQ(parse_range("-3..-1"), (std::pair<std::int64_t, std::int64_t>{-3, -1}));
    EXPECT_EQ(parse_range("5..5"), (std::pair<std::int64_t, std::int64_t>{5, 5}));
    for (const char* bad : {"", "1", "1..", "..2", "a..b", "1...3", "3..1", "1 ..2", "1..2x"})
        EXPECT_THROW(parse_range(bad), std::invalid_argument) << bad;
}

}  // namespace
}  // namespace qcong
