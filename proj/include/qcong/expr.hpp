#pragma once

/**
 * @file expr.hpp
 * @brief A small two-sorted expression language over q with a parameter n.
 *
 * Grammar, loosest binding first:
 *
 *     expr    := term (('+' | '-') term)*
 *     term    := unary (('*' | '/') unary)*
 *     unary   := '-' unary | power
 *     power   := primary ('^' unary)?
 *     primary := INTEGER | 'q' | 'n' | NAME '(' expr (',' expr)* ')' | '(' expr ')'
 *
 * Every node is typed when it is built. Integer-valued nodes are literals, n,
 * and + - * ^ over them, plus trinom(). Anything involving q, a division or a
 * q-function is q-valued. Exponents and integer function arguments must be
 * integer-valued; an integer may stand wherever a q-valued operand is expected.
 */

#include "qcong/congruence.hpp"
#include "qcong/int_poly.hpp"
#include "qcong/integer.hpp"
#include "qcong/qseries.hpp"
#include "qcong/rat_fun.hpp"
#include "qcong/statements.hpp"

#include <array>
#include <cctype>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qcong {

enum class ExprSort { integer, series };

enum class ExprKind { literal, q, n, negate, add, sub, mul, div, pow, call };

enum class ExprFunction { qint, qbinom, qtrinom, cyclo, trinom, subst, rn };

struct ExprNode;
using ExprNodePtr = std::shared_ptr<const ExprNode>;

struct ExprNode {
    ExprKind kind = ExprKind::literal;
    ExprSort sort = ExprSort::integer;
    std::size_t offset = 0;  ///< byte offset of the node's first token
    Integer value;           ///< literal value
    ExprFunction function = ExprFunction::qint;
    std::vector<ExprNodePtr> children;
};

namespace detail {

struct FunctionInfo {
    ExprFunction id;
    std::string_view name;
    std::vector<ExprSort> args;
    ExprSort result;
};

inline const std::vector<FunctionInfo>& function_table() {
    using S = ExprSort;
    static const std::vector<FunctionInfo> table = {
        {ExprFunction::qint, "qint", {S::integer}, S::series},
        {ExprFunction::qbinom, "qbinom", {S::integer, S::integer}, S::series},
        {ExprFunction::qtrinom, "qtrinom", {S::integer, S::integer}, S::series},
        {ExprFunction::cyclo, "cyclo", {S::integer}, S::series},
        {ExprFunction::trinom, "trinom", {S::integer, S::integer}, S::integer},
        {ExprFunction::subst, "subst", {S::series, S::integer}, S::series},
        {ExprFunction::rn, "rn", {S::integer}, S::series},
    };
    return table;
}

inline const FunctionInfo& function_info(ExprFunction f) {
    for (const auto& info : function_table())
        if (info.id == f) return info;
    throw std::logic_error("function_info: unknown function");
}

inline bool same_tree(const ExprNode& a, const ExprNode& b) {
    if (a.kind != b.kind || a.sort != b.sort || a.children.size() != b.children.size()) return false;
    if (a.kind == ExprKind::literal && a.value != b.value) return false;
    if (a.kind == ExprKind::call && a.function != b.function) return false;
    for (std::size_t i = 0; i < a.children.size(); ++i)
        if (!same_tree(*a.children[i], *b.children[i])) return false;
    return true;
}

}  // namespace detail

/// A parsed, typed expression. Equality compares structure and ignores offsets.
class ExprAst {
public:
    explicit ExprAst(ExprNodePtr root) : root_(std::move(root)) {
        if (!root_) throw std::invalid_argument("ExprAst: null root");
    }

    const ExprNode& root() const { return *root_; }
    ExprSort sort() const { return root_->sort; }

    friend bool operator==(const ExprAst& a, const ExprAst& b) { return detail::same_tree(*a.root_, *b.root_); }

private:
    ExprNodePtr root_;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t offset, std::string expected, std::string found)
        : std::runtime_error("at offset " + std::to_string(offset) + ": expected " + expected + ", found " + found),
          offset_(offset),
          expected_(std::move(expected)),
          found_(std::move(found)) {}

    std::size_t offset() const { return offset_; }
    const std::string& expected() const { return expected_; }
    const std::string& found() const { return found_; }

private:
    std::size_t offset_;
    std::string expected_;
    std::string found_;
};

namespace detail {

class ExprParser {
public:
    explicit ExprParser(std::string_view text) : text_(text) { advance(); }

    ExprNodePtr parse_all() {
        ExprNodePtr e = parse_expr();
        if (tok_.kind != Tok::end) fail("an operator or end of input");
        return e;
    }

private:
    enum class Tok { end, integer, name, symbol };

    struct Token {
        Tok kind = Tok::end;
        std::string_view text;
        std::size_t offset = 0;
    };

    [[noreturn]] void fail(const std::string& expected) const { throw ParseError(tok_.offset, expected, describe(tok_)); }

    static std::string describe(const Token& t) {
        switch (t.kind) {
            case Tok::end: return "end of input";
            case Tok::integer: return "integer " + std::string(t.text);
            case Tok::name: return "name '" + std::string(t.text) + "'";
            case Tok::symbol: return "'" + std::string(t.text) + "'";
        }
        return "unknown token";
    }

    void advance() {
        std::size_t i = pos_;
        while (i < text_.size() && std::isspace(static_cast<unsigned char>(text_[i]))) ++i;
        tok_.offset = i;
        if (i >= text_.size()) {
            tok_.kind = Tok::end;
            tok_.text = {};
            pos_ = i;
            return;
        }
        const auto c = static_cast<unsigned char>(text_[i]);
        std::size_t j = i + 1;
        if (std::isdigit(c)) {
            while (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]))) ++j;
            tok_.kind = Tok::integer;
        } else if (std::isalpha(c) || c == '_') {
            while (j < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[j])) || text_[j] == '_'))
                ++j;
            tok_.kind = Tok::name;
        } else if (std::string_view("+-*/^(),").find(static_cast<char>(c)) != std::string_view::npos) {
            tok_.kind = Tok::symbol;
        } else {
            throw ParseError(i, "an integer, name, operator or parenthesis",
                             "character '" + std::string(1, static_cast<char>(c)) + "'");
        }
        tok_.text = text_.substr(i, j - i);
        pos_ = j;
    }

    bool at_symbol(char c) const { return tok_.kind == Tok::symbol && tok_.text[0] == c; }

    void expect_symbol(char c) {
        if (!at_symbol(c)) fail(std::string("'") + c + "'");
        advance();
    }

    static ExprNodePtr make(ExprKind kind, ExprSort sort, std::size_t offset, std::vector<ExprNodePtr> children = {}) {
        auto node = std::make_shared<ExprNode>();
        node->kind = kind;
        node->sort = sort;
        node->offset = offset;
        node->children = std::move(children);
        return node;
    }

    static ExprSort join(const ExprNodePtr& a, const ExprNodePtr& b) {
        return (a->sort == ExprSort::series || b->sort == ExprSort::series) ? ExprSort::series : ExprSort::integer;
    }

    static void require_integer(const ExprNodePtr& e, const std::string& role) {
        if (e->sort != ExprSort::integer)
            throw ParseError(e->offset, "an integer expression for " + role, "a q-valued expression");
    }

    ExprNodePtr parse_expr() {
        ExprNodePtr left = parse_term();
        while (at_symbol('+') || at_symbol('-')) {
            const ExprKind kind = at_symbol('+') ? ExprKind::add : ExprKind::sub;
            advance();
            ExprNodePtr right = parse_term();
            const ExprSort sort = join(left, right);
            const std::size_t offset = left->offset;
            left = make(kind, sort, offset, {std::move(left), std::move(right)});
        }
        return left;
    }

    ExprNodePtr parse_term() {
        ExprNodePtr left = parse_unary();
        while (at_symbol('*') || at_symbol('/')) {
            const bool divide = at_symbol('/');
            advance();
            ExprNodePtr right = parse_unary();
            const ExprSort sort = divide ? ExprSort::series : join(left, right);
            const std::size_t offset = left->offset;
            left = make(divide ? ExprKind::div : ExprKind::mul, sort, offset, {std::move(left), std::move(right)});
        }
        return left;
    }

    ExprNodePtr parse_unary() {
        if (at_symbol('-')) {
            const std::size_t offset = tok_.offset;
            advance();
            ExprNodePtr operand = parse_unary();
            const ExprSort sort = operand->sort;
            return make(ExprKind::negate, sort, offset, {std::move(operand)});
        }
        return parse_power();
    }

    ExprNodePtr parse_power() {
        ExprNodePtr base = parse_primary();
        if (!at_symbol('^')) return base;
        advance();
        ExprNodePtr exponent = parse_unary();
        require_integer(exponent, "an exponent");
        const ExprSort sort = base->sort;
        const std::size_t offset = base->offset;
        return make(ExprKind::pow, sort, offset, {std::move(base), std::move(exponent)});
    }

    ExprNodePtr parse_primary() {
        const std::size_t offset = tok_.offset;
        switch (tok_.kind) {
            case Tok::integer: {
                auto node = std::make_shared<ExprNode>();
                node->kind = ExprKind::literal;
                node->sort = ExprSort::integer;
                node->offset = offset;
                node->value = Integer(std::string(tok_.text));
                advance();
                return node;
            }
            case Tok::name: {
                const std::string_view name = tok_.text;
                if (name == "q") {
                    advance();
                    return make(ExprKind::q, ExprSort::series, offset);
                }
                if (name == "n") {
                    advance();
                    return make(ExprKind::n, ExprSort::integer, offset);
                }
                for (const auto& info : function_table())
                    if (info.name == name) return parse_call(info);
                fail("'q', 'n' or a function name (qint, qbinom, qtrinom, cyclo, trinom, subst, rn)");
            }
            case Tok::symbol:
                if (at_symbol('(')) {
                    advance();
                    ExprNodePtr inner = parse_expr();
                    expect_symbol(')');
                    return inner;
                }
                break;
            case Tok::end: break;
        }
        fail("an integer, 'q', 'n', a function call or '('");
    }

    ExprNodePtr parse_call(const FunctionInfo& info) {
        const std::size_t offset = tok_.offset;
        advance();
        expect_symbol('(');
        std::vector<ExprNodePtr> args;
        for (std::size_t i = 0; i < info.args.size(); ++i) {
            if (i > 0) expect_symbol(',');
            ExprNodePtr arg = parse_expr();
            if (info.args[i] == ExprSort::integer)
                require_integer(arg, "argument " + std::to_string(i + 1) + " of " + std::string(info.name));
            args.push_back(std::move(arg));
        }
        if (at_symbol(','))
            fail("')' (" + std::string(info.name) + " takes " + std::to_string(info.args.size()) + " argument" +
                 (info.args.size() == 1 ? "" : "s") + ")");
        expect_symbol(')');
        auto node = std::make_shared<ExprNode>();
        node->kind = ExprKind::call;
        node->sort = info.result;
        node->offset = offset;
        node->function = info.id;
        node->children = std::move(args);
        return node;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    Token tok_;
};

inline int precedence(const ExprNode& e) {
    switch (e.kind) {
        case ExprKind::add:
        case ExprKind::sub: return 1;
        case ExprKind::mul:
        case ExprKind::div: return 2;
        case ExprKind::negate: return 3;
        case ExprKind::pow: return 4;
        default: return 5;
    }
}

inline void print_node(const ExprNode& e, std::string& out) {
    auto child = [&out](const ExprNode& c, bool parens) {
        if (parens) out += '(';
        print_node(c, out);
        if (parens) out += ')';
    };
    const int prec = precedence(e);
    switch (e.kind) {
        case ExprKind::literal: out += e.value.get_str(); return;
        case ExprKind::q: out += 'q'; return;
        case ExprKind::n: out += 'n'; return;
        case ExprKind::negate:
            out += '-';
            child(*e.children[0], precedence(*e.children[0]) < prec);
            return;
        case ExprKind::add:
        case ExprKind::sub:
        case ExprKind::mul:
        case ExprKind::div: {
            static constexpr std::array<std::string_view, 4> ops = {" + ", " - ", "*", "/"};
            child(*e.children[0], precedence(*e.children[0]) < prec);
            out += ops[static_cast<std::size_t>(e.kind) - static_cast<std::size_t>(ExprKind::add)];
            child(*e.children[1], precedence(*e.children[1]) <= prec);
            return;
        }
        case ExprKind::pow:
            child(*e.children[0], precedence(*e.children[0]) < 5);
            out += '^';
            child(*e.children[1], precedence(*e.children[1]) < 5);
            return;
        case ExprKind::call:
            out += function_info(e.function).name;
            out += '(';
            for (std::size_t i = 0; i < e.children.size(); ++i) {
                if (i > 0) out += ", ";
                print_node(*e.children[i], out);
            }
            out += ')';
            return;
    }
}

}  // namespace detail

inline ExprAst parse(std::string_view text) { return ExprAst(detail::ExprParser(text).parse_all()); }

/// Canonical text with minimal parentheses; parse(print(e)) == e.
inline std::string print(const ExprAst& e) {
    std::string out;
    detail::print_node(e.root(), out);
    return out;
}

class EvalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Largest q-degree an evaluation may ask for in a single step.
inline constexpr std::int64_t kMaxEvalDegree = std::int64_t{1} << 22;

namespace detail {

class Evaluator {
public:
    explicit Evaluator(std::int64_t n) : n_(n) {}

    Integer integer(const ExprNode& e) const {
        switch (e.kind) {
            case ExprKind::literal: return e.value;
            case ExprKind::n: return Integer(static_cast<long>(n_));
            case ExprKind::negate: return -integer(*e.children[0]);
            case ExprKind::add: return integer(*e.children[0]) + integer(*e.children[1]);
            case ExprKind::sub: return integer(*e.children[0]) - integer(*e.children[1]);
            case ExprKind::mul: return integer(*e.children[0]) * integer(*e.children[1]);
            case ExprKind::pow: {
                const Integer base = integer(*e.children[0]);
                const std::int64_t exponent = small(integer(*e.children[1]), "exponent");
                if (exponent < 0) throw EvalError("negative exponent " + std::to_string(exponent) + " on an integer");
                const auto bits = static_cast<std::int64_t>(mpz_sizeinbase(base.get_mpz_t(), 2));
                if (base != 0 && base != 1 && base != -1 && bits * exponent > kMaxEvalDegree * 64)
                    throw EvalError("integer power too large");
                Integer r;
                mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exponent));
                return r;
            }
            case ExprKind::call:
                if (e.function == ExprFunction::trinom)
                    return trinomial(degree_arg(*e.children[0], "trinom"), small(integer(*e.children[1]), "trinom"),
                                     TrinomialMethod::sum1);
                break;
            default: break;
        }
        throw std::logic_error("Evaluator: node is not integer-valued");
    }

    RatFun series(const ExprNode& e) const {
        if (e.sort == ExprSort::integer) return RatFun(integer(e));
        switch (e.kind) {
            case ExprKind::q: return RatFun(IntPoly::q());
            case ExprKind::negate: return -series(*e.children[0]);
            case ExprKind::add: return series(*e.children[0]) + series(*e.children[1]);
            case ExprKind::sub: return series(*e.children[0]) - series(*e.children[1]);
            case ExprKind::mul: return series(*e.children[0]) * series(*e.children[1]);
            case ExprKind::div: {
                const RatFun d = series(*e.children[1]);
                if (d.is_zero()) throw EvalError("division by zero");
                return series(*e.children[0]) / d;
            }
            case ExprKind::pow: {
                const RatFun base = series(*e.children[0]);
                const std::int64_t exponent = small(integer(*e.children[1]), "exponent");
                if (base.is_zero() && exponent < 0) throw EvalError("zero raised to a negative power");
                const std::int64_t width = std::max(base.num().degree(), base.den().degree());
                if (width > 0 && (exponent > kMaxEvalDegree / width || exponent < -kMaxEvalDegree / width))
                    throw EvalError("power of degree above " + std::to_string(kMaxEvalDegree));
                return base.pow(exponent);
            }
            case ExprKind::call: return call(e);
            default: break;
        }
        throw std::logic_error("Evaluator: unexpected node");
    }

private:
    static std::int64_t small(const Integer& v, const char* what) {
        if (!v.fits_slong_p()) throw EvalError(std::string(what) + " out of range: " + v.get_str());
        return v.get_si();
    }

    std::int64_t degree_arg(const ExprNode& e, const char* what) const {
        const std::int64_t v = small(integer(e), what);
        if (v > kMaxEvalDegree || v < -kMaxEvalDegree)
            throw EvalError(std::string(what) + " argument " + std::to_string(v) + " too large");
        return v;
    }

    RatFun call(const ExprNode& e) const {
        const auto& args = e.children;
        try {
            switch (e.function) {
                case ExprFunction::qint: {
                    const std::int64_t k = degree_arg(*args[0], "qint");
                    if (k < 1) throw EvalError("qint needs an argument >= 1, got " + std::to_string(k));
                    return RatFun(q_int(k));
                }
                case ExprFunction::qbinom: {
                    const std::int64_t a = degree_arg(*args[0], "qbinom");
                    const std::int64_t b = degree_arg(*args[1], "qbinom");
                    if (b >= 0 && b <= a && b * (a - b) > kMaxEvalDegree) throw EvalError("qbinom degree too large");
                    return RatFun(gauss_binom(a, b));
                }
                case ExprFunction::qtrinom: {
                    const std::int64_t a = degree_arg(*args[0], "qtrinom");
                    const std::int64_t j = degree_arg(*args[1], "qtrinom");
                    if (a > 2048) throw EvalError("qtrinom degree too large");
                    return RatFun(q_trinomial(a, j));
                }
                case ExprFunction::cyclo: {
                    const std::int64_t k = degree_arg(*args[0], "cyclo");
                    if (k < 1) throw EvalError("cyclo needs an argument >= 1, got " + std::to_string(k));
                    return RatFun(cyclotomic(k));
                }
                case ExprFunction::subst: {
                    const RatFun inner = series(*args[0]);
                    const std::int64_t m = degree_arg(*args[1], "subst");
                    if (m < 1) throw EvalError("subst needs an exponent >= 1, got " + std::to_string(m));
                    const std::int64_t width = std::max(inner.num().degree(), inner.den().degree());
                    if (width > 0 && width > kMaxEvalDegree / m) throw EvalError("subst degree too large");
                    return substitute_monomial(inner, m);
                }
                case ExprFunction::rn: {
                    const std::int64_t k = degree_arg(*args[0], "rn");
                    if (k < 1) throw EvalError("rn needs an argument >= 1, got " + std::to_string(k));
                    if (k > 4096) throw EvalError("rn degree too large");
                    return RatFun(r_n(k).value);
                }
                case ExprFunction::trinom: return RatFun(integer(e));
            }
        } catch (const std::invalid_argument& ex) {
            throw EvalError(ex.what());
        } catch (const std::domain_error& ex) {
            throw EvalError(ex.what());
        }
        throw std::logic_error("Evaluator: unknown function");
    }

    std::int64_t n_;
};

}  // namespace detail

/// Value of e at the given n, as an element of Q(q); polynomials carry denominator 1.
inline RatFun eval(const ExprAst& e, std::int64_t n) { return detail::Evaluator(n).series(e.root()); }

/// Value of an integer-valued expression.
inline Integer eval_integer(const ExprAst& e, std::int64_t n) {
    if (e.sort() != ExprSort::integer) throw std::invalid_argument("eval_integer: expression is q-valued");
    return detail::Evaluator(n).integer(e.root());
}

struct CheckSpec {
    ExprAst lhs;
    ExprAst rhs;
    ExprAst modulus;
    std::int64_t power = 1;
    std::int64_t first = 1;
    std::int64_t last = 1;
};

/// Called with n and a message for every point that could not be decided.
using CheckDiagnostic = std::function<void(std::int64_t, const std::string&)>;

/**
 * Decides lhs = rhs modulo modulus^power for each n in [first, last], in
 * ascending n. Points whose modulus is not a monic polynomial of positive
 * degree get reason "invalid_modulus"; points where evaluation fails get
 * "evaluation_error".
 */
inline std::vector<VerificationReport> run_check(const CheckSpec& spec, const CheckDiagnostic& diagnostic = {}) {
    if (spec.power < 1) throw std::invalid_argument("run_check: power must be >= 1");
    if (spec.first > spec.last)
        throw std::invalid_argument("run_check: empty range " + std::to_string(spec.first) + ".." +
                                    std::to_string(spec.last));
    std::vector<VerificationReport> out;
    for (std::int64_t n = spec.first; n <= spec.last; ++n) {
        const auto start = std::chrono::steady_clock::now();
        VerificationReport r;
        r.statement = "adhoc";
        r.params = {{"n", n}};
        auto fail = [&](const char* reason, const std::string& message) {
            r.holds = false;
            r.reason = reason;
            if (diagnostic) diagnostic(n, message);
        };
        try {
            const RatFun m = eval(spec.modulus, n);
            if (!m.is_polynomial() || !m.num().is_monic() || m.num().degree() < 1) {
                fail("invalid_modulus", "modulus " + to_string(m) + " is not a monic polynomial of positive degree");
            } else {
                const CongruenceResult v = congruent(eval(spec.lhs, n), eval(spec.rhs, n), Modulus(m.num(), spec.power));
                r.holds = v.holds;
                r.reason = std::string(to_string(v.reason));
                if (!v.holds) r.residual_degree = v.residual.degree();
                r.residual = v.residual;
            }
        } catch (const EvalError& ex) {
            fail("evaluation_error", ex.what());
        }
        r.elapsed = std::chrono::steady_clock::now() - start;
        out.push_back(std::move(r));
    }
    return out;
}

/// Parses "A..B" into (A, B) with A <= B.
inline std::pair<std::int64_t, std::int64_t> parse_range(std::string_view text) {
    const auto dots = text.find("..");
    if (dots == std::string_view::npos) throw std::invalid_argument("range must look like A..B, got '" + std::string(text) + "'");
    auto number = [&text](std::string_view part) {
        std::size_t used = 0;
        std::int64_t v = 0;
        const std::string s(part);
        try {
            v = std::stoll(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (s.empty() || used != s.size() || std::isspace(static_cast<unsigned char>(s.front())))
            throw std::invalid_argument("range must look like A..B, got '" + std::string(text) + "'");
        return v;
    };
    const std::int64_t a = number(text.substr(0, dots));
    const std::int64_t b = number(text.substr(dots + 2));
    if (a > b) throw std::invalid_argument("range " + std::string(text) + " is empty");
    return {a, b};
}

}  // namespace qcong
