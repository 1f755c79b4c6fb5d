#pragma once

/**
 * @file statements.hpp
 * @brief Named congruence and identity checks for q-trinomial and q-binomial
 * coefficients, plus their integer counterparts.
 *
 * Each check evaluates one instance (fixed n, and k or a, b where needed) and
 * returns a VerificationReport. The q-side congruences are decided in
 * CyclotomicQuotient, so the Gaussian binomials are reduced before they are
 * multiplied. The exact identity for the alternating sum
 *
 *     (1 - q^n) sum_{k <= n/2} (-1)^k q^(k(k-1)/2) [n-k k] / (1 - q^(n-k)) = R_n(q)
 *
 * is decided by Taylor coefficients up to a degree bound; see check_lemma_b1.
 */

#include "qcong/congruence.hpp"
#include "qcong/int_poly.hpp"
#include "qcong/integer.hpp"
#include "qcong/qseries.hpp"
#include "qcong/rat_fun.hpp"
#include "qcong/residue.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iterator>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qcong {

enum class StatementId {
    theorem1,
    theorem2,
    lemma_b1,
    lemma_b2,
    prop_a1,
    andrews_new4,
    straub_a3,
    straub_new5,
    step_c1,
    step_c2,
    step_c5,
    babbage_new3,
    wolstenholme,
    sun_new6,
};

inline constexpr std::array<StatementId, 14> kAllStatements = {
    StatementId::theorem1,     StatementId::theorem2,  StatementId::lemma_b1,    StatementId::lemma_b2,
    StatementId::prop_a1,      StatementId::andrews_new4, StatementId::straub_a3, StatementId::straub_new5,
    StatementId::step_c1,      StatementId::step_c2,   StatementId::step_c5,     StatementId::babbage_new3,
    StatementId::wolstenholme, StatementId::sun_new6,
};

inline std::string_view to_string(StatementId id) {
    switch (id) {
        case StatementId::theorem1: return "theorem1";
        case StatementId::theorem2: return "theorem2";
        case StatementId::lemma_b1: return "lemma_b1";
        case StatementId::lemma_b2: return "lemma_b2";
        case StatementId::prop_a1: return "prop_a1";
        case StatementId::andrews_new4: return "andrews_new4";
        case StatementId::straub_a3: return "straub_a3";
        case StatementId::straub_new5: return "straub_new5";
        case StatementId::step_c1: return "step_c1";
        case StatementId::step_c2: return "step_c2";
        case StatementId::step_c5: return "step_c5";
        case StatementId::babbage_new3: return "babbage_new3";
        case StatementId::wolstenholme: return "wolstenholme";
        case StatementId::sun_new6: return "sun_new6";
    }
    return "unknown";
}

inline std::optional<StatementId> parse_statement_id(std::string_view name) {
    for (StatementId id : kAllStatements)
        if (to_string(id) == name) return id;
    return std::nullopt;
}

struct VerificationReport {
    std::string statement;
    std::map<std::string, std::int64_t> params;
    bool holds = false;
    std::string reason;
    std::optional<std::int64_t> residual_degree;
    IntPoly residual;
    std::chrono::duration<double, std::milli> elapsed{0};
};

inline nlohmann::json to_json(const VerificationReport& r, bool verbose = false) {
    nlohmann::json j;
    j["statement"] = r.statement;
    j["params"] = r.params;
    j["holds"] = r.holds;
    j["reason"] = r.reason;
    j["residual_degree"] = r.residual_degree ? nlohmann::json(*r.residual_degree) : nlohmann::json(nullptr);
    j["elapsed_ms"] = r.elapsed.count();
    if (verbose) j["residual"] = to_string(r.residual);
    return j;
}

enum class RnBranch { three_m, three_m_plus_1, three_m_minus_1 };

inline std::string_view to_string(RnBranch b) {
    switch (b) {
        case RnBranch::three_m: return "3m";
        case RnBranch::three_m_plus_1: return "3m+1";
        case RnBranch::three_m_minus_1: return "3m-1";
    }
    return "unknown";
}

struct RnFormula {
    std::int64_t n = 0;
    std::int64_t m = 0;
    RnBranch branch = RnBranch::three_m_plus_1;
    IntPoly value;
};

/// The three-case right-hand side R_n(q), selected by n mod 3.
inline RnFormula r_n(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("r_n: n must be >= 1, got " + std::to_string(n));
    RnFormula f;
    f.n = n;
    switch (n % 3) {
        case 0:
            f.branch = RnBranch::three_m;
            f.m = n / 3;
            f.value = (IntPoly::constant(1) + IntPoly::monomial(f.m)).shifted(f.m * (3 * f.m - 1) / 2);
            break;
        case 1:
            f.branch = RnBranch::three_m_plus_1;
            f.m = (n - 1) / 3;
            f.value = IntPoly::monomial(f.m * (3 * f.m + 1) / 2);
            break;
        default:
            f.branch = RnBranch::three_m_minus_1;
            f.m = (n + 1) / 3;
            f.value = IntPoly::monomial(f.m * (3 * f.m - 1) / 2);
            break;
    }
    if (f.m % 2 == 1) f.value = -f.value;
    return f;
}

/// Right-hand side of the (2n n)_q congruence written out case by case.
inline IntPoly theorem2_display(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("theorem2_display: n must be >= 1");
    const std::int64_t r = n % 3;
    const std::int64_t m = r == 0 ? n / 3 : (r == 1 ? (n - 1) / 3 : (n + 1) / 3);
    const Integer sign = (m % 2 == 0) ? 1 : -1;
    IntPoly head;
    if (r == 0)
        head = (IntPoly::constant(1) + IntPoly::monomial(m)).shifted(m * (3 * m - 1) / 2);
    else if (r == 1)
        head = IntPoly::monomial(m * (3 * m + 1) / 2);
    else
        head = IntPoly::monomial(m * (3 * m - 1) / 2);
    const std::int64_t size = r == 0 ? 3 * m : (r == 1 ? 3 * m + 1 : 3 * m - 1);
    return head * Integer(2 * sign) - IntPoly::one_minus_q_pow(size) * Integer(size);
}

namespace detail {

using Clock = std::chrono::steady_clock;

inline VerificationReport make_report(StatementId id, std::map<std::string, std::int64_t> params,
                                      const CongruenceResult& verdict, Clock::time_point start) {
    VerificationReport r;
    r.statement = std::string(to_string(id));
    r.params = std::move(params);
    r.holds = verdict.holds;
    r.reason = std::string(to_string(verdict.reason));
    if (!verdict.holds) r.residual_degree = verdict.residual.degree();
    r.residual = verdict.residual;
    r.elapsed = Clock::now() - start;
    return r;
}

inline VerificationReport integer_report(StatementId id, std::int64_t p, bool holds, Clock::time_point start) {
    VerificationReport r;
    r.statement = std::string(to_string(id));
    r.params = {{"p", p}};
    r.holds = holds;
    r.reason = holds ? "divisible" : "nonzero_remainder";
    r.elapsed = Clock::now() - start;
    return r;
}

inline Integer sign_pow(std::int64_t e) { return (e % 2 == 0) ? Integer(1) : Integer(-1); }

/// Walks [n-k k] for k = 0, 1, ... using
/// [n-k k] = [n-k+1, k-1] (1-q^(n-2k+1)) (1-q^(n-2k+2)) / ((1-q^(n-k+1)) (1-q^k)).
class DiagonalBinomials {
public:
    explicit DiagonalBinomials(std::int64_t n) : n_(n), value_(IntPoly::constant(1)) {}
    const IntPoly& value() const { return value_; }
    std::int64_t k() const { return k_; }
    void advance() {
        ++k_;
        if (2 * k_ > n_) {
            value_ = IntPoly{};
            return;
        }
        value_.mul_one_minus_q_pow(n_ - 2 * k_ + 1).mul_one_minus_q_pow(n_ - 2 * k_ + 2);
        value_.div_one_minus_q_pow(n_ - k_ + 1).div_one_minus_q_pow(k_);
    }

private:
    std::int64_t n_;
    std::int64_t k_ = 0;
    IntPoly value_;
};

/// Walks [N k] for k = 0, 1, ... via [N k] = [N, k-1] (1-q^(N-k+1)) / (1-q^k).
class RowBinomials {
public:
    explicit RowBinomials(std::int64_t N) : N_(N), value_(IntPoly::constant(1)) {}
    const IntPoly& value() const { return value_; }
    void advance() {
        ++k_;
        if (k_ > N_) {
            value_ = IntPoly{};
            return;
        }
        value_.mul_one_minus_q_pow(N_ - k_ + 1).div_one_minus_q_pow(k_);
    }

private:
    std::int64_t N_;
    std::int64_t k_ = 0;
    IntPoly value_;
};

/// Walks [2k-1 k] for k = 1, 2, ... via
/// [2k+1, k+1] = [2k-1 k] (1-q^(2k)) (1-q^(2k+1)) / ((1-q^k) (1-q^(k+1))).
class CentralBinomials {
public:
    CentralBinomials() : value_(IntPoly::constant(1)) {}
    const IntPoly& value() const { return value_; }
    std::int64_t k() const { return k_; }
    void advance() {
        value_.mul_one_minus_q_pow(2 * k_).mul_one_minus_q_pow(2 * k_ + 1);
        value_.div_one_minus_q_pow(k_).div_one_minus_q_pow(k_ + 1);
        ++k_;
    }

private:
    std::int64_t k_ = 1;
    IntPoly value_;
};

/// Walks [2n-k, n+k] for k = 0, 1, ... via
/// [2n-k, n+k] = [2n-k+1, n+k-1] (1-q^(n-2k+1)) (1-q^(n-2k+2)) / ((1-q^(2n-k+1)) (1-q^(n+k))).
class ShiftedCentralBinomials {
public:
    explicit ShiftedCentralBinomials(std::int64_t n) : n_(n), value_(gauss_binom(2 * n, n)) {}
    const IntPoly& value() const { return value_; }
    void advance() {
        ++k_;
        if (2 * k_ > n_) {
            value_ = IntPoly{};
            return;
        }
        value_.mul_one_minus_q_pow(n_ - 2 * k_ + 1).mul_one_minus_q_pow(n_ - 2 * k_ + 2);
        value_.div_one_minus_q_pow(2 * n_ - k_ + 1).div_one_minus_q_pow(n_ + k_);
    }

private:
    std::int64_t n_;
    std::int64_t k_ = 0;
    IntPoly value_;
};

inline void require_n(std::int64_t n, std::int64_t min, const char* what) {
    if (n < min)
        throw std::invalid_argument(std::string(what) + ": n must be >= " + std::to_string(min) + ", got " +
                                    std::to_string(n));
}

inline void require_odd_prime(std::int64_t p, const char* what) {
    if (p == 2 || !is_prime(p))
        throw std::invalid_argument(std::string(what) + ": p must be an odd prime, got " + std::to_string(p));
}

inline void require_prime_at_least_5(std::int64_t p, const char* what) {
    if (p < 5 || !is_prime(p))
        throw std::invalid_argument(std::string(what) + ": p must be a prime >= 5, got " + std::to_string(p));
}

}  // namespace detail

/// (n 0)_q = R_n(q) (mod Phi_n(q)^2).
inline VerificationReport check_theorem1(std::int64_t n) {
    detail::require_n(n, 1, "check_theorem1");
    const auto start = detail::Clock::now();
    const CyclotomicQuotient ring(n, 2);
    detail::RowBinomials row(n);
    detail::DiagonalBinomials diag(n);
    Residue lhs;
    for (std::int64_t k = 0; 2 * k <= n; ++k) {
        const Residue term = ring.mul(ring.from_poly(row.value()), ring.from_poly(diag.value()));
        lhs = ring.add(lhs, ring.mul(term, ring.q_power(k * k)));
        row.advance();
        diag.advance();
    }
    const Residue rhs = ring.from_poly(r_n(n).value);
    return detail::make_report(StatementId::theorem1, {{"n", n}}, ring.verdict(lhs, rhs), start);
}

/// (2n n)_q = 2 R_n(q) - n (1 - q^n) (mod Phi_n(q)^2).
inline VerificationReport check_theorem2(std::int64_t n) {
    detail::require_n(n, 1, "check_theorem2");
    const auto start = detail::Clock::now();
    const CyclotomicQuotient ring(n, 2);
    detail::RowBinomials row(2 * n);
    detail::ShiftedCentralBinomials shifted(n);
    Residue lhs;
    for (std::int64_t k = 0; 2 * k <= n; ++k) {
        const Residue term = ring.mul(ring.from_poly(row.value()), ring.from_poly(shifted.value()));
        lhs = ring.add(lhs, ring.mul(term, ring.q_power(k * (k + n))));
        row.advance();
        shifted.advance();
    }
    const IntPoly rhs = r_n(n).value * Integer(2) - IntPoly::one_minus_q_pow(n) * Integer(n);
    return detail::make_report(StatementId::theorem2, {{"n", n}}, ring.verdict(lhs, ring.from_poly(rhs)), start);
}

/**
 * Exact identity (1 - q^n) sum_k (-1)^k q^(k(k-1)/2) [n-k k] / (1 - q^(n-k)) = R_n.
 *
 * With D the lcm of the denominators 1 - q^(n-k), (LHS - R_n) D is a polynomial
 * of degree at most B. D(0) = 1, so if the Taylor expansion of LHS - R_n
 * vanishes through q^B, that polynomial is zero and the identity is exact.
 */
inline VerificationReport check_lemma_b1(std::int64_t n) {
    detail::require_n(n, 1, "check_lemma_b1");
    const auto start = detail::Clock::now();
    const IntPoly rhs = r_n(n).value;

    std::set<std::int64_t> factors;
    for (std::int64_t k = 0; 2 * k <= n; ++k)
        for (std::int64_t d : divisors(n - k)) factors.insert(d);
    std::int64_t lcm_degree = 0;
    for (std::int64_t d : factors) lcm_degree += totient(d);

    std::vector<IntPoly> numerators;
    std::int64_t bound = std::max<std::int64_t>(rhs.degree(), 0) + lcm_degree;
    detail::DiagonalBinomials diag(n);
    for (std::int64_t k = 0; 2 * k <= n; ++k) {
        IntPoly num = diag.value().shifted(k * (k - 1) / 2) * detail::sign_pow(k);
        num.mul_one_minus_q_pow(n);
        if (!num.is_zero()) bound = std::max(bound, num.degree() + lcm_degree - (n - k));
        numerators.push_back(std::move(num));
        diag.advance();
    }

    const auto length = static_cast<std::size_t>(bound) + 1;
    std::vector<Integer> series(length);
    std::vector<Integer> term(length);
    for (std::int64_t k = 0; 2 * k <= n; ++k) {
        // term = numerator / (1 - q^step) as a truncated series, added into series on the fly.
        const auto& cs = numerators[static_cast<std::size_t>(k)].coeffs();
        const auto step = static_cast<std::size_t>(n - k);
        for (std::size_t i = 0; i < length; ++i) {
            const mpz_ptr t = term[i].get_mpz_t();
            if (i < cs.size()) mpz_set(t, cs[i].get_mpz_t());
            else mpz_set_ui(t, 0);
            if (i >= step) mpz_add(t, t, term[i - step].get_mpz_t());
            mpz_add(series[i].get_mpz_t(), series[i].get_mpz_t(), t);
        }
    }

    VerificationReport r;
    r.statement = std::string(to_string(StatementId::lemma_b1));
    r.params = {{"n", n}};
    r.holds = true;
    for (std::size_t i = 0; i < length; ++i) {
        if (series[i] != rhs.coeff(static_cast<std::int64_t>(i))) {
            r.holds = false;
            r.residual_degree = static_cast<std::int64_t>(i);
            break;
        }
    }
    r.reason = r.holds ? "identity" : "series_mismatch";
    r.elapsed = detail::Clock::now() - start;
    return r;
}

/// [2k-1 k] = (-1)^k q^(k(3k-1)/2) [n-k k] (mod Phi_n(q)) for k = 1..n-1, one report per k.
inline std::vector<VerificationReport> check_lemma_b2_all(std::int64_t n) {
    detail::require_n(n, 2, "check_lemma_b2");
    const CyclotomicQuotient ring(n, 1);
    std::vector<VerificationReport> reports;
    detail::CentralBinomials central;
    detail::DiagonalBinomials diag(n);
    diag.advance();
    for (std::int64_t k = 1; k <= n - 1; ++k) {
        const auto start = detail::Clock::now();
        const Residue lhs = ring.from_poly(central.value());
        const Residue rhs =
            ring.mul(ring.from_poly(diag.value().shifted(k * (3 * k - 1) / 2)), ring.from_integer(detail::sign_pow(k)));
        reports.push_back(
            detail::make_report(StatementId::lemma_b2, {{"n", n}, {"k", k}}, ring.verdict(lhs, rhs), start));
        central.advance();
        diag.advance();
    }
    return reports;
}

inline VerificationReport check_lemma_b2(std::int64_t n, std::int64_t k) {
    detail::require_n(n, 2, "check_lemma_b2");
    if (k < 1 || k > n - 1)
        throw std::invalid_argument("check_lemma_b2: k must satisfy 1 <= k <= n-1, got k=" + std::to_string(k));
    const auto start = detail::Clock::now();
    const CyclotomicQuotient ring(n, 1);
    const Residue lhs = ring.from_poly(gauss_binom(2 * k - 1, k));
    const Residue rhs = ring.from_poly(gauss_binom(n - k, k).shifted(k * (3 * k - 1) / 2) * detail::sign_pow(k));
    return detail::make_report(StatementId::lemma_b2, {{"n", n}, {"k", k}}, ring.verdict(lhs, rhs), start);
}

/**
 * sum_{k=1}^{n/2} q^(-k(k-1)) [2k k] / [2k]_q = (1-q)(1-R_n)/(1-q^n) (mod Phi_n(q)).
 *
 * Each summand is evaluated as (1-q) q^(-k(k-1)) [2k-1 k] / (1-q^k), the same
 * rational function with a denominator that is invertible modulo Phi_n.
 */
inline VerificationReport check_prop_a1(std::int64_t n) {
    detail::require_n(n, 1, "check_prop_a1");
    const auto start = detail::Clock::now();
    const CyclotomicQuotient ring(n, 1);
    const Residue one_minus_q = ring.from_poly(IntPoly::one_minus_q_pow(1));
    Residue lhs;
    detail::CentralBinomials central;
    for (std::int64_t k = 1; 2 * k <= n; ++k) {
        Residue term = ring.mul(ring.from_poly(central.value()), ring.inverse_one_minus_q_pow(k));
        term = ring.mul(term, ring.q_power(-k * (k - 1)));
        lhs = ring.add(lhs, ring.mul(term, one_minus_q));
        central.advance();
    }
    const RatFun rhs = RatFun::make(IntPoly::one_minus_q_pow(1) * (IntPoly::constant(1) - r_n(n).value),
                                    IntPoly::one_minus_q_pow(n));
    const auto rhs_residue = ring.from_ratfun(rhs);
    if (!rhs_residue) {
        CongruenceResult bad;
        bad.reason = CongruenceReason::denominator_not_coprime;
        bad.residual = ring.reduce(rhs.num());
        return detail::make_report(StatementId::prop_a1, {{"n", n}}, bad, start);
    }
    return detail::make_report(StatementId::prop_a1, {{"n", n}}, ring.verdict(lhs, *rhs_residue), start);
}

/// [2p-1, p-1] = q^(p(p-1)/2) (mod [p]_q^2) for odd primes p.
inline VerificationReport check_andrews_new4(std::int64_t p) {
    detail::require_odd_prime(p, "check_andrews_new4");
    const auto start = detail::Clock::now();
    // For prime p, [p]_q is Phi_p(q), so the quotient ring is modulo [p]_q^2.
    const CyclotomicQuotient ring(p, 2);
    if (!(ring.modulus().base() == q_int(p))) throw std::logic_error("check_andrews_new4: [p]_q != Phi_p");
    const Residue lhs = ring.from_poly(gauss_binom(2 * p - 1, p - 1));
    const Residue rhs = ring.q_power(p * (p - 1) / 2);
    return detail::make_report(StatementId::andrews_new4, {{"p", p}}, ring.verdict(lhs, rhs), start);
}

/// [an bn] = [a b]_{q^(n^2)} - (a-b) b C(a,b) (n^2-1)/24 (q^n-1)^2 (mod Phi_n(q)^3).
inline VerificationReport check_straub_new5(std::int64_t n, std::int64_t a, std::int64_t b) {
    detail::require_n(n, 1, "check_straub_new5");
    if (b < 0 || a < b)
        throw std::invalid_argument("check_straub_new5: need a >= b >= 0, got a=" + std::to_string(a) +
                                    ", b=" + std::to_string(b));
    const auto start = detail::Clock::now();
    const CyclotomicQuotient ring(n, 3);
    const Residue lhs = ring.from_poly(gauss_binom(a * n, b * n));
    const Residue main = ring.from_poly(substitute_monomial(gauss_binom(a, b), n * n));
    const Integer coefficient = Integer(a - b) * b * binomial(a, b) * (Integer(n) * n - 1);
    const IntPoly square = pow(IntPoly::monomial(n) - IntPoly::constant(1), 2);
    const Residue correction = ring.mul(ring.from_poly(square), ring.from_ratio(coefficient, 24));
    return detail::make_report(StatementId::straub_new5, {{"n", n}, {"a", a}, {"b", b}},
                               ring.verdict(lhs, ring.sub(main, correction)), start);
}

/// [2n n] = 1 + q^(n^2) - (n^2-1)/12 (q^n-1)^2 (mod Phi_n(q)^3).
inline VerificationReport check_straub_a3(std::int64_t n) {
    detail::require_n(n, 1, "check_straub_a3");
    const auto start = detail::Clock::now();
    const CyclotomicQuotient ring(n, 3);
    const Residue lhs = ring.from_poly(gauss_binom(2 * n, n));
    const Residue main = ring.from_poly(IntPoly::constant(1) + IntPoly::monomial(n * n));
    const IntPoly square = pow(IntPoly::monomial(n) - IntPoly::constant(1), 2);
    const Residue correction = ring.mul(ring.from_poly(square), ring.from_ratio(Integer(n) * n - 1, 12));
    return detail::make_report(StatementId::straub_a3, {{"n", n}}, ring.verdict(lhs, ring.sub(main, correction)),
                               start);
}

namespace detail {

inline void require_half_range(std::int64_t n, std::int64_t k, const char* what) {
    require_n(n, 2, what);
    if (k < 1 || 2 * k > n)
        throw std::invalid_argument(std::string(what) + ": k must satisfy 1 <= k <= n/2, got k=" + std::to_string(k));
}

/// 2 (-1)^(k-1) (1 - q^n) q^(-k(k-1)/2) / (1 - q^k).
inline Residue step_c1_rhs(const CyclotomicQuotient& ring, std::int64_t k) {
    Residue r = ring.mul(ring.from_poly(IntPoly::one_minus_q_pow(ring.n()) * Integer(2 * sign_pow(k - 1))),
                         ring.q_power(-k * (k - 1) / 2));
    return ring.mul(r, ring.inverse_one_minus_q_pow(k));
}

/// (-1)^k q^(-k(3k-1)/2) / 2 * [2n n] * [2k-1 k], given the reduced central binomial.
inline Residue step_c2_rhs(const CyclotomicQuotient& ring, const Residue& central_2n, const IntPoly& central_k,
                           std::int64_t k) {
    Residue r = ring.mul(central_2n, ring.from_poly(central_k));
    r = ring.mul(r, ring.q_power(-k * (3 * k - 1) / 2));
    return ring.mul(r, ring.from_ratio(sign_pow(k), 2));
}

}  // namespace detail

/// [2n k] = 2 (-1)^(k-1) (1-q^n) q^(-k(k-1)/2) / (1-q^k) (mod Phi_n(q)^2), k = 1..n/2.
inline std::vector<VerificationReport> check_step_c1_all(std::int64_t n) {
    detail::require_n(n, 2, "check_step_c1");
    const CyclotomicQuotient ring(n, 2);
    std::vector<VerificationReport> reports;
    detail::RowBinomials row(2 * n);
    row.advance();
    for (std::int64_t k = 1; 2 * k <= n; ++k) {
        const auto start = detail::Clock::now();
        const Residue lhs = ring.from_poly(row.value());
        reports.push_back(detail::make_report(StatementId::step_c1, {{"n", n}, {"k", k}},
                                              ring.verdict(lhs, detail::step_c1_rhs(ring, k)), start));
        row.advance();
    }
    return reports;
}

inline VerificationReport check_step_c1(std::int64_t n, std::int64_t k) {
    detail::require_half_range(n, k, "check_step_c1");
    const auto start = detail::Clock::now();
    const CyclotomicQuotient ring(n, 2);
    const Residue lhs = ring.from_poly(gauss_binom(2 * n, k));
    return detail::make_report(StatementId::step_c1, {{"n", n}, {"k", k}},
                               ring.verdict(lhs, detail::step_c1_rhs(ring, k)), start);
}

/// [2n-k, n+k] = (-1)^k q^(-k(3k-1)/2) / 2 [2n n] [2k-1 k] (mod Phi_n(q)), k = 1..n/2.
inline std::vector<VerificationReport> check_step_c2_all(std::int64_t n) {
    detail::require_n(n, 2, "check_step_c2");
    const CyclotomicQuotient ring(n, 1);
    std::vector<VerificationReport> reports;
    detail::ShiftedCentralBinomials shifted(n);
    const Residue central_2n = ring.from_poly(shifted.value());
    shifted.advance();
    detail::CentralBinomials central;
    for (std::int64_t k = 1; 2 * k <= n; ++k) {
        const auto start = detail::Clock::now();
        const Residue lhs = ring.from_poly(shifted.value());
        const Residue rhs = detail::step_c2_rhs(ring, central_2n, central.value(), k);
        reports.push_back(
            detail::make_report(StatementId::step_c2, {{"n", n}, {"k", k}}, ring.verdict(lhs, rhs), start));
        shifted.advance();
        central.advance();
    }
    return reports;
}

inline VerificationReport check_step_c2(std::int64_t n, std::int64_t k) {
    detail::require_half_range(n, k, "check_step_c2");
    const auto start = detail::Clock::now();
    const CyclotomicQuotient ring(n, 1);
    const Residue lhs = ring.from_poly(gauss_binom(2 * n - k, n + k));
    const Residue rhs =
        detail::step_c2_rhs(ring, ring.from_poly(gauss_binom(2 * n, n)), gauss_binom(2 * k - 1, k), k);
    return detail::make_report(StatementId::step_c2, {{"n", n}, {"k", k}}, ring.verdict(lhs, rhs), start);
}

/// [2n n] = 2 - n (1 - q^n) (mod Phi_n(q)^2).
inline VerificationReport check_step_c5(std::int64_t n) {
    detail::require_n(n, 1, "check_step_c5");
    const auto start = detail::Clock::now();
    const CyclotomicQuotient ring(n, 2);
    const Residue lhs = ring.from_poly(gauss_binom(2 * n, n));
    const Residue rhs = ring.from_poly(IntPoly::constant(2) - IntPoly::one_minus_q_pow(n) * Integer(n));
    return detail::make_report(StatementId::step_c5, {{"n", n}}, ring.verdict(lhs, rhs), start);
}

/// C(2p-1, p-1) = 1 (mod p^2) for odd primes p.
inline VerificationReport check_babbage(std::int64_t p) {
    detail::require_odd_prime(p, "check_babbage");
    const auto start = detail::Clock::now();
    const Integer modulus = Integer(p) * p;
    const bool holds = mod_floor(binomial(2 * p - 1, p - 1) - 1, modulus) == 0;
    return detail::integer_report(StatementId::babbage_new3, p, holds, start);
}

/// C(2p-1, p-1) = 1 (mod p^3) for primes p >= 5.
inline VerificationReport check_wolstenholme(std::int64_t p) {
    detail::require_prime_at_least_5(p, "check_wolstenholme");
    const auto start = detail::Clock::now();
    const Integer modulus = Integer(p) * p * p;
    const bool holds = mod_floor(binomial(2 * p - 1, p - 1) - 1, modulus) == 0;
    return detail::integer_report(StatementId::wolstenholme, p, holds, start);
}

/// Both sides of sum_{k=1}^{(p-1)/2} C(2k,k)/k = (-1)^((p+1)/2) (8p/3) E_{p-3}, reduced mod p^2.
inline std::pair<Integer, Integer> sun_new6_sides(std::int64_t p) {
    detail::require_prime_at_least_5(p, "sun_new6_sides");
    const Integer modulus = Integer(p) * p;
    Integer lhs = 0;
    for (std::int64_t k = 1; k <= (p - 1) / 2; ++k) lhs += binomial(2 * k, k) * mod_inverse(Integer(k), modulus);
    const Integer rhs = detail::sign_pow((p + 1) / 2) * 8 * p * mod_inverse(Integer(3), modulus) * euler_number(p - 3);
    return {mod_floor(lhs, modulus), mod_floor(rhs, modulus)};
}

inline VerificationReport check_sun_new6(std::int64_t p) {
    const auto start = detail::Clock::now();
    const auto [lhs, rhs] = sun_new6_sides(p);
    return detail::integer_report(StatementId::sun_new6, p, lhs == rhs, start);
}

struct SuiteParams {
    std::optional<std::int64_t> a;
    std::optional<std::int64_t> b;
};

/// (a, b) pairs swept by straub_new5 when no parameters are given.
inline constexpr std::array<std::pair<std::int64_t, std::int64_t>, 4> kDefaultStraubPairs = {
    std::pair<std::int64_t, std::int64_t>{2, 1}, {3, 1}, {3, 2}, {4, 2}};

inline constexpr std::int64_t kMaxStraubA = 6;

/**
 * Runs every statement in ids over n = first..last. Reports are ordered by
 * statement, then n, then the secondary parameter. Statements about primes
 * only visit the primes in range that satisfy their precondition.
 */
inline std::vector<VerificationReport> run_suite(const std::vector<StatementId>& ids, std::int64_t first,
                                                 std::int64_t last, const SuiteParams& params = {}) {
    if (first > last)
        throw std::invalid_argument("run_suite: empty range " + std::to_string(first) + ".." + std::to_string(last));
    if (first < 1) throw std::invalid_argument("run_suite: range must start at 1 or above");
    if (params.a.has_value() != params.b.has_value())
        throw std::invalid_argument("run_suite: parameters a and b must be given together");

    std::vector<std::pair<std::int64_t, std::int64_t>> straub_pairs(kDefaultStraubPairs.begin(),
                                                                    kDefaultStraubPairs.end());
    if (params.a) {
        if (*params.b < 0 || *params.a < *params.b || *params.a > kMaxStraubA)
            throw std::invalid_argument("run_suite: straub_new5 needs 0 <= b <= a <= " + std::to_string(kMaxStraubA));
        straub_pairs = {{*params.a, *params.b}};
    }

    std::vector<StatementId> ordered = ids;
    std::sort(ordered.begin(), ordered.end());
    ordered.erase(std::unique(ordered.begin(), ordered.end()), ordered.end());

    std::vector<VerificationReport> out;
    auto append = [&out](std::vector<VerificationReport> batch) {
        std::move(batch.begin(), batch.end(), std::back_inserter(out));
    };
    for (StatementId id : ordered) {
        for (std::int64_t n = first; n <= last; ++n) {
            switch (id) {
                case StatementId::theorem1: out.push_back(check_theorem1(n)); break;
                case StatementId::theorem2: out.push_back(check_theorem2(n)); break;
                case StatementId::lemma_b1: out.push_back(check_lemma_b1(n)); break;
                case StatementId::lemma_b2:
                    if (n >= 2) append(check_lemma_b2_all(n));
                    break;
                case StatementId::prop_a1: out.push_back(check_prop_a1(n)); break;
                case StatementId::andrews_new4:
                    if (n != 2 && is_prime(n)) out.push_back(check_andrews_new4(n));
                    break;
                case StatementId::straub_a3: out.push_back(check_straub_a3(n)); break;
                case StatementId::straub_new5:
                    for (const auto& [a, b] : straub_pairs) out.push_back(check_straub_new5(n, a, b));
                    break;
                case StatementId::step_c1:
                    if (n >= 2) append(check_step_c1_all(n));
                    break;
                case StatementId::step_c2:
                    if (n >= 2) append(check_step_c2_all(n));
                    break;
                case StatementId::step_c5: out.push_back(check_step_c5(n)); break;
                case StatementId::babbage_new3:
                    if (n != 2 && is_prime(n)) out.push_back(check_babbage(n));
                    break;
                case StatementId::wolstenholme:
                    if (n >= 5 && is_prime(n)) out.push_back(check_wolstenholme(n));
                    break;
                case StatementId::sun_new6:
                    if (n >= 5 && is_prime(n)) out.push_back(check_sun_new6(n));
                    break;
            }
        }
    }
    return out;
}

inline bool all_hold(const std::vector<VerificationReport>& reports) {
    return std::all_of(reports.begin(), reports.end(), [](const VerificationReport& r) { return r.holds; });
}

}  // namespace qcong
