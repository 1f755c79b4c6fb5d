#include "qcong/congruence.hpp"
#include "qcong/qseries.hpp"
#include "qcong/rat_fun.hpp"
#include "qcong/statements.hpp"

#include <gtest/gtest.h>

#include <stdexcept>

namespace qcong {
namespace {

// Literal versions of each statement, built from whole rational functions and
// decided by congruent(). They are slow, so they only cover small n.

Modulus phi(std::int64_t n, std::int64_t k) { return Modulus(cyclotomic(n), k); }

RatFun q_pow(std::int64_t e) { return RatFun::q_pow(e); }

RatFun one_minus_q(std::int64_t m) { return RatFun(IntPoly::one_minus_q_pow(m)); }

RatFun sign(std::int64_t e) { return RatFun(Integer(e % 2 == 0 ? 1 : -1)); }

RatFun binom(std::int64_t n, std::int64_t k) { return RatFun(gauss_binom(n, k)); }

RatFun rational(const Integer& a, const Integer& b) {
    return ratfun_make(IntPoly::constant(a), IntPoly::constant(b));
}

bool literal_theorem1(std::int64_t n) {
    return congruent(RatFun(q_trinomial(n, 0)), RatFun(r_n(n).value), phi(n, 2)).holds;
}

bool literal_theorem2(std::int64_t n) {
    const RatFun rhs = RatFun(r_n(n).value) * RatFun(Integer(2)) - RatFun(Integer(n)) * one_minus_q(n);
    return congruent(RatFun(q_trinomial(2 * n, n)), rhs, phi(n, 2)).holds;
}

RatFun literal_lemma_b1_lhs(std::int64_t n) {
    RatFun sum(Integer(0));
    for (std::int64_t k = 0; 2 * k <= n; ++k)
        sum += sign(k) * q_pow(k * (k - 1) / 2) / one_minus_q(n - k) * binom(n - k, k);
    return one_minus_q(n) * sum;
}

bool literal_lemma_b2(std::int64_t n, std::int64_t k) {
    return congruent(binom(2 * k - 1, k), sign(k) * q_pow(k * (3 * k - 1) / 2) * binom(n - k, k), phi(n, 1)).holds;
}

bool literal_prop_a1(std::int64_t n) {
    RatFun lhs(Integer(0));
    for (std::int64_t k = 1; 2 * k <= n; ++k) lhs += q_pow(-k * (k - 1)) / RatFun(q_int(2 * k)) * binom(2 * k, k);
    const RatFun rhs = one_minus_q(1) * (RatFun(Integer(1)) - RatFun(r_n(n).value)) / one_minus_q(n);
    return congruent(lhs, rhs, phi(n, 1)).holds;
}

bool literal_straub_a3(std::int64_t n) {
    const RatFun square = RatFun(pow(IntPoly::monomial(n) - IntPoly::constant(1), 2));
    const RatFun rhs = RatFun(Integer(1)) + q_pow(n * n) - rational(Integer(n) * n - 1, 12) * square;
    return congruent(binom(2 * n, n), rhs, phi(n, 3)).holds;
}

bool literal_straub_new5(std::int64_t n, std::int64_t a, std::int64_t b) {
    const RatFun square = RatFun(pow(IntPoly::monomial(n) - IntPoly::constant(1), 2));
    const Integer c = Integer(a - b) * b * binomial(a, b) * (Integer(n) * n - 1);
    const RatFun rhs = substitute_monomial(binom(a, b), n * n) - rational(c, 24) * square;
    return congruent(binom(a * n, b * n), rhs, phi(n, 3)).holds;
}

bool literal_step_c1(std::int64_t n, std::int64_t k) {
    const RatFun rhs = RatFun(Integer(2)) * sign(k - 1) * one_minus_q(n) * q_pow(-k * (k - 1) / 2) / one_minus_q(k);
    return congruent(binom(2 * n, k), rhs, phi(n, 2)).holds;
}

bool literal_step_c2(std::int64_t n, std::int64_t k) {
    const RatFun rhs = sign(k) * q_pow(-k * (3 * k - 1) / 2) * rational(1, 2) * binom(2 * n, n) * binom(2 * k - 1, k);
    return congruent(binom(2 * n - k, n + k), rhs, phi(n, 1)).holds;
}

TEST(RnFormula, Examples) {
    const RnFormula one = r_n(1);
    EXPECT_EQ(one.branch, RnBranch::three_m_plus_1);
    EXPECT_EQ(one.m, 0);
    EXPECT_EQ(one.value, IntPoly::constant(1));
    const RnFormula two = r_n(2);
    EXPECT_EQ(two.branch, RnBranch::three_m_minus_1);
    EXPECT_EQ(two.m, 1);
    EXPECT_EQ(two.value, (IntPoly{0, -1}));
    const RnFormula three = r_n(3);
    EXPECT_EQ(three.branch, RnBranch::three_m);
    EXPECT_EQ(three.m, 1);
    EXPECT_EQ(three.value, (IntPoly{0, -1, -1}));
    EXPECT_THROW(r_n(0), std::invalid_argument);
}

TEST(RnFormula, BranchSolvesForN) {
    for (std::int64_t n = 1; n <= 300; ++n) {
        const RnFormula f = r_n(n);
        switch (f.branch) {
            case RnBranch::three_m: ASSERT_EQ(3 * f.m, n); break;
            case RnBranch::three_m_plus_1: ASSERT_EQ(3 * f.m + 1, n); break;
            case RnBranch::three_m_minus_1: ASSERT_EQ(3 * f.m - 1, n); break;
        }
        ASSERT_GE(f.m, f.branch == RnBranch::three_m_plus_1 ? 0 : 1);
    }
}

TEST(Theorem1, ExactQuotientExamples) {
    EXPECT_EQ(q_trinomial(2, 0) - r_n(2).value, pow(cyclotomic(2), 2));
    EXPECT_EQ(q_trinomial(3, 0) - r_n(3).value, pow(cyclotomic(3), 2));
}

TEST(Theorem1, MatchesLiteralCheck) {
    for (std::int64_t n = 1; n <= 24; ++n) {
        ASSERT_TRUE(literal_theorem1(n)) << n;
        const auto r = check_theorem1(n);
        ASSERT_TRUE(r.holds) << n;
        ASSERT_EQ(r.statement, "theorem1");
        ASSERT_FALSE(r.residual_degree.has_value());
    }
}

TEST(Theorem2, MatchesLiteralCheck) {
    for (std::int64_t n = 1; n <= 10; ++n) {
        ASSERT_TRUE(literal_theorem2(n)) << n;
        ASSERT_TRUE(check_theorem2(n).holds) << n;
    }
}

TEST(Theorem2, DisplayEqualsConsolidatedForm) {
    for (std::int64_t n = 1; n <= 60; ++n) {
        const IntPoly consolidated = r_n(n).value * Integer(2) - IntPoly::one_minus_q_pow(n) * Integer(n);
        ASSERT_EQ(theorem2_display(n), consolidated) << n;
    }
}

TEST(LemmaB1, LiteralIdentity) {
    EXPECT_EQ(literal_lemma_b1_lhs(1), RatFun(Integer(1)));
    EXPECT_EQ(literal_lemma_b1_lhs(2), RatFun(IntPoly{0, -1}));
    for (std::int64_t n = 1; n <= 30; ++n) {
        ASSERT_EQ(literal_lemma_b1_lhs(n), RatFun(r_n(n).value)) << n;
        const auto r = check_lemma_b1(n);
        ASSERT_TRUE(r.holds) << n;
        ASSERT_EQ(r.reason, "identity");
    }
}

TEST(LemmaB2, Examples) {
    EXPECT_EQ(gauss_binom(1, 1) + IntPoly::q() * gauss_binom(1, 1), cyclotomic(2));
    EXPECT_EQ(gauss_binom(1, 1) + IntPoly::q() * gauss_binom(2, 1), cyclotomic(3));
    EXPECT_EQ(check_lemma_b2_all(5).size(), 4U);
    EXPECT_THROW(check_lemma_b2(5, 5), std::invalid_argument);
    EXPECT_THROW(check_lemma_b2(5, 0), std::invalid_argument);
}

TEST(LemmaB2, MatchesLiteralCheck) {
    for (std::int64_t n = 2; n <= 16; ++n) {
        for (std::int64_t k = 1; k < n; ++k) {
            ASSERT_TRUE(literal_lemma_b2(n, k)) << n << "," << k;
            ASSERT_TRUE(check_lemma_b2(n, k).holds) << n << "," << k;
        }
    }
}

TEST(PropA1, MatchesLiteralCheck) {
    for (std::int64_t n = 1; n <= 18; ++n) {
        ASSERT_TRUE(literal_prop_a1(n)) << n;
        ASSERT_TRUE(check_prop_a1(n).holds) << n;
    }
}

TEST(AndrewsNew4, PrimesOnly) {
    EXPECT_TRUE(check_andrews_new4(3).holds);
    EXPECT_TRUE(check_andrews_new4(5).holds);
    EXPECT_THROW(check_andrews_new4(4), std::invalid_argument);
    EXPECT_THROW(check_andrews_new4(2), std::invalid_argument);
}

TEST(AndrewsNew4, BridgeToBabbage) {
    for (std::int64_t p = 3; p <= 97; p += 2) {
        if (!is_prime(p)) continue;
        const Integer at_one = eval_at_one(gauss_binom(2 * p - 1, p - 1));
        ASSERT_EQ(at_one, binomial(2 * p - 1, p - 1));
        ASSERT_EQ(eval_at_one(IntPoly::monomial(p * (p - 1) / 2)), 1);
        ASSERT_EQ(mod_floor(at_one - 1, Integer(p) * p), 0) << p;
        ASSERT_TRUE(check_babbage(p).holds);
    }
}

TEST(Straub, MatchesLiteralCheck) {
    for (std::int64_t n = 1; n <= 10; ++n) {
        ASSERT_EQ(check_straub_a3(n).holds, literal_straub_a3(n)) << n;
        for (auto [a, b] : kDefaultStraubPairs)
            ASSERT_EQ(check_straub_new5(n, a, b).holds, literal_straub_new5(n, a, b)) << n << " " << a << " " << b;
    }
    EXPECT_TRUE(check_straub_new5(7, 3, 1).holds);
    EXPECT_TRUE(check_straub_a3(5).holds);
}

TEST(Straub, SmallNVerdictsAreRecorded) {
    EXPECT_TRUE(check_straub_a3(1).holds);
    EXPECT_TRUE(check_straub_a3(2).holds);
}

TEST(Straub, A3AgreesWithNew5) {
    for (std::int64_t n = 1; n <= 60; ++n) ASSERT_EQ(check_straub_a3(n).holds, check_straub_new5(n, 2, 1).holds) << n;
}

TEST(Straub, EqualParametersHoldTrivially) {
    for (std::int64_t n = 1; n <= 12; ++n)
        for (std::int64_t a = 0; a <= 4; ++a) ASSERT_TRUE(check_straub_new5(n, a, a).holds);
}

TEST(Straub, DerivationChainToCentralBinomial) {
    for (std::int64_t n = 1; n <= 100; ++n) {
        if (!check_straub_a3(n).holds) continue;
        const IntPoly rhs = IntPoly::constant(1) + IntPoly::monomial(n * n);
        ASSERT_TRUE(congruent(binom(2 * n, n), RatFun(rhs), phi(n, 2)).holds) << n;
    }
}

TEST(ProofSteps, Examples) {
    const IntPoly diff = gauss_binom(4, 2) - (IntPoly::constant(2) - IntPoly::one_minus_q_pow(2) * Integer(2));
    EXPECT_TRUE(reduce_mod(diff, phi(2, 2)).is_zero());
    EXPECT_TRUE(check_step_c5(2).holds);
    EXPECT_THROW(check_step_c1(6, 4), std::invalid_argument);
    EXPECT_THROW(check_step_c2(1, 1), std::invalid_argument);
}

TEST(ProofSteps, MatchLiteralChecks) {
    for (std::int64_t n = 2; n <= 14; ++n) {
        for (std::int64_t k = 1; 2 * k <= n; ++k) {
            ASSERT_TRUE(literal_step_c1(n, k)) << n << "," << k;
            ASSERT_TRUE(check_step_c1(n, k).holds) << n << "," << k;
            ASSERT_TRUE(literal_step_c2(n, k)) << n << "," << k;
            ASSERT_TRUE(check_step_c2(n, k).holds) << n << "," << k;
        }
    }
}

TEST(ProofSteps, WrongRightSideIsCaught) {
    // Dropping the factor 2 in the c-1 right side must fail the residue check.
    for (std::int64_t n = 3; n <= 12; ++n) {
        const CyclotomicQuotient ring(n, 2);
        const Residue lhs = ring.from_poly(gauss_binom(2 * n, 1));
        const Residue half = ring.mul(detail::step_c1_rhs(ring, 1), ring.from_ratio(1, 2));
        const auto verdict = ring.verdict(lhs, half);
        ASSERT_FALSE(verdict.holds) << n;
        ASSERT_TRUE(ring.verdict(lhs, detail::step_c1_rhs(ring, 1)).holds) << n;
    }
}

TEST(Monotonicity, SquareVerdictsImplyFirstPower) {
    for (std::int64_t n = 1; n <= 20; ++n) {
        const IntPoly lhs = q_trinomial(n, 0);
        ASSERT_TRUE(congruent(RatFun(lhs), RatFun(r_n(n).value), phi(n, 1)).holds);
    }
}

TEST(IntegerClassics, Examples) {
    EXPECT_EQ(binomial(5, 2), 10);
    EXPECT_TRUE(check_babbage(3).holds);
    EXPECT_EQ(binomial(9, 4), 126);
    EXPECT_TRUE(check_wolstenholme(5).holds);
    EXPECT_THROW(check_wolstenholme(3), std::invalid_argument);
    EXPECT_THROW(check_babbage(9), std::invalid_argument);
    EXPECT_TRUE(check_sun_new6(5).holds);
    EXPECT_TRUE(check_sun_new6(7).holds);
    EXPECT_THROW(check_sun_new6(9), std::invalid_argument);
}

TEST(IntegerClassics, SunWorkedInstance) {
    const auto [lhs, rhs] = sun_new6_sides(5);
    EXPECT_EQ(lhs, 5);
    EXPECT_EQ(rhs, 5);
    EXPECT_EQ(mod_inverse(3, 25), 17);
    EXPECT_EQ(mod_floor(Integer(40) * 17, 25), 5);
}

TEST(Suite, OrderingAndFiltering) {
    const auto t1 = run_suite({StatementId::theorem1}, 1, 10);
    EXPECT_EQ(t1.size(), 10U);
    EXPECT_TRUE(all_hold(t1));
    const auto b2 = run_suite({StatementId::lemma_b2}, 5, 5);
    ASSERT_EQ(b2.size(), 4U);
    for (std::size_t i = 0; i < b2.size(); ++i) EXPECT_EQ(b2[i].params.at("k"), static_cast<std::int64_t>(i) + 1);
    const auto primes = run_suite({StatementId::wolstenholme, StatementId::babbage_new3}, 1, 13);
    ASSERT_EQ(primes.size(), 9U);
    EXPECT_EQ(primes.front().statement, "babbage_new3");
    EXPECT_THROW(run_suite({StatementId::theorem1}, 3, 2), std::invalid_argument);
    SuiteParams bad;
    bad.a = 3;
    EXPECT_THROW(run_suite({StatementId::straub_new5}, 1, 2, bad), std::invalid_argument);
}

TEST(Suite, StatementIdsRoundTrip) {
    for (StatementId id : kAllStatements) EXPECT_EQ(parse_statement_id(to_string(id)), id);
    EXPECT_FALSE(parse_statement_id("nosuch").has_value());
}

TEST(Report, JsonShape) {
    const auto r = check_theorem1(4);
    const nlohmann::json j = to_json(r);
    EXPECT_EQ(j["statement"], "theorem1");
    EXPECT_EQ(j["params"]["n"], 4);
    EXPECT_EQ(j["holds"], true);
    EXPECT_EQ(j["reason"], "divisible");
    EXPECT_TRUE(j["residual_degree"].is_null());
    EXPECT_TRUE(j["elapsed_ms"].is_number());
    EXPECT_FALSE(j.contains("residual"));
    EXPECT_EQ(to_json(r, true)["residual"], "0");
}

}  // namespace
}  // namespace qcong
