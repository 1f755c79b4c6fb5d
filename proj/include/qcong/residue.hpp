#pragma once

/**
 * @file residue.hpp
 * @brief Arithmetic modulo Phi_n(q)^k with denominators coprime to Phi_n.
 *
 * A Residue is a fraction num/den in which num and den are reduced modulo
 * Phi_n^k and den is coprime with Phi_n. Replacing a polynomial summand or
 * factor by anything congruent to it never changes a congruence verdict, so
 * statement checks can work with these small representatives instead of the
 * full-degree q-binomials.
 *
 * Reduction happens in two stages: first modulo (q^n - 1)^k, which is sparse
 * and divisible by Phi_n^k, then modulo Phi_n^k itself.
 */

#include "qcong/congruence.hpp"
#include "qcong/int_poly.hpp"
#include "qcong/integer.hpp"
#include "qcong/qseries.hpp"
#include "qcong/rat_fun.hpp"

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qcong {

struct Residue {
    IntPoly num;
    IntPoly den = IntPoly::constant(1);
};

class CyclotomicQuotient {
public:
    CyclotomicQuotient(std::int64_t n, std::int64_t power)
        : n_(n),
          modulus_(cyclotomic(n), power),
          multiple_(IntPoly::monomial(n) - IntPoly::constant(1), power) {
        // F = (q^n - 1)^k has F(0) = +-1, so q^-1 = -F(0) (F - F(0)) / q.
        const IntPoly& f = multiple_.expanded();
        const Integer f0 = f.coeff(0);
        q_inverse_ = (f - IntPoly::constant(f0)).shifted(-1) * Integer(-f0);
    }

    std::int64_t n() const { return n_; }
    std::int64_t power() const { return modulus_.power(); }
    const Modulus& modulus() const { return modulus_; }

    IntPoly reduce(const IntPoly& a) const {
        if (a.degree() < modulus_.expanded().degree()) return a;
        return reduce_mod(reduce_mod(a, multiple_), modulus_);
    }

    Residue from_poly(const IntPoly& a) const { return {reduce(a), IntPoly::constant(1)}; }

    Residue from_integer(const Integer& c) const { return {IntPoly::constant(c), IntPoly::constant(1)}; }

    /// The rational constant a/b.
    Residue from_ratio(const Integer& a, const Integer& b) const {
        if (sgn(b) == 0) throw std::domain_error("from_ratio: zero denominator");
        return normalized({IntPoly::constant(a), IntPoly::constant(b)});
    }

    /// Image of r, or nullopt when r's denominator shares a factor with Phi_n.
    std::optional<Residue> from_ratfun(const RatFun& r) const {
        if (!is_coprime(r.den(), modulus_.base())) return std::nullopt;
        return normalized({reduce(r.num()), reduce(r.den())});
    }

    /// q^e for any integer e.
    Residue q_power(std::int64_t e) const {
        if (e >= 0) return from_poly(IntPoly::monomial(e));
        IntPoly result = IntPoly::constant(1);
        IntPoly base = q_inverse_;
        auto remaining = static_cast<std::uint64_t>(-e);
        while (remaining > 0) {
            if (remaining & 1U) result = reduce_mod(result * base, multiple_);
            remaining >>= 1U;
            if (remaining > 0) base = reduce_mod(base * base, multiple_);
        }
        return from_poly(result);
    }

    /**
     * 1/(1 - q^j) for n not dividing j. Modulo Phi_n, w = q^j has order
     * m = n / gcd(n, j) and (1 - w) * (-sum_{i<m} i w^i) = m; Newton steps
     * u <- u (2s - a u), s <- s^2 lift this to Phi_n^k.
     */
    Residue inverse_one_minus_q_pow(std::int64_t j) const {
        if (j < 1) throw std::invalid_argument("inverse_one_minus_q_pow: j must be positive");
        if (j % n_ == 0)
            throw std::domain_error("1 - q^" + std::to_string(j) + " is not invertible modulo Phi_" +
                                    std::to_string(n_));
        const std::int64_t order = n_ / std::gcd(n_, j);
        std::vector<Integer> cs(static_cast<std::size_t>(n_));
        for (std::int64_t i = 1; i < order; ++i) cs[static_cast<std::size_t>((i * j) % n_)] -= i;
        IntPoly u = reduce(IntPoly(std::move(cs)));
        Integer s = order;
        const IntPoly a = reduce(IntPoly::one_minus_q_pow(j));
        for (std::int64_t precision = 1; precision < power(); precision *= 2) {
            const IntPoly au = reduce(a * u);
            u = reduce(u * (IntPoly::constant(2 * s) - au));
            s *= s;
        }
        return normalized({std::move(u), IntPoly::constant(s)});
    }

    Residue negate(Residue a) const {
        a.num = -a.num;
        return a;
    }

    Residue add(const Residue& a, const Residue& b) const {
        if (a.num.is_zero()) return b;
        if (b.num.is_zero()) return a;
        if (a.den == b.den) return normalized({reduce(a.num + b.num), a.den});
        if (a.den.is_constant() && b.den.is_constant()) {
            const Integer& da = a.den.leading();
            const Integer& db = b.den.leading();
            const Integer l = lcm(da, db);
            return normalized({a.num * Integer(l / da) + b.num * Integer(l / db), IntPoly::constant(l)});
        }
        return normalized({reduce(a.num * b.den + b.num * a.den), reduce(a.den * b.den)});
    }

    Residue sub(const Residue& a, const Residue& b) const { return add(a, negate(b)); }

    Residue mul(const Residue& a, const Residue& b) const {
        if (a.num.is_zero() || b.num.is_zero()) return {};
        IntPoly den = (a.den.is_constant() && b.den.is_constant()) ? a.den * b.den : reduce(a.den * b.den);
        return normalized({reduce(a.num * b.num), std::move(den)});
    }

    Residue scale(const Residue& a, const Integer& c) const { return normalized({a.num * c, a.den}); }

    /// Verdict for lhs = rhs modulo Phi_n^k; the residual is the reduced numerator of lhs - rhs.
    CongruenceResult verdict(const Residue& lhs, const Residue& rhs) const {
        return CongruenceResult::from_residual(sub(lhs, rhs).num);
    }

private:
    static Residue normalized(Residue r) {
        if (r.num.is_zero()) return {IntPoly{}, IntPoly::constant(1)};
        if (!r.den.is_constant()) return r;
        Integer g = gcd(r.num.content(), r.den.leading());
        if (sgn(r.den.leading()) < 0) g = -g;
        if (g != 1) {
            r.num.divexact(g);
            r.den.divexact(g);
        }
        return r;
    }

    std::int64_t n_;
    Modulus modulus_;
    Modulus multiple_;
    IntPoly q_inverse_;
};

}  // namespace qcong
