#pragma once

/**
 * @file rat_fun.hpp
 * @brief Elements of Q(q) as reduced fractions of integer polynomials.
 *
 * A RatFun is kept in canonical form: numerator and denominator have no common
 * polynomial factor, their contents are coprime, and the denominator has a
 * positive leading coefficient. Equality is therefore representational.
 */

#include "qcong/int_poly.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace qcong {

class RatFun {
public:
    RatFun() : den_(IntPoly::constant(1)) {}
    RatFun(const IntPoly& p) : num_(p), den_(IntPoly::constant(1)) {}  // NOLINT: polynomials embed
    RatFun(const Integer& c) : num_(IntPoly::constant(c)), den_(IntPoly::constant(1)) {}  // NOLINT

    /// num/den in lowest terms; rejects a zero denominator.
    static RatFun make(IntPoly num, IntPoly den) {
        if (den.is_zero()) throw std::domain_error("RatFun: zero denominator");
        RatFun r;
        if (num.is_zero()) return r;
        if (!den.is_constant() || den.leading() != 1) {
            const IntPoly g = gcd(num, den);
            if (!(g.is_constant() && g.leading() == 1)) {
                num = divide_exact(num, g);
                den = divide_exact(den, g);
            }
        }
        if (sgn(den.leading()) < 0) {
            num = -num;
            den = -den;
        }
        r.num_ = std::move(num);
        r.den_ = std::move(den);
        return r;
    }

    /// The rational constant a/b.
    static RatFun ratio(const Integer& a, const Integer& b) {
        return make(IntPoly::constant(a), IntPoly::constant(b));
    }

    /// q^e for any integer e.
    static RatFun q_pow(std::int64_t e) {
        if (e >= 0) return RatFun(IntPoly::monomial(e));
        RatFun r;
        r.num_ = IntPoly::constant(1);
        r.den_ = IntPoly::monomial(-e);
        return r;
    }

    const IntPoly& num() const { return num_; }
    const IntPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant() && den_.leading() == 1; }

    friend bool operator==(const RatFun& a, const RatFun& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

    RatFun operator-() const {
        RatFun r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend RatFun operator+(const RatFun& a, const RatFun& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.den_ == b.den_) return make(a.num_ + b.num_, a.den_);
        if (a.is_polynomial()) return make(a.num_ * b.den_ + b.num_, b.den_);
        if (b.is_polynomial()) return make(a.num_ + b.num_ * a.den_, a.den_);
        const IntPoly g = gcd(a.den_, b.den_);
        const IntPoly a_cofactor = divide_exact(b.den_, g);
        const IntPoly b_cofactor = divide_exact(a.den_, g);
        return make(a.num_ * a_cofactor + b.num_ * b_cofactor, a.den_ * a_cofactor);
    }

    friend RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

    friend RatFun operator*(const RatFun& a, const RatFun& b) {
        if (a.is_zero() || b.is_zero()) return RatFun();
        if (a.is_polynomial() && b.is_polynomial()) return RatFun(a.num_ * b.num_);
        return make(a.num_ * b.num_, a.den_ * b.den_);
    }

    friend RatFun operator/(const RatFun& a, const RatFun& b) {
        if (b.is_zero()) throw std::domain_error("RatFun: division by zero");
        return a * b.inverse();
    }

    RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
    RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
    RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
    RatFun& operator/=(const RatFun& o) { return *this = *this / o; }

    /// r^e; a negative exponent inverts first and so requires r != 0.
    RatFun pow(std::int64_t e) const {
        if (e < 0) return inverse().pow(-e);
        // Powers of coprime polynomials stay coprime.
        RatFun r;
        r.num_ = qcong::pow(num_, static_cast<std::uint64_t>(e));
        r.den_ = qcong::pow(den_, static_cast<std::uint64_t>(e));
        return r;
    }

    RatFun inverse() const {
        if (is_zero()) throw std::domain_error("RatFun: inverse of zero");
        RatFun r;
        r.num_ = den_;
        r.den_ = num_;
        if (sgn(r.den_.leading()) < 0) {
            r.num_ = -r.num_;
            r.den_ = -r.den_;
        }
        return r;
    }

private:
    IntPoly num_;
    IntPoly den_;
};

inline RatFun ratfun_make(IntPoly num, IntPoly den) { return RatFun::make(std::move(num), std::move(den)); }

inline RatFun ratfun_pow(const RatFun& r, std::int64_t e) { return r.pow(e); }

/// a(q^m) applied to numerator and denominator.
inline RatFun substitute_monomial(const RatFun& a, std::int64_t m) {
    return RatFun::make(substitute_monomial(a.num(), m), substitute_monomial(a.den(), m));
}

/// "(num)/(den)", or "(num)" when the denominator is 1.
inline std::string to_string(const RatFun& r) {
    if (r.is_polynomial()) return "(" + to_string(r.num()) + ")";
    return "(" + to_string(r.num()) + ")/(" + to_string(r.den()) + ")";
}

inline std::ostream& operator<<(std::ostream& os, const RatFun& r) { return os << to_string(r); }

}  // namespace qcong
