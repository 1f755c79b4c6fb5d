#pragma once

/**
 * @file int_poly.hpp
 * @brief Dense univariate polynomials in q over arbitrary-precision integers.
 *
 * Coefficient i holds the coefficient of q^i. The vector is kept normalized:
 * its last entry is nonzero and the zero polynomial is the empty vector.
 *
 * Multiplication and division are schoolbook, but both loops skip zero
 * coefficients of the sparser operand, so products with and divisions by
 * binomials like 1 - q^m or (q^n - 1)^k cost O(degree * nonzeros).
 */

#include "qcong/integer.hpp"

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qcong {

class IntPoly {
public:
    /// Degree of the zero polynomial ("minus infinity").
    static constexpr std::int64_t kZeroDegree = std::numeric_limits<std::int64_t>::min();

    IntPoly() = default;
    IntPoly(std::initializer_list<Integer> coeffs) : coeffs_(coeffs) { normalize(); }
    explicit IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

    static IntPoly constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }

    static IntPoly monomial(std::int64_t exponent, const Integer& c = 1) {
        if (exponent < 0) throw std::invalid_argument("IntPoly::monomial: negative exponent");
        std::vector<Integer> cs(static_cast<std::size_t>(exponent) + 1);
        cs.back() = c;
        return IntPoly(std::move(cs));
    }

    static IntPoly q() { return monomial(1); }

    /// 1 - q^m for m >= 1.
    static IntPoly one_minus_q_pow(std::int64_t m) {
        if (m < 1) throw std::invalid_argument("IntPoly::one_minus_q_pow: m must be positive");
        return constant(1) - monomial(m);
    }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    std::int64_t degree() const {
        return coeffs_.empty() ? kZeroDegree : static_cast<std::int64_t>(coeffs_.size()) - 1;
    }
    std::size_t size() const { return coeffs_.size(); }
    const std::vector<Integer>& coeffs() const { return coeffs_; }
    std::vector<Integer> release() && { return std::move(coeffs_); }

    Integer coeff(std::int64_t i) const {
        if (i < 0 || i >= static_cast<std::int64_t>(coeffs_.size())) return Integer(0);
        return coeffs_[static_cast<std::size_t>(i)];
    }

    const Integer& leading() const {
        if (coeffs_.empty()) throw std::domain_error("IntPoly::leading: zero polynomial");
        return coeffs_.back();
    }

    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

    /// Exponent of the lowest nonzero term; 0 for the zero polynomial.
    std::int64_t valuation() const {
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (sgn(coeffs_[i]) != 0) return static_cast<std::int64_t>(i);
        return 0;
    }

    std::size_t nonzero_count() const {
        return static_cast<std::size_t>(
            std::count_if(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return sgn(c) != 0; }));
    }

    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

    IntPoly operator-() const {
        IntPoly r = *this;
        for (auto& c : r.coeffs_) mpz_neg(c.get_mpz_t(), c.get_mpz_t());
        return r;
    }

    IntPoly& operator+=(const IntPoly& o) {
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
            mpz_add(coeffs_[i].get_mpz_t(), coeffs_[i].get_mpz_t(), o.coeffs_[i].get_mpz_t());
        normalize();
        return *this;
    }

    IntPoly& operator-=(const IntPoly& o) {
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
            mpz_sub(coeffs_[i].get_mpz_t(), coeffs_[i].get_mpz_t(), o.coeffs_[i].get_mpz_t());
        normalize();
        return *this;
    }

    IntPoly& operator*=(const Integer& s) {
        if (sgn(s) == 0) {
            coeffs_.clear();
            return *this;
        }
        for (auto& c : coeffs_) mpz_mul(c.get_mpz_t(), c.get_mpz_t(), s.get_mpz_t());
        return *this;
    }

    IntPoly& operator*=(const IntPoly& o);

    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(IntPoly a, const Integer& s) { return a *= s; }
    friend IntPoly operator*(const Integer& s, IntPoly a) { return a *= s; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);

    /// Multiplies by q^k; a negative k divides and requires the low coefficients to vanish.
    IntPoly shifted(std::int64_t k) const {
        if (is_zero() || k == 0) return *this;
        IntPoly r;
        if (k > 0) {
            r.coeffs_.resize(coeffs_.size() + static_cast<std::size_t>(k));
            std::copy(coeffs_.begin(), coeffs_.end(), r.coeffs_.begin() + k);
            return r;
        }
        const auto drop = static_cast<std::size_t>(-k);
        if (drop > coeffs_.size() || valuation() < -k)
            throw std::domain_error("IntPoly::shifted: q^" + std::to_string(-k) + " does not divide");
        r.coeffs_.assign(coeffs_.begin() + static_cast<std::ptrdiff_t>(drop), coeffs_.end());
        return r;
    }

    /// In-place multiplication by 1 - q^m.
    IntPoly& mul_one_minus_q_pow(std::int64_t m) {
        if (m < 1) throw std::invalid_argument("mul_one_minus_q_pow: m must be positive");
        if (is_zero()) return *this;
        const auto s = static_cast<std::size_t>(m);
        const std::size_t old = coeffs_.size();
        coeffs_.resize(old + s);
        for (std::size_t j = old; j-- > 0;)
            mpz_sub(coeffs_[j + s].get_mpz_t(), coeffs_[j + s].get_mpz_t(), coeffs_[j].get_mpz_t());
        normalize();
        return *this;
    }

    /// In-place exact division by 1 - q^m; throws if the division leaves a remainder.
    IntPoly& div_one_minus_q_pow(std::int64_t m) {
        if (m < 1) throw std::invalid_argument("div_one_minus_q_pow: m must be positive");
        if (is_zero()) return *this;
        const auto s = static_cast<std::size_t>(m);
        if (coeffs_.size() <= s) throw std::domain_error("div_one_minus_q_pow: not divisible");
        // r_j = a_j + r_{j-m}; the top m entries of the running sum must vanish.
        for (std::size_t j = s; j < coeffs_.size(); ++j)
            mpz_add(coeffs_[j].get_mpz_t(), coeffs_[j].get_mpz_t(), coeffs_[j - s].get_mpz_t());
        const std::size_t qsize = coeffs_.size() - s;
        for (std::size_t j = qsize; j < coeffs_.size(); ++j)
            if (sgn(coeffs_[j]) != 0) throw std::domain_error("div_one_minus_q_pow: not divisible");
        coeffs_.resize(qsize);
        normalize();
        return *this;
    }

    /// Nonnegative gcd of the coefficients; 0 for the zero polynomial.
    Integer content() const {
        Integer g = 0;
        for (const auto& c : coeffs_) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
            if (g == 1) break;
        }
        return g;
    }

    /// Divides every coefficient by s, which must divide them all.
    IntPoly& divexact(const Integer& s) {
        if (sgn(s) == 0) throw std::domain_error("IntPoly::divexact: division by zero");
        for (auto& c : coeffs_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), s.get_mpz_t());
        return *this;
    }

    /// this / content with positive leading coefficient.
    IntPoly primitive_part() const {
        if (is_zero()) return *this;
        IntPoly r = *this;
        Integer c = content();
        if (sgn(leading()) < 0) c = -c;
        return r.divexact(c);
    }

private:
    void normalize() {
        while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
    }

    std::vector<Integer> coeffs_;
};

namespace detail {

struct Term {
    std::size_t exponent;
    const Integer* coeff;
};

inline std::vector<Term> nonzero_terms(const IntPoly& p) {
    std::vector<Term> terms;
    const auto& cs = p.coeffs();
    for (std::size_t i = 0; i < cs.size(); ++i)
        if (sgn(cs[i]) != 0) terms.push_back({i, &cs[i]});
    return terms;
}

}  // namespace detail

inline IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const bool a_sparser = a.nonzero_count() <= b.nonzero_count();
    const IntPoly& sparse = a_sparser ? a : b;
    const IntPoly& dense = a_sparser ? b : a;
    std::vector<Integer> out(a.size() + b.size() - 1);
    const auto& dc = dense.coeffs();
    for (const auto& t : detail::nonzero_terms(sparse)) {
        for (std::size_t j = 0; j < dc.size(); ++j) {
            if (sgn(dc[j]) == 0) continue;
            mpz_addmul(out[t.exponent + j].get_mpz_t(), t.coeff->get_mpz_t(), dc[j].get_mpz_t());
        }
    }
    return IntPoly(std::move(out));
}

inline IntPoly& IntPoly::operator*=(const IntPoly& o) { return *this = *this * o; }

inline IntPoly add(const IntPoly& a, const IntPoly& b) { return a + b; }
inline IntPoly mul(const IntPoly& a, const IntPoly& b) { return a * b; }

inline IntPoly pow(IntPoly base, std::uint64_t e) {
    IntPoly result = IntPoly::constant(1);
    while (e > 0) {
        if (e & 1U) result *= base;
        e >>= 1U;
        if (e > 0) base *= base;
    }
    return result;
}

namespace detail {

/// Long division in Z[q]. Every quotient step must be divisible by lc(d), which
/// always holds for lc(d) = +-1; otherwise a non-integral step throws.
inline std::pair<IntPoly, IntPoly> long_divide(const IntPoly& a, const IntPoly& d) {
    if (d.is_zero()) throw std::domain_error("division by the zero polynomial");
    if (a.degree() < d.degree()) return {IntPoly{}, a};
    const auto dd = static_cast<std::size_t>(d.degree());
    const Integer& lc = d.leading();
    const bool unit = (lc == 1 || lc == -1);
    std::vector<Term> lower;
    for (const auto& t : nonzero_terms(d))
        if (t.exponent < dd) lower.push_back(t);

    std::vector<Integer> rem = a.coeffs();
    std::vector<Integer> quot(rem.size() - dd);
    Integer c;
    for (std::size_t i = rem.size(); i-- > dd;) {
        if (sgn(rem[i]) == 0) continue;
        if (unit) {
            c = rem[i];
            if (lc == -1) mpz_neg(c.get_mpz_t(), c.get_mpz_t());
        } else {
            if (!mpz_divisible_p(rem[i].get_mpz_t(), lc.get_mpz_t()))
                throw std::domain_error("long_divide: quotient is not integral");
            mpz_divexact(c.get_mpz_t(), rem[i].get_mpz_t(), lc.get_mpz_t());
        }
        const std::size_t base = i - dd;
        for (const auto& t : lower)
            mpz_submul(rem[base + t.exponent].get_mpz_t(), c.get_mpz_t(), t.coeff->get_mpz_t());
        rem[i] = 0;
        quot[base] = c;
    }
    rem.resize(dd);
    return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

/// Pseudo-remainder: lc(b)^e * a mod b with integer arithmetic.
inline IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
    const Integer& lc = b.leading();
    if (lc == 1 || lc == -1) return long_divide(a, b).second;
    std::vector<Integer> r = a.coeffs();
    const auto db = static_cast<std::size_t>(b.degree());
    const auto& bc = b.coeffs();
    Integer c;
    while (r.size() > db) {
        c = r.back();
        const std::size_t shift = r.size() - 1 - db;
        for (auto& x : r) mpz_mul(x.get_mpz_t(), x.get_mpz_t(), lc.get_mpz_t());
        for (std::size_t j = 0; j < bc.size(); ++j)
            if (sgn(bc[j]) != 0) mpz_submul(r[shift + j].get_mpz_t(), c.get_mpz_t(), bc[j].get_mpz_t());
        while (!r.empty() && sgn(r.back()) == 0) r.pop_back();
    }
    return IntPoly(std::move(r));
}

}  // namespace detail

/// a mod d for monic d, without forming the quotient.
inline IntPoly remainder_monic(IntPoly a, const IntPoly& d) {
    if (d.is_zero()) throw std::invalid_argument("remainder_monic: zero divisor");
    if (!d.is_monic()) throw std::invalid_argument("remainder_monic: divisor is not monic");
    if (a.degree() < d.degree()) return a;
    const auto dd = static_cast<std::size_t>(d.degree());
    std::vector<detail::Term> lower;
    for (const auto& t : detail::nonzero_terms(d))
        if (t.exponent < dd) lower.push_back(t);
    std::vector<Integer> rem = std::move(a).release();
    for (std::size_t i = rem.size(); i-- > dd;) {
        if (sgn(rem[i]) == 0) continue;
        const std::size_t base = i - dd;
        for (const auto& t : lower)
            mpz_submul(rem[base + t.exponent].get_mpz_t(), rem[i].get_mpz_t(), t.coeff->get_mpz_t());
    }
    rem.resize(dd);
    return IntPoly(std::move(rem));
}

/**
 * Division by a monic polynomial: returns (quot, rem) with a = quot*d + rem and
 * deg rem < deg d. Rejects zero and non-monic divisors.
 */
inline std::pair<IntPoly, IntPoly> divrem_monic(const IntPoly& a, const IntPoly& d) {
    if (d.is_zero()) throw std::invalid_argument("divrem_monic: zero divisor");
    if (!d.is_monic()) throw std::invalid_argument("divrem_monic: divisor is not monic");
    return detail::long_divide(a, d);
}

/// a / d for d dividing a in Z[q]; throws when the division is not exact.
inline IntPoly divide_exact(const IntPoly& a, const IntPoly& d) {
    auto [quot, rem] = detail::long_divide(a, d);
    if (!rem.is_zero()) throw std::domain_error("divide_exact: nonzero remainder");
    return quot;
}

/**
 * Greatest common divisor in Z[q]: the primitive gcd with positive leading
 * coefficient, times the gcd of the contents. Uses a primitive pseudo-remainder
 * sequence after stripping common powers of q; steps whose divisor has a unit
 * leading coefficient are plain divisions.
 */
inline IntPoly gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd(0, 0) is undefined");
    if (a.is_zero()) return sgn(b.leading()) < 0 ? -b : b;
    if (b.is_zero()) return sgn(a.leading()) < 0 ? -a : a;

    const Integer c = gcd(a.content(), b.content());
    const std::int64_t va = a.valuation();
    const std::int64_t vb = b.valuation();
    IntPoly x = a.shifted(-va).primitive_part();
    IntPoly y = b.shifted(-vb).primitive_part();
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
        if (y.degree() == 0) {
            x = IntPoly::constant(1);
            break;
        }
        IntPoly r = detail::pseudo_remainder(x, y);
        x = std::move(y);
        y = r.primitive_part();
    }
    return x.shifted(std::min(va, vb)) * c;
}

/// a(q^m) for m >= 1.
inline IntPoly substitute_monomial(const IntPoly& a, std::int64_t m) {
    if (m < 1) throw std::invalid_argument("substitute_monomial: m must be positive");
    if (a.is_zero() || m == 1) return a;
    std::vector<Integer> out((a.size() - 1) * static_cast<std::size_t>(m) + 1);
    for (std::size_t i = 0; i < a.size(); ++i) out[i * static_cast<std::size_t>(m)] = a.coeffs()[i];
    return IntPoly(std::move(out));
}

inline Integer eval_at_one(const IntPoly& a) {
    Integer s = 0;
    for (const auto& c : a.coeffs()) s += c;
    return s;
}

/// Canonical rendering: ascending powers, e.g. "-1 + 2*q + q^3"; zero is "0".
inline std::string to_string(const IntPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const Integer& c = p.coeffs()[i];
        if (sgn(c) == 0) continue;
        const bool negative = sgn(c) < 0;
        const Integer mag = abs(c);
        if (first)
            out << (negative ? "-" : "");
        else
            out << (negative ? " - " : " + ");
        first = false;
        if (i == 0) {
            out << mag.get_str();
            continue;
        }
        if (mag != 1) out << mag.get_str() << '*';
        out << 'q';
        if (i > 1) out << '^' << i;
    }
    return out.str();
}

inline std::ostream& operator<<(std::ostream& os, const IntPoly& p) { return os << to_string(p); }

}  // namespace qcong
