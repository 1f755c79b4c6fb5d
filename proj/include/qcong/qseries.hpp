#pragma once

/**
 * @file qseries.hpp
 * @brief Named q-objects: q-integers, Gaussian binomials, cyclotomic
 * polynomials, trinomial and q-trinomial coefficients, Euler numbers.
 */

#include "qcong/int_poly.hpp"
#include "qcong/integer.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcong {

/// [n]_q = 1 + q + ... + q^(n-1), n >= 1.
inline IntPoly q_int(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("q_int: n must be >= 1, got " + std::to_string(n));
    return IntPoly(std::vector<Integer>(static_cast<std::size_t>(n), Integer(1)));
}

/**
 * Gaussian binomial [n k]_q; the zero polynomial unless 0 <= k <= n.
 *
 * Built from the product formula one factor at a time: after step i the
 * partial product is [n-k+i, i], so each division by 1 - q^i is exact and
 * intermediate degrees never exceed the final one.
 */
inline IntPoly gauss_binom(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return {};
    k = std::min(k, n - k);
    IntPoly p = IntPoly::constant(1);
    for (std::int64_t i = 1; i <= k; ++i) {
        p.mul_one_minus_q_pow(n - k + i);
        p.div_one_minus_q_pow(i);
    }
    return p;
}

namespace detail {

class CyclotomicTable {
public:
    static CyclotomicTable& instance() {
        static CyclotomicTable table;
        return table;
    }

    IntPoly get(std::int64_t n) {
        {
            std::shared_lock lock(mutex_);
            if (auto it = table_.find(n); it != table_.end()) return it->second;
        }
        // q^n - 1 divided by every Phi_d with d | n, d < n.
        IntPoly p = IntPoly::monomial(n) - IntPoly::constant(1);
        for (std::int64_t d : divisors(n)) {
            if (d == n) break;
            p = divide_exact(p, get(d));
        }
        std::unique_lock lock(mutex_);
        return table_.try_emplace(n, std::move(p)).first->second;
    }

    std::size_t size() const {
        std::shared_lock lock(mutex_);
        return table_.size();
    }

private:
    CyclotomicTable() = default;
    mutable std::shared_mutex mutex_;
    std::map<std::int64_t, IntPoly> table_;
};

}  // namespace detail

/// Phi_n(q), memoized across calls.
inline IntPoly cyclotomic(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("cyclotomic: n must be >= 1, got " + std::to_string(n));
    return detail::CyclotomicTable::instance().get(n);
}

enum class TrinomialMethod { expand, sum1, sum2 };

/// Coefficient of x^(j+n) in (1+x+x^2)^n, computed by the chosen method.
inline Integer trinomial(std::int64_t n, std::int64_t j, TrinomialMethod method = TrinomialMethod::expand) {
    if (n < 0 || j < -n || j > n) return 0;
    Integer sum = 0;
    switch (method) {
        case TrinomialMethod::expand: {
            const IntPoly p = pow(IntPoly{1, 1, 1}, static_cast<std::uint64_t>(n));
            return p.coeff(j + n);
        }
        case TrinomialMethod::sum1:
            for (std::int64_t k = 0; k <= n; ++k) sum += binomial(n, k) * binomial(n - k, k + j);
            return sum;
        case TrinomialMethod::sum2:
            for (std::int64_t k = 0; k <= n; ++k) {
                const Integer t = binomial(n, k) * binomial(2 * n - 2 * k, n - j - k);
                if (k % 2 == 0)
                    sum += t;
                else
                    sum -= t;
            }
            return sum;
    }
    throw std::invalid_argument("trinomial: unknown method");
}

/// Andrews-Baxter q-trinomial sum over k of q^(k(k+j)) [n k] [n-k, k+j].
inline IntPoly q_trinomial(std::int64_t n, std::int64_t j) {
    IntPoly sum;
    if (n < 0) return sum;
    for (std::int64_t k = std::max<std::int64_t>(0, -j); k <= n; ++k) {
        IntPoly second = gauss_binom(n - k, k + j);
        if (second.is_zero()) continue;
        sum += (gauss_binom(n, k) * second).shifted(k * (k + j));
    }
    return sum;
}

/// Euler number E_n (E_0 = 1, E_2 = -1, E_4 = 5, odd indices vanish).
inline Integer euler_number(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("euler_number: n must be >= 0");
    if (n % 2 == 1) return 0;
    const std::int64_t half = n / 2;
    std::vector<Integer> even(static_cast<std::size_t>(half) + 1);
    even[0] = 1;
    for (std::int64_t m = 1; m <= half; ++m) {
        Integer s = 0;
        for (std::int64_t i = 0; i < m; ++i) s += binomial(2 * m, 2 * i) * even[static_cast<std::size_t>(i)];
        even[static_cast<std::size_t>(m)] = -s;
    }
    return even.back();
}

}  // namespace qcong
