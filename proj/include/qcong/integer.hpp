#pragma once

/**
 * @file integer.hpp
 * @brief Arbitrary-precision integer helpers shared by the q-series code.
 *
 * Integer is GMP's mpz_class. The helpers here cover the few number-theoretic
 * primitives the rest of the library needs: binomials, primality by trial
 * division, Euler's totient and modular inverses.
 */

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcong {

using Integer = mpz_class;

/// C(n, k), zero outside 0 <= k <= n.
inline Integer binomial(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0 || k > n) return Integer(0);
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::int64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<std::int64_t> divisors(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("divisors: n must be positive");
    std::vector<std::int64_t> small, large;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

/// Euler's totient via trial-division factorization.
inline std::int64_t totient(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("totient: n must be positive");
    std::int64_t result = n;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

/// Inverse of a modulo m; throws if gcd(a, m) != 1.
inline Integer mod_inverse(const Integer& a, const Integer& m) {
    Integer r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw std::domain_error("mod_inverse: " + a.get_str() + " is not invertible modulo " + m.get_str());
    return r;
}

/// Least nonnegative residue.
inline Integer mod_floor(const Integer& a, const Integer& m) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline Integer gcd(const Integer& a, const Integer& b) {
    Integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Integer lcm(const Integer& a, const Integer& b) {
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

}  // namespace qcong
