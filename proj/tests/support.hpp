#pragma once

// Random generators and independent oracles shared by the test suites.

#include "qcong/int_poly.hpp"
#include "qcong/integer.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

namespace qcong::testing {

class PolyGen {
public:
    explicit PolyGen(std::uint64_t seed) : rng_(seed) {}

    std::int64_t integer(std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
    }

    /// Degree up to max_degree, coefficients in [-bound, bound]; sometimes zero.
    IntPoly poly(std::int64_t max_degree, std::int64_t bound = 20) {
        if (integer(0, 15) == 0) return {};
        std::vector<Integer> cs(static_cast<std::size_t>(integer(0, max_degree)) + 1);
        for (auto& c : cs) c = integer(-bound, bound);
        return IntPoly(std::move(cs));
    }

    IntPoly nonzero(std::int64_t max_degree, std::int64_t bound = 20) {
        IntPoly p;
        while (p.is_zero()) p = poly(max_degree, bound);
        return p;
    }

    IntPoly monic(std::int64_t degree, std::int64_t bound = 20) {
        std::vector<Integer> cs(static_cast<std::size_t>(degree) + 1);
        for (auto& c : cs) c = integer(-bound, bound);
        cs.back() = 1;
        return IntPoly(std::move(cs));
    }

private:
    std::mt19937_64 rng_;
};

/// [n k]_q from [n k] = [n-1, k-1] + q^k [n-1, k].
inline IntPoly pascal_binom(std::int64_t n, std::int64_t k) {
    static std::map<std::pair<std::int64_t, std::int64_t>, IntPoly> memo;
    if (k < 0 || k > n) return {};
    if (k == 0 || k == n) return IntPoly::constant(1);
    if (auto it = memo.find({n, k}); it != memo.end()) return it->second;
    IntPoly r = pascal_binom(n - 1, k - 1) + pascal_binom(n - 1, k).shifted(k);
    memo.emplace(std::pair{n, k}, r);
    return r;
}

/// Euler's phi from the prime factorization of n.
inline std::int64_t phi_by_factorization(std::int64_t n) {
    std::int64_t result = 1;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        std::int64_t pk = 1;
        while (n % p == 0) {
            n /= p;
            pk *= p;
        }
        result *= pk - pk / p;
    }
    if (n > 1) result *= n - 1;
    return result;
}

}  // namespace qcong::testing
