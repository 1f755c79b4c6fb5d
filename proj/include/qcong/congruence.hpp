#pragma once

/**
 * @file congruence.hpp
 * @brief Congruences of rational functions modulo powers of a monic polynomial.
 *
 * A(q) = B(q) (mod P^k) means: writing A - B = N/D in lowest terms, P^k
 * divides N and D is coprime with P. An ill-posed comparison (D sharing a
 * factor with P) is reported as a verdict, never thrown.
 */

#include "qcong/int_poly.hpp"
#include "qcong/rat_fun.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace qcong {

/// base^power for a monic base of degree >= 1; the expansion is cached.
class Modulus {
public:
    Modulus(IntPoly base, std::int64_t power) : base_(std::move(base)), power_(power) {
        if (base_.degree() < 1) throw std::invalid_argument("Modulus: base must have degree >= 1");
        if (!base_.is_monic()) throw std::invalid_argument("Modulus: base must be monic");
        if (power_ < 1) throw std::invalid_argument("Modulus: power must be >= 1");
        expanded_ = pow(base_, static_cast<std::uint64_t>(power_));
    }

    const IntPoly& base() const { return base_; }
    std::int64_t power() const { return power_; }
    const IntPoly& expanded() const { return expanded_; }

private:
    IntPoly base_;
    std::int64_t power_;
    IntPoly expanded_;
};

enum class CongruenceReason { divisible, nonzero_remainder, denominator_not_coprime };

inline std::string_view to_string(CongruenceReason r) {
    switch (r) {
        case CongruenceReason::divisible: return "divisible";
        case CongruenceReason::nonzero_remainder: return "nonzero_remainder";
        case CongruenceReason::denominator_not_coprime: return "denominator_not_coprime";
    }
    return "unknown";
}

struct CongruenceResult {
    bool holds = false;
    CongruenceReason reason = CongruenceReason::nonzero_remainder;
    IntPoly residual;

    static CongruenceResult from_residual(IntPoly residual) {
        CongruenceResult r;
        r.holds = residual.is_zero();
        r.reason = r.holds ? CongruenceReason::divisible : CongruenceReason::nonzero_remainder;
        r.residual = std::move(residual);
        return r;
    }
};

inline nlohmann::json to_json(const CongruenceResult& r) {
    return {{"holds", r.holds}, {"reason", std::string(to_string(r.reason))}, {"residual", to_string(r.residual)}};
}

/// Remainder of a modulo m.expanded().
inline IntPoly reduce_mod(IntPoly a, const Modulus& m) { return remainder_monic(std::move(a), m.expanded()); }

/// True iff gcd(a, base) is a constant.
inline bool is_coprime(const IntPoly& a, const IntPoly& base) {
    if (a.is_zero()) throw std::invalid_argument("is_coprime: a must be nonzero");
    if (a.is_constant()) return true;
    return gcd(a, base).degree() == 0;
}

inline CongruenceResult congruent(const RatFun& a, const RatFun& b, const Modulus& m) {
    const RatFun d = a - b;
    if (!is_coprime(d.den(), m.base())) {
        CongruenceResult r;
        r.holds = false;
        r.reason = CongruenceReason::denominator_not_coprime;
        r.residual = reduce_mod(d.num(), m);
        return r;
    }
    return CongruenceResult::from_residual(reduce_mod(d.num(), m));
}

}  // namespace qcong
