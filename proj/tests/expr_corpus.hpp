#pragma once

#include <string>
#include <vector>

namespace qcong::testing {

/// Expressions covering every node kind and function, for round-trip tests.
inline const std::vector<std::string>& expr_corpus() {
    static const std::vector<std::string> exprs = {
        "0",
        "42",
        "q",
        "n",
        "-q",
        "--n",
        "-q^2",
        "(-q)^2",
        "1 + q",
        "1 - q + q^2",
        "1 - (q - q^2)",
        "2*q*n",
        "2*(q + n)",
        "q/(1 - q)",
        "(1 - q^2)/(1 - q)",
        "q/q/q",
        "q/(q/q)",
        "2^3^2",
        "(2^3)^2",
        "q^(n^2)",
        "q^(0 - 2)*q^3",
        "q^-3",
        "q^(-n*(n - 1))",
        "qint(3)",
        "qint(n + 1)^2",
        "qbinom(2*n, n)",
        "qbinom(2*n - 1, n - 1) - q^(n*(n - 1))",
        "qtrinom(n, 0) - rn(n)",
        "qtrinom(2*n, n)",
        "cyclo(n)^2",
        "trinom(4, 0)",
        "trinom(n, 1)*q",
        "subst(qbinom(3, 1), n^2)",
        "subst(1 + q, 3)",
        "rn(3*n + 1)",
        "2 - n*(1 - q^n)",
        "-(1 + q)*-(1 - q)",
        "1 + q^2*-3",
        "qbinom(n, -1 + n)",
        "(n^2 - 1)/24*(q^n - 1)^2",
        "-1 + 2*q + q^3",
        "(1 + q)/(2 - 2*q)",
    };
    return exprs;
}

}  // namespace qcong::testing
