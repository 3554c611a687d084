#pragma once

#include <optional>

#include "lsfc/bounds.hpp"
#include "lsfc/scheme.hpp"

namespace lsfc {

struct OracleBudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OracleResult {
    std::optional<std::size_t> min_r;          // nullopt: exceeded budget
    std::optional<FactorizationCertificate> witness;
    std::size_t r_max;
};

/// Exhaustive minimal inner dimension for D = C*A under Delta-sparse C
/// columns and M-sparse A rows. Prime fields only; tiny instances.
OracleResult min_rate_bruteforce(const ProblemInstance& inst, const DemandMatrix& demand,
                                 std::size_t r_max);

struct CountingCheck {
    BigInt distinct_products;
    Rational bound;   // (C(L,Delta) q^Delta)^R (C(K,M) q^M)^R / (q-1)^R
    bool within_bound;
};

/// Enumerates every admissible (C, A) pair and counts distinct products.
CountingCheck count_distinct_products(std::size_t L, std::size_t K, std::size_t R,
                                      std::size_t Delta, std::size_t M, std::int64_t q,
                                      std::size_t pair_budget = 10'000'000);

struct SandwichReport {
    double lower_bound;     // counting bound for full-rank D, rank(D) otherwise
    std::size_t min_r;
    std::size_t scheme_rate;
    bool holds;
};

SandwichReport sandwich_check(const ProblemInstance& inst, const DemandMatrix& demand,
                              std::size_t r_max);

} // namespace lsfc
