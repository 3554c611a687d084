#pragma once

#include <cstdint>

#include "lsfc/scheme.hpp"

namespace lsfc {

/// Achievable rate, converse lower bounds, and gap ratios for one
/// (K, L, M, Delta[, q]) parameter point.
struct BoundsReport {
    std::size_t rate_formula = 0;
    double lb_finite_q = 0.0;    // counting converse (prime fields only)
    std::size_t lb_finite_q_ceil = 0;
    double lb_large_q = 0.0;     // q -> infinity limit of the counting converse
    double lb_real = 0.0;        // degrees-of-freedom converse over the rationals
    std::size_t lb_real_ceil = 0;
    double gap_finite_q = 0.0;   // rate_formula / lb_finite_q (0 when no prime field)
    double gap_real = 0.0;       // rate_formula / lb_real
    bool delta_divides_l = false;
    bool block_width_divides_k = false;
    bool q_ge_k = false;
    bool has_finite_q = false;
};

std::size_t rate_achievable(const ProblemInstance& inst);

/// max(L, LK / (Delta + M + log_q C(L,Delta) + log_q C(K,M) - log_q(q-1))).
double lower_bound_fq(const ProblemInstance& inst);

/// max(L, LK / (Delta + M - 1)).
double lower_bound_large_q(const ProblemInstance& inst);

/// Same expression as the large-q limit; exact statement over the reals.
double lower_bound_real(const ProblemInstance& inst);
Rational lower_bound_real_exact(const ProblemInstance& inst);

BoundsReport gap_report(const ProblemInstance& inst);

/// Provable ceiling on rate_formula / lb_finite_q for divisible instances with
/// q >= K.  The nominal constant is 3; the extra slack terms account for
/// 1 - log_q(q-1) > 0 and for log_q(L) > 1 when L > q, both of which the
/// coarse constant ignores.  Equality cases exist (e.g. K = L = q, M = Delta = 1).
double divisible_gap_ceiling(const ProblemInstance& inst);

BigInt binomial(std::size_t n, std::size_t k);
/// Natural log of an exact positive big integer, at double precision.
double log_of_bigint(const BigInt& v);

} // namespace lsfc
