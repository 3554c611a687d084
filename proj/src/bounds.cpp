#include "lsfc/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace lsfc {

namespace {
std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }
}

BigInt binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        r *= static_cast<std::int64_t>(n - k + i);
        r /= static_cast<std::int64_t>(i);
    }
    return r;
}

double log_of_bigint(const BigInt& v) {
    if (v <= 0) throw std::domain_error("log of non-positive integer");
    using BF = boost::multiprecision::cpp_bin_float_50;
    return static_cast<double>(log(BF(v)));
}

std::size_t rate_achievable(const ProblemInstance& inst) {
    inst.validate();
    return inst.Delta * ceil_div(inst.L, inst.Delta) * ceil_div(inst.K, inst.Delta + inst.M - 1);
}

double lower_bound_fq(const ProblemInstance& inst) {
    inst.validate();
    if (!inst.field.is_prime_field())
        throw std::invalid_argument("finite-field bound needs a prime field");
    const double q = static_cast<double>(inst.field.modulus());
    const double lnq = std::log(q);
    double denom = static_cast<double>(inst.Delta + inst.M) +
                   log_of_bigint(binomial(inst.L, inst.Delta)) / lnq +
                   log_of_bigint(binomial(inst.K, inst.M)) / lnq -
                   (q > 2 ? std::log(q - 1.0) / lnq : 0.0);
    double counting = static_cast<double>(inst.L) * static_cast<double>(inst.K) / denom;
    return std::max(static_cast<double>(inst.L), counting);
}

double lower_bound_large_q(const ProblemInstance& inst) {
    inst.validate();
    double lk = static_cast<double>(inst.L) * static_cast<double>(inst.K);
    return std::max(static_cast<double>(inst.L),
                    lk / static_cast<double>(inst.Delta + inst.M - 1));
}

double lower_bound_real(const ProblemInstance& inst) { return lower_bound_large_q(inst); }

Rational lower_bound_real_exact(const ProblemInstance& inst) {
    inst.validate();
    Rational counting(static_cast<std::int64_t>(inst.L * inst.K),
                      static_cast<std::int64_t>(inst.Delta + inst.M - 1));
    Rational trivial(static_cast<std::int64_t>(inst.L));
    return std::max(trivial, counting);
}

double divisible_gap_ceiling(const ProblemInstance& inst) {
    double lq = std::log(static_cast<double>(inst.field.modulus()));
    double denom = static_cast<double>(inst.Delta + inst.M - 1);
    double q_term = std::max(0.0, 1.0 - std::log(static_cast<double>(inst.field.modulus() - 1)) / lq);
    double l_term = static_cast<double>(inst.Delta) *
                    std::max(0.0, std::log(static_cast<double>(inst.L)) / lq - 1.0);
    return 3.0 + (q_term + l_term) / denom;
}

BoundsReport gap_report(const ProblemInstance& inst) {
    inst.validate();
    BoundsReport rep;
    rep.rate_formula = rate_achievable(inst);
    rep.lb_large_q = lower_bound_large_q(inst);
    rep.lb_real = lower_bound_real(inst);
    rep.lb_real_ceil = static_cast<std::size_t>(std::ceil(rep.lb_real - 1e-9));
    rep.gap_real = static_cast<double>(rep.rate_formula) / rep.lb_real;
    rep.delta_divides_l = inst.L % inst.Delta == 0;
    rep.block_width_divides_k = inst.K % (inst.Delta + inst.M - 1) == 0;
    if (inst.field.is_prime_field()) {
        rep.has_finite_q = true;
        rep.lb_finite_q = lower_bound_fq(inst);
        rep.lb_finite_q_ceil = static_cast<std::size_t>(std::ceil(rep.lb_finite_q - 1e-9));
        rep.gap_finite_q = static_cast<double>(rep.rate_formula) / rep.lb_finite_q;
        rep.q_ge_k = inst.field.modulus() >= static_cast<std::int64_t>(inst.K);
        if (rep.delta_divides_l && rep.block_width_divides_k && rep.q_ge_k &&
            rep.gap_finite_q > divisible_gap_ceiling(inst) + 1e-9)
            throw std::logic_error("divisible finite-field gap exceeded its ceiling");
    }
    return rep;
}

} // namespace lsfc
