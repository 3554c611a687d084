#include "lsfc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_set>

namespace lsfc {

namespace {

// All nonzero vectors of length n over F_q with at most `cap` nonzero
// entries and first nonzero entry 1, in lexicographic order.
std::vector<Vec> canonical_sparse_rows(std::size_t n, std::size_t cap, const Field& f) {
    const std::int64_t q = f.modulus();
    std::vector<Vec> out;
    std::vector<std::int64_t> digits(n, 0);
    while (true) {
        std::size_t nnz = 0;
        for (auto d : digits)
            if (d != 0) ++nnz;
        if (nnz >= 1 && nnz <= cap) {
            std::size_t first = 0;
            while (digits[first] == 0) ++first;
            if (digits[first] == 1) {
                Vec v;
                v.reserve(n);
                for (auto d : digits) v.push_back(Scalar::from_int(f, d));
                out.push_back(std::move(v));
            }
        }
        std::size_t i = n;
        while (i > 0 && digits[i - 1] == q - 1) digits[--i] = 0;
        if (i == 0) break;
        ++digits[i - 1];
    }
    return out;
}

// All vectors (zero included) of length n with at most `cap` nonzeros.
std::vector<Vec> sparse_vectors(std::size_t n, std::size_t cap, const Field& f) {
    const std::int64_t q = f.modulus();
    std::vector<Vec> out;
    std::vector<std::int64_t> digits(n, 0);
    while (true) {
        std::size_t nnz = 0;
        for (auto d : digits)
            if (d != 0) ++nnz;
        if (nnz <= cap) {
            Vec v;
            v.reserve(n);
            for (auto d : digits) v.push_back(Scalar::from_int(f, d));
            out.push_back(std::move(v));
        }
        std::size_t i = n;
        while (i > 0 && digits[i - 1] == q - 1) digits[--i] = 0;
        if (i == 0) break;
        ++digits[i - 1];
    }
    return out;
}

std::string matrix_key(const Matrix& m) {
    std::string k;
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) {
            k += std::to_string(m.at(r, c).residue());
            k += ',';
        }
    return k;
}

// All row vectors x over F_q^R with x*A = target, by exhaustive scan.
std::vector<Vec> all_solutions(const Matrix& a, const Vec& target, std::int64_t q) {
    const std::size_t r = a.rows();
    std::vector<Vec> sols;
    std::vector<std::int64_t> digits(r, 0);
    while (true) {
        Vec x;
        x.reserve(r);
        for (auto d : digits) x.push_back(Scalar::from_int(a.field(), d));
        if (row_times_matrix(x, a) == target) sols.push_back(std::move(x));
        std::size_t i = r;
        while (i > 0 && digits[i - 1] == q - 1) digits[--i] = 0;
        if (i == 0) break;
        ++digits[i - 1];
    }
    return sols;
}

// Pick one solution per user so that each transmission is used by at most
// `delta_cap` users; depth-first over users.
bool assign_users(const std::vector<std::vector<Vec>>& per_user, std::size_t user,
                  std::vector<std::size_t>& usage, std::size_t delta_cap,
                  std::vector<const Vec*>& chosen) {
    if (user == per_user.size()) return true;
    for (const Vec& sol : per_user[user]) {
        bool ok = true;
        for (std::size_t r = 0; r < sol.size() && ok; ++r)
            if (!sol[r].is_zero() && usage[r] + 1 > delta_cap) ok = false;
        if (!ok) continue;
        for (std::size_t r = 0; r < sol.size(); ++r)
            if (!sol[r].is_zero()) ++usage[r];
        chosen[user] = &sol;
        if (assign_users(per_user, user + 1, usage, delta_cap, chosen)) return true;
        for (std::size_t r = 0; r < sol.size(); ++r)
            if (!sol[r].is_zero()) --usage[r];
    }
    return false;
}

// Try every multiset of R candidate rows (nondecreasing index sequence).
std::optional<FactorizationCertificate>
search_at_r(const Matrix& d, const std::vector<Vec>& rows, std::size_t big_r,
            std::size_t rank_d, std::size_t delta_cap, const Field& f) {
    const std::int64_t q = f.modulus();
    std::vector<std::size_t> pick(big_r, 0);

    auto try_a = [&](const Matrix& a) -> std::optional<FactorizationCertificate> {
        if (rank(a) < rank_d) return std::nullopt;
        std::vector<std::vector<Vec>> per_user;
        per_user.reserve(d.rows());
        for (std::size_t l = 0; l < d.rows(); ++l) {
            auto sols = all_solutions(a, d.row(l), q);
            if (sols.empty()) return std::nullopt;
            per_user.push_back(std::move(sols));
        }
        std::vector<std::size_t> usage(big_r, 0);
        std::vector<const Vec*> chosen(d.rows(), nullptr);
        if (!assign_users(per_user, 0, usage, delta_cap, chosen)) return std::nullopt;
        Matrix c(d.rows(), big_r, f);
        for (std::size_t l = 0; l < d.rows(); ++l) c.set_row(l, *chosen[l]);
        return FactorizationCertificate{std::move(c), a};
    };

    // Nondecreasing index sequences: row order never matters for existence.
    while (true) {
        Matrix a(big_r, d.cols(), f);
        for (std::size_t r = 0; r < big_r; ++r) a.set_row(r, rows[pick[r]]);
        if (auto cert = try_a(a)) return cert;
        std::size_t i = big_r;
        while (i > 0 && pick[i - 1] == rows.size() - 1) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < big_r; ++j) pick[j] = pick[i - 1];
    }
    return std::nullopt;
}

} // namespace

OracleResult min_rate_bruteforce(const ProblemInstance& inst, const DemandMatrix& demand,
                                 std::size_t r_max) {
    inst.validate();
    if (!inst.field.is_prime_field() || inst.field.modulus() > 3 || inst.L > 3 ||
        inst.K > 4 || r_max > 5)
        throw std::invalid_argument("oracle feasibility requires q <= 3, L <= 3, K <= 4, R_max <= 5");
    const Matrix& d = demand.matrix;
    const std::size_t rank_d = rank(d);
    const Field& f = inst.field;

    if (rank_d == 0) { // zero demand: empty factorization
        FactorizationCertificate cert{Matrix(inst.L, 0, f), Matrix(0, inst.K, f)};
        return OracleResult{0, std::move(cert), r_max};
    }

    std::vector<Vec> rows = canonical_sparse_rows(inst.K, inst.M, f);
    for (std::size_t big_r = std::max<std::size_t>(rank_d, 1); big_r <= r_max; ++big_r)
        if (auto cert = search_at_r(d, rows, big_r, rank_d, inst.Delta, f))
            return OracleResult{big_r, std::move(cert), r_max};
    return OracleResult{std::nullopt, std::nullopt, r_max};
}

CountingCheck count_distinct_products(std::size_t L, std::size_t K, std::size_t R,
                                      std::size_t Delta, std::size_t M, std::int64_t q,
                                      std::size_t pair_budget) {
    Field f = Field::prime(q);
    std::vector<Vec> c_cols = sparse_vectors(L, Delta, f);
    std::vector<Vec> a_rows = sparse_vectors(K, M, f);

    double n_c = std::pow(static_cast<double>(c_cols.size()), static_cast<double>(R));
    double n_a = std::pow(static_cast<double>(a_rows.size()), static_cast<double>(R));
    if (n_c * n_a > static_cast<double>(pair_budget))
        throw OracleBudgetError("counting enumeration exceeds pair budget");

    auto all_matrices = [&](const std::vector<Vec>& parts, bool as_cols) {
        std::vector<Matrix> out;
        std::vector<std::size_t> pick(R, 0);
        while (true) {
            Matrix m = as_cols ? Matrix(L, R, f) : Matrix(R, K, f);
            for (std::size_t r = 0; r < R; ++r) {
                if (as_cols)
                    for (std::size_t l = 0; l < L; ++l) m.at(l, r) = parts[pick[r]][l];
                else
                    m.set_row(r, parts[pick[r]]);
            }
            out.push_back(std::move(m));
            std::size_t i = R;
            while (i > 0 && pick[i - 1] == parts.size() - 1) pick[--i] = 0;
            if (i == 0) break;
            ++pick[i - 1];
        }
        return out;
    };

    std::vector<Matrix> cs = all_matrices(c_cols, true);
    std::vector<Matrix> as = all_matrices(a_rows, false);
    std::unordered_set<std::string> products;
    for (const Matrix& c : cs)
        for (const Matrix& a : as) products.insert(matrix_key(matmul(c, a)));

    BigInt per_c = binomial(L, Delta) * pow(BigInt(q), static_cast<unsigned>(Delta));
    BigInt per_a = binomial(K, M) * pow(BigInt(q), static_cast<unsigned>(M));
    BigInt numer = pow(per_c * per_a, static_cast<unsigned>(R));
    BigInt denom = pow(BigInt(q - 1), static_cast<unsigned>(R));
    Rational bound(numer, denom);

    BigInt count = static_cast<std::int64_t>(products.size());
    return CountingCheck{count, bound, Rational(count) <= bound};
}

SandwichReport sandwich_check(const ProblemInstance& inst, const DemandMatrix& demand,
                              std::size_t r_max) {
    std::size_t rank_d = rank(demand.matrix);
    double lb = rank_d == inst.L ? lower_bound_fq(inst) : static_cast<double>(rank_d);
    OracleResult res = min_rate_bruteforce(inst, demand, r_max);
    if (!res.min_r) throw OracleBudgetError("oracle budget exceeded in sandwich check");
    SchemePlan plan = build_plan(inst, demand);
    bool holds = lb <= static_cast<double>(*res.min_r) + 1e-9 && *res.min_r <= plan.rate;
    return SandwichReport{lb, *res.min_r, plan.rate, holds};
}

} // namespace lsfc
