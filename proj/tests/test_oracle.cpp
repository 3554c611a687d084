#include <doctest.h>

#include <algorithm>

#include "lsfc/oracle.hpp"
#include "lsfc/rng.hpp"

using namespace lsfc;

namespace {

Matrix mat(const Field& f, const std::vector<std::vector<int>>& rows) {
    Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size(), f);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c)
            m.at(r, c) = Scalar::from_int(f, rows[r][c]);
    return m;
}

} // namespace

TEST_CASE("min_rate_bruteforce pinned cases") {
    Field f2 = Field::prime(2);

    SUBCASE("identity demand, M = 1, Delta = 1") {
        ProblemInstance inst{2, 2, 1, 1, f2};
        OracleResult res = min_rate_bruteforce(inst, DemandMatrix{Matrix::identity(2, f2)}, 5);
        REQUIRE(res.min_r.has_value());
        CHECK(*res.min_r == 2);
        CHECK(verify_certificate(*res.witness, Matrix::identity(2, f2), 1, 1));
    }

    SUBCASE("upper triangular, M = 2, Delta = 2") {
        ProblemInstance inst{2, 2, 2, 2, f2};
        Matrix d = mat(f2, {{1, 1}, {0, 1}});
        OracleResult res = min_rate_bruteforce(inst, DemandMatrix{d}, 5);
        REQUIRE(res.min_r.has_value());
        CHECK(*res.min_r == 2);
        CHECK(verify_certificate(*res.witness, d, 2, 2));
    }

    SUBCASE("all-ones row needs two 2-sparse rows") {
        ProblemInstance inst{3, 1, 2, 1, f2};
        Matrix d = mat(f2, {{1, 1, 1}});
        OracleResult res = min_rate_bruteforce(inst, DemandMatrix{d}, 5);
        REQUIRE(res.min_r.has_value());
        CHECK(*res.min_r == 2);
        CHECK(verify_certificate(*res.witness, d, 1, 2));
    }

    SUBCASE("zero demand has an empty factorization") {
        ProblemInstance inst{2, 2, 1, 1, f2};
        OracleResult res = min_rate_bruteforce(inst, DemandMatrix{Matrix(2, 2, f2)}, 5);
        REQUIRE(res.min_r.has_value());
        CHECK(*res.min_r == 0);
        CHECK(res.witness->inner_dim() == 0);
    }

    SUBCASE("budget can be exceeded") {
        ProblemInstance inst{3, 1, 1, 1, f2};
        Matrix d = mat(f2, {{1, 1, 1}}); // needs 3 one-sparse rows
        OracleResult res = min_rate_bruteforce(inst, DemandMatrix{d}, 2);
        CHECK_FALSE(res.min_r.has_value());
    }

    SUBCASE("feasibility preconditions enforced") {
        ProblemInstance inst{5, 2, 1, 1, f2}; // K > 4
        CHECK_THROWS_AS(min_rate_bruteforce(inst, DemandMatrix{Matrix(2, 5, f2)}, 5),
                        std::invalid_argument);
    }
}

TEST_CASE("witness always verifies by direct multiplication") {
    Field f3 = Field::prime(3);
    SplitMix64 rng(77);
    int done = 0;
    while (done < 10) {
        std::size_t k = 2 + rng.next_below(2), l = 2, m = 2, delta = 1 + rng.next_below(2);
        ProblemInstance inst{k, l, m, delta, f3};
        DemandMatrix d{rng.next_matrix(l, k, f3)};
        OracleResult res = min_rate_bruteforce(inst, d, 5);
        if (!res.min_r) continue;
        CHECK(verify_certificate(*res.witness, d.matrix, delta, m));
        CHECK(res.witness->inner_dim() == *res.min_r);
        ++done;
    }
}

TEST_CASE("min_r invariant under row scaling and column permutation") {
    Field f3 = Field::prime(3);
    ProblemInstance inst{3, 2, 2, 1, f3};
    Matrix d = mat(f3, {{1, 2, 0}, {0, 1, 1}});
    OracleResult base = min_rate_bruteforce(inst, DemandMatrix{d}, 5);
    REQUIRE(base.min_r.has_value());

    // Scale each row by a nonzero constant.
    Matrix scaled = d;
    scaled.set_row(0, scale_vec(d.row(0), Scalar::from_int(f3, 2)));
    scaled.set_row(1, scale_vec(d.row(1), Scalar::from_int(f3, 2)));
    OracleResult s = min_rate_bruteforce(inst, DemandMatrix{scaled}, 5);
    REQUIRE(s.min_r.has_value());
    CHECK(*s.min_r == *base.min_r);

    // Permute the subfunction indices.
    Matrix perm = d.select_cols({2, 0, 1});
    OracleResult p = min_rate_bruteforce(inst, DemandMatrix{perm}, 5);
    REQUIRE(p.min_r.has_value());
    CHECK(*p.min_r == *base.min_r);
}

TEST_CASE("count_distinct_products") {
    SUBCASE("1,1,1,1,1 over F_2") {
        CountingCheck c = count_distinct_products(1, 1, 1, 1, 1, 2);
        CHECK(c.distinct_products == 2);
        CHECK(c.bound == Rational(4));
        CHECK(c.within_bound);
    }
    SUBCASE("L=2, K=1, R=1 over F_3") {
        CountingCheck c = count_distinct_products(2, 1, 1, 1, 1, 3);
        CHECK(c.distinct_products == 5);
        CHECK(c.bound == Rational(9));
        CHECK(c.within_bound);
    }
    SUBCASE("L=2, K=2, R=2 over F_2") {
        CountingCheck c = count_distinct_products(2, 2, 2, 1, 1, 2);
        CHECK(c.bound == Rational(256));
        CHECK(Rational(c.distinct_products) <= c.bound);
        CHECK(c.within_bound);
    }
    SUBCASE("budget guard") {
        CHECK_THROWS_AS(count_distinct_products(2, 2, 2, 1, 1, 2, 10), OracleBudgetError);
    }
}

TEST_CASE("counting bound holds on every enumerable point tried") {
    for (auto [l, k, r, d, m, q] :
         {std::tuple<std::size_t, std::size_t, std::size_t, std::size_t, std::size_t,
                     std::int64_t>{1, 1, 1, 1, 1, 2},
          {2, 1, 1, 1, 1, 3},
          {2, 2, 2, 1, 1, 2},
          {2, 2, 2, 2, 1, 2},
          {1, 2, 1, 1, 2, 3},
          {2, 2, 1, 2, 2, 2}}) {
        CountingCheck c = count_distinct_products(l, k, r, d, m, q);
        CHECK(c.within_bound);
    }
}

TEST_CASE("sandwich_check") {
    Field f2 = Field::prime(2);

    SUBCASE("identity demand brackets tightly") {
        ProblemInstance inst{2, 2, 1, 1, f2};
        SandwichReport rep = sandwich_check(inst, DemandMatrix{Matrix::identity(2, f2)}, 5);
        CHECK(rep.min_r == 2);
        CHECK(rep.lower_bound == doctest::Approx(2.0));
        CHECK(rep.scheme_rate >= 2);
        CHECK(rep.holds);
    }

    SUBCASE("random full-rank demands") {
        SplitMix64 rng(87);
        int done = 0;
        while (done < 5) {
            ProblemInstance inst{3, 2, 2, 1, f2};
            DemandMatrix d{rng.next_matrix(2, 3, f2)};
            if (rank(d.matrix) < 2) continue;
            SandwichReport rep = sandwich_check(inst, d, 5);
            CHECK(rep.holds);
            ++done;
        }
    }

    SUBCASE("zero demand") {
        ProblemInstance inst{2, 2, 2, 2, f2};
        SandwichReport rep = sandwich_check(inst, DemandMatrix{Matrix(2, 2, f2)}, 5);
        CHECK(rep.min_r == 0);
        CHECK(rep.lower_bound == doctest::Approx(0.0));
        CHECK(rep.holds);
    }
}
