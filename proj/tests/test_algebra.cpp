#include <doctest.h>

#include "lsfc/matrix.hpp"
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

Vec vec(const Field& f, const std::vector<int>& v) {
    Vec out;
    for (int e : v) out.push_back(Scalar::from_int(f, e));
    return out;
}

// Independent oracle: plain triple loop, no skipping, no reuse of matmul.
Matrix schoolbook_matmul(const Matrix& a, const Matrix& b) {
    Matrix c(a.rows(), b.cols(), a.field());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            Scalar s = Scalar::zero(a.field());
            for (std::size_t k = 0; k < a.cols(); ++k) s = s + a.at(i, k) * b.at(k, j);
            c.at(i, j) = s;
        }
    return c;
}

bool scalar_multiple(const Vec& a, const Vec& b) {
    REQUIRE(a.size() == b.size());
    Scalar ratio = Scalar::zero(a.front().field());
    bool have = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero() != b[i].is_zero()) return false;
        if (a[i].is_zero()) continue;
        Scalar r = a[i] / b[i];
        if (!have) {
            ratio = r;
            have = true;
        } else if (r != ratio)
            return false;
    }
    return have;
}

const std::vector<std::vector<int>> kExample1D11 = {
    {1, 1, 1, 1, 1}, {1, 2, 3, 4, 5}, {1, 4, 9, 5, 3}};

} // namespace

TEST_CASE("field validation and canonical scalars") {
    CHECK_THROWS_AS(Field::prime(1), std::invalid_argument);
    CHECK_THROWS_AS(Field::prime(4), std::invalid_argument);
    CHECK_THROWS_AS(Field::prime(91), std::invalid_argument); // 7*13
    CHECK(Field::prime(2).modulus() == 2);

    Field f11 = Field::prime(11);
    CHECK(Scalar::from_int(f11, -5).residue() == 6);
    CHECK(Scalar::from_int(f11, 22).residue() == 0);
    CHECK(Scalar::from_string(f11, "-16").residue() == 6);

    Field q = Field::rational();
    Scalar half = Scalar::from_string(q, "2/4");
    CHECK(half.fraction() == Rational(1, 2));
    CHECK(Scalar::from_string(q, "-3/-6") == half);
    CHECK_THROWS(Scalar::from_string(q, "1/0"));
    CHECK_THROWS(Scalar::from_string(f11, "1/2"));
}

TEST_CASE("scalar arithmetic never mixes fields") {
    Scalar a = Scalar::from_int(Field::prime(5), 2);
    Scalar b = Scalar::from_int(Field::prime(7), 2);
    Scalar c = Scalar::from_int(Field::rational(), 2);
    CHECK_THROWS_AS(a + b, FieldMismatchError);
    CHECK_THROWS_AS(a * c, FieldMismatchError);
}

TEST_CASE("field axioms hold on random pairs") {
    for (const Field& f : {Field::prime(2), Field::prime(13), Field::rational()}) {
        SplitMix64 rng(42);
        for (int i = 0; i < 10000; ++i) {
            Scalar a = rng.next_scalar(f), b = rng.next_scalar(f);
            CHECK(a + (-a) == Scalar::zero(f));
            CHECK(a + b == b + a);
            CHECK((a + b) - b == a);
            if (!a.is_zero()) CHECK(a * a.inverse() == Scalar::one(f));
            if (!b.is_zero()) CHECK((a / b) * b == a);
        }
    }
}

TEST_CASE("matmul: identity, reference vectors, schoolbook cross-check") {
    Field f11 = Field::prime(11);
    Matrix m = mat(f11, {{1, 2}, {3, 4}, {5, 6}});
    CHECK(matmul(Matrix::identity(3, f11), m) == m);

    // [6,-5,1],[3,-4,1],[2,-3,1] reduced mod 11, stacked, times its inverse.
    Matrix v = mat(f11, {{6, 6, 1}, {3, 7, 1}, {2, 8, 1}});
    CHECK(matmul(v, invert(v)) == Matrix::identity(3, f11));

    Field q = Field::rational();
    SplitMix64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        Matrix a = rng.next_matrix(3, 4, q), b = rng.next_matrix(4, 2, q);
        CHECK(matmul(a, b) == schoolbook_matmul(a, b));
    }

    CHECK_THROWS_AS(matmul(m, m), DimensionError);
    CHECK_THROWS_AS(matmul(m, Matrix::identity(2, Field::prime(7))), FieldMismatchError);
}

TEST_CASE("rref: echelon form, pivots, transform") {
    Field q = Field::rational();
    Matrix z(3, 4, q);
    RrefResult rz = rref(z);
    CHECK(rz.echelon.is_zero());
    CHECK(rz.pivots.empty());
    CHECK(rz.transform == Matrix::identity(3, q));

    Field f11 = Field::prime(11);
    RrefResult rd = rref(mat(f11, kExample1D11));
    CHECK(rd.pivots == std::vector<std::size_t>{0, 1, 2});

    RrefResult rp = rref(mat(q, {{1, 2}, {2, 4}}));
    CHECK(rp.pivots == std::vector<std::size_t>{0});

    SplitMix64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        Matrix m = rng.next_matrix(3, 5, trial % 2 ? q : f11);
        RrefResult r = rref(m);
        CHECK(matmul(r.transform, m) == r.echelon);
        CHECK_NOTHROW(invert(r.transform));
        RrefResult again = rref(r.echelon);
        CHECK(again.echelon == r.echelon); // idempotent
    }
}

TEST_CASE("rank") {
    Field q = Field::rational();
    CHECK(rank(Matrix::identity(4, q)) == 4);
    CHECK(rank(mat(q, {{1, 1}, {2, 3}, {4, 9}})) == 2);
    Field f11 = Field::prime(11);
    Matrix d(6, 10, f11);
    const int full[6][10] = {{1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
                             {1, 2, 3, 4, 5, 6, 2, 8, 9, 10},
                             {1, 4, 9, 5, 3, 3, 5, 8, 4, 1},
                             {1, 3, 4, 9, 4, 1, 2, 6, 3, 10},
                             {1, 5, 6, 3, 9, 2, 4, 4, 5, 1},
                             {1, 6, 7, 1, 9, 5, 10, 1, 10, 10}};
    for (int r = 0; r < 6; ++r)
        for (int c = 0; c < 10; ++c) d.at(r, c) = Scalar::from_int(f11, full[r][c]);
    CHECK(rank(d) == 6);
}

TEST_CASE("invert") {
    Field f11 = Field::prime(11);
    CHECK(invert(Matrix::identity(5, f11)) == Matrix::identity(5, f11));

    Matrix v = mat(f11, {{6, 6, 1}, {3, 7, 1}, {2, 8, 1}});
    Matrix vi = invert(v);
    // Decode row (1/2)(x1 - 2 x2 + x3): 1/2 = 6 and -2 = 9 in F_11.
    CHECK(vi.row(0) == vec(f11, {6, 10, 6}));
    CHECK(matmul(v, vi) == Matrix::identity(3, f11));
    CHECK(matmul(vi, v) == Matrix::identity(3, f11));

    Field q = Field::rational();
    SplitMix64 rng(9);
    int done = 0;
    while (done < 10) {
        Matrix m = rng.next_matrix(4, 4, q);
        if (rank(m) < 4) continue;
        CHECK(invert(invert(m)) == m);
        ++done;
    }

    try {
        invert(mat(q, {{1, 2}, {2, 4}}));
        FAIL("expected SingularMatrixError");
    } catch (const SingularMatrixError& e) {
        CHECK(e.rank == 1);
    }
}

TEST_CASE("left nullspace vector") {
    Field q = Field::rational();
    Vec nu = left_nullspace_vector(mat(q, {{1, 1}, {2, 3}, {4, 9}}));
    CHECK(scalar_multiple(nu, vec(q, {6, -5, 1})));
    CHECK(nu.back() == Scalar::one(q)); // last-nonzero-is-1 normalization
    CHECK(sparsity(row_times_matrix(nu, mat(q, {{1, 1}, {2, 3}, {4, 9}}))) == 0);

    Vec e2 = left_nullspace_vector(mat(q, {{1}, {0}}));
    CHECK(scalar_multiple(e2, vec(q, {0, 1})));

    // Columns {1,3} of the reference block: nullspace multiple of [3,-4,1].
    Field f11 = Field::prime(11);
    Matrix cols13 = mat(f11, kExample1D11).select_cols({0, 2});
    CHECK(scalar_multiple(left_nullspace_vector(cols13), vec(f11, {3, -4, 1})));

    CHECK_THROWS(left_nullspace_vector(Matrix::identity(3, q)));        // dim 0
    CHECK_THROWS(left_nullspace_vector(mat(q, {{1}, {0}, {0}})));       // dim 2
}

TEST_CASE("left nullspace outputs are scalar multiples of each other") {
    SplitMix64 rng(17);
    Field f13 = Field::prime(13);
    for (int trial = 0; trial < 200; ++trial) {
        Matrix base = rng.next_matrix(2, 2, f13);
        if (rank(base) < 2) continue;
        // Third row = random combination: rank 2, one-dimensional left nullspace.
        Matrix m(3, 2, f13);
        Vec combo = {rng.next_scalar(f13), rng.next_scalar(f13)};
        for (int c = 0; c < 2; ++c) {
            m.at(0, c) = base.at(0, c);
            m.at(1, c) = base.at(1, c);
            m.at(2, c) = combo[0] * base.at(0, c) + combo[1] * base.at(1, c);
        }
        Vec nu = left_nullspace_vector(m);
        CHECK(sparsity(nu) > 0);
        CHECK(sparsity(row_times_matrix(nu, m)) == 0);
        CHECK(left_nullspace_vector(m) == nu); // deterministic
    }
}

TEST_CASE("solve_right") {
    Field q = Field::rational();
    Matrix i3 = Matrix::identity(3, q);
    Vec b = vec(q, {4, -1, 7});
    CHECK(*solve_right(i3, b) == b);

    // Inconsistent: rows span only multiples of [1,1].
    CHECK_FALSE(solve_right(mat(q, {{1, 1}, {2, 2}}), vec(q, {1, 2})).has_value());

    Matrix a = mat(q, {{1, 1}, {2, 2}, {0, 1}});
    Vec target = vec(q, {3, 4});
    auto x = solve_right(a, target);
    REQUIRE(x.has_value());
    CHECK(row_times_matrix(*x, a) == target); // substitution check
}

TEST_CASE("sparsity") {
    Field q = Field::rational();
    CHECK(sparsity(vec(q, {0, 0, 0})) == 0);
    CHECK(sparsity(vec(q, {1, 1, 1, 1, 1, 1, 1})) == 7);
    // [6,-5,1] . D_{1,1} over the rationals = [2,0,0,-9,-16].
    Vec row = row_times_matrix(vec(q, {6, -5, 1}), mat(q, kExample1D11));
    CHECK(row == vec(q, {2, 0, 0, -9, -16}));
    CHECK(sparsity(row) == 3);
}
