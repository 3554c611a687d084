#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lsfc/field.hpp"

namespace lsfc {

struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct SingularMatrixError : std::domain_error {
    SingularMatrixError(std::size_t rank, std::size_t n)
        : std::domain_error("singular matrix: rank " + std::to_string(rank) +
                            " < " + std::to_string(n)),
          rank(rank) {}
    std::size_t rank;
};

using Vec = std::vector<Scalar>;

/// Dense row-major matrix of exact scalars, all in one field.
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols, const Field& f)
        : rows_(rows), cols_(cols), field_(f), entries_(rows * cols, Scalar::zero(f)) {}

    static Matrix identity(std::size_t n, const Field& f);
    static Matrix from_rows(const std::vector<Vec>& rows, const Field& f);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Field& field() const { return field_; }

    Scalar& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    Vec row(std::size_t r) const;
    Vec col(std::size_t c) const;
    void set_row(std::size_t r, const Vec& v);

    Matrix transpose() const;
    /// Keep only the listed columns, in the given order.
    Matrix select_cols(const std::vector<std::size_t>& cols) const;
    Matrix select_rows(const std::vector<std::size_t>& rows) const;
    /// Horizontal stack [*this | o].
    Matrix hstack(const Matrix& o) const;
    /// Append a row.
    void push_row(const Vec& v);

    bool is_zero() const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

private:
    std::size_t rows_, cols_;
    Field field_;
    std::vector<Scalar> entries_;
};

struct RrefResult {
    Matrix echelon;                  // reduced row-echelon form E
    std::vector<std::size_t> pivots; // pivot columns, increasing
    Matrix transform;                // invertible T with T * m = E
};

Matrix matmul(const Matrix& a, const Matrix& b);
Vec row_times_matrix(const Vec& v, const Matrix& m);
Vec matrix_times_col(const Matrix& m, const Vec& v);
Scalar dot(const Vec& a, const Vec& b);
Vec scale_vec(const Vec& v, const Scalar& c);

RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);
Matrix invert(const Matrix& m);

/// One-dimensional left nullspace: m has r rows and rank r - 1.
/// Returned vector is normalized so its last nonzero coordinate is 1.
Vec left_nullspace_vector(const Matrix& m);

/// Solve x * a = b for a row vector x; nullopt when inconsistent.
std::optional<Vec> solve_right(const Matrix& a, const Vec& b);

std::size_t sparsity(const Vec& v);

} // namespace lsfc
