#include "lsfc/matrix.hpp"

namespace lsfc {

Matrix Matrix::identity(std::size_t n, const Field& f) {
    Matrix m(n, n, f);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, const Field& f) {
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    Matrix m(rows.size(), cols, f);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw DimensionError("ragged row list");
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

Vec Matrix::row(std::size_t r) const {
    Vec v;
    v.reserve(cols_);
    for (std::size_t c = 0; c < cols_; ++c) v.push_back(at(r, c));
    return v;
}

Vec Matrix::col(std::size_t c) const {
    Vec v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back(at(r, c));
    return v;
}

void Matrix::set_row(std::size_t r, const Vec& v) {
    if (v.size() != cols_) throw DimensionError("row width mismatch");
    for (std::size_t c = 0; c < cols_; ++c) at(r, c) = v[c];
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_, field_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

Matrix Matrix::select_cols(const std::vector<std::size_t>& cols) const {
    Matrix m(rows_, cols.size(), field_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t i = 0; i < cols.size(); ++i) m.at(r, i) = at(r, cols[i]);
    return m;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& rows) const {
    Matrix m(rows.size(), cols_, field_);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t c = 0; c < cols_; ++c) m.at(i, c) = at(rows[i], c);
    return m;
}

Matrix Matrix::hstack(const Matrix& o) const {
    if (o.rows_ != rows_) throw DimensionError("hstack row mismatch");
    Matrix m(rows_, cols_ + o.cols_, field_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) m.at(r, c) = at(r, c);
        for (std::size_t c = 0; c < o.cols_; ++c) m.at(r, cols_ + c) = o.at(r, c);
    }
    return m;
}

void Matrix::push_row(const Vec& v) {
    if (v.size() != cols_) throw DimensionError("pushed row width mismatch");
    entries_.insert(entries_.end(), v.begin(), v.end());
    ++rows_;
}

bool Matrix::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

bool Matrix::operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && field_ == o.field_ && entries_ == o.entries_;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    if (!(a.field() == b.field()))
        throw FieldMismatchError("matmul across fields");
    if (a.cols() != b.rows())
        throw DimensionError("matmul dimension mismatch: " + std::to_string(a.cols()) +
                             " vs " + std::to_string(b.rows()));
    Matrix c(a.rows(), b.cols(), a.field());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Scalar& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c.at(i, j) = c.at(i, j) + aik * b.at(k, j);
        }
    return c;
}

Vec row_times_matrix(const Vec& v, const Matrix& m) {
    if (v.size() != m.rows()) throw DimensionError("row*matrix dimension mismatch");
    Vec out(m.cols(), Scalar::zero(m.field()));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (v[r].is_zero()) continue;
        for (std::size_t c = 0; c < m.cols(); ++c) out[c] = out[c] + v[r] * m.at(r, c);
    }
    return out;
}

Vec matrix_times_col(const Matrix& m, const Vec& v) {
    if (v.size() != m.cols()) throw DimensionError("matrix*col dimension mismatch");
    Vec out(m.rows(), Scalar::zero(m.field()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (!m.at(r, c).is_zero() && !v[c].is_zero())
                out[r] = out[r] + m.at(r, c) * v[c];
    return out;
}

Scalar dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionError("dot dimension mismatch");
    if (a.empty()) throw DimensionError("dot of empty vectors has no field");
    Scalar s = Scalar::zero(a.front().field());
    for (std::size_t i = 0; i < a.size(); ++i) s = s + a[i] * b[i];
    return s;
}

Vec scale_vec(const Vec& v, const Scalar& c) {
    Vec out = v;
    for (auto& e : out) e = e * c;
    return out;
}

RrefResult rref(const Matrix& m) {
    Matrix e = m;
    Matrix t = Matrix::identity(m.rows(), m.field());
    std::vector<std::size_t> pivots;
    std::size_t pr = 0; // next pivot row
    for (std::size_t col = 0; col < m.cols() && pr < m.rows(); ++col) {
        // topmost nonzero row at or below pr
        std::size_t sel = pr;
        while (sel < m.rows() && e.at(sel, col).is_zero()) ++sel;
        if (sel == m.rows()) continue;
        if (sel != pr)
            for (std::size_t c = 0; c < e.cols(); ++c) std::swap(e.at(pr, c), e.at(sel, c));
        if (sel != pr)
            for (std::size_t c = 0; c < t.cols(); ++c) std::swap(t.at(pr, c), t.at(sel, c));
        Scalar inv = e.at(pr, col).inverse();
        for (std::size_t c = 0; c < e.cols(); ++c) e.at(pr, c) = e.at(pr, c) * inv;
        for (std::size_t c = 0; c < t.cols(); ++c) t.at(pr, c) = t.at(pr, c) * inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == pr || e.at(r, col).is_zero()) continue;
            Scalar f = e.at(r, col);
            for (std::size_t c = 0; c < e.cols(); ++c)
                e.at(r, c) = e.at(r, c) - f * e.at(pr, c);
            for (std::size_t c = 0; c < t.cols(); ++c)
                t.at(r, c) = t.at(r, c) - f * t.at(pr, c);
        }
        pivots.push_back(col);
        ++pr;
    }
    return RrefResult{std::move(e), std::move(pivots), std::move(t)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Matrix invert(const Matrix& m) {
    if (m.rows() != m.cols()) throw DimensionError("invert: matrix not square");
    RrefResult r = rref(m);
    if (r.pivots.size() != m.rows()) throw SingularMatrixError(r.pivots.size(), m.rows());
    return r.transform; // T * m = I
}

Vec left_nullspace_vector(const Matrix& m) {
    RrefResult r = rref(m);
    if (r.pivots.size() + 1 != m.rows())
        throw std::domain_error("left nullspace dimension is " +
                                std::to_string(m.rows() - r.pivots.size()) + ", expected 1");
    // Rows of T matching zero rows of E span the left nullspace.
    Vec nu = r.transform.row(m.rows() - 1);
    std::size_t last_nz = nu.size();
    for (std::size_t i = nu.size(); i-- > 0;) {
        if (!nu[i].is_zero()) { last_nz = i; break; }
    }
    return scale_vec(nu, nu[last_nz].inverse());
}

std::optional<Vec> solve_right(const Matrix& a, const Vec& b) {
    if (b.size() != a.cols()) throw DimensionError("solve_right width mismatch");
    for (const auto& e : b)
        if (!(e.field() == a.field())) throw FieldMismatchError("solve_right field mismatch");
    // x * a = b  <=>  a^T x^T = b^T; eliminate on [a^T | b^T].
    Matrix at = a.transpose();
    Matrix rhs(at.rows(), 1, a.field());
    for (std::size_t r = 0; r < b.size(); ++r) rhs.at(r, 0) = b[r];
    RrefResult red = rref(at.hstack(rhs));
    Vec x(a.rows(), Scalar::zero(a.field()));
    for (std::size_t i = 0; i < red.pivots.size(); ++i) {
        std::size_t p = red.pivots[i];
        if (p == at.cols()) return std::nullopt; // pivot in the rhs column: inconsistent
        x[p] = red.echelon.at(i, at.cols());
    }
    return x;
}

std::size_t sparsity(const Vec& v) {
    std::size_t n = 0;
    for (const auto& e : v)
        if (!e.is_zero()) ++n;
    return n;
}

} // namespace lsfc
