#include "lsfc/scheme.hpp"

#include <algorithm>
#include <stdexcept>

namespace lsfc {

namespace {

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

std::vector<IndexRange> chop(std::size_t total, std::size_t step) {
    std::vector<IndexRange> out;
    for (std::size_t b = 0; b < total; b += step)
        out.push_back({b, std::min(b + step, total)});
    return out;
}

} // namespace

void ProblemInstance::validate() const {
    if (K == 0 || L == 0) throw std::invalid_argument("K and L must be positive");
    if (M < 1 || M > K) throw std::invalid_argument("require 1 <= M <= K");
    if (Delta < 1 || Delta > L) throw std::invalid_argument("require 1 <= Delta <= L");
}

DemandMatrix DemandMatrix::checked(const ProblemInstance& inst, Matrix m) {
    if (m.rows() != inst.L || m.cols() != inst.K)
        throw DimensionError("demand matrix must be L x K");
    if (!(m.field() == inst.field))
        throw FieldMismatchError("demand matrix field differs from instance field");
    return DemandMatrix{std::move(m)};
}

std::size_t BlockPlan::server_count() const {
    return kind == BlockKind::standard ? nullspace_vectors.size() : columns.size();
}

BlockGrid partition_demand(const ProblemInstance& inst) {
    inst.validate();
    return BlockGrid{chop(inst.L, inst.Delta), chop(inst.K, inst.Delta + inst.M - 1)};
}

RowRepair repair_block(const Matrix& block, std::size_t delta) {
    const std::size_t width = block.cols();
    if (width < delta) throw DimensionError("repair_block requires width >= Delta");
    const Field& f = block.field();

    // Keep original rows that grow the rank, then pad with standard-basis
    // rows e_c, smallest column index first, until rank Delta.
    Matrix surrogate(0, width, f);
    for (std::size_t r = 0; r < block.rows() && surrogate.rows() < delta; ++r) {
        Matrix cand = surrogate;
        cand.push_row(block.row(r));
        if (rank(cand) == cand.rows()) surrogate = std::move(cand);
    }
    for (std::size_t c = 0; c < width && surrogate.rows() < delta; ++c) {
        Vec e(width, Scalar::zero(f));
        e[c] = Scalar::one(f);
        Matrix cand = surrogate;
        cand.push_row(e);
        if (rank(cand) == cand.rows()) surrogate = std::move(cand);
    }

    std::vector<Vec> row_map;
    row_map.reserve(block.rows());
    for (std::size_t r = 0; r < block.rows(); ++r) {
        auto coeffs = solve_right(surrogate, block.row(r));
        if (!coeffs) throw std::logic_error("repair_block: row not in surrogate span");
        row_map.push_back(std::move(*coeffs));
    }
    return RowRepair{std::move(surrogate), std::move(row_map)};
}

std::vector<std::size_t> select_pivot_columns(const Matrix& surrogate) {
    std::vector<std::size_t> chosen;
    Matrix acc(surrogate.rows(), 0, surrogate.field());
    for (std::size_t c = 0; c < surrogate.cols() && chosen.size() < surrogate.rows(); ++c) {
        Matrix cand = acc.hstack(surrogate.select_cols({c}));
        if (rank(cand) == cand.cols()) {
            acc = std::move(cand);
            chosen.push_back(c);
        }
    }
    if (chosen.size() < surrogate.rows())
        throw SingularMatrixError(chosen.size(), surrogate.rows());
    return chosen;
}

std::vector<std::vector<std::size_t>> assign_tasks(const IndexRange& k_j,
                                                   const std::vector<std::size_t>& pivots) {
    std::vector<std::size_t> shared;
    for (std::size_t k = k_j.begin; k < k_j.end; ++k)
        if (std::find(pivots.begin(), pivots.end(), k) == pivots.end())
            shared.push_back(k);
    std::vector<std::vector<std::size_t>> tasks;
    tasks.reserve(pivots.size());
    for (std::size_t y : pivots) {
        std::vector<std::size_t> t{y};
        t.insert(t.end(), shared.begin(), shared.end());
        std::sort(t.begin(), t.end());
        tasks.push_back(std::move(t));
    }
    return tasks;
}

Transmission design_transmission(const Matrix& surrogate,
                                 const std::vector<std::size_t>& local_pivots,
                                 std::size_t delta_idx) {
    // D^delta keeps the pivot columns other than y_delta: Delta x (Delta-1), rank Delta-1.
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < local_pivots.size(); ++i)
        if (i != delta_idx) keep.push_back(local_pivots[i]);
    Vec nu = left_nullspace_vector(surrogate.select_cols(keep));
    Vec row = row_times_matrix(nu, surrogate);
    return Transmission{std::move(nu), std::move(row)};
}

SchemePlan build_plan(const ProblemInstance& inst, const DemandMatrix& demand) {
    inst.validate();
    if (demand.matrix.rows() != inst.L || demand.matrix.cols() != inst.K)
        throw DimensionError("demand/instance dimension mismatch");
    if (!(demand.matrix.field() == inst.field))
        throw FieldMismatchError("demand/instance field mismatch");

    const Field& f = inst.field;
    const std::size_t delta = inst.Delta;
    BlockGrid grid = partition_demand(inst);

    std::vector<BlockPlan> blocks;
    Matrix transmit_rows(0, inst.K, f);
    std::vector<Vec> decode_cols; // one length-L column per transmission
    std::vector<std::pair<std::size_t, std::size_t>> owners;

    for (std::size_t i = 0; i < grid.row_blocks.size(); ++i) {
        const IndexRange& rb = grid.row_blocks[i];
        std::vector<std::size_t> row_idx;
        for (std::size_t r = rb.begin; r < rb.end; ++r) row_idx.push_back(r);

        for (std::size_t j = 0; j < grid.col_blocks.size(); ++j) {
            const IndexRange& cb = grid.col_blocks[j];
            std::vector<std::size_t> col_idx;
            for (std::size_t c = cb.begin; c < cb.end; ++c) col_idx.push_back(c);
            Matrix block = demand.matrix.select_rows(row_idx).select_cols(col_idx);

            BlockPlan bp{i, j, BlockKind::standard, rb, cb,
                         RowRepair{Matrix(0, 0, f), {}}, {}, {}, {},
                         Matrix(0, 0, f), Matrix(0, 0, f)};

            if (cb.size() < delta) {
                // Thin block: one server per column transmitting the raw
                // subfunction output; users scale by their own coefficients.
                bp.kind = BlockKind::thin;
                bp.repair = RowRepair{block, {}};
                for (std::size_t k = cb.begin; k < cb.end; ++k) {
                    bp.tasks.push_back({k});
                    Vec a_row(inst.K, Scalar::zero(f));
                    a_row[k] = Scalar::one(f);
                    transmit_rows.push_row(a_row);
                    Vec c_col(inst.L, Scalar::zero(f));
                    for (std::size_t r = rb.begin; r < rb.end; ++r)
                        c_col[r] = demand.matrix.at(r, k);
                    decode_cols.push_back(std::move(c_col));
                    owners.emplace_back(blocks.size(), k - cb.begin);
                }
            } else {
                bp.repair = repair_block(block, delta);
                std::vector<std::size_t> local_pivots = select_pivot_columns(bp.repair.surrogate);
                for (std::size_t p : local_pivots) bp.pivot_cols.push_back(cb.begin + p);
                bp.tasks = assign_tasks(cb, bp.pivot_cols);

                bp.v = Matrix(delta, delta, f);
                for (std::size_t d = 0; d < delta; ++d) {
                    Transmission t = design_transmission(bp.repair.surrogate, local_pivots, d);
                    bp.v.set_row(d, t.nullspace_vector);
                    bp.nullspace_vectors.push_back(std::move(t.nullspace_vector));
                    Vec a_row(inst.K, Scalar::zero(f));
                    for (std::size_t c = 0; c < cb.size(); ++c)
                        a_row[cb.begin + c] = t.coefficient_row[c];
                    transmit_rows.push_row(a_row);
                    owners.emplace_back(blocks.size(), d);
                }
                bp.v_inv = invert(bp.v);

                // User row = row_map . surrogate, and surrogate . f_block is
                // recovered as V^-1 X, so the decode coefficients for the
                // block's Delta transmissions are row_map . V^-1.
                for (std::size_t d = 0; d < delta; ++d) decode_cols.emplace_back();
                std::size_t base = decode_cols.size() - delta;
                for (std::size_t d = 0; d < delta; ++d) {
                    Vec c_col(inst.L, Scalar::zero(f));
                    decode_cols[base + d] = std::move(c_col);
                }
                for (std::size_t r = 0; r < row_idx.size(); ++r) {
                    Vec coeffs = row_times_matrix(bp.repair.row_map[r], bp.v_inv);
                    for (std::size_t d = 0; d < delta; ++d)
                        decode_cols[base + d][row_idx[r]] = coeffs[d];
                }
            }
            blocks.push_back(std::move(bp));
        }
    }

    std::size_t rate = transmit_rows.rows();
    Matrix decode_map(inst.L, rate, f);
    for (std::size_t r = 0; r < rate; ++r)
        for (std::size_t l = 0; l < inst.L; ++l) decode_map.at(l, r) = decode_cols[r][l];

    std::size_t rf = delta * ceil_div(inst.L, delta) * ceil_div(inst.K, delta + inst.M - 1);
    return SchemePlan{inst, demand, std::move(grid), std::move(blocks),
                      rate, rate, rf,
                      std::move(transmit_rows), std::move(decode_map), std::move(owners)};
}

Scalar decode_user(const SchemePlan& plan, std::size_t user, const Vec& transmissions) {
    if (user >= plan.instance.L) throw std::out_of_range("user index out of range");
    if (transmissions.size() != plan.rate)
        throw DimensionError("transmission vector length must equal the rate");

    Scalar total = Scalar::zero(plan.instance.field);
    std::size_t r = 0;
    for (const BlockPlan& bp : plan.blocks) {
        std::size_t n = bp.server_count();
        if (user >= bp.served_users.begin && user < bp.served_users.end) {
            if (bp.kind == BlockKind::thin) {
                for (std::size_t t = 0; t < n; ++t) {
                    std::size_t k = bp.columns.begin + t;
                    total = total + plan.demand.matrix.at(user, k) * transmissions[r + t];
                }
            } else {
                // Block values: surrogate . f_block = V^-1 X; combine with row_map.
                Vec x(transmissions.begin() + r, transmissions.begin() + r + n);
                Vec block_vals = matrix_times_col(bp.v_inv, x);
                total = total + dot(bp.repair.row_map[user - bp.served_users.begin], block_vals);
            }
        }
        r += n;
    }
    return total;
}

FactorizationCertificate to_factorization(const SchemePlan& plan) {
    return FactorizationCertificate{plan.decode_map, plan.transmit_rows};
}

bool verify_certificate(const FactorizationCertificate& cert, const Matrix& demand,
                        std::size_t delta_cap, std::size_t m_cap) {
    if (matmul(cert.c, cert.a) != demand) return false;
    for (std::size_t r = 0; r < cert.a.rows(); ++r)
        if (sparsity(cert.a.row(r)) > m_cap) return false;
    for (std::size_t c = 0; c < cert.c.cols(); ++c)
        if (sparsity(cert.c.col(c)) > delta_cap) return false;
    return true;
}

} // namespace lsfc
