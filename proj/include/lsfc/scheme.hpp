#pragma once

#include <cstddef>
#include <vector>

#include "lsfc/matrix.hpp"

namespace lsfc {

/// The (K, L, M, Delta) system: K subfunctions, L users, each server
/// computes at most M subfunctions and serves at most Delta users.
struct ProblemInstance {
    std::size_t K, L, M, Delta;
    Field field;

    void validate() const;
};

struct DemandMatrix {
    Matrix matrix; // L x K

    static DemandMatrix checked(const ProblemInstance& inst, Matrix m);
};

struct IndexRange {
    std::size_t begin, end; // half-open, 0-based
    std::size_t size() const { return end - begin; }
    bool operator==(const IndexRange&) const = default;
};

/// Row blocks of height Delta and column blocks of width Delta+M-1
/// (last ones possibly shorter).
struct BlockGrid {
    std::vector<IndexRange> row_blocks;
    std::vector<IndexRange> col_blocks;
};

/// Full-rank surrogate for one block: dependent or missing rows are
/// replaced/augmented by standard-basis rows, and every original row is
/// recorded as an exact combination of the surrogate rows.
struct RowRepair {
    Matrix surrogate;             // Delta x width, rank Delta
    std::vector<Vec> row_map;     // one length-Delta coefficient row per original user row
};

enum class BlockKind { standard, thin };

struct BlockPlan {
    std::size_t i, j; // 0-based group indices
    BlockKind kind;
    IndexRange served_users; // the row block
    IndexRange columns;      // K_j
    RowRepair repair;

    // Standard blocks only:
    std::vector<std::size_t> pivot_cols;   // Y, global column indices, |Y| = Delta
    std::vector<std::vector<std::size_t>> tasks; // M_delta, global indices, one per server
    std::vector<Vec> nullspace_vectors;    // nu_delta, length Delta
    Matrix v;                              // stack of the nu_delta
    Matrix v_inv;

    std::size_t server_count() const;
};

struct SchemePlan {
    ProblemInstance instance;
    DemandMatrix demand;
    BlockGrid grid;
    std::vector<BlockPlan> blocks;
    std::size_t server_count;      // N
    std::size_t rate;              // R: total transmissions, one per server
    std::size_t rate_formula;      // Delta * ceil(L/Delta) * ceil(K/(Delta+M-1))
    Matrix transmit_rows;          // R x K, row r = transmission r's coefficients (A)
    Matrix decode_map;             // L x R, decode coefficients (C)
    std::vector<std::pair<std::size_t, std::size_t>> transmission_owner; // (block idx, delta)
};

struct FactorizationCertificate {
    Matrix c; // L x R, Delta-sparse columns
    Matrix a; // R x K, M-sparse rows
    std::size_t inner_dim() const { return c.cols(); }
};

BlockGrid partition_demand(const ProblemInstance& inst);

/// Requires block width >= delta.
RowRepair repair_block(const Matrix& block, std::size_t delta);

/// Greedy leftmost full-rank column subset of size rank(surrogate) = Delta.
std::vector<std::size_t> select_pivot_columns(const Matrix& surrogate);

/// M_delta = {y_delta} union (K_j \ Y); global indices.
std::vector<std::vector<std::size_t>> assign_tasks(const IndexRange& k_j,
                                                   const std::vector<std::size_t>& pivots);

struct Transmission {
    Vec nullspace_vector;  // nu_delta, length Delta
    Vec coefficient_row;   // nu_delta * surrogate, over the block's columns
};

/// pivots are local column indices within the surrogate.
Transmission design_transmission(const Matrix& surrogate,
                                 const std::vector<std::size_t>& local_pivots,
                                 std::size_t delta_idx);

SchemePlan build_plan(const ProblemInstance& inst, const DemandMatrix& demand);

/// Recover F_l = D(l,:) . f from the R transmission values, using only the
/// user's row-group transmissions and the plan's repair bookkeeping.
Scalar decode_user(const SchemePlan& plan, std::size_t user, const Vec& transmissions);

FactorizationCertificate to_factorization(const SchemePlan& plan);

/// True when C*A = D, every C column is Delta-sparse, every A row M-sparse.
bool verify_certificate(const FactorizationCertificate& cert, const Matrix& demand,
                        std::size_t delta_cap, std::size_t m_cap);

} // namespace lsfc
