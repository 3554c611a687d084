#include "lsfc/example1.hpp"

namespace lsfc {

namespace {

constexpr int kDemand[6][10] = {
    {1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
    {1, 2, 3, 4, 5, 6, 2, 8, 9, 10},
    {1, 4, 9, 5, 3, 3, 5, 8, 4, 1},
    {1, 3, 4, 9, 4, 1, 2, 6, 3, 10},
    {1, 5, 6, 3, 9, 2, 4, 4, 5, 1},
    {1, 6, 7, 1, 9, 5, 10, 1, 10, 10},
};

constexpr int kNullspace[3][3] = {{6, -5, 1}, {3, -4, 1}, {2, -3, 1}};

bool scalar_multiple(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) return false;
    Scalar ratio = Scalar::zero(a.front().field());
    bool have_ratio = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero() != b[i].is_zero()) return false;
        if (b[i].is_zero()) continue;
        Scalar r = a[i] / b[i];
        if (!have_ratio) {
            ratio = r;
            have_ratio = true;
        } else if (r != ratio) {
            return false;
        }
    }
    return have_ratio;
}

} // namespace

ProblemInstance example1_instance(const Field& f) {
    return ProblemInstance{10, 6, 3, 3, f};
}

DemandMatrix example1_demand(const Field& f) {
    Matrix m(6, 10, f);
    for (std::size_t r = 0; r < 6; ++r)
        for (std::size_t c = 0; c < 10; ++c) m.at(r, c) = Scalar::from_int(f, kDemand[r][c]);
    return DemandMatrix{std::move(m)};
}

GoldenCheck check_example1(const SchemePlan& plan) {
    if (plan.server_count != 12) return {false, "server count != 12"};
    if (plan.rate != 12) return {false, "rate != 12"};

    const BlockPlan& g11 = plan.blocks.front();
    if (g11.i != 0 || g11.j != 0 || g11.kind != BlockKind::standard)
        return {false, "group (1,1) missing or not standard"};
    std::vector<std::vector<std::size_t>> want_tasks = {{0, 3, 4}, {1, 3, 4}, {2, 3, 4}};
    if (g11.tasks != want_tasks) return {false, "group (1,1) tasks differ from {1,4,5},{2,4,5},{3,4,5}"};

    const Field& f = plan.instance.field;
    for (std::size_t d = 0; d < 3; ++d) {
        Vec want;
        for (int v : kNullspace[d]) want.push_back(Scalar::from_int(f, v));
        if (!scalar_multiple(g11.nullspace_vectors[d], want))
            return {false, "group (1,1) nullspace vector " + std::to_string(d + 1) +
                               " is not a scalar multiple of the reference"};
    }
    return {true, ""};
}

} // namespace lsfc
