#pragma once

#include <string>

#include "lsfc/scheme.hpp"

namespace lsfc {

/// The built-in (K=10, L=6, M=3, Delta=3) reference instance over F_11
/// (any field whose characteristic keeps the matrix entries meaningful
/// can be substituted; the integer matrix is field-generic).
ProblemInstance example1_instance(const Field& f);
DemandMatrix example1_demand(const Field& f);

struct GoldenCheck {
    bool pass;
    std::string detail; // first failing check, empty on pass
};

/// Rate 12, group (1,1) tasks {1,4,5},{2,4,5},{3,4,5}, nullspace vectors
/// scalar-equivalent to [6,-5,1], [3,-4,1], [2,-3,1].
GoldenCheck check_example1(const SchemePlan& plan);

} // namespace lsfc
