#pragma once

#include "snclab/numeric.hpp"

#include <vector>

namespace snclab {

/// Smith normal form L * M * R = D with L, R unimodular.
///
/// `diagonal` has min(rows, cols) entries, each nonnegative, with
/// d[0] | d[1] | ... (zeros trail). Pivots are chosen as the smallest
/// nonzero absolute value in the active block, ties broken row-major, so
/// the transforms are deterministic.
struct SmithForm {
    std::vector<Integer> diagonal;
    IntMatrix left;
    IntMatrix right;
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Diagonal only; skips transform bookkeeping.
std::vector<Integer> smith_diagonal(const IntMatrix& m);

/// Number of nonzero invariant factors.
std::size_t integer_rank(const IntMatrix& m);

} // namespace snclab
