#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "cacd/binary_matrix.hpp"

namespace cacd {

/// A permutation of columns (or rows, by context): perm[pos] = original index.
struct Ordering {
    std::vector<int> perm;
};

Ordering identity_ordering(int k);

/// True iff every row of the column-permuted matrix has circularly
/// consecutive ones (Type1/Type2/Full/Zero).
bool has_row_cop(const BinaryMatrix& m, const Ordering& col_order);

/// Decision backend based on Tucker's reduction: complement every row with a
/// 1 in the reference column, then test the consecutive-ones property of the
/// derived matrix by an exact subset dynamic program. Bounded at 24 columns.
bool has_any_row_cop_ordering(const BinaryMatrix& m);

/// Same backend, but reconstructs a concrete ordering (rotated so that
/// column 0 comes first). Deterministic.
std::optional<Ordering> find_row_cop_ordering(const BinaryMatrix& m);

struct EnumerationStats {
    std::size_t yielded = 0;
    bool truncated = false;
    bool stopped_by_consumer = false;
};

/// Exhaustive backend, bounded at 10 columns: yields every column ordering
/// with row-COP, one per rotation class (column 0 fixed first), in
/// deterministic lexicographic order. The consumer returns false to stop.
/// `budget` caps the number of yielded orderings; hitting it sets the
/// truncation marker.
EnumerationStats enumerate_row_cop_orderings(const BinaryMatrix& m, std::size_t budget,
                                             const std::function<bool(const Ordering&)>& yield);

/// Exhaustive decision, for cross-checking the polynomial-path backend.
bool has_any_row_cop_ordering_exhaustive(const BinaryMatrix& m);

}  // namespace cacd
