#include "cacd/circular_ones.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "cacd/errors.hpp"

namespace cacd {

Ordering identity_ordering(int k) {
    Ordering o;
    o.perm.resize(k);
    std::iota(o.perm.begin(), o.perm.end(), 0);
    return o;
}

bool has_row_cop(const BinaryMatrix& m, const Ordering& col_order) {
    if (static_cast<int>(col_order.perm.size()) != m.cols())
        throw PreconditionError("ordering length does not match column count");
    BinaryMatrix p = m.with_columns(col_order.perm);
    for (int r = 0; r < p.rows(); ++r)
        if (classify_row(p, r).kind == StretchKind::NotCircular) return false;
    return true;
}

namespace {

// Rows re-encoded under Tucker's reduction: every row with a 1 in column 0
// complemented, so circular-ones of the input is equivalent to the
// consecutive-ones property of these masks.
std::vector<std::uint64_t> tucker_rows(const BinaryMatrix& m) {
    const std::uint64_t full = m.full_mask();
    std::vector<std::uint64_t> rows(m.rows());
    for (int r = 0; r < m.rows(); ++r) {
        std::uint64_t bits = m.row_mask(r);
        rows[r] = (bits & 1u) ? (~bits & full) : bits;
    }
    // Constant rows never constrain the ordering.
    std::erase_if(rows, [&](std::uint64_t b) { return b == 0 || b == full; });
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    return rows;
}

// valid(S, c): with prefix set S whose last element is c, no row is split:
// every row partially covered by S must contain c.
bool prefix_valid(const std::vector<std::uint64_t>& rows, std::uint64_t s, int c) {
    for (std::uint64_t r : rows) {
        std::uint64_t inter = r & s;
        if (inter != 0 && inter != r && !((r >> c) & 1u)) return false;
    }
    return true;
}

// Subset DP for the consecutive-ones property: feasible[S] = the columns of S
// can be arranged as a valid prefix. Exact, O(2^n * n * rows).
std::vector<bool> c1p_feasible(const std::vector<std::uint64_t>& rows, int n) {
    std::vector<bool> feasible(std::size_t{1} << n, false);
    feasible[0] = true;
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
        for (int c = 0; c < n; ++c) {
            if (!((s >> c) & 1u)) continue;
            if (feasible[s ^ (1ull << c)] && prefix_valid(rows, s, c)) {
                feasible[s] = true;
                break;
            }
        }
    }
    return feasible;
}

void check_poly_bound(const BinaryMatrix& m) {
    if (m.cols() > 24)
        throw BoundError("the circular-ones decision backend is bounded at 24 columns");
}

Ordering rotate_to_front(std::vector<int> perm, int col) {
    auto it = std::find(perm.begin(), perm.end(), col);
    std::rotate(perm.begin(), it, perm.end());
    return Ordering{std::move(perm)};
}

}  // namespace

bool has_any_row_cop_ordering(const BinaryMatrix& m) {
    check_poly_bound(m);
    const int n = m.cols();
    auto rows = tucker_rows(m);
    if (rows.empty()) return true;
    auto feasible = c1p_feasible(rows, n);
    return feasible[(std::uint64_t{1} << n) - 1];
}

std::optional<Ordering> find_row_cop_ordering(const BinaryMatrix& m) {
    check_poly_bound(m);
    const int n = m.cols();
    auto rows = tucker_rows(m);
    if (rows.empty()) return identity_ordering(n);
    auto feasible = c1p_feasible(rows, n);
    std::uint64_t all = (std::uint64_t{1} << n) - 1;
    if (!feasible[all]) return std::nullopt;

    // Walk back from the full set, preferring the smallest column at each
    // step, so the reconstruction is deterministic.
    std::vector<int> reversed;
    std::uint64_t s = all;
    while (s) {
        for (int c = 0; c < n; ++c) {
            if (!((s >> c) & 1u)) continue;
            if (feasible[s ^ (1ull << c)] && prefix_valid(rows, s, c)) {
                reversed.push_back(c);
                s ^= 1ull << c;
                break;
            }
        }
    }
    std::reverse(reversed.begin(), reversed.end());
    return rotate_to_front(std::move(reversed), 0);
}

namespace {

// Necessary condition for a partial circular arrangement. Positions
// 0..placed-1 hold the chosen columns; the unplaced columns will fill the
// remaining contiguous arc between position placed-1 and position 0.
bool partial_row_ok(std::uint64_t word, int placed, int total_cols, int remaining_ones) {
    int runs = 0;
    bool first_set = word & 1u;
    bool last_set = (word >> (placed - 1)) & 1u;
    bool in_run = false;
    for (int i = 0; i < placed; ++i) {
        bool b = (word >> i) & 1u;
        if (b && !in_run) ++runs;
        in_run = b;
    }
    if (runs > 2) return false;
    int unplaced = total_cols - placed;
    if (runs == 2) {
        if (!(first_set && last_set)) return false;
        // Both end runs survive only if the whole unplaced arc is ones.
        return remaining_ones == unplaced;
    }
    if (runs == 1 && remaining_ones > 0 && !(first_set || last_set)) return false;
    return true;
}

}  // namespace

EnumerationStats enumerate_row_cop_orderings(const BinaryMatrix& m, std::size_t budget,
                                             const std::function<bool(const Ordering&)>& yield) {
    const int n = m.cols();
    if (n > 10) throw BoundError("exhaustive ordering enumeration is bounded at 10 columns");

    EnumerationStats stats;
    std::vector<int> perm{0};
    std::uint64_t used = 1;
    // ones_left[r] tracks how many ones of row r are still unplaced.
    std::vector<int> ones_left(m.rows());
    std::vector<std::uint64_t> words(m.rows(), 0);
    for (int r = 0; r < m.rows(); ++r) ones_left[r] = std::popcount(m.row_mask(r));

    std::function<bool()> dfs = [&]() -> bool {  // returns false to abort
        const int placed = static_cast<int>(perm.size());
        const int last = perm[placed - 1];
        for (int r = 0; r < m.rows(); ++r) {
            if (m.get(r, last)) {
                words[r] |= 1ull << (placed - 1);
                --ones_left[r];
            }
        }
        bool pruned = false;
        for (int r = 0; r < m.rows() && !pruned; ++r)
            pruned = !partial_row_ok(words[r], placed, n, ones_left[r]);

        bool keep_going = true;
        if (!pruned) {
            if (placed == n) {
                ++stats.yielded;
                if (!yield(Ordering{perm})) {
                    stats.stopped_by_consumer = true;
                    keep_going = false;
                } else if (stats.yielded >= budget) {
                    stats.truncated = true;
                    keep_going = false;
                }
            } else {
                for (int c = 1; c < n && keep_going; ++c) {
                    if ((used >> c) & 1u) continue;
                    used |= 1ull << c;
                    perm.push_back(c);
                    keep_going = dfs();
                    perm.pop_back();
                    used &= ~(1ull << c);
                }
            }
        }

        for (int r = 0; r < m.rows(); ++r) {
            if (m.get(r, last)) {
                words[r] &= ~(1ull << (placed - 1));
                ++ones_left[r];
            }
        }
        return keep_going;
    };

    if (budget == 0) {
        stats.truncated = true;
        return stats;
    }
    if (n == 1) {
        ++stats.yielded;
        yield(identity_ordering(1));
        return stats;
    }
    dfs();
    return stats;
}

bool has_any_row_cop_ordering_exhaustive(const BinaryMatrix& m) {
    bool found = false;
    enumerate_row_cop_orderings(m, SIZE_MAX, [&](const Ordering&) {
        found = true;
        return false;
    });
    return found;
}

}  // namespace cacd
