#include "cacd/binary_matrix.hpp"

#include <bit>

#include "cacd/errors.hpp"

namespace cacd {

BinaryMatrix::BinaryMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 1 || cols < 1) throw PreconditionError("matrix dimensions must be >= 1");
    if (cols > 64) throw BoundError("matrices are capped at 64 columns");
    bits_.assign(static_cast<std::size_t>(rows), 0);
}

BinaryMatrix BinaryMatrix::from_rows(const std::vector<std::vector<int>>& rows01) {
    if (rows01.empty() || rows01.front().empty())
        throw PreconditionError("matrix dimensions must be >= 1");
    BinaryMatrix m(static_cast<int>(rows01.size()), static_cast<int>(rows01.front().size()));
    for (int r = 0; r < m.rows(); ++r) {
        if (static_cast<int>(rows01[r].size()) != m.cols())
            throw PreconditionError("ragged matrix literal");
        for (int c = 0; c < m.cols(); ++c) m.set(r, c, rows01[r][c] != 0);
    }
    return m;
}

void BinaryMatrix::set(int r, int c, bool value) {
    if (value)
        bits_[r] |= 1ull << c;
    else
        bits_[r] &= ~(1ull << c);
}

BinaryMatrix BinaryMatrix::transposed() const {
    BinaryMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            if (get(r, c)) t.set(c, r, true);
    return t;
}

BinaryMatrix BinaryMatrix::with_columns(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != cols_)
        throw PreconditionError("column permutation has wrong length");
    BinaryMatrix out(rows_, cols_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            if (get(r, perm[c])) out.set(r, c, true);
    return out;
}

BinaryMatrix BinaryMatrix::with_rows(const std::vector<int>& perm) const {
    if (perm.empty()) throw PreconditionError("row selection must be non-empty");
    BinaryMatrix out(static_cast<int>(perm.size()), cols_);
    for (int r = 0; r < out.rows(); ++r) {
        if (perm[r] < 0 || perm[r] >= rows_)
            throw PreconditionError("row selection index out of range");
        out.bits_[r] = bits_[perm[r]];
    }
    return out;
}

std::string BinaryMatrix::to_string() const {
    std::string out;
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) out += get(r, c) ? '1' : '0';
        out += '\n';
    }
    return out;
}

RowStretch classify_row(const BinaryMatrix& m, int row) {
    if (row < 0 || row >= m.rows()) throw PreconditionError("row index out of range");
    const int n = m.cols();
    const std::uint64_t bits = m.row_mask(row);
    const std::uint64_t full = m.full_mask();

    RowStretch rs;
    if (bits == 0) {
        rs.kind = StretchKind::Zero;
        return rs;
    }
    if (bits == full) {
        rs.kind = StretchKind::Full;
        return rs;
    }

    // Count maximal 1-runs of the linear word and record their endpoints.
    int runs = 0, first_start = 0, first_end = 0, second_start = 0, second_end = 0;
    bool in_run = false;
    for (int c = 0; c < n; ++c) {
        bool b = (bits >> c) & 1u;
        if (b && !in_run) {
            ++runs;
            in_run = true;
            if (runs == 1) first_start = c;
            if (runs == 2) second_start = c;
        }
        if (in_run && (!b || c == n - 1)) {
            int end = b ? c : c - 1;
            if (runs == 1) first_end = end;
            if (runs == 2) second_end = end;
            if (!b) in_run = false;
        }
    }

    if (runs == 1) {
        rs.kind = StretchKind::Type1;
        rs.i1 = first_start + 1;
        rs.i2 = first_end + 1;
        return rs;
    }
    if (runs == 2 && first_start == 0 && second_end == n - 1) {
        rs.kind = StretchKind::Type2;
        rs.i3 = second_start + 1;
        rs.i4 = first_end + 1;
        return rs;
    }
    rs.kind = StretchKind::NotCircular;
    return rs;
}

bool is_circular_interval(std::uint64_t mask, int cols) {
    const std::uint64_t full = cols == 64 ? ~0ull : (1ull << cols) - 1;
    mask &= full;
    if (mask == 0 || mask == full) return true;
    // One circular run <=> exactly one 0->1 transition around the cycle.
    int transitions = 0;
    for (int c = 0; c < cols; ++c) {
        bool cur = (mask >> c) & 1u;
        bool nxt = (mask >> ((c + 1) % cols)) & 1u;
        if (!cur && nxt) ++transitions;
    }
    return transitions == 1;
}

}  // namespace cacd
