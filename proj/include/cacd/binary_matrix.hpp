#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cacd {

/// Dense binary matrix, one 64-bit word per row. Columns are capped at 64,
/// which is far above every desk-scale bound in this toolkit.
class BinaryMatrix {
public:
    BinaryMatrix(int rows, int cols);

    static BinaryMatrix from_rows(const std::vector<std::vector<int>>& rows01);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    bool get(int r, int c) const { return (bits_[r] >> c) & 1u; }
    void set(int r, int c, bool value);

    std::uint64_t row_mask(int r) const { return bits_[r]; }
    std::uint64_t full_mask() const { return cols_ == 64 ? ~0ull : (1ull << cols_) - 1; }

    BinaryMatrix transposed() const;
    /// Column j of the result is column perm[j] of *this.
    BinaryMatrix with_columns(const std::vector<int>& perm) const;
    /// Row i of the result is row perm[i] of *this; a selection, so perm may
    /// repeat or omit rows.
    BinaryMatrix with_rows(const std::vector<int>& perm) const;

    bool operator==(const BinaryMatrix& other) const = default;

    std::string to_string() const;

private:
    int rows_;
    int cols_;
    std::vector<std::uint64_t> bits_;
};

enum class StretchKind { Type1, Type2, Full, Zero, NotCircular };

/// Classification of one matrix row under the identity column order.
/// Column endpoints are 1-based: Type1 rows have their ones exactly in
/// [i1, i2]; Type2 rows wrap, with ones in [i3, cols] and [1, i4], i4 < i3.
struct RowStretch {
    StretchKind kind = StretchKind::NotCircular;
    int i1 = 0, i2 = 0;
    int i3 = 0, i4 = 0;
};

RowStretch classify_row(const BinaryMatrix& m, int row);

/// True when the column set (1-based, as a bitmask over cols) is circularly
/// consecutive: empty, full, or a single run modulo cols.
bool is_circular_interval(std::uint64_t mask, int cols);

}  // namespace cacd
