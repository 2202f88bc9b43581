#pragma once

#include <optional>
#include <vector>

#include "cacd/binary_matrix.hpp"
#include "cacd/catch_representation.hpp"
#include "cacd/digraph.hpp"
#include "cacd/verdict.hpp"

namespace cacd {

/// Endpoint profile of one row. Full rows inherit an effective type and
/// endpoints from the preceding nontrivial row: Type1 [1, n] when that row
/// starts at column 1 (or the full row opens the matrix), otherwise Type2
/// wrapping from lambda to lambda-1. Consecutive identical full rows share
/// the profile of the first of the block.
struct LambdaMuRow {
    StretchKind kind = StretchKind::Type1;  // effective: Type1 or Type2
    bool full = false;
    int i1 = 0, i2 = 0;  // effective Type1 endpoints (1-based)
    int i3 = 0, i4 = 0;  // effective Type2 endpoints (1-based)
    int lambda = 0;
    int mu = 0;
};

struct LambdaMu {
    std::vector<LambdaMuRow> rows;
};

/// Requires row-COP under the identity order and no zero rows (zero rows
/// raise PreconditionError).
LambdaMu compute_lambda_mu(const BinaryMatrix& m);

/// True iff m has circular ones along rows and columns as arranged, contains
/// no zero rows or zero columns, and both endpoint sequences lambda and mu
/// are non-decreasing.
bool is_monotone_circular_ordering(const BinaryMatrix& m);

struct ConditionWitness {
    int r = -1, s = -1, t = -1;  // row indices of the violation
};

struct ConditionReport {
    bool cond2 = true;
    std::optional<ConditionWitness> witness2;
    bool cond3 = true;
    std::optional<ConditionWitness> witness3;
};

/// Conditions 2 and 3 of the characterization: every pairwise difference of
/// row stretches is a circular interval, and full-row minus any two
/// nontrivial rows is a circular interval. Both are computed twice, by
/// endpoint arithmetic and by direct set computation; the two routes must
/// agree or an InternalInconsistencyError is raised.
ConditionReport check_conditions(const BinaryMatrix& b);

/// D: the nontrivial rows of B, Type1 block sorted by (i1, i2) then Type2
/// block sorted by (i3, i4), ties by original row index. Full rows are set
/// aside in original order. S1/S2/S3 partition the Type1 block by
/// {i1=1}, {i1>1, i2<n}, {i2=n}.
struct RowBlocks {
    BinaryMatrix source;
    std::vector<int> d_rows;     // D as source-row indices
    std::vector<int> full_rows;  // source-row indices, original order
    int d1_count = 0;
    int s1_count = 0, s2_count = 0, s3_count = 0;
};

RowBlocks build_D(const BinaryMatrix& b);

struct InsertedMatrix {
    BinaryMatrix matrix;         // M
    std::vector<int> row_origin; // row k of M = source row row_origin[k]
};

/// Places the full rows into D as one consecutive block, following the
/// case analysis on S1/S2/S3 and the Type2 block. Postconditions (column
/// circularity and the monotone ordering of M) are asserted; a failure or a
/// blocked insertion raises InternalInconsistencyError carrying the
/// F1/F2/F3 pattern found.
InsertedMatrix insert_full_rows(const RowBlocks& blocks);

/// Stair numbers 1..rows+cols assigned along the upper stair: column j takes
/// its number where the stair first meets the ones of column j, row i takes
/// its number immediately right of the last one of row i. l and r are
/// jointly a bijection and satisfy m[i][j]=1 => r[i] > l[j].
struct StairNumbering {
    std::vector<int> l;  // per column, 0-based index, 1-based values
    std::vector<int> r;  // per row
};

StairNumbering stair_numbering(const BinaryMatrix& m);

/// Stagger denominators for the arc formulas: s[i] for Type1 rows, s_prime
/// and k for Type2 rows (0 where not applicable), each n plus the largest
/// 1-based row index sharing the relevant endpoint. Applicable values lie
/// in (n, n+rows].
struct ArcIndices {
    std::vector<int> s;
    std::vector<int> s_prime;
    std::vector<int> k;
};

ArcIndices compute_arc_indices(const BinaryMatrix& m, const LambdaMu& lm);

/// Arcs per row of M on the circle of circumference rows+cols+1:
/// Type1 rows [l(i1) + (n+i-i1)/(s_i-i1+1), r_i], Type2 rows ending at
/// l(i4) + (n+i-i4)/(k_i-i4+1).
std::vector<CircularArc> construct_arcs(const BinaryMatrix& m, const StairNumbering& stairs,
                                        const LambdaMu& lm);

/// Points per column of M: p_j = max{l_j, max S_j, min Q_j} with
/// S_j = {a_i | row i starts at column j} and Q_j = {b_i | i4 = j};
/// empty components are omitted.
std::vector<CirclePos> construct_points(const BinaryMatrix& m, const StairNumbering& stairs,
                                        const LambdaMu& lm, const std::vector<CircularArc>& arcs);

/// Intermediate products of an accepted recognition, for debugging and
/// golden tests.
struct ProperTrace {
    Ordering column_order;
    std::vector<int> d_rows;
    std::vector<int> m_rows;
    BinaryMatrix m{1, 1};
    LambdaMu lambda_mu;
    StairNumbering stairs;
    ArcIndices indices;
    std::vector<CircularArc> arcs;    // by M row
    std::vector<CirclePos> points;    // by M column position
};

/// Proper circular-arc catch digraph recognition: existential search over
/// circular catch orderings (rotation-reduced), running the full
/// D -> M -> stairs -> arcs -> points construction per candidate and
/// accepting the first candidate whose representation verifies and is
/// proper. Bounded at 10 vertices.
Verdict recognize_proper_cacd(const Digraph& g);
Verdict recognize_proper_cacd_traced(const Digraph& g, ProperTrace* trace);

}  // namespace cacd
