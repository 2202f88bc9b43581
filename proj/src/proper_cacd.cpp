#include "cacd/proper_cacd.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "cacd/circular_ones.hpp"
#include "cacd/errors.hpp"

namespace cacd {

namespace {

bool row_cop_identity(const BinaryMatrix& m) {
    for (int r = 0; r < m.rows(); ++r)
        if (classify_row(m, r).kind == StretchKind::NotCircular) return false;
    return true;
}

bool col_cop_identity(const BinaryMatrix& m) { return row_cop_identity(m.transposed()); }

// Ones-stretch of a row as (start, extent) on the circle of m.cols()
// columns, 1-based start, extent = contained columns - 1.
struct Stretch {
    int start;
    int extent;
};

Stretch stretch_of(const LambdaMuRow& row, int n) {
    if (row.kind == StretchKind::Type1) return {row.i1, row.i2 - row.i1};
    return {row.i3, row.i4 + n - row.i3};
}

}  // namespace

LambdaMu compute_lambda_mu(const BinaryMatrix& m) {
    const int n = m.cols();
    LambdaMu out;
    out.rows.resize(m.rows());

    int prev_nontrivial = -1;
    for (int i = 0; i < m.rows(); ++i) {
        RowStretch rs = classify_row(m, i);
        LambdaMuRow& row = out.rows[i];
        switch (rs.kind) {
            case StretchKind::Zero:
                throw PreconditionError("row " + std::to_string(i) +
                                        " is a zero row; the endpoint profile excludes them");
            case StretchKind::NotCircular:
                throw PreconditionError("row " + std::to_string(i) +
                                        " is not circular under the given arrangement");
            case StretchKind::Type1:
                row.kind = StretchKind::Type1;
                row.i1 = rs.i1;
                row.i2 = rs.i2;
                row.lambda = rs.i1;
                row.mu = rs.i2;
                prev_nontrivial = i;
                break;
            case StretchKind::Type2:
                row.kind = StretchKind::Type2;
                row.i3 = rs.i3;
                row.i4 = rs.i4;
                row.lambda = rs.i3;
                row.mu = rs.i4 + n;
                prev_nontrivial = i;
                break;
            case StretchKind::Full: {
                row.full = true;
                if (i > 0 && out.rows[i - 1].full) {
                    // consecutive full rows share the block head's profile
                    row.kind = out.rows[i - 1].kind;
                    row.i1 = out.rows[i - 1].i1;
                    row.i2 = out.rows[i - 1].i2;
                    row.i3 = out.rows[i - 1].i3;
                    row.i4 = out.rows[i - 1].i4;
                    row.lambda = out.rows[i - 1].lambda;
                    row.mu = out.rows[i - 1].mu;
                } else if (prev_nontrivial < 0) {
                    // leading full row: lambda_1 = 1, mu_1 = n, treated Type1
                    row.kind = StretchKind::Type1;
                    row.i1 = 1;
                    row.i2 = n;
                    row.lambda = 1;
                    row.mu = n;
                } else {
                    const LambdaMuRow& prev = out.rows[prev_nontrivial];
                    if (prev.kind == StretchKind::Type1 && prev.i1 == 1) {
                        row.kind = StretchKind::Type1;
                        row.i1 = 1;
                        row.i2 = n;
                        row.lambda = 1;
                        row.mu = n;
                    } else {
                        row.kind = StretchKind::Type2;
                        row.lambda = prev.lambda;
                        row.i3 = prev.lambda;
                        row.i4 = prev.lambda - 1;
                        row.mu = row.i4 + n;
                    }
                }
                break;
            }
        }
    }
    return out;
}

bool is_monotone_circular_ordering(const BinaryMatrix& m) {
    for (int r = 0; r < m.rows(); ++r) {
        StretchKind k = classify_row(m, r).kind;
        if (k == StretchKind::NotCircular || k == StretchKind::Zero) return false;
    }
    BinaryMatrix t = m.transposed();
    for (int c = 0; c < t.rows(); ++c) {
        StretchKind k = classify_row(t, c).kind;
        if (k == StretchKind::NotCircular || k == StretchKind::Zero) return false;
    }
    LambdaMu lm = compute_lambda_mu(m);
    for (std::size_t i = 1; i < lm.rows.size(); ++i) {
        if (lm.rows[i].lambda < lm.rows[i - 1].lambda) return false;
        if (lm.rows[i].mu < lm.rows[i - 1].mu) return false;
    }
    return true;
}

namespace {

// Direct set computation: difference of two row masks circular?
bool difference_circular(std::uint64_t r, std::uint64_t s, int cols) {
    return is_circular_interval(r & ~s, cols);
}

// Endpoint arithmetic for condition 2 on two nontrivial rows: the
// difference fails to be circular exactly when s's stretch sits strictly
// inside r's stretch, touching neither endpoint.
bool difference_circular_arithmetic(const LambdaMuRow& r, const LambdaMuRow& s, int n) {
    Stretch sr = stretch_of(r, n);
    Stretch ss = stretch_of(s, n);
    int offset = ((ss.start - sr.start) % n + n) % n;
    bool contained = offset + ss.extent <= sr.extent;
    bool strict_interior = contained && offset > 0 && offset + ss.extent < sr.extent;
    return !strict_interior;
}

// Endpoint arithmetic for condition 3 (zeros(s) intersect zeros(t) circular).
bool cond3_circular_arithmetic(const LambdaMuRow& s0, const LambdaMuRow& t0, int n) {
    if (s0.kind == StretchKind::Type2 && t0.kind == StretchKind::Type2) return true;
    if (s0.kind == StretchKind::Type1 && t0.kind == StretchKind::Type1) {
        const LambdaMuRow& s = s0.i1 <= t0.i1 ? s0 : t0;
        const LambdaMuRow& t = s0.i1 <= t0.i1 ? t0 : s0;
        bool violated = (t.i1 - s.i2 > 1) && !(s.i1 == 1 && t.i2 == n);
        return !violated;
    }
    const LambdaMuRow& s = s0.kind == StretchKind::Type2 ? s0 : t0;  // second type
    const LambdaMuRow& t = s0.kind == StretchKind::Type2 ? t0 : s0;  // first type
    bool violated = (t.i1 - s.i4 > 1) && (s.i3 - t.i2 > 1);
    return !violated;
}

}  // namespace

ConditionReport check_conditions(const BinaryMatrix& b) {
    const int n = b.cols();
    if (!row_cop_identity(b))
        throw PreconditionError("matrix must have circular rows as arranged");

    std::vector<RowStretch> kinds(b.rows());
    for (int i = 0; i < b.rows(); ++i) kinds[i] = classify_row(b, i);

    auto profile = [&](int i) {
        LambdaMuRow row;
        row.kind = kinds[i].kind;
        row.i1 = kinds[i].i1;
        row.i2 = kinds[i].i2;
        row.i3 = kinds[i].i3;
        row.i4 = kinds[i].i4;
        return row;
    };

    auto nontrivial = [&](int i) {
        return kinds[i].kind == StretchKind::Type1 || kinds[i].kind == StretchKind::Type2;
    };

    ConditionReport rep;
    for (int r = 0; r < b.rows() && rep.cond2; ++r) {
        for (int s = 0; s < b.rows() && rep.cond2; ++s) {
            if (r == s) continue;
            bool direct = difference_circular(b.row_mask(r), b.row_mask(s), n);
            if (nontrivial(r) && nontrivial(s)) {
                bool arith = difference_circular_arithmetic(profile(r), profile(s), n);
                if (arith != direct)
                    throw InternalInconsistencyError(
                        "condition-2 routes disagree on rows " + std::to_string(r) + "," +
                        std::to_string(s));
            } else if (!direct) {
                throw InternalInconsistencyError("trivial-row difference came out non-circular");
            }
            if (!direct) {
                rep.cond2 = false;
                rep.witness2 = ConditionWitness{r, s, -1};
            }
        }
    }

    int full_row = -1;
    for (int i = 0; i < b.rows(); ++i)
        if (kinds[i].kind == StretchKind::Full) {
            full_row = i;
            break;
        }
    if (full_row >= 0) {
        const std::uint64_t full = b.full_mask();
        for (int s = 0; s < b.rows() && rep.cond3; ++s) {
            if (!nontrivial(s)) continue;
            for (int t = s + 1; t < b.rows() && rep.cond3; ++t) {
                if (!nontrivial(t)) continue;
                std::uint64_t z = ~b.row_mask(s) & ~b.row_mask(t) & full;
                bool direct = is_circular_interval(z, n);
                bool arith = cond3_circular_arithmetic(profile(s), profile(t), n);
                if (arith != direct)
                    throw InternalInconsistencyError(
                        "condition-3 routes disagree on rows " + std::to_string(s) + "," +
                        std::to_string(t));
                if (!direct) {
                    rep.cond3 = false;
                    rep.witness3 = ConditionWitness{full_row, s, t};
                }
            }
        }
    }
    return rep;
}

RowBlocks build_D(const BinaryMatrix& b) {
    const int n = b.cols();
    RowBlocks blocks{b, {}, {}, 0, 0, 0, 0};

    std::vector<int> d1, d2;
    std::vector<RowStretch> kinds(b.rows());
    for (int i = 0; i < b.rows(); ++i) {
        kinds[i] = classify_row(b, i);
        switch (kinds[i].kind) {
            case StretchKind::Full:
                blocks.full_rows.push_back(i);
                break;
            case StretchKind::Type1:
                d1.push_back(i);
                break;
            case StretchKind::Type2:
                d2.push_back(i);
                break;
            case StretchKind::Zero:
                throw PreconditionError("zero rows are not allowed here");
            case StretchKind::NotCircular:
                throw PreconditionError("row " + std::to_string(i) + " is not circular");
        }
    }

    std::sort(d1.begin(), d1.end(), [&](int x, int y) {
        return std::tuple(kinds[x].i1, kinds[x].i2, x) < std::tuple(kinds[y].i1, kinds[y].i2, y);
    });
    std::sort(d2.begin(), d2.end(), [&](int x, int y) {
        return std::tuple(kinds[x].i3, kinds[x].i4, x) < std::tuple(kinds[y].i3, kinds[y].i4, y);
    });

    for (int i : d1) {
        if (kinds[i].i1 == 1)
            ++blocks.s1_count;
        else if (kinds[i].i2 == n)
            ++blocks.s3_count;
        else
            ++blocks.s2_count;
    }
    // The sort must leave S1, S2, S3 contiguous in that order.
    for (std::size_t k = 0; k < d1.size(); ++k) {
        int cls = kinds[d1[k]].i1 == 1 ? 0 : (kinds[d1[k]].i2 == n ? 2 : 1);
        int expected = static_cast<int>(k) < blocks.s1_count          ? 0
                       : static_cast<int>(k) < blocks.s1_count + blocks.s2_count ? 1
                                                                                 : 2;
        if (cls != expected)
            throw InternalInconsistencyError(
                "Type1 rows do not split into S1,S2,S3 blocks; condition 2 was not honored");
    }

    blocks.d_rows = d1;
    blocks.d_rows.insert(blocks.d_rows.end(), d2.begin(), d2.end());
    blocks.d1_count = static_cast<int>(d1.size());

    if (!blocks.d_rows.empty() && !col_cop_identity(b.with_rows(blocks.d_rows)))
        throw InternalInconsistencyError("D lost column circularity");
    return blocks;
}

namespace {

[[noreturn]] void raise_f(const std::string& pattern, const std::string& where) {
    throw InternalInconsistencyError("forbidden submatrix " + pattern +
                                         " blocks the full-row insertion (" + where + ")",
                                     pattern);
}

}  // namespace

InsertedMatrix insert_full_rows(const RowBlocks& blocks) {
    const BinaryMatrix& b = blocks.source;

    std::vector<int> rows = blocks.d_rows;
    std::size_t insert_at = rows.size();  // default: end of D

    if (!blocks.full_rows.empty() && !blocks.d_rows.empty()) {
        auto rs = [&](int source_row) { return classify_row(b, source_row); };

        const bool have_d2 = blocks.d1_count < static_cast<int>(blocks.d_rows.size());
        const bool s1 = blocks.s1_count > 0;
        const bool s2 = blocks.s2_count > 0;
        const bool s3 = blocks.s3_count > 0;

        // first and last rows of the Type1 block, when it is nonempty
        const int first1 = blocks.d1_count > 0 ? blocks.d_rows[0] : -1;
        const int last1 = blocks.d1_count > 0 ? blocks.d_rows[blocks.d1_count - 1] : -1;

        if (have_d2) {
            if (!s2) {
                if (s1) {
                    insert_at = static_cast<std::size_t>(blocks.s1_count);  // after i'
                } else {
                    insert_at = rows.size();
                }
            } else {
                const int first1_i2 = rs(first1).i2;
                const int last1_i1 = rs(last1).i1;
                const int m_first = blocks.d_rows[blocks.d1_count];
                const int m_first_i4 = rs(m_first).i4;

                // Diagnostic pattern names per the sub-case that applies.
                const bool case6 = s1 && s2 && s3;
                auto outer_pattern = [&]() -> std::string {
                    if (!case6) return "F1";
                    const int j_first = blocks.d_rows[blocks.s1_count];
                    bool wide = rs(j_first).i2 > first1_i2;
                    bool staggered = rs(j_first).i1 < last1_i1;
                    return wide ? (staggered ? "F2" : "F1") : "F1";
                };
                auto inner_pattern = [&]() -> std::string {
                    if (case6) {
                        const int j_first = blocks.d_rows[blocks.s1_count];
                        bool wide = rs(j_first).i2 > first1_i2;
                        bool staggered = rs(j_first).i1 < last1_i1;
                        if (wide) return staggered ? "F3" : "F2";
                        return staggered ? "F2" : "F1";
                    }
                    bool distinct = rs(last1).i1 > rs(first1).i1 || rs(last1).i2 > first1_i2;
                    return distinct ? "F2" : "F1";
                };

                if (last1_i1 - m_first_i4 <= 1) {
                    insert_at = static_cast<std::size_t>(blocks.d1_count);  // just before m
                } else {
                    if (last1_i1 > first1_i2 + 1)
                        raise_f("F1", "start of the Type1 block ends too early");
                    // first Type2 row whose ones resume beyond the Type1 head
                    int mprime_pos = -1;
                    for (int k = blocks.d1_count; k < static_cast<int>(blocks.d_rows.size());
                         ++k) {
                        if (rs(blocks.d_rows[k]).i3 > first1_i2 + 1) {
                            mprime_pos = k;
                            break;
                        }
                    }
                    if (mprime_pos < 0) {
                        insert_at = rows.size();
                    } else {
                        const int mprime = blocks.d_rows[mprime_pos];
                        const int mprime_i4 = rs(mprime).i4;
                        if (last1_i1 - mprime_i4 > 1)
                            raise_f(outer_pattern(),
                                    "Type2 row resumes past the head but its wrap ends early");
                        if (mprime_i4 < first1_i2) {
                            for (int col = last1_i1; col <= first1_i2; ++col) {
                                if (!b.get(m_first, col - 1) && !b.get(mprime, col - 1))
                                    raise_f(inner_pattern(), "column " + std::to_string(col) +
                                                                 " uncovered between m and m'");
                            }
                        }
                        insert_at = static_cast<std::size_t>(mprime_pos);  // just before m'
                    }
                }
            }
        } else {
            // D2 empty
            if (!s1 || !s3) {
                insert_at = rows.size();
            } else if (!s2) {
                insert_at = static_cast<std::size_t>(blocks.s1_count);  // after i'
            } else {
                const int i_first = blocks.d_rows[0];
                const int k_last = blocks.d_rows[blocks.d1_count - 1];
                if (rs(k_last).i1 <= rs(i_first).i2 + 1)
                    insert_at = rows.size();
                else
                    raise_f("F1", "S3 starts beyond the reach of S1");
            }
        }
    }

    rows.insert(rows.begin() + static_cast<std::ptrdiff_t>(insert_at), blocks.full_rows.begin(),
                blocks.full_rows.end());

    InsertedMatrix out{b.with_rows(rows), rows};
    if (!col_cop_identity(out.matrix))
        throw InternalInconsistencyError("M lost column circularity after full-row insertion");
    if (!is_monotone_circular_ordering(out.matrix))
        throw InternalInconsistencyError("M is not monotone after full-row insertion");
    return out;
}

StairNumbering stair_numbering(const BinaryMatrix& m) {
    if (!is_monotone_circular_ordering(m))
        throw PreconditionError("stair numbering needs a monotone circular ordering");

    const int rows = m.rows();
    const int cols = m.cols();

    // Column event: the stair meets column j at its topmost one. Row event:
    // the stair steps down just right of the last one of row i.
    struct Event {
        int colpos;
        int row;
        bool is_row;
        int index;
    };
    std::vector<Event> events;
    events.reserve(static_cast<std::size_t>(rows) + cols);

    for (int j = 0; j < cols; ++j) {
        int top = -1;
        for (int i = 0; i < rows; ++i)
            if (m.get(i, j)) {
                top = i;
                break;
            }
        events.push_back({j + 1, top, false, j});
    }
    for (int i = 0; i < rows; ++i) {
        int rightmost = -1;
        for (int j = cols - 1; j >= 0; --j)
            if (m.get(i, j)) {
                rightmost = j;
                break;
            }
        events.push_back({rightmost + 2, i, true, i});
    }

    std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
        return std::tuple(a.colpos, a.row) < std::tuple(b.colpos, b.row);
    });

    StairNumbering st;
    st.l.assign(cols, 0);
    st.r.assign(rows, 0);
    int counter = 1;
    for (const Event& e : events) {
        if (e.is_row)
            st.r[e.index] = counter++;
        else
            st.l[e.index] = counter++;
    }

    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (m.get(i, j) && st.r[i] <= st.l[j])
                throw InternalInconsistencyError("stair numbering violates r_i > l_j at (" +
                                                 std::to_string(i) + "," + std::to_string(j) +
                                                 ")");
    return st;
}

ArcIndices compute_arc_indices(const BinaryMatrix& m, const LambdaMu& lm) {
    const int rows = m.rows();
    const int n = m.cols();

    // max row index (1-based) sharing an endpoint value, per the three index
    // families; full rows participate with their inherited endpoints.
    auto max_row_where = [&](auto&& pred) {
        int best = 0;
        for (int j = 0; j < rows; ++j)
            if (pred(lm.rows[j])) best = j + 1;
        return best;
    };

    ArcIndices out;
    out.s.assign(rows, 0);
    out.s_prime.assign(rows, 0);
    out.k.assign(rows, 0);
    for (int idx = 0; idx < rows; ++idx) {
        const LambdaMuRow& row = lm.rows[idx];
        if (row.kind == StretchKind::Type1) {
            out.s[idx] = n + max_row_where([&](const LambdaMuRow& r) {
                             return r.i1 == row.i1 || r.i3 == row.i1 || r.i4 == row.i1;
                         });
        } else {
            out.s_prime[idx] = n + max_row_where([&](const LambdaMuRow& r) {
                                   return r.i3 == row.i3 || r.i4 == row.i3;
                               });
            out.k[idx] = n + max_row_where([&](const LambdaMuRow& r) { return r.i4 == row.i4; });
        }
    }
    return out;
}

std::vector<CircularArc> construct_arcs(const BinaryMatrix& m, const StairNumbering& stairs,
                                        const LambdaMu& lm) {
    const int rows = m.rows();
    const int n = m.cols();
    const Rat circ(rows + n + 1);
    const ArcIndices indices = compute_arc_indices(m, lm);

    std::vector<CircularArc> arcs(rows);
    for (int idx = 0; idx < rows; ++idx) {
        const LambdaMuRow& row = lm.rows[idx];
        const int i = idx + 1;
        Rat a, bb;
        if (row.kind == StretchKind::Type1) {
            int s_i = indices.s[idx];
            a = Rat(stairs.l[row.i1 - 1]) + Rat(n + i - row.i1, s_i - row.i1 + 1);
            bb = Rat(stairs.r[idx]);
            if (a >= bb)
                throw InternalInconsistencyError("Type1 arc endpoints out of order");
        } else {
            a = Rat(stairs.l[row.i3 - 1]) +
                Rat(n + i - row.i3, indices.s_prime[idx] - row.i3 + 1);
            bb = Rat(stairs.l[row.i4 - 1]) + Rat(n + i - row.i4, indices.k[idx] - row.i4 + 1);
            if (bb >= a)
                throw InternalInconsistencyError("Type2 arc endpoints out of order");
        }
        arcs[idx] = CircularArc{CirclePos(a, circ), CirclePos(bb, circ)};
    }
    return arcs;
}

std::vector<CirclePos> construct_points(const BinaryMatrix& m, const StairNumbering& stairs,
                                        const LambdaMu& lm, const std::vector<CircularArc>& arcs) {
    const int rows = m.rows();
    const int n = m.cols();
    const Rat circ(rows + n + 1);

    std::vector<CirclePos> points(n);
    for (int j = 1; j <= n; ++j) {
        Rat p(stairs.l[j - 1]);
        for (int idx = 0; idx < rows; ++idx) {
            const LambdaMuRow& row = lm.rows[idx];
            bool starts_here = row.kind == StretchKind::Type1 ? row.i1 == j : row.i3 == j;
            if (starts_here) p = std::max(p, arcs[idx].a.value);  // max of S_j
        }
        std::optional<Rat> min_q;
        for (int idx = 0; idx < rows; ++idx) {
            const LambdaMuRow& row = lm.rows[idx];
            if (row.kind == StretchKind::Type2 && row.i4 == j) {
                Rat b = arcs[idx].b.value;
                if (!min_q || b < *min_q) min_q = b;
            }
        }
        if (min_q) p = std::max(p, *min_q);
        if (p < Rat(stairs.l[j - 1]) || p >= Rat(stairs.l[j - 1] + 1))
            throw InternalInconsistencyError("point of column " + std::to_string(j) +
                                             " escaped its stair slot");
        points[j - 1] = CirclePos(p, circ);
    }
    return points;
}

namespace {

struct PipelineResult {
    CatchRepresentation rep;
    ProperTrace trace;
};

// Runs the full construction for one candidate column ordering of A*(g).
// Returns nullopt when the candidate fails a condition; throws
// InternalInconsistencyError when a step that the characterization
// guarantees breaks anyway.
std::optional<PipelineResult> run_pipeline(const Digraph& g, const BinaryMatrix& astar,
                                           const Ordering& col_order) {
    const int n = g.n();
    BinaryMatrix b = astar.with_columns(col_order.perm);

    // condition 1, column side: some row ordering makes every column circular
    if (!find_row_cop_ordering(b.transposed())) return std::nullopt;

    ConditionReport cond = check_conditions(b);
    if (!cond.cond2 || !cond.cond3) return std::nullopt;

    RowBlocks blocks = build_D(b);
    InsertedMatrix inserted = insert_full_rows(blocks);
    LambdaMu lm = compute_lambda_mu(inserted.matrix);
    StairNumbering stairs = stair_numbering(inserted.matrix);
    std::vector<CircularArc> arcs = construct_arcs(inserted.matrix, stairs, lm);
    std::vector<CirclePos> points = construct_points(inserted.matrix, stairs, lm, arcs);

    // Step IV equivalence, entrywise on M.
    for (int k = 0; k < inserted.matrix.rows(); ++k)
        for (int j = 0; j < n; ++j)
            if (inserted.matrix.get(k, j) != arc_contains(arcs[k], points[j]))
                throw InternalInconsistencyError("arc/point family disagrees with M at (" +
                                                 std::to_string(k) + "," + std::to_string(j) +
                                                 ")");

    PipelineResult result;
    result.rep.circumference = Rat(2 * n + 1);
    result.rep.arcs.resize(n);
    result.rep.points.resize(n);
    for (int k = 0; k < n; ++k) result.rep.arcs[inserted.row_origin[k]] = arcs[k];
    for (int j = 0; j < n; ++j) result.rep.points[col_order.perm[j]] = points[j];

    result.trace.column_order = col_order;
    result.trace.d_rows = blocks.d_rows;
    result.trace.m_rows = inserted.row_origin;
    result.trace.m = inserted.matrix;
    result.trace.lambda_mu = lm;
    result.trace.stairs = stairs;
    result.trace.indices = compute_arc_indices(inserted.matrix, lm);
    result.trace.arcs = arcs;
    result.trace.points = points;
    return result;
}

}  // namespace

Verdict recognize_proper_cacd_traced(const Digraph& g, ProperTrace* trace) {
    if (g.n() > 10) throw BoundError("proper recognition is bounded at 10 vertices");
    BinaryMatrix astar = augmented_adjacency(g);

    Verdict verdict;
    bool found = false;
    std::size_t candidates = 0;
    std::string inconsistencies;

    enumerate_row_cop_orderings(astar, SIZE_MAX, [&](const Ordering& order) {
        ++candidates;
        std::optional<PipelineResult> result;
        try {
            result = run_pipeline(g, astar, order);
        } catch (const InternalInconsistencyError& e) {
            inconsistencies += std::string(inconsistencies.empty() ? "" : "; ") + e.what();
            return true;
        }
        if (!result) return true;
        if (!verify(result->rep, g) || !is_proper(result->rep)) {
            inconsistencies += std::string(inconsistencies.empty() ? "" : "; ") +
                               "constructed representation failed its own checks";
            return true;
        }
        verdict = accept_with(CacdCertificate{order, result->rep});
        if (trace) *trace = result->trace;
        found = true;
        return false;
    });

    if (found) return verdict;
    std::string detail = "no circular catch ordering passes the monotone conditions (" +
                         std::to_string(candidates) + " candidates)";
    if (!inconsistencies.empty()) detail += "; internal reports: " + inconsistencies;
    return reject_with(Witness{"exhausted-orderings", detail, {}});
}

Verdict recognize_proper_cacd(const Digraph& g) { return recognize_proper_cacd_traced(g, nullptr); }

}  // namespace cacd
