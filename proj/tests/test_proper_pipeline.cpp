#include <doctest.h>

#include <cmath>

#include "cacd/circular_ones.hpp"
#include "cacd/errors.hpp"
#include "cacd/proper_cacd.hpp"
#include "fixtures.hpp"

using namespace cacd;

namespace {

bool close(const Rat& value, double printed) {
    return std::abs(rational_double(value) - printed) <= 0.01;
}

}  // namespace

TEST_CASE("endpoint profile of the seven-row example") {
    LambdaMu lm = compute_lambda_mu(fixtures::monotone_example());
    std::vector<std::pair<int, int>> got;
    for (const auto& row : lm.rows) got.emplace_back(row.lambda, row.mu);
    std::vector<std::pair<int, int>> expected = {{1, 4}, {3, 5}, {3, 6}, {3, 9},
                                                 {3, 9}, {6, 9}, {6, 10}};
    CHECK(got == expected);
}

TEST_CASE("endpoint profile corner cases") {
    LambdaMu ones = compute_lambda_mu(BinaryMatrix::from_rows({{1}}));
    CHECK(ones.rows[0].lambda == 1);
    CHECK(ones.rows[0].mu == 1);

    LambdaMu wrap = compute_lambda_mu(BinaryMatrix::from_rows({{1, 0, 1}}));
    CHECK(wrap.rows[0].lambda == 3);
    CHECK(wrap.rows[0].mu == 4);

    CHECK_THROWS_AS(compute_lambda_mu(BinaryMatrix::from_rows({{1, 1}, {0, 0}})),
                    PreconditionError);

    // leading full row takes lambda=1, mu=n and Type1 treatment
    LambdaMu lead = compute_lambda_mu(BinaryMatrix::from_rows({{1, 1, 1}, {0, 1, 1}}));
    CHECK(lead.rows[0].lambda == 1);
    CHECK(lead.rows[0].mu == 3);
    CHECK(lead.rows[0].kind == StretchKind::Type1);
}

TEST_CASE("monotone circular ordering predicate") {
    CHECK(is_monotone_circular_ordering(fixtures::monotone_example()));

    // the worked row permutation satisfies circular ones both ways but its
    // mu sequence decreases at the trailing full row
    CHECK(is_monotone_circular_ordering(fixtures::worked_b()) == false);

    BinaryMatrix bad_col = BinaryMatrix::from_rows({
        {1, 1, 0, 0},
        {0, 1, 1, 0},
        {1, 0, 1, 1},
        {0, 1, 0, 1},
    });
    CHECK_FALSE(is_monotone_circular_ordering(bad_col));
}

TEST_CASE("condition checks") {
    ConditionReport worked = check_conditions(fixtures::worked_b());
    CHECK(worked.cond2);
    CHECK(worked.cond3);

    // difference of two crossing rows is circular
    BinaryMatrix crossing = BinaryMatrix::from_rows({{0, 1, 1, 0, 0}, {0, 0, 1, 1, 1}});
    ConditionReport cr = check_conditions(crossing);
    CHECK(cr.cond2);

    // a row strictly inside another breaks condition 2
    BinaryMatrix nested = BinaryMatrix::from_rows({{0, 1, 1, 1, 0}, {0, 0, 1, 0, 0}});
    ConditionReport nr = check_conditions(nested);
    CHECK_FALSE(nr.cond2);
    REQUIRE(nr.witness2.has_value());
    CHECK(nr.witness2->r == 0);
    CHECK(nr.witness2->s == 1);

    // full row minus two separated stretches splits: cond3 fails
    BinaryMatrix split = BinaryMatrix::from_rows({
        {1, 1, 0, 0, 0, 0},
        {0, 0, 0, 1, 1, 0},
        {1, 1, 1, 1, 1, 1},
    });
    ConditionReport sr = check_conditions(split);
    CHECK(sr.cond2);
    CHECK_FALSE(sr.cond3);

    // same two stretches but no full row: condition 3 is vacuous
    BinaryMatrix nofull = BinaryMatrix::from_rows({
        {1, 1, 0, 0, 0, 0},
        {0, 0, 0, 1, 1, 0},
    });
    CHECK(check_conditions(nofull).cond3);
}

TEST_CASE("condition-2 route agreement on random circular-row matrices") {
    std::uint64_t state = 99;
    auto next = [&]() {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return state >> 33;
    };
    int tested = 0;
    while (tested < 200) {
        int rows = 2 + static_cast<int>(next() % 4);
        int cols = 3 + static_cast<int>(next() % 5);
        BinaryMatrix m(rows, cols);
        for (int r = 0; r < rows; ++r) {
            int start = static_cast<int>(next() % cols);
            int len = static_cast<int>(next() % cols);
            for (int k = 0; k <= len; ++k) m.set(r, (start + k) % cols, true);
        }
        // rows are circular stretches by construction; check_conditions
        // asserts internally that both evaluation routes agree
        CHECK_NOTHROW(check_conditions(m));
        ++tested;
    }
}

TEST_CASE("build_D on the worked matrix") {
    RowBlocks blocks = build_D(fixtures::worked_b());
    // rows of worked_b: 0=v2, 1=v4, 2=v3, 3=v5(full), 4=v6, 5=v7, 6=v1(full)
    CHECK(blocks.d_rows == std::vector<int>{0, 1, 2, 5, 4});
    CHECK(blocks.full_rows == std::vector<int>{3, 6});
    CHECK(blocks.d1_count == 3);
    CHECK(blocks.s1_count == 1);
    CHECK(blocks.s2_count == 2);
    CHECK(blocks.s3_count == 0);
}

TEST_CASE("build_D without full rows keeps the sorted order") {
    BinaryMatrix m = BinaryMatrix::from_rows({
        {0, 1, 1, 0},
        {1, 1, 0, 0},
        {1, 0, 0, 1},
    });
    RowBlocks blocks = build_D(m);
    CHECK(blocks.full_rows.empty());
    CHECK(blocks.d_rows == std::vector<int>{1, 0, 2});
}

TEST_CASE("build_D with every row full") {
    BinaryMatrix m = BinaryMatrix::from_rows({{1, 1}, {1, 1}});
    RowBlocks blocks = build_D(m);
    CHECK(blocks.d_rows.empty());
    CHECK(blocks.full_rows == std::vector<int>{0, 1});
    InsertedMatrix ins = insert_full_rows(blocks);
    CHECK(ins.row_origin == std::vector<int>{0, 1});
}

TEST_CASE("insert_full_rows reproduces the worked M") {
    InsertedMatrix ins = insert_full_rows(build_D(fixtures::worked_b()));
    // expected row order: v2, v4, v3, fulls (v5 was row 3, v1 row 6), v7, v6
    CHECK(ins.row_origin == std::vector<int>{0, 1, 2, 3, 6, 5, 4});
    CHECK(is_monotone_circular_ordering(ins.matrix));
}

TEST_CASE("single full row with S1 only goes after the S1 block") {
    BinaryMatrix m = BinaryMatrix::from_rows({
        {1, 1, 0, 0},
        {1, 1, 1, 0},
        {1, 1, 1, 1},
    });
    RowBlocks blocks = build_D(m);
    CHECK(blocks.s1_count == 2);
    CHECK(blocks.s2_count == 0);
    InsertedMatrix ins = insert_full_rows(blocks);
    CHECK(ins.row_origin == std::vector<int>{0, 1, 2});
}

TEST_CASE("insertion raises the forbidden patterns") {
    CHECK_THROWS_WITH_AS(insert_full_rows(build_D(fixtures::f1())),
                         doctest::Contains("F1"), InternalInconsistencyError);
    CHECK_THROWS_WITH_AS(insert_full_rows(build_D(fixtures::f2())),
                         doctest::Contains("F2"), InternalInconsistencyError);
    CHECK_THROWS_WITH_AS(insert_full_rows(build_D(fixtures::f3())),
                         doctest::Contains("F3"), InternalInconsistencyError);
}

TEST_CASE("stair numbering of the worked M") {
    InsertedMatrix ins = insert_full_rows(build_D(fixtures::worked_b()));
    StairNumbering st = stair_numbering(ins.matrix);
    CHECK(st.l == std::vector<int>{1, 2, 3, 4, 5, 8, 10});
    CHECK(st.r == std::vector<int>{6, 7, 9, 11, 12, 13, 14});
}

TEST_CASE("stair numbering of tiny matrices") {
    StairNumbering one = stair_numbering(BinaryMatrix::from_rows({{1}}));
    CHECK(one.l == std::vector<int>{1});
    CHECK(one.r == std::vector<int>{2});

    StairNumbering square = stair_numbering(BinaryMatrix::from_rows({{1, 1}, {1, 1}}));
    CHECK(square.l == std::vector<int>{1, 2});
    CHECK(square.r == std::vector<int>{3, 4});
}

TEST_CASE("stair numbering satisfies r_i > l_j on ones") {
    InsertedMatrix ins = insert_full_rows(build_D(fixtures::worked_b()));
    StairNumbering st = stair_numbering(ins.matrix);
    for (int i = 0; i < ins.matrix.rows(); ++i)
        for (int j = 0; j < ins.matrix.cols(); ++j)
            if (ins.matrix.get(i, j)) CHECK(st.r[i] > st.l[j]);
}

TEST_CASE("arcs and points of the worked example, exact and printed") {
    InsertedMatrix ins = insert_full_rows(build_D(fixtures::worked_b()));
    LambdaMu lm = compute_lambda_mu(ins.matrix);
    StairNumbering st = stair_numbering(ins.matrix);
    std::vector<CircularArc> arcs = construct_arcs(ins.matrix, st, lm);
    std::vector<CirclePos> points = construct_points(ins.matrix, st, lm, arcs);

    // M rows are v2, v4, v3, v1, v5, v7, v6
    CHECK(arcs[0].a.value == Rat(15, 8));
    CHECK(arcs[0].b.value == Rat(6));
    CHECK(arcs[1].a.value == Rat(7, 2));
    CHECK(arcs[1].b.value == Rat(7));
    CHECK(arcs[2].a.value == Rat(43, 12));
    CHECK(arcs[2].b.value == Rat(9));
    CHECK(arcs[3].a.value == Rat(11, 3));
    CHECK(arcs[3].b.value == Rat(11, 4));
    CHECK(arcs[4].a.value == Rat(15, 4));
    CHECK(arcs[4].b.value == Rat(17, 6));
    CHECK(arcs[5].a.value == Rat(79, 9));
    CHECK(arcs[5].b.value == Rat(35, 12));
    CHECK(arcs[6].a.value == Rat(80, 9));
    CHECK(arcs[6].b.value == Rat(47, 12));

    // printed two-decimal values from the worked figure
    CHECK(close(arcs[0].a.value, 1.87));
    CHECK(close(arcs[2].a.value, 3.58));
    CHECK(close(arcs[3].a.value, 3.66));
    CHECK(close(arcs[3].b.value, 2.75));
    CHECK(close(arcs[4].a.value, 3.75));
    CHECK(close(arcs[4].b.value, 2.83));
    CHECK(close(arcs[5].a.value, 8.77));
    CHECK(close(arcs[5].b.value, 2.91));
    CHECK(close(arcs[6].a.value, 8.88));
    CHECK(close(arcs[6].b.value, 3.91));

    std::vector<double> printed_points = {1.87, 2.75, 3.91, 4, 5, 8.88, 10};
    for (int j = 0; j < 7; ++j) CHECK(close(points[j].value, printed_points[j]));
    CHECK(points[0].value == Rat(15, 8));
    CHECK(points[2].value == Rat(47, 12));
}

TEST_CASE("arc index table of the worked M") {
    InsertedMatrix ins = insert_full_rows(build_D(fixtures::worked_b()));
    LambdaMu lm = compute_lambda_mu(ins.matrix);
    ArcIndices idx = compute_arc_indices(ins.matrix, lm);
    // rows 2 and 3 start at column 3, whose family reaches the last row
    CHECK(idx.s[1] == 14);
    CHECK(idx.s[2] == 14);
    // last row wraps from column 6 to column 3
    CHECK(idx.s_prime[6] == 14);
    CHECK(idx.k[6] == 14);
    // applicable values stay in (n, n+rows]
    for (int i = 0; i < ins.matrix.rows(); ++i) {
        for (int value : {idx.s[i], idx.s_prime[i], idx.k[i]}) {
            if (value == 0) continue;
            CHECK(value > ins.matrix.cols());
            CHECK(value <= ins.matrix.cols() + ins.matrix.rows());
        }
    }
}

TEST_CASE("arc ordering is monotone within each type") {
    InsertedMatrix ins = insert_full_rows(build_D(fixtures::worked_b()));
    LambdaMu lm = compute_lambda_mu(ins.matrix);
    StairNumbering st = stair_numbering(ins.matrix);
    std::vector<CircularArc> arcs = construct_arcs(ins.matrix, st, lm);
    for (std::size_t i = 0; i + 1 < arcs.size(); ++i) {
        for (std::size_t j = i + 1; j < arcs.size(); ++j) {
            if (lm.rows[i].kind != lm.rows[j].kind) continue;
            CHECK(arcs[i].a.value < arcs[j].a.value);
            CHECK(arcs[i].b.value < arcs[j].b.value);
        }
    }
}

TEST_CASE("recognize_proper_cacd accepts the worked digraph with the printed data") {
    ProperTrace trace;
    Verdict v = recognize_proper_cacd_traced(fixtures::worked_digraph(), &trace);
    REQUIRE(v.accepted);
    REQUIRE(v.certificate.has_value());
    CHECK(trace.column_order.perm == std::vector<int>{0, 1, 2, 3, 4, 5, 6});
    CHECK(trace.m_rows == std::vector<int>{1, 3, 2, 0, 4, 6, 5});
    CHECK(trace.stairs.l == std::vector<int>{1, 2, 3, 4, 5, 8, 10});
    CHECK(trace.stairs.r == std::vector<int>{6, 7, 9, 11, 12, 13, 14});
    CHECK(verify(v.certificate->representation, fixtures::worked_digraph()));
    CHECK(is_proper(v.certificate->representation));
}

TEST_CASE("accepted pipelines satisfy the entrywise catch equivalence on random inputs") {
    // every accept re-checks m[i][j] == (point j inside arc i) internally;
    // this drives that assertion across sizes 5 and 6
    std::uint64_t state = 2026;
    auto next = [&]() {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return state >> 33;
    };
    int accepted = 0;
    for (int trial = 0; trial < 300; ++trial) {
        int n = 5 + static_cast<int>(next() % 2);
        Digraph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (u != v && next() % 3 == 0) g.add_edge(u, v);
        Verdict v = recognize_proper_cacd(g);
        if (!v.accepted) continue;
        ++accepted;
        CHECK(verify(v.certificate->representation, g));
        CHECK(is_proper(v.certificate->representation));
    }
    MESSAGE("random sweep accepted ", accepted, " of 300");
}

TEST_CASE("empirical record: do conditions 2-3 depend on the chosen ordering?") {
    // Whether the two conditions hold for one circular catch ordering iff
    // they hold for all is not settled; the recognizer searches over all of
    // them, and this records the observed behavior without asserting it.
    int instances_with_choice = 0, instances_with_mixed_outcomes = 0;
    for (std::uint64_t mask = 0; mask < 4096; ++mask) {
        Digraph g(4);
        int bit = 0;
        for (int u = 0; u < 4; ++u)
            for (int v = 0; v < 4; ++v) {
                if (u == v) continue;
                if ((mask >> bit) & 1) g.add_edge(u, v);
                ++bit;
            }
        BinaryMatrix astar = augmented_adjacency(g);
        int pass = 0, fail = 0;
        enumerate_row_cop_orderings(astar, SIZE_MAX, [&](const Ordering& order) {
            BinaryMatrix b = astar.with_columns(order.perm);
            if (!find_row_cop_ordering(b.transposed()).has_value()) return true;
            ConditionReport rep = check_conditions(b);
            (rep.cond2 && rep.cond3 ? pass : fail) += 1;
            return true;
        });
        if (pass + fail >= 2) {
            ++instances_with_choice;
            if (pass > 0 && fail > 0) ++instances_with_mixed_outcomes;
        }
    }
    MESSAGE("4-vertex digraphs with >=2 candidate orderings: ", instances_with_choice,
            "; with ordering-dependent condition outcomes: ", instances_with_mixed_outcomes);
    CHECK(instances_with_choice > 0);
}

TEST_CASE("recognize_proper_cacd on degenerate inputs") {
    // complete symmetric digraph: all rows full
    Digraph complete(4);
    for (int u = 0; u < 4; ++u)
        for (int v = 0; v < 4; ++v)
            if (u != v) complete.add_edge(u, v);
    Verdict all = recognize_proper_cacd(complete);
    REQUIRE(all.accepted);
    CHECK(is_proper(all.certificate->representation));

    CHECK(recognize_proper_cacd(Digraph(1)).accepted);

    Verdict d3 = recognize_proper_cacd(fixtures::d3_tournament());
    CHECK_FALSE(d3.accepted);
    REQUIRE(d3.witness.has_value());

    // directed 4-cycle is a proper catch digraph
    CHECK(recognize_proper_cacd(fixtures::directed_cycle(4)).accepted);
}
