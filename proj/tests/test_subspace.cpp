#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"

#include <set>

using namespace qcube;

TEST_CASE("canonicalize basics") {
    Field F(2);
    Subspace d = canonicalize(F, {{1, 1}}, 2);
    CHECK(d.dim() == 1);
    CHECK(d.pivots() == std::vector<int>{1});
    CHECK(d.entry(0, 0) == 1);
    CHECK(d.entry(1, 0) == 1);

    CHECK(canonicalize(F, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 3) == Subspace::full(3));
    CHECK(canonicalize(F, {}, 3) == Subspace::zero(3));
    // idempotent on canonical columns
    Subspace X = canonicalize(F, {{1, 1, 0}, {0, 0, 1}}, 3);
    std::vector<FFVector> cols;
    for (int j = 0; j < X.dim(); ++j) cols.push_back(X.column(j));
    CHECK(canonicalize(F, cols, 3) == X);
}

TEST_CASE("normal form is invariant under basis change") {
    for (long q : {2L, 3L}) CHECK(verify_canonical_stability(Field(q), 3, 200, 97));
}

TEST_CASE("enumeration counts and canonical order") {
    Field F(2);
    auto lines = enumerate_subspaces(F, 2, 1);
    REQUIRE(lines.size() == 3);
    // pivot-lex then entry-lex: e1, e2, e1+e2
    CHECK(lines[0].column(0) == FFVector{1, 0});
    CHECK(lines[1].column(0) == FFVector{0, 1});
    CHECK(lines[2].column(0) == FFVector{1, 1});
    CHECK(std::is_sorted(lines.begin(), lines.end()));

    for (long q : {2L, 5L}) {
        auto zero_level = enumerate_subspaces(Field(q), 3, 0);
        REQUIRE(zero_level.size() == 1);
        CHECK(zero_level[0] == Subspace::zero(3));
    }
    CHECK(enumerate_subspaces(F, 4, 2).size() == 35);
    CHECK_THROWS_AS(enumerate_subspaces(F, 2, 3), std::invalid_argument);
}

TEST_CASE("enumeration matches the span-closure oracle exactly") {
    for (auto [q, n] : std::vector<std::pair<long, int>>{{2, 3}, {3, 2}}) {
        Field F(q);
        for (int k = 0; k <= n; ++k) {
            std::set<std::set<int>> got;
            for (const auto& X : enumerate_subspaces(F, n, k))
                got.insert(oracle::subspace_point_set(F, X));
            CHECK(got == oracle::subspaces_as_point_sets(F, n, k));
            CHECK(got.size() == enumerate_subspaces(F, n, k).size());  // no duplicates
        }
    }
}

TEST_CASE("pivots recomputed through intersections") {
    Field F2(2);
    CHECK(pivots_via_intersections(F2, Subspace::full(4)) == std::vector<int>{0, 1, 2, 3});
    CHECK(pivots_via_intersections(F2, canonicalize(F2, {{1, 1}}, 2)) == std::vector<int>{1});
    CHECK(pivots_via_intersections(F2, Subspace::zero(3)).empty());
    for (const auto& X : subspace_order(F2, 4).list)
        CHECK(pivots_via_intersections(F2, X) == X.pivots());
    Field F3(3);
    for (const auto& X : subspace_order(F3, 3).list)
        CHECK(pivots_via_intersections(F3, X) == X.pivots());
}

TEST_CASE("covers") {
    Field F(2);
    Subspace line = canonicalize(F, {{1, 1}}, 2);
    CHECK(covers(F, line, Subspace::zero(2)));
    CHECK_FALSE(covers(F, line, line));
    for (const auto& l : enumerate_subspaces(F, 2, 1)) CHECK(covers(F, Subspace::full(2), l));
}

TEST_CASE("cover degree counts") {
    for (long q : {2L, 3L}) {
        Field F(q);
        int n = (q == 2) ? 4 : 3;
        for (const auto& X : subspace_order(F, n).list) {
            CHECK(Int(static_cast<long>(covers_above(F, X).size())) == q_int(q, n - X.dim()));
            CHECK(Int(static_cast<long>(covers_below(F, X).size())) == q_int(q, X.dim()));
            for (const auto& Z : covers_above(F, X)) CHECK(covers(F, Z, X));
            for (const auto& Y : covers_below(F, X)) CHECK(covers(F, X, Y));
        }
    }
}

TEST_CASE("restriction to the hyperplane") {
    Field F(2);
    CHECK(restrict_hyperplane(Subspace::full(3)) == Subspace::full(2));
    CHECK(restrict_hyperplane(canonicalize(F, {{1, 1}}, 2)) == Subspace::zero(1));
    // already inside: only the ambient drops
    Subspace inside = canonicalize(F, {{1, 0, 0}}, 3);
    CHECK(restrict_hyperplane(inside) == canonicalize(F, {{1, 0}}, 2));
}

TEST_CASE("hat spans with the last axis") {
    Field F(3);
    CHECK(hat(Subspace::zero(2)) == canonicalize(F, {{0, 1}}, 2));
    CHECK(hat(embed(Subspace::full(2), 3)) == Subspace::full(3));
    CHECK_THROWS_AS(hat(Subspace::full(2)), std::invalid_argument);
    // order embedding: Z <= T iff hat(Z) <= hat(T), exhaustively in ambient 3
    auto all2 = subspace_order(F, 2).list;
    for (const auto& Z : all2)
        for (const auto& T : all2) {
            bool below = contains(F, T, Z);
            CHECK(below == contains(F, hat(embed(T, 3)), hat(embed(Z, 3))));
        }
}

TEST_CASE("outside_hyperplane and slice sizes") {
    Field F(2);
    CHECK_FALSE(Subspace::zero(2).outside_hyperplane());
    CHECK(canonicalize(F, {{0, 0, 1}}, 3).outside_hyperplane());
    for (long q : {2L, 3L}) {
        Field Fq(q);
        int n = 3;
        for (int k = 0; k <= n; ++k) {
            long outside = 0;
            for (const auto& X : enumerate_subspaces(Fq, n, k))
                if (X.outside_hyperplane()) ++outside;
            CHECK(Int(outside) == q_binomial(q, n, k) - q_binomial(q, n - 1, k));
        }
    }
}

TEST_CASE("lifts above") {
    Field F(2);
    {
        auto lifts = lifts_above(F, Subspace::full(2));
        REQUIRE(lifts.size() == 1);
        CHECK(lifts[0] == Subspace::full(3));
    }
    {
        auto lifts = lifts_above(F, Subspace::zero(2));
        CHECK(lifts.size() == 4);
        for (const auto& L : lifts) {
            CHECK(L.dim() == 1);
            CHECK(L.outside_hyperplane());
        }
    }
    // lifts are exactly the outside subspaces restricting back, with count
    // q^{n-k}; checked by filtering the full enumeration one level up
    for (long q : {2L, 3L}) {
        Field Fq(q);
        for (int n = 0; n <= 3; ++n) {
            SubspaceOrder below = subspace_order(Fq, n);
            SubspaceOrder above = subspace_order(Fq, n + 1);
            for (const auto& X : below.list) {
                std::set<Subspace> expected;
                for (const auto& Y : above.list)
                    if (Y.outside_hyperplane() && restrict_hyperplane(Y) == X) expected.insert(Y);
                auto lifts = lifts_above(Fq, X);
                CHECK(std::set<Subspace>(lifts.begin(), lifts.end()) == expected);
                Int count = 1;
                for (int i = 0; i < n - X.dim(); ++i) count *= q;
                CHECK(Int(static_cast<long>(lifts.size())) == count);
            }
        }
    }
}

TEST_CASE("cover relations between adjacent classes are q-to-1 regular") {
    for (long q : {2L, 3L}) {
        Field F(q);
        int n1 = 3;  // classes inside ambient 3
        for (const auto& X : subspace_order(F, n1).list) {
            if (!X.outside_hyperplane()) continue;
            for (const auto& Y : covers_above(F, X)) {
                if (!Y.outside_hyperplane()) continue;
                auto class_x = lifts_above(F, restrict_hyperplane(X));
                auto class_y = lifts_above(F, restrict_hyperplane(Y));
                for (const auto& W : class_y) {
                    long deg = 0;
                    for (const auto& Z : class_x)
                        if (covers(F, W, Z)) ++deg;
                    CHECK(deg == q);
                }
                for (const auto& Z : class_x) {
                    long deg = 0;
                    for (const auto& W : class_y)
                        if (covers(F, W, Z)) ++deg;
                    CHECK(deg == 1);
                }
            }
        }
    }
}

TEST_CASE("general linear action") {
    Field F(2);
    Subspace X = canonicalize(F, {{1, 1, 0}}, 3);
    std::vector<FFVector> id = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    CHECK(transform(F, id, X) == X);
    std::vector<FFVector> g = {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}};  // singular over F_2
    CHECK_THROWS_AS(transform(F, g, X), std::invalid_argument);
    std::vector<FFVector> h = {{0, 1, 0}, {1, 0, 0}, {0, 1, 1}};
    CHECK(transform(F, h, Subspace::full(3)) == Subspace::full(3));
    CHECK(transform(F, h, X).dim() == X.dim());
}

TEST_CASE("compose produces valid normal forms") {
    Field F(3);
    for (const auto& X : enumerate_subspaces(F, 3, 2))
        for (const auto& H : subspace_order(F, 2).list) {
            Subspace C = compose(F, X, H);
            std::vector<FFVector> cols;
            for (int j = 0; j < C.dim(); ++j) cols.push_back(C.column(j));
            CHECK(canonicalize(F, cols, 3) == C);
            CHECK(contains(F, X, C));
        }
}
