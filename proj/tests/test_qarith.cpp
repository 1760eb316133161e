#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace qcube;

TEST_CASE("q_int values") {
    CHECK(q_int(2, 3) == 7);
    CHECK(q_int(3, 2) == 4);
    for (long q : {2L, 3L, 7L}) CHECK(q_int(q, 0) == 0);
    CHECK(q_int(1, 5) == 5);
    CHECK_THROWS_AS(q_int(2, -1), std::invalid_argument);
}

TEST_CASE("q_binomial against span-closure enumeration oracle") {
    Field F2(2);
    CHECK(q_binomial(2, 4, 2) == 35);
    CHECK(Int(static_cast<long>(oracle::subspaces_as_point_sets(F2, 4, 2).size())) ==
          q_binomial(2, 4, 2));
    CHECK(q_binomial(2, 2, 1) == 3);
    CHECK(Int(static_cast<long>(oracle::subspaces_as_point_sets(F2, 2, 1).size())) == 3);
    for (long q : {2L, 3L, 5L})
        for (long n : {0L, 1L, 4L}) CHECK(q_binomial(q, n, 0) == 1);
}

TEST_CASE("q_binomial degenerate arguments") {
    CHECK(q_binomial(2, -1, 0) == 0);
    CHECK(q_binomial(2, 3, -1) == 0);
    CHECK(q_binomial(2, 3, 4) == 0);
    CHECK(q_binomial(1, 5, 2) == 10);  // q = 1 specializes to the binomial
}

TEST_CASE("galois numbers") {
    Field F2(2);
    CHECK(galois_number(2, 2) == 5);
    {
        Int total = 0;
        for (int k = 0; k <= 2; ++k)
            total += static_cast<long>(oracle::subspaces_as_point_sets(F2, 2, k).size());
        CHECK(total == 5);
    }
    CHECK(galois_number(2, 3) == 16);
    {
        Int total = 0;
        for (int k = 0; k <= 3; ++k)
            total += static_cast<long>(oracle::subspaces_as_point_sets(F2, 3, k).size());
        CHECK(total == 16);
    }
    for (long q : {2L, 3L, 4L, 5L}) CHECK(galois_number(q, 0) == 1);
}

TEST_CASE("q_pochhammer") {
    CHECK(q_pochhammer(Rat(0), Rat(3), 5) == 1);
    CHECK(q_pochhammer(Rat(1), Rat(2), 1) == 0);
    CHECK(q_pochhammer(Rat(1), Rat(5), 4) == 0);
    CHECK(q_pochhammer(make_rat(1, 2), Rat(2), 2) == 0);
    CHECK(q_pochhammer(make_rat(1, 2), Rat(2), 1) == make_rat(1, 2));
    CHECK(q_pochhammer(Rat(7), Rat(11), 0) == 1);
}

TEST_CASE("pi weights") {
    for (long q : {2L, 3L, 5L}) CHECK(pi_weight(q, 3, 0) == make_rat(1, p_factor(q, 3)));
    CHECK(pi_weight(2, 2, 2) == make_rat(1, 3));
    CHECK_THROWS_AS(pi_weight(2, 2, 3), std::invalid_argument);
    for (long q : {2L, 3L, 4L, 5L}) CHECK(verify_pi_probability(q, 8));
}

TEST_CASE("Galois recurrence and its binomial refinement") {
    for (long q : {2L, 3L, 4L, 5L}) CHECK(verify_goldman_rota(q, 8));
}

TEST_CASE("q-binomial theorem normalization") {
    for (long q : {2L, 3L, 4L, 5L}) CHECK(verify_qbinomial_normalization(q, 8));
}

TEST_CASE("level counts match direct enumeration") {
    for (long q : {2L, 3L}) {
        Field F(q);
        for (int n = 0; n <= 4; ++n)
            for (int k = 0; k <= n; ++k)
                CHECK(Int(static_cast<long>(enumerate_subspaces(F, n, k).size())) ==
                      q_binomial(q, n, k));
    }
    for (long q : {4L, 5L}) {
        Field F(q);
        for (int n = 0; n <= 3; ++n)
            for (int k = 0; k <= n; ++k)
                CHECK(Int(static_cast<long>(enumerate_subspaces(F, n, k).size())) ==
                      q_binomial(q, n, k));
    }
}

TEST_CASE("prime power parsing") {
    CHECK(QParams::parse(2).p == 2);
    CHECK(QParams::parse(9).p == 3);
    CHECK(QParams::parse(9).m == 2);
    CHECK(QParams::parse(16).m == 4);
    CHECK(QParams::parse(27).p == 3);
    CHECK_THROWS_AS(QParams::parse(1), std::invalid_argument);
    CHECK_THROWS_AS(QParams::parse(6), std::invalid_argument);
    CHECK_THROWS_AS(QParams::parse(12), std::invalid_argument);
    CHECK(QParams::is_prime_power(8));
    CHECK_FALSE(QParams::is_prime_power(10));
    CHECK_FALSE(QParams::is_prime_power(1));
}
