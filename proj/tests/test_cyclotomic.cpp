#include <catch2/catch_amalgamated.hpp>

#include <qcube/cyclotomic.hpp>
#include <qcube/verify.hpp>

using namespace qcube;

TEST_CASE("roots of unity in canonical form") {
    CHECK(Cyclotomic::root(2, 1) == Cyclotomic::rational(2, Rat(-1)));
    for (int p : {2, 3, 5, 7}) CHECK(Cyclotomic::root(p, 0) == Cyclotomic::one(p));
    // zeta_3^2 reduces to -1 - zeta_3
    Cyclotomic z32 = Cyclotomic::root(3, 2);
    CHECK(z32.coeffs()[0] == -1);
    CHECK(z32.coeffs()[1] == -1);
    CHECK_THROWS_AS(Cyclotomic::root(4, 1), std::invalid_argument);
}

TEST_CASE("root-of-unity sums vanish") {
    for (int p : {2, 3, 5, 7}) {
        Cyclotomic s = Cyclotomic::zero(p);
        for (int e = 0; e < p; ++e) s += Cyclotomic::root(p, e);
        CHECK(s.is_zero());
    }
}

TEST_CASE("basic products and sums") {
    CHECK(Cyclotomic::root(3, 1) * Cyclotomic::root(3, 2) == Cyclotomic::one(3));
    CHECK((Cyclotomic::one(5) + Cyclotomic::rational(5, Rat(-1))).is_zero());
    CHECK(Cyclotomic::root(5, 3) * Cyclotomic::root(5, 4) == Cyclotomic::root(5, 2));
}

TEST_CASE("conjugation") {
    CHECK(Cyclotomic::root(3, 1).conj() == Cyclotomic::root(3, 2));
    Cyclotomic r = Cyclotomic::rational(7, make_rat(22, 7));
    CHECK(r.conj() == r);
    for (int p : {3, 5}) {
        Cyclotomic a = Cyclotomic::root(p, 1) + Cyclotomic::rational(p, make_rat(1, 3));
        CHECK(a.conj().conj() == a);
    }
}

TEST_CASE("squared modulus") {
    for (int p : {2, 3, 5})
        for (int e = 0; e < p; ++e) CHECK(Cyclotomic::root(p, e).abs_sq() == Cyclotomic::one(p));
    CHECK(Cyclotomic::zero(3).abs_sq().is_zero());
    // |1 + zeta_3|^2 = (1 + zeta)(1 + zeta^2) = 1
    Cyclotomic a = Cyclotomic::one(3) + Cyclotomic::root(3, 1);
    CHECK(a.abs_sq() == Cyclotomic::one(3));
}

TEST_CASE("randomized ring axioms and inverses") {
    for (int p : {2, 3, 5}) CHECK(verify_cyclotomic_axioms(p, 200, 20240817));
}

TEST_CASE("inverse via norm") {
    Cyclotomic a = Cyclotomic::root(5, 2) + Cyclotomic::rational(5, Rat(3));
    CHECK(a * a.inverse() == Cyclotomic::one(5));
    CHECK_THROWS_AS(Cyclotomic::zero(3).inverse(), std::invalid_argument);
}

TEST_CASE("mismatched conductors are rejected") {
    CHECK_THROWS_AS(Cyclotomic::one(3) + Cyclotomic::one(5), std::invalid_argument);
    CHECK_THROWS_AS(Cyclotomic::root(3, 1) * Cyclotomic::root(7, 1), std::invalid_argument);
}

TEST_CASE("rational detection") {
    CHECK(Cyclotomic::rational(5, make_rat(2, 3)).is_rational());
    CHECK(Cyclotomic::rational(5, make_rat(2, 3)).rational_value() == make_rat(2, 3));
    CHECK_FALSE(Cyclotomic::root(5, 1).is_rational());
    CHECK_THROWS_AS(Cyclotomic::root(5, 1).rational_value(), std::invalid_argument);
}
