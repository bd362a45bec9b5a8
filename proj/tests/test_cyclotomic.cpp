#include "phopf/cyclotomic.hpp"

#include <random>

#include "doctest.h"

using namespace phopf;

TEST_CASE("zeta basics") {
    CHECK(CycNum::zeta(1, 0) == CycNum(1));
    CHECK(CycNum::zeta(2, 1) == CycNum(-1));
    CHECK((CycNum::zeta(3, 1) + CycNum::zeta(3, 2)) == CycNum::integer(-1, 3));
    CHECK(CycNum::zeta(5).pow(5).is_one());
    CHECK(CycNum::zeta(12, 4) == CycNum::zeta(3, 1).embedded(12));
}

TEST_CASE("zeta multiplicative order") {
    CHECK(CycNum::zeta(12, 1).root_of_unity_order() == 12);
    CHECK(CycNum::zeta(12, 8).root_of_unity_order() == 3);
    CHECK(CycNum::zeta(12, 6).root_of_unity_order() == 2);
    CHECK(CycNum::one().root_of_unity_order() == 1);
    CHECK((CycNum::one(5) + CycNum::zeta(5)).root_of_unity_order() == std::nullopt);
    CHECK(!CycNum::zero(3).root_of_unity_order().has_value());
}

TEST_CASE("field axioms on random elements") {
    std::mt19937_64 rng(20240915);
    auto random_elt = [&](long n) {
        size_t phi = static_cast<size_t>(euler_phi(n));
        CycNum acc = CycNum::zero(n);
        for (size_t k = 0; k < phi; ++k) {
            long num = static_cast<long>(rng() % 7) - 3;
            long den = 1 + static_cast<long>(rng() % 3);
            acc = acc + CycNum::rational(mpq_class(num, den), n) * CycNum::zeta(n).pow(static_cast<long>(k));
        }
        return acc;
    };
    for (long n : {1L, 2L, 3L, 4L, 5L, 12L}) {
        for (int trial = 0; trial < 8; ++trial) {
            CycNum a = random_elt(n), b = random_elt(n), c = random_elt(n);
            CHECK((a + b) * c == a * c + b * c);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a + (b + c) == (a + b) + c);
            CHECK(a * b == b * a);
            if (!a.is_zero()) {
                CHECK((a * a.inverse()).is_one());
                CHECK(a / a == CycNum::one(n));
            }
        }
    }
}

TEST_CASE("embedding round trip") {
    for (long m : {1L, 2L, 3L, 4L, 6L}) {
        long n = 12;
        CycNum v = CycNum::zeta(m) + CycNum::rational(mpq_class(3, 2), m);
        CycNum up = v.embedded(n);
        auto down = up.lowered(m);
        REQUIRE(down.has_value());
        CHECK(*down == v);
    }
    // an element genuinely of conductor 12 does not descend to Q(zeta_4)
    CHECK(!CycNum::zeta(12).lowered(4).has_value());
}

TEST_CASE("qint") {
    CHECK(qint(3, CycNum(1)) == CycNum(3));
    CHECK(qint(3, CycNum::zeta(3)).is_zero());
    CHECK(qint(2, CycNum::zeta(4)) == CycNum::one(4) + CycNum::zeta(4));
    CHECK(qint(0, CycNum(2)).is_zero());
    CHECK_THROWS(qint(3, CycNum(0)));
}

TEST_CASE("qbinom basics") {
    CycNum q = CycNum::zeta(7);
    CHECK(qbinom(2, 1, q) == CycNum::one(7) + q);
    CHECK(qbinom(4, 2, CycNum(1)) == CycNum(6));
    for (long n = 0; n <= 6; ++n)
        for (long k = 0; k <= n; ++k) CHECK(qbinom(n, k, q) == qbinom(n, n - k, q));
}

TEST_CASE("qbinom inversion identity") {
    // {n choose k}_{q^-1} = {n choose k}_q q^{k(k-n)}
    for (long conductor : {3L, 5L, 7L}) {
        CycNum q = CycNum::zeta(conductor);
        for (long n = 0; n <= 8; ++n)
            for (long k = 0; k <= n; ++k)
                CHECK(qbinom(n, k, q.inverse()) == qbinom(n, k, q) * q.pow(k * (k - n)));
    }
    CycNum q5 = CycNum::zeta(5);
    CHECK(qbinom(4, 2, q5.inverse()) == qbinom(4, 2, q5) * q5.pow(2 * (2 - 4)));
}

TEST_CASE("qbinom pascal identity") {
    for (long conductor : {3L, 5L, 7L}) {
        CycNum q = CycNum::zeta(conductor);
        for (long n = 0; n < 8; ++n)
            for (long k = 0; k <= n + 1; ++k) {
                CycNum lhs = (k <= n ? qbinom(n, k, q) : CycNum::zero(conductor)) +
                             (k >= 1 ? qbinom(n, k - 1, q) * q.pow(n - k + 1) : CycNum::zero(conductor));
                CHECK(lhs == qbinom(n + 1, k, q));
            }
    }
}

TEST_CASE("q-integer inversion") {
    // (n)_{q^-1} = q^{-(n-1)} (n)_q and the factorial version
    for (long conductor : {3L, 5L, 7L}) {
        CycNum q = CycNum::zeta(conductor);
        for (long n = 1; n <= 8; ++n) {
            CHECK(qint(n, q.inverse()) == q.pow(-(n - 1)) * qint(n, q));
            CHECK(qfactorial(n, q.inverse()) == q.pow(-n * (n - 1) / 2) * qfactorial(n, q));
        }
    }
}

TEST_CASE("factorial route agrees where defined, signals elsewhere") {
    CycNum q = CycNum::zeta(5);
    for (long n = 0; n <= 4; ++n)
        for (long k = 0; k <= n; ++k) CHECK(qbinom_factorial(n, k, q) == qbinom(n, k, q));
    CHECK(qbinom_factorial(6, 3, q) == qbinom(6, 3, q));
    // (5)_q! = 0 at a fifth root of unity, so the quotient route fails there
    CHECK_THROWS_AS(qbinom_factorial(10, 5, q), division_by_zero);
    CHECK(qbinom(5, 1, q).is_zero());
}

TEST_CASE("rendering") {
    CHECK(CycNum(0).str() == "0");
    CHECK((CycNum::one(5) - CycNum::zeta(5).pow(2)).str() == "1 - z^2 (zeta 5)");
    CHECK(CycNum::rational(mpq_class(-2, 3)).str() == "-2/3");
}

TEST_CASE("conductor mismatch is rejected") {
    CHECK_THROWS_AS(CycNum::zeta(3) + CycNum::zeta(5), conductor_mismatch);
    CHECK(CycNum::zeta(3) * CycNum::zeta(12, 3) == CycNum::zeta(12, 4) * CycNum::zeta(12, 3));
}
