#include "phopf/abelian.hpp"

#include <random>

#include "doctest.h"

using namespace phopf;

TEST_CASE("group basics") {
    FiniteAbelianGroup g({3, 9});
    CHECK(g.order() == 27);
    CHECK(g.exponent() == 9);
    CHECK(g.add(g.element({2, 8}), g.element({2, 3})) == g.element({1, 2}));
    CHECK(g.neg(g.element({1, 4})) == g.element({2, 5}));
    CHECK(g.element_order(g.element({1, 3})) == 3);
    CHECK(g.is_identity(g.mul_pow(g.element({1, 2}), 9)));

    FiniteAbelianGroup trivial{};
    CHECK(trivial.order() == 1);
    CHECK(trivial.exponent() == 1);
    CHECK(trivial.enumerate().size() == 1);
}

TEST_CASE("pairing") {
    FiniteAbelianGroup z3({3});
    CHECK(z3.pair(z3.character({1}), z3.element({1})) == CycNum::zeta(3));
    for (auto& g : z3.enumerate()) CHECK(z3.pair(z3.trivial_character(), g).is_one());

    FiniteAbelianGroup g({3, 9});
    std::mt19937_64 rng(7);
    for (int t = 0; t < 40; ++t) {
        Character chi = g.character({static_cast<long>(rng() % 3), static_cast<long>(rng() % 9)});
        GroupElement a = g.element({static_cast<long>(rng() % 3), static_cast<long>(rng() % 9)});
        GroupElement b = g.element({static_cast<long>(rng() % 3), static_cast<long>(rng() % 9)});
        CHECK(g.pair(chi, g.add(a, b)) == g.pair(chi, a) * g.pair(chi, b));
        Character psi = g.character({static_cast<long>(rng() % 3), static_cast<long>(rng() % 9)});
        CHECK(g.pair(g.add(chi, psi), a) == g.pair(chi, a) * g.pair(psi, a));
    }
}

TEST_CASE("hat is the evaluation character and a homomorphism") {
    FiniteAbelianGroup z3({3});
    CHECK(z3.hat(z3.identity()) == z3.trivial_character());
    for (auto& g : z3.enumerate())
        for (auto& chi : z3.enumerate_characters()) CHECK(z3.pair(z3.hat(g), GroupElement{chi.e}) == z3.pair(chi, g));

    FiniteAbelianGroup g33({3, 3});
    for (auto& a : g33.enumerate())
        for (auto& b : g33.enumerate())
            CHECK(g33.hat(g33.add(a, b)) == g33.add(g33.hat(a), g33.hat(b)));
}

TEST_CASE("enumeration") {
    FiniteAbelianGroup z2({2});
    auto e = z2.enumerate();
    REQUIRE(e.size() == 2);
    CHECK(e[0] == z2.element({0}));
    CHECK(e[1] == z2.element({1}));

    FiniteAbelianGroup g({3, 3});
    CHECK(g.enumerate().size() == 9);
    FiniteAbelianGroup h({4, 6});
    CHECK(h.enumerate_characters().size() == h.order());
    CHECK_THROWS_AS(g.enumerate(5), enumeration_cap_exceeded);

    for (size_t i = 0; i < 9; ++i) CHECK(g.index_of(g.element_at(i)) == i);
}

TEST_CASE("non-degeneracy and orthogonality") {
    for (auto inv : {std::vector<long>{2}, {5}, {3, 3}, {2, 4}, {10, 10}}) {
        FiniteAbelianGroup g(inv);
        if (g.order() > 100) continue;
        for (auto& a : g.enumerate()) {
            if (g.is_identity(a)) continue;
            bool separated = false;
            for (auto& chi : g.enumerate_characters())
                if (g.pair_exponent(chi, a) != 0) separated = true;
            CHECK(separated);
        }
        for (auto& chi : g.enumerate_characters()) {
            CycNum sum = CycNum::zero(g.exponent());
            for (auto& a : g.enumerate()) sum = sum + g.pair(chi, a);
            if (g.is_trivial(chi))
                CHECK(sum == CycNum::integer(static_cast<long>(g.order()), g.exponent()));
            else
                CHECK(sum.is_zero());
        }
    }
}

TEST_CASE("group mismatch is reported") {
    FiniteAbelianGroup g({3, 3}), h({3});
    CHECK_THROWS_AS(g.pair(h.character({1}), g.element({1, 1})), group_mismatch);
}
