#include "phopf/cartan.hpp"

#include "doctest.h"

using namespace phopf;

namespace {
CartanMatrix A1() { return CartanMatrix(std::vector<std::vector<int>>{{2}}); }
CartanMatrix A2() { return CartanMatrix({{2, -1}, {-1, 2}}); }
CartanMatrix B2() { return CartanMatrix({{2, -2}, {-1, 2}}); }
CartanMatrix G2() { return CartanMatrix({{2, -3}, {-1, 2}}); }
CartanMatrix A3() { return CartanMatrix({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}); }
CartanMatrix A1xA1() { return CartanMatrix({{2, 0}, {0, 2}}); }

CartanDatum taft(long N) {
    FiniteAbelianGroup g({N});
    return make_datum(g, {g.element({1})}, {g.character({1})}, A1());
}

CartanDatum a2_33() {
    FiniteAbelianGroup g({3, 3});
    return make_datum(g, {g.element({1, 0}), g.element({0, 1})},
                      {g.character({1, 2}), g.character({0, 1})}, A2());
}
}  // namespace

TEST_CASE("cartan matrix validation") {
    CHECK(A2().validate().empty());
    CHECK(B2().validate().empty());
    CHECK(G2().validate().empty());
    CHECK(A3().validate().empty());
    CHECK(!CartanMatrix({{2, -1}, {0, 2}}).validate().empty());   // zero symmetry
    CHECK(!CartanMatrix(std::vector<std::vector<int>>{{1}}).validate().empty());               // diagonal
    CHECK(!CartanMatrix({{2, -4}, {-1, 2}}).validate().empty());  // not finite type
    CHECK(CartanMatrix({{2, -2}, {-2, 2}}).validate().size() > 0);  // affine A1~
}

TEST_CASE("positive roots counts and convex order") {
    CHECK(positive_roots(A1()).p == 1);
    CHECK(positive_roots(B2()).p == 4);
    CHECK(positive_roots(G2()).p == 6);
    CHECK(positive_roots(A3()).p == 6);
    CHECK(positive_roots(A1xA1()).p == 2);

    auto rs = positive_roots(A2());
    REQUIRE(rs.p == 3);
    CHECK(rs.roots[0] == std::vector<int>{1, 0});
    CHECK(rs.roots[1] == std::vector<int>{1, 1});
    CHECK(rs.roots[2] == std::vector<int>{0, 1});
    CHECK(rs.reduced_word == std::vector<long>{0, 1, 0});
    CHECK(rs.simple_position == std::vector<long>{0, 2});
    CHECK(rs.split[1] == std::pair<long, long>{0, 2});
    CHECK(rs.height[1] == 2);
}

TEST_CASE("rho identity") {
    auto a1 = positive_roots(A1());
    CHECK(a1.rho_identity_check(0) == 2);
    auto a2 = positive_roots(A2());
    CHECK(a2.rho_identity_check(0) == 2);
    CHECK(a2.rho_identity_check(1) == 2);
    auto b2 = positive_roots(B2());
    CHECK(b2.rho_identity_check(0) == 2);
    CHECK(b2.rho_identity_check(1) == 2);
    auto g2 = positive_roots(G2());
    for (size_t i = 0; i < 2; ++i) CHECK(g2.rho_identity_check(i) == 2);
    auto a3 = positive_roots(A3());
    for (size_t i = 0; i < 3; ++i) CHECK(a3.rho_identity_check(i) == 2);
    auto mix = positive_roots(A1xA1());
    CHECK(mix.rho_identity_check(0) == 2);
    CHECK(mix.rho_identity_check(1) == 2);
}

TEST_CASE("taft datum validates for every N >= 2") {
    for (long N : {2L, 3L, 4L, 5L, 9L}) {
        auto d = taft(N);
        validate_datum(d);
        auto roots = attach_roots(d);
        CHECK(roots.N[0] == N);
        CHECK(roots.pbw_count() == static_cast<unsigned long long>(N));
    }
}

TEST_CASE("chi_i(g_i) = 1 is rejected") {
    FiniteAbelianGroup g({3});
    auto d = make_datum(g, {g.element({1})}, {g.character({0})}, A1());
    CHECK_THROWS_AS(validate_datum(d), datum_error);
    try {
        validate_datum(d);
    } catch (const datum_error& e) {
        REQUIRE(e.issues.size() == 1);
        CHECK(e.issues[0].find("chi_i(g_i) != 1") != std::string::npos);
    }
}

TEST_CASE("a2 datum over Z3 x Z3") {
    auto d = a2_33();
    validate_datum(d);
    auto roots = attach_roots(d);
    CHECK(roots.N == std::vector<long>{3, 3, 3});
    CHECK(roots.g_root[1] == d.group.element({1, 1}));
    CHECK(roots.chi_root[1] == d.group.character({1, 0}));
    CHECK(roots.pbw_count() == 27);
}

TEST_CASE("broken cartan condition reports both sides") {
    FiniteAbelianGroup g({3, 3});
    auto d = make_datum(g, {g.element({1, 0}), g.element({0, 1})},
                        {g.character({1, 0}), g.character({0, 1})}, A2());
    CHECK_THROWS_AS(validate_datum(d), datum_error);
    try {
        validate_datum(d);
    } catch (const datum_error& e) {
        CHECK(!e.issues.empty());
        CHECK(e.issues[0].find("Cartan condition") != std::string::npos);
        CHECK(e.issues[0].find("vs") != std::string::npos);
    }
}

TEST_CASE("even order rejected on multi-node components only") {
    // rank 1: even order allowed
    validate_datum(taft(2));
    validate_datum(taft(4));
    // rank 2: even order refused
    FiniteAbelianGroup g({4, 4});
    auto d = make_datum(g, {g.element({1, 0}), g.element({0, 1})},
                        {g.character({1, 3}), g.character({0, 1})}, A2());
    CHECK_THROWS_AS(validate_datum(d), datum_error);
}

TEST_CASE("nonzero lifting parameters are a hard error") {
    auto d = taft(3);
    d.linking.assign(1, std::vector<mpq_class>(1, mpq_class(1)));
    CHECK_THROWS_AS(validate_datum(d), datum_error);
    auto d2 = taft(3);
    d2.root_params.assign(1, mpq_class(2));
    try {
        validate_datum(d2);
        CHECK(false);
    } catch (const datum_error& e) {
        CHECK(e.issues[0].find("unsupported lifting") != std::string::npos);
    }
}

TEST_CASE("dual datum") {
    auto d = taft(3);
    auto dd = dual_datum(d);
    validate_datum(dd);
    CHECK(dd.group.pair(dd.chi[0], dd.g[0]) == d.group.pair(d.chi[0], d.g[0]));

    auto a2 = a2_33();
    auto a2d = dual_datum(a2);
    // double dual is the original under the hat identification
    auto a2dd = dual_datum(a2d);
    CHECK(a2dd.g == a2.g);
    CHECK(a2dd.chi == a2.chi);
    auto roots = attach_roots(a2);
    auto droots = attach_roots(a2d);
    CHECK(roots.N == droots.N);
}

TEST_CASE("double datum") {
    auto d = taft(3);
    auto dbl = double_datum(d);
    CHECK(dbl.datum.theta() == 2);
    CHECK(dbl.datum.group.invariants() == std::vector<long>{3, 3});
    CHECK(dbl.datum.cartan(0, 1) == 0);
    CHECK(dbl.datum.cartan(0, 0) == 2);
    CHECK(dbl.linking[0][1] == 1);
    CHECK(dbl.linking[1][0] == 0);

    auto a2 = a2_33();
    auto dbl2 = double_datum(a2);
    CHECK(dbl2.datum.theta() == 4);
    // lambda_{i, theta+i} = 1 only
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j)
            CHECK(dbl2.linking[i][j] == ((j == i + 2) ? mpq_class(1) : mpq_class(0)));
    // mixed pairs are non-adjacent with the Cartan condition trivially satisfied
    validate_datum(dbl2.datum);
    auto roots = attach_roots(dbl2.datum);
    CHECK(roots.pbw_count() == 729);  // 3^6 = N^{2p}
}

TEST_CASE("two parameter datum") {
    // A1, N=3, r=zeta3, s=1 gives the Taft datum
    auto d = two_param_datum(A1(), {1}, 3, 1, 0);
    validate_datum(d);
    CHECK(d.group.invariants() == std::vector<long>{3});
    CHECK(d.q_ii(0) == CycNum::zeta(3));

    // Euler form values for A2, d=(1,1)
    auto a2 = two_param_datum(A2(), {1, 1}, 3, 1, 2);
    validate_datum(a2);
    // <1,2> = -1, <2,1> = 0, so chi_1(g_2) = r^{-1} and chi_2(g_1) = s
    CHECK(a2.group.pair(a2.chi[0], a2.g[1]) == CycNum::zeta(3, -1));
    CHECK(a2.group.pair(a2.chi[1], a2.g[0]) == CycNum::zeta(3, 2));
    CHECK(a2.q_ii(0) == CycNum::zeta(3, 1 - 2));

    CHECK_THROWS_AS(two_param_datum(A2(), {1, 1}, 3, 1, 1), datum_error);  // r/s order 1
    CHECK(symmetrizers(B2()) == std::vector<int>{1, 2});
    CHECK(symmetrizers(G2()) == std::vector<int>{1, 3});
}
