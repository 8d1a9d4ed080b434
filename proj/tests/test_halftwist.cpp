#include <doctest.h>

#include "braidlink/halftwist.hpp"
#include "braidlink/monodromy.hpp"

using namespace braidlink;

TEST_CASE("two-strand twists") {
    for (int i = 1; i <= 4; ++i) CHECK(compile(z(i, i + 1), 5).letters == std::vector<int>{i});
    CHECK(compile(zbar(1, 3, 2), 3).letters == std::vector<int>({-1, 2, 2, 1}));
    CHECK(compile(z(2, 4, 2), 4).letters == std::vector<int>({2, 3, 3, -2}));
    CHECK_THROWS_AS(compile(z(1, 5), 4), std::invalid_argument);
    CHECK_THROWS_AS(z(3, 2), std::invalid_argument);
}

TEST_CASE("negative powers invert") {
    for (int n = 3; n <= 6; ++n)
        for (int i = 1; i < n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                CHECK(equal(compile(z(i, j, -2), n), inverse(compile(z(i, j, 2), n))));
                CHECK(equal(compile(zbar(i, j, -1), n), inverse(compile(zbar(i, j), n))));
            }
    // doubled pairs too
    HalfTwistExpr e = twist({doubled_pair(1), doubled_pair(2)}, 2);
    HalfTwistExpr einv = twist({doubled_pair(1), doubled_pair(2)}, -2);
    CHECK(equal(compile(einv, 4), inverse(compile(e, 4))));
}

TEST_CASE("chains") {
    CHECK(compile(chain(1, 1), 2).letters == std::vector<int>{1});
    CHECK(compile(chain(2, 2), 4).letters == std::vector<int>({3, 2, 3}));
    // non-consecutive indices transport below the strands in between
    HalfTwistExpr t134 =
        twist({single_endpoint(1), single_endpoint(3), single_endpoint(4)}, 2);
    CHECK(compile(t134, 4).letters == std::vector<int>({1, 3, 2, 3, 3, 2, 3, -1}));
    for (int m = 3; m <= 5; ++m)
        CHECK(equal(compile(chain(1, m - 1, 2), m), full_twist(m)));
}

TEST_CASE("products, conjugates, inverses") {
    CHECK(compile(product({}), 3).letters.empty());
    BraidWord w = compile(conjugated(z(1, 2), z(2, 3, 2)), 3);
    CHECK(free_reduce(w).letters == std::vector<int>({-2, -2, 1, 2, 2}));
    HalfTwistExpr e = product({z(1, 2, 2), zbar(1, 3, 2), z(2, 3, 2)});
    CHECK(equal(compile(e, 3), braid(3, {1, 2, 2, 1, 2, 2})));
    CHECK(equal(compile(inverted(e), 3), inverse(compile(e, 3))));
    CHECK(equal(compile(powered(z(1, 2), 3), 2), braid(2, {1, 1, 1})));
    CHECK(equal(compile(powered(product({z(1, 2), z(2, 3)}), -1), 3), braid(3, {-2, -1})));
}

TEST_CASE("doubled labels") {
    CHECK(doubled_strand({1, false}) == 1);
    CHECK(doubled_strand({1, true}) == 2);
    CHECK(doubled_strand({3, true}) == 6);
    CHECK(doubled_strand({2, false}) == 3);
    CHECK(doubled_pair(2) == Endpoint{3, 2});
}

TEST_CASE("pair expansion matches the direct node products") {
    // both strands doubled: four plain nodes, nearer factors first
    HalfTwistExpr both = regenerate_node(1, 2, NodeRegenMode::both, 4);
    HalfTwistExpr direct =
        product({z(2, 4, 2), z(2, 3, 2), z(1, 4, 2), z(1, 3, 2)});
    CHECK(equal(compile(pair_expand(both), 4), compile(direct, 4)));
    CHECK(equal(compile(both, 4), compile(direct, 4)));

    HalfTwistExpr first = regenerate_node(1, 2, NodeRegenMode::first, 4);
    CHECK(equal(compile(first, 4), compile(product({z(2, 3, 2), z(1, 3, 2)}), 4)));
    HalfTwistExpr second = regenerate_node(1, 2, NodeRegenMode::second, 4);
    CHECK(equal(compile(second, 4), compile(product({z(1, 4, 2), z(1, 3, 2)}), 4)));

    CHECK_THROWS_AS(pair_expand(twist({doubled_pair(1), single_endpoint(3)}, 3)),
                    std::invalid_argument);
    CHECK_THROWS_AS(regenerate_node(1, 2, NodeRegenMode::both, 3), std::invalid_argument);
}

TEST_CASE("endpoint validation") {
    CHECK_THROWS_AS(compile(twist({single_endpoint(2)}, 1), 3), std::invalid_argument);
    CHECK_THROWS_AS(compile(twist({Endpoint{1, 2}, Endpoint{2, 1}}, 2), 4),
                    std::invalid_argument);
    CHECK_THROWS_AS(compile(twist({Endpoint{3, 2}, Endpoint{1, 1}}, 2), 4),
                    std::invalid_argument);
}

TEST_CASE("literal words") {
    BraidWord w = braid(3, {1, -2});
    CHECK(compile(letters(w), 5).letters == w.letters);
    CHECK(compile(letters(w), 5).strands == 5);
    CHECK_THROWS_AS(compile(letters(braid(6, {5})), 4), std::invalid_argument);
    CHECK(compile(generator(-3), 4).letters == std::vector<int>{-3});
}
