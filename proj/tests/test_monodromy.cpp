#include <doctest.h>

#include "braidlink/links.hpp"
#include "braidlink/monodromy.hpp"
#include "braidlink/parse.hpp"

using namespace braidlink;

namespace {

DegenerationDiagram square_with_two_diagonals() {
    // the six-vertex degeneration with edges e1 (diagonal), e2 (vertical),
    // e3 (diagonal); only the separating lines are listed
    DegenerationDiagram d;
    d.vertices = {{0, 0}, {2, 0}, {4, 0}, {0, 2}, {2, 2}, {4, 2}};
    d.edges = {{0, 4, EdgeKind::diagonal},
               {1, 4, EdgeKind::vertical},
               {1, 5, EdgeKind::diagonal}};
    return d;
}

DegenerationDiagram pillow_quotient() {
    // two 2x2 grids of triangulated squares with identified boundaries; the
    // corner vertices carry one diagonal each
    DegenerationDiagram d;
    d.vertices = {{0, 4}, {2, 4}, {4, 4}, {0, 2}, {4, 2},
                  {0, 0}, {2, 0}, {4, 0}, {2, 2}, {6, 2}};
    auto E = [&d](int a, int b, EdgeKind k) { d.edges.push_back({a, b, k}); };
    // shared boundary
    E(5, 6, EdgeKind::horizontal);
    E(6, 7, EdgeKind::horizontal);
    E(5, 3, EdgeKind::vertical);
    E(3, 0, EdgeKind::vertical);
    E(7, 4, EdgeKind::vertical);
    E(4, 2, EdgeKind::vertical);
    E(0, 1, EdgeKind::horizontal);
    E(1, 2, EdgeKind::horizontal);
    // front piece interior (vertex 8)
    E(6, 8, EdgeKind::vertical);
    E(8, 1, EdgeKind::vertical);
    E(3, 8, EdgeKind::horizontal);
    E(8, 4, EdgeKind::horizontal);
    E(5, 8, EdgeKind::diagonal);
    E(6, 4, EdgeKind::diagonal);
    E(3, 1, EdgeKind::diagonal);
    E(8, 2, EdgeKind::diagonal);
    // back piece interior (vertex 9)
    E(6, 9, EdgeKind::vertical);
    E(9, 1, EdgeKind::vertical);
    E(3, 9, EdgeKind::horizontal);
    E(9, 4, EdgeKind::horizontal);
    E(3, 6, EdgeKind::diagonal);
    E(9, 7, EdgeKind::diagonal);
    E(4, 1, EdgeKind::diagonal);
    E(9, 0, EdgeKind::diagonal);
    return d;
}

DegenerationDiagram toric_example() {
    // square plus a top triangle; the interior lines meet at one 3-point
    // with two diagonals and one 4-point
    DegenerationDiagram d;
    d.vertices = {{0, 0}, {2, 0}, {4, 0}, {0, 2}, {2, 2}, {4, 2}, {2, 4}};
    d.edges = {{1, 3, EdgeKind::diagonal}, {1, 5, EdgeKind::diagonal},
               {1, 4, EdgeKind::vertical}, {4, 6, EdgeKind::vertical},
               {3, 4, EdgeKind::horizontal}, {4, 5, EdgeKind::horizontal}};
    return d;
}

}  // namespace

TEST_CASE("generic line arrangements") {
    CHECK_THROWS_AS(generic_line_factorization(1), std::invalid_argument);
    Factorization f2 = generic_line_factorization(2);
    REQUIRE(f2.factors.size() == 1);
    CHECK(f2.factors[0].second.letters == std::vector<int>({1, 1}));
    for (int m = 3; m <= 5; ++m)
        CHECK(equal(table_product(generic_line_factorization(m)), full_twist(m)));
    CHECK(generic_line_factorization(4).factors.size() == 6);
    CHECK(exponent_sum(table_product(generic_line_factorization(4))) == 12);
    CHECK(permutation_image(full_twist(5)).is_identity());
}

TEST_CASE("table products") {
    Factorization empty{3, {}};
    CHECK(table_product(empty).letters.empty());
    const auto& triangle = builtin("triangle");
    BraidWord p = table_product(factorization_of(triangle.config));
    CHECK(p.letters == std::vector<int>({1, 2, 2, 1, 2, 2}));  // reduces letter for letter
    const auto& four = builtin("four-lines");
    CHECK(equal(table_product(factorization_of(four.config)), *four.stated_product));
}

TEST_CASE("singularity types") {
    CHECK(monodromy_exponent({SingularityKind::branch, 2}) == 1);
    CHECK(monodromy_exponent({SingularityKind::node, 2}) == 2);
    CHECK(monodromy_exponent({SingularityKind::cusp, 2}) == 3);
    CHECK(monodromy_exponent({SingularityKind::tangency, 2}) == 4);
    CHECK(monodromy_exponent({SingularityKind::multi_point, 3}) == 2);
    CHECK(singularity_kind_from_string("tangency") == SingularityKind::tangency);
    CHECK_THROWS_AS(singularity_kind_from_string("bogus"), std::invalid_argument);
}

TEST_CASE("per-singularity degrees add up") {
    for (const auto& name : builtin_names()) {
        const auto& ex = builtin(name);
        Factorization f = factorization_of(ex.config);
        int expected = 0;
        size_t fi = 0;
        for (const auto& s : ex.config.singularities) {
            if (s.type.kind == SingularityKind::node_at_infinity) continue;
            // a k-fold point twists each of its C(k,2) pairs twice
            int deg = s.type.kind == SingularityKind::multi_point
                          ? s.type.multiplicity * (s.type.multiplicity - 1)
                          : monodromy_exponent(s.type);
            expected += deg;
            REQUIRE(fi < f.factors.size());
            CHECK(exponent_sum(f.factors[fi].second) == deg);
            ++fi;
        }
        CHECK(exponent_sum(table_product(f)) == expected);
    }
}

TEST_CASE("regenerated tangency degree") {
    auto cusps = regenerate_tangency(1, 2, TangencySide::left, 4);
    int total = 0;
    for (const auto& e : cusps) total += exponent_sum(compile(e, 4));
    CHECK(total == 9);
    CHECK_THROWS_AS(regenerate_tangency(1, 2, TangencySide::left, 3), std::invalid_argument);
}

TEST_CASE("two point cases") {
    BraidWord pa = table_product(two_point_factorization(TwoPointCase::A));
    CHECK(equal(pa, two_point_product(TwoPointCase::A)));
    CHECK(two_point_factorization(TwoPointCase::A).factors.size() == 4);
    CHECK(exponent_sum(pa) == 10);
}

TEST_CASE("three point factor lists") {
    CHECK(three_point_type1_factorization(ThreePointCase::A).factors.size() == 11);
    CHECK(three_point_type2_factorization().factors.size() == 12);
    CHECK(!three_point_type1_product(ThreePointCase::C).has_value());
    CHECK(three_point_type1_product(ThreePointCase::B)->letters.size() == 27);
}

TEST_CASE("builtin registry") {
    const auto& names = builtin_names();
    for (const char* want : {"triangle", "four-lines", "conic-line-A", "conic-line-B",
                             "two-conics-A", "two-conics-B", "2pt-A", "2pt-B", "3pt1-A",
                             "3pt1-B", "3pt1-C", "3pt-type2"})
        CHECK(std::find(names.begin(), names.end(), want) != names.end());
    CHECK_THROWS_AS(builtin("nope"), std::invalid_argument);
    CHECK(configuration_strands(builtin("conic-line-A").config) == 3);
    CHECK(configuration_strands(builtin("3pt-type2").config) == 6);
}

TEST_CASE("vertex and line orders") {
    DegenerationDiagram d = square_with_two_diagonals();
    auto vorder = lex_order_vertices(d);
    CHECK(vorder == std::vector<int>({0, 1, 2, 3, 4, 5}));
    auto lorder = lex_order_lines(d, vorder);
    CHECK(lorder == std::vector<int>({0, 1, 2}));

    DegenerationDiagram single;
    single.vertices = {{3, 1}};
    CHECK(lex_order_vertices(single) == std::vector<int>({0}));

    DegenerationDiagram grid;
    grid.vertices = {{1, 1}, {0, 0}, {0, 1}, {1, 0}};
    CHECK(lex_order_vertices(grid) == std::vector<int>({1, 3, 2, 0}));

    DegenerationDiagram dup;
    dup.vertices = {{0, 0}, {0, 0}};
    CHECK_THROWS_AS(lex_order_vertices(dup), std::invalid_argument);

    // two edges sharing the top vertex order by their bottom vertices
    DegenerationDiagram shared;
    shared.vertices = {{0, 0}, {2, 0}, {1, 2}};
    shared.edges = {{1, 2, EdgeKind::diagonal}, {0, 2, EdgeKind::diagonal}};
    CHECK(lex_order_lines(shared, lex_order_vertices(shared)) == std::vector<int>({1, 0}));
}

TEST_CASE("k-point classification") {
    auto points = classify_k_points(square_with_two_diagonals());
    int two_points = 0;
    for (const auto& p : points)
        if (p.type == KPointType::two_point) ++two_points;
    CHECK(two_points == 2);

    auto pillow = classify_k_points(pillow_quotient());
    int corner_type1 = 0;
    for (const auto& p : pillow) {
        if (p.vertex == 0 || p.vertex == 2 || p.vertex == 5 || p.vertex == 7) {
            CHECK(p.type == KPointType::three_point_type1);
            ++corner_type1;
        }
    }
    CHECK(corner_type1 == 4);

    auto toric = classify_k_points(toric_example());
    bool found = false;
    for (const auto& p : toric)
        if (p.vertex == 1) {
            found = true;
            CHECK(p.count == 3);
            CHECK(p.type == KPointType::three_point_type2);
        }
    CHECK(found);

    DegenerationDiagram bad;
    bad.vertices = {{0, 0}, {1, 1}, {2, 0}, {0, 2}};
    bad.edges = {{0, 1, EdgeKind::diagonal},
                 {1, 2, EdgeKind::diagonal},
                 {1, 3, EdgeKind::diagonal}};
    CHECK_THROWS_AS(classify_k_points(bad), std::invalid_argument);
}

TEST_CASE("diagram regeneration") {
    auto regens = regenerate_diagram(square_with_two_diagonals());
    REQUIRE(regens.size() == 2);
    // vertex 1 sees the vertical line before its diagonal; vertex 4 the
    // diagonal first
    CHECK(regens[0].point.vertex == 1);
    CHECK(regens[0].variant == "B");
    CHECK(equal(table_product(regens[0].local), two_point_product(TwoPointCase::B)));
    CHECK(regens[1].point.vertex == 4);
    CHECK(regens[1].variant == "A");
    CHECK(equal(table_product(regens[1].local), two_point_product(TwoPointCase::A)));

    CHECK_THROWS_AS(regenerate_diagram(pillow_quotient()), unsupported_feature);

    DegenerationDiagram five;
    five.vertices = {{2, 2}, {0, 0}, {4, 0}, {0, 4}, {4, 4}, {2, 0}};
    five.edges = {{0, 1, EdgeKind::diagonal},
                  {0, 2, EdgeKind::diagonal},
                  {0, 3, EdgeKind::diagonal},
                  {0, 4, EdgeKind::diagonal},
                  {0, 5, EdgeKind::vertical}};
    CHECK_THROWS_AS(regenerate_diagram(five), unsupported_feature);
}
