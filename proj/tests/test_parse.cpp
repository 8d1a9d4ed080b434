#include <doctest.h>

#include <nlohmann/json.hpp>

#include "braidlink/monodromy.hpp"
#include "braidlink/parse.hpp"
#include "braidlink/suite.hpp"

using namespace braidlink;

TEST_CASE("braid word text") {
    BraidWord w = parse_braid_word("s1 s2^-1 s1", 3);
    CHECK(w.letters == std::vector<int>({1, -2, 1}));
    CHECK(parse_braid_word("", 2).letters.empty());
    CHECK(parse_braid_word("n=4 s3", 0).strands == 4);
    CHECK(parse_braid_word("n=4 s3", 4).strands == 4);
    CHECK(parse_braid_word("s2^3", 3).letters == std::vector<int>({2, 2, 2}));
    CHECK_THROWS_AS(parse_braid_word("n=3 s1", 4), parse_error);
    CHECK_THROWS_AS(parse_braid_word("x1", 3), parse_error);
    CHECK_THROWS_AS(parse_braid_word("s1", 0), parse_error);
    CHECK_THROWS_AS(parse_braid_word("s7", 3), std::invalid_argument);
}

TEST_CASE("expression grammar") {
    CHECK(eval_text("", 3).letters.empty());
    CHECK(eval_text("s1 s2^-1", 3).letters == std::vector<int>({1, -2}));
    CHECK(equal(eval_text("Z[1,2]^2 Zb[1,3]^2 Z[2,3]^2", 3),
                parse_braid_word("s1 s2 s2 s1 s2 s2", 3)));
    CHECK(eval_text("Z[1..3]", 3) == compile(chain(1, 2), 3));
    CHECK(eval_text("Z[1,2..3]", 3) == compile(chain(1, 2), 3));
    CHECK(eval_text("(Z[1,2] Z[2,3])^-1", 3).letters == std::vector<int>({-2, -1}));
    CHECK(eval_text("Z[1,2]^2^2", 2).letters == std::vector<int>({1, 1, 1, 1}));

    // conjugation braces: the worked four-strand example, letter for letter
    BraidWord w = free_reduce(eval_text("Z[1,2] ^ { Z[2,4]^2 Z[2,3]^2 }", 4));
    CHECK(w.letters == std::vector<int>({-2, -3, -3, -2, 1, 2, 3, 3, 2}));

    // primes switch every index to component labels
    CHECK(eval_text("Z[1 1',2 2']^2", 4) ==
          compile(regenerate_node(1, 2, NodeRegenMode::both, 4), 4));
    CHECK(eval_text("Z[1',2]^2", 4) == compile(z(2, 3, 2), 4));
    CHECK(eval_text("Z[2',3]^2", 6) == compile(z(4, 5, 2), 6));

    CHECK_THROWS_AS(eval_text("Z[1", 3), parse_error);
    CHECK_THROWS_AS(eval_text("Z[1,1]", 3), std::invalid_argument);
    // endpoints may be written in either order, as the source notation does
    CHECK(eval_text("Z[2,1]", 3) == eval_text("Z[1,2]", 3));
    CHECK_THROWS_AS(eval_text("Q[1,2]", 3), parse_error);
    CHECK_THROWS_AS(eval_text("Z[1,2] ^ { Z[1,2]", 3), parse_error);
    CHECK_THROWS_AS(eval_text("Z[1 2,3]", 4), parse_error);
    CHECK_THROWS_AS(eval_text("Z[3..2]", 4), parse_error);
}

TEST_CASE("formatting") {
    CHECK(word_str(braid(3, {1, -2})) == "s1 s2^-1");
    CHECK(word_str(braid(3, {})) == "e");
    CHECK(permutation_str(permutation_image(braid(2, {1}))) == "(1 2)");
    CHECK(permutation_str(permutation_image(braid(3, {}))) == "id");
    CHECK(normal_form_str(normal_form(braid(3, {1, 2, 1}))) == "D^1");
    CHECK(normal_form_str(normal_form(braid(2, {}))) == "D^0");
    CHECK(normal_form_str(normal_form(braid(2, {1}))) == "D^1");
    CHECK(normal_form_str(normal_form(braid(3, {1}))) == "D^0 [s1]");
}

TEST_CASE("configuration json") {
    nlohmann::json doc = nlohmann::json::parse(R"({
        "name": "triangle",
        "components": [
            {"kind": "line", "label": "1"},
            {"kind": "line", "label": "2"},
            {"kind": "line", "label": "3"}
        ],
        "singularities": [
            {"type": "node", "incident": ["1", "2"], "expr": "Z[1,2]^2"},
            {"type": "node", "incident": ["1", "3"], "expr": "Zb[1,3]^2"},
            {"type": "node", "incident": ["2", "3"], "expr": "Z[2,3]^2"}
        ]
    })");
    Configuration c = configuration_from_json(doc);
    CHECK(configuration_strands(c) == 3);
    BraidWord p = table_product(factorization_of(c));
    CHECK(p.letters == std::vector<int>({1, 2, 2, 1, 2, 2}));

    nlohmann::json bad = doc;
    bad["singularities"][0]["expr"] = "Z[1";
    CHECK_THROWS_AS(configuration_from_json(bad), std::invalid_argument);
    nlohmann::json bad2 = doc;
    bad2["components"][0]["kind"] = "circle";
    CHECK_THROWS_AS(configuration_from_json(bad2), std::invalid_argument);
}

TEST_CASE("diagram json") {
    nlohmann::json doc = nlohmann::json::parse(R"({
        "vertices": [[0,0],[2,0],[4,0],[0,2],[2,2],[4,2]],
        "edges": [[0,4,"diag"],[1,4,"vert"],[1,5,"diag"]]
    })");
    DegenerationDiagram d = diagram_from_json(doc);
    CHECK(d.vertices.size() == 6);
    CHECK(d.edges[0].kind == EdgeKind::diagonal);
    auto points = classify_k_points(d);
    int twos = 0;
    for (const auto& p : points) twos += p.type == KPointType::two_point;
    CHECK(twos == 2);
    nlohmann::json bad = doc;
    bad["edges"][0][2] = "slanted";
    CHECK_THROWS_AS(diagram_from_json(bad), std::invalid_argument);
}

TEST_CASE("summary serialization") {
    LinkSummary s = summarize(braid(2, {1, 1}));
    auto j = summary_to_json(s);
    CHECK(j["components"].size() == 2);
    CHECK(j["jones"]["1/2"] == -1);
    CHECK(j["jones"]["5/2"] == -1);
    CHECK(j["atlas_match"] == "L2a1");
    CHECK(j["linking_matrix"][0][1] == 1);
}

TEST_CASE("reports are deterministic") {
    auto r1 = run_suite("prop16", 1);
    auto r2 = run_suite("prop16", 2);
    CHECK(r1.size() == 2);
    CHECK(suite_report_json(r1).dump() == suite_report_json(r2).dump());
    auto s1 = summary_to_json(summarize(braid(4, {2, 3, 3, 2, 1, 3, 2, 3, 3, 2})));
    auto s2 = summary_to_json(summarize(braid(4, {2, 3, 3, 2, 1, 3, 2, 3, 3, 2})));
    CHECK(s1.dump() == s2.dump());
}

TEST_CASE("suite filters") {
    CHECK(run_suite("none-matching", 1).empty());
    CHECK(run_suite("corollary", 1).size() == 1);
    CHECK(suite_rows().size() >= 25);
}
