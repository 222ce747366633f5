#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coxdim/json_io.hpp"
#include "oracles.hpp"

using namespace coxdim;

TEST_CASE("graph JSON round trip") {
    const Json j = parse_json_text(
        R"({"vertices": ["a", "b", "c", "d"],
            "edges": [["a","b"], ["b","c"], ["c","d"], ["d","a"]]})");
    const Graph g = graph_from_json(j);
    CHECK(g.vertex_count() == 4);
    CHECK(g.edges().size() == 4);
    CHECK(graph_from_json(graph_to_json(g)) == g);
}

TEST_CASE("complex JSON round trip") {
    const SimplicialComplex k = oracles::projective_plane6();
    CHECK(complex_from_json(complex_to_json(k)) == k);
    const SimplicialComplex empty;
    CHECK(complex_from_json(complex_to_json(empty)) == empty);
}

TEST_CASE("malformed inputs raise input errors") {
    CHECK_THROWS_AS(parse_json_text("{nope"), InputError);
    CHECK_THROWS_AS(graph_from_json(parse_json_text("{}")), InputError);
    CHECK_THROWS_AS(graph_from_json(parse_json_text(
                        R"({"vertices": ["a"], "edges": [["a","a"]]})")),
                    InputError);
    CHECK_THROWS_AS(complex_from_json(parse_json_text(R"({"faces": []})")), InputError);
    CHECK_THROWS_AS(profiles_from_json(parse_json_text("[]")), InputError);
    CHECK_THROWS_AS(profiles_from_json(parse_json_text(R"([{"d": 3}])")), InputError);
}

TEST_CASE("profiles JSON") {
    const auto profiles =
        profiles_from_json(parse_json_text(R"([{"d":3,"exponent":3,"mult":1},
                                               {"d":3,"exponent":5}])"));
    REQUIRE(profiles.size() == 2);
    CHECK(profiles[0].top_dimension == 3);
    CHECK(profiles[0].top_group == cyclic(3));
    CHECK(profiles[1].multiplicity == 1);
}

TEST_CASE("spine reports are byte-deterministic across thread counts") {
    set_thread_budget(1);
    const std::string one = stab_report_to_json(verify_stab_bound(4)).dump(2);
    set_thread_budget(8);
    const std::string eight = stab_report_to_json(verify_stab_bound(4)).dump(2);
    set_thread_budget(0);
    CHECK(one == eight);
}

TEST_CASE("enumeration output order is canonical") {
    const auto trees = enumerate_trees(4);
    std::vector<std::string> codes;
    for (const auto& t : trees) codes.push_back(canonical_code(t));
    CHECK(std::is_sorted(codes.begin(), codes.end()));
    Json first = tree_to_json(trees.front());
    CHECK(first.contains("edges"));
}

TEST_CASE("report serialization is stable") {
    const ProductReport r = product_dimension_report({{3, cyclic(3), 1}, {3, cyclic(5), 1}});
    const std::string a = product_report_to_json(r).dump(2);
    const std::string b = product_report_to_json(
                              product_dimension_report({{3, cyclic(3), 1}, {3, cyclic(5), 1}}))
                              .dump(2);
    CHECK(a == b);
    CHECK(a.find("\"vcd_upper\": 5") != std::string::npos);
    CHECK(a.find("\"bredon_cd\": 6") != std::string::npos);
}
