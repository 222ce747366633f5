#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "coxdim/spine.hpp"
#include "oracles.hpp"

using namespace coxdim;

TEST_CASE("enumeration base cases") {
    CHECK(enumerate_trees(2).size() == 1);
    const auto r3 = enumerate_trees(3);
    CHECK(r3.size() == 4);
    // 3 paths (one per special middle vertex) and the trivial-center star.
    int stars = 0, paths = 0;
    for (const auto& t : r3) {
        if (t.trivial_count == 1)
            ++stars;
        else
            ++paths;
    }
    CHECK(stars == 1);
    CHECK(paths == 3);
    CHECK_THROWS_AS(enumerate_trees(1), InputError);
}

TEST_CASE("the star with a special center has degree vector (2,1,1)") {
    for (const auto& t : enumerate_trees(3)) {
        if (t.trivial_count != 0) continue;
        const auto deg = t.degrees();
        const int center = static_cast<int>(std::max_element(deg.begin(), deg.end()) -
                                            deg.begin());
        CHECK(deg[center] == 2);
        std::vector<int> sorted(deg.begin(), deg.begin() + t.special_count);
        std::sort(sorted.begin(), sorted.end());
        CHECK(sorted == std::vector<int>{1, 1, 2});
    }
}

TEST_CASE("enumeration matches the independent brute-force generator for r <= 4") {
    for (int r = 2; r <= 4; ++r)
        CHECK(enumerate_trees(r).size() == oracles::brute_force_tree_count(r));
}

TEST_CASE("canonical codes are distinct and validated") {
    const auto trees = enumerate_trees(4);
    std::set<std::string> codes;
    for (const auto& t : trees) {
        validate_tree(t);
        codes.insert(canonical_code(t));
    }
    CHECK(codes.size() == trees.size());
}

TEST_CASE("tree validation") {
    QuotientTree bad;
    bad.special_count = 2;
    bad.trivial_count = 1;
    bad.edges = {{0, 2}, {1, 2}};  // trivial vertex of degree 2
    CHECK_THROWS_AS(validate_tree(bad), InputError);

    QuotientTree cycle;
    cycle.special_count = 3;
    cycle.edges = {{0, 1}, {1, 2}, {0, 2}};
    CHECK_THROWS_AS(validate_tree(cycle), InputError);
}

TEST_CASE("cell bound data") {
    SUBCASE("r=3 star with a trivial center") {
        QuotientTree t;
        t.special_count = 3;
        t.trivial_count = 1;
        t.edges = {{0, 3}, {1, 3}, {2, 3}};
        const SpineCellBound b = cell_bound(t);
        CHECK(b.edge_count == 3);
        CHECK(b.forest_edges == 0);
        CHECK(b.forest_components == 1);
        CHECK(b.max_cell_dim == 1);
        CHECK(b.degree_vector == std::vector<int>{1, 1, 1});
    }
    SUBCASE("r=3 path with special middle") {
        QuotientTree t;
        t.special_count = 3;
        t.edges = {{0, 1}, {0, 2}};
        const SpineCellBound b = cell_bound(t);
        CHECK(b.edge_count == 2);
        CHECK(b.forest_components == 0);
        CHECK(b.max_cell_dim == 0);
    }
    SUBCASE("r=2 edge") {
        QuotientTree t;
        t.special_count = 2;
        t.edges = {{0, 1}};
        CHECK(cell_bound(t).max_cell_dim == 0);
    }
}

TEST_CASE("tree contraction identity holds over the enumeration") {
    for (int r = 2; r <= 5; ++r)
        enumerate_trees(r, [&](const QuotientTree& t) {
            const SpineCellBound b = cell_bound(t);
            CHECK(b.edge_count == b.forest_edges + b.forest_components + r - 1);
            CHECK(b.max_cell_dim == b.forest_edges + b.forest_components);
        });
}

TEST_CASE("stabilizer degree bound holds with equality cases") {
    for (int r = 2; r <= 5; ++r) {
        const StabBoundReport report = verify_stab_bound(r);
        CHECK(report.violations.empty());
        CHECK(report.equality_count >= 1);
        CHECK(report.tree_count == enumerate_trees(r).size());
    }
}

TEST_CASE("stabilizer shapes") {
    SUBCASE("r=3 star with special center") {
        QuotientTree t;
        t.special_count = 3;
        t.edges = {{0, 1}, {0, 2}};
        // wrong arity
        CHECK_THROWS_AS(stabilizer_shape(t, default_profiles(2)), InputError);
        const StabilizerShape s = stabilizer_shape(t, default_profiles(3));
        CHECK(s.degree_vector == std::vector<int>{2, 1, 1});
        CHECK(s.vcd_upper == 10);  // 3*4 - 3 + 1
        CHECK(s.bredon_cd == 12);
    }
    SUBCASE("r=2 edge recovers the Theorem 1.2 numbers") {
        QuotientTree t;
        t.special_count = 2;
        t.edges = {{0, 1}};
        const StabilizerShape s = stabilizer_shape(t, default_profiles(2));
        CHECK(s.vcd_upper == 5);
        CHECK(s.bredon_cd == 6);
    }
    SUBCASE("the special-center star achieves 6r-6") {
        for (int r = 2; r <= 6; ++r) {
            QuotientTree t;
            t.special_count = r;
            for (int i = 1; i < r; ++i) t.edges.emplace_back(0, i);
            const StabilizerShape s = stabilizer_shape(t, default_profiles(r));
            CHECK(s.bredon_cd == 6 * r - 6);
        }
    }
}

TEST_CASE("out dimension bounds match the closed forms") {
    for (int r = 2; r <= 6; ++r) {
        const OutBounds b = out_dimension_bounds(r);
        CHECK(b.vcd_upper == 5 * r - 5);
        CHECK(b.bredon_cd_lower == 6 * r - 6);
        CHECK(b.gap == r - 1);
    }
}

TEST_CASE("aut dimension bounds") {
    for (int r = 1; r <= 6; ++r) {
        const AutBounds b = aut_dimension_bounds(r + 1);  // r+1 factors
        CHECK(b.vcd_upper == 3 + 5 * r);
        CHECK(b.cd_lower == 6 * r);
    }
    CHECK(aut_dimension_bounds(2).vcd_upper == 8);
    CHECK(aut_dimension_bounds(2).cd_lower == 6);
    CHECK_THROWS_AS(aut_dimension_bounds(1), InputError);
}
