#include <catch2/catch_amalgamated.hpp>

#include <cech/homology.hpp>
#include <cech/homotopy.hpp>
#include <cech/theorems.hpp>

#include "oracle.hpp"

using namespace cech;

TEST_CASE("the 4-cycle cover example", "[homotopy]") {
    FinSpace z4 = cycle_space(4, 1);
    PointSet a{0, 1, 3}, b{1, 2, 3};

    InteriorCoverResult two = is_interior_cover(Cover{z4, {{"A", a}, {"B", b}}});
    CHECK_FALSE(two.is_interior);
    REQUIRE(two.witness.has_value());
    CHECK((*two.witness == 1 || *two.witness == 3));

    InteriorCoverResult four = is_interior_cover(
        Cover{z4, {{"A", a}, {"B", b}, {"C", {2, 3, 0}}, {"D", {3, 0, 1}}}});
    CHECK(four.is_interior);

    CHECK_THROWS_AS(is_interior_cover(Cover{z4, {{"A", a}}}), NotACoverError);
}

TEST_CASE("two-arc cover of the 13-cycle is interior", "[homotopy]") {
    auto [a, b] = six_m_arcs(13, 2);
    InteriorCoverResult r = is_interior_cover(Cover{cycle_space(13, 2), {{"A", a}, {"B", b}}});
    CHECK(r.is_interior);
}

TEST_CASE("interior cover verdicts are monotone under enlarging sets", "[homotopy][property]") {
    std::mt19937_64 rng(606);
    for (int trial = 0; trial < 80; ++trial) {
        FinSpace space = oracle::random_space(rng, 8, trial % 2 == 0);
        if (space.empty()) continue;
        PointSet a = oracle::random_subset(rng, space.size());
        PointSet b = set_difference(space.all_points(), a);
        Cover cover{space, {{"A", a}, {"B", b}}};
        InteriorCoverResult before = is_interior_cover(cover);
        if (!before.is_interior) continue;
        PointSet bigger = set_union(a, oracle::random_subset(rng, space.size()));
        CHECK(is_interior_cover(Cover{space, {{"A", bigger}, {"B", b}}}).is_interior);
    }
}

TEST_CASE("in a topological space every open cover is interior", "[homotopy][property]") {
    std::mt19937_64 rng(707);
    for (int trial = 0; trial < 60; ++trial) {
        // transitive closure of a random reflexive digraph is idempotent
        FinSpace raw = oracle::random_space(rng, 7, false);
        if (raw.empty()) continue;
        std::vector<std::vector<int>> reach(static_cast<std::size_t>(raw.size()));
        for (int x = 0; x < raw.size(); ++x) {
            PointSet frontier{x};
            PointSet seen{x};
            while (!frontier.empty()) {
                PointSet next;
                for (int y : frontier) next = set_union(next, raw.point_closure(y));
                frontier = set_difference(next, seen);
                seen = set_union(seen, next);
            }
            reach[static_cast<std::size_t>(x)] = seen.points();
        }
        FinSpace space(std::move(reach));
        REQUIRE(space.is_idempotent());

        // minimal neighborhoods are open in an idempotent space and cover it
        Cover cover{space, {}};
        for (int x = 0; x < space.size(); ++x) {
            PointSet nx = smallest_neighborhood(space, x);
            CHECK(is_open(space, nx));
            cover.sets.emplace_back("N" + std::to_string(x), nx);
        }
        CHECK(is_interior_cover(cover).is_interior);
    }
}

TEST_CASE("one-step homotopy basics", "[homotopy]") {
    FinSpace j5 = interval_space(5, 2);
    CMap id = identity_map(j5);
    CHECK(one_step_homotopic(id, id));

    // retraction peeling the top point of the interval
    std::vector<int> img{0, 1, 2, 3, 4, 4};
    CMap peel(j5, j5, img);
    CHECK(one_step_homotopic(id, peel));
    CHECK(one_step_homotopic(peel, id)); // symmetric

    FinSpace z8 = cycle_space(8, 1);
    CMap c0 = constant_map(z8, z8, 0);
    CMap c4 = constant_map(z8, z8, 4);
    CHECK_FALSE(one_step_homotopic(c0, c4));
    // cross-check: the 8-cycle is not contractible, its first homology is Z
    CHECK(homology(z8, 1).group(1) == DegreeGroup{1, {}});

    CHECK_THROWS_AS(one_step_homotopic(c0, identity_map(j5)), InvalidArgumentError);
}

TEST_CASE("retraction chains", "[homotopy]") {
    SECTION("single peel of the interval") {
        FinSpace j6 = interval_space(6, 2);
        RetractionChain rc = interval_peel_chain(j6, 0, 5);
        REQUIRE(rc.steps.size() == 1);
        CHECK(verify_retraction_chain(rc).ok);
    }

    SECTION("chain of single-point peels down to a short interval") {
        FinSpace j9 = interval_space(9, 1);
        RetractionChain rc = interval_peel_chain(j9, 0, 3);
        REQUIRE(rc.steps.size() == 6);
        CHECK(verify_retraction_chain(rc).ok);
    }

    SECTION("peeling from both ends") {
        FinSpace j7 = interval_space(7, 1);
        RetractionChain rc = interval_peel_chain(j7, 2, 5);
        CHECK(verify_retraction_chain(rc).ok);
    }

    SECTION("a chain moving a target point fails") {
        FinSpace j4 = interval_space(4, 1);
        RetractionChain rc;
        rc.space = j4;
        rc.target = PointSet{0, 1, 2, 3, 4};
        std::vector<int> img{0, 1, 2, 3, 3};
        rc.steps.emplace_back(j4, j4, img);
        ChainVerdict v = verify_retraction_chain(rc);
        CHECK_FALSE(v.ok);
        CHECK(v.failed_step == 0);
    }

    SECTION("empty chain certifies the identity retraction") {
        FinSpace z5 = cycle_space(5, 1);
        RetractionChain rc{z5, z5.all_points(), {}};
        CHECK(verify_retraction_chain(rc).ok);
    }

    SECTION("discontinuous step is reported with its index") {
        FinSpace z6 = cycle_space(6, 1);
        RetractionChain rc;
        rc.space = z6;
        rc.target = PointSet{0, 1, 2, 3, 4};
        rc.steps.emplace_back(z6, z6, std::vector<int>{0, 1, 2, 3, 4, 5});
        rc.steps.emplace_back(z6, z6, std::vector<int>{0, 1, 2, 3, 4, 2}); // tears 5 over to 2
        ChainVerdict v = verify_retraction_chain(rc);
        CHECK_FALSE(v.ok);
        CHECK(v.failed_step == 1);
        CHECK(v.reason.find("not continuous") != std::string::npos);
    }

    SECTION("one-shot collapse of the cycle is not certified") {
        FinSpace z6 = cycle_space(6, 1);
        RetractionChain rc;
        rc.space = z6;
        rc.target = PointSet{0};
        rc.steps.emplace_back(constant_map(z6, z6, 0)); // continuous, but not a homotopy step
        ChainVerdict v = verify_retraction_chain(rc);
        CHECK_FALSE(v.ok);
        CHECK(v.failed_step == 0);
    }
}

TEST_CASE("certified retractions preserve flag homology", "[homotopy][property]") {
    // homotopy invariance consistency: when a chain certifies a deformation
    // retraction, the flag homology of the space and the target must agree.
    for (int n : {5, 7, 9}) {
        FinSpace jn = interval_space(n, 1);
        RetractionChain rc = interval_peel_chain(jn, 0, 2);
        REQUIRE(verify_retraction_chain(rc).ok);
        HomologySummary whole = homology(jn, 2);
        HomologySummary target = homology(subspace(jn, rc.target), 2);
        for (int d = 0; d <= 2; ++d) CHECK(whole.group(d) == target.group(d));
    }
}

TEST_CASE("good pairs", "[homotopy]") {
    SECTION("arc pair inside the radius-1 cycle") {
        const int n = 9;
        FinSpace zn = cycle_space(n, 1);
        std::vector<int> a_pts, b_pts;
        for (int i = 1; i <= n - 3; ++i) a_pts.push_back(i);
        for (int i = 0; i <= n - 2; ++i) b_pts.push_back(i);
        PointSet a(a_pts), b(b_pts);
        CHECK(interior(zn, b) == a);

        FinSpace sub = subspace(zn, b); // a path 0..n-2
        RetractionChain rc = interval_peel_chain(sub, 1, n - 3);
        CHECK(good_pair_witness(zn, a, b, rc).ok);
    }

    SECTION("the whole space with the empty chain") {
        FinSpace z6 = cycle_space(6, 2);
        RetractionChain rc{subspace(z6, z6.all_points()), z6.all_points(), {}};
        CHECK(good_pair_witness(z6, z6.all_points(), z6.all_points(), rc).ok);
    }

    SECTION("B must be a neighborhood of A") {
        FinSpace z8 = cycle_space(8, 1);
        PointSet a{0, 1}, b{0, 1, 2}; // interior of B is {1} which misses 0
        RetractionChain rc{subspace(z8, b), PointSet{0, 1}, {}};
        ChainVerdict v = good_pair_witness(z8, a, b, rc);
        CHECK_FALSE(v.ok);
        CHECK(v.reason.find("not a neighborhood") != std::string::npos);
    }
}
