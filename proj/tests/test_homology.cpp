#include <catch2/catch_amalgamated.hpp>

#include <cech/constructions.hpp>
#include <cech/homology.hpp>
#include <cech/pi1.hpp>

#include "oracle.hpp"

using namespace cech;

TEST_CASE("homology of the small cycle families", "[homology]") {
    HomologySummary z7 = homology(cycle_space(7, 2), 3);
    CHECK(z7.group(0) == DegreeGroup{1, {}});
    CHECK(z7.group(1) == DegreeGroup{1, {}});
    CHECK(z7.group(2) == DegreeGroup{0, {}});
    CHECK(z7.group(3) == DegreeGroup{0, {}});

    HomologySummary z3 = homology(cycle_space(3, 1), 3);
    CHECK(z3.group(0) == DegreeGroup{1, {}});
    for (int d = 1; d <= 3; ++d) CHECK(z3.group(d) == DegreeGroup{0, {}});

    // the open case: the flag complex of (Z6, c2) is the octahedron
    HomologySummary z6 = homology(cycle_space(6, 2), 2);
    CHECK(z6.group(0) == DegreeGroup{1, {}});
    CHECK(z6.group(1) == DegreeGroup{0, {}});
    CHECK(z6.group(2) == DegreeGroup{1, {}});
    CHECK(oracle::betti(cycle_space(6, 2), 2) == std::vector<long long>{1, 0, 1});
}

TEST_CASE("reduced homology lowers degree zero by one", "[homology]") {
    HomologySummary plain = homology(cycle_space(5, 1), 1);
    HomologySummary reduced = homology(cycle_space(5, 1), 1, true);
    CHECK(plain.group(0).rank == 1);
    CHECK(reduced.group(0).rank == 0);
    CHECK(plain.group(1) == reduced.group(1));

    FinSpace two = coproduct(cycle_space(4, 1), cycle_space(4, 1));
    CHECK(homology(two, 0, true).group(0).rank == 1);
}

TEST_CASE("degree-zero rank counts path components", "[homology][property]") {
    std::mt19937_64 rng(31415);
    for (int trial = 0; trial < 60; ++trial) {
        FinSpace space = oracle::random_space(rng, 12, true);
        HomologySummary h = homology(space, 0);
        CHECK(h.group(0).rank == static_cast<long long>(path_components(space).size()));
    }
}

TEST_CASE("homology matches the independent oracle on random spaces", "[homology][property]") {
    std::mt19937_64 rng(2718);
    for (int trial = 0; trial < 40; ++trial) {
        FinSpace space = oracle::random_space(rng, 9, true);
        HomologySummary h = homology(space, 2);
        auto betti = oracle::betti(space, 2);
        for (int d = 0; d <= 2; ++d) CHECK(h.group(d).rank == betti[static_cast<std::size_t>(d)]);
    }
}

TEST_CASE("homology is a homeomorphism invariant", "[homology][property]") {
    std::mt19937_64 rng(999);
    for (int trial = 0; trial < 25; ++trial) {
        FinSpace space = oracle::random_space(rng, 10, true);
        if (space.empty()) continue;
        std::vector<int> perm(static_cast<std::size_t>(space.size()));
        for (int i = 0; i < space.size(); ++i) perm[static_cast<std::size_t>(i)] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(compare_homology(space, relabel(space, perm), 2).equal);
    }
}

TEST_CASE("euler characteristic identity on fully built complexes", "[homology][property]") {
    std::mt19937_64 rng(1618);
    for (int trial = 0; trial < 40; ++trial) {
        FinSpace space = oracle::random_space(rng, 10, true);
        FlagComplex k = flag_complex(space, space.size() + 1);
        REQUIRE(k.complete());
        HomologySummary h = homology_of_complex(k, std::max(0, k.built_dim()));
        long long chi_simplices = 0, chi_betti = 0;
        for (int d = 0; d <= k.built_dim(); ++d) {
            chi_simplices += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(k.count(d));
            chi_betti += (d % 2 == 0 ? 1 : -1) * h.group(d).rank;
        }
        CHECK(chi_simplices == chi_betti);
    }
}

TEST_CASE("degrees beyond the cap are not computed, never zero", "[homology]") {
    FinSpace z8 = cycle_space(8, 3);
    FlagOptions opts;
    opts.simplex_budget = 40; // vertices + edges fit, triangles do not
    FlagComplex k = flag_complex(z8, 4, opts);
    REQUIRE(k.capped());
    REQUIRE(k.built_dim() == 1);
    HomologySummary h = homology_of_complex(k, 3);
    CHECK(h.computed(0));
    CHECK_FALSE(h.computed(1));
    CHECK_FALSE(h.computed(2));
    CHECK_THROWS_AS(h.group(2), InvalidArgumentError);
    CHECK(h.stats.capped);
}

TEST_CASE("relative homology", "[homology]") {
    FinSpace z7 = cycle_space(7, 1);

    SECTION("A = X kills everything") {
        HomologySummary rel = relative_homology(z7, z7.all_points(), 2);
        for (int d = 0; d <= 2; ++d) CHECK(rel.group(d) == DegreeGroup{0, {}});
    }

    SECTION("A empty recovers absolute homology") {
        HomologySummary rel = relative_homology(z7, PointSet{}, 2);
        HomologySummary abs = homology(z7, 2);
        for (int d = 0; d <= 2; ++d) CHECK(rel.group(d) == abs.group(d));
    }

    SECTION("good pair: relative equals reduced homology of the quotient") {
        PointSet a{1, 2, 3, 4};
        HomologySummary rel = relative_homology(z7, a, 2);
        HomologySummary quot = homology(collapse(z7, a).space, 2, true);
        for (int d = 0; d <= 2; ++d) CHECK(rel.group(d) == quot.group(d));
    }
}

TEST_CASE("abelianized edge-path group", "[homology][pi1]") {
    CHECK(pi1_abelianized(cycle_space(4, 1)).single() == DegreeGroup{1, {}});
    CHECK(pi1_abelianized(cycle_space(3, 1)).single() == DegreeGroup{0, {}});

    WedgeResult w = wedge(cycle_space(7, 2), 0, cycle_space(7, 2), 0);
    CHECK(pi1_abelianized(w.space).single() == DegreeGroup{2, {}});

    // disconnected spaces report per component
    FinSpace sum = coproduct(cycle_space(4, 1), cycle_space(3, 1));
    Pi1Abelianized pi = pi1_abelianized(sum);
    REQUIRE(pi.components.size() == 2);
    CHECK(pi.components[0] == DegreeGroup{1, {}});
    CHECK(pi.components[1] == DegreeGroup{0, {}});
    CHECK_THROWS_AS(pi.single(), InvalidArgumentError);
}

TEST_CASE("hurewicz consistency on random symmetric spaces", "[homology][pi1][property]") {
    std::mt19937_64 rng(8128);
    int checked = 0;
    for (int trial = 0; trial < 60 && checked < 30; ++trial) {
        FinSpace space = oracle::random_space(rng, 10, true);
        if (space.empty() || path_components(space).size() != 1) continue;
        ++checked;
        CHECK(pi1_abelianized(space).single() == homology(space, 1).group(1));
    }
    REQUIRE(checked > 0);
}

TEST_CASE("compare homology flags truncated ranges", "[homology]") {
    FinSpace z5 = cycle_space(5, 1);
    CompareResult same = compare_homology(z5, cycle_space(9, 1), 3);
    CHECK(same.equal);
    CHECK(same.compared_through == 3);
    CHECK_FALSE(same.truncated);

    CompareResult differ = compare_homology(cycle_space(7, 2), cycle_space(6, 3), 1);
    CHECK_FALSE(differ.equal);

    FlagOptions small;
    small.simplex_budget = 40;
    FinSpace z8 = cycle_space(8, 3);
    CompareResult capped = compare_homology(z8, z8, 3, small);
    CHECK(capped.truncated);
    CHECK(capped.compared_through == 0);
    CHECK(capped.equal);
}

TEST_CASE("functoriality smoke test: continuous maps give chain maps", "[homology][property]") {
    std::mt19937_64 rng(141421);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 4 + static_cast<int>(rng() % 6);
        FinSpace z = cycle_space(n, 1);
        int shift = static_cast<int>(rng() % n);
        std::vector<int> rot(static_cast<std::size_t>(n));
        for (int x = 0; x < n; ++x) rot[static_cast<std::size_t>(x)] = (x + shift) % n;
        CMap f(z, z, rot);
        REQUIRE(is_continuous(f));

        FlagComplex k = flag_complex(z, 2);
        // induced simplicial map on edges: rotations keep simplices nondegenerate
        IntMatrix f1(k.count(1), k.count(1));
        std::vector<int> sign_fix;
        for (int e = 0; e < k.count(1); ++e) {
            auto uv = k.simplices(1)[static_cast<std::size_t>(e)];
            int a = f(uv[0]), b = f(uv[1]);
            int sign = 1;
            if (a > b) {
                std::swap(a, b);
                sign = -1;
            }
            f1.at(k.simplex_index(1, {a, b}), e) = sign;
        }
        IntMatrix f0(k.count(0), k.count(0));
        for (int v = 0; v < k.count(0); ++v) f0.at(f(v), v) = 1;
        IntMatrix d1 = boundary_matrix(k, 1);
        CHECK((to_big(f0) * to_big(d1)) == (to_big(d1) * to_big(f1)));
    }
}
