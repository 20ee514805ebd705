#include <catch2/catch_amalgamated.hpp>

#include <cech/constructions.hpp>
#include <cech/flag.hpp>

#include "oracle.hpp"

using namespace cech;

TEST_CASE("flag complex of small cycles", "[flag]") {
    FlagComplex full = flag_complex(cycle_space(3, 1), 3);
    CHECK(full.count(0) == 3);
    CHECK(full.count(1) == 3);
    CHECK(full.count(2) == 1);
    CHECK(full.complete());

    FlagComplex square = flag_complex(cycle_space(4, 1), 3);
    CHECK(square.count(0) == 4);
    CHECK(square.count(1) == 4);
    CHECK(square.count(2) == 0);
    CHECK(square.complete());
}

TEST_CASE("flag complex of the octahedral cycle", "[flag]") {
    FinSpace z6 = cycle_space(6, 2);
    FlagComplex k = flag_complex(z6, 4);
    CHECK(k.count(0) == 6);
    CHECK(k.count(1) == 12);
    CHECK(k.count(2) == 8);
    CHECK(k.count(3) == 0);
    // independent subset enumeration agrees
    CHECK(oracle::cliques_of_size(z6, 2).size() == 12);
    CHECK(oracle::cliques_of_size(z6, 3).size() == 8);
    CHECK(oracle::cliques_of_size(z6, 4).empty());
}

TEST_CASE("directed spaces are rejected", "[flag]") {
    FinSpace directed = oracle::make_space({{0, 1}, {1}});
    CHECK_THROWS_AS(flag_complex(directed, 2), NotSymmetricError);
}

TEST_CASE("simplices are sorted and face-closed", "[flag][property]") {
    std::mt19937_64 rng(6174);
    for (int trial = 0; trial < 50; ++trial) {
        FinSpace space = oracle::random_space(rng, 10, true);
        FlagComplex k = flag_complex(space, 3);
        for (int d = 0; d <= k.built_dim(); ++d) {
            const auto& level = k.simplices(d);
            for (std::size_t i = 0; i + 1 < level.size(); ++i) CHECK(level[i] < level[i + 1]);
            if (d == 0) continue;
            for (const auto& s : level)
                for (std::size_t drop = 0; drop < s.size(); ++drop) {
                    std::vector<int> face;
                    for (std::size_t j = 0; j < s.size(); ++j)
                        if (j != drop) face.push_back(s[j]);
                    CHECK(k.simplex_index(d - 1, face) != -1);
                }
        }
        // counts match the independent enumeration
        for (int d = 0; d <= 3; ++d)
            CHECK(static_cast<std::size_t>(k.count(d)) == oracle::cliques_of_size(space, d + 1).size());
    }
}

TEST_CASE("boundary matrix conventions", "[flag]") {
    FinSpace z3 = cycle_space(3, 1);
    FlagComplex k = flag_complex(z3, 2);
    IntMatrix d2 = boundary_matrix(k, 2);
    REQUIRE(d2.rows() == 3);
    REQUIRE(d2.cols() == 1);
    // edges sorted: {0,1}, {0,2}, {1,2}; triangle {0,1,2} has faces
    // {1,2} - {0,2} + {0,1}
    CHECK(d2.at(0, 0) == 1);
    CHECK(d2.at(1, 0) == -1);
    CHECK(d2.at(2, 0) == 1);

    IntMatrix d1 = boundary_matrix(k, 1);
    // edge (u,v) with u < v maps to v - u
    int col = k.simplex_index(1, {0, 2});
    CHECK(d1.at(0, col) == -1);
    CHECK(d1.at(2, col) == 1);

    CHECK_THROWS_AS(boundary_matrix(k, 0), InvalidArgumentError);
    CHECK_THROWS_AS(boundary_matrix(k, 5), InvalidArgumentError);
}

TEST_CASE("boundary of boundary vanishes", "[flag][property]") {
    std::mt19937_64 rng(271828);
    for (int trial = 0; trial < 60; ++trial) {
        FinSpace space = oracle::random_space(rng, 12, true);
        FlagComplex k = flag_complex(space, 3);
        for (int d = 2; d <= k.built_dim(); ++d) {
            IntMatrix lower = boundary_matrix(k, d - 1);
            IntMatrix upper = boundary_matrix(k, d);
            CHECK((to_big(lower) * to_big(upper)).is_zero());
        }
    }
}

TEST_CASE("simplex budget yields a clean partial complex", "[flag]") {
    FinSpace z8 = cycle_space(8, 3);
    FlagOptions opts;
    opts.simplex_budget = 20; // room for 8 vertices + 8-ish edges only
    FlagComplex k = flag_complex(z8, 4, opts);
    CHECK(k.capped());
    CHECK(k.built_dim() == 0);
    CHECK(k.count(0) == 8);

    FlagOptions tiny;
    tiny.simplex_budget = 3;
    CHECK_THROWS_AS(flag_complex(z8, 4, tiny), BudgetExceededError);
}
