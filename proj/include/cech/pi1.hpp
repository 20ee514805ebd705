#pragma once

#include <utility>
#include <vector>

#include "flag.hpp"
#include "homology.hpp"
#include "matrix.hpp"

namespace cech {

/// Abelianized edge-path group of a flag complex, one entry per connected
/// component: generators are the non-tree edges of a spanning tree, relators
/// the triangle boundaries with tree edges killed, reduced by Smith normal
/// form.
struct Pi1Abelianized {
    std::vector<DegreeGroup> components;

    bool connected() const { return components.size() == 1; }

    const DegreeGroup& single() const {
        if (!connected())
            throw InvalidArgumentError("complex is not connected; inspect per-component results");
        return components.front();
    }
};

inline Pi1Abelianized pi1_abelianized(const FlagComplex& k) {
    if (k.built_dim() < 2 && !k.complete())
        throw InvalidArgumentError("edge-path presentation needs the complex built through dimension 2");

    const int n = k.vertex_count();
    const auto& edges = k.simplices(1);
    const auto& triangles = k.simplices(2);

    // Components of the 1-skeleton.
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    int comp_count = 0;
    std::vector<std::vector<std::pair<int, int>>> incident(static_cast<std::size_t>(n));
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
        const auto& uv = edges[static_cast<std::size_t>(e)];
        incident[static_cast<std::size_t>(uv[0])].push_back({uv[1], e});
        incident[static_cast<std::size_t>(uv[1])].push_back({uv[0], e});
    }
    std::vector<char> tree_edge(edges.size(), 0);
    for (int root = 0; root < n; ++root) {
        if (comp[static_cast<std::size_t>(root)] != -1) continue;
        comp[static_cast<std::size_t>(root)] = comp_count;
        std::vector<int> queue{root};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int x = queue[head];
            for (auto [y, e] : incident[static_cast<std::size_t>(x)]) {
                if (comp[static_cast<std::size_t>(y)] != -1) continue;
                comp[static_cast<std::size_t>(y)] = comp_count;
                tree_edge[static_cast<std::size_t>(e)] = 1;
                queue.push_back(y);
            }
        }
        ++comp_count;
    }

    // Generator index per non-tree edge, numbered within its component.
    std::vector<int> gen_of(edges.size(), -1);
    std::vector<int> gens_in(static_cast<std::size_t>(comp_count), 0);
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
        if (tree_edge[static_cast<std::size_t>(e)]) continue;
        int c = comp[static_cast<std::size_t>(edges[static_cast<std::size_t>(e)][0])];
        gen_of[static_cast<std::size_t>(e)] = gens_in[static_cast<std::size_t>(c)]++;
    }

    std::vector<std::vector<std::vector<long long>>> relators(
        static_cast<std::size_t>(comp_count));
    auto edge_index = [&](int u, int v) { return k.simplex_index(1, {u, v}); };
    for (const auto& t : triangles) {
        const int c = comp[static_cast<std::size_t>(t[0])];
        // boundary word of {u<v<w}: +uv +vw -uw, with tree edges contributing 0
        std::vector<long long> row(static_cast<std::size_t>(gens_in[static_cast<std::size_t>(c)]), 0);
        auto put = [&](int u, int v, long long sign) {
            int g = gen_of[static_cast<std::size_t>(edge_index(u, v))];
            if (g != -1) row[static_cast<std::size_t>(g)] += sign;
        };
        put(t[0], t[1], 1);
        put(t[1], t[2], 1);
        put(t[0], t[2], -1);
        relators[static_cast<std::size_t>(c)].push_back(std::move(row));
    }

    Pi1Abelianized out;
    for (int c = 0; c < comp_count; ++c) {
        const int gens = gens_in[static_cast<std::size_t>(c)];
        const auto& rel = relators[static_cast<std::size_t>(c)];
        IntMatrix r(static_cast<int>(rel.size()), gens);
        for (int i = 0; i < static_cast<int>(rel.size()); ++i)
            for (int j = 0; j < gens; ++j)
                r.at(i, j) = rel[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        SnfResult snf = smith_normal_form(r);
        DegreeGroup g;
        g.rank = gens - snf.rank;
        for (const BigInt& f : snf.invariant_factors)
            if (f > 1) g.torsion.push_back(detail::factor_to_ll(f));
        out.components.push_back(std::move(g));
    }
    return out;
}

inline Pi1Abelianized pi1_abelianized(const FinSpace& space, const FlagOptions& opts = {}) {
    return pi1_abelianized(flag_complex(space, 2, opts));
}

} // namespace cech
