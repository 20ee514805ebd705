#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "core.hpp"
#include "errors.hpp"
#include "matrix.hpp"

namespace cech {

struct FlagOptions {
    int max_dim = 4;
    std::size_t simplex_budget = 5'000'000;
};

/// Clique complex of a symmetric finite closure space: simplices are the
/// cliques of the adjacency x != y, y in c({x}), listed per dimension in
/// lexicographic vertex order. Faces are automatically present.
class FlagComplex {
  public:
    FlagComplex() = default;

    int vertex_count() const { return vertices_; }
    const std::string& space_name() const { return space_name_; }

    /// Largest dimension whose simplex list is fully enumerated.
    int built_dim() const { return static_cast<int>(by_dim_.size()) - 1; }

    /// True when enumeration stopped at the dimension cap or budget with
    /// higher-dimensional simplices possibly existing.
    bool capped() const { return capped_; }

    /// True when every simplex of the complex is listed (enumeration ran out
    /// of cliques before any cap).
    bool complete() const { return !capped_; }

    int count(int dim) const {
        if (dim < 0 || dim > built_dim()) return 0;
        return static_cast<int>(by_dim_[static_cast<std::size_t>(dim)].size());
    }

    std::size_t total_count() const {
        std::size_t n = 0;
        for (const auto& level : by_dim_) n += level.size();
        return n;
    }

    const std::vector<std::vector<int>>& simplices(int dim) const {
        static const std::vector<std::vector<int>> empty;
        if (dim < 0 || dim > built_dim()) return empty;
        return by_dim_[static_cast<std::size_t>(dim)];
    }

    /// Position of a simplex in the sorted list of its dimension, or -1.
    int simplex_index(int dim, const std::vector<int>& simplex) const {
        if (dim < 0 || dim > built_dim()) return -1;
        const auto& level = by_dim_[static_cast<std::size_t>(dim)];
        auto it = std::lower_bound(level.begin(), level.end(), simplex);
        if (it == level.end() || *it != simplex) return -1;
        return static_cast<int>(it - level.begin());
    }

    bool adjacent(int x, int y) const {
        return adjacency_[static_cast<std::size_t>(x) * static_cast<std::size_t>(vertices_) +
                          static_cast<std::size_t>(y)];
    }

    friend FlagComplex flag_complex(const FinSpace&, int, const FlagOptions&);

  private:
    int vertices_ = 0;
    bool capped_ = false;
    std::string space_name_;
    std::vector<char> adjacency_;
    std::vector<std::vector<std::vector<int>>> by_dim_;
};

/// Enumerates all cliques of size <= max_dim+1, subject to the simplex budget.
/// Non-symmetric spaces are rejected: directed clique semantics is out of scope.
inline FlagComplex flag_complex(const FinSpace& space, int max_dim,
                                const FlagOptions& opts = {}) {
    if (max_dim < 0) throw InvalidArgumentError("flag complex dimension must be nonnegative");
    if (!space.is_symmetric())
        throw NotSymmetricError("flag complex requires a symmetric space (directed spaces unsupported)");

    FlagComplex k;
    k.vertices_ = space.size();
    k.space_name_ = space.name();
    const int n = space.size();
    k.adjacency_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    for (int x = 0; x < n; ++x)
        for (int y : space.point_closure(x))
            if (x != y)
                k.adjacency_[static_cast<std::size_t>(x) * static_cast<std::size_t>(n) +
                             static_cast<std::size_t>(y)] = 1;

    std::size_t used = 0;
    std::vector<std::vector<int>> level;
    level.reserve(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) level.push_back({x});
    used += level.size();
    if (used > opts.simplex_budget)
        throw BudgetExceededError("simplex budget exhausted at dimension 0");
    k.by_dim_.push_back(level);

    for (int dim = 1; dim <= max_dim; ++dim) {
        std::vector<std::vector<int>> next;
        bool budget_hit = false;
        for (const auto& s : k.by_dim_.back()) {
            for (int v = s.back() + 1; v < n; ++v) {
                bool clique = true;
                for (int w : s)
                    if (!k.adjacent(w, v)) {
                        clique = false;
                        break;
                    }
                if (!clique) continue;
                if (used + next.size() + 1 > opts.simplex_budget) {
                    budget_hit = true;
                    break;
                }
                std::vector<int> t = s;
                t.push_back(v);
                next.push_back(std::move(t));
            }
            if (budget_hit) break;
        }
        if (budget_hit) {
            k.capped_ = true; // partial level dropped, built_dim stays at the last full one
            return k;
        }
        if (next.empty()) return k; // complete: nothing above this dimension
        used += next.size();
        k.by_dim_.push_back(std::move(next));
    }
    // Stopped at the cap; higher simplices exist unless the top level is empty.
    k.capped_ = true;
    return k;
}

/// Matrix of the boundary map in degree k, rows indexed by (k-1)-simplices and
/// columns by k-simplices, with alternating signs: column of sigma has
/// (-1)^i at the face dropping the i-th vertex.
inline IntMatrix boundary_matrix(const FlagComplex& k, int deg) {
    if (deg < 1 || deg > k.built_dim())
        throw InvalidArgumentError("boundary degree " + std::to_string(deg) +
                                   " outside built range 1.." + std::to_string(k.built_dim()));
    const auto& top = k.simplices(deg);
    IntMatrix m(k.count(deg - 1), static_cast<int>(top.size()));
    std::vector<int> face(static_cast<std::size_t>(deg));
    for (int col = 0; col < static_cast<int>(top.size()); ++col) {
        const auto& s = top[static_cast<std::size_t>(col)];
        for (int drop = 0; drop <= deg; ++drop) {
            face.clear();
            for (int i = 0; i <= deg; ++i)
                if (i != drop) face.push_back(s[static_cast<std::size_t>(i)]);
            int row = k.simplex_index(deg - 1, face);
            m.at(row, col) = (drop % 2 == 0) ? 1 : -1;
        }
    }
    return m;
}

} // namespace cech
