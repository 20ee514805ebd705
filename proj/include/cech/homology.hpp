#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "constructions.hpp"
#include "core.hpp"
#include "flag.hpp"
#include "matrix.hpp"

namespace cech {

/// One homology group: free rank plus torsion coefficients d1 | d2 | ...,
/// each >= 2.
struct DegreeGroup {
    long long rank = 0;
    std::vector<long long> torsion;

    bool operator==(const DegreeGroup&) const = default;
    bool is_trivial() const { return rank == 0 && torsion.empty(); }
};

struct ComplexStats {
    std::vector<long long> simplices_by_dim;
    int built_dim = -1;
    bool capped = false;
};

/// Per-degree homology of a space. Degrees beyond the computed cap are left
/// empty ("not computed"), never reported as zero.
struct HomologySummary {
    std::string space_name;
    bool reduced = false;
    std::vector<std::optional<DegreeGroup>> degrees; // index = degree, 0..max_deg
    ComplexStats stats;

    int max_degree() const { return static_cast<int>(degrees.size()) - 1; }

    bool computed(int k) const {
        return k >= 0 && k <= max_degree() && degrees[static_cast<std::size_t>(k)].has_value();
    }

    const DegreeGroup& group(int k) const {
        if (!computed(k))
            throw InvalidArgumentError("degree " + std::to_string(k) + " not computed");
        return *degrees[static_cast<std::size_t>(k)];
    }
};

namespace detail {

inline long long factor_to_ll(const BigInt& f) {
    if (f > BigInt(INT64_MAX))
        throw InvalidArgumentError("torsion coefficient exceeds 64 bits");
    return static_cast<long long>(f);
}

inline DegreeGroup group_from_ranks(int chains, int rank_out, const SnfResult& snf_in) {
    DegreeGroup g;
    g.rank = chains - rank_out - snf_in.rank;
    for (const BigInt& f : snf_in.invariant_factors)
        if (f > 1) g.torsion.push_back(factor_to_ll(f));
    return g;
}

inline ComplexStats stats_of(const FlagComplex& k) {
    ComplexStats s;
    for (int d = 0; d <= k.built_dim(); ++d) s.simplices_by_dim.push_back(k.count(d));
    s.built_dim = k.built_dim();
    s.capped = k.capped();
    return s;
}

} // namespace detail

/// Homology of a flag complex through max_deg. Works from the boundary
/// matrices: b_k = dim C_k - rank d_k - rank d_{k+1}, torsion in degree k from
/// the invariant factors of d_{k+1}.
inline HomologySummary homology_of_complex(const FlagComplex& k, int max_deg,
                                           bool reduced = false) {
    if (max_deg < 0) throw InvalidArgumentError("homology degree must be nonnegative");
    HomologySummary out;
    out.space_name = k.space_name();
    out.reduced = reduced;
    out.stats = detail::stats_of(k);
    out.degrees.assign(static_cast<std::size_t>(max_deg) + 1, std::nullopt);
    if (k.vertex_count() == 0) {
        for (int d = 0; d <= max_deg; ++d) out.degrees[static_cast<std::size_t>(d)] = DegreeGroup{};
        return out;
    }

    // Degree d is computable when the (d+1)-simplices are fully known: either
    // enumerated, or provably absent because the complex is complete.
    const int computable_through = k.complete() ? max_deg : k.built_dim() - 1;

    std::vector<SnfResult> snf(static_cast<std::size_t>(max_deg) + 2);
    std::vector<int> rank_of(static_cast<std::size_t>(max_deg) + 2, 0);
    for (int d = 1; d <= std::min(max_deg + 1, k.built_dim()); ++d) {
        snf[static_cast<std::size_t>(d)] = smith_normal_form(boundary_matrix(k, d));
        rank_of[static_cast<std::size_t>(d)] = snf[static_cast<std::size_t>(d)].rank;
    }

    for (int d = 0; d <= std::min(max_deg, computable_through); ++d) {
        DegreeGroup g = detail::group_from_ranks(
            k.count(d), rank_of[static_cast<std::size_t>(d)],
            d + 1 <= k.built_dim() ? snf[static_cast<std::size_t>(d + 1)] : SnfResult{});
        if (reduced && d == 0) g.rank -= 1;
        out.degrees[static_cast<std::size_t>(d)] = g;
    }
    return out;
}

/// Flag-complex homology of a symmetric space. The complex is built through
/// max_deg+1, bounded by the options' dimension cap and simplex budget; capped
/// degrees come back as "not computed".
inline HomologySummary homology(const FinSpace& space, int max_deg, bool reduced = false,
                                const FlagOptions& opts = {}) {
    FlagOptions local = opts;
    local.max_dim = std::min(opts.max_dim, max_deg + 1);
    FlagComplex k = flag_complex(space, local.max_dim, local);
    HomologySummary out = homology_of_complex(k, max_deg, reduced);
    out.space_name = space.name();
    return out;
}

/// Relative homology of (X, A) for an induced subspace A: homology of the
/// quotient chain complex spanned by the simplices not contained in A.
inline HomologySummary relative_homology(const FinSpace& space, const PointSet& a, int max_deg,
                                         const FlagOptions& opts = {}) {
    space.check_subset(a);
    FlagOptions local = opts;
    local.max_dim = std::min(opts.max_dim, max_deg + 1);
    FlagComplex k = flag_complex(space, local.max_dim, local);

    auto in_a = [&](const std::vector<int>& simplex) {
        for (int v : simplex)
            if (!a.contains(v)) return false;
        return true;
    };

    // Relative basis per dimension: simplices with at least one vertex outside A.
    std::vector<std::vector<int>> rel_index(static_cast<std::size_t>(k.built_dim()) + 1);
    std::vector<int> rel_count(static_cast<std::size_t>(k.built_dim()) + 1, 0);
    for (int d = 0; d <= k.built_dim(); ++d) {
        const auto& level = k.simplices(d);
        rel_index[static_cast<std::size_t>(d)].assign(level.size(), -1);
        for (std::size_t i = 0; i < level.size(); ++i)
            if (!in_a(level[i]))
                rel_index[static_cast<std::size_t>(d)][i] = rel_count[static_cast<std::size_t>(d)]++;
    }

    auto rel_boundary = [&](int d) {
        IntMatrix full = boundary_matrix(k, d);
        IntMatrix m(rel_count[static_cast<std::size_t>(d - 1)], rel_count[static_cast<std::size_t>(d)]);
        for (int j = 0; j < full.cols(); ++j) {
            int cj = rel_index[static_cast<std::size_t>(d)][static_cast<std::size_t>(j)];
            if (cj == -1) continue;
            for (int i = 0; i < full.rows(); ++i) {
                int ri = rel_index[static_cast<std::size_t>(d - 1)][static_cast<std::size_t>(i)];
                if (ri == -1) continue;
                m.at(ri, cj) = full.at(i, j);
            }
        }
        return m;
    };

    HomologySummary out;
    out.space_name = space.name() + " rel";
    out.reduced = false;
    out.stats = detail::stats_of(k);
    out.degrees.assign(static_cast<std::size_t>(max_deg) + 1, std::nullopt);
    const int computable_through = k.complete() ? max_deg : k.built_dim() - 1;

    std::vector<SnfResult> snf(static_cast<std::size_t>(max_deg) + 2);
    std::vector<int> rank_of(static_cast<std::size_t>(max_deg) + 2, 0);
    for (int d = 1; d <= std::min(max_deg + 1, k.built_dim()); ++d) {
        snf[static_cast<std::size_t>(d)] = smith_normal_form(rel_boundary(d));
        rank_of[static_cast<std::size_t>(d)] = snf[static_cast<std::size_t>(d)].rank;
    }
    for (int d = 0; d <= std::min(max_deg, computable_through); ++d) {
        out.degrees[static_cast<std::size_t>(d)] = detail::group_from_ranks(
            rel_count[static_cast<std::size_t>(d)], rank_of[static_cast<std::size_t>(d)],
            d + 1 <= k.built_dim() ? snf[static_cast<std::size_t>(d + 1)] : SnfResult{});
    }
    return out;
}

struct CompareResult {
    bool equal = false;
    int compared_through = -1; // common computed range
    bool truncated = false;    // caps differed; only the common range was compared

    explicit operator bool() const { return equal; }
};

/// Per-degree equality of (rank, torsion) up to max_deg; mismatched computed
/// caps compare only the common range and flag it.
inline CompareResult compare_homology(const FinSpace& x, const FinSpace& y, int max_deg,
                                      const FlagOptions& opts = {}) {
    HomologySummary hx = homology(x, max_deg, false, opts);
    HomologySummary hy = homology(y, max_deg, false, opts);
    CompareResult out;
    int through = max_deg;
    while (through >= 0 && !(hx.computed(through) && hy.computed(through))) --through;
    out.compared_through = through;
    out.truncated = through < max_deg;
    out.equal = true;
    for (int d = 0; d <= through; ++d)
        if (hx.group(d) != hy.group(d)) {
            out.equal = false;
            break;
        }
    return out;
}

} // namespace cech
