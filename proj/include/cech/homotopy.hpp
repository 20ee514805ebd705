#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cmap.hpp"
#include "constructions.hpp"
#include "core.hpp"

namespace cech {

/// A named family of subsets whose union is the whole space. Whether it is an
/// interior cover is a computed verdict, not an invariant.
struct Cover {
    FinSpace space;
    std::vector<std::pair<std::string, PointSet>> sets;
};

struct InteriorCoverResult {
    bool is_interior = false;
    std::optional<int> witness; // a point with no cover set as neighborhood

    explicit operator bool() const { return is_interior; }
};

/// Every point must have some cover set as a neighborhood; with finite
/// quasi-discrete closures that is one subset test per point against the
/// minimum neighborhood. A family that is not even a cover is rejected
/// outright rather than reported as "not interior".
inline InteriorCoverResult is_interior_cover(const Cover& cover) {
    PointSet un;
    for (const auto& [name, s] : cover.sets) {
        cover.space.check_subset(s);
        un = set_union(un, s);
    }
    if (un != cover.space.all_points())
        throw NotACoverError("the sets do not cover the space");

    for (int x = 0; x < cover.space.size(); ++x) {
        const PointSet nx = smallest_neighborhood(cover.space, x);
        bool covered = false;
        for (const auto& [name, s] : cover.sets)
            if (nx.is_subset_of(s)) {
                covered = true;
                break;
            }
        if (!covered) return {false, x};
    }
    return {true, std::nullopt};
}

/// Sufficient one-step test: f ~ g when the map H on dom x (J_1,c_1) with
/// H(.,0)=f, H(.,1)=g is continuous. J_1 is indiscrete, so this is the
/// paper-style single elementary homotopy; chains of these certify homotopy.
inline bool one_step_homotopic(const CMap& f, const CMap& g) {
    if (!f.dom().same_structure(g.dom()) || !f.cod().same_structure(g.cod()))
        throw InvalidArgumentError("one-step homotopy needs maps with equal domain and codomain");
    const FinSpace cylinder = product(f.dom(), interval_space(1, 1));
    std::vector<int> img(static_cast<std::size_t>(cylinder.size()));
    for (int x = 0; x < f.dom().size(); ++x) {
        img[static_cast<std::size_t>(x * 2 + 0)] = f(x);
        img[static_cast<std::size_t>(x * 2 + 1)] = g(x);
    }
    return is_continuous(CMap(cylinder, f.cod(), std::move(img)));
}

/// A certificate that `space` deformation retracts onto `target`: an ordered
/// list of self-maps whose composite has image exactly `target`.
struct RetractionChain {
    FinSpace space;
    PointSet target;
    std::vector<CMap> steps;
};

struct ChainVerdict {
    bool ok = false;
    int failed_step = -1; // index of the offending step, -1 when not step-specific
    std::string reason;

    explicit operator bool() const { return ok; }
};

/// Checks, step by step: continuity, that the target stays fixed, and that
/// consecutive composites are one-step homotopic (id ~ C_1 ~ ... ~ C_k); then
/// that the final composite's image is exactly the target. A passing chain
/// certifies that the space deformation retracts onto the target.
inline ChainVerdict verify_retraction_chain(const RetractionChain& rc) {
    rc.space.check_subset(rc.target);
    CMap composite = identity_map(rc.space);
    for (int i = 0; i < static_cast<int>(rc.steps.size()); ++i) {
        const CMap& step = rc.steps[static_cast<std::size_t>(i)];
        if (!step.dom().same_structure(rc.space) || !step.cod().same_structure(rc.space))
            return {false, i, "step is not a self-map of the chain's space"};
        if (!is_continuous(step)) return {false, i, "step is not continuous"};
        for (int x : rc.target)
            if (step(x) != x) return {false, i, "step moves target point " + rc.space.label(x)};
        CMap next = compose(step, composite);
        if (!one_step_homotopic(composite, next))
            return {false, i, "composite through this step is not one-step homotopic to the previous one"};
        composite = std::move(next);
    }
    PointSet image = composite.map(rc.space.all_points());
    if (!(image == rc.target))
        return {false, -1, "composite image is not the target"};
    return {true, -1, ""};
}

/// (X, A) is a good pair when some neighborhood B of A deformation retracts
/// onto A. The witness chain must live on the subspace over B (whose points
/// are B relabelled in increasing order) and retract it onto A's copy there.
inline ChainVerdict good_pair_witness(const FinSpace& space, const PointSet& a, const PointSet& b,
                                      const RetractionChain& rc) {
    space.check_subset(a);
    space.check_subset(b);
    if (!a.is_subset_of(b))
        throw InvalidArgumentError("good pair needs A contained in B");
    if (!a.is_subset_of(interior(space, b)))
        return {false, -1, "not a neighborhood: A is not contained in the interior of B"};

    FinSpace sub = subspace(space, b);
    if (!rc.space.same_structure(sub))
        return {false, -1, "witness chain does not live on the subspace over B"};
    // A's points in subspace coordinates (position within sorted B).
    std::vector<int> relabeled;
    int pos = 0;
    for (int x : b) {
        if (a.contains(x)) relabeled.push_back(pos);
        ++pos;
    }
    if (!(rc.target == PointSet(std::move(relabeled))))
        return {false, -1, "witness chain target is not A inside the subspace over B"};
    return verify_retraction_chain(rc);
}

/// Peel chain for an interval-like subspace with points 0..n: single-point
/// peels from both ends down to {lo..hi}. Matches the inductive
/// one-point-at-a-time construction.
inline RetractionChain interval_peel_chain(const FinSpace& space, int lo, int hi) {
    const int n = space.size() - 1;
    if (lo < 0 || hi > n || lo > hi)
        throw InvalidArgumentError("peel range must be a nonempty subrange of the space");
    RetractionChain rc;
    rc.space = space;
    std::vector<int> target;
    for (int x = lo; x <= hi; ++x) target.push_back(x);
    rc.target = PointSet(std::move(target));
    for (int top = n; top > hi; --top) {
        std::vector<int> img(static_cast<std::size_t>(space.size()));
        for (int x = 0; x <= n; ++x) img[static_cast<std::size_t>(x)] = (x == top) ? top - 1 : x;
        rc.steps.emplace_back(space, space, std::move(img));
    }
    for (int bot = 0; bot < lo; ++bot) {
        std::vector<int> img(static_cast<std::size_t>(space.size()));
        for (int x = 0; x <= n; ++x) img[static_cast<std::size_t>(x)] = (x == bot) ? bot + 1 : x;
        rc.steps.emplace_back(space, space, std::move(img));
    }
    return rc;
}

} // namespace cech
