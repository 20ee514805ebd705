#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace cech {

/// A subset of the points of some finite space, kept sorted and duplicate-free.
/// Membership of the ids in a concrete space is checked by the operations that
/// receive both the set and the space.
class PointSet {
  public:
    PointSet() = default;

    PointSet(std::vector<int> points) : pts_(std::move(points)) {
        std::sort(pts_.begin(), pts_.end());
        pts_.erase(std::unique(pts_.begin(), pts_.end()), pts_.end());
    }

    PointSet(std::initializer_list<int> points) : PointSet(std::vector<int>(points)) {}

    /// The full point set {0, ..., n-1}.
    static PointSet full(int n) {
        std::vector<int> pts(static_cast<std::size_t>(std::max(n, 0)));
        std::iota(pts.begin(), pts.end(), 0);
        PointSet out;
        out.pts_ = std::move(pts);
        return out;
    }

    bool contains(int x) const { return std::binary_search(pts_.begin(), pts_.end(), x); }
    bool empty() const { return pts_.empty(); }
    int size() const { return static_cast<int>(pts_.size()); }
    const std::vector<int>& points() const { return pts_; }

    auto begin() const { return pts_.begin(); }
    auto end() const { return pts_.end(); }

    bool operator==(const PointSet& other) const = default;

    bool is_subset_of(const PointSet& other) const {
        return std::includes(other.pts_.begin(), other.pts_.end(), pts_.begin(), pts_.end());
    }

    friend PointSet set_union(const PointSet& a, const PointSet& b) {
        PointSet out;
        std::set_union(a.pts_.begin(), a.pts_.end(), b.pts_.begin(), b.pts_.end(),
                       std::back_inserter(out.pts_));
        return out;
    }

    friend PointSet set_intersection(const PointSet& a, const PointSet& b) {
        PointSet out;
        std::set_intersection(a.pts_.begin(), a.pts_.end(), b.pts_.begin(), b.pts_.end(),
                              std::back_inserter(out.pts_));
        return out;
    }

    friend PointSet set_difference(const PointSet& a, const PointSet& b) {
        PointSet out;
        std::set_difference(a.pts_.begin(), a.pts_.end(), b.pts_.begin(), b.pts_.end(),
                            std::back_inserter(out.pts_));
        return out;
    }

  private:
    std::vector<int> pts_;
};

/// A finite quasi-discrete closure space: points 0..n-1 and the closure of each
/// singleton. The closure of an arbitrary subset is the union of its singleton
/// closures, which makes the additivity axioms hold by construction; reflexivity
/// (x in c({x})) is validated here.
class FinSpace {
  public:
    FinSpace() = default;

    FinSpace(std::vector<std::vector<int>> point_closures, std::vector<std::string> labels = {},
             std::string name = "") :
        name_(std::move(name)) {
        const int n = static_cast<int>(point_closures.size());
        closures_.reserve(point_closures.size());
        for (int x = 0; x < n; ++x) {
            PointSet c(std::move(point_closures[static_cast<std::size_t>(x)]));
            if (!c.empty() && (*(c.end() - 1) >= n || *c.begin() < 0))
                throw InvalidPointError("point closure of " + std::to_string(x) +
                                        " mentions an id outside 0.." + std::to_string(n - 1));
            if (!c.contains(x))
                throw InvalidArgumentError("closure violates reflexivity at point " +
                                           std::to_string(x));
            closures_.push_back(std::move(c));
        }
        if (labels.empty()) {
            labels_.reserve(closures_.size());
            for (int x = 0; x < n; ++x) labels_.push_back(std::to_string(x));
        } else {
            if (static_cast<int>(labels.size()) != n)
                throw InvalidArgumentError("label count does not match point count");
            labels_ = std::move(labels);
        }
        for (int x = 0; x < n; ++x)
            for (int y = x + 1; y < n; ++y)
                if (labels_[static_cast<std::size_t>(x)] == labels_[static_cast<std::size_t>(y)])
                    throw InvalidArgumentError("duplicate point label '" +
                                               labels_[static_cast<std::size_t>(x)] + "'");
    }

    int size() const { return static_cast<int>(closures_.size()); }
    bool empty() const { return closures_.empty(); }
    const std::string& name() const { return name_; }

    const PointSet& point_closure(int x) const {
        check_point(x);
        return closures_[static_cast<std::size_t>(x)];
    }

    const std::string& label(int x) const {
        check_point(x);
        return labels_[static_cast<std::size_t>(x)];
    }

    const std::vector<std::string>& labels() const { return labels_; }

    /// Index of a label, or -1 when absent.
    int find_label(const std::string& lbl) const {
        for (int x = 0; x < size(); ++x)
            if (labels_[static_cast<std::size_t>(x)] == lbl) return x;
        return -1;
    }

    PointSet all_points() const { return PointSet::full(size()); }

    /// y in c({x}) iff x in c({y}), for all pairs.
    bool is_symmetric() const {
        for (int x = 0; x < size(); ++x)
            for (int y : closures_[static_cast<std::size_t>(x)])
                if (!closures_[static_cast<std::size_t>(y)].contains(x)) return false;
        return true;
    }

    /// c(c({x})) = c({x}) for all x; for quasi-discrete closures this is
    /// equivalent to idempotency on all subsets, i.e. the space is topological.
    bool is_idempotent() const {
        for (int x = 0; x < size(); ++x) {
            const PointSet& cx = closures_[static_cast<std::size_t>(x)];
            for (int y : cx)
                if (!closures_[static_cast<std::size_t>(y)].is_subset_of(cx)) return false;
        }
        return true;
    }

    /// Structural equality: same closures in the same point order. Labels and
    /// name are cosmetic and ignored.
    bool same_structure(const FinSpace& other) const { return closures_ == other.closures_; }

    void check_point(int x) const {
        if (x < 0 || x >= size())
            throw InvalidPointError("point id " + std::to_string(x) + " outside space of size " +
                                    std::to_string(size()));
    }

    void check_subset(const PointSet& a) const {
        if (!a.empty() && (*a.begin() < 0 || *(a.end() - 1) >= size()))
            throw InvalidPointError("point set not contained in space of size " +
                                    std::to_string(size()));
    }

  private:
    std::vector<PointSet> closures_;
    std::vector<std::string> labels_;
    std::string name_;
};

/// c(A) = union of the singleton closures of the members of A.
inline PointSet closure(const FinSpace& space, const PointSet& a) {
    space.check_subset(a);
    PointSet out;
    for (int x : a) out = set_union(out, space.point_closure(x));
    return out;
}

/// i(A) = X minus c(X minus A).
inline PointSet interior(const FinSpace& space, const PointSet& a) {
    space.check_subset(a);
    const PointSet complement = set_difference(space.all_points(), a);
    return set_difference(space.all_points(), closure(space, complement));
}

/// The minimum neighborhood N(x) = { y : x in c({y}) }: x lies in i(B) exactly
/// when N(x) is contained in B.
inline PointSet smallest_neighborhood(const FinSpace& space, int x) {
    space.check_point(x);
    std::vector<int> pts;
    for (int y = 0; y < space.size(); ++y)
        if (space.point_closure(y).contains(x)) pts.push_back(y);
    return PointSet(std::move(pts));
}

inline bool is_closed(const FinSpace& space, const PointSet& a) {
    return closure(space, a) == a;
}

inline bool is_open(const FinSpace& space, const PointSet& a) {
    return interior(space, a) == a;
}

/// Partition of the points into path components: connected components of the
/// symmetrized relation x ~ y iff y in c({x}) or x in c({y}). Components are
/// listed by their smallest member.
inline std::vector<PointSet> path_components(const FinSpace& space) {
    const int n = space.size();
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    int next = 0;
    for (int start = 0; start < n; ++start) {
        if (comp[static_cast<std::size_t>(start)] != -1) continue;
        std::vector<int> stack{start};
        comp[static_cast<std::size_t>(start)] = next;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            auto visit = [&](int y) {
                if (comp[static_cast<std::size_t>(y)] == -1) {
                    comp[static_cast<std::size_t>(y)] = next;
                    stack.push_back(y);
                }
            };
            for (int y : space.point_closure(x)) visit(y);
            for (int y = 0; y < n; ++y)
                if (space.point_closure(y).contains(x)) visit(y);
        }
        ++next;
    }
    std::vector<std::vector<int>> buckets(static_cast<std::size_t>(next));
    for (int x = 0; x < n; ++x) buckets[static_cast<std::size_t>(comp[static_cast<std::size_t>(x)])].push_back(x);
    std::vector<PointSet> out;
    out.reserve(buckets.size());
    for (auto& b : buckets) out.emplace_back(std::move(b));
    return out;
}

/// True iff coarse's closure dominates fine's: point_closure_fine(x) is
/// contained in point_closure_coarse(x) for every x. Equivalent to continuity
/// of the identity (X, fine) -> (X, coarse).
inline bool is_coarser(const FinSpace& coarse, const FinSpace& fine) {
    if (coarse.size() != fine.size())
        throw InvalidArgumentError("coarser/finer comparison needs the same underlying point set");
    for (int x = 0; x < coarse.size(); ++x)
        if (!fine.point_closure(x).is_subset_of(coarse.point_closure(x))) return false;
    return true;
}

} // namespace cech
