#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "core.hpp"

namespace cech {

/// A total set map between two finite closure spaces. Continuity is a property
/// checked after construction, not an invariant.
class CMap {
  public:
    CMap(FinSpace dom, FinSpace cod, std::vector<int> image) :
        dom_(std::move(dom)), cod_(std::move(cod)), image_(std::move(image)) {
        if (static_cast<int>(image_.size()) != dom_.size())
            throw InvalidArgumentError("map image must cover every point of the domain");
        for (int y : image_) cod_.check_point(y);
    }

    const FinSpace& dom() const { return dom_; }
    const FinSpace& cod() const { return cod_; }
    const std::vector<int>& image() const { return image_; }

    int operator()(int x) const {
        dom_.check_point(x);
        return image_[static_cast<std::size_t>(x)];
    }

    PointSet map(const PointSet& a) const {
        dom_.check_subset(a);
        std::vector<int> pts;
        pts.reserve(static_cast<std::size_t>(a.size()));
        for (int x : a) pts.push_back(image_[static_cast<std::size_t>(x)]);
        return PointSet(std::move(pts));
    }

    PointSet preimage(const PointSet& b) const {
        cod_.check_subset(b);
        std::vector<int> pts;
        for (int x = 0; x < dom_.size(); ++x)
            if (b.contains(image_[static_cast<std::size_t>(x)])) pts.push_back(x);
        return PointSet(std::move(pts));
    }

    bool is_identity() const {
        if (!dom_.same_structure(cod_)) return false;
        for (int x = 0; x < dom_.size(); ++x)
            if (image_[static_cast<std::size_t>(x)] != x) return false;
        return true;
    }

  private:
    FinSpace dom_;
    FinSpace cod_;
    std::vector<int> image_;
};

inline CMap identity_map(const FinSpace& space) {
    std::vector<int> img(static_cast<std::size_t>(space.size()));
    for (int x = 0; x < space.size(); ++x) img[static_cast<std::size_t>(x)] = x;
    return CMap(space, space, std::move(img));
}

inline CMap constant_map(const FinSpace& dom, const FinSpace& cod, int value) {
    cod.check_point(value);
    return CMap(dom, cod, std::vector<int>(static_cast<std::size_t>(dom.size()), value));
}

/// g after f. Domain/codomain structures must line up.
inline CMap compose(const CMap& g, const CMap& f) {
    if (!f.cod().same_structure(g.dom()))
        throw InvalidArgumentError("compose: codomain of inner map differs from domain of outer map");
    std::vector<int> img(static_cast<std::size_t>(f.dom().size()));
    for (int x = 0; x < f.dom().size(); ++x) img[static_cast<std::size_t>(x)] = g(f(x));
    return CMap(f.dom(), g.cod(), std::move(img));
}

/// f(c(A)) contained in c(f(A)) for all A; by additivity it is enough to check
/// singletons: f(c({x})) contained in c({f(x)}).
inline bool is_continuous(const CMap& f) {
    for (int x = 0; x < f.dom().size(); ++x) {
        const PointSet& target = f.cod().point_closure(f(x));
        for (int y : f.dom().point_closure(x))
            if (!target.contains(f(y))) return false;
    }
    return true;
}

/// First witness of a continuity violation: a pair (x, y) with y in c({x}) but
/// f(y) outside c({f(x)}).
inline std::optional<std::pair<int, int>> continuity_violation(const CMap& f) {
    for (int x = 0; x < f.dom().size(); ++x) {
        const PointSet& target = f.cod().point_closure(f(x));
        for (int y : f.dom().point_closure(x))
            if (!target.contains(f(y))) return std::make_pair(x, y);
    }
    return std::nullopt;
}

inline std::optional<CMap> inverse(const CMap& f) {
    if (f.dom().size() != f.cod().size()) return std::nullopt;
    std::vector<int> inv(static_cast<std::size_t>(f.cod().size()), -1);
    for (int x = 0; x < f.dom().size(); ++x) {
        int y = f(x);
        if (inv[static_cast<std::size_t>(y)] != -1) return std::nullopt;
        inv[static_cast<std::size_t>(y)] = x;
    }
    return CMap(f.cod(), f.dom(), std::move(inv));
}

/// Bijective, continuous, and with continuous inverse.
inline bool is_homeomorphism(const CMap& f) {
    auto inv = inverse(f);
    return inv && is_continuous(f) && is_continuous(*inv);
}

} // namespace cech
