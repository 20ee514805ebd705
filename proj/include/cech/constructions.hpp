#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cmap.hpp"
#include "core.hpp"

namespace cech {

/// (Z_n, c_m): n points on a cycle, the closure of i being all points at
/// cyclic distance at most m.
inline FinSpace cycle_space(int n, int m) {
    if (n < 1) throw InvalidArgumentError("cycle space needs at least one point");
    if (m < 0) throw InvalidArgumentError("cycle space radius must be nonnegative");
    std::vector<std::vector<int>> closures(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        std::vector<int> c;
        for (int j = 0; j < n; ++j) {
            int d = std::abs(i - j);
            d = std::min(d, n - d);
            if (d <= m) c.push_back(j);
        }
        closures[static_cast<std::size_t>(i)] = std::move(c);
    }
    return FinSpace(std::move(closures), {}, "Z" + std::to_string(n) + "c" + std::to_string(m));
}

/// (J_n, c_m): the discrete interval {0, ..., n} with |i-j| <= m closure.
inline FinSpace interval_space(int n, int m) {
    if (n < 0) throw InvalidArgumentError("interval space endpoint must be nonnegative");
    if (m < 1) throw InvalidArgumentError("interval space radius must be at least 1");
    std::vector<std::vector<int>> closures(static_cast<std::size_t>(n + 1));
    for (int i = 0; i <= n; ++i) {
        std::vector<int> c;
        for (int j = std::max(0, i - m); j <= std::min(n, i + m); ++j) c.push_back(j);
        closures[static_cast<std::size_t>(i)] = std::move(c);
    }
    return FinSpace(std::move(closures), {}, "J" + std::to_string(n) + "c" + std::to_string(m));
}

/// Subspace on A: points of A relabelled 0..|A|-1 in increasing order, with
/// c_A(B) = A n c(B).
inline FinSpace subspace(const FinSpace& space, const PointSet& a) {
    space.check_subset(a);
    std::vector<int> to_sub(static_cast<std::size_t>(space.size()), -1);
    int next = 0;
    for (int x : a) to_sub[static_cast<std::size_t>(x)] = next++;
    std::vector<std::vector<int>> closures(static_cast<std::size_t>(a.size()));
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(a.size()));
    for (int x : a) {
        std::vector<int> c;
        for (int y : space.point_closure(x))
            if (a.contains(y)) c.push_back(to_sub[static_cast<std::size_t>(y)]);
        closures[static_cast<std::size_t>(to_sub[static_cast<std::size_t>(x)])] = std::move(c);
        labels.push_back(space.label(x));
    }
    return FinSpace(std::move(closures), std::move(labels), space.name() + "|sub");
}

/// Inclusion of the subspace on A back into the ambient space.
inline CMap subspace_inclusion(const FinSpace& space, const PointSet& a) {
    FinSpace sub = subspace(space, a);
    std::vector<int> img(a.begin(), a.end());
    return CMap(std::move(sub), space, std::move(img));
}

inline int product_index(const FinSpace& left, const FinSpace& right, int a, int b) {
    left.check_point(a);
    right.check_point(b);
    return a * right.size() + b;
}

/// Product space on pairs (a,b), index a*|Y|+b. For finite quasi-discrete
/// spaces the product closure of a point is the product of the coordinate
/// closures: the neighborhood filter of (a,b) is generated by N(a) x N(b).
inline FinSpace product(const FinSpace& left, const FinSpace& right) {
    const int n = left.size() * right.size();
    std::vector<std::vector<int>> closures(static_cast<std::size_t>(n));
    std::vector<std::string> labels(static_cast<std::size_t>(n));
    for (int a = 0; a < left.size(); ++a) {
        for (int b = 0; b < right.size(); ++b) {
            std::vector<int> c;
            for (int x : left.point_closure(a))
                for (int y : right.point_closure(b)) c.push_back(x * right.size() + y);
            const int idx = a * right.size() + b;
            closures[static_cast<std::size_t>(idx)] = std::move(c);
            labels[static_cast<std::size_t>(idx)] = "(" + left.label(a) + "," + right.label(b) + ")";
        }
    }
    return FinSpace(std::move(closures), std::move(labels),
                    left.name() + "x" + right.name());
}

inline std::pair<CMap, CMap> product_projections(const FinSpace& left, const FinSpace& right) {
    FinSpace prod = product(left, right);
    std::vector<int> to_left(static_cast<std::size_t>(prod.size()));
    std::vector<int> to_right(static_cast<std::size_t>(prod.size()));
    for (int a = 0; a < left.size(); ++a)
        for (int b = 0; b < right.size(); ++b) {
            to_left[static_cast<std::size_t>(a * right.size() + b)] = a;
            to_right[static_cast<std::size_t>(a * right.size() + b)] = b;
        }
    return {CMap(prod, left, std::move(to_left)), CMap(prod, right, std::move(to_right))};
}

/// Disjoint union with per-summand closures; left points come first. Labels
/// are prefixed to stay unique.
inline FinSpace coproduct(const FinSpace& left, const FinSpace& right) {
    const int offset = left.size();
    std::vector<std::vector<int>> closures;
    closures.reserve(static_cast<std::size_t>(left.size() + right.size()));
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(left.size() + right.size()));
    for (int x = 0; x < left.size(); ++x) {
        closures.push_back(left.point_closure(x).points());
        labels.push_back("L." + left.label(x));
    }
    for (int x = 0; x < right.size(); ++x) {
        std::vector<int> c;
        for (int y : right.point_closure(x)) c.push_back(y + offset);
        closures.push_back(std::move(c));
        labels.push_back("R." + right.label(x));
    }
    return FinSpace(std::move(closures), std::move(labels),
                    left.name() + "+" + right.name());
}

inline std::pair<CMap, CMap> coproduct_injections(const FinSpace& left, const FinSpace& right) {
    FinSpace sum = coproduct(left, right);
    std::vector<int> from_left(static_cast<std::size_t>(left.size()));
    std::vector<int> from_right(static_cast<std::size_t>(right.size()));
    for (int x = 0; x < left.size(); ++x) from_left[static_cast<std::size_t>(x)] = x;
    for (int x = 0; x < right.size(); ++x) from_right[static_cast<std::size_t>(x)] = x + left.size();
    return {CMap(left, sum, std::move(from_left)), CMap(right, sum, std::move(from_right))};
}

struct QuotientResult {
    FinSpace space;
    CMap map; // the quotient map q, continuous by construction
};

/// Quotient by an explicit partition into disjoint blocks covering the space.
/// Block order is kept as given; the closure of a block is
/// q(c(q^{-1}(block))) computed from the ambient closure.
inline QuotientResult quotient(const FinSpace& space, const std::vector<PointSet>& blocks) {
    std::vector<int> block_of(static_cast<std::size_t>(space.size()), -1);
    for (int b = 0; b < static_cast<int>(blocks.size()); ++b) {
        space.check_subset(blocks[static_cast<std::size_t>(b)]);
        if (blocks[static_cast<std::size_t>(b)].empty())
            throw InvalidArgumentError("quotient blocks must be nonempty");
        for (int x : blocks[static_cast<std::size_t>(b)]) {
            if (block_of[static_cast<std::size_t>(x)] != -1)
                throw InvalidArgumentError("quotient blocks overlap at point " + std::to_string(x));
            block_of[static_cast<std::size_t>(x)] = b;
        }
    }
    for (int x = 0; x < space.size(); ++x)
        if (block_of[static_cast<std::size_t>(x)] == -1)
            throw InvalidArgumentError("quotient blocks do not cover point " + std::to_string(x));

    const int q = static_cast<int>(blocks.size());
    std::vector<std::vector<int>> closures(static_cast<std::size_t>(q));
    std::vector<std::string> labels(static_cast<std::size_t>(q));
    for (int b = 0; b < q; ++b) {
        std::vector<int> c;
        for (int x : blocks[static_cast<std::size_t>(b)])
            for (int y : space.point_closure(x)) c.push_back(block_of[static_cast<std::size_t>(y)]);
        closures[static_cast<std::size_t>(b)] = std::move(c);
        const PointSet& blk = blocks[static_cast<std::size_t>(b)];
        if (blk.size() == 1) {
            labels[static_cast<std::size_t>(b)] = space.label(*blk.begin());
        } else {
            std::string lbl = "{";
            for (int x : blk) {
                if (lbl.size() > 1) lbl += ",";
                lbl += space.label(x);
            }
            lbl += "}";
            labels[static_cast<std::size_t>(b)] = lbl;
        }
    }
    FinSpace qspace(std::move(closures), std::move(labels), space.name() + "/~");
    std::vector<int> img(block_of.begin(), block_of.end());
    CMap qmap(space, qspace, std::move(img));
    return {std::move(qspace), std::move(qmap)};
}

/// Convenience form: quotient collapsing one subset to a single point, the
/// rest staying singletons. The collapsed block comes first.
inline QuotientResult collapse(const FinSpace& space, const PointSet& a) {
    std::vector<PointSet> blocks{a};
    for (int x = 0; x < space.size(); ++x)
        if (!a.contains(x)) blocks.push_back(PointSet{x});
    return quotient(space, blocks);
}

namespace detail {

class UnionFind {
  public:
    explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) {
        for (int i = 0; i < n; ++i) parent_[static_cast<std::size_t>(i)] = i;
    }
    int find(int x) {
        while (parent_[static_cast<std::size_t>(x)] != x) {
            parent_[static_cast<std::size_t>(x)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
            x = parent_[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }

  private:
    std::vector<int> parent_;
};

inline std::vector<PointSet> blocks_from_union_find(UnionFind& uf, int n) {
    std::vector<std::vector<int>> buckets(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) buckets[static_cast<std::size_t>(uf.find(x))].push_back(x);
    std::vector<PointSet> blocks;
    for (auto& b : buckets)
        if (!b.empty()) blocks.emplace_back(std::move(b));
    return blocks;
}

} // namespace detail

/// Coequalizer of a parallel pair f,g : Z -> W: the quotient of W by the
/// equivalence generated by f(z) ~ g(z).
inline QuotientResult coequalizer(const CMap& f, const CMap& g) {
    if (!f.dom().same_structure(g.dom()) || !f.cod().same_structure(g.cod()))
        throw InvalidArgumentError("coequalizer needs a parallel pair of maps");
    detail::UnionFind uf(f.cod().size());
    for (int z = 0; z < f.dom().size(); ++z) uf.unite(f(z), g(z));
    return quotient(f.cod(), detail::blocks_from_union_find(uf, f.cod().size()));
}

struct PushoutResult {
    FinSpace space;
    CMap from_left;  // s1 : X -> P
    CMap from_right; // s2 : Y -> P
};

/// Pushout of f : Z -> X and g : Z -> Y, computed as the quotient of the
/// coproduct X + Y by f(z) ~ g(z). The quotient closure splits into the
/// displayed union s1(c1(s1^{-1}(A))) u s2(c2(s2^{-1}(A))) because coproduct
/// closures act per summand.
inline PushoutResult pushout(const CMap& f, const CMap& g) {
    if (!f.dom().same_structure(g.dom()))
        throw InvalidArgumentError("pushout legs must share their domain");
    if (!is_continuous(f) || !is_continuous(g))
        throw InvalidArgumentError("pushout legs must be continuous");
    const FinSpace& left = f.cod();
    const FinSpace& right = g.cod();
    FinSpace sum = coproduct(left, right);
    detail::UnionFind uf(sum.size());
    for (int z = 0; z < f.dom().size(); ++z) uf.unite(f(z), g(z) + left.size());
    QuotientResult q = quotient(sum, detail::blocks_from_union_find(uf, sum.size()));

    std::vector<int> s1(static_cast<std::size_t>(left.size()));
    std::vector<int> s2(static_cast<std::size_t>(right.size()));
    for (int x = 0; x < left.size(); ++x) s1[static_cast<std::size_t>(x)] = q.map(x);
    for (int y = 0; y < right.size(); ++y) s2[static_cast<std::size_t>(y)] = q.map(y + left.size());
    FinSpace pspace = q.space;
    return {std::move(q.space), CMap(left, pspace, std::move(s1)), CMap(right, pspace, std::move(s2))};
}

struct WedgeResult {
    FinSpace space;
    CMap from_left;
    CMap from_right;
    int basepoint = 0;
};

/// One-point union identifying x0 with y0.
inline WedgeResult wedge(const FinSpace& left, int x0, const FinSpace& right, int y0) {
    left.check_point(x0);
    right.check_point(y0);
    FinSpace pt({{0}}, {"*"}, "pt");
    PushoutResult p = pushout(constant_map(pt, left, x0), constant_map(pt, right, y0));
    int base = p.from_left(x0);
    return {std::move(p.space), std::move(p.from_left), std::move(p.from_right), base};
}

struct ConeResult {
    FinSpace space;
    int apex = 0;
};

/// Discrete cone: X x (J_h, c_1) with the bottom layer X x {0} collapsed to an
/// apex. The apex block comes first.
inline ConeResult cone_d(const FinSpace& space, int h = 1) {
    if (h < 1) throw InvalidArgumentError("cone height must be at least 1");
    FinSpace cylinder = product(space, interval_space(h, 1));
    const int layers = h + 1;
    std::vector<int> bottom;
    for (int x = 0; x < space.size(); ++x) bottom.push_back(x * layers + 0);
    QuotientResult q = collapse(cylinder, PointSet(std::move(bottom)));
    return {std::move(q.space), 0};
}

struct SuspensionResult {
    FinSpace space;
    int apex_bottom = 0;
    int apex_top = 1;
};

/// Discrete suspension: X x (J_h, c_1) with the bottom and top layers each
/// collapsed to an apex. h >= 2 keeps the apexes out of each other's closures.
inline SuspensionResult suspension_d(const FinSpace& space, int h = 2) {
    if (h < 2) throw InvalidArgumentError("suspension height must be at least 2");
    FinSpace cylinder = product(space, interval_space(h, 1));
    const int layers = h + 1;
    std::vector<int> bottom, top;
    for (int x = 0; x < space.size(); ++x) {
        bottom.push_back(x * layers + 0);
        top.push_back(x * layers + h);
    }
    std::vector<PointSet> blocks{PointSet(std::move(bottom)), PointSet(std::move(top))};
    for (int x = 0; x < space.size(); ++x)
        for (int t = 1; t < h; ++t) blocks.push_back(PointSet{x * layers + t});
    QuotientResult q = quotient(cylinder, blocks);
    return {std::move(q.space), 0, 1};
}

namespace detail {

// Per-point invariant used to prune the isomorphism search: closure size,
// neighborhood size, and the sorted closure sizes of the closure members.
inline std::vector<std::vector<int>> iso_signatures(const FinSpace& space) {
    std::vector<std::vector<int>> sig(static_cast<std::size_t>(space.size()));
    for (int x = 0; x < space.size(); ++x) {
        std::vector<int> s;
        s.push_back(space.point_closure(x).size());
        s.push_back(smallest_neighborhood(space, x).size());
        std::vector<int> neigh;
        for (int y : space.point_closure(x)) neigh.push_back(space.point_closure(y).size());
        std::sort(neigh.begin(), neigh.end());
        s.insert(s.end(), neigh.begin(), neigh.end());
        sig[static_cast<std::size_t>(x)] = std::move(s);
    }
    return sig;
}

inline bool iso_extend(const FinSpace& a, const FinSpace& b, std::vector<int>& img,
                       std::vector<bool>& used, int x,
                       const std::vector<std::vector<int>>& siga,
                       const std::vector<std::vector<int>>& sigb) {
    if (x == a.size()) return true;
    for (int y = 0; y < b.size(); ++y) {
        if (used[static_cast<std::size_t>(y)]) continue;
        if (siga[static_cast<std::size_t>(x)] != sigb[static_cast<std::size_t>(y)]) continue;
        bool ok = true;
        for (int z = 0; z < x && ok; ++z) {
            const int w = img[static_cast<std::size_t>(z)];
            if (a.point_closure(x).contains(z) != b.point_closure(y).contains(w)) ok = false;
            if (a.point_closure(z).contains(x) != b.point_closure(w).contains(y)) ok = false;
        }
        if (!ok) continue;
        img[static_cast<std::size_t>(x)] = y;
        used[static_cast<std::size_t>(y)] = true;
        if (iso_extend(a, b, img, used, x + 1, siga, sigb)) return true;
        used[static_cast<std::size_t>(y)] = false;
    }
    return false;
}

} // namespace detail

/// Exact backtracking search for a homeomorphism, pruned by degree-style
/// signatures. Intended for spaces of a few dozen points.
inline std::optional<CMap> find_homeomorphism(const FinSpace& a, const FinSpace& b) {
    if (a.size() != b.size()) return std::nullopt;
    auto siga = detail::iso_signatures(a);
    auto sigb = detail::iso_signatures(b);
    {
        auto sa = siga;
        auto sb = sigb;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return std::nullopt;
    }
    std::vector<int> img(static_cast<std::size_t>(a.size()), -1);
    std::vector<bool> used(static_cast<std::size_t>(a.size()), false);
    if (!detail::iso_extend(a, b, img, used, 0, siga, sigb)) return std::nullopt;
    return CMap(a, b, std::move(img));
}

inline bool is_homeomorphic(const FinSpace& a, const FinSpace& b) {
    return find_homeomorphism(a, b).has_value();
}

/// Copy of the space with points renamed through a permutation: point x of the
/// result corresponds to point perm[x] of the input.
inline FinSpace relabel(const FinSpace& space, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != space.size())
        throw InvalidArgumentError("relabel permutation has the wrong length");
    std::vector<int> inv(perm.size(), -1);
    for (int x = 0; x < space.size(); ++x) {
        space.check_point(perm[static_cast<std::size_t>(x)]);
        if (inv[static_cast<std::size_t>(perm[static_cast<std::size_t>(x)])] != -1)
            throw InvalidArgumentError("relabel permutation is not injective");
        inv[static_cast<std::size_t>(perm[static_cast<std::size_t>(x)])] = x;
    }
    std::vector<std::vector<int>> closures(static_cast<std::size_t>(space.size()));
    std::vector<std::string> labels(static_cast<std::size_t>(space.size()));
    for (int x = 0; x < space.size(); ++x) {
        std::vector<int> c;
        for (int y : space.point_closure(perm[static_cast<std::size_t>(x)]))
            c.push_back(inv[static_cast<std::size_t>(y)]);
        closures[static_cast<std::size_t>(x)] = std::move(c);
        labels[static_cast<std::size_t>(x)] = space.label(perm[static_cast<std::size_t>(x)]);
    }
    return FinSpace(std::move(closures), std::move(labels), space.name() + "|perm");
}

} // namespace cech
