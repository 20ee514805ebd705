#pragma once

#include <array>
#include <atomic>
#include <functional>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "constructions.hpp"
#include "exactness.hpp"
#include "homology.hpp"
#include "homotopy.hpp"
#include "pi1.hpp"

namespace cech {

/// One cell of a verification sweep. Rank/torsion columns follow the fixed CSV
/// schema; boolean checks (exactness, cover verdicts) encode pass-expected as
/// rank 1. For two-operand theorems n,m describe the left operand.
struct SweepRow {
    long long n = 0;
    long long m = 0;
    int degree = 0;
    std::string expected_rank;
    std::string computed_rank;
    std::string expected_torsion;
    std::string computed_torsion;
    std::string verdict; // pass | fail | skip
    std::string note;
};

struct SweepReport {
    std::string id;
    std::vector<SweepRow> rows;
    long long passed = 0;
    long long failed = 0;
    long long skipped = 0;
    bool all_pass = false;

    explicit operator bool() const { return all_pass; }
};

struct SweepOptions {
    int n_lo = -1, n_hi = -1; // -1: theorem default
    int m_lo = -1, m_hi = -1;
    int max_deg = -1;
    int jobs = 1;
    FlagOptions flag;
};

inline const std::vector<std::pair<std::string, std::string>>& theorem_catalog() {
    static const std::vector<std::pair<std::string, std::string>> catalog = {
        {"h1-roots", "first homology of the nearest-neighbor cycles: Z when 3 <= 3m < n, 0 in the indiscrete regime and for n = 3"},
        {"h1-wedge", "first homology of one-point unions of two cycles, all three regime combinations"},
        {"vanish-4m", "homology vanishes in degrees 2 and 3 when n >= 4m"},
        {"collapse-c1", "radius-1 cycles all share the homology of the 4-cycle"},
        {"quotient-3m-l", "H_k(Z_{3m+l}, c_m) matches H_k(Z_{3m+l+4}, c_{m+1}) for max(0,m-3) < l < m"},
        {"quotient-4m-4", "H_k(Z_{4m-4}, c_m) matches H_k(Z_{4m}, c_{m+1}) for m >= 5"},
        {"suspension-shift", "betti numbers shift by one degree under the discrete suspension"},
        {"hurewicz", "abelianized edge-path group equals first homology on connected spaces"},
        {"mv-6m", "Mayer-Vietoris rank exactness for the two-arc interior cover when n >= 6m"},
        {"les-pair", "pair long exact sequence plus relative-vs-quotient comparison on radius-1 cycles"},
        {"cover-example", "the 4-cycle cover verdicts: {A,B} is not interior, {A,B,C,D} is"},
    };
    return catalog;
}

inline std::vector<std::string> theorem_ids() {
    std::vector<std::string> ids;
    for (const auto& [id, desc] : theorem_catalog()) ids.push_back(id);
    return ids;
}

namespace detail {

inline std::string torsion_string(const std::vector<long long>& torsion) {
    std::string out;
    for (std::size_t i = 0; i < torsion.size(); ++i) {
        if (i) out += "|";
        out += std::to_string(torsion[i]);
    }
    return out;
}

inline SweepRow group_row(long long n, long long m, int degree, const DegreeGroup& expected,
                          const DegreeGroup& computed, std::string note = "") {
    SweepRow row;
    row.n = n;
    row.m = m;
    row.degree = degree;
    row.expected_rank = std::to_string(expected.rank);
    row.computed_rank = std::to_string(computed.rank);
    row.expected_torsion = torsion_string(expected.torsion);
    row.computed_torsion = torsion_string(computed.torsion);
    row.verdict = (expected == computed) ? "pass" : "fail";
    row.note = std::move(note);
    return row;
}

inline SweepRow bool_row(long long n, long long m, int degree, bool computed, std::string note = "") {
    SweepRow row;
    row.n = n;
    row.m = m;
    row.degree = degree;
    row.expected_rank = "1";
    row.computed_rank = computed ? "1" : "0";
    row.verdict = computed ? "pass" : "fail";
    row.note = std::move(note);
    return row;
}

inline SweepRow skip_row(long long n, long long m, int degree, std::string note) {
    SweepRow row;
    row.n = n;
    row.m = m;
    row.degree = degree;
    row.verdict = "skip";
    row.note = std::move(note);
    return row;
}

using Cell = std::function<std::vector<SweepRow>()>;

inline std::vector<std::vector<SweepRow>> run_cells(const std::vector<Cell>& cells, int jobs) {
    std::vector<std::vector<SweepRow>> results(cells.size());
    if (jobs <= 1) {
        for (std::size_t i = 0; i < cells.size(); ++i) results[i] = cells[i]();
        return results;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    const int count = std::min<int>(jobs, static_cast<int>(cells.size()));
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(count));
    for (int w = 0; w < count; ++w) {
        workers.emplace_back([&, w] {
            try {
                for (;;) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= cells.size()) return;
                    results[i] = cells[i]();
                }
            } catch (...) {
                errors[static_cast<std::size_t>(w)] = std::current_exception();
            }
        });
    }
    for (auto& t : workers) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return results;
}

inline SweepReport assemble(std::string id, const std::vector<std::vector<SweepRow>>& results) {
    SweepReport report;
    report.id = std::move(id);
    for (const auto& rows : results)
        for (const auto& row : rows) {
            if (row.verdict == "pass")
                ++report.passed;
            else if (row.verdict == "fail")
                ++report.failed;
            else
                ++report.skipped;
            report.rows.push_back(row);
        }
    report.all_pass = report.failed == 0;
    return report;
}

struct Grid {
    int n_lo, n_hi, m_lo, m_hi;
};

inline Grid grid_of(const SweepOptions& opts, int n_lo, int n_hi, int m_lo, int m_hi) {
    Grid g{opts.n_lo >= 0 ? opts.n_lo : n_lo, opts.n_hi >= 0 ? opts.n_hi : n_hi,
           opts.m_lo >= 0 ? opts.m_lo : m_lo, opts.m_hi >= 0 ? opts.m_hi : m_hi};
    if (g.n_lo > g.n_hi || g.m_lo > g.m_hi)
        throw InvalidArgumentError("empty sweep range");
    return g;
}

inline DegreeGroup circle_group() { return DegreeGroup{1, {}}; }
inline DegreeGroup trivial_group() { return DegreeGroup{0, {}}; }

// Sweeps need every requested degree: a budget-capped complex is a budget
// failure, not a silently skipped cell.
inline const DegreeGroup& need(const HomologySummary& h, int degree) {
    if (!h.computed(degree))
        throw BudgetExceededError("sweep needs homology degree " + std::to_string(degree) +
                                  " of " + h.space_name + " but the simplex budget capped it");
    return h.group(degree);
}

} // namespace detail

inline SweepReport run_h1_roots(const SweepOptions& opts) {
    detail::Grid g = detail::grid_of(opts, 3, 24, 1, 8);
    std::vector<detail::Cell> cells;
    for (int n = g.n_lo; n <= g.n_hi; ++n)
        for (int m = g.m_lo; m <= g.m_hi; ++m) {
            cells.push_back([n, m, &opts]() -> std::vector<SweepRow> {
                const bool circle = 3 * m < n && m >= 1 && m <= 7;
                const bool trivial = (n <= 16 && n / 2 <= m) || n == 3;
                if (!circle && !trivial)
                    return {detail::skip_row(n, m, 1, "outside the theorem's hypotheses")};
                HomologySummary h = homology(cycle_space(n, m), 1, false, opts.flag);
                DegreeGroup expected = circle ? detail::circle_group() : detail::trivial_group();
                return {detail::group_row(n, m, 1, expected, detail::need(h, 1))};
            });
        }
    return detail::assemble("h1-roots", detail::run_cells(cells, opts.jobs));
}

inline SweepReport run_vanish_4m(const SweepOptions& opts) {
    detail::Grid g = detail::grid_of(opts, 8, 24, 1, 6);
    const int max_deg = opts.max_deg >= 0 ? opts.max_deg : 3;
    std::vector<detail::Cell> cells;
    for (int n = g.n_lo; n <= g.n_hi; ++n)
        for (int m = g.m_lo; m <= g.m_hi; ++m) {
            if (n < 4 * m) continue;
            cells.push_back([n, m, max_deg, &opts]() -> std::vector<SweepRow> {
                HomologySummary h = homology(cycle_space(n, m), max_deg, false, opts.flag);
                std::vector<SweepRow> rows;
                for (int d = 2; d <= max_deg; ++d)
                    rows.push_back(detail::group_row(n, m, d, detail::trivial_group(), detail::need(h, d)));
                return rows;
            });
        }
    return detail::assemble("vanish-4m", detail::run_cells(cells, opts.jobs));
}

inline SweepReport run_collapse_c1(const SweepOptions& opts) {
    detail::Grid g = detail::grid_of(opts, 4, 20, 1, 1);
    const int max_deg = opts.max_deg >= 0 ? opts.max_deg : 3;
    std::vector<detail::Cell> cells;
    for (int n = g.n_lo; n <= g.n_hi; ++n) {
        cells.push_back([n, max_deg, &opts]() -> std::vector<SweepRow> {
            HomologySummary base = homology(cycle_space(4, 1), max_deg, false, opts.flag);
            HomologySummary h = homology(cycle_space(n, 1), max_deg, false, opts.flag);
            std::vector<SweepRow> rows;
            for (int d = 0; d <= max_deg; ++d)
                rows.push_back(detail::group_row(n, 1, d, detail::need(base, d), detail::need(h, d),
                                                 "baseline is the 4-cycle"));
            return rows;
        });
    }
    return detail::assemble("collapse-c1", detail::run_cells(cells, opts.jobs));
}

namespace detail {

inline SweepReport run_quotient_pairs(const std::string& id,
                                      const std::vector<std::pair<int, int>>& left_cells,
                                      int max_deg, const SweepOptions& opts) {
    std::vector<Cell> cells;
    for (auto [n, m] : left_cells) {
        cells.push_back([n = n, m = m, max_deg, &opts]() -> std::vector<SweepRow> {
            HomologySummary left = homology(cycle_space(n, m), max_deg, false, opts.flag);
            HomologySummary right = homology(cycle_space(n + 4, m + 1), max_deg, false, opts.flag);
            std::vector<SweepRow> rows;
            for (int d = 0; d <= max_deg; ++d)
                rows.push_back(group_row(n, m, d, need(right, d), need(left, d),
                                         "expected is the (n+4, m+1) side"));
            return rows;
        });
    }
    return assemble(id, run_cells(cells, opts.jobs));
}

} // namespace detail

inline SweepReport run_quotient_3m_l(const SweepOptions& opts) {
    detail::Grid g = detail::grid_of(opts, 0, 0, 2, 5);
    const int max_deg = opts.max_deg >= 0 ? opts.max_deg : 3;
    std::vector<std::pair<int, int>> cells;
    for (int m = g.m_lo; m <= g.m_hi; ++m)
        for (int l = std::max(0, m - 3) + 1; l < m; ++l) cells.push_back({3 * m + l, m});
    return detail::run_quotient_pairs("quotient-3m-l", cells, max_deg, opts);
}

inline SweepReport run_quotient_4m_4(const SweepOptions& opts) {
    detail::Grid g = detail::grid_of(opts, 0, 0, 5, 6);
    const int max_deg = opts.max_deg >= 0 ? opts.max_deg : 3;
    std::vector<std::pair<int, int>> cells;
    for (int m = std::max(5, g.m_lo); m <= g.m_hi; ++m) cells.push_back({4 * m - 4, m});
    return detail::run_quotient_pairs("quotient-4m-4", cells, max_deg, opts);
}

inline SweepReport run_h1_wedge(const SweepOptions& opts) {
    struct WedgeCase {
        int n1, m1, n2, m2;
        long long expected_rank;
    };
    const std::vector<WedgeCase> cases = {
        {7, 2, 7, 2, 2}, // both circles
        {7, 2, 6, 3, 1}, // circle against indiscrete
        {6, 3, 3, 1, 0}, // both indiscrete
    };
    std::vector<detail::Cell> cells;
    for (const auto& c : cases) {
        cells.push_back([c, &opts]() -> std::vector<SweepRow> {
            WedgeResult w = wedge(cycle_space(c.n1, c.m1), 0, cycle_space(c.n2, c.m2), 0);
            HomologySummary h = homology(w.space, 1, false, opts.flag);
            std::ostringstream note;
            note << "(" << c.n1 << "," << c.m1 << ") v (" << c.n2 << "," << c.m2 << ")";
            return {detail::group_row(c.n1, c.m1, 1, DegreeGroup{c.expected_rank, {}}, detail::need(h, 1),
                                      note.str())};
        });
    }
    return detail::assemble("h1-wedge", detail::run_cells(cells, opts.jobs));
}

inline SweepReport run_suspension_shift(const SweepOptions& opts) {
    detail::Grid g = detail::grid_of(opts, 4, 12, 1, 3);
    std::vector<detail::Cell> cells;
    for (int n = g.n_lo; n <= g.n_hi; ++n)
        for (int m = g.m_lo; m <= g.m_hi; ++m) {
            if (!(3 <= 3 * m && 3 * m < n)) continue;
            cells.push_back([n, m, &opts]() -> std::vector<SweepRow> {
                FinSpace base = cycle_space(n, m);
                SuspensionResult susp = suspension_d(base, 2);
                HomologySummary hb = homology(base, 2, false, opts.flag);
                HomologySummary hs = homology(susp.space, 3, false, opts.flag);
                std::vector<SweepRow> rows;
                for (int k = 1; k <= 2; ++k) {
                    DegreeGroup expected{detail::need(hb, k).rank, {}};
                    DegreeGroup computed{detail::need(hs, k + 1).rank, {}};
                    rows.push_back(detail::group_row(n, m, k, expected, computed,
                                                     "computed rank is degree " + std::to_string(k + 1) +
                                                         " of the suspension"));
                }
                return rows;
            });
        }
    return detail::assemble("suspension-shift", detail::run_cells(cells, opts.jobs));
}

inline SweepReport run_hurewicz(const SweepOptions& opts) {
    detail::Grid g = detail::grid_of(opts, 3, 24, 1, 8);
    std::vector<detail::Cell> cells;
    for (int n = g.n_lo; n <= g.n_hi; ++n)
        for (int m = g.m_lo; m <= g.m_hi; ++m) {
            cells.push_back([n, m, &opts]() -> std::vector<SweepRow> {
                FinSpace space = cycle_space(n, m);
                HomologySummary h = homology(space, 1, false, opts.flag);
                Pi1Abelianized pi = pi1_abelianized(space, opts.flag);
                if (!pi.connected())
                    return {detail::bool_row(n, m, 1, false, "space unexpectedly disconnected")};
                return {detail::group_row(n, m, 1, detail::need(h, 1), pi.single(),
                                          "expected is H1, computed the abelianized pi1")};
            });
        }
    // The wedge representatives are connected spaces of the wedge sweep.
    const std::vector<std::array<int, 4>> wedges = {{7, 2, 7, 2}, {7, 2, 6, 3}, {6, 3, 3, 1}};
    for (const auto& w : wedges) {
        cells.push_back([w, &opts]() -> std::vector<SweepRow> {
            WedgeResult wr = wedge(cycle_space(w[0], w[1]), 0, cycle_space(w[2], w[3]), 0);
            HomologySummary h = homology(wr.space, 1, false, opts.flag);
            Pi1Abelianized pi = pi1_abelianized(wr.space, opts.flag);
            std::ostringstream note;
            note << "wedge (" << w[0] << "," << w[1] << ") v (" << w[2] << "," << w[3] << ")";
            if (!pi.connected()) return {detail::bool_row(w[0], w[1], 1, false, note.str())};
            return {detail::group_row(w[0], w[1], 1, detail::need(h, 1), pi.single(), note.str())};
        });
    }
    return detail::assemble("hurewicz", detail::run_cells(cells, opts.jobs));
}

/// Two-arc interior cover used for the n >= 6m vanishing argument.
inline std::pair<PointSet, PointSet> six_m_arcs(int n, int m) {
    const int l = n - 6 * m;
    if (l < 0) throw InvalidArgumentError("two-arc cover needs n >= 6m");
    std::vector<int> a, b;
    for (int i = 0; i <= 5 * m + l; ++i) a.push_back(i);
    for (int i = 3 * m; i <= 6 * m + l - 1; ++i) b.push_back(i % n);
    for (int i = 0; i <= 2 * m - 1; ++i) b.push_back(i);
    return {PointSet(std::move(a)), PointSet(std::move(b))};
}

inline SweepReport run_mv_6m(const SweepOptions& opts) {
    std::vector<std::pair<int, int>> params;
    if (opts.n_lo >= 0 || opts.m_lo >= 0) {
        detail::Grid g = detail::grid_of(opts, 12, 24, 1, 4);
        for (int n = g.n_lo; n <= g.n_hi; ++n)
            for (int m = g.m_lo; m <= g.m_hi; ++m)
                if (n >= 6 * m) params.push_back({n, m});
    } else {
        params = {{13, 2}, {19, 3}};
    }
    const int max_deg = opts.max_deg >= 0 ? opts.max_deg : 3;
    std::vector<detail::Cell> cells;
    for (auto [n, m] : params) {
        cells.push_back([n = n, m = m, max_deg, &opts]() -> std::vector<SweepRow> {
            FinSpace space = cycle_space(n, m);
            auto [a, b] = six_m_arcs(n, m);
            ExactnessReport report = mv_rank_exactness(space, a, b, max_deg, opts.flag);
            std::vector<SweepRow> rows;
            for (int d = 0; d <= max_deg; ++d) {
                bool exact = true;
                for (const auto& node : report.nodes)
                    if (node.degree == d) exact = exact && node.exact;
                rows.push_back(detail::bool_row(n, m, d, exact, "sequence exact at degree " +
                                                                     std::to_string(d)));
            }
            // Consistency with the vanishing conclusion.
            for (const auto& [name, betti] : report.betti)
                if (name == "X" && max_deg >= 2)
                    rows.push_back(detail::group_row(n, m, 2, detail::trivial_group(),
                                                     DegreeGroup{betti[2], {}},
                                                     "degree-2 rank of the whole space"));
            return rows;
        });
    }
    return detail::assemble("mv-6m", detail::run_cells(cells, opts.jobs));
}

inline SweepReport run_les_pair(const SweepOptions& opts) {
    detail::Grid g = detail::grid_of(opts, 7, 12, 1, 1);
    const int max_deg = opts.max_deg >= 0 ? opts.max_deg : 3;
    std::vector<detail::Cell> cells;
    for (int n = g.n_lo; n <= g.n_hi; ++n) {
        cells.push_back([n, max_deg, &opts]() -> std::vector<SweepRow> {
            FinSpace space = cycle_space(n, 1);
            std::vector<int> arc;
            for (int i = 1; i <= n - 3; ++i) arc.push_back(i);
            PointSet a(std::move(arc));
            ExactnessReport report = les_pair_exactness(space, a, max_deg, opts.flag);
            std::vector<SweepRow> rows;
            for (int d = 0; d <= max_deg; ++d) {
                bool exact = true;
                for (const auto& node : report.nodes)
                    if (node.degree == d) exact = exact && node.exact;
                rows.push_back(detail::bool_row(n, 1, d, exact, "pair sequence exact at degree " +
                                                                    std::to_string(d)));
            }
            HomologySummary rel = relative_homology(space, a, 2, opts.flag);
            HomologySummary quot = homology(collapse(space, a).space, 2, true, opts.flag);
            for (int d = 0; d <= 2; ++d)
                rows.push_back(detail::group_row(n, 1, d, detail::need(quot, d), detail::need(rel, d),
                                                 "expected is reduced homology of the quotient"));
            return rows;
        });
    }
    return detail::assemble("les-pair", detail::run_cells(cells, opts.jobs));
}

inline SweepReport run_cover_example(const SweepOptions& opts) {
    std::vector<detail::Cell> cells;
    cells.push_back([&opts]() -> std::vector<SweepRow> {
        (void)opts;
        FinSpace z4 = cycle_space(4, 1);
        PointSet a{0, 1, 3}, b{1, 2, 3};
        InteriorCoverResult two = is_interior_cover(Cover{z4, {{"A", a}, {"B", b}}});
        std::vector<SweepRow> rows;
        bool two_ok = !two.is_interior && two.witness && (*two.witness == 1 || *two.witness == 3);
        rows.push_back(detail::bool_row(4, 1, 0, two_ok,
                                        two.witness ? "{A,B} not interior, witness " +
                                                          z4.label(*two.witness)
                                                    : "{A,B} unexpectedly interior"));
        InteriorCoverResult four = is_interior_cover(
            Cover{z4, {{"A", a}, {"B", b}, {"C", PointSet{2, 3, 0}}, {"D", PointSet{3, 0, 1}}}});
        rows.push_back(detail::bool_row(4, 1, 0, four.is_interior, "{A,B,C,D} is an interior cover"));
        return rows;
    });
    return detail::assemble("cover-example", detail::run_cells(cells, opts.jobs));
}

inline SweepReport run_theorem(const std::string& id, const SweepOptions& opts = {}) {
    if (id == "h1-roots") return run_h1_roots(opts);
    if (id == "h1-wedge") return run_h1_wedge(opts);
    if (id == "vanish-4m") return run_vanish_4m(opts);
    if (id == "collapse-c1") return run_collapse_c1(opts);
    if (id == "quotient-3m-l") return run_quotient_3m_l(opts);
    if (id == "quotient-4m-4") return run_quotient_4m_4(opts);
    if (id == "suspension-shift") return run_suspension_shift(opts);
    if (id == "hurewicz") return run_hurewicz(opts);
    if (id == "mv-6m") return run_mv_6m(opts);
    if (id == "les-pair") return run_les_pair(opts);
    if (id == "cover-example") return run_cover_example(opts);
    throw InvalidArgumentError("unknown theorem id '" + id + "'");
}

inline std::string render_csv(const SweepReport& report) {
    std::ostringstream out;
    out << "n,m,degree,expected_rank,computed_rank,expected_torsion,computed_torsion,verdict\n";
    for (const auto& r : report.rows)
        out << r.n << ',' << r.m << ',' << r.degree << ',' << r.expected_rank << ','
            << r.computed_rank << ',' << r.expected_torsion << ',' << r.computed_torsion << ','
            << r.verdict << '\n';
    return out.str();
}

inline std::string render_markdown(const SweepReport& report) {
    std::ostringstream out;
    out << "## " << report.id << "\n\n";
    out << "| n | m | degree | expected | computed | verdict | note |\n";
    out << "|---|---|--------|----------|----------|---------|------|\n";
    auto cell = [](const std::string& rank, const std::string& torsion) {
        if (rank.empty()) return std::string("-");
        return torsion.empty() ? rank : rank + " (torsion " + torsion + ")";
    };
    for (const auto& r : report.rows)
        out << "| " << r.n << " | " << r.m << " | " << r.degree << " | "
            << cell(r.expected_rank, r.expected_torsion) << " | "
            << cell(r.computed_rank, r.computed_torsion) << " | " << r.verdict << " | " << r.note
            << " |\n";
    out << "\n" << report.passed << " passed, " << report.failed << " failed, " << report.skipped
        << " skipped\n";
    return out.str();
}

} // namespace cech
