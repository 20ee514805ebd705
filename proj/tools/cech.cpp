// Command-line front end: construct finite closure spaces, compute flag
// homology, check covers and maps, and sweep the verification table.
//
// Exit codes: 0 pass, 1 check failed, 2 usage, 3 I/O, 4 simplex budget.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include <cech/cech.hpp>

namespace {

using namespace cech;

FlagOptions flag_options_from_env() {
    FlagOptions opts;
    if (const char* budget = std::getenv("CECH_SIMPLEX_BUDGET")) {
        char* end = nullptr;
        unsigned long long value = std::strtoull(budget, &end, 10);
        if (end == budget || *end != '\0' || value == 0)
            throw InvalidArgumentError("CECH_SIMPLEX_BUDGET must be a positive integer");
        opts.simplex_budget = static_cast<std::size_t>(value);
    }
    return opts;
}

std::pair<int, int> parse_range(const std::string& text) {
    auto pos = text.find("..");
    int lo = 0, hi = 0;
    try {
        if (pos == std::string::npos) {
            lo = hi = std::stoi(text);
        } else {
            lo = std::stoi(text.substr(0, pos));
            hi = std::stoi(text.substr(pos + 2));
        }
    } catch (const std::exception&) {
        throw InvalidArgumentError("range '" + text + "' is not of the form a..b");
    }
    if (lo > hi) throw InvalidArgumentError("range '" + text + "' is empty");
    return {lo, hi};
}

void emit_space(const FinSpace& space, const std::string& out_path) {
    Json j = space_to_json(space);
    std::ostringstream summary;
    summary << space.name() << ": points=" << space.size()
            << " symmetric=" << (space.is_symmetric() ? "yes" : "no")
            << " idempotent=" << (space.is_idempotent() ? "yes" : "no");
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
        std::cerr << summary.str() << "\n";
    } else {
        write_json_file(out_path, j);
        std::cout << summary.str() << " -> " << out_path << "\n";
    }
}

std::vector<PointSet> parse_blocks(const FinSpace& space, const std::string& text) {
    std::vector<PointSet> blocks;
    std::vector<bool> used(static_cast<std::size_t>(space.size()), false);
    std::stringstream stream(text);
    std::string chunk;
    while (std::getline(stream, chunk, ';')) {
        if (chunk.empty()) continue;
        std::vector<int> pts;
        std::stringstream inner(chunk);
        std::string label;
        while (std::getline(inner, label, ',')) {
            int x = space.find_label(label);
            if (x == -1) throw InvalidArgumentError("unknown point label '" + label + "'");
            pts.push_back(x);
            used[static_cast<std::size_t>(x)] = true;
        }
        blocks.emplace_back(std::move(pts));
    }
    for (int x = 0; x < space.size(); ++x)
        if (!used[static_cast<std::size_t>(x)]) blocks.push_back(PointSet{x});
    return blocks;
}

std::string homology_csv(const HomologySummary& h) {
    std::ostringstream out;
    out << "degree,rank,torsion\n";
    for (int d = 0; d <= h.max_degree(); ++d) {
        out << d << ',';
        if (h.computed(d)) {
            const DegreeGroup& g = h.group(d);
            out << g.rank << ',';
            for (std::size_t i = 0; i < g.torsion.size(); ++i)
                out << (i ? "|" : "") << g.torsion[i];
        } else {
            out << "not computed,";
        }
        out << '\n';
    }
    return out.str();
}

std::string homology_markdown(const HomologySummary& h) {
    std::ostringstream out;
    out << "## " << h.space_name << (h.reduced ? " (reduced)" : "") << "\n\n";
    out << "flag-complex (clique) homology\n\n";
    out << "| degree | group |\n|--------|-------|\n";
    for (int d = 0; d <= h.max_degree(); ++d) {
        out << "| " << d << " | ";
        if (!h.computed(d)) {
            out << "not computed";
        } else {
            const DegreeGroup& g = h.group(d);
            if (g.rank == 0 && g.torsion.empty()) out << "0";
            if (g.rank == 1) out << "Z";
            if (g.rank > 1) out << "Z^" << g.rank;
            for (long long t : g.torsion) out << (g.rank > 0 ? " + " : "") << "Z/" << t;
        }
        out << " |\n";
    }
    return out.str();
}

int default_jobs() {
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite Cech closure spaces: constructions, covers, flag homology"};
    app.require_subcommand(1);
    int exit_code = 0;

    FlagOptions env_flags;
    try {
        env_flags = flag_options_from_env();
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    // ---- space ----------------------------------------------------------
    auto* space_cmd = app.add_subcommand("space", "construct a space and emit its JSON");
    space_cmd->require_subcommand(1);
    std::string out_path;

    struct {
        int n = 0, m = 0;
    } zn_opts;
    auto* zn = space_cmd->add_subcommand("zn", "cycle with the m-nearest-neighbor closure");
    zn->add_option("--n", zn_opts.n, "number of points")->required();
    zn->add_option("--m", zn_opts.m, "closure radius")->required();
    zn->add_option("-o,--out", out_path, "output file (default stdout)");
    zn->callback([&] { emit_space(cycle_space(zn_opts.n, zn_opts.m), out_path); });

    struct {
        int n = 0, m = 1;
    } jn_opts;
    auto* jn = space_cmd->add_subcommand("jn", "discrete interval {0..n} with |i-j| <= m closure");
    jn->add_option("--n", jn_opts.n, "right endpoint")->required();
    jn->add_option("--m", jn_opts.m, "closure radius (default 1)");
    jn->add_option("-o,--out", out_path, "output file (default stdout)");
    jn->callback([&] { emit_space(interval_space(jn_opts.n, jn_opts.m), out_path); });

    struct {
        std::string left, right;
    } pair_opts;
    auto* prod = space_cmd->add_subcommand("product", "product of two spaces");
    prod->add_option("--left", pair_opts.left, "left space file")->required();
    prod->add_option("--right", pair_opts.right, "right space file")->required();
    prod->add_option("-o,--out", out_path, "output file (default stdout)");
    prod->callback([&] { emit_space(product(load_space(pair_opts.left), load_space(pair_opts.right)), out_path); });

    auto* coprod = space_cmd->add_subcommand("coproduct", "disjoint union of two spaces");
    coprod->add_option("--left", pair_opts.left, "left space file")->required();
    coprod->add_option("--right", pair_opts.right, "right space file")->required();
    coprod->add_option("-o,--out", out_path, "output file (default stdout)");
    coprod->callback([&] { emit_space(coproduct(load_space(pair_opts.left), load_space(pair_opts.right)), out_path); });

    struct {
        std::string in, blocks;
    } quot_opts;
    auto* quot = space_cmd->add_subcommand("quotient", "quotient by explicit blocks; unlisted points stay singletons");
    quot->add_option("--in", quot_opts.in, "space file")->required();
    quot->add_option("--blocks", quot_opts.blocks, "blocks as 'a,b;c,d' using point labels")->required();
    quot->add_option("-o,--out", out_path, "output file (default stdout)");
    quot->callback([&] {
        FinSpace space = load_space(quot_opts.in);
        emit_space(quotient(space, parse_blocks(space, quot_opts.blocks)).space, out_path);
    });

    struct {
        std::string f, g;
    } push_opts;
    auto* push = space_cmd->add_subcommand("pushout", "pushout of two continuous maps with a shared domain");
    push->add_option("--f", push_opts.f, "left leg map file")->required();
    push->add_option("--g", push_opts.g, "right leg map file")->required();
    push->add_option("-o,--out", out_path, "output file (default stdout)");
    push->callback([&] { emit_space(pushout(load_cmap(push_opts.f), load_cmap(push_opts.g)).space, out_path); });

    struct {
        std::string left, right, lp, rp;
    } wedge_opts;
    auto* wed = space_cmd->add_subcommand("wedge", "one-point union at chosen basepoints");
    wed->add_option("--left", wedge_opts.left, "left space file")->required();
    wed->add_option("--lp", wedge_opts.lp, "left basepoint label")->required();
    wed->add_option("--right", wedge_opts.right, "right space file")->required();
    wed->add_option("--rp", wedge_opts.rp, "right basepoint label")->required();
    wed->add_option("-o,--out", out_path, "output file (default stdout)");
    wed->callback([&] {
        FinSpace left = load_space(wedge_opts.left);
        FinSpace right = load_space(wedge_opts.right);
        int lp = left.find_label(wedge_opts.lp);
        int rp = right.find_label(wedge_opts.rp);
        if (lp == -1 || rp == -1) throw InvalidArgumentError("basepoint label not found");
        emit_space(wedge(left, lp, right, rp).space, out_path);
    });

    struct {
        std::string in;
        int height = 1;
    } cone_opts;
    auto* cone = space_cmd->add_subcommand("cone", "discrete cone over a space");
    cone->add_option("--in", cone_opts.in, "space file")->required();
    cone->add_option("--h,--height", cone_opts.height, "interval height (default 1)");
    cone->add_option("-o,--out", out_path, "output file (default stdout)");
    cone->callback([&] { emit_space(cone_d(load_space(cone_opts.in), cone_opts.height).space, out_path); });

    struct {
        std::string in;
        int height = 2;
    } susp_opts;
    auto* susp = space_cmd->add_subcommand("suspension", "discrete suspension of a space");
    susp->add_option("--in", susp_opts.in, "space file")->required();
    susp->add_option("--h,--height", susp_opts.height, "interval height (default 2)");
    susp->add_option("-o,--out", out_path, "output file (default stdout)");
    susp->callback([&] { emit_space(suspension_d(load_space(susp_opts.in), susp_opts.height).space, out_path); });

    std::string file_in;
    auto* filecmd = space_cmd->add_subcommand("file", "validate a space file and re-emit it");
    filecmd->add_option("--in", file_in, "space file")->required();
    filecmd->add_option("-o,--out", out_path, "output file (default stdout)");
    filecmd->callback([&] { emit_space(load_space(file_in), out_path); });

    // ---- homology --------------------------------------------------------
    struct {
        std::string space_file, format = "md", out;
        int max_deg = 3;
        bool reduced = false;
    } hom_opts;
    auto* hom = app.add_subcommand("homology", "flag-complex homology of a symmetric space");
    hom->add_option("space", hom_opts.space_file, "space file")->required();
    hom->add_option("--max-deg", hom_opts.max_deg, "highest degree to compute (default 3)");
    hom->add_flag("--reduced", hom_opts.reduced, "reduced homology");
    hom->add_option("--format", hom_opts.format, "json | csv | md (default md)")
        ->check(CLI::IsMember({"json", "csv", "md"}));
    hom->add_option("-o,--out", hom_opts.out, "output file (default stdout)");
    hom->callback([&] {
        FlagOptions opts = env_flags;
        opts.max_dim = hom_opts.max_deg + 1;
        HomologySummary h =
            homology(load_space(hom_opts.space_file), hom_opts.max_deg, hom_opts.reduced, opts);
        std::string text;
        if (hom_opts.format == "json")
            text = homology_to_json(h).dump(2) + "\n";
        else if (hom_opts.format == "csv")
            text = homology_csv(h);
        else
            text = homology_markdown(h);
        if (hom_opts.out.empty()) {
            std::cout << text;
        } else {
            std::ofstream f(hom_opts.out);
            if (!f) throw IoError("cannot write '" + hom_opts.out + "'");
            f << text;
        }
    });

    // ---- verify ----------------------------------------------------------
    struct {
        std::string id, n_range, m_range, format = "md", out;
        int max_deg = -1;
        int jobs = default_jobs();
        bool list = false;
    } verify_opts;
    auto* verify = app.add_subcommand("verify", "sweep one of the frozen theorem checks");
    verify->add_option("id", verify_opts.id, "theorem id (see --list)");
    verify->add_flag("--list", verify_opts.list, "list theorem ids");
    verify->add_option("--n", verify_opts.n_range, "n range a..b");
    verify->add_option("--m", verify_opts.m_range, "m range a..b");
    verify->add_option("--max-deg", verify_opts.max_deg, "degree cap override");
    verify->add_option("--jobs", verify_opts.jobs, "worker cap for sweep cells");
    verify->add_option("--format", verify_opts.format, "csv | md (default md)")
        ->check(CLI::IsMember({"csv", "md"}));
    verify->add_option("-o,--out", verify_opts.out, "output file (default stdout)");
    verify->callback([&] {
        if (verify_opts.list) {
            for (const auto& [id, desc] : theorem_catalog()) std::cout << id << ": " << desc << "\n";
            return;
        }
        if (verify_opts.id.empty()) throw InvalidArgumentError("missing theorem id");
        bool known = false;
        for (const auto& id : theorem_ids()) known = known || id == verify_opts.id;
        if (!known) throw InvalidArgumentError("unknown theorem id '" + verify_opts.id + "'");
        SweepOptions opts;
        opts.flag = env_flags;
        opts.jobs = verify_opts.jobs;
        opts.max_deg = verify_opts.max_deg;
        if (!verify_opts.n_range.empty()) std::tie(opts.n_lo, opts.n_hi) = parse_range(verify_opts.n_range);
        if (!verify_opts.m_range.empty()) std::tie(opts.m_lo, opts.m_hi) = parse_range(verify_opts.m_range);
        SweepReport report = run_theorem(verify_opts.id, opts);
        std::string text = verify_opts.format == "csv" ? render_csv(report) : render_markdown(report);
        if (verify_opts.out.empty()) {
            std::cout << text;
        } else {
            std::ofstream f(verify_opts.out);
            if (!f) throw IoError("cannot write '" + verify_opts.out + "'");
            f << text;
        }
        std::cerr << report.id << ": " << report.passed << " passed, " << report.failed
                  << " failed, " << report.skipped << " skipped\n";
        if (!report.all_pass) exit_code = 1;
    });

    // ---- cover-check -----------------------------------------------------
    struct {
        std::string cover_file, space_file;
    } cover_opts;
    auto* cover_cmd = app.add_subcommand("cover-check", "is a named family an interior cover?");
    cover_cmd->add_option("cover", cover_opts.cover_file, "cover file")->required();
    cover_cmd->add_option("--space", cover_opts.space_file, "space file overriding the one in the cover");
    cover_cmd->callback([&] {
        Cover cover = load_cover(cover_opts.cover_file);
        if (!cover_opts.space_file.empty()) {
            FinSpace space = load_space(cover_opts.space_file);
            Json j = read_json_file(cover_opts.cover_file);
            cover.space = space;
            cover.sets.clear();
            for (const auto& [name, members] : j.at("sets").items())
                cover.sets.emplace_back(name, point_set_from_labels(cover.space, members));
        }
        InteriorCoverResult result = is_interior_cover(cover);
        if (result.is_interior) {
            std::cout << "interior cover\n";
        } else {
            std::cout << "not interior: witness " << cover.space.label(*result.witness) << "\n";
            exit_code = 1;
        }
    });

    // ---- map-check -------------------------------------------------------
    std::string map_file;
    auto* map_cmd = app.add_subcommand("map-check", "continuity (and homeomorphism) of a map file");
    map_cmd->add_option("map", map_file, "map file")->required();
    map_cmd->callback([&] {
        CMap f = load_cmap(map_file);
        auto violation = continuity_violation(f);
        if (violation) {
            std::cout << "not continuous: closure of " << f.dom().label(violation->first)
                      << " contains " << f.dom().label(violation->second)
                      << " but the image closure misses its image\n";
            exit_code = 1;
            return;
        }
        std::cout << "continuous\n";
        if (is_homeomorphism(f)) std::cout << "homeomorphism\n";
    });

    // ---- compare ---------------------------------------------------------
    struct {
        std::string left, right;
        int max_deg = 3;
    } cmp_opts;
    auto* cmp = app.add_subcommand("compare", "per-degree homology equality of two spaces");
    cmp->add_option("left", cmp_opts.left, "space file")->required();
    cmp->add_option("right", cmp_opts.right, "space file")->required();
    cmp->add_option("--max-deg", cmp_opts.max_deg, "highest degree to compare (default 3)");
    cmp->callback([&] {
        FlagOptions opts = env_flags;
        opts.max_dim = cmp_opts.max_deg + 1;
        CompareResult result = compare_homology(load_space(cmp_opts.left), load_space(cmp_opts.right),
                                                cmp_opts.max_deg, opts);
        if (result.truncated)
            std::cout << "compared through degree " << result.compared_through
                      << " (caps differ)\n";
        std::cout << (result.equal ? "equal" : "differ") << "\n";
        if (!result.equal) exit_code = 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const BudgetExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const InvalidArgumentError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidPointError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
