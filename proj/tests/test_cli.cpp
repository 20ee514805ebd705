#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>

#ifndef CECH_BIN_PATH
#define CECH_BIN_PATH "cech"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output; // stdout only
};

RunResult run_cli(const std::string& args) {
    const std::string command = std::string(CECH_BIN_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buffer{};
    RunResult result;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::size_t got;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.output.append(buffer.data(), got);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("cech_cli_test_" + std::to_string(std::random_device{}()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

} // namespace

TEST_CASE("space construction and homology round trip", "[cli]") {
    TempDir dir;
    RunResult mk = run_cli("space zn --n 7 --m 2 -o " + dir.file("z7.json"));
    CHECK(mk.exit_code == 0);
    CHECK(mk.output.find("points=7") != std::string::npos);
    CHECK(mk.output.find("symmetric=yes") != std::string::npos);

    RunResult hom = run_cli("homology " + dir.file("z7.json") + " --format csv");
    CHECK(hom.exit_code == 0);
    CHECK(hom.output.find("1,1,") != std::string::npos); // degree 1 has rank 1

    RunResult json = run_cli("homology " + dir.file("z7.json") + " --format json");
    CHECK(json.exit_code == 0);
    CHECK(json.output.find("\"degrees\"") != std::string::npos);
}

TEST_CASE("wedge sizes and quotient pattern", "[cli]") {
    TempDir dir;
    REQUIRE(run_cli("space zn --n 7 --m 2 -o " + dir.file("z7.json")).exit_code == 0);
    RunResult w = run_cli("space wedge --left " + dir.file("z7.json") + " --lp 0 --right " +
                          dir.file("z7.json") + " --rp 0 -o " + dir.file("w.json"));
    CHECK(w.exit_code == 0);
    CHECK(w.output.find("points=13") != std::string::npos);

    REQUIRE(run_cli("space zn --n 11 --m 3 -o " + dir.file("z11.json")).exit_code == 0);
    RunResult q = run_cli("space quotient --in " + dir.file("z11.json") +
                          " --blocks \"0,1;3,4;5,6;8,9\" -o " + dir.file("q.json"));
    CHECK(q.exit_code == 0);
    CHECK(q.output.find("points=7") != std::string::npos);

    REQUIRE(run_cli("space zn --n 7 --m 2 -o " + dir.file("z7b.json")).exit_code == 0);
    RunResult cmp = run_cli("compare " + dir.file("q.json") + " " + dir.file("z7b.json"));
    CHECK(cmp.exit_code == 0);
    CHECK(cmp.output.find("equal") != std::string::npos);
}

TEST_CASE("cover and map verdicts", "[cli]") {
    TempDir dir;
    REQUIRE(run_cli("space zn --n 4 --m 1 -o " + dir.file("z4.json")).exit_code == 0);

    std::ofstream cover(dir.file("cover.json"));
    cover << R"({"space": "z4.json", "sets": {"A": ["0","1","3"], "B": ["1","2","3"]}})";
    cover.close();
    RunResult bad = run_cli("cover-check " + dir.file("cover.json"));
    CHECK(bad.exit_code == 1);
    CHECK(bad.output.find("not interior") != std::string::npos);

    std::ofstream cover4(dir.file("cover4.json"));
    cover4 << R"({"space": "z4.json", "sets": {"A": ["0","1","3"], "B": ["1","2","3"],
                  "C": ["2","3","0"], "D": ["3","0","1"]}})";
    cover4.close();
    RunResult good = run_cli("cover-check " + dir.file("cover4.json"));
    CHECK(good.exit_code == 0);
    CHECK(good.output.find("interior cover") != std::string::npos);

    std::ofstream peel(dir.file("peel.json"));
    peel << R"({"dom": {"name": "J5", "points": ["0","1","2","3","4","5"],
                "closure": {"0": ["0","1"], "1": ["0","1","2"], "2": ["1","2","3"],
                             "3": ["2","3","4"], "4": ["3","4","5"], "5": ["4","5"]}},
                "cod": {"name": "J4", "points": ["0","1","2","3","4"],
                "closure": {"0": ["0","1"], "1": ["0","1","2"], "2": ["1","2","3"],
                             "3": ["2","3","4"], "4": ["3","4"]}},
                "map": {"0":"0", "1":"1", "2":"2", "3":"3", "4":"4", "5":"4"}})";
    peel.close();
    RunResult cont = run_cli("map-check " + dir.file("peel.json"));
    CHECK(cont.exit_code == 0);
    CHECK(cont.output.find("continuous") != std::string::npos);
}

TEST_CASE("verify subcommand and exit codes", "[cli]") {
    RunResult cover = run_cli("verify cover-example");
    CHECK(cover.exit_code == 0);

    RunResult narrow = run_cli("verify h1-roots --n 4..8 --m 1..2 --format csv");
    CHECK(narrow.exit_code == 0);
    CHECK(narrow.output.rfind("n,m,degree,", 0) == 0);

    CHECK(run_cli("verify no-such-theorem").exit_code == 2);
    CHECK(run_cli("verify h1-roots --n 9..4").exit_code == 2);
    CHECK(run_cli("homology /nonexistent/file.json").exit_code == 3);
    CHECK(run_cli("space zn --n 0 --m 1").exit_code == 2);
}

TEST_CASE("deterministic output across runs and worker counts", "[cli]") {
    RunResult a = run_cli("verify h1-roots --n 4..10 --m 1..2 --format csv --jobs 1");
    RunResult b = run_cli("verify h1-roots --n 4..10 --m 1..2 --format csv --jobs 4");
    RunResult c = run_cli("verify h1-roots --n 4..10 --m 1..2 --format csv --jobs 4");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(b.output == c.output);
}

TEST_CASE("non-symmetric input is a check failure, not an I/O error", "[cli]") {
    TempDir dir;
    std::ofstream f(dir.file("directed.json"));
    f << R"({"name": "d", "points": ["a","b"], "closure": {"a": ["a","b"], "b": ["b"]}})";
    f.close();
    RunResult hom = run_cli("homology " + dir.file("directed.json"));
    CHECK(hom.exit_code == 1);
}

TEST_CASE("budget override via the environment", "[cli]") {
    TempDir dir;
    REQUIRE(run_cli("space zn --n 12 --m 3 -o " + dir.file("z12.json")).exit_code == 0);
    const std::string cmd = std::string("CECH_SIMPLEX_BUDGET=10 ") + CECH_BIN_PATH +
                            " verify h1-roots --n 12..12 --m 3..3 2>/dev/null";
    int status = std::system(cmd.c_str());
    CHECK(WEXITSTATUS(status) == 4);
}
