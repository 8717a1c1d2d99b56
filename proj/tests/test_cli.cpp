#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "pcgen/cli.hpp"
#include "pcgen/io.hpp"

using pcgen::cli::run;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult invoke(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

class TempFile {
public:
    TempFile(const std::string& name, const std::string& content)
        : path_(std::filesystem::temp_directory_path() / name) {
        std::ofstream f(path_);
        f << content;
    }
    ~TempFile() { std::filesystem::remove(path_); }
    std::string str() const { return path_.string(); }

private:
    std::filesystem::path path_;
};

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("reconstruct") {
    const TempFile gen("pcgen_cli_gen.txt", "1 2 2\n1 3 6\n2 4 3\n");

    SUBCASE("emits the matrix csv and a summary") {
        const RunResult r = invoke({"reconstruct", "--input", gen.str(), "--n", "4"});
        REQUIRE(r.code == 0);
        const auto rows = lines_of(r.out);
        REQUIRE(rows.size() == 4);
        CHECK(rows[0] == "1,2,6,6");
        CHECK(r.err.find("used=3/3") != std::string::npos);
        CHECK(r.err.find("residual=0") != std::string::npos);

        std::istringstream csv(r.out);
        const pcgen::PCMatrix m = pcgen::read_matrix_csv(csv);
        CHECK(m(1, 2) == doctest::Approx(3.0).epsilon(1e-12));
        CHECK(m(2, 3) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(m(3, 0) == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
    }
    SUBCASE("identical invocations are byte-identical") {
        const RunResult a = invoke({"reconstruct", "--input", gen.str(), "--n", "4"});
        const RunResult b = invoke({"reconstruct", "--input", gen.str(), "--n", "4"});
        CHECK(a.out == b.out);
        CHECK(a.err == b.err);
    }
    SUBCASE("--output writes the csv to a file") {
        const auto out_path = std::filesystem::temp_directory_path() / "pcgen_cli_out.csv";
        const RunResult r = invoke(
            {"reconstruct", "--input", gen.str(), "--n", "4", "--output", out_path.string()});
        REQUIRE(r.code == 0);
        CHECK(r.out.empty());
        std::ifstream written(out_path);
        const pcgen::PCMatrix m = pcgen::read_matrix_csv(written);
        CHECK(m(0, 3) == 6.0);
        std::filesystem::remove(out_path);
    }
    SUBCASE("--report lists the used entries") {
        const RunResult r = invoke({"reconstruct", "--input", gen.str(), "--n", "4", "--report"});
        CHECK(r.err.find("used entries:") != std::string::npos);
        CHECK(r.err.find("1 2 2") != std::string::npos);
        CHECK(r.err.find("2 4 3") != std::string::npos);
    }
    SUBCASE("non-generating input exits 2 with the standard phrase") {
        const TempFile sparse("pcgen_cli_sparse.txt", "1 2 2\n");
        const RunResult r = invoke({"reconstruct", "--input", sparse.str(), "--n", "4"});
        CHECK(r.code == 2);
        CHECK(r.err.find("B does not generate A") != std::string::npos);
        CHECK(r.err.find("3 4") != std::string::npos);  // unreached vertices, one-based
    }
    SUBCASE("malformed file exits 1 naming the line") {
        const TempFile broken("pcgen_cli_broken.txt", "1 2 2\n1 oops 6\n");
        const RunResult r = invoke({"reconstruct", "--input", broken.str(), "--n", "4"});
        CHECK(r.code == 1);
        CHECK(r.err.find("line 2") != std::string::npos);
    }
    SUBCASE("missing file exits 1") {
        const RunResult r =
            invoke({"reconstruct", "--input", "/nonexistent/path.txt", "--n", "4"});
        CHECK(r.code == 1);
        CHECK(r.err.find("cannot open") != std::string::npos);
    }
}

TEST_CASE("check") {
    SUBCASE("tree") {
        const TempFile gen("pcgen_cli_tree.txt", "1 2 2\n1 3 6\n2 4 3\n");
        const RunResult r = invoke({"check", "--input", gen.str(), "--n", "4"});
        CHECK(r.code == 0);
        CHECK(r.out == "tree\n");
    }
    SUBCASE("cycle that still spans") {
        const TempFile gen("pcgen_cli_cycle.txt", "1 2 1\n2 3 1\n1 3 1\n");
        const RunResult r = invoke({"check", "--input", gen.str(), "--n", "3"});
        CHECK(r.code == 0);
        CHECK(r.out == "not a tree (cycle); spanning-connected\n");
    }
    SUBCASE("disconnected") {
        const TempFile gen("pcgen_cli_disc.txt", "1 2 1\n");
        const RunResult r = invoke({"check", "--input", gen.str(), "--n", "3"});
        CHECK(r.code == 0);
        CHECK(r.out == "not-generating; unreached vertices: 3\n");
    }
}

TEST_CASE("handicap") {
    const TempFile gen("pcgen_cli_pg.txt", "1 2 1\n2 3 1\n3 4 1\n");
    const RunResult r = invoke({"handicap", "--input", gen.str(), "--n", "4"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("entity  frequency") != std::string::npos);
    CHECK(r.out.find("active 4") != std::string::npos);
    CHECK(r.out.find("max_frequency 2") != std::string::npos);
    CHECK(r.out.find("total_handicap 2") != std::string::npos);
}

TEST_CASE("enumerate") {
    SUBCASE("trees") {
        const RunResult r = invoke({"enumerate", "--n", "4", "--kind", "trees"});
        REQUIRE(r.code == 0);
        const auto rows = lines_of(r.out);
        REQUIRE(rows.size() == 17);
        CHECK(rows.front() == "1-2 1-3 1-4");
        CHECK(rows.back() == "count 16");
    }
    SUBCASE("paths") {
        const RunResult r = invoke({"enumerate", "--n", "4", "--kind", "paths"});
        REQUIRE(r.code == 0);
        const auto rows = lines_of(r.out);
        REQUIRE(rows.size() == 13);
        CHECK(rows.front() == "1-2 2-3 3-4");
        CHECK(rows.back() == "count 12");
    }
    SUBCASE("default kind is trees") {
        const RunResult r = invoke({"enumerate", "--n", "3"});
        CHECK(lines_of(r.out).back() == "count 3");
    }
    SUBCASE("guard violation exits 3") {
        const RunResult r = invoke({"enumerate", "--n", "12", "--kind", "trees"});
        CHECK(r.code == 3);
    }
}

TEST_CASE("classify") {
    SUBCASE("table") {
        const RunResult r = invoke({"classify", "--n", "4", "--size", "3"});
        REQUIRE(r.code == 0);
        const auto rows = lines_of(r.out);
        REQUIRE(rows.size() == 7);
        CHECK(r.out.find("total") != std::string::npos);
        CHECK(r.out.find("20") != std::string::npos);
        CHECK(r.out.find("cycles") != std::string::npos);
    }
    SUBCASE("machine-readable listing") {
        const RunResult r = invoke({"classify", "--n", "4", "--size", "3", "--list"});
        REQUIRE(r.code == 0);
        const auto rows = lines_of(r.out);
        REQUIRE(rows.size() == 20);
        int bad = 0;
        for (const auto& row : rows) {
            CHECK(row.find(" : ") != std::string::npos);
            if (row.find("not-generating") != std::string::npos) ++bad;
        }
        CHECK(bad == 4);
        CHECK(rows.front() == "1-2 1-3 1-4 : tree");
    }
    SUBCASE("guard violation exits 3") {
        const RunResult r = invoke({"classify", "--n", "7", "--size", "3"});
        CHECK(r.code == 3);
    }
}

TEST_CASE("perturb") {
    SUBCASE("worst case summary carries the corner error") {
        const RunResult r =
            invoke({"perturb", "--n", "7", "--epsilon", "0.2", "--mode", "worst"});
        REQUIRE(r.code == 0);
        CHECK(r.err.find("corner_error=1.98598") != std::string::npos);
        CHECK(r.err.find("argmax=(1,7)") != std::string::npos);
        CHECK(r.err.find("mode=worst") != std::string::npos);
        const auto rows = lines_of(r.out);
        REQUIRE(rows.size() == 7);
        CHECK(rows[0].rfind("0,", 0) == 0);  // zero diagonal leads row 1
    }
    SUBCASE("random mode is reproducible byte for byte") {
        const std::vector<std::string> args{"perturb", "--n",     "5",   "--epsilon", "0.1",
                                            "--mode",  "random",  "--seed", "9",      "--trials",
                                            "50"};
        const RunResult a = invoke(args);
        const RunResult b = invoke(args);
        REQUIRE(a.code == 0);
        CHECK(a.out == b.out);
        CHECK(a.err == b.err);
    }
    SUBCASE("pgs file feeds the reference matrix") {
        const TempFile pgs("pcgen_cli_pgs.txt", "2\n3\n1\n");
        const RunResult r = invoke({"perturb", "--n", "4", "--epsilon", "0.2", "--mode", "worst",
                                    "--pgs", pgs.str()});
        REQUIRE(r.code == 0);
        CHECK(r.err.find("argmax=(1,4)") != std::string::npos);
    }
    SUBCASE("wrong pgs count exits 1") {
        const TempFile pgs("pcgen_cli_pgs_short.txt", "2\n");
        const RunResult r = invoke({"perturb", "--n", "4", "--epsilon", "0.2", "--pgs", pgs.str()});
        CHECK(r.code == 1);
    }
    SUBCASE("epsilon out of range exits 3") {
        const RunResult r = invoke({"perturb", "--n", "4", "--epsilon", "1.5"});
        CHECK(r.code == 3);
    }
}

TEST_CASE("usage handling") {
    SUBCASE("no verb") {
        CHECK(invoke({}).code == 64);
    }
    SUBCASE("unknown flag is rejected") {
        CHECK(invoke({"enumerate", "--n", "4", "--frobnicate"}).code == 64);
    }
    SUBCASE("unknown verb is rejected") {
        CHECK(invoke({"transmogrify"}).code == 64);
    }
    SUBCASE("help exits 0 and lists the verbs") {
        const RunResult r = invoke({"--help"});
        CHECK(r.code == 0);
        CHECK(r.out.find("reconstruct") != std::string::npos);
        CHECK(r.out.find("perturb") != std::string::npos);
    }
    SUBCASE("per-verb help") {
        const RunResult r = invoke({"reconstruct", "--help"});
        CHECK(r.code == 0);
        CHECK(r.out.find("--input") != std::string::npos);
    }
}

TEST_SUITE_END();
