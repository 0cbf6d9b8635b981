#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fraclap/io.hpp"

namespace fs = std::filesystem;

namespace {

const std::string kCli = FRACLAP_CLI_PATH;

struct RunResult {
    int exit_code;
    std::string stdout_text;
};

RunResult run_cli(const std::string& args) {
    const fs::path out = fs::temp_directory_path() / ("fraclap_test_out_" + std::to_string(::getpid()) + ".txt");
    const std::string cmd = kCli + " " + args + " > " + out.string() + " 2> /dev/null";
    const int rc = std::system(cmd.c_str());
    std::ifstream f(out);
    std::stringstream ss;
    ss << f.rdbuf();
    fs::remove(out);
    return {WEXITSTATUS(rc), ss.str()};
}

std::vector<std::string> data_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line))
        if (!line.empty() && line[0] != '#') lines.push_back(line);
    return lines;
}

} // namespace

TEST_CASE("io: %.17g formatting round-trips") {
    for (double v : {2.0, -1.0, 0.1, 3.141592653589793, -4.0 / (15.0 * 3.141592653589793)}) {
        const std::string s = fraclap::io::format_g17(v);
        CHECK(std::stod(s) == v);
    }
}

TEST_CASE("io: csv writer emits metadata then header then rows") {
    fraclap::io::Table t;
    t.meta = {{"tool", "fraclap test"}, {"alpha", "2"}};
    t.header = {"p", "value"};
    t.rows = {{"0", "2"}, {"1", "-1"}};
    std::ostringstream os;
    fraclap::io::write_csv(os, t);
    CHECK(os.str() == "# tool: fraclap test\n# alpha: 2\np,value\n0,2\n1,-1\n");
}

TEST_CASE("cli: matrix rows match the pinned examples") {
    const auto bvk = run_cli("matrix --alpha 2 --n 4");
    REQUIRE(bvk.exit_code == 0);
    const auto rows = data_lines(bvk.stdout_text);
    REQUIRE(rows.size() == 5); // header + 4
    CHECK(rows[0] == "p,value");
    CHECK(rows[1] == "0,2");
    CHECK(rows[2] == "1,-1");
    CHECK(rows[3] == "2,0");
    CHECK(rows[4] == "3,-1");

    const auto n2 = run_cli("matrix --alpha 1 --n 2");
    REQUIRE(n2.exit_code == 0);
    const auto rows2 = data_lines(n2.stdout_text);
    CHECK(rows2[1] == "0,1");
    CHECK(rows2[2] == "1,-1");
}

TEST_CASE("cli: dual-method matrix reports max-abs-diff below 1e-8") {
    const auto r = run_cli("matrix --alpha 1.5 --n 16 --method both");
    REQUIRE(r.exit_code == 0);
    double max_diff = -1.0;
    std::istringstream is(r.stdout_text);
    std::string line;
    while (std::getline(is, line)) {
        const std::string key = "# max-abs-diff: ";
        if (line.rfind(key, 0) == 0) max_diff = std::stod(line.substr(key.size()));
    }
    REQUIRE(max_diff >= 0.0);
    CHECK(max_diff <= 1e-8);
}

TEST_CASE("cli: deterministic byte-identical output") {
    const fs::path a = fs::temp_directory_path() / "fraclap_det_a.csv";
    const fs::path b = fs::temp_directory_path() / "fraclap_det_b.csv";
    const std::string args = "kernel --alpha 0.5,1.5 --length 1 --x-grid 0.1:0.9:17 --format csv --out ";
    REQUIRE(std::system((kCli + " " + args + a.string()).c_str()) == 0);
    REQUIRE(std::system((kCli + " " + args + b.string()).c_str()) == 0);
    std::ifstream fa(a), fb(b);
    std::stringstream sa, sb;
    sa << fa.rdbuf();
    sb << fb.rdbuf();
    CHECK(sa.str() == sb.str());
    CHECK(sa.str().find("# tool: fraclap") == 0);
    fs::remove(a);
    fs::remove(b);
}

TEST_CASE("cli: json output is well-formed with meta and data") {
    const auto r = run_cli("dispersion --alpha 1,2 --kappa-grid 0:3.14159:9 --format json");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.stdout_text);
    REQUIRE(j.contains("meta"));
    REQUIRE(j.contains("data"));
    CHECK(j["meta"]["command"] == "dispersion");
    CHECK(j["data"].size() == 18);
}

TEST_CASE("cli: verify subset and self-test exit codes") {
    CHECK(run_cli("verify --only euler-reflection").exit_code == 0);
    CHECK(run_cli("verify --only euler-reflection,duplication --format csv").exit_code == 0);
    CHECK(run_cli("verify --only euler-reflection --inject-error").exit_code == 1);
    CHECK(run_cli("verify --only no-such-check").exit_code == 2);
}

TEST_CASE("cli: usage and validation failures exit with code 2") {
    CHECK(run_cli("matrix --n 4").exit_code == 2);               // missing alpha
    CHECK(run_cli("matrix --alpha -1 --n 4").exit_code == 2);    // bad alpha
    CHECK(run_cli("matrix --alpha 1 --n 0").exit_code == 2);     // bad n
    CHECK(run_cli("nonsense").exit_code == 2);                   // unknown command
    CHECK(run_cli("kernel --alpha 1 --x-grid 0:2:3").exit_code == 2); // lattice point, no eps
    CHECK(run_cli("converge --alpha 1 --x 0.3 --h-grid 0.125,0.0625").exit_code == 2); // misaligned
}

TEST_CASE("cli: kernel lattice points allowed with --eps") {
    const auto r = run_cli("kernel --alpha 1 --x-grid 0:2:3 --eps 1e-3");
    CHECK(r.exit_code == 0);
    CHECK(data_lines(r.stdout_text).size() == 4); // header + 3 points
}

TEST_CASE("cli: full matrix emits the dense circulant") {
    const auto r = run_cli("matrix --alpha 2 --n 3 --mu 2 --full-matrix");
    REQUIRE(r.exit_code == 0);
    const auto rows = data_lines(r.stdout_text);
    REQUIRE(rows.size() == 10); // header + 9 entries
    CHECK(rows[0] == "p,q,value");
    const auto value_of = [&](std::size_t i) {
        return std::stod(rows[i].substr(rows[i].rfind(',') + 1));
    };
    CHECK_THAT(value_of(1), Catch::Matchers::WithinRel(-4.0, 1e-14)); // -mu * 2
    CHECK_THAT(value_of(2), Catch::Matchers::WithinRel(2.0, 1e-14)); // -mu * (-1)
    CHECK_THAT(value_of(5), Catch::Matchers::WithinRel(-4.0, 1e-14));
}
