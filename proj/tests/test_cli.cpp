#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

const std::string kCli = TEICHREC_CLI_PATH;

int run(const std::string& args, const std::string& extra_env = "") {
    const std::string cmd = extra_env + kCli + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::string body_without_version(const std::string& path) {
    std::istringstream in(slurp(path));
    std::string line, body;
    bool first = true;
    while (std::getline(in, line)) {
        if (first && line.rfind("# teichrec", 0) == 0) {
            first = false;
            continue;
        }
        first = false;
        body += line + "\n";
    }
    return body;
}

int count_data_rows(const std::string& csv) {
    std::istringstream in(csv);
    std::string line;
    int rows = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (!header_seen) {
            header_seen = true;  // column header
            continue;
        }
        ++rows;
    }
    return rows;
}

}  // namespace

TEST_CASE("enumerate produces the expected row count and exit code") {
    CHECK(run("enumerate --surface torus --L 5 --out cli_t1") == 0);
    CHECK(count_data_rows(body_without_version("cli_t1/enumerate.csv")) == 48);
    const auto json = slurp("cli_t1/enumerate.json");
    CHECK(json.find("\"count\": 48") != std::string::npos);
}

TEST_CASE("usage errors exit 1") {
    CHECK(run("enumerate --surface torus --out cli_t2") == 1);   // missing required --L
    CHECK(run("enumerate --surface torus --L 5 --no-such-flag") == 1);
    CHECK(run("no-such-command") == 1);
    CHECK(run("chernoff --eta exp:1 --xi det:2 --out cli_t2") == 1);  // missing --lambda
    CHECK(run("walk --surface torus --l 4 --out cli_t2") == 1);  // start inside C_l
}

TEST_CASE("config file supplies defaults and flags override it") {
    {
        std::ofstream cfg("cli_t3.cfg");
        cfg << "# fan experiment configuration\n";
        cfg << "surface = l3\n";
        cfg << "warp = 1.2\n";
        cfg << "angles = 24\n";
        cfg << "T = 1.0\n";
        cfg << "l = 2.5\n";
        cfg << "l0 = 1.0\n";
        cfg << "seed = 9\n";
    }
    CHECK(run("first-hit --config cli_t3.cfg --out cli_t3a") == 0);
    CHECK(slurp("cli_t3a/first-hit.json").find("\"l\": 2.5") != std::string::npos);

    // command line wins over the file
    CHECK(run("first-hit --config cli_t3.cfg --l 3.0 --out cli_t3b") == 0);
    CHECK(slurp("cli_t3b/first-hit.json").find("\"l\": 3.0") != std::string::npos);

    // unknown keys are rejected
    {
        std::ofstream cfg("cli_t3bad.cfg");
        cfg << "angles = 24\n";
        cfg << "no_such_knob = 1\n";
    }
    CHECK(run("first-hit --config cli_t3bad.cfg --out cli_t3c") == 1);
}

TEST_CASE("results are independent of the thread count") {
    CHECK(run("first-hit --surface l3 --warp 1.2 --angles 48 --T 3 --l 2 --l0 1 "
              "--seed 5 --threads 1 --out cli_t4a") == 0);
    CHECK(run("first-hit --surface l3 --warp 1.2 --angles 48 --T 3 --l 2 --l0 1 "
              "--seed 5 --threads 4 --out cli_t4b") == 0);
    CHECK(body_without_version("cli_t4a/first-hit.csv") ==
          body_without_version("cli_t4b/first-hit.csv"));
}

TEST_CASE("enumeration budget cap from the environment") {
    CHECK(run("enumerate --surface l3 --L 40 --out cli_t5",
              "TEICH_RECUR_BUDGET=10 ") == 1);
    CHECK(run("enumerate --surface l3 --L 4 --out cli_t5",
              "TEICH_RECUR_BUDGET=4000000 ") == 0);
}

TEST_CASE("check failures exit 2") {
    // horizon too short to extract any sojourn cycle
    CHECK(run("occupation --surface l3 --angles 24 --T 0.5 --l 3 --l0 1.5 "
              "--lambda 0.5 --out cli_t6") == 2);
}

TEST_CASE("surface files load through the cli") {
    {
        std::ofstream f("cli_t7.surf");
        f << "origami n=3 h=(1 2 3) v=(2 3)\n";
    }
    CHECK(run("enumerate --surface cli_t7.surf --L 2 --out cli_t7") == 0);
    const auto json = slurp("cli_t7/enumerate.json");
    CHECK(json.find("\"genus\": 2") != std::string::npos);
}
