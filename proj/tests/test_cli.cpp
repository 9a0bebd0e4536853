#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "gammasg/density.hpp"
#include "gammasg/moments.hpp"

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(GAMMASG_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

struct Csv {
    std::vector<std::pair<std::string, std::string>> meta;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    double num(std::size_t row, std::size_t col) const {
        const std::string& c = rows[row][col];
        double v = 0.0;
        const auto res = std::from_chars(c.data(), c.data() + c.size(), v);
        REQUIRE(res.ec == std::errc{});
        return v;
    }
};

Csv parse_csv(const std::string& text) {
    Csv csv;
    std::istringstream in(text);
    std::string line;
    bool header_done = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            const auto eq = line.find('=');
            csv.meta.emplace_back(line.substr(2, eq - 2), line.substr(eq + 1));
            continue;
        }
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (!header_done) {
            csv.columns = cells;
            header_done = true;
            continue;
        }
        csv.rows.push_back(std::move(cells));
    }
    return csv;
}

}  // namespace

TEST_CASE("density subcommand emits a bit-exact round-trip CSV") {
    const RunResult r = run_cli(
        "density --a 1 --b 1 --c 2 --t-min 0.1 --t-max 10 --count 50 --spacing log");
    REQUIRE(r.exit_code == 0);
    const Csv csv = parse_csv(r.out);
    REQUIRE(csv.columns.size() == 4);
    CHECK(csv.columns[0] == "t");
    CHECK(csv.columns[3] == "method");
    REQUIRE(csv.rows.size() == 50);
    // Values must re-parse to exactly the library's own numbers, and every
    // value must match the K0 closed form within its error estimate.
    for (std::size_t i = 0; i < csv.rows.size(); ++i) {
        const gammasg::DensityValue ref = gammasg::density_c2({1, 1, 2}, csv.num(i, 0));
        CHECK(csv.num(i, 1) == ref.value);  // bit-exact round trip
        CHECK(std::abs(csv.num(i, 1) - ref.value) <= csv.num(i, 2) + 1e-14);
        CHECK(csv.rows[i][3] == "closed-form-c2");
    }
}

TEST_CASE("moments subcommand: last row of n-max 5 at (1,1,1) is 5! = 120") {
    const RunResult r = run_cli("moments --a 1 --b 1 --c 1 --n-max 5");
    REQUIRE(r.exit_code == 0);
    const Csv csv = parse_csv(r.out);
    REQUIRE(csv.rows.size() == 6);
    CHECK(csv.num(csv.rows.size() - 1, 1) == doctest::Approx(120.0).epsilon(1e-12));
}

TEST_CASE("classify subcommand emits the verdict as JSON") {
    const RunResult r = run_cli("classify --a 3 --c 1 --b 1");
    REQUIRE(r.exit_code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc["determinate"] == false);
    CHECK(doc["boundary"] == false);
    CHECK(doc.contains("carleman"));
    CHECK(doc.contains("krein"));
    CHECK(doc["krein"]["bounded_at_infinity"] == true);

    const RunResult r2 = run_cli("classify --a 1 --c 2 --b 4");
    const json doc2 = json::parse(r2.out);
    CHECK(doc2["determinate"] == true);
    CHECK(doc2["boundary"] == true);
}

TEST_CASE("asympt subcommand emits ratio columns") {
    const RunResult r = run_cli(
        "asympt --a 1 --b 1 --c 2 --regime tail --t-min 100 --t-max 1e6 --count 5");
    REQUIRE(r.exit_code == 0);
    const Csv csv = parse_csv(r.out);
    REQUIRE(csv.rows.size() == 5);
    for (std::size_t i = 0; i < csv.rows.size(); ++i) CHECK(std::abs(csv.num(i, 3) - 1.0) < 0.1);
}

TEST_CASE("gumbel subcommand tables") {
    const RunResult r = run_cli("gumbel --a 1 --b 1 --c 1 --x-min -2 --x-max 8 --count 11 "
                                "--spacing linear");
    REQUIRE(r.exit_code == 0);
    const Csv csv = parse_csv(r.out);
    REQUIRE(csv.rows.size() == 11);
    const RunResult rp = run_cli("gumbel --table poly --a 1 --b 1 --n-max 4");
    const Csv poly = parse_csv(rp.out);
    CHECK(poly.rows.size() == 10);  // triangle 1+2+3+4
}

TEST_CASE("sample subcommand writes metadata and is seed-reproducible") {
    const RunResult r1 = run_cli("sample --a 1 --b 1 --c 2 --n 100 --seed 7 --kind tau");
    const RunResult r2 = run_cli("sample --a 1 --b 1 --c 2 --n 100 --seed 7 --kind tau");
    REQUIRE(r1.exit_code == 0);
    CHECK(r1.out == r2.out);
    const Csv csv = parse_csv(r1.out);
    CHECK(csv.rows.size() == 100);
    bool has_seed = false, has_generator = false;
    for (const auto& [k, v] : csv.meta) {
        if (k == "seed") has_seed = true;
        if (k == "generator") has_generator = true;
    }
    CHECK(has_seed);
    CHECK(has_generator);
}

TEST_CASE("json format wraps meta and rows") {
    const RunResult r = run_cli("moments --a 1 --b 1 --c 1 --n-max 3 --format json");
    REQUIRE(r.exit_code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc.contains("meta"));
    CHECK(doc["meta"].contains("version"));
    REQUIRE(doc["rows"].size() == 4);
    CHECK(double(doc["rows"][3]["s_n"]) == doctest::Approx(6.0).epsilon(1e-12));
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("density --a -1 --b 1 --c 1").exit_code == 2);
    CHECK(run_cli("nonsense").exit_code == 2);
    CHECK(run_cli("density --count 0").exit_code == 2);
    CHECK(run_cli("sample --c 1.5").exit_code == 2);
}

TEST_CASE("numerical range failures exit with code 3") {
    // e^{-x} is unrepresentable and only c = 1 has a log-domain fallback.
    CHECK(run_cli("gumbel --a 1 --b 1 --c 2 --x-min -800 --x-max -750 --count 3 "
                  "--spacing linear")
              .exit_code == 3);
}
