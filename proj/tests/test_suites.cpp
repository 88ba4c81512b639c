#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cyclograd/suites.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

using namespace cyclograd;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream out;
    out << in.rdbuf();
    std::string s = out.str();
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    return s;
}

} // namespace

TEST_CASE("suite names") {
    const auto& names = suite_names();
    REQUIRE(names.size() == 7);
    CHECK(names.back() == "all");
    for (const char* want : {"exactness", "seminorms", "thm27", "prop64", "lie", "semicircular"})
        CHECK(std::find(names.begin(), names.end(), want) != names.end());
}

TEST_CASE("every check passes at desk scale") {
    SuiteOptions opt;
    opt.degree = 2;
    opt.seed = 1;
    SuiteReport rep = run_suite("all", opt);
    CHECK(rep.all_pass());
    CHECK(rep.checks.size() >= 30);

    SuiteOptions one;
    one.n = 1;
    one.degree = 3;
    SuiteReport rep1 = run_suite("all", one);
    CHECK(rep1.all_pass());
    // the alternating-moment check needs two generators and bows out at n = 1
    CHECK(rep1.checks.size() == rep.checks.size() - 1);
}

TEST_CASE("option validation") {
    SuiteOptions opt;
    CHECK_THROWS_AS(run_suite("nonsense", opt), std::invalid_argument);

    SuiteOptions bad = opt;
    bad.n = 0;
    CHECK_THROWS_AS(run_suite("thm27", bad), std::invalid_argument);
    bad = opt;
    bad.n = 5;
    CHECK_THROWS_AS(run_suite("thm27", bad), std::invalid_argument);
    bad = opt;
    bad.degree = 9;
    CHECK_THROWS_AS(run_suite("thm27", bad), std::invalid_argument);
    bad = opt;
    bad.degree = -1;
    CHECK_THROWS_AS(run_suite("thm27", bad), std::invalid_argument);
    bad = opt;
    bad.m = 7;
    CHECK_THROWS_AS(run_suite("thm27", bad), std::invalid_argument);
    bad = opt;
    bad.R = Rat(0);
    CHECK_THROWS_AS(run_suite("thm27", bad), std::invalid_argument);
    bad = opt;
    bad.Rp = bad.R;
    CHECK_THROWS_AS(run_suite("thm27", bad), std::invalid_argument);
    bad = opt;
    bad.trace = "gaussian";
    CHECK_THROWS_AS(run_suite("semicircular", bad), std::invalid_argument);
}

TEST_CASE("parallel runs reproduce the serial report") {
    SuiteOptions serial;
    serial.degree = 2;
    serial.seed = 3;
    SuiteOptions parallel = serial;
    parallel.jobs = 4;
    CHECK(run_suite("all", serial).to_json() == run_suite("all", parallel).to_json());
}

TEST_CASE("exact sequence table literals") {
    auto rows = exact_sequence_table(2, 4);
    REQUIRE(rows.size() == 5);
    const int expect[5][5] = {
        // ker_grad, ker_sym, commutant, ker_theta, image_grad
        {1, 1, 1, 0, 0},
        {0, 0, 0, 2, 2},
        {1, 1, 1, 3, 3},
        {4, 4, 4, 4, 4},
        {10, 10, 10, 6, 6},
    };
    for (int k = 0; k <= 4; ++k) {
        const ExactSequenceRow& r = rows[static_cast<std::size_t>(k)];
        CHECK(r.degree == k);
        CHECK(r.ker_gradient == expect[k][0]);
        CHECK(r.ker_symmetrize == expect[k][1]);
        CHECK(r.commutant_dim == expect[k][2]);
        CHECK(r.ker_theta == expect[k][3]);
        CHECK(r.image_gradient == expect[k][4]);
        CHECK(r.consistent());
    }

    auto one = exact_sequence_table(1, 3);
    REQUIRE(one.size() == 4);
    CHECK(one[0].ker_gradient == 1);
    CHECK(one[0].ker_theta == 0);
    for (int k = 1; k <= 3; ++k) {
        CHECK(one[static_cast<std::size_t>(k)].ker_gradient == 0);
        CHECK(one[static_cast<std::size_t>(k)].ker_symmetrize == 0);
        CHECK(one[static_cast<std::size_t>(k)].commutant_dim == 0);
        CHECK(one[static_cast<std::size_t>(k)].ker_theta == 1);
        CHECK(one[static_cast<std::size_t>(k)].image_gradient == 1);
        CHECK(one[static_cast<std::size_t>(k)].consistent());
    }
}

TEST_CASE("json report matches the stored fixture") {
    SuiteOptions opt;
    opt.n = 1;
    opt.degree = 2;
    opt.seed = 7;
    std::string produced = run_suite("thm27", opt).to_json().dump(2);
    CHECK(produced == slurp(std::string(CYCLOGRAD_TEST_DATA_DIR) + "/verify_thm27_n1_seed7.json"));
}

TEST_CASE("report rendering") {
    SuiteOptions opt;
    opt.n = 1;
    opt.degree = 2;
    SuiteReport rep = run_suite("prop64", opt);
    std::ostringstream os;
    rep.print_human(os);
    std::string text = os.str();
    CHECK(text.find("suite prop64") != std::string::npos);
    CHECK(text.find("[PASS]") != std::string::npos);
    CHECK(text.find("checks passed") != std::string::npos);

    nlohmann::json j = rep.to_json();
    CHECK(j["suite"] == "prop64");
    REQUIRE(j["checks"].is_array());
    CHECK(j["checks"].size() == rep.checks.size());
    for (const auto& c : j["checks"]) {
        CHECK(c.contains("name"));
        CHECK(c.contains("anchor"));
        CHECK(c.contains("params"));
        CHECK(c.contains("pass"));
        CHECK(c.contains("detail"));
    }
}
