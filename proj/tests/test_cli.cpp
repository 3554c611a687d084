#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "lsfc/example1.hpp"
#include "lsfc/io.hpp"

using namespace lsfc;

namespace {

struct CliResult {
    int exit_code;
    std::string stdout_text;
};

CliResult run_cli(const std::string& args) {
    std::string out_file = "cli_stdout.tmp";
    std::string cmd = std::string(LSFC_CLI_PATH) + " " + args + " > " + out_file + " 2>/dev/null";
    int rc = std::system(cmd.c_str());
    std::ifstream f(out_file);
    std::stringstream ss;
    ss << f.rdbuf();
    std::remove(out_file.c_str());
    return CliResult{WEXITSTATUS(rc), ss.str()};
}

std::string write_example1_demand() {
    std::string path = "example1_demand.tmp.json";
    DemandFile d{Field::prime(11), example1_demand(Field::prime(11)).matrix};
    std::ofstream f(path);
    f << demand_file_to_json(d).dump(2);
    return path;
}

} // namespace

TEST_CASE("plan command on the reference demand file") {
    std::string demand = write_example1_demand();
    CliResult r = run_cli("plan --k 10 --l 6 --m 3 --delta 3 --field prime:11 --demand " + demand);
    REQUIRE(r.exit_code == 0);
    Json rep = Json::parse(r.stdout_text);
    CHECK(rep["plan"]["rate"] == 12);
    CHECK(rep["plan"]["servers"] == 12);

    // Determinism: same flags, byte-identical output.
    CliResult r2 = run_cli("plan --k 10 --l 6 --m 3 --delta 3 --field prime:11 --demand " + demand);
    CHECK(r2.stdout_text == r.stdout_text);
    std::remove(demand.c_str());
}

TEST_CASE("plan command trivial rational instance") {
    CliResult r = run_cli("plan --k 1 --l 1 --m 1 --delta 1 --field rational --random --seed 7");
    REQUIRE(r.exit_code == 0);
    Json rep = Json::parse(r.stdout_text);
    CHECK(rep["plan"]["rate"] == 1);
}

TEST_CASE("simulate command") {
    CliResult r = run_cli("simulate --k 10 --l 6 --m 3 --delta 3 --field prime:11 "
                          "--random --demand-seed 4 --seed 9");
    REQUIRE(r.exit_code == 0);
    Json rep = Json::parse(r.stdout_text);
    CHECK(rep["simulation"]["exact"] == true);
    CHECK(rep["simulation"]["audit"]["all_pass"] == true);

    CliResult z = run_cli("simulate --k 4 --l 3 --m 2 --delta 2 --field prime:13 "
                          "--random --force-zero-f");
    REQUIRE(z.exit_code == 0);
    Json zrep = Json::parse(z.stdout_text);
    for (const auto& v : zrep["simulation"]["decoded"]) CHECK(v == "0");
}

TEST_CASE("bounds command: single point and monotone sweep") {
    CliResult r = run_cli("bounds --k 10 --l 6 --m 3 --delta 3 --q 11 --format json");
    REQUIRE(r.exit_code == 0);
    Json rows = Json::parse(r.stdout_text);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0]["rate_formula"] == 12);
    CHECK(rows[0]["lb_finite_q"].get<double>() == doctest::Approx(7.2415).epsilon(1e-4));

    CliResult t = run_cli("bounds --k 1 --l 1 --m 1 --delta 1 --q 2 --format json");
    REQUIRE(t.exit_code == 0);
    Json trow = Json::parse(t.stdout_text)[0];
    CHECK(trow["rate_formula"] == 1);
    CHECK(trow["lb_finite_q"].get<double>() == doctest::Approx(1.0));
    CHECK(trow["lb_real"].get<double>() == doctest::Approx(1.0));

    CliResult s = run_cli("bounds --k 10 --l 6 --m 3 --delta 3 --q 2..23 --format json");
    REQUIRE(s.exit_code == 0);
    Json srows = Json::parse(s.stdout_text);
    CHECK(srows.size() == 9); // primes 2..23
    double prev = 0.0;
    for (const auto& row : srows) {
        double lb = row["lb_finite_q"].get<double>();
        CHECK(lb >= prev - 1e-9);
        prev = lb;
    }
}

TEST_CASE("bounds command CSV header") {
    CliResult r = run_cli("bounds --k 2 --l 2 --m 1 --delta 1 --q 2 --format csv");
    REQUIRE(r.exit_code == 0);
    CHECK(r.stdout_text.rfind("k,l,m,delta,q,rate_formula,rate_achieved,", 0) == 0);
}

TEST_CASE("oracle command") {
    std::string path = "oracle_demand.tmp.json";
    {
        std::ofstream f(path);
        f << R"({"field":{"kind":"prime","q":2},"matrix":[[1,0],[0,1]]})";
    }
    CliResult r = run_cli("oracle --k 2 --l 2 --m 1 --delta 1 --field prime:2 --demand " + path +
                          " --rmax 5");
    REQUIRE(r.exit_code == 0);
    Json rep = Json::parse(r.stdout_text);
    CHECK(rep["min_r"] == 2);
    std::remove(path.c_str());

    std::string ones = "oracle_ones.tmp.json";
    {
        std::ofstream f(ones);
        f << R"({"field":{"kind":"prime","q":2},"matrix":[[1,1,1]]})";
    }
    CliResult r2 = run_cli("oracle --k 3 --l 1 --m 2 --delta 1 --field prime:2 --demand " + ones +
                           " --rmax 5");
    REQUIRE(r2.exit_code == 0);
    CHECK(Json::parse(r2.stdout_text)["min_r"] == 2);

    // Budget exceeded: exit 5.
    CliResult r3 = run_cli("oracle --k 3 --l 1 --m 1 --delta 1 --field prime:2 --demand " + ones +
                           " --rmax 2");
    CHECK(r3.exit_code == 5);
    std::remove(ones.c_str());

    CliResult r4 = run_cli("oracle --k 3 --l 2 --m 2 --delta 1 --field prime:2 "
                           "--random --seed 2 --rmax 5 --sandwich");
    REQUIRE(r4.exit_code == 0);
    CHECK(Json::parse(r4.stdout_text)["holds"] == true);
}

TEST_CASE("example1 command") {
    CliResult r = run_cli("example1");
    REQUIRE(r.exit_code == 0);
    Json rep = Json::parse(r.stdout_text);
    CHECK(rep["plan"]["rate"] == 12);
    CHECK(rep["simulation"]["exact"] == true);

    // Field-generic: the same integer matrix over the rationals.
    CliResult rq = run_cli("example1 --field rational");
    REQUIRE(rq.exit_code == 0);
    CHECK(Json::parse(rq.stdout_text)["plan"]["rate"] == 12);

    CliResult again = run_cli("example1");
    CHECK(again.stdout_text == r.stdout_text);
}

TEST_CASE("documented exit codes") {
    CHECK(run_cli("plan --k 10 --l 6").exit_code == 2);               // missing flags
    CHECK(run_cli("plan --k 2 --l 3 --m 5 --delta 1 --field prime:7 --random").exit_code == 2);
    std::string demand = write_example1_demand();
    // 6x10 demand against a 4x4 instance: mismatch.
    CliResult mm = run_cli("plan --k 4 --l 4 --m 2 --delta 2 --field prime:11 --demand " + demand);
    CHECK(mm.exit_code == 3);
    std::remove(demand.c_str());
}
