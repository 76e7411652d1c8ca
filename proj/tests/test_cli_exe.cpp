#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

struct CmdResult {
    int status = -1;
    std::string out;
};

CmdResult run_cmd(const std::string& cmd) {
    CmdResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, n);
    const int rc = pclose(pipe);
    res.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return res;
}

std::string cli() {
    const char* path = std::getenv("QMASS_CLI");
    REQUIRE_MESSAGE(path != nullptr, "QMASS_CLI must point at the built binary");
    return std::string("\"") + path + "\"";
}

}  // namespace

TEST_CASE("verify: success TSV bytes and exit code") {
    const CmdResult res = run_cmd(cli() + " verify rr1 --order 4");
    CHECK(res.status == 0);
    CHECK(res.out ==
          "n\tlhs\trhs\tequal\n"
          "0\t1\t1\ttrue\n"
          "1\t1\t1\ttrue\n"
          "2\t1\t1\ttrue\n"
          "3\t1\t1\ttrue\n"
          "4\t2\t2\ttrue\n");
}

TEST_CASE("verify: default order is 64") {
    const CmdResult res = run_cmd(cli() + " verify rr2");
    CHECK(res.status == 0);
    CHECK(res.out.find("\n64\t") != std::string::npos);
}

TEST_CASE("verify: mismatch exits 1 and reports the index") {
    const CmdResult res = run_cmd(cli() +
                                  " verify ag --r 1 --i 2 --order 50 --modulus-override 3 "
                                  "--format json 2>/dev/null");
    CHECK(res.status == 1);
    const auto j = nlohmann::json::parse(res.out);
    CHECK(j.at("first_mismatch").get<int>() == 1);
    CHECK(j.at("params").at("modulus").get<int>() == 3);
}

TEST_CASE("verify: usage errors exit 2 with diagnostics on stderr") {
    CHECK(run_cmd(cli() + " verify bogus 2>/dev/null").status == 2);
    CHECK(run_cmd(cli() + " verify ag --r 2 --order 10 2>/dev/null").status == 2);  // missing i
    CHECK(run_cmd(cli() + " verify rr1 --k 3 2>/dev/null").status == 2);  // foreign key
    CHECK(run_cmd(cli() + " verify digits 2>/dev/null").status == 2);

    const CmdResult unknown = run_cmd(cli() + " verify rr1 --frobnicate 2>&1 >/dev/null");
    CHECK(unknown.status == 2);
    CHECK_FALSE(unknown.out.empty());  // usage text present

    const CmdResult top = run_cmd(cli() + " 2>&1 >/dev/null");
    CHECK(top.status == 2);
}

TEST_CASE("partitions subcommand lists reverse-lexicographically") {
    CHECK(run_cmd(cli() + " partitions 4").out == "4\n3,1\n2,2\n2,1,1\n1,1,1,1\n");
    CHECK(run_cmd(cli() + " partitions 4 --max-part 2").out == "2,2\n2,1,1\n1,1,1,1\n");
    CHECK(run_cmd(cli() + " partitions 4 --first-k-equal 2").out == "2,2\n1,1,1,1\n");
    CHECK(run_cmd(cli() + " partitions 0").out == "\n");
    CHECK(run_cmd(cli() + " partitions 4 --max-part -2 2>/dev/null").status == 2);
}

TEST_CASE("aut-order output") {
    const CmdResult res = run_cmd(cli() + " aut-order --p 2 --lambda 1,1");
    CHECK(res.status == 0);
    CHECK(res.out == "group\taut\thol\n4\t6\t24\n");

    const CmdResult json = run_cmd(cli() + " aut-order --p 3 --lambda 2,1 --format json");
    const auto j = nlohmann::json::parse(json.out);
    CHECK(j.at("aut_order").get<std::string>() == "108");
    CHECK(j.at("hol_order").get<std::string>() == "2916");

    CHECK(run_cmd(cli() + " aut-order --p 4 --lambda 1 2>/dev/null").status == 2);
    CHECK(run_cmd(cli() + " aut-order --p 2 --lambda 1,2 2>/dev/null").status == 2);
    CHECK(run_cmd(cli() + " aut-order --p 2 --lambda 1,x 2>/dev/null").status == 2);
}

TEST_CASE("mass-table output") {
    const CmdResult res = run_cmd(cli() + " mass-table --p 2 --max-n 3");
    CHECK(res.status == 0);
    CHECK(res.out ==
          "n\tgroup_order\tmass\n"
          "0\t1\t1\n"
          "1\t2\t1\n"
          "2\t4\t2/3\n"
          "3\t8\t8/21\n");
}

TEST_CASE("digits subcommand") {
    const CmdResult one = run_cmd(cli() + " digits --p 10 --digits 1 2>/dev/null");
    CHECK(one.status == 0);
    CHECK(one.out == "1\n");

    const CmdResult five = run_cmd(cli() + " digits --p 2 --digits 5 2>/dev/null");
    const CmdResult ten = run_cmd(cli() + " digits --p 2 --digits 10 2>/dev/null");
    CHECK(five.out == "3.4627\n");
    CHECK(ten.out.substr(0, 6) == five.out.substr(0, 6));

    CHECK(run_cmd(cli() + " digits --p 2 --digits 1001 2>/dev/null").status == 2);
}

TEST_CASE("batch: order-stable output, any job count, and exit codes") {
    const std::string dir = "cli_batch_tmp";
    std::remove((dir + ".spec").c_str());
    std::ofstream spec(dir + ".spec");
    spec << "rr1 order=16\n"
         << "# a comment\n"
         << "ag r=1 i=2 order=14\n"
         << "hall-num p=2 order=12\n"
         << "digits p=2 digits=4\n"
         << "gen k=1 order=10\n";
    spec.close();

    const CmdResult serial = run_cmd(cli() + " batch " + dir + ".spec --jobs 1");
    const CmdResult parallel = run_cmd(cli() + " batch " + dir + ".spec --jobs 4");
    CHECK(serial.status == 0);
    CHECK(parallel.status == 0);
    CHECK(serial.out == parallel.out);
    CHECK(serial.out.find("# entry 1: rr1 order=16") == 0);
    CHECK(serial.out.find("# entry 5: digits p=2 digits=4") != std::string::npos);

    const CmdResult json = run_cmd(cli() + " batch " + dir + ".spec --format json --jobs 2");
    const auto arr = nlohmann::json::parse(json.out);
    REQUIRE(arr.is_array());
    REQUIRE(arr.size() == 5);
    CHECK(arr[0].at("identity") == "rr1");
    CHECK(arr[3].at("identity") == "digits");

    std::ofstream bad(dir + "_bad.spec");
    bad << "rr1 order=16\nag r=2 order=50\n";
    bad.close();
    const CmdResult err = run_cmd(cli() + " batch " + dir + "_bad.spec 2>&1 >/dev/null");
    CHECK(err.status == 2);
    CHECK(err.out.find("line 2") != std::string::npos);

    std::ofstream mm(dir + "_mm.spec");
    mm << "rr1 order=16\nag r=1 i=2 order=14 modulus-override=3\n";
    mm.close();
    CHECK(run_cmd(cli() + " batch " + dir + "_mm.spec --jobs 2 2>/dev/null").status == 1);

    CHECK(run_cmd(cli() + " batch no_such_file.spec 2>/dev/null").status == 2);

    std::remove((dir + ".spec").c_str());
    std::remove((dir + "_bad.spec").c_str());
    std::remove((dir + "_mm.spec").c_str());
}

TEST_CASE("hall-num TSV fields") {
    const CmdResult res = run_cmd(cli() + " verify hall-num --p 2 --order 20");
    CHECK(res.status == 0);
    CHECK(res.out.find("field\tvalue\n") == 0);
    CHECK(res.out.find("\ngap\t0\n") != std::string::npos);
    CHECK(res.out.find("\nmonotone\ttrue\n") != std::string::npos);
}
