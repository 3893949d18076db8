#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

#include "dihedral/report.hpp"
#include "reference_orders.hpp"

using namespace dihedral;

namespace {
  struct Run {
    int         code;
    std::string out;
  };

  // Runs the CLI with stderr discarded; returns its exit code and stdout.
  Run run(std::string const& args) {
    std::string const cmd  = std::string(DIHEDRAL_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE*             pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string             out;
    std::array<char, 4096> buf{};
    while (auto n = std::fread(buf.data(), 1, buf.size(), pipe)) {
      out.append(buf.data(), n);
    }
    int const status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
  }

  nlohmann::json json_of(std::string const& args) {
    auto const r = run(args + " --format json");
    REQUIRE(r.code == 0);
    return nlohmann::json::parse(r.out);
  }
}  // namespace

TEST_CASE("order reports both sides") {
  auto const r15 = json_of("order --m 15");
  REQUIRE(r15.size() == 2);
  CHECK(r15[0]["semigroup"] == "P");
  CHECK(r15[0]["order"] == 75);
  CHECK(r15[1]["semigroup"] == "Lambda");
  CHECK(r15[1]["order"] == 75);
  auto const r36 = json_of("order --m 36");
  CHECK(r36[0]["order"] == 63);
  CHECK(r36[1]["order"] == 90);
  auto const left = json_of("order --m 36 --side left");
  REQUIRE(left.size() == 1);
  CHECK(left[0]["order"] == 90);
  CHECK(json_of("order --m 3 --verify raw")[1]["verified"] == "raw_verified");
}

TEST_CASE("usage errors exit with 1 and print nothing on stdout") {
  for (auto const* args :
       {"order --m 2", "table --from 10 --to 3", "", "bogus", "order",
        "order --m 5 --format xml", "order --m 5 --side up",
        "order --m 200 --verify raw", "table --from 5000 --to 5000 --verify pairs",
        "iso --m 600"}) {
    INFO(args);
    auto const r = run(args);
    CHECK(r.code == 1);
    CHECK(r.out.empty());
  }
}

TEST_CASE("table reproduces the reference orders") {
  auto const r = run("table --from 3 --to 101 --verify pairs --format csv");
  REQUIRE(r.code == 0);
  auto const rows = parse_csv(r.out);
  REQUIRE(rows.size() == testdata::reference_orders.size());
  for (std::size_t k = 0; k < rows.size(); ++k) {
    auto const& ref = testdata::reference_orders[k];
    INFO("m=" << ref.m);
    CHECK(rows[k].m == ref.m);
    CHECK(rows[k].p_order == ref.right);
    CHECK(rows[k].lambda_order == ref.left);
    CHECK(rows[k].verified == VerifyStatus::pairs_verified);
  }
  auto const json = run("table --from 3 --to 101 --verify pairs --format json");
  CHECK(parse_json(json.out) == rows);
}

TEST_CASE("single-row table") {
  auto const rows = parse_csv(run("table --from 3 --to 3 --format csv").out);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].p_order == 6);
  CHECK(rows[0].lambda_order == 9);
}

TEST_CASE("output is deterministic and metadata is optional") {
  for (auto const* args : {"table --from 3 --to 60 --format csv",
                           "table --from 3 --to 60 --format json --meta",
                           "decompose --m 24 --format text", "iso --m 8",
                           "verify-claims --format csv"}) {
    INFO(args);
    CHECK(run(args).out == run(args).out);
  }
  auto const plain = run("table --from 3 --to 30 --format csv").out;
  auto const meta  = run("table --from 3 --to 30 --format csv --meta").out;
  CHECK(plain.rfind("m,", 0) == 0);
  CHECK(meta.rfind("# ", 0) == 0);
  CHECK(parse_csv(plain) == parse_csv(meta));
  auto const doc = json_of("table --from 3 --to 30 --meta");
  CHECK(doc["meta"]["tool"] == "dihedral");
  CHECK(parse_json(doc.dump()) == parse_csv(plain));
}

TEST_CASE("decompose lists containers with a running total") {
  auto const right = run("decompose --m 8 --side right");
  REQUIRE(right.code == 0);
  CHECK(right.out.find("C(0,1): 4") != std::string::npos);
  CHECK(right.out.find("C(6,1): 4") != std::string::npos);
  CHECK(right.out.find("C(4,2): 2") != std::string::npos);
  CHECK(right.out.find("total: 10") != std::string::npos);
  auto const left = json_of("decompose --m 8 --side left");
  REQUIRE(left.size() == 3);
  CHECK(left[1]["container"] == "C(2,1)");
  CHECK(left[2]["running_total"] == 10);
  auto const five = json_of("decompose --m 5 --side right");
  REQUIRE(five.size() == 5);
  for (auto const& part : five) {
    CHECK(part["size"] == 5);
  }
  CHECK(five[4]["running_total"] == 25);
}

TEST_CASE("central series and orbits") {
  auto const series = json_of("central-series --m 16");
  CHECK(series.back()["order"] == 32);
  auto const orbit = json_of("orbit --m 15");
  REQUIRE(orbit.size() == 2);
  CHECK(orbit[0]["x"] == -2);
  CHECK(orbit[0]["period"] == 4);
  auto const unit = json_of("orbit --m 12 --x 3");
  CHECK(unit[0]["order"] == "none");
}

TEST_CASE("claims and isomorphism search") {
  auto const claims = run("verify-claims --format csv");
  CHECK(claims.code == 0);
  CHECK(claims.out.find("FAIL") == std::string::npos);
  CHECK(json_of("iso --m 15")[0]["status"] == "not_isomorphic");
  CHECK(json_of("iso --m 8")[0]["status"] == "isomorphic_with_witness");
  auto const pair = json_of("iso --m 10 --m2 5");
  REQUIRE(pair.size() == 2);
  for (auto const& r : pair) {
    CHECK(r["status"] == "isomorphic_with_witness");
  }
  CHECK(json_of("iso --m 8 --budget 0")[0]["status"] == "budget_exhausted");
}
