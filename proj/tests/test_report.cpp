#include <doctest.h>

#include <string>

#include "dihedral/errors.hpp"
#include "dihedral/report.hpp"
#include "reference_orders.hpp"

using namespace dihedral;

namespace {
  std::vector<TableRow> rows_for(std::int64_t from, std::int64_t to, VerifyLevel level) {
    std::vector<TableRow> rows;
    for (auto m = from; m <= to; ++m) {
      rows.push_back(compute_row(GroupParams(m), level));
    }
    return rows;
  }
}  // namespace

TEST_CASE("rows reproduce the reference table") {
  for (auto const& ref : testdata::reference_orders) {
    auto const row = compute_row(GroupParams(ref.m), VerifyLevel::pairs);
    INFO("m=" << ref.m);
    CHECK(row.p_order == ref.right);
    CHECK(row.lambda_order == ref.left);
    CHECK(row.verified == VerifyStatus::pairs_verified);
  }
}

TEST_CASE("row fields") {
  auto const r8 = compute_row(GroupParams(8), VerifyLevel::none);
  CHECK(r8 == TableRow{8, 10, 10, 3, 3, 1, 1, true, VerifyStatus::formula_only});
  auto const r15 = compute_row(GroupParams(15), VerifyLevel::raw);
  CHECK(r15.p_order == 75);
  CHECK(r15.lambda_order == 75);
  CHECK(r15.per_minus2 == 4);
  CHECK(r15.per_plus2 == 4);
  CHECK_FALSE(r15.iso_gupta);
  CHECK(r15.verified == VerifyStatus::raw_verified);
  auto const r3 = compute_row(GroupParams(3), VerifyLevel::raw);
  CHECK(r3.p_order == 6);
  CHECK(r3.lambda_order == 9);
}

TEST_CASE("verification limits") {
  CHECK_THROWS_AS(compute_row(GroupParams(max_raw_verify_m + 1), VerifyLevel::raw),
                  ParameterError);
  CHECK_NOTHROW(compute_row(GroupParams(max_raw_verify_m + 1), VerifyLevel::pairs));
  CHECK(default_verify_level(3) == VerifyLevel::pairs);
  CHECK(default_verify_level(max_default_pairs_m) == VerifyLevel::pairs);
  CHECK(default_verify_level(max_default_pairs_m + 1) == VerifyLevel::none);
}

TEST_CASE("level and status names round-trip") {
  for (auto l : {VerifyLevel::none, VerifyLevel::pairs, VerifyLevel::raw}) {
    CHECK(parse_verify_level(to_string(l)) == l);
  }
  for (auto s : {VerifyStatus::formula_only, VerifyStatus::pairs_verified,
                 VerifyStatus::raw_verified}) {
    CHECK(parse_verify_status(to_string(s)) == s);
  }
  CHECK_THROWS_AS(parse_verify_level("all"), ParameterError);
  CHECK_THROWS_AS(parse_verify_status("verified"), ParameterError);
}

TEST_CASE("verification error carries the mismatch") {
  VerificationError const e(12, Side::left, "pairs", 30, 31);
  CHECK(e.m == 12);
  CHECK(e.side == Side::left);
  CHECK(e.formula_value == 30);
  CHECK(e.oracle_value == 31);
  CHECK(std::string(e.what()).find("m=12") != std::string::npos);
}

TEST_CASE("CSV and JSON round-trip") {
  auto const rows = rows_for(3, 40, VerifyLevel::none);
  Meta const meta{{"command", "table --from 3 --to 40"}, {"version", "test"}};
  CHECK(parse_csv(format_csv(rows)) == rows);
  CHECK(parse_csv(format_csv(rows, &meta)) == rows);
  CHECK(parse_json(format_json(rows)) == rows);
  CHECK(parse_json(format_json(rows, &meta)) == rows);
  CHECK(format_csv(rows) == format_csv(rows));
  CHECK(format_json(rows) == format_json(rows));
}

TEST_CASE("serialised layout") {
  std::vector<TableRow> const rows{compute_row(GroupParams(8), VerifyLevel::none)};
  CHECK(format_csv(rows)
        == "m,p_order,lambda_order,t_right,t_left,per_minus2,per_plus2,"
           "iso_gupta,verified\n8,10,10,3,3,1,1,true,formula_only\n");
  Meta const meta{{"k", "v"}};
  auto const csv = format_csv(rows, &meta);
  CHECK(csv.rfind("# k: v\n", 0) == 0);
  auto const json = format_json(rows, &meta);
  CHECK(json.find("\"meta\"") != std::string::npos);
  CHECK(json.find("\"rows\"") != std::string::npos);
  CHECK(format_json({}) == "[]\n");
  auto const text = format_text(rows);
  CHECK(text.find("formula_only") != std::string::npos);
}

TEST_CASE("malformed input is rejected") {
  std::string const header
      = "m,p_order,lambda_order,t_right,t_left,per_minus2,per_plus2,iso_gupta,verified\n";
  CHECK_THROWS_AS(parse_csv(""), ParameterError);
  CHECK_THROWS_AS(parse_csv("m,p\n1,2\n"), ParameterError);
  CHECK_THROWS_AS(parse_csv(header + "8,10,10,3,3,1,1,true\n"), ParameterError);
  CHECK_THROWS_AS(parse_csv(header + "8,10,x,3,3,1,1,true,formula_only\n"),
                  ParameterError);
  CHECK_THROWS_AS(parse_csv(header + "8,10,10,3,3,1,1,yes,formula_only\n"),
                  ParameterError);
  CHECK_THROWS_AS(parse_csv(header + "8,10,10,3,3,1,1,true,done\n"), ParameterError);
  CHECK(parse_csv(header).empty());
  CHECK_THROWS_AS(parse_json("{"), ParameterError);
  CHECK_THROWS_AS(parse_json("{\"m\": 3}"), ParameterError);
  CHECK_THROWS_AS(parse_json("[{\"m\": 3}]"), ParameterError);
  CHECK(parse_json("[]").empty());
}
