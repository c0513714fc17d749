#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <set>
#include <string>

#include "sandwich/report.hpp"

using namespace sandwich;
using namespace sandwich::cli;

TEST_CASE("report json round-trips") {
  GlobalOptions opts;
  auto reports = {cmd_count(3, opts),
                  cmd_classify(Family::IS, 3, opts),
                  cmd_classify(Family::T, 3, opts),
                  cmd_witness(Family::IS, 2, "[2,-]", "[-,2]", true, opts),
                  cmd_idempotents_finite(Family::IS, 3, "[2,-,1]", opts),
                  cmd_idempotents_bicyclic("b^2 a^1", 3, opts)};
  for (const auto& r : reports) {
    CHECK(Report::from_json(r.to_json()) == r);
    CHECK(Report::from_json(nlohmann::json::parse(r.render("json"))) == r);
  }
}

TEST_CASE("count report") {
  auto r = cmd_count(3, GlobalOptions{});
  CHECK(r.ok);
  REQUIRE(r.rows.size() == 3);
  CHECK(r.rows[0] == nlohmann::json::array({"1+1+1", "(3,0,0)", 6}));
  CHECK(r.rows[1] == nlohmann::json::array({"2+1", "(1,1,0)", 18}));
  CHECK(r.rows[2] == nlohmann::json::array({"3", "(0,0,1)", 3}));
  CHECK(r.extra["total"] == 27);

  CHECK(r.render_csv() == "partition,type,count\n1+1+1,\"(3,0,0)\",6\n2+1,\"(1,1,0)\",18\n3,\"(0,0,1)\",3\n");

  auto r1 = cmd_count(1, GlobalOptions{});
  CHECK(r1.rows.size() == 1);
  CHECK(r1.extra["total"] == 1);
  auto r4 = cmd_count(4, GlobalOptions{});
  CHECK(r4.extra["total"] == 256);
  CHECK(r4.extra["class_count"] == 5);

  CHECK_THROWS_AS(cmd_count(16, GlobalOptions{}), UsageError);
}

TEST_CASE("classify reports") {
  auto is3 = cmd_classify(Family::IS, 3, GlobalOptions{});
  CHECK(is3.ok);
  CHECK(is3.extra["class_count"] == 4);
  CHECK(is3.rows.size() == 4);

  auto t3 = cmd_classify(Family::T, 3, GlobalOptions{});
  CHECK(t3.ok);
  CHECK(t3.extra["class_count"] == 3);
  std::multiset<std::uint64_t> sizes;
  for (const auto& row : t3.rows) sizes.insert(row[3].get<std::uint64_t>());
  CHECK(sizes == std::multiset<std::uint64_t>{3, 6, 18});

  auto t4 = cmd_classify(Family::T, 4, GlobalOptions{});
  CHECK(t4.extra["class_count"] == 5);
}

TEST_CASE("witness reports") {
  auto pass = cmd_witness(Family::IS, 2, "[2,-]", "[-,2]", false, GlobalOptions{});
  CHECK(pass.ok);
  CHECK(pass.extra["witness"]["tau"] == "[2,1]");
  CHECK(pass.extra["witness"]["pi"] == "[1,2]");

  auto t_pass = cmd_witness(Family::T, 3, "[1,1,2]", "[3,2,2]", true, GlobalOptions{});
  CHECK(t_pass.ok);
  CHECK(t_pass.extra["homomorphism_check"] == "PASS");

  auto fail = cmd_witness(Family::T, 3, "[1,1,2]", "[1,2,3]", false, GlobalOptions{});
  CHECK_FALSE(fail.ok);
  CHECK(fail.extra["error"] == "type mismatch (1,1,0) vs (3,0,0)");

  auto rank_fail = cmd_witness(Family::IS, 3, "[1,-,-]", "[1,2,-]", false, GlobalOptions{});
  CHECK_FALSE(rank_fail.ok);
  CHECK(rank_fail.extra["error"] == "rank mismatch 1 vs 2");
}

TEST_CASE("idempotents reports") {
  auto is_report = cmd_idempotents_finite(Family::IS, 3, "[2,-,1]", GlobalOptions{});
  CHECK(is_report.ok);
  CHECK(is_report.rows.size() == 4);
  CHECK(is_report.extra["formula_count"] == 4);
  CHECK(is_report.extra["brute_force_count"] == 4);

  auto t_report = cmd_idempotents_finite(Family::T, 2, "[1,1]", GlobalOptions{});
  CHECK(t_report.ok);
  CHECK(t_report.rows.size() >= 1);

  auto b_report = cmd_idempotents_bicyclic("b^2 a^1", 3, GlobalOptions{});
  CHECK(b_report.ok);
  REQUIRE(b_report.rows.size() == 3);
  CHECK(b_report.rows[0][0] == "b^1 a^2");
  CHECK(b_report.rows[1][0] == "b^2 a^3");
  CHECK(b_report.rows[2][0] == "b^3 a^4");
}

TEST_CASE("verify reports") {
  GlobalOptions opts;
  auto r = cmd_verify("thm3", VerifyBounds{0, 4, 0, 0}, opts);
  CHECK(r.ok);
  CHECK(r.rows.size() == 1);
  CHECK(r.rows[0][2] == "PASS");
  CHECK(r.meta["grid"] == 4);

  CHECK_THROWS_AS(cmd_verify("thm9", VerifyBounds{}, opts), UsageError);
  CHECK(verify_ids().size() == 10);
}

TEST_CASE("text rendering carries the verdict") {
  auto r = cmd_classify(Family::IS, 3, GlobalOptions{});
  auto text = r.render_text();
  CHECK(text.find("4 classes (expected 4): PASS") != std::string::npos);
  CHECK(text.find("result: PASS") != std::string::npos);
  CHECK_THROWS_AS(r.render("yaml"), UsageError);
}
