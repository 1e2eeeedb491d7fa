#include "support.hpp"

#include "parasl2/matrix.hpp"

using namespace parasl2;
using test::q;

TEST_CASE("zero checks and witnesses") {
  Matrix<Series> m(2, 2, Series(2));
  CHECK(zero_check("x", {}, m).passed);
  m(1, 0)[2] = q(-3, 4);
  const Check c = zero_check("x", {{"j", "1/2"}}, m);
  CHECK_FALSE(c.passed);
  REQUIRE(c.witness.has_value());
  CHECK(c.witness->position == nlohmann::json({{"row", 1}, {"col", 0}, {"theta_degree", 2}}));
  CHECK(c.witness->value == "-3/4");
}

TEST_CASE("report JSON round trip") {
  Report r;
  r.add(zero_check("a", {{"r", 1}}, Series(1)));
  r.add(zero_check("b", {{"r", 2}}, Series({q(0), q(1, 2)})));
  const nlohmann::json doc = r.to_json();
  CHECK(doc["artifact_version"] == artifact_version());
  REQUIRE(doc["checks"].size() == 2);
  CHECK(doc["checks"][0]["status"] == "pass");
  CHECK(doc["checks"][0]["witness"].is_null());
  CHECK(doc["checks"][1]["status"] == "fail");
  CHECK(doc["checks"][1]["witness"]["value"] == "1/2");

  const Report back = Report::from_json(doc);
  CHECK(back.to_json() == doc);
  CHECK(back.failures() == 1);
  CHECK_FALSE(back.all_passed());
  CHECK(back.find("b", {{"r", 2}}) != nullptr);
  CHECK(back.find("b", {{"r", 3}}) == nullptr);
}

TEST_CASE("text rendering") {
  Report r;
  r.add(zero_check("a", {{"j", "1/2"}}, Series(1)));
  r.add(zero_check("b", {}, Series({q(1)})));
  const std::string text = r.to_text();
  CHECK(text.find("PASS a j=1/2") != std::string::npos);
  CHECK(text.find("FAIL b") != std::string::npos);
  CHECK(text.find("witness") != std::string::npos);
}
