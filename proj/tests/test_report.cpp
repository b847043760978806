#include "../tools/report.hpp"
#include "doctest.h"

using namespace crysref::cli;

TEST_CASE("run report json round trip") {
  RunReport r;
  r.command = "braid C_alpha 2";
  r.checks.push_back({"fwd: u1 t1 u1 t1 = t1 u1 t1 u1", Status::Pass, "search", "", std::string("certificate: 1\n")});
  r.checks.push_back({"bwd: s1 s2 s1 s2 = s2 s1 s2 s1", Status::Unknown, "search", "node budget exhausted", std::nullopt});
  r.output = {"2 2 2 2"};
  r.wall_time_s = 0.25;
  r.exit_code = r.status_code();
  CHECK(r.exit_code == 2);

  nlohmann::json j = r;
  CHECK(j.at("schema") == 1);
  CHECK_FALSE(j.at("checks")[1].contains("certificate"));
  auto back = nlohmann::json::parse(j.dump()).get<RunReport>();
  CHECK(back == r);

  j["schema"] = 2;
  CHECK_THROWS(j.get<RunReport>());
}

TEST_CASE("exit code contract") {
  RunReport r;
  CHECK(r.status_code() == 0);
  r.checks.push_back({"a", Status::Pass, "", "", {}});
  CHECK(r.status_code() == 0);
  r.checks.push_back({"b", Status::Unknown, "", "", {}});
  CHECK(r.status_code() == 2);
  r.checks.push_back({"c", Status::Fail, "", "", {}});
  CHECK(r.status_code() == 1);
  CHECK_THROWS(parse_status("maybe"));
}
