#include "doctest.h"

#include <sstream>

#include "hassecount/cli.hpp"
#include "hassecount/curve.hpp"
#include "hassecount/exceptions.hpp"
#include "json.hpp"

using hassecount::cli::run;
using Json = nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

Json json_of(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("json");
  const auto r = invoke(args);
  REQUIRE(r.code == 0);
  return Json::parse(r.out);
}

}  // namespace

TEST_CASE("count") {
  const auto j = json_of({"count", "--q", "7", "--curve", "0,0,0,0,6"});
  CHECK(j["count"] == 4);
  CHECK(j["trace"] == 4);
  CHECK(j["twist_count"] == 12);
  CHECK(j["method"] == "exhaustive");

  const auto po = json_of({"count", "--q", "1013", "--curve", "0,0,0,1,1", "--method", "point_order",
                           "--seed", "1"});
  const auto ex = json_of({"count", "--q", "1013", "--curve", "0,0,0,1,1", "--method", "exhaustive"});
  CHECK(po["count"] == ex["count"]);
  CHECK(po["method"] == "point_order");

  const auto a49 = json_of({"count", "--q", "49", "--curve", "0,0,0,3,0"});
  CHECK(a49["method"] == "exhaustive");

  const auto tsv = invoke({"count", "--q", "7", "--curve", "0,0,0,0,6", "--format", "tsv"});
  CHECK(tsv.code == 0);
  CHECK(tsv.out.rfind("q\tcurve\tcount\t", 0) == 0);
}

TEST_CASE("order, twist and group") {
  const auto o = json_of({"order", "--q", "5", "--curve", "0,0,0,1,0", "--point", "0,0"});
  CHECK(o["order"] == 2);
  CHECK(json_of({"order", "--q", "5", "--curve", "0,0,0,1,0", "--point", "inf"})["order"] == 1);

  const auto t = json_of({"twist", "--q", "5", "--curve", "0,0,0,1,0"});
  CHECK(t["count"] == 4);
  CHECK(t["twist_count"] == 8);

  // Twist of y^2 + y = x^3 + alpha^2 over F_4.
  const auto e4 = hassecount::table1_curve(hassecount::table1_rows()[1]);
  std::string curve;
  for (auto c : e4.quadratic_twist().coefficients()) curve += (curve.empty() ? "" : ",") + std::to_string(c.enc);
  const auto g = json_of({"group", "--q", "4", "--curve", curve});
  CHECK(g["n1"] == 3);
  CHECK(g["n2"] == 3);
}

TEST_CASE("exceptions") {
  const auto tsv = invoke({"exceptions", "--qmax", "1024"});
  REQUIRE(tsv.code == 0);
  CHECK(tsv.out.rfind("q\tM\tN\tt\tt'\n", 0) == 0);
  CHECK(tsv.out.find("# exceptional q: 3 4 5 7 9 11 16 17 23 25 29 49\n") != std::string::npos);
  CHECK(tsv.out.find("49\t6\t8\t14\t-10\n") != std::string::npos);

  const auto j = json_of({"exceptions", "--qmax", "1024", "--corollary", "--reading", "q-1"});
  CHECK(j["exceptional_q"] == Json::array({5, 7, 9, 11, 17, 23, 29}));
  const auto d = json_of({"exceptions", "--qmax", "1024", "--corollary"});
  CHECK(d["exceptional_q"] == Json::array({5, 9, 11, 17, 23, 29}));

  const auto empty = json_of({"exceptions", "--qmax", "2"});
  CHECK(empty["records"].empty());
  CHECK(empty["exceptional_q"].empty());

  // Records round-trip through JSON.
  const auto all = json_of({"exceptions", "--qmax", "1024"});
  const auto want = hassecount::sweep_exceptions(1024, hassecount::ExceptionRule::exponents);
  REQUIRE(all["records"].size() == want.size());
  for (std::size_t i = 0; i < want.size(); ++i) {
    const auto& r = all["records"][i];
    CHECK(r["q"].get<std::uint64_t>() == want[i].q);
    CHECK(r["M"].get<std::int64_t>() == want[i].M);
    CHECK(r["N"].get<std::int64_t>() == want[i].N);
    CHECK(r["t"].get<std::int64_t>() == want[i].t);
    CHECK(r["t_prime"].get<std::int64_t>() == want[i].t_prime);
  }
}

TEST_CASE("table1") {
  const auto r = invoke({"table1"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  int rows = 0, passes = 0;
  std::getline(lines, line);  // header
  while (std::getline(lines, line)) {
    ++rows;
    if (line.find("\tPASS") != std::string::npos) ++passes;
  }
  CHECK(rows == 14);
  CHECK(passes == 14);
  const auto j = json_of({"table1"});
  CHECK(j.size() == 14);
  for (const auto& row : j) CHECK(row["passed"] == true);
}

TEST_CASE("selftest --fast") {
  const auto r = invoke({"selftest", "--fast"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(invoke({"count", "--q", "6", "--curve", "0,0,0,1,1"}).code == 2);
  CHECK(invoke({"count", "--q", "7"}).code == 2);
  CHECK(invoke({"count", "--q", "7", "--curve", "0,0,0,1"}).code == 2);
  CHECK(invoke({"count", "--q", "7", "--curve", "0,0,0,9,1"}).code == 2);
  CHECK(invoke({"count", "--q", "7", "--curve", "0,0,0,1,1", "--method", "fast"}).code == 2);
  CHECK(invoke({"count", "--q", "4", "--poly", "5", "--curve", "0,0,1,0,0"}).code == 2);
  CHECK(invoke({"nonsense"}).code == 2);
  CHECK(invoke({"count", "--q", "5", "--curve", "0,0,0,0,0"}).code == 3);
  CHECK(invoke({"count", "--q", "49", "--curve", "0,0,0,3,0", "--method", "point_order"}).code == 3);
  CHECK(invoke({"order", "--q", "5", "--curve", "0,0,0,1,0", "--point", "1,1"}).code == 3);
  CHECK(invoke({"group", "--q", "65537", "--curve", "0,0,0,1,1"}).code == 3);
  const auto err = invoke({"count", "--q", "5", "--curve", "0,0,0,0,0"});
  CHECK(err.out.empty());
  CHECK_FALSE(err.err.empty());
}

TEST_CASE("version names the generator") {
  const auto r = invoke({"--version"});
  CHECK(r.code == 0);
  CHECK(r.out.find("mt19937_64") != std::string::npos);
}

TEST_CASE("identical invocations give identical bytes") {
  const std::vector<std::vector<std::string>> cases = {
      {"count", "--q", "10007", "--curve", "1,2,3,4,5", "--method", "point_order", "--seed", "9"},
      {"exceptions", "--qmax", "300", "--format", "json"},
      {"table1", "--format", "json"},
  };
  for (const auto& args : cases) {
    const auto a = invoke(args), b = invoke(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}
