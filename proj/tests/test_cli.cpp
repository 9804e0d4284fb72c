#include <doctest.h>

#include <sys/wait.h>

#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli_app.hpp"
#include "cli_format.hpp"

using namespace tdeig::cli;
using cplx = std::complex<double>;

namespace {

struct Run {
  int rc;
  std::string out;
  std::string err;
  Json doc() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "tdeig");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int rc = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {rc, out.str(), err.str()};
}

cplx as_complex(const Json& j) { return {j["re"].get<double>(), j["im"].get<double>()}; }

int shell_status(const std::string& args) {
  const std::string cmd = std::string(TDEIG_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int st = std::system(cmd.c_str());
  return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

}  // namespace

TEST_CASE("parse_complex grammar") {
  struct Case {
    const char* text;
    cplx value;
  };
  const Case ok[] = {
      {"1.5", {1.5, 0.0}},
      {"-2", {-2.0, 0.0}},
      {"3i", {0.0, 3.0}},
      {"-0.092484+1.9973i", {-0.092484, 1.9973}},
      {"1-2i", {1.0, -2.0}},
      {" 1 + 2i ", {1.0, 2.0}},
      {"1e-3-2.5E1i", {1e-3, -25.0}},
      {"-1e+2+1e-2i", {-100.0, 0.01}},
      {"i", {0.0, 1.0}},
      {"-i", {0.0, -1.0}},
      {"2+i", {2.0, 1.0}},
      {"+4", {4.0, 0.0}},
  };
  for (const auto& c : ok) {
    CAPTURE(c.text);
    const auto z = parse_complex(c.text);
    REQUIRE(z.has_value());
    CHECK(*z == c.value);
  }
  for (const char* bad : {"", "abc", "1+", "1+2", "1+2j", "1++2i", "2i3", "i1"}) {
    CAPTURE(bad);
    CHECK_FALSE(parse_complex(bad).has_value());
  }
}

TEST_CASE("number formatting") {
  CHECK(format_number(0.1) == "0.10000000000000001");
  CHECK(format_number(-1.0) == "-1");
  CHECK(format_number(NAN) == "null");
  Json j = Json::object();
  j["x"] = 1.0 / 3.0;
  j["n"] = 7;
  j["s"] = "a\"b";
  const std::string text = dump(j);
  CHECK(text.find("0.33333333333333331") != std::string::npos);
  CHECK(Json::parse(text)["x"].get<double>() == 1.0 / 3.0);
  CHECK(Json::parse(text)["s"] == "a\"b");
  CHECK(text.back() == '\n');
}

TEST_CASE("wk command") {
  auto r = run({"wk", "--branch", "0", "--re", "-0.36787944117144233"});
  CHECK(r.rc == 0);
  auto d = r.doc();
  CHECK(d["schema_version"] == "1");
  CHECK(d["command"] == "wk");
  CHECK(std::abs(as_complex(d["result"]["w"]) - cplx(-1.0, 0.0)) < 1e-7);

  r = run({"wk", "--branch", "1", "--re", "1", "--im", "0"});
  CHECK(r.rc == 0);
  d = r.doc();
  CHECK(std::abs(as_complex(d["result"]["w"]) - cplx(-1.5339133197935745, 4.3751851530618986)) < 1e-13);
  CHECK(d["result"]["residual"].get<double>() <= 1e-14);

  r = run({"wk", "--branch", "2000", "--re", "1"});
  CHECK(r.rc == kInputError);
  CHECK(r.doc()["error"]["code"] == "BranchOutOfRange");
  CHECK_FALSE(r.err.empty());

  CHECK(run({"wk", "--re", "1"}).rc == kInputError);
  CHECK(run({"wk", "--branch", "0", "--re", "nan"}).rc == kInputError);
  CHECK(run({}).rc == kInputError);
  CHECK(run({"frobnicate"}).rc == kInputError);
  CHECK(run({"--help"}).rc == kOk);
}

TEST_CASE("spectrum command") {
  struct Column {
    std::vector<std::string> args;
    cplx first;
  };
  const Column cols[] = {
      {{"--a", "-1", "--a1d", "-1", "--k", "0", "--k1d", "0"}, {-0.60502091729270661, 1.7881880413836292}},
      {{"--alpha", "-1", "--beta", "-2"}, {-0.092484322291466414, 1.9972826910394639}},
  };
  for (const auto& c : cols) {
    std::vector<std::string> args = {"spectrum", "--h", "1", "--branches", "3"};
    args.insert(args.end(), c.args.begin(), c.args.end());
    const auto r = run(args);
    REQUIRE(r.rc == 0);
    const auto d = r.doc();
    const auto& roots = d["result"]["roots"];
    CHECK(roots.size() == 8u);
    CHECK(std::abs(as_complex(roots[0]["s"]) - std::conj(c.first)) < 1e-12);
    CHECK(std::abs(as_complex(roots[1]["s"]) - c.first) < 1e-12);
    CHECK(std::abs(as_complex(d["result"]["rightmost"]) - c.first) < 1e-12);
    CHECK(d["result"]["stable"] == true);
    CHECK(d["result"]["double_rightmost"] == false);
  }

  auto r = run({"spectrum", "--alpha", "-1.5", "--beta", "0"});
  REQUIRE(r.rc == 0);
  auto d = r.doc();
  CHECK(d["result"]["roots"].size() == 1u);
  CHECK(as_complex(d["result"]["rightmost"]) == cplx(-1.5, 0.0));
  CHECK(d["warnings"].size() == 1u);

  r = run({"spectrum", "--alpha", "1", "--beta", "-1", "--branches", "0"});
  REQUIRE(r.rc == 0);
  d = r.doc();
  CHECK(d["result"]["double_rightmost"] == true);
  CHECK(d["result"]["roots"][0]["multiplicity"] == 2);

  r = run({"spectrum", "--alpha", "-1", "--beta", "-2", "--branches", "1", "--format", "csv"});
  REQUIRE(r.rc == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "branch,re,im,multiplicity,residual");
  int rows = 0;
  while (std::getline(lines, line)) ++rows;
  CHECK(rows == 4);

  CHECK(run({"spectrum", "--alpha", "-1"}).rc == kInputError);
  CHECK(run({"spectrum", "--alpha", "-1", "--beta", "-2", "--a", "0"}).rc == kInputError);
  CHECK(run({"spectrum", "--alpha", "-1", "--beta", "-2", "--h", "0"}).rc == kInputError);
  CHECK(run({"spectrum", "--alpha", "-1", "--beta", "-2", "--format", "xml"}).rc == kInputError);
  CHECK(run({"spectrum", "--alpha", "-1", "--beta", "-2", "--branches", "-1"}).rc == kInputError);
}

TEST_CASE("max branch override from the environment") {
  ::setenv("TDEIG_KMAX", "5", 1);
  CHECK(run({"wk", "--branch", "6", "--re", "1"}).rc == kInputError);
  CHECK(run({"wk", "--branch", "5", "--re", "1"}).rc == kOk);
  ::setenv("TDEIG_KMAX", "five", 1);
  CHECK(run({"wk", "--branch", "0", "--re", "1"}).rc == kInputError);
  ::unsetenv("TDEIG_KMAX");
  CHECK(run({"wk", "--branch", "6", "--re", "1"}).rc == kOk);
}

TEST_CASE("assign command") {
  const std::vector<std::string> plant = {"--a", "1", "--a1d", "-1", "--b", "1", "--h", "1"};
  auto with = [&](std::vector<std::string> extra) {
    std::vector<std::string> args = {"assign"};
    args.insert(args.end(), plant.begin(), plant.end());
    args.insert(args.end(), extra.begin(), extra.end());
    return run(args);
  };

  auto r = with({"--target", "-0.092484+1.9973i"});
  REQUIRE(r.rc == 0);
  auto d = r.doc();
  CHECK(d["result"]["mode"] == "both");
  CHECK(std::abs(d["result"]["gains"]["k"].get<double>() - -2.0) < 1e-4);
  CHECK(std::abs(d["result"]["gains"]["k1d"].get<double>() - -1.0) < 1e-4);
  const auto& conf = d["result"]["confirmation"];
  CHECK(conf["distance_to_target"].get<double>() < 1e-10);
  CHECK(conf["stable"] == true);

  // Same target by parts; conjugate target is normalized.
  auto parts = with({"--target-re", "-0.092484", "--target-im", "-1.9973"});
  REQUIRE(parts.rc == 0);
  CHECK(parts.doc()["result"]["gains"] == d["result"]["gains"]);
  CHECK(parts.doc()["warnings"].size() == 1u);

  r = with({"--target", "-2"});
  REQUIRE(r.rc == 0);
  CHECK(r.doc()["result"]["mode"] == "real-both");

  r = with({"--target", "1+4i"});
  CHECK(r.rc == kInfeasible);
  CHECK(r.doc()["error"]["code"] == "NotAssignableAsRightmost");
  CHECK(r.doc()["error"]["certificate"]["condition"] == "0 < v h < pi");

  r = run({"assign", "--input-delay", "--a", "1", "--b", "1", "--h", "1", "--target", "1+2i"});
  CHECK(r.rc == kInfeasible);
  CHECK(r.doc()["error"]["code"] == "ConditionViolated");

  r = with({"--target", "-1", "--mode", "real-both", "--alpha", "0.5"});
  CHECK(r.rc == kInfeasible);
  CHECK(r.doc()["error"]["code"] == "AlphaOutOfRange");

  r = with({"--target", "-1+1i", "--report"});
  REQUIRE(r.rc == 0);
  CHECK(r.doc()["result"]["feasibility"].size() == 5u);

  CHECK(with({"--target", "1+2j"}).rc == kInputError);
  CHECK(with({}).rc == kInputError);
  CHECK(with({"--target", "1+i", "--target-re", "1"}).rc == kInputError);
  CHECK(with({"--target", "-1+i", "--alpha", "0"}).rc == kInputError);
  CHECK(with({"--target", "-1+i", "--mode", "sideways"}).rc == kInputError);
}

TEST_CASE("verify command") {
  auto r = run({"verify", "--alpha", "1", "--beta", "-1", "--branches", "3"});
  REQUIRE(r.rc == 0);
  auto d = r.doc();
  CHECK(d["result"]["match"] == true);
  CHECK(d["result"]["max_distance"].get<double>() <= 1e-8);
  CHECK(d["result"]["oracle_count"] == d["result"]["expected_count"]);

  r = run({"verify", "--a", "-1", "--a1d", "-1", "--k1d", "-1", "--branches", "2"});
  CHECK(r.rc == 0);

  r = run({"verify", "--alpha", "-1", "--beta", "-2", "--match-tol", "-1"});
  CHECK(r.rc == kMismatch);
  CHECK(r.doc()["error"]["code"] == "MismatchDetected");
}

TEST_CASE("simulate command") {
  const std::string csv = "tdeig_cli_test_trajectory.csv";
  auto r = run({"simulate", "--alpha", "-1", "--beta", "-2", "--out", csv});
  REQUIRE(r.rc == 0);
  auto d = r.doc();
  const cplx est = as_complex(d["result"]["estimate"]["eigenvalue"]);
  const cplx pred = as_complex(d["result"]["predicted"]);
  CHECK(std::abs(pred - cplx(-0.092484322291466414, 1.9972826910394639)) < 1e-12);
  CHECK(std::abs(est - pred) / std::abs(pred) < 1e-2);
  CHECK(d["result"]["deviation"]["relative"].get<double>() < 1e-2);
  {
    std::ifstream f(csv);
    std::string header;
    std::getline(f, header);
    CHECK(header == "t,x");
  }
  std::remove(csv.c_str());

  r = run({"simulate", "--alpha", "-1", "--beta", "0", "--tfinal", "10", "--phi", "linear:1,0"});
  REQUIRE(r.rc == 0);
  CHECK(std::abs(r.doc()["result"]["estimate"]["eigenvalue"]["re"].get<double>() + 1.0) < 1e-3);

  r = run({"simulate", "--alpha", "1", "--beta", "-1", "--tfinal", "10"});
  REQUIRE(r.rc == 0);
  CHECK(r.doc()["result"]["estimate"]["eigenvalue"]["re"].get<double>() == doctest::Approx(0.0).scale(1.0));

  r = run({"simulate", "--alpha", "-1", "--beta", "-2", "--tfinal", "12"});
  REQUIRE(r.rc == 0);
  CHECK(r.doc()["result"]["estimate"].is_null());
  CHECK(r.doc()["warnings"].size() == 1u);

  r = run({"simulate", "--alpha", "20", "--beta", "0", "--tfinal", "40", "--step", "0.01"});
  REQUIRE(r.rc == 0);
  CHECK(r.doc()["result"]["overflow"] == true);

  CHECK(run({"simulate", "--alpha", "-1", "--beta", "-2", "--phi", "cubic:1"}).rc == kInputError);
  CHECK(run({"simulate", "--alpha", "-1", "--beta", "-2", "--phi", "linear:1"}).rc == kInputError);
  CHECK(run({"simulate", "--alpha", "-1", "--beta", "-2", "--tfinal", "0.5"}).rc == kInputError);
  CHECK(run({"simulate", "--alpha", "-1", "--beta", "-2", "--tail", "0"}).rc == kInputError);
}

TEST_CASE("output is deterministic and round-trips") {
  const std::vector<std::string> args = {"spectrum", "--alpha", "0.3", "--beta", "-1.7", "--h", "0.9"};
  const auto a = run(args);
  const auto b = run(args);
  CHECK(a.out == b.out);
  const auto d = a.doc();
  for (const auto& root : d["result"]["roots"]) {
    const cplx s = as_complex(root["s"]);
    CHECK(format_number(s.real()) == dump(Json(s.real())).substr(0, format_number(s.real()).size()));
  }
  // 17 digits recover every double exactly.
  CHECK(Json::parse(dump(d)) == d);
}

TEST_CASE("binary exit codes") {
  CHECK(shell_status("wk --branch 0 --re 1") == 0);
  CHECK(shell_status("--help") == 0);
  CHECK(shell_status("wk --branch 2000 --re 1") == 2);
  CHECK(shell_status("nonsense") == 2);
  CHECK(shell_status("assign --a -1 --a1d -1 --b 1 --h 1 --target 1+4i") == 3);
  CHECK(shell_status("verify --alpha -1 --beta -2 --match-tol -1") == 4);
}
